//! Nonorthogonal bases described by their Gram (overlap) matrices, plus the
//! dual-basis, Lowdin, and ambient-embedding transforms.
//!
//! A basis {|c_i>} of normalized, linearly independent states is fully
//! captured by G_ij = <c_i|c_j>: Hermitian, unit diagonal, positive
//! definite. The dual basis {|c_i^perp>} with <c_i^perp|c_j> = delta_ij is
//! reached through G^-1, the Lowdin (closest orthonormal) basis through
//! G^-1/2, and a concrete ambient realization of the kets through the
//! Cholesky factor of G.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{
    hermitian_eigen, hermitian_function, hermiticity_defect, max_abs_diff, CMatrix,
};

/// Hermiticity and unit-diagonal tolerance.
pub const EPS_HERM: f64 = 1e-10;
/// Minimum-eigenvalue threshold for positive definiteness.
pub const EPS_PD: f64 = 1e-10;
/// Residual tolerance for algebraic identities (inverses, square roots,
/// embedding reconstruction).
pub const EPS_LIN: f64 = 1e-9;

/// A validated nonorthogonal basis, represented by its Gram matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct GramBasis {
    dim: usize,
    gram: CMatrix,
}

impl GramBasis {
    /// Validates a Gram matrix and wraps it as a basis description.
    ///
    /// Checks, in order: square shape with d >= 1, Hermiticity, unit
    /// diagonal, positive definiteness, and strict |G_ij| < 1 off the
    /// diagonal.
    pub fn new(gram: CMatrix) -> Result<Self> {
        let (rows, cols) = gram.shape();
        if rows != cols || rows == 0 {
            return Err(Error::InvalidShape { rows, cols });
        }
        let defect = hermiticity_defect(&gram);
        if defect > EPS_HERM {
            return Err(Error::NotHermitian { defect });
        }
        for i in 0..rows {
            if (gram[(i, i)] - Complex64::new(1.0, 0.0)).norm() > EPS_HERM {
                return Err(Error::NotUnitDiagonal {
                    index: i,
                    found: format!("{}", gram[(i, i)]),
                });
            }
        }
        let (eigenvalues, _) = hermitian_eigen(&gram);
        if eigenvalues[0] <= EPS_PD {
            return Err(Error::NotPositiveDefinite {
                min_eigenvalue: eigenvalues[0],
            });
        }
        for i in 0..rows {
            for j in 0..cols {
                if i != j && gram[(i, j)].norm() >= 1.0 {
                    return Err(Error::OverlapOutOfRange {
                        i,
                        j,
                        magnitude: gram[(i, j)].norm(),
                    });
                }
            }
        }
        Ok(Self { dim: rows, gram })
    }

    /// The orthonormal limit: G = identity.
    pub fn identity(dim: usize) -> Self {
        assert!(dim >= 1, "basis dimension must be at least 1");
        Self {
            dim,
            gram: CMatrix::identity(dim, dim),
        }
    }

    /// Two-state basis with overlap <c_1|c_2> = s.
    pub fn two_level(s: Complex64) -> Result<Self> {
        let gram = CMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(1.0, 0.0),
                s,
                s.conj(),
                Complex64::new(1.0, 0.0),
            ],
        );
        Self::new(gram)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gram(&self) -> &CMatrix {
        &self.gram
    }

    /// Overlap S_ij = <c_i|c_j>.
    pub fn overlap(&self, i: usize, j: usize) -> Complex64 {
        self.gram[(i, j)]
    }

    /// Eigenvalues of the Gram matrix, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigen(&self.gram).0
    }

    /// G^-1. Column j holds the expansion coefficients of the dual ket
    /// |c_j^perp> over the original basis {|c_i>}.
    pub fn dual_transform(&self) -> CMatrix {
        let inv = self.power(-1.0);
        debug_assert!(
            max_abs_diff(&(&inv * &self.gram), &CMatrix::identity(self.dim, self.dim)) < EPS_LIN
        );
        inv
    }

    /// G^-1/2, the transform onto the closest orthonormal basis. Hermitian
    /// positive definite by construction.
    pub fn lowdin_transform(&self) -> CMatrix {
        self.power(-0.5)
    }

    /// Hermitian matrix power of G for exponent in {-1, -1/2, 1/2, 1}.
    pub fn gram_power(&self, exponent: f64) -> Result<CMatrix> {
        if exponent == 1.0 || exponent == -1.0 || exponent == 0.5 || exponent == -0.5 {
            Ok(self.power(exponent))
        } else {
            Err(Error::UnsupportedExponent { exponent })
        }
    }

    fn power(&self, exponent: f64) -> CMatrix {
        if exponent == 1.0 {
            return self.gram.clone();
        }
        hermitian_function(&self.gram, |v| v.powf(exponent))
    }

    /// G^1/2, the inverse of the Lowdin transform.
    pub(crate) fn power_half(&self) -> CMatrix {
        self.power(0.5)
    }

    /// Concrete basis vectors in an orthonormal ambient frame: C = L^dag
    /// from the Cholesky factorization G = L L^dag, so C^dag C = G and the
    /// first basis vector lies along the first ambient axis.
    pub fn embed(&self) -> Result<AmbientEmbedding> {
        let chol =
            nalgebra::linalg::Cholesky::new(self.gram.clone()).ok_or(Error::CholeskyFailure)?;
        let vectors = chol.l().adjoint();
        debug_assert!(max_abs_diff(&(vectors.adjoint() * &vectors), &self.gram) < EPS_LIN);
        Ok(AmbientEmbedding { vectors })
    }

    /// For a two-state basis, the expansion
    /// `|c_nu> = S_{mu nu} |c_mu> + (1 - |S_{mu nu}|^2) |c_nu^perp>`.
    /// Returns the two coefficients `(S_{mu nu}, 1 - |S_{mu nu}|^2)`.
    pub fn dual_decompose(&self, nu: usize, mu: usize) -> Result<(Complex64, f64)> {
        if self.dim != 2 {
            return Err(Error::PairBasisOnly { dim: self.dim });
        }
        if nu >= self.dim {
            return Err(Error::IndexOutOfRange {
                index: nu,
                dim: self.dim,
            });
        }
        if mu >= self.dim {
            return Err(Error::IndexOutOfRange {
                index: mu,
                dim: self.dim,
            });
        }
        if nu == mu {
            return Err(Error::SameIndex);
        }
        let overlap = self.gram[(mu, nu)];
        let dual_coeff = 1.0 - overlap.norm_sqr();
        #[cfg(debug_assertions)]
        {
            // Reconstruction check in the ambient frame.
            let embedding = self.embed()?;
            let duals = embedding.dual_frame(self);
            let lhs = embedding.vectors.column(nu).clone_owned();
            let rhs = embedding.vectors.column(mu) * overlap
                + duals.column(nu) * Complex64::new(dual_coeff, 0.0);
            debug_assert!((lhs - rhs).norm() < EPS_LIN);
        }
        Ok((overlap, dual_coeff))
    }
}

/// Basis vectors realized as concrete columns in an orthonormal ambient
/// frame (the Cholesky gauge).
#[derive(Debug, Clone, PartialEq)]
pub struct AmbientEmbedding {
    vectors: CMatrix,
}

impl AmbientEmbedding {
    /// Column i is |c_i> in the ambient frame.
    pub fn vectors(&self) -> &CMatrix {
        &self.vectors
    }

    /// Columns of the dual frame: column j is |c_j^perp> in the ambient
    /// frame, obtained as C G^-1.
    pub fn dual_frame(&self, basis: &GramBasis) -> CMatrix {
        &self.vectors * basis.dual_transform()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::identity_defect;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_gram_is_valid() {
        let basis = GramBasis::identity(2);
        assert_eq!(basis.dim(), 2);
        assert!(identity_defect(basis.gram()) == 0.0);
    }

    #[test]
    fn half_overlap_is_valid() {
        let basis = GramBasis::two_level(c(0.5, 0.0)).unwrap();
        let eigs = basis.eigenvalues();
        assert_relative_eq!(eigs[0], 0.5, max_relative = 1e-12);
        assert_relative_eq!(eigs[1], 1.5, max_relative = 1e-12);
    }

    #[test]
    fn unit_overlap_is_degenerate() {
        let err = GramBasis::two_level(c(1.0, 0.0)).unwrap_err();
        assert!(matches!(err, Error::NotPositiveDefinite { .. }));
    }

    #[test]
    fn non_hermitian_gram_rejected() {
        let gram =
            CMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.5, 0.0), c(0.2, 0.0), c(1.0, 0.0)]);
        assert!(matches!(
            GramBasis::new(gram),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn non_unit_diagonal_rejected() {
        let gram =
            CMatrix::from_row_slice(2, 2, &[c(2.0, 0.0), c(0.5, 0.0), c(0.5, 0.0), c(1.0, 0.0)]);
        assert!(matches!(
            GramBasis::new(gram),
            Err(Error::NotUnitDiagonal { .. })
        ));
    }

    #[test]
    fn non_square_rejected() {
        let gram = CMatrix::from_row_slice(1, 2, &[c(1.0, 0.0), c(0.5, 0.0)]);
        assert!(matches!(
            GramBasis::new(gram),
            Err(Error::InvalidShape { .. })
        ));
    }

    #[test]
    fn dual_transform_identity_limit() {
        let basis = GramBasis::identity(3);
        assert!(identity_defect(&basis.dual_transform()) < 1e-14);
    }

    #[test]
    fn dual_transform_half_overlap_closed_form() {
        // 1/(1-s^2) [[1, -s], [-s, 1]] at s = 0.5.
        let basis = GramBasis::two_level(c(0.5, 0.0)).unwrap();
        let dual = basis.dual_transform();
        assert_relative_eq!(dual[(0, 0)].re, 4.0 / 3.0, max_relative = 1e-12);
        assert_relative_eq!(dual[(0, 1)].re, -2.0 / 3.0, max_relative = 1e-12);
        assert_relative_eq!(dual[(1, 0)].re, -2.0 / 3.0, max_relative = 1e-12);
        assert_relative_eq!(dual[(1, 1)].re, 4.0 / 3.0, max_relative = 1e-12);
    }

    #[test]
    fn lowdin_transform_half_overlap_closed_form() {
        // Eigenbasis (1, +-1)/sqrt(2) with eigenvalues 1.5 and 0.5.
        let basis = GramBasis::two_level(c(0.5, 0.0)).unwrap();
        let lowdin = basis.lowdin_transform();
        let a = (1.5f64.powf(-0.5) + 0.5f64.powf(-0.5)) / 2.0;
        let b = (1.5f64.powf(-0.5) - 0.5f64.powf(-0.5)) / 2.0;
        assert_relative_eq!(lowdin[(0, 0)].re, a, max_relative = 1e-12);
        assert_relative_eq!(lowdin[(0, 1)].re, b, max_relative = 1e-12);
        assert!(lowdin[(0, 1)].im.abs() < 1e-14);
    }

    #[test]
    fn lowdin_squared_matches_dual() {
        let basis = GramBasis::two_level(c(0.3, -0.6)).unwrap();
        let lowdin = basis.lowdin_transform();
        let dual = basis.dual_transform();
        assert!(max_abs_diff(&(&lowdin * &lowdin), &dual) < 1e-10);
    }

    #[test]
    fn lowdin_transform_is_hermitian_and_inverts_half_power() {
        let basis = GramBasis::two_level(c(0.4, 0.3)).unwrap();
        let inv_half = basis.lowdin_transform();
        assert!(crate::linalg::hermiticity_defect(&inv_half) < 1e-10);
        let half = basis.gram_power(0.5).unwrap();
        assert!(identity_defect(&(&half * &inv_half)) < 1e-10);
    }

    #[test]
    fn gram_power_supported_exponents() {
        let basis = GramBasis::two_level(c(0.4, 0.2)).unwrap();
        assert!(max_abs_diff(&basis.gram_power(1.0).unwrap(), basis.gram()) == 0.0);
        let half = basis.gram_power(0.5).unwrap();
        assert!(max_abs_diff(&(&half * &half), basis.gram()) < 1e-10);
        assert!(matches!(
            basis.gram_power(2.0),
            Err(Error::UnsupportedExponent { .. })
        ));
        let id = GramBasis::identity(4);
        assert!(identity_defect(&id.gram_power(-0.5).unwrap()) < 1e-14);
    }

    #[test]
    fn embed_identity_and_half_overlap() {
        let id = GramBasis::identity(2);
        assert!(identity_defect(id.embed().unwrap().vectors()) < 1e-14);

        // Cholesky by hand: columns (1, 0) and (0.5, sqrt(0.75)).
        let basis = GramBasis::two_level(c(0.5, 0.0)).unwrap();
        let emb = basis.embed().unwrap();
        let v = emb.vectors();
        assert_relative_eq!(v[(0, 0)].re, 1.0, max_relative = 1e-12);
        assert!(v[(1, 0)].norm() < 1e-14);
        assert_relative_eq!(v[(0, 1)].re, 0.5, max_relative = 1e-12);
        assert_relative_eq!(v[(1, 1)].re, 0.75f64.sqrt(), max_relative = 1e-12);
    }

    #[test]
    fn dual_decompose_cases() {
        let orthogonal = GramBasis::identity(2);
        let (coeff, dual) = orthogonal.dual_decompose(1, 0).unwrap();
        assert!(coeff.norm() == 0.0);
        assert_relative_eq!(dual, 1.0, max_relative = 1e-15);

        let basis = GramBasis::two_level(c(0.5, 0.0)).unwrap();
        let (coeff, dual) = basis.dual_decompose(1, 0).unwrap();
        assert_relative_eq!(coeff.re, 0.5, max_relative = 1e-15);
        assert_relative_eq!(dual, 0.75, max_relative = 1e-15);

        let imag = GramBasis::two_level(c(0.0, 0.8)).unwrap();
        let (coeff, dual) = imag.dual_decompose(1, 0).unwrap();
        assert_relative_eq!(coeff.im, 0.8, max_relative = 1e-15);
        assert_relative_eq!(dual, 1.0 - 0.64, max_relative = 1e-12);

        assert!(matches!(basis.dual_decompose(0, 0), Err(Error::SameIndex)));
        assert!(matches!(
            basis.dual_decompose(2, 0),
            Err(Error::IndexOutOfRange { .. })
        ));
        let three = GramBasis::identity(3);
        assert!(matches!(
            three.dual_decompose(1, 0),
            Err(Error::PairBasisOnly { .. })
        ));
    }
}
