//! The three matrix representations of a density operator over a
//! nonorthogonal basis, and their interconversions.
//!
//! For a basis with Gram matrix G, the same abstract operator rho_hat is
//! carried by three matrices:
//!
//! * conventional rho, with rho_ij = <c_i^perp|rho_hat|c_j^perp>; Hermitian,
//!   normalized through tr[rho G] = 1;
//! * biorthogonal rho_bar = rho G, with rho_bar_ij = <c_i^perp|rho_hat|c_j>;
//!   trace one but generally non-Hermitian;
//! * Lowdin rho_tilde = G^1/2 rho G^1/2, an ordinary density matrix in the
//!   closest orthonormal basis.
//!
//! Positivity of the underlying operator is tested on the Lowdin
//! conjugation, where positive semidefiniteness is the standard matrix
//! property.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gram_basis::{GramBasis, EPS_HERM};
use crate::linalg::{hermiticity_defect, min_eigenvalue, CMatrix, CVector};

/// Trace-normalization tolerance.
pub const EPS_TR: f64 = 1e-9;
/// Positive-semidefiniteness tolerance (applied after the Lowdin
/// conjugation, which amplifies rounding).
pub const EPS_PSD: f64 = 1e-8;
/// Largest imaginary part tolerated in weight vectors fed to the
/// majorization check.
pub const EPS_IMAG: f64 = 1e-9;
/// Slack used when comparing sorted partial sums.
pub const EPS_PARTIAL_SUM: f64 = 1e-12;

/// Pure superposition state: amplitudes psi over the basis kets with
/// physical norm psi^dag G psi = 1.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    basis: GramBasis,
    amps: CVector,
}

impl PureState {
    /// Wraps an amplitude vector, requiring psi^dag G psi = 1 within
    /// `EPS_TR`.
    pub fn new(basis: GramBasis, amps: CVector) -> Result<Self> {
        if amps.len() != basis.dim() {
            return Err(Error::DimensionMismatch { dim: basis.dim() });
        }
        let norm = physical_norm_sq(&basis, &amps);
        if (norm - Complex64::new(1.0, 0.0)).norm() > EPS_TR {
            return Err(Error::NormViolation {
                found: format!("{norm}"),
            });
        }
        Ok(Self { basis, amps })
    }

    /// Rescales an arbitrary nonzero amplitude vector to unit physical
    /// norm.
    pub fn normalized(basis: GramBasis, amps: CVector) -> Result<Self> {
        if amps.len() != basis.dim() {
            return Err(Error::DimensionMismatch { dim: basis.dim() });
        }
        let norm = physical_norm_sq(&basis, &amps).re;
        if norm <= 0.0 || !norm.is_finite() {
            return Err(Error::NormViolation {
                found: format!("{norm}"),
            });
        }
        let scaled = amps.map(|z| z / Complex64::new(norm.sqrt(), 0.0));
        Ok(Self {
            basis,
            amps: scaled,
        })
    }

    pub fn basis(&self) -> &GramBasis {
        &self.basis
    }

    pub fn amps(&self) -> &CVector {
        &self.amps
    }

    /// Chirgwin-Coulson weights w_i = sum_j psi_j^* psi_i S_ji, the
    /// nonorthogonal analogue of populations. They sum to one but can be
    /// negative or complex; raw values are returned.
    pub fn chirgwin_coulson(&self) -> CVector {
        let gram = self.basis.gram();
        CVector::from_fn(self.amps.len(), |i, _| {
            (0..self.amps.len())
                .map(|j| self.amps[j].conj() * self.amps[i] * gram[(j, i)])
                .sum()
        })
    }
}

fn physical_norm_sq(basis: &GramBasis, amps: &CVector) -> Complex64 {
    (amps.adjoint() * basis.gram() * amps)[(0, 0)]
}

/// Conventional matrix representation rho of a density operator.
#[derive(Debug, Clone, PartialEq)]
pub struct ConventionalRep {
    basis: GramBasis,
    mat: CMatrix,
}

/// Biorthogonal matrix representation rho_bar = rho G.
#[derive(Debug, Clone, PartialEq)]
pub struct BiorthogonalRep {
    basis: GramBasis,
    mat: CMatrix,
}

/// Lowdin matrix representation rho_tilde = G^1/2 rho G^1/2.
#[derive(Debug, Clone, PartialEq)]
pub struct LowdinRep {
    basis: GramBasis,
    mat: CMatrix,
}

impl ConventionalRep {
    /// Validates Hermiticity, tr[mat G] = 1, and positivity of the Lowdin
    /// conjugation G^1/2 mat G^1/2.
    pub fn new(basis: GramBasis, mat: CMatrix) -> Result<Self> {
        if mat.shape() != (basis.dim(), basis.dim()) {
            return Err(Error::DimensionMismatch { dim: basis.dim() });
        }
        let defect = hermiticity_defect(&mat);
        if defect > EPS_HERM {
            return Err(Error::NotHermitian { defect });
        }
        let trace = (&mat * basis.gram()).trace();
        if (trace - Complex64::new(1.0, 0.0)).norm() > EPS_TR {
            return Err(Error::NormViolation {
                found: format!("{trace}"),
            });
        }
        let half = basis.gram_power(0.5)?;
        let conjugated = &half * &mat * &half;
        let min_eig = min_eigenvalue(&conjugated);
        if min_eig < -EPS_PSD {
            return Err(Error::NotPositiveDefinite {
                min_eigenvalue: min_eig,
            });
        }
        Ok(Self { basis, mat })
    }

    /// Wraps a matrix without validating state invariants. Diagnostic
    /// entry point for analyzing unnormalized or nonphysical matrices
    /// (e.g. trace diagnostics, closed-form parameter sweeps).
    pub fn from_matrix_unchecked(basis: GramBasis, mat: CMatrix) -> Self {
        Self { basis, mat }
    }

    /// rho = psi psi^dag for a pure state.
    pub fn from_pure(state: &PureState) -> Self {
        let mat = state.amps() * state.amps().adjoint();
        Self {
            basis: state.basis().clone(),
            mat,
        }
    }

    pub fn basis(&self) -> &GramBasis {
        &self.basis
    }

    pub fn mat(&self) -> &CMatrix {
        &self.mat
    }

    /// rho_bar = rho G.
    pub fn to_biorthogonal(&self) -> BiorthogonalRep {
        BiorthogonalRep {
            basis: self.basis.clone(),
            mat: &self.mat * self.basis.gram(),
        }
    }

    /// rho_tilde = G^1/2 rho G^1/2.
    pub fn to_lowdin(&self) -> LowdinRep {
        let half = self.basis.power_half();
        LowdinRep {
            basis: self.basis.clone(),
            mat: &half * &self.mat * &half,
        }
    }

    /// Physical trace sum_i <c_i^perp|rho_hat|c_i>, evaluated as
    /// tr[mat G]. Equals 1 for physical states.
    pub fn trace_dual(&self) -> Complex64 {
        self.gram_contraction()
    }

    /// tr[rho G], the trace written through the Gram matrix. The same
    /// contraction as `trace_dual`; both names are kept.
    pub fn trace_gram(&self) -> Complex64 {
        self.gram_contraction()
    }

    /// Diagonal sum of the conventional matrix, `tr[rho]`. Generally differs
    /// from 1; it is the total weight recovered when the state is
    /// disintegrated onto the basis states.
    pub fn naive_trace(&self) -> Complex64 {
        self.mat.trace()
    }

    fn gram_contraction(&self) -> Complex64 {
        (&self.mat * self.basis.gram()).trace()
    }
}

impl BiorthogonalRep {
    /// Validates unit trace, Hermiticity of mat G^-1 (the underlying
    /// operator), and positivity of the Lowdin conjugation
    /// G^1/2 mat G^-1/2.
    pub fn new(basis: GramBasis, mat: CMatrix) -> Result<Self> {
        if mat.shape() != (basis.dim(), basis.dim()) {
            return Err(Error::DimensionMismatch { dim: basis.dim() });
        }
        let trace = mat.trace();
        if (trace - Complex64::new(1.0, 0.0)).norm() > EPS_TR {
            return Err(Error::NormViolation {
                found: format!("{trace}"),
            });
        }
        let conventional = &mat * basis.dual_transform();
        let defect = hermiticity_defect(&conventional);
        if defect > EPS_HERM {
            return Err(Error::NotHermitian { defect });
        }
        let half = basis.power_half();
        let inv_half = basis.lowdin_transform();
        let conjugated = &half * &mat * &inv_half;
        let min_eig = min_eigenvalue(&conjugated);
        if min_eig < -EPS_PSD {
            return Err(Error::NotPositiveDefinite {
                min_eigenvalue: min_eig,
            });
        }
        Ok(Self { basis, mat })
    }

    /// Wraps a matrix without validation; see
    /// [`ConventionalRep::from_matrix_unchecked`].
    pub fn from_matrix_unchecked(basis: GramBasis, mat: CMatrix) -> Self {
        Self { basis, mat }
    }

    pub fn basis(&self) -> &GramBasis {
        &self.basis
    }

    pub fn mat(&self) -> &CMatrix {
        &self.mat
    }

    /// rho = rho_bar G^-1.
    pub fn to_conventional(&self) -> ConventionalRep {
        ConventionalRep {
            basis: self.basis.clone(),
            mat: &self.mat * self.basis.dual_transform(),
        }
    }
}

impl LowdinRep {
    /// Validates the ordinary density-matrix conditions: Hermitian,
    /// positive semidefinite, unit trace.
    pub fn new(basis: GramBasis, mat: CMatrix) -> Result<Self> {
        if mat.shape() != (basis.dim(), basis.dim()) {
            return Err(Error::DimensionMismatch { dim: basis.dim() });
        }
        let defect = hermiticity_defect(&mat);
        if defect > EPS_HERM {
            return Err(Error::NotHermitian { defect });
        }
        let trace = mat.trace();
        if (trace - Complex64::new(1.0, 0.0)).norm() > EPS_TR {
            return Err(Error::NormViolation {
                found: format!("{trace}"),
            });
        }
        let min_eig = min_eigenvalue(&mat);
        if min_eig < -EPS_PSD {
            return Err(Error::NotPositiveDefinite {
                min_eigenvalue: min_eig,
            });
        }
        Ok(Self { basis, mat })
    }

    pub fn basis(&self) -> &GramBasis {
        &self.basis
    }

    pub fn mat(&self) -> &CMatrix {
        &self.mat
    }

    /// rho = G^-1/2 rho_tilde G^-1/2.
    pub fn to_conventional(&self) -> ConventionalRep {
        let inv_half = self.basis.lowdin_transform();
        ConventionalRep {
            basis: self.basis.clone(),
            mat: &inv_half * &self.mat * &inv_half,
        }
    }
}

/// Superposition-free mixture of the basis states themselves:
/// rho = diag(probs).
pub fn superposition_free(probs: &[f64], basis: GramBasis) -> Result<ConventionalRep> {
    if probs.len() != basis.dim() {
        return Err(Error::DimensionMismatch { dim: basis.dim() });
    }
    if let Some(&p) = probs.iter().find(|&&p| p < 0.0 || !p.is_finite()) {
        return Err(Error::InvalidDistribution {
            reason: format!("negative or non-finite probability {p}"),
        });
    }
    let total: f64 = probs.iter().sum();
    if (total - 1.0).abs() > EPS_TR {
        return Err(Error::InvalidDistribution {
            reason: format!("probabilities sum to {total}, expected 1"),
        });
    }
    let mat = CMatrix::from_diagonal(&CVector::from_iterator(
        probs.len(),
        probs.iter().map(|&p| Complex64::new(p, 0.0)),
    ));
    Ok(ConventionalRep::from_matrix_unchecked(basis, mat))
}

/// Majorization test: returns true when `w` is majorized by `w_prime`
/// (w ≺ w'), i.e. every sorted-descending partial sum of `w` stays at or
/// below the matching partial sum of `w_prime`.
///
/// Weights must be real up to `EPS_IMAG` and sum to one within `EPS_TR`.
pub fn majorizes(w: &[Complex64], w_prime: &[Complex64]) -> Result<bool> {
    if w.len() != w_prime.len() {
        return Err(Error::LengthMismatch {
            left: w.len(),
            right: w_prime.len(),
        });
    }
    let max_imag = w
        .iter()
        .chain(w_prime.iter())
        .map(|z| z.im.abs())
        .fold(0.0, f64::max);
    if max_imag > EPS_IMAG {
        return Err(Error::ComplexWeights { max_imag });
    }
    let mut left: Vec<f64> = w.iter().map(|z| z.re).collect();
    let mut right: Vec<f64> = w_prime.iter().map(|z| z.re).collect();
    for (name, v) in [("w", &left), ("w'", &right)] {
        let total: f64 = v.iter().sum();
        if (total - 1.0).abs() > EPS_TR {
            return Err(Error::InvalidDistribution {
                reason: format!("{name} sums to {total}, expected 1"),
            });
        }
    }
    left.sort_by(|a, b| b.total_cmp(a));
    right.sort_by(|a, b| b.total_cmp(a));
    let mut partial_left = 0.0;
    let mut partial_right = 0.0;
    for (a, b) in left.iter().zip(right.iter()) {
        partial_left += a;
        partial_right += b;
        if partial_left > partial_right + EPS_PARTIAL_SUM {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::max_abs_diff;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn half_overlap() -> GramBasis {
        GramBasis::two_level(c(0.5, 0.0)).unwrap()
    }

    #[test]
    fn pure_state_norm_enforced() {
        let basis = half_overlap();
        // psi = (1, 1)/sqrt(3): psi^dag G psi = (2 + 2*0.5)/3 = 1.
        let amps = CVector::from_vec(vec![c(1.0, 0.0), c(1.0, 0.0)]) / c(3.0f64.sqrt(), 0.0);
        assert!(PureState::new(basis.clone(), amps).is_ok());

        let bad = CVector::from_vec(vec![c(1.0, 0.0), c(1.0, 0.0)]);
        assert!(matches!(
            PureState::new(basis, bad),
            Err(Error::NormViolation { .. })
        ));
    }

    #[test]
    fn sign_flipped_pure_state_is_valid_with_naive_trace_two() {
        // psi = (1, -1) at s = 0.5: psi^dag G psi = 2 - 2s = 1, yet
        // tr[rho] = 2 while tr[rho G] = 1.
        let basis = half_overlap();
        let amps = CVector::from_vec(vec![c(1.0, 0.0), c(-1.0, 0.0)]);
        let state = PureState::new(basis, amps).unwrap();
        let rep = ConventionalRep::from_pure(&state);
        assert_relative_eq!(rep.naive_trace().re, 2.0, max_relative = 1e-12);
        assert_relative_eq!(rep.trace_dual().re, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn from_pure_orthonormal_limit() {
        let basis = GramBasis::identity(2);
        let amps = CVector::from_vec(vec![c(1.0, 0.0), c(0.0, 0.0)]);
        let rep = ConventionalRep::from_pure(&PureState::new(basis, amps).unwrap());
        assert_relative_eq!(rep.mat()[(0, 0)].re, 1.0, max_relative = 1e-15);
        assert!(rep.mat()[(1, 1)].norm() == 0.0);
    }

    #[test]
    fn from_pure_uniform_amplitudes() {
        let basis = half_overlap();
        let amps = CVector::from_vec(vec![c(1.0, 0.0), c(1.0, 0.0)]) / c(3.0f64.sqrt(), 0.0);
        let rep = ConventionalRep::from_pure(&PureState::new(basis, amps).unwrap());
        for i in 0..2 {
            for j in 0..2 {
                assert_relative_eq!(rep.mat()[(i, j)].re, 1.0 / 3.0, max_relative = 1e-12);
            }
        }
        assert_relative_eq!(rep.trace_gram().re, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn superposition_free_validation() {
        let basis = GramBasis::identity(2);
        let rep = superposition_free(&[1.0, 0.0], basis.clone()).unwrap();
        assert_relative_eq!(rep.mat()[(0, 0)].re, 1.0, max_relative = 1e-15);

        assert!(matches!(
            superposition_free(&[0.7, 0.7], basis.clone()),
            Err(Error::InvalidDistribution { .. })
        ));
        assert!(matches!(
            superposition_free(&[1.2, -0.2], basis),
            Err(Error::InvalidDistribution { .. })
        ));
    }

    #[test]
    fn superposition_free_trace_dual_is_one_for_any_basis() {
        let basis = GramBasis::new(CMatrix::from_row_slice(
            3,
            3,
            &[
                c(1.0, 0.0),
                c(0.3, 0.1),
                c(0.2, 0.0),
                c(0.3, -0.1),
                c(1.0, 0.0),
                c(0.1, -0.2),
                c(0.2, 0.0),
                c(0.1, 0.2),
                c(1.0, 0.0),
            ],
        ))
        .unwrap();
        let rep = superposition_free(&[0.3, 0.3, 0.4], basis).unwrap();
        assert_relative_eq!(rep.trace_dual().re, 1.0, max_relative = 1e-12);
        assert!(rep.trace_dual().im.abs() < 1e-14);
    }

    #[test]
    fn biorthogonal_of_free_state_closed_form() {
        let s = c(0.5, 0.0);
        let basis = GramBasis::two_level(s).unwrap();
        let p = 0.3;
        let rep = superposition_free(&[p, 1.0 - p], basis).unwrap();
        let bio = rep.to_biorthogonal();
        assert_relative_eq!(bio.mat()[(0, 0)].re, p, max_relative = 1e-12);
        assert_relative_eq!(bio.mat()[(0, 1)].re, p * 0.5, max_relative = 1e-12);
        assert_relative_eq!(bio.mat()[(1, 0)].re, (1.0 - p) * 0.5, max_relative = 1e-12);
        assert_relative_eq!(bio.mat()[(1, 1)].re, 1.0 - p, max_relative = 1e-12);
    }

    #[test]
    fn conversion_round_trip() {
        let mut rng = crate::random::rng_from_seed(17);
        let basis = crate::random::random_gram(4, 0.5, &mut rng);
        let rep = crate::random::random_conventional(&basis, &mut rng);

        let back = rep.to_biorthogonal().to_conventional();
        assert!(max_abs_diff(rep.mat(), back.mat()) < 1e-10);

        let back = rep.to_lowdin().to_conventional();
        assert!(max_abs_diff(rep.mat(), back.mat()) < 1e-10);
    }

    #[test]
    fn lowdin_of_orthonormal_basis_is_identity_map() {
        let basis = GramBasis::identity(3);
        let rep = superposition_free(&[0.2, 0.3, 0.5], basis).unwrap();
        let lowdin = rep.to_lowdin();
        assert!(max_abs_diff(rep.mat(), lowdin.mat()) < 1e-14);
    }

    #[test]
    fn lowdin_preserves_purity() {
        let basis = half_overlap();
        let amps = CVector::from_vec(vec![c(1.0, 0.0), c(1.0, 0.0)]) / c(3.0f64.sqrt(), 0.0);
        let rep = ConventionalRep::from_pure(&PureState::new(basis, amps).unwrap());
        let lowdin = rep.to_lowdin();
        let (eigs, _) = crate::linalg::hermitian_eigen(lowdin.mat());
        assert_relative_eq!(eigs[1], 1.0, max_relative = 1e-10);
        assert!(eigs[0].abs() < 1e-10);
        assert_relative_eq!(lowdin.mat().trace().re, 1.0, max_relative = 1e-10);
    }

    #[test]
    fn biorthogonal_validation_accepts_converted_and_rejects_garbage() {
        let mut rng = crate::random::rng_from_seed(23);
        let basis = crate::random::random_gram(3, 0.5, &mut rng);
        let bio = crate::random::random_conventional(&basis, &mut rng).to_biorthogonal();
        assert!(BiorthogonalRep::new(basis.clone(), bio.mat().clone()).is_ok());

        let junk = CMatrix::from_fn(3, 3, |i, j| c((i + 2 * j) as f64, 1.0));
        assert!(BiorthogonalRep::new(basis, junk).is_err());
    }

    #[test]
    fn unnormalized_diagnostic_trace() {
        let basis = half_overlap();
        let mat = CMatrix::identity(2, 2);
        let rep = ConventionalRep::from_matrix_unchecked(basis, mat);
        assert_relative_eq!(rep.trace_dual().re, 2.0, max_relative = 1e-12);
    }

    #[test]
    fn chirgwin_coulson_orthonormal_limit() {
        let basis = GramBasis::identity(2);
        let amps = CVector::from_vec(vec![c(0.6, 0.0), c(0.8, 0.0)]);
        let weights = PureState::new(basis, amps).unwrap().chirgwin_coulson();
        assert_relative_eq!(weights[0].re, 0.36, max_relative = 1e-12);
        assert_relative_eq!(weights[1].re, 0.64, max_relative = 1e-12);
    }

    #[test]
    fn chirgwin_coulson_symmetric_state_is_half_half() {
        for s in [0.0, 0.3, 0.9] {
            let basis = GramBasis::two_level(c(s, 0.0)).unwrap();
            let norm = (2.0 + 2.0 * s).sqrt();
            let amps = CVector::from_vec(vec![c(1.0 / norm, 0.0), c(1.0 / norm, 0.0)]);
            let weights = PureState::new(basis, amps).unwrap().chirgwin_coulson();
            assert_relative_eq!(weights[0].re, 0.5, epsilon = 1e-12);
            assert_relative_eq!(weights[1].re, 0.5, epsilon = 1e-12);
        }
    }

    #[test]
    fn chirgwin_coulson_matches_biorthogonal_diagonal() {
        let mut rng = crate::random::rng_from_seed(31);
        for _ in 0..20 {
            let basis = crate::random::random_gram(5, 0.5, &mut rng);
            let state = crate::random::random_pure(&basis, &mut rng);
            let weights = state.chirgwin_coulson();
            let bio = ConventionalRep::from_pure(&state).to_biorthogonal();
            let mut sum = Complex64::new(0.0, 0.0);
            for i in 0..5 {
                assert!((weights[i] - bio.mat()[(i, i)]).norm() < 1e-12);
                sum += weights[i];
            }
            assert!((sum - c(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn majorization_examples() {
        let half = [c(0.5, 0.0), c(0.5, 0.0)];
        let point = [c(1.0, 0.0), c(0.0, 0.0)];
        assert!(majorizes(&half, &half).unwrap());
        assert!(majorizes(&half, &point).unwrap());
        assert!(!majorizes(&point, &half).unwrap());

        let w = [c(0.6, 0.0), c(0.3, 0.0), c(0.1, 0.0)];
        let w_prime = [c(0.7, 0.0), c(0.2, 0.0), c(0.1, 0.0)];
        assert!(majorizes(&w, &w_prime).unwrap());
        assert!(!majorizes(&w_prime, &w).unwrap());
    }

    #[test]
    fn majorization_rejects_bad_input() {
        let w = [c(0.5, 0.0), c(0.5, 0.0)];
        assert!(matches!(
            majorizes(&w, &[c(1.0, 0.0)]),
            Err(Error::LengthMismatch { .. })
        ));
        let complex = [c(0.5, 0.1), c(0.5, -0.1)];
        assert!(matches!(
            majorizes(&complex, &w),
            Err(Error::ComplexWeights { .. })
        ));
        let unnormalized = [c(0.5, 0.0), c(0.8, 0.0)];
        assert!(matches!(
            majorizes(&unnormalized, &w),
            Err(Error::InvalidDistribution { .. })
        ));
    }
}
