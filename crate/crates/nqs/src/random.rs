//! Seeded random generators for bases, states, and unitaries.
//!
//! All sampling goes through a caller-supplied `Rng`, so a fixed seed
//! reproduces every draw. `rng_from_seed` builds the toolkit's standard
//! generator (ChaCha12).

use nalgebra::linalg::QR;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;

use crate::gram_basis::GramBasis;
use crate::linalg::{CMatrix, CVector};
use crate::representations::{ConventionalRep, PureState};

/// Deterministic generator used throughout the toolkit: ChaCha12 keyed by a
/// 64-bit seed.
pub fn rng_from_seed(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

fn standard_complex(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Matrix with independent standard complex Gaussian entries.
pub fn ginibre(dim: usize, rng: &mut impl Rng) -> CMatrix {
    CMatrix::from_fn(dim, dim, |_, _| standard_complex(rng))
}

/// Haar-random unitary via QR of a Ginibre matrix with the phase gauge
/// fixed by the R diagonal.
pub fn haar_unitary(dim: usize, rng: &mut impl Rng) -> CMatrix {
    let qr = QR::new(ginibre(dim, rng));
    let (q, r) = (qr.q(), qr.r());
    let phases = CVector::from_iterator(
        dim,
        (0..dim).map(|i| {
            let d = r[(i, i)];
            if d.norm() == 0.0 {
                Complex64::new(1.0, 0.0)
            } else {
                d / d.norm()
            }
        }),
    );
    q * CMatrix::from_diagonal(&phases)
}

/// Random valid Gram matrix: overlaps of random unit vectors, mixed toward
/// the identity so the smallest eigenvalue stays at or above
/// `1 - mixing`. `mixing` must lie in [0, 1).
pub fn random_gram(dim: usize, mixing: f64, rng: &mut impl Rng) -> GramBasis {
    assert!((0.0..1.0).contains(&mixing), "mixing must be in [0, 1)");
    let mut columns = ginibre(dim, rng);
    for mut col in columns.column_iter_mut() {
        let norm = col.norm();
        col /= Complex64::new(norm, 0.0);
    }
    let raw = columns.adjoint() * &columns;
    let id = CMatrix::identity(dim, dim);
    let mut gram = id.map(|z| z * (1.0 - mixing)) + raw.map(|z| z * mixing);
    // Unit diagonal holds by construction; pin it exactly against rounding.
    for i in 0..dim {
        gram[(i, i)] = Complex64::new(1.0, 0.0);
    }
    GramBasis::new(gram).expect("mixed Gram matrix is valid by construction")
}

/// Random density matrix from the Hilbert-Schmidt ensemble (A A^dag
/// normalized to unit trace).
pub fn random_density(dim: usize, rng: &mut impl Rng) -> CMatrix {
    let a = ginibre(dim, rng);
    let rho = &a * a.adjoint();
    let trace = rho.trace().re;
    rho.map(|z| z / trace)
}

/// Random valid state over `basis`: a Hilbert-Schmidt density matrix drawn
/// in the Lowdin frame and pulled back to the conventional representation.
pub fn random_conventional(basis: &GramBasis, rng: &mut impl Rng) -> ConventionalRep {
    let lowdin_mat = random_density(basis.dim(), rng);
    let inv_half = basis.lowdin_transform();
    let mat = &inv_half * lowdin_mat * &inv_half;
    ConventionalRep::new(basis.clone(), mat).expect("pullback of a density matrix is valid")
}

/// Random pure state over `basis`, normalized so psi^dag G psi = 1.
pub fn random_pure(basis: &GramBasis, rng: &mut impl Rng) -> PureState {
    let raw = CVector::from_fn(basis.dim(), |_, _| standard_complex(rng));
    PureState::normalized(basis.clone(), raw).expect("random vector has nonzero norm")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{identity_defect, max_abs_diff};

    #[test]
    fn haar_unitary_is_unitary() {
        let mut rng = rng_from_seed(7);
        let u = haar_unitary(4, &mut rng);
        assert!(identity_defect(&(u.adjoint() * &u)) < 1e-12);
    }

    #[test]
    fn seeded_draws_are_reproducible() {
        let a = haar_unitary(3, &mut rng_from_seed(11));
        let b = haar_unitary(3, &mut rng_from_seed(11));
        assert!(max_abs_diff(&a, &b) == 0.0);
    }

    #[test]
    fn random_gram_eigenvalues_bounded_below() {
        let mut rng = rng_from_seed(3);
        for dim in 2..=8 {
            let basis = random_gram(dim, 0.5, &mut rng);
            assert!(basis.eigenvalues()[0] >= 0.5 - 1e-12);
        }
    }

    #[test]
    fn random_density_is_density() {
        let mut rng = rng_from_seed(5);
        let rho = random_density(4, &mut rng);
        assert!((rho.trace().re - 1.0).abs() < 1e-12);
        assert!(crate::linalg::min_eigenvalue(&rho) > -1e-12);
    }
}
