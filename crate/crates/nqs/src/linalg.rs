//! Dense complex linear-algebra helpers shared by the toolkit modules.
//!
//! Everything here is desk-scale (d <= 64) and favors exact spectral
//! methods over iterative ones: Hermitian matrix functions go through a
//! full eigendecomposition.

use nalgebra::linalg::SymmetricEigen;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Maximum entrywise deviation from Hermiticity, max_ij |m_ij - conj(m_ji)|.
pub fn hermiticity_defect(m: &CMatrix) -> f64 {
    let mut defect = 0.0f64;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            defect = defect.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    defect
}

/// (m + m^dag)/2; suppresses rounding-level anti-Hermitian noise before a
/// spectral decomposition.
pub fn hermitian_part(m: &CMatrix) -> CMatrix {
    (m + m.adjoint()).map(|z| z * 0.5)
}

/// Eigenvalues (ascending) and matching eigenvector columns of a Hermitian
/// matrix. The input is Hermitized first.
pub fn hermitian_eigen(m: &CMatrix) -> (Vec<f64>, CMatrix) {
    let eig = SymmetricEigen::new(hermitian_part(m));
    let n = eig.eigenvalues.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let mut vectors = CMatrix::zeros(n, n);
    for (col, &k) in order.iter().enumerate() {
        vectors.set_column(col, &eig.eigenvectors.column(k));
    }
    (values, vectors)
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn min_eigenvalue(m: &CMatrix) -> f64 {
    let (values, _) = hermitian_eigen(m);
    values[0]
}

/// f(m) = V diag(f(lambda)) V^dag for Hermitian m.
pub fn hermitian_function(m: &CMatrix, f: impl Fn(f64) -> f64) -> CMatrix {
    let (values, vectors) = hermitian_eigen(m);
    let diag = CMatrix::from_diagonal(&CVector::from_iterator(
        values.len(),
        values.iter().map(|&v| Complex64::new(f(v), 0.0)),
    ));
    &vectors * diag * vectors.adjoint()
}

/// Sum of |m_ij| over i != j.
pub fn offdiag_abs_sum(m: &CMatrix) -> f64 {
    let mut sum = 0.0;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            if i != j {
                sum += m[(i, j)].norm();
            }
        }
    }
    sum
}

/// Maximum entrywise |a_ij - b_ij|.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    debug_assert_eq!(a.shape(), b.shape());
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Maximum entrywise distance from the identity.
pub fn identity_defect(m: &CMatrix) -> f64 {
    let id = CMatrix::identity(m.nrows(), m.ncols());
    max_abs_diff(m, &id)
}

/// Squared Frobenius norm.
pub fn frobenius_norm_sq(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum()
}
