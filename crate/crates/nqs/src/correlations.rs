//! Two-qubit embedding of two-state superposition-free mixtures and the
//! correlation measures evaluated on it.
//!
//! A mixture of |c_1>, |c_2> with real overlap s maps onto the product
//! form p |a1 b1><a1 b1| + (1-p) |a2 b2><a2 b2| with
//! <a1|a2> = <b1|b2> = sqrt(s). Such states are separable by construction
//! (zero negativity) yet carry quantum discord; the geometric discord is
//! evaluated in closed form from the Bloch decomposition with the
//! squared-Frobenius-distance normalization (prefactor 1/4).

use nalgebra::{Matrix2, Matrix3, Matrix4, Vector2, Vector3};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gram_basis::EPS_HERM;
use crate::representations::{EPS_PSD, EPS_TR};

type C2Matrix = Matrix2<Complex64>;
type C4Matrix = Matrix4<Complex64>;

/// Largest s in discord sweeps; the s -> 1 limit degenerates (the two
/// product vectors coincide).
pub const SWEEP_S_MAX: f64 = 0.99;

/// The Pauli triple (sigma_x, sigma_y, sigma_z).
pub fn pauli() -> [C2Matrix; 3] {
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    [
        C2Matrix::new(zero, one, one, zero),
        C2Matrix::new(zero, -i, i, zero),
        C2Matrix::new(one, zero, zero, -one),
    ]
}

/// A validated two-qubit density matrix in the orthonormal product frame.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitState {
    mat: C4Matrix,
}

impl TwoQubitState {
    /// Validates Hermiticity, positive semidefiniteness, and unit trace.
    pub fn new(mat: C4Matrix) -> Result<Self> {
        let defect = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .map(|(i, j)| (mat[(i, j)] - mat[(j, i)].conj()).norm())
            .fold(0.0, f64::max);
        if defect > EPS_HERM {
            return Err(Error::NotHermitian { defect });
        }
        let trace = mat.trace();
        if (trace - Complex64::new(1.0, 0.0)).norm() > EPS_TR {
            return Err(Error::NormViolation {
                found: format!("{trace}"),
            });
        }
        let min_eig = hermitian_eigenvalues(&mat)[0];
        if min_eig < -EPS_PSD {
            return Err(Error::NotPositiveDefinite {
                min_eigenvalue: min_eig,
            });
        }
        Ok(Self { mat })
    }

    pub fn mat(&self) -> &C4Matrix {
        &self.mat
    }

    /// Reduced state of subsystem A (partial trace over B).
    pub fn reduced_a(&self) -> C2Matrix {
        C2Matrix::from_fn(|i, j| self.mat[(2 * i, 2 * j)] + self.mat[(2 * i + 1, 2 * j + 1)])
    }

    /// Reduced state of subsystem B (partial trace over A).
    pub fn reduced_b(&self) -> C2Matrix {
        C2Matrix::from_fn(|a, b| self.mat[(a, b)] + self.mat[(2 + a, 2 + b)])
    }

    /// Conjugation by a local product unitary U_A (x) U_B.
    pub fn local_conjugate(&self, u_a: &C2Matrix, u_b: &C2Matrix) -> Self {
        let u = u_a.kronecker(u_b);
        Self {
            mat: u * self.mat * u.adjoint(),
        }
    }
}

/// Ascending eigenvalues of a Hermitian 4x4 matrix.
fn hermitian_eigenvalues(mat: &C4Matrix) -> [f64; 4] {
    let herm = (mat + mat.adjoint()).map(|z| z * 0.5);
    let eig = nalgebra::linalg::SymmetricEigen::new(herm);
    let mut values = [0.0f64; 4];
    for (slot, v) in values.iter_mut().zip(eig.eigenvalues.iter()) {
        *slot = *v;
    }
    values.sort_by(f64::total_cmp);
    values
}

/// Embeds the two-state superposition-free mixture with weight p and
/// overlap s into the two-qubit product frame:
/// |a1> = |b1> = (1, 0), |a2> = |b2> = (sqrt(s), sqrt(1-s)).
pub fn qq_embed(p: f64, s: f64) -> Result<TwoQubitState> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ParamOutOfRange {
            name: "p",
            value: p,
            range: "[0, 1]",
        });
    }
    if !(0.0..1.0).contains(&s) {
        return Err(Error::ParamOutOfRange {
            name: "s",
            value: s,
            range: "[0, 1)",
        });
    }
    let a1 = Vector2::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
    let a2 = Vector2::new(
        Complex64::new(s.sqrt(), 0.0),
        Complex64::new((1.0 - s).sqrt(), 0.0),
    );
    let v1 = a1.kronecker(&a1);
    let v2 = a2.kronecker(&a2);
    let mat = (v1 * v1.adjoint()).map(|z| z * p) + (v2 * v2.adjoint()).map(|z| z * (1.0 - p));
    Ok(TwoQubitState { mat })
}

/// The standard two-qubit Bloch parameterization: local vectors x (for A)
/// and y (for B) plus the 3x3 correlation matrix T.
#[derive(Debug, Clone, PartialEq)]
pub struct BlochDecomposition {
    pub x: Vector3<f64>,
    pub y: Vector3<f64>,
    pub t: Matrix3<f64>,
}

impl BlochDecomposition {
    /// Rebuilds the density matrix
    /// (1/4)(1 + x.sigma (x) 1 + 1 (x) y.sigma + sum T_kl sigma_k (x) sigma_l).
    pub fn reconstruct(&self) -> C4Matrix {
        let sigma = pauli();
        let id = C2Matrix::identity();
        let mut mat = id.kronecker(&id);
        for k in 0..3 {
            mat += (sigma[k].kronecker(&id)).map(|z| z * self.x[k]);
            mat += (id.kronecker(&sigma[k])).map(|z| z * self.y[k]);
            for l in 0..3 {
                mat += (sigma[k].kronecker(&sigma[l])).map(|z| z * self.t[(k, l)]);
            }
        }
        mat.map(|z| z * 0.25)
    }
}

/// Bloch decomposition via Pauli traces: x_k = tr[rho (sigma_k (x) 1)],
/// y_k = tr[rho (1 (x) sigma_k)], T_kl = tr[rho (sigma_k (x) sigma_l)].
pub fn bloch_decompose(state: &TwoQubitState) -> BlochDecomposition {
    let sigma = pauli();
    let id = C2Matrix::identity();
    let mut x = Vector3::zeros();
    let mut y = Vector3::zeros();
    let mut t = Matrix3::zeros();
    for k in 0..3 {
        x[k] = (sigma[k].kronecker(&id) * state.mat).trace().re;
        y[k] = (id.kronecker(&sigma[k]) * state.mat).trace().re;
        for l in 0..3 {
            t[(k, l)] = (sigma[k].kronecker(&sigma[l]) * state.mat).trace().re;
        }
    }
    BlochDecomposition { x, y, t }
}

/// Geometric discord with measurements on subsystem A:
/// D_A = (|x|^2 + |T|_F^2 - k_max)/4 with k_max the largest eigenvalue of
/// x x^T + T T^T.
pub fn geometric_discord_a(state: &TwoQubitState) -> f64 {
    let bloch = bloch_decompose(state);
    discord_from_parts(&bloch.x, &bloch.t)
}

/// Geometric discord with measurements on subsystem B (x -> y, T -> T^T).
pub fn geometric_discord_b(state: &TwoQubitState) -> f64 {
    let bloch = bloch_decompose(state);
    discord_from_parts(&bloch.y, &bloch.t.transpose())
}

fn discord_from_parts(local: &Vector3<f64>, correlation: &Matrix3<f64>) -> f64 {
    let outer = local * local.transpose() + correlation * correlation.transpose();
    let eig = nalgebra::linalg::SymmetricEigen::new(outer);
    let k_max = eig
        .eigenvalues
        .iter()
        .fold(f64::NEG_INFINITY, |a, &b| a.max(b));
    let value = (local.norm_squared() + correlation.norm_squared() - k_max) / 4.0;
    value.max(0.0)
}

/// Negativity: the total weight of negative eigenvalues of the partial
/// transpose over subsystem B. Zero exactly on separable states; 1/2 on a
/// maximally entangled pair.
pub fn negativity(state: &TwoQubitState) -> f64 {
    let mut pt = C4Matrix::zeros();
    for i in 0..2 {
        for j in 0..2 {
            for a in 0..2 {
                for b in 0..2 {
                    pt[(2 * i + a, 2 * j + b)] = state.mat[(2 * i + b, 2 * j + a)];
                }
            }
        }
    }
    let total: f64 = hermitian_eigenvalues(&pt)
        .iter()
        .filter(|&&v| v < 0.0)
        .map(|v| -v)
        .sum();
    total.max(0.0)
}

/// One row of the discord sweep grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub p: f64,
    pub s: f64,
    pub discord_a: f64,
    pub discord_b: f64,
    pub negativity: f64,
}

/// The uniform sweep grid over p in [0, 1] and s in [0, SWEEP_S_MAX],
/// row-major in (p, s). Both step counts must be at least 2.
pub fn sweep_grid(p_steps: usize, s_steps: usize) -> Result<Vec<(f64, f64)>> {
    for (name, steps) in [("p_steps", p_steps), ("s_steps", s_steps)] {
        if steps < 2 {
            return Err(Error::ParamOutOfRange {
                name,
                value: steps as f64,
                range: "at least 2",
            });
        }
    }
    let mut grid = Vec::with_capacity(p_steps * s_steps);
    for ip in 0..p_steps {
        let p = ip as f64 / (p_steps - 1) as f64;
        for is in 0..s_steps {
            let s = SWEEP_S_MAX * is as f64 / (s_steps - 1) as f64;
            grid.push((p, s));
        }
    }
    Ok(grid)
}

/// All three correlation measures at one grid point.
pub fn sweep_point(p: f64, s: f64) -> Result<SweepPoint> {
    let state = qq_embed(p, s)?;
    Ok(SweepPoint {
        p,
        s,
        discord_a: geometric_discord_a(&state),
        discord_b: geometric_discord_b(&state),
        negativity: negativity(&state),
    })
}

/// Full discord/negativity table over the uniform grid.
pub fn sweep_discord(p_steps: usize, s_steps: usize) -> Result<Vec<SweepPoint>> {
    sweep_grid(p_steps, s_steps)?
        .into_iter()
        .map(|(p, s)| sweep_point(p, s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn bell_state() -> TwoQubitState {
        let h = c(0.5, 0.0);
        let z = c(0.0, 0.0);
        let mat = C4Matrix::new(
            h, z, z, h, //
            z, z, z, z, //
            z, z, z, z, //
            h, z, z, h,
        );
        TwoQubitState::new(mat).unwrap()
    }

    #[test]
    fn embed_orthogonal_limit_is_classical() {
        let state = qq_embed(0.3, 0.0).unwrap();
        assert_relative_eq!(state.mat()[(0, 0)].re, 0.3, max_relative = 1e-12);
        assert_relative_eq!(state.mat()[(3, 3)].re, 0.7, max_relative = 1e-12);
        assert!(state.mat()[(0, 3)].norm() < 1e-15);
    }

    #[test]
    fn embed_overlap_matches_global_overlap() {
        // <a1 b1|a2 b2> = (<a1|a2>)^2 = s.
        let s = 0.5;
        let state = qq_embed(0.5, s).unwrap();
        assert_relative_eq!(state.mat().trace().re, 1.0, max_relative = 1e-12);
        let v1 = Vector2::new(c(1.0, 0.0), c(0.0, 0.0));
        let a2 = Vector2::new(c(s.sqrt(), 0.0), c((1.0 - s).sqrt(), 0.0));
        let overlap = (v1.kronecker(&v1).adjoint() * a2.kronecker(&a2))[(0, 0)];
        assert_relative_eq!(overlap.re, s, max_relative = 1e-12);
    }

    #[test]
    fn embed_rejects_bad_parameters() {
        assert!(matches!(
            qq_embed(1.2, 0.5),
            Err(Error::ParamOutOfRange { .. })
        ));
        assert!(matches!(
            qq_embed(0.5, 1.0),
            Err(Error::ParamOutOfRange { .. })
        ));
    }

    #[test]
    fn bloch_of_maximally_mixed_vanishes() {
        let state = TwoQubitState::new(C4Matrix::identity().map(|z| z * 0.25)).unwrap();
        let bloch = bloch_decompose(&state);
        assert!(bloch.x.norm() < 1e-14);
        assert!(bloch.y.norm() < 1e-14);
        assert!(bloch.t.norm() < 1e-14);
    }

    #[test]
    fn bloch_of_ground_product_state() {
        let mut mat = C4Matrix::zeros();
        mat[(0, 0)] = c(1.0, 0.0);
        let state = TwoQubitState::new(mat).unwrap();
        let bloch = bloch_decompose(&state);
        assert_relative_eq!(bloch.x[2], 1.0, max_relative = 1e-12);
        assert_relative_eq!(bloch.y[2], 1.0, max_relative = 1e-12);
        assert_relative_eq!(bloch.t[(2, 2)], 1.0, max_relative = 1e-12);
        assert!(bloch.x[0].abs() + bloch.x[1].abs() < 1e-14);
    }

    #[test]
    fn bloch_reconstruction_round_trips() {
        let state = qq_embed(0.4, 0.6).unwrap();
        let rebuilt = bloch_decompose(&state).reconstruct();
        let defect = (rebuilt - state.mat())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        assert!(defect < 1e-12);
    }

    #[test]
    fn discord_zero_on_product_and_classical_states() {
        for p in [0.0, 0.3, 1.0] {
            let state = qq_embed(p, 0.0).unwrap();
            assert!(geometric_discord_a(&state) < 1e-10);
            assert!(geometric_discord_b(&state) < 1e-10);
        }
        for s in [0.2, 0.7] {
            for p in [0.0, 1.0] {
                let state = qq_embed(p, s).unwrap();
                assert!(geometric_discord_a(&state) < 1e-10);
            }
        }
    }

    #[test]
    fn discord_at_center_matches_hand_value() {
        // p = s = 0.5: x = (0.5, 0, 0.5), T = diag(0.5, 0, 0.5),
        // k_max = 0.75, D = (0.5 + 0.5 - 0.75)/4 = 0.0625.
        let state = qq_embed(0.5, 0.5).unwrap();
        assert_relative_eq!(geometric_discord_a(&state), 0.0625, max_relative = 1e-10);
        assert_relative_eq!(geometric_discord_b(&state), 0.0625, max_relative = 1e-10);
    }

    #[test]
    fn discord_b_equals_discord_a_after_swap() {
        let swap = {
            let mut m = C4Matrix::zeros();
            let one = c(1.0, 0.0);
            m[(0, 0)] = one;
            m[(1, 2)] = one;
            m[(2, 1)] = one;
            m[(3, 3)] = one;
            m
        };
        let mut rng = crate::random::rng_from_seed(61);
        let raw = crate::random::random_density(4, &mut rng);
        let mat = C4Matrix::from_fn(|i, j| raw[(i, j)]);
        let state = TwoQubitState::new(mat).unwrap();
        let swapped = TwoQubitState::new(swap * state.mat() * swap.adjoint()).unwrap();
        assert_relative_eq!(
            geometric_discord_b(&state),
            geometric_discord_a(&swapped),
            epsilon = 1e-10
        );
    }

    #[test]
    fn negativity_anchors() {
        assert_relative_eq!(negativity(&bell_state()), 0.5, max_relative = 1e-12);
        let product = qq_embed(1.0, 0.7).unwrap();
        assert!(negativity(&product) < 1e-12);
        let embedded = qq_embed(0.5, 0.5).unwrap();
        assert!(negativity(&embedded) < 1e-9);
    }

    #[test]
    fn sweep_grid_shape_and_boundaries() {
        let rows = sweep_discord(3, 4).unwrap();
        assert_eq!(rows.len(), 12);
        assert_relative_eq!(rows[0].p, 0.0);
        assert_relative_eq!(rows[11].p, 1.0);
        assert_relative_eq!(rows[3].s, SWEEP_S_MAX, max_relative = 1e-12);
        for row in &rows {
            if row.p == 0.0 || row.p == 1.0 || row.s == 0.0 {
                assert!(row.discord_a < 1e-10);
            }
            assert!(row.negativity < 1e-9);
        }
        assert!(matches!(
            sweep_discord(1, 4),
            Err(Error::ParamOutOfRange { .. })
        ));
    }
}
