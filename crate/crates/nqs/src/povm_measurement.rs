//! Disintegration of states onto the basis elements: the d+1-element
//! measurement family built from dual-basis projectors, the biorthogonal
//! projector set, outcome statistics, and seeded Monte Carlo sampling.
//!
//! The family F_i = |c_i^perp><c_i^perp| (i <= d) plus
//! F_{d+1} = 1 - sum_j F_j is constructed as printed; its last element
//! fails positive semidefiniteness for every nontrivial overlap matrix
//! (its eigenvalues are 1 - 1/lambda_k(G)), so the set carries an explicit
//! validity flag instead of being rejected. The rescaled family
//! {q F_i, 1 - q sum_j F_j} with q <= lambda_min(G) is a proper POVM in
//! the style of unambiguous state discrimination.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::gram_basis::{GramBasis, EPS_LIN};
use crate::linalg::{hermitian_eigen, max_abs_diff, CMatrix, CVector};
use crate::random::rng_from_seed;
use crate::representations::{BiorthogonalRep, ConventionalRep, PureState, EPS_PSD, EPS_TR};

/// The d+1-element measurement family in the ambient frame.
#[derive(Debug, Clone)]
pub struct PovmSet {
    elements: Vec<CMatrix>,
    valid: bool,
    min_eigenvalue_last: f64,
    scale: f64,
}

impl PovmSet {
    /// All d+1 elements; the last is the inconclusive one.
    pub fn elements(&self) -> &[CMatrix] {
        &self.elements
    }

    /// True when every element, including the last, is positive
    /// semidefinite within tolerance.
    pub fn is_valid(&self) -> bool {
        self.valid
    }

    /// Smallest eigenvalue of the inconclusive element.
    pub fn min_eigenvalue_last(&self) -> f64 {
        self.min_eigenvalue_last
    }

    /// The rescaling q applied to the rank-one elements (1 reproduces the
    /// unscaled family).
    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Maximum entrywise deviation of sum_i F_i from the identity.
    pub fn completeness_defect(&self) -> f64 {
        let d = self.elements[0].nrows();
        let sum = self
            .elements
            .iter()
            .fold(CMatrix::zeros(d, d), |acc, f| acc + f);
        max_abs_diff(&sum, &CMatrix::identity(d, d))
    }
}

/// Builds the unscaled (q = 1) measurement family.
pub fn build_povm(basis: &GramBasis) -> Result<PovmSet> {
    build_povm_scaled(basis, 1.0)
}

/// Builds the family {q F_i, 1 - q sum_j F_j}. Any q > 0 is accepted;
/// the result is a valid POVM exactly when q <= lambda_min(G) (within
/// tolerance).
pub fn build_povm_scaled(basis: &GramBasis, scale: f64) -> Result<PovmSet> {
    if scale <= 0.0 || !scale.is_finite() {
        return Err(Error::ParamOutOfRange {
            name: "scale",
            value: scale,
            range: "q > 0",
        });
    }
    let d = basis.dim();
    let embedding = basis.embed()?;
    let duals = embedding.dual_frame(basis);
    let q = Complex64::new(scale, 0.0);
    let mut elements = Vec::with_capacity(d + 1);
    let mut sum = CMatrix::zeros(d, d);
    for i in 0..d {
        let column = duals.column(i);
        let f = (column * column.adjoint()).map(|z| z * q);
        sum += &f;
        elements.push(f);
    }
    let last = CMatrix::identity(d, d) - sum;
    let (eigs, _) = hermitian_eigen(&last);
    let min_eigenvalue_last = eigs[0];
    elements.push(last);
    Ok(PovmSet {
        elements,
        valid: min_eigenvalue_last >= -EPS_PSD,
        min_eigenvalue_last,
        scale,
    })
}

/// Outcome probabilities of the unscaled family: `p_i = rho_ii` for
/// `i <= d` and `p_(d+1) = 1 - tr[rho]`. Values are reported raw; they can leave
/// [0, 1] when the family is not a valid POVM.
pub fn povm_probabilities(rep: &ConventionalRep) -> Vec<f64> {
    scaled_outcome_probabilities(rep, 1.0)
}

/// Outcome probabilities of the rescaled family: `p_i = q rho_ii` and
/// `p_(d+1) = 1 - q tr[rho]`.
pub fn scaled_outcome_probabilities(rep: &ConventionalRep, scale: f64) -> Vec<f64> {
    let d = rep.basis().dim();
    let mut probs: Vec<f64> = (0..d).map(|i| scale * rep.mat()[(i, i)].re).collect();
    probs.push(1.0 - scale * rep.naive_trace().re);
    probs
}

/// True when every entry lies in [0, 1] within `EPS_TR`.
pub fn probabilities_in_range(probs: &[f64]) -> bool {
    probs.iter().all(|&p| (-EPS_TR..=1.0 + EPS_TR).contains(&p))
}

/// The residual left by the inconclusive outcome on a pure state, as the
/// paper writes it: -psi over the dual kets, re-expanded over the
/// original kets as -G^-1 psi. Both coefficient vectors are unnormalized;
/// `norm` carries the physical length sqrt(psi^dag G^-1 psi) of the
/// residual ket.
#[derive(Debug, Clone)]
pub struct ResidualState {
    pub coeff_dual: CVector,
    pub coeff_basis: CVector,
    pub norm: f64,
}

/// Residual (post-inconclusive-outcome) expansion for a pure state.
pub fn residual_pure_state(state: &PureState) -> ResidualState {
    let minus_one = Complex64::new(-1.0, 0.0);
    let coeff_dual = state.amps().map(|z| z * minus_one);
    let dual = state.basis().dual_transform();
    let coeff_basis = &dual * state.amps() * minus_one;
    let norm_sq = (state.amps().adjoint() * &dual * state.amps())[(0, 0)].re;
    ResidualState {
        coeff_dual,
        coeff_basis,
        norm: norm_sq.max(0.0).sqrt(),
    }
}

/// The biorthogonal projector family Pi_i = |c_i><c_i^perp| in the
/// ambient frame.
#[derive(Debug, Clone)]
pub struct ProjectorSet {
    projectors: Vec<CMatrix>,
}

impl ProjectorSet {
    pub fn projectors(&self) -> &[CMatrix] {
        &self.projectors
    }

    /// Max residuals of the three defining relations
    /// (completeness, orthogonal idempotence, basis reproduction).
    pub fn relation_residuals(&self, basis: &GramBasis) -> Result<(f64, f64, f64)> {
        let d = basis.dim();
        let embedding = basis.embed()?;
        let vectors = embedding.vectors();
        let sum = self
            .projectors
            .iter()
            .fold(CMatrix::zeros(d, d), |acc, p| acc + p);
        let completeness = max_abs_diff(&sum, &CMatrix::identity(d, d));

        let mut idempotence = 0.0f64;
        for i in 0..d {
            for j in 0..d {
                let product = &self.projectors[i] * &self.projectors[j];
                let expected = if i == j {
                    self.projectors[i].clone()
                } else {
                    CMatrix::zeros(d, d)
                };
                idempotence = idempotence.max(max_abs_diff(&product, &expected));
            }
        }

        let mut reproduction = 0.0f64;
        for i in 0..d {
            for j in 0..d {
                let image = &self.projectors[i] * vectors.column(j);
                let expected = if i == j {
                    vectors.column(j).clone_owned()
                } else {
                    CVector::zeros(d)
                };
                reproduction = reproduction.max((image - expected).norm());
            }
        }
        Ok((completeness, idempotence, reproduction))
    }
}

/// Builds Pi_i = |c_i><c_i^perp| and verifies the three projector
/// relations at build time.
pub fn projectors(basis: &GramBasis) -> Result<ProjectorSet> {
    let d = basis.dim();
    let embedding = basis.embed()?;
    let vectors = embedding.vectors();
    let duals = embedding.dual_frame(basis);
    let projectors: Vec<CMatrix> = (0..d)
        .map(|i| vectors.column(i) * duals.column(i).adjoint())
        .collect();
    let set = ProjectorSet { projectors };
    let (completeness, idempotence, reproduction) = set.relation_residuals(basis)?;
    for (relation, residual) in [
        ("sum_i Pi_i = 1", completeness),
        ("Pi_i Pi_j = delta_ij Pi_i", idempotence),
        ("Pi_i |c_j> = delta_ij |c_j>", reproduction),
    ] {
        if residual > EPS_LIN {
            return Err(Error::RelationViolated { relation, residual });
        }
    }
    Ok(set)
}

/// Diagonal of the biorthogonal matrix: the outcome distribution of the
/// biorthogonally generalized projective measurement. Complex values are
/// passed through raw; they sum to one.
pub fn pvm_probabilities(rep: &BiorthogonalRep) -> CVector {
    rep.mat().diagonal()
}

/// Multinomial disintegration statistics: samples `n` outcomes from the
/// unscaled family's probabilities with a ChaCha12 generator keyed by
/// `seed`. The same seed reproduces the same counts.
pub fn monte_carlo_disintegrate(rep: &ConventionalRep, n: u64, seed: u64) -> Result<Vec<u64>> {
    let probs = povm_probabilities(rep);
    sample_counts(&probs, n, seed)
}

/// Multinomial sampling from an explicit outcome distribution; entries
/// must lie in [0, 1] within `EPS_TR`.
pub fn sample_counts(probs: &[f64], n: u64, seed: u64) -> Result<Vec<u64>> {
    for (index, &p) in probs.iter().enumerate() {
        if !(-EPS_TR..=1.0 + EPS_TR).contains(&p) || !p.is_finite() {
            return Err(Error::InvalidProbabilities { index, value: p });
        }
    }
    let clamped: Vec<f64> = probs.iter().map(|&p| p.clamp(0.0, 1.0)).collect();
    let total: f64 = clamped.iter().sum();
    let mut rng = rng_from_seed(seed);
    let mut counts = vec![0u64; probs.len()];
    for _ in 0..n {
        let mut u: f64 = rng.random::<f64>() * total;
        let mut chosen = probs.len() - 1;
        for (k, &p) in clamped.iter().enumerate() {
            if u < p {
                chosen = k;
                break;
            }
            u -= p;
        }
        counts[chosen] += 1;
    }
    Ok(counts)
}
