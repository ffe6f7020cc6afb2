//! The l1 measure family for superposition over a nonorthogonal basis.
//!
//! Three quantities attach to one state:
//!
//! * inter-basis superposition: the l1 norm of the conventional matrix's
//!   off-diagonals (the quantity that vanishes on superposition-free
//!   mixtures);
//! * intra-basis superposition: the l1 norm of the off-diagonals of
//!   Lambda(rho) G, the part carried by the overlaps themselves;
//! * genuine superposition: the l1 norm of the biorthogonal matrix's
//!   off-diagonals, the total nonclassicality with respect to the basis.
//!
//! Genuine superposition is generally not the sum of the other two; the
//! two-level closed forms below make the gap explicit.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gram_basis::GramBasis;
use crate::linalg::{offdiag_abs_sum, CMatrix};
use crate::representations::{BiorthogonalRep, ConventionalRep};

/// Clipping threshold for rounding artifacts in absolute-value sums.
pub const EPS_MEAS: f64 = 1e-12;

/// The l1 measures of one state. `additivity_gap` is
/// `l1_inter + l1_intra - l1_genuine`; it is zero exactly when the
/// inter- and intra-basis parts add up, and positive when they interfere
/// destructively in the genuine total.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasureReport {
    pub l1_inter: f64,
    pub l1_intra: f64,
    pub l1_genuine: f64,
    pub additivity_gap: f64,
}

impl MeasureReport {
    fn from_measures(l1_inter: f64, l1_intra: f64, l1_genuine: f64) -> Self {
        let l1_inter = clip_rounding(l1_inter);
        let l1_intra = clip_rounding(l1_intra);
        let l1_genuine = clip_rounding(l1_genuine);
        Self {
            l1_inter,
            l1_intra,
            l1_genuine,
            additivity_gap: l1_inter + l1_intra - l1_genuine,
        }
    }
}

fn clip_rounding(value: f64) -> f64 {
    if value < 0.0 && value > -EPS_MEAS {
        0.0
    } else {
        value
    }
}

/// The dephasing map Lambda: keeps the diagonal of the conventional
/// matrix, zeroes everything else. The result is returned raw (it is not
/// in general a normalized state over the same basis).
pub fn dephase(rep: &ConventionalRep) -> CMatrix {
    CMatrix::from_diagonal(&rep.mat().diagonal())
}

/// Inter-basis superposition: sum_{i != j} |rho_ij|.
pub fn l1_inter(rep: &ConventionalRep) -> f64 {
    clip_rounding(offdiag_abs_sum(rep.mat()))
}

/// Intra-basis superposition: the l1 norm of the off-diagonals of
/// Lambda(rho) G. For superposition-free states this is the
/// overlap-weighted sum sum_{i != j} p_i |G_ij|.
pub fn l1_intra(rep: &ConventionalRep) -> f64 {
    let pinched = dephase(rep) * rep.basis().gram();
    clip_rounding(offdiag_abs_sum(&pinched))
}

/// Genuine quantum superposition: sum_{i != j} |rho_bar_ij| over the
/// biorthogonal matrix.
pub fn l1_genuine(rep: &BiorthogonalRep) -> f64 {
    clip_rounding(offdiag_abs_sum(rep.mat()))
}

/// All three measures plus the additivity gap for one state.
pub fn measure_report(rep: &ConventionalRep) -> MeasureReport {
    MeasureReport::from_measures(
        l1_inter(rep),
        l1_intra(rep),
        l1_genuine(&rep.to_biorthogonal()),
    )
}

/// The three off-diagonal contributions to the biorthogonal matrix:
/// T1_ij = rho_ij, T2_ij = rho_ii G_ij, and the cross term
/// T3_ij = sum_{k not in {i,j}} rho_ik G_kj, each with zero diagonal.
/// Their sum reproduces the off-diagonals of rho G exactly.
pub fn decomposition_terms(rep: &ConventionalRep) -> (CMatrix, CMatrix, CMatrix) {
    let d = rep.basis().dim();
    let mat = rep.mat();
    let gram = rep.basis().gram();
    let mut t1 = CMatrix::zeros(d, d);
    let mut t2 = CMatrix::zeros(d, d);
    let mut t3 = CMatrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            if i == j {
                continue;
            }
            t1[(i, j)] = mat[(i, j)];
            t2[(i, j)] = mat[(i, i)] * gram[(i, j)];
            t3[(i, j)] = (0..d)
                .filter(|&k| k != i && k != j)
                .map(|k| mat[(i, k)] * gram[(k, j)])
                .sum();
        }
    }
    (t1, t2, t3)
}

/// The two-level family
/// `rho = N (p |c1><c1| + (1-p) |c2><c2| + lambda |c1><c2| + lambda^* |c2><c1|)`
/// with `<c1|c2> = s` and `N = 1/(1 + lambda s^* + s lambda^*)`, built as
/// a conventional matrix over the two-state basis.
///
/// The matrix is exposed unchecked: the family covers nonphysical
/// parameter corners (e.g. p = 0 with lambda != 0) on which the measure
/// algebra is still well defined.
pub fn two_level_state(
    p: f64,
    s: Complex64,
    lambda: Complex64,
) -> Result<(GramBasis, ConventionalRep)> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ParamOutOfRange {
            name: "p",
            value: p,
            range: "[0, 1]",
        });
    }
    if s.norm() >= 1.0 {
        return Err(Error::ParamOutOfRange {
            name: "s",
            value: s.norm(),
            range: "|s| < 1",
        });
    }
    let normalizer = two_level_normalizer(s, lambda)?;
    let basis = GramBasis::two_level(s)?;
    let n = Complex64::new(normalizer, 0.0);
    let mat = CMatrix::from_row_slice(2, 2, &[n * p, n * lambda, n * lambda.conj(), n * (1.0 - p)]);
    Ok((
        basis.clone(),
        ConventionalRep::from_matrix_unchecked(basis, mat),
    ))
}

fn two_level_normalizer(s: Complex64, lambda: Complex64) -> Result<f64> {
    let denom = 1.0 + (lambda * s.conj() + s * lambda.conj()).re;
    if denom <= 0.0 {
        return Err(Error::NotNormalizable { value: denom });
    }
    Ok(1.0 / denom)
}

/// Closed-form l1 measures of the two-level family:
/// l1_inter = 2 N |lambda|, l1_intra = N |s|,
/// l1_genuine = N (|p s + lambda| + |(1-p) s + lambda|).
pub fn two_level_closed_form(p: f64, s: Complex64, lambda: Complex64) -> Result<MeasureReport> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ParamOutOfRange {
            name: "p",
            value: p,
            range: "[0, 1]",
        });
    }
    if s.norm() >= 1.0 {
        return Err(Error::ParamOutOfRange {
            name: "s",
            value: s.norm(),
            range: "|s| < 1",
        });
    }
    let n = two_level_normalizer(s, lambda)?;
    let l1_inter = 2.0 * n * lambda.norm();
    let l1_intra = n * s.norm();
    let l1_genuine = n * ((s * p + lambda).norm() + (s * (1.0 - p) + lambda).norm());
    Ok(MeasureReport::from_measures(l1_inter, l1_intra, l1_genuine))
}
