//! Quantum states over nonorthogonal bases.
//!
//! A basis of normalized, linearly independent but mutually overlapping
//! states is described by its Gram matrix. This crate builds the three
//! matrix representations a density operator takes over such a basis
//! (conventional, biorthogonal, Lowdin), the l1 measures of inter-basis,
//! intra-basis, and genuine quantum superposition, the d+1-element
//! disintegration measurement with its statistics, and the geometric
//! discord / negativity of the two-qubit embedding of two-state mixtures.
//!
//! Start with [`GramBasis`], wrap a state as a [`PureState`] or
//! [`ConventionalRep`], and see the `examples/` directory for a tour of
//! each capability.
//!
//! ```
//! use nalgebra::DVector;
//! use num_complex::Complex64;
//! use nqs::{measures, ConventionalRep, GramBasis, PureState};
//!
//! // Two basis states with overlap <c_1|c_2> = 0.5.
//! let basis = GramBasis::two_level(Complex64::new(0.5, 0.0))?;
//!
//! // psi = (1, 1)/sqrt(3) is normalized: psi^dag G psi = (2 + 2*0.5)/3 = 1.
//! let amps = DVector::from_vec(vec![Complex64::new(1.0, 0.0); 2])
//!     / Complex64::new(3.0f64.sqrt(), 0.0);
//! let psi = PureState::new(basis, amps)?;
//!
//! let rho = ConventionalRep::from_pure(&psi);
//! assert!((rho.trace_dual().re - 1.0).abs() < 1e-12); // tr[rho G] = 1
//! assert!((rho.naive_trace().re - 2.0 / 3.0).abs() < 1e-12); // tr[rho] != 1
//!
//! let report = measures::measure_report(&rho);
//! assert!(report.l1_genuine <= report.l1_inter + report.l1_intra + 1e-12);
//! # Ok::<(), nqs::Error>(())
//! ```

pub mod cli;
pub mod correlations;
pub mod error;
pub mod gram_basis;
pub mod linalg;
pub mod measures;
pub mod povm_measurement;
pub mod random;
pub mod representations;
pub mod scenario;

pub use error::{Error, Result};
pub use gram_basis::{AmbientEmbedding, GramBasis};
pub use measures::MeasureReport;
pub use representations::{
    majorizes, superposition_free, BiorthogonalRep, ConventionalRep, LowdinRep, PureState,
};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn core_types_are_thread_shareable() {
        fn check<T: Send + Sync>() {}
        check::<GramBasis>();
        check::<AmbientEmbedding>();
        check::<PureState>();
        check::<ConventionalRep>();
        check::<BiorthogonalRep>();
        check::<LowdinRep>();
        check::<MeasureReport>();
        check::<correlations::TwoQubitState>();
        check::<povm_measurement::PovmSet>();
        check::<Error>();
    }
}
