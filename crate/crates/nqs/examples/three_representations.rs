//! The same state in its three matrix representations, with traces,
//! Chirgwin-Coulson weights, and the majorization test for pure-state
//! convertibility.
//!
//! Run with: cargo run --example three_representations

use nqs::linalg::CVector;
use nqs::representations::majorizes;
use nqs::{ConventionalRep, GramBasis, PureState};
use num_complex::Complex64;

fn main() -> nqs::Result<()> {
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let basis = GramBasis::two_level(c(0.5, 0.0))?;

    // psi = (1, 1)/sqrt(3): normalized because psi^dag G psi = 1 accounts
    // for the overlap.
    let amps = CVector::from_vec(vec![c(1.0, 0.0), c(1.0, 0.0)]) / c(3.0f64.sqrt(), 0.0);
    let psi = PureState::new(basis.clone(), amps)?;

    let conventional = ConventionalRep::from_pure(&psi);
    let biorthogonal = conventional.to_biorthogonal();
    let lowdin = conventional.to_lowdin();

    println!("conventional rho:\n{}", conventional.mat());
    println!("biorthogonal rho_bar = rho G:\n{}", biorthogonal.mat());
    println!("Lowdin rho_tilde = G^1/2 rho G^1/2:\n{}", lowdin.mat());

    // The diagonal sum of rho is not the physical trace; tr[rho G] is.
    println!("naive trace tr[rho]   = {}", conventional.naive_trace());
    println!("physical  tr[rho G]   = {}", conventional.trace_dual());
    println!("biorthogonal trace    = {}", biorthogonal.mat().trace());
    println!("Lowdin trace          = {}", lowdin.mat().trace());

    // Chirgwin-Coulson weights: the nonorthogonal analogue of populations,
    // also the diagonal of the biorthogonal matrix.
    let weights = psi.chirgwin_coulson();
    println!("Chirgwin-Coulson weights: [{}, {}]", weights[0], weights[1]);

    // A state with tr[rho] = 2: still perfectly physical.
    let flipped = PureState::new(
        basis.clone(),
        CVector::from_vec(vec![c(1.0, 0.0), c(-1.0, 0.0)]),
    )?;
    let rep = ConventionalRep::from_pure(&flipped);
    println!(
        "psi = (1, -1): tr[rho] = {} while tr[rho G] = {}",
        rep.naive_trace(),
        rep.trace_dual()
    );

    // Majorization of weight vectors is necessary for pure-state
    // conversion under superposition-free operations: the uniform weights
    // (1/2, 1/2) sit below the concentrated weights (1, 0) of |c_1>.
    let single = PureState::new(basis, CVector::from_vec(vec![c(1.0, 0.0), c(0.0, 0.0)]))?;
    let uniform: Vec<Complex64> = psi.chirgwin_coulson().iter().copied().collect();
    let concentrated: Vec<Complex64> = single.chirgwin_coulson().iter().copied().collect();
    println!(
        "(1/2, 1/2) majorized by (1, 0): {}",
        majorizes(&uniform, &concentrated)?
    );
    println!(
        "(1, 0) majorized by (1/2, 1/2): {}",
        majorizes(&concentrated, &uniform)?
    );
    Ok(())
}
