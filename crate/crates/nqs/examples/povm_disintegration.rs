//! Disintegrating a state onto the basis elements: the d+1-element
//! measurement family, its validity, outcome statistics, the biorthogonal
//! projectors, and seeded Monte Carlo sampling.
//!
//! Run with: cargo run --example povm_disintegration

use nqs::linalg::CVector;
use nqs::povm_measurement::{
    build_povm, build_povm_scaled, monte_carlo_disintegrate, povm_probabilities,
    probabilities_in_range, projectors, pvm_probabilities, residual_pure_state,
};
use nqs::{superposition_free, ConventionalRep, GramBasis, PureState};
use num_complex::Complex64;

fn main() -> nqs::Result<()> {
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let basis = GramBasis::two_level(c(0.5, 0.0))?;

    // As printed, the family's inconclusive element fails positivity for
    // any nontrivial overlap; its eigenvalues are 1 - 1/lambda_k(G).
    let povm = build_povm(&basis)?;
    println!("unscaled family:");
    println!("  valid POVM: {}", povm.is_valid());
    println!("  min eigenvalue of F_3: {}", povm.min_eigenvalue_last());
    println!("  completeness defect: {:.3e}", povm.completeness_defect());

    // Rescaling the rank-one elements by lambda_min(G) repairs positivity
    // (unambiguous-discrimination style).
    let q = basis.eigenvalues()[0];
    let rescaled = build_povm_scaled(&basis, q)?;
    println!("rescaled with q = {q}:");
    println!("  valid POVM: {}", rescaled.is_valid());
    println!(
        "  min eigenvalue of F_3: {:.3e}",
        rescaled.min_eigenvalue_last()
    );

    // A superposition-free state disintegrates perfectly: the inconclusive
    // outcome has probability zero.
    let free = superposition_free(&[0.3, 0.7], basis.clone())?;
    println!(
        "\nfree state outcome probabilities: {:?}",
        povm_probabilities(&free)
    );

    // A pure superposition leaves weight 1 - tr[rho] in the inconclusive
    // slot.
    let amps = CVector::from_vec(vec![c(1.0, 0.0), c(1.0, 0.0)]) / c(3.0f64.sqrt(), 0.0);
    let psi = PureState::new(basis.clone(), amps)?;
    let rep = ConventionalRep::from_pure(&psi);
    let probs = povm_probabilities(&rep);
    println!("uniform pure state probabilities: {probs:?}");

    // The residual the inconclusive outcome leaves behind, re-expanded
    // over the original kets.
    let residual = residual_pure_state(&psi);
    println!(
        "residual coefficients over basis kets: [{}, {}] (norm {:.6})",
        residual.coeff_basis[0], residual.coeff_basis[1], residual.norm
    );

    // The biorthogonal projectors reproduce populations without an
    // inconclusive outcome; for pure states the diagonal equals the
    // Chirgwin-Coulson weights.
    let set = projectors(&basis)?;
    let (completeness, idempotence, reproduction) = set.relation_residuals(&basis)?;
    println!(
        "projector relation residuals: {completeness:.3e}, {idempotence:.3e}, {reproduction:.3e}"
    );
    let pvm = pvm_probabilities(&rep.to_biorthogonal());
    println!("projective outcome weights: [{}, {}]", pvm[0], pvm[1]);

    // Seeded sampling is reproducible: same seed, same counts.
    let counts = monte_carlo_disintegrate(&rep, 90_000, 7)?;
    println!("\nMonte Carlo counts (n = 90000, seed = 7): {counts:?}");
    let again = monte_carlo_disintegrate(&rep, 90_000, 7)?;
    assert_eq!(counts, again);

    // Some physical states have outcome "probabilities" outside [0, 1];
    // sampling refuses them.
    let flipped = PureState::new(basis, CVector::from_vec(vec![c(1.0, 0.0), c(-1.0, 0.0)]))?;
    let rep = ConventionalRep::from_pure(&flipped);
    let probs = povm_probabilities(&rep);
    println!(
        "\npsi = (1, -1) probabilities: {probs:?} (in range: {})",
        probabilities_in_range(&probs)
    );
    match monte_carlo_disintegrate(&rep, 100, 7) {
        Err(err) => println!("sampling refused: {err}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
