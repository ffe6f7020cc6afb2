//! The l1 superposition measures: inter-basis, intra-basis, and genuine,
//! plus the two-level closed forms and their additivity gap.
//!
//! Run with: cargo run --example superposition_measures

use nqs::measures::{
    dephase, l1_genuine, l1_inter, l1_intra, measure_report, two_level_closed_form, two_level_state,
};
use nqs::{superposition_free, GramBasis};
use num_complex::Complex64;

fn main() -> nqs::Result<()> {
    let c = |re: f64, im: f64| Complex64::new(re, im);

    // A superposition-free mixture carries no inter-basis superposition,
    // but its overlaps still hold intra-basis superposition.
    let basis = GramBasis::two_level(c(0.5, 0.0))?;
    let free = superposition_free(&[0.3, 0.7], basis)?;
    println!("superposition-free (0.3, 0.7) at s = 0.5:");
    println!("  l1_inter   = {}", l1_inter(&free));
    println!("  l1_intra   = {}", l1_intra(&free));
    println!("  l1_genuine = {}", l1_genuine(&free.to_biorthogonal()));
    println!("  dephased matrix:\n{}", dephase(&free));

    // The two-level family rho = N(p |c1><c1| + (1-p)|c2><c2|
    // + lambda |c1><c2| + h.c.) has closed-form measures.
    let (p, s) = (0.5, c(0.5, 0.0));
    for lambda in [c(0.25, 0.0), c(0.0, 0.25)] {
        let closed = two_level_closed_form(p, s, lambda)?;
        let (_, rep) = two_level_state(p, s, lambda)?;
        let generic = measure_report(&rep);
        println!("\ntwo-level state with lambda = {lambda}:");
        println!(
            "  closed form: inter = {}, intra = {}, genuine = {}, gap = {}",
            closed.l1_inter, closed.l1_intra, closed.l1_genuine, closed.additivity_gap
        );
        println!(
            "  pipeline:    inter = {}, intra = {}, genuine = {}",
            generic.l1_inter, generic.l1_intra, generic.l1_genuine
        );
    }

    // The gap opens as lambda rotates away from the positive real axis:
    // inter- and intra-basis superposition interfere inside the genuine
    // total.
    println!("\ngap versus arg(lambda) at p = 0.5, s = 0.5, |lambda| = 0.25:");
    for step in 0..=8 {
        let arg = std::f64::consts::PI * step as f64 / 8.0;
        let lambda = Complex64::from_polar(0.25, arg);
        let report = two_level_closed_form(p, s, lambda)?;
        println!("  arg = {:>6.4}  gap = {:.6}", arg, report.additivity_gap);
    }
    Ok(())
}
