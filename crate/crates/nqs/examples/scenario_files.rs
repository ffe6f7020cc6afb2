//! The scenario file format: building one in code, writing it out,
//! parsing it back, and running the measure pipeline on it. The same files
//! drive the `nqs` command-line tool.
//!
//! Run with: cargo run --example scenario_files

use nqs::measures::measure_report;
use nqs::scenario::{matrix_to_rows, ComplexEntry, ScenarioFile, StateSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let entry = |re: f64| ComplexEntry { re, im: 0.0 };

    // A two-state basis with overlap 0.5 holding a pure uniform
    // superposition.
    let norm = 3.0f64.sqrt();
    let scenario = ScenarioFile {
        dim: 2,
        gram: vec![vec![entry(1.0), entry(0.5)], vec![entry(0.5), entry(1.0)]],
        state: StateSpec::Pure(vec![entry(1.0 / norm), entry(1.0 / norm)]),
    };

    let json = scenario.to_json();
    println!("scenario file:\n{json}\n");

    // Round trip: parse, shape-check, realize into validated types.
    let parsed = ScenarioFile::from_json(&json)?;
    parsed.check_shapes()?;
    let realized = parsed.realize()?;
    println!("basis eigenvalues: {:?}", realized.basis.eigenvalues());

    let rep = realized.state.conventional();
    let report = measure_report(&rep);
    println!("l1_inter   = {}", report.l1_inter);
    println!("l1_intra   = {}", report.l1_intra);
    println!("l1_genuine = {}", report.l1_genuine);
    println!("gap        = {}", report.additivity_gap);

    if let Some(psi) = realized.state.pure() {
        let weights = psi.chirgwin_coulson();
        println!("Chirgwin-Coulson weights: [{}, {}]", weights[0], weights[1]);
    }

    // Matrices serialize back into the same nested {re, im} layout.
    let bio = rep.to_biorthogonal();
    let serialized = serde_json::to_string_pretty(&matrix_to_rows(bio.mat()))?;
    println!("\nbiorthogonal matrix as scenario rows:\n{serialized}");
    Ok(())
}
