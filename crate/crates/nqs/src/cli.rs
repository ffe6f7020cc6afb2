//! Command-line front end.
//!
//! Exit codes are stable across subcommands: 0 on success, 1 on a domain
//! validation failure, 2 on a parse or I/O failure. CSV output uses fixed
//! notation with 12 significant digits, '.' as the decimal separator, ','
//! as the field separator, and always starts with a header row; identical
//! inputs (including seeds) produce byte-identical files.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use crate::correlations;
use crate::gram_basis::{EPS_HERM, EPS_PD};
use crate::linalg::hermiticity_defect;
use crate::measures::{self, MeasureReport};
use crate::povm_measurement::{
    build_povm_scaled, probabilities_in_range, projectors, sample_counts,
    scaled_outcome_probabilities,
};
use crate::scenario::{matrix_to_rows, ComplexEntry, Scenario, ScenarioFile};

#[derive(Parser)]
#[command(
    name = "nqs",
    about = "Quantum states over nonorthogonal bases: representations, superposition measures, disintegration statistics, and correlation sweeps",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the basis and state in a scenario file.
    #[command(name = "validate")]
    Validate {
        /// Scenario file (JSON).
        #[arg(short = 'i', long = "input", value_name = "FILE")]
        input: PathBuf,
    },
    /// Compute the l1 superposition measures of the state in a scenario
    /// file.
    #[command(name = "measures")]
    Measures {
        #[arg(short = 'i', long = "input", value_name = "FILE")]
        input: PathBuf,
        /// Write the JSON report here instead of stdout.
        #[arg(short = 'o', long = "output", value_name = "FILE")]
        output: Option<PathBuf>,
        /// Include all three matrix representations in the report.
        #[arg(long = "include-reps")]
        include_reps: bool,
    },
    /// Sweep the two-level closed forms over s and arg(lambda), writing a
    /// CSV table.
    #[command(name = "sweep-corollary4")]
    SweepCorollary4 {
        /// Mixing weight p of the first basis state.
        #[arg(long = "p", value_name = "X")]
        p: f64,
        /// Magnitude of the coherence parameter lambda.
        #[arg(long = "lambda-abs", value_name = "Y")]
        lambda_abs: f64,
        /// Phases of lambda in radians, comma separated.
        #[arg(
            long = "lambda-args",
            value_name = "LIST",
            value_delimiter = ',',
            num_args = 1..
        )]
        lambda_args: Vec<f64>,
        /// Overlap grid as START:STOP:STEP.
        #[arg(long = "s-grid", value_name = "START:STOP:STEP")]
        s_grid: String,
        #[arg(short = 'o', long = "output", value_name = "FILE")]
        output: PathBuf,
    },
    /// Sweep geometric discord and negativity of the two-qubit embedding,
    /// writing a CSV table.
    #[command(name = "sweep-discord")]
    SweepDiscord {
        #[arg(long = "p-steps", value_name = "N")]
        p_steps: usize,
        #[arg(long = "s-steps", value_name = "M")]
        s_steps: usize,
        #[arg(short = 'o', long = "output", value_name = "FILE")]
        output: PathBuf,
    },
    /// Analyze the d+1-element disintegration family on a scenario file.
    #[command(name = "povm")]
    Povm {
        #[arg(short = 'i', long = "input", value_name = "FILE")]
        input: PathBuf,
        /// Draw this many Monte Carlo outcomes.
        #[arg(long = "sample", value_name = "N")]
        sample: Option<u64>,
        /// Seed for the Monte Carlo generator.
        #[arg(long = "seed", value_name = "K", default_value_t = 0)]
        seed: u64,
        /// Rescaling q of the rank-one elements (q = lambda_min(G) gives a
        /// valid POVM).
        #[arg(long = "scale", value_name = "Q", default_value_t = 1.0)]
        scale: f64,
    },
    /// Convert the state in a scenario file to another representation.
    #[command(name = "transform")]
    Transform {
        #[arg(short = 'i', long = "input", value_name = "FILE")]
        input: PathBuf,
        /// Target representation.
        #[arg(long = "to", value_name = "REP")]
        to: Representation,
        #[arg(short = 'o', long = "output", value_name = "FILE")]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Representation {
    Conventional,
    Biorthogonal,
    Lowdin,
}

#[derive(Debug)]
enum CliError {
    Parse(String),
    Validation(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(msg) | CliError::Validation(msg) => write!(f, "{msg}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Validation(_) => 1,
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(err: crate::Error) -> Self {
        CliError::Validation(err.to_string())
    }
}

/// Parses arguments from the process environment, runs the command, and
/// returns the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn execute(command: Command) -> Result<(), CliError> {
    match command {
        Command::Validate { input } => cmd_validate(&input),
        Command::Measures {
            input,
            output,
            include_reps,
        } => cmd_measures(&input, output.as_deref(), include_reps),
        Command::SweepCorollary4 {
            p,
            lambda_abs,
            lambda_args,
            s_grid,
            output,
        } => cmd_sweep_corollary4(p, lambda_abs, &lambda_args, &s_grid, &output),
        Command::SweepDiscord {
            p_steps,
            s_steps,
            output,
        } => cmd_sweep_discord(p_steps, s_steps, &output),
        Command::Povm {
            input,
            sample,
            seed,
            scale,
        } => cmd_povm(&input, sample, seed, scale),
        Command::Transform { input, to, output } => cmd_transform(&input, to, output.as_deref()),
    }
}

fn read_scenario_file(path: &Path) -> Result<ScenarioFile, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|err| CliError::Parse(format!("cannot read {}: {err}", path.display())))?;
    let file = ScenarioFile::from_json(&text)
        .map_err(|err| CliError::Parse(format!("cannot parse {}: {err}", path.display())))?;
    file.check_shapes()
        .map_err(|err| CliError::Parse(format!("{}: {err}", path.display())))?;
    Ok(file)
}

fn load_scenario(path: &Path) -> Result<Scenario, CliError> {
    read_scenario_file(path)?.realize().map_err(CliError::from)
}

fn cmd_validate(input: &Path) -> Result<(), CliError> {
    let file = read_scenario_file(input)?;
    let gram = file.gram_matrix();
    println!("scenario: {}", input.display());
    println!("dimension: {}", file.dim);

    let defect = hermiticity_defect(&gram);
    let hermitian_ok = defect <= EPS_HERM;
    println!(
        "gram hermiticity: {} (defect {:.3e}, tolerance {:.0e})",
        verdict(hermitian_ok),
        defect,
        EPS_HERM
    );

    let diag_defect = (0..file.dim)
        .map(|i| (gram[(i, i)] - Complex64::new(1.0, 0.0)).norm())
        .fold(0.0, f64::max);
    let diag_ok = diag_defect <= EPS_HERM;
    println!(
        "gram unit diagonal: {} (defect {:.3e})",
        verdict(diag_ok),
        diag_defect
    );

    let eigenvalues = crate::linalg::hermitian_eigen(&gram).0;
    let formatted: Vec<String> = eigenvalues.iter().map(|v| fmt_sig(*v)).collect();
    println!("gram eigenvalues: {}", formatted.join(", "));
    let pd_ok = eigenvalues[0] > EPS_PD;
    println!(
        "gram positive definite: {} (min eigenvalue {:.6e}, threshold {:.0e})",
        verdict(pd_ok),
        eigenvalues[0],
        EPS_PD
    );

    let gram_ok = hermitian_ok && diag_ok && pd_ok;
    match file.realize() {
        Ok(_) => {
            println!("state: valid");
            println!("verdict: VALID");
            Ok(())
        }
        Err(err) => {
            if gram_ok {
                println!("state: {err}");
            } else {
                println!("state: not checked (gram invalid: {err})");
            }
            println!("verdict: INVALID");
            Err(CliError::Validation(err.to_string()))
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "OK"
    } else {
        "FAIL"
    }
}

#[derive(Serialize)]
struct MeasuresDocument {
    #[serde(flatten)]
    measures: MeasureReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    chirgwin_coulson: Option<Vec<ComplexEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    representations: Option<RepresentationsDocument>,
}

#[derive(Serialize)]
struct RepresentationsDocument {
    conventional: Vec<Vec<ComplexEntry>>,
    biorthogonal: Vec<Vec<ComplexEntry>>,
    lowdin: Vec<Vec<ComplexEntry>>,
}

fn cmd_measures(input: &Path, output: Option<&Path>, include_reps: bool) -> Result<(), CliError> {
    let scenario = load_scenario(input)?;
    let rep = scenario.state.conventional();
    let report = measures::measure_report(&rep);
    let weights = scenario
        .state
        .pure()
        .map(|state| state.chirgwin_coulson().iter().map(|&z| z.into()).collect());
    let representations = include_reps.then(|| RepresentationsDocument {
        conventional: matrix_to_rows(rep.mat()),
        biorthogonal: matrix_to_rows(rep.to_biorthogonal().mat()),
        lowdin: matrix_to_rows(rep.to_lowdin().mat()),
    });
    let document = MeasuresDocument {
        measures: report,
        chirgwin_coulson: weights,
        representations,
    };
    emit_json(&document, output)
}

#[derive(Serialize)]
struct TransformDocument {
    representation: &'static str,
    dim: usize,
    mat: Vec<Vec<ComplexEntry>>,
}

fn cmd_transform(input: &Path, to: Representation, output: Option<&Path>) -> Result<(), CliError> {
    let scenario = load_scenario(input)?;
    let rep = scenario.state.conventional();
    let (name, mat) = match to {
        Representation::Conventional => ("conventional", rep.mat().clone()),
        Representation::Biorthogonal => ("biorthogonal", rep.to_biorthogonal().mat().clone()),
        Representation::Lowdin => ("lowdin", rep.to_lowdin().mat().clone()),
    };
    let document = TransformDocument {
        representation: name,
        dim: scenario.basis.dim(),
        mat: matrix_to_rows(&mat),
    };
    emit_json(&document, output)
}

fn emit_json<T: Serialize>(document: &T, output: Option<&Path>) -> Result<(), CliError> {
    let json =
        serde_json::to_string_pretty(document).map_err(|err| CliError::Parse(err.to_string()))?;
    match output {
        Some(path) => fs::write(path, json + "\n")
            .map_err(|err| CliError::Parse(format!("cannot write {}: {err}", path.display()))),
        None => {
            println!("{json}");
            Ok(())
        }
    }
}

fn cmd_povm(input: &Path, sample: Option<u64>, seed: u64, scale: f64) -> Result<(), CliError> {
    let scenario = load_scenario(input)?;
    let rep = scenario.state.conventional();
    let povm = build_povm_scaled(&scenario.basis, scale)?;
    println!("scale q: {}", fmt_sig(scale));
    println!("povm valid: {}", povm.is_valid());
    println!(
        "min eigenvalue of F_(d+1): {}",
        fmt_sig(povm.min_eigenvalue_last())
    );
    println!("completeness defect: {:.3e}", povm.completeness_defect());

    let projector_set = projectors(&scenario.basis)?;
    let (completeness, idempotence, reproduction) =
        projector_set.relation_residuals(&scenario.basis)?;
    println!(
        "projector relation residuals: completeness {:.3e}, idempotence {:.3e}, reproduction {:.3e}",
        completeness, idempotence, reproduction
    );

    let probs = scaled_outcome_probabilities(&rep, scale);
    let formatted: Vec<String> = probs.iter().map(|p| fmt_sig(*p)).collect();
    let in_range = probabilities_in_range(&probs);
    println!("outcome probabilities: [{}]", formatted.join(", "));
    println!("probabilities in [0, 1]: {in_range}");

    if let Some(n) = sample {
        if in_range {
            let counts = sample_counts(&probs, n, seed)
                .map_err(|err| CliError::Validation(err.to_string()))?;
            let rendered: Vec<String> = counts.iter().map(u64::to_string).collect();
            println!(
                "sample counts (n = {n}, seed = {seed}): [{}]",
                rendered.join(", ")
            );
        } else {
            println!(
                "warning: outcome probabilities leave [0, 1]; sampling refused, analysis above still applies"
            );
        }
    }
    Ok(())
}

fn parse_s_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError::Parse(format!(
            "s-grid must be START:STOP:STEP, got '{spec}'"
        )));
    }
    let numbers: Vec<f64> = parts
        .iter()
        .map(|part| {
            part.parse::<f64>()
                .map_err(|err| CliError::Parse(format!("bad s-grid component '{part}': {err}")))
        })
        .collect::<Result<_, _>>()?;
    let (start, stop, step) = (numbers[0], numbers[1], numbers[2]);
    if step <= 0.0 || !step.is_finite() {
        return Err(CliError::Validation(format!(
            "s-grid step must be positive, got {step}"
        )));
    }
    let mut values = Vec::new();
    let mut k = 0usize;
    loop {
        let s = start + step * k as f64;
        if s > stop + 1e-12 {
            break;
        }
        values.push(s);
        k += 1;
    }
    if values.is_empty() {
        return Err(CliError::Validation(format!(
            "s-grid '{spec}' produces no points"
        )));
    }
    Ok(values)
}

fn cmd_sweep_corollary4(
    p: f64,
    lambda_abs: f64,
    lambda_args: &[f64],
    s_grid: &str,
    output: &Path,
) -> Result<(), CliError> {
    let s_values = parse_s_grid(s_grid)?;
    if lambda_args.is_empty() {
        return Err(CliError::Validation("lambda-args must not be empty".into()));
    }
    let file = fs::File::create(output)
        .map_err(|err| CliError::Parse(format!("cannot create {}: {err}", output.display())))?;
    let mut writer = BufWriter::new(file);
    write_row(
        &mut writer,
        output,
        "p,s,arg_lambda,l1_inter,l1_intra,l1_genuine,gap",
    )?;
    for &arg in lambda_args {
        let lambda = Complex64::from_polar(lambda_abs, arg);
        for &s in &s_values {
            let report = measures::two_level_closed_form(p, Complex64::new(s, 0.0), lambda)?;
            let row = [
                fmt_sig(p),
                fmt_sig(s),
                fmt_sig(arg),
                fmt_sig(report.l1_inter),
                fmt_sig(report.l1_intra),
                fmt_sig(report.l1_genuine),
                fmt_sig(report.additivity_gap),
            ]
            .join(",");
            write_row(&mut writer, output, &row)?;
        }
    }
    writer
        .flush()
        .map_err(|err| CliError::Parse(format!("cannot write {}: {err}", output.display())))
}

fn cmd_sweep_discord(p_steps: usize, s_steps: usize, output: &Path) -> Result<(), CliError> {
    let grid = correlations::sweep_grid(p_steps, s_steps)?;
    let file = fs::File::create(output)
        .map_err(|err| CliError::Parse(format!("cannot create {}: {err}", output.display())))?;
    let mut writer = BufWriter::new(file);
    write_row(&mut writer, output, "p,s,discord_A,discord_B,negativity")?;
    for (p, s) in grid {
        let point = correlations::sweep_point(p, s)?;
        let row = [
            fmt_sig(point.p),
            fmt_sig(point.s),
            fmt_sig(point.discord_a),
            fmt_sig(point.discord_b),
            fmt_sig(point.negativity),
        ]
        .join(",");
        write_row(&mut writer, output, &row)?;
    }
    writer
        .flush()
        .map_err(|err| CliError::Parse(format!("cannot write {}: {err}", output.display())))
}

fn write_row(writer: &mut impl Write, path: &Path, row: &str) -> Result<(), CliError> {
    writeln!(writer, "{row}")
        .map_err(|err| CliError::Parse(format!("cannot write {}: {err}", path.display())))
}

/// Fixed-notation rendering with 12 significant digits. Decimal places are
/// capped at 17, past which a double carries no information.
fn fmt_sig(value: f64) -> String {
    if value == 0.0 {
        return "0.000000000000".to_string();
    }
    let magnitude = value.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).clamp(0, 17) as usize;
    format!("{value:.decimals$}")
}
