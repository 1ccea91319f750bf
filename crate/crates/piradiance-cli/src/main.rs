//! `piradiance`: π-invariant derivations, blackbody spectra, criteria
//! reports, and constant-table verification from the command line.
//!
//! Exit codes: 0 success, 2 parse/input error, 3 singular pin choice,
//! 4 unknown law name. Set `PIRADIANCE_TOL` to override the default
//! numeric tolerances used by `criteria`.

mod output;

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use piradiance::fit::{self, FitInputs};
use piradiance::laws::{self, CriteriaTolerances, LawError, RadiationLaw};
use piradiance::pi_solver::{self, SolveError};
use piradiance::rational::Rational;
use piradiance::scenario::{self, DerivePreset};
use serde_json::json;

const EXIT_PARSE: u8 = 2;
const EXIT_SINGULAR: u8 = 3;
const EXIT_UNKNOWN_LAW: u8 = 4;

#[derive(Debug)]
enum CliError {
    Parse(String),
    Singular(String),
    UnknownLaw(String),
    Other(String),
}

impl CliError {
    fn message(&self) -> &str {
        match self {
            CliError::Parse(m)
            | CliError::Singular(m)
            | CliError::UnknownLaw(m)
            | CliError::Other(m) => m,
        }
    }

    fn code(&self) -> u8 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Singular(_) => EXIT_SINGULAR,
            CliError::UnknownLaw(_) => EXIT_UNKNOWN_LAW,
            CliError::Other(_) => 1,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "piradiance",
    version,
    about = "Dimensional pi-invariants analysis and blackbody radiation laws",
    long_about = "Derives pi-invariants from declared quantity sets over exact rational \
                  arithmetic, evaluates blackbody radiation laws and their admissibility \
                  criteria, and re-derives the (k, eta) constant table from Stefan's \
                  constant and the displacement constant."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Derive pi-invariants for a preset or a scenario JSON file
    Derive(DeriveArgs),
    /// Emit a temperature-reduced spectrum as CSV
    Spectrum(SpectrumArgs),
    /// Evaluate the red/violet/maximum criteria for a law preset
    Criteria(CriteriaArgs),
    /// Re-derive the (k, eta) constant table from sigma and C
    Table1(Table1Args),
    /// Demonstrate the eight-quantity wavelength-exponent failure
    AppendixA(CommonOutputArgs),
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["preset", "input"]))]
struct DeriveArgs {
    /// Built-in scenario: rayleigh-jeans, generalized, or jeans
    #[arg(long)]
    preset: Option<String>,
    /// Path to a scenario JSON file
    #[arg(long)]
    input: Option<PathBuf>,
    /// Displacement exponent for the generalized preset (rational, e.g. -1 or -1/2)
    #[arg(long = "N", default_value = "-1", allow_hyphen_values = true)]
    n: String,
    /// Emit machine-readable JSON instead of text
    #[arg(long)]
    json: bool,
    /// Write the report to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SpectrumArgs {
    /// Law preset: planck, wien-paschen, thiesen, rayleigh, rayleigh-jeans
    #[arg(long)]
    preset: String,
    /// Grid spec lo:hi:n over nu/T in s^-1 K^-1 (log-spaced)
    #[arg(long, default_value = "1e8:1e12:512")]
    grid: String,
    /// Write the CSV to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CriteriaArgs {
    /// Law preset: planck, wien-paschen, thiesen, rayleigh, rayleigh-jeans
    #[arg(long)]
    preset: String,
    /// Emit machine-readable JSON instead of text
    #[arg(long)]
    json: bool,
    /// Write the report to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Table1Args {
    /// Stefan's constant (J m^-2 s^-1 K^-4)
    #[arg(long)]
    sigma: Option<f64>,
    /// Displacement constant nu_max/T (s^-1 K^-1)
    #[arg(long = "C")]
    displacement: Option<f64>,
    /// Emit machine-readable JSON instead of text
    #[arg(long)]
    json: bool,
    /// Write the report to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CommonOutputArgs {
    /// Emit machine-readable JSON instead of text
    #[arg(long)]
    json: bool,
    /// Write the report to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Derive(args) => run_derive(args),
        Command::Spectrum(args) => run_spectrum(args),
        Command::Criteria(args) => run_criteria(args),
        Command::Table1(args) => run_table1(args),
        Command::AppendixA(args) => run_appendix_a(args),
    }
}

fn emit(output: Option<&PathBuf>, content: &str) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, content)
            .map_err(|e| CliError::Other(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .map_err(|e| CliError::Other(format!("cannot write to stdout: {e}")))
        }
    }
}

fn json_document(value: serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(&value).expect("reports serialize");
    text.push('\n');
    text
}

fn solve_error(err: SolveError) -> CliError {
    match err {
        SolveError::SingularSubsystem { .. } => CliError::Singular(err.to_string()),
        other => CliError::Parse(other.to_string()),
    }
}

fn run_derive(args: DeriveArgs) -> Result<(), CliError> {
    let (source, set, pins) = if let Some(name) = &args.preset {
        let preset = DerivePreset::from_name(name).map_err(|e| CliError::Parse(e.to_string()))?;
        let n: Rational = args
            .n
            .parse()
            .map_err(|_| CliError::Parse(format!("invalid rational for --N: `{}`", args.n)))?;
        let (set, pins) = preset.instantiate(n);
        (format!("preset {name}"), set, Some(pins))
    } else {
        let path = args.input.as_ref().expect("clap enforces the source group");
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
        let (set, pins) =
            scenario::parse_scenario(&text).map_err(|e| CliError::Parse(e.to_string()))?;
        (format!("file {}", path.display()), set, pins)
    };

    let view = match pins {
        Some(pins) => {
            let system = pi_solver::solve_pinned(&set, &pins).map_err(solve_error)?;
            DeriveView {
                rank: system.rank(),
                invariants: system
                    .invariants()
                    .iter()
                    .map(|inv| (inv.formula().to_string(), inv.powers().to_vec()))
                    .collect(),
            }
        }
        None => {
            // No pins declared: present the deterministic nullspace basis.
            let matrix = set.dimensional_matrix();
            let rank = pi_solver::rank(&matrix);
            let invariants = pi_solver::nullspace_basis(&set)
                .into_iter()
                .map(|powers| (pi_solver::render_formula(&set, &powers), powers))
                .collect();
            DeriveView { rank, invariants }
        }
    };

    let is_jeans = args.preset.as_deref() == Some("jeans");
    let constraint = is_jeans.then(scenario::wavelength_constraint_report);

    let content = if args.json {
        let mut doc = derive_json(&source, &set, &view);
        if let Some(report) = &constraint {
            doc["wavelength_constraint"] = output::constraint_json(report);
        }
        json_document(doc)
    } else {
        let mut text = derive_text(&source, &set, &view);
        if let Some(report) = &constraint {
            text.push_str(&output::constraint_text(report));
        }
        text
    };
    emit(args.output.as_ref(), &content)
}

struct DeriveView {
    rank: usize,
    invariants: Vec<(String, Vec<Rational>)>,
}

fn derive_text(source: &str, set: &piradiance::QuantitySet, view: &DeriveView) -> String {
    let names: Vec<&str> = set.quantities().iter().map(|q| q.symbol()).collect();
    let mut out = String::new();
    out.push_str(&format!("source: {source}\n"));
    out.push_str(&format!("quantities: ({})\n", names.join(", ")));
    out.push_str(&format!("rank: {}\n", view.rank));
    out.push_str(&format!("invariants: {}\n", view.invariants.len()));
    for (i, (formula, powers)) in view.invariants.iter().enumerate() {
        let parts: Vec<String> = powers.iter().map(Rational::to_string).collect();
        out.push_str(&format!("pi_{} = {}\n", i + 1, formula));
        out.push_str(&format!("  powers: [{}]\n", parts.join(", ")));
    }
    out
}

fn derive_json(
    source: &str,
    set: &piradiance::QuantitySet,
    view: &DeriveView,
) -> serde_json::Value {
    let invariants: Vec<serde_json::Value> = view
        .invariants
        .iter()
        .enumerate()
        .map(|(i, (formula, powers))| {
            json!({
                "index": i + 1,
                "formula": formula,
                "powers": powers.iter().map(Rational::to_string).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "schema": output::SCHEMA_VERSION,
        "kind": "derive",
        "source": source,
        "quantities": set.quantities().iter().map(|q| q.name()).collect::<Vec<_>>(),
        "rank": view.rank,
        "num_invariants": view.invariants.len(),
        "invariants": invariants,
    })
}

fn parse_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let err = || CliError::Parse(format!("invalid grid spec `{spec}`: expected lo:hi:n"));
    if parts.len() != 3 {
        return Err(err());
    }
    let lo: f64 = parts[0].parse().map_err(|_| err())?;
    let hi: f64 = parts[1].parse().map_err(|_| err())?;
    let n: usize = parts[2].parse().map_err(|_| err())?;
    if !lo.is_finite() || lo <= 0.0 || !hi.is_finite() || hi <= lo || n < 2 {
        return Err(err());
    }
    Ok(laws::log_grid(lo, hi, n))
}

fn law_from_name(name: &str) -> Result<RadiationLaw, CliError> {
    RadiationLaw::from_name(name).ok_or_else(|| {
        CliError::UnknownLaw(format!(
            "unknown law `{name}`; expected one of {}",
            RadiationLaw::preset_names().join(", ")
        ))
    })
}

fn run_spectrum(args: SpectrumArgs) -> Result<(), CliError> {
    let law = law_from_name(&args.preset)?;
    let grid = parse_grid(&args.grid)?;
    let samples = law.sample_spectrum(&grid).map_err(|e| match e {
        LawError::GridNotIncreasing => CliError::Parse(e.to_string()),
        other => CliError::Other(other.to_string()),
    })?;
    let mut buf = Vec::new();
    laws::write_spectrum_csv(&samples, &mut buf).expect("writing to memory cannot fail");
    let csv = String::from_utf8(buf).expect("CSV is UTF-8");
    emit(args.output.as_ref(), &csv)
}

fn criteria_tolerances() -> Result<CriteriaTolerances, CliError> {
    match std::env::var("PIRADIANCE_TOL") {
        Ok(raw) => {
            let value: f64 = raw.trim().parse().map_err(|_| {
                CliError::Parse(format!("invalid PIRADIANCE_TOL value `{raw}`"))
            })?;
            if !value.is_finite() || value <= 0.0 {
                return Err(CliError::Parse(format!(
                    "PIRADIANCE_TOL must be a positive number, got `{raw}`"
                )));
            }
            Ok(CriteriaTolerances {
                limit: value,
                quadrature: value,
            })
        }
        Err(_) => Ok(CriteriaTolerances::default()),
    }
}

fn run_criteria(args: CriteriaArgs) -> Result<(), CliError> {
    let law = law_from_name(&args.preset)?;
    let report = law.evaluate_criteria_with(&criteria_tolerances()?);
    let content = if args.json {
        json_document(output::criteria_json(&report))
    } else {
        output::criteria_text(&report)
    };
    emit(args.output.as_ref(), &content)
}

fn run_table1(args: Table1Args) -> Result<(), CliError> {
    let mut inputs = FitInputs::default();
    if let Some(sigma) = args.sigma {
        inputs.sigma = sigma;
    }
    if let Some(displacement) = args.displacement {
        inputs.displacement = displacement;
    }
    if !inputs.sigma.is_finite()
        || inputs.sigma <= 0.0
        || !inputs.displacement.is_finite()
        || inputs.displacement <= 0.0
    {
        return Err(CliError::Parse("sigma and C must be positive".to_string()));
    }
    let report = fit::verify_table1(&inputs);
    let content = if args.json {
        json_document(json!({
            "schema": output::SCHEMA_VERSION,
            "kind": "table1",
            "report": serde_json::to_value(&report).expect("report serializes"),
        }))
    } else {
        fit::format_table1(&report)
    };
    emit(args.output.as_ref(), &content)
}

fn run_appendix_a(args: CommonOutputArgs) -> Result<(), CliError> {
    let set = scenario::presets::jeans_set();
    let system = pi_solver::solve_pinned(&set, &scenario::presets::jeans_pins())
        .map_err(solve_error)?;
    let report = scenario::wavelength_constraint_report();
    let view = DeriveView {
        rank: system.rank(),
        invariants: system
            .invariants()
            .iter()
            .map(|inv| (inv.formula().to_string(), inv.powers().to_vec()))
            .collect(),
    };
    let content = if args.json {
        let mut doc = derive_json("preset jeans", &set, &view);
        doc["kind"] = json!("appendix-a");
        doc["wavelength_constraint"] = output::constraint_json(&report);
        json_document(doc)
    } else {
        let mut text = derive_text("preset jeans", &set, &view);
        text.push_str(&output::constraint_text(&report));
        text
    };
    emit(args.output.as_ref(), &content)
}
