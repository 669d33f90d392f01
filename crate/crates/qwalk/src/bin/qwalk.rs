use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qwalk::coin::{build_qutrit, build_su2, KTermConvention, QutritParams, Su2Params};
use qwalk::error::QwalkError;
use qwalk::oracle::{compare_with_engine, PathSumConfig};
use qwalk::payoff::csv_string;
use qwalk::presets;
use qwalk::scenario::{load_scenario, run_scenario, sweep, GridSpec, Scenario};

/// Discrete-time quantum walk simulator: game scenarios, payoff series,
/// figure presets, parameter sweeps, and a brute-force oracle check.
#[derive(Parser)]
#[command(name = "qwalk", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario and emit its payoff series as CSV.
    Run(RunArgs),
    /// Build a coin from parameters and report its unitarity defect.
    ValidateCoin(ValidateCoinArgs),
    /// Compare the engine against the path-sum oracle for a preset.
    OracleCheck(OracleCheckArgs),
    /// Run a parameter-grid sweep and emit the classification table.
    Sweep(SweepArgs),
    /// List the bundled presets and their expected outcomes.
    Presets,
}

#[derive(Args)]
struct RunArgs {
    /// Path to a scenario JSON file.
    #[arg(long, conflicts_with = "preset", required_unless_present = "preset")]
    scenario: Option<PathBuf>,
    /// Name of a bundled preset (see `qwalk presets`).
    #[arg(long)]
    preset: Option<String>,
    /// Override the scenario's step count.
    #[arg(long)]
    steps: Option<u64>,
    /// Write the payoff CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the final position distribution as JSON to this path.
    #[arg(long, value_name = "PATH")]
    emit_distribution: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Qubit,
    Qutrit,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Corrected,
    AsPrinted,
}

#[derive(Clone, Copy, ValueEnum)]
enum UnitArg {
    Rad,
    Deg,
}

#[derive(Args)]
struct ValidateCoinArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Comma-separated angles: 3 for qubit, 4 for qutrit.
    #[arg(long)]
    params: String,
    #[arg(long, value_enum, default_value = "corrected")]
    convention: ConventionArg,
    #[arg(long, value_enum, default_value = "rad")]
    unit: UnitArg,
}

#[derive(Args)]
struct OracleCheckArgs {
    #[arg(long)]
    preset: String,
    /// Step count for the comparison (small; the path sum is exponential).
    #[arg(long)]
    steps: u32,
}

#[derive(Args)]
struct SweepArgs {
    /// Path to a grid JSON file.
    #[arg(long)]
    grid: PathBuf,
    #[arg(long)]
    out: PathBuf,
}

const EXIT_VALIDATION: u8 = 1;
const EXIT_RUNTIME: u8 = 2;
const EXIT_ORACLE_MISMATCH: u8 = 3;

fn exit_code_for(err: &QwalkError) -> u8 {
    match err {
        QwalkError::Io(_) | QwalkError::NormDrift { .. } | QwalkError::OracleBoundExceeded { .. } => {
            EXIT_RUNTIME
        }
        _ => EXIT_VALIDATION,
    }
}

fn load(args: &RunArgs) -> Result<Scenario, QwalkError> {
    let mut config = match (&args.scenario, &args.preset) {
        (Some(path), None) => load_scenario(&fs::read_to_string(path)?)?.0,
        (None, Some(name)) => presets::preset(name)?.config,
        _ => unreachable!("clap enforces exactly one source"),
    };
    if let Some(steps) = args.steps {
        config.steps = steps;
    }
    config.build()
}

fn cmd_run(args: RunArgs) -> Result<(), QwalkError> {
    let scenario = load(&args)?;
    let run = run_scenario(&scenario)?;
    let csv = csv_string(&run.series);
    match &args.out {
        Some(path) => fs::write(path, csv)?,
        None => std::io::stdout().write_all(csv.as_bytes())?,
    }
    if let Some(path) = &args.emit_distribution {
        fs::write(path, run.final_state.distribution_json())?;
    }
    Ok(())
}

fn cmd_validate_coin(args: ValidateCoinArgs) -> Result<(), QwalkError> {
    let mut params: Vec<f64> = Vec::new();
    for part in args.params.split(',') {
        params.push(part.trim().parse().map_err(|_| {
            QwalkError::Validation(format!("cannot parse \"{part}\" as a number"))
        })?);
    }
    if matches!(args.unit, UnitArg::Deg) {
        params.iter_mut().for_each(|p| *p = p.to_radians());
    }
    let result = match args.kind {
        KindArg::Qubit => {
            let [a, b, g]: [f64; 3] = params[..].try_into().map_err(|_| {
                QwalkError::Validation(format!("qubit coin takes 3 angles, got {}", params.len()))
            })?;
            Ok(build_su2(Su2Params::new(a, b, g)))
        }
        KindArg::Qutrit => {
            let [a, b, g, t]: [f64; 4] = params[..].try_into().map_err(|_| {
                QwalkError::Validation(format!("qutrit coin takes 4 angles, got {}", params.len()))
            })?;
            let convention = match args.convention {
                ConventionArg::Corrected => KTermConvention::Corrected,
                ConventionArg::AsPrinted => KTermConvention::AsPrinted,
            };
            build_qutrit(QutritParams::new(a, b, g, t), convention)
        }
    };
    let coin = result?;
    println!("unitary: defect {:e}", coin.unitarity_defect());
    Ok(())
}

fn cmd_oracle_check(args: OracleCheckArgs) -> Result<f64, QwalkError> {
    let mut config = presets::preset(&args.preset)?.config;
    config.steps = u64::from(args.steps);
    let scenario = config.build()?;
    let (position, amplitudes) = scenario
        .initial
        .occupied()
        .next()
        .map(|(n, v)| (n, v.to_vec()))
        .expect("initial state is localized");
    let run = run_scenario(&scenario)?;
    let oracle_config = PathSumConfig {
        basis: scenario.basis.clone(),
        initial_position: position,
        initial_amplitudes: amplitudes,
        coin_a: scenario.coin_a.clone(),
        coin_b: scenario.coin_b.clone(),
        schedule: scenario.schedule.clone(),
        shift: scenario.shift.clone(),
        steps: args.steps,
    };
    let diff = compare_with_engine(&oracle_config, &run.final_state)?;
    println!(
        "preset {} at {} steps: max amplitude difference {:e}",
        args.preset, args.steps, diff
    );
    Ok(diff)
}

fn cmd_sweep(args: SweepArgs) -> Result<(), QwalkError> {
    let grid: GridSpec = serde_json::from_str(&fs::read_to_string(&args.grid)?)?;
    fs::write(&args.out, sweep(&grid)?)?;
    Ok(())
}

fn cmd_presets() {
    println!("{:<12} {:>6}  expected outcome", "name", "steps");
    for p in presets::all_presets() {
        println!("{:<12} {:>6}  {}", p.name, p.config.steps, p.expected);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome: Result<u8, QwalkError> = match cli.command {
        Command::Run(args) => cmd_run(args).map(|()| 0),
        Command::ValidateCoin(args) => cmd_validate_coin(args).map(|()| 0),
        Command::OracleCheck(args) => cmd_oracle_check(args).map(|diff| {
            if diff <= 1e-10 {
                println!("PASS");
                0
            } else {
                println!("FAIL");
                EXIT_ORACLE_MISMATCH
            }
        }),
        Command::Sweep(args) => cmd_sweep(args).map(|()| 0),
        Command::Presets => {
            cmd_presets();
            Ok(0)
        }
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
