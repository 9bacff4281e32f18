//! Command-line front end for the driven-qubit heat-switch calculator.

mod config;
mod design;
mod emit;
mod errors;
mod recipes;
mod run;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use config::{GRule, OutputFormat, RunConfig};
use errors::{CliError, CliResult};

#[derive(Parser)]
#[command(
    name = "qheat",
    version,
    about = "Driven two-level heat switch: steady states, heat currents, sweeps, and circuit design reports"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunArgs {
    /// Path to a TOML run configuration
    #[arg(long, value_name = "PATH", conflicts_with = "recipe")]
    config: Option<PathBuf>,

    /// Name of a shipped recipe (see `qheat recipes`)
    #[arg(long, value_name = "NAME")]
    recipe: Option<String>,

    /// Cross-check every row against the null-space steady state
    #[arg(long)]
    numeric: bool,

    /// Output format, overriding the config's [output] section
    #[arg(long, value_name = "csv|json")]
    format: Option<String>,

    /// Output path, overriding the config's [output] section (default stdout)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Worker threads for sweep evaluation (default: all cores)
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the configured single operating point
    Point(RunArgs),
    /// Evaluate the configured parameter sweep
    Sweep(RunArgs),
    /// Derive model parameters from the [circuit] section and evaluate the
    /// cancellation-line design point
    Design(RunArgs),
    /// Parse and validate a config, echoing the resolved parameters
    Validate(RunArgs),
    /// List the shipped recipe configurations
    Recipes,
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = dispatch(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}

fn dispatch(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Recipes => {
            for recipe in recipes::RECIPES {
                println!("{:<24}{}", recipe.name, recipe.description);
            }
            Ok(())
        }
        Command::Point(args) => with_config(&args, |cfg, args| {
            let (row, deviation) = run_in_pool(args.jobs, || run::run_point(cfg, args.numeric))?;
            report_deviation(deviation);
            emit_rows(cfg, args, &[row])
        }),
        Command::Sweep(args) => with_config(&args, |cfg, args| {
            let (rows, deviation) = run_in_pool(args.jobs, || run::run_sweep(cfg, args.numeric))?;
            report_deviation(deviation);
            emit_rows(cfg, args, &rows)
        }),
        Command::Design(args) => with_config(&args, |cfg, args| {
            let out = design::run_design(cfg)?;
            let (format, path, precision) = output_plan(cfg, args)?;
            let mut buf = Vec::new();
            match format {
                OutputFormat::Csv => design::write_design_csv(&mut buf, &out, precision),
                OutputFormat::Json => design::write_design_json(&mut buf, &out),
            }
            .map_err(|e| CliError::Io(format!("serialization failed: {e}")))?;
            emit::write_bytes(&buf, path.as_deref())
        }),
        Command::Validate(args) => with_config(&args, |cfg, _| {
            print_resolved(cfg);
            Ok(())
        }),
    }
}

fn with_config<F>(args: &RunArgs, body: F) -> CliResult<()>
where
    F: FnOnce(&RunConfig, &RunArgs) -> CliResult<()>,
{
    let text = match (&args.config, &args.recipe) {
        (Some(path), None) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?,
        (None, Some(name)) => recipes::find(name)
            .ok_or_else(|| {
                CliError::Validation(format!(
                    "unknown recipe \"{name}\"; run `qheat recipes` for the list"
                ))
            })?
            .toml
            .to_string(),
        _ => {
            return Err(CliError::Validation(
                "give exactly one of --config <path> or --recipe <name>".into(),
            ))
        }
    };
    let cfg = config::validate_config(&text)?;
    for warning in &cfg.warnings {
        eprintln!("warning: {warning}");
    }
    body(&cfg, args)
}

fn run_in_pool<T, F>(jobs: Option<usize>, body: F) -> CliResult<T>
where
    F: FnOnce() -> CliResult<T> + Send,
    T: Send,
{
    match jobs {
        None => body(),
        Some(0) => Err(CliError::Validation("--jobs must be at least 1".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Io(format!("cannot build a {n}-thread pool: {e}")))?
            .install(body),
    }
}

fn report_deviation(deviation: Option<f64>) {
    if let Some(d) = deviation {
        eprintln!("numeric cross-check: max relative deviation = {d:.3e}");
    }
}

fn output_plan(
    cfg: &RunConfig,
    args: &RunArgs,
) -> CliResult<(OutputFormat, Option<String>, usize)> {
    let format = match args.format.as_deref() {
        None => cfg.output.format,
        Some("csv") => OutputFormat::Csv,
        Some("json") => OutputFormat::Json,
        Some(other) => {
            return Err(CliError::Validation(format!(
                "--format must be csv or json, got \"{other}\""
            )))
        }
    };
    let path = args
        .out
        .as_ref()
        .map(|p| p.to_string_lossy().into_owned())
        .or_else(|| cfg.output.path.clone());
    Ok((format, path, cfg.output.precision))
}

fn emit_rows(cfg: &RunConfig, args: &RunArgs, rows: &[run::SweepRow]) -> CliResult<()> {
    let (format, path, precision) = output_plan(cfg, args)?;
    emit::emit(rows, format, path.as_deref(), precision)
}

fn print_resolved(cfg: &RunConfig) {
    let p = |name: &str, v: f64| println!("{name} = {v:.16e}");
    p("gamma_h_per_s", cfg.hot.gamma);
    p("gamma_c_per_s", cfg.cold.gamma);
    p("n_bar_h", cfg.hot.n_bar);
    p("n_bar_c", cfg.cold.n_bar);
    p("omega0_per_s", cfg.omega0);
    p("gamma_phi_per_s", cfg.gamma_phi);
    p("gamma_tot_per_s", cfg.gamma_tot());
    p("t_h_k", cfg.t_h);
    p("t_c_k", cfg.t_c);
    match cfg.g_rule {
        GRule::Fixed(g) => p("g_per_s", g),
        GRule::GstarOfDelta => println!("g_rule = gstar_of_delta"),
        GRule::GstarAtZero => println!("g_rule = gstar_at_zero"),
    }
    match cfg.delta {
        Some(d) => p("delta_per_s", d),
        None => println!("delta_per_s = (from sweep)"),
    }
    match &cfg.sweep {
        Some(s) => println!(
            "sweep = {} from {:.16e} to {:.16e}, {} points, {:?} scale",
            s.variable, s.start, s.stop, s.count, s.scale
        ),
        None => println!("sweep = none"),
    }
    println!(
        "output = {:?} to {}, {} significant digits",
        cfg.output.format,
        cfg.output.path.as_deref().unwrap_or("stdout"),
        cfg.output.precision
    );
}
