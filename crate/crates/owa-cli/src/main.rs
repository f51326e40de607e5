use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use owa_cli::commands::{
    cmd_aggregate, cmd_demo_bias, cmd_orness, cmd_quantifier, cmd_weights, resolve_n,
};
use owa_cli::demo::BiasDemoConfig;
use owa_cli::input::parse_rows;
use owa_cli::report::{
    format_sig, render_aggregates, render_measures, render_table, render_weights, OutputFormat,
    VERSION,
};
use owa_cli::scheme::{parse_scheme, SchemeSpec};
use owa_cli::CliError;

#[derive(Parser)]
#[command(
    name = "owa",
    version,
    about = "Ordered weighted averaging: weight generation, batch aggregation and measures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a weight vector from a scheme and report its measures
    Weights {
        /// Scheme file (TOML)
        #[arg(long)]
        scheme: PathBuf,
        /// Weight vector dimension (overrides the scheme's n)
        #[arg(long)]
        n: Option<usize>,
        /// Write here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Aggregate comma-separated argument rows under a scheme
    Aggregate {
        #[arg(long)]
        scheme: PathBuf,
        /// Input rows: one argument vector per line, '#' lines skipped
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Measures (orness, andness, dispersion) of explicit weight rows
    Orness {
        /// Input rows: one weight vector per line
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Tabulate the scheme's quantifier on a uniform grid
    Quantifier {
        #[arg(long)]
        scheme: PathBuf,
        /// Number of grid cells (emits grid+1 points)
        #[arg(long, default_value_t = 100)]
        grid: usize,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Compare schemes on panels with one injected outlier
    DemoBias {
        /// Panel size (at least 5)
        #[arg(long, default_value_t = 9)]
        n: usize,
        /// Outlier size in band widths
        #[arg(long, default_value_t = 10.0)]
        magnitude: f64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// ChaCha8 seed; identical invocations produce identical output
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
}

fn read_file(path: &Path, what: &str) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("cannot read {what} {}: {e}", path.display())))
}

fn load_scheme(path: &Path) -> Result<SchemeSpec, CliError> {
    parse_scheme(&read_file(path, "scheme file")?)
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Validation(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Weights {
            scheme,
            n,
            output,
            format,
        } => {
            let spec = load_scheme(&scheme)?;
            let n = resolve_n(&spec, n)?;
            let (w, m) = cmd_weights(&spec, n)?;
            emit(
                &render_weights(&spec.echo, &w, &m, format),
                output.as_deref(),
            )
        }
        Command::Aggregate {
            scheme,
            input,
            output,
            format,
        } => {
            let spec = load_scheme(&scheme)?;
            let rows = parse_rows(&read_file(&input, "input file")?)?;
            let reports = cmd_aggregate(&spec, &rows)?;
            emit(
                &render_aggregates(&spec.echo, &reports, format),
                output.as_deref(),
            )
        }
        Command::Orness {
            input,
            output,
            format,
        } => {
            let rows = parse_rows(&read_file(&input, "input file")?)?;
            let measures = cmd_orness(&rows)?;
            emit(
                &render_measures("explicit weight rows", &measures, format),
                output.as_deref(),
            )
        }
        Command::Quantifier {
            scheme,
            grid,
            output,
            format,
        } => {
            let spec = load_scheme(&scheme)?;
            let table = cmd_quantifier(&spec, grid)?;
            emit(
                &render_table(&spec.echo, ("x", "q"), &table, format),
                output.as_deref(),
            )
        }
        Command::DemoBias {
            n,
            magnitude,
            trials,
            seed,
            output,
            format,
        } => {
            let cfg = BiasDemoConfig {
                n,
                magnitude,
                trials,
                seed,
            };
            let summary = cmd_demo_bias(&cfg)?;
            let echo = format!(
                "demo-bias n={n} magnitude={magnitude} trials={trials} seed={seed} rng=chacha8"
            );
            let mut out = format!("# owa {VERSION}\n# {echo}\n");
            match format {
                OutputFormat::Csv => {
                    out.push_str("scheme,mean_abs_deviation\n");
                    for (name, dev) in &summary.rows {
                        out.push_str(&format!("{},{}\n", name, format_sig(*dev)));
                    }
                }
                OutputFormat::Records => {
                    for (name, dev) in &summary.rows {
                        out.push_str(&format!(
                            "scheme: {}\nmean_abs_deviation: {}\n\n",
                            name,
                            format_sig(*dev)
                        ));
                    }
                }
            }
            emit(&out, output.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
