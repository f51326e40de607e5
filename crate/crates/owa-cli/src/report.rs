//! Report records and deterministic number formatting.

use owa::WeightVector;

/// Print precision of every number the tool emits.
pub const SIG_DIGITS: u32 = 12;

/// Tool version stamped into report headers.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// `x` with [`SIG_DIGITS`] significant digits in plain decimal notation.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (SIG_DIGITS as i32 - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Output layout: flat comma-separated table or key/value record blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Records,
}

impl std::fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Csv => "csv",
            Self::Records => "records",
        })
    }
}

/// Scalar measures of a weight vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Measures {
    pub orness: f64,
    pub andness: f64,
    pub dispersion: f64,
}

impl Measures {
    pub fn of(w: &WeightVector) -> Self {
        Self {
            orness: w.orness(),
            andness: w.andness(),
            dispersion: w.dispersion(),
        }
    }
}

/// Everything reported for one aggregated row.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub row: usize,
    pub aggregate: f64,
    pub weights: WeightVector,
    pub measures: Measures,
}

fn header(echo: &str) -> String {
    format!("# owa {VERSION}\n# scheme: {echo}\n")
}

pub fn render_weights(echo: &str, w: &WeightVector, m: &Measures, format: OutputFormat) -> String {
    let mut out = header(echo);
    match format {
        OutputFormat::Csv => {
            out.push_str("field,value\n");
            for (i, v) in w.iter().enumerate() {
                out.push_str(&format!("w{},{}\n", i + 1, format_sig(*v)));
            }
            out.push_str(&format!("orness,{}\n", format_sig(m.orness)));
            out.push_str(&format!("andness,{}\n", format_sig(m.andness)));
            out.push_str(&format!("dispersion,{}\n", format_sig(m.dispersion)));
        }
        OutputFormat::Records => {
            out.push_str(&format!("weights: {}\n", join_sig_spaced(w.as_slice())));
            out.push_str(&format!("orness: {}\n", format_sig(m.orness)));
            out.push_str(&format!("andness: {}\n", format_sig(m.andness)));
            out.push_str(&format!("dispersion: {}\n", format_sig(m.dispersion)));
        }
    }
    out
}

pub fn render_aggregates(echo: &str, reports: &[RunReport], format: OutputFormat) -> String {
    let mut out = header(echo);
    match format {
        OutputFormat::Csv => {
            out.push_str("row,aggregate,orness,andness,dispersion,weights\n");
            for r in reports {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.row,
                    format_sig(r.aggregate),
                    format_sig(r.measures.orness),
                    format_sig(r.measures.andness),
                    format_sig(r.measures.dispersion),
                    join_sig(r.weights.as_slice())
                ));
            }
        }
        OutputFormat::Records => {
            for r in reports {
                out.push_str(&format!("row: {}\n", r.row));
                out.push_str(&format!("aggregate: {}\n", format_sig(r.aggregate)));
                out.push_str(&format!(
                    "weights: {}\n",
                    join_sig_spaced(r.weights.as_slice())
                ));
                out.push_str(&format!("orness: {}\n", format_sig(r.measures.orness)));
                out.push_str(&format!("andness: {}\n", format_sig(r.measures.andness)));
                out.push_str(&format!(
                    "dispersion: {}\n\n",
                    format_sig(r.measures.dispersion)
                ));
            }
        }
    }
    out
}

pub fn render_measures(echo: &str, rows: &[(usize, Measures)], format: OutputFormat) -> String {
    let mut out = header(echo);
    match format {
        OutputFormat::Csv => {
            out.push_str("row,orness,andness,dispersion\n");
            for (row, m) in rows {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    row,
                    format_sig(m.orness),
                    format_sig(m.andness),
                    format_sig(m.dispersion)
                ));
            }
        }
        OutputFormat::Records => {
            for (row, m) in rows {
                out.push_str(&format!("row: {row}\n"));
                out.push_str(&format!("orness: {}\n", format_sig(m.orness)));
                out.push_str(&format!("andness: {}\n", format_sig(m.andness)));
                out.push_str(&format!("dispersion: {}\n\n", format_sig(m.dispersion)));
            }
        }
    }
    out
}

pub fn render_table(
    echo: &str,
    columns: (&str, &str),
    rows: &[(f64, f64)],
    format: OutputFormat,
) -> String {
    let mut out = header(echo);
    match format {
        OutputFormat::Csv => {
            out.push_str(&format!("{},{}\n", columns.0, columns.1));
            for (x, y) in rows {
                out.push_str(&format!("{},{}\n", format_sig(*x), format_sig(*y)));
            }
        }
        OutputFormat::Records => {
            for (x, y) in rows {
                out.push_str(&format!("{}: {}\n", columns.0, format_sig(*x)));
                out.push_str(&format!("{}: {}\n\n", columns.1, format_sig(*y)));
            }
        }
    }
    out
}

fn join_sig(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| format_sig(*v))
        .collect::<Vec<_>>()
        .join(",")
}

fn join_sig_spaced(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| format_sig(*v))
        .collect::<Vec<_>>()
        .join(", ")
}
