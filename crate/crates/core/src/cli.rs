//! Command-line front end. Every command renders to a `String`; the binary
//! only prints it.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog::{self, CatalogEntry, SeriesPart};
use crate::error::{Error, Result};
use crate::format::{self, OutputFormat};
use crate::orthopoly::{hankel_transform, jfraction, Recurrence};
use crate::production::{production_definitional, tridiagonal_params};
use crate::rational::{parse_list, Rational};
use crate::riordan::{ExpRiordan, PolynomialFamily};
use crate::series::{Series, DEFAULT_ORDER};

#[derive(Debug, Parser)]
#[command(
    name = "riordan",
    version,
    about = "Exact exponential Riordan arrays for sigmoid pairs"
)]
pub struct Cli {
    /// Truncation order: arrays are rendered as (order+1) x (order+1) blocks.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER)]
    pub order: usize,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Leading block of a catalog array or of [g, f] given as coefficients.
    Array(ArraySpec),
    /// Production matrix and, when tridiagonal, its four parameters.
    Produce(ArraySpec),
    /// Hankel transform of a catalog expansion or an explicit sequence.
    Hankel {
        id: Option<String>,
        /// Comma-separated terms, used instead of a catalog id.
        #[arg(long, conflicts_with = "id")]
        seq: Option<String>,
        /// Last index of the transform.
        #[arg(long, default_value_t = 6)]
        n: usize,
        /// Which member of the pair to expand (EGF coefficients).
        #[arg(long, default_value = "f")]
        series: String,
    },
    /// Moments of the orthogonal family attached to a catalog entry.
    Moments {
        id: String,
        #[arg(long, default_value_t = 8)]
        n: usize,
    },
    /// Row polynomials of an array.
    Poly {
        id: String,
        #[arg(long, default_value_t = 6)]
        n: usize,
        /// Use the inverse array.
        #[arg(long, conflicts_with = "orthogonal")]
        inverse: bool,
        /// Use the orthogonal family attached to the entry.
        #[arg(long)]
        orthogonal: bool,
    },
    /// Jacobi continued fraction of the moment generating function.
    Cf {
        id: String,
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// Sampled values of f and f' as CSV.
    Plotdata {
        id: String,
        #[arg(long, default_value_t = -4.0, allow_hyphen_values = true)]
        t_min: f64,
        #[arg(long, default_value_t = 4.0, allow_hyphen_values = true)]
        t_max: f64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = PlotKind::Curve)]
        kind: PlotKind,
    },
    /// Catalog operations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// List every entry.
    List,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotKind {
    /// Rows (t, f(t), f'(t)).
    Curve,
    /// Rows (f'(t), f(t)).
    Parametric,
}

#[derive(Debug, Args)]
pub struct ArraySpec {
    /// Catalog id.
    pub id: Option<String>,
    /// Coefficients of g, comma-separated.
    #[arg(long, conflicts_with = "id", requires = "f")]
    pub g: Option<String>,
    /// Coefficients of f, comma-separated.
    #[arg(long, conflicts_with = "id", requires = "g")]
    pub f: Option<String>,
    /// Read --g and --f as exponential coefficients.
    #[arg(long)]
    pub egf: bool,
    /// Use the inverse array.
    #[arg(long)]
    pub inverse: bool,
}

/// Parses arguments and runs; clap errors are returned as `Err` text.
pub fn run_from<I, T>(args: I) -> std::result::Result<String, String>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| e.to_string())?;
    run(&cli).map_err(|e| format!("error: {e}"))
}

pub fn run(cli: &Cli) -> Result<String> {
    let order = cli.order;
    let fmt = cli.format;
    match &cli.command {
        Command::Array(spec) => cmd_array(spec, order, fmt),
        Command::Produce(spec) => cmd_produce(spec, order, fmt),
        Command::Hankel { id, seq, n, series } => {
            cmd_hankel(id.as_deref(), seq.as_deref(), *n, series, fmt)
        }
        Command::Moments { id, n } => cmd_moments(id, *n, fmt),
        Command::Poly {
            id,
            n,
            inverse,
            orthogonal,
        } => cmd_poly(id, *n, *inverse, *orthogonal, fmt),
        Command::Cf { id, depth } => cmd_cf(id, *depth, fmt),
        Command::Plotdata {
            id,
            t_min,
            t_max,
            samples,
            kind,
        } => cmd_plotdata(id, *t_min, *t_max, *samples, *kind),
        Command::Catalog {
            action: CatalogAction::List,
        } => Ok(cmd_catalog_list(fmt)),
    }
}

fn spec_series(text: &str, egf: bool, order: usize) -> Result<Series> {
    let coeffs = parse_list(text)?;
    if coeffs.len() > order + 1 {
        return Err(Error::InvalidArgument(format!(
            "{} coefficients given for order {order}",
            coeffs.len()
        )));
    }
    let s = if egf {
        Series::from_egf(coeffs)
    } else {
        Series::from_ogf(coeffs)
    };
    Ok(Series::from_poly(s.coeffs(), order))
}

fn resolve_array(spec: &ArraySpec, order: usize) -> Result<(String, ExpRiordan)> {
    let (name, array) = match (&spec.id, &spec.g, &spec.f) {
        (Some(id), _, _) => (id.clone(), catalog::entry(id)?.array(order)),
        (None, Some(g), Some(f)) => {
            let g = spec_series(g, spec.egf, order)?;
            let f = spec_series(f, spec.egf, order)?;
            ("custom".to_string(), ExpRiordan::build(g, f)?)
        }
        _ => {
            return Err(Error::InvalidArgument(
                "give a catalog id or both --g and --f".into(),
            ))
        }
    };
    if spec.inverse {
        Ok((format!("{name}_inverse"), array.inverse()?))
    } else {
        Ok((name, array))
    }
}

pub fn cmd_array(spec: &ArraySpec, order: usize, fmt: OutputFormat) -> Result<String> {
    let (name, array) = resolve_array(spec, order)?;
    Ok(format::render_matrix(&name, array.matrix(), fmt))
}

/// The production matrix of the order-`order + 1` array, so the rendered block
/// has the same size as `array` at `order`.
pub fn cmd_produce(spec: &ArraySpec, order: usize, fmt: OutputFormat) -> Result<String> {
    let (name, array) = resolve_array(spec, order + 1)?;
    let p = production_definitional(&array)?;
    let params = tridiagonal_params(&p);
    let name = format!("{name}_production");
    Ok(match fmt {
        OutputFormat::Text => {
            let line = match &params {
                Some(p) => format!("tridiagonal: {}", format::params_text(p)),
                None => "not tridiagonal".to_string(),
            };
            format!("{}{line}\n", p.to_text())
        }
        OutputFormat::Json => format::production_json(&name, &p, params.as_ref()) + "\n",
        OutputFormat::Csv => format::matrix_csv(&p),
    })
}

/// EGF coefficients `0..len` of `g` or `f` for a catalog entry.
pub fn expansion(entry: &CatalogEntry, part: SeriesPart, len: usize) -> Vec<Rational> {
    let order = len.saturating_sub(1);
    let s = match part {
        SeriesPart::G => entry.g_series(order),
        SeriesPart::F => entry.f_series(order),
    };
    s.egf()
}

pub fn cmd_hankel(
    id: Option<&str>,
    seq: Option<&str>,
    n: usize,
    series: &str,
    fmt: OutputFormat,
) -> Result<String> {
    let terms = match (id, seq) {
        (_, Some(s)) => parse_list(s)?,
        (Some(id), None) => expansion(catalog::entry(id)?, series.parse()?, 2 * n + 1),
        (None, None) => return Err(Error::InvalidArgument("give a catalog id or --seq".into())),
    };
    let h = hankel_transform(&terms, n)?;
    Ok(format::render_sequence(&h, fmt))
}

fn moment_array(id: &str, order: usize) -> Result<ExpRiordan> {
    catalog::entry(id)?
        .moment_array(order)
        .ok_or_else(|| Error::InvalidArgument(format!("`{id}` has no attached orthogonal family")))
}

pub fn cmd_moments(id: &str, n: usize, fmt: OutputFormat) -> Result<String> {
    let m = moment_array(id, n)?.matrix().column(0);
    Ok(format::render_sequence(&m, fmt))
}

pub fn cmd_poly(
    id: &str,
    n: usize,
    inverse: bool,
    orthogonal: bool,
    fmt: OutputFormat,
) -> Result<String> {
    let array = if orthogonal {
        moment_array(id, n)?.inverse()?
    } else {
        let a = catalog::entry(id)?.array(n);
        if inverse {
            a.inverse()?
        } else {
            a
        }
    };
    let family = PolynomialFamily::from_matrix(array.matrix());
    let polys = family.render();
    Ok(match fmt {
        OutputFormat::Text => polys.join("\n") + "\n",
        OutputFormat::Json => serde_json::to_string(&polys).expect("strings serialize") + "\n",
        OutputFormat::Csv => format::csv_table(
            &["n", "polynomial"],
            polys
                .into_iter()
                .enumerate()
                .map(|(i, p)| [i.to_string(), p]),
        ),
    })
}

/// Recurrence with `depth` values of `b` and of `lambda`.
pub fn continued_fraction(id: &str, depth: usize) -> Result<Recurrence> {
    let m = moment_array(id, 2 * depth)?.matrix().column(0);
    jfraction(&m, depth)
}

pub fn cmd_cf(id: &str, depth: usize, fmt: OutputFormat) -> Result<String> {
    let r = continued_fraction(id, depth)?;
    Ok(format::render_recurrence(&r, fmt))
}

/// Evenly spaced samples including both endpoints.
pub fn plot_rows(
    entry: &CatalogEntry,
    t_min: f64,
    t_max: f64,
    samples: usize,
    kind: PlotKind,
) -> Result<Vec<Vec<f64>>> {
    if t_min.partial_cmp(&t_max) != Some(std::cmp::Ordering::Less) {
        return Err(Error::InvalidArgument(format!(
            "need t-min < t-max, got {t_min} and {t_max}"
        )));
    }
    if samples < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 samples, got {samples}"
        )));
    }
    let step = (t_max - t_min) / (samples - 1) as f64;
    Ok((0..samples)
        .map(|i| {
            let t = if i + 1 == samples {
                t_max
            } else {
                t_min + step * i as f64
            };
            match kind {
                PlotKind::Curve => vec![t, entry.f_eval(t), entry.fprime_eval(t)],
                PlotKind::Parametric => vec![entry.g_eval(t), entry.f_eval(t)],
            }
        })
        .collect())
}

pub fn cmd_plotdata(
    id: &str,
    t_min: f64,
    t_max: f64,
    samples: usize,
    kind: PlotKind,
) -> Result<String> {
    let rows = plot_rows(catalog::entry(id)?, t_min, t_max, samples, kind)?;
    let header: &[&str] = match kind {
        PlotKind::Curve => &["t", "f", "fprime"],
        PlotKind::Parametric => &["g", "f"],
    };
    Ok(format::csv_table(
        header,
        rows.into_iter()
            .map(|r| r.into_iter().map(format::float_cell)),
    ))
}

#[derive(Serialize)]
struct EntryDoc {
    id: &'static str,
    g: &'static str,
    f: &'static str,
    sigmoid: bool,
    notes: &'static str,
}

pub fn cmd_catalog_list(fmt: OutputFormat) -> String {
    let docs: Vec<EntryDoc> = catalog::entries()
        .iter()
        .map(|e| EntryDoc {
            id: e.name(),
            g: e.g_label,
            f: e.f_label,
            sigmoid: e.sigmoid,
            notes: e.notes,
        })
        .collect();
    match fmt {
        OutputFormat::Json => serde_json::to_string(&docs).expect("plain data serializes") + "\n",
        OutputFormat::Csv => format::csv_table(
            &["id", "g", "f", "sigmoid", "notes"],
            docs.iter().map(|d| {
                [
                    d.id,
                    d.g,
                    d.f,
                    if d.sigmoid { "true" } else { "false" },
                    d.notes,
                ]
                .map(String::from)
            }),
        ),
        OutputFormat::Text => {
            let w_id = docs.iter().map(|d| d.id.len()).max().unwrap_or(0);
            let w_g = docs.iter().map(|d| d.g.len()).max().unwrap_or(0);
            let w_f = docs.iter().map(|d| d.f.len()).max().unwrap_or(0);
            let mut out = String::new();
            for d in &docs {
                let line = format!("{:<w_id$}  {:<w_g$}  {:<w_f$}  {}", d.id, d.g, d.f, d.notes);
                out.push_str(line.trim_end());
                out.push('\n');
            }
            out
        }
    }
}
