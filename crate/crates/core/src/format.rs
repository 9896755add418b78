//! Text, JSON and CSV renderings of matrices, sequences and recurrences.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::TriMatrix;
use crate::orthopoly::Recurrence;
use crate::production::JacobiParams;
use crate::rational::{self, render, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

/// JSON shape of a matrix: `{name, order, rows}` with rationals as strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub name: String,
    pub order: usize,
    #[serde(with = "rational::serde_str::rows")]
    pub rows: Vec<Vec<Rational>>,
}

impl MatrixDoc {
    pub fn new(name: impl Into<String>, m: &TriMatrix) -> Self {
        MatrixDoc {
            name: name.into(),
            order: m.dim() - 1,
            rows: m.rows().to_vec(),
        }
    }

    pub fn to_matrix(&self) -> Result<TriMatrix> {
        if self.rows.len() != self.order + 1 {
            return Err(Error::DimensionMismatch(self.order + 1, self.rows.len()));
        }
        TriMatrix::from_rows(self.rows.clone())
    }
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

fn from_json<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

pub fn matrix_json(name: &str, m: &TriMatrix) -> String {
    to_json(&MatrixDoc::new(name, m))
}

pub fn parse_matrix_json(s: &str) -> Result<(String, TriMatrix)> {
    let doc: MatrixDoc = from_json(s)?;
    let m = doc.to_matrix()?;
    Ok((doc.name, m))
}

/// CSV text with a header row; fields are quoted only when needed.
pub fn csv_table<I, R>(header: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r.into_iter().collect::<Vec<_>>())
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 fields")
}

/// Header `n,0,1,...`, then one line per row.
pub fn matrix_csv(m: &TriMatrix) -> String {
    let header: Vec<String> = std::iter::once("n".to_string())
        .chain((0..m.dim()).map(|k| k.to_string()))
        .collect();
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    csv_table(
        &header,
        m.rows()
            .iter()
            .enumerate()
            .map(|(n, r)| std::iter::once(n.to_string()).chain(r.iter().map(render))),
    )
}

pub fn render_matrix(name: &str, m: &TriMatrix, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Text => m.to_text(),
        OutputFormat::Json => matrix_json(name, m) + "\n",
        OutputFormat::Csv => matrix_csv(m),
    }
}

#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct SequenceDoc(#[serde(with = "rational::serde_str::vec")] Vec<Rational>);

pub fn sequence_json(seq: &[Rational]) -> String {
    to_json(&SequenceDoc(seq.to_vec()))
}

pub fn parse_sequence_json(s: &str) -> Result<Vec<Rational>> {
    from_json::<SequenceDoc>(s).map(|d| d.0)
}

pub fn render_sequence(seq: &[Rational], fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Text => {
            let parts: Vec<String> = seq.iter().map(render).collect();
            parts.join(", ") + "\n"
        }
        OutputFormat::Json => sequence_json(seq) + "\n",
        OutputFormat::Csv => csv_table(
            &["n", "value"],
            seq.iter()
                .enumerate()
                .map(|(i, v)| [i.to_string(), render(v)]),
        ),
    }
}

pub fn recurrence_json(r: &Recurrence) -> String {
    to_json(r)
}

pub fn parse_recurrence_json(s: &str) -> Result<Recurrence> {
    let r: Recurrence = from_json(s)?;
    Recurrence::new(r.b().to_vec(), r.lambda().to_vec())
}

/// `b` is listed from index 0 and `lambda` from index 1.
pub fn render_recurrence(r: &Recurrence, fmt: OutputFormat) -> String {
    let join = |v: &[Rational]| v.iter().map(render).collect::<Vec<_>>().join(", ");
    match fmt {
        OutputFormat::Text => format!("b = {}\nlambda = {}\n", join(r.b()), join(r.lambda())),
        OutputFormat::Json => recurrence_json(r) + "\n",
        OutputFormat::Csv => {
            let len = r.b().len().max(r.lambda().len() + 1);
            csv_table(
                &["k", "b", "lambda"],
                (0..len).map(|k| {
                    let b = r.b().get(k).map(render).unwrap_or_default();
                    let l = k
                        .checked_sub(1)
                        .and_then(|i| r.lambda().get(i))
                        .map(render)
                        .unwrap_or_default();
                    [k.to_string(), b, l]
                }),
            )
        }
    }
}

pub fn params_json(p: &JacobiParams) -> String {
    to_json(p)
}

#[derive(Serialize)]
struct ProductionDoc {
    matrix: MatrixDoc,
    params: Option<JacobiParams>,
}

/// `{matrix, params}` where `params` is null unless the matrix is tridiagonal.
pub fn production_json(name: &str, p: &TriMatrix, params: Option<&JacobiParams>) -> String {
    to_json(&ProductionDoc {
        matrix: MatrixDoc::new(name, p),
        params: params.cloned(),
    })
}

pub fn params_text(p: &JacobiParams) -> String {
    format!(
        "alpha = {}, beta = {}, gamma = {}, delta = {}",
        render(&p.alpha),
        render(&p.beta),
        render(&p.gamma),
        render(&p.delta)
    )
}

/// Floats rounded to 15 significant digits, printed in shortest form.
pub fn float_cell(v: f64) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    let rounded: f64 = format!("{v:.14e}").parse().expect("valid float");
    let s = format!("{rounded}");
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}
