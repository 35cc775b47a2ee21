//! The output document shared by every subcommand, and its three renderings.

use std::io::{self, Write};

use clap::ValueEnum;
use riordan_tp::exact::{self, Scalar};
use riordan_tp::{CheckOutcome, Witness};
use serde::Serialize;
use serde_json::{Map, Value};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Serialize)]
pub struct Document {
    pub schema: u32,
    pub command: Vec<String>,
    pub parameters: Map<String, Value>,
    pub result: Payload,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Triangle {
        rows: Vec<Vec<String>>,
    },
    Sequence {
        values: Vec<String>,
    },
    Check {
        check: String,
        holds: bool,
        details: Map<String, Value>,
        witness: Option<WitnessDoc>,
    },
}

#[derive(Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum WitnessDoc {
    Minor {
        matrix: String,
        rows: Vec<usize>,
        cols: Vec<usize>,
        value: String,
    },
    Pair {
        row: Option<usize>,
        i: usize,
        j: usize,
    },
    RootCount {
        degree: usize,
        real_roots: usize,
    },
    Entry {
        row: usize,
        col: usize,
        expected: String,
        actual: String,
    },
    NotInWindow {
        window: usize,
    },
}

impl From<&Witness> for WitnessDoc {
    fn from(w: &Witness) -> Self {
        match w {
            Witness::Minor { matrix, minor } => WitnessDoc::Minor {
                matrix: matrix.to_string(),
                rows: minor.rows.clone(),
                cols: minor.cols.clone(),
                value: exact::render(&minor.value),
            },
            Witness::Pair { row, i, j } => WitnessDoc::Pair {
                row: *row,
                i: *i,
                j: *j,
            },
            Witness::RootCount { degree, real_roots } => WitnessDoc::RootCount {
                degree: *degree,
                real_roots: *real_roots,
            },
            Witness::Entry(m) => WitnessDoc::Entry {
                row: m.row,
                col: m.col,
                expected: exact::render(&m.expected),
                actual: exact::render(&m.actual),
            },
            Witness::NotInWindow { window } => WitnessDoc::NotInWindow { window: *window },
        }
    }
}

impl WitnessDoc {
    fn fields(&self) -> Vec<(&'static str, String)> {
        let idx = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        match self {
            WitnessDoc::Minor {
                matrix,
                rows,
                cols,
                value,
            } => vec![
                ("type", "minor".into()),
                ("matrix", matrix.clone()),
                ("rows", idx(rows)),
                ("cols", idx(cols)),
                ("value", value.clone()),
            ],
            WitnessDoc::Pair { row, i, j } => {
                let mut out = vec![("type", "pair".to_string())];
                if let Some(r) = row {
                    out.push(("row", r.to_string()));
                }
                out.push(("i", i.to_string()));
                out.push(("j", j.to_string()));
                out
            }
            WitnessDoc::RootCount { degree, real_roots } => vec![
                ("type", "root-count".into()),
                ("degree", degree.to_string()),
                ("real_roots", real_roots.to_string()),
            ],
            WitnessDoc::Entry {
                row,
                col,
                expected,
                actual,
            } => vec![
                ("type", "entry".into()),
                ("row", row.to_string()),
                ("col", col.to_string()),
                ("expected", expected.clone()),
                ("actual", actual.clone()),
            ],
            WitnessDoc::NotInWindow { window } => vec![
                ("type", "not-in-window".into()),
                ("window", window.to_string()),
            ],
        }
    }
}

pub fn pairs_to_map(pairs: &[(String, String)]) -> Map<String, Value> {
    pairs
        .iter()
        .map(|(k, v)| (k.clone(), Value::String(v.clone())))
        .collect()
}

pub fn render_all(values: &[Scalar]) -> Vec<String> {
    values.iter().map(exact::render).collect()
}

pub fn check_payload(check: &str, outcome: &CheckOutcome) -> Payload {
    Payload::Check {
        check: check.to_string(),
        holds: outcome.holds,
        details: pairs_to_map(&outcome.details),
        witness: outcome.witness.as_ref().map(WitnessDoc::from),
    }
}

fn as_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

impl Document {
    /// Parameters followed by the details that do not merely repeat them.
    fn facts<'a>(&'a self, details: &'a Map<String, Value>) -> Vec<(&'a str, String)> {
        let repeated = |k: &String, v: &Value| self.parameters.get(k) == Some(v);
        self.parameters
            .iter()
            .chain(details.iter().filter(|&(k, v)| !repeated(k, v)))
            .map(|(k, v)| (k.as_str(), as_text(v)))
            .collect()
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)
            }
            Format::Plain => self.write_plain(out),
            Format::Csv => self.write_csv(out),
        }
    }

    fn write_plain(&self, out: &mut impl Write) -> io::Result<()> {
        match &self.result {
            Payload::Triangle { rows } => {
                for row in rows {
                    writeln!(out, "{}", row.join(" "))?;
                }
            }
            Payload::Sequence { values } => writeln!(out, "{}", values.join(" "))?,
            Payload::Check {
                check,
                holds,
                details,
                witness,
            } => {
                writeln!(out, "{check}: {}", if *holds { "holds" } else { "fails" })?;
                for (k, v) in self.facts(details) {
                    writeln!(out, "{k}: {v}")?;
                }
                if let Some(w) = witness {
                    writeln!(out, "witness:")?;
                    for (k, v) in w.fields() {
                        writeln!(out, "  {k}: {v}")?;
                    }
                }
            }
        }
        Ok(())
    }

    fn write_csv(&self, out: &mut impl Write) -> io::Result<()> {
        let mut w = csv::WriterBuilder::new()
            .flexible(true)
            .quote_style(csv::QuoteStyle::NonNumeric)
            .from_writer(out);
        match &self.result {
            Payload::Triangle { rows } => {
                for row in rows {
                    w.write_record(row)?;
                }
            }
            Payload::Sequence { values } => w.write_record(values)?,
            Payload::Check {
                check,
                holds,
                details,
                witness,
            } => {
                w.write_record(["field", "value"])?;
                w.write_record(["check", check.as_str()])?;
                w.write_record(["holds", if *holds { "true" } else { "false" }])?;
                for (k, v) in self.facts(details) {
                    w.write_record([k, &v])?;
                }
                if let Some(wit) = witness {
                    for (k, v) in wit.fields() {
                        w.write_record([format!("witness.{k}"), v])?;
                    }
                }
            }
        }
        w.flush()
    }
}
