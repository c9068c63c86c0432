use std::io::Write;

use serde::Serialize;

use crate::analysis::{Measured, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoeffRow {
    pub n: usize,
    pub y_power: u32,
    /// exact rational, or a polynomial in `h` when `h` is symbolic
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroRow {
    pub index: usize,
    pub re: f64,
    pub im: f64,
    pub residual: f64,
    pub scaled_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NodeRow {
    pub index: usize,
    pub node: f64,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Payload {
    Coefficients { rows: Vec<CoeffRow> },
    Zeros { rows: Vec<ZeroRow> },
    Rule { rows: Vec<NodeRow>, checks: Vec<VerificationReport> },
    Reports { reports: Vec<VerificationReport> },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputDocument {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub params: serde_json::Map<String, serde_json::Value>,
    pub provenance: Vec<String>,
    pub payload: Payload,
}

impl OutputDocument {
    pub fn new(command: &str, params: serde_json::Map<String, serde_json::Value>, provenance: &[&str], payload: Payload) -> Self {
        Self {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            params,
            provenance: provenance.iter().map(|s| s.to_string()).collect(),
            payload,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("document serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
        }
    }

    fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        match &self.payload {
            Payload::Coefficients { rows } => {
                w.write_record(["n", "y_power", "coeff"]).unwrap();
                for r in rows {
                    w.write_record([r.n.to_string(), r.y_power.to_string(), r.coeff.clone()]).unwrap();
                }
            }
            Payload::Zeros { rows } => {
                w.write_record(["index", "re", "im", "residual", "scaled_residual"]).unwrap();
                for r in rows {
                    w.write_record([
                        r.index.to_string(),
                        num(r.re),
                        num(r.im),
                        num(r.residual),
                        num(r.scaled_residual),
                    ])
                    .unwrap();
                }
            }
            Payload::Rule { rows, checks } => {
                w.write_record(["index", "node", "weight"]).unwrap();
                for r in rows {
                    w.write_record([r.index.to_string(), num(r.node), num(r.weight)]).unwrap();
                }
                let mut out = String::from_utf8(w.into_inner().unwrap()).unwrap();
                out.push('\n');
                out.push_str(&reports_csv(checks));
                return out;
            }
            Payload::Reports { reports } => return reports_csv(reports),
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }

    pub fn write_to(&self, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        out.write_all(self.render(format).as_bytes())
    }
}

/// Same text as the JSON serializer emits for a number.
fn num(x: f64) -> String {
    serde_json::to_string(&x).expect("f64 serializes")
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn reports_csv(reports: &[VerificationReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "identity",
        "n",
        "m",
        "h",
        "measured",
        "claimed_paper",
        "claimed_derived",
        "abs_dev",
        "rel_dev",
        "tol",
        "pass",
        "paper_match",
    ])
    .unwrap();
    for r in reports {
        let measured = match &r.measured {
            Measured::Number(x) => num(*x),
            Measured::Exact(s) => s.clone(),
        };
        w.write_record([
            r.identity.clone(),
            opt(r.params.n),
            opt(r.params.m),
            r.params.h.clone(),
            measured,
            r.claimed_published.clone(),
            r.claimed_derived.clone(),
            num(r.abs_dev),
            num(r.rel_dev),
            num(r.tol),
            r.pass.to_string(),
            opt(r.published_match),
        ])
        .unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}
