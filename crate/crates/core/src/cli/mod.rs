//! The `defml` command line: `coeffs`, `verify`, `zeros` and `quad`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 numeric non-convergence.

mod output;

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::analysis::{
    g_zeros_with_residuals, gauss_rule, moment_check, phi_zeros_with_residuals,
};
use crate::error::Error;
use crate::exact_arith::rational::{self, Rational};
use crate::families::{by_recurrence, FamilyKind};
use crate::verify::{run_suite, Suite, VerifyConfig};

pub use output::{CoeffRow, Format, NodeRow, OutputDocument, Payload, ZeroRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "defml", version, about = "Deformed Mittag-Leffler polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct Common {
    /// json or csv
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// write the document here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficient table of a family.
    Coeffs {
        #[arg(long, default_value = "g")]
        family: String,
        #[arg(long, default_value_t = 20)]
        n: usize,
        /// exact rational such as 3/2, or `sym`
        #[arg(long, default_value = "sym")]
        h: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run identity suites.
    Verify {
        /// recurrences, genfun, hyper, hdiff, orthogonality or all
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 20)]
        n: usize,
        /// comma-separated values; rationals feed the exact and numeric suites, `sym` is implied for exact ones
        #[arg(long, default_value = "1")]
        h: String,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Zeros of phi-monic (real) or g (imaginary axis).
    Zeros {
        #[arg(long, default_value = "phi-monic")]
        family: String,
        #[arg(long, default_value_t = 20)]
        n: usize,
        #[arg(long, default_value = "1")]
        h: String,
        #[command(flatten)]
        common: Common,
    },
    /// Gauss rule for the weight y / sinh(pi y / h).
    Quad {
        #[arg(long, default_value_t = 20)]
        n: usize,
        #[arg(long, default_value = "1")]
        h: String,
        /// check moments up to this degree (default 2n-1)
        #[arg(long)]
        check_degree: Option<usize>,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[command(flatten)]
        common: Common,
    },
}

/// Value of `--h`.
#[derive(Debug, Clone, PartialEq)]
pub enum HValue {
    Symbolic,
    Exact(Rational),
    Float(f64),
}

impl HValue {
    pub fn parse(s: &str, allow_float: bool) -> Result<HValue, String> {
        let s = s.trim();
        if s == "sym" {
            return Ok(HValue::Symbolic);
        }
        if let Ok(r) = rational::parse_rational(s) {
            return Ok(HValue::Exact(r));
        }
        if allow_float {
            if let Ok(x) = s.parse::<f64>() {
                if x.is_finite() {
                    return Ok(HValue::Float(x));
                }
            }
        }
        Err(format!("invalid h literal {s:?}"))
    }

    fn numeric(&self) -> Option<f64> {
        match self {
            HValue::Symbolic => None,
            HValue::Exact(r) => Some(rational::to_f64(r)),
            HValue::Float(x) => Some(*x),
        }
    }

    fn label(&self) -> String {
        match self {
            HValue::Symbolic => "sym".into(),
            HValue::Exact(r) => r.to_string(),
            HValue::Float(x) => format!("{x}"),
        }
    }
}

/// A finished command: the document, its exit code and, on failure, a
/// message for stderr.
#[derive(Debug)]
pub struct Outcome {
    pub document: OutputDocument,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub exit_code: i32,
    pub message: Option<String>,
}

#[derive(Debug)]
pub struct Failure {
    pub exit_code: i32,
    pub message: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        exit_code: EXIT_USAGE,
        message: msg.into(),
    }
}

fn from_error(e: Error) -> Failure {
    let exit_code = match e {
        Error::InvalidArgument(_) | Error::Domain(_) => EXIT_USAGE,
        Error::NonConvergence { .. } | Error::Eigen(_) => EXIT_NUMERIC,
        _ => EXIT_VERIFY_FAILED,
    };
    Failure {
        exit_code,
        message: e.to_string(),
    }
}

fn params(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn positive_h(h: &HValue) -> Result<f64, Failure> {
    match h.numeric() {
        Some(x) if x > 0.0 => Ok(x),
        _ => Err(usage(format!("h must be a positive number, got {}", h.label()))),
    }
}

pub fn cmd_coeffs(family: FamilyKind, n_max: usize, h: &HValue) -> Result<OutputDocument, Failure> {
    let seq = by_recurrence(family, n_max);
    let mut rows = Vec::new();
    for (n, p) in seq.members.iter().enumerate() {
        let deg = p.deg_y().unwrap_or(0);
        for k in 0..=deg {
            let c = p.y_coeff(k);
            let text = match h {
                HValue::Symbolic => c.to_string(),
                HValue::Exact(hv) => c.specialize_h(hv).as_constant().expect("h-free").to_string(),
                HValue::Float(_) => return Err(usage("coeffs needs h = sym or an exact rational")),
            };
            if text != "0" {
                rows.push(CoeffRow { n, y_power: k, coeff: text });
            }
        }
    }
    Ok(OutputDocument::new(
        "coeffs",
        params(&[
            ("family", json!(family.as_str())),
            ("n", json!(n_max)),
            ("h", json!(h.label())),
        ]),
        &["recurrence"],
        Payload::Coefficients { rows },
    ))
}

/// Returns the document and whether every check passed.
pub fn cmd_verify(suite: Suite, n_max: usize, hs: &[HValue], tol: f64) -> Result<(OutputDocument, bool, Option<String>), Failure> {
    if !(tol > 0.0) {
        return Err(usage("tol must be positive"));
    }
    let mut cfg = VerifyConfig {
        n_max,
        h_exact: Vec::new(),
        h_numeric: Vec::new(),
        tol,
    };
    for h in hs {
        match h {
            HValue::Symbolic => {}
            HValue::Exact(r) => {
                if num_traits::Zero::is_zero(r) {
                    return Err(usage("h must be nonzero"));
                }
                cfg.h_exact.push(r.clone());
                let x = rational::to_f64(r);
                if x > 0.0 {
                    cfg.h_numeric.push(x);
                }
            }
            HValue::Float(x) => {
                if *x > 0.0 {
                    cfg.h_numeric.push(*x);
                }
            }
        }
    }
    if cfg.h_exact.is_empty() {
        cfg.h_exact.push(rational::int(1));
    }
    if cfg.h_numeric.is_empty() {
        cfg.h_numeric.push(1.0);
    }
    let outcome = run_suite(suite, &cfg).map_err(from_error)?;
    let passed = outcome.passed();
    let message = if passed {
        None
    } else if let Some(r) = outcome.first_failure() {
        Some(format!(
            "first counterexample: {} n={:?} m={:?} h={} measured={:?} claimed={}",
            r.identity, r.params.n, r.params.m, r.params.h, r.measured, r.claimed_derived
        ))
    } else {
        Some("verification incomplete".into())
    };
    let message = match (message, diagonal_summary(&outcome.reports)) {
        (Some(a), Some(b)) => Some(format!("{a}\n{b}")),
        (a, b) => a.or(b),
    };
    let mut provenance = Vec::new();
    if matches!(suite, Suite::Recurrences | Suite::All) {
        provenance.extend(["recurrence", "convolution", "transform"]);
    }
    if matches!(suite, Suite::Genfun | Suite::All) {
        provenance.push("genfun");
    }
    if matches!(suite, Suite::Hyper | Suite::All) {
        provenance.push("hypergeometric");
    }
    if matches!(suite, Suite::Hdiff | Suite::All) {
        provenance.push("h-difference");
    }
    if matches!(suite, Suite::Orthogonality | Suite::All) {
        provenance.extend(["tanh-sinh", "closed-form-moments"]);
    }
    let labels: Vec<String> = hs.iter().map(HValue::label).collect();
    let doc = OutputDocument::new(
        "verify",
        params(&[
            ("suite", json!(suite.to_string())),
            ("n", json!(n_max)),
            ("h", json!(labels)),
            ("tol", json!(tol)),
            ("short_circuited", json!(outcome.short_circuited)),
        ]),
        &provenance,
        Payload::Reports {
            reports: outcome.reports,
        },
    );
    Ok((doc, passed, message))
}

/// Which diagonal constant matched, e.g. `derived 9/9, paper 3/9`.
pub fn diagonal_summary(reports: &[crate::analysis::VerificationReport]) -> Option<String> {
    let diag: Vec<_> = reports
        .iter()
        .filter(|r| r.identity == crate::analysis::ORTHOGONALITY_ID && r.params.n == r.params.m)
        .collect();
    if diag.is_empty() {
        return None;
    }
    let derived = diag.iter().filter(|r| r.pass).count();
    let paper = diag.iter().filter(|r| r.published_match == Some(true)).count();
    Some(format!(
        "orthogonality diagonal: derived constant 2h^(2n+2)/(n+1) matched {derived}/{total}, paper constant 2h^(2n)/(n+1) matched {paper}/{total}",
        total = diag.len()
    ))
}

pub fn cmd_zeros(family: FamilyKind, n: usize, h: &HValue) -> Result<OutputDocument, Failure> {
    if n == 0 {
        return Err(usage("n must be >= 1"));
    }
    let hv = positive_h(h)?;
    let rows: Vec<ZeroRow> = match family {
        FamilyKind::PhiMonic => phi_zeros_with_residuals(n, hv)
            .map_err(from_error)?
            .into_iter()
            .enumerate()
            .map(|(index, z)| ZeroRow {
                index,
                re: z.value,
                im: 0.0,
                residual: z.residual,
                scaled_residual: z.scaled_residual,
            })
            .collect(),
        FamilyKind::G => g_zeros_with_residuals(n, hv)
            .map_err(from_error)?
            .into_iter()
            .enumerate()
            .map(|(index, z)| ZeroRow {
                index,
                re: z.value.re,
                im: z.value.im,
                residual: z.residual,
                scaled_residual: z.scaled_residual,
            })
            .collect(),
        other => return Err(usage(format!("zeros supports phi-monic and g, not {other}"))),
    };
    Ok(OutputDocument::new(
        "zeros",
        params(&[
            ("family", json!(family.as_str())),
            ("n", json!(n)),
            ("h", json!(h.label())),
        ]),
        &["jacobi-ql", "sturm-bisection", "exact-residual"],
        Payload::Zeros { rows },
    ))
}

/// Returns the document and whether the moment checks passed.
pub fn cmd_quad(n: usize, h: &HValue, check_degree: usize, tol: f64) -> Result<(OutputDocument, bool), Failure> {
    if n == 0 {
        return Err(usage("n must be >= 1"));
    }
    let hv = positive_h(h)?;
    let rule = gauss_rule(n, hv).map_err(from_error)?;
    let checks = moment_check(&rule, hv, check_degree, tol).map_err(from_error)?;
    let passed = checks.iter().all(|r| r.pass);
    let rows = rule
        .nodes
        .iter()
        .zip(&rule.weights)
        .enumerate()
        .map(|(index, (&node, &weight))| NodeRow { index, node, weight })
        .collect();
    let doc = OutputDocument::new(
        "quad",
        params(&[
            ("n", json!(n)),
            ("h", json!(h.label())),
            ("check_degree", json!(check_degree)),
            ("tol", json!(tol)),
        ]),
        &["jacobi-ql", "sturm-bisection", "closed-form-moments"],
        Payload::Rule { rows, checks },
    );
    Ok((doc, passed))
}

fn parse_family(s: &str) -> Result<FamilyKind, Failure> {
    s.parse().map_err(|e: Error| usage(e.to_string()))
}

/// Run a parsed command line.
pub fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    let (document, common, exit_code, message) = match &cli.command {
        Command::Coeffs { family, n, h, common } => {
            let h = HValue::parse(h, false).map_err(usage)?;
            (cmd_coeffs(parse_family(family)?, *n, &h)?, common, EXIT_OK, None)
        }
        Command::Verify { suite, n, h, tol, common } => {
            let suite: Suite = suite.parse().map_err(|e: Error| usage(e.to_string()))?;
            let hs = h
                .split(',')
                .map(|s| HValue::parse(s, true))
                .collect::<Result<Vec<_>, _>>()
                .map_err(usage)?;
            let (doc, passed, msg) = cmd_verify(suite, *n, &hs, *tol)?;
            let code = if passed { EXIT_OK } else { EXIT_VERIFY_FAILED };
            (doc, common, code, msg)
        }
        Command::Zeros { family, n, h, common } => {
            let h = HValue::parse(h, true).map_err(usage)?;
            (cmd_zeros(parse_family(family)?, *n, &h)?, common, EXIT_OK, None)
        }
        Command::Quad { n, h, check_degree, tol, common } => {
            let h = HValue::parse(h, true).map_err(usage)?;
            let degree = check_degree.unwrap_or(2 * n.max(&1) - 1);
            let (doc, passed) = cmd_quad(*n, &h, degree, *tol)?;
            let code = if passed { EXIT_OK } else { EXIT_VERIFY_FAILED };
            let msg = (!passed).then(|| "moment check failed".to_string());
            (doc, common, code, msg)
        }
    };
    Ok(Outcome {
        document,
        format: common.format,
        out: common.out.clone(),
        exit_code,
        message,
    })
}

/// Entry point for the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let written = match &outcome.out {
                Some(path) => File::create(path).and_then(|mut f| outcome.document.write_to(outcome.format, &mut f)),
                None => {
                    let stdout = io::stdout();
                    let mut lock = stdout.lock();
                    outcome
                        .document
                        .write_to(outcome.format, &mut lock)
                        .and_then(|_| lock.flush())
                }
            };
            if let Err(e) = written {
                eprintln!("defml: {e}");
                return EXIT_USAGE;
            }
            if let Some(msg) = outcome.message {
                eprintln!("defml: {msg}");
            }
            outcome.exit_code
        }
        Err(f) => {
            eprintln!("defml: {}", f.message);
            f.exit_code
        }
    }
}
