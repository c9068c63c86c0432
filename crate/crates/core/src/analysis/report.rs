use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub h: String,
}

/// Numeric measurements serialize as numbers, exact ones as strings.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Measured {
    Number(f64),
    Exact(String),
}

/// Outcome of one identity check at one parameter set.
///
/// For exact identities `abs_dev` counts the differing coefficients, so
/// `pass` is `abs_dev == 0`. For numeric ones it is `|measured - claimed|`
/// against the derived claim.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: ReportParams,
    pub measured: Measured,
    /// claim as printed in the source literature
    #[serde(rename = "claimed_paper")]
    pub claimed_published: String,
    pub claimed_derived: String,
    pub abs_dev: f64,
    pub rel_dev: f64,
    pub tol: f64,
    pub pass: bool,
    /// whether the printed claim also holds, when it differs from the derived one
    #[serde(rename = "paper_match", skip_serializing_if = "Option::is_none")]
    pub published_match: Option<bool>,
}

impl VerificationReport {
    /// Report for an exact identity; `mismatches` is the number of differing coefficients.
    pub fn exact(identity: &str, n: Option<usize>, h: &str, residual: String, mismatches: usize) -> Self {
        Self {
            identity: identity.to_string(),
            params: ReportParams {
                n,
                m: None,
                h: h.to_string(),
            },
            measured: Measured::Exact(residual),
            claimed_published: "0".into(),
            claimed_derived: "0".into(),
            abs_dev: mismatches as f64,
            rel_dev: if mismatches == 0 { 0.0 } else { 1.0 },
            tol: 0.0,
            pass: mismatches == 0,
            published_match: None,
        }
    }
}
