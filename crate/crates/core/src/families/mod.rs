//! The four polynomial families, each generated by its three-term
//! recurrence and cross-checked against independent constructions.
//!
//! All members keep `h` symbolic. `g` is the deformed Mittag-Leffler
//! family, `phi` the associated real family
//! `phi_n(y) = g_{n+1}(i y) / (i^{n+1} y)`, and the `*_monic` kinds their
//! rescalings to unit leading coefficient.

mod g;
mod hyper;
mod phi;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::rational::{self, Rational};
use crate::exact_arith::{BivarPoly, Parity};

pub use g::{g_by_convolution, g_by_genfun, g_by_recurrence, g_monic_by_recurrence};
pub use hyper::g_hypergeometric;
pub use phi::{
    phi_by_genfun, phi_by_recurrence, phi_from_g, phi_from_g_sequence, phi_monic_by_recurrence,
    phi_monic_genfun, phi_monic_genfun_series, power_prefactor_monic_egf,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyKind {
    #[serde(rename = "g")]
    G,
    #[serde(rename = "g-monic")]
    GMonic,
    #[serde(rename = "phi")]
    Phi,
    #[serde(rename = "phi-monic")]
    PhiMonic,
}

impl FamilyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::G => "g",
            FamilyKind::GMonic => "g-monic",
            FamilyKind::Phi => "phi",
            FamilyKind::PhiMonic => "phi-monic",
        }
    }

    /// Factor `c_n` with `monic_n = c_n * member_n`: `n!/2^n` for g and
    /// `(n+1)!/2^(n+1)` for phi.
    pub fn monic_factor(self, n: usize) -> Result<Rational> {
        let n = n as u64;
        match self {
            FamilyKind::G => Ok(rational::factorial(n) / rational::pow(&rational::int(2), n as u32)),
            FamilyKind::Phi => Ok(rational::factorial(n + 1)
                / rational::pow(&rational::int(2), n as u32 + 1)),
            other => Err(Error::InvalidArgument(format!(
                "{} is already monic",
                other.as_str()
            ))),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "g" => Ok(FamilyKind::G),
            "g-monic" | "g_monic" => Ok(FamilyKind::GMonic),
            "phi" => Ok(FamilyKind::Phi),
            "phi-monic" | "phi_monic" => Ok(FamilyKind::PhiMonic),
            _ => Err(Error::InvalidArgument(format!("unknown family {s:?}"))),
        }
    }
}

/// How a sequence was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Recurrence,
    Convolution,
    Genfun,
    Transform,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Recurrence => "recurrence",
            Provenance::Convolution => "convolution",
            Provenance::Genfun => "genfun",
            Provenance::Transform => "transform",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FamilySequence {
    pub kind: FamilyKind,
    pub members: Vec<BivarPoly>,
    pub provenance: Provenance,
}

impl FamilySequence {
    pub fn n_max(&self) -> usize {
        self.members.len().saturating_sub(1)
    }

    pub fn member(&self, n: usize) -> &BivarPoly {
        &self.members[n]
    }

    /// Degree `n` in `y`, parity `(-1)^n` and even powers of `h` only, for every member.
    pub fn check_invariants(&self) -> Result<()> {
        for (n, p) in self.members.iter().enumerate() {
            if p.deg_y() != Some(n as u32) {
                return Err(Error::Consistency(format!(
                    "{} member {n} has y-degree {:?}",
                    self.kind,
                    p.deg_y()
                )));
            }
            let want = if n % 2 == 0 { Parity::Even } else { Parity::Odd };
            if p.parity_y() != want {
                return Err(Error::Consistency(format!(
                    "{} member {n} has parity {:?}",
                    self.kind,
                    p.parity_y()
                )));
            }
            if !p.is_even_in_h() {
                return Err(Error::Consistency(format!(
                    "{} member {n} contains an odd power of h",
                    self.kind
                )));
            }
        }
        Ok(())
    }

    /// Index of the first member differing from `other`, if any.
    pub fn first_mismatch(&self, other: &FamilySequence) -> Option<usize> {
        let n = self.members.len().min(other.members.len());
        (0..n)
            .find(|&i| self.members[i] != other.members[i])
            .or(if self.members.len() != other.members.len() {
                Some(n)
            } else {
                None
            })
    }
}

/// Rescale a `g` or `phi` sequence to unit leading coefficients.
pub fn to_monic(seq: &FamilySequence) -> Result<FamilySequence> {
    let kind = match seq.kind {
        FamilyKind::G => FamilyKind::GMonic,
        FamilyKind::Phi => FamilyKind::PhiMonic,
        other => {
            return Err(Error::InvalidArgument(format!(
                "to_monic expects g or phi, got {other}"
            )))
        }
    };
    let members = seq
        .members
        .iter()
        .enumerate()
        .map(|(n, p)| Ok(p.scale(&seq.kind.monic_factor(n)?)))
        .collect::<Result<Vec<_>>>()?;
    for (n, p) in members.iter().enumerate() {
        if p.leading_y_coeff() != BivarPoly::one() {
            return Err(Error::Consistency(format!(
                "monic member {n} has leading coefficient {}",
                p.leading_y_coeff()
            )));
        }
    }
    Ok(FamilySequence {
        kind,
        members,
        provenance: seq.provenance,
    })
}

/// Generate any family by its recurrence.
pub fn by_recurrence(kind: FamilyKind, n_max: usize) -> FamilySequence {
    match kind {
        FamilyKind::G => g_by_recurrence(n_max),
        FamilyKind::GMonic => g_monic_by_recurrence(n_max),
        FamilyKind::Phi => phi_by_recurrence(n_max),
        FamilyKind::PhiMonic => phi_monic_by_recurrence(n_max),
    }
}
