//! Structured outcome of a single verification.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::rational::Rational;

/// Outcome status of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The stated precondition (usually a lower bound on the prime) does not
    /// hold for these parameters; nothing was decided.
    HypothesisViolated,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "pass"),
            CheckStatus::Fail => write!(f, "fail"),
            CheckStatus::HypothesisViolated => write!(f, "hypothesis_violated"),
        }
    }
}

/// Integer-valued parameters, ordered by name for deterministic output.
pub type Params = BTreeMap<String, i64>;

/// Builds a parameter map from name/value pairs.
pub fn params(pairs: &[(&str, i64)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

/// Report of one verification: the check id, its parameters, the decision,
/// and both sides in canonical textual form (exact coefficient lists,
/// lowest degree first) so diffs are bit-reproducible.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub params: Params,
    pub status: CheckStatus,
    pub lhs: String,
    pub rhs: String,
    #[serde(
        rename = "elapsed_ms",
        serialize_with = "ser_ms",
        deserialize_with = "de_ms"
    )]
    pub elapsed: Duration,
}

fn ser_ms<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

fn de_ms<'de, D: serde::Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
    let ms = f64::deserialize(d)?;
    Ok(Duration::from_secs_f64(ms / 1e3))
}

impl CheckReport {
    /// Compares two canonical forms; pass exactly when they are equal.
    pub fn from_sides<L: fmt::Display, R: fmt::Display>(
        check_id: impl Into<String>,
        params: Params,
        lhs: &L,
        rhs: &R,
        equal: bool,
        started: Instant,
    ) -> Self {
        CheckReport {
            check_id: check_id.into(),
            params,
            status: if equal {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            elapsed: started.elapsed(),
        }
    }

    /// Compares two values of the same comparable type.
    pub fn compare<T: PartialEq + fmt::Display>(
        check_id: impl Into<String>,
        params: Params,
        lhs: &T,
        rhs: &T,
        started: Instant,
    ) -> Self {
        let equal = lhs == rhs;
        CheckReport::from_sides(check_id, params, lhs, rhs, equal, started)
    }

    pub fn hypothesis_violated(
        check_id: impl Into<String>,
        params: Params,
        started: Instant,
    ) -> Self {
        CheckReport {
            check_id: check_id.into(),
            params,
            status: CheckStatus::HypothesisViolated,
            lhs: String::new(),
            rhs: String::new(),
            elapsed: started.elapsed(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.status, self.check_id)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        write!(f, " ({:.3}ms)", self.elapsed.as_secs_f64() * 1e3)?;
        if self.status == CheckStatus::Fail {
            write!(f, "\n  lhs: {}\n  rhs: {}", self.lhs, self.rhs)?;
        }
        Ok(())
    }
}

/// A q-free constant extracted from a cyclic-sum residue, or an interpolated
/// polynomial value, together with the parameters it was observed at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtractedConstant {
    pub p: u32,
    pub r: u32,
    pub t: u32,
    pub d: Vec<u32>,
    pub value: Rational,
}

impl fmt::Display for ExtractedConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "N(p={}, r={}, t={}, d={:?}) = {}",
            self.p, self.r, self.t, self.d, self.value
        )
    }
}
