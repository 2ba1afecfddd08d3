//! Structured outcome of a single verification.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_ring::Ratio;
use crate::tensor::PolyMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

/// Where and how a check failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub relation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub row: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub col: Option<usize>,
    pub lhs: String,
    pub rhs: String,
}

impl Failure {
    pub fn new(relation: impl Into<String>) -> Self {
        Self { relation: relation.into(), row: None, col: None, lhs: String::new(), rhs: String::new() }
    }

    /// Locates the first differing entry of `lhs` and `rhs`.
    pub fn from_matrices(relation: impl Into<String>, lhs: &PolyMatrix, rhs: &PolyMatrix) -> Self {
        let mut f = Self::new(relation);
        if let Some((r, c, a, b)) = PolyMatrix::first_difference(lhs, rhs) {
            f.row = Some(r);
            f.col = Some(c);
            f.lhs = a.to_string();
            f.rhs = b.to_string();
        }
        f
    }

    pub fn with_values(mut self, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        self.lhs = lhs.into();
        self.rhs = rhs.into();
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degrees: Option<(i32, i32)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub details: BTreeMap<String, String>,
}

impl CheckReport {
    fn new(check: impl Into<String>, status: Status) -> Self {
        Self {
            check: check.into(),
            params: BTreeMap::new(),
            status,
            ratio: None,
            degrees: None,
            first_failure: None,
            elapsed_ms: None,
            details: BTreeMap::new(),
        }
    }

    pub fn pass(check: impl Into<String>) -> Self {
        Self::new(check, Status::Pass)
    }

    pub fn info(check: impl Into<String>) -> Self {
        Self::new(check, Status::Info)
    }

    pub fn fail(check: impl Into<String>, failure: Failure) -> Self {
        let mut r = Self::new(check, Status::Fail);
        r.first_failure = Some(failure);
        r
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn with_ratio(mut self, ratio: &Ratio) -> Self {
        self.ratio = Some(ratio.to_string());
        self
    }

    pub fn with_degrees(mut self, span: Option<(i32, i32)>) -> Self {
        self.degrees = span;
        self
    }

    pub fn with_detail(mut self, key: impl Into<String>, value: impl fmt::Display) -> Self {
        self.details.insert(key.into(), value.to_string());
        self
    }

    pub fn with_params(mut self, params: BTreeMap<String, String>) -> Self {
        self.params = params;
        self
    }

    pub fn with_param(mut self, key: impl Into<String>, value: impl fmt::Display) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }

    /// Turns a failed report into a [`Error::RelationFailure`].
    pub fn into_result(self) -> Result<Self> {
        match (&self.status, &self.first_failure) {
            (Status::Fail, Some(f)) => Err(Error::RelationFailure {
                relation: f.relation.clone(),
                site: match (f.row, f.col) {
                    (Some(r), Some(c)) => format!("entry ({r},{c})"),
                    _ => self.check.clone(),
                },
            }),
            (Status::Fail, None) => Err(Error::RelationFailure {
                relation: self.check.clone(),
                site: "unknown".into(),
            }),
            _ => Ok(self),
        }
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        };
        let mut s = format!("{status} {}", self.check);
        if let Some(r) = &self.ratio {
            s.push_str(&format!("  ratio={r}"));
        }
        if let Some(f) = &self.first_failure {
            s.push_str(&format!("  [{}", f.relation));
            if let (Some(r), Some(c)) = (f.row, f.col) {
                s.push_str(&format!(" at ({r},{c}): {} vs {}", f.lhs, f.rhs));
            }
            s.push(']');
        }
        s
    }
}

/// Equality of two matrices as a check.
pub fn expect_equal(check: &str, relation: &str, lhs: &PolyMatrix, rhs: &PolyMatrix) -> CheckReport {
    if lhs == rhs {
        CheckReport::pass(check)
    } else {
        CheckReport::fail(check, Failure::from_matrices(relation, lhs, rhs))
    }
}

/// Proportionality of two matrices as a check; records the ratio.
pub fn expect_proportional(check: &str, relation: &str, lhs: &PolyMatrix, rhs: &PolyMatrix) -> CheckReport {
    match PolyMatrix::proportional(lhs, rhs) {
        Some(r) if !r.is_zero() => CheckReport::pass(check).with_ratio(&r),
        Some(_) => CheckReport::fail(check, Failure::new(relation).with_values("0", "nonzero")),
        None => {
            let mut f = Failure::new(relation);
            if let Some((r0, c0, _)) = rhs.entries().next() {
                // report the first entry that breaks the ratio seeded at the pivot
                let a0 = lhs.entry(r0, c0);
                let b0 = rhs.entry(r0, c0);
                let bad = (0..lhs.dim())
                    .flat_map(|r| (0..lhs.dim()).map(move |c| (r, c)))
                    .find(|&(r, c)| &lhs.entry(r, c) * &b0 != &rhs.entry(r, c) * &a0);
                if let Some((r, c)) = bad {
                    f.row = Some(r);
                    f.col = Some(c);
                    f.lhs = lhs.entry(r, c).to_string();
                    f.rhs = rhs.entry(r, c).to_string();
                }
            } else {
                f.lhs = "nonzero".into();
                f.rhs = "0".into();
            }
            CheckReport::fail(check, f)
        }
    }
}

/// Whether a proportionality ratio is a nonzero rational constant.
pub fn constant_ratio(r: &Ratio) -> Option<crate::exact_ring::Rational> {
    r.as_rational().filter(|c| !num_traits::Zero::is_zero(c))
}
