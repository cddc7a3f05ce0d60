//! The identity registry: every checked identity, congruence, and
//! adjudicated reading, with a uniform pass/fail report format.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{QError, Result};

/// Result of evaluating one check at a given order.
#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub passed: bool,
    /// Highest exponent actually compared.
    pub effective_order: i64,
    /// First disagreeing exponent with both exact coefficients, if any.
    pub first_mismatch: Option<(i64, String, String)>,
}

/// (order, min_exp override) -> outcome.
pub type CheckFn = Box<dyn Fn(i64, Option<i64>) -> Result<CheckOutcome> + Send + Sync>;

/// One registered identity.
pub struct IdentityCheck {
    pub id: &'static str,
    /// The mathematical statement being checked, in display form.
    pub anchor: &'static str,
    pub description: &'static str,
    pub tags: &'static [&'static str],
    /// Default truncation order when the caller does not override it.
    pub default_order: i64,
    /// Informational checks record an adjudication and never count
    /// against the suite.
    pub informational: bool,
    pub run: CheckFn,
}

/// Serializable per-check report.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub passed: bool,
    pub informational: bool,
    pub effective_order: i64,
    pub first_mismatch: Option<MismatchReport>,
    pub runtime_ms: u128,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MismatchReport {
    pub exponent: i64,
    pub lhs: String,
    pub rhs: String,
}

/// Run one check, converting evaluation errors into failed reports.
pub fn run_check(check: &IdentityCheck, order: Option<i64>, min_exp: Option<i64>) -> IdentityReport {
    let order = order.unwrap_or(check.default_order);
    let started = Instant::now();
    let outcome = (check.run)(order, min_exp);
    let runtime_ms = started.elapsed().as_millis();
    match outcome {
        Ok(o) => IdentityReport {
            id: check.id.to_string(),
            passed: o.passed,
            informational: check.informational,
            effective_order: o.effective_order,
            first_mismatch: o
                .first_mismatch
                .map(|(exponent, lhs, rhs)| MismatchReport { exponent, lhs, rhs }),
            runtime_ms,
            error: None,
        },
        Err(e) => IdentityReport {
            id: check.id.to_string(),
            passed: false,
            informational: check.informational,
            effective_order: order,
            first_mismatch: None,
            runtime_ms,
            error: Some(e.to_string()),
        },
    }
}

/// Run a set of checks in parallel, preserving registry order in the output.
pub fn run_suite(
    checks: &[IdentityCheck],
    order: Option<i64>,
    min_exp: Option<i64>,
) -> Vec<IdentityReport> {
    checks
        .par_iter()
        .map(|c| run_check(c, order, min_exp))
        .collect()
}

/// Look up one check by id.
pub fn find<'a>(checks: &'a [IdentityCheck], id: &str) -> Result<&'a IdentityCheck> {
    checks
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| QError::UnknownId(id.to_string()))
}

/// The full registry. Order is stable and is the display order everywhere.
pub fn registry() -> Vec<IdentityCheck> {
    super::builders::build_registry()
}
