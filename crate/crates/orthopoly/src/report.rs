//! Structured pass/fail records for identity checks.
//!
//! Every sweepable check in this crate reports through [`IdentityReport`]:
//! which identity ran, at which parameter point, over which order range,
//! whether it passed, and — when it did not — the first counterexample.
//! Parameter points excluded by pole guards are logged in `skipped`
//! rather than failed.

use std::collections::BTreeMap;

use serde::Serialize;

/// First counterexample of a failed check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// Indices (orders, sample positions) identifying the failing case.
    pub indices: Vec<i64>,
    /// Expected value, in the rational/polynomial text format.
    pub expected: String,
    /// Actual value, in the rational/polynomial text format.
    pub actual: String,
}

/// Pass/fail record of one identity check at one parameter point.
///
/// Serializes to one JSON object:
/// `{"identity": …, "params": {…}, "range": [min,max], "passed": …,
/// "failure": null | {…}}`, plus a `"skipped"` array listed only when pole
/// guards excluded points during the sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub params: BTreeMap<String, String>,
    pub range: (u32, u32),
    pub passed: bool,
    pub failure: Option<Failure>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<String>,
}

impl IdentityReport {
    /// Fresh passing report; failures and skips are recorded afterwards.
    pub fn new(identity: &str, params: BTreeMap<String, String>, range: (u32, u32)) -> Self {
        IdentityReport {
            identity: identity.to_string(),
            params,
            range,
            passed: true,
            failure: None,
            skipped: Vec::new(),
        }
    }

    /// Record a counterexample. Only the first one is kept, and `passed`
    /// flips to false (the two fields never disagree).
    pub fn record_failure(&mut self, indices: Vec<i64>, expected: String, actual: String) {
        if self.failure.is_none() {
            self.failure = Some(Failure {
                indices,
                expected,
                actual,
            });
        }
        self.passed = false;
    }

    /// Log a parameter point excluded by a pole guard.
    pub fn record_skip(&mut self, what: String) {
        self.skipped.push(what);
    }

    /// One line of JSON, suitable for JSON-lines streaming.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

/// Convenience builder for the ordered parameter map.
pub fn params_map(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

// === tests =================================================================
