//! Pinned audit outcomes.
//!
//! An expectation file lists, per bound, the audit verdicts the suite
//! accepts, optionally with graphs that must appear as witnesses. Bounds
//! not listed fall back to `default_allowed`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::audit::{AuditVerdict, SharpnessReport};

const DEFAULT_JSON: &str = include_str!("../../fixtures/expectations/default.json");

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundExpectation {
    pub allowed: Vec<AuditVerdict>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub equality_witnesses_include: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub violation_witnesses_include: Vec<String>,
    /// Why the pinned verdict differs from the published claim.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectations {
    pub default_allowed: Vec<AuditVerdict>,
    #[serde(default)]
    pub bounds: BTreeMap<String, BoundExpectation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectationMismatch {
    pub bound_id: String,
    pub verdict: AuditVerdict,
    pub allowed: Vec<AuditVerdict>,
    pub missing_witnesses: Vec<String>,
}

impl Expectations {
    /// The expectations compiled into the crate.
    pub fn builtin() -> Self {
        Self::from_json(DEFAULT_JSON).expect("bundled expectations parse")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn allowed(&self, bound_id: &str) -> &[AuditVerdict] {
        self.bounds
            .get(bound_id)
            .map_or(&self.default_allowed, |e| &e.allowed)
    }

    pub fn check_one(&self, r: &SharpnessReport) -> Option<ExpectationMismatch> {
        let allowed = self.allowed(&r.bound_id);
        let mut missing = Vec::new();
        if let Some(e) = self.bounds.get(&r.bound_id) {
            let absent = |want: &Vec<String>, have: &Vec<String>| {
                want.iter().filter(|w| !have.contains(w)).cloned().collect::<Vec<_>>()
            };
            // witness requirements only apply when the population reaches them
            if r.verdict != AuditVerdict::Vacuous {
                missing.extend(absent(&e.equality_witnesses_include, &r.equality_witnesses));
                missing.extend(absent(&e.violation_witnesses_include, &r.violation_witnesses));
                missing.retain(|g| r.counts.checked > 0 && population_may_contain(r, g));
            }
        }
        (!allowed.contains(&r.verdict) || !missing.is_empty()).then(|| ExpectationMismatch {
            bound_id: r.bound_id.clone(),
            verdict: r.verdict,
            allowed: allowed.to_vec(),
            missing_witnesses: missing,
        })
    }

    /// Every report whose outcome is not pinned as acceptable.
    pub fn check(&self, reports: &[SharpnessReport]) -> Vec<ExpectationMismatch> {
        reports.iter().filter_map(|r| self.check_one(r)).collect()
    }
}

/// Required witnesses are keyed by graph6; a witness is only demanded when
/// graphs of its order were part of the audit.
fn population_may_contain(r: &SharpnessReport, g6: &str) -> bool {
    let Ok(g) = crate::graph::parse_graph6(g6) else { return true };
    let n = g.order();
    let orders: Vec<usize> = r
        .equality_witnesses
        .iter()
        .chain(&r.violation_witnesses)
        .chain(r.min_margin.as_ref().map(|m| &m.witness_graph6))
        .filter_map(|w| crate::graph::parse_graph6(w).ok().map(|h| h.order()))
        .collect();
    orders.is_empty() || (orders.iter().min().unwrap() <= &n && &n <= orders.iter().max().unwrap())
}
