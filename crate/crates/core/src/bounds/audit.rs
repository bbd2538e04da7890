//! Population-level sharpness audits.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::evaluate::{evaluate_profile, in_family, GraphProfile, Verdict};
use super::BoundSpec;
use crate::graph::Graph;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AuditVerdict {
    ConfirmedSharp,
    HoldsNotSharpInPopulation,
    Violated,
    /// No graph of the population met the hypotheses.
    Vacuous,
}

impl AuditVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            AuditVerdict::ConfirmedSharp => "confirmed_sharp",
            AuditVerdict::HoldsNotSharpInPopulation => "holds_not_sharp_in_population",
            AuditVerdict::Violated => "violated",
            AuditVerdict::Vacuous => "vacuous",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub checked: usize,
    pub skipped: usize,
    pub holds: usize,
    pub equality: usize,
    pub violated: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MarginWitness {
    pub value: f64,
    pub witness_graph6: String,
}

/// Disagreement between numerical equality and the claimed family.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMismatch {
    /// At equality but outside the claimed family.
    pub unexpected_equalities: Vec<String>,
    /// Checked members of the claimed family that were not at equality.
    pub missed_family_members: Vec<String>,
}

impl FamilyMismatch {
    pub fn is_empty(&self) -> bool {
        self.unexpected_equalities.is_empty() && self.missed_family_members.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SharpnessReport {
    pub schema_version: u32,
    pub bound_id: String,
    pub citation: String,
    pub population: String,
    pub counts: Counts,
    /// Smallest margin among graphs where the bound holds strictly.
    pub min_margin: Option<MarginWitness>,
    pub equality_witnesses: Vec<String>,
    pub violation_witnesses: Vec<String>,
    pub verdict: AuditVerdict,
    pub strict: bool,
    pub strictness_conflict: bool,
    pub claimed_equality: Option<String>,
    pub family_mismatch: FamilyMismatch,
}

/// Audits one bound over a population of graphs.
pub fn audit(b: &BoundSpec, graphs: &[Graph], population: &str, tol: f64) -> SharpnessReport {
    let profiles = profiles_of(graphs);
    audit_profiles(b, &profiles, population, tol)
}

/// Audits every bound, sharing one profile per graph.
pub fn audit_catalog(bounds: &[BoundSpec], graphs: &[Graph], population: &str, tol: f64) -> Vec<SharpnessReport> {
    let profiles = profiles_of(graphs);
    bounds.iter().map(|b| audit_profiles(b, &profiles, population, tol)).collect()
}

fn profiles_of(graphs: &[Graph]) -> Vec<GraphProfile> {
    graphs.par_iter().map(|g| GraphProfile::new(g.clone())).collect()
}

pub fn audit_profiles(b: &BoundSpec, profiles: &[GraphProfile], population: &str, tol: f64) -> SharpnessReport {
    let checks: Vec<_> = profiles
        .par_iter()
        .map(|p| {
            let c = evaluate_profile(b, p, tol);
            let member = b.claimed_equality.is_some_and(|f| in_family(f, &p.graph));
            (c, member)
        })
        .collect();

    let mut counts = Counts::default();
    let mut min_margin: Option<MarginWitness> = None;
    let mut equality = Vec::new();
    let mut violation = Vec::new();
    let mut mismatch = FamilyMismatch::default();
    let mut conflict = false;
    for (c, member) in checks {
        if c.verdict.is_skip() {
            counts.skipped += 1;
            continue;
        }
        counts.checked += 1;
        conflict |= c.strictness_conflict;
        match c.verdict {
            Verdict::Holds => {
                counts.holds += 1;
                let m = c.margin.expect("checked bounds carry a margin");
                let better = match &min_margin {
                    None => true,
                    Some(cur) => m < cur.value || (m == cur.value && c.graph6 < cur.witness_graph6),
                };
                if better {
                    min_margin = Some(MarginWitness {
                        value: m,
                        witness_graph6: c.graph6.clone(),
                    });
                }
            }
            Verdict::Equality => {
                counts.equality += 1;
                equality.push(c.graph6.clone());
            }
            Verdict::Violated => {
                counts.violated += 1;
                violation.push(c.graph6.clone());
            }
            Verdict::PreconditionSkipped | Verdict::DomainSkipped => unreachable!(),
        }
        if b.claimed_equality.is_some() {
            match (c.verdict == Verdict::Equality, member) {
                (true, false) => mismatch.unexpected_equalities.push(c.graph6),
                (false, true) => mismatch.missed_family_members.push(c.graph6),
                _ => {}
            }
        }
    }
    equality.sort();
    violation.sort();
    mismatch.unexpected_equalities.sort();
    mismatch.missed_family_members.sort();

    let verdict = if !violation.is_empty() {
        AuditVerdict::Violated
    } else if counts.checked == 0 {
        AuditVerdict::Vacuous
    } else if !equality.is_empty() {
        AuditVerdict::ConfirmedSharp
    } else {
        AuditVerdict::HoldsNotSharpInPopulation
    };
    SharpnessReport {
        schema_version: REPORT_SCHEMA_VERSION,
        bound_id: b.id.clone(),
        citation: b.citation.clone(),
        population: population.to_string(),
        counts,
        min_margin,
        equality_witnesses: equality,
        violation_witnesses: violation,
        verdict,
        strict: b.strict,
        strictness_conflict: conflict,
        claimed_equality: b.claimed_equality.map(|f| f.to_string()),
        family_mismatch: mismatch,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{builtin_catalog, find_bound, DEFAULT_TOLERANCE};
    use crate::enumerate::{enumerate_orders, Filters};

    fn run(id: &str, graphs: &[Graph]) -> SharpnessReport {
        let c = builtin_catalog();
        audit(find_bound(&c, id).unwrap(), graphs, "test", DEFAULT_TOLERANCE)
    }

    #[test]
    fn t2l_sharp_only_at_p2() {
        let pop = enumerate_orders(2..=6, Filters::default()).unwrap();
        let r = run("T2L", &pop);
        assert_eq!(r.verdict, AuditVerdict::ConfirmedSharp);
        assert_eq!(r.equality_witnesses, vec!["A_"]);
        assert!(r.family_mismatch.is_empty());
        assert_eq!(r.counts.checked, 1 + 2 + 6 + 21 + 112);
    }

    #[test]
    fn t7_21_upper_violated_at_k3() {
        let pop = enumerate_orders(2..=5, Filters::default()).unwrap();
        let r = run("T7-(21)U", &pop);
        assert_eq!(r.verdict, AuditVerdict::Violated);
        assert!(r.violation_witnesses.contains(&"Bw".to_string()));
        assert_eq!(r.counts.violated, r.violation_witnesses.len());
    }

    #[test]
    fn c9_26_holds_not_sharp() {
        let filters = Filters {
            delta_min: Some(2),
            ..Filters::default()
        };
        let pop = enumerate_orders(3..=6, filters).unwrap();
        let r = run("C9-(26)", &pop);
        assert_eq!(r.verdict, AuditVerdict::HoldsNotSharpInPopulation);
        assert!(r.equality_witnesses.is_empty());
        assert!(r.min_margin.unwrap().value > 0.0);
        // every regular graph is a missed member of the claimed family
        assert!(r.family_mismatch.missed_family_members.contains(&"Bw".to_string()));
    }

    #[test]
    fn vacuous_and_min_margin() {
        let pop = enumerate_orders(2..=2, Filters::default()).unwrap();
        let r = run("C1", &pop);
        assert_eq!(r.verdict, AuditVerdict::Vacuous);
        assert_eq!(r.min_margin, None);
        assert_eq!(r.counts.skipped, 1);
        let pop = enumerate_orders(3..=3, Filters::default()).unwrap();
        let r = run("T2U", &pop);
        // P3: GA = 4 sqrt(2)/3, (n-1) R = 2 sqrt(2)
        let m = r.min_margin.unwrap();
        assert_eq!(m.witness_graph6, "BW");
        assert!((m.value - (2.0 * 2f64.sqrt() - 4.0 * 2f64.sqrt() / 3.0)).abs() < 1e-12);
        assert_eq!(r.equality_witnesses, vec!["Bw"]);
    }

    #[test]
    fn report_json_shape() {
        let pop = enumerate_orders(2..=3, Filters::default()).unwrap();
        let r = run("T1L", &pop);
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        for key in [
            "schema_version", "bound_id", "citation", "population", "counts", "min_margin", "equality_witnesses",
            "violation_witnesses", "verdict",
        ] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["verdict"], "confirmed_sharp");
        assert_eq!(v["counts"]["checked"], 3);
        let back: SharpnessReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }
}
