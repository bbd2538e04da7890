use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::{BoundForm, BoundSpec, Direction, EqualityFamily, Preconditions, Side};
use crate::enumerate::{canonical_form, CanonicalForm};
use crate::graph::{chromatic_number, make_family, to_graph6, EdgeDegreePartition, Graph};
use crate::index::IndexTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Equality,
    Violated,
    PreconditionSkipped,
    DomainSkipped,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Equality => "equality",
            Verdict::Violated => "violated",
            Verdict::PreconditionSkipped => "precondition_skipped",
            Verdict::DomainSkipped => "domain_skipped",
        }
    }

    pub fn is_skip(self) -> bool {
        matches!(self, Verdict::PreconditionSkipped | Verdict::DomainSkipped)
    }
}

/// Outcome of one bound on one graph.
///
/// `margin` is positive when the bound has slack: `rhs_side - lhs` for upper
/// bounds and `lhs - rhs_side` for lower bounds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub bound_id: String,
    pub graph6: String,
    pub lhs_value: Option<f64>,
    pub rhs_side_value: Option<f64>,
    pub margin: Option<f64>,
    pub verdict: Verdict,
    /// A strict bound met with equality.
    pub strictness_conflict: bool,
}

/// Everything about a graph the catalog needs, computed once.
#[derive(Debug)]
pub struct GraphProfile {
    pub graph: Graph,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub max_degree: usize,
    pub connected: bool,
    pub partition: EdgeDegreePartition,
    pub indices: IndexTable,
    chi: OnceLock<Option<usize>>,
    canonical: OnceLock<Option<CanonicalForm>>,
}

impl GraphProfile {
    pub fn new(graph: Graph) -> Self {
        let partition = graph.edge_degree_partition();
        Self {
            graph6: to_graph6(&graph),
            n: graph.order(),
            m: graph.size(),
            delta: graph.min_degree(),
            max_degree: graph.max_degree(),
            connected: graph.is_connected(),
            indices: IndexTable::of_partition(&partition),
            partition,
            graph,
            chi: OnceLock::new(),
            canonical: OnceLock::new(),
        }
    }

    /// Exact chromatic number, or `None` above the solver's size cap.
    pub fn chi(&self) -> Option<usize> {
        *self.chi.get_or_init(|| chromatic_number(&self.graph).ok())
    }

    fn canonical(&self) -> Option<&CanonicalForm> {
        self.canonical.get_or_init(|| canonical_form(&self.graph).ok()).as_ref()
    }

    fn side(&self, s: Side) -> Option<f64> {
        match s {
            Side::Index(i) => self.indices.get(i),
            Side::Chi => self.chi().map(|c| c as f64),
        }
    }

    fn is_excluded(&self, pre: &Preconditions) -> bool {
        pre.exclusions.iter().any(|&f| {
            let Ok(h) = make_family(f) else { return false };
            if h.order() != self.n || h.size() != self.m {
                return false;
            }
            match (self.canonical(), canonical_form(&h)) {
                (Some(a), Ok(b)) => *a == b,
                _ => false,
            }
        })
    }

    fn meets(&self, pre: &Preconditions) -> bool {
        if self.n < pre.n_min || (pre.require_connected && !self.connected) || self.delta < pre.delta_min {
            return false;
        }
        if pre.molecular_only && self.max_degree > 4 {
            return false;
        }
        if let Some(cap) = &pre.spread_cap {
            if (self.max_degree - self.delta) as f64 > cap.eval(self.n, self.delta) {
                return false;
            }
        }
        !self.is_excluded(pre)
    }
}

pub fn evaluate_bound(b: &BoundSpec, g: &Graph, tol: f64) -> BoundCheck {
    evaluate_profile(b, &GraphProfile::new(g.clone()), tol)
}

pub fn evaluate_profile(b: &BoundSpec, p: &GraphProfile, tol: f64) -> BoundCheck {
    let mut check = BoundCheck {
        bound_id: b.id.clone(),
        graph6: p.graph6.clone(),
        lhs_value: None,
        rhs_side_value: None,
        margin: None,
        verdict: Verdict::PreconditionSkipped,
        strictness_conflict: false,
    };
    if !p.meets(&b.preconditions) {
        return check;
    }
    match &b.form {
        BoundForm::Ratio {
            lhs,
            rhs,
            coeff,
            direction,
        } => {
            let (Some(l), Some(r)) = (p.side(*lhs), p.indices.get(*rhs)) else {
                check.verdict = Verdict::DomainSkipped;
                return check;
            };
            let side = coeff.eval(p.n, p.delta) * r;
            let margin = match direction {
                Direction::AtMost => side - l,
                Direction::AtLeast => l - side,
            };
            let scale = tol * l.abs().max(1.0);
            check.verdict = if margin.abs() <= scale {
                Verdict::Equality
            } else if margin < -scale {
                Verdict::Violated
            } else {
                Verdict::Holds
            };
            check.lhs_value = Some(l);
            check.rhs_side_value = Some(side);
            check.margin = Some(margin);
            check.strictness_conflict = b.strict && check.verdict == Verdict::Equality;
        }
        BoundForm::Chain { links } => {
            let parts: Vec<BoundCheck> = links.iter().map(|l| evaluate_profile(l, p, tol)).collect();
            let (Some(first), Some(last)) = (parts.first(), parts.last()) else {
                return check;
            };
            let has = |v: Verdict| parts.iter().any(|c| c.verdict == v);
            check.verdict = if has(Verdict::PreconditionSkipped) {
                Verdict::PreconditionSkipped
            } else if has(Verdict::DomainSkipped) {
                Verdict::DomainSkipped
            } else if has(Verdict::Violated) {
                Verdict::Violated
            } else if has(Verdict::Equality) {
                Verdict::Equality
            } else {
                Verdict::Holds
            };
            if !check.verdict.is_skip() {
                check.lhs_value = first.lhs_value;
                check.rhs_side_value = last.rhs_side_value;
                check.margin = parts.iter().filter_map(|c| c.margin).reduce(f64::min);
            }
            check.strictness_conflict = parts.iter().any(|c| c.strictness_conflict);
        }
    }
    check
}

/// Structural membership of `g` in the bound's claimed equality family.
/// `false` when the bound claims none.
pub fn check_equality_family(b: &BoundSpec, g: &Graph) -> bool {
    b.claimed_equality.is_some_and(|f| in_family(f, g))
}

pub(crate) fn in_family(f: EqualityFamily, g: &Graph) -> bool {
    let (n, m) = (g.order(), g.size());
    match f {
        EqualityFamily::Path2 => n == 2 && m == 1,
        EqualityFamily::Path3 => n == 3 && m == 2,
        EqualityFamily::Complete => m == n * (n - 1) / 2,
        EqualityFamily::Triangle => n == 3 && m == 3,
        EqualityFamily::Cycle => n >= 3 && g.is_regular(Some(2)) && g.is_connected(),
        EqualityFamily::Star(k) => n == k + 1 && m == k && g.max_degree() == k,
        EqualityFamily::SpanningStar => n >= 2 && m == n - 1 && g.max_degree() == n - 1,
        EqualityFamily::DeltaRegular => g.is_regular(None),
    }
}
