//! The inequality catalog, per-graph evaluation and population audits.

mod audit;
mod catalog;
pub mod coeff;
mod evaluate;
mod expectations;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use audit::{audit, audit_catalog, audit_profiles, Counts, MarginWitness, SharpnessReport, AuditVerdict, FamilyMismatch, REPORT_SCHEMA_VERSION};
pub use catalog::{builtin_catalog, find_bound};
pub use coeff::CoeffExpr;
pub use evaluate::{check_equality_family, evaluate_bound, evaluate_profile, BoundCheck, GraphProfile, Verdict};
pub use expectations::{ExpectationMismatch, Expectations};

use crate::graph::FamilyId;
use crate::index::IndexId;

/// Default relative tolerance for equality and violation decisions.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// The bounded quantity: an index or the chromatic number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Index(IndexId),
    Chi,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Index(i) => write!(f, "{i}"),
            Side::Chi => f.write_str("chi"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    /// `lhs <= coeff * rhs`
    AtMost,
    /// `lhs >= coeff * rhs`
    AtLeast,
}

/// Graph families named as equality cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EqualityFamily {
    Path2,
    Path3,
    /// `K_n` for the graph's own order.
    Complete,
    /// Any cycle.
    Cycle,
    /// `C_3`.
    Triangle,
    /// The star with exactly `k` leaves.
    Star(usize),
    /// The star on all `n` vertices.
    SpanningStar,
    /// Any regular graph (its degree is then its minimum degree).
    DeltaRegular,
}

impl fmt::Display for EqualityFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Path2 => f.write_str("P2"),
            Self::Path3 => f.write_str("P3"),
            Self::Complete => f.write_str("K_n"),
            Self::Cycle => f.write_str("C_n"),
            Self::Triangle => f.write_str("C3"),
            Self::Star(k) => write!(f, "S1,{k}"),
            Self::SpanningStar => f.write_str("S1,n-1"),
            Self::DeltaRegular => f.write_str("delta-regular"),
        }
    }
}

/// Hypotheses a graph must meet before a bound is evaluated on it.
#[derive(Debug, Clone, PartialEq)]
pub struct Preconditions {
    pub n_min: usize,
    pub require_connected: bool,
    pub delta_min: usize,
    pub molecular_only: bool,
    pub exclusions: Vec<FamilyId>,
    /// Upper limit on `Delta - delta`, as a function of `(n, delta)`.
    pub spread_cap: Option<CoeffExpr>,
}

impl Default for Preconditions {
    fn default() -> Self {
        Self {
            n_min: 2,
            require_connected: true,
            delta_min: 1,
            molecular_only: false,
            exclusions: Vec::new(),
            spread_cap: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum BoundForm {
    /// `lhs <= coeff * rhs` or `lhs >= coeff * rhs`.
    Ratio {
        lhs: Side,
        rhs: IndexId,
        coeff: CoeffExpr,
        direction: Direction,
    },
    /// A chain of bounds that must all hold at once. The reported lhs and
    /// rhs sides are those of the first and last links.
    Chain { links: Vec<BoundSpec> },
}

/// One inequality of the catalog.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundSpec {
    pub id: String,
    pub form: BoundForm,
    pub strict: bool,
    pub preconditions: Preconditions,
    pub claimed_equality: Option<EqualityFamily>,
    /// Which published result the entry encodes.
    pub citation: String,
    /// The inequality and its hypotheses in plain notation.
    pub statement: String,
}

impl BoundSpec {
    /// Coefficient, index sides and direction for ratio bounds.
    pub fn ratio(&self) -> Option<(Side, IndexId, &CoeffExpr, Direction)> {
        match &self.form {
            BoundForm::Ratio {
                lhs,
                rhs,
                coeff,
                direction,
            } => Some((*lhs, *rhs, coeff, *direction)),
            BoundForm::Chain { .. } => None,
        }
    }

    /// Ratio bound between two indices (no chromatic number, not a chain).
    pub fn is_two_index(&self) -> bool {
        matches!(self.ratio(), Some((Side::Index(_), ..)))
    }

    pub fn involves(&self, idx: IndexId) -> bool {
        match &self.form {
            BoundForm::Ratio { lhs, rhs, .. } => *lhs == Side::Index(idx) || *rhs == idx,
            BoundForm::Chain { links } => links.iter().any(|l| l.involves(idx)),
        }
    }
}
