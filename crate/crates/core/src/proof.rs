//! Per-edge ratio functions `F(a, b) = term_num(a, b) / term_den(a, b)` and
//! their extrema over integer degree grids.
//!
//! A two-index bound `lhs ~ c * rhs` holds for every graph whose edges all
//! have degree pairs in a grid exactly when `c` lies on the right side of the
//! grid extremum of `lhs/rhs`, and is attained only when `c` equals it. The
//! kernel scans those grids and compares against the catalog.

use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::bounds::{BoundForm, BoundSpec, Direction, Side};
use crate::graph::DegreePair;
use crate::index::{edge_term, edge_term_real, IndexError, IndexId};

/// Largest order accepted by the grid scans (degrees up to 61).
pub const GRID_ORDER_CAP: usize = 62;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ProofError {
    #[error("ratio needs two different indices, got {0} twice")]
    SameIndex(IndexId),
    #[error("ratio undefined at {pair}: {reason}")]
    Domain { pair: DegreePair, reason: String },
    #[error("order {n} outside 2..={cap}")]
    OrderCap { n: usize, cap: usize },
}

/// `num/den` edge-term ratio, optionally squared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioFn {
    pub num: IndexId,
    pub den: IndexId,
    pub squared: bool,
}

impl RatioFn {
    pub fn new(num: IndexId, den: IndexId, squared: bool) -> Result<Self, ProofError> {
        if num == den {
            return Err(ProofError::SameIndex(num));
        }
        Ok(Self { num, den, squared })
    }

    /// `(GA/X)^2`
    pub const T1: RatioFn = RatioFn {
        num: IndexId::GeometricArithmetic,
        den: IndexId::SumConnectivity,
        squared: true,
    };
    /// `GA/R`
    pub const T2: RatioFn = RatioFn {
        num: IndexId::GeometricArithmetic,
        den: IndexId::Randic,
        squared: false,
    };
    /// `(ABC/GA)^2`
    pub const T4: RatioFn = RatioFn {
        num: IndexId::AtomBondConnectivity,
        den: IndexId::GeometricArithmetic,
        squared: true,
    };
    /// `(AZI/X)^2`
    pub const T6: RatioFn = RatioFn {
        num: IndexId::AugmentedZagreb,
        den: IndexId::SumConnectivity,
        squared: true,
    };
    /// `(AZI/M2STAR)^2`
    pub const T21: RatioFn = RatioFn {
        num: IndexId::AugmentedZagreb,
        den: IndexId::ModifiedSecondZagreb,
        squared: true,
    };
}

impl fmt::Display for RatioFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.squared {
            write!(f, "({}/{})^2", self.num, self.den)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

pub fn ratio_at(r: RatioFn, p: DegreePair) -> Result<f64, ProofError> {
    let domain = |e: IndexError| ProofError::Domain {
        pair: p,
        reason: e.to_string(),
    };
    let num = edge_term(r.num, p).map_err(domain)?;
    let den = edge_term(r.den, p).map_err(domain)?;
    if den == 0.0 {
        return Err(ProofError::Domain {
            pair: p,
            reason: format!("{} term is zero", r.den),
        });
    }
    let q = num / den;
    Ok(if r.squared { q * q } else { q })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtremumKind {
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridExtremum {
    pub location: DegreePair,
    pub value: f64,
    pub kind: ExtremumKind,
}

/// Degree pairs `min_degree <= a <= b <= max_degree`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeGrid {
    pub min_degree: usize,
    pub max_degree: usize,
    /// Drop `(1, 1)`, which only occurs in `K2`.
    pub exclude_isolated_edge: bool,
}

impl DegreeGrid {
    /// Every pair with entries in `1..=n-1`.
    pub fn for_order(n: usize) -> Self {
        Self {
            min_degree: 1,
            max_degree: n.saturating_sub(1),
            exclude_isolated_edge: false,
        }
    }

    /// Pairs that can occur on an edge of a connected graph of order `n`
    /// and minimum degree at least `delta`.
    pub fn connected(n: usize, delta: usize) -> Self {
        Self {
            min_degree: delta.max(1),
            max_degree: n.saturating_sub(1),
            exclude_isolated_edge: n >= 3,
        }
    }

    pub fn pairs(&self) -> impl Iterator<Item = DegreePair> + '_ {
        (self.min_degree..=self.max_degree).flat_map(move |a| {
            (a..=self.max_degree)
                .filter(move |&b| !(self.exclude_isolated_edge && a == 1 && b == 1))
                .map(move |b| DegreePair::new(a as u32, b as u32))
        })
    }
}

/// Extremum over all pairs `1 <= a <= b <= n-1` where `r` is defined.
pub fn grid_extremum(r: RatioFn, n: usize, kind: ExtremumKind) -> Result<Option<GridExtremum>, ProofError> {
    if !(2..=GRID_ORDER_CAP).contains(&n) {
        return Err(ProofError::OrderCap {
            n,
            cap: GRID_ORDER_CAP,
        });
    }
    Ok(grid_extremum_on(r, DegreeGrid::for_order(n), kind))
}

/// Extremum over a grid; pairs where `r` is undefined are skipped. Ties go
/// to the lexicographically smallest pair. `None` when no pair is defined.
pub fn grid_extremum_on(r: RatioFn, grid: DegreeGrid, kind: ExtremumKind) -> Option<GridExtremum> {
    let mut best: Option<GridExtremum> = None;
    for p in grid.pairs() {
        let Ok(v) = ratio_at(r, p) else { continue };
        let better = match (&best, kind) {
            (None, _) => true,
            (Some(b), ExtremumKind::Min) => v < b.value,
            (Some(b), ExtremumKind::Max) => v > b.value,
        };
        if better {
            best = Some(GridExtremum {
                location: p,
                value: v,
                kind,
            });
        }
    }
    best
}

/// An integer line through the grid: one coordinate fixed, the other ranging.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridLine {
    pub fixed: usize,
    pub range: RangeInclusive<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Trend {
    Increasing,
    Decreasing,
    Constant,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonotonicityReport {
    pub ratio: String,
    pub fixed: usize,
    pub from: usize,
    pub to: usize,
    /// Direction of the first non-zero step.
    pub trend: Trend,
    /// First step `(v, v+1)` against `trend`, if any.
    pub first_violation: Option<(usize, usize)>,
}

impl MonotonicityReport {
    pub fn is_monotone(&self, expected: Trend) -> bool {
        self.first_violation.is_none() && self.trend == expected
    }
}

/// Checks successive differences of `r(fixed, v)` for `v` in the range.
///
/// Steps are compared strictly: a zero step after a non-zero one counts as a
/// violation.
pub fn monotonicity_audit(r: RatioFn, line: &GridLine) -> Result<MonotonicityReport, ProofError> {
    let (from, to) = (*line.range.start(), *line.range.end());
    if from < 1 || to > GRID_ORDER_CAP - 1 || line.fixed < 1 || line.fixed > GRID_ORDER_CAP - 1 {
        return Err(ProofError::OrderCap {
            n: to.max(line.fixed) + 1,
            cap: GRID_ORDER_CAP,
        });
    }
    let at = |v: usize| ratio_at(r, DegreePair::new(line.fixed as u32, v as u32));
    let mut trend = Trend::Constant;
    let mut first_violation = None;
    let mut prev = if from <= to { Some(at(from)?) } else { None };
    for v in from..to {
        let next = at(v + 1)?;
        let step = next - prev.expect("set before loop");
        let dir = if step > 0.0 {
            Trend::Increasing
        } else if step < 0.0 {
            Trend::Decreasing
        } else {
            Trend::Constant
        };
        if trend == Trend::Constant && v == from {
            trend = dir;
        } else if dir != trend && first_violation.is_none() {
            first_violation = Some((v, v + 1));
        }
        prev = Some(next);
    }
    Ok(MonotonicityReport {
        ratio: r.to_string(),
        fixed: line.fixed,
        from,
        to,
        trend,
        first_violation,
    })
}

/// Samples `r(x, y)` along `x = fixed` at `y = from + k/64` and returns the
/// first `y` where the sampled slope changes sign. Smoke check only.
pub fn dense_turning_point(r: RatioFn, fixed: f64, from: f64, to: f64) -> Option<f64> {
    let f = |y: f64| {
        let q = edge_term_real(r.num, fixed, y) / edge_term_real(r.den, fixed, y);
        if r.squared {
            q * q
        } else {
            q
        }
    };
    let step = 1.0 / 64.0;
    let mut y = from;
    let mut prev_slope: Option<f64> = None;
    while y + step <= to {
        let slope = f(y + step) - f(y);
        if let Some(p) = prev_slope {
            if p.signum() != slope.signum() {
                return Some(y);
            }
        }
        prev_slope = Some(slope);
        y += step;
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConcordanceStatus {
    /// Safe at every grid and equal to the extremum somewhere (strict
    /// bounds: safe with slack everywhere).
    Concordant,
    /// The coefficient is beyond the grid extremum for some order.
    Unsafe,
    /// Safe, but never equal to the grid extremum.
    NotAttained,
    /// Strict bound whose coefficient touches the grid extremum.
    StrictTouches,
    /// Hypotheses the degree grid cannot express (exclusions, degree spread).
    NotGridExpressible,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Concordance {
    pub bound_id: String,
    pub status: ConcordanceStatus,
    /// `(n, delta)` and pair where the coefficient first passes the extremum.
    pub first_unsafe: Option<(usize, usize, DegreePair)>,
    /// Closest relative gap between coefficient and extremum seen.
    pub closest_gap: Option<f64>,
}

/// Compares a two-index bound's coefficient with the extremum of the squared
/// ratio on every grid implied by its hypotheses with order at most `n_max`.
/// Returns `None` for chains and chromatic bounds.
pub fn concordance(b: &BoundSpec, n_max: usize, tol: f64) -> Option<Concordance> {
    let BoundForm::Ratio {
        lhs: Side::Index(num),
        rhs,
        coeff,
        direction,
    } = &b.form
    else {
        return None;
    };
    let mut out = Concordance {
        bound_id: b.id.clone(),
        status: ConcordanceStatus::NotGridExpressible,
        first_unsafe: None,
        closest_gap: None,
    };
    let pre = &b.preconditions;
    if !pre.exclusions.is_empty() || pre.spread_cap.is_some() {
        return Some(out);
    }
    let r = RatioFn {
        num: *num,
        den: *rhs,
        squared: true,
    };
    let kind = match direction {
        Direction::AtLeast => ExtremumKind::Min,
        Direction::AtMost => ExtremumKind::Max,
    };
    let mut attained = false;
    for n in pre.n_min.max(2)..=n_max.min(GRID_ORDER_CAP) {
        let deltas = if coeff.uses_delta() {
            pre.delta_min..=n - 1
        } else {
            pre.delta_min..=pre.delta_min
        };
        for delta in deltas {
            if pre.molecular_only && delta > 4 {
                continue;
            }
            let mut grid = DegreeGrid::connected(n, delta);
            if pre.molecular_only {
                grid.max_degree = grid.max_degree.min(4);
            }
            let Some(ext) = grid_extremum_on(r, grid, kind) else { continue };
            let c = coeff.eval(n, delta);
            let e = ext.value.sqrt();
            let gap = (e - c).abs() / c.abs().max(e.abs()).max(1.0);
            out.closest_gap = Some(out.closest_gap.map_or(gap, |g: f64| g.min(gap)));
            let beyond = match kind {
                ExtremumKind::Min => c > e,
                ExtremumKind::Max => c < e,
            };
            if gap <= tol {
                attained = true;
            } else if beyond && out.first_unsafe.is_none() {
                out.first_unsafe = Some((n, delta, ext.location));
            }
        }
    }
    out.status = if out.first_unsafe.is_some() {
        ConcordanceStatus::Unsafe
    } else if b.strict {
        if attained {
            ConcordanceStatus::StrictTouches
        } else {
            ConcordanceStatus::Concordant
        }
    } else if attained {
        ConcordanceStatus::Concordant
    } else {
        ConcordanceStatus::NotAttained
    };
    Some(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimVerdict {
    Confirmed,
    Discrepancy,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProofClaim {
    pub id: String,
    pub claim: String,
    pub observed: String,
    pub verdict: ClaimVerdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProofReport {
    pub n: usize,
    pub claims: Vec<ProofClaim>,
    pub concordance: Vec<Concordance>,
    /// Ids of claims and bounds that did not check out.
    pub discrepancies: Vec<String>,
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

fn extremum_claim(
    id: &str,
    r: RatioFn,
    grid: DegreeGrid,
    kind: ExtremumKind,
    at: (u32, u32),
    value: f64,
    tol: f64,
) -> ProofClaim {
    let want = DegreePair::new(at.0, at.1);
    let kind_s = match kind {
        ExtremumKind::Min => "min",
        ExtremumKind::Max => "max",
    };
    let claim = format!("{kind_s} of {r} over degrees {}..={} at {want} = {value}", grid.min_degree, grid.max_degree);
    let (observed, verdict) = match grid_extremum_on(r, grid, kind) {
        Some(e) => {
            let ok = e.location == want && close(e.value, value, tol);
            (
                format!("{} = {}", e.location, e.value),
                if ok { ClaimVerdict::Confirmed } else { ClaimVerdict::Discrepancy },
            )
        }
        None => ("empty grid".to_string(), ClaimVerdict::NotApplicable),
    };
    ProofClaim {
        id: id.to_string(),
        claim,
        observed,
        verdict,
    }
}

fn trend_claim(id: &str, r: RatioFn, line: GridLine, expected: Trend) -> ProofClaim {
    let claim = format!(
        "{r} along a={} for b in {}..={} is {expected:?}",
        line.fixed,
        line.range.start(),
        line.range.end()
    )
    .to_lowercase();
    if line.range.end() <= line.range.start() {
        return ProofClaim {
            id: id.to_string(),
            claim,
            observed: "fewer than two grid points".to_string(),
            verdict: ClaimVerdict::NotApplicable,
        };
    }
    match monotonicity_audit(r, &line) {
        Ok(m) => ProofClaim {
            id: id.to_string(),
            claim,
            observed: match m.first_violation {
                None => format!("{:?}", m.trend).to_lowercase(),
                Some((a, b)) => format!("{:?}, broken at {a}->{b}", m.trend).to_lowercase(),
            },
            verdict: if m.is_monotone(expected) {
                ClaimVerdict::Confirmed
            } else {
                ClaimVerdict::Discrepancy
            },
        },
        Err(e) => ProofClaim {
            id: id.to_string(),
            claim,
            observed: e.to_string(),
            verdict: ClaimVerdict::NotApplicable,
        },
    }
}

/// Runs every registered ratio claim at order `n` plus catalog concordance
/// up to order `n`.
pub fn proof_audit(n: usize, catalog: &[BoundSpec], tol: f64) -> Result<ProofReport, ProofError> {
    if !(3..=GRID_ORDER_CAP).contains(&n) {
        return Err(ProofError::OrderCap {
            n,
            cap: GRID_ORDER_CAP,
        });
    }
    let nf = n as f64;
    let top = (n - 1) as u32;
    let all = DegreeGrid::for_order(n);
    let conn = DegreeGrid::connected(n, 1);
    let two = DegreeGrid::connected(n, 2);
    let mut claims = vec![
        extremum_claim("F_T1.min", RatioFn::T1, all, ExtremumKind::Min, (1, 1), 2.0, tol),
        extremum_claim("F_T1.max", RatioFn::T1, all, ExtremumKind::Max, (top, top), 2.0 * (nf - 1.0), tol),
        extremum_claim("F_T2.min", RatioFn::T2, all, ExtremumKind::Min, (1, 1), 1.0, tol),
        extremum_claim("F_T2.max", RatioFn::T2, all, ExtremumKind::Max, (top, top), nf - 1.0, tol),
        extremum_claim(
            "F_T4.min",
            RatioFn::T4,
            two,
            ExtremumKind::Min,
            (top, top),
            2.0 * (nf - 2.0) / (nf - 1.0).powi(2),
            tol,
        ),
        extremum_claim(
            "F_T4.max",
            RatioFn::T4,
            two,
            ExtremumKind::Max,
            (2, top),
            (nf + 1.0).powi(2) / (16.0 * (nf - 1.0)),
            tol,
        ),
    ];
    if n >= 9 {
        claims.push(extremum_claim(
            "F_T6.min",
            RatioFn::T6,
            conn,
            ExtremumKind::Min,
            (1, 8),
            9.0 * (8.0f64 / 7.0).powi(6),
            tol,
        ));
    }
    claims.push(extremum_claim(
        "F_T6.max",
        RatioFn::T6,
        conn,
        ExtremumKind::Max,
        (top, top),
        (nf - 1.0).powi(13) / (32.0 * (nf - 2.0).powi(6)),
        tol,
    ));
    claims.push(trend_claim(
        "F_T6.decreasing",
        RatioFn::T6,
        GridLine {
            fixed: 1,
            range: 2..=7.min(n - 1),
        },
        Trend::Decreasing,
    ));
    claims.push(trend_claim(
        "F_T6.increasing",
        RatioFn::T6,
        GridLine {
            fixed: 1,
            range: 8..=n - 1,
        },
        Trend::Increasing,
    ));
    let t1_rows = (2..n).all(|b| {
        monotonicity_audit(
            RatioFn::T1,
            &GridLine {
                fixed: b,
                range: 1..=b,
            },
        )
        .is_ok_and(|m| m.is_monotone(Trend::Increasing))
    });
    claims.push(ProofClaim {
        id: "F_T1.increasing".into(),
        claim: format!("{} along a=b' for b in 1..=b' is increasing, every b' < {n}", RatioFn::T1),
        observed: if t1_rows { "increasing".into() } else { "not monotone".into() },
        verdict: if t1_rows { ClaimVerdict::Confirmed } else { ClaimVerdict::Discrepancy },
    });

    let concordance: Vec<Concordance> = catalog.iter().filter_map(|b| concordance(b, n, tol)).collect();
    let mut discrepancies: Vec<String> = claims
        .iter()
        .filter(|c| c.verdict == ClaimVerdict::Discrepancy)
        .map(|c| c.id.clone())
        .collect();
    discrepancies.extend(
        concordance
            .iter()
            .filter(|c| {
                matches!(
                    c.status,
                    ConcordanceStatus::Unsafe | ConcordanceStatus::NotAttained | ConcordanceStatus::StrictTouches
                )
            })
            .map(|c| c.bound_id.clone()),
    );
    Ok(ProofReport {
        n,
        claims,
        concordance,
        discrepancies,
    })
}
