use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// Named graph families that appear as extremal cases of the bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyId {
    /// Path on `n >= 1` vertices.
    Path(usize),
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
    /// Complete graph on `n >= 1` vertices.
    Complete(usize),
    /// Star with `k >= 1` leaves (`k + 1` vertices).
    Star(usize),
    /// The 8-vertex tree formed by joining the centres of two `K_{1,3}`.
    DoubleStarT,
    /// A `degree`-regular circulant graph on `n` vertices
    /// (needs `degree < n` and `n * degree` even).
    Regular { n: usize, degree: usize },
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Path(n) => write!(f, "P{n}"),
            Self::Cycle(n) => write!(f, "C{n}"),
            Self::Complete(n) => write!(f, "K{n}"),
            Self::Star(k) => write!(f, "S1,{k}"),
            Self::DoubleStarT => f.write_str("T*"),
            Self::Regular { n, degree } => write!(f, "{degree}-regular circulant on {n}"),
        }
    }
}

/// Canonical labelled instance of a family.
pub fn make_family(f: FamilyId) -> Result<Graph, GraphError> {
    let bad = |msg: &str| Err(GraphError::FamilyParameter(format!("{f}: {msg}")));
    match f {
        FamilyId::Path(n) => {
            if n < 1 {
                return bad("path needs n >= 1");
            }
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        FamilyId::Cycle(n) => {
            if n < 3 {
                return bad("cycle needs n >= 3");
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        FamilyId::Complete(n) => {
            if n < 1 {
                return bad("complete graph needs n >= 1");
            }
            Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
        }
        FamilyId::Star(k) => {
            if k < 1 {
                return bad("star needs k >= 1 leaves");
            }
            Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))
        }
        FamilyId::DoubleStarT => Graph::from_edges(
            8,
            [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)],
        ),
        FamilyId::Regular { n, degree } => {
            if degree >= n || (n * degree) % 2 == 1 {
                return bad("needs degree < n and n * degree even");
            }
            let mut edges = Vec::new();
            for i in 0..n {
                for off in 1..=degree / 2 {
                    let j = (i + off) % n;
                    if i < j || off * 2 != n {
                        edges.push((i.min(j), i.max(j)));
                    }
                }
                if degree % 2 == 1 && i < n / 2 {
                    edges.push((i, i + n / 2));
                }
            }
            edges.sort_unstable();
            edges.dedup();
            Graph::from_edges(n, edges)
        }
    }
}
