//! Degree-based topological indices as sums of per-edge terms over the
//! edge-degree partition.
//!
//! | id       | edge term at degrees (a, b)         |
//! |----------|-------------------------------------|
//! | `R`      | 1 / sqrt(ab)                        |
//! | `H`      | 2 / (a + b)                         |
//! | `ABC`    | sqrt((a + b - 2) / (ab))            |
//! | `X`      | 1 / sqrt(a + b)                     |
//! | `GA`     | 2 sqrt(ab) / (a + b)                |
//! | `AZI`    | (ab / (a + b - 2))^3                |
//! | `M2STAR` | 1 / (ab)                            |
//!
//! `AZI` is undefined on an edge whose endpoints both have degree 1, i.e. on
//! a `K2` component.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::{DegreePair, EdgeDegreePartition, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum IndexId {
    #[serde(rename = "R")]
    Randic,
    #[serde(rename = "H")]
    Harmonic,
    #[serde(rename = "ABC")]
    AtomBondConnectivity,
    #[serde(rename = "X")]
    SumConnectivity,
    #[serde(rename = "GA")]
    GeometricArithmetic,
    #[serde(rename = "AZI")]
    AugmentedZagreb,
    #[serde(rename = "M2STAR")]
    ModifiedSecondZagreb,
}

impl IndexId {
    pub const ALL: [IndexId; 7] = [
        IndexId::Randic,
        IndexId::Harmonic,
        IndexId::AtomBondConnectivity,
        IndexId::SumConnectivity,
        IndexId::GeometricArithmetic,
        IndexId::AugmentedZagreb,
        IndexId::ModifiedSecondZagreb,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            IndexId::Randic => "R",
            IndexId::Harmonic => "H",
            IndexId::AtomBondConnectivity => "ABC",
            IndexId::SumConnectivity => "X",
            IndexId::GeometricArithmetic => "GA",
            IndexId::AugmentedZagreb => "AZI",
            IndexId::ModifiedSecondZagreb => "M2STAR",
        }
    }

    fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for IndexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for IndexId {
    type Err = IndexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IndexId::ALL
            .into_iter()
            .find(|i| i.symbol().eq_ignore_ascii_case(s))
            .ok_or_else(|| IndexError::UnknownIndex(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IndexError {
    #[error("AZI undefined on an isolated-edge component (degree pair (1,1))")]
    AziUndefined,
    #[error("degree pair {0} has a zero degree")]
    ZeroDegree(DegreePair),
    #[error("unknown index {0:?}")]
    UnknownIndex(String),
}

/// The value of one index on one graph.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IndexValue {
    pub index: IndexId,
    pub value: f64,
}

/// Edge term evaluated at real-valued degrees. No domain checks: the AZI
/// term at `a + b = 2` is infinite.
pub fn edge_term_real(idx: IndexId, a: f64, b: f64) -> f64 {
    let (s, p) = (a + b, a * b);
    match idx {
        IndexId::Randic => 1.0 / p.sqrt(),
        IndexId::Harmonic => 2.0 / s,
        IndexId::AtomBondConnectivity => ((s - 2.0) / p).sqrt(),
        IndexId::SumConnectivity => 1.0 / s.sqrt(),
        IndexId::GeometricArithmetic => 2.0 * p.sqrt() / s,
        IndexId::AugmentedZagreb => (p / (s - 2.0)).powi(3),
        IndexId::ModifiedSecondZagreb => 1.0 / p,
    }
}

/// Per-edge summand of `idx` at endpoint degrees `p`.
pub fn edge_term(idx: IndexId, p: DegreePair) -> Result<f64, IndexError> {
    if p.low() == 0 {
        return Err(IndexError::ZeroDegree(p));
    }
    if idx == IndexId::AugmentedZagreb && p.sum() == 2 {
        return Err(IndexError::AziUndefined);
    }
    Ok(edge_term_real(idx, p.low() as f64, p.high() as f64))
}

/// Sum of multiplicity times edge term, in increasing pair order.
pub fn index_of_partition(idx: IndexId, part: &EdgeDegreePartition) -> Result<f64, IndexError> {
    part.iter()
        .try_fold(0.0, |acc, (p, k)| Ok(acc + k as f64 * edge_term(idx, p)?))
}

pub fn index_value(idx: IndexId, g: &Graph) -> Result<IndexValue, IndexError> {
    Ok(IndexValue {
        index: idx,
        value: index_of_partition(idx, &g.edge_degree_partition())?,
    })
}

/// All seven indices of one graph. An undefined AZI is stored as `None`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndexTable {
    values: [Option<f64>; 7],
}

impl IndexTable {
    pub fn of_partition(part: &EdgeDegreePartition) -> Self {
        let mut values = [None; 7];
        for idx in IndexId::ALL {
            values[idx.slot()] = index_of_partition(idx, part).ok();
        }
        Self { values }
    }

    pub fn get(&self, idx: IndexId) -> Option<f64> {
        self.values[idx.slot()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (IndexId, Option<f64>)> + '_ {
        IndexId::ALL.into_iter().map(|i| (i, self.get(i)))
    }
}

/// One pass over the partition producing every index.
pub fn all_indices(g: &Graph) -> IndexTable {
    IndexTable::of_partition(&g.edge_degree_partition())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, FamilyId};
    use IndexId::*;

    const EPS: f64 = 1e-12;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= EPS * a.abs().max(b.abs()).max(1.0)
    }

    fn fam(f: FamilyId) -> Graph {
        make_family(f).unwrap()
    }

    #[test]
    fn edge_terms() {
        let p = DegreePair::new;
        assert_eq!(edge_term(GeometricArithmetic, p(2, 2)).unwrap(), 1.0);
        assert_eq!(edge_term(AugmentedZagreb, p(2, 2)).unwrap(), 8.0);
        assert_eq!(edge_term(AtomBondConnectivity, p(1, 1)).unwrap(), 0.0);
        assert!(close(edge_term(SumConnectivity, p(1, 8)).unwrap(), 1.0 / 3.0));
        assert_eq!(edge_term(AugmentedZagreb, p(1, 1)), Err(IndexError::AziUndefined));
        assert!(matches!(edge_term(Randic, p(0, 3)), Err(IndexError::ZeroDegree(_))));
    }

    #[test]
    fn named_graph_values() {
        assert_eq!(index_value(Randic, &fam(FamilyId::Path(2))).unwrap().value, 1.0);
        for n in 3..=30 {
            let c = fam(FamilyId::Cycle(n));
            assert!(close(index_value(AugmentedZagreb, &c).unwrap().value, 8.0 * n as f64));
            assert!(close(index_value(GeometricArithmetic, &c).unwrap().value, n as f64));
        }
        let p3 = fam(FamilyId::Path(3));
        assert!(close(index_value(ModifiedSecondZagreb, &p3).unwrap().value, 1.0));
        assert!(close(index_value(AtomBondConnectivity, &p3).unwrap().value, 2f64.sqrt()));
        let s8 = fam(FamilyId::Star(8));
        assert!(close(index_value(AugmentedZagreb, &s8).unwrap().value, 4096.0 / 343.0));
        assert!(close(index_value(SumConnectivity, &s8).unwrap().value, 8.0 / 3.0));
        // T*: 6 x (1,4) + 1 x (4,4)
        let t = fam(FamilyId::DoubleStarT);
        let abc = 3.0 * 3f64.sqrt() + 6f64.sqrt() / 4.0;
        assert!(close(index_value(AtomBondConnectivity, &t).unwrap().value, abc));
        assert!((abc - 5.808525).abs() < 1e-6);
        assert!(close(index_value(GeometricArithmetic, &t).unwrap().value, 5.8));
    }

    #[test]
    fn table_for_k3_p2_star4() {
        let k3 = all_indices(&fam(FamilyId::Complete(3)));
        let expect = [
            (Randic, 1.5),
            (Harmonic, 1.5),
            (SumConnectivity, 1.5),
            (AtomBondConnectivity, 3.0 / 2f64.sqrt()),
            (GeometricArithmetic, 3.0),
            (AugmentedZagreb, 24.0),
            (ModifiedSecondZagreb, 0.75),
        ];
        for (i, v) in expect {
            assert!(close(k3.get(i).unwrap(), v), "{i}");
        }
        let p2 = all_indices(&fam(FamilyId::Path(2)));
        assert_eq!(p2.get(AugmentedZagreb), None);
        assert!(close(p2.get(SumConnectivity).unwrap(), 0.5f64.sqrt()));
        assert_eq!(p2.get(AtomBondConnectivity), Some(0.0));
        let s4 = all_indices(&fam(FamilyId::Star(4)));
        let expect = [
            (Randic, 2.0),
            (Harmonic, 1.6),
            (SumConnectivity, 4.0 / 5f64.sqrt()),
            (AtomBondConnectivity, 2.0 * 3f64.sqrt()),
            (GeometricArithmetic, 3.2),
            (AugmentedZagreb, 4.0 * (4.0f64 / 3.0).powi(3)),
            (ModifiedSecondZagreb, 1.0),
        ];
        for (i, v) in expect {
            assert!(close(s4.get(i).unwrap(), v), "{i}");
        }
    }

    #[test]
    fn index_id_parsing() {
        for i in IndexId::ALL {
            assert_eq!(i.symbol().parse::<IndexId>().unwrap(), i);
        }
        assert_eq!("ga".parse::<IndexId>().unwrap(), GeometricArithmetic);
        assert!("ZZ".parse::<IndexId>().is_err());
        assert_eq!(serde_json::to_string(&ModifiedSecondZagreb).unwrap(), "\"M2STAR\"");
    }

    #[test]
    fn abc_zero_only_at_isolated_edge() {
        for a in 1..=20u32 {
            for b in a..=20 {
                let t = edge_term(AtomBondConnectivity, DegreePair::new(a, b)).unwrap();
                assert_eq!(t == 0.0, (a, b) == (1, 1));
            }
        }
    }
}
