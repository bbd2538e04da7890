use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Graph;

/// Unordered endpoint degrees of an edge, stored with `a <= b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DegreePair {
    a: u32,
    b: u32,
}

impl DegreePair {
    /// Normalizes the order of the two degrees.
    pub fn new(x: u32, y: u32) -> Self {
        Self {
            a: x.min(y),
            b: x.max(y),
        }
    }

    pub fn low(self) -> u32 {
        self.a
    }

    pub fn high(self) -> u32 {
        self.b
    }

    pub fn sum(self) -> u32 {
        self.a + self.b
    }

    pub fn product(self) -> u32 {
        self.a * self.b
    }
}

impl fmt::Display for DegreePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Multiset of edge degree pairs. Every index in this crate is a function of
/// it alone, so two graphs with equal partitions have identical index values.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct EdgeDegreePartition {
    entries: BTreeMap<DegreePair, usize>,
}

impl EdgeDegreePartition {
    pub fn of(g: &Graph) -> Self {
        let deg = g.degree_sequence();
        let mut entries = BTreeMap::new();
        for (u, v) in g.edges() {
            *entries
                .entry(DegreePair::new(deg[u] as u32, deg[v] as u32))
                .or_insert(0) += 1;
        }
        Self { entries }
    }

    /// Builds a partition directly from `(pair, multiplicity)` entries;
    /// zero multiplicities are dropped and repeated pairs accumulate.
    pub fn from_entries<I: IntoIterator<Item = (DegreePair, usize)>>(entries: I) -> Self {
        let mut map = BTreeMap::new();
        for (p, k) in entries.into_iter().filter(|&(_, k)| k > 0) {
            *map.entry(p).or_insert(0) += k;
        }
        Self { entries: map }
    }

    /// Entries in increasing pair order.
    pub fn iter(&self) -> impl Iterator<Item = (DegreePair, usize)> + '_ {
        self.entries.iter().map(|(&p, &k)| (p, k))
    }

    pub fn multiplicity(&self, p: DegreePair) -> usize {
        self.entries.get(&p).copied().unwrap_or(0)
    }

    /// Total multiplicity, i.e. the edge count of the source graph.
    pub fn edge_count(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, p: DegreePair) -> bool {
        self.entries.contains_key(&p)
    }
}

impl fmt::Display for EdgeDegreePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (p, k)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}: {k}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, FamilyId};

    fn part(f: FamilyId) -> EdgeDegreePartition {
        make_family(f).unwrap().edge_degree_partition()
    }

    #[test]
    fn family_partitions() {
        let c5 = part(FamilyId::Cycle(5));
        assert_eq!(c5.iter().collect::<Vec<_>>(), vec![(DegreePair::new(2, 2), 5)]);
        let s4 = part(FamilyId::Star(4));
        assert_eq!(s4.iter().collect::<Vec<_>>(), vec![(DegreePair::new(1, 4), 4)]);
        let t = part(FamilyId::DoubleStarT);
        assert_eq!(
            t.iter().collect::<Vec<_>>(),
            vec![(DegreePair::new(1, 4), 6), (DegreePair::new(4, 4), 1)]
        );
        assert_eq!(t.edge_count(), 7);
        assert_eq!(t.to_string(), "{(1,4): 6, (4,4): 1}");
    }

    #[test]
    fn pair_is_normalized() {
        assert_eq!(DegreePair::new(5, 2), DegreePair::new(2, 5));
        assert_eq!(DegreePair::new(5, 2).low(), 2);
    }

    #[test]
    fn from_entries_accumulates() {
        let p = DegreePair::new(2, 3);
        let e = EdgeDegreePartition::from_entries([(p, 2), (DegreePair::new(3, 2), 1), (DegreePair::new(1, 1), 0)]);
        assert_eq!(e.multiplicity(p), 3);
        assert_eq!(e.len(), 1);
    }
}
