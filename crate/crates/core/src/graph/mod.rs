//! Simple undirected graphs stored as per-vertex adjacency bitsets, plus the
//! structural predicates the inequality catalog uses as hypotheses.

mod chromatic;
mod edgelist;
mod families;
pub(crate) mod graph6;
mod partition;

use std::collections::VecDeque;
use std::fmt;

pub use chromatic::{chromatic_number, chromatic_number_with_cap, DEFAULT_CHROMATIC_CAP};
pub use edgelist::{parse_edge_list, to_edge_list};
pub use families::{make_family, FamilyId};
pub use graph6::{parse_graph6, to_graph6};
pub use partition::{DegreePair, EdgeDegreePartition};

/// Errors raised while building, parsing, or analysing a graph.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("malformed graph6 string at byte {position}: {reason}")]
    Graph6 { position: usize, reason: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid family parameter: {0}")]
    FamilyParameter(String),
    #[error("exact chromatic number is capped at {cap} vertices, graph has {n}")]
    ChromaticCap { n: usize, cap: usize },
}

/// A simple undirected graph on vertices `0..n`.
///
/// Rows are bitsets of `words` 64-bit words each. Graphs are immutable once
/// built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, repeats and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let words = n.div_ceil(64);
        Ok(Self {
            n,
            words,
            rows: vec![0; n * words],
            m: 0,
        })
    }

    /// Builds a graph on at most 64 vertices from one adjacency mask per vertex.
    /// The masks must already be symmetric and loop-free.
    pub(crate) fn from_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        debug_assert!((1..=64).contains(&n));
        let m = masks.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Self {
            n,
            words: 1,
            rows: masks.to_vec(),
            m,
        }
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.set(u, v);
        self.set(v, u);
        self.m += 1;
        Ok(())
    }

    fn set(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] |= 1u64 << (v % 64);
    }

    fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Neighbours of `u` in increasing order.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(wi, &w)| {
            BitIter(w).map(move |b| wi * 64 + b)
        })
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Adjacency mask of `u` when the graph fits in one word per row.
    pub(crate) fn mask(&self, u: usize) -> Option<u64> {
        (self.words == 1).then(|| self.rows[u])
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    /// Minimum degree (the graph's delta).
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    /// Maximum degree (the graph's Delta).
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    /// True iff all degrees agree, and equal `d` when given.
    pub fn is_regular(&self, d: Option<usize>) -> bool {
        let first = self.degree(0);
        d.is_none_or(|d| d == first) && (1..self.n).all(|u| self.degree(u) == first)
    }

    /// Molecular graphs have maximum degree at most 4.
    pub fn is_molecular(&self) -> bool {
        self.max_degree() <= 4
    }

    /// Breadth-first reachability from vertex 0.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal the order");
        let mut seen = vec![false; self.n];
        for &p in perm {
            assert!(p < self.n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut g = Graph::empty(self.n).expect("n >= 1");
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v]);
            g.set(perm[v], perm[u]);
        }
        g.m = self.m;
        g
    }

    pub fn edge_degree_partition(&self) -> EdgeDegreePartition {
        EdgeDegreePartition::of(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}

/// Set-bit positions of a word, lowest first.
pub(crate) struct BitIter(pub(crate) u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}
