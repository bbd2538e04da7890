//! Canonical graph6 strings for small graphs.
//!
//! Vertices are first split into an ordered partition by iterated degree
//! refinement (colour = rank of (colour, sorted neighbour colours)). The
//! canonical labelling is the one, among labellings that list the cells in
//! order, whose graph6 string is lexicographically smallest. Because the
//! ordered partition is itself isomorphism invariant, isomorphic graphs get
//! equal strings.
//!
//! The graph6 bit sequence runs column by column, so once positions
//! `0..=j` are filled the first `j` columns are fixed; the search prunes any
//! branch whose prefix already exceeds the best found.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::EnumerationError;
use crate::graph::{to_graph6, BitIter, Graph};

/// Largest order accepted by [`canonical_form`].
pub const CANONICAL_CAP: usize = 10;

/// Canonical graph6 string: equal for two graphs iff they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, EnumerationError> {
    Ok(CanonicalForm(to_graph6(&canonical_graph(g)?)))
}

/// The graph relabelled into canonical order.
pub fn canonical_graph(g: &Graph) -> Result<Graph, EnumerationError> {
    let n = g.order();
    if n > CANONICAL_CAP {
        return Err(EnumerationError::CanonicalCap { n, cap: CANONICAL_CAP });
    }
    let masks: Vec<u64> = (0..n).map(|u| g.mask(u).expect("n <= 10")).collect();
    let (_, order) = canonical_labelling(&masks);
    Ok(Graph::from_masks(&relabel_masks(&masks, &order)))
}

/// `order[p]` is the vertex placed at position `p`. Returns the packed
/// graph6 bit key (first bit most significant) and the labelling.
pub(crate) fn canonical_labelling(masks: &[u64]) -> (u64, Vec<usize>) {
    let n = masks.len();
    let colour = refine(masks);
    let mut cell_of_pos = colour.clone();
    cell_of_pos.sort_unstable();
    let mut search = Search {
        masks,
        colour: &colour,
        cell_of_pos,
        order: vec![0; n],
        cols: vec![0; n],
        best: None,
        used: 0,
    };
    search.descend(0);
    let (cols, order) = search.best.expect("at least one labelling");
    (pack(&cols, n), order)
}

/// Relabels so that position `p` holds vertex `order[p]`.
pub(crate) fn relabel_masks(masks: &[u64], order: &[usize]) -> Vec<u64> {
    let n = masks.len();
    let mut pos = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    order
        .iter()
        .map(|&v| BitIter(masks[v]).fold(0u64, |acc, u| acc | 1 << pos[u]))
        .collect()
}

/// Stable colour refinement; returns colour ranks (0 = first cell).
fn refine(masks: &[u64]) -> Vec<usize> {
    let n = masks.len();
    let mut colour: Vec<usize> = masks.iter().map(|m| m.count_ones() as usize).collect();
    let initial: Vec<Vec<usize>> = colour.iter().map(|&c| vec![c]).collect();
    let mut classes = rank(&initial, &mut colour);
    loop {
        let sigs: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = BitIter(masks[v]).map(|u| colour[u]).collect();
                s.sort_unstable();
                s.insert(0, colour[v]);
                s
            })
            .collect();
        let mut next = vec![0; n];
        let k = rank(&sigs, &mut next);
        colour = next;
        if k == classes {
            return colour;
        }
        classes = k;
    }
}

/// Replaces each signature by the rank of its value among the distinct
/// signatures. Returns the number of distinct values.
fn rank(sigs: &[Vec<usize>], out: &mut [usize]) -> usize {
    let mut distinct: Vec<Vec<usize>> = sigs.to_vec();
    distinct.sort();
    distinct.dedup();
    for (o, s) in out.iter_mut().zip(sigs.iter()) {
        *o = distinct.binary_search(s).expect("present");
    }
    distinct.len()
}

struct Search<'a> {
    masks: &'a [u64],
    colour: &'a [usize],
    cell_of_pos: Vec<usize>,
    order: Vec<usize>,
    /// `cols[j]` holds the bits `(0,j), ..., (j-1,j)`, `(0,j)` most significant.
    cols: Vec<u64>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    used: u64,
}

impl Search<'_> {
    fn descend(&mut self, pos: usize) {
        let n = self.order.len();
        if pos == n {
            if self.best.as_ref().is_none_or(|(b, _)| self.cols < *b) {
                self.best = Some((self.cols.clone(), self.order.clone()));
            }
            return;
        }
        for v in 0..n {
            if self.used >> v & 1 == 1 || self.colour[v] != self.cell_of_pos[pos] {
                continue;
            }
            self.cols[pos] = (0..pos).fold(0u64, |acc, i| (acc << 1) | (self.masks[v] >> self.order[i] & 1));
            if let Some((b, _)) = &self.best {
                if self.cols[..=pos] > b[..=pos] {
                    continue;
                }
            }
            self.order[pos] = v;
            self.used |= 1 << v;
            self.descend(pos + 1);
            self.used &= !(1 << v);
        }
    }
}

fn pack(cols: &[u64], n: usize) -> u64 {
    (1..n).fold(0u64, |acc, j| (acc << j) | cols[j])
}
