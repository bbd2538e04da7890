//! Exact chromatic number by branch and bound over proper colourings.

use super::{BitIter, Graph, GraphError};

/// Default vertex cap for exact colouring.
pub const DEFAULT_CHROMATIC_CAP: usize = 12;

/// Exact chromatic number for graphs within [`DEFAULT_CHROMATIC_CAP`].
pub fn chromatic_number(g: &Graph) -> Result<usize, GraphError> {
    chromatic_number_with_cap(g, DEFAULT_CHROMATIC_CAP)
}

pub fn chromatic_number_with_cap(g: &Graph, cap: usize) -> Result<usize, GraphError> {
    let n = g.order();
    if n > cap || n > 64 {
        return Err(GraphError::ChromaticCap { n, cap: cap.min(64) });
    }
    if g.size() == 0 {
        return Ok(1);
    }
    let adj: Vec<u64> = (0..n).map(|u| g.mask(u).expect("n <= 64")).collect();
    let lower = greedy_clique(&adj);
    let upper = greedy_colouring(&adj);
    for k in lower..upper {
        let mut colour = vec![usize::MAX; n];
        if colourable(&adj, k, &mut colour, 0) {
            return Ok(k);
        }
    }
    Ok(upper)
}

/// Size of a clique grown greedily from the highest-degree vertex.
fn greedy_clique(adj: &[u64]) -> usize {
    (0..adj.len())
        .map(|start| {
            let mut cand = adj[start];
            let mut size = 1;
            while cand != 0 {
                let v = BitIter(cand)
                    .max_by_key(|&v| (adj[v] & cand).count_ones())
                    .expect("cand nonempty");
                size += 1;
                cand &= adj[v];
            }
            size
        })
        .max()
        .unwrap_or(1)
}

/// Colours used by first-fit colouring in vertex order.
fn greedy_colouring(adj: &[u64]) -> usize {
    let mut colour = vec![0usize; adj.len()];
    let mut used = 0;
    for v in 0..adj.len() {
        let taken: u64 = BitIter(adj[v] & ((1u64 << v) - 1)).fold(0, |acc, u| acc | 1 << colour[u]);
        colour[v] = (!taken).trailing_zeros() as usize;
        used = used.max(colour[v] + 1);
    }
    used
}

/// Backtracking k-colouring in vertex order; a new colour is only opened
/// one past the largest used so far, which removes colour-permutation symmetry.
fn colourable(adj: &[u64], k: usize, colour: &mut [usize], v: usize) -> bool {
    if v == adj.len() {
        return true;
    }
    let max_used = colour[..v].iter().copied().max().map_or(0, |c| c + 1);
    for c in 0..k.min(max_used + 1) {
        if BitIter(adj[v]).all(|u| colour[u] != c) {
            colour[v] = c;
            if colourable(adj, k, colour, v + 1) {
                return true;
            }
        }
    }
    colour[v] = usize::MAX;
    false
}
