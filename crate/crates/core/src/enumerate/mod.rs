//! Isomorphism-reduced populations of connected graphs.
//!
//! Graphs of order `n` are produced by extending every graph of order
//! `n - 1` with a new vertex joined to each subset of the old vertices, then
//! deduplicating by canonical form. Every graph of order `n` arises this way
//! (delete its last vertex), so the stream is complete; canonical forms make
//! it duplicate free.

mod canonical;
mod population;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use canonical::{canonical_form, canonical_graph, CanonicalForm, CANONICAL_CAP};
pub use population::{parse_population, Population};

use crate::graph::{Graph, GraphError};
use canonical::{canonical_labelling, relabel_masks};

/// Largest order [`enumerate_connected`] accepts.
pub const ENUMERATION_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerationError {
    #[error("order {n} outside the supported range 1..={cap}")]
    OrderCap { n: usize, cap: usize },
    #[error("canonical form is capped at {cap} vertices, graph has {n}")]
    CanonicalCap { n: usize, cap: usize },
    #[error("population line {line}: {source}")]
    Population { line: usize, source: GraphError },
}

/// Degree-based filters applied to an enumerated stream.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Filters {
    pub delta_min: Option<usize>,
    pub molecular: bool,
    pub regular_only: bool,
}

impl Filters {
    pub fn accepts(&self, g: &Graph) -> bool {
        self.delta_min.is_none_or(|d| g.min_degree() >= d)
            && (!self.molecular || g.is_molecular())
            && (!self.regular_only || g.is_regular(None))
    }

    /// Short human-readable suffix, empty when no filter is set.
    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        if let Some(d) = self.delta_min {
            parts.push(format!("delta>={d}"));
        }
        if self.molecular {
            parts.push("molecular".to_string());
        }
        if self.regular_only {
            parts.push("regular".to_string());
        }
        parts.join(",")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationSpec {
    pub n: usize,
    pub filters: Filters,
}

impl EnumerationSpec {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            filters: Filters::default(),
        }
    }

    pub fn with_filters(n: usize, filters: Filters) -> Self {
        Self { n, filters }
    }
}

/// One representative per isomorphism class of connected graphs of order
/// `spec.n` that pass the filters, sorted by canonical graph6 string. Each
/// emitted graph is labelled canonically.
pub fn enumerate_connected(spec: &EnumerationSpec) -> Result<Vec<Graph>, EnumerationError> {
    if spec.n == 0 || spec.n > ENUMERATION_CAP {
        return Err(EnumerationError::OrderCap {
            n: spec.n,
            cap: ENUMERATION_CAP,
        });
    }
    let mut out: Vec<(String, Graph)> = all_graphs(spec.n)
        .into_iter()
        .map(|masks| Graph::from_masks(&masks))
        .filter(|g| g.is_connected() && spec.filters.accepts(g))
        .map(|g| (g.to_string(), g))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, g)| g).collect())
}

/// Connected graphs over a range of orders, concatenated in order.
pub fn enumerate_orders(
    orders: std::ops::RangeInclusive<usize>,
    filters: Filters,
) -> Result<Vec<Graph>, EnumerationError> {
    let mut all = Vec::new();
    for n in orders {
        all.extend(enumerate_connected(&EnumerationSpec::with_filters(n, filters))?);
    }
    Ok(all)
}

/// Canonical adjacency masks of every graph (connected or not) of order `n`,
/// keyed and ordered by canonical key.
fn all_graphs(n: usize) -> Vec<Vec<u64>> {
    let mut level: Vec<Vec<u64>> = vec![vec![0]];
    for k in 2..=n {
        let parents = std::mem::take(&mut level);
        let children: BTreeMap<u64, Vec<u64>> = parents
            .par_iter()
            .flat_map_iter(|parent| {
                (0u64..1 << (k - 1)).map(move |subset| {
                    let mut masks: Vec<u64> = parent
                        .iter()
                        .enumerate()
                        .map(|(v, &m)| m | (subset >> v & 1) << (k - 1))
                        .collect();
                    masks.push(subset);
                    let (key, order) = canonical_labelling(&masks);
                    (key, relabel_masks(&masks, &order))
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        level = children.into_values().collect();
    }
    level
}
