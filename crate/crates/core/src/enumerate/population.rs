use std::path::Path;

use super::{enumerate_orders, EnumerationError, Filters};
use crate::graph::{parse_edge_list, parse_graph6, Graph};

/// A named collection of graphs to audit.
#[derive(Debug, Clone, PartialEq)]
pub struct Population {
    pub descriptor: String,
    pub graphs: Vec<Graph>,
}

impl Population {
    /// All connected graphs with orders in `orders` passing `filters`.
    pub fn enumerated(
        orders: std::ops::RangeInclusive<usize>,
        filters: Filters,
    ) -> Result<Self, EnumerationError> {
        let range = if orders.start() == orders.end() {
            format!("n={}", orders.start())
        } else {
            format!("n={}..{}", orders.start(), orders.end())
        };
        let f = filters.describe();
        let descriptor = if f.is_empty() {
            format!("enumerate:{range}")
        } else {
            format!("enumerate:{range},{f}")
        };
        Ok(Self {
            descriptor,
            graphs: enumerate_orders(orders, filters)?,
        })
    }

    /// Reads a population file. Graph6 lines are the default; a file whose
    /// first content line is a bare integer is read as one edge-list graph.
    pub fn from_file(path: &Path) -> std::io::Result<Result<Self, EnumerationError>> {
        let text = std::fs::read_to_string(path)?;
        let descriptor = format!(
            "file:{}",
            path.file_name().map_or_else(|| path.display().to_string(), |f| f.to_string_lossy().into_owned())
        );
        Ok(Self::from_text(&descriptor, &text))
    }

    pub fn from_text(descriptor: &str, text: &str) -> Result<Self, EnumerationError> {
        let first = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'));
        let graphs = match first {
            Some(l) if l.bytes().all(|b| b.is_ascii_digit()) => {
                vec![parse_edge_list(text).map_err(|e| match e {
                    crate::graph::GraphError::Parse { line, .. } => EnumerationError::Population { line, source: e },
                    other => EnumerationError::Population { line: 1, source: other },
                })?]
            }
            _ => parse_population(text)?,
        };
        Ok(Self {
            descriptor: descriptor.to_string(),
            graphs,
        })
    }
}

/// One graph6 string per line; blank lines and `#` comments are skipped.
pub fn parse_population(text: &str) -> Result<Vec<Graph>, EnumerationError> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(line, l)| parse_graph6(l).map_err(|source| EnumerationError::Population { line, source }))
        .collect()
}
