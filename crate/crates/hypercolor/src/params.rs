//! Derived instance parameters: the color bound `k = ceil(2*Delta/delta)`.

use thiserror::Error;

use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamsError {
    /// Hyperedges of size below two make the bound meaningless.
    #[error("minimum hyperedge size must be at least 2, got {0}")]
    InvalidParameters(usize),
}

/// Instance parameters from which the palette bound is derived.
///
/// `k` is always `ceil(2 * max_degree / min_edge_size)`, computed in exact
/// integer arithmetic. A hypergraph with these parameters admits an image of
/// maximum degree at most `k`, hence a proper coloring in `k + 1` colors
/// (and in `k` colors when `min_edge_size >= 3` and `k >= 3`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Parameters {
    /// Minimum hyperedge size (delta).
    pub min_edge_size: usize,
    /// Maximum vertex degree of the hypergraph (Delta).
    pub max_degree: usize,
    /// The bound `ceil(2 * max_degree / min_edge_size)`.
    pub k: usize,
}

/// Computes `k = ceil(2 * max_degree / min_edge_size)` by integer division.
///
/// `max_degree = 0` (no hyperedges touch any vertex) yields `k = 0`.
pub fn compute_k(max_degree: usize, min_edge_size: usize) -> Result<Parameters, ParamsError> {
    if min_edge_size < 2 {
        return Err(ParamsError::InvalidParameters(min_edge_size));
    }
    let k = (2 * max_degree).div_ceil(min_edge_size);
    Ok(Parameters {
        min_edge_size,
        max_degree,
        k,
    })
}

impl Parameters {
    /// Parameters of a concrete hypergraph. With no hyperedges the minimum
    /// edge size is undefined; any value gives `k = 0` there, so `2` is used.
    pub fn for_hypergraph(h: &Hypergraph) -> Self {
        let stats = h.stats();
        compute_k(stats.max_degree, stats.min_edge_size.unwrap_or(2))
            .expect("hypergraph invariants guarantee min edge size >= 2")
    }
}
