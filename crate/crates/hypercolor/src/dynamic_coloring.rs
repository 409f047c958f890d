//! Dynamic graph colorings via the neighborhood hypergraph.
//!
//! A coloring is dynamic when every vertex of degree at least 2 sees two
//! different colors among its neighbors. That is exactly a proper coloring
//! of the hypergraph whose hyperedges are the neighborhoods of those
//! vertices, so the hypergraph pipeline applies directly.

use thiserror::Error;

use crate::coloring::Coloring;
use crate::hypergraph::Hypergraph;
use crate::multigraph::Multigraph;
use crate::params::compute_k;
use crate::proper_coloring::{color_k, color_k_plus_1, PipelineError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DynamicError {
    #[error(transparent)]
    Pipeline(#[from] PipelineError),
}

/// The hypergraph of simple neighborhoods `N(v)` over all vertices `v` of
/// simple degree at least 2, with the originating vertex per hyperedge.
/// Vertices of degree 0 or 1 contribute no hyperedge (their neighborhood
/// could not contain two colors), but still appear inside others'.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodHypergraph {
    pub hypergraph: Hypergraph,
    /// `origin[j]` is the vertex whose neighborhood is hyperedge `j`.
    pub origin: Vec<usize>,
}

pub fn neighborhood_hypergraph(g: &Multigraph) -> NeighborhoodHypergraph {
    let s = g.simple_projection();
    let mut hyperedges = Vec::new();
    let mut origin = Vec::new();
    for v in 0..s.vertex_count() {
        if s.degree(v) >= 2 {
            hyperedges.push(s.neighbors(v).to_vec());
            origin.push(v);
        }
    }
    let hypergraph = Hypergraph::new(g.vertex_count(), hyperedges)
        .expect("neighborhoods of degree->=2 vertices are valid hyperedges");
    NeighborhoodHypergraph { hypergraph, origin }
}

/// A dynamic coloring run: the coloring plus the graph-level bound it
/// satisfies.
#[derive(Debug, Clone)]
pub struct DynamicRun {
    pub coloring: Coloring,
    /// `ceil(2*Delta / delta_eff)` of the graph, where `delta_eff` is the
    /// minimum simple degree among vertices of degree >= 2. Zero when no
    /// such vertex exists.
    pub k: usize,
    /// When true the coloring uses at most `k` colors, otherwise `k + 1`.
    pub within_k: bool,
}

/// Colors `g` dynamically. With `delta_eff >= 3` and `k >= 3` at most `k`
/// colors are used, otherwise at most `k + 1`; unconstrained vertices come
/// out color 0. Isolated and pendant vertices are fine: `delta_eff` simply
/// ignores them.
pub fn dynamic_color(g: &Multigraph) -> Result<Coloring, DynamicError> {
    Ok(dynamic_color_run(g)?.coloring)
}

pub fn dynamic_color_run(g: &Multigraph) -> Result<DynamicRun, DynamicError> {
    let s = g.simple_projection();
    let delta_eff = (0..s.vertex_count())
        .map(|v| s.degree(v))
        .filter(|&d| d >= 2)
        .min();
    let Some(delta_eff) = delta_eff else {
        // Nothing is constrained; all one color.
        return Ok(DynamicRun {
            coloring: Coloring::constant(g.vertex_count(), 1),
            k: 0,
            within_k: false,
        });
    };
    let k = compute_k(s.max_degree(), delta_eff)
        .expect("delta_eff >= 2 by construction")
        .k;
    let nh = neighborhood_hypergraph(g);
    if delta_eff >= 3 && k >= 3 {
        // The neighborhood hypergraph has min edge size delta_eff >= 3; its
        // own degree bound never exceeds the graph's, but its own k may
        // drop below 3, in which case the k+1 route still fits within k.
        let coloring = match color_k(&nh.hypergraph) {
            Ok(c) => c,
            Err(PipelineError::UseKPlusOne { .. }) => color_k_plus_1(&nh.hypergraph)?,
            Err(e) => return Err(e.into()),
        };
        debug_assert!(coloring.palette() <= k);
        return Ok(DynamicRun {
            coloring,
            k,
            within_k: true,
        });
    }
    let coloring = color_k_plus_1(&nh.hypergraph)?;
    debug_assert!(coloring.palette() <= k + 1);
    Ok(DynamicRun {
        coloring,
        k,
        within_k: false,
    })
}
