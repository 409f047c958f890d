//! Images of hypergraphs: one graph edge per hyperedge, drawn inside it.
//!
//! An image of a hypergraph is a multigraph on the same vertices together
//! with a bijection `phi` from edge ids to hyperedge indices such that both
//! endpoints of every edge belong to the hyperedge it maps to. Parallel
//! edges mapping to distinct hyperedges are distinct.

use thiserror::Error;

use crate::hypergraph::Hypergraph;
use crate::multigraph::{Edge, Multigraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ImageError {
    #[error("image needs one edge per hyperedge: {edges} edges for {hyperedges} hyperedges")]
    EdgeCountMismatch { edges: usize, hyperedges: usize },
    #[error("edge {edge} endpoint {vertex} lies outside hyperedge {hyperedge}")]
    EndpointOutsideHyperedge {
        edge: usize,
        vertex: usize,
        hyperedge: usize,
    },
    #[error("invalid endpoints for edge {edge}")]
    BadEndpoints { edge: usize },
}

/// A multigraph image of a hypergraph, with the edge-to-hyperedge bijection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Image {
    hypergraph: Hypergraph,
    graph: Multigraph,
    /// `phi[edge_id]` is the hyperedge index the edge maps to.
    phi: Vec<usize>,
}

impl Image {
    /// Builds an image from chosen endpoint pairs, one per hyperedge in
    /// order; edge `j` maps to hyperedge `j`.
    pub fn from_endpoints(
        hypergraph: Hypergraph,
        endpoints: Vec<(usize, usize)>,
    ) -> Result<Self, ImageError> {
        if endpoints.len() != hypergraph.edge_count() {
            return Err(ImageError::EdgeCountMismatch {
                edges: endpoints.len(),
                hyperedges: hypergraph.edge_count(),
            });
        }
        for (j, &(a, b)) in endpoints.iter().enumerate() {
            if a == b || a >= hypergraph.vertex_count() || b >= hypergraph.vertex_count() {
                return Err(ImageError::BadEndpoints { edge: j });
            }
            for x in [a, b] {
                if !hypergraph.hyperedge_contains(j, x) {
                    return Err(ImageError::EndpointOutsideHyperedge {
                        edge: j,
                        vertex: x,
                        hyperedge: j,
                    });
                }
            }
        }
        let graph = Multigraph::new(hypergraph.vertex_count(), endpoints)
            .expect("endpoints validated above");
        let phi = (0..hypergraph.edge_count()).collect();
        Ok(Image {
            hypergraph,
            graph,
            phi,
        })
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    /// Hyperedge index the edge maps to.
    pub fn phi(&self, edge_id: usize) -> usize {
        self.phi[edge_id]
    }

    pub fn phi_all(&self) -> &[usize] {
        &self.phi
    }

    /// Vertices of the hyperedge the edge maps to.
    pub fn hyperedge_of_edge(&self, edge_id: usize) -> &[usize] {
        self.hypergraph.hyperedge(self.phi[edge_id])
    }

    pub fn edge(&self, edge_id: usize) -> Edge {
        self.graph.edge(edge_id)
    }

    /// Moves edge `id` to new endpoints, which must lie inside its
    /// hyperedge. `phi` is untouched.
    pub(crate) fn move_edge(&mut self, id: usize, a: usize, b: usize) {
        debug_assert!(a != b);
        debug_assert!(self.hypergraph.hyperedge_contains(self.phi[id], a));
        debug_assert!(self.hypergraph.hyperedge_contains(self.phi[id], b));
        self.graph.set_endpoints(id, a, b);
    }
}
