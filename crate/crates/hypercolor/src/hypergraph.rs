//! Hypergraphs over dense integer vertices.
//!
//! Hyperedges are vertex sets identified by their position in the edge list:
//! two hyperedges with identical vertex sets are still distinct objects and
//! are counted separately by vertex degrees.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("hyperedge {edge} contains vertex {vertex}, but the hypergraph has {n} vertices")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        n: usize,
    },
    /// Hyperedges with fewer than two distinct vertices can never contain
    /// two differently colored vertices, so they are rejected outright.
    #[error("hyperedge {edge} has {size} distinct vertices, need at least 2")]
    HyperedgeTooSmall { edge: usize, size: usize },
}

/// A hypergraph on vertices `0..n`. Immutable once constructed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    /// Each hyperedge is a sorted, duplicate-free vertex list of size >= 2.
    hyperedges: Vec<Vec<usize>>,
}

/// Degree statistics of a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergraphStats {
    /// Minimum hyperedge size, `None` when there are no hyperedges.
    pub min_edge_size: Option<usize>,
    /// Maximum number of hyperedges any single vertex belongs to.
    pub max_degree: usize,
    /// Per-vertex hyperedge membership counts.
    pub degrees: Vec<usize>,
}

impl Hypergraph {
    /// Builds a hypergraph, sorting and deduplicating each vertex list.
    ///
    /// A list that collapses to fewer than two distinct vertices is an error,
    /// as is any vertex id outside `0..n`.
    pub fn new(n: usize, hyperedges: Vec<Vec<usize>>) -> Result<Self, HypergraphError> {
        let mut cleaned = Vec::with_capacity(hyperedges.len());
        for (edge, mut verts) in hyperedges.into_iter().enumerate() {
            verts.sort_unstable();
            verts.dedup();
            if let Some(&v) = verts.iter().find(|&&v| v >= n) {
                return Err(HypergraphError::VertexOutOfRange { edge, vertex: v, n });
            }
            if verts.len() < 2 {
                return Err(HypergraphError::HyperedgeTooSmall {
                    edge,
                    size: verts.len(),
                });
            }
            cleaned.push(verts);
        }
        Ok(Self {
            n,
            hyperedges: cleaned,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.hyperedges.len()
    }

    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }

    /// The sorted vertex list of hyperedge `j`.
    pub fn hyperedge(&self, j: usize) -> &[usize] {
        &self.hyperedges[j]
    }

    /// Membership test against the sorted vertex list.
    pub fn hyperedge_contains(&self, j: usize, v: usize) -> bool {
        self.hyperedges[j].binary_search(&v).is_ok()
    }

    /// Minimum hyperedge size, maximum vertex degree and the full degree
    /// sequence. Duplicate hyperedges count separately.
    pub fn stats(&self) -> HypergraphStats {
        let mut degrees = vec![0usize; self.n];
        for edge in &self.hyperedges {
            for &v in edge {
                degrees[v] += 1;
            }
        }
        HypergraphStats {
            min_edge_size: self.hyperedges.iter().map(Vec::len).min(),
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            degrees,
        }
    }
}
