//! Multigraphs with identified edges, and their simple projections.
//!
//! Edges carry dense integer ids (their position in the edge list). Parallel
//! edges are distinct and count separately in degrees; self-loops are
//! rejected. Degrees therefore satisfy `sum(d(v)) = 2 * edge_count`.

use std::collections::BTreeMap;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultigraphError {
    #[error("edge {edge} endpoint {vertex} out of range for {n} vertices")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        n: usize,
    },
    #[error("edge {edge} is a self-loop at vertex {vertex}")]
    SelfLoop { edge: usize, vertex: usize },
}

/// An undirected edge, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    fn new(a: usize, b: usize) -> Self {
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    /// The endpoint opposite to `x`, which must be an endpoint.
    pub fn other(&self, x: usize) -> usize {
        debug_assert!(x == self.u || x == self.v);
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn has_endpoint(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

/// Multigraph on vertices `0..n` with positionally identified edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<Edge>,
    /// Incident edge ids per vertex; length of the list is the degree.
    incidence: Vec<Vec<usize>>,
}

impl Multigraph {
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Result<Self, MultigraphError> {
        let mut g = Multigraph {
            n,
            edges: Vec::with_capacity(pairs.len()),
            incidence: vec![Vec::new(); n],
        };
        for (edge, (a, b)) in pairs.into_iter().enumerate() {
            if a >= n || b >= n {
                return Err(MultigraphError::VertexOutOfRange {
                    edge,
                    vertex: a.max(b),
                    n,
                });
            }
            if a == b {
                return Err(MultigraphError::SelfLoop { edge, vertex: a });
            }
            let e = Edge::new(a, b);
            g.incidence[e.u].push(edge);
            g.incidence[e.v].push(edge);
            g.edges.push(e);
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
            incidence: vec![Vec::new(); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    /// Degree counting parallel edges with multiplicity.
    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Ids of the edges incident to `v`, in no particular order.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    /// Rewrites the endpoints of `id`. Used by the image rotations and the
    /// clique repair steps; incidence lists and degrees stay consistent.
    pub(crate) fn set_endpoints(&mut self, id: usize, a: usize, b: usize) {
        debug_assert!(a != b && a < self.n && b < self.n);
        let old = self.edges[id];
        for x in [old.u, old.v] {
            let pos = self.incidence[x]
                .iter()
                .position(|&e| e == id)
                .expect("incidence lists track every edge");
            self.incidence[x].swap_remove(pos);
        }
        let e = Edge::new(a, b);
        self.incidence[e.u].push(id);
        self.incidence[e.v].push(id);
        self.edges[id] = e;
    }

    /// Parallel-edge-free view of this multigraph.
    pub fn simple_projection(&self) -> SimpleProjection {
        SimpleProjection::from_multigraph(self)
    }
}

/// The underlying simple graph of a multigraph: parallel edges collapsed,
/// with a back-map recording how many parallel edges each pair had.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleProjection {
    n: usize,
    /// Sorted, duplicate-free neighbor lists.
    adj: Vec<Vec<usize>>,
    multiplicity: BTreeMap<(usize, usize), usize>,
}

impl SimpleProjection {
    pub fn from_multigraph(g: &Multigraph) -> Self {
        let mut multiplicity = BTreeMap::new();
        for e in g.edges() {
            *multiplicity.entry((e.u, e.v)).or_insert(0usize) += 1;
        }
        let mut adj = vec![Vec::new(); g.vertex_count()];
        for &(u, v) in multiplicity.keys() {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        SimpleProjection {
            n: g.vertex_count(),
            adj,
            multiplicity,
        }
    }

    /// Convenience constructor for tests and generated simple graphs.
    pub fn from_edges(n: usize, pairs: &[(usize, usize)]) -> Result<Self, MultigraphError> {
        Ok(Multigraph::new(n, pairs.to_vec())?.simple_projection())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Simple degree: number of distinct neighbors.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// How many parallel edges of the multigraph the pair `{u, v}` had.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let key = (u.min(v), u.max(v));
        self.multiplicity.get(&key).copied().unwrap_or(0)
    }

    /// Connected components as sorted vertex lists, in order of their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            let mut comp = vec![root];
            seen[root] = true;
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Induced subgraph on `verts` (sorted, duplicate-free), reindexed to
    /// dense ids. Returns the subgraph together with the new-to-old map.
    /// Multiplicities are carried over from the original pairs.
    pub fn induced(&self, verts: &[usize]) -> (SimpleProjection, Vec<usize>) {
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        let new_to_old = verts.to_vec();
        let old_to_new: BTreeMap<usize, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj = vec![Vec::new(); verts.len()];
        let mut multiplicity = BTreeMap::new();
        for (i, &v) in verts.iter().enumerate() {
            for &w in &self.adj[v] {
                if let Some(&j) = old_to_new.get(&w) {
                    adj[i].push(j);
                    if i < j {
                        multiplicity.insert((i, j), self.multiplicity(v, w));
                    }
                }
            }
        }
        // Neighbor lists inherit sortedness because verts is sorted.
        (
            SimpleProjection {
                n: verts.len(),
                adj,
                multiplicity,
            },
            new_to_old,
        )
    }
}
