//! Definition-level checkers and exhaustive reference solvers.
//!
//! The checkers test colorings directly against the definitions: a proper
//! hypergraph coloring leaves no hyperedge monochromatic, a proper graph
//! coloring leaves no edge monochromatic, a dynamic coloring gives every
//! vertex of degree at least 2 two colors in its neighborhood, and a valid
//! image keeps every edge inside its hyperedge under a bijective `phi`.
//!
//! The brute-force solvers compute exact minima by backtracking and are the
//! ground truth the fast algorithms are tested against. They stay
//! deliberately small: hard vertex-count guards instead of silent
//! degradation.

use thiserror::Error;

use crate::coloring::Coloring;
use crate::hypergraph::Hypergraph;
use crate::image::Image;
use crate::multigraph::Multigraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("coloring covers {actual} vertices, instance has {expected}")]
    InvalidColoring { expected: usize, actual: usize },
    #[error("instance too large for exhaustive search: {0}")]
    TooLarge(String),
}

/// One reason a check failed, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// All vertices of the hyperedge share one color.
    MonochromaticHyperedge { hyperedge: usize, color: usize },
    /// Both endpoints of a (simple) edge share one color.
    MonochromaticEdge { u: usize, v: usize, color: usize },
    /// A vertex of degree >= 2 sees only one color among its neighbors.
    MonochromaticNeighborhood { vertex: usize, color: usize },
    /// `phi` is not a bijection onto hyperedge indices.
    PhiNotBijective { edge: usize, hyperedge: usize },
    /// An edge count different from the hyperedge count.
    EdgeCountMismatch { edges: usize, hyperedges: usize },
    /// An edge endpoint outside the hyperedge the edge maps to.
    EndpointOutsideHyperedge {
        edge: usize,
        vertex: usize,
        hyperedge: usize,
    },
}

/// Outcome of a check: empty violation list means the property holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn check_total(expected: usize, c: &Coloring) -> Result<(), OracleError> {
    if c.vertex_count() != expected {
        return Err(OracleError::InvalidColoring {
            expected,
            actual: c.vertex_count(),
        });
    }
    Ok(())
}

/// Every hyperedge must contain two vertices of different colors.
pub fn verify_proper_hypergraph(h: &Hypergraph, c: &Coloring) -> Result<VerifyReport, OracleError> {
    check_total(h.vertex_count(), c)?;
    let mut violations = Vec::new();
    for (j, edge) in h.hyperedges().iter().enumerate() {
        let first = c.color(edge[0]);
        if edge.iter().all(|&v| c.color(v) == first) {
            violations.push(Violation::MonochromaticHyperedge {
                hyperedge: j,
                color: first,
            });
        }
    }
    Ok(VerifyReport { violations })
}

/// No edge of the simple projection may be monochromatic.
pub fn verify_proper_graph(g: &Multigraph, c: &Coloring) -> Result<VerifyReport, OracleError> {
    check_total(g.vertex_count(), c)?;
    let s = g.simple_projection();
    let mut violations = Vec::new();
    for u in 0..s.vertex_count() {
        for &v in s.neighbors(u) {
            if u < v && c.color(u) == c.color(v) {
                violations.push(Violation::MonochromaticEdge {
                    u,
                    v,
                    color: c.color(u),
                });
            }
        }
    }
    Ok(VerifyReport { violations })
}

/// Every vertex of simple degree >= 2 must see two colors among its
/// neighbors; vertices of degree <= 1 are unconstrained.
pub fn verify_dynamic(g: &Multigraph, c: &Coloring) -> Result<VerifyReport, OracleError> {
    check_total(g.vertex_count(), c)?;
    let s = g.simple_projection();
    let mut violations = Vec::new();
    for v in 0..s.vertex_count() {
        let nbrs = s.neighbors(v);
        if nbrs.len() < 2 {
            continue;
        }
        let first = c.color(nbrs[0]);
        if nbrs.iter().all(|&w| c.color(w) == first) {
            violations.push(Violation::MonochromaticNeighborhood { vertex: v, color: first });
        }
    }
    Ok(VerifyReport { violations })
}

/// Checks the image laws against `h`: `phi` bijective onto hyperedge
/// indices, and both endpoints of every edge inside the mapped hyperedge.
pub fn verify_image(h: &Hypergraph, img: &Image) -> VerifyReport {
    let mut violations = Vec::new();
    let g = img.graph();
    if g.edge_count() != h.edge_count() {
        violations.push(Violation::EdgeCountMismatch {
            edges: g.edge_count(),
            hyperedges: h.edge_count(),
        });
    }
    let mut hit = vec![false; h.edge_count()];
    for id in 0..g.edge_count() {
        let j = img.phi(id);
        if j >= h.edge_count() || hit[j] {
            violations.push(Violation::PhiNotBijective { edge: id, hyperedge: j });
            continue;
        }
        hit[j] = true;
        let e = g.edge(id);
        for x in [e.u, e.v] {
            if !h.hyperedge_contains(j, x) {
                violations.push(Violation::EndpointOutsideHyperedge {
                    edge: id,
                    vertex: x,
                    hyperedge: j,
                });
            }
        }
    }
    VerifyReport { violations }
}

const MAX_ORACLE_VERTICES: usize = 16;

/// Backtracking search for a proper hypergraph coloring with `palette`
/// colors. Vertex `i` only tries colors `0..=min(i, palette-1)`: color
/// classes are interchangeable, so some optimal coloring always has this
/// form. `last_edge[v]` lists the hyperedges whose largest vertex is `v`;
/// those are fully colored once `v` is, and are checked right there.
fn hypergraph_colorable(h: &Hypergraph, palette: usize, last_edge: &[Vec<usize>]) -> bool {
    fn go(h: &Hypergraph, palette: usize, last_edge: &[Vec<usize>], colors: &mut Vec<usize>) -> bool {
        let v = colors.len();
        if v == h.vertex_count() {
            return true;
        }
        for color in 0..palette.min(v + 1) {
            colors.push(color);
            let ok = last_edge[v].iter().all(|&j| {
                let edge = h.hyperedge(j);
                let first = colors[edge[0]];
                edge.iter().any(|&u| colors[u] != first)
            });
            if ok && go(h, palette, last_edge, colors) {
                return true;
            }
            colors.pop();
        }
        false
    }
    if h.vertex_count() == 0 {
        return true;
    }
    go(h, palette, last_edge, &mut Vec::with_capacity(h.vertex_count()))
}

/// Exact minimum palette size admitting a proper coloring of `h`, or `None`
/// if no palette up to `max_palette` works. Guarded to at most 16 vertices.
pub fn brute_force_min_colors(
    h: &Hypergraph,
    max_palette: usize,
) -> Result<Option<usize>, OracleError> {
    if h.vertex_count() > MAX_ORACLE_VERTICES {
        return Err(OracleError::TooLarge(format!(
            "{} vertices exceeds the {MAX_ORACLE_VERTICES}-vertex oracle guard",
            h.vertex_count()
        )));
    }
    let mut last_edge = vec![Vec::new(); h.vertex_count()];
    for (j, edge) in h.hyperedges().iter().enumerate() {
        last_edge[*edge.last().expect("hyperedges are nonempty")].push(j);
    }
    for palette in 1..=max_palette {
        if hypergraph_colorable(h, palette, &last_edge) {
            return Ok(Some(palette));
        }
    }
    Ok(None)
}

/// Backtracking feasibility test for dynamic colorings. `closing[u]` lists
/// the vertices of degree >= 2 whose neighborhood becomes fully colored when
/// `u` receives its color (i.e. `u` is their largest neighbor).
fn dynamic_colorable(adj: &[Vec<usize>], palette: usize, closing: &[Vec<usize>]) -> bool {
    fn go(adj: &[Vec<usize>], palette: usize, closing: &[Vec<usize>], colors: &mut Vec<usize>) -> bool {
        let u = colors.len();
        if u == adj.len() {
            return true;
        }
        for color in 0..palette.min(u + 1) {
            colors.push(color);
            let ok = closing[u].iter().all(|&v| {
                let first = colors[adj[v][0]];
                adj[v].iter().any(|&w| colors[w] != first)
            });
            if ok && go(adj, palette, closing, colors) {
                return true;
            }
            colors.pop();
        }
        false
    }
    if adj.is_empty() {
        return true;
    }
    go(adj, palette, closing, &mut Vec::with_capacity(adj.len()))
}

/// Exact minimum palette size admitting a dynamic coloring of `g`, or
/// `None` if no palette up to `max_palette` works. Guarded to 16 vertices.
pub fn brute_force_min_dynamic_colors(
    g: &Multigraph,
    max_palette: usize,
) -> Result<Option<usize>, OracleError> {
    if g.vertex_count() > MAX_ORACLE_VERTICES {
        return Err(OracleError::TooLarge(format!(
            "{} vertices exceeds the {MAX_ORACLE_VERTICES}-vertex oracle guard",
            g.vertex_count()
        )));
    }
    let s = g.simple_projection();
    let adj: Vec<Vec<usize>> = (0..s.vertex_count()).map(|v| s.neighbors(v).to_vec()).collect();
    let mut closing = vec![Vec::new(); s.vertex_count()];
    for (v, nbrs) in adj.iter().enumerate() {
        if nbrs.len() >= 2 {
            let last = *nbrs.last().expect("nonempty");
            closing[last].push(v);
        }
    }
    for palette in 1..=max_palette {
        if dynamic_colorable(&adj, palette, &closing) {
            return Ok(Some(palette));
        }
    }
    Ok(None)
}

/// Exact minimum over all images of `h` of the maximum multigraph degree,
/// by exhaustive endpoint choice with branch-and-bound on the running
/// maximum. Guarded by the product of per-hyperedge pair counts.
pub fn brute_force_image_min_max_degree(h: &Hypergraph) -> Result<usize, OracleError> {
    const GUARD: u128 = 10_000_000;
    let mut product: u128 = 1;
    let mut pairs_per_edge: Vec<Vec<(usize, usize)>> = Vec::with_capacity(h.edge_count());
    for edge in h.hyperedges() {
        let mut pairs = Vec::new();
        for (i, &u) in edge.iter().enumerate() {
            for &v in &edge[i + 1..] {
                pairs.push((u, v));
            }
        }
        product = product.saturating_mul(pairs.len() as u128);
        if product > GUARD {
            return Err(OracleError::TooLarge(format!(
                "endpoint choice space exceeds {GUARD}"
            )));
        }
        pairs_per_edge.push(pairs);
    }

    fn go(
        pairs_per_edge: &[Vec<(usize, usize)>],
        j: usize,
        degrees: &mut Vec<usize>,
        current_max: usize,
        best: &mut usize,
    ) {
        if current_max >= *best {
            return; // cannot improve
        }
        if j == pairs_per_edge.len() {
            *best = current_max;
            return;
        }
        for &(u, v) in &pairs_per_edge[j] {
            degrees[u] += 1;
            degrees[v] += 1;
            let m = current_max.max(degrees[u]).max(degrees[v]);
            go(pairs_per_edge, j + 1, degrees, m, best);
            degrees[u] -= 1;
            degrees[v] -= 1;
        }
    }

    let mut best = usize::MAX;
    let mut degrees = vec![0usize; h.vertex_count()];
    go(&pairs_per_edge, 0, &mut degrees, 0, &mut best);
    Ok(best)
}
