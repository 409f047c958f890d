//! Shared helpers for the integration test targets: seeded ensembles,
//! hand-built clique fixtures, and independent reference oracles.

#![allow(dead_code)]

use hypercolor::instance_gen::{random_hypergraph, GenParams, SplitMix64};
use hypercolor::verify::verify_proper_hypergraph;
use hypercolor::{Coloring, Hypergraph, Image, Multigraph, SimpleProjection};

/// The main ensemble: 500 seeded hypergraphs with n in [6,14], m in [4,20],
/// sizes in [3,5] and vertex degree cap 6. The hyperedge count is drawn
/// from the feasible part of [4,20] for the chosen n, and draws the degree
/// cap rejects are skipped, so the ensemble is deterministic.
pub fn main_ensemble() -> Vec<Hypergraph> {
    seeded_ensemble(0xFEED_5EED, 500, 6, 14, 4, 20, 3, 5, Some(6))
}

/// A companion ensemble with hyperedges of size 2 allowed.
pub fn pair_ensemble(count: usize) -> Vec<Hypergraph> {
    seeded_ensemble(0x0DD_BA11, count, 5, 12, 3, 15, 2, 4, None)
}

#[allow(clippy::too_many_arguments)]
pub fn seeded_ensemble(
    master_seed: u64,
    count: usize,
    n_lo: usize,
    n_hi: usize,
    m_lo: usize,
    m_hi: usize,
    size_lo: usize,
    size_hi: usize,
    cap: Option<usize>,
) -> Vec<Hypergraph> {
    let mut meta = SplitMix64::new(master_seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        assert!(attempts < 20 * count, "ensemble generation stalled");
        let n = meta.range(n_lo, n_hi);
        // Keep the degree cap satisfiable: every hyperedge uses at least
        // size_lo distinct vertices.
        let m_cap = match cap {
            Some(c) => (c * n / (size_lo + 1)).min(m_hi),
            None => m_hi,
        };
        if m_cap < m_lo {
            continue;
        }
        let m = meta.range(m_lo, m_cap);
        let p = GenParams {
            n,
            m,
            size_lo,
            size_hi: size_hi.min(n),
            max_degree_cap: cap,
            seed: meta.next_u64(),
        };
        if let Ok(h) = random_hypergraph(&p) {
            out.push(h);
        }
    }
    out
}

/// Connected graph with max degree <= k: a random tree grown under the
/// cap, plus extra random edges that respect it.
pub fn random_connected_bounded(n: usize, k: usize, seed: u64) -> SimpleProjection {
    let mut rng = SplitMix64::new(seed);
    let mut degree = vec![0usize; n];
    let mut pairs = Vec::new();
    for v in 1..n {
        let candidates: Vec<usize> = (0..v).filter(|&u| degree[u] < k).collect();
        let u = candidates[rng.below(candidates.len())];
        pairs.push((u, v));
        degree[u] += 1;
        degree[v] += 1;
    }
    for _ in 0..2 * n {
        if n < 2 {
            break;
        }
        let u = rng.below(n);
        let v = rng.below(n);
        if u != v && degree[u] < k && degree[v] < k && !pairs.contains(&(u.min(v), u.max(v))) {
            pairs.push((u.min(v), u.max(v)));
            degree[u] += 1;
            degree[v] += 1;
        }
    }
    SimpleProjection::from_edges(n, &pairs).unwrap()
}

pub fn simple_to_multigraph(s: &SimpleProjection) -> Multigraph {
    let pairs: Vec<(usize, usize)> = (0..s.vertex_count())
        .flat_map(|u| {
            s.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
                .collect::<Vec<_>>()
        })
        .collect();
    Multigraph::new(s.vertex_count(), pairs).unwrap()
}

/// A graph as a hypergraph of its edge pairs: proper colorings coincide, so
/// the hypergraph palette oracle doubles as a chromatic number oracle.
pub fn graph_as_pair_hypergraph(g: &SimpleProjection) -> Hypergraph {
    let mut pairs = Vec::new();
    for u in 0..g.vertex_count() {
        for &v in g.neighbors(u) {
            if u < v {
                pairs.push(vec![u, v]);
            }
        }
    }
    Hypergraph::new(g.vertex_count(), pairs).unwrap()
}

pub fn petersen() -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Multigraph::new(10, edges).unwrap()
}

pub fn cycle_graph(n: usize) -> Multigraph {
    Multigraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
}

/// Pruning-free reference: the smallest palette admitting a proper
/// coloring, by full enumeration of palette^n colorings.
pub fn enumeration_min_colors(h: &Hypergraph) -> usize {
    let n = h.vertex_count();
    for palette in 1..=n.max(1) {
        let total = (palette as u128).pow(n as u32);
        let mut found = false;
        for code in 0..total {
            let mut colors = Vec::with_capacity(n);
            let mut x = code;
            for _ in 0..n {
                colors.push((x % palette as u128) as usize);
                x /= palette as u128;
            }
            let c = Coloring::new(colors, palette).unwrap();
            if verify_proper_hypergraph(h, &c).unwrap().ok() {
                found = true;
                break;
            }
        }
        if found {
            return palette;
        }
    }
    n.max(1)
}

fn image(hyperedges: Vec<Vec<usize>>, endpoints: Vec<(usize, usize)>) -> Image {
    let n = 1 + hyperedges.iter().flatten().copied().max().unwrap();
    let h = Hypergraph::new(n, hyperedges).unwrap();
    Image::from_endpoints(h, endpoints).unwrap()
}

/// One K4 component whose replacement endpoint stays inside the clique:
/// the digraph arc is a loop and the cycle union takes the explicit-loop
/// branch. Max degree 4, min size 3, k = 3.
pub fn fixture_loop() -> Image {
    image(
        vec![
            vec![0, 1, 2],
            vec![0, 2, 5],
            vec![0, 3, 6],
            vec![1, 2, 6],
            vec![1, 3, 5],
            vec![2, 3, 4],
        ],
        vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
    )
}

/// Two K4 components targeting each other: a 2-cycle whose repairs exercise
/// both deletion shapes. Clique {0,1,2,3} attaches to 4 and is hit at its
/// middle vertex 2 (single deletion); clique {4,5,6,7} attaches to 2 and is
/// hit at its kept endpoint 4 (double deletion).
pub fn fixture_two_cycle() -> Image {
    image(
        vec![
            vec![0, 1, 4],
            vec![0, 2, 8],
            vec![0, 3, 8],
            vec![1, 2, 9],
            vec![1, 3, 9],
            vec![2, 3, 10],
            vec![2, 4, 5],
            vec![4, 6, 10],
            vec![4, 7, 11],
            vec![5, 6, 11],
            vec![5, 7, 12],
            vec![6, 7, 12],
        ],
        vec![
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (2, 3),
            (4, 5),
            (4, 6),
            (4, 7),
            (5, 6),
            (5, 7),
            (6, 7),
        ],
    )
}

/// Two K4 components targeting each other's dropped endpoints: all degrees
/// stay at k after the transformation and the cycle union goes straight to
/// Brooks.
pub fn fixture_two_cycle_brooks() -> Image {
    image(
        vec![
            vec![0, 1, 5],
            vec![0, 2, 8],
            vec![0, 3, 8],
            vec![1, 2, 9],
            vec![1, 3, 9],
            vec![2, 3, 10],
            vec![1, 4, 5],
            vec![4, 6, 10],
            vec![4, 7, 11],
            vec![5, 6, 11],
            vec![5, 7, 12],
            vec![6, 7, 12],
        ],
        vec![
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (2, 3),
            (4, 5),
            (4, 6),
            (4, 7),
            (5, 6),
            (5, 7),
            (6, 7),
        ],
    )
}

/// One K4 component pointing at a plain component: no incoming arc, so the
/// elimination rounds defer it and color it after everything else.
pub fn fixture_deferred() -> Image {
    image(
        vec![
            vec![0, 1, 4],
            vec![0, 2, 6],
            vec![0, 3, 6],
            vec![1, 2, 7],
            vec![1, 3, 7],
            vec![2, 3, 8],
            vec![4, 5, 8],
            vec![2, 4, 5],
        ],
        vec![
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (2, 3),
            (4, 5),
            (4, 5),
        ],
    )
}
