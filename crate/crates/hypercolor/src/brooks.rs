//! Constructive Brooks coloring: a proper `k`-coloring of any graph with
//! maximum degree at most `k >= 3` whose components are not cliques on
//! `k + 1` vertices.
//!
//! Per connected component the classical construction applies:
//!
//! * some vertex has degree below `k`: color greedily in reverse BFS order
//!   from it — every other vertex still has an uncolored neighbor at its
//!   turn, and the root itself has spare room;
//! * the component is `k`-regular with a cut vertex: split there, color each
//!   piece by the rule above (the cut vertex has reduced degree in every
//!   piece) and align the piece colorings by permuting colors at the cut;
//! * the component is `k`-regular and 2-connected: find a vertex `x` with
//!   two non-adjacent neighbors `y`, `z` whose removal keeps the component
//!   connected; color `y` and `z` first (both receive color 0), the rest in
//!   reverse BFS order from `x` — `x` comes last and sees at most `k - 1`
//!   distinct colors.
//!
//! All scans run in ascending vertex order, so identical inputs produce
//! identical colorings.

use thiserror::Error;

use crate::coloring::Coloring;
use crate::multigraph::SimpleProjection;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BrooksError {
    #[error("vertex {vertex} has {palette} colored neighbors, palette exhausted")]
    PaletteExhausted { vertex: usize, palette: usize },
    #[error("brooks precondition violated: {0}")]
    Precondition(&'static str),
    #[error("component {0:?} is a clique on k+1 vertices")]
    CliqueComponent(Vec<usize>),
}

/// Greedy coloring along `order` (a permutation of the vertices): each
/// vertex takes the smallest color unused among its already-colored
/// neighbors. Fails only if some vertex sees all `palette` colors.
pub fn greedy_coloring(
    g: &SimpleProjection,
    order: &[usize],
    palette: usize,
) -> Result<Coloring, BrooksError> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    if order.len() != n || order.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
        return Err(BrooksError::Precondition("order is not a permutation"));
    }
    let mut colors: Vec<Option<usize>> = vec![None; n];
    for &v in order {
        let mut used = vec![false; palette];
        for &w in g.neighbors(v) {
            if let Some(c) = colors[w] {
                used[c] = true;
            }
        }
        match used.iter().position(|&u| !u) {
            Some(c) => colors[v] = Some(c),
            None => return Err(BrooksError::PaletteExhausted { vertex: v, palette }),
        }
    }
    let colors: Vec<usize> = colors.into_iter().map(|c| c.expect("order covers all")).collect();
    Ok(Coloring::new(colors, palette.max(usize::from(n > 0))).expect("greedy stays in palette"))
}

/// Connected components that are cliques on exactly `k + 1` vertices, in
/// discovery order. A component of `k + 1` vertices all of degree `k` is
/// necessarily complete.
pub fn find_clique_components(g: &SimpleProjection, k: usize) -> Vec<Vec<usize>> {
    g.components()
        .into_iter()
        .filter(|comp| comp.len() == k + 1 && comp.iter().all(|&v| g.degree(v) == k))
        .collect()
}

/// BFS visit order from `root`, neighbors scanned ascending.
fn bfs_order(g: &SimpleProjection, root: usize, skip: &[usize]) -> Vec<usize> {
    let mut blocked = vec![false; g.vertex_count()];
    for &s in skip {
        blocked[s] = true;
    }
    let mut order = vec![root];
    let mut seen = blocked.clone();
    seen[root] = true;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
    }
    order
}

/// Greedy coloring in reverse BFS order from `root`; sound with palette `k`
/// whenever max degree <= k and `root` has degree < k.
fn color_from_deficient_root(
    g: &SimpleProjection,
    root: usize,
    k: usize,
) -> Result<Coloring, BrooksError> {
    let mut order = bfs_order(g, root, &[]);
    order.reverse();
    greedy_coloring(g, &order, k)
}

/// Smallest articulation vertex of a connected graph, if any, by the
/// standard lowpoint DFS.
fn find_cut_vertex(g: &SimpleProjection) -> Option<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return None;
    }
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![UNSEEN; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0;
    let root = 0;
    disc[root] = timer;
    low[root] = timer;
    timer += 1;
    let mut root_children = 0;
    let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
    while let Some(frame) = stack.last_mut() {
        let (v, idx) = (frame.0, frame.1);
        if idx < g.neighbors(v).len() {
            frame.1 += 1;
            let w = g.neighbors(v)[idx];
            if disc[w] == UNSEEN {
                parent[w] = v;
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                if v == root {
                    root_children += 1;
                }
                stack.push((w, 0));
            } else if w != parent[v] {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
                if p != root && low[v] >= disc[p] {
                    is_cut[p] = true;
                }
            }
        }
    }
    if root_children >= 2 {
        is_cut[root] = true;
    }
    (0..n).find(|&v| is_cut[v])
}

/// Proper `k`-coloring of one connected graph with max degree <= `k`,
/// `k >= 3`, that is not a clique on `k + 1` vertices.
pub fn brooks_component_coloring(
    g: &SimpleProjection,
    k: usize,
) -> Result<Coloring, BrooksError> {
    let n = g.vertex_count();
    if k < 3 {
        return Err(BrooksError::Precondition("k must be at least 3"));
    }
    if g.max_degree() > k {
        return Err(BrooksError::Precondition("max degree exceeds k"));
    }
    if !g.is_connected() {
        return Err(BrooksError::Precondition("component is not connected"));
    }
    if n == k + 1 && (0..n).all(|v| g.degree(v) == k) {
        return Err(BrooksError::Precondition("component is a clique on k+1 vertices"));
    }
    if n == 0 {
        return Ok(Coloring::constant(0, k));
    }

    // Degree-deficient root: plain reverse-BFS greedy.
    if let Some(root) = (0..n).find(|&v| g.degree(v) < k) {
        return color_from_deficient_root(g, root, k);
    }

    // k-regular from here on. Split at a cut vertex if one exists.
    if let Some(cut) = find_cut_vertex(g) {
        let rest: Vec<usize> = (0..n).filter(|&v| v != cut).collect();
        let (without, back) = g.induced(&rest);
        let mut colors: Vec<Option<usize>> = vec![None; n];
        for comp in without.components() {
            let mut piece: Vec<usize> = comp.iter().map(|&v| back[v]).collect();
            piece.push(cut);
            piece.sort_unstable();
            let (sub, sub_back) = g.induced(&piece);
            let cut_local = piece.binary_search(&cut).expect("cut is in the piece");
            debug_assert!(sub.degree(cut_local) < k, "cut vertex keeps spare degree per piece");
            let piece_coloring = color_from_deficient_root(&sub, cut_local, k)?;
            // Swap colors so the cut vertex is color 0 in every piece.
            let cut_color = piece_coloring.color(cut_local);
            for (local, &orig) in sub_back.iter().enumerate() {
                let c = piece_coloring.color(local);
                let c = if c == cut_color {
                    0
                } else if c == 0 {
                    cut_color
                } else {
                    c
                };
                colors[orig] = Some(c);
            }
        }
        let colors: Vec<usize> = colors
            .into_iter()
            .map(|c| c.expect("pieces cover the component"))
            .collect();
        return Ok(Coloring::new(colors, k).expect("piece colorings stay below k"));
    }

    // 2-connected k-regular, not complete: find x with two non-adjacent
    // neighbors y, z whose removal keeps the graph connected.
    for x in 0..n {
        let nbrs = g.neighbors(x);
        for (i, &y) in nbrs.iter().enumerate() {
            for &z in &nbrs[i + 1..] {
                if g.adjacent(y, z) {
                    continue;
                }
                let rest: Vec<usize> = (0..n).filter(|&v| v != y && v != z).collect();
                let (without, _) = g.induced(&rest);
                if !without.is_connected() {
                    continue;
                }
                assert!(!g.adjacent(y, z) && g.adjacent(x, y) && g.adjacent(x, z));
                let mut order = bfs_order(g, x, &[y, z]);
                order.reverse();
                let mut full = vec![y, z];
                full.extend(order);
                debug_assert_eq!(*full.last().expect("nonempty"), x);
                return greedy_coloring(g, &full, k);
            }
        }
    }
    // Classically impossible for a 2-connected non-complete k-regular graph.
    Err(BrooksError::Precondition("no admissible splitting triple found"))
}

/// Proper `k`-coloring of a whole graph, component by component. Fails with
/// the offending vertex set if some component is a clique on `k + 1`
/// vertices.
pub fn brooks_coloring(g: &SimpleProjection, k: usize) -> Result<Coloring, BrooksError> {
    if k < 3 {
        return Err(BrooksError::Precondition("k must be at least 3"));
    }
    if g.max_degree() > k {
        return Err(BrooksError::Precondition("max degree exceeds k"));
    }
    let n = g.vertex_count();
    let mut colors: Vec<Option<usize>> = vec![None; n];
    for comp in g.components() {
        if comp.len() == k + 1 && comp.iter().all(|&v| g.degree(v) == k) {
            return Err(BrooksError::CliqueComponent(comp));
        }
        let (sub, back) = g.induced(&comp);
        let sub_coloring = brooks_component_coloring(&sub, k)?;
        for (local, &orig) in back.iter().enumerate() {
            colors[orig] = Some(sub_coloring.color(local));
        }
    }
    let colors: Vec<usize> = colors
        .into_iter()
        .map(|c| c.expect("components cover all vertices"))
        .collect();
    Ok(Coloring::new(colors, k).expect("component colorings stay below k"))
}
