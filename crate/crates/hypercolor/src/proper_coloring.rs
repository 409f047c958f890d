//! Proper hypergraph coloring within the degree-derived bound.
//!
//! Both routines color an image of the hypergraph: every hyperedge contains
//! the two endpoints of its image edge, so a proper graph coloring of the
//! image is a proper hypergraph coloring.
//!
//! [`color_k_plus_1`] greedily colors an image of maximum degree `k` with
//! `k + 1` colors. [`color_k`] gets by with `k` colors when every hyperedge
//! has at least 3 vertices and `k >= 3`. Brooks' theorem covers components
//! that are not cliques on `k + 1` vertices; each clique component is fixed
//! up by moving one clique edge `(u, w)` to `(u, v)` for a third vertex `v`
//! of its hyperedge, all cliques simultaneously. An auxiliary digraph with
//! one node per component and one arc per clique (toward the component
//! holding its `v`) drives the case split:
//!
//! * cliques without incoming arcs are set aside and colored last, in
//!   reverse order, each vertex seeing at most `k - 1` colored neighbors;
//! * the remaining cliques form disjoint directed cycles; each cycle's
//!   union is colored on its own, via Brooks when degrees permit, via an
//!   explicit coloring when the cycle is a single self-targeting clique, or
//!   by temporarily deleting one or two low-degree vertices per overloaded
//!   clique and re-adding them greedily after Brooks handles the rest.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::brooks::{brooks_component_coloring, find_clique_components, greedy_coloring, BrooksError};
use crate::coloring::Coloring;
use crate::hypergraph::Hypergraph;
use crate::image::Image;
use crate::image_builder::{build_image, BuildError};
use crate::multigraph::Multigraph;
use crate::params::Parameters;
use crate::verify::{verify_proper_graph, verify_proper_hypergraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    /// The k-color route needs min hyperedge size >= 3 and k >= 3; callers
    /// should fall back to the k+1 route.
    #[error("k-coloring needs min hyperedge size >= 3 and k >= 3, got {min_edge_size} and {k}")]
    UseKPlusOne { min_edge_size: usize, k: usize },
    /// A hyperedge of size 2 cannot host a replacement endpoint. Impossible
    /// when the minimum hyperedge size is 3 or more.
    #[error("no replacement endpoint available in any edge of clique {clique:?}")]
    NoReplacementEndpoint { clique: Vec<usize> },
    /// An internal contradiction with the case analysis: a bug, not bad
    /// input.
    #[error("pipeline invariant violated: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Build(#[from] BuildError),
}

impl From<BrooksError> for PipelineError {
    fn from(e: BrooksError) -> Self {
        PipelineError::InvariantViolation(format!("brooks coloring failed inside pipeline: {e}"))
    }
}

fn invariant(cond: bool, msg: impl FnOnce() -> String) -> Result<(), PipelineError> {
    if cond {
        Ok(())
    } else {
        Err(PipelineError::InvariantViolation(msg()))
    }
}

/// One clique repair: edge `edge_id` had endpoints `{kept, dropped}` inside
/// the clique; it now joins `kept` to `target`, a third vertex of the same
/// hyperedge (possibly inside the clique again).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueRecord {
    pub index: usize,
    /// Sorted vertex set of the clique component (k + 1 vertices).
    pub vertices: Vec<usize>,
    pub kept: usize,
    pub dropped: usize,
    pub target: usize,
    pub edge_id: usize,
}

impl CliqueRecord {
    /// Coloring order used once everything else is colored: `kept` first,
    /// the middles ascending, `dropped` last. `dropped` lost its edge to
    /// `kept`, so it sees at most `k - 1` colored neighbors even at the end.
    pub fn coloring_order(&self) -> Vec<usize> {
        let mut order = vec![self.kept];
        order.extend(
            self.vertices
                .iter()
                .copied()
                .filter(|&v| v != self.kept && v != self.dropped),
        );
        order.push(self.dropped);
        order
    }
}

/// Counters for the branches the k-coloring pipeline took.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PipelineTrace {
    pub clique_components: usize,
    /// Cliques set aside in the elimination rounds.
    pub deferred_cliques: usize,
    pub cycle_unions: usize,
    /// Cycle unions colored directly by Brooks (all degrees <= k).
    pub cycles_brooks: usize,
    /// Single self-targeting cliques colored by the explicit assignment.
    pub cycles_explicit_loop: usize,
    /// Cycle unions that needed vertex deletions.
    pub cycles_repaired: usize,
    /// Overloaded cliques repaired by deleting only the dropped endpoint.
    pub repairs_single_deletion: usize,
    /// Overloaded cliques where the kept endpoint itself was overloaded,
    /// needing a second deletion.
    pub repairs_double_deletion: usize,
}

/// Rewrites one edge per clique component, all computed against the
/// pre-transformation graph: the smallest intra-clique edge id whose
/// hyperedge offers a third vertex, keeping the smaller endpoint and
/// attaching the smallest such third vertex.
pub fn transform_image(
    img: &Image,
    cliques: &[Vec<usize>],
) -> Result<(Image, Vec<CliqueRecord>), PipelineError> {
    let n = img.graph().vertex_count();
    let mut clique_of_vertex = vec![usize::MAX; n];
    for (ci, clique) in cliques.iter().enumerate() {
        for &v in clique {
            clique_of_vertex[v] = ci;
        }
    }
    // Intra-clique edge ids per clique, ascending by construction.
    let mut intra = vec![Vec::new(); cliques.len()];
    for id in 0..img.graph().edge_count() {
        let e = img.edge(id);
        let cu = clique_of_vertex[e.u];
        if cu != usize::MAX && cu == clique_of_vertex[e.v] {
            intra[cu].push(id);
        }
    }
    let mut records = Vec::with_capacity(cliques.len());
    for (ci, clique) in cliques.iter().enumerate() {
        let chosen = intra[ci].iter().copied().find_map(|id| {
            let e = img.edge(id);
            img.hyperedge_of_edge(id)
                .iter()
                .copied()
                .find(|&v| v != e.u && v != e.v)
                .map(|target| (id, e, target))
        });
        let Some((edge_id, e, target)) = chosen else {
            return Err(PipelineError::NoReplacementEndpoint {
                clique: clique.clone(),
            });
        };
        records.push(CliqueRecord {
            index: ci,
            vertices: clique.clone(),
            kept: e.u,
            dropped: e.v,
            target,
            edge_id,
        });
    }
    let mut transformed = img.clone();
    for rec in &records {
        transformed.move_edge(rec.edge_id, rec.kept, rec.target);
    }
    Ok((transformed, records))
}

/// The auxiliary digraph: one node per component of the pre-transformation
/// graph, one arc per clique toward the component containing its `target`
/// (a loop when the target stayed inside).
#[derive(Debug, Clone)]
pub struct CliqueDigraph {
    components: Vec<Vec<usize>>,
    /// Per component: the index of its clique record, if it is a clique.
    clique_of_component: Vec<Option<usize>>,
    /// Per record: the component the clique occupies.
    component_of_clique: Vec<usize>,
    /// Per record: the component its arc points at.
    arc_target: Vec<usize>,
}

impl CliqueDigraph {
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn is_clique_component(&self, component: usize) -> bool {
        self.clique_of_component[component].is_some()
    }

    /// Component index the clique's arc points at.
    pub fn arc_target(&self, record: usize) -> usize {
        self.arc_target[record]
    }
}

pub fn build_clique_digraph(
    components: &[Vec<usize>],
    records: &[CliqueRecord],
) -> Result<CliqueDigraph, PipelineError> {
    let n: usize = components.iter().map(Vec::len).sum();
    let mut component_of_vertex = vec![usize::MAX; n];
    for (ci, comp) in components.iter().enumerate() {
        for &v in comp {
            invariant(v < n && component_of_vertex[v] == usize::MAX, || {
                format!("component lists must partition the vertices, vertex {v} repeats")
            })?;
            component_of_vertex[v] = ci;
        }
    }
    let mut clique_of_component = vec![None; components.len()];
    let mut component_of_clique = Vec::with_capacity(records.len());
    let mut arc_target = Vec::with_capacity(records.len());
    for (ri, rec) in records.iter().enumerate() {
        let home = component_of_vertex[rec.kept];
        invariant(components[home] == rec.vertices, || {
            format!("record {ri} does not match its component")
        })?;
        clique_of_component[home] = Some(ri);
        component_of_clique.push(home);
        arc_target.push(component_of_vertex[rec.target]);
    }
    Ok(CliqueDigraph {
        components: components.to_vec(),
        clique_of_component,
        component_of_clique,
        arc_target,
    })
}

/// Outcome of the elimination rounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elimination {
    /// Record indices in deferral order; they get colored last, in reverse.
    pub deferred: Vec<usize>,
    /// Record indices still present, every one with an incoming arc.
    pub residual: Vec<usize>,
}

/// Repeatedly removes the smallest-index clique without incoming arcs
/// (loops count as incoming), deferring its coloring, until every remaining
/// clique is pointed at. The remaining cliques then split into disjoint
/// directed cycles.
pub fn eliminate_unpointed_cliques(f: &CliqueDigraph) -> Elimination {
    let records = f.component_of_clique.len();
    let mut in_degree = vec![0usize; records];
    for ri in 0..records {
        if let Some(target_clique) = f.clique_of_component[f.arc_target[ri]] {
            in_degree[target_clique] += 1;
        }
    }
    let mut alive = vec![true; records];
    let mut deferred = Vec::new();
    loop {
        let next = (0..records).find(|&ri| alive[ri] && in_degree[ri] == 0);
        let Some(ri) = next else { break };
        alive[ri] = false;
        deferred.push(ri);
        if let Some(target_clique) = f.clique_of_component[f.arc_target[ri]] {
            in_degree[target_clique] -= 1;
        }
    }
    let residual = (0..records).filter(|&ri| alive[ri]).collect();
    Elimination { deferred, residual }
}

/// Splits the residual cliques into their directed cycles, each starting at
/// its smallest record index. Every residual clique must have in-degree
/// exactly one from residual cliques; anything else is a bug.
pub fn residual_cycles(
    f: &CliqueDigraph,
    residual: &[usize],
) -> Result<Vec<Vec<usize>>, PipelineError> {
    let in_residual: Vec<bool> = {
        let mut flags = vec![false; f.component_of_clique.len()];
        for &ri in residual {
            flags[ri] = true;
        }
        flags
    };
    let successor = |ri: usize| -> Result<usize, PipelineError> {
        let target = f.clique_of_component[f.arc_target[ri]].filter(|&t| in_residual[t]);
        target.ok_or_else(|| {
            PipelineError::InvariantViolation(format!(
                "residual clique {ri} points outside the residual digraph"
            ))
        })
    };
    let mut incoming = vec![0usize; f.component_of_clique.len()];
    for &ri in residual {
        incoming[successor(ri)?] += 1;
    }
    for &ri in residual {
        invariant(incoming[ri] == 1, || {
            format!("residual clique {ri} has in-degree {}, expected 1", incoming[ri])
        })?;
    }
    let mut visited = vec![false; f.component_of_clique.len()];
    let mut cycles = Vec::new();
    for &start in residual {
        if visited[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut cur = start;
        loop {
            invariant(!visited[cur], || {
                format!("cycle extraction revisited clique {cur}")
            })?;
            visited[cur] = true;
            cycle.push(cur);
            cur = successor(cur)?;
            if cur == start {
                break;
            }
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

/// The induced multigraph of a transformed image on one directed cycle of
/// cliques, ready for coloring.
#[derive(Debug, Clone)]
pub struct CycleUnion {
    /// Clique records along the cycle, cycle order.
    records: Vec<CliqueRecord>,
    /// Sorted union of the clique vertex sets (original ids).
    vertices: Vec<usize>,
    /// Induced multigraph on `vertices`, reindexed densely.
    graph: Multigraph,
}

/// How a cycle union got colored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleResolution {
    /// All degrees at most k: Brooks on the simple projection.
    Brooks,
    /// A single self-targeting clique: the explicit assignment.
    ExplicitLoop,
    /// Vertex deletions per overloaded clique, Brooks on the rest, greedy
    /// re-insertion.
    Deletions {
        single_deletion: usize,
        double_deletion: usize,
    },
}

impl CycleUnion {
    pub fn build(img: &Image, records: &[CliqueRecord], cycle: &[usize]) -> Self {
        let cycle_records: Vec<CliqueRecord> = cycle.iter().map(|&ri| records[ri].clone()).collect();
        let mut vertices: Vec<usize> = cycle_records
            .iter()
            .flat_map(|r| r.vertices.iter().copied())
            .collect();
        vertices.sort_unstable();
        vertices.dedup();
        let local: BTreeMap<usize, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut pairs = Vec::new();
        for id in 0..img.graph().edge_count() {
            let e = img.edge(id);
            if let (Some(&u), Some(&v)) = (local.get(&e.u), local.get(&e.v)) {
                pairs.push((u, v));
            }
        }
        let graph = Multigraph::new(vertices.len(), pairs).expect("induced pairs are valid");
        CycleUnion {
            records: cycle_records,
            vertices,
            graph,
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    fn to_local(&self, v: usize) -> usize {
        self.vertices.binary_search(&v).expect("vertex in union")
    }
}

/// Colors one cycle union with `k` colors; returns `(vertex, color)` pairs
/// over original vertex ids plus the branch taken.
pub fn color_cycle_union(
    cu: &CycleUnion,
    k: usize,
) -> Result<(Vec<(usize, usize)>, CycleResolution), PipelineError> {
    let n = cu.graph.vertex_count();
    let finish = |colors: Vec<usize>, resolution: CycleResolution| {
        let out = colors
            .into_iter()
            .enumerate()
            .map(|(local, c)| (cu.vertices[local], c))
            .collect();
        Ok((out, resolution))
    };

    if cu.graph.max_degree() <= k {
        // Connected (the new edges chain the cliques) and not a clique on
        // k+1 vertices, so Brooks applies directly.
        let proj = cu.graph.simple_projection();
        let coloring = brooks_component_coloring(&proj, k)?;
        return finish(coloring.colors().to_vec(), CycleResolution::Brooks);
    }

    if cu.records.len() == 1 {
        // A self-targeting clique: its graph is the clique minus the edge
        // {kept, dropped} plus a doubled edge {kept, target}. Give kept and
        // dropped one color and every other vertex its own.
        let rec = &cu.records[0];
        let mut colors = vec![usize::MAX; n];
        colors[cu.to_local(rec.kept)] = 0;
        colors[cu.to_local(rec.dropped)] = 0;
        let mut next = 1;
        for &v in &rec.vertices {
            if v != rec.kept && v != rec.dropped {
                colors[cu.to_local(v)] = next;
                next += 1;
            }
        }
        invariant(next == k, || {
            format!("self-targeting clique used {next} colors, expected {k}")
        })?;
        // The rewritten edge joins kept and target; their hyperedge relies
        // on these two differing.
        invariant(colors[cu.to_local(rec.target)] != colors[cu.to_local(rec.kept)], || {
            "kept and target endpoints share a color in the explicit loop coloring".to_string()
        })?;
        return finish(colors, CycleResolution::ExplicitLoop);
    }

    // Two or more cliques and some vertex above degree k. Each clique holds
    // at most one such vertex: the endpoint its predecessor attached to.
    let mut alive = vec![true; n];
    let mut cur_deg: Vec<usize> = (0..n).map(|v| cu.graph.degree(v)).collect();
    let mut deletions: Vec<usize> = Vec::new();
    let mut single_deletion = 0usize;
    let mut double_deletion = 0usize;
    let delete = |v_local: usize,
                      alive: &mut Vec<bool>,
                      cur_deg: &mut Vec<usize>,
                      deletions: &mut Vec<usize>|
     -> Result<(), PipelineError> {
        invariant(cur_deg[v_local] < k, || {
            format!(
                "deleting vertex {} at degree {}, expected at most {}",
                cu.vertices[v_local],
                cur_deg[v_local],
                k - 1
            )
        })?;
        alive[v_local] = false;
        for &e in cu.graph.incident_edges(v_local) {
            let other = cu.graph.edge(e).other(v_local);
            if alive[other] {
                cur_deg[other] -= 1;
            }
        }
        deletions.push(v_local);
        Ok(())
    };

    for rec in &cu.records {
        let overloaded: Vec<usize> = rec
            .vertices
            .iter()
            .copied()
            .filter(|&v| cu.graph.degree(cu.to_local(v)) > k)
            .collect();
        if overloaded.is_empty() {
            continue;
        }
        invariant(overloaded.len() == 1, || {
            format!("clique {:?} has several overloaded vertices", rec.vertices)
        })?;
        let x = overloaded[0];
        invariant(x != rec.dropped, || {
            "the dropped endpoint cannot be overloaded".to_string()
        })?;
        delete(cu.to_local(rec.dropped), &mut alive, &mut cur_deg, &mut deletions)?;
        if x == rec.kept {
            // The kept endpoint is still above k; remove one spare clique
            // vertex of degree exactly k - 1, the smallest id.
            let spare = rec
                .vertices
                .iter()
                .copied()
                .filter(|&v| v != rec.kept && v != rec.dropped)
                .find(|&v| alive[cu.to_local(v)] && cur_deg[cu.to_local(v)] + 1 == k);
            let Some(y) = spare else {
                return Err(PipelineError::InvariantViolation(format!(
                    "no spare vertex of degree {} in clique {:?}",
                    k - 1,
                    rec.vertices
                )));
            };
            delete(cu.to_local(y), &mut alive, &mut cur_deg, &mut deletions)?;
            double_deletion += 1;
        } else {
            single_deletion += 1;
        }
    }

    for v in 0..n {
        if alive[v] {
            invariant(cur_deg[v] <= k, || {
                format!("vertex {} still at degree {} after repairs", cu.vertices[v], cur_deg[v])
            })?;
        }
    }

    // Color the remaining graph by Brooks: it stays connected (no new-edge
    // endpoint was deleted) and two edge removals disconnect it, so it is
    // not a clique on k+1 vertices.
    let remaining: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let proj = cu.graph.simple_projection();
    let (sub, back) = proj.induced(&remaining);
    invariant(sub.is_connected(), || {
        "repaired cycle union fell apart".to_string()
    })?;
    let sub_coloring = brooks_component_coloring(&sub, k)?;
    let mut colors = vec![usize::MAX; n];
    for (local, &orig_local) in back.iter().enumerate() {
        colors[orig_local] = sub_coloring.color(local);
    }

    // Re-insert deleted vertices in reverse order; each sees at most k - 1
    // colored neighbors at its turn.
    for &v in deletions.iter().rev() {
        let mut used = vec![false; k];
        let mut colored_neighbors = 0usize;
        for &w in proj.neighbors(v) {
            if colors[w] != usize::MAX {
                colored_neighbors += 1;
                used[colors[w]] = true;
            }
        }
        invariant(colored_neighbors < k, || {
            format!(
                "re-added vertex {} sees {colored_neighbors} colored neighbors",
                cu.vertices[v]
            )
        })?;
        let c = used.iter().position(|&u| !u).expect("a color is free");
        colors[v] = c;
    }

    finish(
        colors,
        CycleResolution::Deletions {
            single_deletion,
            double_deletion,
        },
    )
}

/// Proper coloring in `k + 1` colors: build an image of maximum degree `k`
/// and color its simple projection greedily in ascending vertex order.
pub fn color_k_plus_1(h: &Hypergraph) -> Result<Coloring, PipelineError> {
    let params = Parameters::for_hypergraph(h);
    let img = build_image(h, &params)?;
    color_image_k_plus_1(&img, &params)
}

/// The greedy half of [`color_k_plus_1`], on a prebuilt image.
pub fn color_image_k_plus_1(img: &Image, params: &Parameters) -> Result<Coloring, PipelineError> {
    let proj = img.graph().simple_projection();
    let order: Vec<usize> = (0..proj.vertex_count()).collect();
    let coloring = greedy_coloring(&proj, &order, params.k + 1)?;
    debug_assert!(verify_proper_hypergraph(img.hypergraph(), &coloring)
        .map(|r| r.ok())
        .unwrap_or(false));
    Ok(coloring)
}

/// Proper coloring in `k` colors; needs min hyperedge size >= 3 and
/// `k >= 3`, otherwise [`PipelineError::UseKPlusOne`] tells the caller to
/// fall back.
pub fn color_k(h: &Hypergraph) -> Result<Coloring, PipelineError> {
    Ok(color_k_traced(h)?.0)
}

/// Like [`color_k`], also reporting which pipeline branches ran.
pub fn color_k_traced(h: &Hypergraph) -> Result<(Coloring, PipelineTrace), PipelineError> {
    let params = Parameters::for_hypergraph(h);
    let min_edge_size = h.stats().min_edge_size.unwrap_or(0);
    if min_edge_size < 3 || params.k < 3 {
        return Err(PipelineError::UseKPlusOne {
            min_edge_size,
            k: params.k,
        });
    }
    let img = build_image(h, &params)?;
    color_image_k(&img, params.k)
}

/// The whole k-color machine on a prebuilt image of maximum degree at most
/// `k`. Exposed so hand-built images can drive specific branches.
pub fn color_image_k(img: &Image, k: usize) -> Result<(Coloring, PipelineTrace), PipelineError> {
    invariant(k >= 3, || format!("k-color pipeline needs k >= 3, got {k}"))?;
    invariant(img.graph().max_degree() <= k, || {
        format!(
            "image max degree {} exceeds k = {k}",
            img.graph().max_degree()
        )
    })?;
    let h = img.hypergraph();
    let n = img.graph().vertex_count();
    let proj = img.graph().simple_projection();
    let cliques = find_clique_components(&proj, k);
    let components = proj.components();
    let (transformed, records) = transform_image(img, &cliques)?;
    let digraph = build_clique_digraph(&components, &records)?;
    let elimination = eliminate_unpointed_cliques(&digraph);
    let cycles = residual_cycles(&digraph, &elimination.residual)?;
    let tproj = transformed.graph().simple_projection();

    let mut trace = PipelineTrace {
        clique_components: records.len(),
        deferred_cliques: elimination.deferred.len(),
        cycle_unions: cycles.len(),
        ..PipelineTrace::default()
    };
    let mut colors: Vec<usize> = vec![usize::MAX; n];

    // Components that were never cliques keep their induced subgraph intact
    // under the transformation; Brooks colors each.
    for (ci, comp) in components.iter().enumerate() {
        if digraph.is_clique_component(ci) {
            continue;
        }
        let (sub, back) = tproj.induced(comp);
        let sub_coloring = brooks_component_coloring(&sub, k)?;
        for (local, &orig) in back.iter().enumerate() {
            colors[orig] = sub_coloring.color(local);
        }
    }

    // Each directed cycle of cliques is colored on its own.
    for cycle in &cycles {
        let cu = CycleUnion::build(&transformed, &records, cycle);
        let (assignment, resolution) = color_cycle_union(&cu, k)?;
        match resolution {
            CycleResolution::Brooks => trace.cycles_brooks += 1,
            CycleResolution::ExplicitLoop => trace.cycles_explicit_loop += 1,
            CycleResolution::Deletions {
                single_deletion,
                double_deletion,
            } => {
                trace.cycles_repaired += 1;
                trace.repairs_single_deletion += single_deletion;
                trace.repairs_double_deletion += double_deletion;
            }
        }
        for (v, c) in assignment {
            colors[v] = c;
        }
    }

    // Deferred cliques, most recently deferred first: every vertex sees at
    // most k - 1 colored neighbors at its turn.
    for &ri in elimination.deferred.iter().rev() {
        for v in records[ri].coloring_order() {
            let mut used = vec![false; k];
            let mut colored_neighbors = 0usize;
            for &w in tproj.neighbors(v) {
                if colors[w] != usize::MAX {
                    colored_neighbors += 1;
                    used[colors[w]] = true;
                }
            }
            invariant(colored_neighbors < k, || {
                format!("deferred vertex {v} sees {colored_neighbors} colored neighbors")
            })?;
            colors[v] = used.iter().position(|&u| !u).expect("a color is free");
        }
    }

    invariant(colors.iter().all(|&c| c != usize::MAX), || {
        "some vertex was never colored".to_string()
    })?;
    let coloring = Coloring::new(colors, k)
        .map_err(|e| PipelineError::InvariantViolation(format!("palette overflow: {e}")))?;

    // Self-audit: proper on the transformed graph, hence on the hypergraph.
    let graph_ok = verify_proper_graph(transformed.graph(), &coloring)
        .map(|r| r.ok())
        .unwrap_or(false);
    invariant(graph_ok, || "coloring is not proper on the transformed image".to_string())?;
    let hyper_ok = verify_proper_hypergraph(h, &coloring)
        .map(|r| r.ok())
        .unwrap_or(false);
    invariant(hyper_ok, || "coloring is not proper on the hypergraph".to_string())?;
    Ok((coloring, trace))
}

/// Outcome of the preferred route: k colors when the preconditions hold,
/// k + 1 otherwise.
#[derive(Debug, Clone)]
pub struct ColorRun {
    pub coloring: Coloring,
    pub params: Parameters,
    /// Whether the k-color route ran (palette k) or the fallback (k + 1).
    pub used_k_route: bool,
    /// Chain rotations spent building the image.
    pub rotations: usize,
    pub trace: PipelineTrace,
}

/// Runs the k route when its preconditions hold, falling back to k + 1
/// colors otherwise. Builds the image once.
pub fn color_auto(h: &Hypergraph) -> Result<ColorRun, PipelineError> {
    let params = Parameters::for_hypergraph(h);
    let outcome = crate::image_builder::build_image_outcome(h, &params)?;
    let min_edge_size = h.stats().min_edge_size.unwrap_or(0);
    if min_edge_size >= 3 && params.k >= 3 {
        let (coloring, trace) = color_image_k(&outcome.image, params.k)?;
        return Ok(ColorRun {
            coloring,
            params,
            used_k_route: true,
            rotations: outcome.rotations,
            trace,
        });
    }
    let coloring = color_image_k_plus_1(&outcome.image, &params)?;
    Ok(ColorRun {
        coloring,
        params,
        used_k_route: false,
        rotations: outcome.rotations,
        trace: PipelineTrace::default(),
    })
}
