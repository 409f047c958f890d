//! Builds an image of maximum degree at most `k = ceil(2*Delta/delta)`.
//!
//! Starting from an arbitrary image, the builder repeatedly finds an
//! alternating chain from an overloaded vertex (degree >= k+1) to a vertex
//! of degree <= k-1 and rotates the chain: every chain edge `(a_i, b_i)` is
//! moved to `(b_i, a_{i+1})` inside its own hyperedge. A rotation shifts one
//! unit of degree from the chain's start to its end and strictly decreases
//! the potential `sum of degrees over vertices of degree >= k+1`, so the
//! loop terminates; on every valid hypergraph a suitable chain end exists
//! whenever an overloaded vertex does.
//!
//! An alternating chain `a_0 b_0 a_1 b_1 ... a_n` uses pairwise distinct
//! edges `(a_i, b_i)` with `a_i, b_i, a_{i+1}` distinct vertices of the
//! hyperedge the edge maps to. Chain ends are discovered by a BFS that, when
//! expanding a reached vertex `a` along an incident edge `(a, b)`, reaches
//! every other vertex of that edge's hyperedge. First-reach parent pointers
//! make reconstructed chains edge-distinct automatically: distances increase
//! strictly along a chain, while reusing an edge would force a shortcut.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::hypergraph::Hypergraph;
use crate::image::Image;
use crate::params::Parameters;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("vertex {0} is not a reachable chain end")]
    NotReached(usize),
    /// A rotation that violates its preconditions signals a builder bug.
    #[error("invalid rotation: {0}")]
    InvalidRotation(&'static str),
    /// No reachable vertex of degree <= k-1 although an overloaded vertex
    /// exists. Impossible for a structurally valid hypergraph; indicates
    /// corrupted input or an implementation bug.
    #[error("no low-degree chain end reachable from the overloaded set")]
    LemmaViolation,
}

/// One chain step: edge `edge` joins `from` (the step's a-vertex) and `via`
/// (its b-vertex); the next a-vertex lies in the edge's hyperedge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainStep {
    pub from: usize,
    pub via: usize,
    pub edge: usize,
}

/// BFS record of every vertex reachable as an alternating-chain end from a
/// source set, with first-reach parent pointers for reconstruction.
#[derive(Debug, Clone)]
pub struct ChainForest {
    sources: Vec<usize>,
    dist: Vec<Option<usize>>,
    parent: Vec<Option<ChainStep>>,
}

impl ChainForest {
    pub fn sources(&self) -> &[usize] {
        &self.sources
    }

    pub fn is_reached(&self, v: usize) -> bool {
        self.dist[v].is_some()
    }

    /// Chain length to `v`, if reached. Sources have distance 0.
    pub fn dist(&self, v: usize) -> Option<usize> {
        self.dist[v]
    }

    /// All reached vertices in ascending id order.
    pub fn reached(&self) -> Vec<usize> {
        (0..self.dist.len()).filter(|&v| self.is_reached(v)).collect()
    }
}

/// An alternating chain `a_0 b_0 a_1 ... a_n`: `steps[i]` holds
/// `(a_i, b_i, edge_i)` and `end` is `a_n`. Length-0 chains have no steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingChain {
    pub steps: Vec<ChainStep>,
    pub end: usize,
}

impl AlternatingChain {
    pub fn start(&self) -> usize {
        self.steps.first().map_or(self.end, |s| s.from)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// All alternating-chain ends reachable from `sources`.
///
/// Levels are expanded in ascending vertex order, incident edges by
/// ascending id and hyperedge members ascending, so each parent pointer is
/// the smallest `(dist, expanding vertex, edge id)` reaching its vertex.
pub fn alternating_bfs(img: &Image, sources: &[usize]) -> ChainForest {
    let n = img.graph().vertex_count();
    let mut forest = ChainForest {
        sources: {
            let mut s: Vec<usize> = sources.to_vec();
            s.sort_unstable();
            s.dedup();
            s
        },
        dist: vec![None; n],
        parent: vec![None; n],
    };
    let mut level = forest.sources.clone();
    for &s in &level {
        forest.dist[s] = Some(0);
    }
    let mut d = 0;
    while !level.is_empty() {
        let mut next = Vec::new();
        for &a in &level {
            let mut incident: Vec<usize> = img.graph().incident_edges(a).to_vec();
            incident.sort_unstable();
            for edge in incident {
                let b = img.edge(edge).other(a);
                for &c in img.hyperedge_of_edge(edge) {
                    if c != a && c != b && forest.dist[c].is_none() {
                        forest.dist[c] = Some(d + 1);
                        forest.parent[c] = Some(ChainStep { from: a, via: b, edge });
                        next.push(c);
                    }
                }
            }
        }
        next.sort_unstable();
        level = next;
        d += 1;
    }
    forest
}

/// The parent-pointer chain from a source to `end`.
///
/// The result satisfies the chain laws: distances strictly increase along
/// the a-vertices and all edge ids are pairwise distinct (asserted).
pub fn reconstruct_chain(forest: &ChainForest, end: usize) -> Result<AlternatingChain, BuildError> {
    if !forest.is_reached(end) {
        return Err(BuildError::NotReached(end));
    }
    let mut steps = Vec::new();
    let mut x = end;
    while let Some(step) = forest.parent[x] {
        steps.push(step);
        x = step.from;
    }
    steps.reverse();
    let mut seen = BTreeSet::new();
    for (i, step) in steps.iter().enumerate() {
        assert!(seen.insert(step.edge), "chain reuses edge {}", step.edge);
        debug_assert_eq!(forest.dist[step.from], Some(i));
    }
    debug_assert_eq!(forest.dist[end], Some(steps.len()));
    Ok(AlternatingChain { steps, end })
}

/// The evolving image plus the bookkeeping that proves termination: the set
/// of overloaded vertices (degree >= k+1) and the potential, the sum of
/// their degrees. Every accepted rotation strictly decreases the potential
/// and never adds an overloaded vertex.
#[derive(Debug, Clone)]
pub struct BuildState {
    image: Image,
    k: usize,
    overloaded: BTreeSet<usize>,
    potential: usize,
    rotations: usize,
}

/// Result of a completed build.
#[derive(Debug, Clone)]
pub struct BuildOutcome {
    pub image: Image,
    /// Number of chain rotations performed.
    pub rotations: usize,
    /// Potential before the first rotation; an upper bound on `rotations`.
    pub initial_potential: usize,
}

impl BuildState {
    pub fn new(image: Image, k: usize) -> Self {
        let g = image.graph();
        let overloaded: BTreeSet<usize> =
            (0..g.vertex_count()).filter(|&v| g.degree(v) > k).collect();
        let potential = overloaded.iter().map(|&v| g.degree(v)).sum();
        BuildState {
            image,
            k,
            overloaded,
            potential,
            rotations: 0,
        }
    }

    pub fn image(&self) -> &Image {
        &self.image
    }

    pub fn overloaded(&self) -> &BTreeSet<usize> {
        &self.overloaded
    }

    pub fn potential(&self) -> usize {
        self.potential
    }

    pub fn rotations(&self) -> usize {
        self.rotations
    }

    /// Applies one chain rotation: every chain edge `(a_i, b_i)` moves to
    /// `(b_i, a_{i+1})` within its hyperedge. The chain must currently be
    /// valid, start at an overloaded vertex and end at degree <= k-1; the
    /// start loses one degree, the end gains one, nothing else changes.
    pub fn rotate_chain(&mut self, chain: &AlternatingChain) -> Result<(), BuildError> {
        let g = self.image.graph();
        let start = chain.start();
        if !self.overloaded.contains(&start) {
            return Err(BuildError::InvalidRotation("chain start is not overloaded"));
        }
        if g.degree(chain.end) + 1 > self.k {
            return Err(BuildError::InvalidRotation("chain end degree exceeds k-1"));
        }
        let mut seen = BTreeSet::new();
        for (i, step) in chain.steps.iter().enumerate() {
            if !seen.insert(step.edge) {
                return Err(BuildError::InvalidRotation("chain reuses an edge"));
            }
            let e = self.image.edge(step.edge);
            if !(e.has_endpoint(step.from) && e.has_endpoint(step.via)) || step.from == step.via {
                return Err(BuildError::InvalidRotation("step does not match current edge"));
            }
            let next = chain.steps.get(i + 1).map_or(chain.end, |s| s.from);
            if next == step.from || next == step.via {
                return Err(BuildError::InvalidRotation("chain vertices not distinct"));
            }
            if !self
                .image
                .hypergraph()
                .hyperedge_contains(self.image.phi(step.edge), next)
            {
                return Err(BuildError::InvalidRotation("next vertex outside hyperedge"));
            }
        }

        let old_start_degree = self.image.graph().degree(start);
        for (i, step) in chain.steps.iter().enumerate() {
            let next = chain.steps.get(i + 1).map_or(chain.end, |s| s.from);
            self.image.move_edge(step.edge, step.via, next);
        }
        self.rotations += 1;

        // Only the start and end degrees changed; the end stays below k+1.
        let new_start_degree = old_start_degree - 1;
        if new_start_degree > self.k {
            self.potential -= 1;
        } else {
            self.overloaded.remove(&start);
            self.potential -= old_start_degree;
        }
        debug_assert!(self.image.graph().degree(chain.end) <= self.k);
        debug_assert!(self.check_bookkeeping());
        Ok(())
    }

    #[cfg(debug_assertions)]
    fn check_bookkeeping(&self) -> bool {
        let g = self.image.graph();
        let overloaded: BTreeSet<usize> =
            (0..g.vertex_count()).filter(|&v| g.degree(v) > self.k).collect();
        let potential: usize = overloaded.iter().map(|&v| g.degree(v)).sum();
        overloaded == self.overloaded && potential == self.potential
    }

    #[cfg(not(debug_assertions))]
    fn check_bookkeeping(&self) -> bool {
        true
    }

    /// One build step: pick the reachable vertex of degree <= k-1 closest to
    /// the overloaded set (ties by vertex id) and rotate the chain to it.
    /// Returns `false` once no vertex is overloaded.
    pub fn step(&mut self) -> Result<bool, BuildError> {
        if self.overloaded.is_empty() {
            return Ok(false);
        }
        let sources: Vec<usize> = self.overloaded.iter().copied().collect();
        let forest = alternating_bfs(&self.image, &sources);
        let g = self.image.graph();
        let target = forest
            .reached()
            .into_iter()
            .filter(|&v| g.degree(v) < self.k)
            .min_by_key(|&v| (forest.dist(v).expect("reached"), v))
            .ok_or(BuildError::LemmaViolation)?;
        let chain = reconstruct_chain(&forest, target)?;
        self.rotate_chain(&chain)?;
        Ok(true)
    }

    pub fn run(mut self) -> Result<BuildOutcome, BuildError> {
        let initial_potential = self.potential;
        while self.step()? {
            debug_assert!(self.rotations <= initial_potential);
        }
        Ok(BuildOutcome {
            image: self.image,
            rotations: self.rotations,
            initial_potential,
        })
    }
}

/// An arbitrary valid image: for each hyperedge in order, the edge joins the
/// two members with the currently lowest degrees (ties by vertex id). Any
/// valid choice would do; this one empirically needs few rotations.
pub fn initial_image(h: &Hypergraph) -> Image {
    let mut degrees = vec![0usize; h.vertex_count()];
    let mut endpoints = Vec::with_capacity(h.edge_count());
    for edge in h.hyperedges() {
        let mut best: Option<usize> = None;
        let mut second: Option<usize> = None;
        for &v in edge {
            // Members are scanned in ascending id, so strict comparisons
            // break degree ties toward smaller ids.
            if best.is_none_or(|b| degrees[v] < degrees[b]) {
                second = best;
                best = Some(v);
            } else if second.is_none_or(|s| degrees[v] < degrees[s]) {
                second = Some(v);
            }
        }
        let (u, v) = (
            best.expect("hyperedges have >= 2 vertices"),
            second.expect("hyperedges have >= 2 vertices"),
        );
        degrees[u] += 1;
        degrees[v] += 1;
        endpoints.push((u, v));
    }
    Image::from_endpoints(h.clone(), endpoints).expect("chosen endpoints lie in their hyperedges")
}

/// Builds an image of `h` with maximum multigraph degree at most `params.k`.
///
/// With minimum hyperedge size 2 every image already satisfies the bound
/// (each hyperedge contributes at most one incidence per vertex, so image
/// degrees never exceed the hypergraph degree, and `k = Delta` there);
/// otherwise the rotation loop runs until no vertex is overloaded.
pub fn build_image(h: &Hypergraph, params: &Parameters) -> Result<Image, BuildError> {
    Ok(build_image_outcome(h, params)?.image)
}

/// Like [`build_image`] but also reports rotation counts.
pub fn build_image_outcome(h: &Hypergraph, params: &Parameters) -> Result<BuildOutcome, BuildError> {
    debug_assert_eq!(*params, Parameters::for_hypergraph(h));
    let image = initial_image(h);
    if params.min_edge_size == 2 {
        assert!(
            image.graph().max_degree() <= params.k,
            "an image degree exceeds the hypergraph degree"
        );
        return Ok(BuildOutcome {
            image,
            rotations: 0,
            initial_potential: 0,
        });
    }
    let outcome = BuildState::new(image, params.k).run()?;
    debug_assert!(outcome.image.graph().max_degree() <= params.k);
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance_gen::fano;
    use crate::verify::verify_image;

    fn two_triples() -> Image {
        // Hyperedges {0,1,2} and {2,3,4}; edges (0,1) and (2,3).
        let h = Hypergraph::new(5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        Image::from_endpoints(h, vec![(0, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn bfs_unfolds_chain_ends() {
        let img = two_triples();
        let forest = alternating_bfs(&img, &[0]);
        assert_eq!(forest.reached(), vec![0, 2, 4]);
        assert_eq!(forest.dist(0), Some(0));
        assert_eq!(forest.dist(2), Some(1));
        assert_eq!(forest.dist(4), Some(2));
        // b-vertices are passed through, never chain ends.
        assert!(!forest.is_reached(1));
        assert!(!forest.is_reached(3));
    }

    #[test]
    fn bfs_from_all_vertices_is_identity_at_dist_zero() {
        let img = two_triples();
        let all: Vec<usize> = (0..5).collect();
        let forest = alternating_bfs(&img, &all);
        assert_eq!(forest.reached(), all);
        assert!(all.iter().all(|&v| forest.dist(v) == Some(0)));
    }

    #[test]
    fn bfs_with_no_incident_edge_reaches_only_sources() {
        let h = Hypergraph::new(4, vec![vec![1, 2, 3]]).unwrap();
        let img = Image::from_endpoints(h, vec![(1, 2)]).unwrap();
        let forest = alternating_bfs(&img, &[0]);
        assert_eq!(forest.reached(), vec![0]);
    }

    #[test]
    fn reconstruction_walks_parents() {
        let img = two_triples();
        let forest = alternating_bfs(&img, &[0]);
        let chain = reconstruct_chain(&forest, 0).unwrap();
        assert_eq!(chain.len(), 0);
        assert_eq!(chain.start(), 0);

        let chain = reconstruct_chain(&forest, 4).unwrap();
        assert_eq!(chain.start(), 0);
        assert_eq!(chain.end, 4);
        assert_eq!(
            chain.steps,
            vec![
                ChainStep { from: 0, via: 1, edge: 0 },
                ChainStep { from: 2, via: 3, edge: 1 }
            ]
        );
        assert_eq!(reconstruct_chain(&forest, 1), Err(BuildError::NotReached(1)));
    }

    #[test]
    fn single_step_rotation_shifts_degree() {
        // Vertex 0 is overloaded for k = 1 (degree 2); vertex 2 is free.
        let h = Hypergraph::new(4, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        let img = Image::from_endpoints(h, vec![(0, 1), (0, 1)]).unwrap();
        let mut state = BuildState::new(img, 1);
        assert!(state.overloaded().contains(&0));
        let chain = AlternatingChain {
            steps: vec![ChainStep { from: 0, via: 1, edge: 0 }],
            end: 2,
        };
        let before = state.potential();
        state.rotate_chain(&chain).unwrap();
        let g = state.image().graph();
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.degree(2), 1);
        assert!(state.potential() < before);
        assert!(verify_image(state.image().hypergraph(), state.image()).ok());
    }

    #[test]
    fn zero_length_rotation_is_contradictory() {
        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        let img = Image::from_endpoints(h, vec![(0, 1)]).unwrap();
        let mut state = BuildState::new(img, 3);
        let chain = AlternatingChain { steps: vec![], end: 0 };
        assert!(matches!(
            state.rotate_chain(&chain),
            Err(BuildError::InvalidRotation(_))
        ));
    }

    #[test]
    fn initial_image_respects_containment() {
        let h = fano();
        let img = initial_image(&h);
        assert!(verify_image(&h, &img).ok());
        assert_eq!(img.graph().edge_count(), 7);
    }

    #[test]
    fn forced_pair_hyperedges() {
        let h = Hypergraph::new(2, vec![vec![0, 1], vec![0, 1]]).unwrap();
        let img = initial_image(&h);
        assert_eq!(img.graph().degree(0), 2);
        assert_eq!(img.graph().degree(1), 2);
    }

    #[test]
    fn stacked_start_forces_real_rotations() {
        // First-two-members endpoints pile degree 3 onto vertex 0 while
        // k = 2, so the loop must rotate at least once.
        let h = fano();
        let endpoints = h.hyperedges().iter().map(|e| (e[0], e[1])).collect();
        let img = Image::from_endpoints(h.clone(), endpoints).unwrap();
        assert_eq!(img.graph().degree(0), 3);
        let state = BuildState::new(img, 2);
        assert!(state.potential() > 0);
        let outcome = state.run().unwrap();
        assert!(outcome.rotations >= 1);
        assert!(outcome.rotations <= outcome.initial_potential);
        assert!(outcome.image.graph().max_degree() <= 2);
        assert!(verify_image(&h, &outcome.image).ok());
    }

    #[test]
    fn fano_build_reaches_degree_two() {
        let h = fano();
        let params = Parameters::for_hypergraph(&h);
        assert_eq!(params.k, 2);
        let outcome = build_image_outcome(&h, &params).unwrap();
        assert!(outcome.image.graph().max_degree() <= 2);
        assert!(outcome.rotations <= outcome.initial_potential);
        assert!(verify_image(&h, &outcome.image).ok());
    }

    #[test]
    fn min_size_two_returns_initial_image() {
        let h = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let params = Parameters::for_hypergraph(&h);
        assert_eq!(params.k, 2);
        let img = build_image(&h, &params).unwrap();
        assert!(img.graph().max_degree() <= 2);
    }

    #[test]
    fn empty_hypergraph_builds_empty_image() {
        let h = Hypergraph::new(4, vec![]).unwrap();
        let params = Parameters::for_hypergraph(&h);
        let img = build_image(&h, &params).unwrap();
        assert_eq!(img.graph().edge_count(), 0);
        assert_eq!(img.graph().max_degree(), 0);
    }
}
