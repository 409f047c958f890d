//! Property tests for the structural invariants: image laws under
//! construction and rotation, chain laws, coloring properness and palette
//! bounds, checker agreement, and format round-trips.

mod common;

use common::random_connected_bounded;
use proptest::prelude::*;

use hypercolor::format::{
    parse_coloring, parse_instance, write_coloring, write_graph, write_hypergraph, Instance,
};
use hypercolor::image_builder::{alternating_bfs, reconstruct_chain, BuildState};
use hypercolor::instance_gen::{random_graph, random_hypergraph, GenParams, SplitMix64};
use hypercolor::proper_coloring::{color_k_traced, color_k_plus_1, PipelineError};
use hypercolor::verify::{
    verify_dynamic, verify_image, verify_proper_graph, verify_proper_hypergraph,
};
use hypercolor::{
    brooks, dynamic_coloring, initial_image, Coloring, Hypergraph, Multigraph, Parameters,
};

fn arb_hypergraph(min_size: usize) -> impl Strategy<Value = Hypergraph> {
    (4usize..12, 0usize..14, any::<u64>(), 0usize..3).prop_map(move |(n, m, seed, spread)| {
        let lo = min_size;
        let hi = (lo + spread).min(n);
        let p = GenParams {
            n,
            m,
            size_lo: lo,
            size_hi: hi,
            max_degree_cap: None,
            seed,
        };
        random_hypergraph(&p).expect("uncapped generation always succeeds")
    })
}

fn arb_graph() -> impl Strategy<Value = Multigraph> {
    (1usize..10, 0u64..=4, any::<u64>())
        .prop_map(|(n, num, seed)| random_graph(n, num, 4, seed).expect("valid probability"))
}

/// The worst reasonable starting image: every hyperedge's edge lands on its
/// two smallest vertices, piling degree onto low ids.
fn stacked_image(h: &Hypergraph) -> hypercolor::Image {
    let endpoints = h.hyperedges().iter().map(|e| (e[0], e[1])).collect();
    hypercolor::Image::from_endpoints(h.clone(), endpoints).unwrap()
}

proptest! {
    #[test]
    fn built_images_meet_the_degree_bound(h in arb_hypergraph(2)) {
        let params = Parameters::for_hypergraph(&h);
        let outcome = hypercolor::image_builder::build_image_outcome(&h, &params).unwrap();
        prop_assert!(outcome.image.graph().max_degree() <= params.k);
        prop_assert!(outcome.rotations <= outcome.initial_potential);
        prop_assert!(verify_image(&h, &outcome.image).ok());
    }

    #[test]
    fn rotation_steps_keep_the_image_valid(h in arb_hypergraph(3)) {
        // A deliberately unbalanced start (first two members per hyperedge)
        // so the rotation loop has real work to do.
        let params = Parameters::for_hypergraph(&h);
        let mut state = BuildState::new(stacked_image(&h), params.k);
        let mut last_potential = state.potential();
        while state.step().unwrap() {
            prop_assert!(verify_image(&h, state.image()).ok());
            prop_assert!(state.potential() < last_potential, "potential must strictly drop");
            last_potential = state.potential();
        }
        prop_assert!(state.image().graph().max_degree() <= params.k);
    }

    #[test]
    fn bfs_reached_set_is_a_fixed_point(h in arb_hypergraph(3), raw_sources in proptest::collection::vec(0usize..12, 1..4)) {
        let img = initial_image(&h);
        let n = img.graph().vertex_count();
        let sources: Vec<usize> = raw_sources.into_iter().map(|s| s % n).collect();
        let forest = alternating_bfs(&img, &sources);
        for a in forest.reached() {
            for &edge in img.graph().incident_edges(a) {
                let b = img.edge(edge).other(a);
                for &c in img.hyperedge_of_edge(edge) {
                    if c != a && c != b {
                        prop_assert!(forest.is_reached(c), "expanding {a} found unreached {c}");
                    }
                }
            }
        }
    }

    #[test]
    fn reconstructed_chains_obey_the_chain_laws(h in arb_hypergraph(3), source in 0usize..12) {
        let img = initial_image(&h);
        let n = img.graph().vertex_count();
        let forest = alternating_bfs(&img, &[source % n]);
        for end in forest.reached() {
            let chain = reconstruct_chain(&forest, end).unwrap();
            let mut edges: Vec<usize> = chain.steps.iter().map(|s| s.edge).collect();
            edges.sort_unstable();
            edges.dedup();
            prop_assert_eq!(edges.len(), chain.steps.len(), "edges repeat");
            for (i, step) in chain.steps.iter().enumerate() {
                prop_assert_eq!(forest.dist(step.from), Some(i));
                let next = chain.steps.get(i + 1).map_or(chain.end, |s| s.from);
                let e = img.edge(step.edge);
                prop_assert!(e.has_endpoint(step.from) && e.has_endpoint(step.via));
                prop_assert!(next != step.from && next != step.via);
                let hyperedge = img.hyperedge_of_edge(step.edge);
                for v in [step.from, step.via, next] {
                    prop_assert!(hyperedge.binary_search(&v).is_ok());
                }
            }
        }
    }

    #[test]
    fn k_plus_1_colorings_are_proper(h in arb_hypergraph(2)) {
        let params = Parameters::for_hypergraph(&h);
        let c = color_k_plus_1(&h).unwrap();
        prop_assert_eq!(c.palette(), params.k + 1);
        prop_assert!(verify_proper_hypergraph(&h, &c).unwrap().ok());
    }

    #[test]
    fn k_colorings_are_proper_within_k(h in arb_hypergraph(3)) {
        let params = Parameters::for_hypergraph(&h);
        match color_k_traced(&h) {
            Ok((c, _)) => {
                prop_assert!(params.k >= 3);
                prop_assert_eq!(c.palette(), params.k);
                prop_assert!(verify_proper_hypergraph(&h, &c).unwrap().ok());
            }
            Err(PipelineError::UseKPlusOne { k, .. }) => prop_assert!(k < 3),
            Err(e) => prop_assert!(false, "unexpected pipeline error: {e}"),
        }
    }

    #[test]
    fn dynamic_checker_agrees_with_neighborhood_reduction(
        g in arb_graph(),
        seed in any::<u64>(),
        palette in 1usize..4,
    ) {
        let mut rng = SplitMix64::new(seed);
        let colors: Vec<usize> = (0..g.vertex_count()).map(|_| rng.below(palette)).collect();
        let c = Coloring::new(colors, palette).unwrap();
        let nh = dynamic_coloring::neighborhood_hypergraph(&g);
        let direct = verify_dynamic(&g, &c).unwrap().ok();
        let reduced = verify_proper_hypergraph(&nh.hypergraph, &c).unwrap().ok();
        prop_assert_eq!(direct, reduced);
    }

    #[test]
    fn dynamic_colorings_verify(g in arb_graph()) {
        let run = dynamic_coloring::dynamic_color_run(&g).unwrap();
        prop_assert!(verify_dynamic(&g, &run.coloring).unwrap().ok());
        let bound = if run.within_k { run.k } else { run.k + 1 };
        prop_assert!(run.coloring.colors_used() <= bound.max(1));
    }

    #[test]
    fn hypergraph_write_parse_round_trip(h in arb_hypergraph(2)) {
        let text = write_hypergraph(&h);
        let Instance::Hypergraph(back) = parse_instance(&text).unwrap() else {
            return Err(TestCaseError::fail("wrong instance kind"));
        };
        prop_assert_eq!(&back, &h);
        prop_assert_eq!(write_hypergraph(&back), text);
    }

    #[test]
    fn graph_and_coloring_round_trips(g in arb_graph(), palette in 1usize..5, seed in any::<u64>()) {
        let text = write_graph(&g);
        let Instance::Graph(back) = parse_instance(&text).unwrap() else {
            return Err(TestCaseError::fail("wrong instance kind"));
        };
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_graph(&back), text);

        let mut rng = SplitMix64::new(seed);
        let colors: Vec<usize> = (0..g.vertex_count()).map(|_| rng.below(palette)).collect();
        let c = Coloring::new(colors, palette).unwrap();
        let ctext = write_coloring(&c);
        prop_assert_eq!(parse_coloring(&ctext).unwrap(), c);
    }

    #[test]
    fn brooks_handles_random_bounded_graphs(seed in any::<u64>(), k in 3usize..6, n in 2usize..16) {
        let g = random_connected_bounded(n, k, seed);
        let is_clique = g.vertex_count() == k + 1 && (0..g.vertex_count()).all(|v| g.degree(v) == k);
        prop_assume!(!is_clique);
        let c = brooks::brooks_component_coloring(&g, k).unwrap();
        prop_assert!(c.colors().iter().all(|&col| col < k));
        let pairs: Vec<(usize, usize)> = (0..g.vertex_count())
            .flat_map(|u| g.neighbors(u).iter().map(move |&v| (u, v)).filter(|&(u, v)| u < v).collect::<Vec<_>>())
            .collect();
        let mg = Multigraph::new(g.vertex_count(), pairs).unwrap();
        prop_assert!(verify_proper_graph(&mg, &c).unwrap().ok());
    }
}
