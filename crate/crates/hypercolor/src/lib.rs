//! Proper colorings of hypergraphs with few colors, and dynamic colorings
//! of graphs derived from them.
//!
//! For a hypergraph with maximum vertex degree `Delta` whose hyperedges all
//! have at least `delta >= 2` vertices, let `k = ceil(2*Delta/delta)`. The
//! library constructs a proper vertex coloring (every hyperedge sees two
//! colors) in `k + 1` colors, and in `k` colors when `delta >= 3` and
//! `k >= 3`. The engine is an *image* of the hypergraph: a multigraph with
//! one edge per hyperedge drawn inside it, rebalanced to maximum degree `k`
//! by alternating-chain rotations, then colored with Brooks' theorem plus a
//! clique-repair transformation.
//!
//! Dynamic colorings of graphs (every vertex of degree >= 2 sees two colors
//! among its neighbors) reduce to proper colorings of the neighborhood
//! hypergraph and come out with the same bounds.
//!
//! Everything is machine-checkable: [`verify`] holds definition-level
//! checkers and small exhaustive solvers used as ground truth in the test
//! suites, and [`instance_gen`] provides seeded, platform-independent
//! generators.

#![forbid(unsafe_code)]

pub mod brooks;
pub mod coloring;
pub mod dynamic_coloring;
pub mod format;
pub mod hypergraph;
pub mod image;
pub mod image_builder;
pub mod instance_gen;
pub mod multigraph;
pub mod params;
pub mod proper_coloring;
pub mod verify;

pub use coloring::Coloring;
pub use hypergraph::{Hypergraph, HypergraphStats};
pub use image::Image;
pub use multigraph::{Edge, Multigraph, SimpleProjection};
pub use params::{compute_k, Parameters};

pub use brooks::{brooks_coloring, greedy_coloring};
pub use dynamic_coloring::{dynamic_color, neighborhood_hypergraph};
pub use image_builder::{alternating_bfs, build_image, initial_image, reconstruct_chain};
pub use proper_coloring::{color_auto, color_k, color_k_plus_1};
pub use verify::{
    brute_force_image_min_max_degree, brute_force_min_colors, brute_force_min_dynamic_colors,
    verify_dynamic, verify_image, verify_proper_graph, verify_proper_hypergraph,
};
