//! Oriented threshold graphs: digraphs whose arcs run "downhill" between
//! vertices with signed weights `w`, `x -> y` exactly when
//! `|w(x)| + |w(y)| >= t` and `w(x) > w(y)`.
//!
//! The same class arises as the transitive orientations of threshold graphs,
//! as the displit graphs with properly nested neighborhoods, and as the graphs
//! built by repeatedly adding an isolated, out-dominating or in-dominated
//! vertex. This crate builds graphs from each of these descriptions,
//! recognizes membership by each route, reduces creation sequences to a
//! canonical form (one per isomorphism class), and counts the classes.
//!
//! ```
//! use otg_core::{canonicalize, dtg_build, extract_sequence, TernarySequence};
//!
//! let s: TernarySequence = "-+0*".parse().unwrap();
//! let g = dtg_build(&s);
//! assert_eq!(g.arc_count(), 5);
//! let found = extract_sequence(&g).unwrap();
//! assert_eq!(canonicalize(&found), canonicalize(&s));
//! assert_eq!(canonicalize(&s).to_string(), "+-0*");
//! ```

pub mod construction;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod io;
pub mod recognition;
pub mod selfcheck;
pub mod sequence;

pub use construction::{
    build_from_weights, dtg_build, realize_weights, threshold_build, WeightRealization,
};
pub use enumeration::{
    brute_count_classes, brute_orientation_classes, count_classes, count_transitive_orientations,
    enumerate_orientation_classes, fibonacci, ClassCount,
};
pub use error::{Error, Result};
pub use graph::{
    are_isomorphic_bruteforce, find_isomorphism, is_nested_family, is_switch_free, is_transitive,
    NeighborhoodMap, OrientedGraph, UndirectedGraph, VertexSet,
};
pub use io::{emit_edge_list, export_dot, parse_edge_list, parse_sequence};
pub use recognition::{
    check_properly_nested, displit_partition, eliminate, extract_sequence, is_threshold_undirected,
    recognize, DisplitPartition, Elimination,
};
pub use sequence::{
    canonicalize, enumerate_canonical, from_blocks, is_canonical, swap_equal_magnitude, to_blocks,
    Block, BlockForm, TernarySequence, TernarySymbol,
};
