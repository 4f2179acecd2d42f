//! Linear-algebraic one-step breadth-first search on directed hypergraphs,
//! over value sets with no assumptions beyond two-sided identities.
//!
//! The library has three layers:
//!
//! - [`valueset`], [`array`], [`hypergraph`]: value sets `(V, +, *, 0, 1)`
//!   with exhaustive law checking, associative arrays with the
//!   right-associative key-ordered fold product, and directed hypergraphs
//!   with incidence arrays and set-theoretic frontier oracles.
//! - [`traversal`]: the one-step BFS computation
//!   `(v +.* E_out^T) +.* E_in`, its edge/vertex decomposition, the
//!   zero-pattern conditions that make each step correct, and the
//!   transposed and adjacency-route formulations.
//! - [`verify`]: the figure constructions that witness necessity of each
//!   algebraic condition, and desk-scale harnesses that check the
//!   profile-vs-behavior equivalences over every enumerated value set.
//!
//! See the `examples/` directory for runnable walkthroughs of each
//! capability, and the `hyperbfs` binary for the file-based CLI.

pub mod array;
pub mod cli;
pub mod error;
pub mod format;
pub mod hypergraph;
pub mod traversal;
pub mod valueset;
pub mod verify;

pub use array::{
    array_product_sparse, array_product_strict, equal_as_map, fold_plus, AssociativeArray,
    KeySpace,
};
pub use error::{Error, Result};
pub use hypergraph::{
    build_incidence, enumerate_hypergraphs, oracle_edge_frontier, oracle_vertex_frontier,
    random_hypergraph, validate_incidence, DirectedHypergraph, Hyperedge, IncidencePair,
    IncidenceWeights, Side,
};
pub use traversal::{
    adjacency_array, bfs_edge_step, bfs_vertex_step, check_condition_dagger,
    check_condition_star, linalg_bfs, linalg_bfs_sparse, linalg_bfs_transposed,
    linalg_bfs_via_adjacency, same_frontier, FrontierVector,
};
pub use valueset::{
    check_identities, enumerate_value_sets, profile, AnnihilatorCertificate, IntValueSet,
    PropertyProfile, TableValueSet, ValueSet, Verdict,
};
