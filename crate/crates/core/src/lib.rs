//! Exact computation of the ID-index and ID-number of finite simple
//! connected graphs.
//!
//! Under a rank assignment `f: V -> Z`, every vertex `v` of a graph with
//! diameter `d` receives a *string*: the `d`-vector whose `i`-th coordinate is
//! the sum of the ranks of the vertices at distance exactly `i` from `v`. The
//! ID-index is the least number of distinct rank values for which all strings
//! are pairwise distinct. Red-white colorings and their *codes* are the 0/1
//! special case; a graph admitting a coloring with distinct codes is an
//! ID-graph.
//!
//! The crate is `no_std` and needs only `alloc`. It provides
//!
//! * [`graph`]: simple graphs, edge-list parsing, BFS distance matrices;
//! * [`families`]: canonical generators for paths, cycles, grids, prisms,
//!   complete (multipartite) graphs, the Petersen graph and caterpillars;
//! * [`strings`]: strings, codes and distinctness checks;
//! * [`structure`]: twin classes (t-tuplets), lower bounds, distance profiles;
//! * [`solver`]: the exact partition search, brute-force oracles, the
//!   ID-number search and a greedy upper bound;
//! * [`constructions`]: closed-form rank assignments for the families whose
//!   ID-index is known, and rank/coloring transforms.

#![cfg_attr(not(test), no_std)]
#![warn(missing_docs)]

extern crate alloc;

pub mod constructions;
pub mod families;
pub mod graph;
pub mod solver;
pub mod strings;
pub mod structure;

pub use constructions::{
    affine_transform, coloring_to_ranks, construct_assignment, expected_id_index,
    normalize_two_valued, ranks_to_coloring, universal_assignment, ConstructionError,
};
pub use families::{generate, FamilyError, FamilySpec, VertexLayout, VertexRole};
pub use graph::{all_pairs_distances, parse_edge_list, DistanceMatrix, Graph, GraphError};
pub use solver::{
    certificate_ranks, geometric_pool, greedy_upper_bound, id_index_exact, id_index_oracle,
    id_index_with, id_number_exact, pair_profiles, partition_distinguishes, IdIndexCertificate,
    IdNumberResult, InfeasibilityWitness, Limits, OracleError, PairProfile, Partition, SolveError,
};
pub use strings::{
    code_table, is_distinguishing, is_id_coloring, string_table, Code, CodeTable, Distinctness,
    RankAssignment, RedWhiteColoring, StringError, StringTable, VertexString,
};
pub use structure::{
    distance_profile, idi_lower_bound, multipartite_binomial_bound, tuplet_classes,
    DistanceProfile, StructureError, TupletClass, TupletClasses, TupletKind,
};

/// Dense vertex identifier, `0..n`.
pub type Vertex = usize;
