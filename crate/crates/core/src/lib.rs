//! Locating colorings and locating-chromatic numbers of graphs, with
//! first-class support for corona products.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`], [`distance`], [`corona`], [`iso`], [`format`] and [`corpus`]
//!   hold the graph substrate: representation, generators, products,
//!   hop distances, subgraph containment and the edge-list file format.
//! * [`locating`] computes color codes, verifies locating colorings, derives
//!   lower bounds and runs the exact solver and the brute-force oracle.
//! * [`constructions`] builds the explicit colorings and bound formulas for
//!   corona products and certifies each of them with the verifier.

pub mod constructions;
pub mod corona;
pub mod corpus;
pub mod distance;
pub mod error;
pub mod format;
pub mod graph;
pub mod iso;
pub mod locating;

pub use corona::{corona, CoronaMap, CoronaMapRecord, VertexLabel};
pub use distance::{all_pairs_distances, DistanceMatrix};
pub use error::{Error, Result};
pub use format::{parse_graph, serialize_graph};
pub use graph::{Family, Graph};
pub use iso::subgraph_isomorphic;
pub use locating::{
    brute_force_chi_l, chi_l, color_codes, find_locating_coloring, locating_lower_bound,
    twin_classes, verify, BoundSide, BoundTag, BoundsReport, ChiL, ColorCodeMatrix, Coloring,
    LowerBound, SearchOutcome, TaggedBound, VerificationReport, Witness, DEFAULT_BUDGET,
};
