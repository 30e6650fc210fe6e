//! Color codes, locating-coloring verification, lower bounds, the exact
//! solver and a brute-force oracle.

mod bounds;
mod brute;
mod coloring;
mod solver;

pub use bounds::{
    locating_lower_bound, twin_classes, BoundSide, BoundTag, BoundsReport, LowerBound, TaggedBound,
};
pub use brute::{brute_force_chi_l, MAX_BRUTE_FORCE_ORDER};
pub use coloring::{
    color_codes, verify, ColorCodeMatrix, Coloring, Verdict, VerificationReport, Witness,
};
pub use solver::{chi_l, find_locating_coloring, ChiL, SearchOutcome, DEFAULT_BUDGET};
