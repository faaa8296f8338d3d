//! Weighted ordinal ordering cones.
//!
//! Categories `1..=K` are ordered from best to worst. Marginal weights
//! `(omega, gamma)` say that `omega_i` units of category `i` are at least as
//! good as one unit of category `i + 1`, and that one unit of category
//! `i + 1` is at least as good as `1 / gamma_i` units of category `i`. The
//! induced dominance relation is a polyhedral cone; this crate builds it
//! from both sides (spanning rays and facet normals), decides dominance
//! between outcome vectors, turns cone efficiency into Pareto efficiency
//! and computes all efficient paths on graphs whose edges carry a
//! category and a length.
//!
//! All arithmetic is exact (see [`exactnum`]).

pub mod cone;
pub mod dominance;
pub mod error;
pub mod exactnum;
pub mod graph_io;
pub mod oracle;
pub mod pathsolve;

pub use cone::{
    classify_weights, dual_contains, facet_count, facet_matrix, facet_normal, mark_extreme_rays,
    detect_special, merge_degenerate, representation_matrix, spanning_rays, special_matrix, ConeHRep, ConeVRep,
    Generator, MergedWeights, SpecialKind, WeightClass, Weights,
};
pub use dominance::{dominates, filter_nondominated, pareto_transform, weakly_dominates, PointSet};
pub use error::{Error, Result};
pub use exactnum::{parse_rational, rat_from_decimal, to_decimal_string, RatMatrix, RatVector, Rational};
pub use pathsolve::{
    counting_vector, efficient_paths, weight_sweep, CategoryGraph, EfficientPath, SearchMode,
    SweepRow,
};
