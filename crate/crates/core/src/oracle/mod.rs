//! Independent reference implementations used to cross-check the fast paths.
//!
//! Nothing here is tuned for speed: ray membership runs Fourier-Motzkin,
//! facets come from a double description, paths are enumerated exhaustively
//! and dominance is refuted by sampling the dual cone.

pub mod dd;
pub mod membership;
pub mod paths;
pub mod random;
pub mod sampling;

pub use dd::double_description;
pub use membership::{in_cone, ray_membership, MembershipCertificate};
pub use paths::{brute_force_efficient, enumerate_simple_paths};
pub use sampling::sampled_dual_check;
