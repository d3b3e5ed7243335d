//! Cohomogeneity-one metrics on spheres, `g = ds²/Φ^{2n-2} + Φ² g_{S^{n-1}}`
//! with `s ∈ [0, 1]`: profiles, their scalar curvature, the gradient and
//! comparison checks, the polynomial-trial bounds `D_k`, and the invariant
//! spectrum.

pub mod bound;
pub mod io;
pub mod profile;
pub mod spectrum;

pub use bound::{compute_dk, dk_pencil, dk_table, phi_max, Cohom1BoundResult};
pub use io::parse_profile;
pub use profile::{
    check_comparison, check_slope, ComparisonReport, GradientReport, Profile, POLE_EPS,
};
pub use spectrum::{cohom1_spectrum, cohom1_spectrum_with, half_interval_spectrum};

/// Identifier of the fibre normalization, carried into run records.
pub const FIBER_CONVENTION: &str = "unit-radius-round-fiber;total-s-length-1";
