//! Toric Kähler side: moment polytopes with their integral boundary measure,
//! symplectic potentials, the Abreu scalar curvature, the boundary
//! integration-by-parts identity, and the polynomial-trial bounds `C_k`.

pub mod bound;
pub mod ibp;
pub mod io;
pub mod polytope;
pub mod potential;
pub mod spectrum;

pub use bound::{
    assemble_bound_matrices, assemble_bound_pencil, bound_table, compute_ck, compute_ck_with_basis,
    direction_sweep, direction_sweep_with, BoundPencil, SweepResult, ToricBoundResult, TrialBasis,
};
pub use ibp::{ibp_residual, ibp_residual_with, IbpTerms, QuadSetting, IBP_ESCALATION};
pub use polytope::{boundary_integrate, Facet, Polytope};
pub use potential::{Poly2, Sym2, SymplecticPotential};
pub use spectrum::{toric1d_spectrum, toric1d_spectrum_with};

/// Identifier of the boundary-measure convention, carried into run records.
pub const SIGMA_CONVENTION: &str = "euclidean-facet-measure-over-primitive-normal-norm";
