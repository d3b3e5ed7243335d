//! Upper bounds for the invariant Laplace spectrum of toric Kähler metrics and of
//! cohomogeneity-one metrics on spheres, under non-negative scalar curvature.
//!
//! The crate is split into four layers:
//!
//! * [`numerics`]: polynomials, Gauss–Legendre quadrature, a dense generalized
//!   symmetric eigensolver and a tridiagonal Sturm–Liouville solver.
//! * [`toric`]: moment polytopes, symplectic potentials, the Abreu scalar curvature,
//!   the boundary integration-by-parts identity and the polytope bounds `C_k`.
//! * [`cohom1`]: warping profiles on `S^n`, their scalar curvature and the
//!   profile-independent bounds `D_k`.
//! * [`specfun`]: `J_0`, its derivative and their zeros, used for comparison tables.
//!
//! Data-parallel loops go through [`Exec`]; with the `parallel` feature disabled
//! every path runs sequentially.

pub mod cohom1;
mod error;
pub mod exec;
pub mod numerics;
pub mod specfun;
pub mod toric;

pub use error::{Error, Result};
pub use exec::Exec;
pub use numerics::{Polynomial, SpectrumResult, SymMatrix};
