//! Shared numerical machinery: polynomial algebra, quadrature and the two
//! eigenvalue engines (dense generalized symmetric, tridiagonal Sturm–Liouville).

pub mod legendre;
pub mod linalg;
pub mod poly;
pub mod quadrature;
pub mod sturm;

pub use linalg::{sym_gen_eig, sym_gen_eigs, GenEig, SymMatrix};
pub use poly::Polynomial;
pub use quadrature::{gauss_legendre, Escalation, GaussLegendre, QuadEstimate};
pub use sturm::{
    sl_eigs, sl_eigs_refined, sl_eigs_with, RightBoundary, SpectrumResult, TridiagEig,
};
