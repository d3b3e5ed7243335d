use super::potential::SymplecticPotential;
use crate::numerics::sturm::sl_spectrum;
use crate::numerics::SpectrumResult;
use crate::{Error, Exec, Result};

/// Torus-invariant spectrum on an interval: `-(u^{xx} φ')' = λ φ` in `L²(dx)`.
///
/// Returns `count + 1` eigenvalues, the constant mode first.
pub fn toric1d_spectrum(
    u: &SymplecticPotential,
    count: usize,
    mesh: usize,
) -> Result<SpectrumResult> {
    toric1d_spectrum_with(u, count, mesh, Exec::default())
}

pub fn toric1d_spectrum_with(
    u: &SymplecticPotential,
    count: usize,
    mesh: usize,
    exec: Exec,
) -> Result<SpectrumResult> {
    let p = u.polytope();
    if p.dim() != 1 {
        return Err(Error::input(
            "the invariant spectrum is only solved on intervals",
        ));
    }
    let (a, b) = (p.vertices()[0][0], p.vertices()[1][0]);
    let coefficient = |s: f64| {
        u.inverse_hessian(&[a + s])
            .map(|h| h.m[0][0])
            .unwrap_or(f64::NAN)
    };
    sl_spectrum(coefficient, b - a, mesh, count + 1, exec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::{Poly2, Polytope};

    #[test]
    fn fubini_study_interval() {
        let u = SymplecticPotential::guillemin(Polytope::interval(-1.0, 1.0).unwrap());
        let s = toric1d_spectrum(&u, 4, 4000).unwrap();
        assert_eq!(s.eigenvalues.len(), 5);
        assert_eq!(s.eigenvalues[0], 0.0);
        for k in 1..5 {
            let exact = (k * (k + 1)) as f64;
            assert!(((s.eigenvalues[k] - exact) / exact).abs() < 1e-3);
        }
        assert!(s.rel_change < 1e-4);
    }

    #[test]
    fn unit_interval_rescales() {
        let u = SymplecticPotential::guillemin(Polytope::interval(0.0, 1.0).unwrap());
        let s = toric1d_spectrum(&u, 3, 4000).unwrap();
        for k in 1..4 {
            let exact = (2 * k * (k + 1)) as f64;
            assert!(((s.eigenvalues[k] - exact) / exact).abs() < 1e-3);
        }
    }

    #[test]
    fn perturbed_potential_respects_first_bound() {
        let u = SymplecticPotential::with_perturbation(
            Polytope::interval(-1.0, 1.0).unwrap(),
            Poly2::from_terms([(4, 0, 0.05)]),
        )
        .unwrap();
        let scal = u.min_scalar_curvature().unwrap();
        let s = toric1d_spectrum(&u, 1, 4000).unwrap();
        assert!((s.eigenvalues[1] - 2.0).abs() > 1e-3);
        if scal >= 0.0 {
            assert!(s.eigenvalues[1] <= 3.0);
        }
    }
}
