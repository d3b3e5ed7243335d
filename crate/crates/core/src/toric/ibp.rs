//! Residual of the boundary integration-by-parts identity
//! `∫_P u^{ij} F_ij dμ = 2 ∫_{∂P} F dσ − ∫_P Scal·F dμ`.

use super::polytope::{boundary_integrate, Polytope};
use super::potential::{Poly2, SymplecticPotential};
use crate::numerics::Escalation;
use crate::{Error, Exec, Result};

/// How the interior integrals are computed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum QuadSetting {
    /// Double the per-direction point count until successive estimates agree.
    Escalate(Escalation),
    /// A single rule with this many points per direction.
    Fixed(usize),
}

/// Default escalation for the interior integrals. The curvature integrand
/// carries finite-difference noise near `1e-10`, so agreement is asked at `1e-9`.
pub const IBP_ESCALATION: Escalation = Escalation {
    rel_tol: 1e-9,
    start: 8,
    cap: 256,
};

impl Default for QuadSetting {
    fn default() -> Self {
        QuadSetting::Escalate(IBP_ESCALATION)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IbpTerms {
    /// `∫_P u^{ij} F_ij dμ`
    pub hessian_term: f64,
    /// `2 ∫_{∂P} F dσ`
    pub boundary_term: f64,
    /// `∫_P Scal·F dμ`
    pub curvature_term: f64,
    /// `hessian_term − boundary_term + curvature_term`
    pub residual: f64,
    /// Per-direction points of the final interior rule.
    pub points: usize,
}

pub fn ibp_residual(u: &SymplecticPotential, test: &Poly2, quad: QuadSetting) -> Result<IbpTerms> {
    ibp_residual_with(u, test, quad, Exec::default())
}

pub fn ibp_residual_with(
    u: &SymplecticPotential,
    test: &Poly2,
    quad: QuadSetting,
    exec: Exec,
) -> Result<IbpTerms> {
    let polytope = u.polytope();
    if polytope.dim() == 1 && test.uses_second_variable() {
        return Err(Error::input("test function uses y on an interval"));
    }
    let integrand = |x: &[f64]| -> Result<[f64; 2]> {
        let f_hess = test.hessian(x, polytope.dim());
        let inv = u.inverse_hessian(x)?;
        let scal = u.scalar_curvature_auto(x)?;
        Ok([inv.contract(&f_hess), scal * test.eval(x)])
    };
    let ([hessian_term, curvature_term], points) = match quad {
        QuadSetting::Fixed(n) => (interior_sum(polytope, n, &integrand, exec)?.0, n),
        QuadSetting::Escalate(esc) => escalate_interior(polytope, &esc, &integrand, exec)?,
    };
    let boundary_term = 2.0 * boundary_integrate(polytope, |x| test.eval(x))?;
    Ok(IbpTerms {
        hessian_term,
        boundary_term,
        curvature_term,
        residual: hessian_term - boundary_term + curvature_term,
        points,
    })
}

/// Interior integral of a two-component integrand plus the integral of its
/// absolute values.
fn interior_sum<F>(polytope: &Polytope, n: usize, f: &F, exec: Exec) -> Result<([f64; 2], [f64; 2])>
where
    F: Fn(&[f64]) -> Result<[f64; 2]> + Sync,
{
    let rule = polytope.interior_rule(n);
    let values = exec.map(&rule, |(x, _)| f(x));
    let mut acc = [0.0; 2];
    let mut mag = [0.0; 2];
    for ((_, w), v) in rule.iter().zip(values) {
        let v = v?;
        for k in 0..2 {
            acc[k] += w * v[k];
            mag[k] += w * v[k].abs();
        }
    }
    Ok((acc, mag))
}

fn escalate_interior<F>(
    polytope: &Polytope,
    esc: &Escalation,
    f: &F,
    exec: Exec,
) -> Result<([f64; 2], usize)>
where
    F: Fn(&[f64]) -> Result<[f64; 2]> + Sync,
{
    let mut n = esc.start.max(1);
    let (mut prev, _) = interior_sum(polytope, n, f, exec)?;
    while n < esc.cap {
        n = (2 * n).min(esc.cap);
        let (cur, mag) = interior_sum(polytope, n, f, exec)?;
        if (0..2).all(|k| (cur[k] - prev[k]).abs() <= esc.rel_tol * mag[k].max(f64::MIN_POSITIVE)) {
            return Ok((cur, n));
        }
        prev = cur;
    }
    Err(Error::QuadratureCap {
        tol: esc.rel_tol,
        cap: esc.cap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_x_squared_terms_in_closed_form() {
        let u = SymplecticPotential::guillemin(Polytope::interval(-1.0, 1.0).unwrap());
        let r = ibp_residual(&u, &Poly2::monomial(2, 0), QuadSetting::default()).unwrap();
        assert!((r.hessian_term - 8.0 / 3.0).abs() < 1e-10);
        assert!((r.boundary_term - 4.0).abs() < 1e-14);
        assert!((r.curvature_term - 4.0 / 3.0).abs() < 1e-8);
        assert!(r.residual.abs() < 1e-8);
    }

    #[test]
    fn constant_test_function() {
        let u = SymplecticPotential::guillemin(Polytope::interval(-1.0, 1.0).unwrap());
        let r = ibp_residual(&u, &Poly2::monomial(0, 0), QuadSetting::default()).unwrap();
        assert_eq!(r.hessian_term, 0.0);
        assert!((r.curvature_term - 4.0).abs() < 1e-8);
        assert!(r.residual.abs() < 1e-8);
    }

    #[test]
    fn perturbed_interval_residual_vanishes() {
        let u = SymplecticPotential::with_perturbation(
            Polytope::interval(-1.0, 1.0).unwrap(),
            Poly2::from_terms([(4, 0, 0.05)]),
        )
        .unwrap();
        let r = ibp_residual(&u, &Poly2::monomial(2, 0), QuadSetting::default()).unwrap();
        assert!(r.residual.abs() < 1e-6, "{r:?}");
    }

    #[test]
    fn square_mixed_monomial() {
        let sq = Polytope::from_vertices(&[
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![1.0, 1.0],
            vec![0.0, 1.0],
        ])
        .unwrap();
        let u = SymplecticPotential::guillemin(sq);
        let r = ibp_residual(
            &u,
            &Poly2::from_terms([(1, 1, 1.0), (2, 0, 0.5)]),
            QuadSetting::default(),
        )
        .unwrap();
        assert!(r.residual.abs() < 1e-6, "{r:?}");
    }
}
