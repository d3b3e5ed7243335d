//! The polytope bounds `C_k`.
//!
//! For a direction `w` put `t = ⟨w, x⟩` on the support interval `[t_min, t_max]`
//! with midpoint `t*`. For a trial polynomial `φ(t)` of degree `≤ k` let `ρ` solve
//! `ρ'' = (φ')²`, `ρ(t*) = ρ'(t*) = 0`. Then
//!
//! ```text
//! ∫_P |∇φ|² dμ  ≤  2 ∫_{∂P} ρ dσ
//! ```
//!
//! for every toric metric on `P` with non-negative scalar curvature, and the
//! ratio of the right side to `∫_P φ² dμ` is a quotient of two quadratic forms in
//! the coefficients of `φ`. `C_k` is its maximum, the top eigenvalue of the
//! pencil `(A, M)`:
//!
//! * `A_ij = 2 ∫_{∂P} ρ_ij(t) dσ`, `ρ_ij` the centered double antiderivative of `b_i' b_j'`;
//! * `M_ij = ∫_P b_i(t) b_j(t) dμ`.
//!
//! Both integrands are polynomials in `t`, so all rules below are exact.

use super::polytope::{dot, Polytope};
use crate::numerics::legendre;
use crate::numerics::{sym_gen_eig, GaussLegendre, Polynomial, SymMatrix};
use crate::{Error, Exec, Result};

/// Basis of the trial space `span{1, t, …, t^k}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TrialBasis {
    /// Legendre polynomials of `(t - t*) / h`, `h` the support half-width.
    #[default]
    Legendre,
    /// Powers of `(t - t*) / h`; kept for cross-checks at small `k`.
    Monomial,
}

#[derive(Clone, Debug)]
pub struct BoundPencil {
    pub a: SymMatrix,
    pub m: SymMatrix,
    pub basis: TrialBasis,
    /// Unit direction used for the projection.
    pub direction: Vec<f64>,
    pub center: f64,
    pub half_width: f64,
}

impl BoundPencil {
    /// Trial polynomial with basis coefficients `coeffs`, expanded in powers of `t`.
    pub fn polynomial(&self, coeffs: &[f64]) -> Polynomial {
        match self.basis {
            TrialBasis::Legendre => {
                legendre::series_in_variable(coeffs, self.center, self.half_width)
            }
            TrialBasis::Monomial => Polynomial::new(coeffs.to_vec())
                .compose_affine(1.0 / self.half_width, -self.center / self.half_width),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ToricBoundResult {
    pub k: usize,
    pub direction: Vec<f64>,
    /// `C_k`, in eigenvalue units (inverse length squared).
    pub value: f64,
    /// Maximizing trial function as a polynomial in `t = ⟨w, x⟩`, normalized to
    /// `∫_P φ² dμ = 1`.
    pub maximizer: Polynomial,
    /// Set when the polygon is not Delzant: the number is still an upper bound
    /// for the formal problem, but no smooth toric manifold sits behind it.
    pub formal: bool,
    pub pencil: BoundPencil,
}

fn unit_direction(polytope: &Polytope, w: &[f64]) -> Result<Vec<f64>> {
    if w.len() != polytope.dim() {
        return Err(Error::DimensionMismatch {
            expected: polytope.dim(),
            found: w.len(),
        });
    }
    let norm = w.iter().map(|c| c * c).sum::<f64>().sqrt();
    if !(norm > 1e-12) || !norm.is_finite() {
        return Err(Error::DegenerateDirection { width: 0.0 });
    }
    Ok(w.iter().map(|c| c / norm).collect())
}

/// `(A, M)` in the Legendre basis.
pub fn assemble_bound_matrices(
    polytope: &Polytope,
    w: &[f64],
    k: usize,
) -> Result<(SymMatrix, SymMatrix)> {
    let p = assemble_bound_pencil(polytope, w, k, TrialBasis::Legendre)?;
    Ok((p.a, p.m))
}

pub fn assemble_bound_pencil(
    polytope: &Polytope,
    w: &[f64],
    k: usize,
    basis: TrialBasis,
) -> Result<BoundPencil> {
    let w = unit_direction(polytope, w)?;
    let (t_min, t_max) = polytope.support(&w);
    let width = t_max - t_min;
    if !(width >= 1e-12) {
        return Err(Error::DegenerateDirection { width });
    }
    let center = 0.5 * (t_min + t_max);
    let half_width = 0.5 * width;
    let order = k + 1;

    // Pushforwards of σ and μ to the t-line; exact for degree 2k in t.
    let boundary: Vec<(f64, f64)> = polytope
        .boundary_rule(k + 1)
        .into_iter()
        .map(|(x, wt)| (dot(&x, &w) - center, wt))
        .collect();
    let interior: Vec<(f64, f64)> = polytope
        .interior_rule(k + 2)
        .into_iter()
        .map(|(x, wt)| (dot(&x, &w) - center, wt))
        .collect();

    let mut m = SymMatrix::zeros(order);
    let mut vals = vec![0.0; order];
    let mut ders = vec![0.0; order];
    for &(u, wt) in &interior {
        basis_values(basis, k, u / half_width, &mut vals, &mut ders);
        for i in 0..order {
            for j in 0..=i {
                m.add_to(i, j, wt * vals[i] * vals[j]);
            }
        }
    }

    let a = match basis {
        TrialBasis::Legendre => {
            // ρ_ij(u) = ∫_0^u (u − s) b_i'(s) b_j'(s) ds, integrand of degree 2k − 1.
            let inner = GaussLegendre::new(k.max(1));
            let mut a = SymMatrix::zeros(order);
            for &(u, wt) in &boundary {
                for (s, ws) in inner.mapped(0.0, u) {
                    basis_values(basis, k, s / half_width, &mut vals, &mut ders);
                    let scale = 2.0 * wt * ws * (u - s) / (half_width * half_width);
                    for i in 1..order {
                        for j in 1..=i {
                            a.add_to(i, j, scale * ders[i] * ders[j]);
                        }
                    }
                }
            }
            a
        }
        TrialBasis::Monomial => {
            // Explicit ρ_ij polynomials in u = t − t*.
            let monomials: Vec<Polynomial> = (0..order)
                .map(|i| Polynomial::monomial(i, half_width.powi(-(i as i32))))
                .collect();
            let derivs: Vec<Polynomial> = monomials.iter().map(Polynomial::derivative).collect();
            let mut a = SymMatrix::zeros(order);
            for i in 1..order {
                for j in 1..=i {
                    let rho = (&derivs[i] * &derivs[j]).double_antiderivative_centered(0.0);
                    let v: f64 = boundary.iter().map(|&(u, wt)| wt * rho.eval(u)).sum();
                    a.set(i, j, 2.0 * v);
                }
            }
            a
        }
    };

    Ok(BoundPencil {
        a,
        m,
        basis,
        direction: w,
        center,
        half_width,
    })
}

fn basis_values(basis: TrialBasis, k: usize, tau: f64, vals: &mut [f64], ders: &mut [f64]) {
    match basis {
        TrialBasis::Legendre => legendre::values_and_derivatives(k, tau, vals, ders),
        TrialBasis::Monomial => {
            vals[0] = 1.0;
            ders[0] = 0.0;
            for i in 1..=k {
                vals[i] = vals[i - 1] * tau;
                ders[i] = i as f64 * vals[i - 1];
            }
        }
    }
}

/// `C_k` along direction `w` (any nonzero vector; normalized internally).
pub fn compute_ck(polytope: &Polytope, k: usize, w: &[f64]) -> Result<ToricBoundResult> {
    compute_ck_with_basis(polytope, k, w, TrialBasis::Legendre)
}

pub fn compute_ck_with_basis(
    polytope: &Polytope,
    k: usize,
    w: &[f64],
    basis: TrialBasis,
) -> Result<ToricBoundResult> {
    if k == 0 {
        return Err(Error::input("k must be at least 1"));
    }
    let pencil = assemble_bound_pencil(polytope, w, k, basis)?;
    let eig = sym_gen_eig(&pencil.a, &pencil.m)?;
    let value = eig.max_value().max(0.0);
    let maximizer = pencil.polynomial(eig.max_vector());
    Ok(ToricBoundResult {
        k,
        direction: pencil.direction.clone(),
        value,
        maximizer,
        formal: !polytope.is_delzant(),
        pencil,
    })
}

/// `C_1 … C_kmax` along one direction.
pub fn bound_table(
    polytope: &Polytope,
    kmax: usize,
    w: &[f64],
    exec: Exec,
) -> Result<Vec<ToricBoundResult>> {
    exec.try_map_range(kmax, |i| compute_ck(polytope, i + 1, w))
}

#[derive(Clone, Debug)]
pub struct SweepResult {
    /// Angle of the best direction in `[0, π)`.
    pub angle: f64,
    pub direction: Vec<f64>,
    pub value: f64,
    /// `(angle, C_k)` for the uniform samples.
    pub samples: Vec<(f64, f64)>,
}

const GOLDEN_TOL: f64 = 1e-6;

/// Smallest `C_k` over directions: uniform samples over a half circle, then
/// golden-section refinement around the best sample.
pub fn direction_sweep(polytope: &Polytope, k: usize, nsamples: usize) -> Result<SweepResult> {
    direction_sweep_with(polytope, k, nsamples, Exec::default())
}

pub fn direction_sweep_with(
    polytope: &Polytope,
    k: usize,
    nsamples: usize,
    exec: Exec,
) -> Result<SweepResult> {
    if polytope.dim() != 2 {
        return Err(Error::input(
            "direction sweep needs a 2-dimensional polytope",
        ));
    }
    if nsamples < 8 {
        return Err(Error::input(format!(
            "nsamples = {nsamples} below the minimum of 8"
        )));
    }
    let eval = |theta: f64| compute_ck(polytope, k, &[theta.cos(), theta.sin()]).map(|r| r.value);
    let step = std::f64::consts::PI / nsamples as f64;
    let values = exec.try_map_range(nsamples, |i| eval(i as f64 * step))?;
    let samples: Vec<(f64, f64)> = values
        .iter()
        .enumerate()
        .map(|(i, &v)| (i as f64 * step, v))
        .collect();
    let (best_i, _) = values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .expect("at least 8 samples");

    // C_k(w) = C_k(−w), so the bracket may wrap past 0.
    let (mut lo, mut hi) = ((best_i as f64 - 1.0) * step, (best_i as f64 + 1.0) * step);
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = eval(x1)?;
    let mut f2 = eval(x2)?;
    while hi - lo > GOLDEN_TOL {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = eval(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = eval(x2)?;
        }
    }
    let (mut angle, mut value) = if f1 <= f2 { (x1, f1) } else { (x2, f2) };
    if samples[best_i].1 < value {
        (angle, value) = samples[best_i];
    }
    let angle = angle.rem_euclid(std::f64::consts::PI);
    Ok(SweepResult {
        angle,
        direction: vec![angle.cos(), angle.sin()],
        value,
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn interval() -> Polytope {
        Polytope::interval(-1.0, 1.0).unwrap()
    }

    fn square() -> Polytope {
        Polytope::from_vertices(&[
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![1.0, 1.0],
            vec![0.0, 1.0],
        ])
        .unwrap()
    }

    #[test]
    fn interval_monomial_pencil_k1() {
        let p = assemble_bound_pencil(&interval(), &[1.0], 1, TrialBasis::Monomial).unwrap();
        let want_a = [[0.0, 0.0], [0.0, 2.0]];
        let want_m = [[2.0, 0.0], [0.0, 2.0 / 3.0]];
        for i in 0..2 {
            for j in 0..2 {
                assert!((p.a.get(i, j) - want_a[i][j]).abs() < 1e-15);
                assert!((p.m.get(i, j) - want_m[i][j]).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn constants_have_zero_numerator() {
        let (a, m) = assemble_bound_matrices(&interval(), &[1.0], 0).unwrap();
        assert_eq!(a.order(), 1);
        assert_eq!(a.get(0, 0), 0.0);
        assert!((m.get(0, 0) - 2.0).abs() < 1e-15);
        assert!(compute_ck(&interval(), 0, &[1.0]).is_err());
    }

    #[test]
    fn interval_closed_forms() {
        assert!((compute_ck(&interval(), 1, &[1.0]).unwrap().value - 3.0).abs() < 1e-12);
        assert!((compute_ck(&interval(), 2, &[1.0]).unwrap().value - 7.5).abs() < 1e-12);
        let unit = Polytope::interval(0.0, 1.0).unwrap();
        assert!((compute_ck(&unit, 1, &[1.0]).unwrap().value - 6.0).abs() < 1e-12);
    }

    #[test]
    fn square_closed_form() {
        let r = compute_ck(&square(), 1, &[1.0, 0.0]).unwrap();
        assert!((r.value - 8.0).abs() < 1e-12);
        assert!(!r.formal);
    }

    #[test]
    fn maximizer_attains_the_bound() {
        let r = compute_ck(&interval(), 2, &[1.0]).unwrap();
        let phi = &r.maximizer;
        let d = phi.derivative();
        let rho = (&d * &d).double_antiderivative_centered(0.0);
        let num = 2.0 * (rho.eval(-1.0) + rho.eval(1.0));
        let den = (phi * phi).integrate(-1.0, 1.0).unwrap();
        assert!((den - 1.0).abs() < 1e-12);
        assert!((num / den - 7.5).abs() < 1e-10);
        // a = −c/3: the maximizer is even with ratio of constant to quadratic −1/3.
        let c = phi.coeffs();
        assert!(c[1].abs() < 1e-12);
        assert!((c[0] / c[2] + 1.0 / 3.0).abs() < 1e-10);
    }

    #[test]
    fn degenerate_direction_rejected() {
        assert!(matches!(
            compute_ck(&square(), 1, &[0.0, 0.0]),
            Err(Error::DegenerateDirection { .. })
        ));
        assert!(matches!(
            compute_ck(&square(), 1, &[1.0]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn non_delzant_is_flagged_formal() {
        let tri =
            Polytope::from_vertices(&[vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 2.0]]).unwrap();
        assert!(compute_ck(&tri, 1, &[1.0, 0.0]).unwrap().formal);
    }

    #[test]
    fn sweep_on_square_and_rectangle() {
        let sq = direction_sweep(&square(), 1, 16).unwrap();
        assert!(sq.value <= 8.0 + 1e-12);
        let rect = Polytope::from_vertices(&[
            vec![0.0, 0.0],
            vec![2.0, 0.0],
            vec![2.0, 1.0],
            vec![0.0, 1.0],
        ])
        .unwrap();
        let long_axis = compute_ck(&rect, 1, &[1.0, 0.0]).unwrap().value;
        let short_axis = compute_ck(&rect, 1, &[0.0, 1.0]).unwrap().value;
        assert!((long_axis - 5.0).abs() < 1e-12);
        assert!((short_axis - 7.0).abs() < 1e-12);
        let sweep = direction_sweep(&rect, 1, 16).unwrap();
        assert!(sweep.value <= long_axis.min(short_axis) + 1e-12);
    }
}
