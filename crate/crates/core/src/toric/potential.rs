//! Symplectic potentials `u = ½ Σ ℓ_i log ℓ_i + f` with `f` a polynomial
//! perturbation, their Hessians, and the Abreu scalar curvature
//! `Scal = -Σ ∂²u^{ij}/∂x_i∂x_j`.

use super::polytope::Polytope;
use crate::{Error, Result};

const INTERIOR_EPS: f64 = 1e-12;

/// Sparse polynomial in up to two variables: terms `c x^i y^j`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Poly2 {
    terms: Vec<(usize, usize, f64)>,
}

impl Poly2 {
    pub fn new() -> Self {
        Poly2::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, usize, f64)>) -> Self {
        let mut p = Poly2::new();
        for (i, j, c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn monomial(i: usize, j: usize) -> Self {
        Poly2::from_terms([(i, j, 1.0)])
    }

    pub fn univariate(p: &crate::Polynomial) -> Self {
        Poly2::from_terms(p.coeffs().iter().enumerate().map(|(i, &c)| (i, 0, c)))
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: f64) {
        if c == 0.0 {
            return;
        }
        match self.terms.iter_mut().find(|(a, b, _)| *a == i && *b == j) {
            Some(t) => t.2 += c,
            None => self.terms.push((i, j, c)),
        }
    }

    pub fn terms(&self) -> &[(usize, usize, f64)] {
        &self.terms
    }

    pub fn uses_second_variable(&self) -> bool {
        self.terms.iter().any(|&(_, j, c)| j > 0 && c != 0.0)
    }

    pub fn total_degree(&self) -> usize {
        self.terms.iter().map(|&(i, j, _)| i + j).max().unwrap_or(0)
    }

    fn pt(x: &[f64]) -> (f64, f64) {
        (x[0], x.get(1).copied().unwrap_or(0.0))
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        let (a, b) = Self::pt(x);
        self.terms
            .iter()
            .map(|&(i, j, c)| c * a.powi(i as i32) * b.powi(j as i32))
            .sum()
    }

    /// Hessian in the first `dim` variables.
    pub fn hessian(&self, x: &[f64], dim: usize) -> Sym2 {
        let (a, b) = Self::pt(x);
        let pw = |v: f64, k: usize, d: usize| -> f64 {
            if k < d {
                0.0
            } else {
                let falling: usize = (k + 1 - d..=k).product();
                falling as f64 * v.powi((k - d) as i32)
            }
        };
        let mut m = [[0.0; 2]; 2];
        for &(i, j, c) in &self.terms {
            m[0][0] += c * pw(a, i, 2) * pw(b, j, 0);
            if dim == 2 {
                m[0][1] += c * pw(a, i, 1) * pw(b, j, 1);
                m[1][1] += c * pw(a, i, 0) * pw(b, j, 2);
            }
        }
        m[1][0] = m[0][1];
        Sym2 { dim, m }
    }
}

/// Symmetric matrix of order 1 or 2.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sym2 {
    pub dim: usize,
    pub m: [[f64; 2]; 2],
}

impl Sym2 {
    pub fn det(&self) -> f64 {
        match self.dim {
            1 => self.m[0][0],
            _ => self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0],
        }
    }

    pub fn is_positive_definite(&self) -> bool {
        self.m[0][0] > 0.0 && self.det() > 0.0 && self.m[0][0].is_finite() && self.det().is_finite()
    }

    pub fn inverse(&self) -> Sym2 {
        let d = self.det();
        match self.dim {
            1 => Sym2 {
                dim: 1,
                m: [[1.0 / d, 0.0], [0.0, 0.0]],
            },
            _ => Sym2 {
                dim: 2,
                m: [
                    [self.m[1][1] / d, -self.m[0][1] / d],
                    [-self.m[1][0] / d, self.m[0][0] / d],
                ],
            },
        }
    }

    /// `Σ_ij self_ij other_ij`.
    pub fn contract(&self, other: &Sym2) -> f64 {
        (0..self.dim)
            .flat_map(|i| (0..self.dim).map(move |j| (i, j)))
            .map(|(i, j)| self.m[i][j] * other.m[i][j])
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymplecticPotential {
    polytope: Polytope,
    perturbation: Poly2,
}

impl SymplecticPotential {
    /// The canonical potential `½ Σ ℓ_i log ℓ_i`.
    pub fn guillemin(polytope: Polytope) -> Self {
        SymplecticPotential {
            polytope,
            perturbation: Poly2::new(),
        }
    }

    /// Guillemin potential plus `perturbation`, validated for strict convexity on
    /// a deterministic interior sample (1000 points in dimension 1, the interior
    /// points of a 32 × 32 lattice over the bounding box in dimension 2).
    pub fn with_perturbation(polytope: Polytope, perturbation: Poly2) -> Result<Self> {
        if polytope.dim() == 1 && perturbation.uses_second_variable() {
            return Err(Error::InvalidPotential(
                "perturbation uses y on an interval".into(),
            ));
        }
        let u = SymplecticPotential {
            polytope,
            perturbation,
        };
        for x in u.validation_sample() {
            let h = u.hessian(&x)?;
            if !h.is_positive_definite() {
                return Err(Error::InvalidPotential(format!(
                    "Hessian not positive definite at {x:?}"
                )));
            }
        }
        Ok(u)
    }

    pub fn polytope(&self) -> &Polytope {
        &self.polytope
    }

    pub fn perturbation(&self) -> &Poly2 {
        &self.perturbation
    }

    fn validation_sample(&self) -> Vec<Vec<f64>> {
        let p = &self.polytope;
        if p.dim() == 1 {
            let (a, b) = (p.vertices()[0][0], p.vertices()[1][0]);
            return (0..1000)
                .map(|i| vec![a + (b - a) * (i as f64 + 0.5) / 1000.0])
                .collect();
        }
        interior_lattice(p, 32)
    }

    fn check_interior(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.polytope.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.polytope.dim(),
                found: x.len(),
            });
        }
        let margin = self.polytope.margin(x);
        if !(margin > INTERIOR_EPS) {
            return Err(Error::OutsideInterior { margin });
        }
        Ok(())
    }

    pub fn value(&self, x: &[f64]) -> Result<f64> {
        self.check_interior(x)?;
        let log_part: f64 = self
            .polytope
            .facets()
            .iter()
            .map(|f| f.eval(x))
            .map(|l| l * l.ln())
            .sum();
        Ok(0.5 * log_part + self.perturbation.eval(x))
    }

    /// Analytic Hessian `u_ij = ½ Σ ν_i ν_j / ℓ + f_ij`.
    pub fn hessian(&self, x: &[f64]) -> Result<Sym2> {
        self.check_interior(x)?;
        let dim = self.polytope.dim();
        let mut h = self.perturbation.hessian(x, dim);
        for f in self.polytope.facets() {
            let inv = 0.5 / f.eval(x);
            for i in 0..dim {
                for j in 0..dim {
                    h.m[i][j] += inv * (f.normal[i] * f.normal[j]) as f64;
                }
            }
        }
        Ok(h)
    }

    /// `u^{ij}`, the inverse Hessian, which is the torus-fibre part of the metric.
    pub fn inverse_hessian(&self, x: &[f64]) -> Result<Sym2> {
        let h = self.hessian(x)?;
        if !h.is_positive_definite() {
            return Err(Error::InvalidPotential(format!(
                "Hessian not positive definite at {x:?}"
            )));
        }
        Ok(h.inverse())
    }

    /// Default curvature step: `1e-3` of the polytope's inradius estimate, shrunk
    /// so the stencil stays at least `2h` inside.
    pub fn default_step(&self, x: &[f64]) -> f64 {
        let base = 1e-3 * self.polytope.inradius_estimate();
        base.min(0.5 * self.polytope.distance_to_boundary(x))
    }

    /// `-Σ ∂²u^{ij}/∂x_i∂x_j` by central differences at steps `h` and `h/2`,
    /// Richardson-extrapolated.
    pub fn scalar_curvature(&self, x: &[f64], h: f64) -> Result<f64> {
        self.check_interior(x)?;
        let dist = self.polytope.distance_to_boundary(x);
        if !(h > 0.0) || dist < 2.0 * h {
            return Err(Error::OutsideInterior {
                margin: dist - 2.0 * h,
            });
        }
        let coarse = self.curvature_stencil(x, h)?;
        let fine = self.curvature_stencil(x, 0.5 * h)?;
        Ok((4.0 * fine - coarse) / 3.0)
    }

    pub fn scalar_curvature_auto(&self, x: &[f64]) -> Result<f64> {
        self.scalar_curvature(x, self.default_step(x))
    }

    fn curvature_stencil(&self, x: &[f64], h: f64) -> Result<f64> {
        let at = |dx: f64, dy: f64| -> Result<Sym2> {
            let mut y = x.to_vec();
            y[0] += dx;
            if y.len() > 1 {
                y[1] += dy;
            }
            self.inverse_hessian(&y)
        };
        let c = at(0.0, 0.0)?;
        let h2 = h * h;
        let xp = at(h, 0.0)?;
        let xm = at(-h, 0.0)?;
        let mut div2 = (xp.m[0][0] - 2.0 * c.m[0][0] + xm.m[0][0]) / h2;
        if self.polytope.dim() == 2 {
            let yp = at(0.0, h)?;
            let ym = at(0.0, -h)?;
            div2 += (yp.m[1][1] - 2.0 * c.m[1][1] + ym.m[1][1]) / h2;
            let pp = at(h, h)?;
            let pm = at(h, -h)?;
            let mp = at(-h, h)?;
            let mm = at(-h, -h)?;
            let mixed = (pp.m[0][1] - pm.m[0][1] - mp.m[0][1] + mm.m[0][1]) / (4.0 * h2);
            div2 += 2.0 * mixed;
        }
        Ok(-div2)
    }

    /// Minimum sampled scalar curvature: 1000 interior points in dimension 1, the
    /// 32 × 32 interior lattice in dimension 2.
    pub fn min_scalar_curvature(&self) -> Result<f64> {
        let mut lo = f64::INFINITY;
        for x in self.validation_sample() {
            lo = lo.min(self.scalar_curvature_auto(&x)?);
        }
        Ok(lo)
    }
}

/// Interior points of an `n × n` lattice over the bounding box.
pub(crate) fn interior_lattice(p: &Polytope, n: usize) -> Vec<Vec<f64>> {
    let (x0, x1) = p.support(&[1.0, 0.0]);
    let (y0, y1) = p.support(&[0.0, 1.0]);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let x = vec![
                x0 + (x1 - x0) * (i as f64 + 0.5) / n as f64,
                y0 + (y1 - y0) * (j as f64 + 0.5) / n as f64,
            ];
            if p.distance_to_boundary(&x) > 1e-9 {
                out.push(x);
            }
        }
    }
    out
}
