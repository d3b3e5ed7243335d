//! Convex lattice polytopes in dimension 1 and 2.

use crate::numerics::{Escalation, GaussLegendre};
use crate::{Error, Result};

/// Largest denominator accepted when recovering an integer edge normal.
const MAX_DENOMINATOR: i64 = 1_000_000;
const ON_FACET_TOL: f64 = 1e-12;

/// Affine facet function `ℓ(x) = ⟨normal, x⟩ + offset`, positive on the interior.
#[derive(Clone, Debug, PartialEq)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: f64,
}

impl Facet {
    pub fn eval(&self, x: &[f64]) -> f64 {
        self.normal
            .iter()
            .zip(x)
            .map(|(&n, &xi)| n as f64 * xi)
            .sum::<f64>()
            + self.offset
    }

    pub fn normal_norm(&self) -> f64 {
        self.normal
            .iter()
            .map(|&n| (n * n) as f64)
            .sum::<f64>()
            .sqrt()
    }

    /// Euclidean distance from `x` to the facet hyperplane (signed, positive inside).
    pub fn distance(&self, x: &[f64]) -> f64 {
        self.eval(x) / self.normal_norm()
    }
}

/// Moment polytope. In dimension 2, facet `i` is the edge from vertex `i` to
/// vertex `i + 1` (vertices counterclockwise); in dimension 1 the facets are the
/// left and right endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct Polytope {
    dim: usize,
    facets: Vec<Facet>,
    vertices: Vec<Vec<f64>>,
    delzant: bool,
}

impl Polytope {
    /// Interval `[a, b]` with facets `x - a` (normal +1) and `b - x` (normal -1).
    pub fn interval(a: f64, b: f64) -> Result<Self> {
        Self::from_vertices(&[vec![a], vec![b]])
    }

    pub fn from_vertices(vertices: &[Vec<f64>]) -> Result<Self> {
        let dim = vertices.first().map(Vec::len).unwrap_or(0);
        if let Some(v) = vertices.iter().find(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
        if vertices.iter().flatten().any(|c| !c.is_finite()) {
            return Err(Error::input("non-finite vertex coordinate"));
        }
        match dim {
            1 => Self::build_interval(vertices),
            2 => Self::build_polygon(vertices),
            d => Err(Error::input(format!(
                "polytope dimension {d} unsupported (expected 1 or 2)"
            ))),
        }
    }

    fn build_interval(vertices: &[Vec<f64>]) -> Result<Self> {
        if vertices.len() != 2 {
            return Err(Error::input(format!(
                "an interval needs 2 endpoints, got {}",
                vertices.len()
            )));
        }
        let (a, b) = (
            vertices[0][0].min(vertices[1][0]),
            vertices[0][0].max(vertices[1][0]),
        );
        if a == b {
            return Err(Error::input("repeated endpoint"));
        }
        Ok(Polytope {
            dim: 1,
            facets: vec![
                Facet {
                    normal: vec![1],
                    offset: -a,
                },
                Facet {
                    normal: vec![-1],
                    offset: b,
                },
            ],
            vertices: vec![vec![a], vec![b]],
            delzant: true,
        })
    }

    fn build_polygon(vertices: &[Vec<f64>]) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::input(format!(
                "a polygon needs at least 3 vertices, got {n}"
            )));
        }
        let edge = |i: usize| {
            let p = &vertices[i];
            let q = &vertices[(i + 1) % n];
            [q[0] - p[0], q[1] - p[1]]
        };
        let scale = vertices
            .iter()
            .flatten()
            .fold(1.0f64, |m, c| m.max(c.abs()));
        for i in 0..n {
            let e = edge(i);
            if e[0].hypot(e[1]) <= 1e-12 * scale {
                return Err(Error::input(format!(
                    "repeated vertex at index {}",
                    (i + 1) % n
                )));
            }
        }
        let mut turning = 0.0;
        for i in 0..n {
            let (e, f) = (edge(i), edge((i + 1) % n));
            let cross = e[0] * f[1] - e[1] * f[0];
            if cross <= 1e-12 * scale * scale {
                return Err(Error::input(format!(
                    "vertices are not in strictly convex counterclockwise position at index {}",
                    (i + 1) % n
                )));
            }
            turning += cross.atan2(e[0] * f[0] + e[1] * f[1]);
        }
        if (turning - 2.0 * std::f64::consts::PI).abs() > 1e-6 {
            return Err(Error::input("vertex sequence winds more than once"));
        }

        let mut facets = Vec::with_capacity(n);
        for i in 0..n {
            let e = edge(i);
            let normal = primitive_integer_vector(-e[1], e[0]).ok_or_else(|| {
                Error::NotLattice(format!(
                    "edge {i} direction ({}, {}) has no integer normal with denominator <= {MAX_DENOMINATOR}",
                    e[0], e[1]
                ))
            })?;
            let p = &vertices[i];
            let offset = -(normal[0] as f64 * p[0] + normal[1] as f64 * p[1]);
            facets.push(Facet {
                normal: normal.to_vec(),
                offset,
            });
        }

        for (vi, v) in vertices.iter().enumerate() {
            let tol =
                ON_FACET_TOL * facets.iter().map(|f| f.normal_norm()).fold(0.0, f64::max) * scale;
            let on = facets.iter().filter(|f| f.eval(v).abs() <= tol).count();
            if on != 2 {
                return Err(Error::NotLattice(format!(
                    "vertex {vi} lies on {on} facets after normal recovery (expected 2)"
                )));
            }
        }

        let delzant = (0..n).all(|i| {
            let a = &facets[(i + n - 1) % n].normal;
            let b = &facets[i].normal;
            (a[0] * b[1] - a[1] * b[0]).abs() == 1
        });

        Ok(Polytope {
            dim: 2,
            facets,
            vertices: vertices.to_vec(),
            delzant,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn vertices(&self) -> &[Vec<f64>] {
        &self.vertices
    }

    /// Incident primitive normals form a lattice basis at every vertex.
    /// Always true in dimension 1.
    pub fn is_delzant(&self) -> bool {
        self.delzant
    }

    /// Smallest facet value `min_i ℓ_i(x)`.
    pub fn margin(&self, x: &[f64]) -> f64 {
        self.facets
            .iter()
            .map(|f| f.eval(x))
            .fold(f64::INFINITY, f64::min)
    }

    /// Euclidean distance from `x` to the nearest facet hyperplane.
    pub fn distance_to_boundary(&self, x: &[f64]) -> f64 {
        self.facets
            .iter()
            .map(|f| f.distance(x))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn vertex_centroid(&self) -> Vec<f64> {
        let n = self.vertices.len() as f64;
        (0..self.dim)
            .map(|d| self.vertices.iter().map(|v| v[d]).sum::<f64>() / n)
            .collect()
    }

    /// Distance from the vertex centroid to the nearest facet; a length scale
    /// that equals the inradius for centrally symmetric polytopes.
    pub fn inradius_estimate(&self) -> f64 {
        self.distance_to_boundary(&self.vertex_centroid())
    }

    /// `(min, max)` of `⟨w, x⟩` over the polytope.
    pub fn support(&self, w: &[f64]) -> (f64, f64) {
        self.vertices
            .iter()
            .map(|v| dot(v, w))
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), t| {
                (lo.min(t), hi.max(t))
            })
    }

    pub fn translated(&self, shift: &[f64]) -> Result<Polytope> {
        let vs: Vec<Vec<f64>> = self
            .vertices
            .iter()
            .map(|v| v.iter().zip(shift).map(|(a, b)| a + b).collect())
            .collect();
        Polytope::from_vertices(&vs)
    }

    pub fn dilated(&self, factor: f64) -> Result<Polytope> {
        if !(factor > 0.0) {
            return Err(Error::input(format!(
                "dilation factor {factor} must be positive"
            )));
        }
        let vs: Vec<Vec<f64>> = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|c| c * factor).collect())
            .collect();
        Polytope::from_vertices(&vs)
    }

    /// Euclidean volume (length in dimension 1, area in dimension 2).
    pub fn volume(&self) -> f64 {
        match self.dim {
            1 => self.vertices[1][0] - self.vertices[0][0],
            _ => {
                let n = self.vertices.len();
                0.5 * (0..n)
                    .map(|i| {
                        let (p, q) = (&self.vertices[i], &self.vertices[(i + 1) % n]);
                        p[0] * q[1] - p[1] * q[0]
                    })
                    .sum::<f64>()
            }
        }
    }

    /// σ-weighted boundary nodes: unit masses at the endpoints in dimension 1,
    /// `npts`-point Gauss rules on each edge scaled by `length / |ν|` in dimension 2.
    pub fn boundary_rule(&self, npts: usize) -> Vec<(Vec<f64>, f64)> {
        if self.dim == 1 {
            return self.vertices.iter().map(|v| (v.clone(), 1.0)).collect();
        }
        let rule = GaussLegendre::new(npts);
        let n = self.vertices.len();
        let mut out = Vec::with_capacity(n * npts);
        for (i, facet) in self.facets.iter().enumerate() {
            let (p, q) = (&self.vertices[i], &self.vertices[(i + 1) % n]);
            let len = (q[0] - p[0]).hypot(q[1] - p[1]);
            let density = len / facet.normal_norm();
            for (s, w) in rule.mapped(0.0, 1.0) {
                out.push((
                    vec![p[0] + s * (q[0] - p[0]), p[1] + s * (q[1] - p[1])],
                    w * density,
                ));
            }
        }
        out
    }

    /// Interior Lebesgue nodes. Dimension 1: `npts`-point Gauss rule. Dimension 2:
    /// fan of triangles from the vertex centroid, each with an `npts × npts`
    /// collapsed Gauss rule (exact for total degree `2 npts - 2`).
    pub fn interior_rule(&self, npts: usize) -> Vec<(Vec<f64>, f64)> {
        let rule = GaussLegendre::new(npts);
        if self.dim == 1 {
            let (a, b) = (self.vertices[0][0], self.vertices[1][0]);
            return rule.mapped(a, b).map(|(x, w)| (vec![x], w)).collect();
        }
        let c = self.vertex_centroid();
        let n = self.vertices.len();
        let mut out = Vec::with_capacity(n * npts * npts);
        for i in 0..n {
            let (p, q) = (&self.vertices[i], &self.vertices[(i + 1) % n]);
            let e1 = [p[0] - c[0], p[1] - c[1]];
            let e2 = [q[0] - c[0], q[1] - c[1]];
            let jac = (e1[0] * e2[1] - e1[1] * e2[0]).abs();
            for (xi, wxi) in rule.mapped(0.0, 1.0) {
                for (eta, weta) in rule.mapped(0.0, 1.0) {
                    let a = xi * (1.0 - eta);
                    let b = xi * eta;
                    out.push((
                        vec![c[0] + a * e1[0] + b * e2[0], c[1] + a * e1[1] + b * e2[1]],
                        wxi * weta * xi * jac,
                    ));
                }
            }
        }
        out
    }
}

/// `∫_{∂P} F dσ`. The caller doubles for the integration-by-parts boundary term.
pub fn boundary_integrate<F: Fn(&[f64]) -> f64>(polytope: &Polytope, f: F) -> Result<f64> {
    if polytope.dim() == 1 {
        return Ok(polytope.vertices().iter().map(|v| f(v)).sum());
    }
    let esc = Escalation::default();
    let n = polytope.vertices().len();
    let mut total = 0.0;
    for (i, facet) in polytope.facets().iter().enumerate() {
        let (p, q) = (&polytope.vertices()[i], &polytope.vertices()[(i + 1) % n]);
        let len = (q[0] - p[0]).hypot(q[1] - p[1]);
        let est = esc.integrate(0.0, 1.0, |s| {
            f(&[p[0] + s * (q[0] - p[0]), p[1] + s * (q[1] - p[1])])
        })?;
        total += est.value * len / facet.normal_norm();
    }
    Ok(total)
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Primitive integer vector parallel to `(a, b)` with the same orientation, if
/// the slope is rational with denominator at most [`MAX_DENOMINATOR`].
fn primitive_integer_vector(a: f64, b: f64) -> Option<[i64; 2]> {
    let (big, small, swapped) = if a.abs() >= b.abs() {
        (a, b, false)
    } else {
        (b, a, true)
    };
    let (num, den) = rational_approx(small / big)?;
    let sign = big.signum() as i64;
    let (p, q) = (sign * den, sign * num);
    let g = gcd(p, q).max(1);
    let (p, q) = (p / g, q / g);
    Some(if swapped { [q, p] } else { [p, q] })
}

/// Continued-fraction approximation `num / den` of `r ∈ [-1, 1]` within 1e-9.
fn rational_approx(r: f64) -> Option<(i64, i64)> {
    let target = r;
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut x = r;
    for _ in 0..64 {
        let a = x.floor();
        if a.abs() > 1e12 {
            break;
        }
        let a = a as i64;
        let h2 = a.checked_mul(h1)?.checked_add(h0)?;
        let k2 = a.checked_mul(k1)?.checked_add(k0)?;
        if k2 > MAX_DENOMINATOR {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if (target - h1 as f64 / k1 as f64).abs() <= 1e-9 * target.abs().max(1e-3) {
            return Some((h1, k1));
        }
        let frac = x - a as f64;
        if frac.abs() < 1e-15 {
            break;
        }
        x = 1.0 / frac;
    }
    if k1 > 0 && (target - h1 as f64 / k1 as f64).abs() <= 1e-9 * target.abs().max(1e-3) {
        Some((h1, k1))
    } else {
        None
    }
}
