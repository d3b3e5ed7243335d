//! Gauss–Legendre rules and point-doubling escalation for smooth,
//! non-polynomial integrands.

use crate::{Error, Result};

/// Nodes and weights of an `n`-point Gauss–Legendre rule on `[-1, 1]`,
/// nodes ascending.
pub fn gauss_legendre(npts: usize) -> (Vec<f64>, Vec<f64>) {
    let rule = GaussLegendre::new(npts);
    (rule.nodes, rule.weights)
}

#[derive(Clone, Debug)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Newton iteration on the three-term recurrence from the Chebyshev-like
    /// initial guesses; `npts = 0` is treated as 1.
    pub fn new(npts: usize) -> Self {
        let n = npts.max(1);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_and_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 1e-16 * x.abs().max(1.0) {
                    break;
                }
            }
            let (_, d) = legendre_and_derivative(n, x);
            if d.is_finite() && d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            // i-th largest node goes to the top, its mirror to the bottom.
            nodes[n - 1 - i] = x;
            nodes[i] = -x;
            weights[n - 1 - i] = w;
            weights[i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        GaussLegendre { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Nodes and weights mapped to `[a, b]`.
    pub fn mapped(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(&x, &w)| (mid + half * x, half * w))
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, a: f64, b: f64, f: F) -> f64 {
        self.mapped(a, b).map(|(x, w)| w * f(x)).sum()
    }
}

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Point-doubling schedule: start at `start` points, double until two successive
/// estimates agree to `rel_tol` (relative to the integral of `|f|`), fail above `cap`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Escalation {
    pub rel_tol: f64,
    pub start: usize,
    pub cap: usize,
}

impl Default for Escalation {
    fn default() -> Self {
        Escalation {
            rel_tol: 1e-12,
            start: 8,
            cap: 2048,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadEstimate {
    pub value: f64,
    /// Points of the rule that produced `value`.
    pub points: usize,
    /// Difference from the previous (half-size) rule.
    pub change: f64,
}

impl Escalation {
    pub fn with_tol(rel_tol: f64) -> Self {
        Escalation {
            rel_tol,
            ..Default::default()
        }
    }

    /// Escalating integral of a vector-valued integrand; `f(x, out)` adds nothing,
    /// it overwrites `out` with the integrand components at `x`.
    ///
    /// Returns the component integrals plus the final point count.
    pub fn integrate_vec<F>(&self, a: f64, b: f64, dim: usize, f: F) -> Result<(Vec<f64>, usize)>
    where
        F: Fn(f64, &mut [f64]),
    {
        let mut buf = vec![0.0; dim];
        let rule_sum = |n: usize, buf: &mut [f64]| {
            let rule = GaussLegendre::new(n);
            let mut acc = vec![0.0; dim];
            let mut mag = vec![0.0; dim];
            for (x, w) in rule.mapped(a, b) {
                f(x, buf);
                for j in 0..dim {
                    acc[j] += w * buf[j];
                    mag[j] += w * buf[j].abs();
                }
            }
            (acc, mag)
        };
        let mut n = self.start.max(1);
        let (mut prev, _) = rule_sum(n, &mut buf);
        while n < self.cap {
            n = (2 * n).min(self.cap);
            let (cur, mag) = rule_sum(n, &mut buf);
            let converged = cur
                .iter()
                .zip(&prev)
                .zip(&mag)
                .all(|((c, p), m)| (c - p).abs() <= self.rel_tol * m.max(f64::MIN_POSITIVE));
            if converged {
                return Ok((cur, n));
            }
            prev = cur;
        }
        Err(Error::QuadratureCap {
            tol: self.rel_tol,
            cap: self.cap,
        })
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, a: f64, b: f64, f: F) -> Result<QuadEstimate> {
        let mut n = self.start.max(1);
        let mut prev = GaussLegendre::new(n).integrate(a, b, &f);
        while n < self.cap {
            n = (2 * n).min(self.cap);
            let rule = GaussLegendre::new(n);
            let (value, mag) = rule
                .mapped(a, b)
                .map(|(x, w)| {
                    let y = f(x);
                    (w * y, w * y.abs())
                })
                .fold((0.0, 0.0), |(s, m), (y, ya)| (s + y, m + ya));
            let change = (value - prev).abs();
            if change <= self.rel_tol * mag.max(f64::MIN_POSITIVE) {
                return Ok(QuadEstimate {
                    value,
                    points: n,
                    change,
                });
            }
            prev = value;
        }
        Err(Error::QuadratureCap {
            tol: self.rel_tol,
            cap: self.cap,
        })
    }
}
