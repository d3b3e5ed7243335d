//! Profiles `Φ(s)` with `Φⁿ(0) = Φⁿ(1) = 0` and `(Φⁿ)'(0) = -(Φⁿ)'(1) = n`.

use crate::numerics::gauss_legendre;
use crate::{Error, Polynomial, Result};

/// Curvature is sampled on `[POLE_EPS, 1 - POLE_EPS]`.
pub const POLE_EPS: f64 = 1e-6;

const ENDPOINT_GUARD: f64 = 1e-9;
const Q_END_TOL: f64 = 1e-12;
const Q_SAMPLES: usize = 10_000;
const GRADIENT_SLACK: f64 = 1e-8;
const COMPARISON_SLACK: f64 = 1e-6;
const ANGLE_RULE_POINTS: usize = 48;

#[derive(Clone, Debug, PartialEq)]
enum Shape {
    /// Round metric: `ρ(t) = c sin(t/c)`.
    Round { c: f64, rule: (Vec<f64>, Vec<f64>) },
    /// `Φⁿ = g`, `g = n s (1 - s) q(s)`.
    Polynomial {
        q: Polynomial,
        g: Polynomial,
        dg: Polynomial,
        ddg: Polynomial,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Profile {
    n: usize,
    shape: Shape,
}

/// `∫_0^θ sin^m` on `[-1, 1]` Gauss nodes mapped to `[0, θ]`.
fn sine_power_partial(m: usize, theta: f64, rule: &(Vec<f64>, Vec<f64>)) -> f64 {
    let half = 0.5 * theta;
    let sum: f64 = rule
        .0
        .iter()
        .zip(&rule.1)
        .map(|(x, w)| w * (half * (1.0 + x)).sin().powi(m as i32))
        .sum();
    half * sum
}

/// `∫_0^θ sin^m` by the reduction formula.
fn sine_power_integral(m: usize, theta: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    let mut lower = theta;
    let mut upper = 1.0 - c;
    if m == 0 {
        return lower;
    }
    for j in 2..=m {
        let jf = j as f64;
        let next = -s.powi(j as i32 - 1) * c / jf + (jf - 1.0) / jf * lower;
        lower = upper;
        upper = next;
    }
    upper
}

impl Profile {
    /// Round sphere of the radius fixed by the normalization.
    pub fn round(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidProfile(format!("dimension {n} < 2")));
        }
        let total = sine_power_integral(n - 1, std::f64::consts::PI);
        let rule = gauss_legendre(ANGLE_RULE_POINTS);
        Ok(Profile {
            n,
            shape: Shape::Round {
                c: total.powf(-1.0 / n as f64),
                rule,
            },
        })
    }

    /// `Φⁿ = n s (1 - s) q(s)`; `q` must equal 1 at both ends and stay positive.
    pub fn from_q(n: usize, q: Polynomial) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidProfile(format!("dimension {n} < 2")));
        }
        for end in [0.0, 1.0] {
            let v = q.eval(end);
            if (v - 1.0).abs() > Q_END_TOL {
                return Err(Error::InvalidProfile(format!("q({end}) = {v}, expected 1")));
            }
        }
        for i in 0..=Q_SAMPLES {
            let s = i as f64 / Q_SAMPLES as f64;
            if !(q.eval(s) > 0.0) {
                return Err(Error::InvalidProfile(format!("q({s}) is not positive")));
            }
        }
        let nf = n as f64;
        let base = Polynomial::new(vec![0.0, nf, -nf]);
        let g = &base * &q;
        let dg = g.derivative();
        let ddg = dg.derivative();
        Ok(Profile {
            n,
            shape: Shape::Polynomial { q, g, dg, ddg },
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_round(&self) -> bool {
        matches!(self.shape, Shape::Round { .. })
    }

    /// The polynomial `q`, if the profile is not a preset.
    pub fn q(&self) -> Option<&Polynomial> {
        match &self.shape {
            Shape::Polynomial { q, .. } => Some(q),
            Shape::Round { .. } => None,
        }
    }

    /// `Φ(s) = Φ(1 - s)`.
    pub fn is_mirror_symmetric(&self) -> bool {
        match &self.shape {
            Shape::Round { .. } => true,
            Shape::Polynomial { q, .. } => {
                let mirrored = q.compose_affine(-1.0, 1.0);
                let diff = q - &mirrored;
                let scale = q.coeffs().iter().fold(1.0_f64, |m, c| m.max(c.abs()));
                diff.coeffs().iter().all(|c| c.abs() <= 1e-13 * scale)
            }
        }
    }

    fn check_closed(s: f64) -> Result<()> {
        if !(0.0..=1.0).contains(&s) {
            return Err(Error::input(format!("s = {s} outside [0, 1]")));
        }
        Ok(())
    }

    /// Angle `θ ∈ [0, π]` of the round profile with `cⁿ ∫_0^θ sin^{n-1} = s`.
    fn round_angle(&self, c: f64, rule: &(Vec<f64>, Vec<f64>), s: f64) -> f64 {
        if s > 0.5 {
            return std::f64::consts::PI - self.round_angle(c, rule, 1.0 - s);
        }
        let scale = c.powi(self.n as i32);
        let (mut lo, mut hi) = (0.0, std::f64::consts::FRAC_PI_2);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if scale * sine_power_partial(self.n - 1, mid, rule) < s {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    pub fn phi_pow_n(&self, s: f64) -> Result<f64> {
        Self::check_closed(s)?;
        Ok(match &self.shape {
            Shape::Round { .. } => self.phi(s)?.powi(self.n as i32),
            Shape::Polynomial { g, .. } => g.eval(s).max(0.0),
        })
    }

    pub fn phi(&self, s: f64) -> Result<f64> {
        Self::check_closed(s)?;
        Ok(match &self.shape {
            Shape::Round { c, rule } => {
                if s == 0.0 || s == 1.0 {
                    0.0
                } else {
                    c * self.round_angle(*c, rule, s).sin()
                }
            }
            Shape::Polynomial { g, .. } => g.eval(s).max(0.0).powf(1.0 / self.n as f64),
        })
    }

    /// `Φ^{2n-2}`, the coefficient of the invariant Laplacian.
    pub fn sl_coefficient(&self, s: f64) -> Result<f64> {
        Ok(self.phi(s)?.powi(2 * self.n as i32 - 2))
    }

    /// `dρ/dt = (Φⁿ)'/n`, including the end values `±1`.
    pub fn rho_dot(&self, s: f64) -> Result<f64> {
        Self::check_closed(s)?;
        Ok(match &self.shape {
            Shape::Round { c, rule } => self.round_angle(*c, rule, s).cos(),
            Shape::Polynomial { dg, .. } => dg.eval(s) / self.n as f64,
        })
    }

    /// `d²ρ/dt² = (Φⁿ)''/n · Φ^{n-1}`.
    pub fn rho_ddot(&self, s: f64) -> Result<f64> {
        Self::check_closed(s)?;
        Ok(match &self.shape {
            Shape::Round { c, rule } => -self.round_angle(*c, rule, s).sin() / c,
            Shape::Polynomial { ddg, .. } => {
                ddg.eval(s) / self.n as f64 * self.phi(s)?.powi(self.n as i32 - 1)
            }
        })
    }

    /// `-2(n-1) ρ̈/ρ + (n-1)(n-2)(1 - ρ̇²)/ρ²`, away from the poles.
    pub fn scalar_curvature(&self, s: f64) -> Result<f64> {
        if !(ENDPOINT_GUARD..=1.0 - ENDPOINT_GUARD).contains(&s) {
            return Err(Error::input(format!("s = {s} too close to a pole")));
        }
        let nf = self.n as f64;
        let rho = self.phi(s)?;
        let rd = self.rho_dot(s)?;
        let rdd = self.rho_ddot(s)?;
        Ok(-2.0 * (nf - 1.0) * rdd / rho + (nf - 1.0) * (nf - 2.0) * (1.0 - rd * rd) / (rho * rho))
    }

    /// Smallest sampled curvature on `grid` points of `[POLE_EPS, 1 - POLE_EPS]`.
    pub fn min_scalar_curvature(&self, grid: usize) -> Result<f64> {
        let grid = grid.max(2);
        let mut lo = f64::INFINITY;
        for i in 0..grid {
            let s = POLE_EPS + (1.0 - 2.0 * POLE_EPS) * i as f64 / (grid - 1) as f64;
            lo = lo.min(self.scalar_curvature(s)?);
        }
        Ok(lo)
    }
}

/// Sampled curvature and slope of a profile.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GradientReport {
    pub min_scal: f64,
    pub max_abs_rho_dot: f64,
    /// `max |ρ̇| > 1` only together with negative curvature.
    pub consistent: bool,
}

pub fn check_slope(profile: &Profile, grid: usize) -> Result<GradientReport> {
    if grid < 100 {
        return Err(Error::input(format!("grid {grid} < 100")));
    }
    let min_scal = profile.min_scalar_curvature(grid)?;
    let mut max_abs_rho_dot: f64 = 0.0;
    for i in 0..grid {
        let s = i as f64 / (grid - 1) as f64;
        max_abs_rho_dot = max_abs_rho_dot.max(profile.rho_dot(s)?.abs());
    }
    let consistent = max_abs_rho_dot <= 1.0 + GRADIENT_SLACK || min_scal < 0.0;
    Ok(GradientReport {
        min_scal,
        max_abs_rho_dot,
        consistent,
    })
}

/// Largest excess of `Φ` over `Φ_max` on a grid.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComparisonReport {
    pub max_excess: f64,
    pub within: bool,
}

pub fn check_comparison(profile: &Profile, grid: usize) -> Result<ComparisonReport> {
    if grid < 2 {
        return Err(Error::input("grid must have at least two points"));
    }
    let mut max_excess = f64::NEG_INFINITY;
    for i in 0..grid {
        let s = i as f64 / (grid - 1) as f64;
        max_excess = max_excess.max(profile.phi(s)? - super::bound::phi_max(profile.n(), s)?);
    }
    Ok(ComparisonReport {
        max_excess,
        within: max_excess <= COMPARISON_SLACK,
    })
}
