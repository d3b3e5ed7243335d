//! Bessel `J_0`, its derivative, their positive zeros, and the comparison
//! constants `ξ_k` with `½ ξ_k²`.

use twofloat::TwoFloat;

use crate::{Error, Result};

pub const MAX_ARGUMENT: f64 = 50.0;
pub const MAX_INDEX: usize = 20;

const SCAN_STEP: f64 = 0.1;
const ZERO_TOL: f64 = 1e-13;
const MAX_TERMS: usize = 400;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AFConstant {
    pub k: usize,
    pub xi: f64,
    /// `½ ξ²`
    pub bound: f64,
}

fn check_argument(x: f64) -> Result<()> {
    if !(x.abs() <= MAX_ARGUMENT) {
        return Err(Error::input(format!(
            "|x| = {} exceeds {MAX_ARGUMENT}",
            x.abs()
        )));
    }
    Ok(())
}

/// Power series in double-double: `Σ_m c_m (-1)^m (x²/4)^m / (m!)²`, where
/// `c_m = 1` for `J_0` and `c_m = m · 2/x` for `J_0'`.
fn series(x: f64, derivative: bool) -> TwoFloat {
    let q = TwoFloat::from(x) * TwoFloat::from(x) / 4.0;
    let mut term = TwoFloat::from(1.0);
    let mut sum = if derivative {
        TwoFloat::from(0.0)
    } else {
        term
    };
    let mut peak = 1.0_f64;
    for m in 1..MAX_TERMS {
        let mf = m as f64;
        term = -term * q / (mf * mf);
        let contribution = if derivative {
            term * (2.0 * mf / x)
        } else {
            term
        };
        sum += contribution;
        let size = contribution.hi().abs();
        peak = peak.max(size);
        if mf * mf > q.hi() && size <= 1e-33 * peak {
            break;
        }
    }
    sum
}

pub fn bessel_j0(x: f64) -> Result<f64> {
    check_argument(x)?;
    Ok(series(x, false).hi())
}

/// `J_0'(x) = -J_1(x)`.
pub fn bessel_j0_prime(x: f64) -> Result<f64> {
    check_argument(x)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    Ok(series(x, true).hi())
}

/// The `index`-th positive zero (1-based) of `f`, by a sign scan from `SCAN_STEP`
/// then bisection.
fn nth_zero(index: usize, f: impl Fn(f64) -> f64) -> Result<f64> {
    let mut found = 0;
    let mut a = SCAN_STEP;
    let mut fa = f(a);
    while a < MAX_ARGUMENT {
        let b = a + SCAN_STEP;
        let fb = f(b);
        if fa == 0.0 || fa.signum() != fb.signum() {
            found += 1;
            if found == index {
                return Ok(bisect(a, b, fa, &f));
            }
        }
        a = b;
        fa = fb;
    }
    Err(Error::NoConvergence("zero beyond the series range"))
}

fn bisect(mut a: f64, mut b: f64, mut fa: f64, f: &impl Fn(f64) -> f64) -> f64 {
    if fa == 0.0 {
        return a;
    }
    while b - a > ZERO_TOL {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

/// `j`-th positive zero of `J_0`.
pub fn j0_zero(j: usize) -> Result<f64> {
    if j == 0 {
        return Err(Error::input("zeros are counted from 1"));
    }
    nth_zero(j, |x| series(x, false).hi())
}

/// `j`-th positive zero of `J_0'`.
pub fn j0_prime_zero(j: usize) -> Result<f64> {
    if j == 0 {
        return Err(Error::input("zeros are counted from 1"));
    }
    nth_zero(j, |x| series(x, true).hi())
}

/// `ξ_k`: the `(k+1)/2`-th zero of `J_0` for odd `k`, the `k/2`-th zero of
/// `J_0'` for even `k`.
pub fn xi_k(k: usize) -> Result<AFConstant> {
    if !(1..=MAX_INDEX).contains(&k) {
        return Err(Error::input(format!("k = {k} outside 1..={MAX_INDEX}")));
    }
    let xi = if k % 2 == 1 {
        j0_zero(k.div_ceil(2))?
    } else {
        j0_prime_zero(k / 2)?
    };
    Ok(AFConstant {
        k,
        xi,
        bound: 0.5 * xi * xi,
    })
}
