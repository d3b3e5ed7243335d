use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result};

/// Dense polynomial in one real variable; `coeffs[i]` multiplies `x^i`.
///
/// Trailing zero coefficients are trimmed on construction, so the zero
/// polynomial has an empty coefficient vector and degree `-1`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn monomial(power: usize, coeff: f64) -> Self {
        let mut coeffs = vec![0.0; power + 1];
        coeffs[power] = coeff;
        Polynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Index of the last nonzero coefficient, `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| i as f64 * c)
                .collect(),
        )
    }

    /// Antiderivative vanishing at 0.
    pub fn antiderivative(&self) -> Polynomial {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(0.0);
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| c / (i + 1) as f64),
        );
        Polynomial::new(coeffs)
    }

    /// The unique `rho` with `rho'' = self` and `rho(xstar) = rho'(xstar) = 0`.
    ///
    /// When `self` is a square this is convex with minimum 0 at `xstar`.
    pub fn double_antiderivative_centered(&self, xstar: f64) -> Polynomial {
        let first = self.antiderivative();
        let second = first.antiderivative();
        let slope = first.eval(xstar);
        let level = second.eval(xstar);
        // rho(x) = R(x) - R(x*) - R'(x*)(x - x*)
        second - Polynomial::new(vec![level - slope * xstar, slope])
    }

    /// Exact integral over `[a, b]` through the antiderivative.
    pub fn integrate(&self, a: f64, b: f64) -> Result<f64> {
        if a > b {
            return Err(Error::input(format!(
                "integration bounds reversed: {a} > {b}"
            )));
        }
        let anti = self.antiderivative();
        Ok(anti.eval(b) - anti.eval(a))
    }

    pub fn scale(&self, factor: f64) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// `x -> self(scale * x + shift)`.
    pub fn compose_affine(&self, scale: f64, shift: f64) -> Polynomial {
        let inner = Polynomial::new(vec![shift, scale]);
        self.coeffs
            .iter()
            .rev()
            .fold(Polynomial::zero(), |acc, &c| {
                &(&acc * &inner) + &Polynomial::constant(c)
            })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &Polynomial, i: usize| p.coeffs.get(i).copied().unwrap_or(0.0);
        Polynomial::new((0..n).map(|i| get(self, i) + get(rhs, i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(-1.0)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[f64]) -> Polynomial {
        Polynomial::new(c.to_vec())
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[4.0, 7.0]).derivative(), p(&[7.0]));
        assert_eq!(
            Polynomial::monomial(3, 1.0).derivative(),
            p(&[0.0, 0.0, 3.0])
        );
        assert_eq!(p(&[1.0, 2.0, 3.0]).derivative(), p(&[2.0, 6.0]));
        assert_eq!(p(&[5.0]).derivative().degree(), -1);
    }

    #[test]
    fn degree_conventions() {
        assert_eq!(Polynomial::zero().degree(), -1);
        assert_eq!(p(&[1.0, 0.0, 0.0]).degree(), 0);
        assert_eq!(p(&[0.0, 0.0, 2.0]).degree(), 2);
    }

    #[test]
    fn horner_is_exact_on_dyadics() {
        let q = p(&[1.0, -2.0, 0.5, 3.0]);
        let x = 0.375;
        let direct = 1.0 - 2.0 * x + 0.5 * x * x + 3.0 * x * x * x;
        assert_eq!(q.eval(x), direct);
    }

    #[test]
    fn centered_double_antiderivative_examples() {
        let b = 1.5;
        let rho = p(&[b * b]).double_antiderivative_centered(0.0);
        assert_eq!(rho, p(&[0.0, 0.0, b * b / 2.0]));

        // q = (b + 2cx)^2
        let c = -0.7;
        let q = &p(&[b, 2.0 * c]) * &p(&[b, 2.0 * c]);
        let rho = q.double_antiderivative_centered(0.0);
        let expected = [0.0, 0.0, b * b / 2.0, 2.0 * b * c / 3.0, c * c / 3.0];
        for (got, want) in rho.coeffs().iter().zip(expected) {
            assert!((got - want).abs() < 1e-15, "{got} vs {want}");
        }

        assert!(Polynomial::zero()
            .double_antiderivative_centered(0.3)
            .is_zero());
    }

    #[test]
    fn integrate_examples() {
        assert!(
            (Polynomial::monomial(2, 1.0).integrate(-1.0, 1.0).unwrap() - 2.0 / 3.0).abs() < 1e-15
        );
        let shifted = p(&[0.25, -1.0, 1.0]); // (x - 1/2)^2
        assert!((shifted.integrate(0.0, 1.0).unwrap() - 1.0 / 12.0).abs() < 1e-15);
        assert_eq!(
            Polynomial::monomial(3, 1.0).integrate(-1.0, 1.0).unwrap(),
            0.0
        );
        assert!(shifted.integrate(1.0, 0.0).is_err());
    }

    #[test]
    fn compose_affine_matches_evaluation() {
        let q = p(&[1.0, -3.0, 0.5, 2.0]);
        let r = q.compose_affine(2.0, -1.0);
        for &x in &[-1.0, 0.0, 0.3, 2.5] {
            assert!((r.eval(x) - q.eval(2.0 * x - 1.0)).abs() < 1e-12);
        }
    }

    proptest! {
        #[test]
        fn centered_rho_of_square_is_nonnegative(
            coeffs in prop::collection::vec(-3.0f64..3.0, 1..7),
            xstar in -2.0f64..2.0,
        ) {
            let phi = Polynomial::new(coeffs);
            let d = phi.derivative();
            let rho = (&d * &d).double_antiderivative_centered(xstar);
            let magnitude = |q: &Polynomial, x: f64| -> f64 {
                q.coeffs().iter().enumerate().map(|(k, c)| c.abs() * x.abs().powi(k as i32)).sum::<f64>() + 1.0
            };
            let slope = rho.derivative();
            prop_assert!(rho.eval(xstar).abs() < 1e-12 * magnitude(&rho, xstar));
            prop_assert!(slope.eval(xstar).abs() < 1e-12 * magnitude(&slope, xstar));
            for i in 0..=400 {
                let x = xstar - 3.0 + 6.0 * i as f64 / 400.0;
                prop_assert!(rho.eval(x) >= -1e-12 * magnitude(&rho, x));
            }
        }

        #[test]
        fn second_derivative_recovers_input(coeffs in prop::collection::vec(-5.0f64..5.0, 0..8), xstar in -1.0f64..1.0) {
            let q = Polynomial::new(coeffs);
            let back = q.double_antiderivative_centered(xstar).derivative().derivative();
            prop_assert_eq!(back.coeffs().len(), q.coeffs().len());
            for (a, b) in back.coeffs().iter().zip(q.coeffs()) {
                prop_assert!((a - b).abs() <= 1e-12 * b.abs().max(1.0));
            }
        }
    }
}
