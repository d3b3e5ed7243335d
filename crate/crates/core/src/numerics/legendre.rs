//! Legendre polynomials on `[-1, 1]`, used as the well-conditioned basis of the
//! polynomial trial spaces.

use super::Polynomial;

/// `P_0(x) .. P_n(x)` and their derivatives by the three-term recurrence.
pub fn values_and_derivatives(n: usize, x: f64, values: &mut [f64], derivs: &mut [f64]) {
    values[0] = 1.0;
    derivs[0] = 0.0;
    if n == 0 {
        return;
    }
    values[1] = x;
    derivs[1] = 1.0;
    for m in 1..n {
        let mf = m as f64;
        values[m + 1] = ((2.0 * mf + 1.0) * x * values[m] - mf * values[m - 1]) / (mf + 1.0);
        derivs[m + 1] = derivs[m - 1] + (2.0 * mf + 1.0) * values[m];
    }
}

/// Monomial coefficients of `P_n`.
pub fn legendre_polynomial(n: usize) -> Polynomial {
    let mut p0 = Polynomial::constant(1.0);
    if n == 0 {
        return p0;
    }
    let x = Polynomial::monomial(1, 1.0);
    let mut p1 = x.clone();
    for m in 1..n {
        let mf = m as f64;
        let next = &(&x * &p1).scale((2.0 * mf + 1.0) / (mf + 1.0)) - &p0.scale(mf / (mf + 1.0));
        p0 = p1;
        p1 = next;
    }
    p1
}

/// `Σ c_i P_i(τ)` with `τ = (t - center) / half_width`, expanded in powers of `t`.
pub fn series_in_variable(coeffs: &[f64], center: f64, half_width: f64) -> Polynomial {
    let in_tau = coeffs
        .iter()
        .enumerate()
        .fold(Polynomial::zero(), |acc, (i, &c)| {
            &acc + &legendre_polynomial(i).scale(c)
        });
    in_tau.compose_affine(1.0 / half_width, -center / half_width)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrence_matches_closed_forms() {
        let mut v = [0.0; 4];
        let mut d = [0.0; 4];
        let x = 0.3;
        values_and_derivatives(3, x, &mut v, &mut d);
        assert!((v[2] - 0.5 * (3.0 * x * x - 1.0)).abs() < 1e-15);
        assert!((v[3] - 0.5 * (5.0 * x * x * x - 3.0 * x)).abs() < 1e-15);
        assert!((d[3] - 0.5 * (15.0 * x * x - 3.0)).abs() < 1e-15);
    }

    #[test]
    fn coefficient_form_agrees_with_recurrence() {
        let mut v = [0.0; 9];
        let mut d = [0.0; 9];
        for &x in &[-0.9, -0.2, 0.5, 1.0] {
            values_and_derivatives(8, x, &mut v, &mut d);
            for n in 0..=8 {
                let p = legendre_polynomial(n);
                assert!((p.eval(x) - v[n]).abs() < 1e-13);
                assert!((p.derivative().eval(x) - d[n]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn orthogonality() {
        let a = legendre_polynomial(3);
        let b = legendre_polynomial(5);
        assert!((&a * &b).integrate(-1.0, 1.0).unwrap().abs() < 1e-14);
        assert!(((&b * &b).integrate(-1.0, 1.0).unwrap() - 2.0 / 11.0).abs() < 1e-14);
    }
}
