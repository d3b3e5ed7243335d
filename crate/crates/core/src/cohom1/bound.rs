//! Profile-independent bounds `D_k`: the top eigenvalue of the pencil
//! `(∫ Φ_max^{2n-2} φ'ψ', ∫ φψ)` over polynomials of degree `≤ k` in `s`.

use crate::numerics::legendre::{series_in_variable, values_and_derivatives};
use crate::numerics::{sym_gen_eig, Escalation, SymMatrix};
use crate::{Error, Exec, Polynomial, Result};

/// `(n s)^{1/n}` on `[0, ½]`, mirrored on `[½, 1]`.
pub fn phi_max(n: usize, s: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::input(format!("dimension {n} < 2")));
    }
    if !(0.0..=1.0).contains(&s) {
        return Err(Error::input(format!("s = {s} outside [0, 1]")));
    }
    let near = s.min(1.0 - s);
    Ok((n as f64 * near).powf(1.0 / n as f64))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Cohom1BoundResult {
    pub n: usize,
    pub k: usize,
    pub value: f64,
    /// Top trial function, with `∫_0^1 φ² ds = 1`.
    pub maximizer: Polynomial,
}

/// Stiffness and mass matrices in the basis `P_i(2s - 1)`, `i = 0..=k`.
pub fn dk_pencil(n: usize, k: usize) -> Result<(SymMatrix, SymMatrix)> {
    if n < 2 {
        return Err(Error::input(format!("dimension {n} < 2")));
    }
    let size = k + 1;
    let pairs: Vec<(usize, usize)> = (1..size)
        .flat_map(|i| (i..size).map(move |j| (i, j)))
        .filter(|(i, j)| (i + j) % 2 == 0)
        .collect();
    // With s = rⁿ the weight (n s)^{(2n-2)/n} ds becomes n^{(2n-2)/n + 1} r^{3n-3} dr.
    let nf = n as f64;
    let scale = nf.powf((2.0 * nf - 2.0) / nf) * nf;
    let top = 0.5_f64.powf(1.0 / nf);
    let (half, _) = Escalation::default().integrate_vec(0.0, top, pairs.len(), |r, out| {
        let mut vals = vec![0.0; size];
        let mut ders = vec![0.0; size];
        let s = r.powi(n as i32);
        values_and_derivatives(k, 2.0 * s - 1.0, &mut vals, &mut ders);
        let weight = 4.0 * scale * r.powi(3 * n as i32 - 3);
        for (slot, &(i, j)) in out.iter_mut().zip(&pairs) {
            *slot = weight * ders[i] * ders[j];
        }
    })?;
    let mut a = SymMatrix::zeros(size);
    for (v, &(i, j)) in half.iter().zip(&pairs) {
        a.set(i, j, 2.0 * v);
    }
    let m = SymMatrix::from_fn(size, |i, j| {
        if i == j {
            1.0 / (2 * i + 1) as f64
        } else {
            0.0
        }
    });
    Ok((a, m))
}

pub fn compute_dk(n: usize, k: usize) -> Result<Cohom1BoundResult> {
    if k == 0 {
        return Err(Error::input("k must be at least 1"));
    }
    let (a, m) = dk_pencil(n, k)?;
    let eig = sym_gen_eig(&a, &m)?;
    let maximizer = series_in_variable(eig.max_vector(), 0.5, 0.5);
    Ok(Cohom1BoundResult {
        n,
        k,
        value: eig.max_value().max(0.0),
        maximizer,
    })
}

/// `D_1 … D_kmax`.
pub fn dk_table(n: usize, kmax: usize, exec: Exec) -> Result<Vec<Cohom1BoundResult>> {
    exec.try_map_range(kmax, |i| compute_dk(n, i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comparison_profile_values() {
        assert_eq!(phi_max(2, 0.5).unwrap(), 1.0);
        assert!((phi_max(2, 0.25).unwrap() - 0.5_f64.sqrt()).abs() < 1e-15);
        assert_eq!(phi_max(3, 0.0).unwrap(), 0.0);
        assert_eq!(phi_max(3, 1.0).unwrap(), 0.0);
        for n in 2..6 {
            let mid = (n as f64 / 2.0).powf(1.0 / n as f64);
            assert!((phi_max(n, 0.5).unwrap() - mid).abs() < 1e-15);
            for s in [0.125, 0.3125, 0.4375] {
                assert_eq!(phi_max(n, s).unwrap(), phi_max(n, 1.0 - s).unwrap());
            }
        }
        assert!(phi_max(1, 0.5).is_err());
    }

    #[test]
    fn first_bound_on_the_two_sphere() {
        let d = compute_dk(2, 1).unwrap();
        assert!((d.value - 6.0).abs() < 1e-12, "{}", d.value);
        let norm = (&d.maximizer * &d.maximizer).integrate(0.0, 1.0).unwrap();
        assert!((norm - 1.0).abs() < 1e-12);
    }

    #[test]
    fn constants_carry_no_energy() {
        let (a, _) = dk_pencil(3, 4).unwrap();
        for j in 0..5 {
            assert_eq!(a.get(0, j), 0.0);
        }
        assert!(compute_dk(2, 0).is_err());
    }

    #[test]
    fn bounds_grow_with_degree() {
        let table = dk_table(2, 6, Exec::default()).unwrap();
        for w in table.windows(2) {
            assert!(w[1].value >= w[0].value * (1.0 - 1e-12));
        }
    }

    #[test]
    fn repeated_calls_are_identical() {
        assert_eq!(compute_dk(3, 5).unwrap(), compute_dk(3, 5).unwrap());
    }
}
