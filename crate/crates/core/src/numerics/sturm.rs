//! Symmetric tridiagonal eigenvalues by Sturm-sequence bisection, and the
//! finite-difference Sturm–Liouville operator `-(p φ')' = λ φ` that feeds it.
//!
//! The discretization is vertex-centered: nodes `x_i = i h`, the coefficient is
//! sampled at cell midpoints, boundary nodes carry half-cell mass, and the outer
//! faces carry no flux. The lumped-mass matrix is symmetrized as
//! `W^{-1/2} K W^{-1/2}`. A coefficient vanishing at an endpoint needs no extra
//! condition: the zero-flux faces select the bounded eigenfunctions.

use crate::{Error, Exec, Result};

/// Symmetric tridiagonal operator.
#[derive(Clone, Debug, PartialEq)]
pub struct TridiagEig {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl TridiagEig {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() || offdiag.len() + 1 != diag.len() {
            return Err(Error::DimensionMismatch {
                expected: diag.len().saturating_sub(1),
                found: offdiag.len(),
            });
        }
        if diag.iter().chain(&offdiag).any(|v| !v.is_finite()) {
            return Err(Error::input("non-finite tridiagonal entry"));
        }
        Ok(TridiagEig { diag, offdiag })
    }

    pub fn order(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// Gershgorin enclosure of the spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.order();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let r = if i > 0 {
                self.offdiag[i - 1].abs()
            } else {
                0.0
            } + if i + 1 < n {
                self.offdiag[i].abs()
            } else {
                0.0
            };
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        (lo, hi)
    }

    pub fn norm_bound(&self) -> f64 {
        let (lo, hi) = self.gershgorin();
        lo.abs().max(hi.abs())
    }

    /// Absolute resolution of the bisection: the Sturm count is exact for a
    /// matrix within a few ulps of `‖T‖` of this one.
    pub fn resolution(&self) -> f64 {
        4.0 * f64::EPSILON * self.norm_bound() * (self.order() as f64).sqrt().max(1.0)
    }

    /// Number of eigenvalues strictly below `x`.
    pub fn sturm_count(&self, x: f64) -> usize {
        let pivmin = f64::MIN_POSITIVE * self.norm_bound().max(1.0);
        let mut count = 0;
        let mut q = self.diag[0] - x;
        for i in 0..self.order() {
            if i > 0 {
                let e = self.offdiag[i - 1];
                q = self.diag[i] - x - e * e / q;
            }
            if q.abs() < pivmin {
                q = -pivmin;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The `index`-th smallest eigenvalue (0-based).
    pub fn eigenvalue(&self, index: usize) -> Result<f64> {
        if index >= self.order() {
            return Err(Error::input(format!(
                "eigenvalue index {index} out of range {}",
                self.order()
            )));
        }
        let (mut lo, mut hi) = self.gershgorin();
        let pad = self.resolution().max(f64::MIN_POSITIVE);
        lo -= pad;
        hi += pad;
        let abs_tol = 0.25 * self.resolution();
        for _ in 0..256 {
            let mid = 0.5 * (lo + hi);
            if hi - lo <= abs_tol.max(2.0 * f64::EPSILON * mid.abs()) || mid == lo || mid == hi {
                return Ok(mid);
            }
            if self.sturm_count(mid) > index {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Err(Error::NoConvergence("Sturm bisection"))
    }

    /// The `count` smallest eigenvalues, ascending.
    pub fn smallest(&self, count: usize, exec: Exec) -> Result<Vec<f64>> {
        if count > self.order() {
            return Err(Error::input(format!(
                "requested {count} eigenvalues of an order-{} matrix",
                self.order()
            )));
        }
        exec.try_map_range(count, |i| self.eigenvalue(i))
    }
}

/// Condition imposed at the right end of the interval.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RightBoundary {
    /// Zero flux, the natural condition of the variational problem.
    #[default]
    Natural,
    /// `φ = 0`; used for the odd modes on a half interval.
    Dirichlet,
}

/// Eigenvalues of an invariant Laplacian with mesh-convergence metadata.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumResult {
    /// Ascending; index 0 is the constant mode, reported as exactly 0.
    pub eigenvalues: Vec<f64>,
    pub mesh: usize,
    /// Eigenvalues at `mesh / 2`, same indexing.
    pub coarse_eigenvalues: Vec<f64>,
    /// Largest relative change over the nonzero eigenvalues between `mesh / 2` and `mesh`.
    pub rel_change: f64,
    /// Raw smallest eigenvalue before it was identified as the zero mode.
    pub zero_mode_raw: f64,
}

impl SpectrumResult {
    /// Nonzero eigenvalues `λ_1, λ_2, …`.
    pub fn nonzero(&self) -> &[f64] {
        &self.eigenvalues[1..]
    }
}

/// Relative threshold, against the first nonzero eigenvalue, below which the
/// smallest eigenvalue counts as the constant mode.
pub const ZERO_MODE_REL: f64 = 1e-9;

/// Builds the symmetrized finite-difference operator.
pub fn sl_operator<P>(p: P, length: f64, mesh: usize, right: RightBoundary) -> Result<TridiagEig>
where
    P: Fn(f64) -> f64,
{
    if mesh < 16 {
        return Err(Error::input(format!("mesh {mesh} below the minimum of 16")));
    }
    if !(length > 0.0) || !length.is_finite() {
        return Err(Error::input(format!(
            "interval length {length} must be positive"
        )));
    }
    let h = length / mesh as f64;
    let mut flux = Vec::with_capacity(mesh);
    for i in 0..mesh {
        let x = (i as f64 + 0.5) * h;
        let v = p(x);
        if !(v >= 0.0) || !v.is_finite() {
            return Err(Error::input(format!(
                "coefficient sample p({x}) = {v} is not a valid metric coefficient"
            )));
        }
        flux.push(v / h);
    }
    let nodes = match right {
        RightBoundary::Natural => mesh + 1,
        RightBoundary::Dirichlet => mesh,
    };
    let mass = |i: usize| if i == 0 || i == mesh { 0.5 * h } else { h };
    let mut diag = vec![0.0; nodes];
    let mut off = vec![0.0; nodes - 1];
    for (cell, &f) in flux.iter().enumerate() {
        diag[cell] += f;
        if cell + 1 < nodes {
            diag[cell + 1] += f;
            off[cell] = -f / (mass(cell) * mass(cell + 1)).sqrt();
        }
    }
    for (i, d) in diag.iter_mut().enumerate() {
        *d /= mass(i);
    }
    TridiagEig::new(diag, off)
}

/// First `count` eigenvalues of `-(p φ')' = λ φ` on `[0, length]` with zero-flux
/// ends; index 0 is the constant mode.
pub fn sl_eigs<P>(p: P, length: f64, mesh: usize, count: usize) -> Result<Vec<f64>>
where
    P: Fn(f64) -> f64,
{
    sl_eigs_with(
        p,
        length,
        mesh,
        count,
        RightBoundary::Natural,
        Exec::default(),
    )
}

pub fn sl_eigs_with<P>(
    p: P,
    length: f64,
    mesh: usize,
    count: usize,
    right: RightBoundary,
    exec: Exec,
) -> Result<Vec<f64>>
where
    P: Fn(f64) -> f64,
{
    if count == 0 {
        return Ok(Vec::new());
    }
    let op = sl_operator(p, length, mesh, right)?;
    let mut eigs = op.smallest(count.max(2).min(op.order()), exec)?;
    if right == RightBoundary::Natural {
        let first_nonzero = eigs.get(1).copied().unwrap_or(f64::INFINITY);
        if eigs[0].abs() <= (ZERO_MODE_REL * first_nonzero).max(op.resolution()) {
            eigs[0] = 0.0;
        }
    }
    eigs.truncate(count);
    Ok(eigs)
}

/// Solves at `mesh` and `mesh / 2` and records the change; `count` counts the
/// zero mode.
pub fn sl_spectrum<P>(
    p: P,
    length: f64,
    mesh: usize,
    count: usize,
    exec: Exec,
) -> Result<SpectrumResult>
where
    P: Fn(f64) -> f64,
{
    let coarse_mesh = (mesh / 2).max(16);
    let op = sl_operator(&p, length, mesh, RightBoundary::Natural)?;
    let raw = op.smallest(count.max(2).min(op.order()), exec)?;
    let zero_mode_raw = raw[0];
    let eigenvalues = sl_eigs_with(&p, length, mesh, count, RightBoundary::Natural, exec)?;
    let coarse_eigenvalues =
        sl_eigs_with(&p, length, coarse_mesh, count, RightBoundary::Natural, exec)?;
    let rel_change = relative_change(&coarse_eigenvalues, &eigenvalues);
    Ok(SpectrumResult {
        eigenvalues,
        mesh,
        coarse_eigenvalues,
        rel_change,
        zero_mode_raw,
    })
}

/// Doubles the mesh from `mesh` until the nonzero eigenvalues change by less
/// than `rel_tol` or `max_mesh` is exceeded.
pub fn sl_eigs_refined<P>(
    p: P,
    length: f64,
    mesh: usize,
    count: usize,
    rel_tol: f64,
    max_mesh: usize,
) -> Result<SpectrumResult>
where
    P: Fn(f64) -> f64,
{
    let mut current = sl_spectrum(&p, length, mesh.max(32), count, Exec::default())?;
    while current.rel_change >= rel_tol {
        let next = current.mesh * 2;
        if next > max_mesh {
            return Err(Error::NoConvergence("mesh refinement"));
        }
        current = sl_spectrum(&p, length, next, count, Exec::default())?;
    }
    Ok(current)
}

fn relative_change(coarse: &[f64], fine: &[f64]) -> f64 {
    coarse
        .iter()
        .zip(fine)
        .skip(1)
        .map(|(c, f)| ((f - c) / f).abs())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn assert_rel(got: f64, want: f64, tol: f64) {
        assert!(((got - want) / want).abs() < tol, "got {got}, want {want}");
    }

    #[test]
    fn sturm_count_on_diagonal() {
        let t = TridiagEig::new(vec![1.0, 3.0, 2.0], vec![0.0, 0.0]).unwrap();
        assert_eq!(t.sturm_count(0.5), 0);
        assert_eq!(t.sturm_count(2.5), 2);
        assert_eq!(
            t.smallest(3, Exec::Sequential)
                .unwrap()
                .iter()
                .map(|v| v.round())
                .collect::<Vec<_>>(),
            vec![1.0, 2.0, 3.0]
        );
    }

    #[test]
    fn second_difference_matrix_closed_form() {
        // tridiag(-1, 2, -1) of order n: 2 - 2 cos(kπ/(n+1)).
        let n = 50;
        let t = TridiagEig::new(vec![2.0; n], vec![-1.0; n - 1]).unwrap();
        let e = t.smallest(5, Exec::Parallel).unwrap();
        for (k, v) in e.iter().enumerate() {
            let exact = 2.0 - 2.0 * ((k + 1) as f64 * PI / (n + 1) as f64).cos();
            assert!((v - exact).abs() < 1e-13);
        }
    }

    #[test]
    fn legendre_coefficient() {
        let e = sl_eigs(|x| 1.0 - (x - 1.0) * (x - 1.0), 2.0, 2000, 6).unwrap();
        assert_eq!(e[0], 0.0);
        for k in 1..6 {
            assert_rel(e[k], (k * (k + 1)) as f64, 1e-3);
        }
    }

    #[test]
    fn neumann_cosines() {
        let e = sl_eigs(|_| 1.0, PI, 2000, 6).unwrap();
        assert_eq!(e[0], 0.0);
        for k in 1..6 {
            assert_rel(e[k], (k * k) as f64, 1e-3);
        }
    }

    #[test]
    fn scaled_legendre_on_unit_interval() {
        let e = sl_eigs(|s| 2.0 * s * (1.0 - s), 1.0, 2000, 6).unwrap();
        for k in 1..6 {
            assert_rel(e[k], (2 * k * (k + 1)) as f64, 1e-3);
        }
    }

    #[test]
    fn rejects_negative_coefficient_and_tiny_mesh() {
        assert!(sl_eigs(|x| x - 0.5, 1.0, 100, 3).is_err());
        assert!(sl_eigs(|_| 1.0, 1.0, 8, 3).is_err());
    }

    #[test]
    fn monotone_second_order_convergence_on_legendre() {
        let p = |x: f64| 1.0 - (x - 1.0) * (x - 1.0);
        let meshes = [250, 500, 1000, 2000];
        let runs: Vec<Vec<f64>> = meshes
            .iter()
            .map(|&m| sl_eigs(p, 2.0, m, 6).unwrap())
            .collect();
        for k in 1..6 {
            let exact = (k * (k + 1)) as f64;
            let errs: Vec<f64> = runs.iter().map(|r| exact - r[k]).collect();
            // Lumped mass approaches from below, monotonically.
            for w in errs.windows(2) {
                assert!(w[0] > w[1] && w[1] > 0.0, "k={k}: {errs:?}");
            }
            // Richardson-style order from three successive levels.
            let order = ((runs[1][k] - runs[0][k]) / (runs[2][k] - runs[1][k])).log2();
            assert!((order - 2.0).abs() < 0.3, "k={k}: order {order}");
        }
    }

    #[test]
    fn dirichlet_right_end_removes_zero_mode() {
        // -φ'' on [0, π/2], φ'(0) = 0, φ(π/2) = 0: odd integers squared.
        let e = sl_eigs_with(
            |_| 1.0,
            PI / 2.0,
            2000,
            3,
            RightBoundary::Dirichlet,
            Exec::Sequential,
        )
        .unwrap();
        for (k, v) in e.iter().enumerate() {
            assert_rel(*v, ((2 * k + 1) * (2 * k + 1)) as f64, 1e-3);
        }
    }

    #[test]
    fn refinement_reaches_tolerance() {
        let r =
            sl_eigs_refined(|x| 1.0 - (x - 1.0) * (x - 1.0), 2.0, 64, 4, 1e-4, 1 << 16).unwrap();
        assert!(r.rel_change < 1e-4);
        assert!(r.mesh > 64);
        assert_eq!(r.eigenvalues[0], 0.0);
    }
}
