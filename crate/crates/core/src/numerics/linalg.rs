//! Dense symmetric matrices and the generalized eigenproblem `A v = λ M v`.
//!
//! `M` is reduced by Cholesky, `L⁻¹ A L⁻ᵀ` is diagonalized by cyclic Jacobi
//! rotations, and eigenvectors are mapped back with `L⁻ᵀ` so they come out
//! `M`-orthonormal.

use crate::{Error, Result};

/// Off-diagonal Frobenius norm, relative to the full norm, at which Jacobi stops.
pub const JACOBI_TOL: f64 = 1e-13;
const JACOBI_MAX_SWEEPS: usize = 100;

/// Symmetric matrix with a single stored copy of each off-diagonal entry
/// (packed lower triangle).
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    order: usize,
    packed: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(order: usize) -> Self {
        SymMatrix {
            order,
            packed: vec![0.0; order * (order + 1) / 2],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = SymMatrix::zeros(order);
        for i in 0..order {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Builds from `f(i, j)` evaluated for `j <= i` only.
    pub fn from_fn<F: FnMut(usize, usize) -> f64>(order: usize, mut f: F) -> Self {
        let mut m = SymMatrix::zeros(order);
        for i in 0..order {
            for j in 0..=i {
                let idx = Self::index(i, j);
                m.packed[idx] = f(i, j);
            }
        }
        m
    }

    /// Reads the lower triangle of a square row-major array.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        Ok(SymMatrix::from_fn(n, |i, j| rows[i][j]))
    }

    #[inline]
    fn index(i: usize, j: usize) -> usize {
        let (hi, lo) = if i >= j { (i, j) } else { (j, i) };
        hi * (hi + 1) / 2 + lo
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.packed[Self::index(i, j)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.packed[Self::index(i, j)] = v;
    }

    #[inline]
    pub fn add_to(&mut self, i: usize, j: usize, v: f64) {
        self.packed[Self::index(i, j)] += v;
    }

    pub fn scaled(&self, factor: f64) -> SymMatrix {
        SymMatrix {
            order: self.order,
            packed: self.packed.iter().map(|v| v * factor).collect(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// `xᵀ S x`.
    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.order {
            acc += self.get(i, i) * x[i] * x[i];
            for j in 0..i {
                acc += 2.0 * self.get(i, j) * x[i] * x[j];
            }
        }
        acc
    }

    /// Lower Cholesky factor, row-major; fails on a non-positive pivot.
    pub fn cholesky(&self) -> Result<Vec<Vec<f64>>> {
        let n = self.order;
        let mut l = vec![vec![0.0; n]; n];
        for j in 0..n {
            let mut d = self.get(j, j);
            for k in 0..j {
                d -= l[j][k] * l[j][k];
            }
            if !(d > 0.0) || !d.is_finite() {
                return Err(Error::NotPositiveDefinite { pivot: j, value: d });
            }
            let djj = d.sqrt();
            l[j][j] = djj;
            for i in j + 1..n {
                let mut s = self.get(i, j);
                for k in 0..j {
                    s -= l[i][k] * l[j][k];
                }
                l[i][j] = s / djj;
            }
        }
        Ok(l)
    }
}

/// Eigenpairs of a symmetric pencil, ascending; `vectors[m]` belongs to `values[m]`
/// and satisfies `vᵀ M v = 1`.
#[derive(Clone, Debug)]
pub struct GenEig {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
}

impl GenEig {
    pub fn max_value(&self) -> f64 {
        *self.values.last().expect("non-empty pencil")
    }

    pub fn max_vector(&self) -> &[f64] {
        self.vectors.last().expect("non-empty pencil")
    }
}

/// All eigenvalues of `A v = λ M v`, ascending.
pub fn sym_gen_eigs(a: &SymMatrix, m: &SymMatrix) -> Result<Vec<f64>> {
    sym_gen_eig(a, m).map(|e| e.values)
}

pub fn sym_gen_eig(a: &SymMatrix, m: &SymMatrix) -> Result<GenEig> {
    let n = a.order();
    if m.order() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: m.order(),
        });
    }
    if n == 0 {
        return Err(Error::input("empty pencil"));
    }
    let l = m.cholesky()?;

    // C = L⁻¹ A L⁻ᵀ: first Y = L⁻¹ A (forward substitution per column), then C = Y L⁻ᵀ.
    let mut y = a.to_rows();
    for col in 0..n {
        for i in 0..n {
            let mut s = y[i][col];
            for k in 0..i {
                s -= l[i][k] * y[k][col];
            }
            y[i][col] = s / l[i][i];
        }
    }
    let mut c = vec![vec![0.0; n]; n];
    for row in 0..n {
        for j in 0..n {
            let mut s = y[row][j];
            for k in 0..j {
                s -= l[j][k] * c[row][k];
            }
            c[row][j] = s / l[j][j];
        }
    }
    for i in 0..n {
        for j in 0..i {
            let avg = 0.5 * (c[i][j] + c[j][i]);
            c[i][j] = avg;
            c[j][i] = avg;
        }
    }

    let (values, q, sweeps) = jacobi_eigen(c)?;

    // v = L⁻ᵀ q (back substitution).
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
    let mut out_values = Vec::with_capacity(n);
    let mut out_vectors = Vec::with_capacity(n);
    for &col in &order {
        let mut v = vec![0.0; n];
        for i in (0..n).rev() {
            let mut s = q[i][col];
            for k in i + 1..n {
                s -= l[k][i] * v[k];
            }
            v[i] = s / l[i][i];
        }
        out_values.push(values[col]);
        out_vectors.push(v);
    }
    Ok(GenEig {
        values: out_values,
        vectors: out_vectors,
        sweeps,
    })
}

/// Cyclic Jacobi on a dense symmetric matrix. Returns unsorted eigenvalues, the
/// eigenvector matrix (columns) and the sweep count.
pub fn jacobi_eigen(mut a: Vec<Vec<f64>>) -> Result<(Vec<f64>, Vec<Vec<f64>>, usize)> {
    let n = a.len();
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    let total: f64 = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    for sweep in 0..=JACOBI_MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum::<f64>()
            .sqrt();
        if off <= JACOBI_TOL * total || total == 0.0 {
            return Ok(((0..n).map(|i| a[i][i]).collect(), v, sweep));
        }
        if sweep == JACOBI_MAX_SWEEPS {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for row in v.iter_mut() {
                    let vkp = row[p];
                    let vkq = row[q];
                    row[p] = c * vkp - s * vkq;
                    row[q] = s * vkp + c * vkq;
                }
            }
        }
    }
    Err(Error::NoConvergence("Jacobi eigenvalue iteration"))
}
