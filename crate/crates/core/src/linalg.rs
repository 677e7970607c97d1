//! Symmetric tridiagonal eigensolver (implicit QL with Wilkinson shifts).
//!
//! Derived from the Algol procedure tql2 (Bowdler, Martin, Reinsch and
//! Wilkinson, Handbook for Auto. Comp., Vol. II) by way of the EISPACK and
//! JAMA translations.

use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 60;

/// Eigenpairs of a real symmetric tridiagonal matrix, sorted by descending
/// eigenvalue. `vectors[k]` is the unit eigenvector for `values[k]`.
#[derive(Debug, Clone)]
pub struct TridiagonalEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

/// Diagonalize the symmetric tridiagonal matrix with main diagonal `diag`
/// and first off-diagonal `off` (`off[i]` couples rows `i` and `i + 1`).
pub fn symmetric_tridiagonal_eigen(diag: &[f64], off: &[f64]) -> Result<TridiagonalEigen> {
    let n = diag.len();
    assert!(n > 0 && off.len() + 1 == n, "off-diagonal must have n - 1 entries");

    let mut d = diag.to_vec();
    let mut e = off.to_vec();
    e.push(0.0);
    // cols[i] is the i-th eigenvector column; rotations touch adjacent columns.
    let mut cols: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut c = vec![0.0; n];
            c[i] = 1.0;
            c
        })
        .collect();

    let eps = f64::EPSILON;
    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }
        if m > l {
            let mut sweeps = 0;
            loop {
                sweeps += 1;
                if sweeps > MAX_SWEEPS {
                    return Err(Error::NoConvergence(l));
                }
                // implicit shift
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d.iter_mut().skip(l + 2) {
                    *di -= h;
                }
                f += h;

                // QL sweep
                p = d[m];
                let (mut c, mut c2, mut c3) = (1.0, 1.0, 1.0);
                let el1 = e[l + 1];
                let (mut s, mut s2) = (0.0, 0.0);
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);

                    let (left, right) = cols.split_at_mut(i + 1);
                    let (vi, vi1) = (&mut left[i], &mut right[0]);
                    for (a, b) in vi.iter_mut().zip(vi1.iter_mut()) {
                        let t = *b;
                        *b = s * *a + c * t;
                        *a = c * *a - s * t;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[b].total_cmp(&d[a]));
    Ok(TridiagonalEigen {
        values: order.iter().map(|&k| d[k]).collect(),
        vectors: order.iter().map(|&k| cols[k].clone()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn apply(diag: &[f64], off: &[f64], v: &[f64]) -> Vec<f64> {
        let n = diag.len();
        (0..n)
            .map(|i| {
                let mut acc = diag[i] * v[i];
                if i > 0 {
                    acc += off[i - 1] * v[i - 1];
                }
                if i + 1 < n {
                    acc += off[i] * v[i + 1];
                }
                acc
            })
            .collect()
    }

    #[test]
    fn one_by_one() {
        let eig = symmetric_tridiagonal_eigen(&[3.5], &[]).unwrap();
        assert_eq!(eig.values, vec![3.5]);
        assert_eq!(eig.vectors, vec![vec![1.0]]);
    }

    #[test]
    fn path_graph_spectrum() {
        // Laplacian-like matrix with known eigenvalues 2 - 2cos(kπ/(n+1))
        let n = 12;
        let diag = vec![2.0; n];
        let off = vec![-1.0; n - 1];
        let eig = symmetric_tridiagonal_eigen(&diag, &off).unwrap();
        let mut expected: Vec<f64> = (1..=n)
            .map(|k| 2.0 - 2.0 * (k as f64 * std::f64::consts::PI / (n as f64 + 1.0)).cos())
            .collect();
        expected.sort_by(|a, b| b.total_cmp(a));
        for (got, want) in eig.values.iter().zip(&expected) {
            assert!((got - want).abs() < 1e-13, "{got} vs {want}");
        }
    }

    #[test]
    fn residual_and_orthogonality() {
        let n = 40;
        let diag: Vec<f64> = (0..n).map(|i| ((i * 7) % 11) as f64 - 5.0).collect();
        let off: Vec<f64> = (1..n).map(|i| 0.5 + (i % 3) as f64).collect();
        let eig = symmetric_tridiagonal_eigen(&diag, &off).unwrap();
        for (lam, v) in eig.values.iter().zip(&eig.vectors) {
            let tv = apply(&diag, &off, v);
            for (a, b) in tv.iter().zip(v) {
                assert!((a - lam * b).abs() < 1e-12);
            }
        }
        for i in 0..n {
            for j in 0..n {
                let dot: f64 = eig.vectors[i].iter().zip(&eig.vectors[j]).map(|(a, b)| a * b).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((dot - want).abs() < 1e-13);
            }
        }
        assert!(eig.values.windows(2).all(|w| w[0] >= w[1]));
    }
}
