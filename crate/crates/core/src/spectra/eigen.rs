//! Eigenvalues of dense real symmetric matrices: Householder reduction to
//! tridiagonal form followed by implicit-shift QL iteration.

use super::SpectraError;

const MAX_SWEEPS_PER_EIGENVALUE: usize = 60;

/// Reduces the row-major symmetric `n×n` matrix to tridiagonal form,
/// returning the diagonal and the subdiagonal (`e[i]` couples `i` and `i+1`).
fn tridiagonalize(n: usize, mut a: Vec<f64>) -> (Vec<f64>, Vec<f64>) {
    let idx = |i: usize, j: usize| i * n + j;
    let mut v = vec![0.0; n];
    let mut p = vec![0.0; n];
    for k in 0..n.saturating_sub(2) {
        let norm = (k + 1..n).map(|i| a[idx(i, k)].powi(2)).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let x0 = a[idx(k + 1, k)];
        let alpha = if x0 > 0.0 { -norm } else { norm };
        for i in k + 1..n {
            v[i] = a[idx(i, k)];
        }
        v[k + 1] -= alpha;
        let vv: f64 = (k + 1..n).map(|i| v[i] * v[i]).sum();
        if vv == 0.0 {
            continue;
        }
        let beta = 2.0 / vv;

        // A <- H A H with H = I - beta v v^T on the trailing block
        for i in k + 1..n {
            p[i] = beta * (k + 1..n).map(|j| a[idx(i, j)] * v[j]).sum::<f64>();
        }
        let kappa = 0.5 * beta * (k + 1..n).map(|i| v[i] * p[i]).sum::<f64>();
        for i in k + 1..n {
            p[i] -= kappa * v[i];
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[idx(i, j)] -= v[i] * p[j] + p[i] * v[j];
            }
        }
        a[idx(k + 1, k)] = alpha;
        a[idx(k, k + 1)] = alpha;
        for i in k + 2..n {
            a[idx(i, k)] = 0.0;
            a[idx(k, i)] = 0.0;
        }
    }
    let d = (0..n).map(|i| a[idx(i, i)]).collect();
    let e = (0..n)
        .map(|i| if i + 1 < n { a[idx(i + 1, i)] } else { 0.0 })
        .collect();
    (d, e)
}

/// Implicit QL with Wilkinson-style shifts on a symmetric tridiagonal matrix.
fn tridiagonal_ql(d: &mut [f64], e: &mut [f64]) -> Result<(), SpectraError> {
    let n = d.len();
    if n == 0 {
        return Ok(());
    }
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > MAX_SWEEPS_PER_EIGENVALUE {
                return Err(SpectraError::ConvergenceFailure { index: l, iterations });
            }

            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    // underflow: split and restart this block
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// All eigenvalues of a row-major symmetric matrix, sorted descending.
pub fn symmetric_eigenvalues(n: usize, a: Vec<f64>) -> Result<Vec<f64>, SpectraError> {
    debug_assert_eq!(a.len(), n * n);
    let (mut d, mut e) = tridiagonalize(n, a);
    tridiagonal_ql(&mut d, &mut e)?;
    d.sort_by(|x, y| y.total_cmp(x));
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_matrix() {
        let a = vec![3.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 2.0];
        assert_eq!(symmetric_eigenvalues(3, a).unwrap(), vec![3.0, 2.0, -1.0]);
    }

    #[test]
    fn path_graph() {
        // P4 eigenvalues are 2 cos(k pi / 5)
        let mut a = vec![0.0; 16];
        for i in 0..3 {
            a[i * 4 + i + 1] = 1.0;
            a[(i + 1) * 4 + i] = 1.0;
        }
        let ev = symmetric_eigenvalues(4, a).unwrap();
        for (k, lambda) in ev.iter().enumerate() {
            let expected = 2.0 * ((k + 1) as f64 * std::f64::consts::PI / 5.0).cos();
            assert!((lambda - expected).abs() < 1e-14, "{lambda} vs {expected}");
        }
    }

    #[test]
    fn zero_and_empty() {
        assert_eq!(symmetric_eigenvalues(3, vec![0.0; 9]).unwrap(), vec![0.0; 3]);
        assert!(symmetric_eigenvalues(0, vec![]).unwrap().is_empty());
        assert_eq!(symmetric_eigenvalues(1, vec![0.0]).unwrap(), vec![0.0]);
    }

    #[test]
    fn complete_graph_multiplicities() {
        let n = 7;
        let a: Vec<f64> = (0..n * n)
            .map(|k| if k / n == k % n { 0.0 } else { 1.0 })
            .collect();
        let ev = symmetric_eigenvalues(n, a).unwrap();
        assert!((ev[0] - 6.0).abs() < 1e-13);
        for lambda in &ev[1..] {
            assert!((lambda + 1.0).abs() < 1e-13);
        }
    }
}
