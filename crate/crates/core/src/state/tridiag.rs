use crate::error::Error;
use crate::scalar::{real, Real};
use crate::Result;

/// Eigendecomposition of a symmetric tridiagonal matrix (QL algorithm with
/// implicit shifts). `diag` holds the diagonal, `off` the subdiagonal
/// (`off.len() == diag.len() - 1`).
///
/// Returns ascending eigenvalues and, column-wise, the matching eigenvectors:
/// `vectors[k][i]` is component `i` of eigenvector `k`.
pub fn symmetric_tridiagonal_eigen<T: Real>(
    diag: &[T],
    off: &[T],
) -> Result<(Vec<T>, Vec<Vec<T>>)> {
    let n = diag.len();
    assert_eq!(off.len(), n.saturating_sub(1));
    if n == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let mut d = diag.to_vec();
    let mut e = vec![T::zero(); n];
    e[..n - 1].copy_from_slice(off);
    // z: accumulated rotations, starts as identity
    let mut z = vec![vec![T::zero(); n]; n];
    for (i, row) in z.iter_mut().enumerate() {
        row[i] = T::one();
    }

    for l in 0..n {
        let mut iter = 0;
        loop {
            // find a small subdiagonal element
            let mut m = l;
            while m < n - 1 {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= T::epsilon() * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 50 {
                return Err(Error::NonConvergence { residual: e[l].to_f64().unwrap_or(f64::NAN), iterations: iter });
            }
            let two = real::<T>(2.0);
            let mut g = (d[l + 1] - d[l]) / (two * e[l]);
            let mut r = g.hypot(T::one());
            let sign_r = if g >= T::zero() { r.abs() } else { -r.abs() };
            g = d[m] - d[l] + e[l] / (g + sign_r);
            let mut s = T::one();
            let mut c = T::one();
            let mut p = T::zero();
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == T::zero() {
                    d[i + 1] = d[i + 1] - p;
                    e[m] = T::zero();
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + two * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for row in z.iter_mut() {
                    f = row[i + 1];
                    row[i + 1] = s * row[i] + c * f;
                    row[i] = c * row[i] - s * f;
                }
            }
            if underflow {
                continue;
            }
            d[l] = d[l] - p;
            e[l] = g;
            e[m] = T::zero();
        }
    }

    // sort ascending, carrying eigenvectors along
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].partial_cmp(&d[b]).unwrap_or(std::cmp::Ordering::Equal));
    let values: Vec<T> = order.iter().map(|&i| d[i]).collect();
    let vectors: Vec<Vec<T>> = order
        .iter()
        .map(|&k| (0..n).map(|i| z[i][k]).collect())
        .collect();
    Ok((values, vectors))
}
