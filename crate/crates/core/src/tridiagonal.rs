//! Eigenpairs of symmetric tridiagonal matrices in `O(n²)`: implicit QL for
//! the eigenvalues, inverse iteration for the eigenvectors.

/// Eigenvalues of the unreduced symmetric tridiagonal matrix with diagonal
/// `d` and off-diagonal `e` (`e[i]` couples `i` and `i + 1`).
pub(crate) fn eigenvalues(diag: &[f64], off: &[f64]) -> Option<Vec<f64>> {
    let n = diag.len();
    let mut d = diag.to_vec();
    let mut e = off.to_vec();
    e.resize(n, 0.0);
    for l in 0..n {
        let mut iter = 0;
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
            iter += 1;
            if iter > 100 {
                return None;
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = (g * g + 1.0).sqrt();
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = (f * f + g * g).sqrt();
                e[i + 1] = r;
                if r == 0.0 {
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
    Some(d)
}

/// Solves `(T - shift·I) x = b` by Gaussian elimination with partial
/// pivoting; zero pivots are replaced by `tiny`.
fn solve_shifted(diag: &[f64], off: &[f64], shift: f64, b: &mut [f64], tiny: f64) {
    let n = diag.len();
    // Row i holds entries at columns i, i+1, i+2 after pivoting.
    let mut a: Vec<[f64; 3]> = (0..n)
        .map(|i| [diag[i] - shift, if i + 1 < n { off[i] } else { 0.0 }, 0.0])
        .collect();
    for i in 0..n.saturating_sub(1) {
        // Row i+1 is still untouched, with entries at columns i, i+1, i+2.
        let below = [
            off[i],
            diag[i + 1] - shift,
            if i + 2 < n { off[i + 1] } else { 0.0 },
        ];
        let (mut top, mut bot) = (a[i], below);
        if bot[0].abs() > top[0].abs() {
            std::mem::swap(&mut top, &mut bot);
            b.swap(i, i + 1);
        }
        if top[0] == 0.0 {
            top[0] = tiny;
        }
        let m = bot[0] / top[0];
        a[i] = top;
        a[i + 1] = [bot[1] - m * top[1], bot[2] - m * top[2], 0.0];
        b[i + 1] -= m * b[i];
    }
    if n > 0 && a[n - 1][0] == 0.0 {
        a[n - 1][0] = tiny;
    }
    for i in (0..n).rev() {
        let mut s = b[i];
        if i + 1 < n {
            s -= a[i][1] * b[i + 1];
        }
        if i + 2 < n {
            s -= a[i][2] * b[i + 2];
        }
        b[i] = s / a[i][0];
    }
}

fn normalize(x: &mut [f64]) {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm > 0.0 {
        x.iter_mut().for_each(|v| *v /= norm);
    }
}

/// Unit eigenvector for the eigenvalue `lambda` of an unreduced block.
pub(crate) fn eigenvector(diag: &[f64], off: &[f64], lambda: f64) -> Vec<f64> {
    let n = diag.len();
    let scale = diag
        .iter()
        .map(|d| d.abs())
        .chain(off.iter().map(|e| 2.0 * e.abs()))
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    let tiny = f64::EPSILON * scale;
    let mut x: Vec<f64> = (0..n)
        .map(|i| 1.0 + 0.37 * ((i * 7 + 3) % 11) as f64 / 11.0)
        .collect();
    normalize(&mut x);
    for _ in 0..2 {
        solve_shifted(diag, off, lambda, &mut x, tiny);
        normalize(&mut x);
    }
    x
}
