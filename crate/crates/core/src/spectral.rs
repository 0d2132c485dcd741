//! Kemeny's constant from the walk spectrum, from the resolvent trace and
//! from mean hitting times, plus its regularized variant and the stationary
//! distribution.
//!
//! Eigenvalues are computed on the symmetric matrix `D^{-1/2} A D^{-1/2}`,
//! which is similar to `P`. The unit eigenvalue is always dropped by
//! position (the largest one), never by comparing against a threshold.
//! Connectivity is decided by graph search on the support of `P`.

use nalgebra::{DMatrix, DVector};

use crate::error::{invalid, Error, Result};
use crate::graph::{transition_matrix, Graph, TransitionMatrix};
use crate::tol;

/// Eigenvalues of a walk matrix, sorted ascending, together with the gaps
/// `1 - λ_i` computed directly.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralData {
    pub eigenvalues: Vec<f64>,
    /// `μ_i = 1 - λ_i`, each a Rayleigh quotient of the normalized Laplacian
    /// in edge-difference form, accurate relative to `μ_i` itself.
    pub gaps: Vec<f64>,
    /// Gaps below [`tol::UNIT_EIGENVALUE`]. Informational only.
    pub multiplicity_of_one: usize,
}

impl SpectralData {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// `λ_1`, the smallest eigenvalue.
    pub fn lambda_min(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// `λ_{n-1}`, the largest eigenvalue once the designated unit eigenvalue
    /// is removed.
    pub fn lambda_second(&self) -> f64 {
        self.eigenvalues[self.eigenvalues.len() - 2]
    }

    /// All eigenvalues except the last (designated unit) one.
    pub fn non_unit(&self) -> &[f64] {
        &self.eigenvalues[..self.len().saturating_sub(1)]
    }

    fn non_unit_gaps(&self) -> &[f64] {
        &self.gaps[..self.len().saturating_sub(1)]
    }

    /// `Σ_{i<n} 1/(1-λ_i)`. Meaningful only for irreducible walks.
    pub fn kemeny(&self) -> f64 {
        self.non_unit_gaps().iter().map(|&mu| 1.0 / mu).sum()
    }

    /// `Σ_{i<n} 1/(1-rλ_i)`, evaluated literally from the eigenvalues.
    pub fn kemeny_regularized(&self, r: f64) -> f64 {
        self.non_unit().iter().map(|&l| 1.0 / (1.0 - r * l)).sum()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StationaryDistribution {
    pub pi: Vec<f64>,
}

/// Spectrum of `P` from the symmetric matrix `D^{-1/2} A D^{-1/2}`.
///
/// Each gap is recomputed from its eigenvector `x` as
/// `Σ_{i<j} a_ij (y_i - y_j)² / Σ_i d_i y_i²` with `y = D^{-1/2} x`. The
/// differences are formed before squaring, so gaps close to zero keep
/// their relative accuracy instead of inheriting the absolute error of the
/// eigensolver.
pub fn spectrum(p: &TransitionMatrix) -> SpectralData {
    let mut pairs = if is_tridiagonal(p.p()) {
        tridiagonal_pairs(p)
    } else {
        dense_pairs(p)
    };
    pairs.sort_by(|a, b| b.1.total_cmp(&a.1));
    let (eigenvalues, gaps): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();
    let multiplicity_of_one = gaps
        .iter()
        .filter(|&&mu| mu <= tol::UNIT_EIGENVALUE)
        .count();
    SpectralData {
        eigenvalues,
        gaps,
        multiplicity_of_one,
    }
}

fn is_tridiagonal(m: &DMatrix<f64>) -> bool {
    let n = m.nrows();
    (0..n).all(|i| (0..n).all(|j| i.abs_diff(j) <= 1 || m[(i, j)] == 0.0))
}

/// `(1 - μ, μ)` with `μ` the edge-difference Rayleigh quotient of the
/// eigenvector `x` of `D^{-1/2} A D^{-1/2}`.
fn gap_pair(
    p: &TransitionMatrix,
    x: &[f64],
    neighbours: impl Fn(usize) -> std::ops::Range<usize>,
) -> (f64, f64) {
    let d = &p.degrees().0;
    let y: Vec<f64> = x.iter().zip(d).map(|(xi, di)| xi / di.sqrt()).collect();
    let mut num = 0.0;
    let mut den = 0.0;
    for i in 0..y.len() {
        den += d[i] * y[i] * y[i];
        for j in neighbours(i) {
            let pij = p.p()[(i, j)];
            if pij > 0.0 {
                let diff = y[i] - y[j];
                num += d[i] * pij * diff * diff;
            }
        }
    }
    let mu = num / den;
    (1.0 - mu, mu)
}

fn dense_pairs(p: &TransitionMatrix) -> Vec<(f64, f64)> {
    let n = p.n();
    let eig = p.symmetrized().symmetric_eigen();
    (0..n)
        .map(|k| {
            let x: Vec<f64> = eig.eigenvectors.column(k).iter().copied().collect();
            gap_pair(p, &x, |i| i + 1..n)
        })
        .collect()
}

/// Walks whose matrix is tridiagonal (paths, birth-death chains) are split
/// into unreduced blocks and solved in `O(n²)`.
fn tridiagonal_pairs(p: &TransitionMatrix) -> Vec<(f64, f64)> {
    let n = p.n();
    let s = p.symmetrized();
    let mut pairs = Vec::with_capacity(n);
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && s[(end - 1, end)] != 0.0 {
            end += 1;
        }
        let diag: Vec<f64> = (start..end).map(|i| s[(i, i)]).collect();
        let off: Vec<f64> = (start..end - 1).map(|i| s[(i, i + 1)]).collect();
        match crate::tridiagonal::eigenvalues(&diag, &off) {
            Some(values) => {
                for l in values {
                    let local = crate::tridiagonal::eigenvector(&diag, &off, l);
                    let mut x = vec![0.0; n];
                    x[start..end].copy_from_slice(&local);
                    pairs.push(gap_pair(p, &x, |i| {
                        if i >= start && i + 1 < end {
                            i + 1..i + 2
                        } else {
                            0..0
                        }
                    }));
                }
            }
            None => return dense_pairs(p),
        }
        start = end;
    }
    pairs
}

fn require_irreducible(p: &TransitionMatrix) -> Result<()> {
    let components = p.components().len();
    if components != 1 {
        return Err(Error::Disconnected { components });
    }
    Ok(())
}

/// `κ(P) = Σ_{i=1}^{n-1} 1/(1-λ_i)`.
pub fn kemeny_spectral(p: &TransitionMatrix) -> Result<f64> {
    require_irreducible(p)?;
    Ok(spectrum(p).kemeny())
}

/// Kemeny's constant of the random walk on `g`.
pub fn kemeny(g: &Graph) -> Result<f64> {
    kemeny_spectral(&transition_matrix(g)?)
}

/// `κ(P) = trace((I - P + 1vᵀ)⁻¹) - 1` for any `v` with `vᵀ1 = 1`
/// (uniform when `None`).
pub fn kemeny_trace(p: &TransitionMatrix, v: Option<&[f64]>) -> Result<f64> {
    require_irreducible(p)?;
    let n = p.n();
    let v = match v {
        Some(v) => {
            if v.len() != n {
                return Err(invalid("v", format!("length {} for {n} states", v.len())));
            }
            let sum: f64 = v.iter().sum();
            if (sum - 1.0).abs() > 1e-12 {
                return Err(invalid("v", format!("entries sum to {sum}, not 1")));
            }
            v.to_vec()
        }
        None => vec![1.0 / n as f64; n],
    };
    trace_route(p.p(), &v)
}

fn trace_route(p: &DMatrix<f64>, v: &[f64]) -> Result<f64> {
    let n = p.nrows();
    let m = DMatrix::from_fn(n, n, |i, j| {
        let id = if i == j { 1.0 } else { 0.0 };
        id - p[(i, j)] + v[j]
    });
    let inv = m
        .lu()
        .try_inverse()
        .ok_or_else(|| Error::Singular("I - P + 1vᵀ".into()))?;
    Ok(inv.trace() - 1.0)
}

/// Trace route for an arbitrary row-stochastic matrix that does not come
/// from a graph, such as a stochastic complement.
pub fn kemeny_of_stochastic(p: &DMatrix<f64>) -> Result<f64> {
    let n = p.nrows();
    if n == 0 || p.ncols() != n {
        return Err(invalid(
            "p",
            format!("{}x{} is not a nonempty square matrix", n, p.ncols()),
        ));
    }
    if let Some(i) = p
        .row_iter()
        .position(|row| (row.sum() - 1.0).abs() > 1e-10 || row.iter().any(|&x| x < 0.0))
    {
        return Err(invalid("p", format!("row {i} is not a probability vector")));
    }
    let components = crate::graph::support_components(p).len();
    if components != 1 {
        return Err(Error::Disconnected { components });
    }
    trace_route(p, &vec![1.0 / n as f64; n])
}

/// `κ_r(P) = Σ_{i=1}^{n-1} 1/(1-rλ_i)`, finite for every graph. For `m`
/// components this equals `(m-1)/(1-r) + Σ_{λ_j≠1} 1/(1-rλ_j)`.
pub fn kemeny_regularized(p: &TransitionMatrix, r: f64) -> Result<f64> {
    check_r(r)?;
    Ok(spectrum(p).kemeny_regularized(r))
}

pub(crate) fn check_r(r: f64) -> Result<()> {
    if !(r > 0.0 && r < 1.0) {
        return Err(invalid("r", format!("{r} is outside (0, 1)")));
    }
    Ok(())
}

/// Solves `πᵀ(I - P + 1vᵀ) = vᵀ` with `v` uniform, which is the stationary
/// vector whenever `P` is irreducible.
pub fn stationary_distribution(p: &TransitionMatrix) -> Result<StationaryDistribution> {
    require_irreducible(p)?;
    let n = p.n();
    let v = 1.0 / n as f64;
    // Transposed system: (I - P + 1vᵀ)ᵀ π = v.
    let mt = DMatrix::from_fn(n, n, |i, j| {
        let id = if i == j { 1.0 } else { 0.0 };
        id - p.p()[(j, i)] + v
    });
    let rhs = DVector::from_element(n, v);
    let pi = mt
        .lu()
        .solve(&rhs)
        .ok_or_else(|| Error::Singular("stationary system".into()))?;
    Ok(StationaryDistribution {
        pi: pi.iter().copied().collect(),
    })
}

/// Largest size accepted by [`kemeny_hitting_oracle`].
pub const HITTING_ORACLE_MAX_N: usize = 64;

/// `κ = Σ_j π_j m_ij` where `m_ij` is the mean first passage time from `i`
/// to `j` (`m_ii = 0`). The value does not depend on `i`; the spread across
/// rows is checked against [`tol::HITTING_SPREAD`].
pub fn kemeny_hitting_oracle(p: &TransitionMatrix) -> Result<f64> {
    let n = p.n();
    if n > HITTING_ORACLE_MAX_N {
        return Err(Error::TooLarge {
            n,
            limit: HITTING_ORACLE_MAX_N,
        });
    }
    let pi = stationary_distribution(p)?.pi;
    let mut per_row = vec![0.0; n];
    for (target, &pi_t) in pi.iter().enumerate() {
        let others: Vec<usize> = (0..n).filter(|&i| i != target).collect();
        let k = others.len();
        if k == 0 {
            continue;
        }
        let m = DMatrix::from_fn(k, k, |a, b| {
            let id = if a == b { 1.0 } else { 0.0 };
            id - p.p()[(others[a], others[b])]
        });
        let times = m
            .lu()
            .solve(&DVector::from_element(k, 1.0))
            .ok_or_else(|| Error::Singular(format!("hitting times to {target}")))?;
        for (a, &i) in others.iter().enumerate() {
            per_row[i] += pi_t * times[a];
        }
    }
    let max = per_row.iter().copied().fold(f64::MIN, f64::max);
    let min = per_row.iter().copied().fold(f64::MAX, f64::min);
    let spread = (max - min) / max.abs().max(1.0);
    if spread > tol::HITTING_SPREAD {
        return Err(Error::OracleMismatch(spread));
    }
    Ok(per_row.iter().sum::<f64>() / n as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_unit_edges(n, &edges).unwrap()
    }

    fn star(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, n - 1)).collect();
        Graph::from_unit_edges(n, &edges).unwrap()
    }

    fn triangle() -> Graph {
        Graph::from_unit_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn tm(g: &Graph) -> TransitionMatrix {
        transition_matrix(g).unwrap()
    }

    #[test]
    fn star_spectrum() {
        let s = spectrum(&tm(&star(8)));
        assert!((s.eigenvalues[0] + 1.0).abs() < 1e-12);
        assert!((s.eigenvalues[7] - 1.0).abs() < 1e-12);
        for &l in &s.eigenvalues[1..7] {
            assert!(l.abs() < 1e-12);
        }
        assert_eq!(s.multiplicity_of_one, 1);
    }

    #[test]
    fn path3_spectrum() {
        let s = spectrum(&tm(&path(3)));
        for (got, want) in s.eigenvalues.iter().zip([-1.0, 0.0, 1.0]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn disconnected_has_two_unit_eigenvalues() {
        let g = Graph::from_unit_edges(5, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        assert_eq!(spectrum(&tm(&g)).multiplicity_of_one, 2);
        assert_eq!(
            kemeny_spectral(&tm(&g)),
            Err(Error::Disconnected { components: 2 })
        );
        assert!(matches!(
            kemeny_trace(&tm(&g), None),
            Err(Error::Disconnected { .. })
        ));
    }

    #[test]
    fn small_kemeny_values() {
        assert!((kemeny(&star(8)).unwrap() - 6.5).abs() < 1e-12);
        assert!((kemeny(&path(3)).unwrap() - 1.5).abs() < 1e-12);
        assert!((kemeny(&triangle()).unwrap() - 4.0 / 3.0).abs() < 1e-12);
        // K_4 plus a pendant vertex: 3·2/4 + 28/14.
        let g =
            Graph::from_unit_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])
                .unwrap();
        assert!((kemeny(&g).unwrap() - 3.5).abs() < 1e-12);
    }

    #[test]
    fn trace_route() {
        let p = tm(&star(8));
        assert!((kemeny_trace(&p, None).unwrap() - 6.5).abs() < 1e-12);
        let p3 = tm(&path(3));
        let a = kemeny_trace(&p3, Some(&[1.0, 0.0, 0.0])).unwrap();
        let pi = stationary_distribution(&p3).unwrap().pi;
        let b = kemeny_trace(&p3, Some(&pi)).unwrap();
        assert!((a - b).abs() < 1e-10);
        assert!((a - 1.5).abs() < 1e-12);
        assert!(kemeny_trace(&p3, Some(&[0.5, 0.0, 0.0])).is_err());
    }

    #[test]
    fn regularized_limits() {
        let p = tm(&path(10));
        let k = kemeny_spectral(&p).unwrap();
        let small = kemeny_regularized(&p, 1e-9).unwrap();
        assert!((small - 9.0).abs() < 1e-6);
        let near = kemeny_regularized(&p, 1.0 - 1e-6).unwrap();
        assert!((near - k).abs() <= 1e-4 * k);
        assert!(kemeny_regularized(&p, 1.0).is_err());
        assert!(kemeny_regularized(&p, 0.0).is_err());
    }

    #[test]
    fn regularized_disconnected_decomposes() {
        let two_paths = Graph::from_unit_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let r = 0.9;
        let whole = kemeny_regularized(&tm(&two_paths), r).unwrap();
        // (m-1)/(1-r) plus the regularized constants of the two components.
        let part = kemeny_regularized(&tm(&path(3)), r).unwrap();
        let expected = 1.0 / (1.0 - r) + 2.0 * part;
        assert!((whole - expected).abs() < 1e-9);
    }

    #[test]
    fn stationary_vectors() {
        let pi = stationary_distribution(&tm(&path(3))).unwrap().pi;
        for (got, want) in pi.iter().zip([0.25, 0.5, 0.25]) {
            assert!((got - want).abs() < 1e-14);
        }
        let pi = stationary_distribution(&tm(&star(8))).unwrap().pi;
        assert!((pi[7] - 0.5).abs() < 1e-14);
        assert!((pi[0] - 1.0 / 14.0).abs() < 1e-14);
    }

    #[test]
    fn hitting_oracle_values() {
        for (g, want) in [(star(8), 6.5), (path(3), 1.5), (triangle(), 4.0 / 3.0)] {
            let got = kemeny_hitting_oracle(&tm(&g)).unwrap();
            assert!((got - want).abs() < 1e-10, "{got} vs {want}");
        }
        assert!(matches!(
            kemeny_hitting_oracle(&tm(&path(65))),
            Err(Error::TooLarge { .. })
        ));
    }
}
