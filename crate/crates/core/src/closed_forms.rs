//! Closed-form Kemeny constants and cut-edge centralities for one-path
//! graphs `A_n(α, β)`, paths with one loop `F_{n,k}`, and three-branch trees
//! `E_{p,q,r}` (optionally with a unit loop at the tip `p + 1` of the first
//! branch), plus block-structured builders for 3- and 4-branch trees.
//!
//! Integer-parameter formulas are evaluated in exact rational arithmetic and
//! rounded once, so they serve as high-precision references.
//!
//! Vertex numbering of branch trees (1-based, as in the labels of the built
//! graphs): the root is vertex 1, the first branch occupies `2..=p+1` going
//! outward from the root, the second `p+2..=p+q+1`, and so on. Branch tips
//! are `p+1`, `p+q+1`, `p+q+r+1`, ...

use nalgebra::DMatrix;
use num_rational::Ratio;

use crate::error::{invalid, Result};
use crate::graph::Graph;

type Q = Ratio<i128>;

fn to_f64(q: Q) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

/// One-path graph with loop weights `alpha`, `beta` at its end vertices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathSpec {
    pub n: usize,
    pub alpha: f64,
    pub beta: f64,
}

impl PathSpec {
    pub fn new(n: usize, alpha: f64, beta: f64) -> Result<Self> {
        if n < 2 {
            return Err(invalid("n", format!("path length {n} < 2")));
        }
        if !(alpha >= 0.0 && beta >= 0.0 && alpha.is_finite() && beta.is_finite()) {
            return Err(invalid(
                "alpha/beta",
                "loop weights must be finite and nonnegative",
            ));
        }
        Ok(PathSpec { n, alpha, beta })
    }

    /// Adjacency `A_n(α, β) = trid(1, 0, 1) + α e_1e_1ᵀ + β e_ne_nᵀ`.
    pub fn graph(&self) -> Graph {
        let n = self.n;
        let mut a = DMatrix::zeros(n, n);
        for i in 0..n - 1 {
            a[(i, i + 1)] = 1.0;
            a[(i + 1, i)] = 1.0;
        }
        a[(0, 0)] += self.alpha;
        a[(n - 1, n - 1)] += self.beta;
        Graph::from_adjacency(a).expect("valid path adjacency")
    }

    pub fn kemeny(&self) -> f64 {
        kappa_path_unchecked(self.n, self.alpha, self.beta)
    }
}

fn kappa_path_unchecked(n: usize, alpha: f64, beta: f64) -> f64 {
    if n == 1 {
        return 0.0;
    }
    let nf = n as f64;
    let numerator =
        2.0 / 3.0 * nf * nf + nf * (alpha + beta - 4.0 / 3.0) + alpha * beta - alpha - beta + 1.0;
    (nf - 1.0) * numerator / (2.0 * nf + alpha + beta - 2.0)
}

/// `κ_n(α,β) = (n-1)(⅔n² + n(α+β-4/3) + αβ - α - β + 1) / (2n + α + β - 2)`.
pub fn kappa_path(n: usize, alpha: f64, beta: f64) -> Result<f64> {
    Ok(PathSpec::new(n, alpha, beta)?.kemeny())
}

/// Centrality of the edge `(m, m+1)` (1-based) of `A_n(α, β)`:
/// `κ_n(α,β) - κ_m(α,1) - κ_{n-m}(β,1)`.
pub fn centrality_path_edge(n: usize, m: usize, alpha: f64, beta: f64) -> Result<f64> {
    PathSpec::new(n, alpha, beta)?;
    if m < 1 || m >= n {
        return Err(invalid(
            "m",
            format!("edge index {m} outside 1..={}", n - 1),
        ));
    }
    Ok(kappa_path_unchecked(n, alpha, beta)
        - kappa_path_unchecked(m, alpha, 1.0)
        - kappa_path_unchecked(n - m, beta, 1.0))
}

fn kappa_f_exact(n: usize, k: usize) -> Q {
    let (n, k) = (n as i128, k as i128);
    Q::new(
        2 * n * n * n - 3 * n * n + (7 - 6 * k) * n + 6 * k * (k - 1),
        6 * n - 3,
    )
}

/// `κ(F_{n,k}) = (2n³ - 3n² + (7-6k)n + 6k(k-1)) / (6n - 3)` for the path on
/// `n` vertices with a unit loop at vertex `k` (1-based).
pub fn kappa_f(n: usize, k: usize) -> Result<f64> {
    if n < 1 || k < 1 || k > n {
        return Err(invalid("k", format!("loop vertex {k} outside 1..={n}")));
    }
    Ok(to_f64(kappa_f_exact(n, k)))
}

/// The graph `F_{n,k}`.
pub fn path_with_loop(n: usize, k: usize) -> Result<Graph> {
    if n < 1 || k < 1 || k > n {
        return Err(invalid("k", format!("loop vertex {k} outside 1..={n}")));
    }
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_unit_edges(n, &edges)?.add_loop(k - 1, 1.0)
}

/// Tree made of branches of the given lengths hanging from one root, with
/// an optional unit loop at `loop_vertex` (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchTreeSpec {
    pub branch_lengths: Vec<usize>,
    pub loop_vertex: Option<usize>,
}

impl BranchTreeSpec {
    pub fn new(branch_lengths: Vec<usize>) -> Self {
        BranchTreeSpec {
            branch_lengths,
            loop_vertex: None,
        }
    }

    pub fn with_loop(mut self, vertex: usize) -> Self {
        self.loop_vertex = Some(vertex);
        self
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.branch_lengths.iter().sum::<usize>()
    }
}

/// Adjacency and distance matrices of a tree of branches, assembled from the
/// blocks `W_n = trid(1,0,1)`, `u_n = (1..n)`, `T_n = (|i-j|)` and
/// `H_{mn} = (i+j)`. Any number of branches of length `>= 1`.
pub(crate) fn branch_blocks(spec: &BranchTreeSpec) -> Result<(Graph, DMatrix<u64>)> {
    if spec.branch_lengths.is_empty() {
        return Err(invalid("branch_lengths", "no branches"));
    }
    if let Some(pos) = spec.branch_lengths.iter().position(|&l| l == 0) {
        return Err(invalid(
            "branch_lengths",
            format!("branch {} has length 0", pos + 1),
        ));
    }
    let n = spec.vertex_count();
    let mut offsets = Vec::with_capacity(spec.branch_lengths.len());
    let mut next = 1;
    for &len in &spec.branch_lengths {
        offsets.push(next);
        next += len;
    }

    let mut a = DMatrix::<f64>::zeros(n, n);
    let mut delta = DMatrix::<u64>::zeros(n, n);
    for (b, (&off, &len)) in offsets.iter().zip(&spec.branch_lengths).enumerate() {
        // e_{1,n}: root to the first vertex of the branch.
        a[(0, off)] = 1.0;
        a[(off, 0)] = 1.0;
        for i in 0..len {
            // W_len
            if i + 1 < len {
                a[(off + i, off + i + 1)] = 1.0;
                a[(off + i + 1, off + i)] = 1.0;
            }
            // u_len
            delta[(0, off + i)] = (i + 1) as u64;
            delta[(off + i, 0)] = (i + 1) as u64;
            // T_len
            for j in 0..len {
                delta[(off + i, off + j)] = i.abs_diff(j) as u64;
            }
        }
        // H blocks against later branches.
        for (&off2, &len2) in offsets.iter().zip(&spec.branch_lengths).skip(b + 1) {
            for i in 0..len {
                for j in 0..len2 {
                    let h = (i + 1 + j + 1) as u64;
                    delta[(off + i, off2 + j)] = h;
                    delta[(off2 + j, off + i)] = h;
                }
            }
        }
    }
    if let Some(k) = spec.loop_vertex {
        if k < 1 || k > n {
            return Err(invalid("loop_vertex", format!("{k} outside 1..={n}")));
        }
        a[(k - 1, k - 1)] += 1.0;
    }
    Ok((Graph::from_adjacency(a)?, delta))
}

/// Builds a 3- or 4-branch tree with its distance matrix.
pub fn build_branch_tree(spec: &BranchTreeSpec) -> Result<(Graph, DMatrix<u64>)> {
    let k = spec.branch_lengths.len();
    if k != 3 && k != 4 {
        return Err(invalid(
            "branch_lengths",
            format!("{k} branches, expected 3 or 4"),
        ));
    }
    branch_blocks(spec)
}

fn check_branches(p: usize, q: usize, r: usize) -> Result<()> {
    if p < 1 || q < 1 || r < 1 {
        return Err(invalid(
            "p/q/r",
            format!("branch lengths ({p}, {q}, {r}) must all be at least 1"),
        ));
    }
    Ok(())
}

fn kappa_e_exact(p: usize, q: usize, r: usize) -> Q {
    let (p, q, r) = (p as i128, q as i128, r as i128);
    let s = p + q + r;
    Q::new(2 * s * s + 1, 6) - Q::new(2 * p * q * r, s)
}

/// Also valid for `p = 0`, where `E_{0,q,r,1} = F_{q+r+1,q+1}`.
fn kappa_e_loop_exact(p: usize, q: usize, r: usize) -> Q {
    let (p, q, r) = (p as i128, q as i128, r as i128);
    let s = p + q + r;
    Q::new(s * (s + 1), 3) - Q::new(2 * q * r * (2 * p + 1), 2 * s + 1)
}

/// `κ(E_{p,q,r}) = (2s² + 1)/6 - 2pqr/s`, `s = p + q + r`.
pub fn kappa_e(p: usize, q: usize, r: usize) -> Result<f64> {
    check_branches(p, q, r)?;
    Ok(to_f64(kappa_e_exact(p, q, r)))
}

/// `κ(E_{p,q,r,p+1}) = s(s+1)/3 - 2qr(2p+1)/(2s+1)`.
pub fn kappa_e_loop(p: usize, q: usize, r: usize) -> Result<f64> {
    check_branches(p, q, r)?;
    Ok(to_f64(kappa_e_loop_exact(p, q, r)))
}

fn check_branch_edge(i: usize, p: usize, q: usize, r: usize) -> Result<()> {
    check_branches(p, q, r)?;
    if i < 1 || i > p {
        return Err(invalid("i", format!("edge index {i} outside 1..={p}")));
    }
    Ok(())
}

/// Centrality of the edge `(i, i+1)` of the first branch of `E_{p,q,r}`:
/// `c(i) = ⅔α_iβ_i + 2qr(2i-1)/(2i-1+2q+2r) - γ` with `α_i = p+1-i`,
/// `β_i = q+r+i` and `γ = s/3 - 1/6 + 2pqr/s`.
pub fn centrality_e_branch(i: usize, p: usize, q: usize, r: usize) -> Result<f64> {
    check_branch_edge(i, p, q, r)?;
    let (ii, p, q, r) = (i as i128, p as i128, q as i128, r as i128);
    let s = p + q + r;
    let alpha = p + 1 - ii;
    let beta = q + r + ii;
    let gamma = Q::new(s, 3) - Q::new(1, 6) + Q::new(2 * p * q * r, s);
    let c = Q::new(2 * alpha * beta, 3)
        + Q::new(2 * q * r * (2 * ii - 1), 2 * ii - 1 + 2 * q + 2 * r)
        - gamma;
    Ok(to_f64(c))
}

/// The same centrality from the component decomposition: removing `(i,i+1)`
/// leaves `F_{p-i+1,1}` and `E_{i-1,q,r,i}` for `i > 1`, and `F_{p,1}` and
/// `F_{q+r+1,q+1}` for `i = 1`.
pub fn centrality_e_branch_by_components(i: usize, p: usize, q: usize, r: usize) -> Result<f64> {
    check_branch_edge(i, p, q, r)?;
    let whole = kappa_e_exact(p, q, r);
    let c = if i == 1 {
        whole - kappa_f_exact(p, 1) - kappa_f_exact(q + r + 1, q + 1)
    } else {
        whole - kappa_e_loop_exact(i - 1, q, r) - kappa_f_exact(p - i + 1, 1)
    };
    Ok(to_f64(c))
}

/// `1ᵀT_n1 = (n³ - n)/3`.
pub fn toeplitz_sum(n: usize) -> i64 {
    let n = n as i64;
    (n * n * n - n) / 3
}

/// `1_qᵀH_{qp}1_p = pq(p + q + 2)/2`.
pub fn hankel_sum(p: usize, q: usize) -> i64 {
    let (p, q) = (p as i64, q as i64);
    p * q * (p + q + 2) / 2
}

/// Exact quadratic forms of the distance matrix of `E_{p,q,r}`, with
/// `v = e_1 - e_{p+1} - e_{p+q+1} - e_{p+q+r+1}` so that `d = 2·1 + v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BranchIdentities {
    pub ones_delta_ones: i64,
    pub v_delta_v: i64,
    pub v_delta_ones: i64,
    pub d_delta_d: i64,
    /// `dᵀΔe_{p+1}`.
    pub d_delta_tip: i64,
}

pub fn branch_identities(p: usize, q: usize, r: usize) -> BranchIdentities {
    let (p, q, r) = (p as i64, q as i64, r as i64);
    let s = p + q + r;
    BranchIdentities {
        ones_delta_ones: (s * s * s + 2 * s) / 3 + s * s - 2 * p * q * r,
        v_delta_v: 2 * s,
        v_delta_ones: -s * s - s,
        d_delta_d: (4 * s * s * s + 2 * s) / 3 - 8 * p * q * r,
        d_delta_tip: s * s - 2 * q * r,
    }
}
