//! Combinatorial expressions for Kemeny's constant.
//!
//! * the ratio of weighted directed 2-forests to weighted directed spanning
//!   trees in the loop-free digraph of `P`, by exhaustive enumeration;
//! * `κ = dᵀΣd / (4mτ)` for simple graphs, where `σ_jk` counts spanning
//!   2-tree forests separating `j` and `k`, and its extension to one loop of
//!   weight `w` at vertex `k`: `(dᵀΣd + 2w·dᵀΣe_k) / (2τ(2m + w))`;
//! * the tree specialisation `Σ = Δ` (distance matrix), `τ = 1`;
//! * two closed expressions for birth-death (tridiagonal) chains.
//!
//! The combinatorial routes are only defined for unit-weight graphs and are
//! guarded by hard size limits.

use std::collections::VecDeque;

use nalgebra::DMatrix;
use num_rational::Ratio;

use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, TransitionMatrix};

/// Largest `n` accepted by [`kemeny_forest_bruteforce`].
pub const FOREST_MAX_N: usize = 9;
/// Largest `n` accepted by [`sigma_bruteforce`].
pub const SIGMA_MAX_N: usize = 10;

/// Total weights of the directed spanning trees (`F₁`) and of the directed
/// spanning 2-forests (`F₂`) of the loop-free digraph of `P`, every tree
/// counted once per choice of sink.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForestWeights {
    pub tree_weight_sum: f64,
    pub forest_weight_sum: f64,
}

impl ForestWeights {
    pub fn kemeny(&self) -> f64 {
        self.forest_weight_sum / self.tree_weight_sum
    }
}

/// `σ_jk` = number of spanning forests of two trees with `j` and `k` in
/// different trees; zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaMatrix(pub DMatrix<u64>);

impl SigmaMatrix {
    pub fn n(&self) -> usize {
        self.0.nrows()
    }

    /// `xᵀΣy`.
    pub fn bilinear(&self, x: &[f64], y: &[f64]) -> f64 {
        x.iter()
            .enumerate()
            .map(|(j, xj)| {
                let row: f64 = y
                    .iter()
                    .enumerate()
                    .map(|(k, yk)| self.0[(j, k)] as f64 * yk)
                    .sum();
                xj * row
            })
            .sum()
    }

    fn validate(&self, n: usize) -> Result<()> {
        if self.0.nrows() != n || self.0.ncols() != n {
            return Err(Error::Inconsistent(format!(
                "Σ is {}x{} for {n} vertices",
                self.0.nrows(),
                self.0.ncols()
            )));
        }
        for j in 0..n {
            if self.0[(j, j)] != 0 {
                return Err(Error::Inconsistent(format!("σ_{j}{j} is nonzero")));
            }
            for k in 0..j {
                if self.0[(j, k)] != self.0[(k, j)] {
                    return Err(Error::Inconsistent("Σ is not symmetric".into()));
                }
            }
        }
        Ok(())
    }
}

/// Minimal union-find for forest enumeration.
#[derive(Clone)]
struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }

    fn find(&self, mut x: usize) -> usize {
        while self.0[x] != x {
            x = self.0[x];
        }
        x
    }
}

/// Calls `visit` with the indices of every acyclic subset of exactly `size`
/// edges.
fn for_each_forest(
    n: usize,
    edges: &[(usize, usize)],
    size: usize,
    visit: &mut dyn FnMut(&[usize]),
) {
    fn rec(
        edges: &[(usize, usize)],
        start: usize,
        size: usize,
        chosen: &mut Vec<usize>,
        dsu: &Dsu,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if chosen.len() == size {
            visit(chosen);
            return;
        }
        let need = size - chosen.len();
        for i in start..edges.len() {
            if edges.len() - i < need {
                break;
            }
            let (a, b) = edges[i];
            let (ra, rb) = (dsu.find(a), dsu.find(b));
            if ra == rb {
                continue;
            }
            let mut next = dsu.clone();
            next.0[ra] = rb;
            chosen.push(i);
            rec(edges, i + 1, size, chosen, &next, visit);
            chosen.pop();
        }
    }
    if size <= n.saturating_sub(1) {
        rec(
            edges,
            0,
            size,
            &mut Vec::with_capacity(size),
            &Dsu::new(n),
            visit,
        );
    }
}

/// Component label per vertex for the forest formed by `chosen`.
fn forest_labels(n: usize, adj: &[Vec<usize>]) -> (Vec<usize>, usize) {
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = count;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if label[v] == usize::MAX {
                    label[v] = count;
                    stack.push(v);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

fn forest_adjacency(n: usize, edges: &[(usize, usize)], chosen: &[usize]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &i in chosen {
        let (a, b) = edges[i];
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

/// `Σ_sink Π_{u ≠ sink} p[u][parent(u)]` over the tree of the forest that
/// contains `members`, arcs oriented toward the sink.
fn rooted_weight_sum(p: &DMatrix<f64>, adj: &[Vec<usize>], members: &[usize]) -> f64 {
    let n = adj.len();
    let mut total = 0.0;
    let mut parent = vec![usize::MAX; n];
    for &sink in members {
        let mut weight = 1.0;
        parent[sink] = sink;
        let mut queue = VecDeque::from([sink]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if parent[v] == usize::MAX {
                    parent[v] = u;
                    weight *= p[(v, u)];
                    queue.push_back(v);
                }
            }
        }
        for &m in members {
            parent[m] = usize::MAX;
        }
        total += weight;
    }
    total
}

/// Enumerates `F₁` and `F₂` for the loop-free digraph of `P`.
pub fn forest_weights(p: &TransitionMatrix) -> Result<ForestWeights> {
    let n = p.n();
    if n > FOREST_MAX_N {
        return Err(Error::TooLarge {
            n,
            limit: FOREST_MAX_N,
        });
    }
    let components = p.components().len();
    if components != 1 {
        return Err(Error::Disconnected { components });
    }
    let pm = p.p();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if pm[(i, j)] > 0.0 || pm[(j, i)] > 0.0 {
                edges.push((i, j));
            }
        }
    }

    let mut tree_weight_sum = 0.0;
    for_each_forest(n, &edges, n - 1, &mut |chosen| {
        let adj = forest_adjacency(n, &edges, chosen);
        let all: Vec<usize> = (0..n).collect();
        tree_weight_sum += rooted_weight_sum(pm, &adj, &all);
    });

    let mut forest_weight_sum = 0.0;
    if n >= 2 {
        for_each_forest(n, &edges, n - 2, &mut |chosen| {
            let adj = forest_adjacency(n, &edges, chosen);
            let (label, _) = forest_labels(n, &adj);
            let first: Vec<usize> = (0..n).filter(|&v| label[v] == 0).collect();
            let second: Vec<usize> = (0..n).filter(|&v| label[v] == 1).collect();
            forest_weight_sum +=
                rooted_weight_sum(pm, &adj, &first) * rooted_weight_sum(pm, &adj, &second);
        });
    }
    Ok(ForestWeights {
        tree_weight_sum,
        forest_weight_sum,
    })
}

/// `κ = Σ_{F∈F₂} wt(F) / Σ_{T∈F₁} wt(T)`, by exhaustive enumeration
/// (`n ≤ 9`).
pub fn kemeny_forest_bruteforce(p: &TransitionMatrix) -> Result<f64> {
    Ok(forest_weights(p)?.kemeny())
}

fn require_simple_connected(g: &Graph) -> Result<()> {
    if !g.is_simple_unweighted() {
        return Err(Error::NotSimpleUnweighted);
    }
    let components = g.connected_components().len();
    if components != 1 {
        return Err(Error::Disconnected { components });
    }
    Ok(())
}

/// Enumerates spanning trees and spanning 2-tree forests of a simple
/// connected graph (`n ≤ 10`). Returns `(Σ, τ)`.
pub fn sigma_bruteforce(g: &Graph) -> Result<(SigmaMatrix, u64)> {
    let n = g.n();
    if n > SIGMA_MAX_N {
        return Err(Error::TooLarge {
            n,
            limit: SIGMA_MAX_N,
        });
    }
    require_simple_connected(g)?;
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();

    let mut tau = 0u64;
    for_each_forest(n, &edges, n - 1, &mut |_| tau += 1);

    let mut sigma = DMatrix::<u64>::zeros(n, n);
    if n >= 2 {
        for_each_forest(n, &edges, n - 2, &mut |chosen| {
            let adj = forest_adjacency(n, &edges, chosen);
            let (label, _) = forest_labels(n, &adj);
            for j in 0..n {
                for k in 0..n {
                    if label[j] != label[k] {
                        sigma[(j, k)] += 1;
                    }
                }
            }
        });
    }
    Ok((SigmaMatrix(sigma), tau))
}

fn check_sigma_inputs(g: &Graph, sigma: &SigmaMatrix, tau: u64, m: usize) -> Result<Vec<f64>> {
    require_simple_connected(g)?;
    sigma.validate(g.n())?;
    if tau == 0 {
        return Err(Error::Inconsistent("τ must be positive".into()));
    }
    if m != g.edge_count() {
        return Err(Error::Inconsistent(format!(
            "m = {m} but the graph has {} edges",
            g.edge_count()
        )));
    }
    Ok(g.degrees().0)
}

/// `κ(G) = dᵀΣd / (4mτ)`.
pub fn kemeny_sigma(g: &Graph, sigma: &SigmaMatrix, tau: u64, m: usize) -> Result<f64> {
    let d = check_sigma_inputs(g, sigma, tau, m)?;
    Ok(sigma.bilinear(&d, &d) / (4.0 * m as f64 * tau as f64))
}

/// Kemeny's constant of `g` with a loop of weight `w` added at `k`:
/// `(dᵀΣd + 2w·dᵀΣe_k) / (2τ(2m + w))`, with `d` the loop-free degrees.
pub fn kemeny_sigma_loop(
    g: &Graph,
    k: usize,
    w: f64,
    sigma: &SigmaMatrix,
    tau: u64,
    m: usize,
) -> Result<f64> {
    if !(w.is_finite() && w > 0.0) {
        return Err(invalid("w", format!("loop weight {w} must be positive")));
    }
    if k >= g.n() {
        return Err(invalid("k", format!("vertex {k} out of range")));
    }
    let d = check_sigma_inputs(g, sigma, tau, m)?;
    let mut ek = vec![0.0; g.n()];
    ek[k] = 1.0;
    let num = sigma.bilinear(&d, &d) + 2.0 * w * sigma.bilinear(&d, &ek);
    Ok(num / (2.0 * tau as f64 * (2.0 * m as f64 + w)))
}

/// True for connected graphs with exactly `n - 1` non-loop edges.
pub fn is_tree(g: &Graph) -> bool {
    g.n() >= 1 && g.edge_count() + 1 == g.n() && g.is_connected()
}

/// Graph distances of a tree by breadth-first search from every vertex.
/// Loops are ignored.
pub fn tree_distance_matrix(g: &Graph) -> Result<DMatrix<u64>> {
    if !is_tree(g) {
        return Err(Error::NotATree);
    }
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|u| g.neighbors(u).collect()).collect();
    let mut delta = DMatrix::<u64>::zeros(n, n);
    for s in 0..n {
        let mut dist = vec![u64::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if dist[v] == u64::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        for t in 0..n {
            delta[(s, t)] = dist[t];
        }
    }
    Ok(delta)
}

fn require_plain_tree(g: &Graph) -> Result<()> {
    if !g.is_simple_unweighted() {
        return Err(Error::NotSimpleUnweighted);
    }
    if !is_tree(g) {
        return Err(Error::NotATree);
    }
    Ok(())
}

/// `κ = dᵀΔd / (4(n-1))` for a loop-free unit-weight tree.
pub fn kemeny_tree(g: &Graph) -> Result<f64> {
    require_plain_tree(g)?;
    let n = g.n();
    let sigma = SigmaMatrix(tree_distance_matrix(g)?);
    let d = g.degrees().0;
    if n == 1 {
        return Ok(0.0);
    }
    Ok(sigma.bilinear(&d, &d) / (4.0 * (n - 1) as f64))
}

/// `κ = (dᵀΔd + 2w·dᵀΔe_k) / (2(2n - 2 + w))` for a loop-free unit-weight
/// tree with a loop of weight `w` added at `k`.
pub fn kemeny_tree_loop(g: &Graph, k: usize, w: f64) -> Result<f64> {
    require_plain_tree(g)?;
    if !(w.is_finite() && w > 0.0) {
        return Err(invalid("w", format!("loop weight {w} must be positive")));
    }
    if k >= g.n() {
        return Err(invalid("k", format!("vertex {k} out of range")));
    }
    let n = g.n();
    let sigma = SigmaMatrix(tree_distance_matrix(g)?);
    let d = g.degrees().0;
    let mut ek = vec![0.0; n];
    ek[k] = 1.0;
    let num = sigma.bilinear(&d, &d) + 2.0 * w * sigma.bilinear(&d, &ek);
    Ok(num / (2.0 * (2.0 * n as f64 - 2.0 + w)))
}

/// Exact rational value of the tree formulas, with an optional loop of
/// integer weight. Used as a high-precision reference.
pub fn kemeny_tree_exact(g: &Graph, loop_at: Option<(usize, i64)>) -> Result<Ratio<i128>> {
    require_plain_tree(g)?;
    let n = g.n();
    if n == 1 {
        return Ok(Ratio::from_integer(0));
    }
    let delta = tree_distance_matrix(g)?;
    let d: Vec<i128> = g.degrees().0.iter().map(|&x| x as i128).collect();
    let mut dd = 0i128;
    for j in 0..n {
        for k in 0..n {
            dd += d[j] * delta[(j, k)] as i128 * d[k];
        }
    }
    match loop_at {
        None => Ok(Ratio::new(dd, 4 * (n as i128 - 1))),
        Some((k, w)) => {
            if w <= 0 {
                return Err(invalid("w", format!("loop weight {w} must be positive")));
            }
            if k >= n {
                return Err(invalid("k", format!("vertex {k} out of range")));
            }
            let w = w as i128;
            let dk: i128 = (0..n).map(|j| d[j] * delta[(j, k)] as i128).sum();
            Ok(Ratio::new(dd + 2 * w * dk, 2 * (2 * n as i128 - 2 + w)))
        }
    }
}

/// Birth-death chain on states `0..n` with up-probabilities `λ_i`,
/// down-probabilities `μ_i` and holding probabilities `θ_i`.
///
/// Indices are 0-based; `λ_{n-1} = 0` and `μ_0 = 0` by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct BirthDeathChain {
    lambda: Vec<f64>,
    mu: Vec<f64>,
    theta: Vec<f64>,
}

/// Kemeny's constant of a birth-death chain by both closed expressions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BirthDeathKemeny {
    /// Ratio of the sums of `w(j,k,p)` and `t(k)`.
    pub forest_sum: f64,
    /// `Σ_k σ_k(1-σ_k)/(λ_k π_k)`.
    pub stationary_form: f64,
}

impl BirthDeathChain {
    /// `up = (λ_0, …, λ_{n-2})`, `down = (μ_1, …, μ_{n-1})`.
    pub fn new(up: &[f64], down: &[f64]) -> Result<Self> {
        if up.len() != down.len() {
            return Err(Error::Inconsistent(format!(
                "{} up-rates but {} down-rates",
                up.len(),
                down.len()
            )));
        }
        let n = up.len() + 1;
        if n < 2 {
            return Err(invalid("n", "a chain needs at least two states"));
        }
        for (name, rates) in [("lambda", up), ("mu", down)] {
            if let Some(bad) = rates.iter().find(|&&x| !(x > 0.0 && x <= 1.0)) {
                return Err(invalid(name, format!("rate {bad} is outside (0, 1]")));
            }
        }
        let mut lambda = up.to_vec();
        lambda.push(0.0);
        let mut mu = vec![0.0];
        mu.extend_from_slice(down);
        let mut theta = Vec::with_capacity(n);
        for i in 0..n {
            let t = 1.0 - lambda[i] - mu[i];
            if t < -1e-12 {
                return Err(invalid(
                    "theta",
                    format!("state {i} has λ + μ = {}", 1.0 - t),
                ));
            }
            theta.push(t.max(0.0));
        }
        Ok(BirthDeathChain { lambda, mu, theta })
    }

    /// Reads a tridiagonal walk matrix as a birth-death chain.
    pub fn from_transition(p: &TransitionMatrix) -> Result<Self> {
        let n = p.n();
        let pm = p.p();
        for i in 0..n {
            for j in 0..n {
                if i.abs_diff(j) > 1 && pm[(i, j)] != 0.0 {
                    return Err(Error::Inconsistent(
                        "transition matrix is not tridiagonal".into(),
                    ));
                }
            }
        }
        let up: Vec<f64> = (0..n - 1).map(|i| pm[(i, i + 1)]).collect();
        let down: Vec<f64> = (1..n).map(|i| pm[(i, i - 1)]).collect();
        Self::new(&up, &down)
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn lambda(&self) -> &[f64] {
        &self.lambda
    }

    pub fn mu(&self) -> &[f64] {
        &self.mu
    }

    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    pub fn transition(&self) -> DMatrix<f64> {
        let n = self.n();
        DMatrix::from_fn(n, n, |i, j| {
            if j == i {
                self.theta[i]
            } else if j == i + 1 {
                self.lambda[i]
            } else if i == j + 1 {
                self.mu[i]
            } else {
                0.0
            }
        })
    }

    /// `π_j ∝ Π_{ℓ<j} λ_ℓ / Π_{1≤ℓ≤j} μ_ℓ`, normalised to sum one.
    pub fn stationary(&self) -> Vec<f64> {
        let n = self.n();
        let mut log_ratio = vec![0.0; n];
        for j in 1..n {
            log_ratio[j] = log_ratio[j - 1] + self.lambda[j - 1].ln() - self.mu[j].ln();
        }
        let top = log_ratio.iter().copied().fold(f64::MIN, f64::max);
        let unnorm: Vec<f64> = log_ratio.iter().map(|l| (l - top).exp()).collect();
        let total: f64 = unnorm.iter().sum();
        unnorm.iter().map(|x| x / total).collect()
    }

    /// Reversible weighted graph whose walk is this chain: `a_ij = π_i p_ij`.
    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let pi = self.stationary();
        let mut a = DMatrix::zeros(n, n);
        for i in 0..n {
            a[(i, i)] = pi[i] * self.theta[i];
            if i + 1 < n {
                let flow = pi[i] * self.lambda[i];
                a[(i, i + 1)] = flow;
                a[(i + 1, i)] = flow;
            }
        }
        Graph::from_adjacency(a).expect("stationary flows are symmetric and nonnegative")
    }
}

/// `κ = Σ_{j<k} Σ_{p=j}^{k-1} w(j,k,p) / Σ_k t(k)`, products evaluated in
/// log space relative to the largest `t(k)`.
pub fn kemeny_birth_death_forest(chain: &BirthDeathChain) -> f64 {
    let n = chain.n();
    // log_l[i] = Σ_{ℓ<i} ln λ_ℓ ; log_m[i] = Σ_{1≤ℓ≤i} ln μ_ℓ
    let mut log_l = vec![0.0; n + 1];
    let mut log_m = vec![0.0; n];
    for i in 0..n {
        log_l[i + 1] = log_l[i] + if i < n - 1 { chain.lambda[i].ln() } else { 0.0 };
        if i >= 1 {
            log_m[i] = log_m[i - 1] + chain.mu[i].ln();
        }
    }
    let lam = |a: usize, b: usize| -> f64 {
        // Π_{ℓ=a}^{b-1} λ_ℓ, empty when b <= a
        if b <= a {
            0.0
        } else {
            log_l[b] - log_l[a]
        }
    };
    let mu = |a: usize, b: usize| -> f64 {
        // Π_{ℓ=a}^{b} μ_ℓ, empty when b < a
        if b < a {
            0.0
        } else {
            log_m[b] - log_m[a - 1]
        }
    };
    let log_t: Vec<f64> = (0..n).map(|k| lam(0, k) + mu(k + 1, n - 1)).collect();
    let reference = log_t.iter().copied().fold(f64::MIN, f64::max);
    let denominator: f64 = log_t.iter().map(|l| (l - reference).exp()).sum();
    let mut numerator = 0.0;
    for j in 0..n {
        for k in j + 1..n {
            for p in j..k {
                let log_w = lam(0, j) + mu(j + 1, p) + lam(p + 1, k) + mu(k + 1, n - 1);
                numerator += (log_w - reference).exp();
            }
        }
    }
    numerator / denominator
}

/// `κ = Σ_{k=0}^{n-2} σ_k(1-σ_k) / (λ_k π_k)` with `σ_k = Σ_{j≤k} π_j`.
pub fn kemeny_birth_death_stationary(chain: &BirthDeathChain) -> f64 {
    let n = chain.n();
    let pi = chain.stationary();
    let mut tail = vec![0.0; n + 1];
    for k in (0..n).rev() {
        tail[k] = tail[k + 1] + pi[k];
    }
    let mut head = 0.0;
    let mut kappa = 0.0;
    for k in 0..n - 1 {
        head += pi[k];
        kappa += head * tail[k + 1] / (chain.lambda[k] * pi[k]);
    }
    kappa
}

pub fn kemeny_birth_death(chain: &BirthDeathChain) -> BirthDeathKemeny {
    BirthDeathKemeny {
        forest_sum: kemeny_birth_death_forest(chain),
        stationary_form: kemeny_birth_death_stationary(chain),
    }
}
