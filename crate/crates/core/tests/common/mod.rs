//! Dense reference computations shared by the integration tests. They use
//! only nalgebra and the adjacency matrix, never the crate's own routes.
#![allow(dead_code)]

use std::collections::VecDeque;

use kemeny::{EdgeId, Graph};
use nalgebra::DMatrix;

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

pub fn degrees(a: &DMatrix<f64>) -> Vec<f64> {
    (0..a.nrows()).map(|i| a.row(i).sum()).collect()
}

pub fn walk(a: &DMatrix<f64>) -> DMatrix<f64> {
    let d = degrees(a);
    DMatrix::from_fn(a.nrows(), a.ncols(), |i, j| a[(i, j)] / d[i])
}

/// `trace((I - P + 1πᵀ)⁻¹) - 1` with `π ∝ d`.
pub fn kemeny_fundamental(a: &DMatrix<f64>) -> f64 {
    let n = a.nrows();
    let d = degrees(a);
    let total: f64 = d.iter().sum();
    let p = walk(a);
    let m = DMatrix::from_fn(n, n, |i, j| {
        let id = if i == j { 1.0 } else { 0.0 };
        id - p[(i, j)] + d[j] / total
    });
    m.try_inverse().expect("irreducible walk").trace() - 1.0
}

/// Eigenvalues of the walk, ascending.
pub fn walk_eigenvalues(a: &DMatrix<f64>) -> Vec<f64> {
    let d = degrees(a);
    let n = a.nrows();
    let s = DMatrix::from_fn(n, n, |i, j| a[(i, j)] / (d[i] * d[j]).sqrt());
    let mut ev: Vec<f64> = s.symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Vertices reachable from `start` once the edge `e` is ignored, sorted.
pub fn side_of(a: &DMatrix<f64>, e: EdgeId, start: usize) -> Vec<usize> {
    let n = a.nrows();
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for v in 0..n {
            let removed = (u == e.u && v == e.v) || (u == e.v && v == e.u);
            if v != u && a[(u, v)] > 0.0 && !removed && !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    (0..n).filter(|&v| seen[v]).collect()
}

/// Adjacency of the component on `side`, with the edge weight of `e` added
/// as a loop at its endpoint.
pub fn loop_augmented(a: &DMatrix<f64>, e: EdgeId, side: &[usize]) -> DMatrix<f64> {
    let w = a[(e.u, e.v)];
    DMatrix::from_fn(side.len(), side.len(), |i, j| {
        let (x, y) = (side[i], side[j]);
        let extra = if x == y && (x == e.u || x == e.v) {
            w
        } else {
            0.0
        };
        a[(x, y)] + extra
    })
}

/// `P₁₁ + P₁₂(I - P₂₂)⁻¹P₂₁` for the block on `keep`.
pub fn complement(p: &DMatrix<f64>, keep: &[usize]) -> DMatrix<f64> {
    let drop: Vec<usize> = (0..p.nrows()).filter(|v| !keep.contains(v)).collect();
    let block =
        |r: &[usize], c: &[usize]| DMatrix::from_fn(r.len(), c.len(), |i, j| p[(r[i], c[j])]);
    let inner = DMatrix::identity(drop.len(), drop.len()) - block(&drop, &drop);
    let inv = inner.try_inverse().expect("I - P22 invertible");
    block(keep, keep) + block(keep, &drop) * inv * block(&drop, keep)
}

/// All bridges by deleting each edge and testing connectivity.
pub fn bridges(g: &Graph) -> Vec<EdgeId> {
    let a = g.adjacency();
    g.edges()
        .into_iter()
        .filter(|e| !e.is_loop() && !side_of(a, *e, e.u).contains(&e.v))
        .collect()
}
