//! Numerical experiments: per-level centralities of binary trees, accuracy
//! of the direct and regularized centralities, and the branch centrality
//! profile of `E_{p,q,r}`.

use num_rational::Ratio;
use serde::Serialize;

use crate::centrality::{analyze_graph, regularized_centrality, AnalyzeOptions};
use crate::closed_forms::{centrality_e_branch, centrality_path_edge};
use crate::error::{invalid, Result};
use crate::families::{generate, FamilySpec};
use crate::forest::kemeny_tree_exact;
use crate::graph::{remove_edge_add_loops, EdgeId, Graph};

/// Levels of a binary tree of the given depth, `1..depth`, with the common
/// centrality of the edges whose lower endpoint sits at that level.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelScores {
    pub depth: usize,
    pub levels: Vec<f64>,
    /// Largest deviation between edges of the same level.
    pub spread: f64,
}

fn level_of(vertex: usize) -> usize {
    (usize::BITS - (vertex + 1).leading_zeros() - 1) as usize
}

pub fn binary_tree_levels(depth: usize) -> Result<LevelScores> {
    let g = generate(&FamilySpec::BinaryTree { depth })?;
    let report = analyze_graph(&g, &AnalyzeOptions::default())?;
    let mut by_level: Vec<Vec<f64>> = vec![Vec::new(); depth - 1];
    for rec in &report.records {
        by_level[level_of(rec.edge.v) - 1].push(rec.c);
    }
    let mut spread: f64 = 0.0;
    let levels = by_level
        .iter()
        .map(|vals| {
            let max = vals.iter().copied().fold(f64::MIN, f64::max);
            let min = vals.iter().copied().fold(f64::MAX, f64::min);
            spread = spread.max(max - min);
            vals.iter().sum::<f64>() / vals.len() as f64
        })
        .collect();
    Ok(LevelScores {
        depth,
        levels,
        spread,
    })
}

/// Per-level scores for binary trees of depths `2..=7`.
pub fn table1() -> Result<Vec<LevelScores>> {
    (2..=7).map(binary_tree_levels).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StabilityFamily {
    Path { n: usize },
    BinaryTree { depth: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StabilityRow {
    pub edge: EdgeId,
    pub reference: f64,
    pub direct: f64,
    pub direct_error: f64,
    /// `(s, c_r, relative error)` with `r = 1 - s`.
    pub regularized: Vec<(f64, f64, f64)>,
}

/// `s = 10⁻³, …, 10⁻⁸`.
pub fn default_s_values() -> Vec<f64> {
    (3..=8).map(|k| 10f64.powi(-k)).collect()
}

fn relative_error(x: f64, reference: f64) -> f64 {
    (x - reference).abs() / reference.abs()
}

/// Exact cut-edge centrality of a unit-weight tree, from the rational tree
/// formulas on both loop-augmented components.
pub fn tree_centrality_exact(g: &Graph, e: EdgeId) -> Result<Ratio<i128>> {
    let whole = kemeny_tree_exact(g, None)?;
    let comps = remove_edge_add_loops(g, e)?.connected_components();
    let mut c = whole;
    for comp in comps {
        let sub = g.induced_subgraph(&comp);
        let end = if comp.contains(&e.u) { e.u } else { e.v };
        let k = comp
            .iter()
            .position(|&v| v == end)
            .expect("endpoint in component");
        c -= kemeny_tree_exact(&sub, Some((k, 1)))?;
    }
    Ok(c)
}

fn ratio_to_f64(q: Ratio<i128>) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

/// Relative errors of the direct and regularized centralities of every
/// edge against a high-accuracy reference: the closed form for paths and
/// the exact rational tree formula for binary trees.
pub fn stability(family: StabilityFamily, s_values: &[f64]) -> Result<Vec<StabilityRow>> {
    if let Some(&s) = s_values.iter().find(|&&s| !(s > 0.0 && s < 1.0)) {
        return Err(invalid("s", format!("{s} outside (0, 1)")));
    }
    let g = match family {
        StabilityFamily::Path { n } => generate(&FamilySpec::Path { n })?,
        StabilityFamily::BinaryTree { depth } => generate(&FamilySpec::BinaryTree { depth })?,
    };
    let report = analyze_graph(&g, &AnalyzeOptions::default())?;
    let mut records = report.records;
    records.sort_by_key(|r| r.edge);
    records
        .into_iter()
        .map(|rec| {
            let e = rec.edge;
            let reference = match family {
                StabilityFamily::Path { n } => centrality_path_edge(n, e.v, 0.0, 0.0)?,
                StabilityFamily::BinaryTree { .. } => ratio_to_f64(tree_centrality_exact(&g, e)?),
            };
            let regularized = s_values
                .iter()
                .map(|&s| {
                    let cr = regularized_centrality(&g, e, 1.0 - s)?;
                    Ok((s, cr, relative_error(cr, reference)))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(StabilityRow {
                edge: e,
                reference,
                direct: rec.c,
                direct_error: relative_error(rec.c, reference),
                regularized,
            })
        })
        .collect()
}

/// Largest direct error and the best (over `s`) of the largest regularized
/// errors.
pub fn stability_summary(rows: &[StabilityRow]) -> (f64, f64) {
    let direct = rows.iter().map(|r| r.direct_error).fold(0.0, f64::max);
    let n_s = rows.first().map_or(0, |r| r.regularized.len());
    let best = (0..n_s)
        .map(|k| rows.iter().map(|r| r.regularized[k].2).fold(0.0, f64::max))
        .fold(f64::INFINITY, f64::min);
    (direct, best)
}

/// `c(i)` for `i = 1..=p` on `E_{p,q,r}`.
pub fn branch_centrality(p: usize, q: usize, r: usize) -> Result<Vec<(usize, f64)>> {
    (1..=p)
        .map(|i| Ok((i, centrality_e_branch(i, p, q, r)?)))
        .collect()
}

/// Shape of a branch centrality profile.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BranchShape {
    /// Index of the largest value.
    pub argmax: usize,
    /// Indices `i` where `c(i)` exceeds both neighbours (or its only one).
    pub local_maxima: Vec<usize>,
    /// `i` solving `α_i = β_i`, that is `(p + 1 - q - r) / 2`.
    pub balance_point: f64,
    /// Whether `1 <= balance_point <= p`.
    pub balance_interior: bool,
    /// Whether `c` strictly decreases from `argmax` to `p`.
    pub decreasing_after_max: bool,
}

pub fn branch_shape(p: usize, q: usize, r: usize, profile: &[(usize, f64)]) -> BranchShape {
    let values: Vec<f64> = profile.iter().map(|&(_, c)| c).collect();
    let argmax = values
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .map_or(0, |(k, _)| k);
    let local_maxima = (0..values.len())
        .filter(|&k| {
            let left = k == 0 || values[k] > values[k - 1];
            let right = k + 1 == values.len() || values[k] > values[k + 1];
            left && right
        })
        .map(|k| profile[k].0)
        .collect();
    let balance_point = (p as f64 + 1.0 - q as f64 - r as f64) / 2.0;
    BranchShape {
        argmax: profile.get(argmax).map_or(0, |x| x.0),
        local_maxima,
        balance_point,
        balance_interior: balance_point >= 1.0 && balance_point <= p as f64,
        decreasing_after_max: values[argmax..].windows(2).all(|w| w[1] < w[0]),
    }
}
