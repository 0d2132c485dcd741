//! Kemeny-based edge centrality.
//!
//! For an edge `e`, let `Ĝ` be `g` with `e` removed and its weight moved to
//! loops at both endpoints, so the degrees are unchanged. If `e` is not a
//! cut-edge, `c(e) = κ(Ĝ) - κ(G)`. If it is, `Ĝ` splits into `Ĝ₁` and `Ĝ₂` and
//! `c(e) = κ(G) - κ(Ĝ₁) - κ(Ĝ₂)`, which avoids the `1/(1-r)` cancellation of
//! the regularized score `c_r(e) = 1/(1-r) - (κ_r(Ĝ) - κ_r(G))`.

use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graph::{find_cut_edges, remove_edge_add_loops, transition_matrix, EdgeId, Graph};
use crate::spectral::{check_r, kemeny, spectrum, SpectralData};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EdgeCentralityRecord {
    pub edge: EdgeId,
    pub is_cut: bool,
    pub c: f64,
    /// `1/(1-λ₁)`, cut-edges only.
    pub lower: Option<f64>,
    /// `1/(1-λ_{n-1})`, cut-edges only.
    pub upper: Option<f64>,
    /// Sizes of the components containing `edge.u` and `edge.v` once the
    /// edge is removed. Cut-edges only.
    pub component_sizes: Option<(usize, usize)>,
    /// `c_r(e)` when requested. Cut-edges only.
    pub regularized: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CentralityReport {
    /// Sorted by decreasing `c`, ties by edge.
    pub records: Vec<EdgeCentralityRecord>,
    pub kappa: f64,
    pub lambda_min: f64,
    pub lambda_second: f64,
}

/// Interlacing bounds shared by every cut-edge of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CentralityBounds {
    pub lower: f64,
    pub upper: f64,
}

impl CentralityBounds {
    fn from_spectrum(spec: &SpectralData) -> Self {
        CentralityBounds {
            lower: 1.0 / (1.0 - spec.lambda_min()),
            upper: 1.0 / (1.0 - spec.lambda_second()),
        }
    }

    pub fn contains(&self, c: f64, tol: f64) -> bool {
        c >= self.lower - tol && c <= self.upper + tol
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct AnalyzeOptions {
    /// Adds `c_r` with `r = 1 - s` to cut-edge records.
    pub regularization: Option<f64>,
    /// Worker threads for the per-edge loop; the global pool when `None`.
    pub threads: Option<usize>,
}

fn require_connected(g: &Graph) -> Result<()> {
    let components = g.connected_components().len();
    if components != 1 {
        return Err(Error::Disconnected { components });
    }
    Ok(())
}

fn check_edge(g: &Graph, e: EdgeId) -> Result<()> {
    if e.is_loop() {
        return Err(Error::LoopEdge(e.u));
    }
    if e.v >= g.n() || !g.has_edge(e.u, e.v) {
        return Err(Error::MissingEdge(e.u, e.v));
    }
    Ok(())
}

/// `Ĝ` together with its two components when `e` is a cut-edge, the one
/// holding `e.u` first.
struct Removal {
    hat: Graph,
    split: Option<(Vec<usize>, Vec<usize>)>,
}

fn removal(g: &Graph, e: EdgeId) -> Result<Removal> {
    let hat = remove_edge_add_loops(g, e)?;
    let mut comps = hat.connected_components();
    let split = if comps.len() == 2 {
        if !comps[0].contains(&e.u) {
            comps.swap(0, 1);
        }
        let second = comps.pop().expect("two components");
        let first = comps.pop().expect("two components");
        Some((first, second))
    } else {
        None
    };
    Ok(Removal { hat, split })
}

fn score(kappa_g: f64, rem: &Removal) -> Result<f64> {
    match &rem.split {
        Some((a, b)) => {
            let k1 = kemeny(&rem.hat.induced_subgraph(a))?;
            let k2 = kemeny(&rem.hat.induced_subgraph(b))?;
            Ok(kappa_g - k1 - k2)
        }
        None => Ok(kemeny(&rem.hat)? - kappa_g),
    }
}

/// `c(e)`, with interlacing bounds and component sizes for cut-edges.
pub fn edge_centrality(g: &Graph, e: EdgeId) -> Result<EdgeCentralityRecord> {
    require_connected(g)?;
    check_edge(g, e)?;
    let spec = spectrum(&transition_matrix(g)?);
    let rem = removal(g, e)?;
    let c = score(spec.kemeny(), &rem)?;
    let bounds = rem
        .split
        .as_ref()
        .map(|_| CentralityBounds::from_spectrum(&spec));
    Ok(EdgeCentralityRecord {
        edge: e,
        is_cut: rem.split.is_some(),
        c,
        lower: bounds.map(|b| b.lower),
        upper: bounds.map(|b| b.upper),
        component_sizes: rem.split.as_ref().map(|(a, b)| (a.len(), b.len())),
        regularized: None,
    })
}

fn regularized_from(spec_g: &SpectralData, hat: &Graph, r: f64) -> Result<f64> {
    let spec_hat = spectrum(&transition_matrix(hat)?);
    Ok(1.0 / (1.0 - r) - (spec_hat.kemeny_regularized(r) - spec_g.kemeny_regularized(r)))
}

/// `c_r(e) = 1/(1-r) - (κ_r(Ĝ) - κ_r(G))` for a cut-edge `e`.
pub fn regularized_centrality(g: &Graph, e: EdgeId, r: f64) -> Result<f64> {
    check_r(r)?;
    require_connected(g)?;
    check_edge(g, e)?;
    let rem = removal(g, e)?;
    if rem.split.is_none() {
        return Err(Error::NotCutEdge(e.u, e.v));
    }
    regularized_from(&spectrum(&transition_matrix(g)?), &rem.hat, r)
}

/// `[1/(1-λ₁), 1/(1-λ_{n-1})]`, valid for every cut-edge of `g`.
pub fn centrality_bounds(g: &Graph) -> Result<CentralityBounds> {
    require_connected(g)?;
    if g.n() < 2 {
        return Err(invalid("g", "bounds need at least two vertices"));
    }
    Ok(CentralityBounds::from_spectrum(&spectrum(
        &transition_matrix(g)?,
    )))
}

/// The two stochastic complements of a walk matrix for a vertex bipartition.
#[derive(Debug, Clone, PartialEq)]
pub struct StochasticComplements {
    /// The given part, sorted.
    pub first: Vec<usize>,
    /// The remaining vertices, sorted.
    pub second: Vec<usize>,
    /// `P₁₁ + P₁₂(I - P₂₂)⁻¹P₂₁`, indexed like `first`.
    pub p1: DMatrix<f64>,
    /// `P₂₂ + P₂₁(I - P₁₁)⁻¹P₁₂`, indexed like `second`.
    pub p2: DMatrix<f64>,
}

fn complement(p: &DMatrix<f64>, keep: &[usize], drop: &[usize]) -> Result<DMatrix<f64>> {
    let block = |rows: &[usize], cols: &[usize]| {
        DMatrix::from_fn(rows.len(), cols.len(), |i, j| p[(rows[i], cols[j])])
    };
    let p11 = block(keep, keep);
    let p12 = block(keep, drop);
    let p21 = block(drop, keep);
    let p22 = block(drop, drop);
    let i_minus = DMatrix::identity(drop.len(), drop.len()) - p22;
    let x = i_minus
        .lu()
        .solve(&p21)
        .ok_or_else(|| Error::Singular("I - P₂₂ in the stochastic complement".into()))?;
    Ok(p11 + p12 * x)
}

/// Stochastic complements of `p` for the split `part | rest`.
pub fn stochastic_complement(p: &DMatrix<f64>, part: &[usize]) -> Result<StochasticComplements> {
    let n = p.nrows();
    if p.ncols() != n {
        return Err(invalid("p", "matrix is not square"));
    }
    let mut in_part = vec![false; n];
    for &v in part {
        if v >= n {
            return Err(invalid(
                "part",
                format!("vertex {v} out of range for {n} states"),
            ));
        }
        if in_part[v] {
            return Err(invalid("part", format!("vertex {v} listed twice")));
        }
        in_part[v] = true;
    }
    let first: Vec<usize> = (0..n).filter(|&v| in_part[v]).collect();
    let second: Vec<usize> = (0..n).filter(|&v| !in_part[v]).collect();
    if first.is_empty() || second.is_empty() {
        return Err(invalid("part", "bipartition must be nontrivial"));
    }
    let p1 = complement(p, &first, &second)?;
    let p2 = complement(p, &second, &first)?;
    Ok(StochasticComplements {
        first,
        second,
        p1,
        p2,
    })
}

/// Scores every non-loop edge of `g` from a single eigensolve of `g`.
pub fn analyze_graph(g: &Graph, options: &AnalyzeOptions) -> Result<CentralityReport> {
    require_connected(g)?;
    if g.n() < 2 {
        return Err(invalid("g", "graph has no edges"));
    }
    if let Some(s) = options.regularization {
        check_r(1.0 - s)?;
    }
    let spec = spectrum(&transition_matrix(g)?);
    let kappa = spec.kemeny();
    let bounds = CentralityBounds::from_spectrum(&spec);
    let cuts = find_cut_edges(g)?;
    let edges = g.edges();

    let one = |&e: &EdgeId| -> Result<EdgeCentralityRecord> {
        let rem = removal(g, e)?;
        let is_cut = cuts.contains(&e);
        if is_cut != rem.split.is_some() {
            return Err(Error::Inconsistent(format!(
                "bridge search and component split disagree on ({}, {})",
                e.u, e.v
            )));
        }
        let c = score(kappa, &rem)?;
        let regularized = match (is_cut, options.regularization) {
            (true, Some(s)) => Some(regularized_from(&spec, &rem.hat, 1.0 - s)?),
            _ => None,
        };
        Ok(EdgeCentralityRecord {
            edge: e,
            is_cut,
            c,
            lower: is_cut.then_some(bounds.lower),
            upper: is_cut.then_some(bounds.upper),
            component_sizes: rem.split.as_ref().map(|(a, b)| (a.len(), b.len())),
            regularized,
        })
    };

    let mut records = match options.threads {
        Some(1) => edges.iter().map(one).collect::<Result<Vec<_>>>()?,
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|err| invalid("threads", err.to_string()))?
            .install(|| edges.par_iter().map(one).collect::<Result<Vec<_>>>())?,
        None => edges.par_iter().map(one).collect::<Result<Vec<_>>>()?,
    };
    records.sort_by(|a, b| b.c.total_cmp(&a.c).then(a.edge.cmp(&b.edge)));
    Ok(CentralityReport {
        records,
        kappa,
        lambda_min: spec.lambda_min(),
        lambda_second: spec.lambda_second(),
    })
}
