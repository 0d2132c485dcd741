//! Cross-route verification suites behind `kemeny verify`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::centrality::{analyze_graph, edge_centrality, stochastic_complement, AnalyzeOptions};
use crate::closed_forms::{
    build_branch_tree, centrality_e_branch, centrality_path_edge, kappa_e, kappa_e_loop, kappa_f,
    path_with_loop, BranchTreeSpec, PathSpec,
};
use crate::error::Result;
use crate::families::{generate, random_tree, CliqueLink, FamilySpec};
use crate::forest::{
    kemeny_birth_death, kemeny_forest_bruteforce, kemeny_sigma, kemeny_sigma_loop,
    kemeny_tree_exact, sigma_bruteforce, BirthDeathChain,
};
use crate::graph::{remove_edge_add_loops, transition_matrix, EdgeId, Graph};
use crate::spectral::{kemeny, kemeny_hitting_oracle, kemeny_of_stochastic, kemeny_trace};
use crate::tol::{self, rel_diff};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Suite {
    Oracles,
    ClosedForms,
    Bounds,
    Complements,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::Oracles,
        Suite::ClosedForms,
        Suite::Bounds,
        Suite::Complements,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracles => "oracles",
            Suite::ClosedForms => "closed-forms",
            Suite::Bounds => "bounds",
            Suite::Complements => "complements",
        }
    }

    pub fn parse(name: &str) -> Option<Vec<Suite>> {
        match name {
            "all" => Some(Suite::ALL.to_vec()),
            _ => Suite::ALL
                .into_iter()
                .find(|s| s.name() == name)
                .map(|s| vec![s]),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub cases: usize,
    /// Largest observed discrepancy (or violation) across the cases.
    pub worst: f64,
    pub tolerance: f64,
    pub passed: bool,
    /// First error raised by a computation, if any.
    pub error: Option<String>,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}/{}: {} cases, worst {:.3e} (tol {:.0e})",
            if self.passed { "PASS" } else { "FAIL" },
            self.suite.name(),
            self.name,
            self.cases,
            self.worst,
            self.tolerance
        )?;
        if let Some(e) = &self.error {
            write!(f, ", error: {e}")?;
        }
        Ok(())
    }
}

struct Tally {
    suite: Suite,
    name: &'static str,
    tolerance: f64,
    cases: usize,
    worst: f64,
    error: Option<String>,
}

impl Tally {
    fn new(suite: Suite, name: &'static str, tolerance: f64) -> Self {
        Tally {
            suite,
            name,
            tolerance,
            cases: 0,
            worst: 0.0,
            error: None,
        }
    }

    fn record(&mut self, diff: Result<f64>) {
        self.cases += 1;
        match diff {
            Ok(d) if d.is_nan() => self.worst = f64::INFINITY,
            Ok(d) => self.worst = self.worst.max(d),
            Err(e) => {
                self.error.get_or_insert_with(|| e.to_string());
            }
        }
    }

    fn finish(self) -> Check {
        Check {
            suite: self.suite,
            name: self.name.to_string(),
            cases: self.cases,
            worst: self.worst,
            tolerance: self.tolerance,
            passed: self.error.is_none() && self.worst <= self.tolerance,
            error: self.error,
        }
    }
}

/// Random connected graph: a random spanning tree plus each remaining pair
/// with probability 0.4. Optionally random weights in `[0.5, 2)` and loops.
pub fn random_connected_graph(n: usize, seed: u64, weighted: bool, loops: bool) -> Graph {
    let tree = random_tree(n.max(2), seed).expect("n >= 2");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut a = tree.adjacency().clone();
    let n = a.nrows();
    let weight = |rng: &mut ChaCha8Rng| {
        if weighted {
            rng.gen_range(0.5..2.0)
        } else {
            1.0
        }
    };
    for i in 0..n {
        for j in i + 1..n {
            if a[(i, j)] > 0.0 || rng.gen_bool(0.4) {
                let w = weight(&mut rng);
                a[(i, j)] = w;
                a[(j, i)] = w;
            }
        }
        if loops && rng.gen_bool(0.3) {
            a[(i, i)] = weight(&mut rng);
        }
    }
    Graph::from_adjacency(a).expect("symmetric nonnegative")
}

/// Random birth-death chain on `n` states with rates in `[0.05, 0.5)`.
pub fn random_birth_death(n: usize, seed: u64) -> BirthDeathChain {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let up: Vec<f64> = (0..n - 1).map(|_| rng.gen_range(0.05..0.5)).collect();
    let down: Vec<f64> = (0..n - 1).map(|_| rng.gen_range(0.05..0.5)).collect();
    BirthDeathChain::new(&up, &down).expect("rates below one half")
}

fn oracles() -> Vec<Check> {
    let s = Suite::Oracles;
    let mut forest = Tally::new(s, "forest-ratio", 1e-9);
    for seed in 0..200 {
        let g = random_connected_graph(2 + seed as usize % 5, seed, true, true);
        forest.record((|| {
            let p = transition_matrix(&g)?;
            Ok(rel_diff(kemeny_forest_bruteforce(&p)?, kemeny(&g)?))
        })());
    }

    let mut sigma = Tally::new(s, "sigma-formula", 1e-9);
    let mut sigma_loop = Tally::new(s, "sigma-loop-extension", 1e-9);
    for seed in 0..100 {
        let g = random_connected_graph(2 + seed as usize % 7, 1000 + seed, false, false);
        sigma.record((|| {
            let (sig, tau) = sigma_bruteforce(&g)?;
            Ok(rel_diff(
                kemeny_sigma(&g, &sig, tau, g.edge_count())?,
                kemeny(&g)?,
            ))
        })());
        for w in [0.5, 1.0, 2.0] {
            let k = seed as usize % g.n();
            sigma_loop.record((|| {
                let (sig, tau) = sigma_bruteforce(&g)?;
                let formula = kemeny_sigma_loop(&g, k, w, &sig, tau, g.edge_count())?;
                Ok(rel_diff(formula, kemeny(&g.add_loop(k, w)?)?))
            })());
        }
    }

    let mut trace = Tally::new(s, "trace", tol::CROSS_ROUTE);
    let mut hitting = Tally::new(s, "hitting-times", tol::CROSS_ROUTE);
    for seed in 0..60 {
        let g = random_connected_graph(2 + seed as usize % 30, 2000 + seed, true, true);
        let p = transition_matrix(&g).expect("connected");
        trace.record((|| Ok(rel_diff(kemeny_trace(&p, None)?, kemeny(&g)?)))());
        hitting.record((|| Ok(rel_diff(kemeny_hitting_oracle(&p)?, kemeny(&g)?)))());
    }

    let mut bd = Tally::new(s, "birth-death", 1e-10);
    for seed in 0..100 {
        let chain = random_birth_death(2 + seed as usize % 11, 3000 + seed);
        let both = kemeny_birth_death(&chain);
        bd.record((|| {
            let spectral = kemeny(&chain.to_graph())?;
            Ok(rel_diff(both.forest_sum, spectral)
                .max(rel_diff(both.stationary_form, spectral))
                .max(rel_diff(both.forest_sum, both.stationary_form)))
        })());
    }
    [forest, sigma, sigma_loop, trace, hitting, bd]
        .into_iter()
        .map(Tally::finish)
        .collect()
}

fn closed_forms() -> Vec<Check> {
    let s = Suite::ClosedForms;
    let mut path = Tally::new(s, "one-path", 1e-10);
    for n in 2..=60 {
        for (a, b) in [(0.0, 0.0), (0.0, 1.0), (1.0, 0.0), (1.0, 1.0)] {
            path.record((|| {
                let spec = PathSpec::new(n, a, b)?;
                Ok(rel_diff(kemeny(&spec.graph())?, spec.kemeny()))
            })());
        }
    }

    let mut looped = Tally::new(s, "path-with-loop", 1e-10);
    for n in 1..=40 {
        for k in 1..=n {
            looped.record((|| {
                Ok(rel_diff(kemeny(&path_with_loop(n, k)?)?, kappa_f(n, k)?))
            })());
        }
    }

    let mut three = Tally::new(s, "three-branch", 1e-10);
    for p in 1..=8 {
        for q in 1..=8 {
            for r in 1..=8 {
                three.record((|| {
                    let (g, _) = build_branch_tree(&BranchTreeSpec::new(vec![p, q, r]))?;
                    let (gl, _) =
                        build_branch_tree(&BranchTreeSpec::new(vec![p, q, r]).with_loop(p + 1))?;
                    Ok(rel_diff(kemeny(&g)?, kappa_e(p, q, r)?)
                        .max(rel_diff(kemeny(&gl)?, kappa_e_loop(p, q, r)?)))
                })());
            }
        }
    }

    let mut path_c = Tally::new(s, "path-centrality", 1e-9);
    for n in 2..=30 {
        for (a, b) in [(0.0, 0.0), (1.0, 1.0), (0.0, 1.0)] {
            path_c.record((|| {
                let g = PathSpec::new(n, a, b)?.graph();
                let report = analyze_graph(&g, &AnalyzeOptions::default())?;
                let mut worst: f64 = 0.0;
                for rec in report.records {
                    let m = rec.edge.v;
                    worst = worst.max(rel_diff(rec.c, centrality_path_edge(n, m, a, b)?));
                }
                Ok(worst)
            })());
        }
    }

    let mut branch_c = Tally::new(s, "branch-centrality", 1e-9);
    for p in 1..=6 {
        for q in 1..=4 {
            for r in 1..=4 {
                branch_c.record((|| {
                    let (g, _) = build_branch_tree(&BranchTreeSpec::new(vec![p, q, r]))?;
                    let mut worst: f64 = 0.0;
                    for i in 1..=p {
                        let rec = edge_centrality(&g, EdgeId::new(i - 1, i))?;
                        worst = worst.max(rel_diff(rec.c, centrality_e_branch(i, p, q, r)?));
                    }
                    Ok(worst)
                })());
            }
        }
    }

    let mut trees = Tally::new(s, "tree-distance-formula", 1e-10);
    for seed in 0..50 {
        let g = random_tree(2 + seed as usize % 40, 4000 + seed).expect("n >= 2");
        trees.record((|| {
            let exact = kemeny_tree_exact(&g, None)?;
            let exact = *exact.numer() as f64 / *exact.denom() as f64;
            Ok(rel_diff(kemeny(&g)?, exact))
        })());
    }
    [path, looped, three, path_c, branch_c, trees]
        .into_iter()
        .map(Tally::finish)
        .collect()
}

/// Family graphs used by the bounds suite.
pub fn family_corpus() -> Vec<FamilySpec> {
    vec![
        FamilySpec::Path { n: 10 },
        FamilySpec::Star { n: 8 },
        FamilySpec::CompletePendant { n: 10 },
        FamilySpec::BinaryTree { depth: 5 },
        FamilySpec::Barbell { p: 20, m: 8, n: 4 },
        FamilySpec::Spider {
            branches: vec![3, 5, 7, 2],
        },
        FamilySpec::clique_path_default(CliqueLink::Edge),
        FamilySpec::clique_path_default(CliqueLink::Shared),
        FamilySpec::BranchTree {
            p: 5,
            q: 3,
            r: 2,
            s: None,
        },
        FamilySpec::BranchTree {
            p: 4,
            q: 3,
            r: 2,
            s: Some(1),
        },
    ]
}

/// Largest violation of `lower <= c <= upper` and of `c > 0` over the
/// cut-edges of `g`.
pub fn bounds_violation(g: &Graph) -> Result<f64> {
    let report = analyze_graph(g, &AnalyzeOptions::default())?;
    let mut worst: f64 = 0.0;
    for rec in report.records.iter().filter(|r| r.is_cut) {
        let (lo, hi) = (rec.lower.unwrap_or(f64::NAN), rec.upper.unwrap_or(f64::NAN));
        worst = worst.max(lo - rec.c).max(rec.c - hi);
        if rec.c <= 0.0 || lo.is_nan() || hi.is_nan() {
            worst = f64::INFINITY;
        }
    }
    Ok(worst)
}

fn bounds() -> Vec<Check> {
    let mut trees = Tally::new(Suite::Bounds, "random-trees", tol::BOUNDS);
    for seed in 0..100 {
        let g = random_tree(2 + seed as usize % 49, 5000 + seed).expect("n >= 2");
        trees.record(bounds_violation(&g));
    }
    let mut families = Tally::new(Suite::Bounds, "families", tol::BOUNDS);
    for spec in family_corpus() {
        families.record(generate(&spec).and_then(|g| bounds_violation(&g)));
    }
    vec![trees.finish(), families.finish()]
}

/// For every cut-edge of `g`: the largest entrywise gap between the
/// stochastic complements and the walk matrices of the loop-augmented
/// components, and the largest relative gap between `c(e)` and
/// `κ(G) - κ(P̂₁) - κ(P̂₂)`.
pub fn complement_gaps(g: &Graph) -> Result<(f64, f64)> {
    let p = transition_matrix(g)?;
    let kappa = kemeny(g)?;
    let mut matrix_gap: f64 = 0.0;
    let mut kemeny_gap: f64 = 0.0;
    for e in crate::graph::find_cut_edges(g)? {
        let hat = remove_edge_add_loops(g, e)?;
        let comps = hat.connected_components();
        let part = comps
            .iter()
            .find(|c| c.contains(&e.u))
            .expect("u has a component");
        let sc = stochastic_complement(p.p(), part)?;
        let p1 = transition_matrix(&hat.induced_subgraph(&sc.first))?;
        let p2 = transition_matrix(&hat.induced_subgraph(&sc.second))?;
        matrix_gap = matrix_gap
            .max((&sc.p1 - p1.p()).amax())
            .max((&sc.p2 - p2.p()).amax());
        let via = kappa - kemeny_of_stochastic(&sc.p1)? - kemeny_of_stochastic(&sc.p2)?;
        kemeny_gap = kemeny_gap.max(rel_diff(via, edge_centrality(g, e)?.c));
    }
    Ok((matrix_gap, kemeny_gap))
}

fn complements() -> Vec<Check> {
    let s = Suite::Complements;
    let mut matrices = Tally::new(s, "walk-matrices", tol::COMPLEMENT);
    let mut centrality = Tally::new(s, "centrality", 1e-9);
    let mut graphs: Vec<Graph> = (0..50)
        .map(|seed| random_tree(2 + seed as usize % 39, 6000 + seed).expect("n >= 2"))
        .collect();
    for k in 0..10 {
        graphs.push(
            generate(&FamilySpec::Barbell {
                p: 1 + k,
                m: 3 + k % 4,
                n: 3 + (k * 2) % 5,
            })
            .expect("valid barbell"),
        );
    }
    for g in &graphs {
        match complement_gaps(g) {
            Ok((m, c)) => {
                matrices.record(Ok(m));
                centrality.record(Ok(c));
            }
            Err(e) => {
                matrices.record(Err(e.clone()));
                centrality.record(Err(e));
            }
        }
    }
    vec![matrices.finish(), centrality.finish()]
}

pub fn run_suite(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::Oracles => oracles(),
        Suite::ClosedForms => closed_forms(),
        Suite::Bounds => bounds(),
        Suite::Complements => complements(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        assert_eq!(Suite::parse("all").unwrap().len(), 4);
        assert_eq!(Suite::parse("closed-forms"), Some(vec![Suite::ClosedForms]));
        assert_eq!(Suite::parse("nope"), None);
    }

    #[test]
    fn random_graphs_are_connected_and_reproducible() {
        for seed in 0..20 {
            let g = random_connected_graph(7, seed, true, true);
            assert!(g.is_connected());
            assert_eq!(g, random_connected_graph(7, seed, true, true));
        }
    }

    #[test]
    fn check_display() {
        let mut t = Tally::new(Suite::Bounds, "x", 1e-8);
        t.record(Ok(1e-12));
        let line = t.finish().to_string();
        assert!(line.starts_with("[PASS] bounds/x: 1 cases"));
    }
}
