//! Small hand-checkable cases for every module, through the public API.

mod common;

use common::*;
use kemeny::centrality::{
    analyze_graph, centrality_bounds, edge_centrality, regularized_centrality,
    stochastic_complement, AnalyzeOptions,
};
use kemeny::closed_forms::{
    branch_identities, build_branch_tree, centrality_e_branch, centrality_e_branch_by_components,
    centrality_path_edge, kappa_e, kappa_e_loop, kappa_f, kappa_path, path_with_loop,
    BranchTreeSpec,
};
use kemeny::families::{generate, random_tree, FamilySpec};
use kemeny::forest::{
    forest_weights, kemeny_birth_death, kemeny_sigma, kemeny_sigma_loop, kemeny_tree,
    kemeny_tree_loop, sigma_bruteforce, tree_distance_matrix, BirthDeathChain,
};
use kemeny::graph::{find_cut_edges, parse_edge_list, remove_edge_add_loops, transition_matrix};
use kemeny::spectral::{
    kemeny, kemeny_regularized, kemeny_trace, spectrum, stationary_distribution,
};
use kemeny::{EdgeId, Error, Graph};

fn path(n: usize) -> Graph {
    generate(&FamilySpec::Path { n }).unwrap()
}

fn cycle(n: usize) -> Graph {
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_unit_edges(n, &e).unwrap()
}

fn star(n: usize) -> Graph {
    generate(&FamilySpec::Star { n }).unwrap()
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-10 * b.abs().max(1.0)
}

#[test]
fn parsing() {
    let g = parse_edge_list("1 2\n2 3", true).unwrap();
    assert_eq!(g.degrees().0, vec![1.0, 2.0, 1.0]);
    let g = parse_edge_list("1 1 0.5", false).unwrap();
    assert_eq!((g.n(), g.degrees().0), (1, vec![0.5]));
    assert!(matches!(
        parse_edge_list("1 2\n1 2", false),
        Err(Error::DuplicateEdge { line: 2, .. })
    ));
}

#[test]
fn walk_matrices() {
    let p = transition_matrix(&path(3)).unwrap();
    assert_eq!(
        p.p().row(1).iter().copied().collect::<Vec<_>>(),
        vec![0.5, 0.0, 0.5]
    );
    let p = transition_matrix(&star(8)).unwrap();
    assert!((0..7).all(|j| close(p.p()[(7, j)], 1.0 / 7.0)));
    assert!((0..7).all(|i| p.p()[(i, 7)] == 1.0));
    let looped = path(3).add_loop(0, 1.0).unwrap();
    let p = transition_matrix(&looped).unwrap();
    assert_eq!(
        p.p().row(0).iter().copied().collect::<Vec<_>>(),
        vec![0.5, 0.5, 0.0]
    );
}

#[test]
fn bridges_and_removal() {
    assert_eq!(
        find_cut_edges(&random_tree(12, 3).unwrap()).unwrap().len(),
        11
    );
    assert!(find_cut_edges(&cycle(4)).unwrap().is_empty());
    let barbell = generate(&FamilySpec::Barbell { p: 3, m: 5, n: 5 }).unwrap();
    let cuts: Vec<EdgeId> = find_cut_edges(&barbell).unwrap().into_iter().collect();
    assert_eq!(cuts, bridges(&barbell));
    assert_eq!(cuts.len(), 3);

    let hat = remove_edge_add_loops(&path(3), EdgeId::new(0, 1)).unwrap();
    assert_eq!((hat.weight(0, 0), hat.weight(1, 1)), (1.0, 1.0));
    assert_eq!(hat.connected_components(), vec![vec![0], vec![1, 2]]);
    let hat = remove_edge_add_loops(&cycle(3), EdgeId::new(0, 1)).unwrap();
    assert!(hat.is_connected());
    assert_eq!(hat.degrees().0, vec![2.0; 3]);
    for m in 1..6 {
        let hat = remove_edge_add_loops(&path(6), EdgeId::new(m - 1, m)).unwrap();
        let sizes: Vec<usize> = hat.connected_components().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![m, 6 - m]);
    }
}

#[test]
fn spectra() {
    for n in [4, 9] {
        let ev = spectrum(&transition_matrix(&star(n)).unwrap()).eigenvalues;
        assert!(close(ev[0], -1.0) && close(ev[n - 1], 1.0));
        assert!(ev[1..n - 1].iter().all(|l| l.abs() < 1e-12));
    }
    let ev = spectrum(&transition_matrix(&path(3)).unwrap()).eigenvalues;
    assert!(close(ev[0], -1.0) && ev[1].abs() < 1e-12 && close(ev[2], 1.0));
    let two = Graph::from_unit_edges(4, &[(0, 1), (2, 3)]).unwrap();
    let s = spectrum(&transition_matrix(&two).unwrap());
    assert_eq!(s.multiplicity_of_one, 2);
}

#[test]
fn kemeny_values() {
    assert!(close(kemeny(&star(8)).unwrap(), 6.5));
    assert!(close(kemeny(&path(3)).unwrap(), 1.5));
    assert!(close(kemeny(&cycle(3)).unwrap(), 4.0 / 3.0));
    let g = generate(&FamilySpec::CompletePendant { n: 5 }).unwrap();
    assert!(close(kemeny(&g).unwrap(), 3.5));
    let p = transition_matrix(&star(8)).unwrap();
    assert!(close(kemeny_trace(&p, None).unwrap(), 6.5));
    let p = transition_matrix(&path(3)).unwrap();
    let pi = stationary_distribution(&p).unwrap().pi;
    let a = kemeny_trace(&p, Some(&[1.0, 0.0, 0.0])).unwrap();
    assert!((a - kemeny_trace(&p, Some(&pi)).unwrap()).abs() < 1e-10);
    let two = Graph::from_unit_edges(4, &[(0, 1), (2, 3)]).unwrap();
    assert_eq!(kemeny(&two), Err(Error::Disconnected { components: 2 }));
}

#[test]
fn regularized_kemeny() {
    let p = transition_matrix(&path(6)).unwrap();
    assert!((kemeny_regularized(&p, 1e-9).unwrap() - 5.0).abs() < 1e-6);
    let g = path(10);
    let p = transition_matrix(&g).unwrap();
    let k = kemeny(&g).unwrap();
    assert!((kemeny_regularized(&p, 1.0 - 1e-6).unwrap() - k).abs() <= 1e-4 * k);

    let two = Graph::from_unit_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
    let p = transition_matrix(&two).unwrap();
    let ev = walk_eigenvalues(two.adjacency());
    let rest: f64 = ev[..4].iter().map(|l| 1.0 / (1.0 - 0.9 * l)).sum();
    assert!(close(
        kemeny_regularized(&p, 0.9).unwrap(),
        1.0 / 0.1 + rest
    ));
}

#[test]
fn stationary() {
    let pi = stationary_distribution(&transition_matrix(&path(3)).unwrap())
        .unwrap()
        .pi;
    assert!(close(pi[0], 0.25) && close(pi[1], 0.5) && close(pi[2], 0.25));
    let g = path_with_loop(7, 3).unwrap();
    let pi = stationary_distribution(&transition_matrix(&g).unwrap())
        .unwrap()
        .pi;
    for (x, d) in pi.iter().zip(g.degrees().0) {
        assert!(close(*x, d / 13.0));
    }
    let pi = stationary_distribution(&transition_matrix(&star(8)).unwrap())
        .unwrap()
        .pi;
    assert!(close(pi[7], 0.5) && close(pi[0], 1.0 / 14.0));
}

#[test]
fn forests() {
    for (g, k) in [(path(3), 1.5), (star(5), 3.5), (cycle(3), 4.0 / 3.0)] {
        let w = forest_weights(&transition_matrix(&g).unwrap()).unwrap();
        assert!(close(w.kemeny(), k));
    }
    let (s, tau) = sigma_bruteforce(&path(3)).unwrap();
    assert_eq!((tau, s.0[(0, 1)], s.0[(0, 2)]), (1, 1, 2));
    assert!(close(kemeny_sigma(&path(3), &s, tau, 2).unwrap(), 1.5));
    let (s, tau) = sigma_bruteforce(&cycle(3)).unwrap();
    assert_eq!(tau, 3);
    assert!((0..3).all(|j| (0..3).all(|k| s.0[(j, k)] == if j == k { 0 } else { 2 })));
    assert!(close(
        kemeny_sigma(&cycle(3), &s, tau, 3).unwrap(),
        4.0 / 3.0
    ));
    let k4: Vec<_> = (0..4)
        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
        .collect();
    assert_eq!(
        sigma_bruteforce(&Graph::from_unit_edges(4, &k4).unwrap())
            .unwrap()
            .1,
        16
    );
    let (s, tau) = sigma_bruteforce(&star(4)).unwrap();
    assert!(close(kemeny_sigma(&star(4), &s, tau, 3).unwrap(), 2.5));
}

#[test]
fn loop_extension() {
    for n in 2..9 {
        let g = path(n);
        let (s, tau) = sigma_bruteforce(&g).unwrap();
        let nf = n as f64;
        assert!(close(
            kemeny_sigma_loop(&g, 0, 1.0, &s, tau, n - 1).unwrap(),
            nf * (nf - 1.0) / 3.0
        ));
        let tiny = kemeny_sigma_loop(&g, 0, 1e-12, &s, tau, n - 1).unwrap();
        assert!((tiny - kemeny_sigma(&g, &s, tau, n - 1).unwrap()).abs() < 1e-9);
    }
    let g = random_tree(8, 11).unwrap();
    let k = 5;
    let spectral = kemeny(&g.add_loop(k, 2.5).unwrap()).unwrap();
    assert!(rel(kemeny_tree_loop(&g, k, 2.5).unwrap(), spectral) < 1e-9);
}

#[test]
fn tree_distances() {
    let d = tree_distance_matrix(&path(3)).unwrap();
    assert_eq!(d.row(0).iter().copied().collect::<Vec<_>>(), vec![0, 1, 2]);
    let star4 = Graph::from_unit_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    let d = tree_distance_matrix(&star4).unwrap();
    assert!(
        (1..4).all(|j| d[(0, j)] == 1 && (1..4).all(|k| d[(j, k)] == if j == k { 0 } else { 2 }))
    );
    let (e111, delta) = build_branch_tree(&BranchTreeSpec::new(vec![1, 1, 1])).unwrap();
    let mut a: Vec<u64> = delta.iter().copied().collect();
    let mut b: Vec<u64> = tree_distance_matrix(&star(4))
        .unwrap()
        .iter()
        .copied()
        .collect();
    a.sort_unstable();
    b.sort_unstable();
    assert_eq!(a, b);
    assert!(close(kemeny_tree(&e111).unwrap(), 2.5));
    assert!(close(kemeny_tree(&path(10)).unwrap(), 81.5 / 3.0));
    assert!(close(
        kemeny(&path_with_loop(5, 3).unwrap()).unwrap(),
        52.0 / 9.0
    ));
}

#[test]
fn birth_death_chains() {
    let path_walk = BirthDeathChain::new(&[1.0, 0.5], &[0.5, 1.0]).unwrap();
    let k = kemeny_birth_death(&path_walk);
    assert!(close(k.forest_sum, 1.5) && close(k.stationary_form, 1.5));
    let looped = BirthDeathChain::new(&[0.5; 4], &[0.5; 4]).unwrap();
    assert!(close(kemeny_birth_death(&looped).forest_sum, 8.0));
    let chain = BirthDeathChain::new(
        &[0.2, 0.35, 0.11, 0.44, 0.3, 0.15],
        &[0.4, 0.12, 0.33, 0.25, 0.1, 0.42],
    )
    .unwrap();
    let k = kemeny_birth_death(&chain);
    let spectral = kemeny(&chain.to_graph()).unwrap();
    assert!(rel(k.forest_sum, spectral) < 1e-10 && rel(k.stationary_form, spectral) < 1e-10);
}

#[test]
fn path_closed_forms() {
    assert!(close(kappa_path(10, 0.0, 0.0).unwrap(), 81.5 / 3.0));
    assert!(close(kappa_path(5, 1.0, 1.0).unwrap(), 8.0));
    assert!(close(kappa_path(4, 0.0, 1.0).unwrap(), 4.0));
    assert!(close(
        centrality_path_edge(10, 5, 0.0, 0.0).unwrap(),
        41.5 / 3.0
    ));
    assert!(close(centrality_path_edge(10, 5, 1.0, 1.0).unwrap(), 17.0));
    for m in 1..10 {
        let a = centrality_path_edge(10, m, 0.0, 0.0).unwrap();
        assert!(close(
            a,
            centrality_path_edge(10, 10 - m, 0.0, 0.0).unwrap()
        ));
    }
    assert_eq!(kappa_f(1, 1).unwrap(), 0.0);
    for n in 1..20 {
        let nf = n as f64;
        assert!(close(kappa_f(n, 1).unwrap(), nf * (nf - 1.0) / 3.0));
    }
    assert!(close(kappa_f(5, 3).unwrap(), 52.0 / 9.0));
}

#[test]
fn three_branch_trees() {
    let (g, _) = build_branch_tree(&BranchTreeSpec::new(vec![2, 1, 1])).unwrap();
    let mut v: Vec<i64> = g.degrees().0.iter().map(|d| *d as i64 - 2).collect();
    v.sort_unstable();
    assert_eq!(v, vec![-1, -1, -1, 0, 1]);
    for (p, q, r) in [(1, 1, 1), (2, 1, 1), (4, 2, 7)] {
        let (_, delta) = build_branch_tree(&BranchTreeSpec::new(vec![p, q, r])).unwrap();
        let s = (p + q + r) as i64;
        let expected = (s * s * s + 2 * s) / 3 + s * s - 2 * (p * q * r) as i64;
        assert_eq!(delta.iter().sum::<u64>() as i64, expected);
        assert_eq!(branch_identities(p, q, r).ones_delta_ones, expected);
    }
    assert!(close(kappa_e(1, 1, 1).unwrap(), 2.5));
    assert!(close(kappa_e(2, 1, 1).unwrap(), 4.5));
    let (g, _) = build_branch_tree(&BranchTreeSpec::new(vec![2, 1, 1])).unwrap();
    assert!(close(kemeny(&g).unwrap(), 4.5));
    assert!(close(kappa_e_loop(1, 1, 1).unwrap(), 22.0 / 7.0));
    let with_loop = star(4).add_loop(0, 1.0).unwrap();
    assert!(close(kemeny(&with_loop).unwrap(), 22.0 / 7.0));
}

#[test]
fn branch_centralities() {
    for (p, q, r) in [(3, 2, 4), (5, 1, 1)] {
        let direct = centrality_e_branch(1, p, q, r).unwrap();
        let via =
            kappa_e(p, q, r).unwrap() - kappa_f(p, 1).unwrap() - kappa_f(q + r + 1, q + 1).unwrap();
        assert!(close(direct, via));
        assert!(close(
            direct,
            centrality_e_branch_by_components(1, p, q, r).unwrap()
        ));
    }
    let (g, _) = build_branch_tree(&BranchTreeSpec::new(vec![2, 1, 1])).unwrap();
    for i in 1..=2 {
        let c = edge_centrality(&g, EdgeId::new(i - 1, i)).unwrap().c;
        assert!((c - centrality_e_branch(i, 2, 1, 1).unwrap()).abs() < 1e-9);
    }
}

#[test]
fn edge_centralities() {
    for e in star(8).edges() {
        assert!(close(edge_centrality(&star(8), e).unwrap().c, 25.0 / 26.0));
    }
    assert!(close(
        edge_centrality(&path(10), EdgeId::new(4, 5)).unwrap().c,
        41.5 / 3.0
    ));
    assert!(close(
        edge_centrality(&cycle(3), EdgeId::new(0, 1)).unwrap().c,
        4.0 / 3.0
    ));
}

#[test]
fn regularized_centralities() {
    let e = EdgeId::new(4, 5);
    let exact = 41.5 / 3.0;
    let err = |s: f64| (regularized_centrality(&path(10), e, 1.0 - s).unwrap() - exact).abs();
    assert!(err(1e-3) / exact <= 0.05);
    assert!(err(1e-4) <= 0.05);
    assert!(err(1e-4) < err(1e-3));
    let c = regularized_centrality(&star(8), EdgeId::new(0, 7), 1.0 - 1e-6).unwrap();
    assert!((c - 25.0 / 26.0).abs() <= 1e-3);
}

#[test]
fn bounds() {
    for n in [5, 20, 60] {
        let b = centrality_bounds(&star(n)).unwrap();
        assert!(close(b.upper, 1.0));
        let c = edge_centrality(&star(n), EdgeId::new(0, n - 1)).unwrap().c;
        assert!(b.contains(c, 1e-8));
    }
    let g = generate(&FamilySpec::CompletePendant { n: 200 }).unwrap();
    let b = centrality_bounds(&g).unwrap();
    let c = edge_centrality(&g, bridges(&g)[0]).unwrap().c;
    assert!((c - 1.0).abs() < 0.02 && (b.lower - 1.0).abs() < 0.1);
    let b = centrality_bounds(&path(10)).unwrap();
    for rec in analyze_graph(&path(10), &AnalyzeOptions::default())
        .unwrap()
        .records
    {
        assert!(b.contains(rec.c, 1e-8));
    }
}

#[test]
fn complements() {
    let p = transition_matrix(&path(3)).unwrap();
    let sc = stochastic_complement(p.p(), &[0]).unwrap();
    assert_eq!(sc.p1.shape(), (1, 1));
    assert!(close(sc.p1[(0, 0)], 1.0));
    let g = generate(&FamilySpec::Barbell { p: 5, m: 4, n: 6 }).unwrap();
    let a = g.adjacency();
    let cuts = bridges(&g);
    let e = cuts[cuts.len() / 2];
    let side = side_of(a, e, e.u);
    let sc = stochastic_complement(p_of(&g).p(), &side).unwrap();
    assert!((sc.p1 - walk(&loop_augmented(a, e, &side))).amax() < 1e-12);
}

fn p_of(g: &Graph) -> kemeny::graph::TransitionMatrix {
    transition_matrix(g).unwrap()
}

#[test]
fn analysis_reports() {
    let t = generate(&FamilySpec::BinaryTree { depth: 4 }).unwrap();
    let report = analyze_graph(&t, &AnalyzeOptions::default()).unwrap();
    let mut levels: Vec<f64> = report.records.iter().map(|r| r.c).collect();
    levels.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
    assert_eq!(levels.len(), 3);
    for (got, want) in levels.iter().zip([16.0919, 8.1236, 2.2936]) {
        assert!((got - want).abs() <= 5e-4);
    }

    let report = analyze_graph(&path(10), &AnalyzeOptions::default()).unwrap();
    assert_eq!(report.records[0].edge, EdgeId::new(4, 5));
    let by_edge = |m: usize| report.records.iter().find(|r| r.edge.v == m).unwrap().c;
    assert!((1..5).all(|m| by_edge(m) < by_edge(m + 1)));
    assert!((5..9).all(|m| by_edge(m) > by_edge(m + 1)));

    let c4 = analyze_graph(&cycle(4), &AnalyzeOptions::default()).unwrap();
    assert!(c4.records.iter().all(|r| close(r.c, c4.records[0].c)));
}

#[test]
fn family_shapes() {
    let s = star(8);
    assert_eq!(s.degrees().0, [vec![1.0; 7], vec![7.0]].concat());
    let t = generate(&FamilySpec::BinaryTree { depth: 3 }).unwrap();
    assert_eq!(
        (t.n(), t.edge_count(), find_cut_edges(&t).unwrap().len()),
        (7, 6, 6)
    );
    let b = generate(&FamilySpec::Barbell { p: 20, m: 8, n: 4 }).unwrap();
    assert_eq!((b.n(), b.edge_count()), (8 + 4 + 19, 28 + 6 + 20));
    assert_eq!(find_cut_edges(&b).unwrap().len(), 20);
    let e = generate(&FamilySpec::BranchTree {
        p: 100,
        q: 200,
        r: 300,
        s: None,
    })
    .unwrap();
    assert_eq!(e.n(), 601);
    for seed in 0..5 {
        let a = random_tree(30, seed).unwrap();
        assert_eq!(a, random_tree(30, seed).unwrap());
        assert!(a.is_connected() && a.edge_count() == 29);
    }
}
