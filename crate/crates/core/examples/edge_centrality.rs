//! Ranks the edges of a barbell graph and shows how cut and non-cut edges
//! are scored.

use kemeny::centrality::{analyze_graph, edge_centrality, AnalyzeOptions};
use kemeny::families::{generate, FamilySpec};
use kemeny::EdgeId;

fn main() -> kemeny::Result<()> {
    let g = generate(&FamilySpec::Barbell { p: 4, m: 5, n: 4 })?;
    let report = analyze_graph(&g, &AnalyzeOptions::default())?;
    println!(
        "κ(G) = {:.6}, λ₁ = {:.6}, λ_(n-1) = {:.6}",
        report.kappa, report.lambda_min, report.lambda_second
    );
    println!(
        "{:>4} {:>4} {:>6} {:>12} {:>10}",
        "u", "v", "cut", "c(e)", "sizes"
    );
    for rec in &report.records {
        let sizes = rec
            .component_sizes
            .map(|(a, b)| format!("{a}+{b}"))
            .unwrap_or_default();
        println!(
            "{:>4} {:>4} {:>6} {:>12.6} {:>10}",
            g.label(rec.edge.u),
            g.label(rec.edge.v),
            rec.is_cut,
            rec.c,
            sizes
        );
    }

    // A triangle edge is not a bridge: c(e) = κ(Ĝ) - κ(G).
    let triangle = kemeny::Graph::from_unit_edges(3, &[(0, 1), (1, 2), (2, 0)])?;
    let rec = edge_centrality(&triangle, EdgeId::new(0, 1))?;
    println!(
        "\ntriangle edge: cut = {}, c = {:.12} (4/3)",
        rec.is_cut, rec.c
    );
    Ok(())
}
