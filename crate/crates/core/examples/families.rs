//! Generates every graph family and prints its size, bridges and κ.

use kemeny::families::{generate, random_tree, CliqueLink, FamilySpec};
use kemeny::graph::find_cut_edges;
use kemeny::spectral::kemeny;

fn main() -> kemeny::Result<()> {
    let specs = [
        FamilySpec::Path { n: 10 },
        FamilySpec::Star { n: 8 },
        FamilySpec::CompletePendant { n: 6 },
        FamilySpec::BinaryTree { depth: 4 },
        FamilySpec::Barbell { p: 20, m: 8, n: 4 },
        FamilySpec::Spider {
            branches: vec![4, 4, 4, 4, 4],
        },
        FamilySpec::clique_path_default(CliqueLink::Edge),
        FamilySpec::clique_path_default(CliqueLink::Shared),
        FamilySpec::BranchTree {
            p: 4,
            q: 2,
            r: 3,
            s: Some(5),
        },
    ];
    for spec in &specs {
        let g = generate(spec)?;
        println!(
            "{:<70} n={:<3} edges={:<3} bridges={:<3} κ={:.6}",
            format!("{spec:?}"),
            g.n(),
            g.edge_count(),
            find_cut_edges(&g)?.len(),
            kemeny(&g)?
        );
    }
    let t = random_tree(12, 7)?;
    print!("random tree (n = 12, seed = 7):\n{}", t.to_edge_list());
    Ok(())
}
