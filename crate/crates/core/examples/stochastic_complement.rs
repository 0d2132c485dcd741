//! Splitting a walk at a cut-edge: the stochastic complements are the walk
//! matrices of the two loop-augmented components.

use kemeny::centrality::{edge_centrality, stochastic_complement};
use kemeny::families::{generate, FamilySpec};
use kemeny::graph::{remove_edge_add_loops, transition_matrix};
use kemeny::spectral::{kemeny, kemeny_of_stochastic};
use kemeny::EdgeId;

fn main() -> kemeny::Result<()> {
    let g = generate(&FamilySpec::Barbell { p: 3, m: 4, n: 3 })?;
    let e = EdgeId::new(3, 7);
    let hat = remove_edge_add_loops(&g, e)?;
    let part: Vec<usize> = hat
        .connected_components()
        .into_iter()
        .find(|c| c.contains(&e.u))
        .expect("every vertex has a component");
    let p = transition_matrix(&g)?;
    let sc = stochastic_complement(p.p(), &part)?;
    let p1 = transition_matrix(&hat.induced_subgraph(&sc.first))?;
    let p2 = transition_matrix(&hat.induced_subgraph(&sc.second))?;
    println!("P̂₁ ({} states) = {:.4}", sc.first.len(), sc.p1);
    println!("max |P̂₁ - P(Ĝ₁)| = {:.2e}", (&sc.p1 - p1.p()).amax());
    println!("max |P̂₂ - P(Ĝ₂)| = {:.2e}", (&sc.p2 - p2.p()).amax());
    let via = kemeny(&g)? - kemeny_of_stochastic(&sc.p1)? - kemeny_of_stochastic(&sc.p2)?;
    println!("c(e) from complements {:.12}", via);
    println!("c(e) directly         {:.12}", edge_centrality(&g, e)?.c);
    Ok(())
}
