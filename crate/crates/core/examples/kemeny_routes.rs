//! Kemeny's constant of one small weighted graph by every available route.

use kemeny::forest::{kemeny_forest_bruteforce, kemeny_sigma, sigma_bruteforce};
use kemeny::graph::{parse_edge_list, transition_matrix};
use kemeny::spectral::{kemeny_hitting_oracle, kemeny_spectral, kemeny_trace, spectrum};
use kemeny::Graph;

fn main() -> kemeny::Result<()> {
    let g = parse_edge_list("1 2 2.0\n2 3\n3 1 0.5\n3 4\n4 4 1.5\n", true)?;
    let p = transition_matrix(&g)?;
    println!("eigenvalues     {:?}", spectrum(&p).eigenvalues);
    println!("spectral        {:.15}", kemeny_spectral(&p)?);
    println!("resolvent trace {:.15}", kemeny_trace(&p, None)?);
    println!("hitting times   {:.15}", kemeny_hitting_oracle(&p)?);
    println!("forest ratio    {:.15}", kemeny_forest_bruteforce(&p)?);

    // The Σ formula needs a simple unweighted graph.
    let cube = Graph::from_unit_edges(
        8,
        &[
            (0, 1),
            (1, 3),
            (3, 2),
            (2, 0),
            (4, 5),
            (5, 7),
            (7, 6),
            (6, 4),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
        ],
    )?;
    let (sigma, tau) = sigma_bruteforce(&cube)?;
    println!("\n3-cube: τ = {tau} spanning trees");
    println!(
        "dᵀΣd/(4mτ)      {:.15}",
        kemeny_sigma(&cube, &sigma, tau, 12)?
    );
    println!("spectral        {:.15}", kemeny::spectral::kemeny(&cube)?);
    Ok(())
}
