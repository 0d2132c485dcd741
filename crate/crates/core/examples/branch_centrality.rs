//! Centrality profile along the first branch of E_(p,q,r).

use kemeny::experiments::{branch_centrality, branch_shape};

fn main() -> kemeny::Result<()> {
    for (p, q, r) in [
        (100, 200, 300),
        (100, 100, 200),
        (100, 50, 20),
        (100, 10, 10),
    ] {
        let profile = branch_centrality(p, q, r)?;
        let shape = branch_shape(p, q, r, &profile);
        println!(
            "({p},{q},{r}): c(1) = {:.3}, max at i = {} (balance point {}), c(p) = {:.3}, decreasing after max: {}",
            profile[0].1,
            shape.argmax,
            shape.balance_point,
            profile[p - 1].1,
            shape.decreasing_after_max
        );
    }
    Ok(())
}
