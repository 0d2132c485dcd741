//! Kemeny's constant of a birth-death chain from its forest expansion, its
//! stationary distribution and its spectrum.

use kemeny::forest::{kemeny_birth_death, BirthDeathChain};
use kemeny::spectral::kemeny;

fn main() -> kemeny::Result<()> {
    let up = [0.5, 0.3, 0.2, 0.4, 0.25];
    let down = [0.2, 0.35, 0.3, 0.1, 0.6];
    let chain = BirthDeathChain::new(&up, &down)?;
    println!("holding probabilities {:?}", chain.theta());
    println!("stationary            {:?}", chain.stationary());
    let both = kemeny_birth_death(&chain);
    println!("forest sum      {:.15}", both.forest_sum);
    println!("stationary form {:.15}", both.stationary_form);
    println!("spectral        {:.15}", kemeny(&chain.to_graph())?);
    Ok(())
}
