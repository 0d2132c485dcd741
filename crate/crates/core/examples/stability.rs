//! Accuracy of the direct centrality against the regularized limit on the
//! path P_50 and the binary tree of depth 5.

use kemeny::experiments::{default_s_values, stability, stability_summary, StabilityFamily};

fn main() -> kemeny::Result<()> {
    let s_values = default_s_values();
    for family in [
        StabilityFamily::Path { n: 50 },
        StabilityFamily::BinaryTree { depth: 5 },
    ] {
        let rows = stability(family, &s_values)?;
        println!("{family:?}");
        let direct = rows.iter().map(|r| r.direct_error).fold(0.0, f64::max);
        println!("  direct           max rel. error {direct:.2e}");
        for (k, s) in s_values.iter().enumerate() {
            let worst = rows.iter().map(|r| r.regularized[k].2).fold(0.0, f64::max);
            println!("  r = 1 - {s:.0e}   max rel. error {worst:.2e}");
        }
        let (d, best) = stability_summary(&rows);
        println!(
            "  best regularized / direct = {:.1e}",
            best / d.max(f64::MIN_POSITIVE)
        );
    }
    Ok(())
}
