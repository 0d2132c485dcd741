//! Closed-form Kemeny constants and centralities against the generic
//! spectral pipeline.

use kemeny::centrality::edge_centrality;
use kemeny::closed_forms::{
    build_branch_tree, centrality_e_branch, centrality_path_edge, kappa_e, kappa_e_loop, kappa_f,
    path_with_loop, BranchTreeSpec, PathSpec,
};
use kemeny::spectral::kemeny;
use kemeny::EdgeId;

fn main() -> kemeny::Result<()> {
    println!("one-path graphs A_n(α, β)");
    for (n, a, b) in [(10, 0.0, 0.0), (10, 1.0, 1.0), (25, 0.5, 2.0)] {
        let spec = PathSpec::new(n, a, b)?;
        println!(
            "  n={n:<3} α={a} β={b}: closed {:.12}  spectral {:.12}",
            spec.kemeny(),
            kemeny(&spec.graph())?
        );
    }
    let c = centrality_path_edge(10, 5, 0.0, 0.0)?;
    println!(
        "  middle edge of P_10: c = {c:.12} (41.5/3 = {:.12})",
        41.5 / 3.0
    );

    println!("paths with one loop F_(n,k)");
    for k in 1..=4 {
        println!(
            "  F_(7,{k}): {:.12}  spectral {:.12}",
            kappa_f(7, k)?,
            kemeny(&path_with_loop(7, k)?)?
        );
    }

    println!("three-branch trees E_(p,q,r)");
    let (p, q, r) = (6, 3, 2);
    let (g, delta) = build_branch_tree(&BranchTreeSpec::new(vec![p, q, r]))?;
    let (gl, _) = build_branch_tree(&BranchTreeSpec::new(vec![p, q, r]).with_loop(p + 1))?;
    println!(
        "  κ(E) = {:.12}  spectral {:.12}",
        kappa_e(p, q, r)?,
        kemeny(&g)?
    );
    println!(
        "  κ(E with loop at p+1) = {:.12}  spectral {:.12}",
        kappa_e_loop(p, q, r)?,
        kemeny(&gl)?
    );
    println!(
        "  distance from root to the tip of branch 3: {}",
        delta[(0, p + q + r)]
    );
    for i in 1..=p {
        let generic = edge_centrality(&g, EdgeId::new(i - 1, i))?.c;
        println!(
            "  c({i}) = {:.12}  generic {:.12}",
            centrality_e_branch(i, p, q, r)?,
            generic
        );
    }
    Ok(())
}
