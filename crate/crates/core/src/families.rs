//! Generators for the graph families used in the examples and experiments.
//!
//! All graphs are labelled `1..=n`. Vertex numbering per family:
//!
//! * `Path`: `1 - 2 - ... - n`.
//! * `Star`: leaves `1..n-1`, centre `n`.
//! * `CompletePendant`: `K_{n-1}` on `1..n-1` plus the pendant edge `{n-1, n}`.
//! * `BinaryTree`: level order, root `1`, children of `i` are `2i` and `2i+1`.
//! * `Barbell { p, m, n }`: `K_m` on `1..=m`, `K_n` on `m+1..=m+n`, then the
//!   `p - 1` inner path vertices; the path runs from `m` to `m+1`.
//! * `Spider` and `BranchTree`: root `1`, branches numbered consecutively
//!   outward from the root.
//! * `CliquePath`: cliques numbered consecutively; with `Edge` links the last
//!   vertex of one clique is joined to the first of the next, with `Shared`
//!   links the two cliques share that vertex.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::closed_forms::{branch_blocks, BranchTreeSpec};
use crate::error::{invalid, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CliqueLink {
    Edge,
    Shared,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Star {
        n: usize,
    },
    CompletePendant {
        n: usize,
    },
    BinaryTree {
        depth: usize,
    },
    Barbell {
        p: usize,
        m: usize,
        n: usize,
    },
    Spider {
        branches: Vec<usize>,
    },
    CliquePath {
        size: usize,
        count: usize,
        link: CliqueLink,
    },
    /// `E_{p,q,r}` or its four-branch analogue.
    BranchTree {
        p: usize,
        q: usize,
        r: usize,
        s: Option<usize>,
    },
}

impl FamilySpec {
    /// Clique-path with the default size 5 and count 6.
    pub fn clique_path_default(link: CliqueLink) -> Self {
        FamilySpec::CliquePath {
            size: 5,
            count: 6,
            link,
        }
    }

    pub fn is_tree(&self) -> bool {
        matches!(
            self,
            FamilySpec::Path { .. }
                | FamilySpec::Star { .. }
                | FamilySpec::BinaryTree { .. }
                | FamilySpec::Spider { .. }
                | FamilySpec::BranchTree { .. }
        )
    }
}

fn at_least(name: &'static str, value: usize, min: usize) -> Result<()> {
    if value < min {
        return Err(invalid(name, format!("{value} < {min}")));
    }
    Ok(())
}

fn clique_edges(start: usize, size: usize, out: &mut Vec<(usize, usize)>) {
    for i in start..start + size {
        for j in i + 1..start + size {
            out.push((i, j));
        }
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    let mut edges = Vec::new();
    let n = match *spec {
        FamilySpec::Path { n } => {
            at_least("n", n, 2)?;
            edges.extend((0..n - 1).map(|i| (i, i + 1)));
            n
        }
        FamilySpec::Star { n } => {
            at_least("n", n, 2)?;
            edges.extend((0..n - 1).map(|i| (i, n - 1)));
            n
        }
        FamilySpec::CompletePendant { n } => {
            at_least("n", n, 3)?;
            clique_edges(0, n - 1, &mut edges);
            edges.push((n - 2, n - 1));
            n
        }
        FamilySpec::BinaryTree { depth } => {
            at_least("depth", depth, 2)?;
            if depth > 20 {
                return Err(invalid("depth", format!("{depth} > 20")));
            }
            let n = (1usize << depth) - 1;
            edges.extend((1..n).map(|i| ((i - 1) / 2, i)));
            n
        }
        FamilySpec::Barbell { p, m, n } => {
            at_least("p", p, 1)?;
            at_least("m", m, 2)?;
            at_least("n", n, 2)?;
            clique_edges(0, m, &mut edges);
            clique_edges(m, n, &mut edges);
            let mut prev = m - 1;
            for k in 0..p - 1 {
                let next = m + n + k;
                edges.push((prev, next));
                prev = next;
            }
            edges.push((prev, m));
            m + n + p - 1
        }
        FamilySpec::Spider { ref branches } => {
            return Ok(branch_blocks(&BranchTreeSpec::new(branches.clone()))?.0);
        }
        FamilySpec::CliquePath { size, count, link } => {
            at_least("size", size, 2)?;
            at_least("count", count, 1)?;
            let step = match link {
                CliqueLink::Edge => size,
                CliqueLink::Shared => size - 1,
            };
            for c in 0..count {
                clique_edges(c * step, size, &mut edges);
                if link == CliqueLink::Edge && c + 1 < count {
                    edges.push((c * step + size - 1, (c + 1) * step));
                }
            }
            (count - 1) * step + size
        }
        FamilySpec::BranchTree { p, q, r, s } => {
            let mut lengths = vec![p, q, r];
            lengths.extend(s);
            return Ok(branch_blocks(&BranchTreeSpec::new(lengths))?.0);
        }
    };
    Graph::from_unit_edges(n, &edges)
}

/// Uniformly random labelled tree on `n` vertices, decoded from a random
/// Prüfer sequence drawn from a seeded ChaCha generator.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    at_least("n", n, 2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let prufer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &prufer {
        degree[v] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &prufer {
        let leaf = leaves.pop_first().expect("a tree always has a leaf");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let a = leaves.pop_first().expect("two leaves remain");
    let b = leaves.pop_first().expect("two leaves remain");
    edges.push((a, b));
    Graph::from_unit_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::find_cut_edges;

    #[test]
    fn star_degrees() {
        let g = generate(&FamilySpec::Star { n: 8 }).unwrap();
        let mut expected = vec![1.0; 7];
        expected.push(7.0);
        assert_eq!(g.degrees().0, expected);
    }

    #[test]
    fn binary_tree_shape() {
        let g = generate(&FamilySpec::BinaryTree { depth: 3 }).unwrap();
        assert_eq!((g.n(), g.edge_count()), (7, 6));
        assert_eq!(find_cut_edges(&g).unwrap().len(), 6);
        assert!(generate(&FamilySpec::BinaryTree { depth: 1 }).is_err());
        let g = generate(&FamilySpec::BinaryTree { depth: 5 }).unwrap();
        assert_eq!((g.n(), g.edge_count()), (31, 30));
    }

    #[test]
    fn barbell_shape() {
        let g = generate(&FamilySpec::Barbell { p: 20, m: 8, n: 4 }).unwrap();
        assert_eq!(g.n(), 8 + 4 + 19);
        assert_eq!(g.edge_count(), 28 + 6 + 20);
        assert_eq!(find_cut_edges(&g).unwrap().len(), 20);
        assert!(g.is_connected());
        let g = generate(&FamilySpec::Barbell { p: 1, m: 3, n: 3 }).unwrap();
        assert!(g.has_edge(2, 3));
        assert_eq!(find_cut_edges(&g).unwrap().len(), 1);
    }

    #[test]
    fn complete_pendant_shape() {
        let g = generate(&FamilySpec::CompletePendant { n: 6 }).unwrap();
        assert_eq!(g.edge_count(), 11);
        assert_eq!(g.degrees().0, vec![4.0, 4.0, 4.0, 4.0, 5.0, 1.0]);
    }

    #[test]
    fn clique_paths() {
        let g = generate(&FamilySpec::clique_path_default(CliqueLink::Edge)).unwrap();
        assert_eq!((g.n(), g.edge_count()), (30, 6 * 10 + 5));
        assert_eq!(find_cut_edges(&g).unwrap().len(), 5);
        let g = generate(&FamilySpec::clique_path_default(CliqueLink::Shared)).unwrap();
        assert_eq!((g.n(), g.edge_count()), (25, 60));
        assert!(g.is_connected());
        assert!(find_cut_edges(&g).unwrap().is_empty());
    }

    #[test]
    fn branch_families() {
        let g = generate(&FamilySpec::BranchTree {
            p: 100,
            q: 200,
            r: 300,
            s: None,
        })
        .unwrap();
        assert_eq!(g.n(), 601);
        let g = generate(&FamilySpec::Spider {
            branches: vec![3, 3, 3, 3, 3],
        })
        .unwrap();
        assert_eq!((g.n(), g.edge_count()), (16, 15));
    }

    #[test]
    fn random_trees() {
        for seed in 0..20 {
            let g = random_tree(30, seed).unwrap();
            assert_eq!(g.edge_count(), 29);
            assert!(g.is_connected());
            assert_eq!(g, random_tree(30, seed).unwrap());
        }
        assert_ne!(random_tree(30, 1).unwrap(), random_tree(30, 2).unwrap());
        assert_eq!(random_tree(2, 0).unwrap().edge_count(), 1);
        assert!(random_tree(1, 0).is_err());
    }
}
