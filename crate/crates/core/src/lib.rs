//! Kemeny's constant of random walks on weighted undirected graphs and the
//! Kemeny-based centrality of their edges.
//!
//! `κ(G) = Σ_{i<n} 1/(1-λ_i)` is computed from the spectrum of the walk
//! matrix, and cross-checked by a resolvent trace, mean hitting times,
//! forest enumeration, distance formulas on trees, birth-death formulas and
//! closed forms for paths and three-branch trees.
//!
//! ```
//! use kemeny::centrality::edge_centrality;
//! use kemeny::families::{generate, FamilySpec};
//! use kemeny::graph::EdgeId;
//!
//! let path = generate(&FamilySpec::Path { n: 10 }).unwrap();
//! let rec = edge_centrality(&path, EdgeId::new(4, 5)).unwrap();
//! assert!(rec.is_cut);
//! assert!((rec.c - 41.5 / 3.0).abs() < 1e-10);
//! ```

pub mod centrality;
pub mod cli;
pub mod closed_forms;
pub mod error;
pub mod experiments;
pub mod families;
pub mod forest;
pub mod graph;
pub mod output;
pub mod spectral;
pub mod tol;
mod tridiagonal;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{EdgeId, Graph};
