//! Efficient domination for P5-free graphs.
//!
//! An efficient dominating set (a perfect code) is a vertex set whose
//! closed neighborhoods partition the graph. This crate decides existence
//! and computes a minimum-weight such set in near-linear time on P5-free
//! graphs: the prime case reduces to a thin-spider check plus two
//! minimum-degree probes, and modular decomposition lifts that to
//! arbitrary P5-free inputs. On other inputs the solver is weakly robust:
//! every `Found` answer is a verified efficient dominating set, and
//! failures report "not P5-free or no e.d." without deciding which.
//!
//! # Example
//!
//! ```
//! use effdom::graph::{EdOutcome, Graph, VertexWeights};
//!
//! // a path on four vertices: its ends are the unique e.d.
//! let g = Graph::build(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
//! let w = VertexWeights::unit(4);
//! assert_eq!(effdom::wed::solve(&g, &w), EdOutcome::found(vec![0, 3], 2));
//! ```

pub mod graph;
pub mod io;
pub mod mdtree;
pub mod prime_ed;
pub mod spider;
pub mod testkit;
pub mod wed;

pub use graph::{EdOutcome, Graph, Vertex, VertexWeights};
