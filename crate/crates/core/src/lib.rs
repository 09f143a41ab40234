//! Exact counting over tree decompositions.
//!
//! Determinants, characteristic polynomials, traces of matrix powers, spanning
//! trees, arborescences and Euler tours of matrices and graphs of small treewidth,
//! all computed by one cycle-cover dynamic program plus classical identities.
//! Brute-force oracles in [`oracle`] check every engine independently.
//!
//! Vertex ids are 0-based throughout the library; the text formats in [`io`] are 1-based.

pub mod algebra;
pub mod ccdp;
pub mod construct;
pub mod counting;
pub mod decomposition;
pub mod error;
pub mod gadget;
pub mod io;
pub mod graph;
pub mod matrix;
pub mod nice;
pub mod oracle;
pub mod poly;

pub use ccdp::{CycleCoverHistogram, Limits};
pub use decomposition::{heuristic_tree_decomposition, validate_tree_decomposition, TreeDecomposition};
pub use error::{Error, Result};
pub use graph::{DirectedMultigraph, UnderlyingGraph, UndirectedMultigraph};
pub use matrix::SquareIntMatrix;
pub use nice::{make_nice, make_nice_or_heuristic, NiceTreeDecomposition};
pub use num_bigint::BigInt;
pub use poly::IntPolynomial;
