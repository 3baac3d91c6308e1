//! Exact-arithmetic toolkit for chip-firing combinatorics on rooted
//! multigraphs: parking-function ideals and their skeleton subideals,
//! standard monomials, Alexander duality, depth-first burning bijections,
//! spherical parking functions, tree enumeration, Steck determinants and
//! Betti number formulas.
//!
//! Everything is computed over arbitrary-precision integers and rationals;
//! no floating point is used anywhere.

pub mod burning;
pub mod cli;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod ideal;
pub mod parking;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
pub use graph::RootedMultigraph;
pub use ideal::MonomialIdeal;
pub use tree::RootedLabelledTree;
