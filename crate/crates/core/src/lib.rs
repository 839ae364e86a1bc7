//! Off-diagonally and diagonally symmetric domino tilings of the Aztec
//! diamond, counted by Pfaffians of path-count matrices and checked against
//! exhaustive enumeration.

pub mod arith;
pub mod conjecture;
pub mod error;
pub mod kernel;
pub mod lattice;
pub mod pfaffian;
pub mod reference;
pub mod selfcheck;
pub mod sequences;

pub use error::{Error, Result};
