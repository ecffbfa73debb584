//! Exact computation toolkit for zero forcing and failed zero forcing on
//! directed graphs: closure simulation, exact Z and F solvers, critical-set
//! machinery, closed-form F for resolved families, a structural classifier
//! for the digraphs with F < Z, and exact-rational kernel-support
//! verification.

pub mod bitset;
pub mod classify;
pub mod closed;
pub mod digraph;
pub mod error;
pub mod forcing;
pub mod io;
pub mod minrank;
pub mod solve;
pub mod verify;

pub use bitset::VertexSet;
pub use digraph::Digraph;
pub use error::{Error, Result};
