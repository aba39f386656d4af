//! Exact computations for Koszul duality of N-homogeneous and nonhomogeneous algebras.

pub mod corpus;
pub mod dsl;
pub mod error;
pub mod exactlin;
pub mod homogeneous;
pub mod nonhomogeneous;
pub mod potential;

pub use error::{Error, Result};
