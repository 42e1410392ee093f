//! Exact regular subdivisions, tropical dual complexes, painted complexes,
//! secondary and painting polytopes, and multiplihedra.

pub mod cli;
pub mod config;
pub mod error;
pub mod geometry;
pub mod io;
pub mod multiplihedra;
pub mod painting;
pub mod painting_polytope;
pub mod parallel;
pub mod secondary;
pub mod subdivision;
pub mod svg;
pub mod tropical;

pub use error::{Error, Result};
