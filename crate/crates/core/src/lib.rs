//! Exact computations for noncommutative quadric surfaces.

pub mod cli;
pub mod cliff;
pub mod error;
pub mod exactlin;
pub mod expr;
pub mod findim;
pub mod kzero;
pub mod qalg;
pub mod skly;

pub use error::{Error, Result};
