//! Discrete-time quantum walks on mixed graphs.

pub mod charpoly;
pub mod cyclo;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod linalg;
pub mod matrices;
pub mod periodicity;
pub mod scalar;

pub use error::{Error, Result};
