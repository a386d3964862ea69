pub mod bridge;
pub mod cli;
pub mod clifford;
pub mod diophantine;
pub mod error;
pub mod exact;
pub mod mutation;
pub mod poisson;
pub mod quandle;
pub mod stokes;
pub mod suite;
pub mod wire;

pub use error::{Error, Result};
