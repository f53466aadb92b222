//! Numerical verification of spinor coverings of the full Lorentz group,
//! Cartan spatial spinors on doubled 3-space, and parity-classified
//! Klein-Fock-Gordon solutions in parabolic cylindrical coordinates.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod expected;
pub mod kfg;
pub mod lorentz;
pub mod report;
pub mod spatial;

pub use error::{Error, Result};
