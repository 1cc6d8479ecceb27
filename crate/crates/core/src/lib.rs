//! Exact computations in the center of the Iwahori-Hecke algebra of the
//! symmetric group.

pub mod center;
pub mod characters;
pub mod coeff;
pub mod combi;
pub mod error;
pub mod hecke;
pub mod symfunc;

pub use error::{Error, Result};
pub mod cli;
pub mod export;
pub mod verify;
