//! Exact verification and identification of multiplicity-free fusion
//! categories from their skeletal data.

pub mod catalog;
pub mod cli;
pub mod cyclo;
pub mod data;
pub mod error;
pub mod gauge;
pub mod invariant;
pub mod ring;
pub mod skeleton;

pub use cyclo::{format_cyclo, parse_cyclo, ComplexInterval, Cyclo, Rational};
pub use error::{Error, Result};
