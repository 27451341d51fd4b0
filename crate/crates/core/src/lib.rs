//! The abelian n-Pauli group and its maximal commuting and anticommuting sets.

pub mod anticommuting;
pub mod budget;
pub mod cli;
pub mod commuting;
pub mod counting;
pub mod error;
pub mod fixtures;
pub mod group;
pub mod oracle;
pub mod pauli;

pub use budget::Budget;
pub use error::{Error, Result};
pub use pauli::{format_pauli, parse_pauli, product_of_set, tensor_prefix, Label, Pauli, PauliSet, Sign};

/// Arbitrary-precision count type used by the non-generic counting functions.
pub type Count = num_bigint::BigUint;
