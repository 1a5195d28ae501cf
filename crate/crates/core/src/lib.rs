//! Exact combinatorics behind the Bernstein degree of unitary highest weight
//! modules in the three classical dual pair settings.
//!
//! The degree is computed as `#Q_k(sigma) * #P_k`: a count of constrained
//! tableaux times a count of bounded plane partitions. Every counting formula
//! in the crate ships with a brute-force enumeration it can be checked against.

pub mod combinatorics;
pub mod degree;
pub mod dual_pair;
pub mod error;
pub mod jellyfish;
pub mod plane_partitions;
pub mod poset_paths;
pub mod rep_dimensions;
mod ser;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
