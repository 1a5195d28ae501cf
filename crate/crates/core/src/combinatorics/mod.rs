//! Partitions, tableaux, binomials, exact determinants and the flagged
//! tableau-counting determinant that every counting formula reduces to.

mod binomial;
mod determinant;
mod kernel;
mod partition;
mod polynomial;
mod tableau;

pub use binomial::binomial;
pub use determinant::{determinant, determinant_cofactor};
pub use kernel::{count_skew_ssyt_bounded, count_skew_ssyt_brute};
pub use partition::{Partition, SignedPartitionPair};
pub use polynomial::IntPolynomial;
pub use tableau::{enumerate_ssyt, is_semistandard, Tableau};
