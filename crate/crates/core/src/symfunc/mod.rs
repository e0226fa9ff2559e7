//! Partitions and symmetric functions in the monomial, elementary and Schur
//! bases.

mod coeff;
mod expr;
mod kostka;
pub mod oracle;
mod partition;

use thiserror::Error;

pub use coeff::{binomial, e_power, f_in_monomial_basis, lemma_michael_f};
pub use expr::{Basis, BasisExpr};
pub use kostka::{e_power_to_schur, e_to_schur, e_to_schur_truncated, kostka};
pub use oracle::{schur_product_oracle, schur_to_monomial};
pub use partition::{partitions, partitions_of, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("{0:?} is not a partition")]
    NotAPartition(Vec<u32>),
    #[error("partitions {left} and {right} have different weights")]
    WeightMismatch { left: Partition, right: Partition },
    #[error("expected an expression in the {expected:?} basis, got {got:?}")]
    WrongBasis { expected: Basis, got: Basis },
    #[error("leading-term peeling did not terminate at zero")]
    PeelingFailed,
}
