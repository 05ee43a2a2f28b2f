//! Closed forms and constructions for power graphs of cyclic groups and
//! abelian `p`-groups, plus a harness that checks each of them against the
//! exact computations in [`crate::connectivity`].

mod formulas;
mod verify;

pub use formulas::{
    abelian_p_component_formula, card_nbd_sepset, card_tk, compare_xi, construct_nbd_sepset, construct_tk,
    kappa_closed_form, predict_xi_order, xi1, xi2, KappaCase, KappaFormula, XiComparison, XiOrder,
};
pub use verify::{verify_target, Check, CheckStatus, Target, VerificationReport, VerifyOptions};

use crate::numtheory::NumError;
use crate::powergraph::PowerGraphError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TheoremError {
    #[error("n must be at least 2, got {0}")]
    TooSmall(u64),
    #[error("{0} is a prime power")]
    PrimePower(u64),
    #[error("{0} is a product of two distinct primes")]
    TwoDistinctPrimes(u64),
    #[error("prime index {k} outside 1..={r}")]
    IndexOutOfRange { k: usize, r: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error(transparent)]
    Arithmetic(#[from] NumError),
    #[error(transparent)]
    PowerGraph(#[from] PowerGraphError),
}
