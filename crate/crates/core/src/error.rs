//! Error types shared across the crate.

use crate::scalars::FieldElem;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum ScalarError {
    #[error("index {i} outside I_q for l = {l}")]
    IndexOutOfRange { i: usize, l: usize },
    #[error("a tower holds at most two discriminants")]
    TooManyDiscriminants,
    #[error("zero divisor found: discriminant {disc} is a square")]
    ZeroDivisor { disc: usize, root: Vec<FieldElem> },
    #[error("element is not invertible")]
    NotInvertible,
}

#[derive(Debug, Clone, Error)]
pub enum SupermoduleError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("subspace is not invariant under {0}")]
    NotInvariant(String),
    #[error("eigenvalues of X_k + X_k^-1 are not all of the form q(i) at position {0}")]
    NonIntegral(usize),
    #[error("dimension {dim} of the {word:?} eigenspace is not divisible by {divisor}")]
    InexactDimension { word: Vec<usize>, dim: usize, divisor: usize },
    #[error("not an odd involution: {0}")]
    NotInvolution(String),
    #[error("modules live over different scalar towers")]
    TowerMismatch,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrothendieckError {
    #[error("coefficient {coeff} of {word:?} is not divisible by {divisor}")]
    IntegralityViolation { word: Vec<usize>, coeff: i64, divisor: i64 },
    #[error("out of range: {0}")]
    OutOfRange(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizationError {
    /// Two realizations disagree on an element reached by the f̃-word `word`.
    #[error("realizations starting at 0 and {start} disagree after f-word {word:?}: {detail}")]
    ConsistencyFailure { start: usize, word: Vec<usize>, detail: String },
    #[error("element {0} was not generated")]
    Unknown(String),
    #[error("phi_{i} of {path}: formula gives {formula}, string length is {measured}")]
    PhiMismatch { path: String, i: usize, formula: i64, measured: i64 },
    #[error("weight is not dominant")]
    NotDominant,
    #[error(transparent)]
    Cartan(#[from] crate::cartan::CartanError),
}
