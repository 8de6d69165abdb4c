use thiserror::Error;

use crate::combinat::{Composition, SetComposition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatError {
    #[error("composition parts must be positive: {0:?}")]
    ZeroPart(Vec<usize>),
    #[error("parts are not weakly decreasing: {0:?}")]
    NotPartition(Vec<usize>),
    #[error("descent outside 1..{n}")]
    DescentOutOfRange { n: usize },
    #[error("{finer} does not refine {coarser}")]
    NotRefinement { finer: Composition, coarser: Composition },
    #[error("set composition blocks must be nonempty")]
    EmptyBlock,
    #[error("set composition elements must be positive")]
    ZeroElement,
    #[error("element {0} appears in more than one block")]
    OverlappingBlocks(usize),
    #[error("blocks must be disjoint and nonempty to compare")]
    IncomparableBlocks,
    #[error("not a permutation of 1..n: {0:?}")]
    NotPermutation(Vec<usize>),
    #[error("ground set of {0} is not 1..n")]
    NotStandard(SetComposition),
    #[error("invalid order: {0}")]
    BadOrder(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("basis mismatch: {left} vs {right}")]
    BasisMismatch { left: String, right: String },
    #[error("operation not defined in basis {0}")]
    Unsupported(String),
    #[error("left factor is not homogeneous")]
    NotHomogeneous,
    #[error("conversion matrix for weight {weight} is singular")]
    Singular { weight: usize },
    #[error(transparent)]
    Combinat(#[from] CombinatError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("polynomial is not quasisymmetric: residual term {0}")]
    Residual(String),
    #[error("degree {degree} exceeds variable count {vars}")]
    TooFewVariables { degree: usize, vars: usize },
    #[error("only M-basis elements can be expanded, got {0}")]
    NotMonomialBasis(String),
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MnError {
    #[error("{alpha} and {beta} have different weights")]
    WeightMismatch { beta: Composition, alpha: Composition },
    #[error("ribbon of {beta} exhausted while removing boxes for {alpha}")]
    Exhausted { beta: Composition, alpha: Composition },
    #[error("ribbon formula disagrees with the composite expansion for {alpha}: {detail}")]
    Discrepancy { alpha: Composition, detail: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
