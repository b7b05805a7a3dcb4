// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension {n} is outside the supported range 1..={cap}")]
    DimensionCap { n: usize, cap: usize },

    #[error("mask {mask} is out of range for n = {n}")]
    MaskOutOfRange { mask: u64, n: usize },

    #[error("table has {got} bits, expected 2^{n} = {}", 1u64 << .n)]
    TableLength { n: usize, got: usize },

    #[error("the function is identically zero")]
    ZeroFunction,

    #[error("the set family is empty")]
    EmptyFamily,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    /// A witness whose existence is guaranteed by theory was not found.
    /// This is a bug, never an input problem.
    #[error("internal inconsistency, witness not found: {0}")]
    WitnessNotFound(String),

    #[error("invalid subcube: {0}")]
    InvalidSpec(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
