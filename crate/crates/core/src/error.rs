use thiserror::Error;

use crate::variety::Variety;

/// Errors raised by the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed algebra: {0}")]
    Malformed(String),

    #[error("not a group: {law} fails at {witness:?}")]
    NotAGroup {
        law: &'static str,
        witness: Vec<u32>,
    },

    #[error("multiplication is not associative on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),

    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiFails(usize, usize, usize),

    #[error("antisymmetry fails at basis element {0}")]
    AntisymmetryFails(usize),

    #[error("variety mismatch: {0} vs {1}")]
    VarietyMismatch(Variety, Variety),

    #[error("subobjects live in different parents")]
    ParentMismatch,

    #[error("{what} exceeds the configured bound ({size} > {bound})")]
    TooLarge {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("subobject is not normal")]
    NotNormal,

    #[error("morphism is not surjective")]
    NotSurjective,

    #[error("submodule or quotient is not a free Z_{0}-module")]
    NotFree(u32),

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("action does not restrict to the subobject: {0}")]
    NotInvariant(String),

    #[error("induced quotient action is not well defined: {0}")]
    NotWellDefined(String),

    #[error("invalid split extension: {0}")]
    InvalidExtension(String),

    #[error("actors are only available for groups and Lie algebras, not {0}")]
    NotRepresentative(Variety),

    #[error("subobject is not characteristic: {0}")]
    NotCharacteristic(String),

    #[error("canonical faithful quotients need an action accessible variety, not {0}")]
    NotAccessibleVariety(Variety),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("syntax error at {line}:{column}: expected {expected}")]
    Syntax {
        line: usize,
        column: usize,
        expected: String,
    },

    #[error("undeclared label `{label}` at line {line}")]
    UndeclaredLabel { line: usize, label: String },

    #[error("duplicate clause at line {line}: {what}")]
    Duplicate { line: usize, what: String },

    #[error("unknown subobject `{0}`")]
    UnknownSubobject(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
