use thiserror::Error;

/// Errors raised by the combinatorial layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("parts are not weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),

    #[error("box dimensions must be positive (got {p}x{q})")]
    EmptyBox { p: usize, q: usize },

    #[error("partition {parts:?} does not fit in the {p}x{q} box")]
    NotInBox { parts: Vec<usize>, p: usize, q: usize },

    #[error("inner partition {inner:?} is not contained in {outer:?}")]
    NotContained { inner: Vec<usize>, outer: Vec<usize> },

    #[error("pair ({lambda:?}, {mu:?}) is not compatible")]
    Incompatible { lambda: Vec<usize>, mu: Vec<usize> },

    #[error("partition {0:?} is not orthogonal in its box")]
    NotOrthogonal(Vec<usize>),

    #[error("cap `{name}` exceeded: {value} > {limit}")]
    CapExceeded { name: &'static str, value: usize, limit: usize },

    #[error("sign label not meaningful here: {0}")]
    SignNotAllowed(&'static str),

    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
