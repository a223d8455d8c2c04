use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Inputs of the wrong shape, mismatched fields, unsupported requests.
    #[error("usage error: {0}")]
    Usage(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// The operator fails the D-equation; indices are 1-based `(i,j,k,l,p,q)`.
    #[error(
        "not a solution of the D-equation: coordinate equation (i,j,k,l,p,q) = {0:?} fails"
    )]
    NotASolution([usize; 6]),

    #[error("singular operator: {0}")]
    Singular(String),

    #[error("subspace is not a coideal: {0}")]
    NotCoideal(String),

    #[error("table is not a group: {0}")]
    NotAGroup(String),

    #[error("structure check failed: {0}")]
    Structure(String),

    #[error("dimodule compatibility fails: {0}")]
    Incompatible(String),

    /// `R tau != tau R`, witnessed by 1-based `(u,v,j,i)` with `x_uv^ji != x_vu^ij`.
    #[error("R does not commute with the flip: x_uv^ji != x_vu^ij at (u,v,j,i) = {0:?}")]
    NotSymmetric([usize; 4]),

    /// A bilinear form fails to vanish on the obstruction `o(i,j,k,l)`, 1-based.
    #[error("form does not vanish on the obstruction o(i,j,k,l) with (i,j,k,l) = {0:?}")]
    NotWellDefined([usize; 4]),

    #[error("candidate space of {candidates} exceeds the budget of {budget}")]
    BudgetExceeded { candidates: String, budget: u64 },
}

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
