//! Exact scalars, dense matrices and elimination-based linear algebra.

mod field;
mod linalg;
mod matrix;
mod parse;
pub mod poly;

pub use field::{Field, RatFun, Scalar, ScalarDisplay, MAX_PRIME};
pub use linalg::{kernel_basis, matrix_inverse, rank, solve_linear, Subspace};
pub use matrix::{dot, Matrix};
pub use parse::{parse_scalar, parse_scalar_at};
