//! Solutions of the D-equation `R¹²R²³ = R²³R¹²`, the bialgebra `D(R)`,
//! Long dimodules, D-maps and a finite-field census.

pub mod classify;
pub mod coalg;
pub mod dimodule;
pub mod dmap;
pub mod error;
pub mod exactmath;
pub mod fixtures;
pub mod formats;
pub mod frt;
pub mod tensor_ops;

pub use error::{Error, Result};
