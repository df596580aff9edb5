#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod commands;
pub mod dirac;
pub mod dkp;
pub mod error;
pub mod linalg;
pub mod lorentz;
pub mod minkowski;
pub mod subsolutions;
pub mod susy;
pub mod verify;

pub use error::{Error, Result};
