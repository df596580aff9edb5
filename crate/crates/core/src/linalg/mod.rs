//! Complex matrices, an exact dyadic path for the gamma/beta algebras, SVD
//! null spaces and realification of antilinear systems.

mod exact;
mod matrix;
mod nullspace;
mod realify;

pub use exact::{ExactMatrix, GaussInt};
pub use matrix::{vec_add, vec_dist, vec_dot, vec_norm, vec_scale, ComplexMatrix};
pub use nullspace::{null_space, NullSpaceResult, DEFAULT_TOL};
pub use realify::{realify_antilinear, stack_real, unstack_real};

pub use num_complex::Complex64;

/// Shorthand for `Complex64::new(re, im)`.
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
