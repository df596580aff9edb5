use num_complex::Complex64;

use super::ComplexMatrix;
use crate::error::{contract, Result};

/// Real form of the antilinear map `v ↦ L·v + K·conj(v)`.
///
/// The result is a `2n×2n` real matrix (stored with zero imaginary parts)
/// acting on the stacked vector `(Re v, Im v)`:
///
/// ```text
/// [ Lr + Kr   −Li + Ki ]
/// [ Li + Ki    Lr − Kr ]
/// ```
pub fn realify_antilinear(linear_part: &ComplexMatrix, antilinear_part: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = linear_part.rows();
    if !linear_part.is_square() || antilinear_part.rows() != n || antilinear_part.cols() != n {
        return Err(contract(format!(
            "realify needs two n×n parts, got {}x{} and {}x{}",
            linear_part.rows(),
            linear_part.cols(),
            antilinear_part.rows(),
            antilinear_part.cols()
        )));
    }
    let mut out = ComplexMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let l = linear_part[(i, j)];
            let k = antilinear_part[(i, j)];
            out[(i, j)] = (l.re + k.re).into();
            out[(i, j + n)] = (-l.im + k.im).into();
            out[(i + n, j)] = (l.im + k.im).into();
            out[(i + n, j + n)] = (l.re - k.re).into();
        }
    }
    Ok(out)
}

/// Stacks a complex vector as `(Re v, Im v)`.
pub fn stack_real(v: &[Complex64]) -> Vec<Complex64> {
    v.iter().map(|z| Complex64::from(z.re)).chain(v.iter().map(|z| Complex64::from(z.im))).collect()
}

/// Inverse of [`stack_real`]; imaginary parts of the input are ignored.
pub fn unstack_real(v: &[Complex64]) -> Vec<Complex64> {
    let n = v.len() / 2;
    (0..n).map(|i| Complex64::new(v[i].re, v[i + n].re)).collect()
}
