use nalgebra::DMatrix;
use num_complex::Complex64;

use super::ComplexMatrix;
use crate::error::{contract, Result};

/// Relative rank threshold used when callers have no reason to choose another.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Kernel of a matrix as computed from its singular value decomposition.
#[derive(Debug, Clone)]
pub struct NullSpaceResult {
    pub dimension: usize,
    /// Orthonormal kernel vectors, one per vanishing singular value.
    pub basis: Vec<Vec<Complex64>>,
    /// All singular values, nonincreasing. Wide matrices are padded with zero
    /// rows first, so there is one value per column.
    pub singular_values: Vec<f64>,
    /// Absolute cutoff: `tol · σ_max`.
    pub threshold: f64,
}

/// Null space of `m`: right singular vectors whose singular value is at most
/// `tol · σ_max`. A zero matrix is entirely kernel.
pub fn null_space(m: &ComplexMatrix, tol: f64) -> Result<NullSpaceResult> {
    if m.is_empty() {
        return Err(contract("null space of an empty matrix"));
    }
    if !(tol > 0.0) {
        return Err(contract(format!("tolerance must be positive, got {tol}")));
    }
    let rows = m.rows().max(m.cols());
    let cols = m.cols();
    let mut data = m.entries().to_vec();
    data.resize(rows * cols, Complex64::new(0.0, 0.0));
    let a = DMatrix::from_row_slice(rows, cols, &data);

    let svd = a.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&i, &j| svd.singular_values[j].total_cmp(&svd.singular_values[i]));

    let singular_values: Vec<f64> = order.iter().map(|&i| svd.singular_values[i]).collect();
    let sigma_max = singular_values.first().copied().unwrap_or(0.0);
    let threshold = tol * sigma_max;

    let basis: Vec<Vec<Complex64>> = order
        .iter()
        .filter(|&&i| svd.singular_values[i] <= threshold)
        .map(|&i| (0..cols).map(|j| v_t[(i, j)].conj()).collect())
        .collect();

    Ok(NullSpaceResult { dimension: basis.len(), basis, singular_values, threshold })
}
