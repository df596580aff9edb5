//! Four-vectors with metric diag(1, −1, −1, −1) and the two-index spinor
//! correspondence `ζ^{AḂ} = (σ⁰ψ⁰ + σ·ψ)^{AḂ}`.
//!
//! Spinor matrices are indexed `(A, Ḃ)` as `(row, column)`, zero-based, so
//! `ζ^{1 2̇}` lives at `(0, 1)`.

use std::fmt;
use std::ops::{Index, Neg};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{contract, domain, Result};
use crate::linalg::{c64, ComplexMatrix, ExactMatrix, GaussInt};

/// Diagonal of the metric `g^{μν}`.
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

pub fn metric(mu: usize, nu: usize) -> f64 {
    if mu == nu {
        METRIC[mu]
    } else {
        0.0
    }
}

/// Contravariant components `(v⁰, v¹, v², v³)` in natural units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FourVector(pub [f64; 4]);

impl FourVector {
    pub const ZERO: FourVector = FourVector([0.0; 4]);

    pub fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        Self([t, x, y, z])
    }

    /// On-shell momentum with positive energy `p⁰ = +√(m² + |p⃗|²)`.
    pub fn on_shell(spatial: [f64; 3], mass: f64) -> Self {
        let [x, y, z] = spatial;
        let e = (mass * mass + x * x + y * y + z * z).sqrt();
        Self([e, x, y, z])
    }

    pub fn components(&self) -> [f64; 4] {
        self.0
    }

    pub fn spatial(&self) -> [f64; 3] {
        [self.0[1], self.0[2], self.0[3]]
    }

    /// Covariant components `v_μ = g_{μν} v^ν`.
    pub fn lower(&self) -> [f64; 4] {
        let [t, x, y, z] = self.0;
        [t, -x, -y, -z]
    }

    pub fn dot(&self, other: &FourVector) -> f64 {
        self.lower().iter().zip(other.0).map(|(a, b)| a * b).sum()
    }

    pub fn minkowski_square(&self) -> f64 {
        self.dot(self)
    }

    /// Euclidean length of the component array; used for residual scales.
    pub fn euclidean_norm(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Mass-shell deviation `|p² − m²|` relative to `max(1, m²)`.
    pub fn shell_violation(&self, mass: f64) -> f64 {
        (self.minkowski_square() - mass * mass).abs() / (mass * mass).max(1.0)
    }

    /// Fails with a domain error naming the violation if `p² ≠ m²` beyond `tol`.
    pub fn require_on_shell(&self, mass: f64, tol: f64) -> Result<()> {
        let v = self.shell_violation(mass);
        if v > tol {
            return Err(domain(format!(
                "momentum {self} is off the mass shell for m = {mass}: \
                 p² = {}, m² = {}, relative violation {v:.3e} > {tol:.1e}",
                self.minkowski_square(),
                mass * mass
            )));
        }
        Ok(())
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|x| x.is_finite())
    }
}

impl Index<usize> for FourVector {
    type Output = f64;

    fn index(&self, mu: usize) -> &f64 {
        &self.0[mu]
    }
}

impl Neg for FourVector {
    type Output = FourVector;

    fn neg(self) -> FourVector {
        FourVector(self.0.map(|x| -x))
    }
}

impl fmt::Display for FourVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [t, x, y, z] = self.0;
        write!(f, "({t}, {x}, {y}, {z})")
    }
}

/// Pauli matrix `σ^k`, `k = 0..=3`, with `σ⁰ = I₂`.
pub fn pauli_exact(k: usize) -> ExactMatrix {
    let z = |re, im| GaussInt::new(re, im);
    let entries = match k {
        0 => [z(1, 0), z(0, 0), z(0, 0), z(1, 0)],
        1 => [z(0, 0), z(1, 0), z(1, 0), z(0, 0)],
        2 => [z(0, 0), z(0, -1), z(0, 1), z(0, 0)],
        3 => [z(1, 0), z(0, 0), z(0, 0), z(-1, 0)],
        _ => panic!("Pauli index {k} out of range"),
    };
    ExactMatrix::from_gauss(2, 2, entries.to_vec()).expect("2x2")
}

pub fn pauli(k: usize) -> ComplexMatrix {
    pauli_exact(k).to_complex()
}

/// `ψ^{AḂ}` for complex components `ψ^μ`.
pub fn upper_spinor(v: [Complex64; 4]) -> [[Complex64; 2]; 2] {
    let i = Complex64::i();
    let [v0, v1, v2, v3] = v;
    [[v0 + v3, v1 - i * v2], [v1 + i * v2, v0 - v3]]
}

/// `ψ_{AḂ}` for complex components `ψ^μ`.
pub fn lower_spinor(v: [Complex64; 4]) -> [[Complex64; 2]; 2] {
    let i = Complex64::i();
    let [v0, v1, v2, v3] = v;
    [[v0 - v3, -v1 - i * v2], [-v1 + i * v2, v0 + v3]]
}

/// Inverse of [`upper_spinor`] for arbitrary complex 2×2 input.
pub fn spinor_components(s: [[Complex64; 2]; 2]) -> [Complex64; 4] {
    let i = Complex64::i();
    [(s[0][0] + s[1][1]) * 0.5, (s[0][1] + s[1][0]) * 0.5, (s[1][0] - s[0][1]) / (2.0 * i), (s[0][0] - s[1][1]) * 0.5]
}

fn real_components(p: &FourVector) -> [Complex64; 4] {
    p.0.map(|x| c64(x, 0.0))
}

fn to_matrix(s: [[Complex64; 2]; 2]) -> ComplexMatrix {
    ComplexMatrix::new(2, 2, vec![s[0][0], s[0][1], s[1][0], s[1][1]]).expect("2x2")
}

/// The pair `p^{AḂ}`, `p_{AḂ}` belonging to a real four-vector.
///
/// The lower-index form is the one for which the third rows of the
/// Dirac-form spin-0 systems reproduce `p_{1Ḃ}ψ^{1Ḃ} + p_{2Ḃ}ψ^{2Ḃ} = mψ`.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentumSpinor {
    pub upper: ComplexMatrix,
    pub lower: ComplexMatrix,
}

impl MomentumSpinor {
    /// `p^{AḂ}` with one-based spinor indices as written in formulas.
    pub fn up(&self, a: usize, b_dot: usize) -> Complex64 {
        self.upper[(a - 1, b_dot - 1)]
    }

    /// `p_{AḂ}` with one-based spinor indices.
    pub fn down(&self, a: usize, b_dot: usize) -> Complex64 {
        self.lower[(a - 1, b_dot - 1)]
    }
}

pub fn vector_to_spinor(v: &FourVector) -> MomentumSpinor {
    let c = real_components(v);
    MomentumSpinor { upper: to_matrix(upper_spinor(c)), lower: to_matrix(lower_spinor(c)) }
}

/// Reads a real four-vector back off a Hermitian `ζ^{AḂ}`.
pub fn spinor_to_vector(s: &ComplexMatrix, tol: f64) -> Result<FourVector> {
    if s.rows() != 2 || s.cols() != 2 {
        return Err(contract(format!("spinor must be 2x2, got {}x{}", s.rows(), s.cols())));
    }
    let scale = s.max_abs().max(1.0);
    let skew = s.max_abs_diff(&s.adjoint());
    if skew > tol * scale {
        return Err(domain(format!(
            "spinor is not Hermitian (deviation {skew:.3e}); it does not encode a real four-vector"
        )));
    }
    let c = spinor_components([[s[(0, 0)], s[(0, 1)]], [s[(1, 0)], s[(1, 1)]]]);
    Ok(FourVector(c.map(|z| z.re)))
}

/// `Σ_{AḂ} p_{AḂ} p^{AḂ}`, which equals `2 p_μ p^μ`.
pub fn spinor_pairing(p: &FourVector) -> f64 {
    let s = vector_to_spinor(p);
    s.lower.entries().iter().zip(s.upper.entries()).map(|(a, b)| a * b).sum::<Complex64>().re
}

/// `p_{1Ḃ}p^{1Ḃ} + p_{2Ḃ}p^{2Ḃ}` for a fixed dotted index `Ḃ ∈ {1, 2}`;
/// equals `p_μ p^μ` for either choice.
pub fn half_pairing(p: &FourVector, dotted_index: usize) -> Result<f64> {
    if !(1..=2).contains(&dotted_index) {
        return Err(contract(format!("dotted index must be 1 or 2, got {dotted_index}")));
    }
    let s = vector_to_spinor(p);
    let b = dotted_index;
    Ok((s.down(1, b) * s.up(1, b) + s.down(2, b) * s.up(2, b)).re)
}
