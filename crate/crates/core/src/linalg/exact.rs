//! Exact matrices with Gaussian-integer numerators over a shared power-of-two
//! denominator.
//!
//! Every gamma and beta matrix has entries in {0, ±1, ±i}, so products and
//! sums of them stay inside this ring and algebra identities can be checked
//! with `==` instead of a tolerance.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::{Complex, Complex64};

use super::ComplexMatrix;
use crate::error::{contract, Result};

pub type GaussInt = Complex<i64>;

#[derive(Clone)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    /// Entry `(i, j)` equals `num[i*cols + j] / 2^denom_log2`.
    num: Vec<GaussInt>,
    denom_log2: u32,
}

impl ExactMatrix {
    pub fn from_gauss(rows: usize, cols: usize, num: Vec<GaussInt>) -> Result<Self> {
        if rows * cols != num.len() {
            return Err(contract(format!("{rows}x{cols} matrix needs {} entries, got {}", rows * cols, num.len())));
        }
        Ok(Self { rows, cols, num, denom_log2: 0 })
    }

    /// Builds from small integer pairs `(re, im)`.
    pub fn from_pairs(rows: usize, cols: usize, pairs: &[(i64, i64)]) -> Result<Self> {
        Self::from_gauss(rows, cols, pairs.iter().map(|&(re, im)| GaussInt::new(re, im)).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, num: vec![GaussInt::new(0, 0); rows * cols], denom_log2: 0 }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![GaussInt::new(1, 0); n])
    }

    pub fn diagonal(diag: &[GaussInt]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, &d) in diag.iter().enumerate() {
            m.num[i * n + i] = d;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn denom_log2(&self) -> u32 {
        self.denom_log2
    }

    pub fn set(&mut self, i: usize, j: usize, value: GaussInt) {
        assert_eq!(self.denom_log2, 0, "set() only on integer matrices");
        self.num[i * self.cols + j] = value;
    }

    pub fn numerator(&self, i: usize, j: usize) -> GaussInt {
        self.num[i * self.cols + j]
    }

    /// Multiplies by the Gaussian integer `s`.
    pub fn scale(&self, s: GaussInt) -> Self {
        Self { num: self.num.iter().map(|&z| z * s).collect(), ..self.clone() }
    }

    /// Divides by `2^k`.
    pub fn halve(&self, k: u32) -> Self {
        Self { denom_log2: self.denom_log2 + k, ..self.clone() }.normalized()
    }

    pub fn matmul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(contract(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut num = vec![GaussInt::new(0, 0); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.num[i * self.cols + k];
                if a == GaussInt::new(0, 0) {
                    continue;
                }
                for j in 0..other.cols {
                    num[i * other.cols + j] += a * other.num[k * other.cols + j];
                }
            }
        }
        Ok(Self { rows: self.rows, cols: other.cols, num, denom_log2: self.denom_log2 + other.denom_log2 }.normalized())
    }

    fn combine(&self, other: &ExactMatrix, sign: i64) -> Result<ExactMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(contract("shape mismatch in exact sum"));
        }
        let d = self.denom_log2.max(other.denom_log2);
        let sa = 1i64 << (d - self.denom_log2);
        let sb = sign * (1i64 << (d - other.denom_log2));
        let num = self.num.iter().zip(&other.num).map(|(&a, &b)| a * sa + b * sb).collect();
        Ok(Self { rows: self.rows, cols: self.cols, num, denom_log2: d }.normalized())
    }

    /// Strips common factors of two so equal values compare equal.
    fn normalized(mut self) -> Self {
        while self.denom_log2 > 0 && self.num.iter().all(|z| z.re % 2 == 0 && z.im % 2 == 0) {
            for z in &mut self.num {
                z.re /= 2;
                z.im /= 2;
            }
            self.denom_log2 -= 1;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|z| *z == GaussInt::new(0, 0))
    }

    /// Largest entry modulus, as a float. Zero iff the matrix is exactly zero.
    pub fn max_abs(&self) -> f64 {
        let scale = (self.denom_log2 as f64).exp2();
        self.num.iter().map(|z| ((z.re as f64).hypot(z.im as f64)) / scale).fold(0.0, f64::max)
    }

    pub fn to_complex(&self) -> ComplexMatrix {
        let scale = (self.denom_log2 as f64).exp2();
        let data = self.num.iter().map(|z| Complex64::new(z.re as f64 / scale, z.im as f64 / scale)).collect();
        ComplexMatrix::new(self.rows, self.cols, data).expect("shape preserved")
    }

    /// Recovers an exact matrix from a float one whose entries are dyadic
    /// Gaussian rationals with denominator at most `2^max_log2`.
    pub fn try_from_complex(m: &ComplexMatrix, max_log2: u32) -> Option<ExactMatrix> {
        let scale = (max_log2 as f64).exp2();
        let mut num = Vec::with_capacity(m.entries().len());
        for z in m.entries() {
            let (re, im) = (z.re * scale, z.im * scale);
            if re.fract() != 0.0 || im.fract() != 0.0 || re.abs() > 2f64.powi(52) {
                return None;
            }
            num.push(GaussInt::new(re as i64, im as i64));
        }
        Some(Self { rows: m.rows(), cols: m.cols(), num, denom_log2: max_log2 }.normalized())
    }
}

impl PartialEq for ExactMatrix {
    fn eq(&self, other: &Self) -> bool {
        // both sides are kept normalized
        self.rows == other.rows
            && self.cols == other.cols
            && self.denom_log2 == other.denom_log2
            && self.num == other.num
    }
}

impl Eq for ExactMatrix {}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;

    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.matmul(rhs).expect("exact product shape mismatch")
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;

    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.combine(rhs, 1).expect("exact sum shape mismatch")
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;

    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.combine(rhs, -1).expect("exact difference shape mismatch")
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;

    fn neg(self) -> ExactMatrix {
        self.scale(GaussInt::new(-1, 0))
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} / 2^{} [", self.rows, self.cols, self.denom_log2)?;
        for i in 0..self.rows {
            let row: Vec<String> =
                self.num[i * self.cols..(i + 1) * self.cols].iter().map(|z| format!("{}{:+}i", z.re, z.im)).collect();
            writeln!(f, "  {}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter_of_four_is_one() {
        let four = ExactMatrix::identity(3).scale(GaussInt::new(4, 0));
        assert_eq!(four.halve(2), ExactMatrix::identity(3));
    }

    #[test]
    fn dyadic_sums_normalize() {
        let half = ExactMatrix::identity(2).halve(1);
        assert_eq!(&half + &half, ExactMatrix::identity(2));
        assert!((&half - &half).is_zero());
    }

    #[test]
    fn roundtrip_through_float() {
        let m = ExactMatrix::from_pairs(2, 2, &[(1, 0), (0, -1), (0, 1), (-1, 0)]).unwrap().halve(2);
        let back = ExactMatrix::try_from_complex(&m.to_complex(), 4).unwrap();
        assert_eq!(back, m);
        let f = ComplexMatrix::from_real_diagonal(&[0.3]);
        assert!(ExactMatrix::try_from_complex(&f, 8).is_none());
    }
}
