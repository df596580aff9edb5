//! Duffin-Kemmer-Petiau matrices for spin 0 (5×5) and spin 1 (10×10).
//!
//! Both representations are read off the component equations: for spin 0
//! `p^μψ = mψ^μ`, `p_νψ^ν = mψ` on `Ψ = (ψ⁰, ψ¹, ψ², ψ³, ψ)`; for spin 1
//! `p^μψ^ν − p^νψ^μ = mψ^{μν}`, `p_μψ^{μν} = mψ^ν` on
//! `Ψ = (ψ⁰¹, ψ⁰², ψ⁰³, ψ²³, ψ³¹, ψ¹², ψ⁰, ψ¹, ψ², ψ³)`.
//! The betas carry upper indices and are contracted as `β^μ p_μ`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{contract, domain, Result};
use crate::linalg::{null_space, vec_norm, ComplexMatrix, ExactMatrix, GaussInt, NullSpaceResult};
use crate::minkowski::{metric, FourVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Spin {
    Zero,
    One,
}

impl Spin {
    pub fn dimension(self) -> usize {
        match self {
            Spin::Zero => 5,
            Spin::One => 10,
        }
    }
}

/// Storage order of the independent components of `ψ^{μν}`.
pub const TENSOR_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (2, 3), (3, 1), (1, 2)];

/// Slot of `ψ^{μν}` in the spin-1 layout together with the sign relating it
/// to the stored component; `None` on the diagonal.
pub fn tensor_slot(mu: usize, nu: usize) -> Option<(usize, i64)> {
    TENSOR_PAIRS.iter().enumerate().find_map(|(k, &(a, b))| {
        if (a, b) == (mu, nu) {
            Some((k, 1))
        } else if (b, a) == (mu, nu) {
            Some((k, -1))
        } else {
            None
        }
    })
}

const SPIN1_VECTOR_OFFSET: usize = 6;

#[derive(Debug, Clone)]
pub struct BetaRep {
    spin: Spin,
    exact: [ExactMatrix; 4],
    beta: [ComplexMatrix; 4],
}

impl BetaRep {
    fn from_exact(spin: Spin, exact: [ExactMatrix; 4]) -> Self {
        Self { spin, beta: exact.clone().map(|b| b.to_complex()), exact }
    }

    pub fn spin(&self) -> Spin {
        self.spin
    }

    pub fn dimension(&self) -> usize {
        self.spin.dimension()
    }

    pub fn beta(&self, mu: usize) -> &ComplexMatrix {
        &self.beta[mu]
    }

    pub fn beta_exact(&self, mu: usize) -> &ExactMatrix {
        &self.exact[mu]
    }

    /// `β^μ p_μ`.
    pub fn contract(&self, p: &FourVector) -> ComplexMatrix {
        let lower = p.lower();
        let n = self.dimension();
        (0..4).fold(ComplexMatrix::zeros(n, n), |acc, mu| &acc + &self.beta[mu].scale_real(lower[mu]))
    }

    /// Exact defect of `β^λβ^μβ^ν + β^νβ^μβ^λ = g^{λμ}β^ν + g^{νμ}β^λ` for
    /// one index triple.
    pub fn trilinear_defect(&self, lambda: usize, mu: usize, nu: usize) -> f64 {
        let b = &self.exact;
        let lhs = &(&(&b[lambda] * &b[mu]) * &b[nu]) + &(&(&b[nu] * &b[mu]) * &b[lambda]);
        let g = |a: usize, c: usize| GaussInt::new(metric(a, c) as i64, 0);
        let rhs = &b[nu].scale(g(lambda, mu)) + &b[lambda].scale(g(nu, mu));
        (&lhs - &rhs).max_abs()
    }

    /// Largest defect over all 64 index triples.
    pub fn max_trilinear_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for l in 0..4 {
            for m in 0..4 {
                for n in 0..4 {
                    worst = worst.max(self.trilinear_defect(l, m, n));
                }
            }
        }
        worst
    }
}

fn g_int(a: usize, b: usize) -> GaussInt {
    GaussInt::new(metric(a, b) as i64, 0)
}

/// `(β^λ)_{μ,ψ} = g^{λμ}`, `(β^λ)_{ψ,ν} = δ^λ_ν`.
pub fn build_beta_spin0() -> BetaRep {
    let exact = std::array::from_fn(|lambda| {
        let mut b = ExactMatrix::zeros(5, 5);
        for mu in 0..4 {
            b.set(mu, 4, g_int(lambda, mu));
        }
        b.set(4, lambda, GaussInt::new(1, 0));
        b
    });
    BetaRep::from_exact(Spin::Zero, exact)
}

/// Rows `ψ^{μν}`: `p^μψ^ν − p^νψ^μ`; rows `ψ^ν`: `p_λψ^{λν}`.
pub fn build_beta_spin1() -> BetaRep {
    let exact = std::array::from_fn(|lambda| {
        let mut b = ExactMatrix::zeros(10, 10);
        for (row, &(mu, nu)) in TENSOR_PAIRS.iter().enumerate() {
            // p^μ = g^{μλ} p_λ
            b.set(row, SPIN1_VECTOR_OFFSET + nu, g_int(lambda, mu));
            b.set(row, SPIN1_VECTOR_OFFSET + mu, -g_int(lambda, nu));
        }
        for nu in 0..4 {
            if let Some((slot, sign)) = tensor_slot(lambda, nu) {
                b.set(SPIN1_VECTOR_OFFSET + nu, slot, GaussInt::new(sign, 0));
            }
        }
        b
    });
    BetaRep::from_exact(Spin::One, exact)
}

/// `β^μ p_μ − m·I`.
pub fn dkp_operator(rep: &BetaRep, p: &FourVector, m: f64) -> ComplexMatrix {
    &rep.contract(p) - &ComplexMatrix::identity(rep.dimension()).scale_real(m)
}

/// Plane-wave solution space of the DKP equation at an on-shell momentum.
pub fn dkp_solutions(rep: &BetaRep, p: &FourVector, m: f64, tol: f64) -> Result<NullSpaceResult> {
    if !(m > 0.0) {
        return Err(domain(format!("DKP solutions need m > 0, got {m}")));
    }
    p.require_on_shell(m, tol)?;
    null_space(&dkp_operator(rep, p, m), tol)
}

/// `|(p_μp^μ − m²)ψ|`
pub fn klein_gordon_residual(p: &FourVector, m: f64, psi: Complex64) -> f64 {
    ((p.minkowski_square() - m * m) * psi).norm()
}

/// Spin-0 amplitude `(ψ⁰, ψ¹, ψ², ψ³, ψ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DkpVector5 {
    pub psi_mu: [Complex64; 4],
    pub psi: Complex64,
}

impl DkpVector5 {
    pub fn from_slice(v: &[Complex64]) -> Result<Self> {
        match v {
            &[a, b, c, d, psi] => Ok(Self { psi_mu: [a, b, c, d], psi }),
            _ => Err(contract(format!("spin-0 DKP vector needs 5 components, got {}", v.len()))),
        }
    }

    /// `ψ^μ = p^μψ/m`: the factorized Klein-Gordon solution.
    pub fn from_scalar(p: &FourVector, m: f64, psi: Complex64) -> Self {
        Self { psi_mu: p.0.map(|x| psi * x / m), psi }
    }

    pub fn to_array(&self) -> [Complex64; 5] {
        let [a, b, c, d] = self.psi_mu;
        [a, b, c, d, self.psi]
    }

    pub fn norm(&self) -> f64 {
        vec_norm(&self.to_array())
    }

    /// Residual of `p^μψ = mψ^μ` and `p_νψ^ν = mψ`, written out by component.
    pub fn component_residual(&self, p: &FourVector, m: f64) -> f64 {
        let mut sq = 0.0;
        for mu in 0..4 {
            sq += (self.psi * p[mu] - self.psi_mu[mu] * m).norm_sqr();
        }
        let lower = p.lower();
        let contraction: Complex64 = (0..4).map(|nu| self.psi_mu[nu] * lower[nu]).sum();
        sq += (contraction - self.psi * m).norm_sqr();
        sq.sqrt()
    }
}

/// Spin-1 amplitude: six independent `ψ^{μν}` then `ψ⁰..ψ³`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DkpVector10 {
    pub psi_tensor: [Complex64; 6],
    pub psi_vec: [Complex64; 4],
}

impl DkpVector10 {
    pub fn from_slice(v: &[Complex64]) -> Result<Self> {
        if v.len() != 10 {
            return Err(contract(format!("spin-1 DKP vector needs 10 components, got {}", v.len())));
        }
        Ok(Self {
            psi_tensor: std::array::from_fn(|k| v[k]),
            psi_vec: std::array::from_fn(|k| v[SPIN1_VECTOR_OFFSET + k]),
        })
    }

    pub fn to_array(&self) -> [Complex64; 10] {
        std::array::from_fn(|k| {
            if k < SPIN1_VECTOR_OFFSET {
                self.psi_tensor[k]
            } else {
                self.psi_vec[k - SPIN1_VECTOR_OFFSET]
            }
        })
    }

    /// Full antisymmetric `ψ^{μν}`.
    pub fn tensor(&self, mu: usize, nu: usize) -> Complex64 {
        match tensor_slot(mu, nu) {
            Some((slot, sign)) => self.psi_tensor[slot] * sign as f64,
            None => Complex64::new(0.0, 0.0),
        }
    }

    pub fn norm(&self) -> f64 {
        vec_norm(&self.to_array())
    }

    /// `p_νψ^ν`
    pub fn transversality(&self, p: &FourVector) -> Complex64 {
        let lower = p.lower();
        (0..4).map(|nu| self.psi_vec[nu] * lower[nu]).sum()
    }

    /// Residual of the Proca-form component equations.
    pub fn component_residual(&self, p: &FourVector, m: f64) -> f64 {
        let mut sq = 0.0;
        for &(mu, nu) in &TENSOR_PAIRS {
            let lhs = self.psi_vec[nu] * p[mu] - self.psi_vec[mu] * p[nu];
            sq += (lhs - self.tensor(mu, nu) * m).norm_sqr();
        }
        let lower = p.lower();
        for nu in 0..4 {
            let lhs: Complex64 = (0..4).map(|mu| self.tensor(mu, nu) * lower[mu]).sum();
            sq += (lhs - self.psi_vec[nu] * m).norm_sqr();
        }
        sq.sqrt()
    }

    /// Largest deviation of the stored tensor from `(p^μψ^ν − p^νψ^μ)/m`.
    pub fn tensor_reconstruction_error(&self, p: &FourVector, m: f64) -> f64 {
        TENSOR_PAIRS
            .iter()
            .map(|&(mu, nu)| {
                let rebuilt = (self.psi_vec[nu] * p[mu] - self.psi_vec[mu] * p[nu]) / m;
                (rebuilt - self.tensor(mu, nu)).norm()
            })
            .fold(0.0, f64::max)
    }
}
