//! Spinor-representation gamma matrices, the free Dirac operator and its
//! classical subsolutions (Weyl, Majorana, second-order forms).
//!
//! Chirality convention: `γ⁵ = diag(1, 1, −1, −1) = iγ⁰γ¹γ²γ³`. With this
//! sign `Q₊ = ½(1 + γ⁵)` keeps the upper spinor ξ and `Q₋` keeps η. It is
//! the sign for which `¼(3 + γ⁵ − γ⁰γ³ + iγ¹γ²)` is `diag(1, 1, 1, 0)`.

mod majorana;
mod planewave;

pub use majorana::{assemble_majorana_field, majorana_residual, majorana_solutions, majorana_system, MajoranaMode};
pub use planewave::{charge_conjugate, PlaneWave, PlaneWaveSuperposition};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::linalg::{null_space, vec_norm, ComplexMatrix, ExactMatrix, GaussInt, NullSpaceResult};
use crate::minkowski::{metric, pauli, pauli_exact, upper_spinor, FourVector};

/// The four gammas and γ⁵ in the chiral (spinor) representation.
#[derive(Debug, Clone)]
pub struct GammaRep {
    exact: [ExactMatrix; 4],
    exact5: ExactMatrix,
    gamma: [ComplexMatrix; 4],
    gamma5: ComplexMatrix,
}

fn block(
    upper_left: &ExactMatrix,
    upper_right: &ExactMatrix,
    lower_left: &ExactMatrix,
    lower_right: &ExactMatrix,
) -> ExactMatrix {
    let mut out = ExactMatrix::zeros(4, 4);
    let parts = [(upper_left, 0, 0), (upper_right, 0, 2), (lower_left, 2, 0), (lower_right, 2, 2)];
    for (m, r0, c0) in parts {
        for i in 0..2 {
            for j in 0..2 {
                out.set(r0 + i, c0 + j, m.numerator(i, j));
            }
        }
    }
    out
}

/// `γ⁰ = [[0, σ⁰], [σ⁰, 0]]`, `γʲ = [[0, −σʲ], [σʲ, 0]]`, `γ⁵ = diag(σ⁰, −σ⁰)`.
pub fn build_gamma_spinor() -> GammaRep {
    let zero = ExactMatrix::zeros(2, 2);
    let s0 = pauli_exact(0);
    let g0 = block(&zero, &s0, &s0, &zero);
    let gj = |j: usize| {
        let s = pauli_exact(j);
        block(&zero, &-&s, &s, &zero)
    };
    let exact = [g0, gj(1), gj(2), gj(3)];
    let exact5 = block(&s0, &zero, &zero, &-&s0);
    GammaRep { gamma: exact.clone().map(|g| g.to_complex()), gamma5: exact5.to_complex(), exact, exact5 }
}

impl GammaRep {
    pub fn gamma(&self, mu: usize) -> &ComplexMatrix {
        &self.gamma[mu]
    }

    pub fn gamma5(&self) -> &ComplexMatrix {
        &self.gamma5
    }

    pub fn gamma_exact(&self, mu: usize) -> &ExactMatrix {
        &self.exact[mu]
    }

    pub fn gamma5_exact(&self) -> &ExactMatrix {
        &self.exact5
    }

    /// `γ^μ p_μ = γ⁰p⁰ − Σ γʲpʲ`.
    pub fn slash(&self, p: &FourVector) -> ComplexMatrix {
        let lower = p.lower();
        (0..4).fold(ComplexMatrix::zeros(4, 4), |acc, mu| &acc + &self.gamma[mu].scale_real(lower[mu]))
    }

    /// Largest entry of `{γ^μ, γ^ν} − 2g^{μν}I` over all pairs, computed
    /// exactly. Zero when the Clifford algebra holds.
    pub fn clifford_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for mu in 0..4 {
            for nu in mu..4 {
                let ac = &(&self.exact[mu] * &self.exact[nu]) + &(&self.exact[nu] * &self.exact[mu]);
                let target = ExactMatrix::identity(4).scale(GaussInt::new(2 * metric(mu, nu) as i64, 0));
                worst = worst.max((&ac - &target).max_abs());
            }
        }
        worst
    }

    /// `iγ⁰γ¹γ²γ³`, exactly.
    pub fn gamma5_from_product(&self) -> ExactMatrix {
        let prod = &(&(&self.exact[0] * &self.exact[1]) * &self.exact[2]) * &self.exact[3];
        prod.scale(GaussInt::new(0, 1))
    }

    /// Charge-conjugation matrix `iγ²`.
    pub fn charge_conjugation_matrix(&self) -> ExactMatrix {
        self.exact[2].scale(GaussInt::new(0, 1))
    }

    /// Chiral projector `Q± = ½(1 ± γ⁵)`, exactly.
    pub fn chiral_projector_exact(&self, sign: Sign) -> ExactMatrix {
        let g5 = match sign {
            Sign::Plus => self.exact5.clone(),
            Sign::Minus => -&self.exact5,
        };
        (&ExactMatrix::identity(4) + &g5).halve(1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

/// Which two-component half of a bispinor an equation acts on.
///
/// `Eta` carries the left-handed Weyl equation `(p⁰ + σ·p)η = 0`,
/// `Xi` the right-handed one `(p⁰ − σ·p)ξ = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpinorPart {
    Xi,
    Eta,
}

/// Dirac amplitude ordered `(ξ¹, ξ², η_1̇, η_2̇)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bispinor {
    pub xi1: Complex64,
    pub xi2: Complex64,
    pub eta1: Complex64,
    pub eta2: Complex64,
}

impl Bispinor {
    pub fn new(xi1: Complex64, xi2: Complex64, eta1: Complex64, eta2: Complex64) -> Self {
        Self { xi1, xi2, eta1, eta2 }
    }

    pub fn from_slice(v: &[Complex64]) -> Result<Self> {
        match v {
            &[xi1, xi2, eta1, eta2] => Ok(Self { xi1, xi2, eta1, eta2 }),
            _ => Err(crate::error::contract(format!("bispinor needs 4 components, got {}", v.len()))),
        }
    }

    pub fn to_array(&self) -> [Complex64; 4] {
        [self.xi1, self.xi2, self.eta1, self.eta2]
    }

    pub fn xi(&self) -> [Complex64; 2] {
        [self.xi1, self.xi2]
    }

    pub fn eta(&self) -> [Complex64; 2] {
        [self.eta1, self.eta2]
    }

    pub fn norm(&self) -> f64 {
        vec_norm(&self.to_array())
    }

    pub fn zero() -> Self {
        let z = Complex64::new(0.0, 0.0);
        Self::new(z, z, z, z)
    }
}

/// `γ^μ p_μ − m·I`.
pub fn dirac_operator(rep: &GammaRep, p: &FourVector, m: f64) -> ComplexMatrix {
    &rep.slash(p) - &ComplexMatrix::identity(4).scale_real(m)
}

/// `‖(γ^μ p_μ − m)ψ‖`, i.e. the residual of the four component equations.
pub fn dirac_residual(rep: &GammaRep, p: &FourVector, m: f64, psi: &Bispinor) -> f64 {
    let r = dirac_operator(rep, p, m).apply(&psi.to_array()).expect("4x4 operator");
    vec_norm(&r)
}

/// `p⁰ + σ·p` (`Sign::Plus`) or `p⁰ − σ·p` (`Sign::Minus`).
pub fn sigma_operator(p: &FourVector, sign: Sign) -> ComplexMatrix {
    let [p0, p1, p2, p3] = p.components();
    let s = match sign {
        Sign::Plus => 1.0,
        Sign::Minus => -1.0,
    };
    let c = |x: f64| Complex64::new(x, 0.0);
    let m = upper_spinor([c(p0), c(s * p1), c(s * p2), c(s * p3)]);
    ComplexMatrix::new(2, 2, vec![m[0][0], m[0][1], m[1][0], m[1][1]]).expect("2x2")
}

/// Plane-wave solution space of the Dirac equation at an on-shell momentum.
///
/// For `m = 0` the kernel is assembled from the two Weyl blocks so that each
/// basis vector has definite chirality.
pub fn dirac_solutions(p: &FourVector, m: f64, tol: f64) -> Result<NullSpaceResult> {
    p.require_on_shell(m, tol)?;
    if m == 0.0 {
        return massless_solutions(p, tol);
    }
    let rep = build_gamma_spinor();
    null_space(&dirac_operator(&rep, p, m), tol)
}

fn massless_solutions(p: &FourVector, tol: f64) -> Result<NullSpaceResult> {
    let z = Complex64::new(0.0, 0.0);
    let xi = null_space(&sigma_operator(p, Sign::Minus), tol)?;
    let eta = null_space(&sigma_operator(p, Sign::Plus), tol)?;
    let mut basis: Vec<Vec<Complex64>> = xi.basis.iter().map(|v| vec![v[0], v[1], z, z]).collect();
    basis.extend(eta.basis.iter().map(|v| vec![z, z, v[0], v[1]]));
    let mut singular_values: Vec<f64> = xi.singular_values.iter().chain(&eta.singular_values).copied().collect();
    singular_values.sort_by(|a, b| b.total_cmp(a));
    Ok(NullSpaceResult { dimension: basis.len(), basis, singular_values, threshold: xi.threshold.max(eta.threshold) })
}

/// Applies `Q± = ½(1 ± γ⁵)`. With this crate's γ⁵, `Plus` keeps ξ.
pub fn chiral_project(rep: &GammaRep, psi: &Bispinor, sign: Sign) -> Bispinor {
    let q = rep.chiral_projector_exact(sign).to_complex();
    let v = q.apply(&psi.to_array()).expect("4x4 projector");
    Bispinor::from_slice(&v).expect("4 components")
}

fn apply2(m: &ComplexMatrix, s: &[Complex64; 2]) -> [Complex64; 2] {
    let v = m.apply(s).expect("2x2");
    [v[0], v[1]]
}

/// `‖(p⁰ + σ·p)η‖` for `Eta`, `‖(p⁰ − σ·p)ξ‖` for `Xi`.
pub fn weyl_residual(p: &FourVector, spinor: &[Complex64; 2], part: SpinorPart) -> f64 {
    let sign = match part {
        SpinorPart::Eta => Sign::Plus,
        SpinorPart::Xi => Sign::Minus,
    };
    vec_norm(&apply2(&sigma_operator(p, sign), spinor))
}

/// `‖(p⁰ ± σ·p)(p⁰ ∓ σ·p)s − m²s‖`; the upper sign for `Xi`.
pub fn second_order_residual(p: &FourVector, m: f64, spinor: &[Complex64; 2], part: SpinorPart) -> f64 {
    let (first, second) = match part {
        SpinorPart::Xi => (Sign::Plus, Sign::Minus),
        SpinorPart::Eta => (Sign::Minus, Sign::Plus),
    };
    let op = &sigma_operator(p, first) * &sigma_operator(p, second);
    let v = apply2(&op, spinor);
    let r = [v[0] - spinor[0] * m * m, v[1] - spinor[1] * m * m];
    vec_norm(&r)
}

/// `σ²` as a float matrix; used by the Majorana and conjugation code.
pub(crate) fn sigma2() -> ComplexMatrix {
    pauli(2)
}
