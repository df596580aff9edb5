//! The projected Dirac equation `γ^μ p_μ P₄Ψ = m P₄Ψ`, shared by the embedded
//! spin-0 DKP triples and the embedded Dirac constituents.
//!
//! Nothing here builds a superalgebra; "susy" only names the fact that vector
//! and spinor subsolutions solve one and the same equation.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::dirac::{build_gamma_spinor, dirac_solutions, Bispinor, GammaRep};
use crate::dkp::{build_beta_spin0, dkp_solutions, DkpVector5};
use crate::error::{contract, domain, Result};
use crate::linalg::{c64, null_space, vec_norm, ComplexMatrix, ExactMatrix, GaussInt, NullSpaceResult};
use crate::minkowski::FourVector;
use crate::subsolutions::{
    constituent_identity_residual, constituent_residual, embed_dirac_constituent, embed_dkp_triple, split_dirac,
    split_dkp_spin0, triple_identity_residual, triple_residual, SystemForm,
};

/// `diag(1, 1, 1, 1)` with a single zero at position `index` (one-based).
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalProjector {
    pub index: usize,
    pub matrix: ExactMatrix,
}

pub fn build_projector(index: usize) -> Result<DiagonalProjector> {
    if !(1..=4).contains(&index) {
        return Err(contract(format!("projector index must be 1..=4, got {index}")));
    }
    let diag: Vec<GaussInt> = (1..=4).map(|k| GaussInt::new(i64::from(k != index), 0)).collect();
    Ok(DiagonalProjector { index, matrix: ExactMatrix::diagonal(&diag) })
}

/// `¼(3 + γ⁵ − γ⁰γ³ + iγ¹γ²)`, exactly.
pub fn build_p4_from_gammas(rep: &GammaRep) -> ExactMatrix {
    p4_formula(rep, rep.gamma5_exact())
}

/// The same formula evaluated with `−γ⁵`; kept to show that only the
/// `diag(1, 1, −1, −1)` sign reproduces `P₄`.
pub fn p4_formula_with_flipped_gamma5(rep: &GammaRep) -> ExactMatrix {
    p4_formula(rep, &-rep.gamma5_exact())
}

fn p4_formula(rep: &GammaRep, gamma5: &ExactMatrix) -> ExactMatrix {
    let three = ExactMatrix::identity(4).scale(GaussInt::new(3, 0));
    let g03 = rep.gamma_exact(0) * rep.gamma_exact(3);
    let g12 = (rep.gamma_exact(1) * rep.gamma_exact(2)).scale(GaussInt::new(0, 1));
    (&(&(&three + gamma5) - &g03) + &g12).halve(2)
}

fn p4() -> ComplexMatrix {
    build_projector(4).expect("index 4").matrix.to_complex()
}

/// Momentum at which `γ^μ p_μ` equals the (B) system matrix at `p`.
pub fn momentum_for_form(form: SystemForm, p: &FourVector) -> FourVector {
    match form {
        SystemForm::A => *p,
        SystemForm::B => {
            let [p0, p1, p2, p3] = p.components();
            FourVector::new(p0, p1, -p2, -p3)
        }
    }
}

/// `(γ^μ p_μ − m)·P₄`.
pub fn susy_operator(rep: &GammaRep, p: &FourVector, m: f64) -> ComplexMatrix {
    let op = &rep.slash(p) - &ComplexMatrix::identity(4).scale_real(m);
    &op * &p4()
}

/// `‖(γ^μ p_μ)P₄v − mP₄v‖`
pub fn susy_residual(rep: &GammaRep, p: &FourVector, m: f64, v: &[Complex64; 4]) -> f64 {
    vec_norm(&susy_operator(rep, p, m).apply(v).expect("4x4"))
}

/// Residual against the system of the given form; `B` evaluates the
/// projected equation at the reflected momentum.
pub fn susy_residual_for(form: SystemForm, rep: &GammaRep, p: &FourVector, m: f64, v: &[Complex64; 4]) -> f64 {
    susy_residual(rep, &momentum_for_form(form, p), m, v)
}

/// `(‖P₄(γ·p)P₄v − mP₄v‖, ‖(1 − P₄)(γ·p)P₄v‖)`. Their squares add up to the
/// square of [`susy_residual`].
pub fn decompose_susy(rep: &GammaRep, p: &FourVector, m: f64, v: &[Complex64; 4]) -> (f64, f64) {
    let proj = p4();
    let comp = &ComplexMatrix::identity(4) - &proj;
    let p4v = proj.apply(v).expect("4x4");
    let slashed = rep.slash(p).apply(&p4v).expect("4x4");
    let upper = proj.apply(&slashed).expect("4x4");
    let a: Vec<Complex64> = upper.iter().zip(&p4v).map(|(x, y)| x - y * m).collect();
    let b = comp.apply(&slashed).expect("4x4");
    (vec_norm(&a), vec_norm(&b))
}

/// Kernel of the projected equation split into physical solutions (fourth
/// component zero) and the trivial direction `e₄` annihilated by `P₄`.
#[derive(Debug, Clone)]
pub struct SusySolutionSpace {
    pub physical: NullSpaceResult,
    pub trivial: [Complex64; 4],
}

pub fn susy_solutions(rep: &GammaRep, p: &FourVector, m: f64, tol: f64) -> Result<SusySolutionSpace> {
    let op = susy_operator(rep, p, m);
    let restricted = ComplexMatrix::from_rows(&(0..4).map(|i| op.row(i)[..3].to_vec()).collect::<Vec<_>>())?;
    let mut physical = null_space(&restricted, tol)?;
    for v in &mut physical.basis {
        v.push(c64(0.0, 0.0));
    }
    let z = c64(0.0, 0.0);
    Ok(SusySolutionSpace { physical, trivial: [z, z, z, c64(1.0, 0.0)] })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResidual {
    pub name: String,
    pub residual: f64,
}

/// Residuals of the shared-equation checks at one `(p, m)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossCheckReport {
    pub momentum: FourVector,
    pub mass: f64,
    pub checks: Vec<CheckResidual>,
}

impl CrossCheckReport {
    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }

    fn push(&mut self, name: impl Into<String>, residual: f64) {
        self.checks.push(CheckResidual { name: name.into(), residual });
    }
}

fn random_phase(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::from_polar(rng.random_range(0.5..2.0), rng.random_range(0.0..std::f64::consts::TAU))
}

/// Splits a DKP spin-0 solution and every Dirac solution at `(p, m)`, embeds
/// the constituents and checks that left/branch-1 vectors solve the projected
/// (A) equation and right/branch-2 vectors solve the (B) one.
///
/// `seed` draws the complex coefficients of the solutions taken from each
/// kernel, so the check does not depend on the particular SVD basis.
pub fn susy_cross_check(p: &FourVector, m: f64, seed: u64, tol: f64) -> Result<CrossCheckReport> {
    if !(m > 0.0) {
        return Err(domain(format!("cross check needs m > 0, got {m}")));
    }
    p.require_on_shell(m, tol)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rep = build_gamma_spinor();
    let mut report = CrossCheckReport { momentum: *p, mass: m, checks: Vec::new() };

    let dkp = dkp_solutions(&build_beta_spin0(), p, m, tol)?;
    if dkp.dimension != 1 {
        return Err(domain(format!("expected a 1-dimensional spin-0 kernel, got {}", dkp.dimension)));
    }
    let coef = random_phase(&mut rng);
    let amp: Vec<Complex64> = dkp.basis[0].iter().map(|z| z * coef).collect();
    let (left, right) = split_dkp_spin0(&DkpVector5::from_slice(&amp)?, p, m)?;
    for (label, t, form) in [("left", left, SystemForm::A), ("right", right, SystemForm::B)] {
        let v = embed_dkp_triple(&t);
        report.push(format!("dkp.{label}.triple"), triple_residual(&t, p, m));
        report.push(format!("dkp.{label}.identity"), triple_identity_residual(&t, p));
        report.push(format!("dkp.{label}.susy"), susy_residual_for(form, &rep, p, m, &v));
    }

    let dirac = dirac_solutions(p, m, tol)?;
    if dirac.dimension != 2 {
        return Err(domain(format!("expected a 2-dimensional Dirac kernel, got {}", dirac.dimension)));
    }
    let mut candidates = dirac.basis.clone();
    let (a, b) = (random_phase(&mut rng), random_phase(&mut rng));
    candidates.push(dirac.basis[0].iter().zip(&dirac.basis[1]).map(|(x, y)| x * a + y * b).collect());
    for (k, sol) in candidates.iter().enumerate() {
        let (c1, c2) = split_dirac(&Bispinor::from_slice(sol)?, p, m)?;
        for (label, c, form) in [("branch1", c1, SystemForm::A), ("branch2", c2, SystemForm::B)] {
            let v = embed_dirac_constituent(&c);
            report.push(format!("dirac{k}.{label}.constituent"), constituent_residual(&c, p, m));
            report.push(format!("dirac{k}.{label}.identity"), constituent_identity_residual(&c, p));
            report.push(format!("dirac{k}.{label}.susy"), susy_residual_for(form, &rep, p, m, &v));
        }
    }
    Ok(report)
}
