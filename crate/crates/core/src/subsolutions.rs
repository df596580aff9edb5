//! Splitting of spin-0 DKP and Dirac plane-wave solutions into three-component
//! constituents, and their embedding as four-component vectors with a zero
//! last slot that solve a Dirac-form system.
//!
//! The two Dirac-form systems shared by both kinds of constituent are
//!
//! ```text
//! A(p) = [ 0        0        p⁰+p³   p¹−ip² ]      B(p) = [ 0        0        p⁰−p³   p¹+ip² ]
//!        [ 0        0        p¹+ip²  p⁰−p³  ]             [ 0        0        p¹−ip²  p⁰+p³  ]
//!        [ p⁰−p³   −p¹+ip²   0       0      ]             [ p⁰+p³   −p¹−ip²   0       0      ]
//!        [ −p¹−ip²  p⁰+p³    0       0      ]             [ −p¹+ip²  p⁰−p³    0       0      ]
//! ```
//!
//! `A(p)` is `γ^μ p_μ` in the spinor representation; `B(p)` is `A` with `p²`
//! and `p³` reversed in sign.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dirac::{build_gamma_spinor, dirac_residual, Bispinor};
use crate::dkp::DkpVector5;
use crate::error::{contract, domain, Result};
use crate::linalg::{c64, vec_norm, ComplexMatrix};
use crate::minkowski::{lower_spinor, spinor_components, upper_spinor, vector_to_spinor, FourVector};

/// Relative residual above which an input is not accepted as a solution.
pub const SOLUTION_CHECK_TOL: f64 = 1e-9;

/// Dotted index carried by a spin-0 triple: `Left` is 1̇, `Right` is 2̇.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    fn dotted(self) -> usize {
        match self {
            Side::Left => 1,
            Side::Right => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    One,
    Two,
}

/// Which Dirac-form system a four-component vector is tested against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SystemForm {
    A,
    B,
}

/// `(ψ^{1Ḃ}, ψ^{2Ḃ}, ψ)` for a fixed dotted index Ḃ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarTriple {
    pub comp1: Complex64,
    pub comp2: Complex64,
    pub scalar: Complex64,
    pub side: Side,
}

/// `(ξ₍ₖ₎¹, ξ₍ₖ₎², η_k̇)` for branch k.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiracConstituent {
    pub xi_a: Complex64,
    pub xi_b: Complex64,
    pub eta: Complex64,
    pub branch: Branch,
}

fn scale_of(p: &FourVector, m: f64, norm: f64) -> f64 {
    (p.euclidean_norm() + m).max(1.0) * norm.max(f64::MIN_POSITIVE)
}

/// Residual of the three equations
/// `p^{1Ḃ}ψ = mψ^{1Ḃ}`, `p^{2Ḃ}ψ = mψ^{2Ḃ}`, `p_{1Ḃ}ψ^{1Ḃ} + p_{2Ḃ}ψ^{2Ḃ} = mψ`.
pub fn triple_residual(t: &ScalarTriple, p: &FourVector, m: f64) -> f64 {
    let s = vector_to_spinor(p);
    let b = t.side.dotted();
    let r = [
        s.up(1, b) * t.scalar - t.comp1 * m,
        s.up(2, b) * t.scalar - t.comp2 * m,
        s.down(1, b) * t.comp1 + s.down(2, b) * t.comp2 - t.scalar * m,
    ];
    vec_norm(&r)
}

/// `|p^{2Ḃ}ψ^{1Ḃ} − p^{1Ḃ}ψ^{2Ḃ}|`
pub fn triple_identity_residual(t: &ScalarTriple, p: &FourVector) -> f64 {
    let s = vector_to_spinor(p);
    let b = t.side.dotted();
    (s.up(2, b) * t.comp1 - s.up(1, b) * t.comp2).norm()
}

/// Coefficient matrix of the triple equations in the unknowns
/// `(ψ^{1Ḃ}, ψ^{2Ḃ}, ψ)`.
pub fn triple_system_matrix(p: &FourVector, m: f64, side: Side) -> ComplexMatrix {
    let s = vector_to_spinor(p);
    let b = side.dotted();
    let mm = c64(-m, 0.0);
    let z = c64(0.0, 0.0);
    ComplexMatrix::from_rows(&[vec![mm, z, s.up(1, b)], vec![z, mm, s.up(2, b)], vec![s.down(1, b), s.down(2, b), mm]])
        .expect("3x3")
}

/// Splits a spin-0 DKP solution into its left (1̇) and right (2̇) triples.
pub fn split_dkp_spin0(sol: &DkpVector5, p: &FourVector, m: f64) -> Result<(ScalarTriple, ScalarTriple)> {
    if !(m > 0.0) {
        return Err(domain(format!("splitting needs m > 0, got {m}")));
    }
    let res = sol.component_residual(p, m);
    if res > SOLUTION_CHECK_TOL * scale_of(p, m, sol.norm()) {
        return Err(domain(format!("input is not a spin-0 DKP solution at p = {p}, m = {m}: residual {res:.3e}")));
    }
    let s = upper_spinor(sol.psi_mu);
    let left = ScalarTriple { comp1: s[0][0], comp2: s[1][0], scalar: sol.psi, side: Side::Left };
    let right = ScalarTriple { comp1: s[0][1], comp2: s[1][1], scalar: sol.psi, side: Side::Right };
    Ok((left, right))
}

/// Rebuilds the DKP amplitude from both triples.
pub fn merge_dkp_triples(left: &ScalarTriple, right: &ScalarTriple) -> Result<DkpVector5> {
    if left.side != Side::Left || right.side != Side::Right {
        return Err(contract("merge expects a left and a right triple"));
    }
    let s = [[left.comp1, right.comp1], [left.comp2, right.comp2]];
    Ok(DkpVector5 { psi_mu: spinor_components(s), psi: (left.scalar + right.scalar) * 0.5 })
}

/// Left → `(ψ^{11̇}, ψ^{21̇}, ψ, 0)`; right → `(ψ^{22̇}, ψ^{12̇}, ψ, 0)`.
pub fn embed_dkp_triple(t: &ScalarTriple) -> [Complex64; 4] {
    let z = c64(0.0, 0.0);
    match t.side {
        Side::Left => [t.comp1, t.comp2, t.scalar, z],
        Side::Right => [t.comp2, t.comp1, t.scalar, z],
    }
}

/// The system an embedded triple or constituent solves.
pub fn form_of_side(side: Side) -> SystemForm {
    match side {
        Side::Left => SystemForm::A,
        Side::Right => SystemForm::B,
    }
}

pub fn form_of_branch(branch: Branch) -> SystemForm {
    match branch {
        Branch::One => SystemForm::A,
        Branch::Two => SystemForm::B,
    }
}

/// Residual of the constituent equations for branch 1
/// `(p⁰+p³)η = mξ¹, (p¹+ip²)η = mξ², (p⁰−p³)ξ¹ + (−p¹+ip²)ξ² = mη`
/// or branch 2
/// `(p¹−ip²)η = mξ¹, (p⁰−p³)η = mξ², (−p¹−ip²)ξ¹ + (p⁰+p³)ξ² = mη`.
pub fn constituent_residual(c: &DiracConstituent, p: &FourVector, m: f64) -> f64 {
    let [p0, p1, p2, p3] = p.components();
    let i = Complex64::i();
    let r = match c.branch {
        Branch::One => [
            (p0 + p3) * c.eta - m * c.xi_a,
            (p1 + i * p2) * c.eta - m * c.xi_b,
            (p0 - p3) * c.xi_a + (-p1 + i * p2) * c.xi_b - m * c.eta,
        ],
        Branch::Two => [
            (p1 - i * p2) * c.eta - m * c.xi_a,
            (p0 - p3) * c.eta - m * c.xi_b,
            (-p1 - i * p2) * c.xi_a + (p0 + p3) * c.xi_b - m * c.eta,
        ],
    };
    vec_norm(&r)
}

/// Branch 1: `|(p¹+ip²)ξ¹ − (p⁰+p³)ξ²|`; branch 2: `|(p⁰−p³)ξ¹ − (p¹−ip²)ξ²|`.
pub fn constituent_identity_residual(c: &DiracConstituent, p: &FourVector) -> f64 {
    let [p0, p1, p2, p3] = p.components();
    let i = Complex64::i();
    match c.branch {
        Branch::One => ((p1 + i * p2) * c.xi_a - (p0 + p3) * c.xi_b).norm(),
        Branch::Two => ((p0 - p3) * c.xi_a - (p1 - i * p2) * c.xi_b).norm(),
    }
}

/// Splits a Dirac solution through `ξ₍₁₎ = (p⁰+p³, p¹+ip²)η_1̇/m` and
/// `ξ₍₂₎ = (p¹−ip², p⁰−p³)η_2̇/m`.
pub fn split_dirac(sol: &Bispinor, p: &FourVector, m: f64) -> Result<(DiracConstituent, DiracConstituent)> {
    if !(m > 0.0) {
        return Err(domain(format!("splitting needs m > 0, got {m}")));
    }
    let rep = build_gamma_spinor();
    let res = dirac_residual(&rep, p, m, sol);
    if res > SOLUTION_CHECK_TOL * scale_of(p, m, sol.norm()) {
        return Err(domain(format!("input is not a Dirac solution at p = {p}, m = {m}: residual {res:.3e}")));
    }
    let [p0, p1, p2, p3] = p.components();
    let i = Complex64::i();
    let c1 = DiracConstituent {
        xi_a: (p0 + p3) * sol.eta1 / m,
        xi_b: (p1 + i * p2) * sol.eta1 / m,
        eta: sol.eta1,
        branch: Branch::One,
    };
    let c2 = DiracConstituent {
        xi_a: (p1 - i * p2) * sol.eta2 / m,
        xi_b: (p0 - p3) * sol.eta2 / m,
        eta: sol.eta2,
        branch: Branch::Two,
    };
    Ok((c1, c2))
}

/// Branch 1 → `(ξ₍₁₎¹, ξ₍₁₎², η_1̇, 0)`; branch 2 → `(ξ₍₂₎², ξ₍₂₎¹, η_2̇, 0)`.
pub fn embed_dirac_constituent(c: &DiracConstituent) -> [Complex64; 4] {
    let z = c64(0.0, 0.0);
    match c.branch {
        Branch::One => [c.xi_a, c.xi_b, c.eta, z],
        Branch::Two => [c.xi_b, c.xi_a, c.eta, z],
    }
}

/// Sums the constituents back into `(ξ¹, ξ², η_1̇, η_2̇)`.
pub fn reassemble(c1: &DiracConstituent, c2: &DiracConstituent) -> Result<Bispinor> {
    if c1.branch != Branch::One || c2.branch != Branch::Two {
        return Err(contract("reassemble expects branch 1 then branch 2"));
    }
    Ok(Bispinor::new(c1.xi_a + c2.xi_a, c1.xi_b + c2.xi_b, c1.eta, c2.eta))
}

/// The Dirac-form matrix `A(p)` or `B(p)`, entered entry by entry.
pub fn system_matrix(form: SystemForm, p: &FourVector) -> ComplexMatrix {
    let [p0, p1, p2, p3] = p.components();
    let c = |re: f64, im: f64| c64(re, im);
    let z = c(0.0, 0.0);
    let rows = match form {
        SystemForm::A => vec![
            vec![z, z, c(p0 + p3, 0.0), c(p1, -p2)],
            vec![z, z, c(p1, p2), c(p0 - p3, 0.0)],
            vec![c(p0 - p3, 0.0), c(-p1, p2), z, z],
            vec![c(-p1, -p2), c(p0 + p3, 0.0), z, z],
        ],
        SystemForm::B => vec![
            vec![z, z, c(p0 - p3, 0.0), c(p1, p2)],
            vec![z, z, c(p1, -p2), c(p0 + p3, 0.0)],
            vec![c(p0 + p3, 0.0), c(-p1, -p2), z, z],
            vec![c(-p1, p2), c(p0 - p3, 0.0), z, z],
        ],
    };
    ComplexMatrix::from_rows(&rows).expect("4x4")
}

/// `‖M(p)v − m·v‖` for the chosen system.
pub fn embedded_residual(form: SystemForm, p: &FourVector, m: f64, v: &[Complex64; 4]) -> f64 {
    let mv = system_matrix(form, p).apply(v).expect("4x4");
    let r: Vec<Complex64> = mv.iter().zip(v).map(|(a, b)| a - b * m).collect();
    vec_norm(&r)
}

/// Fourth row of the system applied to `v`: the identity part of the system.
pub fn embedded_identity_row(form: SystemForm, p: &FourVector, v: &[Complex64; 4]) -> f64 {
    system_matrix(form, p).apply(v).expect("4x4")[3].norm()
}

/// Half-pairing form of a complex `ψ^μ` restricted to one dotted index,
/// `p_{1Ḃ}ψ^{1Ḃ} + p_{2Ḃ}ψ^{2Ḃ}`.
pub fn half_contraction(p: &FourVector, psi_mu: [Complex64; 4], side: Side) -> Complex64 {
    let lower = lower_spinor(p.0.map(|x| c64(x, 0.0)));
    let upper = upper_spinor(psi_mu);
    let b = side.dotted() - 1;
    lower[0][b] * upper[0][b] + lower[1][b] * upper[1][b]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::{build_gamma_spinor, dirac_solutions};
    use crate::dkp::{build_beta_spin0, dkp_solutions};
    use crate::linalg::{null_space, vec_dist, DEFAULT_TOL};

    fn r(x: f64) -> Complex64 {
        c64(x, 0.0)
    }

    fn generic() -> (FourVector, f64) {
        let m = 1.3;
        (FourVector::on_shell([0.8, -1.7, 2.2], m), m)
    }

    #[test]
    fn system_matrices_match_gamma_forms() {
        let rep = build_gamma_spinor();
        let p = FourVector::new(2.5, 0.3, -1.1, 0.7);
        assert!(system_matrix(SystemForm::A, &p).max_abs_diff(&rep.slash(&p)) == 0.0);
        let reflected = FourVector::new(2.5, 0.3, 1.1, -0.7);
        assert!(system_matrix(SystemForm::B, &p).max_abs_diff(&rep.slash(&reflected)) == 0.0);
    }

    #[test]
    fn rest_frame_dkp_split() {
        let m = 1.0;
        let p = FourVector::new(m, 0.0, 0.0, 0.0);
        let sol = DkpVector5 { psi_mu: [r(1.0), r(0.0), r(0.0), r(0.0)], psi: r(1.0) };
        let (left, right) = split_dkp_spin0(&sol, &p, m).unwrap();
        assert_eq!((left.comp1, left.comp2, left.scalar), (r(1.0), r(0.0), r(1.0)));
        assert_eq!((right.comp1, right.comp2, right.scalar), (r(0.0), r(1.0), r(1.0)));
        assert_eq!(triple_identity_residual(&left, &p), 0.0);
        assert_eq!(triple_identity_residual(&right, &p), 0.0);
        let v = embed_dkp_triple(&left);
        assert_eq!(v, [r(1.0), r(0.0), r(1.0), r(0.0)]);
        assert_eq!(embedded_residual(SystemForm::A, &p, m, &v), 0.0);
    }

    #[test]
    fn generic_dkp_split() {
        let (p, m) = generic();
        let sol = dkp_solutions(&build_beta_spin0(), &p, m, DEFAULT_TOL).unwrap();
        let v = DkpVector5::from_slice(&sol.basis[0]).unwrap();
        let (left, right) = split_dkp_spin0(&v, &p, m).unwrap();
        for t in [&left, &right] {
            assert!(triple_residual(t, &p, m) < 1e-10);
            assert!(triple_identity_residual(t, &p) < 1e-10);
            let e = embed_dkp_triple(t);
            assert!(embedded_residual(form_of_side(t.side), &p, m, &e) < 1e-10);
        }
        let merged = merge_dkp_triples(&left, &right).unwrap();
        assert!(vec_dist(&merged.to_array(), &v.to_array()) < 1e-12);
    }

    #[test]
    fn triple_mass_property() {
        let (p, m) = generic();
        for side in [Side::Left, Side::Right] {
            let on = null_space(&triple_system_matrix(&p, m, side), DEFAULT_TOL).unwrap();
            assert_eq!(on.dimension, 1);
            let off = null_space(&triple_system_matrix(&p, m * 1.1, side), DEFAULT_TOL).unwrap();
            assert_eq!(off.dimension, 0);
        }
    }

    #[test]
    fn zero_triple_embeds_to_zero() {
        let t = ScalarTriple { comp1: r(0.0), comp2: r(0.0), scalar: r(0.0), side: Side::Right };
        assert_eq!(embed_dkp_triple(&t), [r(0.0); 4]);
    }

    #[test]
    fn non_solutions_are_rejected() {
        let (p, m) = generic();
        let junk = DkpVector5 { psi_mu: [r(1.0), r(2.0), r(3.0), r(4.0)], psi: r(5.0) };
        assert!(matches!(split_dkp_spin0(&junk, &p, m), Err(crate::Error::Domain(_))));
        let bad = Bispinor::new(r(1.0), r(0.0), r(0.0), r(0.0));
        assert!(matches!(split_dirac(&bad, &p, m), Err(crate::Error::Domain(_))));
        let rest = Bispinor::new(r(1.0), r(0.0), r(1.0), r(0.0));
        assert!(split_dirac(&rest, &FourVector::ZERO, 0.0).is_err());
    }

    #[test]
    fn rest_frame_dirac_split() {
        let m = 1.0;
        let p = FourVector::new(m, 0.0, 0.0, 0.0);
        let sol = Bispinor::new(r(1.0), r(0.0), r(1.0), r(0.0));
        let (c1, c2) = split_dirac(&sol, &p, m).unwrap();
        assert_eq!((c1.xi_a, c1.xi_b, c1.eta), (r(1.0), r(0.0), r(1.0)));
        assert_eq!((c2.xi_a, c2.xi_b, c2.eta), (r(0.0), r(0.0), r(0.0)));
        assert_eq!(c1.xi_a + c2.xi_a, sol.xi1);
        assert_eq!(c1.xi_b + c2.xi_b, sol.xi2);
        let v = embed_dirac_constituent(&c1);
        assert_eq!(v, [r(1.0), r(0.0), r(1.0), r(0.0)]);
        assert_eq!(embedded_residual(SystemForm::A, &p, m, &v), 0.0);
        assert_eq!(reassemble(&c1, &c2).unwrap(), sol);
    }

    #[test]
    fn generic_dirac_split() {
        let (p, m) = generic();
        for b in dirac_solutions(&p, m, DEFAULT_TOL).unwrap().basis {
            let sol = Bispinor::from_slice(&b).unwrap();
            let (c1, c2) = split_dirac(&sol, &p, m).unwrap();
            for c in [&c1, &c2] {
                assert!(constituent_residual(c, &p, m) < 1e-10);
                assert!(constituent_identity_residual(c, &p) < 1e-10);
                let e = embed_dirac_constituent(c);
                assert!(embedded_residual(form_of_branch(c.branch), &p, m, &e) < 1e-10);
                assert!(embedded_identity_row(form_of_branch(c.branch), &p, &e) < 1e-10);
            }
            let back = reassemble(&c1, &c2).unwrap();
            assert!(vec_dist(&back.to_array(), &sol.to_array()) < 1e-12);
        }
    }

    #[test]
    fn unswapped_branch_two_order_fails_b_system() {
        let (p, m) = generic();
        let sol = Bispinor::from_slice(&dirac_solutions(&p, m, DEFAULT_TOL).unwrap().basis[0]).unwrap();
        let (_, c2) = split_dirac(&sol, &p, m).unwrap();
        let unswapped = [c2.xi_a, c2.xi_b, c2.eta, r(0.0)];
        let swapped = embed_dirac_constituent(&c2);
        assert!(embedded_residual(SystemForm::B, &p, m, &swapped) < 1e-10);
        assert!(embedded_residual(SystemForm::B, &p, m, &unswapped) > 1e-3 * vec_norm(&unswapped));
    }

    #[test]
    fn half_contraction_gives_m_psi() {
        let (p, m) = generic();
        let v = DkpVector5::from_scalar(&p, m, c64(0.4, -0.9));
        for side in [Side::Left, Side::Right] {
            assert!((half_contraction(&p, v.psi_mu, side) - v.psi * m).norm() < 1e-12);
        }
    }

    #[test]
    fn reassemble_rejects_swapped_branches() {
        let c = DiracConstituent { xi_a: r(0.0), xi_b: r(0.0), eta: r(0.0), branch: Branch::One };
        assert!(reassemble(&c, &c).is_err());
        let z = DiracConstituent { branch: Branch::Two, ..c };
        assert_eq!(reassemble(&c, &z).unwrap(), Bispinor::zero());
    }
}
