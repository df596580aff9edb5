//! Finite boosts and rotations acting on four-vectors and bispinors.
//!
//! A boost of rapidity χ along axis j is `S = exp(½χ γ⁰γʲ)`, a rotation by θ
//! about axis k is `S = exp(½θ γⁱγʲ)` with (i, j, k) cyclic. Both are summed
//! in closed form since `(γ⁰γʲ)² = I` and `(γⁱγʲ)² = −I`. These signs make
//! `S⁻¹γ^μS = Λ^μ_ν γ^ν` hold for the active transformations `Λ` below.

use nalgebra::Matrix4;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dirac::{build_gamma_spinor, dirac_residual, Bispinor, GammaRep};
use crate::error::{contract, domain, Result};
use crate::linalg::ComplexMatrix;
use crate::minkowski::{metric, FourVector};
use crate::susy::{build_projector, susy_residual};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Boost,
    Rotation,
}

/// One single-axis factor of a transformation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Generator {
    pub kind: Kind,
    pub axis: usize,
    /// Rapidity for boosts, angle for rotations.
    pub parameter: f64,
}

#[derive(Debug, Clone)]
pub struct LorentzTransform {
    /// `Λ^μ_ν`, row μ, column ν.
    pub vector_matrix: [[f64; 4]; 4],
    pub spinor_matrix: ComplexMatrix,
    spinor_inverse: ComplexMatrix,
    /// Factors in application order.
    pub generators: Vec<Generator>,
}

fn check_axis(axis: usize) -> Result<()> {
    if !(1..=3).contains(&axis) {
        return Err(contract(format!("axis must be 1, 2 or 3, got {axis}")));
    }
    Ok(())
}

fn check_finite(x: f64, what: &str) -> Result<()> {
    if !x.is_finite() {
        return Err(contract(format!("{what} must be finite, got {x}")));
    }
    Ok(())
}

fn exp_bilinear(rep: &GammaRep, a: usize, b: usize, half: f64, squares_to_one: bool) -> ComplexMatrix {
    let g = rep.gamma(a) * rep.gamma(b);
    let (c, s) = if squares_to_one { (half.cosh(), half.sinh()) } else { (half.cos(), half.sin()) };
    &ComplexMatrix::identity(4).scale_real(c) + &g.scale_real(s)
}

fn identity4() -> [[f64; 4]; 4] {
    std::array::from_fn(|i| std::array::from_fn(|j| f64::from(i == j)))
}

fn matmul4(a: &[[f64; 4]; 4], b: &[[f64; 4]; 4]) -> [[f64; 4]; 4] {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..4).map(|k| a[i][k] * b[k][j]).sum()))
}

/// The cyclic partners (i, j) of a rotation axis k.
fn rotation_plane(axis: usize) -> (usize, usize) {
    match axis {
        1 => (2, 3),
        2 => (3, 1),
        _ => (1, 2),
    }
}

pub fn make_boost(axis: usize, rapidity: f64) -> Result<LorentzTransform> {
    check_axis(axis)?;
    check_finite(rapidity, "rapidity")?;
    let rep = build_gamma_spinor();
    let mut lambda = identity4();
    let (c, s) = (rapidity.cosh(), rapidity.sinh());
    lambda[0][0] = c;
    lambda[axis][axis] = c;
    lambda[0][axis] = s;
    lambda[axis][0] = s;
    Ok(LorentzTransform {
        vector_matrix: lambda,
        spinor_matrix: exp_bilinear(&rep, 0, axis, 0.5 * rapidity, true),
        spinor_inverse: exp_bilinear(&rep, 0, axis, -0.5 * rapidity, true),
        generators: vec![Generator { kind: Kind::Boost, axis, parameter: rapidity }],
    })
}

pub fn make_rotation(axis: usize, angle: f64) -> Result<LorentzTransform> {
    check_axis(axis)?;
    check_finite(angle, "angle")?;
    let rep = build_gamma_spinor();
    let (i, j) = rotation_plane(axis);
    let mut lambda = identity4();
    let (c, s) = (angle.cos(), angle.sin());
    lambda[i][i] = c;
    lambda[j][j] = c;
    lambda[i][j] = -s;
    lambda[j][i] = s;
    Ok(LorentzTransform {
        vector_matrix: lambda,
        spinor_matrix: exp_bilinear(&rep, i, j, 0.5 * angle, false),
        spinor_inverse: exp_bilinear(&rep, i, j, -0.5 * angle, false),
        generators: vec![Generator { kind: Kind::Rotation, axis, parameter: angle }],
    })
}

impl LorentzTransform {
    pub fn identity() -> Self {
        Self {
            vector_matrix: identity4(),
            spinor_matrix: ComplexMatrix::identity(4),
            spinor_inverse: ComplexMatrix::identity(4),
            generators: Vec::new(),
        }
    }

    pub fn from_generator(g: &Generator) -> Result<Self> {
        match g.kind {
            Kind::Boost => make_boost(g.axis, g.parameter),
            Kind::Rotation => make_rotation(g.axis, g.parameter),
        }
    }

    /// Product of the factors, applied first to last.
    pub fn from_generators(gs: &[Generator]) -> Result<Self> {
        gs.iter().try_fold(Self::identity(), |acc, g| Ok(acc.then(&Self::from_generator(g)?)))
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &LorentzTransform) -> LorentzTransform {
        let mut generators = self.generators.clone();
        generators.extend(next.generators.iter().copied());
        LorentzTransform {
            vector_matrix: matmul4(&next.vector_matrix, &self.vector_matrix),
            spinor_matrix: &next.spinor_matrix * &self.spinor_matrix,
            spinor_inverse: &self.spinor_inverse * &next.spinor_inverse,
            generators,
        }
    }

    pub fn spinor_inverse(&self) -> &ComplexMatrix {
        &self.spinor_inverse
    }

    pub fn apply_vector(&self, p: &FourVector) -> FourVector {
        FourVector(std::array::from_fn(|mu| (0..4).map(|nu| self.vector_matrix[mu][nu] * p[nu]).sum()))
    }

    pub fn apply_spinor(&self, v: &[Complex64; 4]) -> [Complex64; 4] {
        let w = self.spinor_matrix.apply(v).expect("4x4");
        [w[0], w[1], w[2], w[3]]
    }

    /// Largest entry of `Λᵀ g Λ − g`.
    pub fn metric_defect(&self) -> f64 {
        let l = &self.vector_matrix;
        let mut worst = 0.0f64;
        for a in 0..4 {
            for b in 0..4 {
                let v: f64 = (0..4).map(|mu| l[mu][a] * metric(mu, mu) * l[mu][b]).sum();
                worst = worst.max((v - metric(a, b)).abs());
            }
        }
        worst
    }

    /// Largest entry of `S⁻¹γ^μS − Λ^μ_ν γ^ν` over μ.
    pub fn intertwining_defect(&self, rep: &GammaRep) -> f64 {
        (0..4)
            .map(|mu| {
                let lhs = &(&self.spinor_inverse * rep.gamma(mu)) * &self.spinor_matrix;
                let rhs = (0..4).fold(ComplexMatrix::zeros(4, 4), |acc, nu| {
                    &acc + &rep.gamma(nu).scale_real(self.vector_matrix[mu][nu])
                });
                lhs.max_abs_diff(&rhs)
            })
            .fold(0.0, f64::max)
    }

    /// Largest entry of `S·S⁻¹ − I`.
    pub fn inverse_defect(&self) -> f64 {
        (&self.spinor_matrix * &self.spinor_inverse).max_abs_diff(&ComplexMatrix::identity(4))
    }

    pub fn determinant(&self) -> f64 {
        Matrix4::from_fn(|i, j| self.vector_matrix[i][j]).determinant()
    }

    /// True when every factor is a boost along or a rotation about axis 3.
    pub fn is_z_subgroup(&self) -> bool {
        self.generators.iter().all(|g| g.axis == 3)
    }
}

/// `(Sψ, Λp)`; the input must solve the Dirac equation at `(p, m)`.
pub fn transform_dirac_solution(
    t: &LorentzTransform,
    psi: &Bispinor,
    p: &FourVector,
    m: f64,
) -> Result<(Bispinor, FourVector)> {
    let rep = build_gamma_spinor();
    let res = dirac_residual(&rep, p, m, psi);
    let scale = (p.euclidean_norm() + m.abs()).max(1.0) * psi.norm().max(f64::MIN_POSITIVE);
    if res > 1e-9 * scale {
        return Err(domain(format!("input is not a Dirac solution at p = {p}, m = {m}: residual {res:.3e}")));
    }
    let out = t.apply_spinor(&psi.to_array());
    Ok((Bispinor::from_slice(&out)?, t.apply_vector(p)))
}

/// `‖S·P₄ − P₄·S‖` (largest entry).
pub fn p4_commutation_residual(t: &LorentzTransform) -> f64 {
    let p4 = build_projector(4).expect("index 4").matrix.to_complex();
    t.spinor_matrix.commutator(&p4).max_abs()
}

/// Maps a solution of the projected equation at `(p, m)` to one at `(Λp, m)`.
/// Only transformations generated by z-boosts and z-rotations commute with
/// `P₄`; anything else is refused.
pub fn transform_susy_solution(
    t: &LorentzTransform,
    v: &[Complex64; 4],
    p: &FourVector,
    m: f64,
) -> Result<([Complex64; 4], FourVector)> {
    if !t.is_z_subgroup() {
        return Err(domain("only boosts along and rotations about axis 3 preserve the projected equation manifestly"));
    }
    let rep = build_gamma_spinor();
    let res = susy_residual(&rep, p, m, v);
    let norm = crate::linalg::vec_norm(v).max(f64::MIN_POSITIVE);
    if res > 1e-9 * (p.euclidean_norm() + m.abs()).max(1.0) * norm {
        return Err(domain(format!(
            "input does not solve the projected equation at p = {p}, m = {m}: residual {res:.3e}"
        )));
    }
    Ok((t.apply_spinor(v), t.apply_vector(p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{c64, vec_dist};
    use std::f64::consts::PI;

    #[test]
    fn zero_parameters_are_identity() {
        for axis in 1..=3 {
            for t in [make_boost(axis, 0.0).unwrap(), make_rotation(axis, 0.0).unwrap()] {
                assert_eq!(t.vector_matrix, identity4());
                assert_eq!(t.spinor_matrix, ComplexMatrix::identity(4));
            }
        }
    }

    #[test]
    fn z_boost_of_time_axis() {
        let chi = 0.83;
        let t = make_boost(3, chi).unwrap();
        let out = t.apply_vector(&FourVector::new(1.0, 0.0, 0.0, 0.0));
        assert_eq!(out, FourVector::new(chi.cosh(), 0.0, 0.0, chi.sinh()));
    }

    #[test]
    fn intertwining_boost_and_rotation() {
        let rep = build_gamma_spinor();
        for axis in 1..=3 {
            assert!(make_boost(axis, 0.7).unwrap().intertwining_defect(&rep) < 1e-12);
            assert!(make_rotation(axis, 1.1).unwrap().intertwining_defect(&rep) < 1e-12);
        }
    }

    #[test]
    fn full_turn_flips_spinors() {
        let t = make_rotation(3, 2.0 * PI).unwrap();
        let lam_err = t
            .vector_matrix
            .iter()
            .flatten()
            .zip(identity4().iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        assert!(lam_err < 1e-12);
        assert!(t.spinor_matrix.max_abs_diff(&ComplexMatrix::identity(4).scale_real(-1.0)) < 1e-12);
    }

    #[test]
    fn boosted_rest_solution() {
        let rep = build_gamma_spinor();
        let m = 1.0;
        let p = FourVector::new(m, 0.0, 0.0, 0.0);
        let psi = Bispinor::new(c64(1.0, 0.0), c64(0.0, 0.0), c64(1.0, 0.0), c64(0.0, 0.0));
        let t = make_boost(3, 0.9).unwrap();
        let (psi2, p2) = transform_dirac_solution(&t, &psi, &p, m).unwrap();
        assert!(dirac_residual(&rep, &p2, m, &psi2) < 1e-12);
        let (same, p_same) = transform_dirac_solution(&LorentzTransform::identity(), &psi, &p, m).unwrap();
        assert_eq!((same, p_same), (psi, p));
    }

    #[test]
    fn boosts_compose_additively() {
        let a = make_boost(3, 0.4).unwrap();
        let b = make_boost(3, 0.75).unwrap();
        let ab = a.then(&b);
        let single = make_boost(3, 1.15).unwrap();
        assert!(ab.spinor_matrix.max_abs_diff(&single.spinor_matrix) < 1e-12);
        let p = FourVector::new(2.0, 0.1, 0.2, 0.3);
        let d: f64 = (0..4).map(|k| (ab.apply_vector(&p)[k] - single.apply_vector(&p)[k]).abs()).sum();
        assert!(d < 1e-12);
        assert!(ab.inverse_defect() < 1e-12);
    }

    #[test]
    fn p4_commutes_with_z_subgroup_only() {
        assert!(p4_commutation_residual(&make_boost(3, 1.3).unwrap()) < 1e-12);
        assert!(p4_commutation_residual(&make_rotation(3, 2.2).unwrap()) < 1e-12);
        assert!(p4_commutation_residual(&make_rotation(1, 1.0).unwrap()) > 0.1);
    }

    #[test]
    fn non_z_susy_transform_refused() {
        let z = c64(0.0, 0.0);
        let v = [z, z, z, c64(1.0, 0.0)];
        let t = make_rotation(1, 0.3).unwrap();
        assert!(matches!(
            transform_susy_solution(&t, &v, &FourVector::new(1.0, 0.0, 0.0, 0.0), 1.0),
            Err(crate::Error::Domain(_))
        ));
    }

    #[test]
    fn susy_solution_survives_z_boost() {
        let rep = build_gamma_spinor();
        let m = 1.0;
        let p = FourVector::new(m, 0.0, 0.0, 0.0);
        let v = [c64(1.0, 0.0), c64(0.0, 0.0), c64(1.0, 0.0), c64(0.0, 0.0)];
        let t = make_boost(3, 0.5).unwrap();
        let (v2, p2) = transform_susy_solution(&t, &v, &p, m).unwrap();
        assert!(susy_residual(&rep, &p2, m, &v2) < 1e-10);
        let (same, _) = transform_susy_solution(&LorentzTransform::identity(), &v, &p, m).unwrap();
        assert!(vec_dist(&same, &v) == 0.0);
    }

    #[test]
    fn bad_axis_rejected() {
        assert!(make_boost(0, 0.1).is_err());
        assert!(make_rotation(4, 0.1).is_err());
        assert!(make_boost(1, f64::INFINITY).is_err());
    }
}
