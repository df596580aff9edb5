//! Majorana equations `(p⁰ + σ·p)η = −imσ²η*` and `(p⁰ − σ·p)ξ = +imσ²ξ*`.
//!
//! The conjugate mixes `e^{−ip·x}` with `e^{+ip·x}`, so solutions are sought
//! as `a·e^{−ip·x} + b·e^{+ip·x}`. Matching exponentials gives, for η,
//!
//! ```text
//! (p⁰ + σ·p)a + imσ²b* = 0
//! (p⁰ + σ·p)b − imσ²a* = 0
//! ```
//!
//! and the same with `p⁰ − σ·p` and the sign of `m` flipped for ξ.

use num_complex::Complex64;

use super::{sigma2, sigma_operator, PlaneWave, PlaneWaveSuperposition, Sign, SpinorPart};
use crate::error::{domain, Result};
use crate::linalg::{null_space, realify_antilinear, unstack_real, vec_norm, ComplexMatrix, NullSpaceResult};
use crate::minkowski::FourVector;

/// One real solution `(a, b)` of the matched Majorana system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MajoranaMode {
    pub part: SpinorPart,
    /// Amplitude of `e^{−ip·x}`.
    pub a: [Complex64; 2],
    /// Amplitude of `e^{+ip·x}`.
    pub b: [Complex64; 2],
}

impl MajoranaMode {
    /// Decodes a null vector of the realified system, `(Re a, Re b, Im a, Im b)`.
    pub fn from_real_basis(part: SpinorPart, v: &[Complex64]) -> Self {
        let z = unstack_real(v);
        Self { part, a: [z[0], z[1]], b: [z[2], z[3]] }
    }
}

fn mass_sign(part: SpinorPart) -> f64 {
    match part {
        SpinorPart::Eta => 1.0,
        SpinorPart::Xi => -1.0,
    }
}

fn kinetic(p: &FourVector, part: SpinorPart) -> ComplexMatrix {
    match part {
        SpinorPart::Eta => sigma_operator(p, Sign::Plus),
        SpinorPart::Xi => sigma_operator(p, Sign::Minus),
    }
}

/// Linear and antilinear parts acting on the unknown `(a, b) ∈ ℂ⁴`.
pub fn majorana_system(p: &FourVector, m: f64, part: SpinorPart) -> (ComplexMatrix, ComplexMatrix) {
    let k = kinetic(p, part);
    let ms = sigma2().scale(Complex64::new(0.0, mass_sign(part) * m));
    let mut linear = ComplexMatrix::zeros(4, 4);
    let mut anti = ComplexMatrix::zeros(4, 4);
    for i in 0..2 {
        for j in 0..2 {
            linear[(i, j)] = k[(i, j)];
            linear[(i + 2, j + 2)] = k[(i, j)];
            anti[(i, j + 2)] = ms[(i, j)];
            anti[(i + 2, j)] = -ms[(i, j)];
        }
    }
    (linear, anti)
}

/// Real null space of the realified Majorana system. Its dimension is 4 on
/// shell: `a ∈ ℂ²` is free and fixes `b`.
pub fn majorana_solutions(p: &FourVector, m: f64, part: SpinorPart, tol: f64) -> Result<NullSpaceResult> {
    if m == 0.0 {
        return Err(domain("Majorana mass term vanishes at m = 0; the Weyl equations apply instead"));
    }
    if m < 0.0 {
        return Err(domain(format!("mass must be positive, got {m}")));
    }
    p.require_on_shell(m, tol)?;
    let (linear, anti) = majorana_system(p, m, part);
    null_space(&realify_antilinear(&linear, &anti)?, tol)
}

/// Residual of both matched equations, evaluated directly on `(a, b)`.
pub fn majorana_residual(p: &FourVector, m: f64, mode: &MajoranaMode) -> f64 {
    let k = kinetic(p, mode.part);
    let ms = sigma2().scale(Complex64::new(0.0, mass_sign(mode.part) * m));
    let conj = |v: &[Complex64; 2]| [v[0].conj(), v[1].conj()];
    let ka = k.apply(&mode.a).expect("2x2");
    let kb = k.apply(&mode.b).expect("2x2");
    let mb = ms.apply(&conj(&mode.b)).expect("2x2");
    let ma = ms.apply(&conj(&mode.a)).expect("2x2");
    let r1 = [ka[0] + mb[0], ka[1] + mb[1]];
    let r2 = [kb[0] - ma[0], kb[1] - ma[1]];
    (vec_norm(&r1).powi(2) + vec_norm(&r2).powi(2)).sqrt()
}

/// Four-component field with the partner spinor fixed by `ξ = −iσ²η*`
/// (equivalently `η = iσ²ξ*`).
pub fn assemble_majorana_field(mode: &MajoranaMode, p: &FourVector) -> PlaneWaveSuperposition {
    // iσ² = [[0, 1], [−1, 0]]
    let i_sigma2 = |v: [Complex64; 2]| [v[1], -v[0]];
    let conj = |v: [Complex64; 2]| [v[0].conj(), v[1].conj()];
    let neg = |v: [Complex64; 2]| [-v[0], -v[1]];
    let join = |u: [Complex64; 2], l: [Complex64; 2]| vec![u[0], u[1], l[0], l[1]];
    let (at_p, at_minus_p) = match mode.part {
        SpinorPart::Eta => (join(neg(i_sigma2(conj(mode.b))), mode.a), join(neg(i_sigma2(conj(mode.a))), mode.b)),
        SpinorPart::Xi => (join(mode.a, i_sigma2(conj(mode.b))), join(mode.b, i_sigma2(conj(mode.a)))),
    };
    PlaneWaveSuperposition::new(vec![
        PlaneWave { amplitude: at_p, momentum: *p },
        PlaneWave { amplitude: at_minus_p, momentum: -*p },
    ])
    .expect("p and −p are distinct for p ≠ 0")
}
