//! Seeded draws of momenta, masses, coefficients and transformation
//! parameters.

use num_complex::Complex64;
use rand::{Rng, RngCore};
use sha2::{Digest, Sha256};

use crate::lorentz::{Generator, Kind};
use crate::minkowski::FourVector;

/// Probability of drawing exactly `m = 1`.
pub const UNIT_MASS_PROBABILITY: f64 = 0.25;

/// Independent 64-bit seed for one trial of a run.
pub fn trial_seed(seed: u64, trial: u64) -> u64 {
    let mut h = Sha256::new();
    h.update(b"relsub/trial");
    h.update(seed.to_le_bytes());
    h.update(trial.to_le_bytes());
    let d = h.finalize();
    u64::from_le_bytes(d[..8].try_into().expect("8 bytes"))
}

pub fn mass(rng: &mut impl RngCore) -> f64 {
    if rng.random_bool(UNIT_MASS_PROBABILITY) {
        1.0
    } else {
        rng.random_range(0.5..=2.0)
    }
}

pub fn spatial(rng: &mut impl RngCore) -> [f64; 3] {
    std::array::from_fn(|_| rng.random_range(-3.0..=3.0))
}

/// `(p, m)` with `p⁰ = +√(m² + |p⃗|²)`.
pub fn on_shell(rng: &mut impl RngCore) -> (FourVector, f64) {
    let m = mass(rng);
    (FourVector::on_shell(spatial(rng), m), m)
}

/// A future-pointing null momentum with `|p⃗| ≥ 0.1`.
pub fn null_momentum(rng: &mut impl RngCore) -> FourVector {
    loop {
        let s = spatial(rng);
        if s.iter().map(|x| x * x).sum::<f64>() >= 0.01 {
            return FourVector::on_shell(s, 0.0);
        }
    }
}

/// Arbitrary real four-vector with components in `[−3, 3]`.
pub fn four_vector(rng: &mut impl RngCore) -> FourVector {
    FourVector(std::array::from_fn(|_| rng.random_range(-3.0..=3.0)))
}

/// Complex number with modulus in `[0.5, 2]` and uniform phase.
pub fn coefficient(rng: &mut impl RngCore) -> Complex64 {
    Complex64::from_polar(rng.random_range(0.5..=2.0), rng.random_range(0.0..std::f64::consts::TAU))
}

pub fn complex_vector<const N: usize>(rng: &mut impl RngCore) -> [Complex64; N] {
    std::array::from_fn(|_| Complex64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0)))
}

/// Single-axis generator with parameter magnitude in `[0.1, 1.5]` for boosts
/// and `[0.1, 3]` for rotations, so that non-z factors stay away from the
/// identity and from the full turn.
pub fn generator(rng: &mut impl RngCore, axis: Option<usize>) -> Generator {
    let kind = if rng.random_bool(0.5) { Kind::Boost } else { Kind::Rotation };
    let axis = axis.unwrap_or_else(|| rng.random_range(1..=3));
    let hi = match kind {
        Kind::Boost => 1.5,
        Kind::Rotation => 3.0,
    };
    let magnitude = rng.random_range(0.1..=hi);
    let parameter = if rng.random_bool(0.5) { magnitude } else { -magnitude };
    Generator { kind, axis, parameter }
}
