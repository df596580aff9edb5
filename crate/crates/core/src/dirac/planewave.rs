use num_complex::Complex64;

use super::GammaRep;
use crate::error::{contract, Result};
use crate::linalg::{vec_add, vec_dist, vec_norm};
use crate::minkowski::FourVector;

/// One term `c·e^{−ip·x}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneWave {
    pub amplitude: Vec<Complex64>,
    pub momentum: FourVector,
}

/// Finite sum of plane waves with pairwise distinct momenta.
///
/// A term with momentum `p` stands for `c·e^{−ip·x}`, so the momentum operator
/// `p^μ = i∂/∂x_μ` multiplies it by `p^μ` and complex conjugation sends it
/// to `conj(c)·e^{−i(−p)·x}`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PlaneWaveSuperposition {
    terms: Vec<PlaneWave>,
}

impl PlaneWaveSuperposition {
    pub fn new(terms: Vec<PlaneWave>) -> Result<Self> {
        for (i, a) in terms.iter().enumerate() {
            if terms[i + 1..].iter().any(|b| b.momentum == a.momentum) {
                return Err(contract(format!("duplicate momentum {} in superposition", a.momentum)));
            }
        }
        if let Some(first) = terms.first() {
            if terms.iter().any(|t| t.amplitude.len() != first.amplitude.len()) {
                return Err(contract("amplitudes of differing arity"));
            }
        }
        Ok(Self { terms })
    }

    pub fn single(amplitude: Vec<Complex64>, momentum: FourVector) -> Self {
        Self { terms: vec![PlaneWave { amplitude, momentum }] }
    }

    pub fn terms(&self) -> &[PlaneWave] {
        &self.terms
    }

    pub fn arity(&self) -> Option<usize> {
        self.terms.first().map(|t| t.amplitude.len())
    }

    /// Action of `p^μ`.
    pub fn momentum_component(&self, mu: usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| PlaneWave {
                    amplitude: t.amplitude.iter().map(|c| c * t.momentum[mu]).collect(),
                    momentum: t.momentum,
                })
                .collect(),
        }
    }

    /// Pointwise complex conjugate of the field.
    pub fn conjugate(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| PlaneWave { amplitude: t.amplitude.iter().map(|c| c.conj()).collect(), momentum: -t.momentum })
                .collect(),
        }
    }

    /// Applies a matrix to every amplitude.
    pub fn map_amplitudes(&self, f: impl Fn(&[Complex64]) -> Vec<Complex64>) -> Self {
        Self {
            terms: self.terms.iter().map(|t| PlaneWave { amplitude: f(&t.amplitude), momentum: t.momentum }).collect(),
        }
    }

    /// Field sum; terms with equal momenta are merged.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        if let (Some(a), Some(b)) = (self.arity(), other.arity()) {
            if a != b {
                return Err(contract("cannot add superpositions of differing arity"));
            }
        }
        let mut terms = self.terms.clone();
        for t in &other.terms {
            match terms.iter_mut().find(|s| s.momentum == t.momentum) {
                Some(s) => s.amplitude = vec_add(&s.amplitude, &t.amplitude),
                None => terms.push(t.clone()),
            }
        }
        Ok(Self { terms })
    }

    /// Field value at the event `x`.
    pub fn evaluate(&self, x: &FourVector) -> Vec<Complex64> {
        let n = self.arity().unwrap_or(0);
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for t in &self.terms {
            let phase = Complex64::from_polar(1.0, -t.momentum.dot(x));
            for (o, c) in out.iter_mut().zip(&t.amplitude) {
                *o += c * phase;
            }
        }
        out
    }

    /// Largest amplitude distance after pairing terms by momentum; a term
    /// with no partner counts with its full norm.
    pub fn distance(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for t in &self.terms {
            let d = match other.terms.iter().find(|s| s.momentum == t.momentum) {
                Some(s) if s.amplitude.len() == t.amplitude.len() => vec_dist(&t.amplitude, &s.amplitude),
                Some(_) => f64::INFINITY,
                None => vec_norm(&t.amplitude),
            };
            worst = worst.max(d);
        }
        for s in &other.terms {
            if !self.terms.iter().any(|t| t.momentum == s.momentum) {
                worst = worst.max(vec_norm(&s.amplitude));
            }
        }
        worst
    }
}

/// `CΨ = iγ²Ψ*` applied to a bispinor field.
pub fn charge_conjugate(rep: &GammaRep, psi: &PlaneWaveSuperposition) -> Result<PlaneWaveSuperposition> {
    match psi.arity() {
        Some(4) | None => {}
        Some(n) => return Err(contract(format!("charge conjugation acts on 4-component amplitudes, got {n}"))),
    }
    let c = rep.charge_conjugation_matrix().to_complex();
    Ok(psi.conjugate().map_amplitudes(|a| c.apply(a).expect("4x4")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::build_gamma_spinor;
    use crate::linalg::c64;

    fn e1() -> Vec<Complex64> {
        vec![c64(1.0, 0.0), c64(0.0, 0.0), c64(0.0, 0.0), c64(0.0, 0.0)]
    }

    #[test]
    fn conjugating_e1() {
        let rep = build_gamma_spinor();
        let p = FourVector::new(2.0, 0.5, -1.0, 1.5);
        let out = charge_conjugate(&rep, &PlaneWaveSuperposition::single(e1(), p)).unwrap();
        // column 1 of iγ²
        let expected = vec![c64(0.0, 0.0), c64(0.0, 0.0), c64(0.0, 0.0), c64(-1.0, 0.0)];
        assert_eq!(out.terms()[0].amplitude, expected);
        assert_eq!(out.terms()[0].momentum, -p);
    }

    #[test]
    fn conjugation_is_an_involution() {
        let rep = build_gamma_spinor();
        let psi = PlaneWaveSuperposition::new(vec![
            PlaneWave {
                amplitude: vec![c64(0.2, 1.0), c64(-0.5, 0.1), c64(3.0, -2.0), c64(0.0, 0.7)],
                momentum: FourVector::new(1.5, 0.2, 0.3, -0.4),
            },
            PlaneWave {
                amplitude: vec![c64(1.0, 0.0), c64(0.0, 1.0), c64(-1.0, 0.0), c64(0.0, -1.0)],
                momentum: FourVector::new(2.5, 1.2, 0.0, 0.4),
            },
        ])
        .unwrap();
        let twice = charge_conjugate(&rep, &charge_conjugate(&rep, &psi).unwrap()).unwrap();
        assert!(twice.distance(&psi) < 1e-15);
    }

    #[test]
    fn field_plus_its_conjugate_is_invariant() {
        let rep = build_gamma_spinor();
        let psi = PlaneWaveSuperposition::single(
            vec![c64(0.3, 0.1), c64(-0.5, 0.9), c64(1.0, 0.0), c64(0.0, 0.2)],
            FourVector::new(1.0, 0.0, 0.0, 0.5),
        );
        let sym = psi.sum(&charge_conjugate(&rep, &psi).unwrap()).unwrap();
        let image = charge_conjugate(&rep, &sym).unwrap();
        assert!(image.distance(&sym) < 1e-15);
    }

    #[test]
    fn wrong_arity_rejected() {
        let rep = build_gamma_spinor();
        let psi = PlaneWaveSuperposition::single(vec![c64(1.0, 0.0); 2], FourVector::ZERO);
        assert!(matches!(charge_conjugate(&rep, &psi), Err(crate::Error::Contract(_))));
    }

    #[test]
    fn duplicate_momenta_rejected() {
        let t = PlaneWave { amplitude: e1(), momentum: FourVector::new(1.0, 0.0, 0.0, 0.0) };
        assert!(PlaneWaveSuperposition::new(vec![t.clone(), t]).is_err());
    }

    #[test]
    fn momentum_operator_matches_derivative() {
        // i∂/∂x_μ of c·e^{−ip·x}, by central differences in x^μ
        let p = FourVector::new(1.3, 0.4, -0.7, 0.2);
        let psi = PlaneWaveSuperposition::single(vec![c64(0.5, -0.25)], p);
        let x = FourVector::new(0.3, -0.2, 0.9, 0.1);
        let h = 1e-5;
        for mu in 0..4 {
            let mut plus = x.0;
            let mut minus = x.0;
            plus[mu] += h;
            minus[mu] -= h;
            let d = (psi.evaluate(&FourVector(plus))[0] - psi.evaluate(&FourVector(minus))[0]) / (2.0 * h);
            // ∂/∂x_μ = g^{μμ} ∂/∂x^μ
            let op = Complex64::i() * d * crate::minkowski::METRIC[mu];
            let exact = psi.momentum_component(mu).evaluate(&x)[0];
            assert!((op - exact).norm() < 1e-8, "mu={mu}");
        }
    }

    #[test]
    fn conjugate_matches_pointwise_conjugation() {
        let psi =
            PlaneWaveSuperposition::single(vec![c64(0.5, -0.25), c64(1.0, 2.0)], FourVector::new(1.3, 0.4, -0.7, 0.2));
        let x = FourVector::new(0.3, -0.2, 0.9, 0.1);
        let direct: Vec<Complex64> = psi.evaluate(&x).iter().map(|z| z.conj()).collect();
        assert!(vec_dist(&direct, &psi.conjugate().evaluate(&x)) < 1e-15);
    }
}
