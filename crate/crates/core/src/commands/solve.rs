use std::fmt::Write as _;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dirac::{build_gamma_spinor, dirac_operator, dirac_solutions};
use crate::dkp::{build_beta_spin0, build_beta_spin1, dkp_operator, dkp_solutions, BetaRep};
use crate::error::{usage, Error, Result};
use crate::linalg::{vec_norm, ComplexMatrix};
use crate::minkowski::FourVector;
use crate::susy::{susy_operator, susy_solutions};
use crate::verify::TOOL_VERSION;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Equation {
    Dirac,
    Dkp0,
    Dkp1,
    Susy,
}

impl Equation {
    pub const ALL: [Equation; 4] = [Equation::Dirac, Equation::Dkp0, Equation::Dkp1, Equation::Susy];

    pub fn name(self) -> &'static str {
        match self {
            Equation::Dirac => "dirac",
            Equation::Dkp0 => "dkp0",
            Equation::Dkp1 => "dkp1",
            Equation::Susy => "susy",
        }
    }

    /// Kernel dimension on shell. For `Susy` this counts the trivial `e₄`.
    pub fn expected_dimension(self) -> usize {
        match self {
            Equation::Dirac => 2,
            Equation::Dkp0 => 1,
            Equation::Dkp1 => 3,
            Equation::Susy => 2,
        }
    }
}

impl FromStr for Equation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Equation::ALL.into_iter().find(|e| e.name() == s).ok_or_else(|| usage(format!("unknown equation '{s}'")))
    }
}

/// One entry of a batch file.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolveInput {
    pub momentum: [f64; 3],
    pub mass: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BasisVector {
    /// `[re, im]` per component.
    pub components: Vec<[f64; 2]>,
    /// `‖Kv‖ / ((|p| + m)‖v‖)` with `K` the equation's operator.
    pub residual: f64,
    /// Set for the direction annihilated by the projector.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub trivial: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Solution {
    pub momentum: FourVector,
    pub mass: f64,
    pub dimension: usize,
    pub expected_dimension: usize,
    pub max_residual: f64,
    pub basis: Vec<BasisVector>,
}

impl Solution {
    pub fn ok(&self, tol: f64) -> bool {
        self.dimension == self.expected_dimension && self.max_residual <= tol
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveReport {
    pub tool_version: String,
    pub equation: Equation,
    pub tolerance: f64,
    pub passed: bool,
    pub solutions: Vec<Solution>,
}

impl SolveReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Reads a JSON list of `{"momentum": [p1, p2, p3], "mass": m}`.
pub fn parse_batch(text: &str) -> Result<Vec<SolveInput>> {
    let inputs: Vec<SolveInput> = serde_json::from_str(text).map_err(|e| usage(format!("invalid batch file: {e}")))?;
    if inputs.is_empty() {
        return Err(usage("batch file holds no entries"));
    }
    Ok(inputs)
}

fn check_input(eq: Equation, input: &SolveInput) -> Result<()> {
    if input.momentum.iter().chain([&input.mass]).any(|x| !x.is_finite()) {
        return Err(usage("momentum and mass must be finite numbers"));
    }
    if input.mass < 0.0 {
        return Err(usage(format!("mass must be non-negative, got {}", input.mass)));
    }
    if input.mass == 0.0 {
        if eq != Equation::Dirac {
            return Err(usage(format!("{} needs a positive mass", eq.name())));
        }
        if input.momentum.iter().all(|&x| x == 0.0) {
            return Err(usage("a massless momentum must be nonzero"));
        }
    }
    Ok(())
}

fn basis_vector(op: &ComplexMatrix, v: &[Complex64], p: &FourVector, m: f64, trivial: bool) -> BasisVector {
    let scale = (p.euclidean_norm() + m).max(1.0) * vec_norm(v).max(f64::MIN_POSITIVE);
    BasisVector {
        components: v.iter().map(|z| [z.re, z.im]).collect(),
        residual: vec_norm(&op.apply(v).expect("square operator")) / scale,
        trivial,
    }
}

fn solve_one(eq: Equation, input: &SolveInput, tol: f64) -> Result<Solution> {
    check_input(eq, input)?;
    let m = input.mass;
    let p = FourVector::on_shell(input.momentum, m);
    let dkp = |rep: BetaRep| -> Result<Vec<BasisVector>> {
        let op = dkp_operator(&rep, &p, m);
        let k = dkp_solutions(&rep, &p, m, tol)?;
        Ok(k.basis.iter().map(|v| basis_vector(&op, v, &p, m, false)).collect())
    };
    let basis = match eq {
        Equation::Dirac => {
            let op = dirac_operator(&build_gamma_spinor(), &p, m);
            let k = dirac_solutions(&p, m, tol)?;
            k.basis.iter().map(|v| basis_vector(&op, v, &p, m, false)).collect()
        }
        Equation::Dkp0 => dkp(build_beta_spin0())?,
        Equation::Dkp1 => dkp(build_beta_spin1())?,
        Equation::Susy => {
            let rep = build_gamma_spinor();
            let op = susy_operator(&rep, &p, m);
            let k = susy_solutions(&rep, &p, m, tol)?;
            let mut basis: Vec<BasisVector> =
                k.physical.basis.iter().map(|v| basis_vector(&op, v, &p, m, false)).collect();
            basis.push(basis_vector(&op, &k.trivial, &p, m, true));
            basis
        }
    };
    Ok(Solution {
        momentum: p,
        mass: m,
        dimension: basis.len(),
        expected_dimension: eq.expected_dimension(),
        max_residual: basis.iter().map(|b| b.residual).fold(0.0, f64::max),
        basis,
    })
}

/// Solves every input. Invalid inputs are usage errors; the report's
/// `passed` flag covers dimensions and residuals.
pub fn solve(eq: Equation, inputs: &[SolveInput], tol: f64) -> Result<SolveReport> {
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(usage(format!("tolerance must be positive and finite, got {tol}")));
    }
    let solutions = inputs.iter().map(|i| solve_one(eq, i, tol)).collect::<Result<Vec<_>>>().map_err(|e| match e {
        Error::Usage(_) => e,
        other => usage(other.to_string()),
    })?;
    Ok(SolveReport {
        tool_version: TOOL_VERSION.to_owned(),
        equation: eq,
        tolerance: tol,
        passed: solutions.iter().all(|s| s.ok(tol)),
        solutions,
    })
}

fn fmt_complex(z: [f64; 2]) -> String {
    format!("{:+.6}{:+.6}i", z[0], z[1])
}

pub fn render_text(r: &SolveReport) -> String {
    let mut out = String::new();
    for s in &r.solutions {
        let [p0, p1, p2, p3] = s.momentum.components();
        let _ =
            writeln!(out, "equation {}  p = ({p0:.6}, {p1:.6}, {p2:.6}, {p3:.6})  m = {}", r.equation.name(), s.mass);
        let _ = writeln!(out, "dimension {} (expected {})", s.dimension, s.expected_dimension);
        for (k, b) in s.basis.iter().enumerate() {
            let comps: Vec<String> = b.components.iter().map(|&z| fmt_complex(z)).collect();
            let tag = if b.trivial { "  [trivial]" } else { "" };
            let _ = writeln!(out, "  v{k} = ({})  residual {:.3e}{tag}", comps.join(", "), b.residual);
        }
    }
    let _ = writeln!(out, "{}", if r.passed { "PASS" } else { "FAIL" });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rest(eq: Equation) -> Solution {
        let r = solve(eq, &[SolveInput { momentum: [0.0; 3], mass: 1.0 }], 1e-10).unwrap();
        assert!(r.passed);
        r.solutions.into_iter().next().unwrap()
    }

    #[test]
    fn rest_frame_dimensions() {
        assert_eq!(rest(Equation::Dirac).dimension, 2);
        assert_eq!(rest(Equation::Dkp1).dimension, 3);
        let s = rest(Equation::Susy);
        assert_eq!(s.dimension, 2);
        assert!(s.basis.last().unwrap().trivial);
    }

    #[test]
    fn dkp0_rest_basis_is_proportional_to_time_and_scalar() {
        let s = rest(Equation::Dkp0);
        assert_eq!(s.dimension, 1);
        let v = &s.basis[0].components;
        let ratio = Complex64::new(v[4][0], v[4][1]) / Complex64::new(v[0][0], v[0][1]);
        assert!((ratio - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        for z in &v[1..4] {
            assert!(Complex64::new(z[0], z[1]).norm() < 1e-12);
        }
    }

    #[test]
    fn bad_inputs_are_usage_errors() {
        let zero = SolveInput { momentum: [1.0, 0.0, 0.0], mass: 0.0 };
        assert!(matches!(solve(Equation::Dkp0, &[zero], 1e-10), Err(Error::Usage(_))));
        assert!(solve(Equation::Dirac, &[zero], 1e-10).unwrap().passed);
        let nan = SolveInput { momentum: [f64::NAN, 0.0, 0.0], mass: 1.0 };
        assert!(matches!(solve(Equation::Dirac, &[nan], 1e-10), Err(Error::Usage(_))));
        assert!("proca".parse::<Equation>().is_err());
    }

    #[test]
    fn batch_parsing() {
        let b = parse_batch(r#"[{"momentum":[0,0,1],"mass":2},{"momentum":[1,2,3],"mass":0.5}]"#).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(b[0], SolveInput { momentum: [0.0, 0.0, 1.0], mass: 2.0 });
        assert!(parse_batch("[]").is_err());
        assert!(parse_batch(r#"[{"momentum":[0,0],"mass":1}]"#).is_err());
        assert!(parse_batch(r#"[{"momentum":[0,0,0],"mass":1,"spin":2}]"#).is_err());
    }
}
