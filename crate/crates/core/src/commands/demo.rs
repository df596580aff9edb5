use std::fmt::Write as _;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dirac::{build_gamma_spinor, dirac_solutions, Bispinor};
use crate::dkp::{build_beta_spin0, dkp_solutions, DkpVector5};
use crate::error::{contract, domain, Result};
use crate::linalg::{c64, vec_add, vec_scale, ComplexMatrix, ExactMatrix};
use crate::minkowski::FourVector;
use crate::subsolutions::{
    constituent_identity_residual, constituent_residual, embed_dirac_constituent, embed_dkp_triple, form_of_branch,
    form_of_side, split_dirac, split_dkp_spin0, triple_identity_residual, triple_residual, SystemForm,
};
use crate::susy::{build_projector, susy_residual_for};
use crate::verify::{sampling, TOOL_VERSION};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DemoRow {
    pub source: &'static str,
    pub part: &'static str,
    pub system: &'static str,
    pub embedded: Vec<[f64; 2]>,
    /// Residual of the constituent's own three equations.
    pub own_equations: f64,
    pub identity: f64,
    /// Residual against the shared projected equation.
    pub shared_equation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DemoReport {
    pub tool_version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub rest: bool,
    /// Residuals were computed in exact arithmetic.
    pub exact: bool,
    pub tolerance: f64,
    pub momentum: FourVector,
    pub mass: f64,
    pub dkp_solution: Vec<[f64; 2]>,
    pub dirac_solution: Vec<[f64; 2]>,
    pub rows: Vec<DemoRow>,
    pub max_residual: f64,
    pub passed: bool,
}

impl DemoReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn pairs(v: &[Complex64]) -> Vec<[f64; 2]> {
    v.iter().map(|z| [z.re, z.im]).collect()
}

fn form_name(form: SystemForm) -> &'static str {
    match form {
        SystemForm::A => "A",
        SystemForm::B => "B",
    }
}

/// `(γ^μ p̂_μ − m)P₄` at rest, `p̂ = (1, 0, 0, 0)`, `m = 1`, in exact arithmetic.
fn exact_rest_residual(v: &[Complex64; 4]) -> Result<f64> {
    let rep = build_gamma_spinor();
    let op = &(rep.gamma_exact(0) - &ExactMatrix::identity(4)) * &build_projector(4)?.matrix;
    let col = ComplexMatrix::new(4, 1, v.to_vec())?;
    let col = ExactMatrix::try_from_complex(&col, 0).ok_or_else(|| contract("rest-frame vector is not integral"))?;
    Ok((&op * &col).max_abs())
}

fn build_rows(p: &FourVector, m: f64, dkp: &DkpVector5, dirac: &Bispinor, exact: bool) -> Result<Vec<DemoRow>> {
    let rep = build_gamma_spinor();
    let mut rows = Vec::new();
    let (left, right) = split_dkp_spin0(dkp, p, m)?;
    let (b1, b2) = split_dirac(dirac, p, m)?;
    let dkp_scale = (p.euclidean_norm() + m).max(1.0) * dkp.norm();
    let dirac_scale = (p.euclidean_norm() + m).max(1.0) * dirac.norm();
    let shared = |form: SystemForm, v: &[Complex64; 4], scale: f64| -> Result<f64> {
        if exact {
            exact_rest_residual(v)
        } else {
            Ok(susy_residual_for(form, &rep, p, m, v) / scale)
        }
    };
    for (part, t) in [("left", &left), ("right", &right)] {
        let form = form_of_side(t.side);
        let v = embed_dkp_triple(t);
        rows.push(DemoRow {
            source: "dkp",
            part,
            system: form_name(form),
            embedded: pairs(&v),
            own_equations: triple_residual(t, p, m) / dkp_scale,
            identity: triple_identity_residual(t, p) / dkp_scale,
            shared_equation: shared(form, &v, dkp_scale)?,
        });
    }
    for (part, c) in [("branch1", &b1), ("branch2", &b2)] {
        let form = form_of_branch(c.branch);
        let v = embed_dirac_constituent(c);
        rows.push(DemoRow {
            source: "dirac",
            part,
            system: form_name(form),
            embedded: pairs(&v),
            own_equations: constituent_residual(c, p, m) / dirac_scale,
            identity: constituent_identity_residual(c, p) / dirac_scale,
            shared_equation: shared(form, &v, dirac_scale)?,
        });
    }
    Ok(rows)
}

fn finish(
    seed: Option<u64>,
    exact: bool,
    tol: f64,
    p: FourVector,
    m: f64,
    dkp: &DkpVector5,
    dirac: &Bispinor,
) -> Result<DemoReport> {
    let rows = build_rows(&p, m, dkp, dirac, exact)?;
    let max_residual = rows.iter().flat_map(|r| [r.own_equations, r.identity, r.shared_equation]).fold(0.0, f64::max);
    let passed = if exact { max_residual == 0.0 } else { max_residual <= tol };
    Ok(DemoReport {
        tool_version: TOOL_VERSION.to_owned(),
        seed,
        rest: exact,
        exact,
        tolerance: tol,
        momentum: p,
        mass: m,
        dkp_solution: pairs(&dkp.to_array()),
        dirac_solution: pairs(&dirac.to_array()),
        rows,
        max_residual,
        passed,
    })
}

/// Walkthrough at a seeded on-shell momentum: one spin-0 DKP solution and
/// one Dirac solution, both split, embedded and checked against the shared
/// projected equation.
pub fn demo_susy(seed: u64, tol: f64) -> Result<DemoReport> {
    if !(tol > 0.0) {
        return Err(contract(format!("tolerance must be positive, got {tol}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (p, m) = sampling::on_shell(&mut rng);
    let k0 = dkp_solutions(&build_beta_spin0(), &p, m, tol)?;
    let kd = dirac_solutions(&p, m, tol)?;
    if k0.dimension != 1 || kd.dimension != 2 {
        return Err(domain(format!("unexpected kernel dimensions {} and {} at p = {p}", k0.dimension, kd.dimension)));
    }
    let dkp = DkpVector5::from_slice(&vec_scale(&k0.basis[0], sampling::coefficient(&mut rng)))?;
    let (a, b) = (sampling::coefficient(&mut rng), sampling::coefficient(&mut rng));
    let dirac = Bispinor::from_slice(&vec_add(&vec_scale(&kd.basis[0], a), &vec_scale(&kd.basis[1], b)))?;
    finish(Some(seed), false, tol, p, m, &dkp, &dirac)
}

/// The same walkthrough at rest with `m = 1` and integer solutions, where
/// every residual is an exact zero.
pub fn demo_susy_rest(tol: f64) -> Result<DemoReport> {
    let one = c64(1.0, 0.0);
    let z = c64(0.0, 0.0);
    let p = FourVector::new(1.0, 0.0, 0.0, 0.0);
    let dkp = DkpVector5::from_slice(&[one, z, z, z, one])?;
    let dirac = Bispinor::new(one, c64(0.0, 1.0), one, c64(0.0, 1.0));
    finish(None, true, tol, p, 1.0, &dkp, &dirac)
}

fn fmt_vec(v: &[[f64; 2]]) -> String {
    let parts: Vec<String> = v.iter().map(|z| format!("{:+.4}{:+.4}i", z[0], z[1])).collect();
    format!("({})", parts.join(", "))
}

pub fn render_text(r: &DemoReport) -> String {
    let mut out = String::new();
    let [p0, p1, p2, p3] = r.momentum.components();
    match r.seed {
        Some(seed) => {
            let _ = writeln!(out, "projected Dirac equation walkthrough, seed {seed}");
        }
        None => {
            let _ = writeln!(out, "projected Dirac equation walkthrough at rest (exact arithmetic)");
        }
    }
    let _ = writeln!(out, "p = ({p0:.6}, {p1:.6}, {p2:.6}, {p3:.6}), m = {}", r.mass);
    let _ = writeln!(out, "spin-0 DKP solution (psi^0..psi^3, psi): {}", fmt_vec(&r.dkp_solution));
    let _ = writeln!(out, "Dirac solution (xi^1, xi^2, eta_1, eta_2): {}", fmt_vec(&r.dirac_solution));
    let _ = writeln!(out);
    let _ = writeln!(out, "each constituent is embedded with a zero fourth slot and checked against");
    let _ = writeln!(out, "(gamma.q - m) P4 v = 0, q = p for system A, q = (p0, p1, -p2, -p3) for system B");
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "{:<6} {:<8} {:<6} {:>11} {:>11} {:>11}",
        "source", "part", "system", "own", "identity", "shared"
    );
    for row in &r.rows {
        let _ = writeln!(
            out,
            "{:<6} {:<8} {:<6} {:>11.3e} {:>11.3e} {:>11.3e}",
            row.source, row.part, row.system, row.own_equations, row.identity, row.shared_equation
        );
    }
    for row in &r.rows {
        let _ = writeln!(out, "  {} {} -> {}", row.source, row.part, fmt_vec(&row.embedded));
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "max residual {:.3e}  {}", r.max_residual, if r.passed { "PASS" } else { "FAIL" });
    out
}
