use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;

use super::{sampling, Suite, Trial};
use crate::dirac::{
    assemble_majorana_field, build_gamma_spinor, charge_conjugate, chiral_project, dirac_operator, dirac_residual,
    dirac_solutions, majorana_residual, majorana_solutions, second_order_residual, weyl_residual, Bispinor,
    MajoranaMode, Sign, SpinorPart,
};
use crate::dkp::{
    build_beta_spin0, build_beta_spin1, dkp_operator, dkp_solutions, klein_gordon_residual, DkpVector10, DkpVector5,
};
use crate::error::Result;
use crate::linalg::{null_space, vec_add, vec_dist, vec_norm, vec_scale, ComplexMatrix, ExactMatrix, GaussInt};
use crate::lorentz::{p4_commutation_residual, transform_dirac_solution, transform_susy_solution, LorentzTransform};
use crate::minkowski::{half_pairing, spinor_pairing, spinor_to_vector, vector_to_spinor, FourVector};
use crate::subsolutions::{
    constituent_identity_residual, constituent_residual, embed_dirac_constituent, embed_dkp_triple,
    embedded_identity_row, form_of_branch, form_of_side, merge_dkp_triples, reassemble, split_dirac, split_dkp_spin0,
    system_matrix, triple_identity_residual, triple_residual, triple_system_matrix, DiracConstituent, ScalarTriple,
    SystemForm,
};
use crate::susy::{
    build_p4_from_gammas, build_projector, decompose_susy, momentum_for_form, p4_formula_with_flipped_gamma5,
    susy_cross_check, susy_residual, susy_solutions,
};

/// Separation required of quantities that must stay away from zero,
/// in units of the run tolerance.
const SEPARATION: f64 = 100.0;

/// Smallest `‖[S, P₄]‖` accepted for a single non-z factor.
const NON_Z_COMMUTATOR: f64 = 1e-3;

pub(super) fn run_trial(suite: Suite, rng: &mut ChaCha8Rng, seed: u64, tol: f64, t: &mut Trial) -> Result<()> {
    match suite {
        Suite::All => unreachable!("aggregate suites run their members"),
        Suite::Clifford => clifford(t),
        Suite::DkpAlgebra => dkp_algebra(rng, tol, t),
        Suite::Spinor => spinor(rng, tol, t),
        Suite::SplitDkp => split_dkp(rng, tol, t),
        Suite::SplitDirac => split_dirac_suite(rng, tol, t),
        Suite::Susy => susy(rng, seed, tol, t),
        Suite::Majorana => majorana(rng, tol, t),
        Suite::Lorentz => lorentz(rng, tol, t),
    }
}

fn scale(p: &FourVector, m: f64, norm: f64) -> f64 {
    (p.euclidean_norm() + m).max(1.0) * norm.max(f64::MIN_POSITIVE)
}

fn combine(a: &[Complex64], ca: Complex64, b: &[Complex64], cb: Complex64) -> Vec<Complex64> {
    vec_add(&vec_scale(a, ca), &vec_scale(b, cb))
}

fn arr4(v: &[Complex64]) -> [Complex64; 4] {
    [v[0], v[1], v[2], v[3]]
}

fn on_shell(rng: &mut ChaCha8Rng, t: &mut Trial) -> (FourVector, f64) {
    let (p, m) = sampling::on_shell(rng);
    t.input("momentum", p);
    t.input("mass", m);
    (p, m)
}

fn kernel_residual(op: &ComplexMatrix, v: &[Complex64], p: &FourVector, m: f64) -> f64 {
    vec_norm(&op.apply(v).expect("square operator")) / scale(p, m, vec_norm(v))
}

fn exact_gap(a: &ExactMatrix, b: &ExactMatrix) -> f64 {
    (a - b).max_abs()
}

fn clifford(t: &mut Trial) -> Result<()> {
    let rep = build_gamma_spinor();
    let id = ExactMatrix::identity(4);
    t.zero("anticommutators", rep.clifford_defect());
    t.zero("gamma5.product", exact_gap(&rep.gamma5_from_product(), rep.gamma5_exact()));
    let g5 = rep.gamma5_exact();
    t.zero("gamma5.square", exact_gap(&(g5 * g5), &id));
    let anti =
        (0..4).map(|mu| (&(g5 * rep.gamma_exact(mu)) + &(rep.gamma_exact(mu) * g5)).max_abs()).fold(0.0, f64::max);
    t.zero("gamma5.anticommutes", anti);
    let herm = (0..4)
        .map(|mu| {
            let g = rep.gamma(mu);
            let expected = if mu == 0 { g.clone() } else { -g };
            g.adjoint().max_abs_diff(&expected)
        })
        .fold(0.0, f64::max);
    t.zero("hermiticity", herm);
    let qp = rep.chiral_projector_exact(Sign::Plus);
    let qm = rep.chiral_projector_exact(Sign::Minus);
    t.zero("chiral.completeness", exact_gap(&(&qp + &qm), &id));
    t.zero("chiral.idempotence", exact_gap(&(&qp * &qp), &qp).max(exact_gap(&(&qm * &qm), &qm)));
    t.zero("chiral.orthogonality", (&qp * &qm).max_abs());
    let c = rep.charge_conjugation_matrix().to_complex();
    t.zero("conjugation.involution", (&c * &c.conj()).max_abs_diff(&ComplexMatrix::identity(4)));
    Ok(())
}

fn dkp_algebra(rng: &mut ChaCha8Rng, tol: f64, t: &mut Trial) -> Result<()> {
    let s0 = build_beta_spin0();
    let s1 = build_beta_spin1();
    t.zero("spin0.trilinear", s0.max_trilinear_defect());
    t.zero("spin1.trilinear", s1.max_trilinear_defect());
    let (p, m) = on_shell(rng, t);

    let k0 = dkp_operator(&s0, &p, m);
    let sol0 = dkp_solutions(&s0, &p, m, tol)?;
    t.count("spin0.nullity", sol0.dimension, 1);
    for v in &sol0.basis {
        t.tol("spin0.basis_residual", kernel_residual(&k0, v, &p, m));
        let d = DkpVector5::from_slice(v)?;
        t.tol("spin0.components", d.component_residual(&p, m) / scale(&p, m, d.norm()));
    }
    let psi = sampling::coefficient(rng);
    t.input("scalar", [psi.re, psi.im]);
    let fact = DkpVector5::from_scalar(&p, m, psi);
    t.tol("spin0.factorization", kernel_residual(&k0, &fact.to_array(), &p, m));
    t.tol(
        "spin0.klein_gordon",
        klein_gordon_residual(&p, m, psi) / ((p.euclidean_norm() + m).powi(2).max(1.0) * psi.norm()),
    );

    let k1 = dkp_operator(&s1, &p, m);
    let sol1 = dkp_solutions(&s1, &p, m, tol)?;
    t.count("spin1.nullity", sol1.dimension, 3);
    for v in &sol1.basis {
        t.tol("spin1.basis_residual", kernel_residual(&k1, v, &p, m));
        let d = DkpVector10::from_slice(v)?;
        let n = d.norm();
        t.tol("spin1.components", d.component_residual(&p, m) / scale(&p, m, n));
        t.tol("spin1.transversality", d.transversality(&p).norm() / (n * p.euclidean_norm()).max(f64::MIN_POSITIVE));
        t.tol("spin1.tensor", d.tensor_reconstruction_error(&p, m) / scale(&p, m, n));
    }
    Ok(())
}

fn spinor(rng: &mut ChaCha8Rng, tol: f64, t: &mut Trial) -> Result<()> {
    let v = sampling::four_vector(rng);
    t.input("vector", v);
    let rel = v.euclidean_norm().powi(2).max(1.0);
    let s = vector_to_spinor(&v);
    let back = spinor_to_vector(&s.upper, tol)?;
    let d: f64 = (0..4).map(|k| (back[k] - v[k]).abs()).fold(0.0, f64::max);
    t.tol("roundtrip", d / v.euclidean_norm().max(1.0));
    let sq = v.minkowski_square();
    t.tol("pairing", (spinor_pairing(&v) - 2.0 * sq).abs() / rel);
    t.tol("half_pairing.1", (half_pairing(&v, 1)? - sq).abs() / rel);
    t.tol("half_pairing.2", (half_pairing(&v, 2)? - sq).abs() / rel);
    t.tol("upper.hermitian", s.upper.max_abs_diff(&s.upper.adjoint()) / v.euclidean_norm().max(1.0));
    Ok(())
}

fn triple_vec(t: &ScalarTriple) -> [Complex64; 3] {
    [t.comp1, t.comp2, t.scalar]
}

fn split_dkp(rng: &mut ChaCha8Rng, tol: f64, t: &mut Trial) -> Result<()> {
    let (p, m) = on_shell(rng, t);
    let rep = build_beta_spin0();
    let kernel = dkp_solutions(&rep, &p, m, tol)?;
    t.count("nullity", kernel.dimension, 1);
    let (ca, cb) = (sampling::coefficient(rng), sampling::coefficient(rng));
    t.input("coefficients", [[ca.re, ca.im], [cb.re, cb.im]]);
    let base = DkpVector5::from_slice(&kernel.basis[0])?;
    let sol = DkpVector5::from_slice(&vec_scale(&kernel.basis[0], ca))?;
    let n = sol.norm();

    let (left, right) = split_dkp_spin0(&sol, &p, m)?;
    for (label, tr) in [("left", &left), ("right", &right)] {
        t.tol(format!("{label}.system"), triple_residual(tr, &p, m) / scale(&p, m, n));
        t.tol(format!("{label}.identity"), triple_identity_residual(tr, &p) / scale(&p, m, n));
        let e = embed_dkp_triple(tr);
        t.tol(
            format!("{label}.embedded_fourth_row"),
            embedded_identity_row(form_of_side(tr.side), &p, &e) / scale(&p, m, n),
        );
        let on = null_space(&triple_system_matrix(&p, m, tr.side), tol)?;
        t.count(format!("{label}.nullity_on_shell"), on.dimension, 1);
        let off = null_space(&triple_system_matrix(&p, 1.25 * m, tr.side), tol)?;
        t.count(format!("{label}.nullity_off_shell"), off.dimension, 0);
    }
    let merged = merge_dkp_triples(&left, &right)?;
    t.tol("roundtrip", vec_dist(&merged.to_array(), &sol.to_array()) / n);

    // split(a·u + b·u) against a·split(u) + b·split(u)
    let mixed = DkpVector5::from_slice(&combine(&kernel.basis[0], ca, &kernel.basis[0], cb))?;
    let (ml, mr) = split_dkp_spin0(&mixed, &p, m)?;
    let (bl, br) = split_dkp_spin0(&base, &p, m)?;
    let lin = |whole: &ScalarTriple, part: &ScalarTriple| {
        let expect = vec_scale(&triple_vec(part), ca + cb);
        vec_dist(&triple_vec(whole), &expect) / mixed.norm()
    };
    t.tol("linearity", lin(&ml, &bl).max(lin(&mr, &br)));
    let emb = vec_dist(&embed_dkp_triple(&ml), &vec_scale(&embed_dkp_triple(&bl), ca + cb));
    t.tol("linearity.embedded", emb / mixed.norm());
    Ok(())
}

fn constituent_vec(c: &DiracConstituent) -> [Complex64; 3] {
    [c.xi_a, c.xi_b, c.eta]
}

fn split_dirac_suite(rng: &mut ChaCha8Rng, tol: f64, t: &mut Trial) -> Result<()> {
    let (p, m) = on_shell(rng, t);
    let rep = build_gamma_spinor();
    let kernel = dirac_solutions(&p, m, tol)?;
    t.count("nullity", kernel.dimension, 2);
    let op = dirac_operator(&rep, &p, m);
    for v in &kernel.basis {
        t.tol("basis_residual", kernel_residual(&op, v, &p, m));
    }
    if kernel.dimension != 2 {
        return Ok(());
    }
    let (ca, cb) = (sampling::coefficient(rng), sampling::coefficient(rng));
    t.input("coefficients", [[ca.re, ca.im], [cb.re, cb.im]]);
    let sol = Bispinor::from_slice(&combine(&kernel.basis[0], ca, &kernel.basis[1], cb))?;
    let n = sol.norm();

    let (c1, c2) = split_dirac(&sol, &p, m)?;
    for (label, c) in [("branch1", &c1), ("branch2", &c2)] {
        t.tol(format!("{label}.system"), constituent_residual(c, &p, m) / scale(&p, m, n));
        t.tol(format!("{label}.identity"), constituent_identity_residual(c, &p) / scale(&p, m, n));
        let e = embed_dirac_constituent(c);
        t.tol(
            format!("{label}.embedded_fourth_row"),
            embedded_identity_row(form_of_branch(c.branch), &p, &e) / scale(&p, m, n),
        );
    }
    let sum = [c1.xi_a + c2.xi_a - sol.xi1, c1.xi_b + c2.xi_b - sol.xi2];
    t.tol("sum_rule", vec_norm(&sum) / n);
    let back = reassemble(&c1, &c2)?;
    t.tol("roundtrip", vec_dist(&back.to_array(), &sol.to_array()) / n);

    let b0 = Bispinor::from_slice(&kernel.basis[0])?;
    let b1 = Bispinor::from_slice(&kernel.basis[1])?;
    let (a1, a2) = split_dirac(&b0, &p, m)?;
    let (d1, d2) = split_dirac(&b1, &p, m)?;
    let lin = |whole: &DiracConstituent, u: &DiracConstituent, w: &DiracConstituent| {
        vec_dist(&constituent_vec(whole), &combine(&constituent_vec(u), ca, &constituent_vec(w), cb)) / n
    };
    t.tol("linearity", lin(&c1, &a1, &d1).max(lin(&c2, &a2, &d2)));
    Ok(())
}

fn susy(rng: &mut ChaCha8Rng, seed: u64, tol: f64, t: &mut Trial) -> Result<()> {
    let rep = build_gamma_spinor();
    let p4 = build_projector(4)?.matrix;
    t.zero("p4.formula", exact_gap(&build_p4_from_gammas(&rep), &p4));
    let quarter = ExactMatrix::diagonal(&[2, 2, 6, 2].map(|k| GaussInt::new(k, 0))).halve(2);
    t.zero("p4.flipped_gamma5", exact_gap(&p4_formula_with_flipped_gamma5(&rep), &quarter));

    let (p, m) = on_shell(rng, t);
    for form in [SystemForm::A, SystemForm::B] {
        let slash = rep.slash(&momentum_for_form(form, &p));
        t.zero(format!("system.{form:?}.is_slash").to_lowercase(), system_matrix(form, &p).max_abs_diff(&slash));
    }
    let report = susy_cross_check(&p, m, seed, tol)?;
    for c in &report.checks {
        // Constituent amplitudes grow like |p|/m, so the shared-equation
        // residuals are judged on the absolute scale.
        t.tol(format!("cross.{}", c.name), c.residual);
    }

    let space = susy_solutions(&rep, &p, m, tol)?;
    t.count("physical_nullity", space.physical.dimension, 1);
    let c = sampling::coefficient(rng);
    let e4 = sampling::coefficient(rng);
    let mut sol = arr4(&vec_scale(&space.physical.basis[0], c));
    sol[3] = e4;
    let r = susy_residual(&rep, &p, m, &sol);
    let (a, b) = decompose_susy(&rep, &p, m, &sol);
    let sc = scale(&p, m, vec_norm(&sol));
    t.tol("equivalence.solution", r.max(a).max(b) / sc);

    let v = sampling::complex_vector::<4>(rng);
    t.input("probe", v.map(|z| [z.re, z.im]));
    let r = susy_residual(&rep, &p, m, &v);
    let (a, b) = decompose_susy(&rep, &p, m, &v);
    let sc = scale(&p, m, vec_norm(&v));
    t.above("equivalence.probe_residual", r / sc, SEPARATION * tol);
    t.above("equivalence.probe_parts", a.max(b) / sc, SEPARATION * tol);
    t.tol("equivalence.pythagoras", (r * r - a * a - b * b).abs() / (sc * sc));
    Ok(())
}

fn majorana(rng: &mut ChaCha8Rng, tol: f64, t: &mut Trial) -> Result<()> {
    let rep = build_gamma_spinor();
    let (p, m) = on_shell(rng, t);
    for part in [SpinorPart::Eta, SpinorPart::Xi] {
        let label = match part {
            SpinorPart::Eta => "eta",
            SpinorPart::Xi => "xi",
        };
        let kernel = majorana_solutions(&p, m, part, tol)?;
        t.count(format!("{label}.real_nullity"), kernel.dimension, 4);
        for v in &kernel.basis {
            let mode = MajoranaMode::from_real_basis(part, v);
            let n = vec_norm(&[mode.a, mode.b].concat());
            t.tol(format!("{label}.equations"), majorana_residual(&p, m, &mode) / scale(&p, m, n));
            let field = assemble_majorana_field(&mode, &p);
            let fnorm = field.terms().iter().map(|w| vec_norm(&w.amplitude).powi(2)).sum::<f64>().sqrt();
            t.tol(format!("{label}.charge_conjugation"), charge_conjugate(&rep, &field)?.distance(&field) / fnorm);
            let dirac = field
                .terms()
                .iter()
                .map(|w| {
                    let psi = Bispinor::from_slice(&w.amplitude).expect("4 components");
                    dirac_residual(&rep, &w.momentum, m, &psi) / scale(&p, m, fnorm)
                })
                .fold(0.0, f64::max);
            t.tol(format!("{label}.dirac"), dirac);
        }
        let s = sampling::complex_vector::<2>(rng);
        let sc = (p.euclidean_norm() + m).powi(2).max(1.0) * vec_norm(&s);
        t.tol(format!("{label}.second_order"), second_order_residual(&p, m, &s, part) / sc);
    }

    let n = sampling::null_momentum(rng);
    t.input("null_momentum", n);
    let kernel = dirac_solutions(&n, 0.0, tol)?;
    t.count("massless.nullity", kernel.dimension, 2);
    if kernel.dimension == 2 {
        let (ca, cb) = (sampling::coefficient(rng), sampling::coefficient(rng));
        t.input("coefficients", [[ca.re, ca.im], [cb.re, cb.im]]);
        let psi = Bispinor::from_slice(&combine(&kernel.basis[0], ca, &kernel.basis[1], cb))?;
        let plus = chiral_project(&rep, &psi, Sign::Plus);
        let minus = chiral_project(&rep, &psi, Sign::Minus);
        let sc = n.euclidean_norm() * psi.norm();
        t.tol("massless.weyl_xi", weyl_residual(&n, &plus.xi(), SpinorPart::Xi) / sc);
        t.tol("massless.weyl_eta", weyl_residual(&n, &minus.eta(), SpinorPart::Eta) / sc);
        let sum = vec_add(&plus.to_array(), &minus.to_array());
        t.tol("massless.decomposition", vec_dist(&sum, &psi.to_array()) / psi.norm());
        t.zero("massless.definite_chirality", vec_norm(&plus.eta()) + vec_norm(&minus.xi()));
    }
    Ok(())
}

fn lorentz(rng: &mut ChaCha8Rng, tol: f64, t: &mut Trial) -> Result<()> {
    let rep = build_gamma_spinor();
    let g = sampling::generator(rng, None);
    t.input("generator", g);
    let single = LorentzTransform::from_generator(&g)?;
    t.tol("metric", single.metric_defect());
    t.tol("intertwining", single.intertwining_defect(&rep));
    t.tol("inverse", single.inverse_defect());
    t.tol("determinant", (single.determinant() - 1.0).abs());
    t.zero("orthochronous", (1.0 - single.vector_matrix[0][0]).max(0.0));
    let comm = p4_commutation_residual(&single);
    if g.axis == 3 {
        t.tol("p4.commutator.z", comm);
    } else {
        t.above("p4.commutator.non_z", comm, NON_Z_COMMUTATOR);
    }

    let chain: Vec<_> = (0..3).map(|_| sampling::generator(rng, None)).collect();
    t.input("chain", &chain);
    let composite = LorentzTransform::from_generators(&chain)?;
    t.tol("composite.intertwining", composite.intertwining_defect(&rep));
    let (p, m) = on_shell(rng, t);
    let kernel = dirac_solutions(&p, m, tol)?;
    let (ca, cb) = (sampling::coefficient(rng), sampling::coefficient(rng));
    t.input("coefficients", [[ca.re, ca.im], [cb.re, cb.im]]);
    let psi = Bispinor::from_slice(&combine(&kernel.basis[0], ca, &kernel.basis[1], cb))?;
    let (psi2, p2) = transform_dirac_solution(&composite, &psi, &p, m)?;
    t.tol("dirac_covariance", dirac_residual(&rep, &p2, m, &psi2) / scale(&p2, m, psi2.norm()));

    let z_chain: Vec<_> = (0..2).map(|_| sampling::generator(rng, Some(3))).collect();
    t.input("z_chain", &z_chain);
    let z = LorentzTransform::from_generators(&z_chain)?;
    t.tol("p4.commutator.z_composite", p4_commutation_residual(&z));
    let space = susy_solutions(&rep, &p, m, tol)?;
    let mut v = arr4(&vec_scale(&space.physical.basis[0], sampling::coefficient(rng)));
    v[3] = sampling::coefficient(rng);
    let (v2, p3) = transform_susy_solution(&z, &v, &p, m)?;
    t.tol("susy_covariance", susy_residual(&rep, &p3, m, &v2) / scale(&p3, m, vec_norm(&v2)));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn run(suite: Suite, seed: u64) -> Trial {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut t = Trial::default();
        run_trial(suite, &mut rng, seed, 1e-10, &mut t).unwrap();
        t
    }

    #[test]
    fn every_member_suite_passes_a_trial() {
        for suite in Suite::MEMBERS {
            for seed in 0..5 {
                let t = run(suite, seed);
                assert!(!t.checks.is_empty());
                for c in &t.checks {
                    assert!(c.passes(1e-10), "{suite}: {c:?}");
                }
            }
        }
    }

    #[test]
    fn trials_record_inputs() {
        let t = run(Suite::SplitDirac, 9);
        assert!(t.inputs.contains_key("momentum"));
        assert!(t.inputs.contains_key("mass"));
    }
}
