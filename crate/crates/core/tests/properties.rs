use num_complex::Complex64;
use proptest::prelude::*;

use relsub::dirac::{build_gamma_spinor, dirac_residual, dirac_solutions, Bispinor};
use relsub::dkp::{build_beta_spin0, dkp_solutions, DkpVector5};
use relsub::linalg::{
    null_space, realify_antilinear, stack_real, unstack_real, vec_add, vec_dist, vec_norm, vec_scale, ComplexMatrix,
};
use relsub::lorentz::{make_boost, make_rotation, LorentzTransform};
use relsub::minkowski::{half_pairing, spinor_pairing, spinor_to_vector, vector_to_spinor, FourVector};
use relsub::subsolutions::{embed_dirac_constituent, embed_dkp_triple, split_dirac, split_dkp_spin0};
use relsub::susy::{decompose_susy, susy_residual};

fn complex() -> impl Strategy<Value = Complex64> {
    (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

fn matrix(n: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec(complex(), n * n).prop_map(move |d| ComplexMatrix::new(n, n, d).unwrap())
}

fn nonzero_coefficient() -> impl Strategy<Value = Complex64> {
    (0.5..2.0f64, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

fn on_shell() -> impl Strategy<Value = (FourVector, f64)> {
    (prop::array::uniform3(-3.0..3.0f64), 0.5..2.0f64).prop_map(|(s, m)| (FourVector::on_shell(s, m), m))
}

fn four_vector() -> impl Strategy<Value = FourVector> {
    prop::array::uniform4(-3.0..3.0f64).prop_map(FourVector)
}

proptest! {
    #[test]
    fn matmul_is_associative(a in matrix(4), b in matrix(4), c in matrix(4)) {
        let left = &(&a * &b) * &c;
        let right = &a * &(&b * &c);
        let scale = a.max_abs() * b.max_abs() * c.max_abs() * 16.0 + 1.0;
        prop_assert!(left.max_abs_diff(&right) <= 1e-12 * scale);
    }

    #[test]
    fn null_space_vectors_are_annihilated(rows in prop::collection::vec(prop::collection::vec(complex(), 5), 1..5)) {
        let m = ComplexMatrix::from_rows(&rows).unwrap();
        let k = null_space(&m, 1e-10).unwrap();
        prop_assert!(k.dimension >= 5 - rows.len());
        for v in &k.basis {
            prop_assert!((vec_norm(v) - 1.0).abs() < 1e-12);
            prop_assert!(vec_norm(&m.apply(v).unwrap()) <= 1e-10 * m.frobenius_norm().max(1.0));
        }
    }

    #[test]
    fn realified_action_matches_direct_evaluation(
        l in matrix(3),
        k in matrix(3),
        v in prop::collection::vec(complex(), 3),
    ) {
        let real = realify_antilinear(&l, &k).unwrap();
        let via_real = unstack_real(&real.apply(&stack_real(&v)).unwrap());
        let conj: Vec<Complex64> = v.iter().map(|z| z.conj()).collect();
        let direct = vec_add(&l.apply(&v).unwrap(), &k.apply(&conj).unwrap());
        prop_assert!(vec_dist(&via_real, &direct) <= 1e-12);
    }

    #[test]
    fn spinor_map_roundtrips(v in four_vector()) {
        let back = spinor_to_vector(&vector_to_spinor(&v).upper, 1e-10).unwrap();
        for k in 0..4 {
            prop_assert!((back[k] - v[k]).abs() <= 1e-12 * v.euclidean_norm().max(1.0));
        }
    }

    #[test]
    fn pairings_reproduce_the_square(v in four_vector()) {
        let sq = v.minkowski_square();
        let rel = v.euclidean_norm().powi(2).max(1.0);
        prop_assert!((spinor_pairing(&v) - 2.0 * sq).abs() <= 1e-12 * rel);
        prop_assert!((half_pairing(&v, 1).unwrap() - sq).abs() <= 1e-12 * rel);
        prop_assert!((half_pairing(&v, 2).unwrap() - sq).abs() <= 1e-12 * rel);
    }

    #[test]
    fn dirac_split_and_embed_are_linear(
        (p, m) in on_shell(),
        a in nonzero_coefficient(),
        b in nonzero_coefficient(),
    ) {
        let k = dirac_solutions(&p, m, 1e-10).unwrap();
        let u = Bispinor::from_slice(&k.basis[0]).unwrap();
        let w = Bispinor::from_slice(&k.basis[1]).unwrap();
        let mix = Bispinor::from_slice(&vec_add(&vec_scale(&k.basis[0], a), &vec_scale(&k.basis[1], b))).unwrap();
        let (m1, m2) = split_dirac(&mix, &p, m).unwrap();
        let (u1, u2) = split_dirac(&u, &p, m).unwrap();
        let (w1, w2) = split_dirac(&w, &p, m).unwrap();
        let scale = (p.euclidean_norm() + m) * mix.norm();
        for (whole, x, y) in [(m1, u1, w1), (m2, u2, w2)] {
            let expect = vec_add(
                &vec_scale(&embed_dirac_constituent(&x), a),
                &vec_scale(&embed_dirac_constituent(&y), b),
            );
            prop_assert!(vec_dist(&embed_dirac_constituent(&whole), &expect) <= 1e-12 * scale);
        }
    }

    #[test]
    fn dkp_split_is_homogeneous((p, m) in on_shell(), c in nonzero_coefficient()) {
        let k = dkp_solutions(&build_beta_spin0(), &p, m, 1e-10).unwrap();
        let base = DkpVector5::from_slice(&k.basis[0]).unwrap();
        let scaled = DkpVector5::from_slice(&vec_scale(&k.basis[0], c)).unwrap();
        let (bl, br) = split_dkp_spin0(&base, &p, m).unwrap();
        let (sl, sr) = split_dkp_spin0(&scaled, &p, m).unwrap();
        for (s, b) in [(sl, bl), (sr, br)] {
            let expect = vec_scale(&embed_dkp_triple(&b), c);
            prop_assert!(vec_dist(&embed_dkp_triple(&s), &expect) <= 1e-12 * (p.euclidean_norm() + m));
        }
    }

    #[test]
    fn projected_residual_splits_orthogonally(p in four_vector(), m in 0.5..2.0f64, v in prop::array::uniform4(complex())) {
        let rep = build_gamma_spinor();
        let r = susy_residual(&rep, &p, m, &v);
        let (a, b) = decompose_susy(&rep, &p, m, &v);
        let scale = ((p.euclidean_norm() + m) * vec_norm(&v)).max(1.0);
        prop_assert!((r * r - a * a - b * b).abs() <= 1e-12 * scale * scale);
        prop_assert!(a <= r + 1e-12 * scale && b <= r + 1e-12 * scale);
    }

    #[test]
    fn transformations_preserve_the_metric(axis in 1usize..=3, chi in -2.0..2.0f64, theta in -6.0..6.0f64) {
        let rep = build_gamma_spinor();
        for t in [make_boost(axis, chi).unwrap(), make_rotation(axis, theta).unwrap()] {
            prop_assert!(t.metric_defect() <= 1e-12 * t.vector_matrix[0][0].powi(2));
            prop_assert!(t.intertwining_defect(&rep) <= 1e-12 * t.vector_matrix[0][0]);
            prop_assert!((t.determinant() - 1.0).abs() <= 1e-12 * t.vector_matrix[0][0].powi(4));
        }
    }

    #[test]
    fn boosted_solutions_stay_solutions((p, m) in on_shell(), chi in -1.5..1.5f64, theta in -3.0..3.0f64) {
        let rep = build_gamma_spinor();
        let t = make_boost(1, chi).unwrap().then(&make_rotation(2, theta).unwrap());
        let k = dirac_solutions(&p, m, 1e-10).unwrap();
        let psi = Bispinor::from_slice(&k.basis[0]).unwrap();
        let out = t.apply_spinor(&psi.to_array());
        let q = t.apply_vector(&p);
        let res = dirac_residual(&rep, &q, m, &Bispinor::from_slice(&out).unwrap());
        prop_assert!(res <= 1e-9 * (q.euclidean_norm() + m) * vec_norm(&out));
        prop_assert!(LorentzTransform::identity().then(&t).intertwining_defect(&rep) <= 1e-11);
    }
}
