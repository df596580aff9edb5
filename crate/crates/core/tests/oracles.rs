//! Closed-form solutions built by hand and compared with the library's
//! numerically computed kernels.

use num_complex::Complex64;

use relsub::dirac::{build_gamma_spinor, dirac_residual, dirac_solutions, Bispinor};
use relsub::dkp::{build_beta_spin0, build_beta_spin1, dkp_operator, dkp_solutions};
use relsub::linalg::{c64, vec_dot, vec_norm, ComplexMatrix};
use relsub::lorentz::make_boost;
use relsub::minkowski::{spinor_pairing, FourVector};
use relsub::susy::{susy_residual, susy_solutions};

fn r(x: f64) -> Complex64 {
    c64(x, 0.0)
}

/// Distance from `v` to the span of an orthonormal basis.
fn off_span(basis: &[Vec<Complex64>], v: &[Complex64]) -> f64 {
    let mut rest = v.to_vec();
    for b in basis {
        let c = vec_dot(b, v);
        for (x, y) in rest.iter_mut().zip(b) {
            *x -= c * y;
        }
    }
    vec_norm(&rest)
}

const MOMENTA: [([f64; 3], f64); 5] = [
    ([0.0, 0.0, 0.0], 1.0),
    ([0.3, -1.2, 2.0], 1.0),
    ([-2.5, 0.4, 0.1], 0.5),
    ([1.0, 1.0, 1.0], 2.0),
    ([0.0, 0.0, -3.0], 0.75),
];

/// `η = (p⁰ − σ·p)ξ / m` solves `(p⁰ + σ·p)η = mξ` because
/// `(p⁰ + σ·p)(p⁰ − σ·p) = p²`.
fn dirac_oracle(p: &FourVector, m: f64, xi: [Complex64; 2]) -> Bispinor {
    let [p0, p1, p2, p3] = p.components();
    let i = Complex64::i();
    let eta1 = ((p0 - p3) * xi[0] + (-p1 + i * p2) * xi[1]) / m;
    let eta2 = ((-p1 - i * p2) * xi[0] + (p0 + p3) * xi[1]) / m;
    Bispinor::new(xi[0], xi[1], eta1, eta2)
}

#[test]
fn dirac_kernel_contains_closed_form_spinors() {
    let rep = build_gamma_spinor();
    for (s, m) in MOMENTA {
        let p = FourVector::on_shell(s, m);
        let k = dirac_solutions(&p, m, 1e-10).unwrap();
        assert_eq!(k.dimension, 2);
        for xi in [[r(1.0), r(0.0)], [r(0.0), r(1.0)], [c64(0.3, -0.7), c64(1.1, 0.2)]] {
            let u = dirac_oracle(&p, m, xi);
            assert!(dirac_residual(&rep, &p, m, &u) < 1e-12 * (p.euclidean_norm() + m) * u.norm());
            assert!(off_span(&k.basis, &u.to_array()) < 1e-10 * u.norm());
        }
    }
}

#[test]
fn rest_frame_dirac_solutions_have_equal_halves() {
    let k = dirac_solutions(&FourVector::new(1.0, 0.0, 0.0, 0.0), 1.0, 1e-10).unwrap();
    for v in &k.basis {
        assert!((v[0] - v[2]).norm() < 1e-12 && (v[1] - v[3]).norm() < 1e-12);
    }
}

#[test]
fn spin0_kernel_is_momentum_over_mass() {
    let rep = build_beta_spin0();
    for (s, m) in MOMENTA {
        let p = FourVector::on_shell(s, m);
        let k = dkp_solutions(&rep, &p, m, 1e-10).unwrap();
        assert_eq!(k.dimension, 1);
        let [p0, p1, p2, p3] = p.components();
        let oracle = [r(p0 / m), r(p1 / m), r(p2 / m), r(p3 / m), r(1.0)];
        assert!(off_span(&k.basis, &oracle) < 1e-10 * vec_norm(&oracle));
    }
}

/// A transverse polarisation `e` with `p·e = 0` and the tensor
/// `ψ^{μν} = (p^μe^ν − p^νe^μ)/m` form a spin-1 solution.
#[test]
fn spin1_kernel_contains_proca_waves() {
    let rep = build_beta_spin1();
    let pairs = [(0, 1), (0, 2), (0, 3), (2, 3), (3, 1), (1, 2)];
    for (s, m) in MOMENTA {
        let p = FourVector::on_shell(s, m);
        let k = dkp_solutions(&rep, &p, m, 1e-10).unwrap();
        assert_eq!(k.dimension, 3);
        let pu = p.components();
        for e_spatial in [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.2, -0.5, 0.9]] {
            let e0 = (pu[1] * e_spatial[0] + pu[2] * e_spatial[1] + pu[3] * e_spatial[2]) / pu[0];
            let e = [e0, e_spatial[0], e_spatial[1], e_spatial[2]];
            let mut v: Vec<Complex64> = pairs.iter().map(|&(a, b)| r((pu[a] * e[b] - pu[b] * e[a]) / m)).collect();
            v.extend(e.iter().map(|&x| r(x)));
            let res = vec_norm(&dkp_operator(&rep, &p, m).apply(&v).unwrap());
            assert!(res < 1e-12 * (p.euclidean_norm() + m) * vec_norm(&v), "residual {res}");
            assert!(off_span(&k.basis, &v) < 1e-10 * vec_norm(&v));
        }
    }
}

#[test]
fn dkp_operators_obey_the_cubic_relation() {
    // (β·p)³ = p²(β·p) follows from the trilinear algebra.
    let p = FourVector::new(1.7, 0.3, -0.8, 0.5);
    for rep in [build_beta_spin0(), build_beta_spin1()] {
        let b = rep.contract(&p);
        let cube = &(&b * &b) * &b;
        let rhs = b.scale_real(p.minkowski_square());
        assert!(cube.max_abs_diff(&rhs) < 1e-12);
    }
}

#[test]
fn pairing_equals_twice_the_determinant() {
    for v in [[1.0, 0.0, 0.0, 0.0], [2.0, 1.0, -1.0, 0.5], [0.1, 2.0, 3.0, -1.0]] {
        let [t, x, y, z] = v;
        // det [[t+z, x−iy], [x+iy, t−z]] = t² − x² − y² − z²
        let det = (t + z) * (t - z) - (x * x + y * y);
        assert!((spinor_pairing(&FourVector(v)) - 2.0 * det).abs() < 1e-12);
    }
}

#[test]
fn z_boost_spinor_matrix_is_diagonal_exponential() {
    let chi = 0.9;
    let t = make_boost(3, chi).unwrap();
    let (a, b) = ((chi / 2.0).exp(), (-chi / 2.0).exp());
    let oracle = ComplexMatrix::from_real_diagonal(&[a, b, b, a]);
    assert!(t.spinor_matrix.max_abs_diff(&oracle) < 1e-14);
}

#[test]
fn boosted_rest_spinor_matches_closed_form() {
    let rep = build_gamma_spinor();
    let m = 1.3;
    let rest = FourVector::new(m, 0.0, 0.0, 0.0);
    let xi = [r(1.0), r(0.0)];
    let at_rest = dirac_oracle(&rest, m, xi);
    let t = make_boost(3, 0.6).unwrap();
    let boosted = t.apply_spinor(&at_rest.to_array());
    let q = t.apply_vector(&rest);
    assert!(dirac_residual(&rep, &q, m, &Bispinor::from_slice(&boosted).unwrap()) < 1e-12);
    // The boosted spinor is the closed-form solution at q for the boosted ξ.
    let oracle = dirac_oracle(&q, m, [boosted[0], boosted[1]]);
    let d: f64 = oracle.to_array().iter().zip(&boosted).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    assert!(d < 1e-12);
}

#[test]
fn projected_kernel_is_first_component_block() {
    // With a zero fourth slot the projected equation reduces to the first
    // three columns of γ·p − m; at rest its kernel is spanned by (1, 0, 1, 0).
    let rep = build_gamma_spinor();
    let p = FourVector::new(1.0, 0.0, 0.0, 0.0);
    let k = susy_solutions(&rep, &p, 1.0, 1e-10).unwrap();
    assert_eq!(k.physical.dimension, 1);
    let oracle = [r(1.0), r(0.0), r(1.0), r(0.0)];
    assert_eq!(susy_residual(&rep, &p, 1.0, &oracle), 0.0);
    assert!(off_span(&k.physical.basis, &oracle) < 1e-12);
}
