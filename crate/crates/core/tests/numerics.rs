mod common;

use common::{bernoulli_numbers, fresnel_quadrature, hurwitz_zeta, ln_gamma, trigamma, Trig};
use proptest::prelude::*;
use rootid::numerics::{
    bernoulli_even, BernoulliTable, cpow_principal, exp_i_pi, fresnel_closed, gamma_complex, gamma_real, gamma_reciprocal,
    principal_arg, re, sin_pi, ComplexValue, FresnelKind,
};
use std::f64::consts::PI;

#[test]
fn oracles_reproduce_known_values() {
    assert!((fresnel_quadrature(2.0, Trig::Sin) - (PI / 8.0).sqrt()).abs() < 1e-10);
    // zeta(2) = pi^2/6, zeta(0, a) = 1/2 - a, psi'(1) = pi^2/6
    assert!((hurwitz_zeta(2.0, 1.0) - PI * PI / 6.0).abs() < 1e-13);
    assert!((hurwitz_zeta(0.0, 3.5) + 3.0).abs() < 1e-12);
    assert!((trigamma(1.0) - PI * PI / 6.0).abs() < 1e-13);
    assert!((ln_gamma(0.5) - 0.5 * PI.ln()).abs() < 1e-13);
}

#[test]
fn gamma_matches_stirling_oracle() {
    for &x in &[0.1, 0.5, 1.3, 2.7, 7.25, 12.5, 20.5, 33.3, 49.9] {
        let expect = ln_gamma(x).exp();
        assert!(common::rel_err(gamma_real(x).unwrap(), expect) < 1e-12, "x = {x}");
        assert!(common::rel_err(gamma_complex(re(x)).unwrap().re, expect) < 1e-12, "x = {x}");
    }
    for &x in &[-0.5, -3.7, -12.25, -41.6] {
        // Gamma(x) Gamma(1 - x) = pi / sin(pi x)
        let expect = PI / ((PI * x).sin() * ln_gamma(1.0 - x).exp());
        assert!(common::rel_err(gamma_real(x).unwrap(), expect) < 1e-12, "x = {x}");
    }
}

#[test]
fn gamma_poles_and_reciprocal() {
    for n in [0.0, -1.0, -7.0] {
        assert!(gamma_complex(re(n)).is_err());
        assert_eq!(gamma_reciprocal(re(n)).unwrap(), re(0.0));
    }
    let g = gamma_complex(re(0.5)).unwrap();
    assert!((g.re - PI.sqrt()).abs() < 1e-14 && g.im == 0.0);
}

#[test]
fn bernoulli_agrees_with_recurrence() {
    let b = bernoulli_numbers(10);
    for k in 1..=8 {
        assert_eq!(bernoulli_even(k).unwrap(), b[k], "B_{}", 2 * k);
    }
    assert!(bernoulli_even(9).is_err());
    let wide = BernoulliTable::new(10).unwrap();
    assert_eq!(wide.get(10).unwrap(), b[10]);
    assert!(BernoulliTable::new(11).is_err());
}

#[test]
fn fresnel_closed_form_against_quadrature() {
    for &a in &[1.2, 1.5, 2.0, 3.0, 4.0, 7.0] {
        for (kind, trig) in [(FresnelKind::Sin, Trig::Sin), (FresnelKind::Cos, Trig::Cos)] {
            let c = fresnel_closed(a, kind).unwrap();
            let q = fresnel_quadrature(a, trig);
            assert!((c - q).abs() < 1e-10, "a = {a}: {c} vs {q}");
        }
    }
}

#[test]
fn negative_zero_imaginary_takes_upper_arg() {
    assert_eq!(principal_arg(ComplexValue::new(-2.0, -0.0)), PI);
    let w = cpow_principal(ComplexValue::new(-4.0, -0.0), re(0.5)).unwrap();
    assert!((w - ComplexValue::new(0.0, 2.0)).norm() < 1e-15);
    assert!(cpow_principal(re(0.0), re(-1.0)).is_err());
}

#[test]
fn lattice_phases_are_exact() {
    assert_eq!(exp_i_pi(re(1.0)), re(-1.0));
    assert_eq!(exp_i_pi(re(0.5)), ComplexValue::new(0.0, 1.0));
    assert_eq!(exp_i_pi(re(-2.0)), re(1.0));
}

proptest! {
    #[test]
    fn reflection_holds(x in 0.05f64..0.95, y in -3.0f64..3.0) {
        let z = ComplexValue::new(x, y);
        let lhs = gamma_complex(z).unwrap() * gamma_complex(1.0 - z).unwrap();
        let rhs = PI / sin_pi(z);
        prop_assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm());
    }

    #[test]
    fn recurrence_holds(x in -4.5f64..6.0, y in 0.1f64..4.0) {
        let z = ComplexValue::new(x, y);
        let g1 = gamma_complex(z + 1.0).unwrap();
        let zg = z * gamma_complex(z).unwrap();
        prop_assert!((g1 - zg).norm() <= 1e-12 * g1.norm());
    }

    #[test]
    fn reciprocal_is_inverse(x in -6.0f64..6.0) {
        prop_assume!((x - x.round()).abs() > 1e-3);
        let g = gamma_real(x).unwrap();
        let r = gamma_reciprocal(re(x)).unwrap();
        prop_assert!((r.re * g - 1.0).abs() < 1e-12);
    }

    #[test]
    fn unit_modulus_phase(mu in -50.0f64..50.0) {
        prop_assert!((exp_i_pi(re(mu)).norm() - 1.0).abs() < 1e-15);
    }
}
