mod common;

use common::{ln_gamma, oscillatory_integral, Trig};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rootid::identity::{
    monomial_deriv_side, monomial_root_side, polynomial_root_side, PolynomialSpec, RootSpec,
};
use rootid::numerics::{re, ComplexValue};
use std::f64::consts::PI;

fn cis(x: f64) -> ComplexValue {
    ComplexValue::from_polar(1.0, x)
}

// e^{i pi mu/2} / (2 Gamma(mu)) {(1 - e^{i pi(mu-1)}) Ic + i (1 + e^{i pi(mu-1)}) Is}
// with Ic, Is = int_0^inf xi^{mu-1} cos/sin(z0 xi) d xi
fn fractional_derivative_oracle(z0: f64, mu: f64) -> ComplexValue {
    let scale = z0.powf(-mu);
    let ic = scale * oscillatory_integral(mu - 1.0, Trig::Cos);
    let is = scale * oscillatory_integral(mu - 1.0, Trig::Sin);
    let e = cis(PI * (mu - 1.0));
    let i = ComplexValue::i();
    cis(0.5 * PI * mu) / (2.0 * ln_gamma(mu).exp()) * ((1.0 - e) * ic + i * (1.0 + e) * is)
}

#[test]
fn fresnel_route_against_direct_quadrature() {
    for &z0 in &[0.5, 2.0, 10.381] {
        for &mu in &[0.15, 0.5, 0.85] {
            let d = monomial_deriv_side(re(z0), mu).unwrap();
            let q = fractional_derivative_oracle(z0, mu);
            assert!((d - q).norm() <= 1e-9 * q.norm(), "z0 = {z0}, mu = {mu}: {d} vs {q}");
        }
    }
}

#[test]
fn shifted_mu_sides_agree() {
    for &z0 in &[0.5, 1.0, 3.0] {
        for &mu in &[-2.3, -0.4, 1.7, 3.25] {
            let d = monomial_deriv_side(re(z0), mu).unwrap();
            let r = monomial_root_side(re(z0), re(mu)).unwrap();
            assert!((d - r).norm() <= 1e-12 * r.norm(), "z0 = {z0}, mu = {mu}");
        }
    }
}

#[test]
fn monomial_rejects_off_axis_points() {
    assert!(monomial_deriv_side(ComplexValue::new(1.0, 0.5), 0.5).is_err());
    assert!(monomial_deriv_side(re(-1.0), 0.5).is_err());
    assert!(monomial_deriv_side(re(1.0), 1e-305).is_err());
}

#[test]
fn spec_rejects_degenerate_input() {
    assert!(RootSpec::new(re(1.0), 0).is_err());
    assert!(PolynomialSpec::new(vec![]).is_err());
    assert!(PolynomialSpec::new(vec![RootSpec::new(re(1.0), -1).unwrap()]).is_err());
    let p = PolynomialSpec::new(vec![RootSpec::new(re(1.0), 1).unwrap()]).unwrap();
    assert!(polynomial_root_side(&p, re(1.0), re(0.5)).is_err());
}

fn roots_of(p: &PolynomialSpec) -> Vec<(ComplexValue, i32)> {
    p.roots().iter().map(|r| (r.location, r.multiplicity)).collect()
}

fn random_poly(rng: &mut impl Rng, max_degree: i32) -> PolynomialSpec {
    let mut roots = Vec::new();
    let mut degree = 0;
    let target = rng.gen_range(1..=max_degree);
    while degree < target {
        let m = rng.gen_range(1..=target - degree);
        let loc = ComplexValue::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        roots.push(RootSpec::new(loc, m).unwrap());
        degree += m;
    }
    PolynomialSpec::new(roots).unwrap()
}

#[test]
fn integer_mu_matches_symbolic_derivative() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..50 {
        let p = random_poly(&mut rng, 5);
        let z0 = ComplexValue::new(rng.gen_range(4.0..6.0), rng.gen_range(-1.0..1.0));
        for n in 1..=3usize {
            let r = polynomial_root_side(&p, z0, re(n as f64)).unwrap();
            let d = common::symbolic_derivative_side(&roots_of(&p), z0, n);
            assert!((d - r).norm() <= 1e-12 * r.norm().max(1e-300), "n = {n}: {d} vs {r}");
        }
    }
}

proptest! {
    #[test]
    fn product_is_additive(seed in any::<u64>(), mu_re in -2.0f64..4.0, mu_im in -1.0f64..1.0) {
        let mut rng = StdRng::seed_from_u64(seed);
        let p = random_poly(&mut rng, 5);
        let q = random_poly(&mut rng, 5);
        let z0 = ComplexValue::new(rng.gen_range(-4.0..4.0), rng.gen_range(-4.0..4.0));
        let mu = ComplexValue::new(mu_re, mu_im);
        let both = polynomial_root_side(&p.product(&q), z0, mu);
        prop_assume!(both.is_ok());
        let a = polynomial_root_side(&p, z0, mu).unwrap();
        let b = polynomial_root_side(&q, z0, mu).unwrap();
        let scale = a.norm() + b.norm();
        prop_assert!((both.unwrap() - (a + b)).norm() <= 1e-13 * scale);
    }

    #[test]
    fn monomial_sides_agree(z0 in 0.05f64..50.0, mu in -3.0f64..3.0) {
        prop_assume!((mu - mu.round()).abs() > 1e-6);
        let d = monomial_deriv_side(re(z0), mu).unwrap();
        let r = monomial_root_side(re(z0), re(mu)).unwrap();
        prop_assert!((d - r).norm() <= 1e-10 * r.norm());
    }
}
