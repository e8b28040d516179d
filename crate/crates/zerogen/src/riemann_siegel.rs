//! Riemann-Siegel evaluation of the Hardy Z-function.
//!
//! `Z(t) = exp(i theta(t)) zeta(1/2 + it)` is real for real `t`, so its sign
//! changes bracket the ordinates of zeros on the critical line.
#![allow(clippy::excessive_precision)]

use std::f64::consts::PI;

// Taylor coefficients of the remainder functions C0..C4 in powers of (p - 1/2),
// where p is the fractional part of sqrt(t / 2 pi). Digits as published.
const C0: [f64; 39] = [
    3.8268343236508977173e-1,
    0.0,
    1.7489618723100817974,
    0.0,
    2.1180252076854963732,
    0.0,
    -8.7072166705114807392e-1,
    0.0,
    -3.4733112243465167073,
    0.0,
    -1.6626947308999324496,
    0.0,
    1.2167312889192321345,
    0.0,
    1.3014304161007975773,
    0.0,
    3.0511021827361672421e-2,
    0.0,
    -3.7558030515450952428e-1,
    0.0,
    -1.0857844165640659744e-1,
    0.0,
    5.1832902999549623376e-2,
    0.0,
    2.999948061990227592e-2,
    0.0,
    -2.275939670612564226e-3,
    0.0,
    -4.3826474165803383059e-3,
    0.0,
    -4.0642301837298469931e-4,
    0.0,
    4.0060977854221139279e-4,
    0.0,
    8.9710579913888412978e-5,
    0.0,
    -2.3025650027239107116e-5,
    0.0,
    -9.3800066019067924847e-6,
];

const C1: [f64; 40] = [
    0.0,
    -5.365020525675069406e-2,
    0.0,
    1.102781874108148244e-1,
    0.0,
    1.2317200154315226313,
    0.0,
    1.2634964862799457884,
    0.0,
    -1.6951089975595030184,
    0.0,
    -2.999871196765010089,
    0.0,
    -1.0819944959899208643e-1,
    0.0,
    1.9407662946212712688,
    0.0,
    7.8384235615006865329e-1,
    0.0,
    -5.0548296679003659188e-1,
    0.0,
    -3.8450723496057974051e-1,
    0.0,
    3.7472646465315320676e-2,
    0.0,
    9.0920266109731763173e-2,
    0.0,
    1.0449237550064509218e-2,
    0.0,
    -1.2582979651583416497e-2,
    0.0,
    -3.3995037211512740851e-3,
    0.0,
    1.0410950537714891268e-3,
    0.0,
    5.0109490511184868604e-4,
    0.0,
    -3.9563596690031815595e-5,
    0.0,
    -4.7624592453571896387e-5,
];

const C2: [f64; 39] = [
    5.1885428302931684938e-3,
    0.0,
    1.2378633552253898413e-3,
    0.0,
    -1.8137505725166997411e-1,
    0.0,
    1.4291492748532126541e-1,
    0.0,
    1.3303391766687565325,
    0.0,
    3.5224723534037336775e-1,
    0.0,
    -2.4210015958919507238,
    0.0,
    -1.6760787022538108853,
    0.0,
    1.3689416723328372184,
    0.0,
    1.5539019430222983221,
    0.0,
    -1.722164273472998052e-1,
    0.0,
    -6.359068055045430989e-1,
    0.0,
    -9.9116498730412081054e-2,
    0.0,
    1.4033480067387008951e-1,
    0.0,
    4.7823520198272922364e-2,
    0.0,
    -1.7356040641479780798e-2,
    0.0,
    -1.0225012534028591844e-2,
    0.0,
    9.2741491597948878994e-4,
    0.0,
    1.3572194372373385345e-3,
    0.0,
    6.41369012029388009e-5,
];

const C3: [f64; 40] = [
    0.0,
    -2.6794321814389138085e-3,
    0.0,
    2.9953721091035149637e-2,
    0.0,
    -4.2570172541828697985e-2,
    0.0,
    -2.8997965779803887507e-1,
    0.0,
    4.8888319992354459725e-1,
    0.0,
    1.2308558763957460812,
    0.0,
    -8.2975607085274087042e-1,
    0.0,
    -2.2497635366665668665,
    0.0,
    7.8451399610054713794e-2,
    0.0,
    1.7467492800868894004,
    0.0,
    4.5968080979749935109e-1,
    0.0,
    -6.6193534710397749464e-1,
    0.0,
    -3.1590441036173634579e-1,
    0.0,
    1.2844792545207495989e-1,
    0.0,
    1.0073382716626152301e-1,
    0.0,
    -9.5301838488252677595e-3,
    0.0,
    -1.9264421687514088898e-2,
    0.0,
    -1.2464637158769291712e-3,
    0.0,
    2.424396964110308574e-3,
    0.0,
    4.3764769774185701828e-4,
];

const C4: [f64; 39] = [
    4.6483389361763381854e-4,
    0.0,
    -4.0226429461361883039e-3,
    0.0,
    3.8471770517961268836e-3,
    0.0,
    6.5811751358094860021e-2,
    0.0,
    -1.9604124343694449118e-1,
    0.0,
    -2.0854053686358853244e-1,
    0.0,
    9.5077541851417509458e-1,
    0.0,
    5.3415353129148739761e-1,
    0.0,
    -1.6763494411763400796,
    0.0,
    -1.0767471578751289928,
    0.0,
    1.2353393016565969853,
    0.0,
    1.0257825340057275772,
    0.0,
    -4.0124095793988544379e-1,
    0.0,
    -5.036663995108303448e-1,
    0.0,
    3.5734877955027449858e-2,
    0.0,
    1.4431763086785416624e-1,
    0.0,
    1.5091527417903469417e-2,
    0.0,
    -2.6098874779194361318e-2,
    0.0,
    -6.126628379519261749e-3,
    0.0,
    3.0775031298708411848e-3,
];


const REMAINDER: [&[f64]; 5] = [&C0, &C1, &C2, &C3, &C4];

/// Riemann-Siegel theta function, asymptotic expansion (accurate for t > 10).
pub fn theta(t: f64) -> f64 {
    let inv = 1.0 / t;
    let inv2 = inv * inv;
    0.5 * t * (t / (2.0 * PI)).ln() - 0.5 * t - PI / 8.0
        + inv * (1.0 / 48.0 + inv2 * (7.0 / 5760.0 + inv2 * (31.0 / 80640.0 + inv2 * 127.0 / 430080.0)))
}

/// Derivative of [`theta`], leading terms only (used for Newton steps).
pub fn theta_prime(t: f64) -> f64 {
    0.5 * (t / (2.0 * PI)).ln() - 1.0 / (48.0 * t * t)
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Hardy Z-function via the Riemann-Siegel formula with four correction terms.
pub fn z_function(t: f64) -> f64 {
    let a = (t / (2.0 * PI)).sqrt();
    let n = a.floor() as usize;
    let th = theta(t);
    let mut main = 0.0;
    for k in 1..=n {
        let kf = k as f64;
        main += (th - t * kf.ln()).cos() / kf.sqrt();
    }
    main *= 2.0;

    let p = a - n as f64;
    let x = p - 0.5;
    let w = 1.0 / a;
    let mut rem = 0.0;
    let mut wp = 1.0;
    for c in REMAINDER {
        rem += horner(c, x) * wp;
        wp *= w;
    }
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    main + sign * rem / a.sqrt()
}

/// Below this height the Riemann-Siegel remainder is too coarse for 1e-9 zero
/// locations, so [`hardy_z`] switches to Euler-Maclaurin summation.
pub const EULER_MACLAURIN_CUTOFF: f64 = 1000.0;

// B_2k / (2k)! for k = 1..20.
const BERNOULLI_OVER_FACTORIAL: [f64; 20] = [
    0.08333333333333333,
    -0.001388888888888889,
    3.306878306878307e-05,
    -8.267195767195768e-07,
    2.08767569878681e-08,
    -5.284190138687493e-10,
    1.3382536530684679e-11,
    -3.3896802963225827e-13,
    8.586062056277845e-15,
    -2.174868698558062e-16,
    5.5090028283602295e-18,
    -1.3954464685812522e-19,
    3.534707039629467e-21,
    -8.953517427037546e-23,
    2.267952452337683e-24,
    -5.744790668872202e-26,
    1.455172475614865e-27,
    -3.6859949406653103e-29,
    9.336734257095045e-31,
    -2.36502241570063e-32,
];

/// Z(t) from Euler-Maclaurin summation of zeta(1/2 + it); cost grows like t.
pub fn z_euler_maclaurin(t: f64) -> f64 {
    use num_complex::Complex64;

    let s = Complex64::new(0.5, t);
    // (|s| / 2 pi N)^(2k) must be negligible after 20 correction terms
    let n = (t / PI) as usize + 30;
    let nf = n as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 1..n {
        sum += Complex64::new(k as f64, 0.0).powc(-s);
    }
    let n_pow = Complex64::new(nf, 0.0).powc(-s);
    sum += n_pow * nf / (s - 1.0) + 0.5 * n_pow;

    let mut rising = s;
    let mut npow = n_pow / nf;
    for (k, coeff) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        sum += rising * npow * *coeff;
        let kk = (2 * k + 2) as f64;
        rising *= (s + (kk - 1.0)) * (s + kk);
        npow /= nf * nf;
    }
    let phase = Complex64::from_polar(1.0, theta(t));
    (phase * sum).re
}

/// Z(t) using the cheapest method that is accurate at height `t`.
pub fn hardy_z(t: f64) -> f64 {
    if t < EULER_MACLAURIN_CUTOFF {
        z_euler_maclaurin(t)
    } else {
        z_function(t)
    }
}
