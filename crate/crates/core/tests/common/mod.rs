//! Reference implementations the integration tests compare against. None of
//! this calls into the library.
#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

/// Gauss-Legendre nodes and weights on [-1, 1].
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

fn integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, rule: &[(f64, f64)]) -> f64 {
    let (m, h) = (0.5 * (a + b), 0.5 * (b - a));
    rule.iter().map(|&(x, w)| w * f(m + h * x)).sum::<f64>() * h
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Trig {
    Sin,
    Cos,
}

/// `int_0^inf t^b trig(t) dt` for `-1 < b < 0`.
///
/// The stretch up to the first zero of the integrand is mapped by `t = x^m`,
/// `m = 1/(1+b)`, which removes the endpoint singularity, and integrated on
/// panels graded towards 0. The remaining half-period lobes form an
/// alternating series summed by repeated averaging of partial sums.
pub fn oscillatory_integral(b: f64, kind: Trig) -> f64 {
    assert!(b > -1.0 && b < 0.0);
    let rule = gauss_legendre(24);
    let trig = |t: f64| match kind {
        Trig::Sin => t.sin(),
        Trig::Cos => t.cos(),
    };
    let first_zero = match kind {
        Trig::Sin => PI,
        Trig::Cos => 0.5 * PI,
    };
    let m = 1.0 / (1.0 + b);
    let g = |x: f64| m * trig(x.powf(m));
    let top = first_zero.powf(1.0 / m);
    let mut head = 0.0;
    let mut hi = top;
    for _ in 0..60 {
        let lo = 0.5 * hi;
        head += integrate(&g, lo, hi, &rule);
        hi = lo;
    }
    head += integrate(&g, 0.0, hi, &rule);

    let f = |t: f64| t.powf(b) * trig(t);
    let lobes = 60;
    let mut partial = Vec::with_capacity(lobes);
    let mut acc = head;
    for k in 0..lobes {
        let a = first_zero + k as f64 * PI;
        acc += integrate(&f, a, a + PI, &rule);
        partial.push(acc);
    }
    // repeated averaging of the tail of partial sums
    let mut level = partial[20..].to_vec();
    while level.len() > 1 {
        level = level.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    }
    level[0]
}

/// `int_0^inf trig(x^a) dx = (1/a) int_0^inf t^{1/a - 1} trig(t) dt`, `a > 1`.
pub fn fresnel_quadrature(a: f64, kind: Trig) -> f64 {
    oscillatory_integral(1.0 / a - 1.0, kind) / a
}

/// Even Bernoulli numbers `B_0, B_2, ..., B_{2n}`, `n <= 12`, from the tabulated fractions.
pub fn bernoulli_numbers(n: usize) -> Vec<f64> {
    const TABLE: [(f64, f64); 13] = [
        (1.0, 1.0),
        (1.0, 6.0),
        (-1.0, 30.0),
        (1.0, 42.0),
        (-1.0, 30.0),
        (5.0, 66.0),
        (-691.0, 2730.0),
        (7.0, 6.0),
        (-3617.0, 510.0),
        (43867.0, 798.0),
        (-174611.0, 330.0),
        (854513.0, 138.0),
        (-236364091.0, 2730.0),
    ];
    TABLE[..=n].iter().map(|&(p, q)| p / q).collect()
}

/// Hurwitz zeta `sum_{n>=0} (a+n)^{-s}`, continued to all real `s != 1` by
/// Euler-Maclaurin with 60 direct terms and 12 corrections.
pub fn hurwitz_zeta(s: f64, a: f64) -> f64 {
    assert!(s != 1.0 && a > 0.0);
    let n = 60;
    let b = bernoulli_numbers(12);
    let mut direct = 0.0;
    for k in 0..n {
        direct += (a + k as f64).powf(-s);
    }
    let x = a + n as f64;
    let mut tail = x.powf(1.0 - s) / (s - 1.0) + 0.5 * x.powf(-s);
    // B_2k/(2k)! s(s+1)...(s+2k-2) x^{-s-2k+1}
    let mut poch = s;
    let mut fact = 2.0;
    let mut xp = x.powf(-s - 1.0);
    for k in 1..=12 {
        tail += b[k] / fact * poch * xp;
        poch *= (s + 2.0 * k as f64 - 1.0) * (s + 2.0 * k as f64);
        fact *= (2 * k + 1) as f64 * (2 * k + 2) as f64;
        xp /= x * x;
    }
    direct + tail
}

/// `psi'(x)` by upward recurrence and the asymptotic series.
pub fn trigamma(mut x: f64) -> f64 {
    let mut acc = 0.0;
    while x < 30.0 {
        acc += 1.0 / (x * x);
        x += 1.0;
    }
    let b = bernoulli_numbers(10);
    let mut s = 1.0 / x + 0.5 / (x * x);
    let mut xp = 1.0 / (x * x * x);
    for bk in b.iter().skip(1) {
        s += bk * xp;
        xp /= x * x;
    }
    acc + s
}

/// `ln Gamma(x)` for `x > 0` by recurrence and Stirling.
pub fn ln_gamma(mut x: f64) -> f64 {
    let mut shift = 0.0;
    while x < 30.0 {
        shift -= x.ln();
        x += 1.0;
    }
    let b = bernoulli_numbers(10);
    let mut s = (x - 0.5) * x.ln() - x + 0.5 * (2.0 * PI).ln();
    let mut xp = 1.0 / x;
    for k in 1..=10 {
        s += b[k] / ((2 * k) as f64 * (2 * k - 1) as f64) * xp;
        xp /= x * x;
    }
    s + shift
}

/// von Mangoldt `Lambda(n)` for `n <= limit`.
pub fn von_mangoldt(limit: usize) -> Vec<f64> {
    let mut lam = vec![0.0; limit + 1];
    let mut composite = vec![false; limit + 1];
    for p in 2..=limit {
        if composite[p] {
            continue;
        }
        let mut m = p * p;
        while m <= limit {
            composite[m] = true;
            m += p;
        }
        let lp = (p as f64).ln();
        let mut q = p;
        while q <= limit {
            lam[q] = lp;
            match q.checked_mul(p) {
                Some(n) => q = n,
                None => break,
            }
        }
    }
    lam
}

/// Expanded coefficients `c[k] z^k` of `prod (z - r)^M`.
fn coefficients(roots: &[(C64, i32)]) -> Vec<C64> {
    let mut c = vec![C64::new(1.0, 0.0)];
    for &(loc, m) in roots {
        for _ in 0..m {
            let mut next = vec![C64::new(0.0, 0.0); c.len() + 1];
            for (k, &ck) in c.iter().enumerate() {
                next[k + 1] += ck;
                next[k] -= ck * loc;
            }
            c = next;
        }
    }
    c
}

/// `-(1/Gamma(n)) (d/dz)^n ln p(z0)` from the Taylor coefficients of `p` at `z0`.
///
/// With `L = p'/p`, Leibniz on `p' = p L` gives
/// `L^{(k)} = (p^{(k+1)} - sum_{j<k} C(k,j) p^{(k-j)} L^{(j)}) / p`.
pub fn symbolic_derivative_side(roots: &[(C64, i32)], z0: C64, n: usize) -> C64 {
    let c = coefficients(roots);
    let deg = c.len() - 1;
    // p^{(k)}(z0)
    let mut pd = vec![C64::new(0.0, 0.0); n + 2];
    for (k, slot) in pd.iter_mut().enumerate() {
        // Horner on sum_{m>=k} c_m m!/(m-k)! z0^{m-k}
        let mut acc = C64::new(0.0, 0.0);
        for m in (k..=deg).rev() {
            let falling: f64 = (0..k).map(|i| (m - i) as f64).product();
            acc = acc * z0 + c[m] * falling;
        }
        *slot = acc;
    }
    let binom = |k: usize, j: usize| -> f64 { (0..j).map(|i| (k - i) as f64 / (i + 1) as f64).product() };
    let mut l = Vec::with_capacity(n);
    for k in 0..n {
        let mut num = pd[k + 1];
        for (j, lj) in l.iter().enumerate() {
            num -= binom(k, j) * pd[k - j] * *lj;
        }
        l.push(num / pd[0]);
    }
    let gamma_n: f64 = (1..n).map(|i| i as f64).product();
    -l[n - 1] / gamma_n
}

/// Primality by trial division.
pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}
