//! Scaled modified Bessel functions of imaginary order,
//! K̃(a, x) = e^{πa/2} K_{ia}(x) and its x-derivative, from
//!
//!   K_{ia}(x) = ½ ∫ e^{−x cosh t + iat} dt
//!
//! along a horizontal line Im t = v. The integrand is entire, so any
//! 0 ≤ v < π/2 gives the same value; v is put at (or near) the saddle where
//! the oscillation is weakest.

use crate::error::ConicalError;
use crate::quad::trapezoid_halving;
use std::f64::consts::{FRAC_PI_2, PI};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BesselMethod {
    Series,
    SaddleQuadrature,
    AiryAsymptotic,
    ClassicalK0,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BesselPair {
    pub ktilde: f64,
    pub ktilde_prime: f64,
    pub method: BesselMethod,
}

pub const A_MAX: f64 = 110.0;
pub const X_MAX: f64 = 1e4;

/// Height of the integration line for order a and argument x.
pub fn line_height(a: f64, x: f64) -> f64 {
    if a == 0.0 {
        return 0.0;
    }
    let cap = FRAC_PI_2 - 1.0 / a.max(1.0);
    if a < x {
        (a / x).asin().min(cap).max(0.0)
    } else {
        cap.max(0.0)
    }
}

/// K̃(a, x) and K̃′(a, x).
pub fn kia_scaled(a: f64, x: f64) -> Result<BesselPair, ConicalError> {
    if !(x > 0.0 && x <= X_MAX) {
        return Err(ConicalError::Domain(format!("x = {x} outside (0, 1e4]")));
    }
    if !(0.0..=A_MAX).contains(&a) {
        return Err(ConicalError::Domain(format!("a = {a} outside [0, 110]")));
    }
    if a == 0.0 {
        let (k0, k1) = k0_k1(x);
        return Ok(BesselPair {
            ktilde: k0,
            ktilde_prime: -k1,
            method: BesselMethod::ClassicalK0,
        });
    }
    let (ktilde, ktilde_prime) = kia_line(a, x, line_height(a, x))?;
    Ok(BesselPair {
        ktilde,
        ktilde_prime,
        method: BesselMethod::SaddleQuadrature,
    })
}

/// Trapezoidal rule for e^{πa/2}·Re ∫_0^∞ (1, −cosh t)·e^{−x cosh t + iat} du, t = u + iv.
pub(crate) fn kia_line(a: f64, x: f64, v: f64) -> Result<(f64, f64), ConicalError> {
    let (sv, cv) = v.sin_cos();
    // magnitude relative to u = 0 is exp(−x cos v (cosh u − 1))
    let xc = x * cv;
    let umax = if xc > 0.0 {
        (1.0 + 46.0 / xc).acosh()
    } else {
        700.0
    };
    let l0 = -xc + a * (FRAC_PI_2 - v);
    let fmax = (a - x * umax.cosh() * sv).abs().max(a).max(1.0);
    let h0 = (1.0 / fmax).min(0.5);
    let f = |u: f64| -> [f64; 2] {
        let sh2 = (0.5 * u).sinh();
        let mag = (-2.0 * xc * sh2 * sh2).exp();
        let ph = a * u - x * u.sinh() * sv;
        let (s, c) = ph.sin_cos();
        let (chr, chi) = (u.cosh() * cv, u.sinh() * sv);
        [mag * c, -mag * (chr * c - chi * s)]
    };
    let t = trapezoid_halving(f, umax, h0, 1e-15, 24)?;
    let e = l0.exp();
    Ok((e * t.value[0], e * t.value[1]))
}

/// K_0(x), K_1(x) by the power series (x ≤ 2) or Steed's continued
/// fraction (x > 2).
pub fn k0_k1(x: f64) -> (f64, f64) {
    if x <= 2.0 {
        k0_k1_series(x)
    } else {
        k0_k1_steed(x)
    }
}

fn k0_k1_series(x: f64) -> (f64, f64) {
    const EULER: f64 = 0.577_215_664_901_532_9;
    let y = 0.25 * x * x;
    let l = (0.5 * x).ln() + EULER;
    // K0 = −l·I0 + Σ H_k y^k/(k!)²
    // K1 = 1/x + x·[½l·Σ T_k − ¼Σ (H_k + H_{k+1}) T_k],  T_k = y^k/(k!(k+1)!)
    let mut term = 1.0;
    let mut i0 = 1.0;
    let mut hk = 0.0;
    let mut s0 = 0.0;
    let mut i1s = 0.5;
    let mut s1 = 0.25;
    let mut k = 0.0;
    loop {
        k += 1.0;
        term *= y / (k * k);
        hk += 1.0 / k;
        i0 += term;
        s0 += term * hk;
        let t1 = term / (k + 1.0);
        i1s += 0.5 * t1;
        s1 += 0.25 * t1 * (2.0 * hk + 1.0 / (k + 1.0));
        if term < 1e-18 * i0 {
            break;
        }
    }
    let k0 = -l * i0 + s0;
    let k1 = 1.0 / x + x * (l * i1s - s1);
    (k0, k1)
}

// Steed's method for K_0 and K_1 (order μ = 0)
fn k0_k1_steed(x: f64) -> (f64, f64) {
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut h = d;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25;
    let mut q = a1;
    let mut c = a1;
    let mut aa = -a1;
    let mut s = 1.0 + q * delh;
    for i in 1..100_000 {
        let fi = f64::from(i);
        aa -= 2.0 * fi;
        c = -aa * c / (fi + 1.0);
        let qnew = (q1 - b * q2) / aa;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + aa * d);
        delh *= b * d - 1.0;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < 1e-17 {
            break;
        }
    }
    h *= a1;
    let k0 = (PI / (2.0 * x)).sqrt() * (-x).exp() / s;
    let k1 = k0 * (x + 0.5 - h) / x;
    (k0, k1)
}

/// |x²y″ + xy′ + (a²−x²)y| / (scale·(a²+x²)) with y = K̃(a,·), y″ from central
/// differences of K̃ (five points, step h) and y′ from the pair. The scale is |y|, or
/// the local envelope |y′|x/√(a²+x²) when that is larger (near a zero of y).
pub fn kia_ode_residual(a: f64, x: f64, h: f64) -> Result<f64, ConicalError> {
    let c = kia_scaled(a, x)?;
    let y = c.ktilde;
    let k = |d: f64| kia_scaled(a, x + d).map(|p| p.ktilde);
    let ypp =
        (-k(2.0 * h)? + 16.0 * k(h)? - 30.0 * y + 16.0 * k(-h)? - k(-2.0 * h)?) / (12.0 * h * h);
    let r = x * x * ypp + x * c.ktilde_prime + (a * a - x * x) * y;
    let scale = y
        .abs()
        .max(c.ktilde_prime.abs() * x / (a * a + x * x).sqrt());
    Ok(r.abs() / (scale * (a * a + x * x)))
}
