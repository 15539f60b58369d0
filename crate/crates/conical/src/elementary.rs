//! Large-m expansions in elementary functions: one for 0 < x < 1 and one
//! for the oscillatory zone x > x_c = √(1+β²)/β, both in powers of 1/m.

use crate::dd::DoubleDouble;
use crate::error::ConicalError;
use crate::scaled::{exp_dd, gamma_half_plus, one_minus_x2_pow_half, pi_times, Scaled};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

/// Result of a truncated expansion: the value and |last term|/|sum|.
#[derive(Clone, Copy, Debug)]
pub struct Expansion {
    pub value: Scaled,
    pub estimate: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitShape {
    pub beta: f64,
    pub p: f64,
    pub phi_t0: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OscShape {
    pub beta: f64,
    pub x_c: f64,
    pub xi: f64,
    pub q: f64,
    pub chi: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UCoeffs {
    pub u0: f64,
    pub u1: f64,
    pub u2: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VWCoeffs {
    pub v0: f64,
    pub v1: f64,
    pub v2: f64,
    pub w0: f64,
    pub w1: f64,
    pub w2: f64,
}

/// √(1+β²(1−x²)) with 1−x² formed as (1−x)(1+x).
fn root_q(x: f64, beta: f64) -> f64 {
    (1.0 + beta * beta * (1.0 - x) * (1.0 + x)).sqrt()
}

/// Angle whose cosine is (1−pβ²)·√(1+β²(1−x²))/(1+β²), clamped.
fn theta0_unit(x: f64, beta: f64, p: f64) -> f64 {
    let c = root_q(x, beta) * (1.0 - p * beta * beta) / (1.0 + beta * beta);
    c.clamp(-1.0, 1.0).acos()
}

pub fn unit_shape(x: f64, m: u32, tau: f64) -> Result<UnitShape, ConicalError> {
    if !(x > 0.0 && x <= 1.0) {
        return Err(ConicalError::Domain(format!("x = {x} not in (0, 1]")));
    }
    if m == 0 {
        return Err(ConicalError::Domain("expansion needs m >= 1".into()));
    }
    let beta = tau / f64::from(m);
    let q = root_q(x, beta);
    let p = x / q;
    // x(p+1)/(p(β²+1)) = q(1+p)/(1+β²)
    let phi_t0 = (q * (1.0 + p) / (1.0 + beta * beta)).ln() + beta * theta0_unit(x, beta, p);
    Ok(UnitShape { beta, p, phi_t0 })
}

pub fn u_coefficients(beta: f64, p: f64) -> UCoeffs {
    let b2 = beta * beta;
    let b4 = b2 * b2;
    let p2 = p * p;
    let p3 = p2 * p;
    let u1 = -(-b2 + 5.0 * b2 * p3 - 3.0 * b2 * p + 3.0 * p) / (24.0 * (b2 + 1.0));
    let u2 = (385.0 * b4 * p3 * p3 + 462.0 * b2 * (1.0 - b2) * p2 * p2 - 10.0 * b4 * p3
        + (81.0 * b4 - 522.0 * b2 + 81.0) * p2
        + 6.0 * b2 * (b2 - 1.0) * p
        + b4
        + 72.0 * b2
        - 72.0)
        / (1152.0 * (b2 + 1.0) * (b2 + 1.0));
    UCoeffs { u0: 1.0, u1, u2 }
}

/// Large-m expansion for 0 < x < 1, truncated after u₂/m².
pub fn eval_large_m_unit(x: f64, m: u32, tau: f64) -> Result<Expansion, ConicalError> {
    if !(x > 0.0 && x < 1.0) {
        return Err(ConicalError::Domain(format!("x = {x} not in (0, 1)")));
    }
    let sh = unit_shape(x, m, tau)?;
    let mf = f64::from(m);
    let u = u_coefficients(sh.beta, sh.p);
    let t1 = u.u1 / mf;
    let t2 = u.u2 / (mf * mf);
    let sum = u.u0 + t1 + t2;

    // e^{−mφ(t₀)} = (q(1+p)/(1+β²))^{−m}·e^{−τθ₀}, paired with cosh(πτ)
    let q = root_q(x, sh.beta);
    let base = Scaled::from_f64(q * (1.0 + sh.p) / (1.0 + sh.beta * sh.beta));
    let theta0 = theta0_unit(x, sh.beta, sh.p);
    let pt = pi_times(tau);
    let th = DoubleDouble::from_prod(tau, theta0);
    let hyper = exp_dd(pt - th).add(exp_dd(-pt - th)).mul_f64(0.5);
    let value = gamma_half_plus(m)
        .mul(one_minus_x2_pow_half(x, m))
        .mul(hyper)
        .div(base.powi(m))
        .mul_f64((sh.p / (x * mf)).sqrt() / PI * sum);
    Ok(Expansion {
        value,
        estimate: (t2 / sum).abs(),
    })
}

pub fn osc_shape(x: f64, m: u32, tau: f64) -> Result<OscShape, ConicalError> {
    if m == 0 || tau <= 0.0 {
        return Err(ConicalError::Domain(
            "oscillatory expansion needs m >= 1, tau > 0".into(),
        ));
    }
    let mf = f64::from(m);
    let beta = tau / mf;
    let x_c = (1.0 + beta * beta).sqrt() / beta;
    if !(x > x_c) {
        return Err(ConicalError::Domain(format!(
            "x = {x} not above x_c = {x_c}"
        )));
    }
    let xi = (x / x_c).acosh();
    let q = xi.cosh() / (beta * xi.sinh());
    let chi = mf * (beta * xi - (1.0 / q).atan()) - FRAC_PI_4;
    Ok(OscShape {
        beta,
        x_c,
        xi,
        q,
        chi,
    })
}

pub fn vw_coefficients(beta: f64, q: f64) -> VWCoeffs {
    let b2 = beta * beta;
    let b4 = b2 * b2;
    let q2 = q * q;
    let q4 = q2 * q2;
    let d1 = 24.0 * (1.0 + b2);
    let d2 = (1.0 + b2) * (1.0 + b2);
    let g = q * (5.0 * b2 * q2 + 3.0 * b2 - 3.0);
    VWCoeffs {
        v0: 1.0,
        v1: b2 / d1,
        v2: -(385.0 * b4 * q4 * q2
            + 462.0 * b2 * (b2 - 1.0) * q4
            + (81.0 * b4 - 522.0 * b2 + 81.0) * q2
            - b4
            - 72.0 * b2
            + 72.0)
            / (1152.0 * d2),
        w0: 0.0,
        w1: -g / d1,
        w2: b2 * g / (576.0 * d2),
    }
}

/// cosh(πτ)·e^{−τ(π/2 + arctan β)}, shared with the Bessel-type form.
pub(crate) fn cosh_times_decay(tau: f64, beta: f64) -> Scaled {
    let pt = pi_times(tau);
    let d = DoubleDouble::from_prod(tau, FRAC_PI_2 + beta.atan());
    exp_dd(pt - d).add(exp_dd(-pt - d)).mul_f64(0.5)
}

/// (1+β²)^{m/2}.
pub(crate) fn one_plus_b2_pow_half(beta: f64, m: u32) -> Scaled {
    let base = Scaled::from_f64(1.0 + beta * beta);
    let mut r = base.powi(m / 2);
    if m % 2 == 1 {
        r = r.mul(base.sqrt());
    }
    r
}

/// Oscillatory expansion in elementary functions for x > x_c, to k = 2.
pub fn eval_elementary_oscillatory(x: f64, m: u32, tau: f64) -> Result<Expansion, ConicalError> {
    let sh = osc_shape(x, m, tau)?;
    let mf = f64::from(m);
    let c = vw_coefficients(sh.beta, sh.q);
    let sv = c.v0 + c.v1 / mf + c.v2 / (mf * mf);
    let sw = c.w0 + c.w1 / mf + c.w2 / (mf * mf);
    let (s, co) = sh.chi.sin_cos();
    let sum = co * sv - s * sw;
    let last = (co * c.v2 - s * c.w2) / (mf * mf);
    let value = one_plus_b2_pow_half(sh.beta, m)
        .mul(gamma_half_plus(m))
        .mul(cosh_times_decay(tau, sh.beta))
        .mul_f64(2.0 * (sh.q / (mf * x)).sqrt() / PI * sum);
    Ok(Expansion {
        value,
        estimate: (last / sum).abs(),
    })
}
