//! Non-oscillatory integrals for −1 < x < 0.
//!
//! For m ≥ 1 the integral is taken along the horizontal line through the
//! saddle t₀ = iθ₀ of φ(t) = ln(x + cosh t) − iβt, β = τ/m, written with
//! s = Re t − 0 and σ = sinh(s/2). For m = 0 the Mehler–Dirichlet integral
//! over (0, θ), θ = arccos x, is used instead.

use crate::dd::DoubleDouble;
use crate::error::ConicalError;
use crate::quad::{trapezoid_halving, trapezoid_interval};
use crate::scaled::{cosh_pi_tau, exp_dd, gamma_half_plus, one_minus_x2_pow_half, Scaled};
use std::f64::consts::PI;

#[derive(Clone, Copy, Debug)]
pub struct NegXShape {
    pub beta: f64,
    /// x/√(1+β²(1−x²)), negative for x < 0.
    pub p: f64,
    /// 1 + p, formed without cancellation.
    pub one_plus_p: f64,
    /// x + cos θ₀ = x(p+1)/(p(1+β²)).
    pub a: f64,
    /// θ₀ = arccos(x(1−pβ²)/(p(1+β²))).
    pub theta0: f64,
    /// φ(t₀) = ln a + βθ₀.
    pub phi_t0: f64,
    /// Γ(½+m)(1−x²)^{m/2}·2cosh(πτ)/(π√(2π))·e^{−mφ(t₀)}·a^{−½}.
    pub prefactor: Scaled,
}

pub fn neg_x_shape(x: f64, m: u32, tau: f64) -> Result<NegXShape, ConicalError> {
    if !(x > -1.0 && x < 0.0) {
        return Err(ConicalError::Domain(format!("x = {x} not in (-1, 0)")));
    }
    if m == 0 {
        return Err(ConicalError::Domain("m = 0 has no saddle form".into()));
    }
    let beta = tau / f64::from(m);
    let b2 = beta * beta;
    let omx2 = (1.0 - x) * (1.0 + x);
    let q = (1.0 + b2 * omx2).sqrt();
    let p = x / q;
    let one_plus_p = omx2 * (1.0 + b2) / ((q - x) * q);
    let a = omx2 / (q - x);
    let cos_t0 = q * (1.0 - p * b2) / (1.0 + b2);
    let theta0 = (beta * a).atan2(cos_t0);
    let phi_t0 = a.ln() + beta * theta0;

    let pow_a = Scaled::from_f64(a)
        .powi(m)
        .mul(Scaled::from_f64(a.sqrt()))
        .recip();
    let e = exp_dd(-DoubleDouble::from_prod(tau, theta0));
    let prefactor = gamma_half_plus(m)
        .mul(one_minus_x2_pow_half(x, m))
        .mul(cosh_pi_tau(tau))
        .mul(pow_a)
        .mul(e)
        .mul_f64(2.0 / (PI * (2.0 * PI).sqrt()));
    Ok(NegXShape {
        beta,
        p,
        one_plus_p,
        a,
        theta0,
        phi_t0,
        prefactor,
    })
}

/// ψ_r and ψ_i along the line, with φ(t₀+s) − φ(t₀) = ψ_r(s) + iψ_i(s).
pub fn psi_functions(beta: f64, p: f64, s: f64) -> (f64, f64) {
    psi_with(beta, p, 1.0 + p, s)
}

fn psi_with(beta: f64, p: f64, one_plus_p: f64, s: f64) -> (f64, f64) {
    let b2 = beta * beta;
    let sg = (0.5 * s).sinh();
    let sg2 = sg * sg;
    let c1 = 4.0 * (1.0 + b2) / one_plus_p;
    let c2 = 4.0 * (1.0 + b2) * (1.0 + p * p * b2) / (one_plus_p * one_plus_p);
    let psi_r = 0.5 * (sg2 * (c1 + c2 * sg2)).ln_1p();
    // the denominator stays positive for p < 0, so no branch tracking is needed
    let psi_i =
        (beta * one_plus_p * s.sinh()).atan2(one_plus_p + 2.0 * (1.0 - p * b2) * sg2) - beta * s;
    (psi_r, psi_i)
}

/// P^m_{−½+iτ}(x) for −1 < x < 0 and m ≥ 1.
pub fn eval_integral_negative_x(x: f64, m: u32, tau: f64) -> Result<Scaled, ConicalError> {
    let sh = neg_x_shape(x, m, tau)?;
    let mu = f64::from(m) + 0.5;
    let (beta, p, opp) = (sh.beta, sh.p, sh.one_plus_p);
    let integrand = |s: f64| -> [f64; 1] {
        let (pr, pi) = psi_with(beta, p, opp, s);
        [(-mu * pr).exp() * (mu * pi + 0.5 * beta * s).cos()]
    };
    // ψ_r grows like s for large s
    let mut smax = 1.0;
    while mu * psi_with(beta, p, opp, smax).0 < 45.0 {
        smax *= 1.25;
    }
    // distance from the path to the nearest singularity of (x+cosh t)^{−½−m};
    // s = c·sinh r spreads the nodes near it when x is close to −1
    let vsing = (-x).acos();
    let d = (vsing - sh.theta0).min(vsing + sh.theta0);
    let c = d.min(1.0);
    let g = |r: f64| -> [f64; 1] {
        let [v] = integrand(c * r.sinh());
        [v * c * r.cosh()]
    };
    let t = trapezoid_halving(g, (smax / c).asinh(), 0.25, 5e-15, 22)?;
    Ok(sh.prefactor.mul_f64(t.value[0]))
}

/// P_{−½+iτ}(x) for −1 < x < 0 from the Mehler–Dirichlet integral
/// (2/π)∫_0^θ cosh(τt)/√(2(cos t − cos θ)) dt.
pub fn eval_mehler_dirichlet_m0(x: f64, tau: f64) -> Result<Scaled, ConicalError> {
    if !(x > -1.0 && x < 0.0) {
        return Err(ConicalError::Domain(format!("x = {x} not in (-1, 0)")));
    }
    // θ in double-double: e^{τθ} is sensitive to its last bits when τ is large
    let xd = DoubleDouble::from_f64(x);
    let sin_th = ((DoubleDouble::ONE - xd) * (DoubleDouble::ONE + xd)).sqrt();
    let theta_dd = DoubleDouble::atan2(sin_th, xd);
    let theta = theta_dd.to_f64();
    let vs = (-x).acos();
    // t = θ − w; cos t − cos θ = 2 sin(θ − w/2) sin(w/2), and θ − w/2 = π − (vs + w/2)
    let g = |w: f64, w_c: f64| -> f64 {
        let den = 4.0 * (vs + 0.5 * w).sin() * (0.5 * w).sin();
        0.5 * ((-tau * w).exp() + (-tau * (theta + w_c)).exp()) / den.sqrt()
    };
    // w = θ/(1 + e^{−π sinh r}) maps (−∞, ∞) onto (0, θ)
    let f = |r: f64| -> f64 {
        let e = (-PI * r.sinh()).exp();
        if !e.is_finite() {
            return 0.0;
        }
        let w = theta / (1.0 + e);
        let w_c = theta * e / (1.0 + e);
        let jac = theta * PI * r.cosh() * e / ((1.0 + e) * (1.0 + e));
        if jac == 0.0 || w == 0.0 {
            return 0.0;
        }
        g(w, w_c) * jac
    };
    let t = trapezoid_interval(f, -4.0, 4.0, 16, 5e-15, 24)?;
    let scale = exp_dd(theta_dd.mul_f64(tau));
    Ok(scale.mul_f64(t.value[0] * 2.0 / PI))
}
