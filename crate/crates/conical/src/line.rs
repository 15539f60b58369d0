//! Conical functions from the integral
//!
//!   P^m(x) = Γ(½+m)|1−x²|^{m/2} cosh(πτ) / (π√(2π)) · ∫ (x+cosh t)^{−m−½} e^{iτt} dt
//!
//! over the real line, shifted to the horizontal line Im t = v through a
//! saddle point of the integrand. On that line the oscillation is mostly
//! removed and the trapezoidal rule converges geometrically.

use crate::dd::DoubleDouble;
use crate::error::ConicalError;
use crate::quad::trapezoid_halving;
use crate::scaled::{cosh_pi_tau, gamma_half_plus, one_minus_x2_pow_half, Scaled};
use std::f64::consts::{FRAC_PI_2, PI};

/// Height of the nearest singularity of (x+cosh t)^{−s} above the real axis.
pub fn singular_height(x: f64) -> f64 {
    if x >= 1.0 {
        PI
    } else {
        (-x).acos()
    }
}

/// Im t of the saddle point used for the integration line.
pub fn saddle_height(x: f64, m: u32, tau: f64) -> f64 {
    if tau == 0.0 {
        return 0.0;
    }
    let s = f64::from(m) + 0.5;
    let d = s * s + tau * tau * (1.0 - x * x);
    let shift = (tau / s).atan();
    if d >= 0.0 {
        let r = d.sqrt();
        let v1 = (tau * x).atan2(r) + shift;
        let v2 = (tau * x).atan2(-r) + shift;
        let wrap = |v: f64| if v > PI { v - 2.0 * PI } else { v };
        let (v1, v2) = (wrap(v1), wrap(v2));
        match (v1 > 0.0, v2 > 0.0) {
            (true, true) => v1.min(v2),
            (true, false) => v1,
            (false, true) => v2,
            _ => 0.0,
        }
    } else {
        FRAC_PI_2 + shift
    }
}

#[derive(Clone, Copy, Debug)]
pub struct LineQuadrature {
    pub value: Scaled,
    /// Height of the integration line.
    pub v: f64,
    pub nodes: usize,
    /// Σ|integrand| / |integral|.
    pub cancellation: f64,
}

/// Evaluates P^m_{−½+iτ}(x) for x > −1, x ≠ 1.
pub fn eval_saddle_line(x: f64, m: u32, tau: f64) -> Result<LineQuadrature, ConicalError> {
    if !(x > -1.0) || x == 1.0 || !x.is_finite() {
        return Err(ConicalError::Domain(format!("x = {x}")));
    }
    if !(tau >= 0.0) || !tau.is_finite() {
        return Err(ConicalError::Domain(format!("tau = {tau}")));
    }
    let s = f64::from(m) + 0.5;
    let vsing = singular_height(x);
    let mut v = saddle_height(x, m, tau).min(0.98 * vsing);
    // Round τv to a dyadic grid so that e^{−τv} is evaluated at exactly the
    // height used in the phase terms.
    let c = if tau > 0.0 {
        let c = (tau * v * 1048576.0).round() / 1048576.0;
        v = c / tau;
        c
    } else {
        0.0
    };
    let (sv, cv) = v.sin_cos();
    // x + cos v without cancellation: the line may pass close to the zero
    // of x + cosh t
    let a0 = if x > 1.0 {
        (x - 1.0) + 2.0 * (0.5 * v).cos().powi(2)
    } else {
        2.0 * (0.5 * (vsing - v)).sin() * (0.5 * (vsing + v)).sin()
    };
    let z = |u: f64| -> (f64, f64) {
        let sh2 = (0.5 * u).sinh();
        (a0 + 2.0 * sh2 * sh2 * cv, u.sinh() * sv)
    };

    // scan for the peak of |integrand| and the truncation point
    let step = (vsing - v).min(v + vsing).min(1.0) / 16.0;
    let step = step.min(1.0 / 32.0);
    let mut u = 0.0;
    let mut best = (0.0, f64::INFINITY);
    let mut umax = 0.0;
    loop {
        let (re, im) = z(u);
        let l = 0.5 * (re * re + im * im).ln();
        if l < best.1 {
            best = (u, l);
        }
        if u > best.0 && s * (l - best.1) > 41.0 {
            umax = u;
            break;
        }
        u += step;
        if u > 700.0 {
            break;
        }
    }
    let ur = best.0;
    let (zr_re, zr_im) = z(ur);
    let zr_abs = zr_re.hypot(zr_im);

    let dist = (vsing - v).min(v + vsing);
    let h0 = (dist / 4.0).min(0.5);
    let integrand = |u: f64| -> [f64; 1] {
        let (re, im) = z(u);
        let r = re.hypot(im) / zr_abs;
        let arg = im.atan2(re);
        let ph = tau * u - s * arg;
        [(-s * r.ln()).exp() * ph.cos()]
    };
    let t = trapezoid_halving(integrand, umax, h0, 2e-15, 22)?;

    // prefactor Γ(½+m)|1−x²|^{m/2}cosh(πτ)/(π√(2π)) · 2|z_r|^{−s} e^{−c}
    let zr_pow = Scaled::from_f64(zr_abs)
        .powi(m)
        .mul(Scaled::from_f64(zr_abs.sqrt()))
        .recip();
    let ec = if c == 0.0 {
        Scaled::ONE
    } else {
        Scaled::exp_of(-c)
    };
    let pre = gamma_half_plus(m)
        .mul(one_minus_x2_pow_half(x, m))
        .mul(cosh_pi_tau(tau))
        .mul(zr_pow)
        .mul(ec)
        .mul_f64(2.0 / (PI * (2.0 * PI).sqrt()));
    let pre = pre.mul(Scaled::from_f64(1.0 + inv_pi_sqrt2pi_correction()));
    let value = pre.mul_f64(t.value[0]);
    Ok(LineQuadrature {
        value,
        v,
        nodes: t.nodes,
        cancellation: t.abs_sum[0] / t.value[0].abs(),
    })
}

/// Relative correction to the binary64 value of 2/(π√(2π)).
fn inv_pi_sqrt2pi_correction() -> f64 {
    let exact =
        DoubleDouble::from_f64(2.0) / (DoubleDouble::PI * (DoubleDouble::PI.ldexp(1)).sqrt());
    let approx = 2.0 / (PI * (2.0 * PI).sqrt());
    ((exact - approx) / exact).to_f64()
}
