//! Stationary-phase expansion for x = cosh b > 1 and large τ, m ∈ {0, 1}:
//!
//!   P ≈ √(2/(π sinh b))·C_m(τ)·Σ_{n=0}^{3} cos χ_n (m+½)_n b_n / τ^{n+m+½},
//!   χ_n = ½(n−m−½)π + bτ.

use crate::dd::DoubleDouble;
use crate::elementary::Expansion;
use crate::error::ConicalError;
use crate::scaled::{cm_scaled, pochhammer_half};
use std::f64::consts::{FRAC_PI_2, PI};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LargeTauShape {
    /// arccosh x.
    pub beta_arg: f64,
    pub sinh_beta: f64,
    pub chi_n: [f64; 4],
    /// cos χ_n, obtained from cos χ_0 and sin χ_0 by quarter turns.
    pub cos_chi: [f64; 4],
    pub b: [f64; 4],
}

/// b_0..b_3 with sinh b = √(x²−1).
pub fn bn_coefficients(m: u32, x: f64) -> [f64; 4] {
    let mf = f64::from(m);
    let sb = ((x - 1.0) * (x + 1.0)).sqrt();
    let c = 2.0 * mf - 1.0;
    [
        1.0,
        c * x / (4.0 * sb),
        c * (-8.0 + (6.0 * mf - 1.0) * x * x) / (96.0 * sb * sb),
        c * x * ((4.0 * mf * mf - 1.0) * x * x + 16.0 - 16.0 * mf) / (384.0 * sb * sb * sb),
    ]
}

pub fn large_tau_shape(x: f64, m: u32, tau: f64) -> Result<LargeTauShape, ConicalError> {
    if !(x > 1.0) {
        return Err(ConicalError::Domain(format!("x = {x} must exceed 1")));
    }
    if m > 1 {
        return Err(ConicalError::Domain(format!(
            "large-tau form is for m in {{0, 1}}, got {m}"
        )));
    }
    let sinh_beta = ((x - 1.0) * (x + 1.0)).sqrt();
    let beta_arg = (x + sinh_beta).ln();
    let base = DoubleDouble::from_prod(beta_arg, tau) - (0.5 * (f64::from(m) + 0.5)) * PI;
    let (s, c) = base.sin_cos();
    let (s, c) = (s.to_f64(), c.to_f64());
    let b0 = base.to_f64();
    Ok(LargeTauShape {
        beta_arg,
        sinh_beta,
        chi_n: [b0, b0 + FRAC_PI_2, b0 + PI, b0 + 1.5 * PI],
        cos_chi: [c, -s, -c, s],
        b: bn_coefficients(m, x),
    })
}

/// The four-term sum without any accuracy gate.
pub fn large_tau_series(x: f64, m: u32, tau: f64) -> Result<Expansion, ConicalError> {
    if !(tau > 0.0) {
        return Err(ConicalError::Domain("large-tau form needs tau > 0".into()));
    }
    let sh = large_tau_shape(x, m, tau)?;
    let mut sum = 0.0;
    let mut last = 0.0;
    for n in 0..4 {
        last = sh.cos_chi[n] * pochhammer_half(m, n as u32) * sh.b[n] / tau.powi(n as i32);
        sum += last;
    }
    let scale = (2.0 / (PI * sh.sinh_beta)).sqrt() / tau.powf(f64::from(m) + 0.5);
    Ok(Expansion {
        value: cm_scaled(m, tau).mul_f64(scale * sum),
        estimate: (last / sum).abs(),
    })
}

/// Largest accepted ratio of the n = 3 term to the sum.
pub const LARGE_TAU_GATE: f64 = 1e-12;

/// As [`large_tau_series`], but refuses results whose last term is above
/// [`LARGE_TAU_GATE`] relative to the sum.
pub fn eval_large_tau(x: f64, m: u32, tau: f64) -> Result<Expansion, ConicalError> {
    let e = large_tau_series(x, m, tau)?;
    if e.estimate > LARGE_TAU_GATE {
        return Err(ConicalError::Accuracy {
            estimate: e.estimate,
        });
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficients_at_two() {
        let b = bn_coefficients(0, 2.0);
        assert_eq!(b[0], 1.0);
        assert!((b[1] + 1.0 / (2.0 * 3f64.sqrt())).abs() < 1e-15);
        assert!((b[2] - 12.0 / 288.0).abs() < 1e-15);
    }

    #[test]
    fn quarter_turn_phases() {
        let s = large_tau_shape(3.0, 1, 77.0).unwrap();
        assert_eq!(s.cos_chi[2], -s.cos_chi[0]);
        assert_eq!(s.cos_chi[3], -s.cos_chi[1]);
        assert!((s.beta_arg.cosh() - 3.0).abs() < 4.0 * f64::EPSILON * 3.0);
    }
}
