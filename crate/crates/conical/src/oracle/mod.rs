//! Extended-precision reference values, used by the self-test and the test
//! suites. Production evaluation never calls into this module.
//!
//! * `hypergeometric_reference`: the ₂F₁ definition summed in double-double.
//! * `pfaff_reference`: for x > 1, the Pfaff-transformed series summed in
//!   complex fixed point with as many bits as the cancellation requires.
//! * `closed_form_x0`: the gamma-function value at x = 0.
//! * `kia_reference`: K_{ia}(x) by a fine trapezoidal rule in double-double.

mod bessel;
mod bigfix;
mod closed;
mod series;

pub use bessel::kia_reference;
pub use bigfix::pfaff_reference;
pub use closed::{closed_form_x0, ln_abs_gamma_sq};
pub use series::hypergeometric_reference;

use crate::dd::DoubleDouble;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleValue {
    pub value: DoubleDouble,
    pub terms_used: usize,
    pub converged: bool,
}

impl OracleValue {
    pub fn to_f64(self) -> f64 {
        self.value.to_f64()
    }
}

/// Picks the applicable reference for (x, m, τ): closed form at x = 0, the
/// direct series for x < 1, the Pfaff series for x > 1.
pub fn reference(x: f64, m: u32, tau: f64) -> OracleValue {
    if x == 0.0 {
        closed_form_x0(m, tau)
    } else if x <= 1.0 {
        hypergeometric_reference(x, m, tau)
    } else {
        pfaff_reference(x, m, tau)
    }
}

/// C_m(τ)/m! in double-double.
pub(crate) fn cm_over_factorial(m: u32, tau: f64) -> DoubleDouble {
    let t2 = DoubleDouble::from_prod(tau, tau);
    let mut acc = DoubleDouble::ONE;
    for k in 0..m {
        let h = f64::from(k) + 0.5;
        acc = acc * (DoubleDouble::from_prod(h, h) + t2) / f64::from(k + 1);
    }
    acc
}

/// r^{m/2} for r ≥ 0 in double-double.
pub(crate) fn pow_half(r: DoubleDouble, m: u32) -> DoubleDouble {
    let mut v = r.powi(m / 2);
    if m % 2 == 1 {
        v *= r.sqrt();
    }
    v
}
