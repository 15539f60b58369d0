//! Three-term recurrences in the order m:
//!
//!   |x| < 1:  P^{m+1} + 2mx/√(1−x²)·P^m − ((m−½)²+τ²)·P^{m−1} = 0
//!   x > 1:    P^{m+1} − 2mx/√(x²−1)·P^m + ((m−½)²+τ²)·P^{m−1} = 0
//!
//! Values are carried as [`Scaled`] so that nothing overflows; each step
//! renormalizes the mantissa.

use crate::dd::DoubleDouble;
use crate::scaled::Scaled;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RecurrencePair {
    pub m: u32,
    pub value_m_minus_1: Scaled,
    pub value_m: Scaled,
}

/// Coefficients (a_m, b_m, sign) with the recurrence written as
/// P^{m+1} = sign·(b_m P^{m−1} − a_m P^m).
fn coefficients(x: f64, tau: f64, m: u32) -> (f64, f64, f64) {
    let mf = f64::from(m);
    let h = mf - 0.5;
    let b = (DoubleDouble::from_prod(h, h) + DoubleDouble::from_prod(tau, tau)).to_f64();
    let r = ((1.0 - x) * (1.0 + x)).abs().sqrt();
    let a = 2.0 * mf * x / r;
    if x < 1.0 {
        (a, b, 1.0)
    } else {
        (a, b, -1.0)
    }
}

fn combine(a: Scaled, ca: f64, b: Scaled, cb: f64) -> Scaled {
    a.mul_f64(ca).add(b.mul_f64(cb))
}

/// One forward step for |x| < 1.
pub fn step_unit_interval(x: f64, tau: f64, pair: RecurrencePair) -> Scaled {
    assert!(x.abs() < 1.0, "step_unit_interval needs |x| < 1");
    let (a, b, _) = coefficients(x, tau, pair.m);
    combine(pair.value_m_minus_1, b, pair.value_m, -a)
}

/// One forward step for x > 1.
pub fn step_above_one(x: f64, tau: f64, pair: RecurrencePair) -> Scaled {
    assert!(x > 1.0, "step_above_one needs x > 1");
    let (a, b, _) = coefficients(x, tau, pair.m);
    combine(pair.value_m, a, pair.value_m_minus_1, -b)
}

fn step(x: f64, tau: f64, pair: RecurrencePair) -> Scaled {
    if x < 1.0 {
        step_unit_interval(x, tau, pair)
    } else {
        step_above_one(x, tau, pair)
    }
}

/// Forward recursion from P^0, P^1 up to P^{m_target}.
pub fn recurse_forward(x: f64, tau: f64, p0: Scaled, p1: Scaled, m_target: u32) -> Scaled {
    match m_target {
        0 => p0,
        1 => p1,
        _ => {
            let mut pair = RecurrencePair {
                m: 1,
                value_m_minus_1: p0,
                value_m: p1,
            };
            while pair.m < m_target {
                let next = step(x, tau, pair);
                pair = RecurrencePair {
                    m: pair.m + 1,
                    value_m_minus_1: pair.value_m,
                    value_m: next,
                };
            }
            pair.value_m
        }
    }
}

/// Solves the recurrence for P^{m−1} given P^m and P^{m+1}.
pub fn step_backward(x: f64, tau: f64, m: u32, p_m: Scaled, p_m_plus_1: Scaled) -> Scaled {
    let (a, b, _) = coefficients(x, tau, m);
    if x < 1.0 {
        // b P^{m−1} = P^{m+1} + a P^m
        combine(p_m_plus_1, 1.0 / b, p_m, a / b)
    } else {
        // b P^{m−1} = a P^m − P^{m+1}
        combine(p_m, a / b, p_m_plus_1, -1.0 / b)
    }
}

/// Backward recursion from P^{M+1}, P^M down to P^{m_target}.
pub fn recurse_backward(
    x: f64,
    tau: f64,
    p_big_plus_1: Scaled,
    p_big: Scaled,
    big_m: u32,
    m_target: u32,
) -> Scaled {
    assert!(
        m_target <= big_m,
        "backward recursion target above the seeds"
    );
    let mut hi = p_big_plus_1;
    let mut lo = p_big;
    let mut m = big_m;
    while m > m_target {
        let next = step_backward(x, tau, m, lo, hi);
        hi = lo;
        lo = next;
        m -= 1;
    }
    lo
}

/// |recurrence combination| divided by the largest of its three terms.
pub fn residual_one_step(
    x: f64,
    tau: f64,
    m: u32,
    p_m_minus_1: Scaled,
    p_m: Scaled,
    p_m_plus_1: Scaled,
) -> f64 {
    let (a, b, sign) = coefficients(x, tau, m);
    let t1 = p_m_plus_1;
    let t2 = p_m.mul_f64(sign * a);
    let t3 = p_m_minus_1.mul_f64(-sign * b);
    let big = [t1, t2, t3]
        .into_iter()
        .max_by(|u, v| u.cmp_abs(*v))
        .unwrap();
    if big.is_zero() {
        return 0.0;
    }
    t1.add(t2).add(t3).ratio_abs(big)
}
