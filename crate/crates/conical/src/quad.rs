//! Trapezoidal rule with step halving on `[0, b]`, for integrands that are
//! analytic on a strip around the path and negligible at `b`.
//!
//! The node at 0 gets half weight, so for integrands with the symmetry
//! `f(-u) = conj f(u)` the real part equals half of the full-line rule.

use crate::error::ConicalError;

#[derive(Clone, Copy, Debug)]
pub struct Trapezoid<const N: usize> {
    pub value: [f64; N],
    /// Σ|f|·h per component, a scale for the rounding floor.
    pub abs_sum: [f64; N],
    pub nodes: usize,
    pub levels: u32,
}

/// Once two successive differences are below this fraction of Σ|f|·h the
/// truncation error, which roughly squares per halving, is far below
/// rounding, and further differences only measure the integrand's noise.
const SETTLED: f64 = 1e-9;

fn pow2_floor(h: f64) -> f64 {
    crate::scaled::ldexp(1.0, h.log2().floor() as i64)
}

/// Applies the rule with initial step `h0` (rounded down to a power of two), halving until two successive
/// sums agree to `rel_tol` (or to the rounding floor given by the sum of
/// absolute values).
pub fn trapezoid_halving<const N: usize, F>(
    f: F,
    b: f64,
    h0: f64,
    rel_tol: f64,
    max_levels: u32,
) -> Result<Trapezoid<N>, ConicalError>
where
    F: Fn(f64) -> [f64; N],
{
    // a power of two keeps every node k·h exact
    let mut h = pow2_floor(h0);
    let n0 = (b / h).ceil().max(2.0) as usize;
    let mut sum = [0.0; N];
    let mut abs = [0.0; N];
    let f0 = f(0.0);
    for j in 0..N {
        sum[j] = 0.5 * f0[j];
        abs[j] = 0.5 * f0[j].abs();
    }
    for k in 1..=n0 {
        let fk = f(k as f64 * h);
        for j in 0..N {
            sum[j] += fk[j];
            abs[j] += fk[j].abs();
        }
    }
    let mut nodes = n0 + 1;
    let mut prev: [f64; N] = std::array::from_fn(|j| sum[j] * h);
    let mut n = n0;
    let mut prev_d = [f64::INFINITY; N];
    for level in 1..=max_levels {
        h *= 0.5;
        for k in 0..n {
            let fk = f((2 * k + 1) as f64 * h);
            for j in 0..N {
                sum[j] += fk[j];
                abs[j] += fk[j].abs();
            }
        }
        nodes += n;
        n *= 2;
        let cur: [f64; N] = std::array::from_fn(|j| sum[j] * h);
        let d: [f64; N] = std::array::from_fn(|j| (cur[j] - prev[j]).abs());
        let done = (0..N).all(|j| {
            let scale = abs[j] * h;
            d[j] <= rel_tol * cur[j].abs()
                || d[j] <= 16.0 * f64::EPSILON * scale
                || (d[j] <= SETTLED * scale && prev_d[j] <= SETTLED * scale)
        });
        if done && level >= 2 {
            return Ok(Trapezoid {
                value: cur,
                abs_sum: std::array::from_fn(|j| abs[j] * h),
                nodes,
                levels: level,
            });
        }
        prev = cur;
        prev_d = d;
    }
    Err(ConicalError::QuadratureNonconvergence { levels: max_levels })
}

/// Trapezoidal rule on `[a, b]` with both end nodes at half weight, for
/// integrands that vanish (to working precision) at both ends, such as a
/// double-exponential change of variable.
pub fn trapezoid_interval<F>(
    f: F,
    a: f64,
    b: f64,
    n0: usize,
    rel_tol: f64,
    max_levels: u32,
) -> Result<Trapezoid<1>, ConicalError>
where
    F: Fn(f64) -> f64,
{
    let mut n = n0.max(2);
    let mut h = (b - a) / n as f64;
    let mut sum = 0.5 * (f(a) + f(b));
    let mut abs = sum.abs();
    for k in 1..n {
        let v = f(a + k as f64 * h);
        sum += v;
        abs += v.abs();
    }
    let mut nodes = n + 1;
    let mut prev = sum * h;
    let mut prev_d = f64::INFINITY;
    for level in 1..=max_levels {
        h *= 0.5;
        for k in 0..n {
            let v = f(a + (2 * k + 1) as f64 * h);
            sum += v;
            abs += v.abs();
        }
        nodes += n;
        n *= 2;
        let cur = sum * h;
        let d = (cur - prev).abs();
        let scale = abs * h;
        let settled = d <= SETTLED * scale && prev_d <= SETTLED * scale;
        if level >= 2 && (d <= rel_tol * cur.abs() || d <= 16.0 * f64::EPSILON * scale || settled) {
            return Ok(Trapezoid {
                value: [cur],
                abs_sum: [abs * h],
                nodes,
                levels: level,
            });
        }
        prev = cur;
        prev_d = d;
    }
    Err(ConicalError::QuadratureNonconvergence { levels: max_levels })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_half_line() {
        let r = trapezoid_halving(|u| [(-u * u).exp()], 7.0, 0.5, 1e-15, 20).unwrap();
        let exact = std::f64::consts::PI.sqrt() / 2.0;
        assert!((r.value[0] - exact).abs() < 1e-15);
    }

    #[test]
    fn interval_rule_on_periodic_like_integrand() {
        // ∫_{-6}^{6} e^{-u²} du with negligible end values
        let r = trapezoid_interval(|u| (-u * u).exp(), -6.0, 6.0, 8, 1e-15, 20).unwrap();
        assert!((r.value[0] - std::f64::consts::PI.sqrt()).abs() < 1e-14);
    }
}
