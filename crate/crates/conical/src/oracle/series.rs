use super::{cm_over_factorial, pow_half, OracleValue};
use crate::dd::DoubleDouble;

/// C_m(τ)/m!·|(1−x)/(1+x)|^{m/2}·₂F₁(½−iτ, ½+iτ; 1+m; (1−x)/2) in double-double.
///
/// The series term ratio is ((k+½)²+τ²)z/((k+1+m)(k+1)), real. For x < 1
/// every term is positive. For 1 < x < 3 the terms alternate, and the value
/// is flagged as not converged once the largest term exceeds the sum by more
/// than 1e6.
pub fn hypergeometric_reference(x: f64, m: u32, tau: f64) -> OracleValue {
    assert!(x > -1.0 && x < 3.0, "series reference needs -1 < x < 3");
    let one = DoubleDouble::ONE;
    let xd = DoubleDouble::from_f64(x);
    let z = DoubleDouble::from_sum(1.0, -x).ldexp(-1);
    let t2 = DoubleDouble::from_prod(tau, tau);
    let mf = f64::from(m);

    let mut term = one;
    let mut sum = one;
    let mut big = 1.0f64;
    let mut small_run = 0;
    let mut k = 0usize;
    let limit = 200_000;
    while k < limit {
        let kh = k as f64 + 0.5;
        let num = DoubleDouble::from_prod(kh, kh) + t2;
        let den = (k as f64 + 1.0 + mf) * (k as f64 + 1.0);
        term = term * num * z / den;
        sum += term;
        k += 1;
        big = big.max(term.hi.abs());
        if term.hi.abs() < 1e-26 * sum.hi.abs() {
            small_run += 1;
            if small_run >= 3 {
                break;
            }
        } else {
            small_run = 0;
        }
        if term.is_zero() {
            small_run = 3;
            break;
        }
    }
    let converged = small_run >= 3 && big <= 1e6 * sum.hi.abs();
    let value = if m == 0 {
        sum
    } else {
        let r = ((one - xd) / (one + xd)).abs();
        cm_over_factorial(m, tau) * pow_half(r, m) * sum
    };
    OracleValue {
        value,
        terms_used: k,
        converged,
    }
}
