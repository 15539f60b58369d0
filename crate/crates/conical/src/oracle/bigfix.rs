//! Reference values for x > 1 from the Pfaff transformation
//!
//!   ₂F₁(a, b; c; z) = (1−z)^{−a} ₂F₁(a, c−b; c; z/(z−1)),
//!
//! which maps z = (1−x)/2 < 0 to z' = (x−1)/(x+1) ∈ (0, 1). The new series
//! has complex terms whose size can exceed the sum by 25 orders of
//! magnitude, so it is summed in fixed point on big integers, with the
//! number of fraction bits chosen from the observed cancellation.

use super::{cm_over_factorial, pow_half, OracleValue};
use crate::dd::DoubleDouble;
use crate::scaled::ldexp;
use num_bigint::BigInt;
use num_traits::float::FloatCore;
use num_traits::{Signed, ToPrimitive, Zero};

fn f64_to_fixed(v: f64, bits: u32) -> BigInt {
    let (mant, exp, sign) = FloatCore::integer_decode(v);
    let mut r = BigInt::from(mant);
    let sh = i64::from(exp) + i64::from(bits);
    if sh >= 0 {
        r <<= sh as usize;
    } else {
        r >>= (-sh) as usize;
    }
    if sign < 0 {
        -r
    } else {
        r
    }
}

/// Rational p/q of a binary64 value.
fn f64_ratio(v: f64) -> (BigInt, BigInt) {
    let (mant, exp, sign) = FloatCore::integer_decode(v);
    let mut num = BigInt::from(mant);
    if sign < 0 {
        num = -num;
    }
    if exp >= 0 {
        (num << exp as usize, BigInt::from(1))
    } else {
        (num, BigInt::from(1) << (-exp) as usize)
    }
}

fn fixed_to_dd(v: &BigInt, bits: u32) -> DoubleDouble {
    if v.is_zero() {
        return DoubleDouble::ZERO;
    }
    let nb = v.bits() as i64;
    let shift = (nb - 120).max(0);
    let top = (v >> shift as usize).to_i128().expect("fits in 120 bits");
    let hi = top as f64;
    let lo = (top - hi as i128) as f64;
    let e = shift - i64::from(bits);
    DoubleDouble::new(ldexp(hi, e), ldexp(lo, e))
}

struct SeriesSum {
    re: BigInt,
    im: BigInt,
    terms: usize,
    loss_bits: i64,
    converged: bool,
}

/// Σ_k (a)_k (c−b)_k z'^k / ((c)_k k!) with a = ½−iτ, c−b = ½+m−iτ, c = 1+m.
fn pfaff_series(x: f64, m: u32, tau: f64, bits: u32) -> SeriesSum {
    let n = bits as usize;
    let one = BigInt::from(1) << n;
    // z' = (x−1)/(x+1), exactly rounded from the rational value of x
    let (p, q) = f64_ratio(x);
    let zf = ((&p - &q) << n) / (&p + &q);
    let tf = f64_to_fixed(tau, bits);
    let t2 = (&tf * &tf) >> n;
    let mb = BigInt::from(m);

    let mut tr = one.clone();
    let mut ti = BigInt::zero();
    let mut sr = one.clone();
    let mut si = BigInt::zero();
    let mut max_bits = one.bits() as i64;
    let mut small_run = 0;
    let mut k: u64 = 0;
    let limit = 2_000_000u64;
    while k < limit {
        let kb = BigInt::from(k);
        // A = (½+k)(½+m+k) − τ²,  B = τ(1+m+2k),  D = (1+m+k)(k+1)
        let a =
            ((BigInt::from(2 * k + 1) * (BigInt::from(2 * k + 1) + 2 * &mb)) << n >> 2usize) - &t2;
        let b = &tf * (BigInt::from(1 + 2 * k) + &mb);
        let d = (&kb + 1u32 + &mb) * (&kb + 1u32);
        let nr = (&tr * &a + &ti * &b) >> n;
        let ni = (&ti * &a - &tr * &b) >> n;
        tr = ((nr * &zf) >> n) / &d;
        ti = ((ni * &zf) >> n) / &d;
        sr += &tr;
        si += &ti;
        k += 1;
        let tb = tr.abs().max(ti.abs()).bits() as i64;
        max_bits = max_bits.max(tb);
        let sb = sr.abs().max(si.abs()).bits() as i64;
        if tb + 100 < sb || (tr.is_zero() && ti.is_zero()) {
            small_run += 1;
            if small_run >= 3 {
                break;
            }
        } else {
            small_run = 0;
        }
    }
    let sb = sr.abs().max(si.abs()).bits() as i64;
    SeriesSum {
        re: sr,
        im: si,
        terms: k as usize,
        loss_bits: max_bits - sb,
        converged: small_run >= 3,
    }
}

/// Reference P^m_{−½+iτ}(x) for x > 1.
pub fn pfaff_reference(x: f64, m: u32, tau: f64) -> OracleValue {
    assert!(x > 1.0, "Pfaff reference needs x > 1");
    let mut bits = 224u32;
    let mut s = pfaff_series(x, m, tau, bits);
    if s.loss_bits + 150 > i64::from(bits) {
        bits = (s.loss_bits + 200) as u32;
        s = pfaff_series(x, m, tau, bits);
    }
    let fr = fixed_to_dd(&s.re, bits);
    let fi = fixed_to_dd(&s.im, bits);

    // (1−z)^{−a} = ((1+x)/2)^{−½} e^{iτ ln((1+x)/2)}
    let hx = DoubleDouble::from_sum(1.0, x).ldexp(-1);
    let phase = hx.ln().mul_f64(tau);
    let (sn, cs) = phase.sin_cos();
    let re = cs * fr - sn * fi;
    let zd = DoubleDouble::from_sum(x, -1.0) / DoubleDouble::from_sum(x, 1.0);
    let value = cm_over_factorial(m, tau) * pow_half(zd, m) * re / hx.sqrt();
    OracleValue {
        value,
        terms_used: s.terms,
        converged: s.converged && s.loss_bits + 120 <= i64::from(bits),
    }
}
