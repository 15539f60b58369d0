// reference digits are kept as printed by the generator
#![allow(clippy::excessive_precision)]

use conical::dd::{dd_add, dd_mul, DoubleDouble};
use conical::scaled::{
    gamma_product_cm, log_gamma_half_plus, log_scaled_from_real, pochhammer_half, LogScaled,
};
use proptest::prelude::*;

#[test]
fn log_scaled_examples() {
    assert_eq!(
        log_scaled_from_real(1.0),
        LogScaled {
            sign: 1,
            lnmag: 0.0
        }
    );
    assert_eq!(log_scaled_from_real(0.0).sign, 0);
    let m2 = log_scaled_from_real(-2.0);
    assert_eq!(m2.sign, -1);
    assert_eq!(m2.lnmag, 2f64.ln());
}

#[test]
fn log_gamma_at_small_orders() {
    let ln_sqrt_pi = 0.5 * std::f64::consts::PI.ln();
    assert!((log_gamma_half_plus(0) - 0.572_364_942_924_700_1).abs() < 4.0 * f64::EPSILON);
    assert!((log_gamma_half_plus(1) - (ln_sqrt_pi - 2f64.ln())).abs() < 4.0 * f64::EPSILON);
    // ln Γ(10.5) from the double-double product (1/2)(3/2)...(19/2)√π
    let mut p = DoubleDouble::PI.sqrt();
    for k in 0..10 {
        p = p * (f64::from(k) + 0.5);
    }
    let want = p.ln().to_f64();
    assert!((log_gamma_half_plus(10) - want).abs() <= 4.0 * f64::EPSILON * want);
    assert!((want - 13.940_625_219_403_763).abs() < 1e-14);
}

#[test]
fn gamma_products() {
    assert_eq!(gamma_product_cm(0, 37.0).to_f64(), 1.0);
    assert_eq!(gamma_product_cm(1, 0.0).to_f64(), 0.25);
    assert!((gamma_product_cm(2, 1.0).to_f64() - 4.0625).abs() < 4.0 * f64::EPSILON * 4.0625);
}

#[test]
fn pochhammer_examples() {
    assert_eq!(pochhammer_half(0, 0), 1.0);
    assert_eq!(pochhammer_half(0, 2), 0.75);
    assert_eq!(pochhammer_half(3, 1), 3.5);
}

#[test]
fn double_double_examples() {
    let tiny = 2f64.powi(-60);
    let s = dd_add(DoubleDouble::ONE, DoubleDouble::from_f64(tiny));
    assert_eq!((s.hi, s.lo), (1.0, tiny));
    let x = DoubleDouble::new(3.0, 1e-17);
    assert_eq!(dd_mul(x, DoubleDouble::ONE), x);
    assert!(dd_add(DoubleDouble::ONE, -DoubleDouble::ONE).is_zero());
}

fn dd_rel(a: DoubleDouble, b: DoubleDouble) -> f64 {
    ((a - b).abs() / b.abs()).to_f64()
}

proptest! {
    #[test]
    fn cm_matches_double_double_product(m in 0u32..=50, tau in 0.0f64..=100.0) {
        let t2 = DoubleDouble::from_prod(tau, tau);
        let mut want = DoubleDouble::ONE;
        for k in 0..m {
            let h = f64::from(k) + 0.5;
            want *= DoubleDouble::from_prod(h, h) + t2;
        }
        let got = gamma_product_cm(m, tau);
        let err = (got.lnmag - want.ln().to_f64()).abs();
        prop_assert!(err <= 1e-13 * want.ln().to_f64().abs().max(1.0));
    }

    #[test]
    fn log_scaled_product_is_associative(a in -1e300f64..1e300, b in -1e300f64..1e300, c in -1e300f64..1e300) {
        prop_assume!(a != 0.0 && b != 0.0 && c != 0.0);
        let (a, b, c) = (LogScaled::from_real(a), LogScaled::from_real(b), LogScaled::from_real(c));
        let l = a.mul(b).mul(c);
        let r = a.mul(b.mul(c));
        prop_assert_eq!(l.sign, r.sign);
        let ulp = f64::EPSILON * l.lnmag.abs().max(r.lnmag.abs()).max(f64::MIN_POSITIVE);
        prop_assert!((l.lnmag - r.lnmag).abs() <= 2.0 * ulp);
    }

    #[test]
    fn log_scaled_round_trip(v in -1e300f64..1e300) {
        let back = log_scaled_from_real(v).to_f64();
        let tol = 2.0 * f64::EPSILON * v.abs().ln().abs().max(1.0);
        prop_assert!((back - v).abs() <= tol * v.abs());
    }

    #[test]
    // the sum keeps 106 bits of the larger operand, so b stays within 2^8 of a
    fn dd_sum_recovers_addend(a in -1e10f64..1e10, lo in -1e-7f64..1e-7, e in -40i32..=8) {
        prop_assume!(a.abs() > 1e-10);
        let a = DoubleDouble::new(a, lo * a.abs() * f64::EPSILON);
        let b = DoubleDouble::from_f64(a.hi * 2f64.powi(e) * 1.37);
        let back = dd_add(a, b) - b;
        prop_assert!(dd_rel(back, a) <= 2f64.powi(-95));
    }
}
