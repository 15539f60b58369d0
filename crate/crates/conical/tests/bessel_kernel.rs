// reference digits are kept as printed by the generator
#![allow(clippy::excessive_precision)]

use conical::bessel::{k0_k1, kia_ode_residual, kia_scaled};
use conical::oracle::kia_reference;
use proptest::prelude::*;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

// e^{πa/2} K_{ia}(x) and its x-derivative, 40-digit mpmath values
const PINS: &[(f64, f64, f64, f64)] = &[
    (0.0, 2.0, 0.1138938727495334357, -0.1398658818165224273),
    (1.0, 1.0, 1.392287025530737437, -1.565616870974773631),
    (5.0, 5.0, 0.8206810813618309495, -0.4741818949120946257),
    (30.0, 10.0, 0.1152019178915065089, -1.292000367499737020),
    (50.0, 80.0, 3.35717068953992135e-9, -2.654573638987872476e-9),
    (100.0, 100.0, 0.3027451018494417740, -0.06051556290460007463),
];

#[test]
fn pinned_values() {
    for &(a, x, k, kp) in PINS {
        let p = kia_scaled(a, x).unwrap();
        assert!(rel(p.ktilde, k) < 1e-12, "K({a},{x}) = {}", p.ktilde);
        assert!(
            rel(p.ktilde_prime, kp) < 1e-12,
            "K'({a},{x}) = {}",
            p.ktilde_prime
        );
    }
}

#[test]
fn reference_matches_pins() {
    for &(a, x, k, kp) in PINS {
        let (r, rp) = kia_reference(a, x);
        assert!(rel(r.to_f64(), k) < 1e-15, "ref K({a},{x})");
        assert!(rel(rp.to_f64(), kp) < 1e-15, "ref K'({a},{x})");
    }
}

#[test]
fn classical_order_zero() {
    let (k0, k1) = k0_k1(1.0);
    assert!(rel(k0, 0.4210244382407083333) < 4e-16);
    assert!(rel(k1, 0.6019072301972345747) < 4e-16);
}

#[test]
fn ode_residual_examples() {
    assert!(kia_ode_residual(0.0, 2.0, 1e-3).unwrap() < 1e-6);
    assert!(kia_ode_residual(5.0, 5.0, 1e-3).unwrap() < 1e-6);
}

#[test]
fn rejects_outside_domain() {
    assert!(kia_scaled(1.0, 0.0).is_err());
    assert!(kia_scaled(-1.0, 1.0).is_err());
    assert!(kia_scaled(200.0, 1.0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn positive_beyond_turning_point(a in 0.0f64..=100.0, f in 1.0f64..4.0) {
        let x = (a * f).max(1e-3);
        let p = kia_scaled(a, x).unwrap();
        prop_assert!(p.ktilde > 0.0);
        prop_assert!(p.ktilde_prime < 0.0);
    }

    #[test]
    fn agrees_with_reference(a in 0.0f64..=100.0, x in 0.5f64..=150.0) {
        let p = kia_scaled(a, x).unwrap();
        let (r, rp) = kia_reference(a, x);
        // absolute against the local envelope; K_{ia} has zeros for x < a
        let env = r.to_f64().abs().max(rp.to_f64().abs() * x / a.max(x));
        prop_assert!((p.ktilde - r.to_f64()).abs() <= 1e-11 * env.max(1e-300) + 1e-300);
    }

    #[test]
    fn ode_is_satisfied(a in 0.0f64..=100.0, x in 0.5f64..=150.0) {
        let r = kia_ode_residual(a, x, 1e-4 * x).unwrap();
        prop_assert!(r <= 1e-6, "residual {r}");
    }
}
