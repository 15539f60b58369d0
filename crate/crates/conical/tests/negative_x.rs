// reference digits are kept as printed by the generator
#![allow(clippy::excessive_precision)]

use conical::negative_x::{
    eval_integral_negative_x, eval_mehler_dirichlet_m0, neg_x_shape, psi_functions,
};
use conical::oracle::hypergeometric_reference;
use proptest::prelude::*;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

#[test]
fn psi_real_part_pin() {
    let (r, _) = psi_functions(1.0, -0.3779644730092272272, 1.0);
    assert!(rel(r, 0.9150547660543331086) < 1e-14);
}

#[test]
fn psi_vanishes_at_saddle() {
    let (r, i) = psi_functions(0.8, -0.4, 0.0);
    assert_eq!((r, i), (0.0, 0.0));
}

#[test]
fn shape_identities() {
    let s = neg_x_shape(-0.5, 2, 2.0).unwrap();
    assert!(s.p < 0.0);
    assert!((s.one_plus_p - (1.0 + s.p)).abs() < 1e-15);
    let b2 = s.beta * s.beta;
    let a = -0.5 * (s.p + 1.0) / (s.p * (1.0 + b2));
    assert!(rel(s.a, a) < 1e-14);
    assert!((s.phi_t0 - (s.a.ln() + s.beta * s.theta0)).abs() < 1e-15);
    assert!(neg_x_shape(0.5, 2, 2.0).is_err());
    assert!(neg_x_shape(-0.5, 0, 2.0).is_err());
}

#[test]
fn integral_examples() {
    for &(x, m, tau) in &[
        (-0.5, 1, 1.0),
        (-0.9, 3, 10.0),
        (-0.3, 15, 25.0),
        (-0.95, 40, 100.0),
    ] {
        let v = eval_integral_negative_x(x, m, tau).unwrap().to_f64();
        let r = hypergeometric_reference(x, m, tau).to_f64();
        assert!(rel(v, r) < 1e-13, "({x},{m},{tau}): {}", rel(v, r));
    }
}

#[test]
fn mehler_dirichlet_examples() {
    for &(x, tau) in &[(-0.7, 5.0), (-0.5, 0.0), (-0.99, 30.0), (-1e-3, 100.0)] {
        let v = eval_mehler_dirichlet_m0(x, tau).unwrap().to_f64();
        let r = hypergeometric_reference(x, 0, tau).to_f64();
        // m = 0 oscillates in τ; judge against the size of the cosh factor
        let env = (std::f64::consts::PI * tau).cosh().max(1.0) * 1e-14;
        assert!((v - r).abs() <= env.max(1e-13 * r.abs()), "({x},{tau})");
    }
}

proptest! {
    #[test]
    fn psi_imaginary_has_no_jumps(beta in 0.0f64..=100.0, p in -0.999f64..-1e-3) {
        let mut prev = psi_functions(beta, p, 0.0).1;
        for k in 1..=400 {
            let s = f64::from(k) * 0.05;
            let cur = psi_functions(beta, p, s).1;
            // |dψ_i/ds| ≤ β + β(1+p)cosh s/(1+p) stays well under π/0.05
            prop_assert!((cur - prev).abs() < 0.05 * (2.0 * beta + 2.0) + 1e-12,
                "jump at s = {s}: {prev} -> {cur}");
            prev = cur;
        }
    }

    #[test]
    fn psi_real_is_nonnegative(beta in 0.0f64..=100.0, p in -0.999f64..-1e-3, s in -20.0f64..20.0) {
        prop_assert!(psi_functions(beta, p, s).0 >= 0.0);
    }
}
