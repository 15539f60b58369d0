use conical::oracle::{closed_form_x0, reference};
use conical::recurrence::{
    recurse_backward, recurse_forward, residual_one_step, step_above_one, step_backward,
    step_unit_interval, RecurrencePair,
};
use conical::scaled::Scaled;
use proptest::prelude::*;

fn oracle(x: f64, m: u32, tau: f64) -> Scaled {
    Scaled::from_f64(reference(x, m, tau).to_f64())
}

#[test]
fn oracle_triples_satisfy_recurrence() {
    for &(x, m, tau) in &[
        (0.5, 5, 7.0),
        (0.9, 12, 3.0),
        (-0.5, 3, 2.0),
        (1.5, 5, 5.0),
        (3.0, 20, 5.0),
        (10.0, 30, 30.0),
    ] {
        let r = residual_one_step(
            x,
            tau,
            m,
            oracle(x, m - 1, tau),
            oracle(x, m, tau),
            oracle(x, m + 1, tau),
        );
        assert!(r < 1e-14, "({x},{m},{tau}): {r}");
    }
}

#[test]
fn zero_argument() {
    // at x = 0 the middle coefficient vanishes: P^{m+1}(0) = ((m−½)²+τ²)P^{m−1}(0)
    let tau = 3.5;
    for m in 1..10 {
        let lo = closed_form_x0(m - 1, tau).to_f64();
        let hi = closed_form_x0(m + 1, tau).to_f64();
        let b = (f64::from(m) - 0.5).powi(2) + tau * tau;
        assert!((hi - b * lo).abs() < 1e-14 * hi.abs());
        let pair = RecurrencePair {
            m,
            value_m_minus_1: Scaled::from_f64(lo),
            value_m: Scaled::from_f64(closed_form_x0(m, tau).to_f64()),
        };
        let next = step_unit_interval(0.0, tau, pair).to_f64();
        assert!((next - hi).abs() < 1e-14 * hi.abs());
    }
}

#[test]
fn forward_steps_match_oracle() {
    let (x, tau) = (2.0, 1.0);
    let pair = RecurrencePair {
        m: 1,
        value_m_minus_1: oracle(x, 0, tau),
        value_m: oracle(x, 1, tau),
    };
    let v = step_above_one(x, tau, pair).to_f64();
    let r = reference(x, 2, tau).to_f64();
    assert!((v - r).abs() < 1e-14 * r.abs());
    let v = recurse_forward(-0.9, 10.0, oracle(-0.9, 0, 10.0), oracle(-0.9, 1, 10.0), 3).to_f64();
    let r = reference(-0.9, 3, 10.0).to_f64();
    assert!((v - r).abs() < 1e-13 * r.abs());
}

#[test]
fn backward_from_large_orders() {
    let (x, tau) = (0.3, 20.0);
    let v = recurse_backward(x, tau, oracle(x, 21, tau), oracle(x, 20, tau), 20, 7).to_f64();
    let r = reference(x, 7, tau).to_f64();
    assert!((v - r).abs() < 1e-13 * r.abs());
    let (x, tau) = (1.5, 10.0);
    let v = recurse_backward(x, tau, oracle(x, 31, tau), oracle(x, 30, tau), 30, 2).to_f64();
    let r = reference(x, 2, tau).to_f64();
    assert!((v - r).abs() < 1e-12 * r.abs());
}

proptest! {
    #[test]
    fn forward_then_backward_round_trip(
        x in prop_oneof![-0.99f64..0.99, 1.01f64..50.0],
        m in 1u32..30,
        tau in 0.0f64..=100.0,
        a in -1.0f64..1.0,
        b in -1.0f64..1.0,
    ) {
        prop_assume!(a.abs() > 1e-3 && b.abs() > 1e-3);
        let p0 = Scaled::from_f64(a);
        let p1 = Scaled::from_f64(b);
        let pair = RecurrencePair { m, value_m_minus_1: p0, value_m: p1 };
        let p2 = if x < 1.0 { step_unit_interval(x, tau, pair) } else { step_above_one(x, tau, pair) };
        let back = step_backward(x, tau, m, p1, p2);
        let rel = back.add(p0.neg()).ratio_abs(p0);
        let big = p2.ratio_abs(p0).max(p1.ratio_abs(p0)).max(1.0);
        prop_assert!(rel <= 8.0 * f64::EPSILON * big, "rel {rel}, growth {big}");
        prop_assert!(residual_one_step(x, tau, m, p0, p1, p2) <= 4.0 * f64::EPSILON);
    }
}
