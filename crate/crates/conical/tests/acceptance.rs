//! Acceptance suite. Each criterion prints one PASS/FAIL line; the process
//! exits non-zero when any criterion fails.

use conical::bessel::{kia_ode_residual, kia_scaled};
use conical::bessel_type::transition_point;
use conical::dispatch::{conic, conic_with, RegionTag};
use conical::oracle::{closed_form_x0, hypergeometric_reference, kia_reference, pfaff_reference};
use conical::recurrence::residual_one_step;
use conical::scaled::{LN_MAX, LN_MIN};
use conical::selftest;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::time::{Duration, Instant};

struct Outcome {
    pass: bool,
    detail: String,
}

fn rel(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        (a - b).abs() / b.abs()
    }
}

fn x_c(m: u32, tau: f64) -> f64 {
    if m == 0 {
        1.0
    } else {
        transition_point(tau / f64::from(m))
    }
}

/// Relative error, or near a zero of `f` (a sign change within 1e-8
/// relative distance) the absolute error over the largest |f| seen a
/// quarter oscillation to either side.
fn zero_aware_error(
    f: &dyn Fn(f64) -> f64,
    x: f64,
    tau: f64,
    computed: f64,
    reference: f64,
) -> f64 {
    let lo = f(x * (1.0 - 1e-8));
    let hi = f(x * (1.0 + 1e-8));
    if lo.signum() == hi.signum() && reference != 0.0 {
        return rel(computed, reference);
    }
    let omega = tau.max(1.0) / ((x - 1.0) * (x + 1.0)).abs().sqrt();
    let q = std::f64::consts::FRAC_PI_2 / omega;
    let env = [x - q, x + q]
        .into_iter()
        .filter(|&t| t > 1.0)
        .map(|t| f(t).abs())
        .fold(reference.abs(), f64::max);
    (computed - reference).abs() / env
}

fn criterion_1() -> Outcome {
    let xs = [-0.9, -0.5, -0.1, 0.1, 0.3, 0.5, 0.7, 0.9];
    let ms = [0u32, 1, 2, 5, 10, 20];
    let taus = [0.0, 0.5, 1.0, 5.0, 10.0, 30.0];
    let start = Instant::now();
    let (mut worst_neg, mut worst_pos) = (0.0f64, 0.0f64);
    let mut fails = Vec::new();
    for &x in &xs {
        for &m in &ms {
            for &t in &taus {
                let o = hypergeometric_reference(x, m, t);
                let r = conic(x, m as i32, t);
                let e = if o.converged && r.ierr == 0 {
                    rel(r.value, o.to_f64())
                } else {
                    f64::INFINITY
                };
                let tol = if x < 0.0 { 5e-13 } else { 5e-12 };
                if x < 0.0 {
                    worst_neg = worst_neg.max(e);
                } else {
                    worst_pos = worst_pos.max(e);
                }
                if e > tol {
                    fails.push(format!("({x}, {m}, {t}): {e:.2e}"));
                }
            }
        }
    }
    let el = start.elapsed();
    Outcome {
        pass: fails.is_empty() && el <= Duration::from_secs(60),
        detail: format!(
            "max rel x<0 {worst_neg:.2e} (tol 5e-13), x>0 {worst_pos:.2e} (tol 5e-12), {:.2?}{}",
            el,
            list(&fails)
        ),
    }
}

fn criterion_2() -> Outcome {
    let xs = [1.1, 1.5, 2.0, 3.0, 5.0];
    let ms = [0u32, 1, 2, 5, 10, 20];
    let taus = [0.5, 1.0, 5.0, 10.0, 30.0];
    let (mut worst_mono, mut worst_osc) = (0.0f64, 0.0f64);
    let mut fails = Vec::new();
    for &x in &xs {
        for &m in &ms {
            for &t in &taus {
                let o = pfaff_reference(x, m, t);
                let r = conic(x, m as i32, t);
                let f = |y: f64| pfaff_reference(y, m, t).to_f64();
                let e = if o.converged && r.ierr == 0 {
                    zero_aware_error(&f, x, t, r.value, o.to_f64())
                } else {
                    f64::INFINITY
                };
                let mono = x <= x_c(m, t);
                let tol = if mono { 5e-12 } else { 1e-10 };
                if mono {
                    worst_mono = worst_mono.max(e);
                } else {
                    worst_osc = worst_osc.max(e);
                }
                if e > tol {
                    fails.push(format!("({x}, {m}, {t}): {e:.2e}"));
                }
            }
        }
    }
    Outcome {
        pass: fails.is_empty(),
        detail: format!(
            "max rel x<=x_c {worst_mono:.2e} (tol 5e-12), x>x_c {worst_osc:.2e} (tol 1e-10){}",
            list(&fails)
        ),
    }
}

fn criterion_3() -> Outcome {
    let mut rng = StdRng::seed_from_u64(20_240_601);
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut fails = Vec::new();
    for i in 0..1000 {
        let (x, m) = if i % 2 == 0 {
            (rng.random_range(-1.0..1.0), rng.random_range(1..=39))
        } else {
            (rng.random_range(1.0..100.0), rng.random_range(1..=99))
        };
        if x == -1.0 || x == 1.0 {
            continue;
        }
        let t = rng.random_range(0.0..=100.0);
        let v: Vec<_> = (m - 1..=m + 1).map(|k| conic(x, k, t)).collect();
        let res = if v.iter().any(|r| r.ierr == 2) {
            f64::INFINITY
        } else {
            residual_one_step(x, t, m as u32, v[0].scaled, v[1].scaled, v[2].scaled)
        };
        worst = worst.max(res);
        if res > 5e-12 {
            fails.push(format!("({x}, {m}, {t}): {res:.2e}"));
        }
    }
    let el = start.elapsed();
    Outcome {
        pass: fails.is_empty() && el <= Duration::from_secs(120),
        detail: format!(
            "1000 points, max residual {worst:.2e} (tol 5e-12), {el:.2?}{}",
            list(&fails)
        ),
    }
}

fn forced(x: f64, m: i32, t: f64, tag: RegionTag) -> f64 {
    match conic_with(x, m, t, tag) {
        Ok(r) if r.ierr == 0 => r.value,
        _ => f64::NAN,
    }
}

fn overlap(a: f64, b: f64, x: f64, m: i32, t: f64) -> f64 {
    let f = |y: f64| conic(y, m, t).value;
    let e = zero_aware_error(&f, x, t, a, b);
    if e.is_nan() {
        f64::INFINITY
    } else {
        e
    }
}

fn criterion_4a() -> Outcome {
    let mut worst = 0.0f64;
    let mut fails = Vec::new();
    for t in [50.0, 60.0, 80.0, 100.0] {
        for x in [1.5, 2.0, 5.0] {
            for m in 0..=5 {
                let a = forced(x, m, t, RegionTag::LargeTauForward);
                let b = forced(x, m, t, RegionTag::BesselOscillatory);
                let e = overlap(a, b, x, m, t);
                worst = worst.max(e);
                if e > 1e-10 {
                    fails.push(format!("({x}, {m}, {t}): {e:.2e}"));
                }
            }
        }
    }
    Outcome {
        pass: fails.is_empty(),
        detail: format!(
            "large-tau vs Bessel-type chain, max {worst:.2e} (tol 1e-10){}",
            list(&fails)
        ),
    }
}

fn criterion_4b() -> Outcome {
    let mut worst = 0.0f64;
    let mut fails = Vec::new();
    for m in [20i32, 50, 100] {
        for beta in [0.5, 1.0] {
            let t = beta * f64::from(m);
            if t > 100.0 {
                continue;
            }
            for s in [0.95, 1.05] {
                let x = 2.0 * transition_point(beta) * s;
                let a = forced(x, m, t, RegionTag::BesselOscillatory);
                let b = forced(x, m, t, RegionTag::ElementaryOscillatory);
                let e = overlap(a, b, x, m, t);
                worst = worst.max(e);
                if e > 1e-10 {
                    fails.push(format!("({x:.4}, {m}, {t}): {e:.2e}"));
                }
            }
        }
    }
    Outcome {
        pass: fails.is_empty(),
        detail: format!(
            "Bessel-type vs elementary at 2x_c(1±0.05), max {worst:.2e} (tol 1e-10){}",
            list(&fails)
        ),
    }
}

fn criterion_4c() -> Outcome {
    let mut rng = StdRng::seed_from_u64(7);
    let mut lines = Vec::new();
    let mut pass = true;
    let mut seam = |name: &str, f: &mut dyn FnMut(&mut StdRng) -> f64| {
        let worst = (0..50).map(|_| f(&mut rng)).fold(0.0f64, f64::max);
        pass &= worst <= 1e-10;
        lines.push(format!("{name} {worst:.2e}"));
    };
    // x = 0: negative-x quadrature | closed form | positive side
    seam("x=0", &mut |r| {
        let m = r.random_range(0..=40);
        let t = r.random_range(0.0..=100.0);
        let c = conic(0.0, m, t).value;
        rel(conic(-1e-13, m, t).value, c).max(rel(conic(1e-13, m, t).value, c))
    });
    // order switch on (0, 1): backward recursion | direct evaluation
    seam("m=20 (0<x<1)", &mut |r| {
        let x = r.random_range(0.0..1.0);
        let t = r.random_range(0.0..=100.0);
        (19..=20)
            .map(|m| {
                let a = forced(x, m, t, RegionTag::UnitBackwardRecursion);
                let b = forced(x, m, t, RegionTag::SaddleLineQuadrature);
                rel(a, b)
            })
            .fold(0.0, f64::max)
    });
    seam("m=20 (x>1)", &mut |r| {
        let x = r.random_range(1.0..100.0);
        let t = r.random_range(0.0..=100.0);
        (19..=20)
            .map(|m| {
                let a = forced(x, m, t, RegionTag::BackwardRecursion);
                let b = forced(x, m, t, RegionTag::SaddleLineQuadrature);
                overlap(a, b, x, m, t)
            })
            .fold(0.0, f64::max)
    });
    // x = 1: both sides approach the same (1−x)^{m/2} behaviour
    seam("x=1", &mut |r| {
        let m = r.random_range(0..=20);
        let t = r.random_range(0.0..=100.0);
        let d = 2f64.powi(-50);
        rel(conic(1.0 - d, m, t).value, conic(1.0 + d, m, t).value)
    });
    Outcome {
        pass,
        detail: format!(
            "50 points per seam, max rel: {} (tol 1e-10)",
            lines.join(", ")
        ),
    }
}

fn criterion_5() -> Outcome {
    let mut rng = StdRng::seed_from_u64(5);
    let mut worst = 0.0f64;
    let mut fails = Vec::new();
    for i in 0..50 {
        let a = if i < 5 {
            0.0
        } else {
            rng.random_range(0.0..=100.0)
        };
        let ratio = rng.random_range(0.2..=5.0);
        let x = if a == 0.0 { ratio } else { ratio * a };
        let p = kia_scaled(a, x);
        let (rk, rkp) = kia_reference(a, x);
        let e = match p {
            Ok(p) => rel(p.ktilde, rk.to_f64()).max(rel(p.ktilde_prime, rkp.to_f64())),
            Err(_) => f64::INFINITY,
        };
        worst = worst.max(e);
        if e > 1e-12 {
            fails.push(format!("(a {a:.4}, x {x:.4}): {e:.2e}"));
        }
    }
    let mut worst_ode = 0.0f64;
    for _ in 0..200 {
        let a = rng.random_range(0.0..=100.0);
        let x = if a < 1.0 {
            rng.random_range(0.2..=5.0)
        } else {
            rng.random_range(0.2..=5.0) * a
        };
        let r = kia_ode_residual(a, x, 1e-4 * x).unwrap_or(f64::INFINITY);
        worst_ode = worst_ode.max(r);
        if r > 1e-6 {
            fails.push(format!("ode (a {a:.4}, x {x:.4}): {r:.2e}"));
        }
    }
    Outcome {
        pass: fails.is_empty(),
        detail: format!(
            "kia_scaled vs reference max rel {worst:.2e} (tol 1e-12), ODE residual max {worst_ode:.2e} (tol 1e-6){}",
            list(&fails)
        ),
    }
}

fn criterion_6() -> Outcome {
    let mut worst = 0.0f64;
    for m in 0..=20u32 {
        for k in 0..=6 {
            let t = 5.0 * f64::from(k);
            let r = conic(0.0, m as i32, t);
            let o = closed_form_x0(m, t);
            let e = if r.ierr == 0 {
                rel(r.value, o.to_f64())
            } else {
                f64::INFINITY
            };
            worst = worst.max(e);
        }
    }
    Outcome {
        pass: worst <= 1e-12,
        detail: format!("max rel {worst:.2e} (tol 1e-12)"),
    }
}

fn criterion_7() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    let mut check = |ok: bool, what: String| {
        if !ok {
            pass = false;
            notes.push(what);
        }
    };
    let normal = conic(0.5, 3, 2.0);
    check(
        normal.ierr == 0 && normal.value.is_finite(),
        "ierr=0 at (0.5, 3, 2)".into(),
    );

    // the largest magnitude in the box, ln|P| ≈ 470.8, stays representable
    let big = conic(2.0, 100, 100.0);
    check(
        big.ierr == 0
            && big.value.is_finite()
            && (big.log_value.lnmag - 470.770_043_186_259).abs() < 1e-9,
        format!(
            "largest magnitude at (2, 100, 100): ierr {} lnmag {}",
            big.ierr, big.log_value.lnmag
        ),
    );
    let under = conic(1.0 + 2f64.powi(-50), 100, 0.0);
    check(
        under.ierr == 1 && under.log_value.lnmag < LN_MIN && under.value == 0.0,
        format!(
            "underflow at (1+2^-50, 100, 0): ierr {} lnmag {}",
            under.ierr, under.log_value.lnmag
        ),
    );

    // ierr = 1 exactly when ln|P| is outside the binary64 range
    let mut rng = StdRng::seed_from_u64(77);
    let mut flagged = 0;
    for _ in 0..300 {
        let x = 1.0 + 10f64.powf(rng.random_range(-15.0..2.0f64)).min(98.9);
        let m = rng.random_range(60..=100);
        let t = rng.random_range(0.0..=100.0);
        let r = conic(x, m, t);
        let outside =
            r.log_value.sign != 0 && (r.log_value.lnmag > LN_MAX || r.log_value.lnmag < LN_MIN);
        flagged += usize::from(r.ierr == 1);
        check(
            r.ierr != 2 && (r.ierr == 1) == outside,
            format!("flag mismatch at ({x}, {m}, {t})"),
        );
    }

    let violations: [(f64, i32, f64); 7] = [
        (-1.0, 0, 1.0),
        (150.0, 1, 1.0),
        (0.5, -1, 1.0),
        (0.5, 41, 10.0),
        (2.0, 101, 1.0),
        (0.5, 2, -0.5),
        (0.5, 2, 100.5),
    ];
    for (x, m, t) in violations {
        let r = conic(x, m, t);
        check(
            r.ierr == 2 && r.value.is_nan(),
            format!("ierr=2 at ({x}, {m}, {t})"),
        );
    }
    Outcome {
        pass,
        detail: format!(
            "normal, largest magnitude, underflow, {flagged}/300 flagged in the consistency sample, 6 box violations{}",
            list(&notes)
        ),
    }
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let r = selftest::run();
    let el = start.elapsed();
    let covered = r.tags_covered().len() == RegionTag::ALL.len();
    Outcome {
        pass: r.passed() && r.cases.len() >= 25 && covered && el <= Duration::from_secs(10),
        detail: format!(
            "{} goldens, {} tags covered, max deviation {:.2e}, max residual {:.2e}, {el:.2?}",
            r.cases.len(),
            r.tags_covered().len(),
            r.max_golden_deviation(),
            r.max_residual()
        ),
    }
}

fn list(fails: &[String]) -> String {
    if fails.is_empty() {
        String::new()
    } else {
        let shown: Vec<_> = fails.iter().take(6).cloned().collect();
        format!("; {} failing: {}", fails.len(), shown.join("; "))
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 oracle grid |x|<1", criterion_1),
        ("2 oracle grid x>1", criterion_2),
        ("3 recurrence residual sweep", criterion_3),
        ("4a large-tau / Bessel-type overlap", criterion_4a),
        ("4b Bessel-type / elementary overlap", criterion_4b),
        ("4c dispatcher seams", criterion_4c),
        ("5 Bessel kernel", criterion_5),
        ("6 x=0 closed form", criterion_6),
        ("7 error-flag contract", criterion_7),
        ("8 self-test", criterion_8),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let o = run();
        println!(
            "criterion {name}: {} {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        failed += usize::from(!o.pass);
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
