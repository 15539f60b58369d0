use crate::dd::DoubleDouble;
use crate::scaled::ldexp;
use std::f64::consts::FRAC_PI_2;

/// Reference (K̃(a,x), K̃′(a,x)) by the trapezoidal rule in double-double on
/// a line Im t = v lower than the one used in production, with step halving
/// until two successive refinements agree to 1e-26 (or to rounding level
/// relative to the sum of absolute values).
pub fn kia_reference(a: f64, x: f64) -> (DoubleDouble, DoubleDouble) {
    assert!(x > 0.0 && a >= 0.0, "kia_reference needs x > 0, a >= 0");
    let v = if a == 0.0 {
        0.0
    } else if a < x {
        0.95 * (a / x).asin().min(FRAC_PI_2 - 2.0 / a.max(1.0)).max(0.0)
    } else {
        (FRAC_PI_2 - 2.0 / a.max(1.0)).max(0.0)
    };
    let vd = DoubleDouble::from_f64(v);
    let (sv, cv) = vd.sin_cos();
    let xd = DoubleDouble::from_f64(x);
    let xc = xd * cv;
    let xs = xd * sv;
    let umax = (1.0 + 64.0 / xc.to_f64()).acosh();
    let fmax = (a - x * umax.cosh() * sv.to_f64()).abs().max(a).max(1.0);
    let half_pi = DoubleDouble::PI.ldexp(-1);
    let l0 = -xc + (half_pi - vd).mul_f64(a);
    let e0 = l0.exp();

    let f = |u: f64| -> (DoubleDouble, DoubleDouble) {
        let ud = DoubleDouble::from_f64(u);
        let eu = ud.exp();
        let emu = eu.recip();
        let ch = (eu + emu).ldexp(-1);
        let sh = (eu - emu).ldexp(-1);
        let sh2 = (ud.ldexp(-1)).exp();
        let sh2 = (sh2 - sh2.recip()).ldexp(-1);
        let mag = (-(xc * sh2.sqr()).ldexp(1)).exp();
        let ph = ud.mul_f64(a) - xs * sh;
        let (s, c) = ph.sin_cos();
        let chr = ch * cv;
        let chi = sh * sv;
        (mag * c, -(mag * (chr * c - chi * s)))
    };

    // a power of two, so that every node k·h is exact
    let mut h = ldexp(1.0, (0.5 / fmax).min(0.25).log2().floor() as i64);
    let mut n = (umax / h).ceil() as usize;
    let (f0, g0) = f(0.0);
    let mut s_f = f0.mul_f64(0.5);
    let mut s_g = g0.mul_f64(0.5);
    let mut abs_f = f0.abs().to_f64() * 0.5;
    let mut abs_g = g0.abs().to_f64() * 0.5;
    for k in 1..=n {
        let (a1, b1) = f(k as f64 * h);
        abs_f += a1.abs().to_f64();
        abs_g += b1.abs().to_f64();
        s_f += a1;
        s_g += b1;
    }
    let mut prev = (s_f.mul_f64(h), s_g.mul_f64(h));
    let mut agreed = 0;
    for _ in 0..16 {
        h *= 0.5;
        for k in 0..n {
            let (a1, b1) = f((2 * k + 1) as f64 * h);
            abs_f += a1.abs().to_f64();
            abs_g += b1.abs().to_f64();
            s_f += a1;
            s_g += b1;
        }
        n *= 2;
        let cur = (s_f.mul_f64(h), s_g.mul_f64(h));
        let df = (cur.0 - prev.0).abs().to_f64();
        let dg = (cur.1 - prev.1).abs().to_f64();
        let scale = cur.0.abs().to_f64().max(cur.1.abs().to_f64() * 1e-3);
        // below 1e-30 of the absolute sums the difference is rounding noise
        let ok_f = df <= 1e-26 * scale || df <= 1e-30 * abs_f * h;
        let ok_g = dg <= 1e-26 * cur.1.abs().to_f64().max(scale) || dg <= 1e-30 * abs_g * h;
        prev = cur;
        if ok_f && ok_g {
            agreed += 1;
            if agreed >= 2 {
                break;
            }
        }
    }
    (prev.0 * e0, prev.1 * e0)
}
