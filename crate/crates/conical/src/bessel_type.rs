//! Uniform large-m expansion for x > 1 in terms of K_{iτ}(mζ).
//!
//! With β = τ/m the transition point is x_c = √(1+β²)/β. The implicit
//! equations for ζ are solved in the variables W = √(ζ²−β²) (x ≤ x_c) and
//! V = √(β²−ζ²) (x ≥ x_c), where they read
//!
//!   W − β·arctan(W/β)  = artanh(1/p) − β·arctan(1/(βp))
//!   V − β·artanh(V/β)  = arctan(1/q) − β·artanh(1/(βq))
//!
//! and both sides are monotone, so a bracketed Newton iteration always
//! converges.

use crate::bessel::kia_scaled;
use crate::elementary::{cosh_times_decay, one_plus_b2_pow_half, Expansion};
use crate::error::ConicalError;
use crate::scaled::gamma_half_plus;
use std::f64::consts::PI;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZetaRegion {
    Monotonic,
    Oscillatory,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZetaSolve {
    pub zeta: f64,
    /// W in the monotonic region, V in the oscillatory one.
    pub w: f64,
    pub region: ZetaRegion,
    pub residual: f64,
    pub iterations: u32,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BesselShape {
    pub beta: f64,
    pub region: ZetaRegion,
    /// p for x ≤ x_c, q for x > x_c.
    pub pq: f64,
    pub lambda: f64,
    pub phi_zeta: f64,
    /// W or V.
    pub wv: f64,
    pub zeta: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ABCoeffs {
    pub a0: f64,
    pub a1: f64,
    pub b0: f64,
    pub b1: f64,
}

const MAX_ITER: u32 = 50;

/// β·arctan(y/β), continuous at β = 0.
fn b_atan(beta: f64, y: f64) -> f64 {
    if beta == 0.0 {
        0.0
    } else {
        beta * (y / beta).atan()
    }
}

/// Root of an increasing g on [lo, hi] with g(lo) ≤ 0 ≤ g(hi); `noise` is
/// the rounding level of g.
fn safeguarded_newton<G>(
    g: G,
    mut lo: f64,
    mut hi: f64,
    start: f64,
    noise: f64,
) -> Result<(f64, u32), ConicalError>
where
    G: Fn(f64) -> (f64, f64),
{
    let mut y = start.clamp(lo, hi);
    for it in 1..=MAX_ITER {
        let (v, d) = g(y);
        if v.abs() <= noise {
            return Ok((y, it));
        }
        if v < 0.0 {
            lo = y;
        } else {
            hi = y;
        }
        let step = v / d;
        if step.abs() <= 2.0 * f64::EPSILON * y.abs() {
            return Ok((y - step, it));
        }
        let mut next = y - step;
        if !(next > lo && next < hi) || !next.is_finite() {
            next = 0.5 * (lo + hi);
        }
        if hi - lo <= 2.0 * f64::EPSILON * hi {
            return Ok((next, it));
        }
        y = next;
    }
    Err(ConicalError::Nonconvergence {
        iterations: MAX_ITER,
    })
}

/// ζ ≥ β for 1 < x ≤ x_c, from p = x/√(1+β²(1−x²)) > 1.
pub fn solve_zeta_monotonic(beta: f64, p: f64) -> Result<ZetaSolve, ConicalError> {
    if !(p > 1.0) {
        return Err(ConicalError::Domain(format!("p = {p} must exceed 1")));
    }
    let k = 1.0 / p;
    let rhs = k.atanh() - b_atan(beta, k);
    let g = |w: f64| {
        let d = if w == 0.0 {
            0.0
        } else {
            w * w / (beta * beta + w * w)
        };
        (w - b_atan(beta, w) - rhs, d)
    };
    // small rhs: W − β·arctan(W/β) ≈ W³/(3β²)
    let start = if beta > 0.0 {
        (3.0 * beta * beta * rhs).cbrt().min(rhs + 0.5 * PI * beta)
    } else {
        rhs
    };
    let mut hi = start.max(1e-300) * 2.0;
    while g(hi).0 < 0.0 {
        hi *= 2.0;
    }
    let (w, iterations) = if rhs == 0.0 {
        (0.0, 0)
    } else {
        safeguarded_newton(g, 0.0, hi, start, 4.0 * f64::EPSILON * rhs)?
    };
    let zeta = beta.hypot(w);
    // residual of 2[√(ζ²−β²) − β·arccos(β/ζ)] = 2·rhs
    let wz = ((zeta - beta) * (zeta + beta)).sqrt();
    let lhs = 2.0 * (wz - beta * wz.atan2(beta));
    Ok(ZetaSolve {
        zeta,
        w,
        region: ZetaRegion::Monotonic,
        residual: (lhs - 2.0 * rhs).abs(),
        iterations,
    })
}

/// ζ ∈ (0, β] for x ≥ x_c, from q = x/√(β²(x²−1)−1).
pub fn solve_zeta_oscillatory(beta: f64, q: f64) -> Result<ZetaSolve, ConicalError> {
    if !(beta > 0.0 && beta * q > 1.0) {
        return Err(ConicalError::Domain(format!(
            "need beta > 0 and beta*q > 1, got {beta}, {q}"
        )));
    }
    let rhs = (1.0 / q).atan() - beta * (1.0 / (beta * q)).atanh();
    // in u = V/β: h(u) = β(artanh u − u) + rhs is increasing and h(0) = rhs ≤ 0
    let g = |u: f64| {
        let d = beta * u * u / ((1.0 - u) * (1.0 + u));
        (beta * (u.atanh() - u) + rhs, d)
    };
    let mut hi = 0.5;
    while g(hi).0 < 0.0 {
        hi = 0.5 * (1.0 + hi);
        if hi >= 1.0 {
            break;
        }
    }
    let start = ((-3.0 * rhs / beta).cbrt()).min(hi);
    let (u, mut iterations) = if rhs == 0.0 {
        (0.0, 0)
    } else {
        safeguarded_newton(g, 0.0, hi, start, 4.0 * f64::EPSILON * rhs.abs())?
    };
    // 2[√(β²−ζ²) − β·arccosh(β/ζ)] and its ζ-derivative
    let lhs = |z: f64| {
        let v = ((beta - z) * (beta + z)).sqrt();
        (2.0 * (v - beta * ((beta + v) / z).ln()), 2.0 * v / z)
    };
    let mut zeta = beta * ((1.0 - u) * (1.0 + u)).sqrt();
    if u > 0.5 {
        // close to ζ = 0 the equation is far better conditioned in ζ than in V
        for _ in 0..3 {
            let (l, d) = lhs(zeta);
            let z = zeta - (l - 2.0 * rhs) / d;
            if !(z > 0.0 && z < beta) || z == zeta {
                break;
            }
            zeta = z;
            iterations += 1;
        }
    }
    Ok(ZetaSolve {
        zeta,
        w: ((beta - zeta) * (beta + zeta)).sqrt(),
        region: ZetaRegion::Oscillatory,
        residual: (lhs(zeta).0 - 2.0 * rhs).abs(),
        iterations,
    })
}

/// Transition point √(1+β²)/β (infinite for β = 0).
pub fn transition_point(beta: f64) -> f64 {
    if beta == 0.0 {
        f64::INFINITY
    } else {
        (1.0 + beta * beta).sqrt() / beta
    }
}

fn raw_shape(x: f64, beta: f64) -> Result<BesselShape, ConicalError> {
    let b2 = beta * beta;
    let x2m1 = (x - 1.0) * (x + 1.0);
    let lambda = 0.5 * ((x2m1 / (b2 + 1.0)).ln() + 2.0 * beta * beta.atan());
    if x <= transition_point(beta) {
        let d = 1.0 - b2 * x2m1;
        let p = x / d.sqrt();
        let z = solve_zeta_monotonic(beta, p)?;
        Ok(BesselShape {
            beta,
            region: ZetaRegion::Monotonic,
            pq: p,
            lambda,
            phi_zeta: (z.w * p / x).sqrt(),
            wv: z.w,
            zeta: z.zeta,
        })
    } else {
        let d = b2 * x2m1 - 1.0;
        let q = x / d.sqrt();
        let z = solve_zeta_oscillatory(beta, q)?;
        Ok(BesselShape {
            beta,
            region: ZetaRegion::Oscillatory,
            pq: q,
            lambda,
            phi_zeta: (z.w * q / x).sqrt(),
            wv: z.w,
            zeta: z.zeta,
        })
    }
}

pub fn ab_coefficients(beta: f64, zeta: f64, shape: &BesselShape) -> ABCoeffs {
    let b2 = beta * beta;
    let w = shape.wv;
    let r = shape.pq;
    let w2 = w * w;
    let b1 = match shape.region {
        ZetaRegion::Monotonic => {
            -(5.0 * b2 * (w2 * w * r * r * r - 1.0 - b2)
                + 3.0 * w2 * (w * r * (1.0 - b2) - 1.0 - b2))
                * zeta
                / (24.0 * w2 * w2 * (1.0 + b2))
        }
        ZetaRegion::Oscillatory => {
            -(5.0 * b2 * (w2 * w * r * r * r - 1.0 - b2)
                - 3.0 * w2 * (w * r * (1.0 - b2) - 1.0 - b2))
                * zeta
                / (24.0 * w2 * w2 * (1.0 + b2))
        }
    };
    ABCoeffs {
        a0: 1.0,
        a1: b2 / (24.0 * (1.0 + b2)),
        b0: 0.0,
        b1,
    }
}

/// Relative half-width around x_c inside which Φ and B₁ are interpolated.
pub const SEAM_GUARD: f64 = 1e-4;

/// Shape, coefficients and the (Φ, B₁) pair actually used at x.
pub fn bessel_shape(x: f64, m: u32, tau: f64) -> Result<(BesselShape, ABCoeffs), ConicalError> {
    if !(x > 1.0) {
        return Err(ConicalError::Domain(format!("x = {x} must exceed 1")));
    }
    if m == 0 {
        return Err(ConicalError::Domain("expansion needs m >= 1".into()));
    }
    let beta = tau / f64::from(m);
    let xc = transition_point(beta);
    let t = x / xc - 1.0;
    if t.abs() >= SEAM_GUARD {
        let sh = raw_shape(x, beta)?;
        let ab = ab_coefficients(beta, sh.zeta, &sh);
        return Ok((sh, ab));
    }
    // both forms are 0/0 at x_c; interpolate between one-sided offsets
    let xl = xc * (1.0 - SEAM_GUARD);
    let xr = xc * (1.0 + SEAM_GUARD);
    let (sl, sr) = (raw_shape(xl, beta)?, raw_shape(xr, beta)?);
    let (al, ar) = (
        ab_coefficients(beta, sl.zeta, &sl),
        ab_coefficients(beta, sr.zeta, &sr),
    );
    let f = (x - xl) / (xr - xl);
    let mut sh = raw_shape(x.max(1.0 + f64::EPSILON), beta).unwrap_or(sl);
    sh.phi_zeta = sl.phi_zeta + f * (sr.phi_zeta - sl.phi_zeta);
    let mut ab = ab_coefficients(beta, sh.zeta, &sl);
    ab.b1 = al.b1 + f * (ar.b1 - al.b1);
    Ok((sh, ab))
}

/// P ≈ 2Γ(½+m)(x²−1)^{m/2}cosh(πτ)e^{−mλ}/(π√(2π))·Φ(ζ)·[A·K_{iτ}(mζ) − B·K′_{iτ}(mζ)]
/// with A = 1 + A₁/m, B = B₁/m.
pub fn eval_bessel_type(x: f64, m: u32, tau: f64) -> Result<Expansion, ConicalError> {
    let (sh, ab) = bessel_shape(x, m, tau)?;
    let mf = f64::from(m);
    let k = kia_scaled(tau, mf * sh.zeta)?;
    let a = ab.a0 + ab.a1 / mf;
    let b = ab.b0 + ab.b1 / mf;
    let sum = a * k.ktilde - b * k.ktilde_prime;
    let first = (ab.a1 * k.ktilde).abs() + (ab.b1 * k.ktilde_prime).abs();
    // (x²−1)^{m/2}e^{−mλ} = (1+β²)^{m/2}e^{−τ arctan β}; e^{−πτ/2} comes from the scaled K
    let value = gamma_half_plus(m)
        .mul(one_plus_b2_pow_half(sh.beta, m))
        .mul(cosh_times_decay(tau, sh.beta))
        .mul_f64(2.0 / (PI * (2.0 * PI).sqrt()) * sh.phi_zeta * sum);
    Ok(Expansion {
        value,
        estimate: first / (mf * mf * sum.abs()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_tends_to_beta_at_transition() {
        let z = solve_zeta_monotonic(1.0, 1e12).unwrap();
        assert!((z.zeta - 1.0).abs() < 1e-7);
        let z = solve_zeta_oscillatory(1.0, 1e12).unwrap();
        assert!((z.zeta - 1.0).abs() < 1e-7);
    }

    #[test]
    fn phi_quartic_identity() {
        let (sh, _) = bessel_shape(1.2, 10, 10.0).unwrap();
        let lhs = sh.phi_zeta.powi(4) * (1.0 + 1.0 * (1.0 - 1.44));
        assert!((lhs - (sh.zeta * sh.zeta - 1.0)).abs() < 1e-12 * lhs.abs());
    }

    #[test]
    fn a_coefficients() {
        let (sh, ab) = bessel_shape(1.2, 10, 10.0).unwrap();
        assert_eq!((ab.a0, ab.b0), (1.0, 0.0));
        assert!((ab.a1 - 1.0 / 48.0).abs() < 1e-16);
        assert_eq!(sh.region, ZetaRegion::Monotonic);
    }
}
