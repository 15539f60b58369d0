//! Overflow-safe real numbers and the gamma-type prefactors built from them.
//!
//! Two carriers are used. [`LogScaled`] (sign plus natural log of the
//! magnitude) is the public exchange format. [`Scaled`] (binary64
//! mantissa times a power of two) is what the evaluators compute in, because
//! products of many factors stay accurate to a few ulp, whereas a natural
//! log near 700 has an absolute rounding error of about 1e-13.

use crate::dd::DoubleDouble;
use std::cmp::Ordering;
use std::f64::consts::{LN_2, PI};

/// Natural log of the largest binary64.
pub const LN_MAX: f64 = 709.78;
/// Below this natural log a binary64 result underflows completely.
pub const LN_MIN: f64 = -745.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogScaled {
    pub sign: i8,
    /// Natural log of |value|; meaningless when `sign == 0`.
    pub lnmag: f64,
}

impl LogScaled {
    pub const ZERO: LogScaled = LogScaled {
        sign: 0,
        lnmag: 0.0,
    };
    pub const ONE: LogScaled = LogScaled {
        sign: 1,
        lnmag: 0.0,
    };

    pub fn new(sign: i8, lnmag: f64) -> Self {
        if sign == 0 {
            LogScaled::ZERO
        } else {
            LogScaled {
                sign: sign.signum(),
                lnmag,
            }
        }
    }

    pub fn from_real(v: f64) -> Self {
        log_scaled_from_real(v)
    }

    /// `sign * exp(lnmag)`; may be infinite or zero outside binary64 range.
    pub fn to_f64(self) -> f64 {
        if self.sign == 0 {
            0.0
        } else {
            f64::from(self.sign) * self.lnmag.exp()
        }
    }

    pub fn is_zero(self) -> bool {
        self.sign == 0
    }

    pub fn mul(self, o: Self) -> Self {
        if self.sign == 0 || o.sign == 0 {
            return LogScaled::ZERO;
        }
        LogScaled {
            sign: self.sign * o.sign,
            lnmag: self.lnmag + o.lnmag,
        }
    }

    pub fn div(self, o: Self) -> Self {
        assert!(o.sign != 0, "division of a log-scaled value by zero");
        if self.sign == 0 {
            return LogScaled::ZERO;
        }
        LogScaled {
            sign: self.sign * o.sign,
            lnmag: self.lnmag - o.lnmag,
        }
    }

    pub fn neg(self) -> Self {
        LogScaled {
            sign: -self.sign,
            lnmag: self.lnmag,
        }
    }

    /// Sum, computed by bringing both terms to the larger scale.
    pub fn add(self, o: Self) -> Self {
        if self.sign == 0 {
            return o;
        }
        if o.sign == 0 {
            return self;
        }
        let (big, small) = if self.lnmag >= o.lnmag {
            (self, o)
        } else {
            (o, self)
        };
        let r = f64::from(big.sign) + f64::from(small.sign) * (small.lnmag - big.lnmag).exp();
        if r == 0.0 {
            return LogScaled::ZERO;
        }
        LogScaled {
            sign: if r > 0.0 { 1 } else { -1 },
            lnmag: big.lnmag + r.abs().ln(),
        }
    }

    pub fn to_scaled(self) -> Scaled {
        if self.sign == 0 {
            Scaled::ZERO
        } else {
            Scaled::exp_of(self.lnmag).mul_f64(f64::from(self.sign))
        }
    }
}

/// Converts a finite binary64 into sign and log-magnitude.
pub fn log_scaled_from_real(v: f64) -> LogScaled {
    if v == 0.0 {
        LogScaled::ZERO
    } else {
        LogScaled {
            sign: if v > 0.0 { 1 } else { -1 },
            lnmag: v.abs().ln(),
        }
    }
}

/// `mant * 2^exp` with `0.5 <= |mant| < 1`, or zero.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Scaled {
    pub mant: f64,
    pub exp: i64,
}

fn frexp(v: f64) -> (f64, i64) {
    if v == 0.0 || !v.is_finite() {
        return (v, 0);
    }
    let bits = v.to_bits();
    let e = ((bits >> 52) & 0x7ff) as i64;
    if e == 0 {
        // subnormal: renormalize first
        let (m, k) = frexp(v * 2f64.powi(64));
        return (m, k - 64);
    }
    let m = f64::from_bits((bits & !(0x7ff << 52)) | (1022 << 52));
    (m, e - 1022)
}

/// `v * 2^k` without intermediate overflow or premature underflow.
pub fn ldexp(v: f64, k: i64) -> f64 {
    let mut v = v;
    let mut k = k;
    while k > 1000 {
        v *= 2f64.powi(1000);
        k -= 1000;
        if v.is_infinite() {
            return v;
        }
    }
    while k < -1000 {
        v *= 2f64.powi(-1000);
        k += 1000;
        if v == 0.0 {
            return v;
        }
    }
    v * 2f64.powi(k as i32)
}

impl Scaled {
    pub const ZERO: Scaled = Scaled { mant: 0.0, exp: 0 };
    pub const ONE: Scaled = Scaled { mant: 0.5, exp: 1 };

    pub fn from_f64(v: f64) -> Self {
        assert!(v.is_finite(), "non-finite value in Scaled::from_f64");
        let (m, e) = frexp(v);
        Scaled { mant: m, exp: e }
    }

    fn norm(mant: f64, exp: i64) -> Self {
        if mant == 0.0 {
            return Scaled::ZERO;
        }
        let (m, e) = frexp(mant);
        Scaled {
            mant: m,
            exp: exp + e,
        }
    }

    /// `exp(l)` for any real `l`, split so that the integer part in base 2
    /// is exact.
    pub fn exp_of(l: f64) -> Self {
        let k = (l / LN_2).floor();
        let r = DoubleDouble::from_f64(l) - DoubleDouble::LN2.mul_f64(k);
        Scaled::norm(r.to_f64().exp(), k as i64)
    }

    pub fn is_zero(self) -> bool {
        self.mant == 0.0
    }

    pub fn sign(self) -> i8 {
        if self.mant > 0.0 {
            1
        } else if self.mant < 0.0 {
            -1
        } else {
            0
        }
    }

    pub fn abs(self) -> Self {
        Scaled {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    pub fn neg(self) -> Self {
        Scaled {
            mant: -self.mant,
            exp: self.exp,
        }
    }

    pub fn mul(self, o: Self) -> Self {
        Scaled::norm(self.mant * o.mant, self.exp + o.exp)
    }

    pub fn mul_f64(self, v: f64) -> Self {
        self.mul(Scaled::from_f64(v))
    }

    pub fn div(self, o: Self) -> Self {
        assert!(!o.is_zero(), "division of a scaled value by zero");
        Scaled::norm(self.mant / o.mant, self.exp - o.exp)
    }

    pub fn recip(self) -> Self {
        Scaled::ONE.div(self)
    }

    pub fn add(self, o: Self) -> Self {
        if self.is_zero() {
            return o;
        }
        if o.is_zero() {
            return self;
        }
        let (big, small) = if self.exp >= o.exp {
            (self, o)
        } else {
            (o, self)
        };
        let d = small.exp - big.exp;
        if d < -1100 {
            return big;
        }
        Scaled::norm(big.mant + ldexp(small.mant, d), big.exp)
    }

    pub fn sub(self, o: Self) -> Self {
        self.add(o.neg())
    }

    pub fn powi(self, n: u32) -> Self {
        let mut base = self;
        let mut acc = Scaled::ONE;
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            k >>= 1;
        }
        acc
    }

    pub fn sqrt(self) -> Self {
        assert!(self.mant >= 0.0, "square root of a negative scaled value");
        if self.is_zero() {
            return self;
        }
        if self.exp % 2 == 0 {
            Scaled::norm(self.mant.sqrt(), self.exp / 2)
        } else {
            Scaled::norm((2.0 * self.mant).sqrt(), (self.exp - 1) / 2)
        }
    }

    /// Natural log of the magnitude.
    pub fn ln_abs(self) -> f64 {
        self.mant.abs().ln() + self.exp as f64 * LN_2
    }

    /// Binary64 value, infinite or zero when out of range.
    pub fn to_f64(self) -> f64 {
        ldexp(self.mant, self.exp)
    }

    pub fn to_log_scaled(self) -> LogScaled {
        if self.is_zero() {
            LogScaled::ZERO
        } else {
            LogScaled {
                sign: self.sign(),
                lnmag: self.ln_abs(),
            }
        }
    }

    /// Compares magnitudes.
    pub fn cmp_abs(self, o: Self) -> Ordering {
        match (self.is_zero(), o.is_zero()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            _ => self
                .exp
                .cmp(&o.exp)
                .then(self.mant.abs().partial_cmp(&o.mant.abs()).unwrap()),
        }
    }

    /// `|self / o|` as binary64 (may overflow to infinity).
    pub fn ratio_abs(self, o: Self) -> f64 {
        ldexp(self.mant.abs() / o.mant.abs(), self.exp - o.exp)
    }
}

/// Γ(m+½) = √π·(½)(3/2)···(m−½) as a scaled product.
pub fn gamma_half_plus(m: u32) -> Scaled {
    let mut acc = Scaled::from_f64(PI.sqrt());
    for k in 0..m {
        acc = acc.mul_f64(f64::from(k) + 0.5);
    }
    acc
}

/// ln Γ(m+½).
pub fn log_gamma_half_plus(m: u32) -> f64 {
    // Accumulate in double-double and take the log of the normalized
    // product, so the result is rounded only a handful of times.
    let mut acc = DoubleDouble::PI.sqrt();
    let mut e2 = 0i64;
    for k in 0..m {
        acc = acc.mul_f64(f64::from(k) + 0.5);
        let (_, e) = frexp(acc.hi);
        if e.abs() > 500 {
            acc = acc.ldexp(-(e as i32));
            e2 += e;
        }
    }
    (acc.ln() + DoubleDouble::LN2.mul_f64(e2 as f64)).to_f64()
}

/// C_m(τ) = ∏_{k<m} ((k+½)² + τ²) = cosh(πτ)|Γ(m+½+iτ)|²/π.
pub fn cm_scaled(m: u32, tau: f64) -> Scaled {
    let t2 = DoubleDouble::from_prod(tau, tau);
    let mut acc = Scaled::ONE;
    for k in 0..m {
        let h = f64::from(k) + 0.5;
        let f = (DoubleDouble::from_prod(h, h) + t2).to_f64();
        acc = acc.mul_f64(f);
    }
    acc
}

/// Log-scaled C_m(τ).
pub fn gamma_product_cm(m: u32, tau: f64) -> LogScaled {
    cm_scaled(m, tau).to_log_scaled()
}

/// (m+½)_n.
pub fn pochhammer_half(m: u32, n: u32) -> f64 {
    (0..n).fold(1.0, |acc, j| acc * (f64::from(m) + 0.5 + f64::from(j)))
}

/// π·τ as an unevaluated pair (the product rounding matters once τ≈100).
pub fn pi_times(tau: f64) -> DoubleDouble {
    DoubleDouble::PI.mul_f64(tau)
}

/// exp of a double-double argument in scaled form.
pub fn exp_dd(l: DoubleDouble) -> Scaled {
    let k = (l.hi / LN_2).floor();
    let r = l - DoubleDouble::LN2.mul_f64(k);
    // first-order correction for the low part
    let e = r.hi.exp();
    Scaled::norm(e + e * r.lo, k as i64)
}

/// cosh(πτ).
pub fn cosh_pi_tau(tau: f64) -> Scaled {
    let a = pi_times(tau);
    exp_dd(a).add(exp_dd(-a)).mul_f64(0.5)
}

/// |1−x²|^{m/2}, with 1−x² formed without cancellation.
pub fn one_minus_x2_pow_half(x: f64, m: u32) -> Scaled {
    let d = ((DoubleDouble::ONE - DoubleDouble::from_f64(x)) * (DoubleDouble::ONE + x))
        .to_f64()
        .abs();
    let base = Scaled::from_f64(d);
    let mut r = base.powi(m / 2);
    if m % 2 == 1 {
        r = r.mul(base.sqrt());
    }
    r
}
