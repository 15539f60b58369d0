use super::OracleValue;
use crate::dd::{ComplexDD, DoubleDouble};

// B_{2j} as (numerator, denominator), j = 1..12
const BERNOULLI: [(f64, f64); 12] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
    (854513.0, 138.0),
    (-236364091.0, 2730.0),
];

/// ln |Γ(σ + iη)|² for σ > 0, in double-double.
pub fn ln_abs_gamma_sq(sigma: f64, eta: f64) -> DoubleDouble {
    assert!(sigma > 0.0, "ln_abs_gamma_sq needs a positive real part");
    // shift to Re w ≥ 40, then Stirling
    let shift = (40.0 - sigma.floor()).max(0.0) as u32;
    let mut prod = DoubleDouble::ONE;
    for k in 0..shift {
        let re = DoubleDouble::from_f64(sigma) + f64::from(k);
        prod *= re.sqr() + DoubleDouble::from_prod(eta, eta);
    }
    let w = ComplexDD::new(DoubleDouble::from_f64(sigma) + f64::from(shift), eta.into());
    let lw = w.ln();
    // Re[(w−½) ln w − w] + ½ ln 2π
    let wm = ComplexDD::new(w.re - 0.5, w.im);
    let main = wm.mul(lw).re - w.re + (DoubleDouble::PI.ldexp(1)).ln().ldexp(-1);
    let inv = ComplexDD::new(DoubleDouble::ONE, DoubleDouble::ZERO).div(w);
    let inv2 = inv.mul(inv);
    let mut pw = inv;
    let mut corr = DoubleDouble::ZERO;
    for (j, &(bn, bd)) in BERNOULLI.iter().enumerate() {
        let jj = (j + 1) as f64;
        let c = DoubleDouble::from_f64(bn)
            / (DoubleDouble::from_f64(bd) * (2.0 * jj) * (2.0 * jj - 1.0));
        corr += pw.re * c;
        pw = pw.mul(inv2);
    }
    (main + corr).ldexp(1) - prod.ln()
}

/// P^m_{−½+iτ}(0) = C_m(τ)·2^{−m}√π / |Γ(¾ + m/2 + iτ/2)|².
pub fn closed_form_x0(m: u32, tau: f64) -> OracleValue {
    let t2 = DoubleDouble::from_prod(tau, tau);
    let mut lc = DoubleDouble::ONE;
    for k in 0..m {
        let h = f64::from(k) + 0.5;
        lc *= DoubleDouble::from_prod(h, h) + t2;
    }
    let ln_val = lc.ln() - DoubleDouble::LN2.mul_f64(f64::from(m))
        + DoubleDouble::PI.ln().ldexp(-1)
        - ln_abs_gamma_sq(0.75 + 0.5 * f64::from(m), 0.5 * tau);
    OracleValue {
        value: ln_val.exp(),
        terms_used: 0,
        converged: true,
    }
}
