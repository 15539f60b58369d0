//! Public entry point: range checks, method selection and the ierr contract.

use crate::bessel_type::{eval_bessel_type, transition_point};
use crate::elementary::{eval_elementary_oscillatory, eval_large_m_unit, Expansion};
use crate::error::ConicalError;
use crate::large_tau::large_tau_series;
use crate::line::eval_saddle_line;
use crate::negative_x::{eval_integral_negative_x, eval_mehler_dirichlet_m0};
use crate::oracle::closed_form_x0;
use crate::recurrence::{recurse_backward, recurse_forward};
use crate::scaled::{LogScaled, Scaled, LN_MAX, LN_MIN};
use std::fmt;
use std::str::FromStr;

/// Orders at or above this are evaluated directly; below it the values come
/// from backward recursion started at this order and the next one.
pub const M_SWITCH: u32 = 20;
/// Minimum τ for the large-τ forward chain.
pub const TAU_LARGE: f64 = 50.0;
/// Relative margin above x_c required by the large-τ chain.
pub const XC_MARGIN: f64 = 1e-3;
/// Multiple of x_c beyond which the elementary oscillatory form is used.
pub const XC_ELEMENTARY: f64 = 2.0;

pub const M_MAX_UNIT: i32 = 40;
pub const M_MAX_ABOVE: i32 = 100;
pub const TAU_MAX: f64 = 100.0;
pub const X_MAX: f64 = 100.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvaluationPoint {
    pub x: f64,
    pub m: i32,
    pub tau: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RegionTag {
    NegXQuadrature,
    UnitLargeM,
    UnitBackwardRecursion,
    BesselMonotonic,
    BesselOscillatory,
    ElementaryOscillatory,
    LargeTauForward,
    BoundaryClosedForm,
    SaddleLineQuadrature,
    BackwardRecursion,
}

impl RegionTag {
    pub const ALL: [RegionTag; 10] = [
        RegionTag::NegXQuadrature,
        RegionTag::UnitLargeM,
        RegionTag::UnitBackwardRecursion,
        RegionTag::BesselMonotonic,
        RegionTag::BesselOscillatory,
        RegionTag::ElementaryOscillatory,
        RegionTag::LargeTauForward,
        RegionTag::BoundaryClosedForm,
        RegionTag::SaddleLineQuadrature,
        RegionTag::BackwardRecursion,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RegionTag::NegXQuadrature => "neg_x_quadrature",
            RegionTag::UnitLargeM => "unit_large_m",
            RegionTag::UnitBackwardRecursion => "unit_backward_recursion",
            RegionTag::BesselMonotonic => "bessel_monotonic",
            RegionTag::BesselOscillatory => "bessel_oscillatory",
            RegionTag::ElementaryOscillatory => "elementary_oscillatory",
            RegionTag::LargeTauForward => "large_tau_forward",
            RegionTag::BoundaryClosedForm => "boundary_closed_form",
            RegionTag::SaddleLineQuadrature => "saddle_line_quadrature",
            RegionTag::BackwardRecursion => "backward_recursion",
        }
    }

    /// True for the truncated asymptotic expansions.
    pub fn is_expansion(self) -> bool {
        matches!(
            self,
            RegionTag::UnitLargeM
                | RegionTag::BesselMonotonic
                | RegionTag::BesselOscillatory
                | RegionTag::ElementaryOscillatory
                | RegionTag::LargeTauForward
        )
    }
}

impl fmt::Display for RegionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RegionTag {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        RegionTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| format!("unknown method `{s}`"))
    }
}

/// Which bound of the admissible boxes a point violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RangeViolation {
    NotFinite,
    XTooSmall,
    XTooLarge,
    MNegative,
    MTooLarge,
    TauNegative,
    TauTooLarge,
}

impl fmt::Display for RangeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RangeViolation::NotFinite => "argument is not finite",
            RangeViolation::XTooSmall => "x must exceed -1",
            RangeViolation::XTooLarge => "x must be below 100",
            RangeViolation::MNegative => "m must be nonnegative",
            RangeViolation::MTooLarge => "m exceeds 40 (|x| < 1) or 100 (x >= 1)",
            RangeViolation::TauNegative => "tau must be nonnegative",
            RangeViolation::TauTooLarge => "tau exceeds 100",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConicalResult {
    /// The value in binary64; infinite or zero when ierr = 1, NaN when ierr = 2.
    pub value: f64,
    pub log_value: LogScaled,
    /// Mantissa and binary exponent, exact beyond the binary64 range.
    pub scaled: Scaled,
    pub ierr: u8,
    pub method: Option<RegionTag>,
    /// Truncation estimate of the asymptotic expansions.
    pub estimate: Option<f64>,
}

impl ConicalResult {
    fn out_of_range() -> Self {
        ConicalResult {
            value: f64::NAN,
            log_value: LogScaled::ZERO,
            scaled: Scaled::ZERO,
            ierr: 2,
            method: None,
            estimate: None,
        }
    }

    fn from_scaled(s: Scaled, method: RegionTag, estimate: Option<f64>) -> Self {
        let log_value = s.to_log_scaled();
        let (value, ierr) = if s.is_zero() {
            (0.0, 0)
        } else if log_value.lnmag > LN_MAX {
            (f64::from(s.sign()) * f64::INFINITY, 1)
        } else if log_value.lnmag < LN_MIN {
            (0.0, 1)
        } else {
            (s.to_f64(), 0)
        };
        ConicalResult {
            value,
            log_value,
            scaled: s,
            ierr,
            method: Some(method),
            estimate,
        }
    }
}

pub fn validate_range(pt: &EvaluationPoint) -> Result<(), RangeViolation> {
    let EvaluationPoint { x, m, tau } = *pt;
    if !x.is_finite() || !tau.is_finite() {
        return Err(RangeViolation::NotFinite);
    }
    if x <= -1.0 {
        return Err(RangeViolation::XTooSmall);
    }
    if x >= X_MAX {
        return Err(RangeViolation::XTooLarge);
    }
    if m < 0 {
        return Err(RangeViolation::MNegative);
    }
    let m_max = if x >= 1.0 { M_MAX_ABOVE } else { M_MAX_UNIT };
    if m > m_max {
        return Err(RangeViolation::MTooLarge);
    }
    if tau < 0.0 {
        return Err(RangeViolation::TauNegative);
    }
    if tau > TAU_MAX {
        return Err(RangeViolation::TauTooLarge);
    }
    Ok(())
}

/// Method the dispatcher uses at an admissible point.
pub fn select_region(pt: &EvaluationPoint) -> RegionTag {
    let EvaluationPoint { x, m, .. } = *pt;
    if x == 1.0 || x == 0.0 {
        RegionTag::BoundaryClosedForm
    } else if x < 0.0 {
        RegionTag::NegXQuadrature
    } else if m >= M_SWITCH as i32 {
        RegionTag::SaddleLineQuadrature
    } else if x < 1.0 {
        RegionTag::UnitBackwardRecursion
    } else {
        RegionTag::BackwardRecursion
    }
}

/// Region of the asymptotic-expansion map (the decision table built from
/// the expansions alone); shown by the CLI and the demo next to the method
/// actually used.
pub fn expansion_region(pt: &EvaluationPoint) -> RegionTag {
    let EvaluationPoint { x, m, tau } = *pt;
    if x == 1.0 || x == 0.0 {
        return RegionTag::BoundaryClosedForm;
    }
    if x < 0.0 {
        return RegionTag::NegXQuadrature;
    }
    if x < 1.0 {
        return if m >= M_SWITCH as i32 {
            RegionTag::UnitLargeM
        } else {
            RegionTag::UnitBackwardRecursion
        };
    }
    let mm = (m.max(0) as u32).max(1);
    let xc = transition_point(tau / f64::from(mm));
    if tau >= TAU_LARGE && x > xc * (1.0 + XC_MARGIN) {
        return RegionTag::LargeTauForward;
    }
    let big = (m.max(0) as u32).max(M_SWITCH);
    let xc = transition_point(tau / f64::from(big));
    if x <= xc {
        RegionTag::BesselMonotonic
    } else if x < XC_ELEMENTARY * xc {
        RegionTag::BesselOscillatory
    } else {
        RegionTag::ElementaryOscillatory
    }
}

fn closed_form(x: f64, m: u32, tau: f64) -> Scaled {
    if x == 1.0 {
        if m == 0 {
            Scaled::ONE
        } else {
            Scaled::ZERO
        }
    } else {
        Scaled::from_f64(closed_form_x0(m, tau).value.to_f64())
    }
}

fn line(x: f64, m: u32, tau: f64) -> Result<Scaled, ConicalError> {
    Ok(eval_saddle_line(x, m, tau)?.value)
}

fn neg_x(x: f64, m: u32, tau: f64) -> Result<Scaled, ConicalError> {
    let p0 = eval_mehler_dirichlet_m0(x, tau)?;
    if m == 0 {
        return Ok(p0);
    }
    let p1 = eval_integral_negative_x(x, 1, tau)?;
    Ok(recurse_forward(x, tau, p0, p1, m))
}

fn backward_from_line(x: f64, m: u32, tau: f64) -> Result<Scaled, ConicalError> {
    let big = m.max(M_SWITCH);
    let hi = line(x, big + 1, tau)?;
    let lo = line(x, big, tau)?;
    Ok(recurse_backward(x, tau, hi, lo, big, m))
}

fn expansion(e: Result<Expansion, ConicalError>) -> Result<(Scaled, Option<f64>), ConicalError> {
    e.map(|e| (e.value, Some(e.estimate)))
}

/// A large-m form for x > 1; below [`M_SWITCH`] it supplies the seeds at
/// M_SWITCH and M_SWITCH + 1 for backward recursion.
fn above_one_expansion(
    x: f64,
    m: u32,
    tau: f64,
    eval: fn(f64, u32, f64) -> Result<Expansion, ConicalError>,
) -> Result<(Scaled, Option<f64>), ConicalError> {
    if m >= M_SWITCH {
        return expansion(eval(x, m, tau));
    }
    let hi = eval(x, M_SWITCH + 1, tau)?;
    let lo = eval(x, M_SWITCH, tau)?;
    let v = recurse_backward(x, tau, hi.value, lo.value, M_SWITCH, m);
    Ok((v, Some(hi.estimate.max(lo.estimate))))
}

fn run(x: f64, m: u32, tau: f64, tag: RegionTag) -> Result<(Scaled, Option<f64>), ConicalError> {
    let plain = |r: Result<Scaled, ConicalError>| r.map(|v| (v, None));
    match tag {
        RegionTag::BoundaryClosedForm => {
            if x == 1.0 || x == 0.0 {
                Ok((closed_form(x, m, tau), None))
            } else {
                Err(ConicalError::Domain(
                    "closed form only at x = 0 and x = 1".into(),
                ))
            }
        }
        RegionTag::NegXQuadrature => {
            if x > -1.0 && x < 0.0 {
                plain(neg_x(x, m, tau))
            } else {
                Err(ConicalError::Domain(format!("x = {x} not in (-1, 0)")))
            }
        }
        RegionTag::SaddleLineQuadrature => plain(line(x, m, tau)),
        RegionTag::UnitBackwardRecursion => {
            if x > 0.0 && x < 1.0 {
                plain(backward_from_line(x, m, tau))
            } else {
                Err(ConicalError::Domain(format!("x = {x} not in (0, 1)")))
            }
        }
        RegionTag::BackwardRecursion => {
            if x > 1.0 {
                plain(backward_from_line(x, m, tau))
            } else {
                Err(ConicalError::Domain(format!("x = {x} must exceed 1")))
            }
        }
        RegionTag::UnitLargeM => expansion(eval_large_m_unit(x, m, tau)),
        RegionTag::BesselMonotonic | RegionTag::BesselOscillatory => {
            above_one_expansion(x, m, tau, eval_bessel_type)
        }
        RegionTag::ElementaryOscillatory => {
            above_one_expansion(x, m, tau, eval_elementary_oscillatory)
        }
        RegionTag::LargeTauForward => {
            let e0 = large_tau_series(x, 0, tau)?;
            let e1 = large_tau_series(x, 1, tau)?;
            let v = recurse_forward(x, tau, e0.value, e1.value, m);
            Ok((v, Some(e0.estimate.max(e1.estimate))))
        }
    }
}

/// P^m_{−½+iτ}(x). Never fails: problems are reported through `ierr`.
pub fn conic(x: f64, m: i32, tau: f64) -> ConicalResult {
    let pt = EvaluationPoint { x, m, tau };
    if validate_range(&pt).is_err() {
        return ConicalResult::out_of_range();
    }
    let tag = select_region(&pt);
    match run(x, m as u32, tau, tag) {
        Ok((v, est)) => ConicalResult::from_scaled(v, tag, est),
        Err(_) => ConicalResult::out_of_range(),
    }
}

/// Evaluates with a chosen method instead of the dispatcher's. The point
/// must be admissible and inside the method's own domain.
pub fn conic_with(
    x: f64,
    m: i32,
    tau: f64,
    method: RegionTag,
) -> Result<ConicalResult, ConicalError> {
    let pt = EvaluationPoint { x, m, tau };
    validate_range(&pt).map_err(|e| ConicalError::Domain(e.to_string()))?;
    let (v, est) = run(x, m as u32, tau, method)?;
    let mut tag = method;
    if matches!(
        method,
        RegionTag::BesselMonotonic | RegionTag::BesselOscillatory
    ) {
        let xc = transition_point(tau / f64::from((m as u32).max(M_SWITCH)));
        tag = if x <= xc {
            RegionTag::BesselMonotonic
        } else {
            RegionTag::BesselOscillatory
        };
    }
    Ok(ConicalResult::from_scaled(v, tag, est))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_and_underflow_flags() {
        let big = ConicalResult::from_scaled(
            Scaled::exp_of(800.0).neg(),
            RegionTag::SaddleLineQuadrature,
            None,
        );
        assert_eq!(big.ierr, 1);
        assert_eq!(big.value, f64::NEG_INFINITY);
        assert!((big.log_value.lnmag - 800.0).abs() < 1e-12);
        let small = ConicalResult::from_scaled(
            Scaled::exp_of(-800.0),
            RegionTag::SaddleLineQuadrature,
            None,
        );
        assert_eq!((small.ierr, small.value), (1, 0.0));
        let edge = ConicalResult::from_scaled(
            Scaled::exp_of(709.0),
            RegionTag::SaddleLineQuadrature,
            None,
        );
        assert_eq!(edge.ierr, 0);
        assert!(edge.value.is_finite());
    }

    #[test]
    fn box_edges() {
        let ok = |x: f64, m: i32, tau: f64| validate_range(&EvaluationPoint { x, m, tau });
        assert_eq!(ok(150.0, 10, 10.0), Err(RangeViolation::XTooLarge));
        assert_eq!(ok(0.5, 41, 10.0), Err(RangeViolation::MTooLarge));
        assert_eq!(ok(0.5, 40, 100.0), Ok(()));
        assert_eq!(ok(1.0, 100, 0.0), Ok(()));
        assert_eq!(ok(1.0, 101, 0.0), Err(RangeViolation::MTooLarge));
        assert_eq!(ok(1.5, 100, 0.0), Ok(()));
        assert_eq!(ok(f64::NAN, 1, 1.0), Err(RangeViolation::NotFinite));
    }

    #[test]
    fn region_examples() {
        let pt = |x: f64, m: i32, tau: f64| EvaluationPoint { x, m, tau };
        assert_eq!(select_region(&pt(-0.5, 7, 30.0)), RegionTag::NegXQuadrature);
        assert_eq!(expansion_region(&pt(0.3, 35, 20.0)), RegionTag::UnitLargeM);
        assert_eq!(
            expansion_region(&pt(5.0, 2, 80.0)),
            RegionTag::LargeTauForward
        );
        assert_eq!(
            select_region(&pt(0.3, 35, 20.0)),
            RegionTag::SaddleLineQuadrature
        );
        assert_eq!(
            select_region(&pt(5.0, 2, 80.0)),
            RegionTag::BackwardRecursion
        );
        for t in RegionTag::ALL {
            assert_eq!(t.as_str().parse::<RegionTag>(), Ok(t));
        }
    }

    #[test]
    fn closed_forms_at_one() {
        assert_eq!(conic(1.0, 0, 7.0).value, 1.0);
        assert_eq!(conic(1.0, 3, 7.0).value, 0.0);
        assert_eq!(conic(1.0, 3, 7.0).ierr, 0);
    }
}
