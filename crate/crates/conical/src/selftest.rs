//! Golden-value self-test: stored reference values evaluated through the
//! dispatcher and through the expansion of their region, plus one-step
//! recurrence residuals of dispatcher output.

use crate::dispatch::{
    conic, conic_with, expansion_region, select_region, EvaluationPoint, RegionTag,
};
use crate::goldens::GOLDENS;
use crate::recurrence::residual_one_step;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Golden {
    pub x: f64,
    pub m: i32,
    pub tau: f64,
    pub value: f64,
}

/// Largest accepted relative deviation of `conic` from a golden value.
pub const GOLDEN_TOL: f64 = 1e-11;
/// Largest accepted one-step residual.
pub const RESIDUAL_TOL: f64 = 5e-12;

/// Accepted deviation of a forced truncated expansion, about ten times the
/// worst truncation error seen on the golden set.
pub fn expansion_tolerance(tag: RegionTag) -> f64 {
    match tag {
        RegionTag::UnitLargeM => 1e-5,
        RegionTag::BesselMonotonic | RegionTag::BesselOscillatory => 5e-5,
        RegionTag::ElementaryOscillatory => 3e-4,
        RegionTag::LargeTauForward => 1e-7,
        _ => GOLDEN_TOL,
    }
}

/// Centres (x, m, τ) of the recurrence checks; the triple is m−1, m, m+1.
pub const RESIDUAL_POINTS: &[(f64, i32, f64)] = &[
    (0.5, 5, 7.0),
    (3.0, 51, 40.0),
    (-0.5, 3, 2.0),
    (-0.9, 10, 50.0),
    (0.9, 30, 100.0),
    (0.1, 39, 0.0),
    (1.5, 20, 10.0),
    (2.0, 1, 1.0),
    (10.0, 99, 100.0),
    (50.0, 60, 30.0),
    (1.01, 5, 3.0),
    (0.3, 19, 45.0),
];

#[derive(Clone, Copy, Debug)]
pub struct CaseReport {
    pub golden: Golden,
    /// Method chosen by the dispatcher.
    pub method: RegionTag,
    /// Region of the expansion map.
    pub region: RegionTag,
    pub computed: f64,
    pub deviation: f64,
    /// Deviation of the forced expansion, when the region is one.
    pub expansion_deviation: Option<f64>,
    pub pass: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct ResidualReport {
    pub x: f64,
    pub m: i32,
    pub tau: f64,
    pub residual: f64,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct SelftestReport {
    pub cases: Vec<CaseReport>,
    pub residuals: Vec<ResidualReport>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.pass) && self.residuals.iter().all(|r| r.pass)
    }

    pub fn max_golden_deviation(&self) -> f64 {
        self.cases.iter().map(|c| c.deviation).fold(0.0, f64::max)
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals
            .iter()
            .map(|r| r.residual)
            .fold(0.0, f64::max)
    }

    /// Every tag reached either as a dispatcher method or as a region.
    pub fn tags_covered(&self) -> Vec<RegionTag> {
        let mut t: Vec<RegionTag> = self
            .cases
            .iter()
            .flat_map(|c| [c.method, c.region])
            .collect();
        t.sort();
        t.dedup();
        t
    }
}

fn deviation(computed: f64, reference: f64) -> f64 {
    if reference == 0.0 {
        computed.abs()
    } else {
        (computed - reference).abs() / reference.abs()
    }
}

fn check_case(g: Golden) -> CaseReport {
    let pt = EvaluationPoint {
        x: g.x,
        m: g.m,
        tau: g.tau,
    };
    let r = conic(g.x, g.m, g.tau);
    let computed = r.value;
    let dev = if r.ierr == 0 {
        deviation(computed, g.value)
    } else {
        f64::INFINITY
    };
    let region = expansion_region(&pt);
    let expansion_deviation =
        region
            .is_expansion()
            .then(|| match conic_with(g.x, g.m, g.tau, region) {
                Ok(e) if e.ierr == 0 => deviation(e.value, g.value),
                _ => f64::INFINITY,
            });
    let pass =
        dev <= GOLDEN_TOL && expansion_deviation.is_none_or(|d| d <= expansion_tolerance(region));
    CaseReport {
        golden: g,
        method: r.method.unwrap_or_else(|| select_region(&pt)),
        region,
        computed,
        deviation: dev,
        expansion_deviation,
        pass,
    }
}

fn check_residual(x: f64, m: i32, tau: f64) -> ResidualReport {
    let v: Vec<_> = (m - 1..=m + 1).map(|k| conic(x, k, tau)).collect();
    let residual = if v.iter().any(|r| r.ierr == 2) {
        f64::INFINITY
    } else {
        residual_one_step(x, tau, m as u32, v[0].scaled, v[1].scaled, v[2].scaled)
    };
    ResidualReport {
        x,
        m,
        tau,
        residual,
        pass: residual <= RESIDUAL_TOL,
    }
}

pub fn run_with(goldens: &[Golden], residual_points: &[(f64, i32, f64)]) -> SelftestReport {
    SelftestReport {
        cases: goldens.iter().map(|&g| check_case(g)).collect(),
        residuals: residual_points
            .iter()
            .map(|&(x, m, t)| check_residual(x, m, t))
            .collect(),
    }
}

/// Runs the stored golden set and recurrence checks.
pub fn run() -> SelftestReport {
    run_with(GOLDENS, RESIDUAL_POINTS)
}
