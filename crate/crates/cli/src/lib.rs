//! Row evaluation, sweeps, formatting and the self-test report behind the
//! `conical` binary.

use conical::bessel_type::SEAM_GUARD;
use conical::dispatch::{
    conic, conic_with, expansion_region, validate_range, EvaluationPoint, RegionTag, M_MAX_ABOVE,
    M_MAX_UNIT, M_SWITCH, TAU_LARGE, TAU_MAX, XC_ELEMENTARY, XC_MARGIN, X_MAX,
};
use conical::large_tau::LARGE_TAU_GATE;
use conical::selftest::{SelftestReport, GOLDEN_TOL, RESIDUAL_TOL};
use serde_json::{json, Value};
use std::io::{self, Write};
use std::str::FromStr;

pub const EXIT_USAGE: u8 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Csv,
    Jsonl,
}

/// Evenly spaced values `start:stop:count`, or a single number.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Range {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Range {
    pub fn single(v: f64) -> Self {
        Range {
            start: v,
            stop: v,
            count: 1,
        }
    }

    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let n = self.count - 1;
        (0..self.count)
            .map(|i| {
                if i == n {
                    self.stop
                } else {
                    self.start + (self.stop - self.start) * (i as f64 / n as f64)
                }
            })
            .collect()
    }
}

impl FromStr for Range {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| format!("`{t}` is not a finite number"))
        };
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [v] => Ok(Range::single(num(v)?)),
            [a, b, n] => {
                let count: usize = n
                    .trim()
                    .parse()
                    .map_err(|_| format!("`{n}` is not a count"))?;
                if count == 0 {
                    return Err("count must be at least 1".into());
                }
                Ok(Range {
                    start: num(a)?,
                    stop: num(b)?,
                    count,
                })
            }
            _ => Err(format!("`{s}` is neither a number nor start:stop:count")),
        }
    }
}

/// Orders given as `3`, `0,1,5` or `0..10` (inclusive), comma-joinable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderList(pub Vec<i32>);

impl FromStr for OrderList {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let int = |t: &str| {
            t.trim()
                .parse::<i32>()
                .map_err(|_| format!("`{t}` is not an integer order"))
        };
        let mut out = Vec::new();
        for item in s.split(',') {
            if let Some((a, b)) = item.split_once("..") {
                let (a, b) = (int(a)?, int(b)?);
                if b < a {
                    return Err(format!("empty order range `{item}`"));
                }
                out.extend(a..=b);
            } else {
                out.push(int(item)?);
            }
        }
        Ok(OrderList(out))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub x: Range,
    pub m: Vec<i32>,
    pub tau: Range,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Row {
    pub x: f64,
    pub m: i32,
    pub tau: f64,
    pub value: f64,
    pub lnmag: f64,
    pub sign: i8,
    pub method: Option<RegionTag>,
    /// Expansion-map region; `None` outside the admissible boxes.
    pub region: Option<RegionTag>,
    pub ierr: u8,
}

pub fn evaluate(x: f64, m: i32, tau: f64, method: Option<RegionTag>) -> Row {
    let pt = EvaluationPoint { x, m, tau };
    let r = match method {
        None => conic(x, m, tau),
        Some(t) => match conic_with(x, m, tau, t) {
            Ok(r) => r,
            Err(_) => {
                let mut r = conic(f64::NAN, m, tau);
                r.method = None;
                r
            }
        },
    };
    Row {
        x,
        m,
        tau,
        value: r.value,
        lnmag: if r.log_value.sign == 0 {
            f64::NEG_INFINITY
        } else {
            r.log_value.lnmag
        },
        sign: r.log_value.sign,
        method: r.method,
        region: validate_range(&pt).ok().map(|_| expansion_region(&pt)),
        ierr: r.ierr,
    }
}

/// Rows ordered by m, then τ, then x.
pub fn sweep(spec: &SweepSpec, method: Option<RegionTag>) -> Vec<Row> {
    let xs = spec.x.values();
    let taus = spec.tau.values();
    let mut rows = Vec::with_capacity(xs.len() * taus.len() * spec.m.len());
    for &m in &spec.m {
        for &tau in &taus {
            for &x in &xs {
                rows.push(evaluate(x, m, tau, method));
            }
        }
    }
    rows
}

pub fn worst_ierr(rows: &[Row]) -> u8 {
    rows.iter().map(|r| r.ierr).max().unwrap_or(0)
}

/// Shortest text that parses back to the same binary64.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:?}")
}

/// Seventeen significant digits.
pub fn fmt_lnmag(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        fmt_f64(v)
    }
}

fn json_f64(v: f64) -> Value {
    if v.is_finite() {
        json!(v)
    } else {
        json!(fmt_f64(v))
    }
}

const ROW_COLUMNS: [&str; 9] = [
    "x", "m", "tau", "value", "lnmag", "sign", "method", "region", "ierr",
];

fn row_fields(r: &Row) -> [String; 9] {
    [
        fmt_f64(r.x),
        r.m.to_string(),
        fmt_f64(r.tau),
        fmt_f64(r.value),
        fmt_lnmag(r.lnmag),
        r.sign.to_string(),
        r.method.map_or("-", RegionTag::as_str).to_string(),
        r.region.map_or("-", RegionTag::as_str).to_string(),
        r.ierr.to_string(),
    ]
}

fn row_json(r: &Row) -> Value {
    json!({
        "x": r.x,
        "m": r.m,
        "tau": r.tau,
        "value": json_f64(r.value),
        "lnmag": json_f64(r.lnmag),
        "sign": r.sign,
        "method": r.method.map(RegionTag::as_str),
        "region": r.region.map(RegionTag::as_str),
        "ierr": r.ierr,
    })
}

fn write_table<W: Write + ?Sized>(
    w: &mut W,
    format: Format,
    columns: &[&str],
    rows: &[Vec<String>],
    json_rows: impl Iterator<Item = Value>,
) -> io::Result<()> {
    match format {
        Format::Jsonl => {
            for v in json_rows {
                writeln!(w, "{v}")?;
            }
        }
        Format::Csv => {
            writeln!(w, "{}", columns.join(","))?;
            for r in rows {
                writeln!(w, "{}", r.join(","))?;
            }
        }
        Format::Plain => {
            let mut width: Vec<usize> = columns.iter().map(|c| c.len()).collect();
            for r in rows {
                for (wd, f) in width.iter_mut().zip(r) {
                    *wd = (*wd).max(f.len());
                }
            }
            let line = |fields: Vec<&str>| {
                fields
                    .iter()
                    .zip(&width)
                    .map(|(f, wd)| format!("{f:<wd$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            writeln!(w, "{}", line(columns.to_vec()))?;
            for r in rows {
                writeln!(w, "{}", line(r.iter().map(String::as_str).collect()))?;
            }
        }
    }
    Ok(())
}

pub fn write_rows<W: Write + ?Sized>(w: &mut W, rows: &[Row], format: Format) -> io::Result<()> {
    let text: Vec<Vec<String>> = rows.iter().map(|r| row_fields(r).to_vec()).collect();
    write_table(w, format, &ROW_COLUMNS, &text, rows.iter().map(row_json))
}

/// Method and region of each point, without values.
pub fn write_regions<W: Write + ?Sized>(w: &mut W, rows: &[Row], format: Format) -> io::Result<()> {
    let cols = ["x", "m", "tau", "method", "region"];
    let text: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let f = row_fields(r);
            vec![
                f[0].clone(),
                f[1].clone(),
                f[2].clone(),
                f[6].clone(),
                f[7].clone(),
            ]
        })
        .collect();
    let js = rows.iter().map(|r| {
        json!({"x": r.x, "m": r.m, "tau": r.tau,
               "method": r.method.map(RegionTag::as_str), "region": r.region.map(RegionTag::as_str)})
    });
    write_table(w, format, &cols, &text, js)
}

/// Thresholds and the decision table of the dispatcher and of the
/// expansion map.
pub fn write_decision_table<W: Write + ?Sized>(w: &mut W) -> io::Result<()> {
    writeln!(
        w,
        "admissible: -1 < x < 1, 0 <= m <= {M_MAX_UNIT}, 0 <= tau <= {TAU_MAX}"
    )?;
    writeln!(
        w,
        "            1 <= x < {X_MAX}, 0 <= m <= {M_MAX_ABOVE}, 0 <= tau <= {TAU_MAX}"
    )?;
    writeln!(w)?;
    writeln!(w, "thresholds:")?;
    writeln!(w, "  m_switch       {M_SWITCH}")?;
    writeln!(w, "  tau_large      {TAU_LARGE}")?;
    writeln!(w, "  xc_margin      {XC_MARGIN:e}")?;
    writeln!(w, "  xc_elementary  {XC_ELEMENTARY}")?;
    writeln!(w, "  seam_guard     {SEAM_GUARD:e}")?;
    writeln!(w, "  large_tau_gate {LARGE_TAU_GATE:e}")?;
    writeln!(w)?;
    writeln!(w, "method (used by eval and sweep):")?;
    writeln!(w, "  x = 0 or x = 1          boundary_closed_form")?;
    writeln!(w, "  -1 < x < 0              neg_x_quadrature")?;
    writeln!(w, "  m >= m_switch           saddle_line_quadrature")?;
    writeln!(w, "  0 < x < 1, m < m_switch unit_backward_recursion")?;
    writeln!(w, "  x > 1, m < m_switch     backward_recursion")?;
    writeln!(w)?;
    writeln!(
        w,
        "expansion region (beta = tau/m, x_c = sqrt(1+beta^2)/beta):"
    )?;
    writeln!(
        w,
        "  x = 0 or x = 1                                boundary_closed_form"
    )?;
    writeln!(
        w,
        "  -1 < x < 0                                    neg_x_quadrature"
    )?;
    writeln!(
        w,
        "  0 < x < 1, m >= m_switch                      unit_large_m"
    )?;
    writeln!(
        w,
        "  0 < x < 1, m < m_switch                       unit_backward_recursion"
    )?;
    writeln!(
        w,
        "  x > 1, tau >= tau_large, x > x_c(1+xc_margin) large_tau_forward"
    )?;
    writeln!(
        w,
        "  x > 1, x <= x_c                               bessel_monotonic"
    )?;
    writeln!(
        w,
        "  x > 1, x_c < x < xc_elementary*x_c            bessel_oscillatory"
    )?;
    writeln!(
        w,
        "  x > 1, x >= xc_elementary*x_c                 elementary_oscillatory"
    )?;
    writeln!(w, "  (x_c of the last three uses m raised to m_switch)")?;
    Ok(())
}

fn opt_f64(v: Option<f64>) -> String {
    v.map_or("-".to_string(), |d| format!("{d:.3e}"))
}

pub fn write_selftest<W: Write + ?Sized>(
    w: &mut W,
    rep: &SelftestReport,
    format: Format,
) -> io::Result<()> {
    let pass = |b: bool| if b { "pass" } else { "FAIL" };
    match format {
        Format::Jsonl => {
            for c in &rep.cases {
                let v = json!({
                    "kind": "golden", "x": c.golden.x, "m": c.golden.m, "tau": c.golden.tau,
                    "expected": c.golden.value, "computed": json_f64(c.computed),
                    "method": c.method.as_str(), "region": c.region.as_str(),
                    "deviation": json_f64(c.deviation),
                    "expansion_deviation": c.expansion_deviation.map(json_f64),
                    "pass": c.pass,
                });
                writeln!(w, "{v}")?;
            }
            for r in &rep.residuals {
                let v = json!({
                    "kind": "residual", "x": r.x, "m": r.m, "tau": r.tau,
                    "residual": json_f64(r.residual), "pass": r.pass,
                });
                writeln!(w, "{v}")?;
            }
            let v = json!({
                "kind": "summary", "cases": rep.cases.len(), "residuals": rep.residuals.len(),
                "max_golden_deviation": json_f64(rep.max_golden_deviation()),
                "max_residual": json_f64(rep.max_residual()), "pass": rep.passed(),
            });
            writeln!(w, "{v}")?;
        }
        Format::Csv | Format::Plain => {
            let cols = [
                "kind",
                "x",
                "m",
                "tau",
                "method",
                "region",
                "deviation",
                "expansion",
                "status",
            ];
            let mut rows: Vec<Vec<String>> = rep
                .cases
                .iter()
                .map(|c| {
                    vec![
                        "golden".into(),
                        fmt_f64(c.golden.x),
                        c.golden.m.to_string(),
                        fmt_f64(c.golden.tau),
                        c.method.as_str().into(),
                        c.region.as_str().into(),
                        format!("{:.3e}", c.deviation),
                        opt_f64(c.expansion_deviation),
                        pass(c.pass).into(),
                    ]
                })
                .collect();
            rows.extend(rep.residuals.iter().map(|r| {
                vec![
                    "residual".into(),
                    fmt_f64(r.x),
                    r.m.to_string(),
                    fmt_f64(r.tau),
                    "-".into(),
                    "-".into(),
                    format!("{:.3e}", r.residual),
                    "-".into(),
                    pass(r.pass).into(),
                ]
            }));
            write_table(w, format, &cols, &rows, std::iter::empty())?;
            if format == Format::Plain {
                writeln!(w)?;
                writeln!(
                    w,
                    "max golden deviation {:.3e} (limit {GOLDEN_TOL:e}) over {} cases",
                    rep.max_golden_deviation(),
                    rep.cases.len()
                )?;
                writeln!(
                    w,
                    "max residual         {:.3e} (limit {RESIDUAL_TOL:e}) over {} triples",
                    rep.max_residual(),
                    rep.residuals.len()
                )?;
                writeln!(w, "selftest {}", if rep.passed() { "PASS" } else { "FAIL" })?;
            }
        }
    }
    Ok(())
}

pub fn selftest_exit(rep: &SelftestReport) -> u8 {
    u8::from(!rep.passed())
}
