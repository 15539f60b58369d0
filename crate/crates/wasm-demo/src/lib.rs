//! Browser bindings: point evaluation, curves in x, and a region map over
//! (x, τ) at fixed m. Everything here also runs natively.

use conical::dispatch::{
    conic, expansion_region, select_region, validate_range, EvaluationPoint, RegionTag,
};
use wasm_bindgen::prelude::*;

#[wasm_bindgen]
pub struct Evaluation {
    value: f64,
    lnmag: f64,
    sign: i8,
    ierr: u8,
    method: String,
    region: String,
}

#[wasm_bindgen]
impl Evaluation {
    #[wasm_bindgen(getter)]
    pub fn value(&self) -> f64 {
        self.value
    }
    #[wasm_bindgen(getter)]
    pub fn lnmag(&self) -> f64 {
        self.lnmag
    }
    #[wasm_bindgen(getter)]
    pub fn sign(&self) -> i8 {
        self.sign
    }
    #[wasm_bindgen(getter)]
    pub fn ierr(&self) -> u8 {
        self.ierr
    }
    #[wasm_bindgen(getter)]
    pub fn method(&self) -> String {
        self.method.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn region(&self) -> String {
        self.region.clone()
    }
}

#[wasm_bindgen]
pub fn evaluate(x: f64, m: i32, tau: f64) -> Evaluation {
    let r = conic(x, m, tau);
    let pt = EvaluationPoint { x, m, tau };
    Evaluation {
        value: r.value,
        lnmag: r.log_value.lnmag,
        sign: r.log_value.sign,
        ierr: r.ierr,
        method: r.method.map_or("", RegionTag::as_str).to_string(),
        region: validate_range(&pt)
            .map(|_| expansion_region(&pt).as_str())
            .unwrap_or("")
            .to_string(),
    }
}

fn grid(start: f64, stop: f64, n: usize) -> impl Iterator<Item = f64> {
    let d = if n > 1 {
        (stop - start) / (n - 1) as f64
    } else {
        0.0
    };
    (0..n).map(move |i| start + d * i as f64)
}

/// Values at n points of [x0, x1]. With `log` set, sign·ln|P| instead,
/// which keeps curves of very different size on one axis. Points where
/// the evaluation fails give NaN.
#[wasm_bindgen]
pub fn curve(m: i32, tau: f64, x0: f64, x1: f64, n: usize, log: bool) -> Vec<f64> {
    grid(x0, x1, n)
        .map(|x| {
            let r = conic(x, m, tau);
            match (r.ierr, log) {
                (2, _) => f64::NAN,
                (_, true) if r.log_value.sign == 0 => f64::NAN,
                (_, true) => f64::from(r.log_value.sign) * r.log_value.lnmag,
                (_, false) => r.value,
            }
        })
        .collect()
}

/// Names matching the indices returned by [`region_map`].
#[wasm_bindgen]
pub fn region_names() -> Vec<String> {
    RegionTag::ALL
        .iter()
        .map(|t| t.as_str().to_string())
        .collect()
}

/// Row-major nx × ntau map of region indices (into [`region_names`]), τ
/// varying slowest; 255 marks points outside the admissible boxes. With
/// `production` set the dispatcher's method is shown instead of the
/// expansion map.
#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn region_map(
    m: i32,
    x0: f64,
    x1: f64,
    nx: usize,
    tau0: f64,
    tau1: f64,
    ntau: usize,
    production: bool,
) -> Vec<u8> {
    let xs: Vec<f64> = grid(x0, x1, nx).collect();
    let mut out = Vec::with_capacity(nx * ntau);
    for tau in grid(tau0, tau1, ntau) {
        for &x in &xs {
            let pt = EvaluationPoint { x, m, tau };
            let tag = if validate_range(&pt).is_err() {
                None
            } else if production {
                Some(select_region(&pt))
            } else {
                Some(expansion_region(&pt))
            };
            out.push(tag.map_or(255, |t| {
                RegionTag::ALL.iter().position(|&a| a == t).unwrap() as u8
            }));
        }
    }
    out
}
