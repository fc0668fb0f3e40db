//! Rigorous floating-point bounds for the three analytic inequalities used by the
//! argument: `g <= 0.995` on a three-dimensional region, `f < 1` on
//! `[0.415, 1)`, and the two-term weighted inequality
//! `(a/x)^x (b/y)^y <= ((a+b)/(x+y))^(x+y)`.
//!
//! Everything is evaluated in log space with `0 ln 0 = 0`.

use std::f64::consts::E;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

pub const X_MIN: f64 = 0.015;
pub const X_MAX: f64 = 0.415;
/// Cap on `s = min(1 - x - y, S_CAP)`.
pub const S_CAP: f64 = 0.415;
pub const G_BOUND: f64 = 0.995;
pub const G_STEP: f64 = 0.005;
pub const G_FINE_STEP: f64 = 0.00125;
/// Smallest side a refined cell may reach, independent of the starting step.
pub const MIN_CELL_SIDE: f64 = 0.005 / 128.0;
pub const F_STEP: f64 = 1e-4;
/// Added to every cell bound.
pub const CELL_SLACK: f64 = 1e-9;
pub const METHOD: &str = "corner-eval+interval";

/// `t ln t` with `0 ln 0 = 0`.
fn xlogx(t: f64) -> f64 {
    if t <= 0.0 {
        0.0
    } else {
        t * t.ln()
    }
}

/// `t ln(u / t)` with the value `0` at `t = 0`.
fn persp(t: f64, u: f64) -> f64 {
    if t <= 0.0 {
        0.0
    } else {
        t * (u / t).ln()
    }
}

fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub fn ln_bin_ratio(a: f64, b: f64) -> Result<f64> {
    if !(a.is_finite() && b.is_finite()) || b < 0.0 || b > a {
        return Err(domain(format!("Bin({a}, {b}) needs 0 <= b <= a")));
    }
    Ok(xlogx(a) - xlogx(b) - xlogx(a - b))
}

/// `a^a / (b^b (a-b)^(a-b))`.
pub fn bin_ratio(a: f64, b: f64) -> Result<f64> {
    ln_bin_ratio(a, b).map(f64::exp)
}

/// `(alpha, beta)` at a point.
pub fn alpha_beta(x: f64, y: f64, z: f64) -> (f64, f64) {
    let s = (1.0 - x - y).min(S_CAP);
    (1.0 + s - 3.0 * x - y - z, 2.0 - s - 2.0 * y + z)
}

fn check_g_point(x: f64, y: f64, z: f64) -> Result<(f64, f64)> {
    if !(x > 0.0 && x < 1.0) || y < 0.0 || x + y > 1.0 || z < 0.0 || z > 3.0 * y {
        return Err(domain(format!("g undefined at ({x}, {y}, {z})")));
    }
    let (a, b) = alpha_beta(x, y, z);
    if a < 0.0 || b < 0.0 {
        return Err(domain(format!("alpha = {a} at ({x}, {y}, {z})")));
    }
    Ok((a, b))
}

/// `ln g`, grouped so that each summand is a single monotone or concave term.
pub fn ln_g(x: f64, y: f64, z: f64) -> Result<f64> {
    let (a, b) = check_g_point(x, y, z)?;
    let w = 1.0 - x - y;
    let ln3 = 3f64.ln();
    Ok(-xlogx(x)
        + 2.0 * xlogx(y)
        + 2.0 * xlogx(w)
        + 3.0 * (1.0 - x) * ln3
        + persp(a, 1.0 - x)
        + persp(b, x)
        + persp(z, w)
        + persp(3.0 * y - z, x + y))
}

pub fn g_value(x: f64, y: f64, z: f64) -> Result<f64> {
    ln_g(x, y, z).map(f64::exp)
}

/// `g` as the literal product of binomial ratios and powers.
pub fn g_value_direct(x: f64, y: f64, z: f64) -> Result<f64> {
    let (a, b) = check_g_point(x, y, z)?;
    let w = 1.0 - x - y;
    let bin = |p: f64, q: f64| p.powf(p) / (q.powf(q) * (p - q).powf(p - q));
    Ok(bin(1.0, x)
        * bin(1.0 - x, y)
        * bin(3.0 * w, a)
        * bin(3.0 * y, z)
        * x.powf(b)
        * (1.0 - x).powf(a)
        * w.powf(z)
        * (x + y).powf(3.0 * y - z))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CertReport {
    pub target: String,
    pub bound: f64,
    pub pass: bool,
    pub global_upper_bound: f64,
    /// Lower corner of the cell attaining the global bound.
    pub argmax_cell: Vec<f64>,
    pub cells_checked: u64,
    pub refined_cells: u64,
    pub step: f64,
    pub min_side: f64,
    pub method: String,
}

#[derive(Clone, Copy, Debug)]
struct Cell {
    lo: [f64; 3],
    hi: [f64; 3],
}

impl Cell {
    /// Intersects with the bounding box of the region above `lo`; `None` if empty.
    fn clip(mut self) -> Option<Self> {
        self.hi[0] = self.hi[0].min(X_MAX);
        self.hi[1] = self.hi[1].min(1.0 - 2.0 * self.lo[0]);
        self.hi[2] = self.hi[2].min(3.0 * self.hi[1]);
        if self.lo[0] > self.hi[0] || self.lo[1] > self.hi[1] || self.lo[2] > self.hi[2] {
            None
        } else {
            Some(self)
        }
    }

    fn side(&self) -> f64 {
        (0..3).map(|i| self.hi[i] - self.lo[i]).fold(0.0, f64::max)
    }

    fn children(&self) -> impl Iterator<Item = Cell> + '_ {
        let mid: [f64; 3] = std::array::from_fn(|i| 0.5 * (self.lo[i] + self.hi[i]));
        (0..8).map(move |bits| {
            let mut c = *self;
            for i in 0..3 {
                if bits >> i & 1 == 0 {
                    c.hi[i] = mid[i];
                } else {
                    c.lo[i] = mid[i];
                }
            }
            c
        })
    }
}

fn hull(a: (f64, f64), b: Option<(f64, f64)>) -> (f64, f64) {
    match b {
        Some(b) => (a.0.min(b.0), a.1.max(b.1)),
        None => a,
    }
}

/// Upper bound of `ln g` over the cell, or `None` if `alpha < 0` throughout.
fn cell_ln_bound(c: &Cell) -> Option<f64> {
    let [xl, yl, zl] = c.lo;
    let [xh, yh, zh] = c.hi;
    let w = ((1.0 - xh - yh).max(0.0), 1.0 - xl - yl);
    // alpha and beta are affine on each side of w = S_CAP.
    let low = (w.0 <= S_CAP).then_some({
        (
            (2.0 - 4.0 * xh - 2.0 * yh - zh, 2.0 - 4.0 * xl - 2.0 * yl - zl),
            (1.0 + xl - yh + zl, 1.0 + xh - yl + zh),
        )
    });
    let high = (w.1 >= S_CAP).then_some({
        (
            (1.0 + S_CAP - 3.0 * xh - yh - zh, 1.0 + S_CAP - 3.0 * xl - yl - zl),
            (2.0 - S_CAP - 2.0 * yh + zl, 2.0 - S_CAP - 2.0 * yl + zh),
        )
    });
    let (alpha, beta) = match (low, high) {
        (Some(l), h) => (hull(l.0, h.map(|h| h.0)), hull(l.1, h.map(|h| h.1))),
        (None, Some(h)) => h,
        (None, None) => unreachable!("w range is non-empty"),
    };
    if alpha.1 < 0.0 {
        return None;
    }
    let persp_max = |t: (f64, f64), u_hi: f64| {
        let t = (u_hi / E).clamp(t.0.max(0.0), t.1.max(0.0));
        persp(t, u_hi)
    };
    let t8 = ((3.0 * yl - zh).max(0.0), 3.0 * yh - zl);
    let ln3 = 3f64.ln();
    Some(
        -xlogx((1.0 / E).clamp(xl, xh))
            + 2.0 * xlogx(yl).max(xlogx(yh))
            + 2.0 * xlogx(w.0).max(xlogx(w.1))
            + 3.0 * (1.0 - xl) * ln3
            + persp_max(alpha, 1.0 - xl)
            + persp_max(beta, xh)
            + persp_max((zl, zh), w.1)
            + persp_max(t8, xh + yh),
    )
}

#[derive(Clone, Copy, Debug)]
struct Acc {
    best: f64,
    at: [f64; 3],
    cells: u64,
    refined: u64,
}

impl Acc {
    fn empty() -> Self {
        Self {
            best: f64::NEG_INFINITY,
            at: [f64::NAN; 3],
            cells: 0,
            refined: 0,
        }
    }

    fn merge(self, o: Self) -> Self {
        let (best, at) = if o.best > self.best { (o.best, o.at) } else { (self.best, self.at) };
        Self {
            best,
            at,
            cells: self.cells + o.cells,
            refined: self.refined + o.refined,
        }
    }
}

/// `nominal` is the unclipped dyadic cell, so refinements from different
/// starting steps visit the same cells.
fn certify_cell(nominal: Cell, target: f64, acc: &mut Acc) {
    let Some(c) = nominal.clip() else { return };
    acc.cells += 1;
    let Some(lb) = cell_ln_bound(&c) else { return };
    let b = lb.exp() + CELL_SLACK;
    if b <= target || nominal.side() <= MIN_CELL_SIDE * (1.0 + 1e-9) {
        if b > acc.best {
            acc.best = b;
            acc.at = c.lo;
        }
        return;
    }
    acc.refined += 1;
    for child in nominal.children() {
        certify_cell(child, target, acc);
    }
}

/// Bounds `g` over `0.015 <= x <= 0.415, 0 <= y <= 1 - 2x, 0 <= z <= 3y` on a
/// grid of side `step`. Cells whose bound exceeds `bound` are bisected until the
/// bound drops or the cell reaches [`MIN_CELL_SIDE`]. Points with `alpha < 0` lie
/// outside the domain of `g` and are skipped.
pub fn certify_g(step: f64, bound: f64) -> Result<CertReport> {
    if !(step > 0.0 && step <= G_STEP * (1.0 + 1e-12)) {
        return Err(Error::InvalidParameter(format!("step must lie in (0, {G_STEP}]")));
    }
    let nx = ((X_MAX - X_MIN) / step - 1e-9).ceil() as usize;
    let acc = (0..nx)
        .into_par_iter()
        .map(|i| {
            let mut acc = Acc::empty();
            let xl = X_MIN + i as f64 * step;
            let ny = ((1.0 - 2.0 * xl) / step - 1e-9).ceil().max(1.0) as usize;
            for j in 0..ny {
                let yl = j as f64 * step;
                let yh = yl + step;
                let nz = ((3.0 * yh.min(1.0 - 2.0 * xl)) / step - 1e-9).ceil().max(1.0) as usize;
                for k in 0..nz {
                    let zl = k as f64 * step;
                    let cell = Cell {
                        lo: [xl, yl, zl],
                        hi: [xl + step, yh, zl + step],
                    };
                    certify_cell(cell, bound, &mut acc);
                }
            }
            acc
        })
        .reduce(Acc::empty, Acc::merge);
    Ok(CertReport {
        target: "g".into(),
        bound,
        pass: acc.best <= bound,
        global_upper_bound: acc.best,
        argmax_cell: acc.at.to_vec(),
        cells_checked: acc.cells,
        refined_cells: acc.refined,
        step,
        min_side: MIN_CELL_SIDE,
        method: METHOD.into(),
    })
}

/// Largest value of `g` over grid points of spacing `step` where `g` is defined.
pub fn g_grid_max(step: f64) -> (f64, [f64; 3]) {
    let mut best = (f64::NEG_INFINITY, [0.0; 3]);
    let nx = ((X_MAX - X_MIN) / step + 1e-9).floor() as usize;
    for i in 0..=nx {
        let x = X_MIN + i as f64 * step;
        let ny = ((1.0 - 2.0 * x) / step + 1e-9).floor() as usize;
        for j in 0..=ny {
            let y = (j as f64 * step).min(1.0 - 2.0 * x);
            let nz = (3.0 * y / step + 1e-9).floor() as usize;
            for k in 0..=nz {
                let z = (k as f64 * step).min(3.0 * y);
                if let Ok(v) = g_value(x, y, z) {
                    if v > best.0 {
                        best = (v, [x, y, z]);
                    }
                }
            }
        }
    }
    best
}

fn f_q(x: f64) -> f64 {
    (1.0 - x).powi(3) * (-3.0 * x / (1.0 - x)).exp()
}

fn check_f_point(x: f64) -> Result<()> {
    if !(0.415..1.0).contains(&x) {
        return Err(domain(format!("f is certified on [0.415, 1), got {x}")));
    }
    Ok(())
}

pub fn ln_f(x: f64) -> Result<f64> {
    check_f_point(x)?;
    let ln1mx = (-x).ln_1p();
    Ok(3.0 * x * ln1mx + (1.0 - x) * (-f_q(x)).ln_1p() - xlogx(x) - xlogx(1.0 - x))
}

pub fn f_value(x: f64) -> Result<f64> {
    ln_f(x).map(f64::exp)
}

/// `f` by direct powers.
pub fn f_value_direct(x: f64) -> Result<f64> {
    check_f_point(x)?;
    let num = (1.0 - x).powf(3.0 * x) * (1.0 - f_q(x)).powf(1.0 - x);
    Ok(num / (x.powf(x) * (1.0 - x).powf(1.0 - x)))
}

/// Upper bound of `ln f` over `[a, b]`, `0.415 <= a < b <= 1`.
fn f_cell_ln_bound(a: f64, b: f64) -> f64 {
    // 3x ln(1-x) decreases; ln(1 - q) is negative and increasing since q decreases;
    // the entropy term is concave with its peak at 1/2.
    let t1 = 3.0 * a * (-a).ln_1p();
    let t2 = if b >= 1.0 { 0.0 } else { (1.0 - b) * (-f_q(b)).ln_1p() };
    let m = 0.5f64.clamp(a, b);
    let t3 = -xlogx(m) - xlogx(1.0 - m);
    t1 + t2 + t3
}

/// Bounds `f` over `[0.415, 1)` with cells of width `step`; the last cell ends at 1.
pub fn certify_f(step: f64) -> Result<CertReport> {
    if !(step > 0.0 && step <= 0.01) {
        return Err(Error::InvalidParameter("step must lie in (0, 0.01]".into()));
    }
    let lo = 0.415;
    let cells = ((1.0 - lo) / step - 1e-9).ceil() as usize;
    let mut best = (f64::NEG_INFINITY, lo);
    for i in 0..cells {
        let a = lo + i as f64 * step;
        let b = if i + 1 == cells { 1.0 } else { a + step };
        let v = f_cell_ln_bound(a, b).exp() + CELL_SLACK;
        if v > best.0 {
            best = (v, a);
        }
    }
    Ok(CertReport {
        target: "f".into(),
        bound: 1.0,
        pass: best.0 < 1.0,
        global_upper_bound: best.0,
        argmax_cell: vec![best.1],
        cells_checked: cells as u64,
        refined_cells: 0,
        step,
        min_side: step,
        method: METHOD.into(),
    })
}

/// `(a/x)^x (b/y)^y <= ((a+b)/(x+y))^(x+y)`, compared in log space with a
/// relative tolerance of `1e-12`.
pub fn check_superadditivity(a: f64, b: f64, x: f64, y: f64) -> Result<bool> {
    if ![a, b, x, y].iter().all(|v| v.is_finite() && *v > 0.0) {
        return Err(domain("arguments must be positive"));
    }
    let lhs = x * (a / x).ln() + y * (b / y).ln();
    let rhs = (x + y) * ((a + b) / (x + y)).ln();
    Ok(lhs <= rhs + 1e-12 * (1.0 + rhs.abs()))
}
