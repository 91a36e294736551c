//! Sampling probes for complete monotonicity and log-convexity.
//!
//! These are falsifiers: a failed probe exhibits a concrete point where the
//! property does not hold; a passed probe only means none was found at the
//! sampled points.

use serde::Serialize;

use crate::error::{Error, Result};

pub const DEFAULT_STEP: f64 = 0.01;
pub const DEFAULT_MAX_ORDER: usize = 6;
pub const DEFAULT_GRID_N: usize = 25;

const EPS: f64 = f64::EPSILON;

/// Where the worst margin of a probe was found. For difference probes `x` is
/// the base point and `order` the difference order; for convexity probes
/// `(x, y)` is the sampled pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProbePoint {
    pub x: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeResult {
    /// `worst_margin >= -slack`.
    pub passed: bool,
    pub worst_margin: f64,
    pub worst_point: ProbePoint,
    /// Number of margins evaluated.
    pub samples: usize,
    pub slack: f64,
    /// Smallest difference order with a margin below `-slack`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failing_order: Option<usize>,
}

fn sample<F: FnMut(f64) -> Result<f64>>(f: &mut F, x: f64) -> Result<f64> {
    let v = f(x)?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite(x))
    }
}

fn binomial_row(n: usize) -> Vec<f64> {
    let mut row = vec![1.0; n + 1];
    for j in 1..n {
        row[j] = row[j - 1] * (n + 1 - j) as f64 / j as f64;
    }
    row
}

/// Checks `(-1)^n Delta_h^n f(x) >= 0` for `n = 0..=max_order` at `grid_n`
/// base points spread over `[lo, hi - max_order h]`.
///
/// The slack is `2^max_order * 64 eps * max|f|`, the rounding floor of the
/// highest-order difference.
pub fn check_completely_monotone<F: FnMut(f64) -> Result<f64>>(
    mut f: F,
    lo: f64,
    hi: f64,
    max_order: usize,
    h: f64,
    grid_n: usize,
) -> Result<ProbeResult> {
    if !(lo > 0.0 && hi > lo && hi.is_finite()) {
        return Err(Error::Domain(format!("interval ({lo}, {hi}) must satisfy 0 < lo < hi")));
    }
    if !(h > 0.0) || h * max_order as f64 >= hi - lo {
        return Err(Error::Domain(format!("step {h} with order {max_order} does not fit in ({lo}, {hi})")));
    }
    if grid_n < 2 {
        return Err(Error::Domain("grid_n must be at least 2".into()));
    }
    let span = hi - max_order as f64 * h - lo;
    let mut diffs = Vec::with_capacity(grid_n);
    let mut max_abs: f64 = 0.0;
    for i in 0..grid_n {
        let x = lo + span * i as f64 / (grid_n - 1) as f64;
        let values = (0..=max_order)
            .map(|j| sample(&mut f, x + j as f64 * h))
            .collect::<Result<Vec<f64>>>()?;
        max_abs = values.iter().fold(max_abs, |m, v| m.max(v.abs()));
        let signed: Vec<f64> = (0..=max_order)
            .map(|n| {
                let row = binomial_row(n);
                (0..=n)
                    .map(|j| if j % 2 == 0 { row[j] * values[j] } else { -row[j] * values[j] })
                    .sum()
            })
            .collect();
        diffs.push((x, signed));
    }
    let slack = 2f64.powi(max_order as i32) * 64.0 * EPS * max_abs;
    let mut worst = f64::INFINITY;
    let mut worst_point = ProbePoint {
        x: lo,
        y: None,
        order: Some(0),
    };
    let mut first_failing_order: Option<usize> = None;
    for (x, signed) in &diffs {
        for (n, &d) in signed.iter().enumerate() {
            if d < worst {
                worst = d;
                worst_point = ProbePoint {
                    x: *x,
                    y: None,
                    order: Some(n),
                };
            }
            if d < -slack {
                first_failing_order = Some(first_failing_order.map_or(n, |o| o.min(n)));
            }
        }
    }
    Ok(ProbeResult {
        passed: worst >= -slack,
        worst_margin: worst,
        worst_point,
        samples: grid_n * (max_order + 1),
        slack,
        first_failing_order,
    })
}

/// Midpoint log-convexity over all pairs of a uniform `grid_n`-point grid on
/// `[lo, hi]`: the margin of a pair is `ln f(x) + ln f(y) - 2 ln f((x+y)/2)`.
pub fn check_log_convex_arg<F: FnMut(f64) -> Result<f64>>(f: F, lo: f64, hi: f64, grid_n: usize) -> Result<ProbeResult> {
    log_convex_pairs(f, lo, hi, grid_n)
}

/// [`check_log_convex_arg`] applied to a one-parameter family at fixed argument.
pub fn check_log_convex_param<F: FnMut(f64) -> Result<f64>>(
    family: F,
    lo: f64,
    hi: f64,
    grid_n: usize,
) -> Result<ProbeResult> {
    log_convex_pairs(family, lo, hi, grid_n)
}

fn log_convex_pairs<F: FnMut(f64) -> Result<f64>>(mut f: F, lo: f64, hi: f64, grid_n: usize) -> Result<ProbeResult> {
    if !(hi > lo && lo.is_finite() && hi.is_finite()) {
        return Err(Error::Domain(format!("interval ({lo}, {hi}) is empty")));
    }
    if grid_n < 3 {
        return Err(Error::Domain("grid_n must be at least 3".into()));
    }
    // Half-step grid: grid point i sits at index 2i, the midpoint of (i, j) at i + j.
    let m = 2 * grid_n - 1;
    let mut logs = Vec::with_capacity(m);
    let mut xs = Vec::with_capacity(m);
    for k in 0..m {
        let x = lo + (hi - lo) * k as f64 / (m - 1) as f64;
        let v = sample(&mut f, x)?;
        if v <= 0.0 {
            return Err(Error::Positivity { at: x, value: v });
        }
        xs.push(x);
        logs.push(v.ln());
    }
    let scale = logs.iter().fold(1.0f64, |s, l| s.max(l.abs()));
    let slack = 256.0 * EPS * scale;
    let mut worst = f64::INFINITY;
    let mut worst_point = ProbePoint {
        x: lo,
        y: None,
        order: None,
    };
    let mut samples = 0;
    for i in 0..grid_n {
        for j in (i + 1)..grid_n {
            let margin = logs[2 * i] + logs[2 * j] - 2.0 * logs[i + j];
            samples += 1;
            if margin < worst {
                worst = margin;
                worst_point = ProbePoint {
                    x: xs[2 * i],
                    y: Some(xs[2 * j]),
                    order: None,
                };
            }
        }
    }
    Ok(ProbeResult {
        passed: worst >= -slack,
        worst_margin: worst,
        worst_point,
        samples,
        slack,
        first_failing_order: None,
    })
}
