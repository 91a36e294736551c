//! Evaluation of Wright-type functions from their integral representations
//! over `(0, 1)`, as an independent check on the series.
//!
//! * [`wright_via_integral`]:
//!   `W_{a,b}(z) = 1/(a Gamma(b-a)) int_0^1 (1 - t^{1/a})^{b-a-1} W_{a,a}(z t) dt`, `b > a > 0`.
//! * [`gen_wright_via_beta_kernel`]:
//!   `W^{g,s}_{a,b}(z) = 1/B(g, s-g) int_0^1 t^{g-1} (1-t)^{s-g-1} W_{a,b}(z t) dt`, `s > g > 0`.
//! * [`gen_wright_via_integral`]: the first form with inner function `W^{g,s}_{a,a}`.
//!
//! With the Jacobi rule the first form is rewritten through `t = s^{a r}`,
//! which turns both endpoint singularities into the Jacobi weight
//! `(1 - s)^{b-a-1} s^{a r - 1}`. The integer `r` is chosen so that `a r` is an
//! integer when possible (the remaining factor is then analytic) and at
//! least 8 otherwise. `r = 1` is the plain substitution `t = u^a`.
//!
//! The Jacobi rule is refined by doubling the node count; the reported error
//! is `|I_n - I_2n|` plus the propagated inner-series error and a rounding
//! floor. The adaptive rule integrates the untransformed `t` form.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::{beta, gamma};
use crate::quadrature::{adaptive_gauss_kronrod, gauss_jacobi};
use crate::series::{Evaluation, GenWrightParams, Method, SeriesConfig, WrightParams};

/// Largest Jacobi rule used during refinement.
pub const MAX_NODES: usize = 4096;
const MAX_SEGMENTS: usize = 5000;
const EPS: f64 = f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuadratureRule {
    JacobiWeighted,
    AdaptiveSubdivision,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    /// Starting node count for the Jacobi rule.
    pub node_count: usize,
    pub target_abs_tol: f64,
    pub rule: QuadratureRule,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            node_count: 16,
            target_abs_tol: 1e-12,
            rule: QuadratureRule::JacobiWeighted,
        }
    }
}

impl QuadratureSpec {
    pub fn new(node_count: usize, target_abs_tol: f64, rule: QuadratureRule) -> Result<Self> {
        let spec = Self {
            node_count,
            target_abs_tol,
            rule,
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        if self.node_count < 8 {
            return Err(Error::Config(format!("node_count must be at least 8, got {}", self.node_count)));
        }
        if !(self.target_abs_tol > 0.0) {
            return Err(Error::Config(format!("target_abs_tol must be positive, got {}", self.target_abs_tol)));
        }
        Ok(())
    }
}

/// Substitution exponent `r` and the resulting power `a r` for [`wright_via_integral`].
pub fn substitution_power(alpha: f64) -> (usize, f64) {
    for r in 1..=8usize {
        let m = alpha * r as f64;
        if m >= 1.0 - 1e-12 && (m - m.round()).abs() <= 1e-12 * m {
            return (r, m.round());
        }
    }
    let r = (8.0 / alpha).ceil().max(1.0) as usize;
    (r, alpha * r as f64)
}

/// `c * int_0^1 (1-s)^a s^b f(s) ds` with doubling refinement.
fn jacobi_refine(
    q: &QuadratureSpec,
    a: f64,
    b: f64,
    c: f64,
    mut f: impl FnMut(f64) -> Result<Evaluation>,
) -> Result<Evaluation> {
    let mut apply = |n: usize| -> Result<(f64, f64, f64)> {
        let rule = gauss_jacobi(n, a, b)?;
        let (mut sum, mut inner, mut mass) = (0.0, 0.0, 0.0);
        for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
            let e = f(x)?;
            sum += w * e.value;
            inner += w * e.abs_error_estimate;
            mass += w * e.value.abs();
        }
        Ok((c * sum, c.abs() * inner, c.abs() * mass))
    };
    let mut n = q.node_count;
    let mut prev = apply(n)?;
    let mut estimate = f64::INFINITY;
    while 2 * n <= MAX_NODES {
        let cur = apply(2 * n)?;
        estimate = (cur.0 - prev.0).abs() + cur.1 + 4.0 * EPS * cur.2;
        if estimate <= q.target_abs_tol {
            return Ok(Evaluation {
                value: cur.0,
                abs_error_estimate: estimate,
                terms_used: 2 * n,
                method: Method::Integral,
            });
        }
        prev = cur;
        n *= 2;
    }
    Err(Error::Quadrature {
        target: q.target_abs_tol,
        estimate,
        nodes: n,
    })
}

/// `c * int_0^1 k(t, 1 - t) f(t) dt` by adaptive Gauss-Kronrod. The upper
/// half is integrated in `v = 1 - t` so the kernel sees the distance to the
/// endpoint at full precision. `kernel_mass` bounds `int |k|` for the
/// propagated inner error.
fn adaptive(
    q: &QuadratureSpec,
    c: f64,
    kernel_mass: f64,
    kernel: impl Fn(f64, f64) -> f64,
    mut f: impl FnMut(f64) -> Result<Evaluation>,
) -> Result<Evaluation> {
    let mut worst_inner: f64 = 0.0;
    let tol = 0.5 * q.target_abs_tol / c.abs();
    let mut half = |upper: bool| {
        adaptive_gauss_kronrod(
            |x| {
                let (t, v) = if upper { (1.0 - x, x) } else { (x, 1.0 - x) };
                let e = f(t)?;
                worst_inner = worst_inner.max(e.abs_error_estimate);
                Ok(kernel(t, v) * e.value)
            },
            0.0,
            0.5,
            tol,
            MAX_SEGMENTS,
        )
    };
    let lower = half(false)?;
    let upper = half(true)?;
    let value = c * (lower.value + upper.value);
    Ok(Evaluation {
        value,
        abs_error_estimate: c.abs() * (lower.abs_error + upper.abs_error + worst_inner * kernel_mass) + EPS * value.abs(),
        terms_used: lower.evaluations + upper.evaluations,
        method: Method::Integral,
    })
}

fn power_kernel_form(
    alpha: f64,
    beta_: f64,
    q: &QuadratureSpec,
    inner: impl Fn(f64) -> Result<Evaluation>,
) -> Result<Evaluation> {
    q.validate()?;
    if !(alpha > 0.0 && beta_ > alpha) || !beta_.is_finite() {
        return Err(Error::Domain(format!(
            "integral representation needs beta > alpha > 0, got ({alpha}, {beta_})"
        )));
    }
    let e = beta_ - alpha - 1.0;
    let g = gamma(beta_ - alpha)?;
    match q.rule {
        QuadratureRule::JacobiWeighted => {
            let (r, m) = substitution_power(alpha);
            jacobi_refine(q, e, m - 1.0, r as f64 / g, |s| {
                let geometric: f64 = (0..r).map(|j| s.powi(j as i32)).sum();
                Ok(inner(s.powf(m))?.scaled(geometric.powf(e)))
            })
        }
        QuadratureRule::AdaptiveSubdivision => {
            let c = 1.0 / (alpha * g);
            let mass = alpha * beta(alpha, beta_ - alpha)?;
            adaptive(q, c, mass, |_, v| (-((-v).ln_1p() / alpha).exp_m1()).powf(e), |t| inner(t))
        }
    }
}

/// `W_{alpha,beta}(z)` from the `(1 - t^{1/alpha})^{beta-alpha-1}` representation.
pub fn wright_via_integral(p: WrightParams, z: f64, q: &QuadratureSpec) -> Result<Evaluation> {
    let cfg = SeriesConfig::default();
    let inner = WrightParams::new(p.alpha, p.alpha)?;
    power_kernel_form(p.alpha, p.beta, q, |x| cfg.wright(inner, z * x))
}

/// `W^{gamma,sigma}_{alpha,beta}(z)` from the Beta-kernel representation over `W_{alpha,beta}`.
pub fn gen_wright_via_beta_kernel(p: GenWrightParams, z: f64, q: &QuadratureSpec) -> Result<Evaluation> {
    q.validate()?;
    let p = GenWrightParams::new(p.alpha, p.beta, p.gamma, p.sigma)?;
    if !p.sigma_gt_gamma_gt_zero() {
        return Err(Error::Domain(format!(
            "integral representation needs sigma > gamma > 0, got ({}, {})",
            p.gamma, p.sigma
        )));
    }
    let cfg = SeriesConfig::default();
    let w = p.wright();
    let c = 1.0 / beta(p.gamma, p.sigma - p.gamma)?;
    let (a, b) = (p.sigma - p.gamma - 1.0, p.gamma - 1.0);
    match q.rule {
        QuadratureRule::JacobiWeighted => jacobi_refine(q, a, b, c, |t| cfg.wright(w, z * t)),
        QuadratureRule::AdaptiveSubdivision => adaptive(
            q,
            c,
            1.0 / c,
            |t, v| t.powf(b) * v.powf(a),
            |t| cfg.wright(w, z * t),
        ),
    }
}

/// `W^{gamma,sigma}_{alpha,beta}(z)` from the `(1 - t^{1/alpha})` representation over `W^{gamma,sigma}_{alpha,alpha}`.
pub fn gen_wright_via_integral(p: GenWrightParams, z: f64, q: &QuadratureSpec) -> Result<Evaluation> {
    let p = GenWrightParams::new(p.alpha, p.beta, p.gamma, p.sigma)?;
    let cfg = SeriesConfig::default();
    let inner = GenWrightParams::new(p.alpha, p.alpha, p.gamma, p.sigma)?;
    power_kernel_form(p.alpha, p.beta, q, |x| cfg.gen_wright(inner, z * x))
}
