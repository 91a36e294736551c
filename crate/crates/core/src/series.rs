//! Truncated-series evaluation of the Wright, generalized Wright, Fox-Wright
//! and multi-parametric Mittag-Leffler functions on the real line.
//!
//! Every family is summed by the same engine. The k-th coefficient is built
//! in log space (`ln|Gamma|` differences plus a tracked sign) and exponentiated
//! once together with `z^k`, so `Gamma(alpha k + beta)` never overflows on its
//! own. Terms are accumulated with a compensated sum.
//!
//! Stopping rule: the sum ends once three consecutive terms satisfy
//! `|t_k| <= eps |S|` with `k >= 8` and the last measured term ratio
//! `r = |t_K / t_{K-1}|` below `1/2`. The reported error is the geometric
//! tail bound `|t_K| r / (1 - r)` plus a rounding bound accumulated from the
//! magnitude of each term and of the logarithms it was built from.
//!
//! Poles of `Gamma` in a denominator are handled as follows: when the
//! parameter multiplying `k` is negative (`-1 < alpha < 0` for the Wright
//! function) the term is zero, following `1 / Gamma(pole) = 0`; otherwise the
//! evaluation fails with [`Error::Pole`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gamma::{is_pole, ln_gamma_abs, log_gamma, x_star};
use crate::summation::CompensatedSum;

/// Default limit on the number of series terms.
pub const DEFAULT_TERM_BUDGET: usize = 10_000;

/// Environment variable read by [`SeriesConfig::from_env`].
pub const TERM_BUDGET_ENV: &str = "WRIGHTKIT_TERM_BUDGET";

const EPS: f64 = f64::EPSILON;
/// `ln(f64::MAX)`; a term beyond this overflows.
const LN_MAX: f64 = 709.782_712_893_384;
const MIN_TERMS: usize = 8;
const SMALL_RUN: usize = 3;
const MAX_TAIL_RATIO: f64 = 0.5;

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Series,
    Integral,
}

/// A function value with an absolute error estimate and a work counter
/// (series terms or quadrature nodes).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Evaluation {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub terms_used: usize,
    pub method: Method,
}

impl Evaluation {
    /// Multiplies value and error estimate by a constant.
    pub fn scaled(self, factor: f64) -> Evaluation {
        Evaluation {
            value: self.value * factor,
            abs_error_estimate: self.abs_error_estimate * factor.abs(),
            ..self
        }
    }
}

/// Parameters `(alpha, beta)` of the Wright function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WrightParams {
    pub alpha: f64,
    pub beta: f64,
}

impl WrightParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !alpha.is_finite() || !beta.is_finite() {
            return Err(Error::Domain(format!("non-finite Wright parameters ({alpha}, {beta})")));
        }
        if alpha <= -1.0 {
            return Err(Error::Domain(format!("Wright series needs alpha > -1, got {alpha}")));
        }
        Ok(Self { alpha, beta })
    }

    /// `beta > alpha > 0`: the integral representation over `(0, 1)` applies.
    pub fn beta_gt_alpha_gt_zero(&self) -> bool {
        self.beta > self.alpha && self.alpha > 0.0
    }

    /// `beta > alpha > x*`: the reflected function has alternating-sign derivatives on `(0, 1)`.
    pub fn beta_gt_alpha_gt_x_star(&self) -> bool {
        self.beta > self.alpha && self.alpha > x_star()
    }

    /// `alpha > 0, beta > x*`: the reflected function is nonnegative on `(0, 1)`.
    pub fn nonnegative_on_unit_interval(&self) -> bool {
        self.alpha > 0.0 && self.beta > x_star()
    }
}

/// Parameters `(alpha, beta, gamma, sigma)` of the generalized Wright function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GenWrightParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub sigma: f64,
}

impl GenWrightParams {
    pub fn new(alpha: f64, beta: f64, gamma: f64, sigma: f64) -> Result<Self> {
        WrightParams::new(alpha, beta)?;
        if !gamma.is_finite() || !sigma.is_finite() {
            return Err(Error::Domain(format!("non-finite Pochhammer parameters ({gamma}, {sigma})")));
        }
        Ok(Self {
            alpha,
            beta,
            gamma,
            sigma,
        })
    }

    pub fn wright(&self) -> WrightParams {
        WrightParams {
            alpha: self.alpha,
            beta: self.beta,
        }
    }

    /// `sigma > gamma > 0`: the Beta-kernel integral representation applies.
    pub fn sigma_gt_gamma_gt_zero(&self) -> bool {
        self.sigma > self.gamma && self.gamma > 0.0
    }
}

/// Upper `(a_i, alpha_i)` and lower `(b_j, beta_j)` parameter pairs of `pPsi_q`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FoxWrightSpec {
    pub upper: Vec<(f64, f64)>,
    pub lower: Vec<(f64, f64)>,
}

impl FoxWrightSpec {
    pub fn new(upper: Vec<(f64, f64)>, lower: Vec<(f64, f64)>) -> Self {
        Self { upper, lower }
    }

    /// `1 + sum(beta_j) - sum(alpha_i)`; the series is entire when positive.
    pub fn convergence_margin(&self) -> f64 {
        1.0 + self.lower.iter().map(|p| p.1).sum::<f64>() - self.upper.iter().map(|p| p.1).sum::<f64>()
    }
}

/// Pairs `(B_j, beta_j)` of the `2n`-parametric Mittag-Leffler function.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MittagLefflerSpec {
    pairs: Vec<(f64, f64)>,
}

impl MittagLefflerSpec {
    pub fn new(pairs: Vec<(f64, f64)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::Domain("Mittag-Leffler function needs at least one pair".into()));
        }
        if pairs.iter().any(|p| !p.0.is_finite() || !p.1.is_finite()) {
            return Err(Error::Domain("non-finite Mittag-Leffler parameter".into()));
        }
        if pairs.iter().map(|p| p.0 * p.0).sum::<f64>() == 0.0 {
            return Err(Error::Domain("Mittag-Leffler function needs some B_j != 0".into()));
        }
        Ok(Self { pairs })
    }

    pub fn pairs(&self) -> &[(f64, f64)] {
        &self.pairs
    }
}

/// k-th series coefficient (without `z^k`) in log form.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Coeff {
    Term {
        ln_abs: f64,
        sign: f64,
        /// Sum of magnitudes of the logarithms and arguments the term was
        /// built from; scales the rounding error of `ln_abs`.
        ln_mag: f64,
    },
    /// Exactly zero (reciprocal Gamma at a pole).
    Zero,
    /// This and every later coefficient vanish.
    End,
}

/// Log-space accumulator for one coefficient.
#[derive(Debug, Clone, Copy)]
struct LogTerm {
    ln_abs: f64,
    sign: f64,
    ln_mag: f64,
}

impl LogTerm {
    fn one() -> Self {
        Self {
            ln_abs: 0.0,
            sign: 1.0,
            ln_mag: 0.0,
        }
    }

    fn mul_gamma(&mut self, x: f64) -> Result<()> {
        let (ln, s) = ln_gamma_abs(x)?;
        self.ln_abs += ln;
        self.sign *= s;
        self.ln_mag += ln.abs() + x.abs();
        Ok(())
    }

    /// Divides by `Gamma(x)`; returns false if `x` is a pole (the term is zero).
    fn div_gamma(&mut self, x: f64) -> Result<bool> {
        if is_pole(x) {
            return Ok(false);
        }
        let (ln, s) = ln_gamma_abs(x)?;
        self.ln_abs -= ln;
        self.sign *= s;
        self.ln_mag += ln.abs() + x.abs();
        Ok(true)
    }

    fn div_factorial(&mut self, k: usize) -> Result<()> {
        if k > 1 {
            let ln = log_gamma(k as f64 + 1.0)?;
            self.ln_abs -= ln;
            self.ln_mag += ln + k as f64;
        }
        Ok(())
    }

    fn finish(self) -> Coeff {
        Coeff::Term {
            ln_abs: self.ln_abs,
            sign: self.sign,
            ln_mag: self.ln_mag,
        }
    }
}

/// Divides a coefficient by `Gamma(b + slope k)`; a pole gives a zero term when
/// `slope < 0` and an error otherwise.
fn div_gamma_reciprocal(term: &mut LogTerm, b: f64, slope: f64, k: usize) -> Result<bool> {
    let x = b + slope * k as f64;
    if term.div_gamma(x)? {
        Ok(true)
    } else if slope < 0.0 {
        Ok(false)
    } else {
        Err(Error::Pole(x))
    }
}

/// Series evaluation settings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesConfig {
    pub term_budget: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self {
            term_budget: DEFAULT_TERM_BUDGET,
        }
    }
}

impl SeriesConfig {
    /// Default settings, with the term budget overridden by
    /// `WRIGHTKIT_TERM_BUDGET` when that variable is set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(TERM_BUDGET_ENV) {
            Ok(raw) => {
                let term_budget: usize = raw
                    .trim()
                    .parse()
                    .map_err(|_| Error::Config(format!("{TERM_BUDGET_ENV}={raw:?} is not a term count")))?;
                if term_budget == 0 {
                    return Err(Error::Config(format!("{TERM_BUDGET_ENV} must be positive")));
                }
                Ok(Self { term_budget })
            }
            Err(_) => Ok(Self::default()),
        }
    }

    pub(crate) fn sum(&self, z: f64, mut coeff: impl FnMut(usize) -> Result<Coeff>) -> Result<Evaluation> {
        if !z.is_finite() {
            return Err(Error::Domain(format!("non-finite argument {z}")));
        }
        let ln_z = z.abs().ln();
        let z_negative = z < 0.0;
        let mut acc = CompensatedSum::new();
        let mut rounding = 0.0;
        let mut last_abs: Option<f64> = None;
        let mut ratio = f64::INFINITY;
        let mut small_run = 0;

        for k in 0..self.term_budget {
            match coeff(k)? {
                Coeff::End => {
                    return Ok(finish(acc, rounding, 0.0, k.max(1)));
                }
                Coeff::Zero => small_run += 1,
                Coeff::Term { ln_abs, sign, ln_mag } => {
                    let (ln_t, ln_zk) = if k == 0 {
                        (ln_abs, 0.0)
                    } else if z == 0.0 {
                        (f64::NEG_INFINITY, 0.0)
                    } else {
                        let ln_zk = k as f64 * ln_z;
                        (ln_abs + ln_zk, ln_zk)
                    };
                    if ln_t > LN_MAX {
                        return Err(Error::Overflow(format!("series term {k} at z = {z} exceeds f64 range")));
                    }
                    let odd = z_negative && k % 2 == 1;
                    let magnitude = ln_t.exp();
                    let t = if (sign < 0.0) != odd { -magnitude } else { magnitude };
                    acc.add(t);
                    rounding += magnitude * 2.0 * EPS * (4.0 + ln_mag + ln_zk.abs());
                    if let Some(prev) = last_abs {
                        if prev > 0.0 {
                            ratio = magnitude / prev;
                        }
                    }
                    if magnitude > 0.0 {
                        last_abs = Some(magnitude);
                    }
                    if magnitude <= EPS * acc.value().abs() {
                        small_run += 1;
                    } else {
                        small_run = 0;
                    }
                }
            }
            if z == 0.0 {
                return Ok(finish(acc, rounding, 0.0, 1));
            }
            if k + 1 >= MIN_TERMS && small_run >= SMALL_RUN && ratio < MAX_TAIL_RATIO {
                let tail = last_abs.unwrap_or(0.0) * ratio / (1.0 - ratio);
                return Ok(finish(acc, rounding, tail, k + 1));
            }
        }
        Err(Error::NonConvergence {
            budget: self.term_budget,
            last_term: last_abs.unwrap_or(f64::NAN),
        })
    }

    /// Wright function `W_{alpha,beta}(z) = sum z^k / (k! Gamma(alpha k + beta))`.
    pub fn wright(&self, p: WrightParams, z: f64) -> Result<Evaluation> {
        let p = WrightParams::new(p.alpha, p.beta)?;
        self.sum(z, |k| {
            let mut t = LogTerm::one();
            t.div_factorial(k)?;
            if !div_gamma_reciprocal(&mut t, p.beta, p.alpha, k)? {
                return Ok(Coeff::Zero);
            }
            Ok(t.finish())
        })
    }

    /// `W_{alpha,beta}(-z)`, the reflected Wright function.
    pub fn wright_neg(&self, p: WrightParams, z: f64) -> Result<Evaluation> {
        self.wright(p, -z)
    }

    /// `d/dz W_{alpha,beta}(z) = W_{alpha,beta+alpha}(z)`.
    pub fn wright_derivative(&self, p: WrightParams, z: f64) -> Result<Evaluation> {
        self.wright(WrightParams::new(p.alpha, p.beta + p.alpha)?, z)
    }

    /// Generalized Wright function
    /// `W^{gamma,sigma}_{alpha,beta}(z) = sum (gamma)_k / (sigma)_k z^k / (k! Gamma(alpha k + beta))`.
    pub fn gen_wright(&self, p: GenWrightParams, z: f64) -> Result<Evaluation> {
        let p = GenWrightParams::new(p.alpha, p.beta, p.gamma, p.sigma)?;
        // running ln|(gamma)_k / (sigma)_k|
        let mut poch = LogTerm::one();
        let mut poch_zero = false;
        self.sum(z, move |k| {
            if k > 0 {
                let g = p.gamma + (k - 1) as f64;
                let s = p.sigma + (k - 1) as f64;
                if s == 0.0 && !poch_zero {
                    return Err(Error::Pole(p.sigma));
                }
                if g == 0.0 {
                    poch_zero = true;
                }
                if poch_zero {
                    return Ok(Coeff::End);
                }
                poch.ln_abs += g.abs().ln() - s.abs().ln();
                poch.ln_mag += g.abs().ln().abs() + s.abs().ln().abs();
                poch.sign *= g.signum() * s.signum();
            }
            let mut t = poch;
            t.div_factorial(k)?;
            if !div_gamma_reciprocal(&mut t, p.beta, p.alpha, k)? {
                return Ok(Coeff::Zero);
            }
            Ok(t.finish())
        })
    }

    /// `W^{gamma,sigma}_{alpha,beta}(-z)`.
    pub fn gen_wright_neg(&self, p: GenWrightParams, z: f64) -> Result<Evaluation> {
        self.gen_wright(p, -z)
    }

    /// `d/dz W^{gamma,sigma}_{alpha,beta}(z) = (gamma / sigma) W^{gamma+1,sigma+1}_{alpha,beta+alpha}(z)`.
    pub fn gen_wright_derivative(&self, p: GenWrightParams, z: f64) -> Result<Evaluation> {
        if p.sigma == 0.0 {
            return Err(Error::Pole(0.0));
        }
        let shifted = GenWrightParams::new(p.alpha, p.beta + p.alpha, p.gamma + 1.0, p.sigma + 1.0)?;
        Ok(self.gen_wright(shifted, z)?.scaled(p.gamma / p.sigma))
    }

    /// Fox-Wright function
    /// `pPsi_q(z) = sum prod Gamma(a_i + alpha_i k) / prod Gamma(b_j + beta_j k) z^k / k!`.
    pub fn fox_wright(&self, s: &FoxWrightSpec, z: f64) -> Result<Evaluation> {
        let margin = s.convergence_margin();
        if !(margin > 0.0) {
            return Err(Error::ConvergenceDomain { margin });
        }
        self.sum(z, |k| {
            let mut t = LogTerm::one();
            for &(a, slope) in &s.upper {
                t.mul_gamma(a + slope * k as f64)?;
            }
            for &(b, slope) in &s.lower {
                if !div_gamma_reciprocal(&mut t, b, slope, k)? {
                    return Ok(Coeff::Zero);
                }
            }
            t.div_factorial(k)?;
            Ok(t.finish())
        })
    }

    /// `E_{(B,beta)_n}(z) = sum z^k / prod Gamma(beta_j + k B_j)`.
    pub fn mittag_leffler(&self, s: &MittagLefflerSpec, z: f64) -> Result<Evaluation> {
        let margin: f64 = s.pairs.iter().map(|p| p.0).sum();
        if !(margin > 0.0) {
            return Err(Error::ConvergenceDomain { margin });
        }
        self.sum(z, |k| {
            let mut t = LogTerm::one();
            for &(slope, b) in &s.pairs {
                if !div_gamma_reciprocal(&mut t, b, slope, k)? {
                    return Ok(Coeff::Zero);
                }
            }
            Ok(t.finish())
        })
    }

    /// Four-parametric Mittag-Leffler function `E_{B1,beta1;B2,beta2}(z)`.
    pub fn ml4(&self, b1: f64, beta1: f64, b2: f64, beta2: f64, z: f64) -> Result<Evaluation> {
        self.mittag_leffler(&MittagLefflerSpec::new(vec![(b1, beta1), (b2, beta2)])?, z)
    }
}

fn finish(acc: CompensatedSum, rounding: f64, tail: f64, terms: usize) -> Evaluation {
    let value = acc.value();
    Evaluation {
        value,
        abs_error_estimate: tail + rounding + EPS * value.abs(),
        terms_used: terms,
        method: Method::Series,
    }
}

/// [`SeriesConfig::wright`] with the default configuration.
pub fn wright(p: WrightParams, z: f64) -> Result<Evaluation> {
    SeriesConfig::default().wright(p, z)
}

/// [`SeriesConfig::wright_neg`] with the default configuration.
pub fn wright_neg(p: WrightParams, z: f64) -> Result<Evaluation> {
    SeriesConfig::default().wright_neg(p, z)
}

/// [`SeriesConfig::wright_derivative`] with the default configuration.
pub fn wright_derivative(p: WrightParams, z: f64) -> Result<Evaluation> {
    SeriesConfig::default().wright_derivative(p, z)
}

/// [`SeriesConfig::gen_wright`] with the default configuration.
pub fn gen_wright(p: GenWrightParams, z: f64) -> Result<Evaluation> {
    SeriesConfig::default().gen_wright(p, z)
}

/// [`SeriesConfig::gen_wright_derivative`] with the default configuration.
pub fn gen_wright_derivative(p: GenWrightParams, z: f64) -> Result<Evaluation> {
    SeriesConfig::default().gen_wright_derivative(p, z)
}

/// [`SeriesConfig::fox_wright`] with the default configuration.
pub fn fox_wright(s: &FoxWrightSpec, z: f64) -> Result<Evaluation> {
    SeriesConfig::default().fox_wright(s, z)
}

/// [`SeriesConfig::mittag_leffler`] with the default configuration.
pub fn mittag_leffler(s: &MittagLefflerSpec, z: f64) -> Result<Evaluation> {
    SeriesConfig::default().mittag_leffler(s, z)
}

/// [`SeriesConfig::ml4`] with the default configuration.
pub fn ml4(b1: f64, beta1: f64, b2: f64, beta2: f64, z: f64) -> Result<Evaluation> {
    SeriesConfig::default().ml4(b1, beta1, b2, beta2, z)
}
