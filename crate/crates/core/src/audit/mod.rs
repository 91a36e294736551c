//! Signed-margin evaluation of functional inequalities and grid sweeps.

mod catalog;
mod report;
mod sweep;

pub use catalog::{Axes, InequalityClass, InequalityId, ZAxis};
pub use report::{AuditRecord, AuditReport, IdSummary, Segment, Status};
pub use sweep::{
    audit_sweep, audit_sweep_with, evaluate_inequality, evaluate_inequality_with, GridSpec, Point,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gamma::ln_gamma_abs;
use crate::series::FoxWrightSpec;

/// Slack on the normalized margin below which a negative margin is a violation.
pub const DEFAULT_SLACK: f64 = 1e-12;

/// `(larger - smaller) / max(1, |larger|, |smaller|)`.
pub fn signed_margin(larger: f64, smaller: f64) -> f64 {
    (larger - smaller) / 1f64.max(larger.abs()).max(smaller.abs())
}

/// Moments `psi_m = prod Gamma(a_i + alpha_i m) / prod Gamma(b_j + beta_j m)`, `m = 0, 1, 2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundMoments {
    pub psi0: f64,
    pub psi1: f64,
    pub psi2: f64,
}

impl BoundMoments {
    /// Lower bound `psi0 exp(psi1 |z| / psi0)`.
    pub fn lower_bound(&self, z: f64) -> f64 {
        self.psi0 * (self.psi1 * z.abs() / self.psi0).exp()
    }

    /// Upper bound `psi0 - (1 - exp|z|) psi1`.
    pub fn upper_bound(&self, z: f64) -> f64 {
        self.psi0 + z.abs().exp_m1() * self.psi1
    }
}

pub fn bound_moments(s: &FoxWrightSpec) -> Result<BoundMoments> {
    let moment = |m: f64| -> Result<f64> {
        let mut ln = 0.0;
        for &(a, slope) in &s.upper {
            ln += positive_ln_gamma(a + slope * m)?;
        }
        for &(b, slope) in &s.lower {
            ln -= positive_ln_gamma(b + slope * m)?;
        }
        Ok(ln.exp())
    };
    Ok(BoundMoments {
        psi0: moment(0.0)?,
        psi1: moment(1.0)?,
        psi2: moment(2.0)?,
    })
}

fn positive_ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("moment needs positive Gamma arguments, got {x}")));
    }
    Ok(ln_gamma_abs(x)?.0)
}

/// `psi1 > psi2` and `psi1^2 < psi0 psi2`.
pub fn moment_conditions_hold(m: &BoundMoments) -> bool {
    m.psi1 > m.psi2 && m.psi1 * m.psi1 < m.psi0 * m.psi2
}
