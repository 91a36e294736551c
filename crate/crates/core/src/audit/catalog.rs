//! The inequality catalog: hypotheses and both sides of every predicate.
//!
//! Notation: `W` is the Wright function, `W^{g,s}` the generalized Wright
//! function, `E_{s}` the four-parameter Mittag-Leffler function
//! `E_{a,b;1,s}`, and a trailing `~` marks reflection, `f~(z) = f(-z)`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::{moment_conditions_hold, bound_moments, Point};
use crate::error::{Error, Result};
use crate::gamma::{gamma, x_star};
use crate::series::{FoxWrightSpec, GenWrightParams, SeriesConfig, WrightParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[allow(non_camel_case_types)]
pub enum InequalityId {
    W_NONNEG,
    SUPERADD_25,
    SUPERADD_25K,
    TURAN_26,
    EXPLB_27,
    UB_29,
    PROD_210,
    DOUBLING_211,
    TS_FW_ALPHA,
    UB_6666,
    LB_777,
    SUPERADD_Z0,
    TURAN_Z1,
    EXPLB_Z2,
    TURAN_SIGMA_Z3,
    TURAN_GAMMA,
    TS_FW_GS,
    UB_88,
    LB_888,
    UB_1010,
    IDENT_1010,
    PROD_11111,
    ML_SUPERADD,
    ML_TURAN_Z,
    ML_EXPLB,
    ML_TURAN_SIGMA,
    ML_UB,
    ML_PROD,
}

/// `Suspect` entries are swept and reported but never count as failures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InequalityClass {
    Asserted,
    Suspect,
}

/// Parameter axes of the sweep grid an entry is evaluated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axes {
    /// `(alpha, beta)`.
    AlphaBeta,
    /// `alpha` only; `beta = alpha + 2` is recorded in the point.
    Alpha,
    /// `(alpha, beta, gamma, sigma)`.
    AlphaBetaGammaSigma,
    /// `(alpha, beta, sigma)` for `E_{alpha,beta;1,sigma}`.
    AlphaBetaSigma,
    /// `(gamma, sigma)`.
    GammaSigma,
}

/// Argument values an entry is evaluated at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZAxis {
    /// Points of `(0, 1)`.
    Unit,
    /// Points of `(0, 1)` and beyond.
    Positive,
    /// Positive points plus negative ones (reported in a separate segment).
    Signed,
    /// Pairs `(x, y)` with `x + y < 1`.
    Pairs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Relation {
    /// `lhs >= rhs`
    Ge,
    /// `lhs <= rhs`
    Le,
    /// `lhs == rhs`
    Eq,
}

/// Both sides of an inequality at a point.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Sides {
    pub lhs: f64,
    pub rhs: f64,
    pub relation: Relation,
    pub note: Option<String>,
}

impl Sides {
    fn new(lhs: f64, relation: Relation, rhs: f64) -> Self {
        Self {
            lhs,
            rhs,
            relation,
            note: None,
        }
    }

    /// Normalized signed margin; nonnegative when the relation holds.
    pub fn margin(&self) -> f64 {
        match self.relation {
            Relation::Ge => super::signed_margin(self.lhs, self.rhs),
            Relation::Le => super::signed_margin(self.rhs, self.lhs),
            Relation::Eq => 0.0 - super::signed_margin(self.lhs, self.rhs).abs(),
        }
    }
}

use InequalityId::*;

impl InequalityId {
    pub const ALL: [InequalityId; 28] = [
        W_NONNEG,
        SUPERADD_25,
        SUPERADD_25K,
        TURAN_26,
        EXPLB_27,
        UB_29,
        PROD_210,
        DOUBLING_211,
        TS_FW_ALPHA,
        UB_6666,
        LB_777,
        SUPERADD_Z0,
        TURAN_Z1,
        EXPLB_Z2,
        TURAN_SIGMA_Z3,
        TURAN_GAMMA,
        TS_FW_GS,
        UB_88,
        LB_888,
        UB_1010,
        IDENT_1010,
        PROD_11111,
        ML_SUPERADD,
        ML_TURAN_Z,
        ML_EXPLB,
        ML_TURAN_SIGMA,
        ML_UB,
        ML_PROD,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            W_NONNEG => "W_NONNEG",
            SUPERADD_25 => "SUPERADD_25",
            SUPERADD_25K => "SUPERADD_25K",
            TURAN_26 => "TURAN_26",
            EXPLB_27 => "EXPLB_27",
            UB_29 => "UB_29",
            PROD_210 => "PROD_210",
            DOUBLING_211 => "DOUBLING_211",
            TS_FW_ALPHA => "TS_FW_ALPHA",
            UB_6666 => "UB_6666",
            LB_777 => "LB_777",
            SUPERADD_Z0 => "SUPERADD_Z0",
            TURAN_Z1 => "TURAN_Z1",
            EXPLB_Z2 => "EXPLB_Z2",
            TURAN_SIGMA_Z3 => "TURAN_SIGMA_Z3",
            TURAN_GAMMA => "TURAN_GAMMA",
            TS_FW_GS => "TS_FW_GS",
            UB_88 => "UB_88",
            LB_888 => "LB_888",
            UB_1010 => "UB_1010",
            IDENT_1010 => "IDENT_1010",
            PROD_11111 => "PROD_11111",
            ML_SUPERADD => "ML_SUPERADD",
            ML_TURAN_Z => "ML_TURAN_Z",
            ML_EXPLB => "ML_EXPLB",
            ML_TURAN_SIGMA => "ML_TURAN_SIGMA",
            ML_UB => "ML_UB",
            ML_PROD => "ML_PROD",
        }
    }

    /// The predicate in plain notation.
    pub fn statement(&self) -> &'static str {
        match self {
            W_NONNEG => "W~_{a,b}(z) >= 0  [a > 0, b > x*, 0 < z < 1]",
            SUPERADD_25 => "W~_{a,b}(x+y) >= W~_{a,b}(x) W~_{a,b}(y) / G(b)  [b > a > x*, 0 < x+y < 1]",
            SUPERADD_25K => "W~_{a,b}(x+y) >= G(b) W~_{a,b}(x) W~_{a,b}(y)  [b > a > x*, 0 < x+y < 1]",
            TURAN_26 => "W~_{a,b+2a} W~_{a,b} - (W~_{a,b+a})^2 >= 0  [b > a > x*, 0 < z < 1]",
            EXPLB_27 => "W~_{a,b}(z) >= exp(-G(b) z / G(b+a)) / G(b)  [b > a > x*, 0 < z < 1]",
            UB_29 => "W_{a,b}(z) <= G(2a)/G(b)^2 (exp(G(a) z / G(2a)) - 1) / z  [a > 0, b - a >= 1, z > 0]",
            PROD_210 => {
                "W_{a,b+1} W_{a,b-1} <= G(b-a)/(G(b-a-1) G(b-a+1)) W_{a,a+1} W_{a,b}  [a > 0, b - a >= 2, z > 0]"
            }
            DOUBLING_211 => "2 W_{a,a+3}(z) <= W_{a,a+2}(z)  [a > 0, z > 0]",
            TS_FW_ALPHA => "psi0 exp(psi1 |z| / psi0) <= 1Psi1[(a,a);(b,a)|z] <= psi0 - (1 - exp|z|) psi1  [b > a > 0]",
            UB_6666 => "W_{a,b}(z) <= 1/G(b) - G(2a)(1 - exp(G(a) z / G(2a))) / (G(a) G(b+a))  [b > a > 0, z > 0]",
            LB_777 => "W~_{a,b}(z) >= exp(+G(b) z / G(a+b)) / G(b)  [b > a > 0, 0 < z < 1]",
            SUPERADD_Z0 => {
                "W~^{g,s}_{a,b}(x+y) >= W~^{g,s}_{a,b}(x) W~^{g,s}_{a,b}(y) / G(b)  [b > a > x*, s > g > 0, 0 < x+y < 1]"
            }
            TURAN_Z1 => {
                "(g+1)/(s+1) W~^{g+2,s+2}_{a,b+2a} W~^{g,s}_{a,b} - (g/s) (W~^{g+1,s+1}_{a,b+a})^2 >= 0  [b > a > x*, s > g > 0, 0 < z < 1]"
            }
            EXPLB_Z2 => "W~^{g,s}_{a,b}(z) >= exp(-g G(b) z / (s G(b+a))) / G(b)  [b > a > x*, s > g > 0, 0 < z < 1]",
            TURAN_SIGMA_Z3 => "W^{g,s} W^{g,s+2} - (W^{g,s+1})^2 >= 0  [a, b > 0, s > g > 0, z > 0]",
            TURAN_GAMMA => "W^{g,s} W^{g+2,s} - g/(g+1) (W^{g+1,s})^2 >= 0  [a, b, g, s > 0, z > 0]",
            TS_FW_GS => "psi0 exp(psi1 |z| / psi0) <= 1Psi1[(g,1);(s,1)|z] <= psi0 - (1 - exp|z|) psi1  [s > g > 0]",
            UB_88 => "W^{g,s}_{a,b}(z) <= (1 - (g/s)(1 - exp(G(b) z / G(b+a)))) / G(b)  [b > a > 0, s > g > 0, z > 0]",
            LB_888 => "W~^{g,s}_{a,b}(z) >= exp(+g G(b) z / (s G(b+a))) / G(b)  [b > a > 0, s > g > 0, 0 < z < 1]",
            UB_1010 => {
                "W^{g,s}_{a,b}(z) <= (G(b-a) W_{a,b-a}(z) - 1) / (G(b-a) z)  [b > a > 0, 0 < g <= 1, s - g >= 1, z > 0]"
            }
            IDENT_1010 => "(G(b-a) W_{a,b-a}(z) - 1) / (G(b-a) z) = W^{1,2}_{a,b}(z)  [b > a > 0, z > 0]",
            PROD_11111 => {
                "W^{g,s+1} W^{g,s-1} <= G(s-g) G(s+1) G(s-1) / (G(s) G(g) G(s-g+1) G(s-g-1)) W^{1,2} W^{g,s}  [a, b > 0, 0 < g <= 1, s - g >= 2, z > 0]"
            }
            ML_SUPERADD => "E~_s(x+y) >= G(s)/G(b) E~_s(x) E~_s(y)  [b > a > x*, s > 1, 0 < x+y < 1]",
            ML_TURAN_Z => {
                "2/(s+1) E~_{a,b+2a;3,s+2} E~_{a,b;1,s} - (1/s) (E~_{a,b+a;2,s+1})^2 >= 0  [b > a > x*, s > 1, 0 < z < 1]"
            }
            ML_EXPLB => "E~_s(z) >= exp(+G(b) z / (s G(b+a))) / G(s)  [b > a > x*, s > 1, 0 < z < 1]",
            ML_TURAN_SIGMA => "E_{s+2} E_s - s/(s+1) (E_{s+1})^2 >= 0  [a, b, s > 0, z > 0]",
            ML_UB => "E_s(z) <= G(s)/G(b) (1 - (1/s)(1 - exp(G(b) z / G(b+a))))  [b > a > 0, s > 1, z > 0]",
            ML_PROD => "E_{s+1} E_{s-1} <= G(s-1)/(G(s) G(s-2)) E_2 E_s  [b > a > 0, s >= 3, z > 0]",
        }
    }

    pub fn class(&self) -> InequalityClass {
        match self {
            SUPERADD_25 | SUPERADD_25K | LB_777 | SUPERADD_Z0 | LB_888 | ML_SUPERADD | ML_TURAN_Z | ML_EXPLB => {
                InequalityClass::Suspect
            }
            _ => InequalityClass::Asserted,
        }
    }

    pub fn axes(&self) -> Axes {
        match self {
            W_NONNEG | SUPERADD_25 | SUPERADD_25K | TURAN_26 | EXPLB_27 | UB_29 | PROD_210 | TS_FW_ALPHA
            | UB_6666 | LB_777 | IDENT_1010 => Axes::AlphaBeta,
            DOUBLING_211 => Axes::Alpha,
            SUPERADD_Z0 | TURAN_Z1 | EXPLB_Z2 | TURAN_SIGMA_Z3 | TURAN_GAMMA | UB_88 | LB_888 | UB_1010
            | PROD_11111 => Axes::AlphaBetaGammaSigma,
            TS_FW_GS => Axes::GammaSigma,
            ML_SUPERADD | ML_TURAN_Z | ML_EXPLB | ML_TURAN_SIGMA | ML_UB | ML_PROD => Axes::AlphaBetaSigma,
        }
    }

    pub fn z_axis(&self) -> ZAxis {
        match self {
            SUPERADD_25 | SUPERADD_25K | SUPERADD_Z0 | ML_SUPERADD => ZAxis::Pairs,
            W_NONNEG | TURAN_26 | EXPLB_27 | LB_777 | TURAN_Z1 | EXPLB_Z2 | LB_888 | ML_TURAN_Z | ML_EXPLB => {
                ZAxis::Unit
            }
            TS_FW_ALPHA | TS_FW_GS => ZAxis::Signed,
            _ => ZAxis::Positive,
        }
    }

    /// Slack on the normalized margin. The identity is checked to `1e-10`,
    /// since its closed form divides a difference by `z`.
    pub fn slack(&self) -> f64 {
        match self {
            IDENT_1010 => 1e-10,
            _ => super::DEFAULT_SLACK,
        }
    }

    /// Whether the stated hypothesis holds at `p`. `Err` names a missing parameter.
    pub fn hypothesis(&self, p: &Point) -> std::result::Result<bool, String> {
        let xs = x_star();
        let get = |v: Option<f64>, name: &str| v.ok_or_else(|| format!("missing parameter {name}"));
        let a = || get(p.alpha, "alpha");
        let b = || get(p.beta, "beta");
        let g = || get(p.gamma, "gamma");
        let s = || get(p.sigma, "sigma");
        let z = p.z;
        let unit = z > 0.0 && z < 1.0;
        let pair = || -> std::result::Result<bool, String> {
            let x = get(p.x, "x")?;
            let y = get(p.y, "y")?;
            Ok(x > 0.0 && y > 0.0 && x + y < 1.0)
        };
        Ok(match self {
            W_NONNEG => a()? > 0.0 && b()? > xs && unit,
            SUPERADD_25 | SUPERADD_25K => b()? > a()? && a()? > xs && pair()?,
            TURAN_26 | EXPLB_27 => b()? > a()? && a()? > xs && unit,
            UB_29 => a()? > 0.0 && at_least(b()? - a()?, 1.0) && z > 0.0,
            PROD_210 => a()? > 0.0 && at_least(b()? - a()?, 2.0) && z > 0.0,
            DOUBLING_211 => a()? > 0.0 && z > 0.0,
            TS_FW_ALPHA => b()? > a()? && a()? > 0.0 && z.is_finite(),
            UB_6666 => b()? > a()? && a()? > 0.0 && z > 0.0,
            LB_777 => b()? > a()? && a()? > 0.0 && unit,
            SUPERADD_Z0 => b()? > a()? && a()? > xs && s()? > g()? && g()? > 0.0 && pair()?,
            TURAN_Z1 | EXPLB_Z2 => b()? > a()? && a()? > xs && s()? > g()? && g()? > 0.0 && unit,
            TURAN_SIGMA_Z3 => a()? > 0.0 && b()? > 0.0 && s()? > g()? && g()? > 0.0 && z > 0.0,
            TURAN_GAMMA => a()? > 0.0 && b()? > 0.0 && g()? > 0.0 && s()? > 0.0 && z > 0.0,
            TS_FW_GS => s()? > g()? && g()? > 0.0 && z.is_finite(),
            UB_88 => b()? > a()? && a()? > 0.0 && s()? > g()? && g()? > 0.0 && z > 0.0,
            LB_888 => b()? > a()? && a()? > 0.0 && s()? > g()? && g()? > 0.0 && unit,
            UB_1010 => {
                b()? > a()? && a()? > 0.0 && g()? > 0.0 && g()? <= 1.0 && at_least(s()? - g()?, 1.0) && z > 0.0
            }
            IDENT_1010 => b()? > a()? && a()? > 0.0 && z > 0.0,
            PROD_11111 => {
                a()? > 0.0 && b()? > 0.0 && g()? > 0.0 && g()? <= 1.0 && at_least(s()? - g()?, 2.0) && z > 0.0
            }
            ML_SUPERADD => b()? > a()? && a()? > xs && s()? > 1.0 && pair()?,
            ML_TURAN_Z | ML_EXPLB => b()? > a()? && a()? > xs && s()? > 1.0 && unit,
            ML_TURAN_SIGMA => a()? > 0.0 && b()? > 0.0 && s()? > 0.0 && z > 0.0,
            ML_UB => b()? > a()? && a()? > 0.0 && s()? > 1.0 && z > 0.0,
            ML_PROD => b()? > a()? && a()? > 0.0 && at_least(s()?, 3.0) && z > 0.0,
        })
    }

    /// Both sides at `p`; the hypothesis is assumed to hold.
    pub(crate) fn sides(&self, cfg: &SeriesConfig, p: &Point) -> Result<Sides> {
        let f = Funcs { cfg };
        let a = p.alpha.unwrap_or(f64::NAN);
        let b = p.beta.unwrap_or(f64::NAN);
        let g = p.gamma.unwrap_or(f64::NAN);
        let s = p.sigma.unwrap_or(f64::NAN);
        let z = p.z;
        let (x, y) = (p.x.unwrap_or(f64::NAN), p.y.unwrap_or(f64::NAN));
        let gm = |v: f64| gamma(v);
        Ok(match self {
            W_NONNEG => Sides::new(f.w(a, b, -z)?, Relation::Ge, 0.0),
            SUPERADD_25 => Sides::new(
                f.w(a, b, -(x + y))?,
                Relation::Ge,
                f.w(a, b, -x)? * f.w(a, b, -y)? / gm(b)?,
            ),
            SUPERADD_25K => Sides::new(
                f.w(a, b, -(x + y))?,
                Relation::Ge,
                gm(b)? * f.w(a, b, -x)? * f.w(a, b, -y)?,
            ),
            TURAN_26 => Sides::new(
                f.w(a, b + 2.0 * a, -z)? * f.w(a, b, -z)?,
                Relation::Ge,
                f.w(a, b + a, -z)?.powi(2),
            ),
            EXPLB_27 => Sides::new(
                f.w(a, b, -z)?,
                Relation::Ge,
                (-gm(b)? * z / gm(b + a)?).exp() / gm(b)?,
            ),
            UB_29 => Sides::new(
                f.w(a, b, z)?,
                Relation::Le,
                gm(2.0 * a)? / gm(b)?.powi(2) * (gm(a)? * z / gm(2.0 * a)?).exp_m1() / z,
            ),
            PROD_210 => {
                let k = gm(b - a)? / (gm(b - a - 1.0)? * gm(b - a + 1.0)?);
                Sides::new(
                    f.w(a, b + 1.0, z)? * f.w(a, b - 1.0, z)?,
                    Relation::Le,
                    k * f.w(a, a + 1.0, z)? * f.w(a, b, z)?,
                )
            }
            DOUBLING_211 => Sides::new(2.0 * f.w(a, a + 3.0, z)?, Relation::Le, f.w(a, a + 2.0, z)?),
            TS_FW_ALPHA => two_sided(&f, FoxWrightSpec::new(vec![(a, a)], vec![(b, a)]), z)?,
            UB_6666 => Sides::new(
                f.w(a, b, z)?,
                Relation::Le,
                1.0 / gm(b)? + gm(2.0 * a)? * (gm(a)? * z / gm(2.0 * a)?).exp_m1() / (gm(a)? * gm(b + a)?),
            ),
            LB_777 => Sides::new(f.w(a, b, -z)?, Relation::Ge, (gm(b)? * z / gm(a + b)?).exp() / gm(b)?),
            SUPERADD_Z0 => Sides::new(
                f.gw(a, b, g, s, -(x + y))?,
                Relation::Ge,
                f.gw(a, b, g, s, -x)? * f.gw(a, b, g, s, -y)? / gm(b)?,
            ),
            TURAN_Z1 => Sides::new(
                (g + 1.0) / (s + 1.0) * f.gw(a, b + 2.0 * a, g + 2.0, s + 2.0, -z)? * f.gw(a, b, g, s, -z)?,
                Relation::Ge,
                g / s * f.gw(a, b + a, g + 1.0, s + 1.0, -z)?.powi(2),
            ),
            EXPLB_Z2 => Sides::new(
                f.gw(a, b, g, s, -z)?,
                Relation::Ge,
                (-g * gm(b)? * z / (s * gm(b + a)?)).exp() / gm(b)?,
            ),
            TURAN_SIGMA_Z3 => Sides::new(
                f.gw(a, b, g, s, z)? * f.gw(a, b, g, s + 2.0, z)?,
                Relation::Ge,
                f.gw(a, b, g, s + 1.0, z)?.powi(2),
            ),
            TURAN_GAMMA => Sides::new(
                f.gw(a, b, g, s, z)? * f.gw(a, b, g + 2.0, s, z)?,
                Relation::Ge,
                g / (g + 1.0) * f.gw(a, b, g + 1.0, s, z)?.powi(2),
            ),
            TS_FW_GS => two_sided(&f, FoxWrightSpec::new(vec![(g, 1.0)], vec![(s, 1.0)]), z)?,
            UB_88 => Sides::new(
                f.gw(a, b, g, s, z)?,
                Relation::Le,
                (1.0 + g / s * (gm(b)? * z / gm(b + a)?).exp_m1()) / gm(b)?,
            ),
            LB_888 => Sides::new(
                f.gw(a, b, g, s, -z)?,
                Relation::Ge,
                (g * gm(b)? * z / (s * gm(b + a)?)).exp() / gm(b)?,
            ),
            UB_1010 => Sides::new(f.gw(a, b, g, s, z)?, Relation::Le, unit_pair_closed_form(&f, a, b, z)?),
            IDENT_1010 => Sides::new(unit_pair_closed_form(&f, a, b, z)?, Relation::Eq, f.gw(a, b, 1.0, 2.0, z)?),
            PROD_11111 => {
                let k = gm(s - g)? * gm(s + 1.0)? * gm(s - 1.0)?
                    / (gm(s)? * gm(g)? * gm(s - g + 1.0)? * gm(s - g - 1.0)?);
                Sides::new(
                    f.gw(a, b, g, s + 1.0, z)? * f.gw(a, b, g, s - 1.0, z)?,
                    Relation::Le,
                    k * f.gw(a, b, 1.0, 2.0, z)? * f.gw(a, b, g, s, z)?,
                )
            }
            ML_SUPERADD => Sides::new(
                f.e4(a, b, 1.0, s, -(x + y))?,
                Relation::Ge,
                gm(s)? / gm(b)? * f.e4(a, b, 1.0, s, -x)? * f.e4(a, b, 1.0, s, -y)?,
            ),
            ML_TURAN_Z => Sides::new(
                2.0 / (s + 1.0) * f.e4(a, b + 2.0 * a, 3.0, s + 2.0, -z)? * f.e4(a, b, 1.0, s, -z)?,
                Relation::Ge,
                f.e4(a, b + a, 2.0, s + 1.0, -z)?.powi(2) / s,
            ),
            ML_EXPLB => Sides::new(
                f.e4(a, b, 1.0, s, -z)?,
                Relation::Ge,
                (gm(b)? * z / (s * gm(b + a)?)).exp() / gm(s)?,
            ),
            ML_TURAN_SIGMA => Sides::new(
                f.e4(a, b, 1.0, s + 2.0, z)? * f.e4(a, b, 1.0, s, z)?,
                Relation::Ge,
                s / (s + 1.0) * f.e4(a, b, 1.0, s + 1.0, z)?.powi(2),
            ),
            ML_UB => Sides::new(
                f.e4(a, b, 1.0, s, z)?,
                Relation::Le,
                gm(s)? / gm(b)? * (1.0 + (gm(b)? * z / gm(b + a)?).exp_m1() / s),
            ),
            ML_PROD => Sides::new(
                f.e4(a, b, 1.0, s + 1.0, z)? * f.e4(a, b, 1.0, s - 1.0, z)?,
                Relation::Le,
                gm(s - 1.0)? / (gm(s)? * gm(s - 2.0)?) * f.e4(a, b, 1.0, 2.0, z)? * f.e4(a, b, 1.0, s, z)?,
            ),
        })
    }
}

/// `x >= bound`, forgiving the rounding of a parameter difference.
fn at_least(x: f64, bound: f64) -> bool {
    x >= bound - 1e-12 * bound.abs().max(1.0)
}

struct Funcs<'a> {
    cfg: &'a SeriesConfig,
}

impl Funcs<'_> {
    fn w(&self, a: f64, b: f64, z: f64) -> Result<f64> {
        Ok(self.cfg.wright(WrightParams::new(a, b)?, z)?.value)
    }

    fn gw(&self, a: f64, b: f64, g: f64, s: f64, z: f64) -> Result<f64> {
        Ok(self.cfg.gen_wright(GenWrightParams::new(a, b, g, s)?, z)?.value)
    }

    fn e4(&self, b1: f64, beta1: f64, b2: f64, beta2: f64, z: f64) -> Result<f64> {
        Ok(self.cfg.ml4(b1, beta1, b2, beta2, z)?.value)
    }
}

/// `(G(b-a) W_{a,b-a}(z) - 1) / (G(b-a) z)`.
fn unit_pair_closed_form(f: &Funcs, a: f64, b: f64, z: f64) -> Result<f64> {
    let g = gamma(b - a)?;
    Ok((g * f.w(a, b - a, z)? - 1.0) / (g * z))
}

/// The worse side of the moment-based two-sided bound.
fn two_sided(f: &Funcs, spec: FoxWrightSpec, z: f64) -> Result<Sides> {
    let m = bound_moments(&spec)?;
    let value = f.cfg.fox_wright(&spec, z)?.value;
    let mut lower = Sides::new(m.lower_bound(z), Relation::Le, value);
    lower.note = Some("lower bound".into());
    let mut upper = Sides::new(value, Relation::Le, m.upper_bound(z));
    upper.note = Some("upper bound".into());
    let mut worse = if lower.margin() <= upper.margin() { lower } else { upper };
    if !moment_conditions_hold(&m) {
        worse.note = worse.note.map(|n| format!("{n}; moment conditions fail"));
    }
    Ok(worse)
}

impl fmt::Display for InequalityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InequalityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        InequalityId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown inequality id {s:?}")))
    }
}

impl Serialize for InequalityId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}
