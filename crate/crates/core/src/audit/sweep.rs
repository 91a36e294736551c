use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::catalog::{Axes, InequalityId, ZAxis};
use super::report::{AuditRecord, AuditReport, Segment, Status};
use crate::error::{Error, Result};
use crate::gamma::x_star;
use crate::series::SeriesConfig;

/// A sweep point. Only the parameters an entry depends on are set; `x, y`
/// are the summands of super-additivity entries, whose `z` is `x + y`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<f64>,
    pub z: f64,
}

impl Point {
    pub fn wright(alpha: f64, beta: f64, z: f64) -> Self {
        Self {
            alpha: Some(alpha),
            beta: Some(beta),
            z,
            ..Self::default()
        }
    }

    pub fn gen_wright(alpha: f64, beta: f64, gamma: f64, sigma: f64, z: f64) -> Self {
        Self {
            gamma: Some(gamma),
            sigma: Some(sigma),
            ..Self::wright(alpha, beta, z)
        }
    }

    pub fn ml(alpha: f64, beta: f64, sigma: f64, z: f64) -> Self {
        Self {
            sigma: Some(sigma),
            ..Self::wright(alpha, beta, z)
        }
    }

    /// Replaces the argument by the pair `(x, y)`, `z = x + y`.
    pub fn with_pair(self, x: f64, y: f64) -> Self {
        Self {
            x: Some(x),
            y: Some(y),
            z: x + y,
            ..self
        }
    }

    fn fields(&self) -> [Option<f64>; 7] {
        [self.alpha, self.beta, self.gamma, self.sigma, self.x, self.y, Some(self.z)]
    }

    /// Lexicographic order over `(alpha, beta, gamma, sigma, x, y, z)`, unset first.
    pub fn total_cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.fields().iter().zip(other.fields().iter()) {
            let o = match (a, b) {
                (None, None) => Ordering::Equal,
                (None, Some(_)) => Ordering::Less,
                (Some(_), None) => Ordering::Greater,
                (Some(a), Some(b)) => a.total_cmp(b),
            };
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    }

    /// `alpha=1.5;beta=2;z=0.5`
    pub fn compact(&self) -> String {
        let names = ["alpha", "beta", "gamma", "sigma", "x", "y", "z"];
        names
            .iter()
            .zip(self.fields())
            .filter_map(|(n, v)| v.map(|v| format!("{n}={v:?}")))
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// Cartesian sweep description. `beta` values are `alpha + beta_offsets`,
/// `sigma` values `gamma + sigma_offsets`; the Mittag-Leffler `sigma` axis is
/// the sorted union of all such `sigma`. `z_extra` applies to entries stated
/// for all `z > 0`, `z_negative` to the two-sided moment bounds, and
/// `pair_values` spans the triangular `(x <= y)` grid of super-additivity pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GridSpec {
    pub alpha: Vec<f64>,
    pub beta_offsets: Vec<f64>,
    pub gamma: Vec<f64>,
    pub sigma_offsets: Vec<f64>,
    pub z_unit: Vec<f64>,
    pub z_extra: Vec<f64>,
    pub z_negative: Vec<f64>,
    pub pair_values: Vec<f64>,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            alpha: vec![0.5, 1.0, 1.5, 2.0, x_star() + 0.1],
            beta_offsets: vec![0.5, 1.0, 2.0],
            gamma: vec![0.5, 1.0],
            sigma_offsets: vec![0.5, 1.0, 2.0, 3.0],
            z_unit: vec![0.01, 0.1, 0.25, 0.5, 0.75, 0.9],
            z_extra: vec![1.5, 3.0, 5.0],
            z_negative: vec![-0.9, -0.5, -0.1],
            pair_values: vec![0.05, 0.15, 0.25, 0.35, 0.45],
        }
    }
}

impl GridSpec {
    pub fn validate(&self) -> Result<()> {
        let required = [
            ("alpha", &self.alpha),
            ("beta_offsets", &self.beta_offsets),
            ("gamma", &self.gamma),
            ("sigma_offsets", &self.sigma_offsets),
            ("z_unit", &self.z_unit),
            ("pair_values", &self.pair_values),
        ];
        for (name, axis) in required {
            if axis.is_empty() {
                return Err(Error::Config(format!("grid axis {name} is empty")));
            }
        }
        let all = required
            .iter()
            .map(|(n, a)| (*n, *a))
            .chain([("z_extra", &self.z_extra), ("z_negative", &self.z_negative)]);
        for (name, axis) in all {
            if let Some(v) = axis.iter().find(|v| !v.is_finite()) {
                return Err(Error::Config(format!("grid axis {name} has non-finite value {v}")));
            }
        }
        Ok(())
    }

    fn alpha_beta(&self) -> Vec<(f64, f64)> {
        let mut out = Vec::new();
        for &a in &self.alpha {
            for &d in &self.beta_offsets {
                out.push((a, a + d));
            }
        }
        out
    }

    fn gamma_sigma(&self) -> Vec<(f64, f64)> {
        let mut out = Vec::new();
        for &g in &self.gamma {
            for &d in &self.sigma_offsets {
                out.push((g, g + d));
            }
        }
        out
    }

    fn ml_sigma(&self) -> Vec<f64> {
        let mut s: Vec<f64> = self.gamma_sigma().into_iter().map(|p| p.1).collect();
        s.sort_by(f64::total_cmp);
        s.dedup();
        s
    }

    fn pairs(&self) -> Vec<(f64, f64)> {
        let mut v = self.pair_values.clone();
        v.sort_by(f64::total_cmp);
        v.dedup();
        let mut out = Vec::new();
        for i in 0..v.len() {
            for j in i..v.len() {
                out.push((v[i], v[j]));
            }
        }
        out
    }

    fn z_values(&self, axis: ZAxis) -> Vec<f64> {
        match axis {
            ZAxis::Unit | ZAxis::Pairs => self.z_unit.clone(),
            ZAxis::Positive => self.z_unit.iter().chain(&self.z_extra).copied().collect(),
            ZAxis::Signed => self.z_negative.iter().chain(&self.z_unit).chain(&self.z_extra).copied().collect(),
        }
    }

    /// All points an entry is evaluated at.
    pub fn points(&self, id: InequalityId) -> Vec<Point> {
        let bases: Vec<Point> = match id.axes() {
            Axes::AlphaBeta => self.alpha_beta().into_iter().map(|(a, b)| Point::wright(a, b, 0.0)).collect(),
            Axes::Alpha => self.alpha.iter().map(|&a| Point::wright(a, a + 2.0, 0.0)).collect(),
            Axes::AlphaBetaGammaSigma => {
                let gs = self.gamma_sigma();
                self.alpha_beta()
                    .into_iter()
                    .flat_map(|(a, b)| gs.iter().map(move |&(g, s)| Point::gen_wright(a, b, g, s, 0.0)))
                    .collect()
            }
            Axes::AlphaBetaSigma => {
                let ss = self.ml_sigma();
                self.alpha_beta()
                    .into_iter()
                    .flat_map(|(a, b)| ss.iter().map(move |&s| Point::ml(a, b, s, 0.0)))
                    .collect()
            }
            Axes::GammaSigma => self
                .gamma_sigma()
                .into_iter()
                .map(|(g, s)| Point {
                    gamma: Some(g),
                    sigma: Some(s),
                    ..Point::default()
                })
                .collect(),
        };
        let mut out = Vec::new();
        for base in bases {
            if id.z_axis() == ZAxis::Pairs {
                out.extend(self.pairs().into_iter().map(|(x, y)| base.with_pair(x, y)));
            } else {
                out.extend(self.z_values(id.z_axis()).into_iter().map(|z| Point { z, ..base }));
            }
        }
        out
    }
}

/// [`evaluate_inequality_with`] under the default series configuration.
pub fn evaluate_inequality(id: InequalityId, point: &Point) -> AuditRecord {
    evaluate_inequality_with(&SeriesConfig::default(), id, point)
}

/// Evaluates one catalog entry at one point. Points outside the hypothesis
/// are refused with status `hypothesis_not_met`; evaluation failures become
/// `eval_error` records carrying the cause.
pub fn evaluate_inequality_with(cfg: &SeriesConfig, id: InequalityId, point: &Point) -> AuditRecord {
    let segment = if id.z_axis() == ZAxis::Signed && point.z < 0.0 {
        Segment::NegativeZ
    } else {
        Segment::Main
    };
    let mut record = AuditRecord {
        id,
        point: *point,
        segment,
        lhs: None,
        rhs: None,
        margin: None,
        status: Status::HypothesisNotMet,
        note: None,
    };
    match id.hypothesis(point) {
        Ok(true) => {}
        Ok(false) => return record,
        Err(missing) => {
            record.note = Some(missing);
            return record;
        }
    }
    match id.sides(cfg, point) {
        Err(e) => {
            record.status = Status::EvalError;
            record.note = Some(e.to_string());
        }
        Ok(sides) => {
            let margin = sides.margin();
            record.lhs = Some(sides.lhs);
            record.rhs = Some(sides.rhs);
            record.note = sides.note;
            if !margin.is_finite() {
                record.status = Status::EvalError;
                record.note = Some(format!("non-finite sides lhs={:?} rhs={:?}", sides.lhs, sides.rhs));
                return record;
            }
            record.margin = Some(margin);
            let slack = id.slack();
            record.status = if margin >= -slack { Status::Holds } else { Status::Violated };
            if margin < 0.0 && margin >= -slack {
                let n = format!("negative margin within slack {slack:e}");
                record.note = Some(match record.note.take() {
                    Some(prev) => format!("{prev}; {n}"),
                    None => n,
                });
            }
        }
    }
    record
}

/// [`audit_sweep_with`] under the default series configuration.
pub fn audit_sweep(ids: &[InequalityId], grid: &GridSpec) -> Result<AuditReport> {
    audit_sweep_with(&SeriesConfig::default(), ids, grid)
}

/// One record per `(id, grid point)`, sorted by id name and then point.
pub fn audit_sweep_with(cfg: &SeriesConfig, ids: &[InequalityId], grid: &GridSpec) -> Result<AuditReport> {
    grid.validate()?;
    if ids.is_empty() {
        return Err(Error::Config("no inequality ids selected".into()));
    }
    let mut ids = ids.to_vec();
    ids.sort_by_key(|id| id.name());
    ids.dedup();
    let mut records = Vec::new();
    for id in ids {
        let mut points = grid.points(id);
        points.sort_by(Point::total_cmp);
        points.dedup_by(|a, b| a.total_cmp(b) == Ordering::Equal);
        records.extend(points.iter().map(|p| evaluate_inequality_with(cfg, id, p)));
    }
    Ok(AuditReport::from_records(records))
}
