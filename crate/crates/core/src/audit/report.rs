use std::fmt::Write as _;

use serde::Serialize;

use super::catalog::{InequalityClass, InequalityId};
use super::sweep::Point;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Violated,
    HypothesisNotMet,
    EvalError,
}

/// Negative arguments of the two-sided moment bounds are summarized apart
/// from the rest, since the bound is not asserted there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Segment {
    Main,
    NegativeZ,
}

impl Segment {
    pub fn name(&self) -> &'static str {
        match self {
            Segment::Main => "main",
            Segment::NegativeZ => "negative_z",
        }
    }
}

/// One evaluated `(id, point)`. `margin` is normalized and nonnegative when
/// the inequality holds as stated.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditRecord {
    pub id: InequalityId,
    pub point: Point,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub margin: Option<f64>,
    pub status: Status,
    pub segment: Segment,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdSummary {
    pub id: InequalityId,
    pub class: InequalityClass,
    pub segment: Segment,
    pub points: usize,
    pub holds: usize,
    pub violated: usize,
    pub hypothesis_not_met: usize,
    pub eval_error: usize,
    pub worst_margin: Option<f64>,
    pub worst_point: Option<Point>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    pub records: Vec<AuditRecord>,
    pub summary: Vec<IdSummary>,
}

impl AuditReport {
    /// Builds the per-`(id, segment)` summary from `records`, in first-seen order.
    pub fn from_records(records: Vec<AuditRecord>) -> Self {
        let mut summary: Vec<IdSummary> = Vec::new();
        for r in &records {
            let idx = match summary.iter().position(|s| s.id == r.id && s.segment == r.segment) {
                Some(i) => i,
                None => {
                    summary.push(IdSummary {
                        id: r.id,
                        class: r.id.class(),
                        segment: r.segment,
                        points: 0,
                        holds: 0,
                        violated: 0,
                        hypothesis_not_met: 0,
                        eval_error: 0,
                        worst_margin: None,
                        worst_point: None,
                    });
                    summary.len() - 1
                }
            };
            let s = &mut summary[idx];
            s.points += 1;
            match r.status {
                Status::Holds => s.holds += 1,
                Status::Violated => s.violated += 1,
                Status::HypothesisNotMet => s.hypothesis_not_met += 1,
                Status::EvalError => s.eval_error += 1,
            }
            if let Some(m) = r.margin {
                if s.worst_margin.map_or(true, |w| m < w) {
                    s.worst_margin = Some(m);
                    s.worst_point = Some(r.point);
                }
            }
        }
        summary.sort_by(|a, b| a.id.name().cmp(b.id.name()).then(a.segment.cmp(&b.segment)));
        Self { records, summary }
    }

    /// Violations of asserted entries in the main segment.
    pub fn asserted_violations(&self) -> usize {
        self.records
            .iter()
            .filter(|r| r.id.class() == InequalityClass::Asserted && r.segment == Segment::Main)
            .filter(|r| r.status == Status::Violated)
            .count()
    }

    /// One JSON object per record and line.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        }
        out
    }

    /// Summary table with header
    /// `id,class,segment,points,holds,violated,hypothesis_not_met,eval_error,worst_margin,worst_point`.
    pub fn summary_csv(&self) -> String {
        let mut out =
            String::from("id,class,segment,points,holds,violated,hypothesis_not_met,eval_error,worst_margin,worst_point\n");
        for s in &self.summary {
            let class = match s.class {
                InequalityClass::Asserted => "asserted",
                InequalityClass::Suspect => "suspect",
            };
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{}",
                s.id,
                class,
                s.segment.name(),
                s.points,
                s.holds,
                s.violated,
                s.hypothesis_not_met,
                s.eval_error,
                s.worst_margin.map(|m| format!("{m:?}")).unwrap_or_default(),
                s.worst_point.map(|p| p.compact()).unwrap_or_default(),
            );
        }
        out
    }
}
