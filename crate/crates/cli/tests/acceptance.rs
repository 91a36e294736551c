//! Acceptance criteria AC1..AC9, one PASS/FAIL line each. Exits nonzero if
//! any criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use wrightkit::audit::{audit_sweep, evaluate_inequality, GridSpec, InequalityId, Point, Segment, Status};
use wrightkit::gamma::{gamma, x_star};
use wrightkit::integral::{gen_wright_via_beta_kernel, gen_wright_via_integral, wright_via_integral, QuadratureSpec};
use wrightkit::probes::{check_completely_monotone, check_log_convex_arg, check_log_convex_param};
use wrightkit::{
    fox_wright, gen_wright, gen_wright_derivative, ml4, wright, wright_derivative, Evaluation, FoxWrightSpec,
    GenWrightParams, WrightParams,
};

type Outcome = Result<String, String>;

const ALPHAS: [f64; 4] = [0.5, 1.0, 1.5, 2.0];
const BETA_OFFSETS: [f64; 3] = [0.5, 1.0, 2.0];
const ZS: [f64; 7] = [-0.9, -0.5, 0.0, 0.5, 1.0, 2.0, 5.0];
const GAMMA_SIGMA: [(f64, f64); 4] = [(0.5, 1.5), (0.5, 2.5), (1.0, 2.0), (1.0, 3.0)];

fn ab_grid() -> Vec<(f64, f64)> {
    ALPHAS
        .iter()
        .flat_map(|&a| BETA_OFFSETS.iter().map(move |&d| (a, a + d)))
        .collect()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

fn failures(what: &str, bad: Vec<String>, total: usize) -> Outcome {
    if bad.is_empty() {
        Ok(format!("{total} {what}"))
    } else {
        let shown: Vec<_> = bad.iter().take(4).cloned().collect();
        Err(format!("{} of {total} {what} fail; e.g. {}", bad.len(), shown.join("; ")))
    }
}

fn ac1() -> Outcome {
    let q = QuadratureSpec::default();
    let mut bad = Vec::new();
    let mut n = 0;
    let mut cmp = |label: String, s: Evaluation, i: wrightkit::Result<Evaluation>| {
        n += 1;
        match i {
            Ok(i) => {
                let diff = (s.value - i.value).abs();
                let tol = 1e-8f64.max(3.0 * (s.abs_error_estimate + i.abs_error_estimate));
                if !(diff <= tol) {
                    bad.push(format!("{label}: |{} - {}| = {diff:e} > {tol:e}", s.value, i.value));
                }
            }
            Err(e) => bad.push(format!("{label}: {e}")),
        }
    };
    for (a, b) in ab_grid() {
        let p = WrightParams::new(a, b).unwrap();
        for &z in &ZS {
            cmp(format!("W({a},{b},{z})"), wright(p, z).unwrap(), wright_via_integral(p, z, &q));
            for &(g, s) in &GAMMA_SIGMA {
                let gp = GenWrightParams::new(a, b, g, s).unwrap();
                let series = gen_wright(gp, z).unwrap();
                cmp(format!("W^({g},{s})({a},{b},{z}) kernel"), series, gen_wright_via_beta_kernel(gp, z, &q));
                cmp(format!("W^({g},{s})({a},{b},{z}) integral"), series, gen_wright_via_integral(gp, z, &q));
            }
        }
    }
    failures("series/quadrature pairs", bad, n)
}

fn ac2() -> Outcome {
    let h = 1e-5;
    let mut bad = Vec::new();
    let mut n = 0;
    for (a, b) in ab_grid() {
        let p = WrightParams::new(a, b).unwrap();
        for &z in ZS.iter().filter(|z| z.abs() <= 3.0) {
            let fd = (wright(p, z + h).unwrap().value - wright(p, z - h).unwrap().value) / (2.0 * h);
            let d = wright_derivative(p, z).unwrap().value;
            n += 1;
            if !((fd - d).abs() <= 1e-6) {
                bad.push(format!("W'({a},{b},{z}): {fd} vs {d}"));
            }
            for &(g, s) in &GAMMA_SIGMA {
                let gp = GenWrightParams::new(a, b, g, s).unwrap();
                let fd = (gen_wright(gp, z + h).unwrap().value - gen_wright(gp, z - h).unwrap().value) / (2.0 * h);
                let d = gen_wright_derivative(gp, z).unwrap().value;
                n += 1;
                if !((fd - d).abs() <= 1e-6) {
                    bad.push(format!("W^({g},{s})'({a},{b},{z}): {fd} vs {d}"));
                }
            }
        }
    }
    failures("derivative checks", bad, n)
}

fn ac3() -> Outcome {
    let tol = 1e-10;
    let mut bad = Vec::new();
    let mut n = 0;
    let mut ident = Vec::new();
    let mut check = |label: String, x: f64, y: f64| {
        n += 1;
        if !(rel(x, y) <= tol) {
            bad.push(format!("{label}: {x} vs {y}"));
        }
    };
    for (a, b) in ab_grid() {
        let p = WrightParams::new(a, b).unwrap();
        let inner = WrightParams::new(a, b - a).unwrap();
        let g_ba = gamma(b - a).unwrap();
        for &z in &ZS {
            let w = wright(p, z).unwrap().value;
            for &g in &[0.5, 1.0, 1.5, 2.0, 3.0] {
                let gw = gen_wright(GenWrightParams::new(a, b, g, g).unwrap(), z).unwrap().value;
                check(format!("gamma=sigma={g} ({a},{b},{z})"), gw, w);
            }
            check(format!("ml4 unit pair ({a},{b},{z})"), ml4(a, b, 1.0, 1.0, z).unwrap().value, w);
            for &s in &[1.5, 2.0, 2.5, 3.0] {
                let gw = gen_wright(GenWrightParams::new(a, b, 1.0, s).unwrap(), z).unwrap().value;
                let m = gamma(s).unwrap() * ml4(a, b, 1.0, s, z).unwrap().value;
                check(format!("W^(1,{s}) vs ml4 ({a},{b},{z})"), gw, m);
            }
            if z != 0.0 {
                let lhs = (g_ba * wright(inner, z).unwrap().value - 1.0) / (g_ba * z);
                let rhs = gen_wright(GenWrightParams::new(a, b, 1.0, 2.0).unwrap(), z).unwrap().value;
                check(format!("W^(1,2) closed form ({a},{b},{z})"), lhs, rhs);
            }
            if z > 0.0 {
                ident.push(evaluate_inequality(InequalityId::IDENT_1010, &Point::wright(a, b, z)));
            }
        }
    }
    n += ident.len();
    for r in ident.iter().filter(|r| r.status != Status::Holds) {
        bad.push(format!("IDENT_1010 at {}: {:?} margin {:?}", r.point.compact(), r.status, r.margin));
    }
    failures("identity checks", bad, n)
}

const AC4_SETS: [(f64, f64, f64, f64); 10] = [
    (1.5, 2.0, 0.5, 1.0),
    (1.5, 2.5, 1.0, 2.0),
    (1.6, 2.0, 1.0, 2.0),
    (1.75, 3.0, 0.5, 2.5),
    (2.0, 2.5, 1.0, 3.0),
    (2.0, 3.0, 0.5, 1.5),
    (2.0, 4.0, 1.0, 1.5),
    (2.5, 3.0, 2.0, 3.0),
    (3.0, 3.5, 0.5, 4.0),
    (1.5, 3.5, 1.0, 5.0),
];

fn ac4() -> Outcome {
    let (lo, hi) = (0.05, 0.95);
    let mut bad = Vec::new();
    let mut n = 0;
    for &(a, b, g, s) in &AC4_SETS {
        assert!(b > a && a > x_star() && s > g && g > 0.0);
        let p = WrightParams::new(a, b).unwrap();
        let gp = GenWrightParams::new(a, b, g, s).unwrap();
        let w = |z: f64| Ok(wright(p, -z)?.value);
        let gw = |z: f64| Ok(gen_wright(gp, -z)?.value);

        let cm = check_completely_monotone(w, lo, hi, 6, 0.01, 25).unwrap();
        let gcm = check_completely_monotone(gw, lo, hi, 6, 0.01, 25).unwrap();
        let lc = check_log_convex_arg(w, lo, hi, 25).unwrap();
        let glc = check_log_convex_arg(gw, lo, hi, 25).unwrap();
        for (label, r) in [("cm W", cm), ("cm W^", gcm), ("log-convex W", lc), ("log-convex W^", glc)] {
            n += 1;
            if !r.passed {
                bad.push(format!(
                    "{label} ({a},{b},{g},{s}): margin {:e} at {:?}",
                    r.worst_margin, r.worst_point
                ));
            }
        }
        // sigma in [1, 5] needs sigma >= gamma
        if g <= 1.0 {
            for &z in &[0.5, 1.0, 2.0] {
                let fam = |sig: f64| Ok(gen_wright(GenWrightParams::new(a, b, g, sig)?, z)?.value);
                let r = check_log_convex_param(fam, 1.0, 5.0, 25).unwrap();
                n += 1;
                if !r.passed {
                    bad.push(format!("log-convex in sigma ({a},{b},{g}) z={z}: margin {:e}", r.worst_margin));
                }
            }
        }
    }
    failures("probes", bad, n)
}

const AC5_IDS: [InequalityId; 19] = [
    InequalityId::W_NONNEG,
    InequalityId::TURAN_26,
    InequalityId::EXPLB_27,
    InequalityId::UB_29,
    InequalityId::PROD_210,
    InequalityId::DOUBLING_211,
    InequalityId::UB_6666,
    InequalityId::TURAN_Z1,
    InequalityId::EXPLB_Z2,
    InequalityId::TURAN_SIGMA_Z3,
    InequalityId::TURAN_GAMMA,
    InequalityId::UB_88,
    InequalityId::UB_1010,
    InequalityId::PROD_11111,
    InequalityId::ML_TURAN_SIGMA,
    InequalityId::ML_UB,
    InequalityId::ML_PROD,
    InequalityId::TS_FW_ALPHA,
    InequalityId::TS_FW_GS,
];

fn ac5() -> Outcome {
    let report = audit_sweep(&AC5_IDS, &GridSpec::default()).map_err(|e| e.to_string())?;
    let mut bad = Vec::new();
    let mut evaluated = 0;
    for s in report.summary.iter().filter(|s| s.segment == Segment::Main) {
        evaluated += s.holds + s.violated;
        if s.eval_error > 0 {
            bad.push(format!("{} {} eval errors", s.id, s.eval_error));
        }
        if s.violated > 0 {
            bad.push(format!(
                "{} {}/{} violated, worst {:e} at {}",
                s.id,
                s.violated,
                s.holds + s.violated,
                s.worst_margin.unwrap_or(f64::NAN),
                s.worst_point.map(|p| p.compact()).unwrap_or_default()
            ));
        }
    }
    if bad.is_empty() {
        Ok(format!("{evaluated} points within hypotheses, no violations"))
    } else {
        Err(format!("{} ids with violations: {}", bad.len(), bad.join("; ")))
    }
}

fn ac6() -> Outcome {
    let ids = [
        InequalityId::LB_777,
        InequalityId::LB_888,
        InequalityId::ML_EXPLB,
        InequalityId::SUPERADD_25,
        InequalityId::SUPERADD_25K,
    ];
    let report = audit_sweep(&ids, &GridSpec::default()).map_err(|e| e.to_string())?;
    let violations: Vec<_> = report.records.iter().filter(|r| r.status == Status::Violated).collect();
    for r in &violations {
        if evaluate_inequality(r.id, &r.point) != **r {
            return Err(format!("violation of {} at {} does not reproduce", r.id, r.point.compact()));
        }
    }
    let near_zero = violations
        .iter()
        .any(|r| r.id == InequalityId::LB_777 && r.point.z <= 0.05);
    if !near_zero {
        return Err("no LB_777 violation at z <= 0.05".into());
    }
    Ok(format!("{} records, {} violations reproduced", report.records.len(), violations.len()))
}

fn ac7() -> Outcome {
    let x = x_star();
    if (x - 1.461632144).abs() <= 1e-6 {
        Ok(format!("x_star = {x:?}"))
    } else {
        Err(format!("x_star = {x:?}"))
    }
}

fn ac8() -> Outcome {
    let mut bad = Vec::new();
    for &(a, b) in &[(1u32, 1u32), (1, 2)] {
        let exact = common::wright_dd(a, b, 1.0);
        let v = wright(WrightParams::new(a as f64, b as f64).unwrap(), 1.0).unwrap().value;
        if !(rel(v, exact) <= 1e-12) {
            bad.push(format!("W({a},{b},1) = {v} vs {exact}"));
        }
    }
    let s = FoxWrightSpec::new(vec![(1.0, 1.0)], vec![(1.0, 1.0)]);
    for &z in &[-1.0f64, 0.0, 1.0, 3.0] {
        let v = fox_wright(&s, z).unwrap().value;
        if !(rel(v, z.exp()) <= 1e-12) {
            bad.push(format!("1Psi1({z}) = {v} vs {}", z.exp()));
        }
    }
    failures("oracle values", bad, 6)
}

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wrightkit"))
        .args(args)
        .env_remove("WRIGHTKIT_TERM_BUDGET")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap_or(-1)
}

fn eval_json(z: &str) -> Result<f64, String> {
    let o = bin(&[
        "eval", "--func", "wright", "--alpha", "1.5", "--beta", "2", "--reflect", "--z", z, "--format", "json",
    ]);
    if code(&o) != 0 {
        return Err(format!("eval --z {z} exited {}", code(&o)));
    }
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).map_err(|e| e.to_string())?;
    v["value"].as_f64().ok_or_else(|| "eval json lacks value".into())
}

fn ac9_table_round_trip(dir: &Path) -> Result<usize, String> {
    let csv = dir.join("t.csv");
    let json = dir.join("t.json");
    let base = [
        "table", "--func", "wright", "--alpha", "1.5", "--beta", "2", "--reflect", "--z-start", "0.1", "--z-end",
        "0.9", "--steps", "9",
    ];
    for (path, fmt) in [(&csv, "csv"), (&json, "json")] {
        let mut args = base.to_vec();
        args.extend(["--format", fmt, "--output", path.to_str().unwrap()]);
        let o = bin(&args);
        if code(&o) != 0 {
            return Err(format!("table --format {fmt} exited {}", code(&o)));
        }
    }
    let text = fs::read_to_string(&csv).map_err(|e| e.to_string())?;
    let mut rows = 0;
    for line in text.lines().filter(|l| !l.starts_with('#')).skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        let value: f64 = cols[1].parse().map_err(|_| format!("bad row {line}"))?;
        if eval_json(cols[0])?.to_bits() != value.to_bits() {
            return Err(format!("csv row z={} does not re-evaluate bit-exactly", cols[0]));
        }
        rows += 1;
    }
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(&json).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    for row in doc["rows"].as_array().ok_or("json table lacks rows")? {
        let z = row["z"].as_f64().ok_or("row lacks z")?;
        let value = row["value"].as_f64().ok_or("row lacks value")?;
        if eval_json(&format!("{z:?}"))?.to_bits() != value.to_bits() {
            return Err(format!("json row z={z:?} does not re-evaluate bit-exactly"));
        }
        rows += 1;
    }
    if rows != 18 {
        return Err(format!("expected 18 rows, read {rows}"));
    }
    Ok(rows)
}

fn ac9() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let rows = ac9_table_round_trip(dir.path())?;

    let audit = |ids: &str, out: &str| {
        let out = dir.path().join(out);
        let o = bin(&["audit", "--ids", ids, "--default-grid", "--no-meta", "--out-dir", out.to_str().unwrap()]);
        (o, out)
    };
    let (suspect, _) = audit("LB_777", "suspect");
    if code(&suspect) != 0 {
        return Err(format!("audit of a suspect id exited {}", code(&suspect)));
    }
    if code(&audit("NO_SUCH_ID", "bad").0) != 2 {
        return Err("unknown id does not exit 2".into());
    }
    // exit 4 exactly when the summary reports an asserted violation
    for id in ["TURAN_26", "UB_6666"] {
        let (o, out) = audit(id, id);
        let summary = fs::read_to_string(out.join("audit_summary.csv")).map_err(|e| e.to_string())?;
        let violated: usize = summary
            .lines()
            .nth(1)
            .and_then(|l| l.split(',').nth(5))
            .and_then(|v| v.parse().ok())
            .ok_or("summary row unreadable")?;
        let expected = if violated > 0 { 4 } else { 0 };
        if code(&o) != expected {
            return Err(format!("audit {id}: {violated} violations but exit {}", code(&o)));
        }
    }
    let missing = dir.path().join("missing.json");
    if code(&bin(&["audit", "--grid", missing.to_str().unwrap()])) != 3 {
        return Err("unreadable grid does not exit 3".into());
    }
    if code(&bin(&["eval", "--func", "wright", "--alpha", "1", "--beta", "-1", "--z", "0"])) != 1 {
        return Err("pole does not exit 1".into());
    }

    let (_, first) = audit("LB_777,SUPERADD_25,ML_UB", "run1");
    let (_, second) = audit("LB_777,SUPERADD_25,ML_UB", "run2");
    for name in ["audit_records.jsonl", "audit_summary.csv"] {
        let a = fs::read(first.join(name)).map_err(|e| e.to_string())?;
        let b = fs::read(second.join(name)).map_err(|e| e.to_string())?;
        if a != b || a.is_empty() {
            return Err(format!("{name} differs between identical runs"));
        }
    }
    Ok(format!("{rows} table rows round-trip, exit codes per contract, audit output deterministic"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("AC1", ac1),
        ("AC2", ac2),
        ("AC3", ac3),
        ("AC4", ac4),
        ("AC5", ac5),
        ("AC6", ac6),
        ("AC7", ac7),
        ("AC8", ac8),
        ("AC9", ac9),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("{name} PASS {detail}"),
            Err(detail) => {
                failed += 1;
                println!("{name} FAIL {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
