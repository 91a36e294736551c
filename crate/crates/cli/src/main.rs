//! `wrightkit` command-line front end.
//!
//! Exit codes: 0 success, 1 evaluation error, 2 usage or configuration error,
//! 3 I/O error, 4 an asserted inequality is violated.

mod function;

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use wrightkit::audit::{audit_sweep_with, GridSpec, InequalityId};
use wrightkit::gamma::find_gamma_min;
use wrightkit::{Error, SeriesConfig};

use function::{FuncArgs, Function, Param};

pub enum CliError {
    Eval(String),
    Usage(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Eval(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Eval(m) | CliError::Usage(m) | CliError::Io(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Config(_) => CliError::Usage(e.to_string()),
            _ => CliError::Eval(e.to_string()),
        }
    }
}

fn io_err(path: &Path, e: std::io::Error) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Parser)]
#[command(name = "wrightkit", version, about = "Wright-type special functions: evaluation, tables and inequality audits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function value with its error estimate.
    #[command(allow_negative_numbers = true)]
    Eval(EvalArgs),
    /// Tabulate a function over a uniform z range.
    #[command(allow_negative_numbers = true)]
    Table(TableArgs),
    /// Sweep the inequality catalog over a parameter grid.
    Audit(AuditArgs),
    /// Print the minimizer of Gamma on the positive axis.
    Constants(ConstantsArgs),
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    func: FuncArgs,
    #[arg(long)]
    z: f64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    func: FuncArgs,
    #[arg(long)]
    z_start: f64,
    #[arg(long)]
    z_end: f64,
    /// Number of rows, at least 2; both endpoints are included.
    #[arg(long)]
    steps: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Omit the metadata line.
    #[arg(long)]
    no_meta: bool,
}

#[derive(Args)]
struct AuditArgs {
    /// Comma-separated catalog ids; all ids when omitted.
    #[arg(long)]
    ids: Option<String>,
    /// Use the built-in grid (also the behavior without `--grid`).
    #[arg(long, conflicts_with = "grid")]
    default_grid: bool,
    /// JSON grid description.
    #[arg(long)]
    grid: Option<PathBuf>,
    /// Directory for `audit_records.jsonl` and `audit_summary.csv`.
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
    /// Omit the metadata line of the records file.
    #[arg(long)]
    no_meta: bool,
}

#[derive(Args)]
struct ConstantsArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Serialize)]
struct Meta {
    tool: &'static str,
    version: &'static str,
    generated_unix: u64,
}

impl Meta {
    fn now() -> Self {
        Meta {
            tool: "wrightkit",
            version: env!("CARGO_PKG_VERSION"),
            generated_unix: SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0),
        }
    }
}

#[derive(Serialize)]
struct Row {
    z: f64,
    value: f64,
    error_estimate: f64,
}

#[derive(Serialize)]
struct EvalJson<'a> {
    function: &'static str,
    params: &'a [Param],
    reflect: bool,
    method: function::MethodArg,
    z: f64,
    value: f64,
    error_estimate: f64,
    terms_used: usize,
}

#[derive(Serialize)]
struct TableJson<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    meta: Option<Meta>,
    function: &'static str,
    params: &'a [Param],
    reflect: bool,
    method: function::MethodArg,
    rows: Vec<Row>,
}

fn describe(f: &Function) -> String {
    let mut s = String::from(f.func.name());
    for p in &f.params {
        let _ = write!(s, " {}={}", p.name, p.value);
    }
    if f.reflect {
        s.push_str(" reflect");
    }
    s
}

fn write_out(path: Option<&Path>, payload: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, payload).map_err(|e| io_err(p, e)),
        None => std::io::stdout()
            .write_all(payload.as_bytes())
            .map_err(|e| CliError::Io(format!("stdout: {e}"))),
    }
}

fn cmd_eval(cfg: &SeriesConfig, args: &EvalArgs) -> Result<u8, CliError> {
    let f = args.func.build()?;
    let e = f.eval(cfg, args.z)?;
    let line = match args.format {
        Format::Text => format!("{:?} ± {:?}", e.value, e.abs_error_estimate),
        Format::Csv => format!(
            "z,value,error_estimate\n{:?},{:?},{:?}",
            args.z, e.value, e.abs_error_estimate
        ),
        Format::Json => serde_json::to_string(&EvalJson {
            function: f.func.name(),
            params: &f.params,
            reflect: f.reflect,
            method: f.method,
            z: args.z,
            value: e.value,
            error_estimate: e.abs_error_estimate,
            terms_used: e.terms_used,
        })
        .expect("evaluation serializes"),
    };
    println!("{line}");
    Ok(0)
}

fn table_z(start: f64, end: f64, steps: usize) -> Vec<f64> {
    (0..steps)
        .map(|i| {
            if i + 1 == steps {
                end
            } else {
                start + (end - start) * i as f64 / (steps - 1) as f64
            }
        })
        .collect()
}

fn cmd_table(cfg: &SeriesConfig, args: &TableArgs) -> Result<u8, CliError> {
    if !(args.z_start.is_finite() && args.z_end.is_finite() && args.z_start < args.z_end) {
        return Err(CliError::Usage(format!(
            "z range [{}, {}] must be finite with start < end",
            args.z_start, args.z_end
        )));
    }
    if args.steps < 2 {
        return Err(CliError::Usage("--steps must be at least 2".into()));
    }
    let f = args.func.build()?;
    let rows = table_z(args.z_start, args.z_end, args.steps)
        .into_iter()
        .map(|z| {
            let e = f.eval(cfg, z)?;
            Ok(Row {
                z,
                value: e.value,
                error_estimate: e.abs_error_estimate,
            })
        })
        .collect::<Result<Vec<Row>, CliError>>()?;
    let meta = (!args.no_meta).then(Meta::now);
    let payload = match args.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&TableJson {
                meta,
                function: f.func.name(),
                params: &f.params,
                reflect: f.reflect,
                method: f.method,
                rows,
            })
            .expect("table serializes");
            s.push('\n');
            s
        }
        Format::Csv | Format::Text => {
            let sep = if args.format == Format::Csv { "," } else { " " };
            let mut s = String::new();
            if let Some(m) = meta {
                let _ = writeln!(
                    s,
                    "# {} {}; {}; generated_unix={}",
                    m.tool,
                    m.version,
                    describe(&f),
                    m.generated_unix
                );
            }
            let _ = writeln!(s, "z{sep}value{sep}error_estimate");
            for r in &rows {
                let _ = writeln!(s, "{:?}{sep}{:?}{sep}{:?}", r.z, r.value, r.error_estimate);
            }
            s
        }
    };
    write_out(args.output.as_deref(), &payload)?;
    Ok(0)
}

fn parse_ids(raw: Option<&str>) -> Result<Vec<InequalityId>, CliError> {
    match raw {
        None => Ok(InequalityId::ALL.to_vec()),
        Some(list) => list
            .split(',')
            .map(|s| s.trim())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<InequalityId>().map_err(CliError::from))
            .collect(),
    }
}

fn load_grid(path: Option<&Path>) -> Result<GridSpec, CliError> {
    let Some(path) = path else {
        return Ok(GridSpec::default());
    };
    let raw = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    serde_json::from_str(&raw).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn cmd_audit(cfg: &SeriesConfig, args: &AuditArgs) -> Result<u8, CliError> {
    let ids = parse_ids(args.ids.as_deref())?;
    let grid = load_grid(args.grid.as_deref())?;
    let report = audit_sweep_with(cfg, &ids, &grid)?;

    fs::create_dir_all(&args.out_dir).map_err(|e| io_err(&args.out_dir, e))?;
    let mut records = String::new();
    if !args.no_meta {
        records.push_str(&serde_json::json!({ "meta": Meta::now() }).to_string());
        records.push('\n');
    }
    records.push_str(&report.to_jsonl());
    let records_path = args.out_dir.join("audit_records.jsonl");
    fs::write(&records_path, records).map_err(|e| io_err(&records_path, e))?;
    let summary = report.summary_csv();
    let summary_path = args.out_dir.join("audit_summary.csv");
    fs::write(&summary_path, &summary).map_err(|e| io_err(&summary_path, e))?;

    print!("{summary}");
    let violations = report.asserted_violations();
    if violations > 0 {
        eprintln!("{violations} violation(s) of asserted inequalities");
        return Ok(4);
    }
    Ok(0)
}

fn cmd_constants(args: &ConstantsArgs) -> Result<u8, CliError> {
    let c = find_gamma_min()?;
    match args.format {
        Format::Text => {
            println!("x_star = {:.12}", c.x_star);
            println!("gamma(x_star) = {:?}", c.gamma_at_x_star);
        }
        Format::Csv => {
            println!("x_star,gamma_at_x_star");
            println!("{:?},{:?}", c.x_star, c.gamma_at_x_star);
        }
        Format::Json => println!(
            "{}",
            serde_json::json!({ "x_star": c.x_star, "gamma_at_x_star": c.gamma_at_x_star })
        ),
    }
    Ok(0)
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    if let Command::Constants(a) = &cli.command {
        return cmd_constants(a);
    }
    let cfg = SeriesConfig::from_env()?;
    match &cli.command {
        Command::Eval(a) => cmd_eval(&cfg, a),
        Command::Table(a) => cmd_table(&cfg, a),
        Command::Audit(a) => cmd_audit(&cfg, a),
        Command::Constants(_) => unreachable!(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
