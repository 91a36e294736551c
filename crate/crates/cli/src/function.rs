use clap::{Args, ValueEnum};
use serde::Serialize;
use wrightkit::integral::{gen_wright_via_integral, wright_via_integral, QuadratureSpec};
use wrightkit::{
    Evaluation, FoxWrightSpec, GenWrightParams, MittagLefflerSpec, SeriesConfig, WrightParams,
};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Func {
    Wright,
    GenWright,
    FoxWright,
    Ml,
    Ml4,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Wright => "wright",
            Func::GenWright => "gen-wright",
            Func::FoxWright => "fox-wright",
            Func::Ml => "ml",
            Func::Ml4 => "ml4",
        }
    }

    fn keys(self) -> &'static [&'static str] {
        match self {
            Func::Wright => &["alpha", "beta"],
            Func::GenWright => &["alpha", "beta", "gamma", "sigma"],
            Func::FoxWright => &["upper", "lower"],
            Func::Ml => &["pairs"],
            Func::Ml4 => &["b1", "beta1", "b2", "beta2"],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodArg {
    Series,
    Integral,
}

/// Function selector and its parameters.
#[derive(Debug, Clone, Args)]
pub struct FuncArgs {
    #[arg(long, value_enum)]
    pub func: Func,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long)]
    pub gamma: Option<f64>,
    #[arg(long)]
    pub sigma: Option<f64>,
    /// Fox-Wright numerator pairs, `a:alpha,a:alpha,...`
    #[arg(long)]
    pub upper: Option<String>,
    /// Fox-Wright denominator pairs, `b:beta,...`
    #[arg(long)]
    pub lower: Option<String>,
    /// Mittag-Leffler pairs, `B:beta,...`
    #[arg(long)]
    pub pairs: Option<String>,
    #[arg(long)]
    pub b1: Option<f64>,
    #[arg(long)]
    pub beta1: Option<f64>,
    #[arg(long)]
    pub b2: Option<f64>,
    #[arg(long)]
    pub beta2: Option<f64>,
    /// Evaluate at `-z`.
    #[arg(long)]
    pub reflect: bool,
    /// Integral evaluation needs `beta > alpha > 0` (wright, gen-wright only).
    #[arg(long, value_enum, default_value = "series")]
    pub method: MethodArg,
}

/// Parameter values in a fixed order, for output.
#[derive(Debug, Clone, Serialize)]
pub struct Param {
    pub name: &'static str,
    pub value: String,
}

#[derive(Debug, Clone)]
enum Spec {
    Wright(WrightParams),
    GenWright(GenWrightParams),
    FoxWright(FoxWrightSpec),
    Ml(MittagLefflerSpec),
    Ml4([f64; 4]),
}

#[derive(Debug, Clone)]
pub struct Function {
    pub func: Func,
    pub params: Vec<Param>,
    pub reflect: bool,
    pub method: MethodArg,
    spec: Spec,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_pairs(flag: &str, raw: &str) -> Result<Vec<(f64, f64)>, CliError> {
    if raw.trim().is_empty() {
        return Ok(Vec::new());
    }
    raw.split(',')
        .map(|item| {
            let (a, b) = item
                .split_once(':')
                .ok_or_else(|| usage(format!("--{flag}: expected `value:slope`, got {item:?}")))?;
            let num = |s: &str| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| usage(format!("--{flag}: {s:?} is not a number")))
            };
            Ok((num(a)?, num(b)?))
        })
        .collect()
}

fn fmt_pairs(pairs: &[(f64, f64)]) -> String {
    pairs
        .iter()
        .map(|(a, b)| format!("{a:?}:{b:?}"))
        .collect::<Vec<_>>()
        .join(",")
}

impl FuncArgs {
    fn given(&self) -> Vec<&'static str> {
        let present = [
            ("alpha", self.alpha.is_some()),
            ("beta", self.beta.is_some()),
            ("gamma", self.gamma.is_some()),
            ("sigma", self.sigma.is_some()),
            ("upper", self.upper.is_some()),
            ("lower", self.lower.is_some()),
            ("pairs", self.pairs.is_some()),
            ("b1", self.b1.is_some()),
            ("beta1", self.beta1.is_some()),
            ("b2", self.b2.is_some()),
            ("beta2", self.beta2.is_some()),
        ];
        present.iter().filter(|(_, p)| *p).map(|(k, _)| *k).collect()
    }

    /// Checks the parameter keys against the selected function and builds it.
    pub fn build(&self) -> Result<Function, CliError> {
        let keys = self.func.keys();
        for k in self.given() {
            if !keys.contains(&k) {
                return Err(usage(format!("--{k} is not a parameter of {}", self.func.name())));
            }
        }
        let need = |v: Option<f64>, k: &str| v.ok_or_else(|| usage(format!("{} needs --{k}", self.func.name())));
        if self.method == MethodArg::Integral && !matches!(self.func, Func::Wright | Func::GenWright) {
            return Err(usage(format!("--method integral is not available for {}", self.func.name())));
        }
        let p = |name, v: f64| Param {
            name,
            value: format!("{v:?}"),
        };
        let (spec, params) = match self.func {
            Func::Wright => {
                let (a, b) = (need(self.alpha, "alpha")?, need(self.beta, "beta")?);
                (Spec::Wright(WrightParams::new(a, b)?), vec![p("alpha", a), p("beta", b)])
            }
            Func::GenWright => {
                let (a, b) = (need(self.alpha, "alpha")?, need(self.beta, "beta")?);
                let (g, s) = (need(self.gamma, "gamma")?, need(self.sigma, "sigma")?);
                (
                    Spec::GenWright(GenWrightParams::new(a, b, g, s)?),
                    vec![p("alpha", a), p("beta", b), p("gamma", g), p("sigma", s)],
                )
            }
            Func::FoxWright => {
                let upper = parse_pairs("upper", self.upper.as_deref().unwrap_or(""))?;
                let lower = parse_pairs("lower", self.lower.as_deref().unwrap_or(""))?;
                let params = vec![
                    Param {
                        name: "upper",
                        value: fmt_pairs(&upper),
                    },
                    Param {
                        name: "lower",
                        value: fmt_pairs(&lower),
                    },
                ];
                (Spec::FoxWright(FoxWrightSpec::new(upper, lower)), params)
            }
            Func::Ml => {
                let raw = self.pairs.as_deref().ok_or_else(|| usage("ml needs --pairs"))?;
                let pairs = parse_pairs("pairs", raw)?;
                let value = fmt_pairs(&pairs);
                let spec = MittagLefflerSpec::new(pairs)?;
                (Spec::Ml(spec), vec![Param { name: "pairs", value }])
            }
            Func::Ml4 => {
                let v = [
                    need(self.b1, "b1")?,
                    need(self.beta1, "beta1")?,
                    need(self.b2, "b2")?,
                    need(self.beta2, "beta2")?,
                ];
                let params = vec![p("b1", v[0]), p("beta1", v[1]), p("b2", v[2]), p("beta2", v[3])];
                (Spec::Ml4(v), params)
            }
        };
        Ok(Function {
            func: self.func,
            params,
            reflect: self.reflect,
            method: self.method,
            spec,
        })
    }
}

impl Function {
    pub fn eval(&self, cfg: &SeriesConfig, z: f64) -> Result<Evaluation, CliError> {
        let x = if self.reflect { -z } else { z };
        let q = QuadratureSpec::default();
        let r = match (&self.spec, self.method) {
            (Spec::Wright(p), MethodArg::Series) => cfg.wright(*p, x),
            (Spec::Wright(p), MethodArg::Integral) => wright_via_integral(*p, x, &q),
            (Spec::GenWright(p), MethodArg::Series) => cfg.gen_wright(*p, x),
            (Spec::GenWright(p), MethodArg::Integral) => gen_wright_via_integral(*p, x, &q),
            (Spec::FoxWright(s), _) => cfg.fox_wright(s, x),
            (Spec::Ml(s), _) => cfg.mittag_leffler(s, x),
            (Spec::Ml4([b1, beta1, b2, beta2]), _) => cfg.ml4(*b1, *beta1, *b2, *beta2, x),
        };
        Ok(r?)
    }
}
