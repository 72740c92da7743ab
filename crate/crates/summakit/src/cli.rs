//! Command-line entry point: `young`, `trace`, `sum`, `check`, `equiv`.
//!
//! Exit codes: 0 for any completed computation (including hypothesis-violated
//! verdicts), 2 for usage problems (bad flags, unreadable series files,
//! unknown builtins), 3 for computation failures (horizon, quadrature,
//! inapplicable method).

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::conditions;
use crate::corpus;
use crate::equivalence::{self, MethodsConfig};
use crate::error::Error;
use crate::kernels::{dilation_check, YoungKernel};
use crate::limit::{sum_series, SumConfig, DEFAULT_VERDICT_TOLERANCE};
use crate::output;
use crate::series::{
    trig_to_series, NodeSequence, RealFn, SeriesSpec, TrigSeries, DEFAULT_BUDGET,
};
use crate::summators::{self, Method, TruncationOptions};

/// Environment variable overriding the default coefficient horizon.
pub const HORIZON_ENV: &str = "SUMMAKIT_HORIZON";

/// Default tolerance for pairwise method agreement.
pub const DEFAULT_EQUIV_TOLERANCE: f64 = 2e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Riesz,
    Cesaro,
    Abel,
    Gamma,
    Lebesgue,
}

#[derive(Parser, Debug)]
#[command(
    name = "summakit",
    version,
    about = "Summation methods for divergent series: means, growth checks, equivalence experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Evaluate an integral cosine mean, or the order-dilation residual.
    Young {
        /// Kernel order (>= 0).
        #[arg(long)]
        kappa: f64,
        /// Evaluation point (>= 0).
        #[arg(long)]
        x: f64,
        /// Instead of the value, print the dilation-identity residual
        /// against this higher order.
        #[arg(long = "check-dilation", value_name = "TAU")]
        check_dilation: Option<f64>,
    },
    /// Sample one method's means along a schedule.
    Trace {
        #[arg(long, value_name = "builtin:ID|PATH.json")]
        series: String,
        #[arg(long, value_enum)]
        method: MethodArg,
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long)]
        kappa: Option<f64>,
        /// Schedule as geometric:START,RATIO,COUNT (defaults per method).
        #[arg(long)]
        schedule: Option<String>,
        /// Per-sample truncation tolerance.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Extrapolate one method to its limit.
    Sum {
        #[arg(long, value_name = "builtin:ID|PATH.json")]
        series: String,
        #[arg(long, value_enum)]
        method: MethodArg,
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long)]
        kappa: Option<f64>,
        #[arg(long)]
        schedule: Option<String>,
        /// Convergence-verdict tolerance.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Measure growth and Tauberian conditions.
    Check {
        #[arg(long, value_name = "builtin:ID|PATH.json")]
        series: String,
        /// "all" or a comma list of t1,t2,rho,signed,ratio,hl,szasz.
        #[arg(long, default_value = "all")]
        conditions: String,
        /// Exponent for the power-sum conditions.
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Run the six-way equivalence experiment.
    Equiv {
        #[arg(long, value_name = "builtin:ID|PATH.json")]
        series: Option<String>,
        /// Run the whole builtin corpus and emit a summary table.
        #[arg(long = "all-corpus")]
        all_corpus: bool,
        /// Pairwise agreement tolerance.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
}

/// Everything a run depends on, resolved before any computation; two runs
/// with equal configs produce byte-identical output.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub budget: usize,
    pub sample_tolerance: f64,
    pub verdict_tolerance: f64,
    pub equivalence_tolerance: f64,
    pub schedule: Option<Vec<f64>>,
    pub format: Option<OutputFormat>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    fn from_env() -> Result<Self, CliError> {
        let budget = match std::env::var(HORIZON_ENV) {
            Err(_) => DEFAULT_BUDGET,
            Ok(raw) => raw.parse::<usize>().ok().filter(|&b| b >= 2).ok_or_else(|| {
                CliError::Usage(format!("{HORIZON_ENV} must be an integer >= 2, got {raw:?}"))
            })?,
        };
        Ok(RunConfig {
            budget,
            sample_tolerance: TruncationOptions::default().tolerance,
            verdict_tolerance: DEFAULT_VERDICT_TOLERANCE,
            equivalence_tolerance: DEFAULT_EQUIV_TOLERANCE,
            schedule: None,
            format: None,
            out: None,
        })
    }

    fn sum_config(&self) -> SumConfig {
        SumConfig {
            schedule: self.schedule.clone(),
            sample_tolerance: self.sample_tolerance,
            verdict_tolerance: self.verdict_tolerance,
            budget: self.budget,
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Computation(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::Construction(_) | Error::UnknownSeries(_) => {
                CliError::Usage(e.to_string())
            }
            Error::Horizon(_) | Error::Quadrature(_) | Error::MethodInapplicable(_) => {
                CliError::Computation(e.to_string())
            }
        }
    }
}

/// Parse arguments, dispatch, and return the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            // clap renders its own message; --help and --version exit 0
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Computation(msg)) => {
            eprintln!("error: {msg}");
            3
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    let mut config = RunConfig::from_env()?;
    match cli.command {
        Cmd::Young {
            kappa,
            x,
            check_dilation,
        } => {
            let value = match check_dilation {
                None => YoungKernel::new(kappa)?.eval(x)?,
                Some(tau) => dilation_check(kappa, tau, x)?,
            };
            println!("{}", output::fmt_f64(value));
            Ok(())
        }
        Cmd::Trace {
            series,
            method,
            beta,
            kappa,
            schedule,
            tol,
            out,
            format,
        } => {
            let method = resolve_method(method, beta, kappa)?;
            if let Some(t) = tol {
                require(t > 0.0, "--tol must be positive")?;
                config.sample_tolerance = t;
            }
            config.schedule = schedule.map(|s| parse_schedule(&s)).transpose()?;
            config.format = format;
            config.out = out;
            let loaded = load_series(&series, config.budget)?;
            let schedule = match &config.schedule {
                Some(s) => s.clone(),
                None => crate::limit::default_schedule(&loaded.series, method)?,
            };
            let opts = TruncationOptions {
                tolerance: config.sample_tolerance,
            };
            let trace = summators::trace(&loaded.series, method, &schedule, &opts)?;
            let text = match config.format.unwrap_or(OutputFormat::Csv) {
                OutputFormat::Csv => output::trace_csv(&trace),
                OutputFormat::Json => {
                    let samples: Vec<Value> = trace
                        .samples
                        .iter()
                        .map(|s| {
                            json!({
                                "parameter": s.parameter,
                                "value": [s.value.re, s.value.im],
                                "certified": s.cert.is_certified(),
                            })
                        })
                        .collect();
                    output::to_json_string(&json!({
                        "method": method.name(),
                        "series": loaded.series.name(),
                        "samples": samples,
                    }))
                }
            };
            write_output(&config.out, &text)
        }
        Cmd::Sum {
            series,
            method,
            beta,
            kappa,
            schedule,
            tol,
            out,
            format,
        } => {
            let method = resolve_method(method, beta, kappa)?;
            if let Some(t) = tol {
                require(t > 0.0, "--tol must be positive")?;
                config.verdict_tolerance = t;
            }
            config.schedule = schedule.map(|s| parse_schedule(&s)).transpose()?;
            if format == Some(OutputFormat::Csv) {
                return Err(CliError::Usage("sum emits JSON; drop --format csv".into()));
            }
            config.out = out;
            let loaded = load_series(&series, config.budget)?;
            let result = sum_series(&loaded.series, method, &config.sum_config())?;
            let text = output::to_json_string(&output::estimate_json(
                &result.method,
                &result.estimate,
                result.side_condition,
            ));
            write_output(&config.out, &text)
        }
        Cmd::Check {
            series,
            conditions,
            p,
            out,
            format,
        } => {
            if format == Some(OutputFormat::Csv) {
                return Err(CliError::Usage("check emits JSON; drop --format csv".into()));
            }
            require(p > 1.0, "--p must exceed 1")?;
            config.out = out;
            let loaded = load_series(&series, config.budget)?;
            let reports = run_checks(&loaded, &conditions, p)?;
            let arr: Vec<Value> = reports.iter().map(output::condition_json).collect();
            write_output(&config.out, &output::to_json_string(&Value::Array(arr)))
        }
        Cmd::Equiv {
            series,
            all_corpus,
            tol,
            out,
            format,
        } => {
            if let Some(t) = tol {
                require(t > 0.0, "--tol must be positive")?;
                config.equivalence_tolerance = t;
            }
            config.out = out;
            config.format = format;
            let methods = MethodsConfig::default();
            match (series, all_corpus) {
                (Some(_), true) | (None, false) => Err(CliError::Usage(
                    "pass exactly one of --series or --all-corpus".into(),
                )),
                (Some(spec), false) => {
                    let loaded = load_series(&spec, config.budget)?;
                    let report = equivalence::run_theorem4(
                        &loaded.series,
                        &methods,
                        config.equivalence_tolerance,
                        &config.sum_config(),
                    )?;
                    let text = match config.format.unwrap_or(OutputFormat::Json) {
                        OutputFormat::Json => {
                            output::to_json_string(&output::equivalence_json(&report))
                        }
                        OutputFormat::Csv => output::equivalence_csv(std::slice::from_ref(&report)),
                    };
                    write_output(&config.out, &text)
                }
                (None, true) => {
                    let reports = equivalence::run_all_corpus(
                        &methods,
                        config.equivalence_tolerance,
                        &config.sum_config(),
                    )?;
                    let text = match config.format.unwrap_or(OutputFormat::Csv) {
                        OutputFormat::Csv => output::equivalence_csv(&reports),
                        OutputFormat::Json => {
                            let arr: Vec<Value> =
                                reports.iter().map(output::equivalence_json).collect();
                            output::to_json_string(&Value::Array(arr))
                        }
                    };
                    write_output(&config.out, &text)
                }
            }
        }
    }
}

fn require(ok: bool, msg: &str) -> Result<(), CliError> {
    if ok {
        Ok(())
    } else {
        Err(CliError::Usage(msg.to_string()))
    }
}

fn resolve_method(
    arg: MethodArg,
    beta: Option<f64>,
    kappa: Option<f64>,
) -> Result<Method, CliError> {
    let no_kappa = |m: &str| {
        require(
            kappa.is_none(),
            &format!("--kappa is not a parameter of {m}"),
        )
    };
    let no_beta = |m: &str| {
        require(beta.is_none(), &format!("--beta is not a parameter of {m}"))
    };
    match arg {
        MethodArg::Riesz => {
            no_kappa("riesz")?;
            let beta = beta.ok_or_else(|| CliError::Usage("riesz requires --beta".into()))?;
            Ok(Method::Riesz { beta })
        }
        MethodArg::Cesaro => {
            no_kappa("cesaro")?;
            let beta = beta.ok_or_else(|| CliError::Usage("cesaro requires --beta".into()))?;
            Ok(Method::Cesaro { beta })
        }
        MethodArg::Gamma => {
            no_beta("gamma")?;
            let kappa = kappa.ok_or_else(|| CliError::Usage("gamma requires --kappa".into()))?;
            Ok(Method::Gamma { kappa })
        }
        MethodArg::Abel => {
            no_beta("abel")?;
            no_kappa("abel")?;
            Ok(Method::Abel)
        }
        MethodArg::Lebesgue => {
            no_beta("lebesgue")?;
            no_kappa("lebesgue")?;
            Ok(Method::Lebesgue)
        }
    }
}

fn parse_schedule(text: &str) -> Result<Vec<f64>, CliError> {
    let rest = text.strip_prefix("geometric:").ok_or_else(|| {
        CliError::Usage(format!(
            "schedule must look like geometric:START,RATIO,COUNT, got {text:?}"
        ))
    })?;
    let parts: Vec<&str> = rest.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::Usage(
            "schedule needs exactly START,RATIO,COUNT".into(),
        ));
    }
    let parse = |name: &str, s: &str| -> Result<f64, CliError> {
        s.trim()
            .parse::<f64>()
            .map_err(|_| CliError::Usage(format!("schedule {name} {s:?} is not a number")))
    };
    let start = parse("start", parts[0])?;
    let ratio = parse("ratio", parts[1])?;
    let count = parts[2]
        .trim()
        .parse::<usize>()
        .map_err(|_| CliError::Usage(format!("schedule count {:?} is not an integer", parts[2])))?;
    require(start > 0.0 && start.is_finite(), "schedule start must be positive")?;
    require(
        ratio > 0.0 && ratio.is_finite() && ratio != 1.0,
        "schedule ratio must be positive and different from 1",
    )?;
    require((2..=4096).contains(&count), "schedule count must be in 2..=4096")?;
    Ok((0..count).map(|k| start * ratio.powi(k as i32)).collect())
}

/// A series plus its trigonometric form when one exists.
struct LoadedSeries {
    series: SeriesSpec,
    trig: Option<TrigSeries>,
}

/// JSON series description.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SeriesFile {
    name: String,
    nodes: NodesField,
    coeffs: CoeffsField,
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum NodesField {
    Integers,
    Explicit { values: Vec<f64> },
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum CoeffsField {
    Builtin { id: String },
    Inline { values: Vec<[f64; 2]> },
    Trig { a: Vec<f64>, b: Vec<f64>, x0: f64 },
}

fn load_series(spec: &str, budget: usize) -> Result<LoadedSeries, CliError> {
    if let Some(id) = spec.strip_prefix("builtin:") {
        let series = corpus::corpus_get(id)?.with_budget(budget);
        return Ok(LoadedSeries {
            series,
            trig: corpus::corpus_trig(id),
        });
    }
    let raw = fs::read_to_string(spec)
        .map_err(|e| CliError::Usage(format!("cannot read series file {spec:?}: {e}")))?;
    let file: SeriesFile = serde_json::from_str(&raw)
        .map_err(|e| CliError::Usage(format!("series file {spec:?} is invalid: {e}")))?;

    match file.coeffs {
        CoeffsField::Trig { a, b, x0 } => {
            if !matches!(file.nodes, NodesField::Integers) {
                return Err(CliError::Usage(
                    "trig coefficients imply integer nodes; use \"nodes\": {\"kind\": \"integers\"}"
                        .into(),
                ));
            }
            let horizon = a.len().min(b.len() + 1);
            require(horizon >= 1, "trig coefficient arrays are empty")?;
            let a_fn: RealFn = Arc::new(move |n| a.get(n).copied().unwrap_or(0.0));
            // sine coefficients start at index 1
            let b_fn: RealFn =
                Arc::new(move |n| if n == 0 { 0.0 } else { b.get(n - 1).copied().unwrap_or(0.0) });
            let trig = TrigSeries::new(file.name, a_fn, b_fn, x0, Some(horizon));
            let series = trig_to_series(&trig).with_budget(budget);
            Ok(LoadedSeries {
                series,
                trig: Some(trig),
            })
        }
        CoeffsField::Builtin { id } => {
            let base = corpus::corpus_get(&id)?;
            let provider: crate::series::CoeffFn = Arc::new(move |n| base.coeff(n));
            let (nodes, horizon) = build_nodes(file.nodes, None)?;
            let series =
                SeriesSpec::new(file.name, nodes, provider, horizon).with_budget(budget);
            Ok(LoadedSeries {
                series,
                trig: None,
            })
        }
        CoeffsField::Inline { values } => {
            let coeffs: Vec<Complex64> =
                values.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
            let len = coeffs.len();
            require(len >= 1, "inline coefficient list is empty")?;
            let (nodes, horizon) = build_nodes(file.nodes, Some(len))?;
            let provider: crate::series::CoeffFn = Arc::new(move |n| coeffs[n]);
            let series = SeriesSpec::new(file.name, nodes, provider, horizon).with_budget(budget);
            Ok(LoadedSeries {
                series,
                trig: None,
            })
        }
    }
}

fn build_nodes(
    nodes: NodesField,
    coeff_len: Option<usize>,
) -> Result<(NodeSequence, Option<usize>), CliError> {
    match nodes {
        NodesField::Integers => Ok((NodeSequence::integers(), coeff_len)),
        NodesField::Explicit { values } => {
            if let Some(len) = coeff_len {
                require(
                    values.len() == len,
                    "explicit node and coefficient lists must have equal length",
                )?;
            }
            let horizon = values.len();
            let nodes = NodeSequence::from_values(&values)?;
            Ok((nodes, Some(horizon)))
        }
    }
}

fn probe_ceiling(series: &SeriesSpec) -> f64 {
    let reach = series.node(series.effective_limit().saturating_sub(1));
    1e5f64.min((reach / 2.0).max(1.0))
}

fn run_checks(
    loaded: &LoadedSeries,
    tokens: &str,
    p: f64,
) -> Result<Vec<conditions::ConditionReport>, CliError> {
    let series = &loaded.series;
    let x_max = probe_ceiling(series);
    let n_max = x_max as usize;
    let mut reports = Vec::new();
    let all = tokens.trim() == "all";
    let wanted: Vec<String> = if all {
        Vec::new()
    } else {
        tokens
            .split(',')
            .map(|t| t.trim().to_ascii_lowercase())
            .filter(|t| !t.is_empty())
            .collect()
    };
    let requested = |names: &[&str]| wanted.iter().any(|w| names.contains(&w.as_str()));

    if all || requested(&["t1", "t1_2_6"]) {
        reports.push(conditions::check_t1(series, x_max)?);
    }
    if all || requested(&["t2", "t2_2_7"]) {
        reports.push(conditions::check_t2(series, x_max)?);
    }
    if all {
        if let Some(trig) = &loaded.trig {
            let (zygmund, moricz) = conditions::check_rho(trig, n_max)?;
            reports.push(zygmund);
            reports.push(moricz);
        }
        if series.has_integer_nodes(4096) {
            reports.push(conditions::check_signed(series, n_max)?);
        }
    } else {
        if requested(&["rho", "rho_1_4", "moricz", "moricz_1_5"]) {
            let trig = loaded.trig.as_ref().ok_or_else(|| {
                CliError::Computation(
                    "amplitude conditions need a trigonometric series".into(),
                )
            })?;
            let (zygmund, moricz) = conditions::check_rho(trig, n_max)?;
            reports.push(zygmund);
            reports.push(moricz);
        }
        if requested(&["signed", "signed_1_6"]) {
            reports.push(conditions::check_signed(series, n_max)?);
        }
    }
    if all || requested(&["ratio", "ratio_3_1"]) {
        reports.push(conditions::check_ratio(series, n_max)?);
    }
    if all || requested(&["hl", "hl_3_2"]) {
        reports.push(conditions::check_hl(series, p, n_max)?);
    }
    if all || requested(&["szasz", "szasz_3_3"]) {
        reports.push(conditions::check_szasz(series, p, n_max)?);
    }
    if !all {
        let known = [
            "t1", "t1_2_6", "t2", "t2_2_7", "rho", "rho_1_4", "moricz", "moricz_1_5", "signed",
            "signed_1_6", "ratio", "ratio_3_1", "hl", "hl_3_2", "szasz", "szasz_3_3",
        ];
        if let Some(bad) = wanted.iter().find(|w| !known.contains(&w.as_str())) {
            return Err(CliError::Usage(format!("unknown condition {bad:?}")));
        }
        if wanted.is_empty() {
            return Err(CliError::Usage("no conditions requested".into()));
        }
    }
    Ok(reports)
}

fn write_output(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Computation(format!("cannot write {path:?}: {e}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> i32 {
        run(args.iter().map(|s| s.to_string()))
    }

    #[test]
    fn cesaro_without_beta_is_a_usage_error() {
        let code = run_args(&["summakit", "sum", "--series", "builtin:grandi", "--method", "cesaro"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn unknown_builtin_is_a_usage_error() {
        let code = run_args(&["summakit", "sum", "--series", "builtin:nope", "--method", "abel"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn extraneous_parameter_is_rejected() {
        let code = run_args(&[
            "summakit", "sum", "--series", "builtin:grandi", "--method", "abel", "--beta", "1",
        ]);
        assert_eq!(code, 2);
    }

    #[test]
    fn schedule_parsing() {
        let s = parse_schedule("geometric:0.5,0.5,4").unwrap();
        assert_eq!(s, vec![0.5, 0.25, 0.125, 0.0625]);
        assert!(parse_schedule("geometric:0.5,0.5").is_err());
        assert!(parse_schedule("linear:1,2,3").is_err());
        assert!(parse_schedule("geometric:0,2,3").is_err());
        assert!(parse_schedule("geometric:1,1,3").is_err());
    }

    #[test]
    fn equiv_requires_exactly_one_target() {
        assert_eq!(run_args(&["summakit", "equiv"]), 2);
        assert_eq!(
            run_args(&["summakit", "equiv", "--series", "builtin:zero", "--all-corpus"]),
            2
        );
    }

    #[test]
    fn builtin_loading_attaches_trig_form() {
        let loaded = load_series("builtin:sawtooth_quarter", 1000).unwrap();
        assert!(loaded.trig.is_some());
        let loaded = load_series("builtin:grandi", 1000).unwrap();
        assert!(loaded.trig.is_none());
    }

    #[test]
    fn young_subcommand_prints_value() {
        assert_eq!(
            run_args(&["summakit", "young", "--kappa", "2", "--x", "3.14159265358979"]),
            0
        );
    }
}
