//! Batch CLI: compute single Fisher-information values, run the
//! verification suites, sweep parameter grids, or run the full selftest.
//! CSV and JSON outputs are the stable machine interface; the text format
//! is informational only.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use fisherpoly::oracle::{fisher_by_definition, QuadratureConfig, VerificationReport};
use fisherpoly::orthopoly::{Family, ParamTarget, Params};
use fisherpoly::suite::{
    self, run_acceptance, tol_override_from_env, SuiteOptions,
};
use fisherpoly::{fisher_closed_form, fisher_sum_form};

#[derive(Parser)]
#[command(
    name = "fisherpoly",
    about = "Parameter-based Fisher information of classical orthogonal polynomials",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one Fisher-information value
    Compute(ComputeArgs),
    /// Run a quadrature verification suite
    Verify(VerifyArgs),
    /// Sweep a parameter range over a list of degrees
    Sweep(SweepArgs),
    /// Run the full acceptance grid
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Laguerre,
    Jacobi,
    Gegenbauer,
    Grosjean1,
    Grosjean2,
}

impl FamilyArg {
    fn to_family(self) -> Family {
        match self {
            FamilyArg::Laguerre => Family::Laguerre,
            FamilyArg::Jacobi => Family::Jacobi,
            FamilyArg::Gegenbauer => Family::Gegenbauer,
            FamilyArg::Grosjean1 => Family::GrosjeanFirst,
            FamilyArg::Grosjean2 => Family::GrosjeanSecond,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Alpha,
    Beta,
    Lambda,
}

impl TargetArg {
    fn to_target(self) -> ParamTarget {
        match self {
            TargetArg::Alpha => ParamTarget::Alpha,
            TargetArg::Beta => ParamTarget::Beta,
            TargetArg::Lambda => ParamTarget::Lambda,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Sum,
    Closed,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct ComputeArgs {
    #[arg(long)]
    family: FamilyArg,
    #[arg(long)]
    target: TargetArg,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long, value_enum, default_value = "both")]
    method: MethodArg,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Also run the quadrature oracle and report the discrepancy
    #[arg(long)]
    oracle: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Fisher,
    Lemma2,
    Orthonormality,
    Norms,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormatArg {
    Json,
    Csv,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: SuiteArg,
    /// Largest polynomial degree checked
    #[arg(long, default_value_t = 5)]
    n_max: u32,
    /// Tolerance override for every check in the suite
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormatArg,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    family: FamilyArg,
    #[arg(long)]
    target: TargetArg,
    /// Comma-separated list of degrees, e.g. 0,1,2
    #[arg(long)]
    n_list: String,
    /// Scalar value or start:stop:step range
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long, value_enum, default_value = "csv")]
    format: ReportFormatArg,
    /// Number of worker threads (output order is unaffected)
    #[arg(long, default_value_t = 1)]
    parallel: usize,
}

#[derive(Args)]
struct SelftestArgs {
    /// Restrict to n <= 4 for a fast smoke run
    #[arg(long)]
    quick: bool,
}

/// 17-significant-digit rendering shared by CSV and JSON.
fn num(v: f64) -> String {
    format!("{v:.16e}")
}

fn opt_num(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

fn opt_num_json(v: Option<f64>) -> String {
    v.map(num).unwrap_or_else(|| "null".into())
}

/// One output row of `compute` or `sweep`.
struct OutputRecord {
    family: Family,
    target: ParamTarget,
    n: u32,
    alpha: Option<f64>,
    beta: Option<f64>,
    lambda: Option<f64>,
    fisher_closed: f64,
    fisher_sum: f64,
    fisher_oracle: Option<f64>,
    rel_discrepancy: Option<f64>,
}

const CSV_HEADER: &str =
    "family,target,n,alpha,beta,lambda,fisher_closed,fisher_sum,fisher_oracle,rel_discrepancy";

impl OutputRecord {
    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.family.name(),
            self.target.name(),
            self.n,
            opt_num(self.alpha),
            opt_num(self.beta),
            opt_num(self.lambda),
            num(self.fisher_closed),
            num(self.fisher_sum),
            opt_num(self.fisher_oracle),
            opt_num(self.rel_discrepancy),
        )
    }

    fn json_line(&self) -> String {
        format!(
            "{{\"family\":\"{}\",\"target\":\"{}\",\"n\":{},\"alpha\":{},\"beta\":{},\"lambda\":{},\"fisher_closed\":{},\"fisher_sum\":{},\"fisher_oracle\":{},\"rel_discrepancy\":{}}}",
            self.family.name(),
            self.target.name(),
            self.n,
            opt_num_json(self.alpha),
            opt_num_json(self.beta),
            opt_num_json(self.lambda),
            num(self.fisher_closed),
            num(self.fisher_sum),
            opt_num_json(self.fisher_oracle),
            opt_num_json(self.rel_discrepancy),
        )
    }

    fn text(&self, method: MethodArg) -> String {
        let mut out = format!(
            "family={} target={} n={}",
            self.family.name(),
            self.target.name(),
            self.n
        );
        for (label, v) in [
            ("alpha", self.alpha),
            ("beta", self.beta),
            ("lambda", self.lambda),
        ] {
            if let Some(v) = v {
                out.push_str(&format!(" {label}={v}"));
            }
        }
        out.push('\n');
        match method {
            MethodArg::Sum => out.push_str(&format!("fisher (sum form) = {:.17}\n", self.fisher_sum)),
            MethodArg::Closed => {
                out.push_str(&format!("fisher (closed form) = {:.17}\n", self.fisher_closed))
            }
            MethodArg::Both => {
                out.push_str(&format!("fisher (sum form)    = {:.17}\n", self.fisher_sum));
                out.push_str(&format!("fisher (closed form) = {:.17}\n", self.fisher_closed));
            }
        }
        if let Some(o) = self.fisher_oracle {
            out.push_str(&format!("fisher (oracle)      = {:.17}\n", o));
        }
        if let Some(d) = self.rel_discrepancy {
            out.push_str(&format!("max relative discrepancy = {d:.3e}\n"));
        }
        out
    }
}

fn max_rel_discrepancy(values: &[f64]) -> f64 {
    let mut worst = 0.0_f64;
    for i in 0..values.len() {
        for j in (i + 1)..values.len() {
            let scale = values[i].abs().max(values[j].abs()).max(f64::MIN_POSITIVE);
            worst = worst.max((values[i] - values[j]).abs() / scale);
        }
    }
    worst
}

/// Builds Params from the per-family CLI flags, rejecting flags that do
/// not belong to the family. For the Grosjean families beta is implied
/// (-1-alpha or 1-alpha) and echoed in the output.
fn build_params(
    family: Family,
    alpha: Option<f64>,
    beta: Option<f64>,
    lambda: Option<f64>,
) -> Result<(Params, Option<f64>, Option<f64>, Option<f64>), String> {
    let need = |v: Option<f64>, name: &str| {
        v.ok_or_else(|| format!("{}: --{name} is required", family.name()))
    };
    let forbid = |v: Option<f64>, name: &str| {
        if v.is_some() {
            Err(format!("{}: --{name} is not a parameter of this family", family.name()))
        } else {
            Ok(())
        }
    };
    match family {
        Family::Laguerre => {
            let a = need(alpha, "alpha")?;
            forbid(beta, "beta")?;
            forbid(lambda, "lambda")?;
            Ok((Params::with_alpha(a), Some(a), None, None))
        }
        Family::Jacobi => {
            let a = need(alpha, "alpha")?;
            let b = need(beta, "beta")?;
            forbid(lambda, "lambda")?;
            Ok((Params::with_alpha_beta(a, b), Some(a), Some(b), None))
        }
        Family::Gegenbauer => {
            let l = need(lambda, "lambda")?;
            forbid(alpha, "alpha")?;
            forbid(beta, "beta")?;
            Ok((Params::with_lambda(l), None, None, Some(l)))
        }
        Family::GrosjeanFirst | Family::GrosjeanSecond => {
            let a = need(alpha, "alpha")?;
            forbid(beta, "beta")?;
            forbid(lambda, "lambda")?;
            let implied_beta = if family == Family::GrosjeanFirst {
                -1.0 - a
            } else {
                1.0 - a
            };
            Ok((Params::with_alpha(a), Some(a), Some(implied_beta), None))
        }
    }
}

fn fail2(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn make_record(
    family: Family,
    target: ParamTarget,
    n: u32,
    params: &Params,
    echo: (Option<f64>, Option<f64>, Option<f64>),
    oracle: bool,
    cfg: &QuadratureConfig,
) -> Result<OutputRecord, fisherpoly::Error> {
    let closed = fisher_closed_form(family, target, n, params)?.value;
    let sum = fisher_sum_form(family, target, n, params)?.value;
    let fisher_oracle = if oracle {
        Some(fisher_by_definition(family, target, n, params, cfg)?)
    } else {
        None
    };
    let mut values = vec![closed, sum];
    values.extend(fisher_oracle);
    Ok(OutputRecord {
        family,
        target,
        n,
        alpha: echo.0,
        beta: echo.1,
        lambda: echo.2,
        fisher_closed: closed,
        fisher_sum: sum,
        fisher_oracle,
        rel_discrepancy: Some(max_rel_discrepancy(&values)),
    })
}

fn cmd_compute(args: ComputeArgs) -> ExitCode {
    let family = args.family.to_family();
    let target = args.target.to_target();
    let (params, a, b, l) = match build_params(family, args.alpha, args.beta, args.lambda) {
        Ok(v) => v,
        Err(e) => return fail2(e),
    };
    let record = match make_record(
        family,
        target,
        args.n,
        &params,
        (a, b, l),
        args.oracle,
        &QuadratureConfig::default(),
    ) {
        Ok(r) => r,
        Err(e) => return fail2(e),
    };
    match args.format {
        FormatArg::Csv => {
            println!("{CSV_HEADER}");
            println!("{}", record.csv_row());
        }
        FormatArg::Json => println!("{}", record.json_line()),
        FormatArg::Text => print!("{}", record.text(args.method)),
    }
    ExitCode::SUCCESS
}

fn report_csv_row(r: &VerificationReport) -> String {
    format!(
        "\"{}\",{},{},{},{},{}",
        r.check_name.replace('"', "'"),
        num(r.computed),
        num(r.expected),
        num(r.abs_err),
        num(r.rel_err),
        r.passed
    )
}

fn report_json_line(r: &VerificationReport) -> String {
    format!(
        "{{\"check\":\"{}\",\"computed\":{},\"expected\":{},\"abs_err\":{},\"rel_err\":{},\"passed\":{}}}",
        r.check_name.replace('"', "'"),
        num(r.computed),
        num(r.expected),
        num(r.abs_err),
        num(r.rel_err),
        r.passed
    )
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let cfg = QuadratureConfig::default();
    let n_max = args.n_max;
    let pick = |default: f64| tol_override_from_env().or(args.tol).unwrap_or(default);
    let mut reports: Vec<VerificationReport> = Vec::new();
    if matches!(args.suite, SuiteArg::Fisher | SuiteArg::All) {
        reports.extend(suite::verify_fisher_suite(n_max, pick(1e-6), &cfg));
    }
    if matches!(args.suite, SuiteArg::Lemma2 | SuiteArg::All) {
        reports.extend(suite::verify_lemma2_suite(n_max.min(5), pick(1e-7), &cfg));
    }
    if matches!(args.suite, SuiteArg::Orthonormality | SuiteArg::All) {
        reports.extend(suite::verify_orthonormality_suite(n_max, pick(1e-8), &cfg));
    }
    if matches!(args.suite, SuiteArg::Norms | SuiteArg::All) {
        reports.extend(suite::verify_norms_suite(n_max, pick(1e-8), &cfg));
    }
    if let ReportFormatArg::Csv = args.format {
        println!("check,computed,expected,abs_err,rel_err,passed");
    }
    let mut all_passed = true;
    for r in &reports {
        all_passed &= r.passed;
        match args.format {
            ReportFormatArg::Json => println!("{}", report_json_line(r)),
            ReportFormatArg::Csv => println!("{}", report_csv_row(r)),
        }
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

/// Parses either a scalar or an inclusive start:stop:step range.
fn parse_values(spec: &str, name: &str) -> Result<(Vec<f64>, bool), String> {
    if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("--{name}: expected start:stop:step, got '{spec}'"));
        }
        let nums: Vec<f64> = parts
            .iter()
            .map(|p| p.parse().map_err(|_| format!("--{name}: bad number '{p}'")))
            .collect::<Result<_, _>>()?;
        let (start, stop, step) = (nums[0], nums[1], nums[2]);
        if step <= 0.0 || stop < start {
            return Err(format!(
                "--{name}: need step > 0 and stop >= start in '{spec}'"
            ));
        }
        let mut values = Vec::new();
        let count = ((stop - start) / step + 0.5).floor() as usize + 1;
        for i in 0..count {
            let v = start + step * i as f64;
            if v <= stop + step * 1e-9 {
                values.push(v);
            }
        }
        Ok((values, true))
    } else {
        let v: f64 = spec
            .parse()
            .map_err(|_| format!("--{name}: bad number '{spec}'"))?;
        Ok((vec![v], false))
    }
}

fn cmd_sweep(args: SweepArgs) -> ExitCode {
    let family = args.family.to_family();
    let target = args.target.to_target();
    let n_list: Result<Vec<u32>, _> = args
        .n_list
        .split(',')
        .map(|p| p.trim().parse::<u32>())
        .collect();
    let n_list = match n_list {
        Ok(v) if !v.is_empty() => v,
        _ => return fail2(format!("--n-list: expected comma-separated degrees, got '{}'", args.n_list)),
    };

    // exactly one of the parameter flags may be a range
    let mut ranges = 0;
    let mut parse_flag = |flag: &Option<String>, name: &str| -> Result<Option<Vec<f64>>, String> {
        match flag {
            None => Ok(None),
            Some(spec) => {
                let (vals, is_range) = parse_values(spec, name)?;
                if is_range {
                    ranges += 1;
                }
                Ok(Some(vals))
            }
        }
    };
    let alpha = match parse_flag(&args.alpha, "alpha") {
        Ok(v) => v,
        Err(e) => return fail2(e),
    };
    let beta = match parse_flag(&args.beta, "beta") {
        Ok(v) => v,
        Err(e) => return fail2(e),
    };
    let lambda = match parse_flag(&args.lambda, "lambda") {
        Ok(v) => v,
        Err(e) => return fail2(e),
    };
    if ranges != 1 {
        return fail2("exactly one parameter must be a start:stop:step range");
    }

    // grid: n-major, then parameter ascending
    let pick = |v: &Option<Vec<f64>>, i: usize| v.as_ref().map(|v| v[i.min(v.len() - 1)]);
    let param_count = [&alpha, &beta, &lambda]
        .iter()
        .filter_map(|v| v.as_ref().map(|v| v.len()))
        .max()
        .unwrap_or(0);
    if param_count == 0 {
        return fail2("empty parameter grid");
    }
    let mut grid: Vec<(u32, Params, (Option<f64>, Option<f64>, Option<f64>))> = Vec::new();
    for &n in &n_list {
        for i in 0..param_count {
            let (params, a, b, l) =
                match build_params(family, pick(&alpha, i), pick(&beta, i), pick(&lambda, i)) {
                    Ok(v) => v,
                    Err(e) => return fail2(e),
                };
            if let Err(e) = params.validate(family) {
                return fail2(format!("grid point n={n}: {e}"));
            }
            grid.push((n, params, (a, b, l)));
        }
    }

    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(args.parallel.max(1))
        .build()
    {
        Ok(p) => p,
        Err(e) => return fail2(e),
    };
    let cfg = QuadratureConfig::default();
    let records: Result<Vec<OutputRecord>, fisherpoly::Error> = pool.install(|| {
        grid.par_iter()
            .map(|&(n, params, echo)| {
                make_record(family, target, n, &params, echo, false, &cfg)
            })
            .collect()
    });
    let records = match records {
        Ok(r) => r,
        Err(e) => return fail2(e),
    };
    if let ReportFormatArg::Csv = args.format {
        println!("{CSV_HEADER}");
    }
    for r in &records {
        match args.format {
            ReportFormatArg::Csv => println!("{}", r.csv_row()),
            ReportFormatArg::Json => println!("{}", r.json_line()),
        }
    }
    ExitCode::SUCCESS
}

fn cmd_selftest(args: SelftestArgs) -> ExitCode {
    let opts = SuiteOptions {
        quick: args.quick,
        tol_override: tol_override_from_env(),
    };
    let outcomes = run_acceptance(&opts);
    let mut all_passed = true;
    for o in &outcomes {
        println!("{}", o.summary());
        all_passed &= o.passed();
    }
    if all_passed {
        println!("selftest: all {} criteria passed", outcomes.len());
        ExitCode::SUCCESS
    } else {
        println!("selftest: FAILURES detected");
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Compute(args) => cmd_compute(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Selftest(args) => cmd_selftest(args),
    }
}
