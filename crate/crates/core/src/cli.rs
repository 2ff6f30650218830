//! `kahler-spectra` command line.
//!
//! ```text
//! classify -p INT -n INT [--format json|table]
//! pairs (--count K | --max-n N) [--method recursion|bruteforce|both]
//! coeffs -p INT -n INT [--c RAT] [--vol RAT]
//! verify (lastlemma|duality|a2a|pairs) --max-n N
//! cpn-fit -n INT --c RAT [--degree D] [--tmin R] [--tmax R] [--points P] [--digits G]
//! ```
//!
//! Exit status: 0 on success, 1 on a usage or input error, 2 when a
//! verification finds a difference (the report is still printed).

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::checks;
use crate::classifier::{self, Cell, ClassificationResult};
use crate::cpn_spectrum::{self, FitConfig};
use crate::diophantine::{self, ExceptionalPair};
use crate::error::Error;
use crate::exact_arith::Rational;
use crate::patodi::{self, NumericalCondition, PatodiCoefficients};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DIFF: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "kahler-spectra",
    version,
    about = "Exact heat invariants, exceptional pairs and CP^n heat-trace checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Method {
    #[default]
    Recursion,
    Bruteforce,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Lastlemma,
    Duality,
    A2a,
    Pairs,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rigidity verdicts for one (p, n).
    Classify {
        #[arg(short = 'p')]
        p: u64,
        #[arg(short = 'n')]
        n: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Exceptional pairs where the a_1 invariant degenerates.
    Pairs(PairsArgs),
    /// Patodi coefficients and heat invariants for one (p, n).
    Coeffs {
        #[arg(short = 'p')]
        p: u64,
        #[arg(short = 'n')]
        n: u64,
        /// Constant holomorphic sectional curvature, "a/b" or "a".
        #[arg(long = "c")]
        c: Option<Rational>,
        #[arg(long, default_value = "1")]
        vol: Rational,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Exhaustive exact checks; exit status 2 on any difference.
    Verify {
        #[arg(value_enum)]
        check: Check,
        #[arg(long = "max-n")]
        max_n: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Fit the small-t expansion of the CP^n(c) heat trace.
    CpnFit {
        #[arg(short = 'n')]
        n: u64,
        #[arg(long = "c")]
        c: Rational,
        #[arg(long, default_value_t = 4)]
        degree: usize,
        #[arg(long, default_value = "0.001", value_parser = parse_real)]
        tmin: Rational,
        #[arg(long, default_value = "0.01", value_parser = parse_real)]
        tmax: Rational,
        #[arg(long, default_value_t = 24)]
        points: usize,
        #[arg(long, default_value_t = 60)]
        digits: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Range {
    #[arg(long)]
    count: Option<usize>,
    #[arg(long = "max-n")]
    max_n: Option<u64>,
}

#[derive(Debug, Args)]
struct PairsArgs {
    #[command(flatten)]
    range: Range,
    #[arg(long, value_enum, default_value_t)]
    method: Method,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

/// Parse `"a/b"`, `"a"`, or a decimal such as `"0.001"` / `"1e-3"` exactly.
pub fn parse_real(s: &str) -> Result<Rational, Error> {
    let bad = || Error::ParseRational(s.to_string());
    let s = s.trim();
    if s.contains('/') {
        return s.parse();
    }
    let (mantissa, exponent) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.trim_start_matches(['+', '-']).is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !frac_part.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let value: BigInt = format!("{int_part}{frac_part}")
        .parse()
        .map_err(|_| bad())?;
    let scale = exponent - frac_part.len() as i32;
    let ten = Rational::from(10);
    Ok(if scale >= 0 {
        Rational::from(value) * ten.pow(scale as u32)
    } else {
        Rational::from(value).checked_div(&ten.pow((-scale) as u32))?
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairsReport {
    pub method: String,
    pub pairs: Vec<ExceptionalPair>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bruteforce: Option<Vec<ExceptionalPair>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffsReport {
    pub p: u64,
    pub n: u64,
    pub lambdas: PatodiCoefficients,
    pub vol: Rational,
    pub a0: Rational,
    pub a1_coefficient: Rational,
    pub quadratic: Rational,
    pub degenerate: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub condition: Option<NumericalCondition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a2_const_hsc: Option<Rational>,
}

/// A decimal string rounded to `digits` significant digits (scientific
/// notation for error estimates).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decimal {
    pub value: String,
    pub digits: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FitCoefficient {
    pub i: usize,
    pub fitted: Decimal,
    pub ratio_to_a0: Decimal,
    /// Exact `a_i / a_0`, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub predicted_ratio: Option<Rational>,
    /// The same prediction written as `r·c^i`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub predicted_form: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relative_error: Option<Decimal>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CpnFitReport {
    pub n: u64,
    pub c: Rational,
    pub degree: usize,
    pub t_min: Rational,
    pub t_max: Rational,
    pub points: usize,
    pub digits: usize,
    pub fit_residual: Decimal,
    pub truncation_bound: Decimal,
    pub volume: Decimal,
    pub a0_volume_relative_error: Decimal,
    pub coefficients: Vec<FitCoefficient>,
}

fn short(x: &crate::DBig) -> Decimal {
    Decimal {
        value: cpn_spectrum::to_scientific_string(x, 6),
        digits: 6,
    }
}

pub fn cpn_fit_report(n: u64, c: &Rational, config: &FitConfig) -> Result<CpnFitReport, Error> {
    let fit = cpn_spectrum::fit_asymptotics(n, c, config)?;
    let full = |x: &crate::DBig| Decimal {
        value: cpn_spectrum::to_decimal_string(x, config.digits),
        digits: config.digits,
    };
    let coefficients = fit
        .fitted_a
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let predicted = fit.predicted_ratio(i);
            let predicted_form = predicted.as_ref().map(|r| {
                let per_c = r
                    .checked_div(&c.pow(i as u32))
                    .expect("c > 0 checked by the fit");
                format!("{per_c}·c^{i}")
            });
            FitCoefficient {
                i,
                fitted: full(a),
                ratio_to_a0: full(&fit.ratio(i).expect("index in range")),
                relative_error: fit.ratio_relative_error(i).as_ref().map(short),
                predicted_ratio: predicted,
                predicted_form,
            }
        })
        .collect();
    Ok(CpnFitReport {
        n,
        c: c.clone(),
        degree: config.degree,
        t_min: config.t_min.clone(),
        t_max: config.t_max.clone(),
        points: config.points,
        digits: config.digits,
        fit_residual: short(&fit.fit_residual),
        truncation_bound: short(&fit.truncation_bound),
        volume: full(&cpn_spectrum::volume(n, c, config.digits)?),
        a0_volume_relative_error: short(&fit.a0_relative_error()?),
        coefficients,
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: EXIT_OK }
    }
}

fn cells(cs: &[Cell]) -> String {
    let v: Vec<String> = cs.iter().map(Cell::to_string).collect();
    format!("{{{}}}", v.join(", "))
}

fn classify_table(r: &ClassificationResult) -> String {
    let mut s = String::new();
    let case = r.theorem1_case.map_or("-".to_string(), |c| c.to_string());
    s += &format!("p = {}, n = {}\n", r.p, r.n);
    s += &format!("  degenerate                      {}\n", r.degenerate);
    s += &format!("  lambda1                         {}\n", r.lambdas.lambda1);
    s += &format!("  lambda2                         {}\n", r.lambdas.lambda2);
    s += &format!("  lambda3                         {}\n", r.lambdas.lambda3);
    s += &format!("  reduced coefficient             {}\n", r.reduced_coeff);
    s += &format!("  numerical condition             {}\n", r.numerical_ok);
    s += &format!("  Q1 verdict                      {:?}\n", r.q1_verdict);
    s += &format!("  Q2 verdict                      {:?}\n", r.q2_verdict);
    s += &format!("  Q2 basis                        {}\n", r.q2_verdict.basis());
    s += &format!("  published case                  {case}\n");
    s += &format!(
        "  needs cohomologically Einstein  {}\n",
        r.requires_cohomological_einstein
    );
    for w in &r.warnings {
        s += &format!("  warning: {w}\n");
    }
    s
}

fn pairs_table(r: &PairsReport) -> String {
    let mut s = format!("{:>4} {:>24} {:>24}\n", "k", "p", "n");
    for e in &r.pairs {
        s += &format!("{:>4} {:>24} {:>24}\n", e.k, e.p, e.n);
    }
    if let Some(agree) = r.agree {
        s += &format!(
            "recursion and brute force {}\n",
            if agree { "agree" } else { "DISAGREE" }
        );
    }
    s
}

fn run_pairs(args: &PairsArgs) -> Result<Outcome, Error> {
    let recursion = match (args.range.count, args.range.max_n) {
        (Some(k), _) => diophantine::enumerate_recursive(k)?,
        (None, Some(n)) => diophantine::enumerate_recursive_up_to(&BigInt::from(n))?,
        (None, None) => unreachable!("clap enforces the range group"),
    };
    let scan_limit = || -> Result<u64, Error> {
        match args.range.max_n {
            Some(n) => Ok(n),
            None => recursion
                .last()
                .and_then(|e| e.n.to_u64())
                .ok_or_else(|| Error::OutOfRange {
                    what: "brute-force range",
                    detail: "largest n exceeds 64 bits".into(),
                }),
        }
    };
    let report = match args.method {
        Method::Recursion => PairsReport {
            method: "recursion".into(),
            pairs: recursion,
            bruteforce: None,
            agree: None,
        },
        Method::Bruteforce => PairsReport {
            method: "bruteforce".into(),
            pairs: diophantine::enumerate_bruteforce(scan_limit()?),
            bruteforce: None,
            agree: None,
        },
        Method::Both => {
            let brute = diophantine::enumerate_bruteforce(scan_limit()?);
            PairsReport {
                method: "both".into(),
                agree: Some(brute == recursion),
                pairs: recursion,
                bruteforce: Some(brute),
            }
        }
    };
    let code = if report.agree == Some(false) {
        EXIT_DIFF
    } else {
        EXIT_OK
    };
    let text = match args.format {
        Format::Json => to_json(&report),
        Format::Table => pairs_table(&report),
    };
    Ok(Outcome { text, code })
}

fn run_coeffs(
    p: u64,
    n: u64,
    c: Option<Rational>,
    vol: Rational,
    format: Format,
) -> Result<Outcome, Error> {
    let lambdas = patodi::lambda_coefficients(p, n)?;
    let report = CoeffsReport {
        p: lambdas.p,
        n,
        a0: patodi::a0(p, n, &vol)?,
        a1_coefficient: patodi::a1_coefficient(p, n)?,
        quadratic: diophantine::quadratic_value(lambdas.p, n),
        degenerate: diophantine::is_degenerate(lambdas.p, n),
        condition: if n >= 2 {
            Some(patodi::numerical_condition(p, n)?)
        } else {
            None
        },
        a2_const_hsc: c
            .as_ref()
            .map(|c| patodi::a2_const_hsc(p, n, c, &vol))
            .transpose()?,
        c,
        vol,
        lambdas,
    };
    let text = match format {
        Format::Json => to_json(&report),
        Format::Table => {
            let mut s = format!("p = {}, n = {}\n", report.p, report.n);
            s += &format!("  lambda1          {}\n", report.lambdas.lambda1);
            s += &format!("  lambda2          {}\n", report.lambdas.lambda2);
            s += &format!("  lambda3          {}\n", report.lambdas.lambda3);
            s += &format!("  a0 (vol = {})    {}\n", report.vol, report.a0);
            s += &format!("  a1 / int s       {}\n", report.a1_coefficient);
            s += &format!("  quadratic        {}\n", report.quadratic);
            if let Some(cond) = &report.condition {
                s += &format!("  reduced coeff    {}\n", cond.reduced_coeff);
                s += &format!("  condition holds  {}\n", cond.holds);
            }
            if let (Some(c), Some(a2)) = (&report.c, &report.a2_const_hsc) {
                s += &format!("  a2 (c = {c})     {a2}\n");
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}

fn run_verify(check: Check, max_n: u64, format: Format) -> Result<Outcome, Error> {
    let (passed, json, table) = match check {
        Check::Lastlemma => {
            let r = classifier::verify_lastlemma(max_n)?;
            let mut t = format!(
                "cells checked {}, satisfying {}\nonly computed {}\nonly claimed  {}\n",
                r.cells_checked,
                r.satisfying_count,
                cells(&r.only_computed),
                cells(&r.only_claimed)
            );
            for row in r.boundary_rows.iter().filter(|b| b.computed != b.claimed) {
                t += &format!(
                    "  ({},{}) computed {} claimed {} lambda1 {} reduced {}\n",
                    row.p, row.n, row.computed, row.claimed, row.lambda1, row.reduced_coeff
                );
            }
            (r.matches_claim(), to_json(&r), t)
        }
        Check::Duality => {
            let r = checks::verify_duality(max_n)?;
            let t = format!("duality checks {}, violations {}\n", r.checks, r.violations.len());
            (r.passed(), to_json(&r), t)
        }
        Check::A2a => {
            let r = checks::verify_reduction_identity(max_n)?;
            let t = format!(
                "reduction identity checks {}, violations {}\n",
                r.checks,
                r.violations.len()
            );
            (r.passed(), to_json(&r), t)
        }
        Check::Pairs => {
            let r = diophantine::compare_methods(max_n)?;
            let t = format!(
                "n <= {}: recursion {} pairs, brute force {} pairs, {}\n",
                r.max_n,
                r.recursion.len(),
                r.bruteforce.len(),
                if r.agree { "agree" } else { "DISAGREE" }
            );
            (r.agree, to_json(&r), t)
        }
    };
    Ok(Outcome {
        text: if format == Format::Json { json } else { table },
        code: if passed { EXIT_OK } else { EXIT_DIFF },
    })
}

fn run_cpn_fit(n: u64, c: &Rational, config: &FitConfig, format: Format) -> Result<Outcome, Error> {
    let r = cpn_fit_report(n, c, config)?;
    let text = match format {
        Format::Json => to_json(&r),
        Format::Table => {
            let mut s = format!(
                "CP^{} with c = {}: residual {}, tail bound {}, digits {}\n",
                r.n, r.c, r.fit_residual.value, r.truncation_bound.value, r.digits
            );
            s += &format!(
                "  a0 vs volume {}: relative error {}\n",
                cpn_spectrum::to_decimal_string(
                    &cpn_spectrum::volume(n, c, 20)?,
                    15
                ),
                r.a0_volume_relative_error.value
            );
            for row in &r.coefficients {
                let fitted = row.fitted.value.chars().take(24).collect::<String>();
                let ratio = row.ratio_to_a0.value.chars().take(24).collect::<String>();
                s += &format!("  a{} = {fitted:<26} a{}/a0 = {ratio:<26}", row.i, row.i);
                if let (Some(p), Some(e)) = (&row.predicted_ratio, &row.relative_error) {
                    s += &format!(" predicted {p} (rel err {})", e.value);
                }
                s.push('\n');
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}

fn dispatch(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Classify { p, n, format } => {
            let r = classifier::classify(p, n)?;
            Ok(Outcome::ok(match format {
                Format::Json => to_json(&r),
                Format::Table => classify_table(&r),
            }))
        }
        Command::Pairs(args) => run_pairs(&args),
        Command::Coeffs {
            p,
            n,
            c,
            vol,
            format,
        } => run_coeffs(p, n, c, vol, format),
        Command::Verify {
            check,
            max_n,
            format,
        } => run_verify(check, max_n, format),
        Command::CpnFit {
            n,
            c,
            degree,
            tmin,
            tmax,
            points,
            digits,
            format,
        } => {
            let config = FitConfig {
                degree,
                t_min: tmin,
                t_max: tmax,
                points,
                digits,
                ..FitConfig::default()
            };
            run_cpn_fit(n, &c, &config, format)
        }
    }
}

/// Run with explicit arguments (including the program name) and streams;
/// returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.text.as_bytes());
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
