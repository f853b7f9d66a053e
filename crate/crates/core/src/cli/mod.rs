//! Command-line front end. [`run`] parses arguments, executes one
//! subcommand and returns everything it would print, so that nothing is
//! written when a command fails halfway.
//!
//! Exit codes: 0 success, 2 input error, 3 precondition failure, 4
//! inconclusive oracle.

mod job;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use crate::bounds::{bkk_bound, iterated_bound, okounkov_bound, weighted_bound, BoundError, BoundMethod, BoundReport};
use crate::degrees::{Degree, DegreeError};
use crate::expr::{parse, rational_to_string, AmbientRing, ExprError, Rational};
use crate::oracle::{fiber_count, generic_probe, OracleError};
use crate::polytope::{minkowski_sum, mixed_volume, newton_polygon, okounkov_polygon, Polygon, PolytopeError};

pub use job::{Job, JobConfig};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Inconclusive(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Inconclusive(_) => 4,
        }
    }
}

impl From<ExprError> for CliError {
    fn from(e: ExprError) -> Self {
        match e {
            ExprError::DegreeZero | ExprError::UnsupportedArity(_) => CliError::Precondition(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<DegreeError> for CliError {
    fn from(e: DegreeError) -> Self {
        match e {
            DegreeError::Expr(e) => e.into(),
            DegreeError::AmbientMismatch | DegreeError::InvalidWeights(_) => CliError::Input(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<PolytopeError> for CliError {
    fn from(e: PolytopeError) -> Self {
        match e {
            PolytopeError::Degree(e) => e.into(),
            PolytopeError::InvalidInput(_) => CliError::Input(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<BoundError> for CliError {
    fn from(e: BoundError) -> Self {
        match e {
            BoundError::Degree(e) => e.into(),
            BoundError::Polytope(e) => e.into(),
            BoundError::Expr(e) => e.into(),
            BoundError::SystemSize { .. } | BoundError::ShiftSize { .. } | BoundError::AmbientMismatch => {
                CliError::Input(e.to_string())
            }
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Inconclusive(_) | OracleError::AllInconclusive => CliError::Inconclusive(e.to_string()),
            OracleError::InvalidInput(_) => CliError::Input(e.to_string()),
            OracleError::Expr(e) => e.into(),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "affine-bezout", version, about = "Degree-based bounds on the size of polynomial fibers")]
pub struct Cli {
    /// Seed for random probes.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Number of random probes for oracle commands.
    #[arg(long, global = true)]
    pub trials: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

/// Ways of describing the job, shared by most subcommands.
#[derive(Debug, Clone, Default, Args)]
pub struct JobArgs {
    /// Job file (JSON).
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Semidegree chain file (JSON).
    #[arg(long)]
    pub chain: Option<PathBuf>,
    /// Comma-separated weights, e.g. `3,2`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub weights: Option<Vec<i64>>,
    /// Comma-separated variable names (default x1, x2, …).
    #[arg(long, value_delimiter = ',')]
    pub vars: Option<Vec<String>>,
    /// System component; repeat once per polynomial.
    #[arg(long = "poly", allow_hyphen_values = true)]
    pub polys: Vec<String>,
    /// Comma-separated target point `a`, rationals such as `1/2`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub shift: Option<Vec<String>>,
    /// Write the result here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a weighted or iterated degree.
    EvalDegree {
        #[command(flatten)]
        job: JobArgs,
        /// Polynomial to evaluate.
        #[arg(allow_hyphen_values = true)]
        polynomial: String,
    },
    /// Compute one bound on the fiber size.
    Bound {
        #[command(flatten)]
        job: JobArgs,
        #[arg(long)]
        method: Option<String>,
        /// Grading level for the okounkov method.
        #[arg(long)]
        d: Option<i64>,
        #[arg(long)]
        cutoff: Option<u32>,
    },
    /// Newton polygons of the shifted system and their mixed area.
    Newton {
        #[command(flatten)]
        job: JobArgs,
    },
    /// Okounkov polygon of a degree with respect to a monomial valuation.
    Okounkov {
        #[command(flatten)]
        job: JobArgs,
        #[arg(long)]
        d: Option<i64>,
        #[arg(long)]
        cutoff: Option<u32>,
        /// lex, lex-rev or grlex.
        #[arg(long)]
        valuation: Option<String>,
    },
    /// Count points in fibers by elimination.
    OracleCount {
        #[command(flatten)]
        job: JobArgs,
        /// Count the single fiber over the shift instead of random ones.
        #[arg(long)]
        at_shift: bool,
    },
    /// Compare every bound with the oracle.
    Verify {
        #[command(flatten)]
        job: JobArgs,
        #[arg(long)]
        d: Option<i64>,
        #[arg(long)]
        cutoff: Option<u32>,
    },
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli) {
        Ok((out, job_output)) => match job_output {
            Some(path) => match std::fs::write(&path, out) {
                Ok(()) => Outcome { code: 0, stdout: String::new(), stderr: String::new() },
                Err(e) => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: format!("error: cannot write {}: {e}\n", path.display()),
                },
            },
            None => Outcome { code: 0, stdout: out, stderr: String::new() },
        },
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

struct Overrides<'a> {
    method: Option<&'a str>,
    d: Option<i64>,
    cutoff: Option<u32>,
    valuation: Option<&'a str>,
}

const NONE: Overrides<'static> = Overrides { method: None, d: None, cutoff: None, valuation: None };

fn build_job(cli: &Cli, args: &JobArgs, o: Overrides<'_>) -> Result<Job, CliError> {
    let mut cfg = match &args.config {
        Some(p) => JobConfig::load(p)?,
        None => JobConfig::default(),
    };
    if let Some(p) = &args.chain {
        cfg.chain = Some(job::load_chain(p)?);
    }
    if args.weights.is_some() {
        cfg.weights = args.weights.clone();
    }
    if args.vars.is_some() {
        cfg.vars = args.vars.clone();
    }
    if !args.polys.is_empty() {
        cfg.system = args.polys.clone();
    }
    if args.shift.is_some() {
        cfg.shift = args.shift.clone();
    }
    if args.output.is_some() {
        cfg.output = args.output.clone();
    }
    if let Some(m) = o.method {
        cfg.method = Some(m.to_string());
    }
    cfg.d = o.d.or(cfg.d);
    cfg.cutoff = o.cutoff.or(cfg.cutoff);
    if let Some(v) = o.valuation {
        cfg.valuation = Some(v.to_string());
    }
    cfg.seed = cli.seed.or(cfg.seed);
    cfg.trials = cli.trials.or(cfg.trials);
    Job::resolve(&cfg)
}

fn execute(cli: &Cli) -> Result<(String, Option<PathBuf>), CliError> {
    let json = cli.format == Format::Json;
    let (job, out) = match &cli.command {
        Command::EvalDegree { job, polynomial } => {
            let job = build_job(cli, job, NONE)?;
            let out = eval_degree(&job, polynomial, json)?;
            (job, out)
        }
        Command::Bound { job, method, d, cutoff } => {
            let job = build_job(cli, job, Overrides { method: method.as_deref(), d: *d, cutoff: *cutoff, valuation: None })?;
            let report = bound(&job)?;
            let out = if json { format!("{}\n", report.to_json()) } else { report.to_string() };
            (job, out)
        }
        Command::Newton { job } => {
            let job = build_job(cli, job, NONE)?;
            let out = newton(&job, json)?;
            (job, out)
        }
        Command::Okounkov { job, d, cutoff, valuation } => {
            let job = build_job(cli, job, Overrides { method: None, d: *d, cutoff: *cutoff, valuation: valuation.as_deref() })?;
            let out = okounkov(&job, json)?;
            (job, out)
        }
        Command::OracleCount { job, at_shift } => {
            let job = build_job(cli, job, NONE)?;
            let out = oracle_count(&job, *at_shift, json)?;
            (job, out)
        }
        Command::Verify { job, d, cutoff } => {
            let job = build_job(cli, job, Overrides { method: None, d: *d, cutoff: *cutoff, valuation: None })?;
            let out = verify(&job, json)?;
            (job, out)
        }
    };
    Ok((out, job.output))
}

fn degree_json(d: Degree) -> serde_json::Value {
    match d {
        Degree::Finite(v) => json!(v),
        Degree::NegInf => json!("-inf"),
    }
}

fn eval_degree(job: &Job, src: &str, json: bool) -> Result<String, CliError> {
    let p = parse(src, &job.ambient)?;
    let d = job.chain_or_weighted().eval(&p)?;
    Ok(if json { format!("{}\n", json!({ "polynomial": p.to_string(), "degree": degree_json(d) })) } else { format!("{d}\n") })
}

fn bound(job: &Job) -> Result<BoundReport, CliError> {
    job.require_system()?;
    let method = job.method.ok_or_else(|| CliError::Input("no method given (use --method)".into()))?;
    Ok(match method {
        BoundMethod::Weighted => weighted_bound(&job.weights, &job.system)?,
        BoundMethod::Iterated => iterated_bound(&job.chain_or_weighted(), &job.system)?,
        BoundMethod::Bkk => bkk_bound(&job.system, &job.shift)?,
        BoundMethod::Okounkov => {
            let d = job.d.ok_or_else(|| CliError::Input("the okounkov method needs --d".into()))?;
            okounkov_bound(&job.chain_or_weighted(), &job.system, &job.valuation, d, job.cutoff_or_default(d))?
        }
    })
}

fn polygon_json(p: &Polygon) -> serde_json::Value {
    json!({
        "vertices": p.vertices().iter().map(|v| [rational_to_string(&v.x), rational_to_string(&v.y)]).collect::<Vec<_>>(),
        "area": rational_to_string(&p.area()),
    })
}

fn newton(job: &Job, json: bool) -> Result<String, CliError> {
    job.require_system()?;
    if job.system.len() != 2 || job.ambient.arity() != 2 {
        return Err(CliError::Precondition("newton needs two polynomials in two variables".into()));
    }
    let ambient: &std::sync::Arc<AmbientRing> = &job.ambient;
    let mut polys = Vec::new();
    for (f, a) in job.system.iter().zip(&job.shift) {
        polys.push(newton_polygon(&(f - &crate::expr::Polynomial::constant(ambient, a.clone())))?);
    }
    let sum = minkowski_sum(&polys[0], &polys[1]);
    let m = mixed_volume(&polys[0], &polys[1]);
    if json {
        return Ok(format!(
            "{}\n",
            json!({
                "shift": job.shift.iter().map(rational_to_string).collect::<Vec<_>>(),
                "polygons": polys.iter().map(polygon_json).collect::<Vec<_>>(),
                "sum": polygon_json(&sum),
                "mixed_volume": rational_to_string(&m),
            })
        ));
    }
    let mut out = String::new();
    for (i, p) in polys.iter().enumerate() {
        let _ = writeln!(out, "# P{}", i + 1);
        out.push_str(&p.dump());
        let _ = writeln!(out, "vol(P{}) = {}", i + 1, rational_to_string(&p.area()));
    }
    let _ = writeln!(out, "vol(P1+P2) = {}", rational_to_string(&sum.area()));
    let _ = writeln!(out, "M = {}", rational_to_string(&m));
    Ok(out)
}

fn okounkov(job: &Job, json: bool) -> Result<String, CliError> {
    let d = job.d.ok_or_else(|| CliError::Input("okounkov needs --d".into()))?;
    let ok = okounkov_polygon(&job.chain_or_weighted(), &job.valuation, d, job.cutoff_or_default(d))?;
    let twice = ok.twice_area();
    let ratio = &twice / Rational::from_integer((d * d).into());
    if json {
        return Ok(format!(
            "{}\n",
            json!({
                "d": d,
                "cutoff": ok.cutoff,
                "polygon": polygon_json(&ok.polygon),
                "twice_area": rational_to_string(&twice),
                "ratio": rational_to_string(&ratio),
            })
        ));
    }
    let mut out = ok.polygon.dump();
    let _ = writeln!(out, "2*area = {}", rational_to_string(&twice));
    let _ = writeln!(out, "D/d^2 = {}", rational_to_string(&ratio));
    Ok(out)
}

fn oracle_count(job: &Job, at_shift: bool, json: bool) -> Result<String, CliError> {
    job.require_system()?;
    if at_shift {
        let c = fiber_count(&job.system, &job.shift)?;
        if json {
            return Ok(format!(
                "{}\n",
                json!({
                    "count": c.count,
                    "shift": c.shift.iter().map(rational_to_string).collect::<Vec<_>>(),
                    "eliminations": c.eliminations.iter().map(ToString::to_string).collect::<Vec<_>>(),
                })
            ));
        }
        let mut out = format!("{}\n", c.count);
        for e in &c.eliminations {
            let _ = writeln!(out, "# {e}");
        }
        return Ok(out);
    }
    let rep = generic_probe(&job.system, job.trials, job.seed)?;
    if json {
        return Ok(format!(
            "{}\n",
            json!({
                "consensus": rep.consensus,
                "seed": job.seed,
                "trials": rep.probes.len(),
                "outliers": rep.outliers,
                "infinite": rep.infinite(),
                "inconclusive": rep.inconclusive(),
            })
        ));
    }
    Ok(rep.to_string())
}

fn verify(job: &Job, json: bool) -> Result<String, CliError> {
    job.require_system()?;
    let chain = job.chain_or_weighted();
    let mut reports = vec![weighted_bound(&job.weights, &job.system)?, bkk_bound(&job.system, &job.shift)?];
    reports.push(iterated_bound(&chain, &job.system)?);
    if let Some(d) = job.d {
        reports.push(okounkov_bound(&chain, &job.system, &job.valuation, d, job.cutoff_or_default(d))?);
    }
    let probe = generic_probe(&job.system, job.trials, job.seed)?;
    let oracle = Rational::from_integer(probe.consensus.into());
    let violated: Vec<&str> = reports.iter().filter(|r| r.value < oracle).map(|r| r.method.as_str()).collect();
    let attained: Vec<&str> = reports.iter().filter(|r| r.value == oracle).map(|r| r.method.as_str()).collect();
    let verdict = if !violated.is_empty() {
        format!("bound violated: {}", violated.join(", "))
    } else if attained.is_empty() {
        "no bound attained".to_string()
    } else {
        format!("{} exact", attained.join(", "))
    };
    if json {
        let rows: Vec<_> = reports
            .iter()
            .map(|r| json!({ "method": r.method, "value": rational_to_string(&r.value), "exact": r.exact }))
            .collect();
        return Ok(format!(
            "{}\n",
            json!({
                "rows": rows,
                "oracle": { "consensus": probe.consensus, "trials": probe.probes.len(), "seed": job.seed, "outliers": probe.outliers.len() },
                "verdict": verdict,
            })
        ));
    }
    let mut out = format!("{:<10} {:>8}  {}\n", "method", "value", "exact");
    for r in &reports {
        let _ = writeln!(out, "{:<10} {:>8}  {}", r.method.as_str(), rational_to_string(&r.value), r.exact);
    }
    let _ = writeln!(out, "{:<10} {:>8}  {} probes, seed {}", "oracle", probe.consensus, probe.probes.len(), job.seed);
    let _ = writeln!(out, "verdict: {verdict}");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        run(std::iter::once("affine-bezout").chain(args.iter().copied()))
    }

    #[test]
    fn eval_degree_with_weights() {
        let o = go(&["eval-degree", "--weights", "3,2", "x1"]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "3\n"));
        let o = go(&["eval-degree", "--weights", "3,2", "0"]);
        assert_eq!(o.stdout, "-inf\n");
        let o = go(&["--format", "json", "eval-degree", "--weights", "3,2", "-x2^3"]);
        assert_eq!(o.stdout, "{\"polynomial\":\"-x2^3\",\"degree\":6}\n");
    }

    #[test]
    fn exit_codes() {
        let o = go(&["eval-degree", "--weights", "3,2", "x1 +"]);
        assert_eq!(o.code, 2);
        assert!(o.stdout.is_empty() && o.stderr.starts_with("error:"));
        assert_eq!(go(&["bogus"]).code, 2);
        let o = go(&["bound", "--method", "weighted", "--weights", "1,1", "--poly", "x1", "--poly", "5"]);
        assert_eq!(o.code, 3);
        assert!(o.stdout.is_empty());
        let o = go(&["oracle-count", "--poly", "x1", "--poly", "x1", "--at-shift"]);
        assert_eq!(o.code, 3);
        assert_eq!(go(&["--help"]).code, 0);
    }

    #[test]
    fn bound_inline() {
        let o = go(&[
            "--format", "json", "bound", "--method", "bkk", "--poly", "x1 + (x1^2 - x2^3)^2", "--poly", "x1^2 - x2^3",
        ]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert!(o.stdout.starts_with(r#"{"method":"bkk","value":"12","#), "{}", o.stdout);
    }
}
