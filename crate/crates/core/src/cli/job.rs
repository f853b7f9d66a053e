use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::CliError;
use crate::bounds::BoundMethod;
use crate::degrees::{ChainConfig, SemidegreeChain, WeightedDegree};
use crate::expr::{parse, parse_rational, AmbientRing, Polynomial, Rational};
use crate::polytope::MonomialValuation;

/// On-disk job description. Every field may also come from the command line.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    #[serde(default)]
    pub vars: Option<Vec<String>>,
    #[serde(default)]
    pub system: Vec<String>,
    #[serde(default)]
    pub chain: Option<ChainConfig>,
    #[serde(default)]
    pub weights: Option<Vec<i64>>,
    #[serde(default)]
    pub method: Option<String>,
    /// Target point `a` as rational strings.
    #[serde(default)]
    pub shift: Option<Vec<String>>,
    #[serde(default)]
    pub d: Option<i64>,
    #[serde(default)]
    pub cutoff: Option<u32>,
    /// `lex`, `lex-rev` or `grlex`.
    #[serde(default)]
    pub valuation: Option<String>,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub trials: Option<usize>,
    #[serde(default)]
    pub output: Option<PathBuf>,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

impl JobConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        serde_json::from_str(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }
}

pub fn load_chain(path: &Path) -> Result<ChainConfig, CliError> {
    serde_json::from_str(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Validated job.
#[derive(Debug, Clone)]
pub struct Job {
    pub ambient: Arc<AmbientRing>,
    pub system: Vec<Polynomial>,
    pub chain: Option<SemidegreeChain>,
    pub weights: WeightedDegree,
    pub method: Option<BoundMethod>,
    pub shift: Vec<Rational>,
    pub d: Option<i64>,
    pub cutoff: Option<u32>,
    pub valuation: MonomialValuation,
    pub seed: u64,
    pub trials: usize,
    pub output: Option<PathBuf>,
}

pub fn parse_valuation(s: &str, n: usize) -> Result<MonomialValuation, CliError> {
    match s {
        "lex" => Ok(MonomialValuation::lex(n)),
        "lex-rev" => Ok(MonomialValuation::Lex((0..n).rev().collect())),
        "grlex" => Ok(MonomialValuation::GradedLex),
        other => Err(CliError::Input(format!("unknown valuation `{other}` (expected lex, lex-rev or grlex)"))),
    }
}

impl Job {
    pub fn resolve(cfg: &JobConfig) -> Result<Job, CliError> {
        let vars = match (&cfg.vars, &cfg.chain) {
            (Some(v), Some(c)) if v != &c.vars => {
                return Err(CliError::Input(format!("job variables {v:?} differ from chain variables {:?}", c.vars)))
            }
            (Some(v), _) => v.clone(),
            (None, Some(c)) => c.vars.clone(),
            (None, None) => {
                let n = cfg.weights.as_ref().map(Vec::len).unwrap_or(2);
                (1..=n).map(|i| format!("x{i}")).collect()
            }
        };
        let ambient = AmbientRing::new(&vars)?;
        let system = cfg.system.iter().map(|s| parse(s, &ambient)).collect::<Result<Vec<_>, _>>()?;
        let chain = cfg.chain.as_ref().map(SemidegreeChain::from_config).transpose()?;
        let weights = match (&cfg.weights, &chain) {
            (Some(w), _) => WeightedDegree::new(&ambient, w.clone())?,
            (None, Some(c)) => c.base().clone(),
            (None, None) => WeightedDegree::new(&ambient, vec![1; ambient.arity()])?,
        };
        let method = cfg.method.as_deref().map(str::parse).transpose().map_err(CliError::Input)?;
        let shift = match &cfg.shift {
            None => vec![Rational::from_integer(1.into()); ambient.arity()],
            Some(v) => v
                .iter()
                .map(|s| parse_rational(s).ok_or_else(|| CliError::Input(format!("bad rational `{s}` in shift"))))
                .collect::<Result<_, _>>()?,
        };
        if shift.len() != ambient.arity() {
            return Err(CliError::Input(format!("shift has {} coordinates, expected {}", shift.len(), ambient.arity())));
        }
        if let Some(d) = cfg.d {
            if d < 1 {
                return Err(CliError::Input(format!("d = {d} must be positive")));
            }
        }
        let valuation = parse_valuation(cfg.valuation.as_deref().unwrap_or("lex"), ambient.arity())?;
        Ok(Job {
            ambient,
            system,
            chain,
            weights,
            method,
            shift,
            d: cfg.d,
            cutoff: cfg.cutoff,
            valuation,
            seed: cfg.seed.unwrap_or(0),
            trials: cfg.trials.unwrap_or(5),
            output: cfg.output.clone(),
        })
    }

    /// The configured chain, or the weighted degree as a chain without
    /// steps.
    pub fn chain_or_weighted(&self) -> SemidegreeChain {
        self.chain.clone().unwrap_or_else(|| SemidegreeChain::weighted(self.weights.clone()))
    }

    pub fn require_system(&self) -> Result<(), CliError> {
        if self.system.is_empty() {
            return Err(CliError::Input("no system given (use --config or --poly)".into()));
        }
        Ok(())
    }

    pub fn cutoff_or_default(&self, d: i64) -> u32 {
        self.cutoff.unwrap_or_else(|| u32::try_from(3 * d).unwrap_or(u32::MAX).max(6))
    }
}
