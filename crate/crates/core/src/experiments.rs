//! Monte Carlo runs over sizes and seeds.
//!
//! Trial `i` at size `n` draws everything from `trial_seed(master, n, i)`, so
//! records do not depend on scheduling. Records are sorted by
//! `(n, trial, mode)` before they are returned.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constants;
use crate::error::{Error, Result};
use crate::graph::{connected_components, underlying_graph, Graph};
use crate::matching::max_simple_two_matching;
use crate::pipeline::{run_extension_rotation, run_practical, verify_hamilton_cycle, HamiltonResult, Outcome};
use crate::rng::{derive_seed, trial_seed};
use crate::sampler::{sample_m_out, sample_split};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Faithful,
    Practical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeSelection {
    Faithful,
    Practical,
    Both,
}

impl ModeSelection {
    pub fn modes(self) -> &'static [Mode] {
        match self {
            Self::Faithful => &[Mode::Faithful],
            Self::Practical => &[Mode::Practical],
            Self::Both => &[Mode::Faithful, Mode::Practical],
        }
    }
}

impl std::str::FromStr for ModeSelection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "faithful" => Ok(Self::Faithful),
            "practical" => Ok(Self::Practical),
            "both" => Ok(Self::Both),
            _ => Err(Error::InvalidParameter(format!("unknown mode {s:?}"))),
        }
    }
}

fn default_sizes() -> Vec<usize> {
    vec![100, 300, 1000]
}

fn default_trials() -> usize {
    20
}

fn default_mode() -> ModeSelection {
    ModeSelection::Both
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default = "default_sizes")]
    pub sizes: Vec<usize>,
    #[serde(default = "default_trials")]
    pub trials: usize,
    #[serde(default)]
    pub master_seed: u64,
    #[serde(default = "default_mode")]
    pub mode: ModeSelection,
    /// Informational tags copied into the summary.
    #[serde(default)]
    pub metrics: Vec<String>,
    /// CSV destination for trial records.
    #[serde(default)]
    pub out_path: Option<PathBuf>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            sizes: default_sizes(),
            trials: default_trials(),
            master_seed: 0,
            mode: default_mode(),
            metrics: Vec::new(),
            out_path: None,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidParameter("trials must be at least 1".into()));
        }
        if self.sizes.is_empty() || self.sizes.iter().any(|&n| n < 3) {
            return Err(Error::InvalidParameter("sizes must be non-empty and at least 3".into()));
        }
        Ok(())
    }
}

/// One pipeline run. Columns are written in field order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialRecord {
    pub n: usize,
    pub trial: usize,
    pub seed: u64,
    pub mode: Mode,
    pub outcome: &'static str,
    pub fail_reason: Option<String>,
    pub kappa_f2: usize,
    pub rho_f2: usize,
    pub arcs_used: usize,
    pub end_ratio: f64,
    pub runtime_ms: f64,
    pub connected_2out: bool,
}

impl TrialRecord {
    /// Equality ignoring wall-clock time.
    pub fn same_result(&self, other: &Self) -> bool {
        let mut a = self.clone();
        a.runtime_ms = other.runtime_ms;
        a == *other
    }

    pub fn succeeded(&self) -> bool {
        self.outcome == "cycle"
    }
}

pub const CSV_COLUMNS: &str =
    "n,trial,seed,mode,outcome,fail_reason,kappa_f2,rho_f2,arcs_used,end_ratio,runtime_ms,connected_2out";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SummaryStats {
    pub n: usize,
    pub mode: Mode,
    pub trials: usize,
    pub successes: usize,
    pub success_rate: f64,
    pub wilson_lower: f64,
    pub wilson_upper: f64,
    pub kappa_mean: f64,
    pub kappa_max: usize,
    pub kappa_threshold: f64,
    pub kappa_within_rate: f64,
    pub arcs_mean: f64,
    pub arcs_max: usize,
    pub arcs_threshold: f64,
    pub connectivity_rate: f64,
    pub end_ratio_mean: f64,
}

/// Wilson score interval at 95% confidence.
pub fn wilson_interval(successes: usize, trials: usize) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let z = 1.959_963_984_540_054_f64;
    let n = trials as f64;
    let p = successes as f64 / n;
    let denom = 1.0 + z * z / n;
    let centre = (p + z * z / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z * z / (4.0 * n * n)).sqrt() / denom;
    ((centre - half).max(0.0), (centre + half).min(1.0))
}

fn record(n: usize, trial: usize, seed: u64, mode: Mode, full: &Graph, r: &HamiltonResult) -> (&'static str, Option<String>) {
    match &r.outcome {
        Outcome::Cycle(c) if verify_hamilton_cycle(full, c) => ("cycle", None),
        Outcome::Cycle(_) => {
            debug_assert!(false, "unverified cycle at n={n} trial={trial} seed={seed} mode={mode:?}");
            ("fail", Some("unverified".into()))
        }
        Outcome::Fail(reason) => ("fail", Some(serde_json::to_value(reason).unwrap().as_str().unwrap().to_string())),
    }
}

fn run_trial(n: usize, trial: usize, master: u64, modes: &[Mode]) -> Result<Vec<TrialRecord>> {
    let seed = trial_seed(master, n, trial);
    let s = sample_split(n, seed)?;
    let full = s.full_graph();
    let connected = connected_components(&s.g2).is_connected();
    let mut out = Vec::new();
    for &mode in modes {
        let start = Instant::now();
        let f2 = max_simple_two_matching(&s.g2);
        let (kappa, rho) = (f2.kappa(), f2.rho());
        let r = match mode {
            Mode::Faithful => run_extension_rotation(&s, f2, derive_seed(seed, &[1]))?,
            Mode::Practical => run_practical(&full, derive_seed(seed, &[2])),
        };
        let (outcome, fail_reason) = record(n, trial, seed, mode, &full, &r);
        out.push(TrialRecord {
            n,
            trial,
            seed,
            mode,
            outcome,
            fail_reason,
            kappa_f2: kappa,
            rho_f2: rho,
            arcs_used: r.stats.arcs_used,
            end_ratio: r.stats.max_end() as f64 / n as f64,
            runtime_ms: start.elapsed().as_secs_f64() * 1e3,
            connected_2out: connected,
        });
    }
    Ok(out)
}

pub fn summarize(records: &[TrialRecord]) -> Vec<SummaryStats> {
    let mut groups: BTreeMap<(usize, Mode), Vec<&TrialRecord>> = BTreeMap::new();
    for r in records {
        groups.entry((r.n, r.mode)).or_default().push(r);
    }
    groups
        .into_iter()
        .map(|((n, mode), rs)| {
            let t = rs.len();
            let tf = t as f64;
            let successes = rs.iter().filter(|r| r.succeeded()).count();
            let (wilson_lower, wilson_upper) = wilson_interval(successes, t);
            let kappa_threshold = constants::kappa_threshold(n);
            SummaryStats {
                n,
                mode,
                trials: t,
                successes,
                success_rate: successes as f64 / tf,
                wilson_lower,
                wilson_upper,
                kappa_mean: rs.iter().map(|r| r.kappa_f2 as f64).sum::<f64>() / tf,
                kappa_max: rs.iter().map(|r| r.kappa_f2).max().unwrap_or(0),
                kappa_threshold,
                kappa_within_rate: rs.iter().filter(|r| r.kappa_f2 as f64 <= kappa_threshold).count() as f64 / tf,
                arcs_mean: rs.iter().map(|r| r.arcs_used as f64).sum::<f64>() / tf,
                arcs_max: rs.iter().map(|r| r.arcs_used).max().unwrap_or(0),
                arcs_threshold: constants::arcs_threshold(n),
                connectivity_rate: rs.iter().filter(|r| r.connected_2out).count() as f64 / tf,
                end_ratio_mean: rs.iter().map(|r| r.end_ratio).sum::<f64>() / tf,
            }
        })
        .collect()
}

pub fn run_experiment(cfg: &ExperimentConfig) -> Result<(Vec<TrialRecord>, Vec<SummaryStats>)> {
    cfg.validate()?;
    let jobs: Vec<(usize, usize)> = cfg
        .sizes
        .iter()
        .flat_map(|&n| (0..cfg.trials).map(move |t| (n, t)))
        .collect();
    let modes = cfg.mode.modes();
    let nested: Vec<Vec<TrialRecord>> = jobs
        .par_iter()
        .map(|&(n, t)| run_trial(n, t, cfg.master_seed, modes))
        .collect::<Result<_>>()?;
    let mut records: Vec<TrialRecord> = nested.into_iter().flatten().collect();
    records.sort_by_key(|r| (r.n, r.trial, r.mode));
    if let Some(path) = &cfg.out_path {
        write_records_csv(std::fs::File::create(path)?, &records)?;
    }
    let summary = summarize(&records);
    Ok((records, summary))
}

pub fn write_records_csv<W: Write>(w: W, records: &[TrialRecord]) -> Result<()> {
    let mut wr = csv::Writer::from_writer(w);
    for r in records {
        wr.serialize(r)?;
    }
    wr.flush()?;
    Ok(())
}

/// Summary plus configuration echo, as pretty JSON.
pub fn write_summary_json<W: Write>(mut w: W, cfg: &ExperimentConfig, summary: &[SummaryStats]) -> Result<()> {
    let doc = serde_json::json!({ "config": cfg, "summary": summary });
    serde_json::to_writer_pretty(&mut w, &doc)?;
    writeln!(w)?;
    Ok(())
}

/// Evaluates `key` against every summary row. Keys: `min_success_rate`,
/// `min_wilson_lower`, `min_connectivity_rate`, `min_kappa_within_rate`,
/// `max_arcs_ratio` (mean arcs used over `12 n / ln n`).
pub fn check_assertion(summary: &[SummaryStats], key: &str, value: f64) -> Result<bool> {
    let get: fn(&SummaryStats) -> f64 = match key {
        "min_success_rate" => |s| s.success_rate,
        "min_wilson_lower" => |s| s.wilson_lower,
        "min_connectivity_rate" => |s| s.connectivity_rate,
        "min_kappa_within_rate" => |s| s.kappa_within_rate,
        "max_arcs_ratio" => |s| s.arcs_mean / s.arcs_threshold,
        _ => return Err(Error::InvalidParameter(format!("unknown assertion {key:?}"))),
    };
    Ok(if key.starts_with("max_") {
        summary.iter().all(|s| get(s) <= value)
    } else {
        summary.iter().all(|s| get(s) >= value)
    })
}

/// Some vertex has at least three neighbours of degree two. No Hamilton cycle
/// can then pass through all three.
pub fn has_two_out_obstruction(g: &Graph) -> bool {
    (0..g.n()).any(|v| g.neighbors(v).iter().filter(|&&w| g.degree(w) == 2).count() >= 3)
}

/// Fraction of sampled 2-out graphs with the obstruction.
pub fn check_two_out_obstruction(n: usize, trials: usize, seed: u64) -> Result<f64> {
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    let hits = (0..trials)
        .into_par_iter()
        .map(|t| -> Result<bool> {
            let d = sample_m_out(n, 2, trial_seed(seed, n, t))?;
            Ok(has_two_out_obstruction(&underlying_graph(&d)))
        })
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .filter(|&h| h)
        .count();
    Ok(hits as f64 / trials as f64)
}
