use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hamout::certificates::{certify_f, certify_g, G_BOUND, G_STEP, F_STEP};
use hamout::diagnostics::{struct_report_with, DEFAULT_BALL_RADIUS};
use hamout::experiments::{
    check_assertion, run_experiment, write_summary_json, ExperimentConfig, ModeSelection,
};
use hamout::matching::{max_simple_two_matching, tutte_berge_min, DEFAULT_DUAL_CAP};
use hamout::pipeline::{run_extension_rotation, run_practical, verify_hamilton_cycle};
use hamout::sampler::{sample_m_out, sample_split};
use hamout::{io as gio, rng};

const EXIT_FAIL: u8 = 2;
const EXIT_CERT_FAIL: u8 = 3;
const EXIT_ASSERT_FAIL: u8 = 4;

#[derive(Parser)]
#[command(name = "hamout", version, about = "Random m-out graphs, 2-matchings and Hamilton cycles")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum HamMode {
    Faithful,
    Practical,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    G,
    F,
}

#[derive(Subcommand)]
enum Cmd {
    /// Draw an m-out digraph, or the split 3-out sample with its reserved set
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Draw the split sample; K and L go to the sidecar file
        #[arg(long)]
        split: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Sidecar path for --split (default: <out>.split.json)
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },
    /// Maximum simple 2-matching of a graph file
    Match {
        graph: PathBuf,
        /// Also search for a minimising Tutte-Berge pair (small graphs only)
        #[arg(long)]
        dual: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find a Hamilton cycle in a seeded 3-out sample
    Ham {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "faithful")]
        mode: HamMode,
        /// Write the event log as JSON
        #[arg(long)]
        emit_trace: Option<PathBuf>,
    },
    /// Structural statistics of a seeded 3-out sample
    Diagnose {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of probe vertices, taken as 0..probes
        #[arg(long, default_value_t = 8)]
        probes: usize,
        #[arg(long, default_value_t = DEFAULT_BALL_RADIUS)]
        radius: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify g <= bound on its region, or f < 1 on [0.415, 1)
    Certify {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        step: Option<f64>,
        #[arg(long, default_value_t = G_BOUND)]
        bound: f64,
    },
    /// Monte Carlo runs over sizes and seeds
    #[command(after_help = concat!(
        "CSV columns: ",
        "n,trial,seed,mode,outcome,fail_reason,kappa_f2,rho_f2,arcs_used,end_ratio,runtime_ms,connected_2out\n",
        "Assertions: min_success_rate, min_wilson_lower, min_connectivity_rate, min_kappa_within_rate, max_arcs_ratio"
    ))]
    Experiment {
        #[arg(long)]
        config: Option<PathBuf>,
        /// Sizes, comma separated
        #[arg(long, value_delimiter = ',')]
        n: Vec<usize>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        mode: Option<ModeSelection>,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
        /// KEY=VALUE, checked against every summary row
        #[arg(long = "assert")]
        asserts: Vec<String>,
    },
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn write_json(path: Option<&Path>, value: &impl serde::Serialize) -> Result<()> {
    let mut w = output(path)?;
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn parse_assert(s: &str) -> Result<(String, f64)> {
    let (k, v) = s.split_once('=').with_context(|| format!("expected KEY=VALUE, got {s:?}"))?;
    Ok((k.trim().to_string(), v.trim().parse().with_context(|| format!("bad value in {s:?}"))?))
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Sample { n, m, seed, split, out, sidecar } => {
            if split {
                if m != 3 {
                    bail!("--split draws 3-out samples; drop --m or set it to 3");
                }
                let side = match (&sidecar, &out) {
                    (Some(p), _) => p.clone(),
                    (None, Some(o)) => PathBuf::from(format!("{}.split.json", o.display())),
                    (None, None) => bail!("--split needs --out or --sidecar"),
                };
                let s = sample_split(n, seed)?;
                let mut w = output(out.as_deref())?;
                gio::write_digraph(&mut w, &s.full_digraph())?;
                w.flush()?;
                write_json(Some(&side), &s.sidecar())?;
            } else {
                let d = sample_m_out(n, m, seed)?;
                let mut w = output(out.as_deref())?;
                gio::write_digraph(&mut w, &d)?;
                w.flush()?;
            }
            Ok(0)
        }
        Cmd::Match { graph, dual, out } => {
            let file = File::open(&graph).with_context(|| format!("opening {}", graph.display()))?;
            let g = gio::read_graph(BufReader::new(file))?;
            let f = max_simple_two_matching(&g);
            let mut doc = json!({
                "size": f.size(),
                "kappa": f.kappa(),
                "rho": f.rho(),
                "components": f.components(),
            });
            if dual {
                doc["dual"] = serde_json::to_value(tutte_berge_min(&g, DEFAULT_DUAL_CAP)?)?;
            }
            write_json(out.as_deref(), &doc)?;
            Ok(0)
        }
        Cmd::Ham { n, seed, mode, emit_trace } => {
            let s = sample_split(n, seed)?;
            let full = s.full_graph();
            let run_seed = rng::derive_seed(seed, &[1]);
            let (label, r) = match mode {
                HamMode::Faithful => {
                    let f2 = max_simple_two_matching(&s.g2);
                    ("faithful", run_extension_rotation(&s, f2, run_seed)?)
                }
                HamMode::Practical => ("practical", run_practical(&full, run_seed)),
            };
            if let Some(p) = &emit_trace {
                write_json(Some(p), &r.trace)?;
            }
            let verified = r.cycle().is_some_and(|c| verify_hamilton_cycle(&full, c));
            write_json(
                None,
                &json!({
                    "n": n,
                    "seed": seed,
                    "mode": label,
                    "outcome": if verified { "cycle" } else { "fail" },
                    "result": r.outcome,
                    "stats": r.stats,
                }),
            )?;
            Ok(if verified { 0 } else { EXIT_FAIL })
        }
        Cmd::Diagnose { n, seed, probes, radius, out } => {
            let s = sample_split(n, seed)?;
            let probes: Vec<usize> = (0..probes.min(n)).collect();
            let report = struct_report_with(&s.full_digraph(), &s.reserved, &probes, radius)?;
            write_json(out.as_deref(), &report)?;
            Ok(0)
        }
        Cmd::Certify { target, step, bound } => {
            let report = match target {
                Target::G => certify_g(step.unwrap_or(G_STEP), bound)?,
                Target::F => certify_f(step.unwrap_or(F_STEP))?,
            };
            write_json(None, &report)?;
            Ok(if report.pass { 0 } else { EXIT_CERT_FAIL })
        }
        Cmd::Experiment { config, n, trials, seed, mode, csv, json, asserts } => {
            let mut cfg = match &config {
                Some(p) => {
                    let file = File::open(p).with_context(|| format!("opening {}", p.display()))?;
                    serde_json::from_reader(BufReader::new(file)).context("parsing config")?
                }
                None => ExperimentConfig::default(),
            };
            if !n.is_empty() {
                cfg.sizes = n;
            }
            if let Some(t) = trials {
                cfg.trials = t;
            }
            if let Some(s) = seed {
                cfg.master_seed = s;
            }
            if let Some(m) = mode {
                cfg.mode = m;
            }
            if csv.is_some() {
                cfg.out_path = csv;
            }
            let checks = asserts.iter().map(|a| parse_assert(a)).collect::<Result<Vec<_>>>()?;
            let (_, summary) = run_experiment(&cfg)?;
            let mut w = output(json.as_deref())?;
            write_summary_json(&mut w, &cfg, &summary)?;
            w.flush()?;
            let mut ok = true;
            for (k, v) in &checks {
                let pass = check_assertion(&summary, k, *v)?;
                eprintln!("assert {k}={v}: {}", if pass { "pass" } else { "FAIL" });
                ok &= pass;
            }
            Ok(if ok { 0 } else { EXIT_ASSERT_FAIL })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
