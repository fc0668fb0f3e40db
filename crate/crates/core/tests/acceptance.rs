//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use rand::Rng;

use hamout::certificates::{certify_f, certify_g, check_superadditivity, F_STEP, G_BOUND, G_FINE_STEP, G_STEP};
use hamout::experiments::{run_experiment, wilson_interval, ExperimentConfig, ModeSelection};
use hamout::graph::{connected_components, families, underlying_graph, Graph};
use hamout::matching::{max_simple_two_matching, tutte_berge_min, DEFAULT_DUAL_CAP};
use hamout::oracle::{brute_hamiltonian, brute_max_two_matching, brute_spanning_path_endpoints};
use hamout::pipeline::{run_extension_rotation, run_practical, verify_hamilton_cycle};
use hamout::rng::{derive_seed, trial_seed};
use hamout::rotation::{check_posa_condition, compute_end_set};
use hamout::sampler::{sample_m_out, sample_split};
use hamout::{constants, Error};

const MASTER: u64 = 20_240_601;

type Check = Result<(bool, String), Error>;

fn duality() -> Check {
    let mut rng = common::rng(MASTER);
    let mut bad = 0;
    for i in 0..200 {
        let n = 1 + i % 10;
        let p = [0.1, 0.25, 0.4, 0.6, 0.9][i % 5];
        let g = common::gnp(&mut rng, n, p);
        let a = max_simple_two_matching(&g).size();
        let b = tutte_berge_min(&g, DEFAULT_DUAL_CAP)?.value;
        let c = brute_max_two_matching(&g)?;
        if a != b || b != c {
            bad += 1;
        }
    }
    Ok((bad == 0, format!("{}/200 instances agree", 200 - bad)))
}

fn cert_g() -> Check {
    let coarse = certify_g(G_STEP, G_BOUND)?;
    let fine = certify_g(G_FINE_STEP, G_BOUND)?;
    Ok((
        coarse.pass && fine.pass,
        format!(
            "step {} bound {:.7} ({} refined), step {} bound {:.7}",
            coarse.step, coarse.global_upper_bound, coarse.refined_cells, fine.step, fine.global_upper_bound
        ),
    ))
}

fn cert_f() -> Check {
    let r = certify_f(F_STEP)?;
    Ok((r.pass && r.global_upper_bound < 1.0, format!("bound {:.6} over {} cells", r.global_upper_bound, r.cells_checked)))
}

fn superadditivity() -> Check {
    let mut rng = common::rng(MASTER + 4);
    let mut bad = 0;
    for _ in 0..1_000_000 {
        let mut draw = || 10f64.powf(rng.gen_range(-6.0..4.0));
        let (a, b, x, y) = (draw(), draw(), draw(), draw());
        if !check_superadditivity(a, b, x, y)? {
            bad += 1;
        }
    }
    Ok((bad == 0, format!("{bad} violations in 10^6 quadruples")))
}

fn rotation_soundness() -> Check {
    let mut rng = common::rng(MASTER + 5);
    let (mut contained, mut posa) = (0, 0);
    let mut total_end = 0;
    for i in 0..500 {
        let n = 8 + i % 8;
        let g = underlying_graph(&sample_m_out(n, 3, trial_seed(MASTER, n, i))?);
        let path = common::maximal_path(&g, &mut rng);
        let st = compute_end_set(&g, &path, path[0])?;
        let brute = brute_spanning_path_endpoints(&g, &path, path[0])?;
        total_end += st.len();
        if st.end_set.iter().all(|y| brute.binary_search(y).is_ok()) {
            contained += 1;
        }
        if check_posa_condition(&g, &path, &st.end_set) {
            posa += 1;
        }
    }
    Ok((
        contained == 500 && posa == 500,
        format!("containment {contained}/500, Posa {posa}/500, mean |END| {:.2}", total_end as f64 / 500.0),
    ))
}

fn practical_rate() -> Check {
    let cfg = ExperimentConfig {
        sizes: vec![1000],
        trials: 200,
        master_seed: MASTER,
        mode: ModeSelection::Practical,
        ..ExperimentConfig::default()
    };
    let (_, summary) = run_experiment(&cfg)?;
    let s = &summary[0];
    Ok((
        s.success_rate >= 0.99 && s.wilson_lower >= 0.96,
        format!("{}/{} cycles, Wilson lower {:.4}", s.successes, s.trials, s.wilson_lower),
    ))
}

fn faithful_invariants() -> Check {
    let mut bad = Vec::new();
    let mut cycles = 0;
    let mut total = 0;
    for n in [100usize, 300, 1000] {
        for t in 0..100 {
            let seed = trial_seed(MASTER, n, t);
            let s = sample_split(n, seed)?;
            let f2 = max_simple_two_matching(&s.g2);
            let cap = f2.kappa() + f2.rho();
            let r = run_extension_rotation(&s, f2, derive_seed(seed, &[1]))?;
            total += 1;
            let arcs_ok = r.stats.arcs_used <= cap;
            let disc_ok = r.pipeline.as_ref().map_or(Ok(()), |p| p.check_invariants(&s));
            let cyc_ok = r.cycle().map_or(true, |c| verify_hamilton_cycle(&s.full_graph(), c));
            cycles += r.is_cycle() as usize;
            if !(arcs_ok && disc_ok.is_ok() && cyc_ok) {
                bad.push((n, t));
            }
        }
    }
    Ok((
        bad.is_empty(),
        format!("{}/{total} runs clean ({cycles} cycles), violations {bad:?}", total - bad.len()),
    ))
}

fn kappa_proxy() -> Check {
    let n = 1000;
    let thr = constants::kappa_threshold(n);
    let mut within = 0;
    let mut worst = 0;
    for t in 0..200 {
        let s = sample_split(n, trial_seed(MASTER, n, t))?;
        let k = max_simple_two_matching(&s.g2).kappa();
        worst = worst.max(k);
        within += (k as f64 <= thr) as usize;
    }
    Ok((within as f64 >= 0.95 * 200.0, format!("{within}/200 within {thr:.1}, max kappa {worst}")))
}

fn g2_connected() -> Check {
    let n = 1000;
    let connected = (0..500)
        .map(|t| sample_split(n, trial_seed(MASTER + 9, n, t)).map(|s| connected_components(&s.g2).is_connected()))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .filter(|&c| c)
        .count();
    let (lo, _) = wilson_interval(connected, 500);
    Ok((connected as f64 >= 0.99 * 500.0, format!("{connected}/500 connected, Wilson lower {lo:.4}")))
}

fn controls() -> Vec<(&'static str, Graph)> {
    let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
    let k34 = Graph::from_edges(7, (0..3).flat_map(|a| (3..7).map(move |b| (a, b)))).unwrap();
    let two_k4 = families::disjoint_union(&families::complete(4), &families::complete(4));
    let theta = Graph::from_edges(8, [(0, 1), (1, 2), (2, 7), (0, 3), (3, 4), (4, 7), (0, 5), (5, 6), (6, 7)]).unwrap();
    vec![
        ("petersen", families::petersen()),
        ("bowtie", bowtie),
        ("K3,4", k34),
        ("2K4", two_k4),
        ("theta", theta),
        ("path", families::path(9)),
        ("star", families::star(6)),
    ]
}

fn small_end_to_end() -> Check {
    let mut bad = Vec::new();
    let mut non_ham = 0;
    for i in 0..100 {
        let n = 8 + i % 11;
        let seed = trial_seed(MASTER + 10, n, i);
        let s = sample_split(n, seed)?;
        let full = s.full_graph();
        let ham = brute_hamiltonian(&full)?;
        non_ham += !ham as usize;
        let faithful = run_extension_rotation(&s, max_simple_two_matching(&s.g2), derive_seed(seed, &[1]))?;
        let practical = run_practical(&full, derive_seed(seed, &[2]));
        for r in [&faithful, &practical] {
            if r.is_cycle() && !(ham && verify_hamilton_cycle(&full, r.cycle().unwrap())) {
                bad.push(format!("sample {i}"));
            }
        }
    }
    let ctl = controls();
    for (name, g) in &ctl {
        let ham = brute_hamiltonian(g)?;
        let r = run_practical(g, MASTER);
        if ham || r.is_cycle() {
            bad.push(name.to_string());
        }
    }
    Ok((
        bad.is_empty(),
        format!("{non_ham}/100 samples non-Hamiltonian, {} controls rejected, mismatches {bad:?}", ctl.len()),
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("duality equivalence", duality),
        ("certificate g", cert_g),
        ("certificate f", cert_f),
        ("weighted inequality", superadditivity),
        ("rotation soundness", rotation_soundness),
        ("practical success at n=1000", practical_rate),
        ("faithful invariants", faithful_invariants),
        ("kappa(F2) threshold", kappa_proxy),
        ("G2 connectivity", g2_connected),
        ("small-case end to end", small_end_to_end),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = match f() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        failed += !ok as usize;
        println!(
            "criterion {:>2} {} {name}: {detail} [{:.1}s]",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
