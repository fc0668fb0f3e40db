mod common;

use hamout::matching::{max_simple_two_matching, Component, TwoMatching};
use hamout::oracle::brute_hamiltonian;
use hamout::pipeline::{
    run_extension_rotation, run_extension_rotation_with, run_practical, verify_hamilton_cycle,
    FaithfulConfig, Outcome,
};
use hamout::sampler::sample_split;

#[test]
fn spanning_cycle_needs_no_reservoir() {
    let mut found = 0;
    for seed in 0..200u64 {
        let s = sample_split(40, seed).unwrap();
        let Some(c) = run_practical(&s.g2, seed).cycle().map(<[usize]>::to_vec) else {
            continue;
        };
        let f0 = TwoMatching::from_components(40, vec![Component::cycle(c.clone())]).unwrap();
        let r = run_extension_rotation(&s, f0, seed).unwrap();
        assert_eq!(r.stats.arcs_used, 0);
        assert!(verify_hamilton_cycle(&s.full_graph(), r.cycle().unwrap()));
        found += 1;
        if found == 5 {
            break;
        }
    }
    assert_eq!(found, 5);
}

#[test]
fn two_four_cycles_at_eight() {
    let mut checked = 0;
    for seed in 0..20_000u64 {
        let s = sample_split(8, seed).unwrap();
        let f = max_simple_two_matching(&s.g2);
        let two_squares = f.rho() == 0 && f.components().iter().all(|c| c.len() == 4);
        if !two_squares {
            continue;
        }
        let full = s.full_graph();
        let r = run_extension_rotation(&s, f, seed).unwrap();
        let ham = brute_hamiltonian(&full).unwrap();
        if let Some(c) = r.cycle() {
            assert!(verify_hamilton_cycle(&full, c));
            assert!(ham);
        }
        assert!(r.stats.arcs_used <= 2);
        checked += 1;
        if checked == 10 {
            break;
        }
    }
    assert!(checked > 0);
}

#[test]
fn stepwise_invariants() {
    let cfg = FaithfulConfig { check_steps: true, ..FaithfulConfig::default() };
    for n in [30usize, 100, 200] {
        for seed in 0..15u64 {
            let s = sample_split(n, seed).unwrap();
            let f = max_simple_two_matching(&s.g2);
            let bound = f.kappa() + f.rho();
            let r = run_extension_rotation_with(&s, f, seed, &cfg).unwrap();
            assert!(r.stats.arcs_used <= bound);
            r.pipeline.as_ref().unwrap().check_invariants(&s).unwrap();
            if let Outcome::Cycle(c) = &r.outcome {
                assert!(verify_hamilton_cycle(&s.full_graph(), c));
            }
        }
    }
}

#[test]
fn rejects_matching_outside_g2() {
    let s = sample_split(20, 3).unwrap();
    let (u, v) = (0..20)
        .flat_map(|u| (u + 1..20).map(move |v| (u, v)))
        .find(|&(u, v)| !s.g2.has_edge(u, v))
        .unwrap();
    let f = TwoMatching::from_edges(20, &[(u, v)]).unwrap();
    assert!(run_extension_rotation(&s, f, 0).is_err());
}

#[test]
fn practical_agrees_with_oracle() {
    for seed in 0..60u64 {
        let n = 8 + (seed as usize % 11);
        let g = common::three_out(n, 50 + seed);
        let r = run_practical(&g, seed);
        let ham = brute_hamiltonian(&g).unwrap();
        if let Some(c) = r.cycle() {
            assert!(verify_hamilton_cycle(&g, c) && ham);
        }
    }
}
