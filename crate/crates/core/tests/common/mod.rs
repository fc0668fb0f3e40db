#![allow(dead_code)]

use hamout::graph::{underlying_graph, Graph};
use hamout::rng::{stream, StreamRng};
use hamout::sampler::sample_m_out;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn rng(seed: u64) -> StreamRng {
    stream(seed)
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn gnp(rng: &mut StreamRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn three_out(n: usize, seed: u64) -> Graph {
    underlying_graph(&sample_m_out(n, 3, seed).unwrap())
}

/// A path that cannot be extended at either end, grown greedily from a random start.
pub fn maximal_path(g: &Graph, rng: &mut StreamRng) -> Vec<usize> {
    let n = g.n();
    let mut on = vec![false; n];
    let start = rng.gen_range(0..n);
    let mut path = vec![start];
    on[start] = true;
    for _ in 0..2 {
        loop {
            let end = *path.last().unwrap();
            let mut free: Vec<usize> = g.neighbors(end).iter().copied().filter(|&w| !on[w]).collect();
            free.shuffle(rng);
            match free.first() {
                Some(&w) => {
                    on[w] = true;
                    path.push(w);
                }
                None => break,
            }
        }
        path.reverse();
    }
    path
}

pub fn is_spanning_path(g: &Graph, p: &[usize], x: &[usize]) -> bool {
    let mut a = p.to_vec();
    let mut b = x.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    a == b && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
}
