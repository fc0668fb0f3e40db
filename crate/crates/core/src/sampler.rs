//! The m-out model and its split form with held-back third arcs.

use rand::Rng;
use serde::Serialize;

use crate::constants;
use crate::error::{Error, Result};
use crate::graph::{underlying_graph, Digraph, Graph};
use crate::rng;

/// Each vertex independently draws `m` heads uniformly from `0..n`, with replacement.
pub fn sample_m_out(n: usize, m: usize, seed: u64) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let mut rng = rng::stream(seed);
    let out = (0..n)
        .map(|_| (0..m).map(|_| rng.gen_range(0..n)).collect())
        .collect();
    Digraph::from_out_lists(out)
}

/// A 3-out digraph drawn as (two-arc part on `K`, held-back arcs).
///
/// `d1` has out-degree 2 on the reserved set `K` and 3 elsewhere; `reserved_heads[i]`
/// is the head of the third arc of `reserved[i]`. Vertices of `K` with no in-arc in
/// `d1` form `L`; their third arcs go straight back into the graph (`a2`), the rest
/// (`a3`) form the reservoir.
#[derive(Clone, Debug)]
pub struct SplitSample {
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub d1: Digraph,
    /// `K`, sorted.
    pub reserved: Vec<usize>,
    /// Head for each vertex of `reserved`, in the same order.
    pub reserved_heads: Vec<usize>,
    /// `L`, sorted.
    pub l: Vec<usize>,
    pub a2: Vec<(usize, usize)>,
    pub a3: Vec<(usize, usize)>,
    pub d2: Digraph,
    pub g2: Graph,
    /// `a3` as undirected edges `(min, max)`; loops dropped, duplicates kept once.
    pub e3: Vec<(usize, usize)>,
    in_k: Vec<bool>,
    in_l: Vec<bool>,
    reservoir: Vec<Option<usize>>,
}

impl SplitSample {
    pub fn is_reserved(&self, v: usize) -> bool {
        self.in_k[v]
    }

    pub fn in_l(&self, v: usize) -> bool {
        self.in_l[v]
    }

    /// Whether `v` belongs to `K \ L`.
    pub fn in_reservoir(&self, v: usize) -> bool {
        self.in_k[v] && !self.in_l[v]
    }

    /// Head of the held-back arc of `v`, for `v` in `K \ L`.
    pub fn reservoir_head(&self, v: usize) -> Option<usize> {
        self.reservoir[v]
    }

    /// `d1 + a2 + a3`: every vertex has out-degree 3.
    pub fn full_digraph(&self) -> Digraph {
        let mut d = self.d2.clone();
        for &(t, h) in &self.a3 {
            d.push_arc(t, h).expect("arc in range");
        }
        d
    }

    pub fn full_graph(&self) -> Graph {
        underlying_graph(&self.full_digraph())
    }

    pub fn sidecar(&self) -> SplitSidecar {
        SplitSidecar {
            n: self.n,
            k: self.k,
            seed: self.seed,
            k_set: self.reserved.clone(),
            l_set: self.l.clone(),
        }
    }
}

/// JSON companion written next to a split sample's edge list.
#[derive(Clone, Debug, Serialize)]
pub struct SplitSidecar {
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    #[serde(rename = "K")]
    pub k_set: Vec<usize>,
    #[serde(rename = "L")]
    pub l_set: Vec<usize>,
}

/// Draws `(D1, A)` uniformly from `Omega_k x [n]^k` with `k = ceil(n / sqrt(ln n))`.
///
/// `K` is a seeded Fisher–Yates prefix. Since `|Omega_K|` does not depend on `K`,
/// drawing `K` uniformly and then `D1` uniformly on `Omega_K` is uniform on `Omega_k`.
pub fn sample_split(n: usize, seed: u64) -> Result<SplitSample> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "split sampling needs n >= 3, got {n}"
        )));
    }
    let k = constants::reserved_count(n);
    let mut rng = rng::stream(seed);

    let mut perm: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = rng.gen_range(i..n);
        perm.swap(i, j);
    }
    let mut reserved = perm[..k].to_vec();
    reserved.sort_unstable();
    let mut in_k = vec![false; n];
    for &v in &reserved {
        in_k[v] = true;
    }

    let out = (0..n)
        .map(|v| {
            let deg = if in_k[v] { 2 } else { 3 };
            (0..deg).map(|_| rng.gen_range(0..n)).collect()
        })
        .collect();
    let d1 = Digraph::from_out_lists(out)?;
    let reserved_heads: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n)).collect();

    let indeg = d1.in_degrees();
    let mut in_l = vec![false; n];
    let l: Vec<usize> = reserved.iter().copied().filter(|&v| indeg[v] == 0).collect();
    for &v in &l {
        in_l[v] = true;
    }

    let mut a2 = Vec::new();
    let mut a3 = Vec::new();
    let mut reservoir = vec![None; n];
    for (&t, &h) in reserved.iter().zip(&reserved_heads) {
        if in_l[t] {
            a2.push((t, h));
        } else {
            a3.push((t, h));
            reservoir[t] = Some(h);
        }
    }

    let mut d2 = d1.clone();
    for &(t, h) in &a2 {
        d2.push_arc(t, h)?;
    }
    let g2 = underlying_graph(&d2);
    let mut e3: Vec<(usize, usize)> = a3
        .iter()
        .filter(|(t, h)| t != h)
        .map(|&(t, h)| (t.min(h), t.max(h)))
        .collect();
    e3.sort_unstable();
    e3.dedup();

    Ok(SplitSample {
        n,
        k,
        seed,
        d1,
        reserved,
        reserved_heads,
        l,
        a2,
        a3,
        d2,
        g2,
        e3,
        in_k,
        in_l,
        reservoir,
    })
}
