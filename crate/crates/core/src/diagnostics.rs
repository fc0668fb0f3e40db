//! Structural statistics of sampled digraphs.

use std::collections::VecDeque;

use serde::Serialize;

use crate::constants;
use crate::error::{Error, Result};
use crate::graph::{connected_components, underlying_graph, Digraph, Graph};

pub const DEFAULT_BALL_RADIUS: usize = 1;

/// Breadth-first levels around one probe vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeStats {
    pub vertex: usize,
    /// `|S_i|` for `i = 0..=depth`: vertices whose shortest path to the probe has length `i`.
    pub in_levels: Vec<usize>,
    /// `|S_depth|`.
    pub in_at_depth: usize,
    /// Vertices at out-distance `i` from the probe, `i = 0..=depth`.
    pub out_levels: Vec<usize>,
    /// Sum of out-degrees over each out-level.
    pub out_degree_sums: Vec<usize>,
    /// Members of `K` at out-distance exactly `depth`.
    pub k_at_depth: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Cutoffs {
    pub pi_in: f64,
    pub pi_out: f64,
    pub rho_in: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StructReport {
    pub n: usize,
    pub max_degree: usize,
    pub delta0: f64,
    pub max_degree_below_delta0: bool,
    pub small_component_cap: f64,
    pub complex_component_count: usize,
    pub ball_radius: usize,
    pub ball_excess_flags: Vec<usize>,
    pub depth: usize,
    pub tau: f64,
    pub cutoffs: Cutoffs,
    pub level_stats: Vec<ProbeStats>,
}

/// Whole components of `g` with at most `cap` vertices and at least as many
/// edges as vertices. The report uses `cap = ln n / 3.9`.
pub fn complex_component_count(g: &Graph, cap: f64) -> usize {
    let comps = connected_components(g);
    comps
        .members
        .iter()
        .filter(|c| {
            let edges: usize = c.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
            (c.len() as f64) <= cap && edges >= c.len()
        })
        .count()
}

/// Vertices whose radius-`radius` ball induces a subgraph with cyclomatic
/// number at least two, i.e. at least `|ball| + 1` edges.
pub fn ball_excess(g: &Graph, radius: usize) -> Result<Vec<usize>> {
    if radius == 0 {
        return Err(Error::InvalidParameter("radius must be at least 1".into()));
    }
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    let mut inside = vec![false; n];
    let mut flagged = Vec::new();
    for v in 0..n {
        let mut ball = vec![v];
        dist[v] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            if dist[u] == radius {
                continue;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    ball.push(w);
                    queue.push_back(w);
                }
            }
        }
        for &u in &ball {
            inside[u] = true;
        }
        let twice: usize = ball
            .iter()
            .map(|&u| g.neighbors(u).iter().filter(|&&w| inside[w]).count())
            .sum();
        if twice / 2 > ball.len() {
            flagged.push(v);
        }
        for &u in &ball {
            inside[u] = false;
            dist[u] = usize::MAX;
        }
    }
    Ok(flagged)
}

fn bfs_levels(lists: &[Vec<usize>], start: usize, depth: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; lists.len()];
    seen[start] = true;
    let mut levels = vec![vec![start]];
    while levels.len() <= depth {
        let mut next = Vec::new();
        for &u in levels.last().unwrap() {
            for &w in &lists[u] {
                if !seen[w] {
                    seen[w] = true;
                    next.push(w);
                }
            }
        }
        levels.push(next);
    }
    levels
}

fn probe_stats(d: &Digraph, ins: &[Vec<usize>], outs: &[Vec<usize>], in_k: &[bool], x: usize, depth: usize) -> ProbeStats {
    let in_levels: Vec<usize> = bfs_levels(ins, x, depth).iter().map(Vec::len).collect();
    let out = bfs_levels(outs, x, depth);
    ProbeStats {
        vertex: x,
        in_at_depth: in_levels[depth],
        in_levels,
        out_levels: out.iter().map(Vec::len).collect(),
        out_degree_sums: out
            .iter()
            .map(|l| l.iter().map(|&v| d.out_degree(v)).sum())
            .collect(),
        k_at_depth: out[depth].iter().filter(|&&v| in_k[v]).count(),
    }
}

pub fn struct_report(d: &Digraph, k: &[usize], probes: &[usize]) -> Result<StructReport> {
    struct_report_with(d, k, probes, DEFAULT_BALL_RADIUS)
}

pub fn struct_report_with(d: &Digraph, k: &[usize], probes: &[usize], radius: usize) -> Result<StructReport> {
    let n = d.n();
    let mut in_k = vec![false; n];
    for &v in k.iter().chain(probes) {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    for &v in k {
        in_k[v] = true;
    }
    let g = underlying_graph(d);
    let max_degree = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
    let delta0 = constants::delta0(n);
    let depth = constants::level_depth(n);
    let ins = d.in_lists();
    let outs: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut o = d.out(v).to_vec();
            o.sort_unstable();
            o.dedup();
            o
        })
        .collect();
    Ok(StructReport {
        n,
        max_degree,
        delta0,
        max_degree_below_delta0: (max_degree as f64) < delta0,
        small_component_cap: constants::small_component_cap(n),
        complex_component_count: complex_component_count(&g, constants::small_component_cap(n)),
        ball_radius: radius,
        ball_excess_flags: ball_excess(&g, radius)?,
        depth,
        tau: constants::tau(n),
        cutoffs: Cutoffs {
            pi_in: constants::pi_in(n),
            pi_out: constants::pi_out(n),
            rho_in: constants::rho_in(n),
        },
        level_stats: probes
            .iter()
            .map(|&x| probe_stats(d, &ins, &outs, &in_k, x, depth))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn triangle_is_complex_tree_is_not() {
        let g = families::disjoint_union(&families::cycle(3), &Graph::new(27));
        assert_eq!(complex_component_count(&g, 3.0), 1);
        let t = families::disjoint_union(&families::path(3), &Graph::new(27));
        assert_eq!(complex_component_count(&t, 3.0), 0);
        // ln 30 / 3.9 < 1, so nothing of size 3 is small at this order.
        assert_eq!(complex_component_count(&g, constants::small_component_cap(30)), 0);
    }

    #[test]
    fn ball_excess_examples() {
        let c = families::cycle(12);
        for r in 1..6 {
            assert!(ball_excess(&c, r).unwrap().is_empty());
        }
        let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        assert!(ball_excess(&bowtie, 1).unwrap().contains(&0));
        assert!(ball_excess(&bowtie, 0).is_err());
    }

    #[test]
    fn levels_on_a_directed_cycle() {
        let d = Digraph::from_out_lists((0..6).map(|v| vec![(v + 1) % 6]).collect()).unwrap();
        let ins = d.in_lists();
        let outs: Vec<Vec<usize>> = (0..6).map(|v| d.out(v).to_vec()).collect();
        let in_k = vec![true; 6];
        let p = probe_stats(&d, &ins, &outs, &in_k, 0, 3);
        assert_eq!(p.in_levels, vec![1, 1, 1, 1]);
        assert_eq!(p.out_degree_sums, vec![1, 1, 1, 1]);
        assert_eq!(p.k_at_depth, 1);
    }
}
