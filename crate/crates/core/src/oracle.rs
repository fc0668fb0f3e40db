//! Exhaustive ground truth for small graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph handled by the subset dynamic program.
pub const HAMILTON_DP_LIMIT: usize = 20;
/// Largest graph handled by backtracking.
pub const HAMILTON_BACKTRACK_LIMIT: usize = 40;
/// Largest graph for the 2-matching search.
pub const TWO_MATCHING_VERTEX_LIMIT: usize = 16;
/// Largest vertex set for spanning-path endpoint enumeration.
pub const SPANNING_PATH_LIMIT: usize = 15;

/// Exact Hamiltonicity: dynamic programming up to 20 vertices, backtracking up to 40.
///
/// Graphs with fewer than three vertices have no Hamilton cycle.
pub fn brute_hamiltonian(g: &Graph) -> Result<bool> {
    if g.n() <= HAMILTON_DP_LIMIT {
        hamiltonian_dp(g)
    } else {
        hamiltonian_backtrack(g)
    }
}

/// Held–Karp over subsets containing vertex 0; `reach[mask]` is the set of
/// possible last vertices of a path from 0 covering `mask`.
pub fn hamiltonian_dp(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n > HAMILTON_DP_LIMIT {
        return Err(Error::TooLarge {
            what: "vertex count",
            actual: n,
            limit: HAMILTON_DP_LIMIT,
        });
    }
    if n < 3 {
        return Ok(false);
    }
    let adj: Vec<u32> = g.adjacency_masks()?.into_iter().map(|m| m as u32).collect();
    let full = (1u32 << n) - 1;
    let mut reach = vec![0u32; 1 << n];
    reach[1] = 1;
    for mask in (1..=full).filter(|m| m & 1 == 1) {
        let ends = reach[mask as usize];
        if ends == 0 {
            continue;
        }
        let mut e = ends;
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut next = adj[v] & !mask;
            while next != 0 {
                let w = next.trailing_zeros();
                next &= next - 1;
                reach[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    Ok(reach[full as usize] & adj[0] != 0)
}

/// Depth-first search for a Hamilton cycle through vertex 0, pruning on
/// unvisited vertices left with fewer than two usable neighbours.
pub fn hamiltonian_backtrack(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n > HAMILTON_BACKTRACK_LIMIT {
        return Err(Error::TooLarge {
            what: "vertex count",
            actual: n,
            limit: HAMILTON_BACKTRACK_LIMIT,
        });
    }
    if n < 3 {
        return Ok(false);
    }
    if (0..n).any(|v| g.degree(v) < 2) {
        return Ok(false);
    }
    let adj = g.adjacency_masks()?;
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };

    fn feasible(adj: &[u64], visited: u64, cur: usize, full: u64) -> bool {
        // every unvisited vertex needs two neighbours among unvisited ∪ {cur, 0}
        let open = (full & !visited) | 1 << cur | 1;
        let mut rest = full & !visited;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (adj[v] & open).count_ones() < 2 {
                return false;
            }
        }
        true
    }

    fn go(adj: &[u64], visited: u64, cur: usize, full: u64) -> bool {
        if visited == full {
            return adj[cur] & 1 != 0;
        }
        if !feasible(adj, visited, cur, full) {
            return false;
        }
        let mut next = adj[cur] & !visited;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            if go(adj, visited | 1 << w, w, full) {
                return true;
            }
        }
        false
    }

    Ok(go(&adj, 1, 0, full))
}

/// Maximum number of edges in a subgraph of maximum degree two, by
/// branch-and-bound over edges. A vertex can still gain at most
/// `min(2 - deg, undecided incident edges)`, and half the sum of that bounds
/// what the remaining edges can add.
pub fn brute_max_two_matching(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > TWO_MATCHING_VERTEX_LIMIT {
        return Err(Error::TooLarge {
            what: "vertex count",
            actual: n,
            limit: TWO_MATCHING_VERTEX_LIMIT,
        });
    }
    struct Search<'a> {
        edges: &'a [(usize, usize)],
        deg: Vec<usize>,
        open: Vec<usize>,
        best: usize,
        cap: usize,
    }
    impl Search<'_> {
        fn bound(&self) -> usize {
            self.deg.iter().zip(&self.open).map(|(&d, &o)| (2 - d).min(o)).sum::<usize>() / 2
        }
        fn go(&mut self, i: usize, taken: usize) {
            self.best = self.best.max(taken);
            if i == self.edges.len() || self.best == self.cap || taken + self.bound() <= self.best {
                return;
            }
            let (u, v) = self.edges[i];
            self.open[u] -= 1;
            self.open[v] -= 1;
            if self.deg[u] < 2 && self.deg[v] < 2 {
                self.deg[u] += 1;
                self.deg[v] += 1;
                self.go(i + 1, taken + 1);
                self.deg[u] -= 1;
                self.deg[v] -= 1;
            }
            self.go(i + 1, taken);
            self.open[u] += 1;
            self.open[v] += 1;
        }
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut s = Search {
        edges: &edges,
        deg: vec![0; n],
        open: (0..n).map(|v| g.degree(v)).collect(),
        best: 0,
        cap: n.min(edges.len()),
    };
    s.go(0, 0);
    Ok(s.best)
}

/// All `y != x0` such that `G[X]` has a Hamilton path from `x0` to `y`, sorted.
pub fn brute_spanning_path_endpoints(g: &Graph, x: &[usize], x0: usize) -> Result<Vec<usize>> {
    let k = x.len();
    if k > SPANNING_PATH_LIMIT {
        return Err(Error::TooLarge {
            what: "vertex set size",
            actual: k,
            limit: SPANNING_PATH_LIMIT,
        });
    }
    let start = x
        .iter()
        .position(|&v| v == x0)
        .ok_or_else(|| Error::InvalidParameter(format!("x0 = {x0} is not in X")))?;
    let local: Vec<u32> = x
        .iter()
        .map(|&a| {
            x.iter()
                .enumerate()
                .filter(|&(_, &b)| g.has_edge(a, b))
                .fold(0u32, |m, (j, _)| m | 1 << j)
        })
        .collect();
    let full = if k == 0 { 0 } else { (1u32 << k) - 1 };
    let mut reach = vec![0u32; 1 << k];
    reach[1 << start] = 1 << start;
    for mask in 1..=full {
        let ends = reach[mask as usize];
        if ends == 0 {
            continue;
        }
        let mut e = ends;
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut next = local[v] & !mask;
            while next != 0 {
                let w = next.trailing_zeros();
                next &= next - 1;
                reach[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    let ends = reach[full as usize] & !(1 << start);
    let mut out: Vec<usize> = (0..k).filter(|&j| ends >> j & 1 == 1).map(|j| x[j]).collect();
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn hamiltonian_basics() {
        assert!(brute_hamiltonian(&complete(3)).unwrap());
        assert!(!brute_hamiltonian(&petersen()).unwrap());
        assert!(!hamiltonian_backtrack(&petersen()).unwrap());
        assert!(!brute_hamiltonian(&disjoint_union(&cycle(4), &Graph::new(1))).unwrap());
        assert!(!brute_hamiltonian(&complete(2)).unwrap());
        assert!(brute_hamiltonian(&cycle(20)).unwrap());
        assert!(brute_hamiltonian(&cycle(30)).unwrap());
        assert!(!brute_hamiltonian(&path(25)).unwrap());
        assert!(brute_hamiltonian(&Graph::new(41)).is_err());
    }

    #[test]
    fn dp_and_backtracking_agree() {
        use rand::Rng;
        let mut rng = crate::rng::stream(17);
        for _ in 0..400 {
            let n = rng.gen_range(3..13);
            let p: f64 = rng.gen_range(0.15..0.7);
            let e: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = Graph::from_edges(n, e).unwrap();
            assert_eq!(hamiltonian_dp(&g).unwrap(), hamiltonian_backtrack(&g).unwrap());
        }
    }

    #[test]
    fn two_matching_brute() {
        assert_eq!(brute_max_two_matching(&cycle(5)).unwrap(), 5);
        assert_eq!(brute_max_two_matching(&star(3)).unwrap(), 2);
        assert_eq!(brute_max_two_matching(&complete(8)).unwrap(), 8);
        assert!(brute_max_two_matching(&complete(17)).is_err());
    }

    #[test]
    fn spanning_path_endpoints() {
        let g = path(5);
        let x: Vec<usize> = (0..5).collect();
        assert_eq!(brute_spanning_path_endpoints(&g, &x, 0).unwrap(), vec![4]);
        let c = cycle(5);
        assert_eq!(brute_spanning_path_endpoints(&c, &x, 2).unwrap(), vec![1, 3]);
        assert!(brute_spanning_path_endpoints(&c, &[0, 1], 3).is_err());
        assert!(brute_spanning_path_endpoints(&c, &[0], 0).unwrap().is_empty());
    }
}
