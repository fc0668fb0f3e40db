//! Pósa rotations with a fixed endpoint.
//!
//! Given a path `x0 .. xt` and an edge `{xt, xi}` with `1 <= i <= t - 2`, the
//! rotation `x0 .. xi, xt, x(t-1), .., x(i+1)` spans the same vertices and ends
//! at `x(i+1)`. Repeating rotations breadth first from the original endpoint
//! yields the END set of `x0`, organised into levels by rotation depth.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// Rotates `path` about `chord`, one end of which must be the last vertex.
pub fn rotate(g: &Graph, path: &[usize], chord: (usize, usize)) -> Result<Vec<usize>> {
    let t = path
        .len()
        .checked_sub(1)
        .ok_or_else(|| Error::InvalidPath("empty path".into()))?;
    let end = path[t];
    let pivot = if chord.0 == end {
        chord.1
    } else if chord.1 == end {
        chord.0
    } else {
        return Err(Error::InvalidRotation(format!(
            "chord {chord:?} does not meet the free endpoint {end}"
        )));
    };
    if !g.has_edge(end, pivot) {
        return Err(Error::InvalidRotation(format!("{{{end}, {pivot}}} is not an edge")));
    }
    let i = path
        .iter()
        .position(|&v| v == pivot)
        .ok_or_else(|| Error::InvalidRotation(format!("pivot {pivot} is not on the path")))?;
    if i == 0 {
        return Err(Error::InvalidRotation(
            "chord to the fixed endpoint closes a cycle".into(),
        ));
    }
    if i + 1 >= t {
        return Err(Error::InvalidRotation("chord is a path edge".into()));
    }
    let mut out = path.to_vec();
    out[i + 1..].reverse();
    Ok(out)
}

fn validate_path(g: &Graph, path: &[usize], x0: usize) -> Result<Vec<bool>> {
    if path.first() != Some(&x0) {
        return Err(Error::InvalidPath(format!("path must start at {x0}")));
    }
    let mut in_path = vec![false; g.n()];
    for &v in path {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        if in_path[v] {
            return Err(Error::InvalidPath(format!("vertex {v} repeats")));
        }
        in_path[v] = true;
    }
    if let Some(w) = path.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
        return Err(Error::InvalidPath(format!("{{{}, {}}} is not an edge", w[0], w[1])));
    }
    Ok(in_path)
}

/// END set of a fixed endpoint together with the rotation tree that produced it.
#[derive(Clone, Debug)]
pub struct RotationState {
    pub x0: usize,
    /// The path the rotations started from.
    pub path: Vec<usize>,
    /// Reachable second endpoints, sorted.
    pub end_set: Vec<usize>,
    /// Newly reached endpoints by rotation depth; `levels[0]` is the original endpoint.
    pub levels: Vec<Vec<usize>>,
    /// For each reached endpoint other than the root: (parent endpoint, pivot).
    pred: Vec<(usize, usize)>,
    reached: Vec<bool>,
}

impl RotationState {
    pub fn contains(&self, y: usize) -> bool {
        y < self.reached.len() && self.reached[y]
    }

    /// Pivot and parent through which `y` was first reached.
    pub fn predecessor(&self, y: usize) -> Option<(usize, usize)> {
        if self.contains(y) && self.pred[y].0 != NONE {
            Some(self.pred[y])
        } else {
            None
        }
    }

    /// Rotation depth of `y`, if reached.
    pub fn depth(&self, y: usize) -> Option<usize> {
        self.levels.iter().position(|l| l.binary_search(&y).is_ok())
    }

    /// A path from `x0` to `y` spanning the same vertices, rebuilt by replaying
    /// the recorded rotations.
    pub fn witness_path(&self, y: usize) -> Option<Vec<usize>> {
        if !self.contains(y) {
            return None;
        }
        let mut chain = Vec::new();
        let mut cur = y;
        while self.pred[cur].0 != NONE {
            chain.push(self.pred[cur].1);
            cur = self.pred[cur].0;
        }
        let mut p = self.path.clone();
        for &pivot in chain.iter().rev() {
            let i = p.iter().position(|&v| v == pivot).expect("pivot on path");
            p[i + 1..].reverse();
        }
        Some(p)
    }

    pub fn len(&self) -> usize {
        self.end_set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.end_set.is_empty()
    }
}

/// Breadth-first rotation closure. `visit` sees every newly reached endpoint with
/// one spanning path ending there; returning `true` stops the search early.
pub(crate) fn explore<F>(g: &Graph, path: &[usize], x0: usize, mut visit: F) -> Result<(RotationState, Option<(usize, Vec<usize>)>)>
where
    F: FnMut(usize, &[usize]) -> bool,
{
    let in_x = validate_path(g, path, x0)?;
    let n = g.n();
    let mut state = RotationState {
        x0,
        path: path.to_vec(),
        end_set: Vec::new(),
        levels: Vec::new(),
        pred: vec![(NONE, NONE); n],
        reached: vec![false; n],
    };
    if path.len() < 2 {
        return Ok((state, None));
    }
    let t = path.len() - 1;
    let root = path[t];
    state.reached[root] = true;
    let mut hit = None;
    if visit(root, path) {
        hit = Some((root, path.to_vec()));
    }
    let mut frontier: Vec<(usize, Vec<usize>)> = vec![(root, path.to_vec())];
    let mut pos = vec![NONE; n];
    while !frontier.is_empty() {
        state.levels.push(frontier.iter().map(|(y, _)| *y).collect());
        if hit.is_some() {
            break;
        }
        let mut next: Vec<(usize, Vec<usize>)> = Vec::new();
        'outer: for (y, q) in &frontier {
            for (i, &v) in q.iter().enumerate() {
                pos[v] = i;
            }
            for &w in g.neighbors(*y) {
                if !in_x[w] {
                    continue;
                }
                let i = pos[w];
                if i == 0 || i + 1 >= t {
                    continue;
                }
                let z = q[i + 1];
                if state.reached[z] {
                    continue;
                }
                state.reached[z] = true;
                state.pred[z] = (*y, w);
                let mut qz = q.clone();
                qz[i + 1..].reverse();
                if visit(z, &qz) {
                    hit = Some((z, qz.clone()));
                    next.push((z, qz));
                    break 'outer;
                }
                next.push((z, qz));
            }
        }
        next.sort_unstable_by_key(|(z, _)| *z);
        frontier = next;
    }
    state.end_set = (0..n).filter(|&v| state.reached[v]).collect();
    Ok((state, hit))
}

/// Full END closure of `x0` starting from `path`.
pub fn compute_end_set(g: &Graph, path: &[usize], x0: usize) -> Result<RotationState> {
    explore(g, path, x0, |_, _| false).map(|(s, _)| s)
}

/// Checks the Pósa boundary property of `s` along `path`: every vertex
/// `x_i` outside `s` (other than the fixed endpoint `x_0`) with a neighbour
/// in `s` has `x_(i-1)` or `x_(i+1)` in `s`.
pub fn check_posa_condition(g: &Graph, path: &[usize], s: &[usize]) -> bool {
    let mut in_s = vec![false; g.n()];
    for &v in s {
        if v < g.n() {
            in_s[v] = true;
        }
    }
    path.iter().enumerate().skip(1).all(|(i, &v)| {
        if in_s[v] || !g.neighbors(v).iter().any(|&w| in_s[w]) {
            return true;
        }
        in_s[path[i - 1]] || path.get(i + 1).is_some_and(|&w| in_s[w])
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LevelGrowth {
    pub size: usize,
    /// `max(0, 2 |T_i| - |T_(i+1)|)`.
    pub slack: usize,
}

pub fn growth_trace(state: &RotationState) -> Vec<LevelGrowth> {
    let sizes: Vec<usize> = state.levels.iter().map(Vec::len).collect();
    (0..sizes.len())
        .map(|i| {
            let next = sizes.get(i + 1).copied().unwrap_or(0);
            LevelGrowth {
                size: sizes[i],
                slack: (2 * sizes[i]).saturating_sub(next),
            }
        })
        .collect()
}

/// Decomposition of an END set into runs along the original path.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RunStructure {
    /// END members in runs of length at least two.
    pub s1: Vec<usize>,
    /// END members forming singleton runs.
    pub s2: Vec<usize>,
    /// Path vertices outside END next to a member of `s1`.
    pub t1: Vec<usize>,
    /// Path vertices next to a member of `s2`.
    pub t2: Vec<usize>,
    /// Edges joining a member of `s2` to any END member.
    pub singleton_edges: Vec<(usize, usize)>,
}

pub fn run_structure(g: &Graph, state: &RotationState) -> RunStructure {
    let p = &state.path;
    let in_s = |v: usize| state.contains(v);
    let mut out = RunStructure::default();
    let mut in_s2 = vec![false; g.n()];
    let mut i = 0;
    while i < p.len() {
        if !in_s(p[i]) {
            i += 1;
            continue;
        }
        let start = i;
        while i < p.len() && in_s(p[i]) {
            i += 1;
        }
        if i - start == 1 {
            out.s2.push(p[start]);
            in_s2[p[start]] = true;
        } else {
            out.s1.extend_from_slice(&p[start..i]);
        }
    }
    let mut in_s1 = vec![false; g.n()];
    for &v in &out.s1 {
        in_s1[v] = true;
    }
    for (i, &v) in p.iter().enumerate() {
        let around = [i.checked_sub(1).map(|j| p[j]), p.get(i + 1).copied()];
        if around.iter().flatten().any(|&w| in_s2[w]) {
            out.t2.push(v);
        }
        if !in_s(v) && around.iter().flatten().any(|&w| in_s1[w]) {
            out.t1.push(v);
        }
    }
    for &u in &out.s2 {
        for &w in g.neighbors(u) {
            if in_s(w) {
                out.singleton_edges.push((u.min(w), u.max(w)));
            }
        }
    }
    out.s1.sort_unstable();
    out.s2.sort_unstable();
    out.t1.sort_unstable();
    out.t2.sort_unstable();
    out.singleton_edges.sort_unstable();
    out.singleton_edges.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn chorded_path() -> Graph {
        // path 0-1-2-3-4 plus chord {4, 1}
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 1)]).unwrap()
    }

    #[test]
    fn rotate_definition() {
        // a,b,c,d,e = 0..5; chord {e, b}
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert_eq!(rotate(&g, &[0, 1, 2, 3, 4], (4, 1)).unwrap(), vec![0, 1, 4, 3, 2]);
    }

    #[test]
    fn rotate_rejects_closing_edge_and_non_edges() {
        let g = families::cycle(4);
        assert!(rotate(&g, &[0, 1, 2, 3], (3, 0)).is_err());
        assert!(rotate(&g, &[0, 1, 2, 3], (3, 2)).is_err());
        let h = families::path(5);
        assert!(rotate(&h, &[0, 1, 2, 3, 4], (4, 1)).is_err());
        assert!(rotate(&h, &[0, 1, 2, 3, 4], (2, 0)).is_err());
    }

    #[test]
    fn path_graph_has_single_endpoint() {
        let g = families::path(6);
        let s = compute_end_set(&g, &[0, 1, 2, 3, 4, 5], 0).unwrap();
        assert_eq!(s.end_set, vec![5]);
        assert_eq!(s.levels, vec![vec![5]]);
        assert_eq!(growth_trace(&s).len(), 1);
    }

    #[test]
    fn one_forced_rotation() {
        let g = chorded_path();
        let s = compute_end_set(&g, &[0, 1, 2, 3, 4], 0).unwrap();
        assert_eq!(s.end_set, vec![2, 4]);
        assert_eq!(s.levels, vec![vec![4], vec![2]]);
        assert_eq!(s.witness_path(2).unwrap(), vec![0, 1, 4, 3, 2]);
        assert_eq!(s.predecessor(2), Some((4, 1)));
        assert!(!s.contains(0));
        assert_eq!(
            growth_trace(&s),
            vec![LevelGrowth { size: 1, slack: 1 }, LevelGrowth { size: 1, slack: 2 }]
        );
    }

    #[test]
    fn invalid_paths_rejected() {
        let g = families::path(4);
        assert!(compute_end_set(&g, &[0, 2, 1], 0).is_err());
        assert!(compute_end_set(&g, &[0, 1, 0], 0).is_err());
        assert!(compute_end_set(&g, &[1, 2], 0).is_err());
    }

    #[test]
    fn posa_condition_examples() {
        // C4 a-b-c-d-a plus chord b-d; S = {d}
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]).unwrap();
        assert!(!check_posa_condition(&g, &[0, 1, 2, 3], &[3]));
        assert!(check_posa_condition(&g, &[0, 1, 2, 3], &[]));
        let h = chorded_path();
        let s = compute_end_set(&h, &[0, 1, 2, 3, 4], 0).unwrap();
        assert!(check_posa_condition(&h, &s.path, &s.end_set));
    }

    #[test]
    fn single_vertex_path() {
        let g = families::path(1);
        let s = compute_end_set(&g, &[0], 0).unwrap();
        assert!(s.is_empty());
        assert!(growth_trace(&s).is_empty());
    }
}
