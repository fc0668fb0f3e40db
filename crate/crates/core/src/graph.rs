//! Digraphs with multiset out-lists and simple undirected graphs.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};

/// A digraph on `0..n` where each vertex stores its out-heads as a multiset.
///
/// Loops and repeated heads are allowed; they are how the with-replacement
/// sampling model is represented.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Self {
            out: vec![Vec::new(); n],
        }
    }

    pub fn from_out_lists(out: Vec<Vec<usize>>) -> Result<Self> {
        let n = out.len();
        for heads in &out {
            if let Some(&bad) = heads.iter().find(|&&h| h >= n) {
                return Err(Error::VertexOutOfRange { vertex: bad, n });
            }
        }
        Ok(Self { out })
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn out(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn push_arc(&mut self, tail: usize, head: usize) -> Result<()> {
        let n = self.n();
        for v in [tail, head] {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        self.out[tail].push(head);
        Ok(())
    }

    /// All arcs in tail order, heads in insertion order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(t, hs)| hs.iter().map(move |&h| (t, h)))
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// In-degree of every vertex, counting loops and repeated arcs.
    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n()];
        for (_, h) in self.arcs() {
            deg[h] += 1;
        }
        deg
    }

    /// Distinct in-neighbours of each vertex, sorted.
    pub fn in_lists(&self) -> Vec<Vec<usize>> {
        let mut inn = vec![Vec::new(); self.n()];
        for (t, h) in self.arcs() {
            inn[h].push(t);
        }
        for l in &mut inn {
            l.sort_unstable();
            l.dedup();
        }
        inn
    }
}

/// A simple undirected graph with sorted adjacency lists.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Loops are dropped and duplicates collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut m = 0;
        for l in &mut adj {
            l.sort_unstable();
            l.dedup();
            m += l.len();
        }
        Ok(Self { adj, m: m / 2 })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Inserts `{u, v}`; returns `false` if it was already present or is a loop.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Ok(false);
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(i) => {
                self.adj[u].insert(i, v);
                let j = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(j, u);
                self.m += 1;
                Ok(true)
            }
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, l)| {
            l.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Number of edges with both ends in `inside`.
    pub fn induced_edge_count(&self, inside: &[bool]) -> usize {
        self.edges().filter(|&(u, v)| inside[u] && inside[v]).count()
    }

    /// Neighbourhood bitmasks, for graphs on at most 64 vertices.
    pub fn adjacency_masks(&self) -> Result<Vec<u64>> {
        if self.n() > 64 {
            return Err(Error::TooLarge {
                what: "vertex count",
                actual: self.n(),
                limit: 64,
            });
        }
        Ok(self
            .adj
            .iter()
            .map(|l| l.iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect())
    }
}

/// Graph obtained from `d` by ignoring orientation; loops dropped, parallel arcs merged.
pub fn underlying_graph(d: &Digraph) -> Graph {
    Graph::from_edges(d.n(), d.arcs()).expect("digraph heads are in range")
}

/// Connected components, indexed in order of their smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    /// Component index of each vertex.
    pub label: Vec<usize>,
    /// Sorted members of each component.
    pub members: Vec<Vec<usize>>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.members.len()
    }

    pub fn is_connected(&self) -> bool {
        self.members.len() <= 1
    }
}

pub fn connected_components(g: &Graph) -> Components {
    let n = g.n();
    let mut label = vec![usize::MAX; n];
    let mut members = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        let c = members.len();
        let mut comp = vec![s];
        label[s] = c;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if label[v] == usize::MAX {
                    label[v] = c;
                    comp.push(v);
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        members.push(comp);
    }
    Components { label, members }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    pub histogram: BTreeMap<usize, usize>,
}

pub fn degree_stats(g: &Graph) -> DegreeStats {
    let mut histogram = BTreeMap::new();
    for v in 0..g.n() {
        *histogram.entry(g.degree(v)).or_insert(0) += 1;
    }
    DegreeStats {
        min: histogram.keys().next().copied().unwrap_or(0),
        max: histogram.keys().next_back().copied().unwrap_or(0),
        histogram,
    }
}

/// Small named graphs used as fixtures and controls.
pub mod families {
    use super::Graph;

    pub fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    /// `K_{1,leaves}` with centre `0`.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
    pub fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((5 + i, 5 + (i + 2) % 5));
            e.push((i, i + 5));
        }
        Graph::from_edges(10, e).unwrap()
    }

    /// Disjoint union of `a` and `b`; vertices of `b` are shifted by `a.n()`.
    pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
        let off = a.n();
        Graph::from_edges(
            a.n() + b.n(),
            a.edges().chain(b.edges().map(|(u, v)| (u + off, v + off))),
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn underlying_drops_loops_and_collapses() {
        let d = Digraph::from_out_lists(vec![vec![1, 0], vec![0], vec![]]).unwrap();
        let g = underlying_graph(&d);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn underlying_of_empty() {
        let g = underlying_graph(&Digraph::new(2));
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.n(), 2);
    }

    #[test]
    fn rejects_out_of_range_heads() {
        assert!(Digraph::from_out_lists(vec![vec![3], vec![], vec![]]).is_err());
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn components_of_two_triangles_and_a_path() {
        let t = complete(3);
        let c = connected_components(&disjoint_union(&t, &t));
        assert_eq!(c.count(), 2);
        assert_eq!(c.members, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(connected_components(&path(6)).is_connected());
    }

    #[test]
    fn degree_stats_examples() {
        let s = degree_stats(&cycle(5));
        assert_eq!((s.min, s.max), (2, 2));
        assert_eq!(s.histogram, BTreeMap::from([(2, 5)]));
        let s = degree_stats(&complete(4));
        assert_eq!((s.min, s.max), (3, 3));
        assert_eq!(s.histogram, BTreeMap::from([(3, 4)]));
        let s = degree_stats(&star(3));
        assert_eq!((s.min, s.max), (1, 3));
        assert_eq!(s.histogram, BTreeMap::from([(1, 3), (3, 1)]));
    }

    #[test]
    fn add_edge_keeps_order() {
        let mut g = Graph::new(4);
        assert!(g.add_edge(0, 3).unwrap());
        assert!(g.add_edge(0, 1).unwrap());
        assert!(!g.add_edge(1, 0).unwrap());
        assert!(!g.add_edge(2, 2).unwrap());
        assert_eq!(g.neighbors(0), &[1, 3]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn petersen_is_cubic() {
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
    }
}
