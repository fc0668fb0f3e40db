//! Maximum simple 2-matchings.
//!
//! A simple 2-matching is a spanning subgraph of maximum degree two: a vertex
//! disjoint union of paths and cycles, with isolated vertices counted as
//! paths of length zero. The maximum is found by a maximum matching on a
//! gadget graph: each vertex `u` gets two copies, and each edge `e = {u, v}`
//! becomes two adjacent vertices `e_u`, `e_v` with `e_u` joined to both copies
//! of `u` and `e_v` to both copies of `v`. A maximum matching `M` of the gadget
//! has `|M| = |E| + |F|` where `F` is the set of edges whose two gadget vertices
//! are both matched to copies.

pub mod blossom;
pub mod dual;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use dual::{dual_value, tutte_berge_min, DualCertificate, DEFAULT_DUAL_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentKind {
    Path,
    Cycle,
}

/// One component of a 2-matching.
///
/// Path vertices are listed end to end, starting from the smaller end. Cycle
/// vertices are listed from the smallest vertex towards its smaller cycle
/// neighbour.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub kind: ComponentKind,
    pub vertices: Vec<usize>,
}

impl Component {
    pub fn path(mut vertices: Vec<usize>) -> Self {
        if vertices.len() > 1 && vertices[0] > vertices[vertices.len() - 1] {
            vertices.reverse();
        }
        Self {
            kind: ComponentKind::Path,
            vertices,
        }
    }

    pub fn cycle(mut vertices: Vec<usize>) -> Self {
        let len = vertices.len();
        if len > 0 {
            let i = (0..len).min_by_key(|&i| vertices[i]).unwrap();
            vertices.rotate_left(i);
            if len > 2 && vertices[len - 1] < vertices[1] {
                vertices[1..].reverse();
            }
        }
        Self {
            kind: ComponentKind::Cycle,
            vertices,
        }
    }

    pub fn is_path(&self) -> bool {
        self.kind == ComponentKind::Path
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edges of the component as `(min, max)` pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let v = &self.vertices;
        let mut e: Vec<(usize, usize)> = v.windows(2).map(|w| norm(w[0], w[1])).collect();
        if self.kind == ComponentKind::Cycle && v.len() >= 3 {
            e.push(norm(v[v.len() - 1], v[0]));
        }
        e
    }
}

fn norm(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// A simple 2-matching covering `0..n`, with its path/cycle decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoMatching {
    n: usize,
    edges: Vec<(usize, usize)>,
    components: Vec<Component>,
    #[serde(skip)]
    comp_of: Vec<usize>,
}

impl TwoMatching {
    /// Classifies an edge set with maximum degree two into paths and cycles.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut nbr: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut norm_edges = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::InvalidTwoMatching(format!("loop at {u}")));
            }
            norm_edges.push(norm(u, v));
            nbr[u].push(v);
            nbr[v].push(u);
        }
        norm_edges.sort_unstable();
        if norm_edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidTwoMatching("repeated edge".into()));
        }
        if let Some(v) = (0..n).find(|&v| nbr[v].len() > 2) {
            return Err(Error::InvalidTwoMatching(format!("vertex {v} has degree {}", nbr[v].len())));
        }

        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let walk = |start: usize, seen: &mut Vec<bool>| {
            let mut order = vec![start];
            seen[start] = true;
            let mut cur = start;
            while let Some(w) = nbr[cur].iter().copied().find(|&w| !seen[w]) {
                seen[w] = true;
                order.push(w);
                cur = w;
            }
            order
        };
        // Paths first, from their ends; whatever remains lies on cycles.
        for s in 0..n {
            if !seen[s] && nbr[s].len() < 2 {
                components.push(Component::path(walk(s, &mut seen)));
            }
        }
        for s in 0..n {
            if !seen[s] {
                components.push(Component::cycle(walk(s, &mut seen)));
            }
        }
        Self::from_components(n, components)
    }

    /// Builds a 2-matching from explicit components, validating that they
    /// partition `0..n`.
    pub fn from_components(n: usize, mut components: Vec<Component>) -> Result<Self> {
        let mut comp_of = vec![usize::MAX; n];
        for c in &components {
            if c.is_empty() {
                return Err(Error::InvalidTwoMatching("empty component".into()));
            }
            if c.kind == ComponentKind::Cycle && c.len() < 3 {
                return Err(Error::InvalidTwoMatching("cycle with fewer than 3 vertices".into()));
            }
            for &v in &c.vertices {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if comp_of[v] != usize::MAX {
                    return Err(Error::InvalidTwoMatching(format!("vertex {v} covered twice")));
                }
                comp_of[v] = 0;
            }
        }
        if let Some(v) = comp_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidTwoMatching(format!("vertex {v} not covered")));
        }
        components.sort_by_key(|c| *c.vertices.iter().min().unwrap());
        for (i, c) in components.iter().enumerate() {
            for &v in &c.vertices {
                comp_of[v] = i;
            }
        }
        let mut edges: Vec<(usize, usize)> = components.iter().flat_map(Component::edges).collect();
        edges.sort_unstable();
        Ok(Self {
            n,
            edges,
            components,
            comp_of,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Component> {
        self.components
    }

    pub fn component_of(&self, v: usize) -> &Component {
        &self.components[self.comp_of[v]]
    }

    /// Component count.
    pub fn kappa(&self) -> usize {
        self.components.len()
    }

    /// Path component count.
    pub fn rho(&self) -> usize {
        self.components.iter().filter(|c| c.is_path()).count()
    }

    pub fn in_path(&self, v: usize) -> bool {
        self.component_of(v).is_path()
    }

    /// Vertices covered by path components, sorted.
    pub fn path_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.in_path(v)).collect()
    }

    pub fn is_subgraph_of(&self, g: &Graph) -> bool {
        g.n() == self.n && self.edges.iter().all(|&(u, v)| g.has_edge(u, v))
    }
}

/// A simple 2-matching of maximum size in `g`.
pub fn max_simple_two_matching(g: &Graph) -> TwoMatching {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let total = 2 * n + 2 * edges.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); total];
    let link = |a: usize, b: usize, adj: &mut Vec<Vec<usize>>| {
        adj[a].push(b);
        adj[b].push(a);
    };
    for (i, &(u, v)) in edges.iter().enumerate() {
        let eu = 2 * n + 2 * i;
        let ev = eu + 1;
        link(eu, ev, &mut adj);
        link(eu, 2 * u, &mut adj);
        link(eu, 2 * u + 1, &mut adj);
        link(ev, 2 * v, &mut adj);
        link(ev, 2 * v + 1, &mut adj);
    }
    let mate = blossom::maximum_matching(&adj);
    let chosen: Vec<(usize, usize)> = edges
        .iter()
        .enumerate()
        .filter(|&(i, _)| {
            let eu = 2 * n + 2 * i;
            matches!(mate[eu], Some(c) if c < 2 * n) && matches!(mate[eu + 1], Some(c) if c < 2 * n)
        })
        .map(|(_, &e)| e)
        .collect();
    TwoMatching::from_edges(n, &chosen).expect("gadget matching respects degree caps")
}
