//! Maximum cardinality matching in general graphs (Edmonds' blossom algorithm).
//!
//! BFS-based search from each exposed vertex with blossom contraction through
//! a `base` array. Per-search state is reset only for vertices the search
//! touched, so a search costs time proportional to the tree it grows.

use std::collections::VecDeque;

const NONE: usize = usize::MAX;

struct Search<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    even: Vec<bool>,
    in_blossom: Vec<bool>,
    lca_mark: Vec<u32>,
    lca_stamp: u32,
    touched: Vec<usize>,
    queue: VecDeque<usize>,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Self {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            even: vec![false; n],
            in_blossom: vec![false; n],
            lca_mark: vec![0; n],
            lca_stamp: 0,
            touched: Vec::new(),
            queue: VecDeque::new(),
        }
    }

    fn greedy(&mut self) {
        for v in 0..self.adj.len() {
            if self.mate[v] != NONE {
                continue;
            }
            if let Some(&u) = self.adj[v].iter().find(|&&u| u != v && self.mate[u] == NONE) {
                self.mate[v] = u;
                self.mate[u] = v;
            }
        }
    }

    fn touch(&mut self, v: usize) {
        if !self.even[v] && self.parent[v] == NONE {
            self.touched.push(v);
        }
    }

    fn reset(&mut self) {
        for &v in &self.touched {
            self.parent[v] = NONE;
            self.base[v] = v;
            self.even[v] = false;
        }
        self.touched.clear();
        self.queue.clear();
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        self.lca_stamp = self.lca_stamp.wrapping_add(1);
        if self.lca_stamp == 0 {
            self.lca_mark.fill(0);
            self.lca_stamp = 1;
        }
        loop {
            a = self.base[a];
            self.lca_mark[a] = self.lca_stamp;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.lca_mark[b] == self.lca_stamp {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v];
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }

    fn contract(&mut self, v: usize, to: usize) {
        let b = self.lca(v, to);
        for &t in &self.touched {
            self.in_blossom[t] = false;
        }
        self.mark_path(v, b, to);
        self.mark_path(to, b, v);
        for i in 0..self.touched.len() {
            let t = self.touched[i];
            if self.in_blossom[self.base[t]] {
                self.base[t] = b;
                if !self.even[t] {
                    self.even[t] = true;
                    self.queue.push_back(t);
                }
            }
        }
    }

    /// Grows an alternating tree from `root`; returns the exposed vertex reached.
    fn find_augmenting(&mut self, root: usize) -> Option<usize> {
        self.reset();
        self.touch(root);
        self.even[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            let adj = self.adj;
            for &to in &adj[v] {
                if to == v || self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    self.contract(v, to);
                } else if self.parent[to] == NONE {
                    self.touch(to);
                    self.parent[to] = v;
                    let m = self.mate[to];
                    if m == NONE {
                        return Some(to);
                    }
                    self.touch(m);
                    self.even[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

/// Maximum cardinality matching of the graph given by (symmetric) adjacency lists.
///
/// Returns the mate of each vertex. Deterministic for a fixed adjacency order.
pub fn maximum_matching(adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    let mut s = Search::new(adj);
    s.greedy();
    for root in 0..adj.len() {
        if s.mate[root] == NONE {
            if let Some(end) = s.find_augmenting(root) {
                s.augment(end);
            }
        }
    }
    s.mate
        .into_iter()
        .map(|m| if m == NONE { None } else { Some(m) })
        .collect()
}
