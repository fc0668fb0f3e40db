//! Turning a 2-matching into a Hamilton cycle.
//!
//! [`run_extension_rotation`] follows the extension-rotation procedure on the
//! split sample: it only ever touches the reserved third arcs of `K \ L` to
//! close a path whose rotation endpoints have no neighbours outside it.
//! [`run_practical`] is an ordinary rotation heuristic over every edge of a
//! graph.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph};
use crate::matching::{Component, TwoMatching};
use crate::rng::{stream, StreamRng};
use crate::rotation::explore;
use crate::sampler::SplitSample;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailReason {
    /// All components are cycles and no edge joins two of them.
    Disconnected,
    /// No reserved arc closes the current longest path.
    NoClosingArc,
    /// Iteration, rotation or restart budget exhausted.
    Budget,
    /// Fewer than three vertices, or a vertex of degree below two.
    Degenerate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Cycle(Vec<usize>),
    Fail(FailReason),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RunStats {
    pub iterations: usize,
    /// Rotations performed across all END computations.
    pub rotations: usize,
    pub arcs_used: usize,
    /// Sizes of the full END sets computed, in order.
    pub end_sizes: Vec<usize>,
    pub restarts: usize,
}

impl RunStats {
    pub fn max_end(&self) -> usize {
        self.end_sizes.iter().copied().max().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum TraceEvent {
    JoinCycles { x: usize, y: usize },
    AbsorbCycle { x: usize, y: usize, len: usize },
    ExtendAlongPath { x: usize, y: usize, added: usize },
    Query { x: usize, reservoir: bool },
    Reveal { x: usize, y: usize },
    Close { x: usize, y: usize },
    Fail { reason: FailReason },
}

/// Bookkeeping of the faithful procedure.
#[derive(Clone, Debug, Serialize)]
pub struct PipelineState {
    /// Final 2-matching.
    pub f: TwoMatching,
    /// `G2` plus every reserved edge added.
    #[serde(skip)]
    pub e: Graph,
    /// Vertices queried for membership in `K \ L`, in query order.
    pub checked: Vec<usize>,
    /// Queried vertices found in `K \ L`.
    pub in_set: Vec<usize>,
    /// `L` together with queried vertices outside `K`, sorted.
    pub out_set: Vec<usize>,
    pub arcs_used: usize,
    /// Revealed reserved arcs `(x, y_x)`, in reveal order.
    pub revealed: Vec<(usize, usize)>,
    /// Reserved edges closing a path, as `(x, y_x)`.
    pub added: Vec<(usize, usize)>,
}

impl PipelineState {
    /// Checks the query discipline against the sample the run used.
    pub fn check_invariants(&self, s: &SplitSample) -> std::result::Result<(), String> {
        let checked: BTreeSet<usize> = self.checked.iter().copied().collect();
        if checked.len() != self.checked.len() {
            return Err("a vertex was queried twice".into());
        }
        let in_set: BTreeSet<usize> = self.in_set.iter().copied().collect();
        let out_set: BTreeSet<usize> = self.out_set.iter().copied().collect();
        if !in_set.is_subset(&checked) {
            return Err("in_set not contained in checked".into());
        }
        if out_set.iter().any(|&v| !s.in_l(v) && !checked.contains(&v)) {
            return Err("out_set \\ L not contained in checked".into());
        }
        if !in_set.is_disjoint(&out_set) {
            return Err("in_set meets out_set".into());
        }
        if self.arcs_used > in_set.len() || self.arcs_used != self.added.len() {
            return Err("arcs_used inconsistent".into());
        }
        let mut revealed = BTreeSet::new();
        for &(x, y) in &self.revealed {
            if !in_set.contains(&x) || s.reservoir_head(x) != Some(y) || !revealed.insert(x) {
                return Err(format!("bad reveal ({x}, {y})"));
            }
        }
        for &(x, y) in &self.added {
            if !self.revealed.contains(&(x, y)) {
                return Err(format!("edge {{{x}, {y}}} added without a reveal"));
            }
        }
        for v in 0..s.n {
            let expect_in = checked.contains(&v) && s.in_reservoir(v);
            let expect_out = s.in_l(v) || (checked.contains(&v) && !s.is_reserved(v));
            if in_set.contains(&v) != expect_in || out_set.contains(&v) != expect_out {
                return Err(format!("vertex {v} misfiled"));
            }
        }
        if !self.f.is_subgraph_of(&self.e) {
            return Err("2-matching uses an edge outside E".into());
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HamiltonResult {
    pub outcome: Outcome,
    pub stats: RunStats,
    pub trace: Vec<TraceEvent>,
    #[serde(skip)]
    pub pipeline: Option<PipelineState>,
}

impl HamiltonResult {
    pub fn cycle(&self) -> Option<&[usize]> {
        match &self.outcome {
            Outcome::Cycle(c) => Some(c),
            Outcome::Fail(_) => None,
        }
    }

    pub fn is_cycle(&self) -> bool {
        self.cycle().is_some()
    }
}

/// True iff `cyc` lists every vertex of `g` once and consecutive vertices,
/// including last and first, are adjacent. Graphs below three vertices have no
/// Hamilton cycle.
pub fn verify_hamilton_cycle(g: &Graph, cyc: &[usize]) -> bool {
    let n = g.n();
    if n < 3 || cyc.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cyc {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..n).all(|i| g.has_edge(cyc[i], cyc[(i + 1) % n]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FaithfulConfig {
    /// Iterations allowed per vertex.
    pub budget_per_vertex: usize,
    /// Rebuild and validate the 2-matching after every iteration.
    pub check_steps: bool,
}

impl Default for FaithfulConfig {
    fn default() -> Self {
        Self {
            budget_per_vertex: 50,
            check_steps: false,
        }
    }
}

pub fn run_extension_rotation(s: &SplitSample, f0: TwoMatching, seed: u64) -> Result<HamiltonResult> {
    run_extension_rotation_with(s, f0, seed, &FaithfulConfig::default())
}

struct Comp {
    cycle: bool,
    verts: Vec<usize>,
}

struct Faithful<'a> {
    s: &'a SplitSample,
    e: Graph,
    comps: Vec<Option<Comp>>,
    comp_of: Vec<usize>,
    rng: StreamRng,
    checked: Vec<usize>,
    is_checked: Vec<bool>,
    in_set: Vec<usize>,
    out_set: BTreeSet<usize>,
    revealed: Vec<(usize, usize)>,
    arc_used: Vec<bool>,
    added: Vec<(usize, usize)>,
    stats: RunStats,
    trace: Vec<TraceEvent>,
}

enum Extension {
    Absorb { x: usize, y: usize, q: Vec<usize> },
    Along { x: usize, y: usize, q: Vec<usize> },
}

impl<'a> Faithful<'a> {
    fn place(&mut self, c: Comp) -> usize {
        let id = match self.comps.iter().position(Option::is_none) {
            Some(id) => id,
            None => {
                self.comps.push(None);
                self.comps.len() - 1
            }
        };
        for &v in &c.verts {
            self.comp_of[v] = id;
        }
        self.comps[id] = Some(c);
        id
    }

    fn take(&mut self, id: usize) -> Comp {
        self.comps[id].take().expect("live component")
    }

    fn counts(&self) -> (usize, usize) {
        let live = self.comps.iter().flatten();
        let kappa = live.clone().count();
        let rho = live.filter(|c| !c.cycle).count();
        (kappa, rho)
    }

    fn snapshot(&self) -> Result<TwoMatching> {
        let comps = self
            .comps
            .iter()
            .flatten()
            .map(|c| {
                if c.cycle {
                    Component::cycle(c.verts.clone())
                } else {
                    Component::path(c.verts.clone())
                }
            })
            .collect();
        TwoMatching::from_components(self.s.n, comps)
    }

    fn in_cycle(&self, v: usize) -> bool {
        self.comps[self.comp_of[v]].as_ref().unwrap().cycle
    }

    /// Joins two cycles along the lexicographically smallest edge between them.
    fn join_cycles(&mut self) -> bool {
        let found = self
            .e
            .edges()
            .find(|&(x, y)| self.comp_of[x] != self.comp_of[y]);
        let Some((x, y)) = found else {
            return false;
        };
        let cx = self.take(self.comp_of[x]);
        let cy = self.take(self.comp_of[y]);
        let mut verts = rotate_to_end(cx.verts, x);
        verts.extend(rotate_to_start(cy.verts, y));
        self.place(Comp { cycle: false, verts });
        self.trace.push(TraceEvent::JoinCycles { x, y });
        true
    }

    /// Searches `{x0} ∪ END(x0)` for an edge leaving `X`. A neighbour on a cycle
    /// wins immediately; otherwise the first neighbour on another path is kept.
    fn find_extension(&mut self, path: &[usize], in_x: &[bool]) -> Result<(Option<Extension>, Option<Vec<Vec<usize>>>)> {
        let mut along: Option<Extension> = None;
        let mut probe = |z: usize, q: &[usize], this: &Self| -> Option<Extension> {
            for &w in this.e.neighbors(z) {
                if in_x[w] {
                    continue;
                }
                if this.in_cycle(w) {
                    return Some(Extension::Absorb { x: z, y: w, q: q.to_vec() });
                }
                if along.is_none() {
                    along = Some(Extension::Along { x: z, y: w, q: q.to_vec() });
                }
            }
            None
        };
        let x0 = path[0];
        let rev: Vec<usize> = path.iter().rev().copied().collect();
        if let Some(ext) = probe(x0, &rev, self) {
            return Ok((Some(ext), None));
        }
        let mut absorb = None;
        let (state, _) = explore(&self.e, path, x0, |z, q| {
            absorb = probe(z, q, self);
            absorb.is_some()
        })?;
        self.stats.rotations += state.len().saturating_sub(1);
        if absorb.is_some() {
            return Ok((absorb, None));
        }
        if along.is_some() {
            return Ok((along, None));
        }
        self.stats.end_sizes.push(state.len());
        let mut cands = vec![path.to_vec()];
        cands.extend(state.end_set.iter().map(|&z| {
            let mut w = state.witness_path(z).expect("reached endpoint");
            w.reverse();
            w
        }));
        Ok((None, Some(cands)))
    }

    fn query(&mut self, x: usize) -> Option<usize> {
        let reservoir = self.s.in_reservoir(x);
        if !self.is_checked[x] {
            self.is_checked[x] = true;
            self.checked.push(x);
            if reservoir {
                self.in_set.push(x);
            } else if !self.s.is_reserved(x) {
                self.out_set.insert(x);
            }
        }
        self.trace.push(TraceEvent::Query { x, reservoir });
        if !reservoir {
            return None;
        }
        let y = self.s.reservoir_head(x).expect("reservoir vertex has an arc");
        if !self.revealed.contains(&(x, y)) {
            self.revealed.push((x, y));
            self.trace.push(TraceEvent::Reveal { x, y });
        }
        Some(y)
    }

    /// One round over `END` in random order, closing `X` with a reserved arc.
    fn close_with_reservoir(&mut self, pid: usize, mut cands: Vec<Vec<usize>>) -> Result<bool> {
        cands.shuffle(&mut self.rng);
        let size = cands[0].len();
        for q in cands {
            let x = q[0];
            let Some(y) = self.query(x) else { continue };
            if size < 3 || y == x || self.comp_of[y] != pid {
                continue;
            }
            let (state, hit) = explore(&self.e, &q, x, |z, _| z == y)?;
            self.stats.rotations += state.len().saturating_sub(1);
            let Some((_, cyc)) = hit else { continue };
            self.e.add_edge(x, y)?;
            if !self.arc_used[x] {
                self.arc_used[x] = true;
                self.stats.arcs_used += 1;
                self.added.push((x, y));
            }
            self.take(pid);
            self.place(Comp { cycle: true, verts: cyc });
            self.trace.push(TraceEvent::Close { x, y });
            return Ok(true);
        }
        Ok(false)
    }

    fn longest_path(&self) -> Option<usize> {
        self.comps
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.as_ref().filter(|c| !c.cycle).map(|c| (i, c)))
            .max_by(|(_, a), (_, b)| {
                let amin = a.verts.iter().min();
                let bmin = b.verts.iter().min();
                a.verts.len().cmp(&b.verts.len()).then(bmin.cmp(&amin))
            })
            .map(|(i, _)| i)
    }

    fn step(&mut self) -> Result<Option<FailReason>> {
        let (_, rho) = self.counts();
        if rho == 0 {
            return Ok(if self.join_cycles() { None } else { Some(FailReason::Disconnected) });
        }
        let pid = self.longest_path().expect("a path component");
        let mut path = self.comps[pid].as_ref().unwrap().verts.clone();
        if path[0] > path[path.len() - 1] {
            path.reverse();
        }
        let mut in_x = vec![false; self.s.n];
        for &v in &path {
            in_x[v] = true;
        }
        let (ext, cands) = self.find_extension(&path, &in_x)?;
        match ext {
            Some(Extension::Absorb { x, y, mut q }) => {
                let c = self.take(self.comp_of[y]);
                let len = c.verts.len();
                q.extend(rotate_to_start(c.verts, y));
                self.take(pid);
                self.place(Comp { cycle: false, verts: q });
                self.trace.push(TraceEvent::AbsorbCycle { x, y, len });
            }
            Some(Extension::Along { x, y, mut q }) => {
                let other = self.take(self.comp_of[y]).verts;
                let j = other.iter().position(|&v| v == y).unwrap();
                let r = other.len() - 1;
                let (taken, rest): (Vec<usize>, Vec<usize>) = if j > r - j {
                    (other[..=j].iter().rev().copied().collect(), other[j + 1..].to_vec())
                } else {
                    (other[j..].to_vec(), other[..j].to_vec())
                };
                let added = taken.len();
                q.extend(taken);
                self.take(pid);
                self.place(Comp { cycle: false, verts: q });
                if !rest.is_empty() {
                    self.place(Comp { cycle: false, verts: rest });
                }
                self.trace.push(TraceEvent::ExtendAlongPath { x, y, added });
            }
            None => {
                let cands = cands.expect("full END when no extension");
                if !self.close_with_reservoir(pid, cands)? {
                    return Ok(Some(FailReason::NoClosingArc));
                }
            }
        }
        Ok(None)
    }

    fn finish(self, outcome: Outcome) -> Result<HamiltonResult> {
        let f = self.snapshot()?;
        let mut out_set: Vec<usize> = self.out_set.into_iter().collect();
        out_set.sort_unstable();
        let mut stats = self.stats;
        stats.arcs_used = self.added.len();
        Ok(HamiltonResult {
            outcome,
            stats,
            trace: self.trace,
            pipeline: Some(PipelineState {
                f,
                e: self.e,
                checked: self.checked,
                in_set: self.in_set,
                out_set,
                arcs_used: self.added.len(),
                revealed: self.revealed,
                added: self.added,
            }),
        })
    }
}

fn rotate_to_start(mut cycle: Vec<usize>, v: usize) -> Vec<usize> {
    let i = cycle.iter().position(|&w| w == v).expect("vertex on cycle");
    cycle.rotate_left(i);
    cycle
}

fn rotate_to_end(cycle: Vec<usize>, v: usize) -> Vec<usize> {
    let mut c = rotate_to_start(cycle, v);
    c.rotate_left(1);
    c
}

pub fn run_extension_rotation_with(
    s: &SplitSample,
    f0: TwoMatching,
    seed: u64,
    cfg: &FaithfulConfig,
) -> Result<HamiltonResult> {
    if !f0.is_subgraph_of(&s.g2) {
        return Err(Error::InvalidTwoMatching("not a 2-matching of G2".into()));
    }
    let n = s.n;
    let mut run = Faithful {
        s,
        e: s.g2.clone(),
        comps: Vec::new(),
        comp_of: vec![usize::MAX; n],
        rng: stream(seed),
        checked: Vec::new(),
        is_checked: vec![false; n],
        in_set: Vec::new(),
        out_set: s.l.iter().copied().collect(),
        revealed: Vec::new(),
        arc_used: vec![false; n],
        added: Vec::new(),
        stats: RunStats::default(),
        trace: Vec::new(),
    };
    for c in f0.into_components() {
        let cycle = !c.is_path();
        run.place(Comp { cycle, verts: c.vertices });
    }
    let budget = cfg.budget_per_vertex.saturating_mul(n);
    let mut potential = {
        let (k, r) = run.counts();
        k + r
    };
    loop {
        let (kappa, rho) = run.counts();
        if kappa + rho <= 1 {
            let cyc = run.comps.iter().flatten().next().unwrap().verts.clone();
            debug_assert!(verify_hamilton_cycle(&run.e, &cyc));
            return run.finish(Outcome::Cycle(cyc));
        }
        if run.stats.iterations >= budget {
            run.trace.push(TraceEvent::Fail { reason: FailReason::Budget });
            return run.finish(Outcome::Fail(FailReason::Budget));
        }
        run.stats.iterations += 1;
        if let Some(reason) = run.step()? {
            run.trace.push(TraceEvent::Fail { reason });
            return run.finish(Outcome::Fail(reason));
        }
        if cfg.check_steps {
            let f = run.snapshot()?;
            if !f.is_subgraph_of(&run.e) {
                return Err(Error::InvalidTwoMatching("step left E".into()));
            }
            if f.kappa() + f.rho() > potential {
                return Err(Error::InvalidTwoMatching("kappa + rho increased".into()));
            }
            potential = f.kappa() + f.rho();
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PracticalConfig {
    pub max_restarts: usize,
    /// Rotation endpoints explored per vertex, summed over all restarts.
    pub rotations_per_vertex: usize,
}

impl Default for PracticalConfig {
    fn default() -> Self {
        Self {
            max_restarts: 32,
            rotations_per_vertex: 200,
        }
    }
}

pub fn run_practical(g: &Graph, seed: u64) -> HamiltonResult {
    run_practical_with(g, seed, &PracticalConfig::default())
}

struct Practical<'a> {
    g: &'a Graph,
    rng: StreamRng,
    path: Vec<usize>,
    in_path: Vec<bool>,
    stats: RunStats,
    budget: usize,
    spent: usize,
}

impl<'a> Practical<'a> {
    fn reset(&mut self, start: usize) {
        for &v in &self.path {
            self.in_path[v] = false;
        }
        self.path.clear();
        self.path.push(start);
        self.in_path[start] = true;
    }

    fn set_path(&mut self, p: Vec<usize>) {
        self.path = p;
    }

    fn free_degree(&self, v: usize) -> usize {
        self.g.neighbors(v).iter().filter(|&&w| !self.in_path[w]).count()
    }

    fn has_free(&self, v: usize) -> bool {
        self.g.neighbors(v).iter().any(|&w| !self.in_path[w])
    }

    /// Extends the last vertex greedily, preferring neighbours with few free
    /// neighbours of their own.
    fn grow(&mut self) {
        loop {
            let end = *self.path.last().unwrap();
            let mut best: Vec<usize> = Vec::new();
            let mut best_deg = usize::MAX;
            for &w in self.g.neighbors(end) {
                if self.in_path[w] {
                    continue;
                }
                let d = self.free_degree(w);
                if d < best_deg {
                    best_deg = d;
                    best.clear();
                }
                if d == best_deg {
                    best.push(w);
                }
            }
            if best.is_empty() {
                return;
            }
            let w = best[self.rng.gen_range(0..best.len())];
            self.in_path[w] = true;
            self.path.push(w);
        }
    }

    /// Rotation search from the current path; stops at the first endpoint
    /// accepted by `goal`. Returns the path ending there.
    fn search<F>(&mut self, path: &[usize], mut goal: F) -> Result<Option<Vec<usize>>>
    where
        F: FnMut(usize) -> bool,
    {
        let budget = self.budget;
        let mut spent = self.spent;
        let mut exhausted = false;
        let (state, hit) = explore(self.g, path, path[0], |z, _| {
            spent += 1;
            if spent > budget {
                exhausted = true;
                return true;
            }
            goal(z)
        })?;
        self.spent = spent;
        self.stats.rotations += state.len().saturating_sub(1);
        if exhausted {
            return Err(Error::TooLarge {
                what: "rotation budget",
                actual: spent,
                limit: budget,
            });
        }
        Ok(hit.map(|(_, q)| q))
    }

    /// Path over the same vertices whose ends are adjacent, found by rotating
    /// one end and then, if needed, the other.
    fn close(&mut self) -> Result<Option<Vec<usize>>> {
        let path = self.path.clone();
        let x0 = path[0];
        let g = self.g;
        if path.len() < 3 {
            return Ok(None);
        }
        if let Some(q) = self.search(&path, |z| g.has_edge(z, x0))? {
            return Ok(Some(q));
        }
        let state = crate::rotation::compute_end_set(g, &path, x0)?;
        self.stats.end_sizes.push(state.len());
        let mut ends = state.end_set.clone();
        ends.shuffle(&mut self.rng);
        for z in ends {
            let mut w = state.witness_path(z).expect("reached endpoint");
            w.reverse();
            if let Some(q) = self.search(&w, |u| g.has_edge(u, z))? {
                return Ok(Some(q));
            }
        }
        Ok(None)
    }

    fn attempt(&mut self) -> Result<Option<Vec<usize>>> {
        let n = self.g.n();
        let start = self.rng.gen_range(0..n);
        self.reset(start);
        self.grow();
        self.path.reverse();
        self.grow();
        loop {
            self.stats.iterations += 1;
            if self.path.len() == n {
                return self.close();
            }
            let x0 = self.path[0];
            if self.has_free(x0) {
                self.path.reverse();
                self.grow();
                continue;
            }
            let path = self.path.clone();
            let in_path = self.in_path.clone();
            let g = self.g;
            let free = |z: usize| g.neighbors(z).iter().any(|&w| !in_path[w]);
            if let Some(q) = self.search(&path, free)? {
                self.set_path(q);
                self.grow();
                continue;
            }
            // Close the path into a cycle and reopen it next to a free vertex.
            let Some(cyc) = self.close()? else {
                return Ok(None);
            };
            let j = cyc.iter().position(|&c| self.has_free(c)).expect("connected graph");
            let mut p = cyc;
            p.rotate_left(j + 1);
            self.set_path(p);
            self.grow();
        }
    }
}

pub fn run_practical_with(g: &Graph, seed: u64, cfg: &PracticalConfig) -> HamiltonResult {
    let n = g.n();
    let fail = |reason, stats| HamiltonResult {
        outcome: Outcome::Fail(reason),
        stats,
        trace: vec![TraceEvent::Fail { reason }],
        pipeline: None,
    };
    if n < 3 || (0..n).any(|v| g.degree(v) < 2) {
        return fail(FailReason::Degenerate, RunStats::default());
    }
    if !connected_components(g).is_connected() {
        return fail(FailReason::Disconnected, RunStats::default());
    }
    let mut run = Practical {
        g,
        rng: stream(seed),
        path: Vec::new(),
        in_path: vec![false; n],
        stats: RunStats::default(),
        budget: cfg.rotations_per_vertex.saturating_mul(n),
        spent: 0,
    };
    for attempt in 0..=cfg.max_restarts {
        run.stats.restarts = attempt;
        match run.attempt() {
            Ok(Some(cyc)) => {
                debug_assert!(verify_hamilton_cycle(g, &cyc));
                return HamiltonResult {
                    outcome: Outcome::Cycle(cyc),
                    stats: run.stats,
                    trace: Vec::new(),
                    pipeline: None,
                };
            }
            Ok(None) => {}
            Err(_) => break,
        }
    }
    fail(FailReason::Budget, run.stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn verify_examples() {
        let k3 = families::complete(3);
        assert!(verify_hamilton_cycle(&k3, &[0, 1, 2]));
        assert!(!verify_hamilton_cycle(&k3, &[0, 1, 1]));
        assert!(!verify_hamilton_cycle(&families::cycle(4), &[0, 2, 1, 3]));
        assert!(!verify_hamilton_cycle(&families::complete(2), &[0, 1]));
    }

    #[test]
    fn practical_on_cycles_and_complete_graphs() {
        for n in 3..30 {
            let g = families::cycle(n);
            let r = run_practical(&g, n as u64);
            assert!(verify_hamilton_cycle(&g, r.cycle().unwrap()));
            let k = families::complete(n);
            assert!(verify_hamilton_cycle(&k, run_practical(&k, 1).cycle().unwrap()));
        }
    }

    #[test]
    fn practical_fails_on_petersen() {
        let r = run_practical(&families::petersen(), 5);
        assert_eq!(r.outcome, Outcome::Fail(FailReason::Budget));
    }

    #[test]
    fn practical_degenerate_inputs() {
        assert_eq!(run_practical(&families::path(5), 0).outcome, Outcome::Fail(FailReason::Degenerate));
        let two = families::disjoint_union(&families::cycle(3), &families::cycle(4));
        assert_eq!(run_practical(&two, 0).outcome, Outcome::Fail(FailReason::Disconnected));
    }

    #[test]
    fn rotate_helpers() {
        assert_eq!(rotate_to_start(vec![0, 1, 2, 3], 2), vec![2, 3, 0, 1]);
        assert_eq!(rotate_to_end(vec![0, 1, 2, 3], 2), vec![3, 0, 1, 2]);
    }
}
