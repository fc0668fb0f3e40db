//! Tutte–Berge style dual for simple 2-matchings.
//!
//! For disjoint `U, S` with `S` independent, the maximum 2-matching size is
//! at most `|V| + |U| - |S| + sum_X floor(e(X, S) / 2)` over the components `X`
//! of `G - U - S`, and the minimum over all such pairs is attained with
//! equality. [`tutte_berge_min`] finds that minimum by exhaustive search.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex cap for exhaustive dual search (3^14 pairs).
pub const DEFAULT_DUAL_CAP: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualCertificate {
    pub u: Vec<usize>,
    pub s: Vec<usize>,
    pub value: usize,
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

fn value_of(adj: &[u64], n: usize, u: u64, s: u64) -> usize {
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut rest = full & !u & !s;
    let mut total = n + u.count_ones() as usize - s.count_ones() as usize;
    while rest != 0 {
        let seed = rest & rest.wrapping_neg();
        let mut comp = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & rest & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        rest &= !comp;
        let mut cross = 0;
        let mut c = comp;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            cross += (adj[v] & s).count_ones() as usize;
        }
        total += cross / 2;
    }
    total
}

fn mask_of(n: usize, set: &[usize]) -> Result<u64> {
    set.iter().try_fold(0u64, |m, &v| {
        if v >= n {
            Err(Error::VertexOutOfRange { vertex: v, n })
        } else {
            Ok(m | 1 << v)
        }
    })
}

/// Evaluates the dual expression for a given pair `(U, S)`.
pub fn dual_value(g: &Graph, u: &[usize], s: &[usize]) -> Result<usize> {
    let adj = g.adjacency_masks()?;
    let n = g.n();
    let (um, sm) = (mask_of(n, u)?, mask_of(n, s)?);
    if um & sm != 0 {
        return Err(Error::InvalidParameter("U and S must be disjoint".into()));
    }
    if members(sm).iter().any(|&v| adj[v] & sm != 0) {
        return Err(Error::InvalidParameter("S must be independent".into()));
    }
    Ok(value_of(&adj, n, um, sm))
}

/// Minimising `(U, S)` over all disjoint pairs with `S` independent.
///
/// Pairs are scanned with `U` then `S` in increasing mask order and only
/// strict improvements replace the incumbent, so `U = S = {}` wins ties.
pub fn tutte_berge_min(g: &Graph, size_cap: usize) -> Result<DualCertificate> {
    let n = g.n();
    let cap = size_cap.min(63);
    if n > cap {
        return Err(Error::TooLarge {
            what: "vertex count",
            actual: n,
            limit: cap,
        });
    }
    let adj = g.adjacency_masks()?;
    let full = (1u64 << n) - 1;
    let mut best = (n, 0u64, 0u64);
    for u in 0..=full {
        let rest = full & !u;
        let mut s = 0u64;
        loop {
            let independent = {
                let mut c = s;
                let mut ok = true;
                while c != 0 {
                    let v = c.trailing_zeros() as usize;
                    c &= c - 1;
                    if adj[v] & s != 0 {
                        ok = false;
                        break;
                    }
                }
                ok
            };
            if independent {
                let val = value_of(&adj, n, u, s);
                if val < best.0 {
                    best = (val, u, s);
                }
            }
            if s == rest {
                break;
            }
            s = (s.wrapping_sub(rest)) & rest;
        }
    }
    Ok(DualCertificate {
        u: members(best.1),
        s: members(best.2),
        value: best.0,
    })
}
