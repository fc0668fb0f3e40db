//! Size-dependent constants.
//!
//! Every logarithm here is the natural logarithm. Thresholds that depend on
//! `log n` are all computed through this module so they can be recomputed
//! for a different base by changing [`log`] alone.

/// Natural logarithm of `n`.
pub fn log(n: usize) -> f64 {
    (n as f64).ln()
}

/// Number of vertices whose third out-arc is held back: `ceil(n / sqrt(log n))`.
///
/// Requires `n >= 3` so that `sqrt(log n) >= 1` and the result is at most `n`.
pub fn reserved_count(n: usize) -> usize {
    debug_assert!(n >= 3);
    let k = (n as f64 / log(n).sqrt()).ceil() as usize;
    k.min(n)
}

/// Maximum degree threshold `2 log n / log log n`. Infinite when `log log n <= 0`.
pub fn delta0(n: usize) -> f64 {
    let ll = log(n).ln();
    if n < 3 || ll <= 0.0 {
        f64::INFINITY
    } else {
        2.0 * log(n) / ll
    }
}

/// Size cap `log n / 3.9` for small complex components.
pub fn small_component_cap(n: usize) -> f64 {
    log(n) / 3.9
}

/// Average out-degree of the split digraph, `3 - 1/sqrt(log n)`.
pub fn tau(n: usize) -> f64 {
    3.0 - 1.0 / log(n).sqrt()
}

/// BFS depth `ceil(10 log_tau log n)`, clamped below at 1.
pub fn level_depth(n: usize) -> usize {
    let ll = log(n).ln();
    let t = tau(n);
    if n < 3 || ll <= 0.0 || t <= 1.0 {
        return 1;
    }
    ((10.0 * ll / t.ln()).ceil() as usize).max(1)
}

/// In-reach cutoff `(1000 log log n) log^10 n`.
pub fn pi_in(n: usize) -> f64 {
    1000.0 * log(n).ln() * log(n).powi(10)
}

/// Out-reach cutoff `(log^10 n / (log log n)^2) * k / n`.
pub fn pi_out(n: usize) -> f64 {
    let ll = log(n).ln();
    log(n).powi(10) / (ll * ll) * (reserved_count(n) as f64 / n as f64)
}

/// Hard in-reach cutoff `log^20 n`.
pub fn rho_in(n: usize) -> f64 {
    log(n).powi(20)
}

/// Component threshold for the maximum 2-matching of `G2`: `6 n / log n`.
pub fn kappa_threshold(n: usize) -> f64 {
    6.0 * n as f64 / log(n)
}

/// Bound on reservoir arcs consumed: `12 n / log n`.
pub fn arcs_threshold(n: usize) -> f64 {
    12.0 * n as f64 / log(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reserved_count_values() {
        assert_eq!(reserved_count(100), 47);
        assert_eq!(reserved_count(3), 3);
        for n in 3..200 {
            assert!(reserved_count(n) <= n);
        }
    }

    #[test]
    fn level_depth_at_1000() {
        // tau = 3 - 1/sqrt(6.9078) = 2.61952, log log n = 1.93264
        // 10 * 1.93264 / ln(2.61952) = 20.07 -> 21
        assert_eq!(level_depth(1000), 21);
    }

    #[test]
    fn small_n_is_finite_or_inf() {
        assert!(delta0(2).is_infinite());
        assert!(delta0(1000) > 7.0 && delta0(1000) < 7.2);
        assert_eq!(level_depth(3), 2);
        assert_eq!(level_depth(1), 1);
    }
}
