//! The threshold `N(k)`: the smallest polygon order from which the
//! Fermat-Weber point of an odd chain `C_n(k)` sits on its root vertex.
//!
//! For `k = 2m + 1` the root vertex is optimal exactly when
//! `f(t) = 2 * sum_{i=1..m} sin(i pi / t) - 1 <= 0` at `t = n`. On `t >= 2m`
//! every sine argument lies in `(0, pi/2]`, so `f` is strictly decreasing
//! there and the threshold is found by binary search over a certified range.

use std::f64::consts::PI;

use serde::Serialize;

use crate::chain::{build_chain, minimize_on_axis};
use crate::error::{Error, Result};

/// `N(k)` together with the two values of the root condition that pin it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThresholdResult {
    pub k: usize,
    pub n_threshold: usize,
    /// Root condition at `N(k) - 1`; strictly positive.
    pub certificate_low: f64,
    /// Root condition at `N(k)`; non-positive.
    pub certificate_high: f64,
    /// Predicate evaluations spent by the search.
    pub iterations: u32,
}

/// `2 * sum_{i=1..m} sin(i pi / t) - 1` by summing term by term.
pub fn root_condition_direct(m: usize, t: usize) -> f64 {
    let t = t as f64;
    2.0 * (1..=m).map(|i| (i as f64 * PI / t).sin()).sum::<f64>() - 1.0
}

/// `2 * sum_{i=1..m} sin(i pi / t) - 1` in O(1) via the closed form
/// `sum sin(i h') = sin(m h) sin((m + 1) h) / sin(h)` with `h = pi / 2t`.
pub fn root_condition_value(m: usize, t: usize) -> Result<f64> {
    if t < 1 {
        return Err(Error::Domain {
            value: t as f64,
            domain: "t >= 1",
        });
    }
    let h = PI / (2.0 * t as f64);
    let value = 2.0 * (m as f64 * h).sin() * ((m + 1) as f64 * h).sin() / h.sin() - 1.0;
    debug_assert!(
        m > 10_000 || (value - root_condition_direct(m, t)).abs() < 1e-10,
        "closed form disagrees with direct sum at m={m}, t={t}"
    );
    Ok(value)
}

fn half_count(k: usize) -> Result<usize> {
    if k.is_multiple_of(2) {
        return Err(Error::EvenChain(k));
    }
    if k < 3 {
        return Err(Error::Domain {
            value: k as f64,
            domain: "odd k >= 3",
        });
    }
    Ok((k - 1) / 2)
}

/// `ceil(pi m (m + 1) + 1)`, a certified upper bound on `N(2m + 1)`.
pub fn upper_bound(k: usize) -> Result<usize> {
    let m = half_count(k)? as f64;
    Ok((PI * m * (m + 1.0) + 1.0).ceil() as usize)
}

fn root_satisfied(m: usize, t: usize) -> bool {
    // Safe: t >= k >= 3 throughout the search.
    root_condition_value(m, t).unwrap_or(f64::INFINITY) <= 0.0
}

/// Computes `N(k)` for odd `k >= 3` with O(log k) evaluations of the root
/// condition.
///
/// Even `k` has no threshold (the Weber point of an even chain never reaches
/// the chain) and yields [`Error::EvenChain`].
pub fn compute_threshold(k: usize) -> Result<ThresholdResult> {
    let m = half_count(k)?;
    let mut lo = k.max(2 * m);
    let mut hi = upper_bound(k)?;
    let mut iterations = 0u32;

    // First t in [lo, hi] with the condition satisfied; hi is known to satisfy it.
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        iterations += 1;
        if root_satisfied(m, mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let n = lo;
    Ok(ThresholdResult {
        k,
        n_threshold: n,
        certificate_low: root_condition_value(m, n - 1)?,
        certificate_high: root_condition_value(m, n)?,
        iterations,
    })
}

/// Checks via the axis solver whether the Weber point of `C_n(k)` is the
/// root vertex.
pub fn verify_threshold_by_solver(k: usize, n: usize) -> Result<bool> {
    if k.is_multiple_of(2) {
        return Err(Error::EvenChain(k));
    }
    let chain = build_chain(n, k)?;
    Ok(minimize_on_axis(&chain).at_root)
}
