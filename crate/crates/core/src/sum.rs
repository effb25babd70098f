//! Deterministic pairwise summation.
//!
//! Parallel loops in this crate collect per-element terms into a vector first
//! and reduce them here, so results are bit-identical regardless of thread
//! count.

const BLOCK: usize = 32;

/// Pairwise (cascade) sum; rounding error grows as O(log n) instead of O(n).
pub fn pairwise_sum(values: &[f64]) -> f64 {
    if values.len() <= BLOCK {
        return values.iter().sum();
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}
