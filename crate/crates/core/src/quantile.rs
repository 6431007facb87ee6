//! Type-7 empirical quantiles (linear interpolation between order
//! statistics), the single quantile definition used everywhere in the
//! crate: posterior summaries, descriptive statistics and covariate grids.

/// Quantile of already-sorted data at `p` in [0, 1], Hyndman & Fan type 7.
pub(crate) fn quantile_sorted(sorted: &[f64], p: f64) -> f64 {
    debug_assert!(!sorted.is_empty());
    debug_assert!((0.0..=1.0).contains(&p));
    let n = sorted.len();
    if n == 1 {
        return sorted[0];
    }
    let h = (n - 1) as f64 * p;
    let lo = h.floor() as usize;
    if lo + 1 >= n {
        return sorted[n - 1];
    }
    let g = h - lo as f64;
    sorted[lo] + g * (sorted[lo + 1] - sorted[lo])
}

/// Quantile of unsorted data; sorts a copy.
pub(crate) fn quantile(values: &[f64], p: f64) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("non-finite value in quantile input"));
    quantile_sorted(&sorted, p)
}
