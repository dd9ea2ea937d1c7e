pub mod apexes;
pub mod conjecture;
pub mod linegraph;
pub mod nullity;
pub mod stats;
pub mod verify;

use std::path::Path;

use anyhow::bail;
use skewband_core::{build_line_graph, cache, LineGraph};

/// Largest `k` for which the closed-form table is built on demand. The table
/// has about `0.3 k^2` rows.
pub const CLOSED_FORM_MAX_K: u64 = 4000;

/// The apex table for `k`, from the cache when a valid file exists.
/// Never writes; only `apexes` refreshes the cache.
pub fn line_graph(cache_dir: &Path, k: u64) -> anyhow::Result<LineGraph> {
    if k > CLOSED_FORM_MAX_K {
        bail!("closed form is limited to k <= {CLOSED_FORM_MAX_K}; use --method graph");
    }
    match cache::read_table(cache_dir, k) {
        Ok(lg) => Ok(lg),
        Err(_) => Ok(build_line_graph(k)?),
    }
}

/// A round tick spacing (1, 2 or 5 times a power of ten) giving about ten
/// ticks over `span`.
pub fn tick_step(span: u64) -> u64 {
    let raw = (span / 10).max(1);
    let mag = 10u64.pow(raw.ilog10());
    [1, 2, 5, 10]
        .into_iter()
        .map(|m| m * mag)
        .find(|&s| s >= raw)
        .unwrap_or(10 * mag)
}
