//! Distribution of nullities over one period.

use serde::{Deserialize, Serialize};

use crate::apex::totient_table;
use crate::error::{Error, Result};
use crate::graph::period;

/// Number of `n` in `[0, k^2+k)` with `N(n,k) = z`.
///
/// A triangle of height `h` contributes its left base point to `z = 0`, its
/// apex to `z = h`, and two points to every `0 < z < h`.
pub fn exact_counts(k: u64, z: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::ZeroBandWidth);
    }
    let phi = totient_table(k as usize);
    Ok(counts_from_totients(&phi, k, z))
}

fn prefix(phi: &[u64], upto: u64) -> u64 {
    phi.iter().take(upto as usize).sum()
}

fn counts_from_totients(phi: &[u64], k: u64, z: u64) -> u64 {
    match k.checked_div(z) {
        None => prefix(phi, k),
        Some(upper) => prefix(phi, upper) + prefix(phi, k / (z + 1)),
    }
}

/// Limiting share of `n` with nullity `z` as `k` grows:
/// `3/pi^2` for `z = 0` and `3 (1/z^2 + 1/(z+1)^2) / pi^2` otherwise.
pub fn asymptotic_density(z: u64) -> f64 {
    let pi2 = std::f64::consts::PI * std::f64::consts::PI;
    if z == 0 {
        3.0 / pi2
    } else {
        let (a, b) = (z as f64, (z + 1) as f64);
        3.0 * (1.0 / (a * a) + 1.0 / (b * b)) / pi2
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StatsRow {
    pub z: u64,
    pub count: u64,
    /// `100 * count / (k^2+k)`.
    pub percent: f64,
    /// `(k^2+k) * asymptotic_density(z)`.
    pub asymptotic: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StatsReport {
    pub k: u64,
    pub period: u64,
    pub rows: Vec<StatsRow>,
}

impl StatsReport {
    pub fn total_count(&self) -> u64 {
        self.rows.iter().map(|r| r.count).sum()
    }
}

/// Rows for `z = 0..=z_max` (clamped to `k`).
pub fn stats_report(k: u64, z_max: u64) -> Result<StatsReport> {
    if k == 0 {
        return Err(Error::ZeroBandWidth);
    }
    let phi = totient_table(k as usize);
    let p = period(k);
    let rows = (0..=z_max.min(k))
        .map(|z| {
            let count = counts_from_totients(&phi, k, z);
            StatsRow {
                z,
                count,
                percent: 100.0 * count as f64 / p as f64,
                asymptotic: p as f64 * asymptotic_density(z),
            }
        })
        .collect();
    Ok(StatsReport { k, period: p, rows })
}

/// Brute histogram of any nullity function over one period.
pub fn histogram(k: u64, nullity: impl Fn(u64) -> u64) -> Vec<u64> {
    let mut h = vec![0u64; k as usize + 1];
    for n in 0..period(k) {
        h[nullity(n) as usize] += 1;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_count, GraphSpec};

    #[test]
    fn k300_counts() {
        assert_eq!(exact_counts(300, 0).unwrap(), 27398);
        assert_eq!(exact_counts(300, 1).unwrap(), 34256);
        assert_eq!(exact_counts(300, 2).unwrap(), 9902);
    }

    #[test]
    fn asymptotics() {
        assert!((asymptotic_density(0) - 0.30396).abs() < 1e-5);
        let scaled: Vec<f64> = (0..3).map(|z| 90300.0 * asymptotic_density(z)).collect();
        assert!((scaled[0] - 27447.9).abs() < 0.1);
        assert!((scaled[1] - 34309.9).abs() < 0.1);
        assert!((scaled[2] - 9911.7).abs() < 0.1);
    }

    #[test]
    fn counts_partition_the_period() {
        for k in 1..=40u64 {
            let report = stats_report(k, k).unwrap();
            assert_eq!(report.total_count(), period(k));
        }
    }

    #[test]
    fn counts_match_graph_histogram() {
        for k in 1..=12u64 {
            let h = histogram(k, |n| {
                cycle_count(&GraphSpec::from_i64(n as i64, k).unwrap())
            });
            for (z, &c) in h.iter().enumerate() {
                assert_eq!(exact_counts(k, z as u64).unwrap(), c, "k={k} z={z}");
            }
        }
    }

    #[test]
    fn z_max_is_clamped() {
        assert_eq!(stats_report(3, 10).unwrap().rows.len(), 4);
        assert!(exact_counts(0, 0).is_err());
    }
}
