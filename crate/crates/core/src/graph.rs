//! The functional graph `G(n,k)` and nullity by cycle counting.
//!
//! `G(n,k)` lives on the vertices `0..=k` and has exactly `k` edges
//!
//! ```text
//! E(i) : (i + n - 2) mod (k+1)  ->  (i + n - 1) mod k,      1 <= i <= k
//! ```
//!
//! Vertex `k` has in-degree 0 and vertex `(n-2) mod (k+1)` has out-degree 0;
//! every other vertex has in- and out-degree 1. The graph is therefore one
//! open path (the tail) from `k` to `(n-2) mod (k+1)` plus disjoint simple
//! cycles, and the number of cycles is the nullity `N(n,k)`.
//!
//! The graph depends on `n` only through `n mod (k^2 + k)`, so every query is
//! `O(k)` once `n` is reduced.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::{residue, residue_i64};
use crate::error::{Error, Result};

/// Band width limit: `k^2 + k` must fit in a `u64`.
pub const MAX_BAND_WIDTH: u64 = u32::MAX as u64;

/// `(n mod k^2+k, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GraphSpec {
    residue: u64,
    k: u64,
}

pub fn period(k: u64) -> u64 {
    k * k + k
}

fn check_k(k: u64) -> Result<()> {
    if k == 0 {
        return Err(Error::ZeroBandWidth);
    }
    if k > MAX_BAND_WIDTH {
        return Err(Error::BandWidthTooLarge(k));
    }
    Ok(())
}

impl GraphSpec {
    pub fn new(n: &BigInt, k: u64) -> Result<Self> {
        check_k(k)?;
        Ok(GraphSpec {
            residue: residue(n, period(k)),
            k,
        })
    }

    pub fn from_i64(n: i64, k: u64) -> Result<Self> {
        check_k(k)?;
        Ok(GraphSpec {
            residue: residue_i64(n, period(k)),
            k,
        })
    }

    pub fn from_decimal(n: &str, k: u64) -> Result<Self> {
        Self::new(&crate::arith::parse_decimal(n)?, k)
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// `n mod (k^2 + k)`.
    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn period(&self) -> u64 {
        period(self.k)
    }

    /// `n mod k`.
    pub fn n_mod_k(&self) -> u64 {
        self.residue % self.k
    }

    /// `n mod (k+1)`.
    pub fn n_mod_k1(&self) -> u64 {
        self.residue % (self.k + 1)
    }

    /// The vertex with out-degree 0, `(n-2) mod (k+1)`.
    pub fn terminal(&self) -> u64 {
        (self.residue + 2 * self.k) % (self.k + 1)
    }

    /// Spec for `n + delta`.
    pub fn shifted(&self, delta: i64) -> Self {
        let p = self.period() as i128;
        GraphSpec {
            residue: ((self.residue as i128 + delta as i128).rem_euclid(p)) as u64,
            k: self.k,
        }
    }

    /// Successor of every vertex; `None` for the terminal vertex.
    fn successors(&self) -> Vec<Option<u32>> {
        let k = self.k;
        let mut succ = vec![None; k as usize + 1];
        let mut from = self.terminal();
        let mut to = self.residue % k;
        for _ in 0..k {
            from = if from == k { 0 } else { from + 1 };
            succ[from as usize] = Some(to as u32);
            to = if to + 1 == k { 0 } else { to + 1 };
        }
        succ
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub from: u64,
    pub to: u64,
    /// The edge index `i` in `1..=k`.
    pub index: u64,
}

pub fn build_edges(spec: &GraphSpec) -> Vec<Edge> {
    let (r, k) = (spec.residue, spec.k);
    (1..=k)
        .map(|i| Edge {
            from: (i + r + k - 1) % (k + 1),
            to: (i + r - 1) % k,
            index: i,
        })
        .collect()
}

/// Cycles of `G(n,k)` plus its tail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDecomposition {
    pub k: u64,
    /// Each cycle starts at its minimum vertex and does not repeat it at the
    /// end; cycles are sorted by minimum vertex.
    pub cycles: Vec<Vec<u64>>,
    /// Vertex path from `k` to the terminal vertex; `[k]` when the tail has
    /// no edges.
    pub tail: Vec<u64>,
}

impl GraphDecomposition {
    pub fn tail_length(&self) -> usize {
        self.tail.len() - 1
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn in_tail(&self, v: u64) -> bool {
        self.tail.contains(&v)
    }
}

pub fn decompose(spec: &GraphSpec) -> GraphDecomposition {
    let succ = spec.successors();
    let k = spec.k as usize;
    let mut seen = vec![false; k + 1];
    let mut tail = vec![spec.k];
    seen[k] = true;
    let mut v = k;
    while let Some(next) = succ[v] {
        v = next as usize;
        seen[v] = true;
        tail.push(v as u64);
    }
    let mut cycles = Vec::new();
    for start in 0..=k {
        if seen[start] {
            continue;
        }
        // Ascending sweep: `start` is the minimum of its cycle.
        let mut cycle = Vec::new();
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            cycle.push(v as u64);
            v = succ[v].expect("non-terminal vertex has a successor") as usize;
        }
        cycles.push(cycle);
    }
    GraphDecomposition {
        k: spec.k,
        cycles,
        tail,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NullityMethod {
    Graph,
    Rank,
    ClosedForm,
}

impl std::fmt::Display for NullityMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            NullityMethod::Graph => "graph",
            NullityMethod::Rank => "rank",
            NullityMethod::ClosedForm => "closed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NullityReport {
    pub nullity: u64,
    pub method: NullityMethod,
    pub k: u64,
    #[serde(with = "crate::serde_decimal")]
    pub n: BigInt,
}

/// Number of cycles in `G(n,k)` without materializing them.
pub fn cycle_count(spec: &GraphSpec) -> u64 {
    let succ = spec.successors();
    let k = spec.k as usize;
    let mut seen = vec![false; k + 1];
    let mut v = k;
    seen[v] = true;
    while let Some(next) = succ[v] {
        v = next as usize;
        seen[v] = true;
    }
    let mut count = 0;
    for start in 0..=k {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            v = succ[v].expect("non-terminal vertex has a successor") as usize;
        }
    }
    count
}

pub fn nullity_by_cycles(n: &BigInt, k: u64) -> Result<NullityReport> {
    let spec = GraphSpec::new(n, k)?;
    Ok(NullityReport {
        nullity: cycle_count(&spec),
        method: NullityMethod::Graph,
        k,
        n: n.clone(),
    })
}

/// Translate of a cycle: `t` added to every vertex mod `k+1`.
pub fn translate(cycle: &[u64], t: u64, k: u64) -> Vec<u64> {
    cycle.iter().map(|&v| (v + t) % (k + 1)).collect()
}

/// Returns the smallest `t` with `c2 = c1 + t` as cyclic sequences, if any.
pub fn are_translates(c1: &[u64], c2: &[u64], k: u64) -> Option<u64> {
    let len = c1.len();
    if len != c2.len() || len == 0 {
        return None;
    }
    let m = k + 1;
    (0..len)
        .filter_map(|rot| {
            let t = (c2[0] + m - c1[rot] % m) % m;
            (0..len)
                .all(|i| (c1[(rot + i) % len] + t) % m == c2[i] % m)
                .then_some(t)
        })
        .min()
}

/// When the cycles are `C, C+1, ..., C+N-1`, returns the index of `C`.
pub fn contiguous_translate_base(d: &GraphDecomposition) -> Option<usize> {
    let n = d.cycles.len();
    if n == 0 {
        return None;
    }
    (0..n).find(|&b| {
        let mut offsets: Vec<u64> = match d
            .cycles
            .iter()
            .map(|c| are_translates(&d.cycles[b], c, d.k))
            .collect::<Option<Vec<_>>>()
        {
            Some(o) => o,
            None => return false,
        };
        offsets.sort_unstable();
        offsets.iter().enumerate().all(|(i, &t)| t == i as u64)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeClass {
    Long,
    Short,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeLength {
    pub class: EdgeClass,
    /// `(to - from) mod (k+1)`.
    pub length: u64,
}

/// Long edges end below `n mod k`; short edges end at or above it. The two
/// classes have lengths `(n_k - n_{k+1} + 2) mod (k+1)` and
/// `(n_k - n_{k+1} + 1) mod (k+1)`.
pub fn classify_edge(e: &Edge, spec: &GraphSpec) -> EdgeLength {
    let m = spec.k + 1;
    let length = (e.to + m - e.from % m) % m;
    let class = if e.to < spec.n_mod_k() {
        EdgeClass::Long
    } else {
        EdgeClass::Short
    };
    EdgeLength { class, length }
}

/// The edge length predicted for a class.
pub fn class_length(class: EdgeClass, spec: &GraphSpec) -> u64 {
    let m = spec.k + 1;
    let base = spec.n_mod_k() + m - spec.n_mod_k1();
    match class {
        EdgeClass::Long => (base + 2) % m,
        EdgeClass::Short => (base + 1) % m,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: i64, k: u64) -> GraphSpec {
        GraphSpec::from_i64(n, k).unwrap()
    }

    fn edge_pairs(n: i64, k: u64) -> Vec<(u64, u64)> {
        build_edges(&spec(n, k))
            .iter()
            .map(|e| (e.from, e.to))
            .collect()
    }

    #[test]
    fn edges_of_g_16_8() {
        let edges = edge_pairs(16, 8);
        assert_eq!(edges.len(), 8);
        for e in [
            (7, 1),
            (1, 4),
            (4, 7),
            (6, 0),
            (0, 3),
            (3, 6),
            (8, 2),
            (2, 5),
        ] {
            assert!(edges.contains(&e), "missing {e:?}");
        }
    }

    #[test]
    fn edges_at_k_squared_are_loops() {
        for k in 1..=12u64 {
            for e in build_edges(&spec((k * k) as i64, k)) {
                assert_eq!(e.from, e.to);
                assert_eq!(e.from, (e.index - 1) % (k + 1));
            }
        }
    }

    #[test]
    fn single_edge_for_k_one() {
        assert_eq!(edge_pairs(0, 1), vec![(1, 0)]);
    }

    #[test]
    fn degree_constraints() {
        for k in 1..=7u64 {
            for n in 0..period(k) as i64 {
                let s = spec(n, k);
                let edges = build_edges(&s);
                assert!(edges.iter().all(|e| e.to != k && e.from != s.terminal()));
            }
        }
    }

    #[test]
    fn decompose_g_16_8() {
        let d = decompose(&spec(16, 8));
        assert_eq!(d.cycles, vec![vec![0, 3, 6], vec![1, 4, 7]]);
        assert_eq!(d.tail, vec![8, 2, 5]);
    }

    #[test]
    fn decompose_zero_and_k_squared() {
        for k in 1..=10u64 {
            let d = decompose(&spec(0, k));
            assert!(d.cycles.is_empty());
            assert_eq!(d.tail_length(), k as usize);
            let d = decompose(&spec((k * k) as i64, k));
            assert_eq!(d.cycles.len(), k as usize);
            assert!(d.cycles.iter().all(|c| c.len() == 1));
            assert_eq!(d.tail, vec![k]);
        }
    }

    #[test]
    fn nullity_examples() {
        assert_eq!(nullity_by_cycles(&BigInt::from(16), 8).unwrap().nullity, 2);
        assert_eq!(
            nullity_by_cycles(&BigInt::from(878), 50).unwrap().nullity,
            4
        );
        let huge: BigInt = "10000000000000000000000000000000000000000".parse().unwrap();
        let reduced = residue(&huge, period(300));
        assert_eq!(
            nullity_by_cycles(&huge, 300).unwrap().nullity,
            nullity_by_cycles(&BigInt::from(reduced), 300)
                .unwrap()
                .nullity
        );
    }

    #[test]
    fn negative_n_reduces() {
        assert_eq!(spec(-1, 6).residue(), 41);
        assert_eq!(cycle_count(&spec(-42, 6)), 0);
    }

    #[test]
    fn translates() {
        assert_eq!(are_translates(&[6, 0, 3], &[7, 1, 4], 8), Some(1));
        assert_eq!(are_translates(&[1, 4, 7], &[1, 4, 7], 8), Some(0));
        // rotation of the same cyclic sequence
        assert_eq!(are_translates(&[0, 3, 6], &[4, 7, 1], 8), Some(1));
        assert_eq!(are_translates(&[0, 3], &[0, 4], 8), None);
        assert_eq!(are_translates(&[0], &[1, 2], 8), None);
        let d = decompose(&spec(16, 4));
        let loop0 = d.cycles.iter().find(|c| c == &&vec![0]).unwrap();
        let loop2 = d.cycles.iter().find(|c| c == &&vec![2]).unwrap();
        assert_eq!(are_translates(loop0, loop2, 4), Some(2));
    }

    #[test]
    fn contiguous_base_of_g_16_8() {
        let d = decompose(&spec(16, 8));
        assert_eq!(contiguous_translate_base(&d), Some(0));
    }

    #[test]
    fn edge_classes() {
        let s = spec(16, 8);
        let edges = build_edges(&s);
        let find = |from, to| *edges.iter().find(|e| e.from == from && e.to == to).unwrap();
        let e = classify_edge(&find(8, 2), &s);
        assert_eq!(e.length, 3);
        assert_eq!(e.length, class_length(e.class, &s));
        assert_eq!(classify_edge(&find(6, 0), &s).length, 3);
        for k in 1..=9u64 {
            let s = spec((k * k) as i64, k);
            for e in build_edges(&s) {
                let c = classify_edge(&e, &s);
                assert_eq!(
                    c,
                    EdgeLength {
                        class: EdgeClass::Short,
                        length: 0
                    }
                );
            }
        }
    }

    #[test]
    fn rejects_bad_band_width() {
        assert!(matches!(
            GraphSpec::from_i64(3, 0),
            Err(Error::ZeroBandWidth)
        ));
        assert!(GraphSpec::from_i64(3, MAX_BAND_WIDTH + 1).is_err());
        assert!(GraphSpec::from_decimal("1x", 3).is_err());
    }
}
