//! Closed-form description of the nullity line graph.
//!
//! For fixed `k` the points `(n, N(n,k))`, `0 <= n <= k^2+k`, form a chain of
//! isosceles right triangles standing on the horizontal axis. Each triangle
//! is determined by its apex `(eta(q,j), f)` where `1 <= q <= k`,
//! `1 <= j <= q`, `gcd(j,q) = 1` and `f = floor(k/q)`. At `n = eta(q,j)` the
//! graph `G(n,k)` has exactly `f` cycles, each of length `q`.
//!
//! With `k = f q + m`, `M = m + 1` and `(x)_q` the least residue mod `q`:
//!
//! ```text
//! s(q,j)   = #{a in [1,m] : (aj)_q <= (Mj)_q}
//! t(r,q,j) = #{a in [0,m] : (aj)_q <  (rj)_q}
//! eta(q,j) = k floor((k+1)j/q) - k + (Mj)_q f + s(q,j)
//! ```

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::residue;
use crate::error::{Error, Result};
use crate::graph::{period, NullityMethod, NullityReport};

/// Euler's totient `phi(q)` for `q = 1..=limit`; index 0 of the result is
/// `phi(1)`.
pub fn totient_table(limit: usize) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=limit as u64).collect();
    for p in 2..=limit {
        if phi[p] == p as u64 {
            for multiple in (p..=limit).step_by(p) {
                phi[multiple] -= phi[multiple] / p as u64;
            }
        }
    }
    phi.into_iter().skip(1).collect()
}

/// `sum_{q=1}^{limit} phi(q)`.
pub fn totient_sum(limit: u64) -> u64 {
    totient_table(limit as usize).iter().sum()
}

/// Least residues `(aj)_q` for `a = 0, 1, 2, ...`, without division.
fn multiples_mod(j: u64, q: u64) -> impl Iterator<Item = u64> {
    let step = j % q;
    std::iter::successors(Some(0u64), move |&x| {
        let y = x + step;
        Some(if y >= q { y - q } else { y })
    })
}

/// `#{a in [1,m] : (aj)_q <= ((m+1)j)_q}`.
pub fn s_of(q: u64, j: u64, m: u64) -> u64 {
    let bound = ((m + 1) * j) % q;
    multiples_mod(j, q)
        .skip(1)
        .take(m as usize)
        .filter(|&x| x <= bound)
        .count() as u64
}

/// `#{a in [0,m] : (aj)_q < (rj)_q}`.
pub fn t_of(r: u64, q: u64, j: u64, m: u64) -> u64 {
    let bound = (r * j) % q;
    multiples_mod(j, q)
        .take(m as usize + 1)
        .filter(|&x| x < bound)
        .count() as u64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ApexParams {
    pub k: u64,
    /// Cycle length at the apex.
    pub q: u64,
    pub j: u64,
    /// `floor(k/q)`, the apex height.
    pub f: u64,
    /// `k mod q`.
    pub m: u64,
    pub s: u64,
}

impl ApexParams {
    pub fn new(q: u64, j: u64, k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroBandWidth);
        }
        if q == 0 || q > k {
            return Err(Error::OutOfRange(format!("q = {q} not in [1, {k}]")));
        }
        if j == 0 || j > q {
            return Err(Error::OutOfRange(format!("j = {j} not in [1, {q}]")));
        }
        if j.gcd(&q) != 1 {
            return Err(Error::NotCoprime { q, j });
        }
        let (f, m) = (k / q, k % q);
        Ok(ApexParams {
            k,
            q,
            j,
            f,
            m,
            s: s_of(q, j, m),
        })
    }

    /// `m + 1`.
    pub fn big_m(&self) -> u64 {
        self.m + 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Apex {
    pub params: ApexParams,
    pub eta: u64,
    pub height: u64,
}

impl Apex {
    /// Left end of the triangle base.
    pub fn base_start(&self) -> u64 {
        self.eta - self.height
    }

    /// Right end of the triangle base.
    pub fn base_end(&self) -> u64 {
        self.eta + self.height
    }
}

pub fn eta_of(q: u64, j: u64, k: u64) -> Result<Apex> {
    let params = ApexParams::new(q, j, k)?;
    let ApexParams { f, s, .. } = params;
    let lead = k * ((k + 1) * j / q);
    let eta = lead - k + (params.big_m() * j % q) * f + s;
    if eta < f || eta > period(k) - f {
        return Err(Error::Inconsistent {
            k,
            reason: format!("eta({q},{j}) = {eta} outside [{f}, k^2+k-{f}]"),
        });
    }
    Ok(Apex {
        params,
        eta,
        height: f,
    })
}

/// All apexes for one `k`, sorted by `eta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineGraph {
    k: u64,
    apexes: Vec<Apex>,
}

impl LineGraph {
    /// Wraps a list of apexes after checking distinctness and tiling.
    pub fn from_apexes(k: u64, mut apexes: Vec<Apex>) -> Result<Self> {
        apexes.sort_by_key(|a| a.eta);
        let lg = LineGraph { k, apexes };
        lg.validate()?;
        Ok(lg)
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn apexes(&self) -> &[Apex] {
        &self.apexes
    }

    pub fn period(&self) -> u64 {
        period(self.k)
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.k;
        let bad = |reason: String| Err(Error::Inconsistent { k, reason });
        if self.apexes.is_empty() {
            return bad("no apexes".into());
        }
        if self.apexes[0].base_start() != 0 {
            return bad(format!(
                "first base starts at {}",
                self.apexes[0].base_start()
            ));
        }
        for w in self.apexes.windows(2) {
            if w[0].eta == w[1].eta {
                return bad(format!("duplicate eta {}", w[0].eta));
            }
            if w[0].base_end() != w[1].base_start() {
                return bad(format!(
                    "bases do not adjoin between eta {} and eta {}",
                    w[0].eta, w[1].eta
                ));
            }
        }
        let last = self.apexes.last().unwrap();
        if last.base_end() != self.period() {
            return bad(format!("last base ends at {}", last.base_end()));
        }
        for a in &self.apexes {
            if a.params.k != k || a.height != k / a.params.q || a.height == 0 {
                return bad(format!("apex at eta {} has inconsistent parameters", a.eta));
            }
        }
        Ok(())
    }

    /// Index of the triangle covering residue `r`; on a shared base
    /// endpoint the left triangle wins.
    pub fn triangle_index(&self, r: u64) -> usize {
        self.apexes.partition_point(|a| a.base_end() < r)
    }

    /// `N(n,k)` for `n` already reduced mod `k^2+k`.
    pub fn nullity_at(&self, r: u64) -> u64 {
        debug_assert!(r < self.period());
        let a = &self.apexes[self.triangle_index(r)];
        a.height - a.eta.abs_diff(r)
    }

    pub fn nullity(&self, n: &BigInt) -> u64 {
        self.nullity_at(residue(n, self.period()))
    }
}

pub fn build_line_graph(k: u64) -> Result<LineGraph> {
    if k == 0 {
        return Err(Error::ZeroBandWidth);
    }
    let phi = totient_table(k as usize);
    let expected: u64 = phi.iter().sum();
    let mut apexes = Vec::with_capacity(expected as usize);
    for q in 1..=k {
        for j in (1..=q).filter(|j| j.gcd(&q) == 1) {
            apexes.push(eta_of(q, j, k)?);
        }
    }
    debug_assert_eq!(apexes.len() as u64, expected);
    LineGraph::from_apexes(k, apexes)
}

pub fn nullity_closed_form(n: &BigInt, k: u64) -> Result<NullityReport> {
    let lg = build_line_graph(k)?;
    Ok(NullityReport {
        nullity: lg.nullity(n),
        method: NullityMethod::ClosedForm,
        k,
        n: n.clone(),
    })
}

/// The predicted cycle `k-w = c(0) -> c(1) -> ... -> c(q-1)` at an apex,
/// for `1 <= w <= f`, with `c(r) = -1 - w + (rj)_q f + t(r,q,j)`.
pub fn cycle_vertices(apex: &Apex, w: u64) -> Result<Vec<u64>> {
    let ApexParams { k, q, j, f, m, .. } = apex.params;
    if w == 0 || w > f {
        return Err(Error::OutOfRange(format!("w = {w} not in [1, {f}]")));
    }
    let mut cycle = Vec::with_capacity(q as usize);
    cycle.push(k - w);
    for r in 1..q {
        let c = (r * j % q) * f + t_of(r, q, j, m);
        // (rj)_q >= 1 and t >= 1, so c >= f + 1 > w
        cycle.push(c - 1 - w);
    }
    Ok(cycle)
}

/// All `f` predicted cycles at an apex, rotated to start at their minimum
/// and sorted.
pub fn predicted_cycles(apex: &Apex) -> Vec<Vec<u64>> {
    let mut cycles: Vec<Vec<u64>> = (1..=apex.height)
        .map(|w| {
            let mut c = cycle_vertices(apex, w).expect("w in range");
            let min_pos = (0..c.len()).min_by_key(|&i| c[i]).unwrap();
            c.rotate_left(min_pos);
            c
        })
        .collect();
    cycles.sort();
    cycles
}
