//! Exact rank of integer matrices, used as the brute-force nullity oracle.
//!
//! Two independent routes are provided: Gaussian elimination over a prime
//! field `GF(p)` with `p > k(k+1)`, and fraction-free elimination over the
//! integers (rank over the rationals). Both pick the first nonzero pivot in
//! column order and track the nonzero extent of every row, so band matrices
//! are reduced in roughly `O(n k^2)` operations instead of `O(n^3)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{inv_mod, is_prime, mul_mod, next_prime_above, residue, sub_mod};
use crate::band::IntegerMatrix;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > u32::MAX as u64 {
            return Err(Error::OutOfRange(format!(
                "prime {p} exceeds the trial-division range"
            )));
        }
        Ok(PrimeField { p })
    }

    /// A prime field that is admissible for band width `k`.
    pub fn for_band(p: u64, k: u64) -> Result<Self> {
        let field = Self::new(p)?;
        if (p as u128) <= k as u128 * (k as u128 + 1) {
            return Err(Error::InadmissiblePrime { p, k });
        }
        Ok(field)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn is_admissible_for(&self, k: u64) -> bool {
        (self.p as u128) > k as u128 * (k as u128 + 1)
    }
}

/// Smallest prime strictly greater than `k(k+1)`.
pub fn smallest_admissible_prime(k: u64) -> Result<PrimeField> {
    if k == 0 {
        return Err(Error::ZeroBandWidth);
    }
    PrimeField::new(next_prime_above(k * (k + 1)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankMethod {
    ModP,
    FractionFree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankResult {
    pub rank: usize,
    pub nullity: usize,
    pub method: RankMethod,
}

/// Nonzero column range `[lo, hi)` of a row; `lo == hi` for a zero row.
#[derive(Clone, Copy, Debug)]
struct Extent {
    lo: usize,
    hi: usize,
}

impl Extent {
    fn contains(&self, c: usize) -> bool {
        self.lo <= c && c < self.hi
    }
}

fn extent_of<T>(row: &[T], from: usize, to: usize, is_zero: impl Fn(&T) -> bool) -> Extent {
    let lo = (from..to).find(|&j| !is_zero(&row[j])).unwrap_or(to);
    if lo == to {
        return Extent { lo: 0, hi: 0 };
    }
    let hi = (lo..to).rev().find(|&j| !is_zero(&row[j])).unwrap() + 1;
    Extent { lo, hi }
}

/// Nullity (right kernel dimension, `cols - rank`) over `GF(p)`.
pub fn nullity_mod_p(m: &IntegerMatrix, field: &PrimeField) -> RankResult {
    let p = field.p;
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<u64>> = m
        .entries()
        .chunks(cols.max(1))
        .take(rows)
        .map(|r| r.iter().map(|v| residue(v, p)).collect())
        .collect();
    let mut ext: Vec<Extent> = a
        .iter()
        .map(|r| extent_of(r, 0, cols, |&v| v == 0))
        .collect();
    let mut used = vec![false; rows];
    let mut rank = 0;

    for c in 0..cols {
        let Some(piv) = (0..rows).find(|&i| !used[i] && ext[i].contains(c) && a[i][c] != 0) else {
            continue;
        };
        used[piv] = true;
        rank += 1;
        let inv = inv_mod(a[piv][c], p);
        let prow = std::mem::take(&mut a[piv]);
        let pext = ext[piv];
        for i in 0..rows {
            if used[i] || !ext[i].contains(c) || a[i][c] == 0 {
                continue;
            }
            let factor = mul_mod(a[i][c], inv, p);
            let row = &mut a[i];
            for j in c..pext.hi {
                if prow[j] != 0 {
                    row[j] = sub_mod(row[j], mul_mod(factor, prow[j], p), p);
                }
            }
            let hi = ext[i].hi.max(pext.hi);
            ext[i] = extent_of(row, c, hi, |&v| v == 0);
        }
        a[piv] = prow;
    }
    RankResult {
        rank,
        nullity: cols - rank,
        method: RankMethod::ModP,
    }
}

/// Nullity over the rationals via integer-preserving elimination.
///
/// Each reduction replaces a row by `pivot * row - a * pivot_row` and then
/// divides out the row content, so entries stay integral and small.
pub fn nullity_fraction_free(m: &IntegerMatrix) -> RankResult {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigInt>> = m
        .entries()
        .chunks(cols.max(1))
        .take(rows)
        .map(<[BigInt]>::to_vec)
        .collect();
    let mut ext: Vec<Extent> = a
        .iter()
        .map(|r| extent_of(r, 0, cols, Zero::is_zero))
        .collect();
    let mut used = vec![false; rows];
    let mut rank = 0;

    for c in 0..cols {
        let Some(piv) = (0..rows).find(|&i| !used[i] && ext[i].contains(c) && !a[i][c].is_zero())
        else {
            continue;
        };
        used[piv] = true;
        rank += 1;
        let prow = std::mem::take(&mut a[piv]);
        let pext = ext[piv];
        let pv = prow[c].clone();
        for i in 0..rows {
            if used[i] || !ext[i].contains(c) || a[i][c].is_zero() {
                continue;
            }
            let factor = a[i][c].clone();
            let g = pv.gcd(&factor);
            let (pv_s, f_s) = (&pv / &g, &factor / &g);
            let hi = ext[i].hi.max(pext.hi);
            let row = &mut a[i];
            let mut content = BigInt::zero();
            for j in c..hi {
                let mut v = &row[j] * &pv_s;
                if j < pext.hi && !prow[j].is_zero() {
                    v -= &f_s * &prow[j];
                }
                if !v.is_zero() && !content.is_one() {
                    content = content.gcd(&v);
                }
                row[j] = v;
            }
            if content > BigInt::one() {
                for v in &mut row[c..hi] {
                    if !v.is_zero() {
                        *v /= &content;
                    }
                }
            }
            ext[i] = extent_of(row, c, hi, Zero::is_zero);
        }
        a[piv] = prow;
    }
    RankResult {
        rank,
        nullity: cols - rank,
        method: RankMethod::FractionFree,
    }
}

/// Bareiss fraction-free determinant of a square matrix.
pub fn determinant_fraction_free(m: &IntegerMatrix) -> BigInt {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.entries().chunks(n).map(<[BigInt]>::to_vec).collect();
    let mut sign = false;
    let mut prev = BigInt::one();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return BigInt::zero();
        };
        if piv != c {
            a.swap(piv, c);
            sign = !sign;
        }
        let (top, bottom) = a.split_at_mut(c + 1);
        let prow = &top[c];
        for row in bottom.iter_mut() {
            for j in c + 1..n {
                let v = &row[j] * &prow[c] - &row[c] * &prow[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = a[c][c].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}
