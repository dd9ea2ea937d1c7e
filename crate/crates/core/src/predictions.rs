//! Nullities known in closed form when `n` is a simple function of `k`.
//!
//! Every prediction carries a short label naming the family it came from so
//! that a failing check can be traced back to its formula.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `N(2k - theta, k) = 1`, odd `theta` in `[-1, k-1]`.
    TwoKMinusOdd,
    /// `N(2k - eps, k) = 2` or `0`, even `eps` in `[-2, k-1]`.
    TwoKMinusEven,
    /// `N(2k+3, k) = 3` if `3 | k` else `1`.
    TwoKPlus3,
    /// `N(2k+4, k) = 2` if `3 | k` else `0`.
    TwoKPlus4,
    /// `N(2k+5, k) = 1`.
    TwoKPlus5,
    /// `N(2k+6, k) = 2` if `k = 1 mod 3` else `0`, for `k > 2`.
    TwoKPlus6,
    /// `N(tk +- i, k) = t - i` when `(t+1) | (k+1)`.
    TkPlusMinusI,
    /// `N(ck + c - k, k) = gcd(c, k)` for `1 < c < k`.
    GcdLine,
    /// `N(3k, k)` by `k mod 4`.
    ThreeK,
    /// `N((k+1+a-b)(k-a)/b, k) = (k-a)/b` when `k = a mod b`.
    Quadratic,
    /// `N(2 nu, k) = 2` iff `k = 2 nu + 1 mod 3`, for `2nu-1 >= k >= nu-1 >= 1`.
    EvenDimension,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub n: i64,
    pub k: u64,
    pub nullity: u64,
    pub family: Family,
}

/// Value of the even-dimension formula, if its hypotheses hold.
pub fn even_dimension_prediction(nu: u64, k: u64) -> Option<u64> {
    if !(2 * nu > k && k + 1 >= nu && nu >= 2) {
        return None;
    }
    Some(if k % 3 == (2 * nu + 1) % 3 { 2 } else { 0 })
}

pub fn special_case_predictions(k: u64) -> Vec<Prediction> {
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    let ki = k as i64;
    let mut push = |n: i64, nullity: u64, family: Family| {
        out.push(Prediction {
            n,
            k,
            nullity,
            family,
        })
    };

    for theta in (-1..=ki - 1).filter(|t| t.rem_euclid(2) == 1) {
        push(2 * ki - theta, 1, Family::TwoKMinusOdd);
    }
    for eps in (-2..=ki - 1).filter(|e| e.rem_euclid(2) == 0) {
        let v = if eps.rem_euclid(3) == (ki + 1) % 3 {
            2
        } else {
            0
        };
        push(2 * ki - eps, v, Family::TwoKMinusEven);
    }

    let three = k.is_multiple_of(3);
    push(2 * ki + 3, if three { 3 } else { 1 }, Family::TwoKPlus3);
    push(2 * ki + 4, if three { 2 } else { 0 }, Family::TwoKPlus4);
    push(2 * ki + 5, 1, Family::TwoKPlus5);
    if k > 2 {
        push(
            2 * ki + 6,
            if k % 3 == 1 { 2 } else { 0 },
            Family::TwoKPlus6,
        );
    }

    if k >= 2 {
        for t in (2..=k).filter(|t| (k + 1).is_multiple_of(t + 1)) {
            for i in 0..=t {
                let (ti, ii) = (t as i64, i as i64);
                push(ti * ki + ii, t - i, Family::TkPlusMinusI);
                push(ti * ki - ii, t - i, Family::TkPlusMinusI);
            }
        }
    }

    for c in 2..k {
        let ci = c as i64;
        push(ci * ki + ci - ki, c.gcd(&k), Family::GcdLine);
    }

    let three_k = match k % 4 {
        0 | 2 => 0,
        1 => 1,
        _ => 3,
    };
    push(3 * ki, three_k, Family::ThreeK);

    for b in 1..=k {
        let a = k % b;
        let mut residues = vec![a];
        if a == 0 {
            residues.push(b);
        }
        for a in residues {
            let (ai, bi) = (a as i64, b as i64);
            let n = (ki + 1 + ai - bi) * (ki - ai) / bi;
            push(n, (k - a) / b, Family::Quadratic);
        }
    }

    for nu in 2..=k + 1 {
        if let Some(v) = even_dimension_prediction(nu, k) {
            push(2 * nu as i64, v, Family::EvenDimension);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has(k: u64, n: i64, v: u64) -> bool {
        special_case_predictions(k)
            .iter()
            .any(|p| p.n == n && p.nullity == v)
    }

    #[test]
    fn examples() {
        assert!(has(6, 15, 3));
        assert!(has(6, 18, 0));
        assert!(has(8, 10, 2));
    }

    #[test]
    fn even_dimension_examples() {
        assert_eq!(even_dimension_prediction(8, 8), Some(2));
        assert_eq!(even_dimension_prediction(3, 2), Some(0));
        assert_eq!(even_dimension_prediction(3, 4), Some(2));
        assert_eq!(even_dimension_prediction(3, 6), None);
        assert_eq!(even_dimension_prediction(1, 1), None);
        assert_eq!(even_dimension_prediction(5, 3), None);
    }

    #[test]
    fn guards_skip_inapplicable_families() {
        let p = special_case_predictions(2);
        assert!(!p.iter().any(|p| p.family == Family::TwoKPlus6));
        assert!(!p.iter().any(|p| p.family == Family::GcdLine));
        assert!(special_case_predictions(0).is_empty());
    }
}
