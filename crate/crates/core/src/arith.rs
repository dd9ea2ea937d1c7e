//! Small word-sized number theory used by the modular elimination paths.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};

/// Deterministic trial division.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d <= p / d {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Smallest prime strictly greater than `x`.
pub fn next_prime_above(x: u64) -> u64 {
    let mut c = x + 1;
    while !is_prime(c) {
        c += 1;
    }
    c
}

/// Largest prime strictly below `x`.
pub fn prev_prime_below(x: u64) -> Option<u64> {
    (2..x).rev().find(|&c| is_prime(c))
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse in the prime field; `a` must be nonzero mod `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Least nonnegative residue of a (possibly negative) big integer.
pub fn residue(n: &BigInt, m: u64) -> u64 {
    n.mod_floor(&BigInt::from(m))
        .to_u64()
        .expect("residue below a u64 modulus fits in u64")
}

pub fn residue_i64(n: i64, m: u64) -> u64 {
    (n as i128).rem_euclid(m as i128) as u64
}

/// Parses a decimal integer with an optional sign; surrounding whitespace and
/// `_` digit separators are accepted.
pub fn parse_decimal(s: &str) -> Result<BigInt> {
    let t: String = s.trim().chars().filter(|&c| c != '_').collect();
    let digits = t.strip_prefix(['+', '-']).unwrap_or(&t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::MalformedInteger(s.to_string()));
    }
    t.parse::<BigInt>()
        .map_err(|_| Error::MalformedInteger(s.to_string()))
}

/// Maps a residue mod `p` to the symmetric range (-p/2, p/2].
pub fn symmetric(r: &BigInt, p: &BigInt) -> BigInt {
    let r = r.mod_floor(p);
    if (&r << 1u32) > *p {
        r - p
    } else {
        r
    }
}

pub fn abs_bits(n: &BigInt) -> u64 {
    n.abs().bits()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trial_division_small_values() {
        let primes: Vec<u64> = (0..40).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(!is_prime(91));
        assert!(is_prime(7919));
    }

    #[test]
    fn next_prime_examples() {
        assert_eq!(next_prime_above(2), 3);
        assert_eq!(next_prime_above(42), 43);
        assert_eq!(next_prime_above(72), 73);
        assert_eq!(next_prime_above(13), 17);
    }

    #[test]
    fn inverse_round_trip() {
        let p = 1_000_000_007;
        for a in [1u64, 2, 3, 12345, p - 1] {
            assert_eq!(mul_mod(a, inv_mod(a, p), p), 1);
        }
    }

    #[test]
    fn residues_of_negative_numbers() {
        assert_eq!(residue(&BigInt::from(-1), 42), 41);
        assert_eq!(residue_i64(-43, 42), 41);
        assert_eq!(residue(&BigInt::from(84), 42), 0);
    }

    #[test]
    fn decimal_parsing() {
        assert_eq!(parse_decimal(" -17 ").unwrap(), BigInt::from(-17));
        assert_eq!(parse_decimal("1_000").unwrap(), BigInt::from(1000));
        assert!(parse_decimal("12a").is_err());
        assert!(parse_decimal("").is_err());
        assert!(parse_decimal("-").is_err());
    }

    #[test]
    fn symmetric_lift() {
        let p = BigInt::from(7);
        assert_eq!(symmetric(&BigInt::from(6), &p), BigInt::from(-1));
        assert_eq!(symmetric(&BigInt::from(3), &p), BigInt::from(3));
        assert_eq!(symmetric(&BigInt::from(4), &p), BigInt::from(-3));
    }
}
