//! The determinant polynomial `D(n,k,x) = det A(n,k,x)` and the family
//! `F_a(x)` with `F_0 = 1`, `F_1 = x`, `F_{a+2} = (x+1) F_{a+1} - F_a`.
//!
//! Entries of `A(n,k,x)` have degree at most one, so `deg D <= n`. Two
//! independent routes are implemented:
//!
//! * [`determinant_poly`]: Bareiss determinants over the integers at
//!   `x = 0, 1, ..., n`, then interpolation over the rationals with an
//!   integrality check on every coefficient.
//! * [`determinant_poly_modular`]: `det(A0 + xB)` as a pencil, one
//!   characteristic polynomial per word-sized prime, then Chinese
//!   remaindering up to a Hadamard bound on the coefficients. Roughly `n`
//!   times less work, which is what makes the `n <= 150` sweep practical.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{inv_mod, prev_prime_below, symmetric};
use crate::band::{
    band_entries_at, build_poly_matrix_capped, BandMatrixSpec, DEFAULT_MATERIALIZATION_CAP,
};
use crate::error::{Error, Result};
use crate::graph::{cycle_count, GraphSpec};
use crate::poly::IntegerPolynomial;
use crate::predictions::even_dimension_prediction;
use crate::rank::determinant_fraction_free;

/// `F_a(x)`.
pub fn f_poly(a: u64) -> IntegerPolynomial {
    let x_plus_1 = IntegerPolynomial::from_i64s(&[1, 1]);
    let (mut prev, mut cur) = (IntegerPolynomial::constant(1), IntegerPolynomial::x());
    if a == 0 {
        return prev;
    }
    for _ in 1..a {
        let next = &(&x_plus_1 * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `F_a'(0)`, read off the linear coefficient.
pub fn f_derivative_at_zero(a: u64) -> BigInt {
    f_poly(a).coeff(1)
}

/// Order of the zero at `x = 0`.
pub fn vanishing_multiplicity(p: &IntegerPolynomial) -> Result<usize> {
    p.lowest_degree().ok_or(Error::ZeroPolynomial)
}

/// Integer coefficients from the values `f(0), ..., f(n)` of a polynomial of
/// degree at most `n`, via forward differences and the falling-factorial
/// basis. Everything is scaled by `n!` so the arithmetic stays integral; the
/// final division by `n!` must be exact.
fn interpolate_integer_nodes(values: &[BigInt]) -> Result<IntegerPolynomial> {
    let n = values.len() - 1;
    let mut diffs = values.to_vec();
    let mut leading = Vec::with_capacity(n + 1);
    for i in 0..=n {
        leading.push(diffs[0].clone());
        for t in 0..n - i {
            diffs[t] = &diffs[t + 1] - &diffs[t];
        }
    }
    // falling factorial x(x-1)...(x-i+1), accumulated term by term
    let mut falling = IntegerPolynomial::constant(1);
    let mut scaled = IntegerPolynomial::zero();
    let mut n_fact_over_i_fact: Vec<BigInt> = vec![BigInt::one(); n + 1];
    for i in (0..n).rev() {
        n_fact_over_i_fact[i] = &n_fact_over_i_fact[i + 1] * BigInt::from(i + 1);
    }
    for (i, delta) in leading.iter().enumerate() {
        if !delta.is_zero() {
            let coef = IntegerPolynomial::constant(delta * &n_fact_over_i_fact[i]);
            scaled = &scaled + &(&coef * &falling);
        }
        falling = &falling * &IntegerPolynomial::from_i64s(&[-(i as i64), 1]);
    }
    let n_fact = &n_fact_over_i_fact[0];
    let mut coeffs = Vec::with_capacity(n + 1);
    for (d, c) in scaled.coeffs().iter().enumerate() {
        let (q, r) = c.div_rem(n_fact);
        if !r.is_zero() {
            return Err(Error::NonIntegralCoefficient { degree: d });
        }
        coeffs.push(q);
    }
    Ok(IntegerPolynomial::new(coeffs))
}

/// `D(n,k,x)` from Bareiss determinants at `x = 0..=n` and exact rational
/// interpolation.
pub fn determinant_poly(spec: BandMatrixSpec) -> Result<IntegerPolynomial> {
    let pm = build_poly_matrix_capped(spec, DEFAULT_MATERIALIZATION_CAP)?;
    let n = pm.dimension();
    let values: Vec<BigInt> = (0..=n)
        .map(|x| determinant_fraction_free(&pm.eval(&BigInt::from(x))))
        .collect();
    interpolate_integer_nodes(&values)
}

/// Bound on `log2 |c_d|` for every coefficient of `D(n,k,x)`: on the unit
/// circle each row has at most `n-1` entries of modulus 1, so
/// `|D| <= (n-1)^(n/2)` there, and that bounds every coefficient.
fn coefficient_bits(n: usize) -> u64 {
    if n <= 1 {
        return 1;
    }
    ((n as f64 / 2.0) * ((n - 1) as f64).log2()).ceil() as u64 + 1
}

/// Primes below 2^31, largest first, with product above `2^(bits+1)`.
fn modular_primes(bits: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut have = 0.0f64;
    let mut next = 1u64 << 31;
    while have <= (bits + 1) as f64 {
        let p = prev_prime_below(next).expect("enough primes below 2^31");
        have += (p as f64).log2();
        primes.push(p);
        next = p;
    }
    primes
}

// All routines below take p < 2^31, so a product of two residues fits in a
// u64 and `a * b % p` is exact.

/// Solves `M X = B` in place for square `M`, `B` (row-major, `n x n`).
/// Returns `det M`, or `None` when `M` is singular.
fn solve_mod_p(mut m: Vec<u64>, b: &mut [u64], n: usize, p: u64) -> Option<u64> {
    let mut det = 1u64;
    for c in 0..n {
        let piv = (c..n).find(|&i| m[i * n + c] != 0)?;
        if piv != c {
            for j in 0..n {
                m.swap(piv * n + j, c * n + j);
                b.swap(piv * n + j, c * n + j);
            }
            det = (p - det) % p;
        }
        let pv = m[c * n + c];
        det = det * pv % p;
        let inv = inv_mod(pv, p);
        for j in 0..n {
            m[c * n + j] = m[c * n + j] * inv % p;
            b[c * n + j] = b[c * n + j] * inv % p;
        }
        for i in 0..n {
            let lead = m[i * n + c];
            if i == c || lead == 0 {
                continue;
            }
            let f = p - lead;
            for j in c..n {
                m[i * n + j] = (m[i * n + j] + f * m[c * n + j]) % p;
            }
            for j in 0..n {
                b[i * n + j] = (b[i * n + j] + f * b[c * n + j]) % p;
            }
        }
    }
    Some(det)
}

/// Characteristic polynomial `det(lambda I - H)` mod `p`, low degree first,
/// via reduction to upper Hessenberg form.
fn charpoly_mod_p(mut h: Vec<u64>, n: usize, p: u64) -> Vec<u64> {
    for m in 1..n {
        let Some(piv) = (m..n).find(|&i| h[i * n + m - 1] != 0) else {
            continue;
        };
        if piv != m {
            for j in 0..n {
                h.swap(piv * n + j, m * n + j);
            }
            for i in 0..n {
                h.swap(i * n + piv, i * n + m);
            }
        }
        let inv = inv_mod(h[m * n + m - 1], p);
        for i in m + 1..n {
            let u = h[i * n + m - 1] * inv % p;
            if u == 0 {
                continue;
            }
            for j in 0..n {
                h[i * n + j] = (h[i * n + j] + (p - u) * h[m * n + j]) % p;
            }
            for r in 0..n {
                h[r * n + m] = (h[r * n + m] + u * h[r * n + i]) % p;
            }
        }
    }
    // chi_0 = 1, chi_m = (x - h_mm) chi_{m-1} - sum_i h_im * prod(subdiag) * chi_{i-1}
    let mut chis: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        let prev = &chis[m];
        let mut next = vec![0u64; m + 2];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = (next[d] + (p - h[m * n + m]) * c) % p;
        }
        let mut sub = 1u64;
        for i in (0..m).rev() {
            sub = sub * h[(i + 1) * n + i] % p;
            if sub == 0 {
                break;
            }
            let f = p - h[i * n + m] * sub % p;
            for (d, &c) in chis[i].iter().enumerate() {
                next[d] = (next[d] + f * c) % p;
            }
        }
        chis.push(next);
    }
    chis.pop().expect("n + 1 entries")
}

/// Coefficients of `det(A + xB)` mod `p`.
///
/// For a shift `s` with `M = A + sB` invertible and `K = M^-1 B`,
/// `det(A + xB) = det M * det(I + tK)` with `t = x - s`, and the second
/// factor is the reversed characteristic polynomial of `-K`. If no `s` in
/// `0..=n` works, the polynomial has more roots than its degree and is zero.
fn pencil_det_mod_p(a: &[u64], b: &[u64], n: usize, p: u64) -> Vec<u64> {
    for s in 0..=n as u64 {
        let m: Vec<u64> = a.iter().zip(b).map(|(&x, &y)| (x + s * y) % p).collect();
        let mut k = b.to_vec();
        let Some(det_m) = solve_mod_p(m, &mut k, n, p) else {
            continue;
        };
        let chi = charpoly_mod_p(k, n, p);
        // det(I + tK) = sum_i (-1)^i chi_{n-i} t^i
        let q: Vec<u64> = (0..=n)
            .map(|i| {
                let c = chi[n - i] * det_m % p;
                if i % 2 == 0 {
                    c
                } else {
                    (p - c) % p
                }
            })
            .collect();
        // Taylor shift: coefficients of q(x - s)
        let mut acc = vec![0u64; n + 1];
        let neg_s = (p - s % p) % p;
        for &c in q.iter().rev() {
            for d in (1..=n).rev() {
                acc[d] = (acc[d - 1] + acc[d] * neg_s) % p;
            }
            acc[0] = (acc[0] * neg_s + c) % p;
        }
        return acc;
    }
    vec![0; n + 1]
}

/// `D(n,k,x)` by multi-modular pencil determinants and Chinese remaindering.
pub fn determinant_poly_modular(spec: BandMatrixSpec) -> Result<IntegerPolynomial> {
    let n = spec.dimension(DEFAULT_MATERIALIZATION_CAP)?;
    let primes = modular_primes(coefficient_bits(n));
    // A(n,k,x) = A0 + x B
    let a0 = band_entries_at(n, spec.k, 0);
    let b: Vec<i64> = band_entries_at(n, spec.k, 1)
        .iter()
        .zip(&a0)
        .map(|(x, y)| x - y)
        .collect();
    let reduce = |v: &[i64], p: u64| -> Vec<u64> {
        v.iter().map(|&e| e.rem_euclid(p as i64) as u64).collect()
    };
    let mut modulus = BigInt::one();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for &p in &primes {
        let residues = pencil_det_mod_p(&reduce(&a0, p), &reduce(&b, p), n, p);
        let pb = BigInt::from(p);
        // c + modulus * ((r - c) * modulus^-1 mod p)
        let inv = inv_mod((&modulus % &pb).try_into().expect("residue fits"), p);
        for (c, &r) in coeffs.iter_mut().zip(&residues) {
            let c_mod: u64 = (*c).mod_floor(&pb).try_into().expect("residue fits");
            let t = (r + p - c_mod) % p * inv % p;
            *c += &modulus * BigInt::from(t);
        }
        modulus *= pb;
    }
    Ok(IntegerPolynomial::new(
        coeffs.iter().map(|c| symmetric(c, &modulus)).collect(),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureVerdict {
    pub n: u64,
    pub k: u64,
    pub multiplicity: u64,
    pub nullity: u64,
    pub agrees: bool,
}

/// How `D(n,k,x)` is computed. Both are exact; `Modular` is several times
/// faster for large `n`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DetRoute {
    #[default]
    Exact,
    Modular,
}

pub fn determinant_poly_via(spec: BandMatrixSpec, route: DetRoute) -> Result<IntegerPolynomial> {
    match route {
        DetRoute::Exact => determinant_poly(spec),
        DetRoute::Modular => determinant_poly_modular(spec),
    }
}

/// Compares the order of vanishing of `D(n,k,x)` at 0 with `N(n,k)`.
pub fn check_conjecture(n: u64, k: u64) -> Result<ConjectureVerdict> {
    check_conjecture_via(n, k, DetRoute::Exact)
}

pub fn check_conjecture_via(n: u64, k: u64, route: DetRoute) -> Result<ConjectureVerdict> {
    if !n.is_multiple_of(2) {
        return Err(Error::OutOfRange(format!("n = {n} must be even")));
    }
    if k == 0 || k >= n {
        return Err(Error::OutOfRange(format!(
            "need n > k >= 1, got n = {n}, k = {k}"
        )));
    }
    let d = determinant_poly_via(BandMatrixSpec::new(n, k)?, route)?;
    let multiplicity = vanishing_multiplicity(&d)? as u64;
    let nullity = cycle_count(&GraphSpec::from_i64(n as i64, k)?);
    Ok(ConjectureVerdict {
        n,
        k,
        multiplicity,
        nullity,
        agrees: multiplicity == nullity,
    })
}

fn check_regime(nu: u64, k: u64) -> Result<()> {
    if 2 * nu > k && k + 1 >= nu && nu >= 2 {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!(
            "need 2nu-1 >= k >= nu-1 >= 1, got nu = {nu}, k = {k}"
        )))
    }
}

/// Whether `D(2nu, k, x) = F_{2nu-k-1}(x)^2` holds coefficient-wise.
pub fn check_square_identity(nu: u64, k: u64) -> Result<bool> {
    check_regime(nu, k)?;
    let d = determinant_poly(BandMatrixSpec::new(2 * nu, k)?)?;
    Ok(d == f_poly(2 * nu - k - 1).square())
}

/// `N(2nu, k)`: 2 if `k = 2nu + 1 (mod 3)`, else 0.
pub fn even_dimension_nullity(nu: u64, k: u64) -> Result<u64> {
    check_regime(nu, k)?;
    Ok(even_dimension_prediction(nu, k).expect("regime checked"))
}
