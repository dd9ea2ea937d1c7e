//! Dense construction of the band matrices `A(n,k,x)` and `A(n,k) = A(n,k,0)`.
//!
//! `A(n,k,x)` is the `n × n` skew-symmetric Toeplitz matrix whose first `k`
//! superdiagonals are `1` and whose remaining superdiagonals are `-x`.
//! Public accessors are 1-based `(row, col)`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::IntegerPolynomial;

/// Largest dimension materialized densely by default.
pub const DEFAULT_MATERIALIZATION_CAP: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BandMatrixSpec {
    pub n: u64,
    pub k: u64,
}

impl BandMatrixSpec {
    pub fn new(n: u64, k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroBandWidth);
        }
        Ok(BandMatrixSpec { n, k })
    }

    /// Checks that the matrix may be materialized under `cap`.
    pub fn dimension(&self, cap: usize) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if self.n > cap as u64 {
            return Err(Error::DimensionCap { n: self.n, cap });
        }
        Ok(self.n as usize)
    }

    /// Value on diagonal offset `d = j - i` (0-based indices), at x = 0.
    fn band_value(&self, d: i64) -> i64 {
        let k = self.k as i64;
        if d > 0 && d <= k {
            1
        } else if d < 0 && -d <= k {
            -1
        } else {
            0
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntegerMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().map(BigInt::from).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// 1-based accessor.
    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        assert!(row >= 1 && row <= self.rows && col >= 1 && col <= self.cols);
        &self.entries[(row - 1) * self.cols + (col - 1)]
    }

    /// 1-based mutable accessor.
    pub fn set(&mut self, row: usize, col: usize, v: BigInt) {
        assert!(row >= 1 && row <= self.rows && col >= 1 && col <= self.cols);
        self.entries[(row - 1) * self.cols + (col - 1)] = v;
    }

    /// Row-major entries, 0-based.
    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.rows == self.cols
            && (1..=self.rows).all(|i| (i..=self.cols).all(|j| *self.get(i, j) == -self.get(j, i)))
    }
}

/// `A(n,k,x)` with polynomial entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    dimension: usize,
    entries: Vec<IntegerPolynomial>,
}

impl PolyMatrix {
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// 1-based accessor.
    pub fn entry(&self, row: usize, col: usize) -> &IntegerPolynomial {
        assert!(row >= 1 && row <= self.dimension && col >= 1 && col <= self.dimension);
        &self.entries[(row - 1) * self.dimension + (col - 1)]
    }

    /// Specializes every entry at `x`.
    pub fn eval(&self, x: &BigInt) -> IntegerMatrix {
        IntegerMatrix {
            rows: self.dimension,
            cols: self.dimension,
            entries: self.entries.iter().map(|p| p.eval(x)).collect(),
        }
    }

    pub fn is_skew_symmetric(&self) -> bool {
        let n = self.dimension;
        (1..=n).all(|i| (i..=n).all(|j| *self.entry(i, j) == -self.entry(j, i)))
    }
}

pub fn build_integer_matrix(spec: BandMatrixSpec) -> Result<IntegerMatrix> {
    build_integer_matrix_capped(spec, DEFAULT_MATERIALIZATION_CAP)
}

pub fn build_integer_matrix_capped(spec: BandMatrixSpec, cap: usize) -> Result<IntegerMatrix> {
    let n = spec.dimension(cap)?;
    let entries = (0..n)
        .flat_map(|i| (0..n).map(move |j| BigInt::from(spec.band_value(j as i64 - i as i64))))
        .collect();
    Ok(IntegerMatrix {
        rows: n,
        cols: n,
        entries,
    })
}

pub fn build_poly_matrix(spec: BandMatrixSpec) -> Result<PolyMatrix> {
    build_poly_matrix_capped(spec, DEFAULT_MATERIALIZATION_CAP)
}

pub fn build_poly_matrix_capped(spec: BandMatrixSpec, cap: usize) -> Result<PolyMatrix> {
    let n = spec.dimension(cap)?;
    let k = spec.k as i64;
    let one = IntegerPolynomial::constant(1);
    let minus_one = IntegerPolynomial::constant(-1);
    let minus_x = IntegerPolynomial::from_i64s(&[0, -1]);
    let x = IntegerPolynomial::x();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n as i64 {
        for j in 0..n as i64 {
            let d = j - i;
            entries.push(match d {
                0 => IntegerPolynomial::zero(),
                d if d > 0 && d <= k => one.clone(),
                d if d > 0 => minus_x.clone(),
                d if -d <= k => minus_one.clone(),
                _ => x.clone(),
            });
        }
    }
    Ok(PolyMatrix {
        dimension: n,
        entries,
    })
}

/// Entries of `A(n,k,x)` at an integer `x`, as machine words (0-based,
/// row-major). Used by the modular determinant path.
pub(crate) fn band_entries_at(n: usize, k: u64, x: i64) -> Vec<i64> {
    let k = k as i64;
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n as i64 {
        for j in 0..n as i64 {
            let d = j - i;
            out.push(match d {
                0 => 0,
                d if d > 0 && d <= k => 1,
                d if d > 0 => -x,
                d if -d <= k => -1,
                _ => x,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: u64, k: u64) -> BandMatrixSpec {
        BandMatrixSpec::new(n, k).unwrap()
    }

    #[test]
    fn smallest_nonsingular_case() {
        let m = build_integer_matrix(spec(2, 1)).unwrap();
        assert_eq!(m, IntegerMatrix::from_rows(vec![vec![0, 1], vec![-1, 0]]));
    }

    #[test]
    fn six_by_two_matches_display_at_zero() {
        let m = build_integer_matrix(spec(6, 2)).unwrap();
        let expected = IntegerMatrix::from_rows(vec![
            vec![0, 1, 1, 0, 0, 0],
            vec![-1, 0, 1, 1, 0, 0],
            vec![-1, -1, 0, 1, 1, 0],
            vec![0, -1, -1, 0, 1, 1],
            vec![0, 0, -1, -1, 0, 1],
            vec![0, 0, 0, -1, -1, 0],
        ]);
        assert_eq!(m, expected);
    }

    #[test]
    fn full_band() {
        let m = build_integer_matrix(spec(5, 4)).unwrap();
        for i in 1..=5 {
            for j in 1..=5 {
                let want = (j as i64 - i as i64).signum();
                assert_eq!(*m.get(i, j), BigInt::from(want));
            }
        }
    }

    #[test]
    fn poly_entries() {
        let p = build_poly_matrix(spec(6, 2)).unwrap();
        assert_eq!(*p.entry(1, 4), IntegerPolynomial::from_i64s(&[0, -1]));
        assert_eq!(*p.entry(4, 6), IntegerPolynomial::constant(1));
        assert_eq!(*p.entry(4, 1), IntegerPolynomial::x());
        let full = build_poly_matrix(spec(3, 2)).unwrap();
        for i in 1..=3 {
            for j in 1..=3 {
                assert!(full.entry(i, j).degree().unwrap_or(0) == 0);
            }
        }
    }

    #[test]
    fn poly_at_zero_is_integer_matrix() {
        for (n, k) in [(1, 1), (6, 2), (9, 3), (12, 11), (7, 20)] {
            let p = build_poly_matrix(spec(n, k)).unwrap();
            let m = build_integer_matrix(spec(n, k)).unwrap();
            assert_eq!(p.eval(&BigInt::zero()), m);
            assert!(p.is_skew_symmetric());
            assert!(m.is_skew_symmetric());
        }
    }

    #[test]
    fn toeplitz_structure() {
        let m = build_poly_matrix(spec(9, 3)).unwrap();
        for i in 1..9 {
            for j in 1..9 {
                assert_eq!(m.entry(i, j), m.entry(i + 1, j + 1));
            }
        }
    }

    #[test]
    fn word_entries_agree_with_poly_matrix() {
        let p = build_poly_matrix(spec(7, 2)).unwrap();
        for x in [-3i64, 0, 5] {
            let words = band_entries_at(7, 2, x);
            let m = p.eval(&BigInt::from(x));
            assert!(m
                .entries()
                .iter()
                .zip(&words)
                .all(|(a, &b)| *a == BigInt::from(b)));
        }
    }

    #[test]
    fn cap_and_empty() {
        assert!(matches!(
            build_integer_matrix_capped(spec(10, 2), 8),
            Err(Error::DimensionCap { n: 10, cap: 8 })
        ));
        assert!(matches!(
            build_integer_matrix(spec(0, 2)),
            Err(Error::EmptyMatrix)
        ));
        assert!(matches!(
            BandMatrixSpec::new(3, 0),
            Err(Error::ZeroBandWidth)
        ));
    }
}
