use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense polynomial with arbitrary-precision integer coefficients.
///
/// `coeffs[d]` is the coefficient of `x^d`; trailing zeros are always trimmed,
/// so the zero polynomial has no coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntegerPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntegerPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    /// Index of the first nonzero coefficient (order of vanishing at 0).
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(d, c)| c * BigInt::from(d))
                .collect(),
        )
    }

    pub fn square(&self) -> Self {
        self * self
    }
}

impl Add for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn add(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntegerPolynomial::new((0..len).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Sub for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn sub(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntegerPolynomial::new((0..len).map(|d| self.coeff(d) - rhs.coeff(d)).collect())
    }
}

impl Mul for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn mul(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntegerPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntegerPolynomial::new(out)
    }
}

impl Neg for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn neg(self) -> IntegerPolynomial {
        IntegerPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$f:ident),*) => {$(
        impl $tr for IntegerPolynomial {
            type Output = IntegerPolynomial;
            fn $f(self, rhs: IntegerPolynomial) -> IntegerPolynomial {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn neg(self) -> IntegerPolynomial {
        -&self
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mag = c.abs();
            if d == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match d {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_trailing_zeros() {
        let p = IntegerPolynomial::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(IntegerPolynomial::from_i64s(&[0, 0]).is_zero());
        assert_eq!(IntegerPolynomial::zero().degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = IntegerPolynomial::from_i64s(&[-1, 1]); // x - 1
        let b = IntegerPolynomial::from_i64s(&[1, 1]); // x + 1
        assert_eq!(&a * &b, IntegerPolynomial::from_i64s(&[-1, 0, 1]));
        assert_eq!(&a + &b, IntegerPolynomial::from_i64s(&[0, 2]));
        assert_eq!(&a - &a, IntegerPolynomial::zero());
        assert_eq!(-a.clone(), IntegerPolynomial::from_i64s(&[1, -1]));
    }

    #[test]
    fn evaluation_and_derivative() {
        let p = IntegerPolynomial::from_i64s(&[-1, -1, 2, 1]);
        assert_eq!(p.eval_i64(2), BigInt::from(13));
        assert_eq!(p.derivative(), IntegerPolynomial::from_i64s(&[-1, 4, 3]));
        assert_eq!(p.lowest_degree(), Some(0));
        assert_eq!(
            IntegerPolynomial::from_i64s(&[0, 1, 1]).lowest_degree(),
            Some(1)
        );
    }

    #[test]
    fn display() {
        let p = IntegerPolynomial::from_i64s(&[-1, -1, 2, 1]);
        assert_eq!(p.to_string(), "x^3 + 2x^2 - x - 1");
        assert_eq!(IntegerPolynomial::from_i64s(&[0, -1]).to_string(), "-x");
        assert_eq!(IntegerPolynomial::zero().to_string(), "0");
    }
}
