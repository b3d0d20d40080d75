//! Dense univariate polynomials in `x` with integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{split_coefficient, split_terms};
use crate::error::{Error, Result};

/// Polynomial `sum coeffs[i] * x^i`, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UniPolynomial {
    coeffs: Vec<BigInt>,
}

impl UniPolynomial {
    /// Builds from coefficients, lowest degree first.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    /// Builds from small integer coefficients, lowest degree first.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant 1.
    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `(x - 1)^k`.
    pub fn x_minus_one_pow(k: usize) -> Self {
        let mut p = Self::one();
        let base = Self::from_i64s(&[-1, 1]);
        for _ in 0..k {
            p = &p * &base;
        }
        p
    }

    /// Coefficients, lowest degree first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Keeps the terms of degree at most `m`.
    pub fn truncate(&self, m: usize) -> Self {
        Self::new(self.coeffs.iter().take(m + 1).cloned().collect())
    }

    /// `x^n f(1/x)`.
    pub fn reverse(&self, n: usize) -> Result<Self> {
        match self.degree() {
            Some(d) if d > n => Err(Error::DegreeTooHigh { degree: d, bound: n }),
            _ => Ok(Self::new((0..=n).map(|i| self.coeff(n - i)).collect())),
        }
    }

    /// True iff `x^n f(1/x) = f`.
    pub fn is_palindromic(&self, n: usize) -> bool {
        self.reverse(n).is_ok_and(|r| r == *self)
    }

    /// True iff every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Add for &UniPolynomial {
    type Output = UniPolynomial;
    fn add(self, rhs: Self) -> UniPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPolynomial {
    type Output = UniPolynomial;
    fn sub(self, rhs: Self) -> UniPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPolynomial {
    type Output = UniPolynomial;
    fn mul(self, rhs: Self) -> UniPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return UniPolynomial::zero();
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
        UniPolynomial::new(out)
    }
}

impl Neg for &UniPolynomial {
    type Output = UniPolynomial;
    fn neg(self) -> UniPolynomial {
        UniPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for UniPolynomial {
    type Output = UniPolynomial;
    fn add(self, rhs: Self) -> UniPolynomial {
        &self + &rhs
    }
}

impl Sub for UniPolynomial {
    type Output = UniPolynomial;
    fn sub(self, rhs: Self) -> UniPolynomial {
        &self - &rhs
    }
}

impl Mul for UniPolynomial {
    type Output = UniPolynomial;
    fn mul(self, rhs: Self) -> UniPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for UniPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let power = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{power}")?;
            } else {
                write!(f, "{mag}*{power}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for UniPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "0" {
            return Ok(Self::zero());
        }
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (negative, term) in split_terms(s)? {
            let (k, rest) = split_coefficient(&term)?;
            let power = match rest.as_str() {
                "1" => 0,
                "x" => 1,
                other => other
                    .strip_prefix("x^")
                    .and_then(|e| e.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("bad term `{term}`")))?,
            };
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigInt::zero());
            }
            coeffs[power] += if negative { -k } else { k };
        }
        Ok(Self::new(coeffs))
    }
}
