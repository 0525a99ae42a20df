//! Exact sparse bivariate polynomials in the formal variables `t` and `u`,
//! with arbitrary-precision integer coefficients.
//!
//! Rational forms like `t^d P(1/t, u/t)` are realized as exponent reversals
//! against an explicitly stated degree, never as division.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Sparse polynomial: map from `(deg_t, deg_u)` to a nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        BivariatePoly::default()
    }

    pub fn one() -> Self {
        BivariatePoly::term(BigInt::one(), 0, 0)
    }

    pub fn term(coeff: BigInt, deg_t: u32, deg_u: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((deg_t, deg_u), coeff);
        }
        BivariatePoly { terms }
    }

    /// The monomial `t^i u^j`.
    pub fn monomial(deg_t: u32, deg_u: u32) -> Self {
        Self::term(BigInt::one(), deg_t, deg_u)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, deg_t: u32, deg_u: u32) -> BigInt {
        self.terms.get(&(deg_t, deg_u)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending `(deg_t, deg_u)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn deg_t(&self) -> u32 {
        self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn deg_u(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, coeff: &BigInt, deg_t: u32, deg_u: u32) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((deg_t, deg_u)).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(deg_t, deg_u));
        }
    }

    /// Multiplies by the monomial `c t^i u^j`.
    pub fn mul_term(&self, coeff: &BigInt, deg_t: u32, deg_u: u32) -> Self {
        let mut out = BivariatePoly::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(&(c * coeff), i + deg_t, j + deg_u);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = BivariatePoly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Substitutes `u := t`, collapsing onto the diagonal.
    pub fn substitute_u_for_t(&self) -> Self {
        let mut out = BivariatePoly::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(c, i + j, 0);
        }
        out
    }

    /// Substitutes `u := 1`.
    pub fn substitute_u_one(&self) -> Self {
        let mut out = BivariatePoly::zero();
        for (&(i, _), c) in &self.terms {
            out.add_term(c, i, 0);
        }
        out
    }

    /// Substitutes `t := 1`.
    pub fn substitute_t_one(&self) -> Self {
        let mut out = BivariatePoly::zero();
        for (&(_, j), c) in &self.terms {
            out.add_term(c, 0, j);
        }
        out
    }

    /// The coefficient map of `t^degree P(1/t, u)`: sends `t^i u^j` to
    /// `t^{degree-i} u^j`. Fails if any `deg_t` exceeds `degree`.
    pub fn reversed_in_t(&self, degree: u32) -> Result<Self> {
        let mut out = BivariatePoly::zero();
        for (&(i, j), c) in &self.terms {
            if i > degree {
                return Err(Error::DegreeTooSmall { degree, actual: i });
            }
            out.add_term(c, degree - i, j);
        }
        Ok(out)
    }

    /// The coefficient map of `t^degree P(1/t, u/t)`: sends `t^i u^j` to
    /// `t^{degree-i-j} u^j`. Fails if any `deg_t + deg_u` exceeds `degree`.
    pub fn reversed_in_t_u(&self, degree: u32) -> Result<Self> {
        let mut out = BivariatePoly::zero();
        for (&(i, j), c) in &self.terms {
            if i + j > degree {
                return Err(Error::DegreeTooSmall { degree, actual: i + j });
            }
            out.add_term(c, degree - i - j, j);
        }
        Ok(out)
    }

    /// True if the polynomial equals its own reversal in `t` against the
    /// stated degree window.
    pub fn is_palindromic_in_t(&self, degree: u32) -> bool {
        self.reversed_in_t(degree).map(|r| r == *self).unwrap_or(false)
    }

    pub fn evaluate(&self, t: &BigInt, u: &BigInt) -> BigInt {
        let mut total = BigInt::zero();
        for (&(i, j), c) in &self.terms {
            total += c * t.pow(i) * u.pow(j);
        }
        total
    }

    /// Sum of all coefficients, i.e. the evaluation at `t = u = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// First position where two polynomials differ, with both coefficients.
    pub fn first_difference(&self, other: &Self) -> Option<((u32, u32), BigInt, BigInt)> {
        let keys: std::collections::BTreeSet<(u32, u32)> =
            self.terms.keys().chain(other.terms.keys()).copied().collect();
        for key in keys {
            let a = self.coefficient(key.0, key.1);
            let b = other.coefficient(key.0, key.1);
            if a != b {
                return Some((key, a, b));
            }
        }
        None
    }
}

impl Add for &BivariatePoly {
    type Output = BivariatePoly;

    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(c, i, j);
        }
        out
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;

    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(&(c1 * c2), i1 + i2, j1 + j2);
            }
        }
        out
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&(i, j), c) in &self.terms {
            let negative = c.sign() == num_bigint::Sign::Minus;
            let mag = c.magnitude();
            if first {
                if negative {
                    f.write_str("-")?;
                }
                first = false;
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let has_vars = i > 0 || j > 0;
            if !has_vars || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{i}")?,
            }
            match j {
                0 => {}
                1 => f.write_str("u")?,
                _ => write!(f, "u^{j}")?,
            }
        }
        Ok(())
    }
}
