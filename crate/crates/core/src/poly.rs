//! Exact sparse univariate polynomials.
//!
//! Coefficients are arbitrary-precision integers by default; the transition
//! polynomial uses rational coefficients through the same type.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Coefficient ring of a [`Polynomial`].
pub trait Coefficient: Clone + PartialEq + Zero + One + Signed + for<'a> AddAssign<&'a Self> + fmt::Debug {
    fn to_rational(&self) -> Rational;

    /// Writes the absolute value of a coefficient that precedes `x^k`.
    fn fmt_scalar(&self, f: &mut fmt::Formatter<'_>, bare: bool) -> fmt::Result;

    fn to_decimal(&self) -> String;
}

impl Coefficient for BigInt {
    fn to_rational(&self) -> Rational {
        Rational::from_integer(self.clone())
    }

    fn fmt_scalar(&self, f: &mut fmt::Formatter<'_>, _bare: bool) -> fmt::Result {
        write!(f, "{}", self.abs())
    }

    fn to_decimal(&self) -> String {
        self.to_string()
    }
}

impl Coefficient for Rational {
    fn to_rational(&self) -> Rational {
        self.clone()
    }

    fn fmt_scalar(&self, f: &mut fmt::Formatter<'_>, bare: bool) -> fmt::Result {
        let a = self.abs();
        if a.is_integer() || bare {
            write!(f, "{a}")
        } else {
            write!(f, "({a})")
        }
    }

    fn to_decimal(&self) -> String {
        self.to_string()
    }
}

/// A polynomial in `x`, stored as exponent → nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial<C = BigInt> {
    terms: BTreeMap<u32, C>,
}

pub type RationalPolynomial = Polynomial<Rational>;

impl<C: Coefficient> Polynomial<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0)
    }

    pub fn monomial(coeff: C, exp: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, &coeff);
        p
    }

    /// `x^exp` with coefficient one.
    pub fn x_pow(exp: u32) -> Self {
        Self::monomial(C::one(), exp)
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    /// Adds `coeff·x^exp` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, exp: u32, coeff: &C) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(C::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: u32) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &C)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, a)| (*e, a.clone() * c.clone())))
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: u32) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        // Horner over the sparse support, descending.
        let mut acc = Rational::zero();
        let mut prev: Option<u32> = None;
        for (e, c) in self.terms.iter().rev() {
            if let Some(p) = prev {
                acc *= pow(t, p - e);
            }
            acc += c.to_rational();
            prev = Some(*e);
        }
        if let Some(p) = prev {
            acc *= pow(t, p);
        }
        acc
    }

    /// True when the support is exactly `{1, 2, ..., deg}`.
    pub fn is_interpolating_min_degree_one(&self) -> Result<bool> {
        let (lo, hi) = match (self.min_degree(), self.degree()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(Error::ZeroPolynomial),
        };
        Ok(lo == 1 && self.terms.len() as u32 == hi - lo + 1)
    }

    /// Single-line JSON object from decimal exponent to decimal coefficient,
    /// in ascending exponent order.
    pub fn to_json(&self) -> String {
        let body: Vec<String> = self.terms.iter().map(|(e, c)| format!("\"{e}\":\"{}\"", c.to_decimal())).collect();
        format!("{{{}}}", body.join(","))
    }
}

impl Polynomial<BigInt> {
    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
        let obj = value.as_object().ok_or_else(|| Error::parse(1, "polynomial JSON must be an object"))?;
        let mut p = Self::zero();
        for (k, v) in obj {
            let exp: u32 = k.parse().map_err(|_| Error::parse(1, format!("bad exponent `{k}`")))?;
            let c: BigInt = v
                .as_str()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::parse(1, format!("bad coefficient for exponent {exp}")))?;
            p.add_term(exp, &c);
        }
        Ok(p)
    }

    pub fn to_rational(&self) -> RationalPolynomial {
        Polynomial::from_terms(self.terms.iter().map(|(e, c)| (*e, c.to_rational())))
    }

    /// Evaluation at an integer point.
    pub fn eval_int(&self, t: i64) -> BigInt {
        self.eval(&Rational::from_integer(BigInt::from(t))).to_integer()
    }
}

impl RationalPolynomial {
    /// Returns the integer polynomial when every coefficient is integral.
    pub fn to_integer(&self) -> Option<Polynomial<BigInt>> {
        let mut out = Polynomial::zero();
        for (e, c) in &self.terms {
            if !c.is_integer() {
                return None;
            }
            out.add_term(*e, &c.to_integer());
        }
        Some(out)
    }
}

fn pow(t: &Rational, k: u32) -> Rational {
    num_traits::pow(t.clone(), k as usize)
}

impl<C: Coefficient> Add for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coefficient> Add for Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(mut self, rhs: Polynomial<C>) -> Polynomial<C> {
        self += &rhs;
        self
    }
}

impl<C: Coefficient> AddAssign<&Polynomial<C>> for Polynomial<C> {
    fn add_assign(&mut self, rhs: &Polynomial<C>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

impl<C: Coefficient> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = Polynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, &(ca.clone() * cb.clone()));
            }
        }
        out
    }
}

impl<C: Coefficient> Mul for Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: Polynomial<C>) -> Polynomial<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> Neg for Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        Self { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<C: Coefficient> std::iter::Sum for Polynomial<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut acc = Self::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

/// Ascending exponents, e.g. `16x + 10x^2 + x^3`; the zero polynomial is `0`.
impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = c.abs().is_one();
            if *e == 0 {
                c.fmt_scalar(f, true)?;
                continue;
            }
            if !unit {
                c.fmt_scalar(f, false)?;
            }
            if *e == 1 {
                f.write_str("x")?;
            } else {
                write!(f, "x^{e}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
