//! Laurent polynomials in the grading variable `x` with exact rational
//! coefficients.
//!
//! An [`XPoly`] is the coefficient type of [`crate::QSeries`]: each power of
//! `q` carries a finitely supported Laurent polynomial in `x`. The variable
//! `x` records the residue statistic `omega`, so exponents may be negative.
//! No zero coefficients are ever stored.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::num::{rat, Rational};

/// Finitely supported Laurent polynomial in `x` over the rationals.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct XPoly {
    terms: BTreeMap<i64, Rational>,
}

impl XPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        XPoly {
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        XPoly::constant(rat(1))
    }

    /// A constant polynomial.
    pub fn constant(c: Rational) -> Self {
        XPoly::monomial(0, c)
    }

    /// The single term `c * x^exp`. Zero coefficients yield the zero polynomial.
    pub fn monomial(exp: i64, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        XPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `x^exp` (zero if absent).
    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterate `(exponent, coefficient)` in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Lowest and highest exponents of the support, if nonzero.
    pub fn support_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().next()?;
        let hi = self.terms.keys().next_back()?;
        Some((*lo, *hi))
    }

    /// True if the polynomial is a single monomial.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn add_assign(&mut self, other: &XPoly) {
        for (&e, c) in &other.terms {
            self.add_term(e, c.clone());
        }
    }

    /// Add `c * x^exp` in place.
    pub fn add_term(&mut self, exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    /// Accumulate `a * b` into `self`.
    pub fn add_mul_assign(&mut self, a: &XPoly, b: &XPoly) {
        for (&ea, ca) in &a.terms {
            for (&eb, cb) in &b.terms {
                self.add_term(ea + eb, ca * cb);
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> XPoly {
        if c.is_zero() {
            return XPoly::zero();
        }
        XPoly {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Multiply by `c * x^exp`.
    pub fn mul_monomial(&self, exp: i64, c: &Rational) -> XPoly {
        if c.is_zero() {
            return XPoly::zero();
        }
        XPoly {
            terms: self.terms.iter().map(|(&e, v)| (e + exp, v * c)).collect(),
        }
    }

    /// Substitute `x -> x^{-1}` (mirror the support).
    pub fn x_invert(&self) -> XPoly {
        XPoly {
            terms: self.terms.iter().map(|(&e, v)| (-e, v.clone())).collect(),
        }
    }

    /// Sum of all coefficients, i.e. the specialization `x -> 1`.
    pub fn eval_at_one(&self) -> Rational {
        let mut acc = Rational::zero();
        for c in self.terms.values() {
            acc += c;
        }
        acc
    }

    /// Drop all terms with `|exponent| > window`.
    pub fn clamp(&self, window: i64) -> XPoly {
        XPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&e, _)| e.abs() <= window)
                .map(|(&e, v)| (e, v.clone()))
                .collect(),
        }
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        let mut out = XPoly::zero();
        out.add_mul_assign(self, rhs);
        out
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly {
            terms: self.terms.iter().map(|(&e, v)| (e, -v.clone())).collect(),
        }
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let one = crate::num::rat(1);
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&e, c)| {
                let var = match e {
                    0 => String::new(),
                    1 => String::from("x"),
                    _ => alloc::format!("x^{e}"),
                };
                if var.is_empty() {
                    alloc::format!("{c}")
                } else if *c == one {
                    var
                } else if *c == -one.clone() {
                    alloc::format!("-{var}")
                } else {
                    alloc::format!("{c}*{var}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
