//! Truncated Laurent series in `q` with [`XPoly`] coefficients.
//!
//! A [`QSeries`] tracks a window of exponents `[min_exp, order]`:
//!
//! - `min_exp` is a hard support bound: the represented series has no nonzero
//!   coefficient below it;
//! - `order` is the knowledge horizon: every coefficient of `q^k` with
//!   `min_exp <= k <= order` is stored exactly (missing entries are exact
//!   zeros). Nothing is claimed about exponents above `order`.
//!
//! All arithmetic is exact on the window it reports. The result order of an
//! operation is never silently extended beyond what the operands justify; for
//! Laurent operands with negative `min_exp` the product horizon is tightened
//! accordingly, so that every reported coefficient is exact.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::num::{rat, Rational};
use crate::xpoly::XPoly;

/// A single term `coeff * x^{x_exp} * q^{q_exp}` with `coeff != 0`.
///
/// Monomials are the only admissible first argument of the q-Pochhammer
/// products in this crate; every product appearing in the identities has a
/// monomial argument such as `-x*q` or `q^2*x^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: Rational,
    pub x_exp: i64,
    pub q_exp: i64,
}

impl Monomial {
    /// New monomial; panics on a zero coefficient.
    pub fn new(coeff: Rational, x_exp: i64, q_exp: i64) -> Self {
        assert!(!coeff.is_zero(), "Monomial coefficient must be nonzero");
        Monomial {
            coeff,
            x_exp,
            q_exp,
        }
    }

    /// `q^k`.
    pub fn q_power(k: i64) -> Self {
        Monomial::new(rat(1), 0, k)
    }

    /// `-q^k`.
    pub fn neg_q_power(k: i64) -> Self {
        Monomial::new(rat(-1), 0, k)
    }

    /// `c * q^k` with integer `c`.
    pub fn int_q(c: i64, k: i64) -> Self {
        Monomial::new(rat(c), 0, k)
    }

    /// `c * x^j * q^k` with integer `c`.
    pub fn int_xq(c: i64, j: i64, k: i64) -> Self {
        Monomial::new(rat(c), j, k)
    }

    /// The reciprocal monomial `1/m`.
    pub fn inverse(&self) -> Monomial {
        Monomial::new(rat(1) / &self.coeff, -self.x_exp, -self.q_exp)
    }

    /// Negated coefficient.
    pub fn negate(&self) -> Monomial {
        Monomial::new(-self.coeff.clone(), self.x_exp, self.q_exp)
    }

    /// The monomial as a series tracked to `order`.
    pub fn to_series(&self, order: i64) -> QSeries {
        let mut coeffs = BTreeMap::new();
        if self.q_exp <= order {
            coeffs.insert(self.q_exp, XPoly::monomial(self.x_exp, self.coeff.clone()));
        }
        QSeries {
            min_exp: self.q_exp.min(order + 1),
            order,
            coeffs,
        }
    }
}

/// Location and values of the first coefficient disagreement between two
/// series, in lexicographic `(q_exp, x_exp)` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub q_exp: i64,
    pub x_exp: i64,
    pub lhs: Rational,
    pub rhs: Rational,
}

/// Truncated bivariate Laurent series: exact on `[min_exp, order]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    min_exp: i64,
    order: i64,
    coeffs: BTreeMap<i64, XPoly>,
}

/// Horizon value marking a series as an exact polynomial: every coefficient,
/// at any exponent, is known (missing ones are true zeros). Arithmetic mixing
/// an exact polynomial with a truncated series keeps the truncated window.
pub const EXACT: i64 = i64::MAX / 4;

impl QSeries {
    /// The zero series tracked to `order`.
    pub fn zero(order: i64) -> Self {
        QSeries {
            min_exp: 0,
            order,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant series 1 tracked to `order`.
    pub fn one(order: i64) -> Self {
        QSeries::constant(rat(1), order)
    }

    /// A constant series tracked to `order`.
    pub fn constant(c: Rational, order: i64) -> Self {
        Monomial::new(c, 0, 0).to_series(order)
    }

    pub(crate) fn from_parts(min_exp: i64, order: i64, coeffs: BTreeMap<i64, XPoly>) -> Self {
        let mut s = QSeries {
            min_exp,
            order,
            coeffs,
        };
        s.normalize();
        s
    }

    /// Knowledge horizon: coefficients of `q^k` for `k <= order` are exact.
    pub fn order(&self) -> i64 {
        self.order
    }

    /// Hard lower bound on the support of the represented series.
    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `q^{q_exp}` as a Laurent polynomial in `x`.
    ///
    /// Exponents outside the tracked window return zero; callers comparing
    /// series must restrict to the common window themselves (see
    /// [`QSeries::first_mismatch`]).
    pub fn coeff(&self, q_exp: i64) -> XPoly {
        self.coeffs.get(&q_exp).cloned().unwrap_or_else(XPoly::zero)
    }

    pub fn coeff_ref(&self, q_exp: i64) -> Option<&XPoly> {
        self.coeffs.get(&q_exp)
    }

    /// Coefficient of `x^{x_exp} q^{q_exp}`.
    pub fn coeff_xq(&self, q_exp: i64, x_exp: i64) -> Rational {
        self.coeffs
            .get(&q_exp)
            .map(|p| p.coeff(x_exp))
            .unwrap_or_else(Rational::zero)
    }

    /// Iterate all stored terms as `(q_exp, x_exp, coeff)` sorted by
    /// `(q_exp, x_exp)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, &Rational)> {
        self.coeffs
            .iter()
            .flat_map(|(&e, p)| p.iter().map(move |(j, c)| (e, j, c)))
    }

    /// Drop stored zeros and out-of-window keys, then tighten `min_exp` to the
    /// lowest surviving exponent.
    fn normalize(&mut self) {
        let min = self.min_exp;
        let order = self.order;
        self.coeffs.retain(|&e, p| e >= min && e <= order && !p.is_zero());
        if let Some(&lo) = self.coeffs.keys().next() {
            self.min_exp = lo;
        }
        if self.order < self.min_exp - 1 {
            self.min_exp = self.order + 1;
        }
    }

    /// Coefficientwise sum. `order = min` of the operand orders, `min_exp =
    /// min` of the operand bounds.
    pub fn add(&self, other: &QSeries) -> QSeries {
        let order = self.order.min(other.order);
        let min_exp = self.min_exp.min(other.min_exp);
        let mut coeffs = BTreeMap::new();
        for (&e, p) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if e <= order {
                coeffs.entry(e).or_insert_with(XPoly::zero).add_assign(p);
            }
        }
        QSeries::from_parts(min_exp, order, coeffs)
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QSeries {
        QSeries {
            min_exp: self.min_exp,
            order: self.order,
            coeffs: self.coeffs.iter().map(|(&e, p)| (e, -p)).collect(),
        }
    }

    /// Cauchy product. The horizon `min(order_a + min_b, order_b + min_a)`
    /// is exactly the window on which every coefficient is a finite, fully
    /// tracked convolution; for two ordinary series (both `min_exp = 0`) this
    /// is the minimum of the operand orders.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let order = (self.order + other.min_exp).min(other.order + self.min_exp);
        let min_exp = self.min_exp + other.min_exp;
        let mut coeffs: BTreeMap<i64, XPoly> = BTreeMap::new();
        for (&ea, pa) in &self.coeffs {
            if ea + other.min_exp > order {
                continue;
            }
            for (&eb, pb) in &other.coeffs {
                let e = ea + eb;
                if e > order {
                    break;
                }
                coeffs
                    .entry(e)
                    .or_insert_with(XPoly::zero)
                    .add_mul_assign(pa, pb);
            }
        }
        QSeries::from_parts(min_exp, order, coeffs)
    }

    /// Multiply every coefficient by a rational constant.
    pub fn scale(&self, c: &Rational) -> QSeries {
        if c.is_zero() {
            return QSeries::zero(self.order);
        }
        QSeries {
            min_exp: self.min_exp,
            order: self.order,
            coeffs: self.coeffs.iter().map(|(&e, p)| (e, p.scale(c))).collect(),
        }
    }

    /// Exact multiplication by a monomial: the window shifts with the term.
    pub fn mul_monomial(&self, m: &Monomial) -> QSeries {
        QSeries {
            min_exp: self.min_exp + m.q_exp,
            order: self.order + m.q_exp,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, p)| (e + m.q_exp, p.mul_monomial(m.x_exp, &m.coeff)))
                .collect(),
        }
    }

    /// Multiplicative inverse.
    ///
    /// Requires the lowest nonzero coefficient to be a single invertible
    /// x-monomial `c * x^j * q^{e0}`; the result then has `min_exp = -e0` and
    /// horizon `order - 2*max(e0, 0)`.
    pub fn invert(&self) -> Result<QSeries> {
        assert!(
            self.order < EXACT / 2,
            "truncate an exact polynomial before inverting it"
        );
        let (&e0, lead) = self.coeffs.iter().next().ok_or(Error::NotInvertible)?;
        if !lead.is_monomial() {
            return Err(Error::NotInvertible);
        }
        let (j, c) = lead.iter().next().map(|(j, c)| (j, c.clone())).unwrap();
        // Normalize to 1 + u with u supported on [1, rel_order].
        let rel_order = self.order - e0;
        let lead_inv = Monomial::new(rat(1) / &c, -j, -e0);
        let normalized = self.mul_monomial(&lead_inv);
        let mut inv: Vec<XPoly> = Vec::with_capacity((rel_order.max(0) + 1) as usize);
        inv.push(XPoly::one());
        for k in 1..=rel_order.max(0) {
            let mut acc = XPoly::zero();
            for i in 1..=k {
                if let Some(u_i) = normalized.coeff_ref(i) {
                    acc.add_mul_assign(u_i, &inv[(k - i) as usize]);
                }
            }
            inv.push(-&acc);
        }
        let mut coeffs = BTreeMap::new();
        for (k, p) in inv.into_iter().enumerate() {
            if !p.is_zero() {
                coeffs.insert(k as i64, p);
            }
        }
        // The inverse of c x^j q^{e0} (1 + u) is c^{-1} x^{-j} q^{-e0} (1 + u)^{-1}.
        let unshifted = QSeries::from_parts(0, rel_order.max(-1), coeffs);
        Ok(unshifted.mul_monomial(&lead_inv))
    }

    /// Lower the horizon to `new_order`, discarding higher terms.
    pub fn truncate(&self, new_order: i64) -> QSeries {
        if new_order >= self.order {
            return self.clone();
        }
        QSeries::from_parts(
            self.min_exp,
            new_order,
            self.coeffs
                .iter()
                .filter(|(&e, _)| e <= new_order)
                .map(|(&e, p)| (e, p.clone()))
                .collect(),
        )
    }

    /// Substitute `x -> x^{-1}` in every coefficient.
    pub fn x_invert(&self) -> QSeries {
        QSeries {
            min_exp: self.min_exp,
            order: self.order,
            coeffs: self.coeffs.iter().map(|(&e, p)| (e, p.x_invert())).collect(),
        }
    }

    /// Substitute `q -> -q`: negate the coefficients of odd powers.
    pub fn subst_q_negated(&self) -> QSeries {
        QSeries {
            min_exp: self.min_exp,
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, p)| (e, if e.rem_euclid(2) == 1 { -p } else { p.clone() }))
                .collect(),
        }
    }

    /// The pure-q series of coefficients of `x^omega`.
    pub fn x_slice(&self, omega: i64) -> QSeries {
        let mut coeffs = BTreeMap::new();
        for (&e, p) in &self.coeffs {
            let c = p.coeff(omega);
            if !c.is_zero() {
                coeffs.insert(e, XPoly::constant(c));
            }
        }
        QSeries::from_parts(self.min_exp, self.order, coeffs)
    }

    /// Collapse `x -> 1`.
    pub fn eval_x_one(&self) -> QSeries {
        let mut coeffs = BTreeMap::new();
        for (&e, p) in &self.coeffs {
            let c = p.eval_at_one();
            if !c.is_zero() {
                coeffs.insert(e, XPoly::constant(c));
            }
        }
        QSeries::from_parts(self.min_exp, self.order, coeffs)
    }

    /// Keep only the exponents congruent to `rem` mod 2 (the even or odd
    /// part of the series).
    pub fn parity_part(&self, rem: i64) -> QSeries {
        QSeries::from_parts(
            self.min_exp,
            self.order,
            self.coeffs
                .iter()
                .filter(|(&e, _)| e.rem_euclid(2) == rem.rem_euclid(2))
                .map(|(&e, p)| (e, p.clone()))
                .collect(),
        )
    }

    /// Drop all terms with x-exponent outside `[-window, window]`.
    pub fn clamp_x(&self, window: i64) -> QSeries {
        let mut coeffs = BTreeMap::new();
        for (&e, p) in &self.coeffs {
            let clamped = p.clamp(window);
            if !clamped.is_zero() {
                coeffs.insert(e, clamped);
            }
        }
        QSeries::from_parts(self.min_exp, self.order, coeffs)
    }

    /// Largest exponent window on which both series are exact.
    pub fn common_order(&self, other: &QSeries) -> i64 {
        self.order.min(other.order)
    }

    /// True if the two series agree on their common exact window.
    pub fn agrees_with(&self, other: &QSeries) -> bool {
        self.first_mismatch(other).is_none()
    }

    /// First `(q_exp, x_exp)` disagreement on the common window, if any.
    ///
    /// Only exponents carried by at least one side are visited; everything
    /// else in the window is an exact zero on both sides.
    pub fn first_mismatch(&self, other: &QSeries) -> Option<Mismatch> {
        let hi = self.common_order(other);
        let mut q_exps: Vec<i64> = self
            .coeffs
            .keys()
            .chain(other.coeffs.keys())
            .copied()
            .filter(|&e| e <= hi)
            .collect();
        q_exps.sort_unstable();
        q_exps.dedup();
        for e in q_exps {
            let pl = self.coeff_ref(e);
            let pr = other.coeff_ref(e);
            let mut exps: Vec<i64> = Vec::new();
            if let Some(p) = pl {
                exps.extend(p.iter().map(|(j, _)| j));
            }
            if let Some(p) = pr {
                exps.extend(p.iter().map(|(j, _)| j));
            }
            exps.sort_unstable();
            exps.dedup();
            for j in exps {
                let cl = pl.map(|p| p.coeff(j)).unwrap_or_else(Rational::zero);
                let cr = pr.map(|p| p.coeff(j)).unwrap_or_else(Rational::zero);
                if cl != cr {
                    return Some(Mismatch {
                        q_exp: e,
                        x_exp: j,
                        lhs: cl,
                        rhs: cr,
                    });
                }
            }
        }
        None
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = if self.is_zero() {
            String::from("0")
        } else {
            let one = rat(1);
            let parts: Vec<String> = self
                .coeffs
                .iter()
                .map(|(&e, p)| {
                    let var = match e {
                        0 => String::new(),
                        1 => String::from("q"),
                        _ => alloc::format!("q^{e}"),
                    };
                    let needs_parens = p.len() > 1 || (p.is_monomial() && p.coeff(0).is_zero());
                    if var.is_empty() {
                        if needs_parens {
                            alloc::format!("({p})")
                        } else {
                            alloc::format!("{p}")
                        }
                    } else if needs_parens {
                        alloc::format!("({p})*{var}")
                    } else if p.coeff(0) == one {
                        var
                    } else {
                        alloc::format!("{p}*{var}")
                    }
                })
                .collect();
            parts.join(" + ")
        };
        if self.order >= EXACT / 2 {
            write!(f, "{body}")
        } else {
            write!(f, "{body} + O(q^{})", self.order + 1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_plus_q(order: i64) -> QSeries {
        QSeries::one(order).add(&Monomial::q_power(1).to_series(order))
    }

    fn one_minus_q(order: i64) -> QSeries {
        QSeries::one(order).sub(&Monomial::q_power(1).to_series(order))
    }

    #[test]
    fn add_cancellation() {
        let s = one_plus_q(5).add(&one_minus_q(5));
        assert_eq!(s.coeff_xq(0, 0), rat(2));
        assert!(s.coeff(1).is_zero());
        assert_eq!(s.order(), 5);
    }

    #[test]
    fn add_zero_is_identity() {
        let s = one_plus_q(7);
        assert_eq!(s.add(&QSeries::zero(7)), s);
    }

    #[test]
    fn laurent_add_support() {
        let s = Monomial::q_power(-1)
            .to_series(4)
            .add(&Monomial::q_power(1).to_series(4));
        assert_eq!(s.min_exp(), -1);
        assert_eq!(s.coeff_xq(-1, 0), rat(1));
        assert_eq!(s.coeff_xq(1, 0), rat(1));
        assert!(s.coeff(0).is_zero());
    }

    #[test]
    fn mul_difference_of_squares() {
        let p = one_plus_q(6).mul(&one_minus_q(6));
        assert_eq!(p.coeff_xq(0, 0), rat(1));
        assert!(p.coeff(1).is_zero());
        assert_eq!(p.coeff_xq(2, 0), rat(-1));
    }

    #[test]
    fn mul_one_is_identity() {
        let s = one_plus_q(6).mul(&one_minus_q(6));
        assert_eq!(s.mul(&QSeries::one(6)), s);
    }

    #[test]
    fn x_grading_cancels_in_products() {
        let a = Monomial::int_xq(1, 1, 1).to_series(5);
        let b = Monomial::int_xq(1, -1, 1).to_series(5);
        let p = a.mul(&b);
        assert_eq!(p.coeff_xq(2, 0), rat(1));
        assert_eq!(p.terms().count(), 1);
    }

    #[test]
    fn invert_geometric() {
        let inv = one_minus_q(8).invert().unwrap();
        for k in 0..=8 {
            assert_eq!(inv.coeff_xq(k, 0), rat(1));
        }
    }

    #[test]
    fn invert_one() {
        let inv = QSeries::one(5).invert().unwrap();
        assert_eq!(inv, QSeries::one(5));
    }

    #[test]
    fn invert_shifted_and_multiply_back() {
        // q*(1-q): inverse is q^{-1}(1 + q + q^2 + ...)
        let a = Monomial::q_power(1).to_series(9).mul(&one_minus_q(9));
        let inv = a.invert().unwrap();
        assert_eq!(inv.min_exp(), -1);
        assert_eq!(inv.coeff_xq(-1, 0), rat(1));
        assert_eq!(inv.coeff_xq(0, 0), rat(1));
        let product = a.mul(&inv);
        assert!(product.agrees_with(&QSeries::one(product.order())));
        assert!(product.order() >= 7);
    }

    #[test]
    fn invert_zero_fails() {
        assert_eq!(QSeries::zero(5).invert(), Err(Error::NotInvertible));
    }

    #[test]
    fn invert_non_monomial_lead_fails() {
        // Leading coefficient 1 + x is not a single x-monomial.
        let mut s = QSeries::one(5);
        s = s.add(&Monomial::int_xq(1, 1, 0).to_series(5));
        assert_eq!(s.invert(), Err(Error::NotInvertible));
    }

    #[test]
    fn laurent_product_horizon_is_tightened() {
        // (q^{-2}) * (q^{-3}): window must still contain the product term.
        let a = Monomial::q_power(-2).to_series(4);
        let b = Monomial::q_power(-3).to_series(4);
        let p = a.mul(&b);
        assert_eq!(p.coeff_xq(-5, 0), rat(1));
        assert_eq!(p.order(), 1);
        assert_eq!(p.min_exp(), -5);
    }

    #[test]
    fn subst_q_negated_flips_odd_exponents() {
        let s = one_plus_q(5);
        let t = s.subst_q_negated();
        assert_eq!(t.coeff_xq(1, 0), rat(-1));
        assert_eq!(t.subst_q_negated(), s);
    }

    #[test]
    fn mismatch_reports_lowest_position() {
        let a = one_plus_q(5);
        let b = one_plus_q(5).add(&Monomial::int_xq(2, 1, 3).to_series(5));
        let m = a.first_mismatch(&b).unwrap();
        assert_eq!((m.q_exp, m.x_exp), (3, 1));
        assert_eq!(m.lhs, rat(0));
        assert_eq!(m.rhs, rat(2));
    }
}
