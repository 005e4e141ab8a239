//! Bilateral sums, the constant-sum `S` pair, triple-sum bivariate
//! generating functions, coefficient formulas, and the well-poised series
//! evaluation.
//!
//! Bilateral sums run over all integer lattice points; a term is admitted
//! when its binomials are in range, its inverse Pochhammer index is
//! nonnegative (`1/(q^2;q^2)_n = 0` for `n < 0`), and its minimal exponent
//! reaches the tracked window. Quadratic exponents make this a finite set.

use crate::error::{Error, Result};
use crate::multisum::{GaussTable, InvPochTable};
use crate::num::rat;
use crate::pochhammer::{poch_finite, poch_infinite};
use crate::series::{Monomial, QSeries};
use crate::statistics::{f_series, g_closed_b};

/// Sign mode of a bilateral sum: `Minus` weights each term by `(-1)^{r+s}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn weight(self, r: i64, s: i64) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => {
                if (r + s).rem_euclid(2) == 0 {
                    1
                } else {
                    -1
                }
            }
        }
    }
}

fn isqrt64(n: i64) -> i64 {
    if n <= 0 {
        0
    } else {
        n.isqrt()
    }
}

/// The bilateral sum
/// `H^sign_omega = sum_{r,s} (+-1)^{r+s} q^{r^2+r+s^2+s+omega} / (q^2;q^2)_{r+s}
///  [r+s choose r+omega]_{q^2} [r+s+1 choose r]_{q^2}`.
pub fn bilateral_h(sign: Sign, omega: i64, order: i64) -> QSeries {
    let gauss = GaussTable::new(2);
    let inv = InvPochTable::new(Monomial::q_power(2), 2, order);
    let mut acc = QSeries::zero(order);
    // Nonzero terms need r >= max(0, -omega) and s >= max(omega, -1).
    let r_lo = 0.max(-omega);
    let s_lo = omega.max(-1);
    let mut r = r_lo;
    loop {
        let s_best = if s_lo <= 0 { 0 } else { s_lo };
        let base = r * r + r + s_best * s_best + s_best + omega;
        if base > order && r > 0 {
            break;
        }
        let mut s = s_lo;
        let mut seen_any = false;
        loop {
            let e = r * r + r + s * s + s + omega;
            if e <= order {
                seen_any = true;
                if r + s >= 0 {
                    let term = inv
                        .get(r + s)
                        .mul(&gauss.get(r + s, r + omega))
                        .mul(&gauss.get(r + s + 1, r))
                        .mul_monomial(&Monomial::int_q(sign.weight(r, s), e))
                        .truncate(order);
                    acc = acc.add(&term);
                }
            } else if s > 0 {
                break;
            }
            if !seen_any && s > order + 2 {
                break;
            }
            s += 1;
        }
        r += 1;
        if r > isqrt64(order + omega.abs()) + omega.abs() + 2 {
            break;
        }
    }
    acc
}

/// The bilateral sum
/// `I^sign_omega = sum_{r,s} (+-1)^{r+s} q^{r^2+s^2+2s+omega} / (q^2;q^2)_{r+s}
///  [r+s choose r-omega]_{q^2} [r+s choose r]_{q^2}`.
pub fn bilateral_i(sign: Sign, omega: i64, order: i64) -> QSeries {
    let gauss = GaussTable::new(2);
    let inv = InvPochTable::new(Monomial::q_power(2), 2, order);
    let mut acc = QSeries::zero(order);
    // Nonzero terms need r >= max(0, omega) and s >= max(0, -omega).
    let r_lo = 0.max(omega);
    let s_lo = 0.max(-omega);
    for r in r_lo..=isqrt64(order + omega.abs()) + omega.abs() + 2 {
        for s in s_lo..=isqrt64(order + omega.abs()) + omega.abs() + 2 {
            let e = r * r + s * s + 2 * s + omega;
            if e > order {
                continue;
            }
            let term = inv
                .get(r + s)
                .mul(&gauss.get(r + s, r - omega))
                .mul(&gauss.get(r + s, r))
                .mul_monomial(&Monomial::int_q(sign.weight(r, s), e))
                .truncate(order);
            acc = acc.add(&term);
        }
    }
    acc
}

/// The two constant-sum double sums and their shared closed form
/// `q^{M(M+3)/2} (-q;q)_{M-1} / ((q;q^2)_M (q;q)_M)` for `M >= 1`.
///
/// In the second sum the `s = 0` term carries `1/(q^2;q^2)_{s-1} = 0` in the
/// denominator and is dropped.
pub fn s1m_s2m(m_index: i64, order: i64) -> Result<(QSeries, QSeries, QSeries)> {
    if m_index < 1 {
        return Err(Error::BadParameters("constant-sum pair needs M >= 1"));
    }
    let inv_even = InvPochTable::new(Monomial::q_power(2), 2, order);
    let inv_odd = InvPochTable::new(Monomial::q_power(1), 2, order);

    let mut s1 = QSeries::zero(order);
    let mut s2 = QSeries::zero(order);
    for r in 0..=m_index {
        let s = m_index - r;
        let e1 = r * r + r + s * s + 2 * s;
        if e1 <= order {
            let term = inv_even
                .get(r)
                .mul(&inv_odd.get(r))
                .mul(&inv_even.get(s))
                .mul(&inv_odd.get(s))
                .mul_monomial(&Monomial::q_power(e1))
                .truncate(order);
            s1 = s1.add(&term);
        }
        let e2 = r * r + 2 * r + s * s + s;
        if s >= 1 && e2 <= order {
            let term = inv_even
                .get(r)
                .mul(&inv_odd.get(r + 1))
                .mul(&inv_even.get(s - 1))
                .mul(&inv_odd.get(s))
                .mul_monomial(&Monomial::q_power(e2))
                .truncate(order);
            s2 = s2.add(&term);
        }
    }

    let shift = m_index * (m_index + 3) / 2;
    let closed = if shift > order {
        // The closed form is supported above the horizon.
        QSeries::zero(order)
    } else {
        let residual = order - shift;
        poch_finite(&Monomial::neg_q_power(1), 1, m_index - 1, residual)
            .mul(&InvPochTable::new(Monomial::q_power(1), 2, residual).get(m_index))
            .mul(&InvPochTable::new(Monomial::q_power(1), 1, residual).get(m_index))
            .mul_monomial(&Monomial::q_power(shift))
    };
    Ok((s1, s2, closed))
}

/// The x-graded triple sum for the two-component families, assembled from
/// the closed forms of the alternating-sum series `g` and the difference
/// statistic series `f`:
///
/// - `a = 2`: `sum_n x^{-n} q^{n(2n+1)} g_{2n}(x,q) f_{2n}(x,q)
///          + sum_n x^{n+1} q^{(n+1)(2n+1)} g_{2n+1}(x^{-1},q) f_{2n+1}(x,q)`
/// - `a = 1`: `sum_n x^{n} q^{n(2n+1)} g_{2n}(x^{-1},q) f_{2n+1}(x,q)
///          + sum_n x^{-(n+1)} q^{(n+1)(2n+1)} g_{2n+1}(x,q) f_{2n+2}(x,q)`
///
/// The x-window of the result is clamped to `|omega| <= isqrt(order) + 2`;
/// nonzero slices cannot occur outside it.
pub fn triple_sum_bivariate(a: i64, order: i64) -> Result<QSeries> {
    if a != 1 && a != 2 {
        return Err(Error::BadParameters("triple sum is defined for a in {1, 2}"));
    }
    let mut acc = QSeries::zero(order);
    let mut n = 0;
    while n * (2 * n + 1) <= order {
        let shift = n * (2 * n + 1);
        let residual = order - shift;
        let g = g_closed_b(2 * n, residual);
        let term = match a {
            2 => g
                .mul(&f_series(2 * n, residual))
                .mul_monomial(&Monomial::int_xq(1, -n, shift)),
            _ => g
                .x_invert()
                .mul(&f_series(2 * n + 1, residual))
                .mul_monomial(&Monomial::int_xq(1, n, shift)),
        };
        acc = acc.add(&term);
        n += 1;
    }
    let mut n = 0;
    while (n + 1) * (2 * n + 1) <= order {
        let shift = (n + 1) * (2 * n + 1);
        let residual = order - shift;
        let g = g_closed_b(2 * n + 1, residual);
        let term = match a {
            2 => g
                .x_invert()
                .mul(&f_series(2 * n + 1, residual))
                .mul_monomial(&Monomial::int_xq(1, n + 1, shift)),
            _ => g
                .mul(&f_series(2 * n + 2, residual))
                .mul_monomial(&Monomial::int_xq(1, -(n + 1), shift)),
        };
        acc = acc.add(&term);
        n += 1;
    }
    Ok(acc.clamp_x(isqrt64(order) + 2))
}

/// The explicit coefficient of `x^omega` in the bivariate generating
/// function, as a double sum over `(n, k)`:
///
/// - `a = 2`: `sum q^{2(n^2+n+k^2-k)+omega} / (q^2;q^2)_{2n}
///              [2n choose n-k+omega] [2n choose n+k]
///          + sum q^{2((n+1)^2+k^2)-omega} / (q^2;q^2)_{2n+1}
///              [2n+1 choose n-k+omega] [2n+1 choose n+k]`
/// - `a = 1`: `sum q^{2(n^2+n+k^2)-omega} / (q^2;q^2)_{2n}
///              [2n choose n+k-omega] [2n+1 choose n+k]
///          + sum q^{2((n+1)^2+k^2-k)+omega} / (q^2;q^2)_{2n+1}
///              [2n+1 choose n+k-omega] [2n+2 choose n+1+k]`
///
/// all Gaussian polynomials in base `q^2`.
pub fn coeff_formula(a: i64, omega: i64, order: i64) -> Result<QSeries> {
    if a != 1 && a != 2 {
        return Err(Error::BadParameters(
            "coefficient formula is defined for a in {1, 2}",
        ));
    }
    let gauss = GaussTable::new(2);
    let inv = InvPochTable::new(Monomial::q_power(2), 2, order);
    let mut acc = QSeries::zero(order);
    let n_cap = isqrt64(order) + omega.abs() + 2;
    let k_cap = isqrt64(order) + omega.abs() + 2;
    for n in 0..=n_cap {
        for k in -k_cap..=k_cap {
            // First branch.
            let e = match a {
                2 => 2 * (n * n + n + k * k - k) + omega,
                _ => 2 * (n * n + n + k * k) - omega,
            };
            if e <= order {
                let (b1, b2) = match a {
                    2 => (gauss.get(2 * n, n - k + omega), gauss.get(2 * n, n + k)),
                    _ => (gauss.get(2 * n, n + k - omega), gauss.get(2 * n + 1, n + k)),
                };
                if !b1.is_zero() && !b2.is_zero() {
                    let term = inv
                        .get(2 * n)
                        .mul(&b1)
                        .mul(&b2)
                        .mul_monomial(&Monomial::q_power(e))
                        .truncate(order);
                    acc = acc.add(&term);
                }
            }
            // Second branch.
            let e = match a {
                2 => 2 * ((n + 1) * (n + 1) + k * k) - omega,
                _ => 2 * ((n + 1) * (n + 1) + k * k - k) + omega,
            };
            if e <= order {
                let (b1, b2) = match a {
                    2 => (
                        gauss.get(2 * n + 1, n - k + omega),
                        gauss.get(2 * n + 1, n + k),
                    ),
                    _ => (
                        gauss.get(2 * n + 1, n + k - omega),
                        gauss.get(2 * n + 2, n + 1 + k),
                    ),
                };
                if !b1.is_zero() && !b2.is_zero() {
                    let term = inv
                        .get(2 * n + 1)
                        .mul(&b1)
                        .mul(&b2)
                        .mul_monomial(&Monomial::q_power(e))
                        .truncate(order);
                    acc = acc.add(&term);
                }
            }
        }
    }
    Ok(acc)
}

/// One of the two constant-term double sums extracted from the bivariate
/// product identities:
///
/// - `a = 1`: `sum_{r,s>=0} q^{r^2+s^2+r+s} (q^2;q^2)_{r+s+1}
///            / ((q^2;q^2)_r^2 (q^2;q^2)_s (q^2;q^2)_{s+1})`,
///   equal to `(-q^2;q^2)_inf / (q^2;q^2)_inf`;
/// - `a = 2`: `sum q^{r^2+s^2+2s} (q^2;q^2)_{r+s} / ((q^2;q^2)_r (q^2;q^2)_s)^2
///          + sum q^{r^2+s^2+2r+2s+2} (q^2;q^2)_{r+s+1}
///            / ((q^2;q^2)_r (q^2;q^2)_{r+1} (q^2;q^2)_s (q^2;q^2)_{s+1})`,
///   equal to `(-q;q^2)_inf / (q^2;q^2)_inf`.
pub fn corollary_double_sum(a: i64, order: i64) -> Result<QSeries> {
    if a != 1 && a != 2 {
        return Err(Error::BadParameters("double sum is defined for a in {1, 2}"));
    }
    let q2 = Monomial::q_power(2);
    let inv = InvPochTable::new(q2.clone(), 2, order);
    let mut acc = QSeries::zero(order);
    for r in 0..=isqrt64(order) + 1 {
        for s in 0..=isqrt64(order) + 1 {
            match a {
                1 => {
                    let e = r * r + s * s + r + s;
                    if e <= order {
                        let term = poch_finite(&q2, 2, r + s + 1, order - e)
                            .mul(&inv.get(r))
                            .mul(&inv.get(r))
                            .mul(&inv.get(s))
                            .mul(&inv.get(s + 1))
                            .mul_monomial(&Monomial::q_power(e))
                            .truncate(order);
                        acc = acc.add(&term);
                    }
                }
                _ => {
                    let e = r * r + s * s + 2 * s;
                    if e <= order {
                        let term = poch_finite(&q2, 2, r + s, order - e)
                            .mul(&inv.get(r))
                            .mul(&inv.get(r))
                            .mul(&inv.get(s))
                            .mul(&inv.get(s))
                            .mul_monomial(&Monomial::q_power(e))
                            .truncate(order);
                        acc = acc.add(&term);
                    }
                    let e = r * r + s * s + 2 * r + 2 * s + 2;
                    if e <= order {
                        let term = poch_finite(&q2, 2, r + s + 1, order - e)
                            .mul(&inv.get(r))
                            .mul(&inv.get(r + 1))
                            .mul(&inv.get(s))
                            .mul(&inv.get(s + 1))
                            .mul_monomial(&Monomial::q_power(e))
                            .truncate(order);
                        acc = acc.add(&term);
                    }
                }
            }
        }
    }
    Ok(acc)
}

/// Verify the well-poised series evaluation specialized at `a = q^{2alpha}`,
/// `b = q^{-beta}` (`alpha, beta >= 1`), with the factor 1/2 cleared:
///
/// ```text
/// 2 phi (q^{2a+2+b}; q^2)_inf (q^{1+b}; q^2)_inf
///   = (q;q^2)_inf ( (-q^a;q)_inf (q^{1+a+b};q)_inf
///                 + (q^a;q)_inf (-q^{1+a+b};q)_inf )
/// ```
///
/// where `phi = sum_n (q^{2a};q^2)_n (q^{-b};q^2)_n q^{(1+b)n}
///             / ((q^2;q^2)_n (q^{2a+2+b};q^2)_n)`.
pub fn wellpoised_check(alpha: i64, beta: i64, order: i64) -> bool {
    let (lhs, rhs) = wellpoised_sides(alpha, beta, order).expect("alpha, beta >= 1");
    lhs.agrees_with(&rhs)
}

/// The two sides compared by [`wellpoised_check`], each exact to `order`.
pub fn wellpoised_sides(alpha: i64, beta: i64, order: i64) -> Result<(QSeries, QSeries)> {
    if alpha < 1 || beta < 1 {
        return Err(Error::BadParameters("well-poised check needs alpha, beta >= 1"));
    }
    // The Laurent factor (q^{-beta};q^2)_n dips below zero by at most `pad`.
    let pad: i64 = (0..).map(|i| beta - 2 * i).take_while(|&d| d > 0).sum();
    let internal = order + pad;

    let inv_even = InvPochTable::new(Monomial::q_power(2), 2, internal);
    let inv_c = InvPochTable::new(Monomial::q_power(2 * alpha + 2 + beta), 2, internal);
    let a_mon = Monomial::q_power(2 * alpha);
    let b_mon = Monomial::q_power(-beta);

    let mut phi = QSeries::zero(internal);
    let mut n = 0;
    loop {
        // Minimal exponent of the n-th term.
        let low: i64 = (0..n).map(|i| (2 * i - beta).min(0)).sum::<i64>() + (1 + beta) * n;
        if low > internal {
            break;
        }
        let term = poch_finite(&a_mon, 2, n, internal)
            .mul(&poch_finite(&b_mon, 2, n, internal))
            .mul(&inv_even.get(n))
            .mul(&inv_c.get(n))
            .mul_monomial(&Monomial::q_power((1 + beta) * n));
        phi = phi.add(&term.truncate(internal));
        n += 1;
    }

    let inf = |k: i64, r: i64, sign: i64| {
        poch_infinite(&Monomial::int_q(sign, k), r, internal).expect("positive step")
    };
    let lhs = phi
        .scale(&rat(2))
        .mul(&inf(2 * alpha + 2 + beta, 2, 1))
        .mul(&inf(1 + beta, 2, 1));
    let rhs = inf(1, 2, 1).mul(
        &inf(alpha, 1, -1)
            .mul(&inf(1 + alpha + beta, 1, 1))
            .add(&inf(alpha, 1, 1).mul(&inf(1 + alpha + beta, 1, -1))),
    );
    debug_assert!(lhs.order() >= order && rhs.order() >= order);
    Ok((lhs.truncate(order), rhs.truncate(order)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{gf_lambda, EnumBudget};

    fn h_relation_product(omega: i64, order: i64) -> QSeries {
        // 2 q^{omega^2} (-q^2;q^2)_inf / (q^2;q^2)_inf
        poch_infinite(&Monomial::neg_q_power(2), 2, order)
            .unwrap()
            .mul(
                &poch_infinite(&Monomial::q_power(2), 2, order)
                    .unwrap()
                    .invert()
                    .unwrap(),
            )
            .mul_monomial(&Monomial::int_q(2, omega * omega))
            .truncate(order)
    }

    #[test]
    fn h_plus_relation() {
        for omega in -3..=3 {
            let lhs = bilateral_h(Sign::Plus, omega, 24)
                .add(&bilateral_h(Sign::Plus, -omega, 24));
            let rhs = h_relation_product(omega, 24);
            assert!(
                lhs.agrees_with(&rhs),
                "omega = {omega}: {:?}",
                lhs.first_mismatch(&rhs)
            );
        }
    }

    #[test]
    fn h_minus_symmetry() {
        for omega in 0..=3 {
            let lhs = bilateral_h(Sign::Minus, omega, 24);
            let rhs = bilateral_h(Sign::Minus, -omega, 24);
            assert!(lhs.agrees_with(&rhs), "omega = {omega}");
        }
    }

    #[test]
    fn i_minus_relation() {
        // I^-_omega - I^-_{1-omega} = (-1)^omega q^{omega^2-omega} (q;q^2)_inf / (q^2;q^2)_inf
        for omega in -2..=3 {
            let lhs = bilateral_i(Sign::Minus, omega, 24)
                .sub(&bilateral_i(Sign::Minus, 1 - omega, 24));
            let sign = if omega.rem_euclid(2) == 0 { 1 } else { -1 };
            let rhs = poch_infinite(&Monomial::q_power(1), 2, 24)
                .unwrap()
                .mul(
                    &poch_infinite(&Monomial::q_power(2), 2, 24)
                        .unwrap()
                        .invert()
                        .unwrap(),
                )
                .mul_monomial(&Monomial::int_q(sign, omega * omega - omega))
                .truncate(24);
            assert!(
                lhs.agrees_with(&rhs),
                "omega = {omega}: {:?}",
                lhs.first_mismatch(&rhs)
            );
        }
    }

    #[test]
    fn i_plus_relation() {
        // I^+_omega + I^+_{1-omega} = q^{omega^2-omega} (-q;q^2)_inf / (q^2;q^2)_inf
        for omega in -2..=3 {
            let lhs = bilateral_i(Sign::Plus, omega, 24)
                .add(&bilateral_i(Sign::Plus, 1 - omega, 24));
            let rhs = poch_infinite(&Monomial::neg_q_power(1), 2, 24)
                .unwrap()
                .mul(
                    &poch_infinite(&Monomial::q_power(2), 2, 24)
                        .unwrap()
                        .invert()
                        .unwrap(),
                )
                .mul_monomial(&Monomial::q_power(omega * omega - omega))
                .truncate(24);
            assert!(lhs.agrees_with(&rhs), "omega = {omega}");
        }
    }

    #[test]
    fn i_sign_twist() {
        // I^+_omega(q) = (-1)^omega I^-_omega(-q)
        for omega in -2..=2 {
            let plus = bilateral_i(Sign::Plus, omega, 20);
            let twisted = bilateral_i(Sign::Minus, omega, 20).subst_q_negated();
            let twisted = if omega.rem_euclid(2) == 1 {
                twisted.neg()
            } else {
                twisted
            };
            assert!(plus.agrees_with(&twisted), "omega = {omega}");
        }
    }

    #[test]
    fn constant_sum_pair_and_closed_form() {
        for m_index in 1..=6 {
            let (s1, s2, closed) = s1m_s2m(m_index, 40).unwrap();
            assert!(s1.agrees_with(&closed), "S1 at M = {m_index}");
            assert!(s2.agrees_with(&closed), "S2 at M = {m_index}");
            // Leading exponent M(M+3)/2.
            let lead = closed.terms().next().map(|(e, _, _)| e);
            assert_eq!(lead, Some(m_index * (m_index + 3) / 2));
        }
        assert!(s1m_s2m(0, 10).is_err());
    }

    #[test]
    fn s11_has_the_stated_leading_term() {
        // S_{1,1} = q^2 / ((q;q^2)_1 (q;q)_1) = q^2 / (1-q)^2 = q^2 (1 + 2q + ...)
        let (s1, _, closed) = s1m_s2m(1, 12).unwrap();
        assert_eq!(s1.coeff_xq(2, 0), rat(1));
        assert_eq!(s1.coeff_xq(3, 0), rat(2));
        assert!(s1.agrees_with(&closed));
    }

    #[test]
    fn triple_sums_match_enumeration() {
        let budget = EnumBudget::default();
        for a in [1, 2] {
            let sum = triple_sum_bivariate(a, 12).unwrap();
            let gf = gf_lambda(a, 2, 12, &budget).unwrap().clamp_x(isqrt64(12) + 2);
            assert!(
                sum.agrees_with(&gf),
                "a = {a}: {:?}",
                sum.first_mismatch(&gf)
            );
        }
        assert_eq!(triple_sum_bivariate(2, 0).unwrap().coeff_xq(0, 0), rat(1));
        assert!(triple_sum_bivariate(3, 10).is_err());
    }

    #[test]
    fn coefficient_formula_slices() {
        for a in [1, 2] {
            let bivariate = triple_sum_bivariate(a, 14).unwrap();
            for omega in -3..=3 {
                let slice = bivariate.x_slice(omega);
                let formula = coeff_formula(a, omega, 14).unwrap();
                assert!(
                    formula.agrees_with(&slice),
                    "a = {a}, omega = {omega}: {:?}",
                    formula.first_mismatch(&slice)
                );
            }
        }
    }

    #[test]
    fn coefficient_formula_first_values() {
        assert_eq!(coeff_formula(1, 1, 6).unwrap().coeff_xq(1, 0), rat(1));
        assert_eq!(coeff_formula(2, 1, 6).unwrap().coeff_xq(1, 0), rat(1));
    }

    #[test]
    fn parity_mismatch_slices_vanish() {
        for a in [1, 2] {
            let bivariate = triple_sum_bivariate(a, 12).unwrap();
            for omega in -3..=3i64 {
                for (q_exp, _, c) in bivariate.x_slice(omega).terms() {
                    assert!(
                        (q_exp - omega).rem_euclid(2) == 0,
                        "a = {a}: content at q^{q_exp} x^{omega}: {c}"
                    );
                }
            }
        }
    }

    #[test]
    fn double_sums_equal_products() {
        let order = 24;
        let sum1 = corollary_double_sum(1, order).unwrap();
        let rhs1 = poch_infinite(&Monomial::neg_q_power(2), 2, order)
            .unwrap()
            .mul(
                &poch_infinite(&Monomial::q_power(2), 2, order)
                    .unwrap()
                    .invert()
                    .unwrap(),
            );
        assert!(sum1.agrees_with(&rhs1), "{:?}", sum1.first_mismatch(&rhs1));

        let sum2 = corollary_double_sum(2, order).unwrap();
        let rhs2 = poch_infinite(&Monomial::neg_q_power(1), 2, order)
            .unwrap()
            .mul(
                &poch_infinite(&Monomial::q_power(2), 2, order)
                    .unwrap()
                    .invert()
                    .unwrap(),
            );
        assert!(sum2.agrees_with(&rhs2), "{:?}", sum2.first_mismatch(&rhs2));
    }

    #[test]
    fn wellpoised_small_parameters() {
        for alpha in 1..=2 {
            for beta in 1..=2 {
                assert!(wellpoised_check(alpha, beta, 20), "alpha={alpha} beta={beta}");
            }
        }
        assert!(wellpoised_check(1, 1, 0));
    }
}
