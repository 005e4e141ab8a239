//! Odd/even-indexed part statistics and the `B_N`, `f_N`, `g_N` series.
//!
//! For a partition into distinct parts at most `N`, `d_N(i, j, n)` counts the
//! partitions of `n` with `i` odd-indexed odd parts and `j` even-indexed odd
//! parts. The generating function `B_N(k, q)` of the difference statistic
//! `i - j = k` has the closed form `q^{2k^2-k} [N choose N' + k]_{q^2}`
//! (writing `N = 2N' + v`), and the alternating-sum generating function
//! `g_N(x, q)` over partitions with parts at most `N` has two closed forms,
//! tied together by a Rogers--Szego polynomial identity. Both brute-force
//! and closed forms are provided so each side can serve as the other's check.

use crate::multisum::{binom2, GaussTable, InvPochTable};
use crate::partition::{partitions_of, strict_partitions_of, Partition};
use crate::pochhammer::poch_finite;
use crate::series::{Monomial, QSeries};

/// Numbers of (odd-indexed, even-indexed) odd parts.
fn odd_part_profile(lambda: &Partition) -> (i64, i64) {
    let mut odd_indexed = 0;
    let mut even_indexed = 0;
    for (idx, &part) in lambda.parts().iter().enumerate() {
        if part % 2 == 1 {
            if idx % 2 == 0 {
                odd_indexed += 1;
            } else {
                even_indexed += 1;
            }
        }
    }
    (odd_indexed, even_indexed)
}

/// Count partitions of `n` into distinct parts `<= max_part` with
/// `odd_indexed` odd parts at odd positions and `even_indexed` at even
/// positions.
pub fn d_count(max_part: i64, odd_indexed: i64, even_indexed: i64, n: i64) -> u64 {
    strict_partitions_of(n, max_part)
        .iter()
        .filter(|p| odd_part_profile(p) == (odd_indexed, even_indexed))
        .count() as u64
}

/// `B_N(k, q) = sum_{j, n} d_N(j + k, j, n) q^n`, brute force and closed
/// form `q^{2k^2 - k} [N choose N' + k]_{q^2}` with `N = 2N' + v`.
pub fn b_series(max_part: i64, k: i64, order: i64) -> (QSeries, QSeries) {
    debug_assert!(max_part >= 0);
    let mut brute = QSeries::zero(order);
    for n in 0..=order {
        let mut count = 0;
        for p in strict_partitions_of(n, max_part) {
            let (i, j) = odd_part_profile(&p);
            if i - j == k {
                count += 1;
            }
        }
        if count > 0 {
            brute = brute.add(&Monomial::int_q(count, n).to_series(order));
        }
    }
    (brute, b_closed(max_part, k, order))
}

/// The closed form of `B_N(k, q)` alone.
pub fn b_closed(max_part: i64, k: i64, order: i64) -> QSeries {
    let half = max_part / 2;
    let gauss = GaussTable::new(2);
    gauss
        .get(max_part, half + k)
        .mul_monomial(&Monomial::q_power(2 * k * k - k))
        .truncate(order)
}

/// `f_N(x, q) = sum_k B_N(k, q) x^k`, built from the closed form; the slice
/// at `x^k` is checked against the brute-force count elsewhere.
pub fn f_series(max_part: i64, order: i64) -> QSeries {
    let half = max_part / 2;
    let v = max_part % 2;
    let gauss = GaussTable::new(2);
    let mut acc = QSeries::zero(order);
    for k in -half..=half + v {
        let term = gauss
            .get(max_part, half + k)
            .mul_monomial(&Monomial::int_xq(1, k, 2 * k * k - k))
            .truncate(order);
        acc = acc.add(&term);
    }
    acc
}

/// `g_N(x, q) = sum x^{|lambda|_a} q^{|lambda|}` over partitions with parts
/// at most `N`: brute-force enumeration plus the two closed forms
///
/// ```text
/// A: 1/(q^2;q^2)_N sum_i [N' choose i]_{q^4} x^{2i} q^{2i}
///      (-xq; q^4)_{N'-i+v} (-x^{-1}q; q^4)_i
/// B: 1/(q^2;q^2)_N sum_j x^j q^j [N choose j]_{q^2}
/// ```
pub fn g_series(max_part: i64, order: i64) -> (QSeries, QSeries, QSeries) {
    let mut brute = QSeries::zero(order);
    for n in 0..=order {
        for lambda in partitions_of(n, max_part) {
            brute = brute.add(&Monomial::int_xq(1, lambda.alt_sum(), n).to_series(order));
        }
    }

    let half = max_part / 2;
    let v = max_part % 2;
    let inv = InvPochTable::new(Monomial::q_power(2), 2, order)
        .get(max_part);

    let gauss4 = GaussTable::new(4);
    let mut closed_a = QSeries::zero(order);
    for i in 0..=half {
        let term = gauss4
            .get(half, i)
            .mul_monomial(&Monomial::int_xq(1, 2 * i, 2 * i))
            .truncate(order)
            .mul(&poch_finite(&Monomial::int_xq(-1, 1, 1), 4, half - i + v, order))
            .mul(&poch_finite(&Monomial::int_xq(-1, -1, 1), 4, i, order));
        closed_a = closed_a.add(&term);
    }
    closed_a = closed_a.mul(&inv);

    (brute, closed_a, g_closed_b(max_part, order))
}

/// The one-line closed form of `g_N(x, q)`:
/// `1/(q^2;q^2)_N sum_j x^j q^j [N choose j]_{q^2}`.
pub fn g_closed_b(max_part: i64, order: i64) -> QSeries {
    let inv = InvPochTable::new(Monomial::q_power(2), 2, order).get(max_part);
    let gauss2 = GaussTable::new(2);
    let mut sum = QSeries::zero(order);
    for j in 0..=max_part {
        let term = gauss2
            .get(max_part, j)
            .mul_monomial(&Monomial::int_xq(1, j, j))
            .truncate(order);
        sum = sum.add(&term);
    }
    sum.mul(&inv)
}

/// Check the two finite-sum forms of the Rogers--Szego polynomial:
/// `sum_j x^j [n choose j]_q = sum_r x^{2r} (-q/x; q^2)_r
///  (-x; q^2)_{ceil(n/2)-r} [floor(n/2) choose r]_{q^2}`,
/// compared as exact polynomials in `x` and `q`.
pub fn rogers_szego_check(n: i64, order: i64) -> bool {
    let (lhs, rhs) = rogers_szego_sides(n, order);
    lhs.agrees_with(&rhs)
}

/// The two finite-sum forms compared by [`rogers_szego_check`]. Both are
/// evaluated far enough to cover their full degree, so the comparison is an
/// exact polynomial identity regardless of `order`.
pub fn rogers_szego_sides(n: i64, order: i64) -> (QSeries, QSeries) {
    debug_assert!(n >= 0);
    // Both sides are q-polynomials of degree at most n^2 + n.
    let bound = order.max(n * n + n + 1);
    let gauss1 = GaussTable::new(1);
    let mut lhs = QSeries::zero(bound);
    for j in 0..=n {
        lhs = lhs.add(
            &gauss1
                .get(n, j)
                .mul_monomial(&Monomial::int_xq(1, j, 0))
                .truncate(bound),
        );
    }

    let gauss2 = GaussTable::new(2);
    let mut rhs = QSeries::zero(bound);
    for r in 0..=n / 2 {
        let term = gauss2
            .get(n / 2, r)
            .mul_monomial(&Monomial::int_xq(1, 2 * r, 0))
            .truncate(bound)
            .mul(&poch_finite(&Monomial::int_xq(-1, -1, 1), 2, r, bound))
            .mul(&poch_finite(&Monomial::int_xq(-1, 1, 0), 2, (n + 1) / 2 - r, bound));
        rhs = rhs.add(&term);
    }
    (lhs, rhs)
}

/// Degree bound used when comparing `B`/`g` forms as polynomials.
pub fn b_degree_bound(max_part: i64) -> i64 {
    binom2(max_part + 1).max(1)
}
