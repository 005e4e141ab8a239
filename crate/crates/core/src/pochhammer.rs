//! q-Pochhammer products and named infinite products.
//!
//! Provides `(a; q^r)_n` and `(a; q^r)_infinity` for monomial arguments `a`,
//! the two sides of Jacobi's triple product, and the Ariki--Mathas infinite
//! product whose coefficients count the restricted multipartition families.
//!
//! Truncation of infinite products is sound for Laurent monomial arguments:
//! a factor is included as long as skipping it could still disturb a tracked
//! coefficient, accounting for the (finitely many) factors that contribute
//! negative exponents.

use crate::error::{Error, Result};
use crate::series::{Monomial, QSeries};

/// `(a; q^r)_n = prod_{i=0}^{n-1} (1 - a q^{r i})` as an exact polynomial,
/// tracked to `order`.
///
/// `r` must be positive and `n` nonnegative; `n = 0` gives the empty product 1.
pub fn poch_finite(a: &Monomial, r: i64, n: i64, order: i64) -> QSeries {
    debug_assert!(r >= 1, "Pochhammer step must be positive");
    debug_assert!(n >= 0, "finite Pochhammer needs n >= 0");
    let mut acc = QSeries::one(order);
    for i in 0..n {
        acc = acc.mul(&binomial_factor(a, r * i, order));
    }
    acc
}

/// `(a; q^r)_infinity = prod_{i>=0} (1 - a q^{r i})` truncated at `order`.
///
/// Fails with [`Error::DivergentProduct`] when `r <= 0`, since then infinitely
/// many factors would disturb every tracked coefficient.
pub fn poch_infinite(a: &Monomial, r: i64, order: i64) -> Result<QSeries> {
    if r <= 0 {
        return Err(Error::DivergentProduct);
    }
    // Sum of the negative exponents any subset of factors can contribute;
    // factors above `order - neg` cannot reach the window even combined with
    // all of them.
    let mut neg = 0;
    let mut i = 0;
    while a.q_exp + r * i < 0 {
        neg += a.q_exp + r * i;
        i += 1;
    }
    let mut acc = QSeries::one(order);
    let mut i = 0;
    while a.q_exp + r * i <= order - neg {
        acc = acc.mul(&binomial_factor(a, r * i, order));
        i += 1;
    }
    Ok(acc)
}

/// `(a1, ..., ak; q^r)_infinity`.
pub fn poch_infinite_list(args: &[Monomial], r: i64, order: i64) -> Result<QSeries> {
    let mut acc = QSeries::one(order);
    for a in args {
        acc = acc.mul(&poch_infinite(a, r, order)?);
    }
    Ok(acc)
}

fn binomial_factor(a: &Monomial, q_shift: i64, order: i64) -> QSeries {
    let term = Monomial::new(-a.coeff.clone(), a.x_exp, a.q_exp + q_shift);
    QSeries::one(order).add(&term.to_series(order))
}

/// Jacobi's triple product, both sides:
/// `(q^r, z, q^r/z; q^r)_infinity = sum_n (-1)^n z^n q^{r n(n-1)/2}`.
///
/// Returns `(product form, bilateral sum form)`, each exact to `order`.
pub fn jacobi_triple(z: &Monomial, r: i64, order: i64) -> Result<(QSeries, QSeries)> {
    if r <= 0 {
        return Err(Error::DivergentProduct);
    }
    let product = poch_infinite_list(
        &[
            Monomial::q_power(r),
            z.clone(),
            Monomial::new(rat_one() / &z.coeff, -z.x_exp, r - z.q_exp),
        ],
        r,
        order,
    )?;

    // Term n has exponent E(n) = n z.q_exp + r n(n-1)/2, a parabola in n
    // opening upward; sweep outward from its vertex in both directions.
    let expo = |n: i64| n * z.q_exp + r * n * (n - 1) / 2;
    let vertex = {
        // Minimize E over the reals at n = 1/2 - z.q_exp / r; round to the
        // nearby integers and pick the smaller value.
        let approx = (r - 2 * z.q_exp).div_euclid(2 * r);
        (approx - 1..=approx + 1).min_by_key(|&n| expo(n)).unwrap()
    };
    let mut sum = QSeries::zero(order);
    let mut min_seen = i64::MAX;
    let push = |sum: &mut QSeries, n: i64, min_seen: &mut i64| {
        let e = expo(n);
        if e <= order {
            *min_seen = (*min_seen).min(e);
            let sign = if n.rem_euclid(2) == 0 { 1 } else { -1 };
            let coeff = pow_rational(&z.coeff, n) * crate::num::rat(sign);
            let term = Monomial::new(coeff, n * z.x_exp, e);
            *sum = sum.add(&term.to_series(order));
        }
        e <= order
    };
    let mut n = vertex;
    while push(&mut sum, n, &mut min_seen) {
        n += 1;
    }
    n = vertex - 1;
    while push(&mut sum, n, &mut min_seen) {
        n -= 1;
    }
    Ok((product, sum))
}

fn rat_one() -> crate::num::Rational {
    crate::num::rat(1)
}

fn pow_rational(c: &crate::num::Rational, n: i64) -> crate::num::Rational {
    use num_traits::One;
    let mut acc = crate::num::Rational::one();
    let base = if n >= 0 {
        c.clone()
    } else {
        rat_one() / c
    };
    for _ in 0..n.abs() {
        acc *= &base;
    }
    acc
}

/// The Ariki--Mathas infinite product
///
/// ```text
/// prod_{n>=1} (1-q^{(m+2)n}) (1-q^{(m+2)(n-1)+(a+1)}) (1-q^{(m+2)n-(a+1)})
///           / ((1-q^n)(1-q^{2n-1}))
/// ```
///
/// i.e. `(q^{a+1}, q^{m+1-a}, q^{m+2}; q^{m+2})_inf / ((q;q)_inf (q;q^2)_inf)`,
/// whose coefficient of `q^n` counts the restricted multipartition family at n.
pub fn product_ariki_mathas(a: i64, m: i64, order: i64) -> Result<QSeries> {
    if m < 1 || a < 0 || a > m {
        return Err(Error::BadParameters("need m >= 1 and 0 <= a <= m"));
    }
    let step = m + 2;
    let numerator = poch_infinite_list(
        &[
            Monomial::q_power(a + 1),
            Monomial::q_power(m + 1 - a),
            Monomial::q_power(step),
        ],
        step,
        order,
    )?;
    let euler = poch_infinite(&Monomial::q_power(1), 1, order)?;
    let odd = poch_infinite(&Monomial::q_power(1), 2, order)?;
    Ok(numerator
        .mul(&euler.invert().expect("(q;q)_inf is invertible"))
        .mul(&odd.invert().expect("(q;q^2)_inf is invertible")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;
    use crate::series::Monomial;
    use alloc::vec::Vec;

    /// Independent oracle: expand prod_{i=0}^{n-1} (1 - a q^{r i}) by summing
    /// over all subsets of factors.
    fn subset_product_oracle(a: &Monomial, r: i64, n: i64, order: i64) -> QSeries {
        let mut acc = QSeries::zero(order);
        for mask in 0u32..(1 << n) {
            let picked: Vec<i64> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let q_exp: i64 = picked.iter().map(|&i| a.q_exp + r * i).sum();
            let x_exp = a.x_exp * picked.len() as i64;
            let mut coeff = rat(1);
            for _ in &picked {
                coeff *= -a.coeff.clone();
            }
            if q_exp <= order {
                acc = acc.add(&Monomial::new(coeff, x_exp, q_exp).to_series(order));
            }
        }
        acc
    }

    #[test]
    fn empty_product_is_one() {
        assert_eq!(poch_finite(&Monomial::q_power(1), 1, 0, 6), QSeries::one(6));
    }

    #[test]
    fn q_pochhammer_two_factors() {
        // (q;q)_2 = (1-q)(1-q^2) = 1 - q - q^2 + q^3
        let p = poch_finite(&Monomial::q_power(1), 1, 2, 6);
        assert_eq!(p.coeff_xq(0, 0), rat(1));
        assert_eq!(p.coeff_xq(1, 0), rat(-1));
        assert_eq!(p.coeff_xq(2, 0), rat(-1));
        assert_eq!(p.coeff_xq(3, 0), rat(1));
        assert!(p.coeff(4).is_zero());
    }

    #[test]
    fn negative_argument_step_two() {
        // (-q;q^2)_3 = (1+q)(1+q^3)(1+q^5)
        let a = Monomial::neg_q_power(1);
        let p = poch_finite(&a, 2, 3, 12);
        assert_eq!(p, subset_product_oracle(&a, 2, 3, 12));
        assert_eq!(p.coeff_xq(9, 0), rat(1));
    }

    #[test]
    fn euler_product_pentagonal_numbers() {
        // (q;q)_inf = 1 - q - q^2 + q^5 + q^7 - q^12 - ...
        let p = poch_infinite(&Monomial::q_power(1), 1, 15).unwrap();
        let expected = [
            (0, 1),
            (1, -1),
            (2, -1),
            (5, 1),
            (7, 1),
            (12, -1),
            (15, -1),
        ];
        for (e, c) in expected {
            assert_eq!(p.coeff_xq(e, 0), rat(c), "exponent {e}");
        }
        for e in [3, 4, 6, 8, 9, 10, 11, 13, 14] {
            assert!(p.coeff(e).is_zero(), "exponent {e}");
        }
    }

    #[test]
    fn infinite_product_at_order_zero() {
        let p = poch_infinite(&Monomial::q_power(2), 2, 0).unwrap();
        assert_eq!(p, QSeries::one(0));
    }

    #[test]
    fn infinite_matches_finite_within_window() {
        // (-x; q^2)_inf to order 4 is (1+x)(1+x q^2)(1+x q^4).
        let a = Monomial::int_xq(-1, 1, 0);
        let inf = poch_infinite(&a, 2, 4).unwrap();
        let fin = subset_product_oracle(&a, 2, 3, 4);
        assert!(inf.agrees_with(&fin));
    }

    #[test]
    fn divergent_step_rejected() {
        assert_eq!(
            poch_infinite(&Monomial::q_power(1), 0, 5),
            Err(Error::DivergentProduct)
        );
        assert!(jacobi_triple(&Monomial::q_power(1), -1, 5).is_err());
    }

    #[test]
    fn tail_consistency() {
        // (a;q^r)_inf = (a;q^r)_n * (a q^{rn}; q^r)_inf for n <= 6.
        let cases = [
            (Monomial::q_power(1), 1),
            (Monomial::neg_q_power(1), 2),
            (Monomial::int_xq(1, 1, 2), 3),
        ];
        for (a, r) in cases {
            let inf = poch_infinite(&a, r, 20).unwrap();
            for n in 0..=6 {
                let head = poch_finite(&a, r, n, 20);
                let shifted = Monomial::new(a.coeff.clone(), a.x_exp, a.q_exp + r * n);
                let tail = poch_infinite(&shifted, r, 20).unwrap();
                assert!(
                    inf.agrees_with(&head.mul(&tail)),
                    "tail consistency failed at n = {n}"
                );
            }
        }
    }

    #[test]
    fn triple_product_sum_equals_product() {
        for (z, r) in [
            (Monomial::neg_q_power(1), 1),
            (Monomial::int_xq(1, 1, 0), 2),
            (Monomial::int_xq(1, -1, 2), 2),
            (Monomial::int_xq(-1, 2, 3), 4),
        ] {
            let (product, sum) = jacobi_triple(&z, r, 20).unwrap();
            assert!(
                product.agrees_with(&sum),
                "triple product mismatch for z = {z:?}, r = {r}: {:?}",
                product.first_mismatch(&sum)
            );
        }
    }

    #[test]
    fn triple_product_sum_reads_off_for_z_x() {
        // z = x, r = 2: sum_n (-1)^n x^n q^{2 binom(n,2)}.
        let (_, sum) = jacobi_triple(&Monomial::int_xq(1, 1, 0), 2, 12).unwrap();
        assert_eq!(sum.coeff_xq(0, 0), rat(1));
        assert_eq!(sum.coeff_xq(0, 1), rat(-1));
        assert_eq!(sum.coeff_xq(2, 2), rat(1));
        assert_eq!(sum.coeff_xq(2, -1), rat(-1));
        assert_eq!(sum.coeff_xq(6, 3), rat(-1));
        assert_eq!(sum.coeff_xq(6, -2), rat(1));
    }

    /// Brute-force count of partitions of `n` into distinct parts.
    fn strict_partition_count(n: i64) -> i64 {
        fn rec(n: i64, max: i64) -> i64 {
            if n == 0 {
                return 1;
            }
            (1..=max.min(n)).map(|p| rec(n - p, p - 1)).sum()
        }
        rec(n, n)
    }

    #[test]
    fn ariki_mathas_m1_counts_strict_partitions() {
        let p = product_ariki_mathas(1, 1, 10).unwrap();
        for n in 0..=10 {
            assert_eq!(p.coeff_xq(n, 0), rat(strict_partition_count(n)), "n = {n}");
        }
    }

    #[test]
    fn ariki_mathas_order_zero_is_one() {
        for m in 1..=4 {
            for a in 0..=m {
                assert_eq!(product_ariki_mathas(a, m, 0).unwrap(), QSeries::one(0));
            }
        }
    }

    #[test]
    fn ariki_mathas_a_symmetry() {
        for m in 1..=5 {
            for a in 0..=m {
                let lhs = product_ariki_mathas(a, m, 24).unwrap();
                let rhs = product_ariki_mathas(m - a, m, 24).unwrap();
                assert!(lhs.agrees_with(&rhs), "a = {a}, m = {m}");
            }
        }
    }

    #[test]
    fn ariki_mathas_coefficients_are_counts() {
        use num_traits::Signed;
        for m in 1..=4 {
            for a in 0..=m {
                let p = product_ariki_mathas(a, m, 30).unwrap();
                for (q_exp, x_exp, c) in p.terms() {
                    assert_eq!(x_exp, 0);
                    assert!(
                        crate::num::is_integer(c) && !c.is_negative(),
                        "a={a} m={m}: coefficient {c} at q^{q_exp}"
                    );
                }
            }
        }
    }

    #[test]
    fn ariki_mathas_rejects_bad_parameters() {
        assert!(product_ariki_mathas(3, 2, 5).is_err());
        assert!(product_ariki_mathas(-1, 2, 5).is_err());
        assert!(product_ariki_mathas(0, 0, 5).is_err());
    }
}
