//! Property tests for the exact series kernel.

use proptest::prelude::*;
use rrverify_core::num::rat_frac;
use rrverify_core::pochhammer::jacobi_triple;
use rrverify_core::{Monomial, QSeries};

fn arb_series(order: i64) -> impl Strategy<Value = QSeries> {
    prop::collection::vec(
        ((-3i64..=6), (-2i64..=2), (-5i64..=5), (1i64..=3)),
        0..8,
    )
    .prop_map(move |terms| {
        let mut s = QSeries::zero(order);
        for (q_exp, x_exp, num, den) in terms {
            if num != 0 {
                s = s.add(&Monomial::new(rat_frac(num, den), x_exp, q_exp).to_series(order));
            }
        }
        s
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_commutes(a in arb_series(12), b in arb_series(12)) {
        prop_assert_eq!(a.add(&b), b.add(&a));
    }

    #[test]
    fn multiplication_commutes(a in arb_series(12), b in arb_series(12)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn multiplication_associates(a in arb_series(12), b in arb_series(12), c in arb_series(12)) {
        let lhs = a.mul(&b).mul(&c);
        let rhs = a.mul(&b.mul(&c));
        prop_assert!(lhs.agrees_with(&rhs), "{:?}", lhs.first_mismatch(&rhs));
    }

    #[test]
    fn multiplication_distributes(a in arb_series(12), b in arb_series(12), c in arb_series(12)) {
        let lhs = a.mul(&b.add(&c));
        let rhs = a.mul(&b).add(&a.mul(&c));
        prop_assert!(lhs.agrees_with(&rhs), "{:?}", lhs.first_mismatch(&rhs));
    }

    #[test]
    fn inverse_multiplies_back_to_one(tail in arb_series(14), lead_q in -2i64..=2, lead_x in -1i64..=1) {
        // Series of the form c x^j q^k (1 + higher terms) are invertible.
        // The raw tail reaches down to q^{-3}, so shift it four steps up to
        // keep it strictly above the lead.
        let lead = Monomial::new(rat_frac(2, 1), lead_x, lead_q);
        let shifted_tail = tail.mul_monomial(&Monomial::q_power(lead_q + 4)).truncate(14);
        let s = lead.to_series(14).add(&shifted_tail);
        let inv = s.invert().unwrap();
        let product = s.mul(&inv);
        prop_assert!(product.agrees_with(&QSeries::one(product.order())),
            "{:?}", product.first_mismatch(&QSeries::one(product.order())));
    }

    #[test]
    fn x_inversion_is_an_involution(a in arb_series(12)) {
        prop_assert_eq!(a.x_invert().x_invert(), a.clone());
    }

    #[test]
    fn q_negation_is_an_involution(a in arb_series(12)) {
        prop_assert_eq!(a.subst_q_negated().subst_q_negated(), a.clone());
    }

    #[test]
    fn parity_parts_partition_the_series(a in arb_series(12)) {
        prop_assert_eq!(a.parity_part(0).add(&a.parity_part(1)), a.clone());
    }

    #[test]
    fn triple_product_family(zc in -3i64..=3, zx in -2i64..=2, zq in -3i64..=4,
                             r in 1i64..=4, order in 0i64..=30) {
        prop_assume!(zc != 0);
        let z = Monomial::int_xq(zc, zx, zq);
        let (product, sum) = jacobi_triple(&z, r, order).unwrap();
        prop_assert!(product.agrees_with(&sum), "{:?}", product.first_mismatch(&sum));
    }
}
