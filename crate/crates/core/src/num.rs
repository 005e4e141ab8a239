//! Exact rational coefficients.
//!
//! All arithmetic in this crate is exact: coefficients are arbitrary-precision
//! rationals, always stored in lowest terms with positive denominator (the
//! [`num_rational::Ratio`] invariants). Counting identities are asserted
//! integer-valued as a post-check rather than forced by the type, since a few
//! closed forms carry genuine factors of 1/2.

use num_bigint::BigInt;

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n / d`. Panics if `d == 0`.
pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// True if the rational is an integer (denominator 1 after reduction).
pub fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn reduced_with_positive_denominator() {
        let r = rat_frac(4, -6);
        assert_eq!(r, rat_frac(-2, 3));
        assert_eq!(*r.denom(), BigInt::from(3));
    }

    #[test]
    fn integer_detection() {
        assert!(is_integer(&rat(7)));
        assert!(is_integer(&rat_frac(6, 3)));
        assert!(!is_integer(&rat_frac(1, 2)));
        assert!(is_integer(&Rational::zero()));
    }
}
