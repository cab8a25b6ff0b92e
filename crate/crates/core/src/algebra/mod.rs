//! Exact arithmetic shared by every other module.

mod linalg;
mod partition;
mod poly;

pub use linalg::Matrix;
pub use partition::{partitions_of, Partition};
pub use poly::{mobius_substitute, UniPoly};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact rational numbers, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integral rational.
pub fn rat(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// The binomial coefficient `C(n, k)`.
///
/// Zero when `k < 0` or `k > n >= 0`. For negative `n` the usual extension
/// `C(n, k) = (-1)^k C(k - n - 1, k)` is used.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        let magnitude = binomial(k - n - 1, k);
        return if k % 2 == 0 { magnitude } else { -magnitude };
    }
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// `(-1)^e` as a rational.
pub(crate) fn sign(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(2, 0), BigInt::from(1));
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(5, -1), BigInt::from(0));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(30, 15), BigInt::from(155_117_520));
        // (1 + x)^-1 = 1 - x + x^2 - ...
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(-2, 2), BigInt::from(3));
    }

    #[test]
    fn pascal_rule() {
        for n in 1..20 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }
}

#[cfg(test)]
mod rational_props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn field_operations_stay_reduced(an in -1000i64..1000, ad in 1i64..1000, bn in -1000i64..1000, bd in 1i64..1000) {
            let a = Rational::new(an.into(), ad.into());
            let b = Rational::new(bn.into(), bd.into());
            prop_assume!(!b.is_zero());
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            for r in [&a + &b, &a * &b, &a / &b] {
                prop_assert!(r.denom() > &BigInt::zero());
                prop_assert!(num_integer::Integer::gcd(r.numer(), r.denom()).is_one());
            }
        }
    }
}
