//! Exact integer and rational helpers shared by the other modules.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision exact rational.
pub type Rational = BigRational;

/// Binomial coefficient `C(n, k)`, zero when `k < 0`, `n < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflows u64")
}

/// Binomial coefficient `C(n, k)` for a non-negative integer `n`, as a big integer.
pub fn binomial_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn rational_from_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rational_from_big(n: BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The value of `r` as a `u64`, if it is a non-negative integer that fits.
pub fn as_count(r: &Rational) -> Option<u64> {
    if !r.is_integer() {
        return None;
    }
    u64::try_from(r.to_integer()).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pascal_rule() {
        for n in 1..30i64 {
            for k in 1..n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
                assert_eq!(
                    BigUint::from(binomial(n, k)),
                    binomial_big(n as u64, k as u64)
                );
            }
        }
    }

    #[test]
    fn out_of_range_binomials_vanish() {
        assert_eq!(binomial(-1, 0), 0);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(3, -1), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn counts_from_rationals() {
        assert_eq!(as_count(&rational_from_int(7)), Some(7));
        assert_eq!(as_count(&rational_from_int(-1)), None);
        assert_eq!(as_count(&Rational::new(1.into(), 2.into())), None);
    }
}
