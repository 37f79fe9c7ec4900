//! Exact rational scalars and the generalized binomial coefficient.
//!
//! Every ring in this crate is built over [`Rational`], an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};

/// Arbitrary-precision rational number, always reduced, denominator positive.
pub type Rational = BigRational;

/// Shorthand for `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Integer power of a rational with a possibly negative exponent.
/// Panics when raising zero to a negative power.
pub fn rat_pow(base: &Rational, exp: i64) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    let positive = if exp > 0 {
        base.clone()
    } else {
        assert!(!base.is_zero(), "zero cannot be raised to a negative power");
        base.recip()
    };
    let mut acc = Rational::one();
    let mut sq = positive;
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

/// Generalized binomial coefficient `alpha` over `k`, defined through the
/// falling factorial: `alpha (alpha-1) ... (alpha-k+1) / k!`.
///
/// For a non-negative integer `alpha < k` the product contains a zero factor
/// and the result is 0, matching the combinatorial convention.
pub fn gen_binomial(alpha: &Rational, k: u32) -> Rational {
    let mut num = Rational::one();
    for j in 0..k {
        num *= alpha - rat_int(j as i64);
    }
    num / Rational::from_integer(factorial(k))
}

/// Binomial coefficient with an integer (possibly negative) upper argument.
pub fn binomial(n: i64, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    gen_binomial(&rat_int(n), k as u32)
}

/// Trial-division primality test for desk-scale inputs.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The primes in `[lo, hi]`, ascending.
pub fn primes_in(lo: u32, hi: u32) -> Vec<u32> {
    (lo..=hi).filter(|&n| is_prime(n)).collect()
}

/// The first `count` primes strictly greater than `above`.
pub fn primes_above(above: u32, count: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(count);
    let mut n = above + 1;
    while out.len() < count {
        if is_prime(n) {
            out.push(n);
        }
        n += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gen_binomial_ordinary() {
        assert_eq!(gen_binomial(&rat_int(7), 4), rat_int(35));
    }

    #[test]
    fn gen_binomial_negative_upper() {
        // (-2)(-3)(-4)(-5)/24 = 5
        assert_eq!(gen_binomial(&rat_int(-2), 4), rat_int(5));
    }

    #[test]
    fn gen_binomial_half() {
        assert_eq!(gen_binomial(&rat(1, 2), 2), rat(-1, 8));
    }

    #[test]
    fn gen_binomial_vanishes_on_short_integer_upper() {
        assert_eq!(gen_binomial(&rat_int(3), 5), Rational::zero());
        assert_eq!(gen_binomial(&rat_int(0), 1), Rational::zero());
    }

    #[test]
    fn gen_binomial_matches_product_formula() {
        for n in 0..=20i64 {
            let mut pascal = rat_int(1);
            for k in 0..=n {
                assert_eq!(gen_binomial(&rat_int(n), k as u32), pascal);
                // next entry of the row via n!/(k!(n-k)!) ratio
                pascal = pascal * rat_int(n - k) / rat_int(k + 1);
            }
        }
    }

    #[test]
    fn rat_pow_negative() {
        assert_eq!(rat_pow(&rat(2, 3), -2), rat(9, 4));
        assert_eq!(rat_pow(&rat(5, 1), 0), rat_int(1));
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(13));
        assert!(!is_prime(1));
        assert!(!is_prime(91));
        assert_eq!(primes_in(3, 13), vec![3, 5, 7, 11, 13]);
        assert_eq!(primes_above(3, 2), vec![5, 7]);
    }
}
