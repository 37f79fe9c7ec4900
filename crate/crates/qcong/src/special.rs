//! Classical sequences: Bernoulli numbers of both kinds, Stirling numbers of
//! the first kind, degenerate Bernoulli polynomials, and the coefficient
//! sequence K_n(p) of the expansion of p(z-1)/(z^p - 1) about z = 1.
//!
//! K_n(p) is computed by three independent routes (generating function,
//! explicit Bernoulli/Stirling formula, degenerate Bernoulli evaluation);
//! their agreement is a standing test.

use num::bigint::BigInt;
use num::traits::One;

use crate::poly::{lagrange_interpolate, Poly};
use crate::rational::{factorial, primes_above, rat_int, rat_pow, Rational};
use crate::series::Series;

/// Truncation orders carry one guard coefficient beyond what is read back.
fn guarded(n: u32) -> usize {
    n as usize + 2
}

/// Ordinary Bernoulli number B_n (B_1 = -1/2), from inverting (e^x - 1)/x.
pub fn bernoulli(n: u32) -> Rational {
    let inv = Series::exp_minus_one_over_x(guarded(n)).invert();
    inv.coeff(n as usize).as_constant().unwrap() * Rational::from_integer(factorial(n))
}

/// Bernoulli number of the second kind b_n, from inverting ln(1+x)/x.
pub fn bernoulli2(n: u32) -> Rational {
    let inv = Series::log1p_over_x(guarded(n)).invert();
    inv.coeff(n as usize).as_constant().unwrap() * Rational::from_integer(factorial(n))
}

/// Signed Stirling number of the first kind s(n, j), read off the product
/// x(x-1)...(x-n+1). Panics unless 0 <= j <= n.
pub fn stirling1(n: u32, j: u32) -> BigInt {
    assert!(j <= n, "stirling1 index out of range: j={j} > n={n}");
    let mut prod = Poly::one();
    for i in 0..n {
        prod = &prod * &Poly::from_coeffs(vec![rat_int(-(i as i64)), Rational::one()]);
    }
    let c = prod.coeff(j as usize);
    assert!(c.denom().is_one());
    c.numer().clone()
}

/// Degenerate Bernoulli polynomial with its index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenBernoulli {
    pub n: u32,
    /// beta_n as an exact polynomial in lambda.
    pub value: Poly,
}

/// beta_n(lambda), the coefficient polynomials of x/((1+lambda x)^{1/lambda} - 1).
///
/// (1+lambda x)^{1/lambda} is exp(ln(1+lambda x)/lambda), whose inner series
/// has coefficient (-lambda)^{k-1}/k at x^k: a polynomial in lambda, so the
/// whole computation stays in bivariate exact arithmetic.
pub fn degen_bernoulli(n: u32) -> DegenBernoulli {
    let order = guarded(n);
    // L = ln(1+lambda x)/lambda: coefficient of x^k is (-1)^{k-1} lambda^{k-1} / k
    let mut l_coeffs = vec![Poly::zero()];
    for k in 1..=order {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        l_coeffs.push(Poly::monomial(
            Rational::new(sign.into(), (k as i64).into()),
            k - 1,
        ));
    }
    let l = Series::new(l_coeffs, order);
    // (1+lambda x)^{1/lambda} - 1 = exp(L) - 1, then divide by x and invert
    let mut e = l.exp();
    e = Series::new(
        {
            let mut cs = e.coeffs().to_vec();
            cs[0] = Poly::zero();
            cs
        },
        order,
    );
    let value = e.shift_down().invert().coeff(n as usize).clone();
    DegenBernoulli {
        n,
        value: value.scale(&Rational::from_integer(factorial(n))),
    }
}

/// K_n(p) from the defining expansion: substituting z = 1 + w turns
/// p(z-1)/(z^p - 1) into p w / ((1+w)^p - 1), and K_n is the w^n
/// coefficient up to the alternating sign.
pub fn k_gf(n: u32, p: u32) -> Rational {
    let order = guarded(n);
    // ((1+w)^p - 1)/w has w^k coefficient C(p, k+1)
    let den = Series::from_rationals(
        (0..=order)
            .map(|k| crate::rational::binomial(p as i64, k as i64 + 1))
            .collect(),
        order,
    );
    let coeff = den.invert().coeff(n as usize).as_constant().unwrap() * rat_int(p as i64);
    let sign = if n % 2 == 1 { 1 } else { -1 };
    coeff * rat_int(sign)
}

/// K_n(p) for n >= 2 from the explicit formula through b_n, B_{2j} and
/// Stirling numbers of the first kind.
pub fn k_howard(n: u32, p: u32) -> Rational {
    assert!(n >= 2, "the explicit formula starts at n = 2");
    let mut acc = bernoulli2(n) / rat_int(n as i64);
    for j in 1..=n / 2 {
        acc += bernoulli(2 * j) / rat_int(2 * j as i64)
            * Rational::from_integer(stirling1(n - 1, 2 * j - 1))
            * rat_pow(&rat_int(p as i64), 2 * j as i64);
    }
    let sign = if n % 2 == 1 { 1 } else { -1 };
    acc * rat_int(sign) / Rational::from_integer(factorial(n - 1))
}

/// K_n(p) through the degenerate Bernoulli polynomial:
/// (-1)^{n-1} p^n beta_n(1/p) / n!.
pub fn k_via_degen(n: u32, p: u32) -> Rational {
    let beta = degen_bernoulli(n);
    let sign = if n % 2 == 1 { 1 } else { -1 };
    rat_int(sign) * rat_pow(&rat_int(p as i64), n as i64)
        * beta.value.eval(&Rational::new(1.into(), (p as i64).into()))
        / Rational::from_integer(factorial(n))
}

/// A computed K-value with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KValue {
    pub n: u32,
    pub p: u32,
    pub value: Rational,
}

impl KValue {
    pub fn new(n: u32, p: u32) -> Self {
        KValue {
            n,
            p,
            value: k_gf(n, p),
        }
    }
}

/// K_n as an exact polynomial in u = p^2 (defined for n >= 2), interpolated
/// from floor(n/2) + 2 prime nodes: one more node than the degree bound, so
/// the extra node doubles as a consistency check.
pub fn k_as_polynomial_in_p_squared(n: u32) -> Poly {
    assert!(n >= 2);
    let count = (n / 2 + 2) as usize;
    let primes = primes_above(2, count);
    let nodes: Vec<(Rational, Rational)> = primes
        .iter()
        .map(|&p| (rat_int((p as i64) * (p as i64)), k_gf(n, p)))
        .collect();
    let poly = lagrange_interpolate(&nodes[..count - 1]);
    let (extra_x, extra_y) = &nodes[count - 1];
    assert_eq!(
        &poly.eval(extra_x),
        extra_y,
        "K_{n} is not a polynomial of degree {} in p^2",
        n / 2
    );
    poly
}
