//! Dense univariate polynomials over [`Rational`].
//!
//! The variable is a role, not a type: the same representation serves
//! polynomials in q, x, z, lambda and p. Coefficients are stored by
//! ascending exponent with trailing zeros stripped, so equal polynomials
//! have equal representations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::traits::{One, Zero};

use crate::rational::{gen_binomial, rat_int, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The variable itself (exponent 1, coefficient 1).
    pub fn var() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, exp: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); exp + 1];
        coeffs[exp] = c;
        Poly { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of the given exponent (zero beyond the degree).
    pub fn coeff(&self, exp: usize) -> Rational {
        self.coeffs.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides every coefficient by the leading one.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.leading_coeff().recip())
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut acc = Poly::one();
        let mut sq = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitutes another polynomial for the variable (Horner scheme).
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Coefficient of `(z - a)^j` in the exact re-expansion of `self` about `a`,
    /// obtained by substituting `z -> w + a`.
    pub fn coeff_shifted(&self, a: &Rational, j: usize) -> Rational {
        let shifted = self.compose(&Poly::from_coeffs(vec![a.clone(), Rational::one()]));
        shifted.coeff(j)
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `self = quotient * divisor + remainder` and `deg r < deg divisor`.
    /// Panics on a zero divisor.
    pub fn divmod(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let lead_inv = divisor.leading_coeff().recip();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Rational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] * &lead_inv;
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                let idx = i - dd + k;
                rem[idx] = &rem[idx] - &(dc * &q);
            }
            quo[i - dd] = q;
        }
        (Poly::from_coeffs(quo), Poly::from_coeffs(rem))
    }

    /// Monic greatest common divisor.
    ///
    /// Runs a primitive polynomial remainder sequence over the integers
    /// after clearing denominators: taking the content out at every step
    /// keeps coefficients near resultant size, where the naive Euclidean
    /// loop over Q blows up on fraction growth.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let mut a = int_primitive(self.to_integer_coeffs());
        let mut b = int_primitive(other.to_integer_coeffs());
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = int_primitive(int_prem(&a, &b));
            a = b;
            b = r;
        }
        Poly::from_coeffs(a.into_iter().map(Rational::from_integer).collect()).monic()
    }

    /// Integer coefficients after multiplying by the common denominator.
    fn to_integer_coeffs(&self) -> Vec<num::BigInt> {
        use num::Integer;
        let mut lcm = num::BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        self.coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect()
    }

    /// Exact division; panics if the divisor does not divide evenly.
    pub fn div_exact(&self, divisor: &Poly) -> Poly {
        if divisor.is_one() {
            return self.clone();
        }
        let (q, r) = self.divmod(divisor);
        assert!(r.is_zero(), "div_exact with a non-dividing divisor");
        q
    }

    /// Extended Euclid: returns `(g, u, v)` with `u*self + v*other = g`,
    /// `g` the monic gcd. Panics when both inputs are zero.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        assert!(
            !(self.is_zero() && other.is_zero()),
            "gcd of two zero polynomials"
        );
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let (mut u0, mut u1) = (Poly::one(), Poly::zero());
        let (mut v0, mut v1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1);
            let u = &u0 - &(&q * &u1);
            let v = &v0 - &(&q * &v1);
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u;
            v0 = v1;
            v1 = v;
        }
        let lc_inv = r0.leading_coeff().recip();
        (r0.scale(&lc_inv), u0.scale(&lc_inv), v0.scale(&lc_inv))
    }

    /// Multiplies by x^exp (shifts every exponent up).
    pub fn mul_xpow(&self, exp: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); exp];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// `(1 + c*x)^e` truncated at `order`, for any integer exponent `e`.
    pub fn binomial_series(c: &Rational, e: i64, order: usize) -> Poly {
        let alpha = rat_int(e);
        let coeffs = (0..=order)
            .map(|j| gen_binomial(&alpha, j as u32) * crate::rational::rat_pow(c, j as i64))
            .collect();
        Poly::from_coeffs(coeffs)
    }
}

/// Divides out the integer content and normalizes the leading sign.
fn int_primitive(mut v: Vec<num::BigInt>) -> Vec<num::BigInt> {
    use num::Integer;
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut content = num::BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if v.last().unwrap().sign() == num::bigint::Sign::Minus {
        content = -content;
    }
    for c in &mut v {
        *c = &*c / &content;
    }
    v
}

/// Pseudo-remainder of integer polynomials: eliminates the leading term of
/// `a` against `b` repeatedly, scaling `a` by lc(b) as needed so the
/// arithmetic stays in Z. Requires `b` nonzero.
fn int_prem(a: &[num::BigInt], b: &[num::BigInt]) -> Vec<num::BigInt> {
    let db = b.len() - 1;
    let lead_b = &b[db];
    let mut r: Vec<num::BigInt> = a.to_vec();
    while r.len() > db {
        let lead_r = r.last().unwrap().clone();
        let dr = r.len() - 1;
        if lead_r.is_zero() {
            r.pop();
            continue;
        }
        for c in r.iter_mut() {
            *c = &*c * lead_b;
        }
        for (k, bc) in b.iter().enumerate() {
            let idx = dr - db + k;
            r[idx] = &r[idx] - &(bc * &lead_r);
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

/// Exact Lagrange interpolation through distinct nodes `(x_i, y_i)`.
pub fn lagrange_interpolate(nodes: &[(Rational, Rational)]) -> Poly {
    let mut result = Poly::zero();
    for (i, (xi, yi)) in nodes.iter().enumerate() {
        let mut basis = Poly::one();
        let mut denom = Rational::one();
        for (j, (xj, _)) in nodes.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = &basis * &Poly::from_coeffs(vec![-xj.clone(), Rational::one()]);
            denom *= xi - xj;
        }
        result = &result + &basis.scale(&(yi / &denom));
    }
    result
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Poly {
    /// Exact coefficient list, lowest degree first: `[c0, c1, ...]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    #[test]
    fn divmod_long_division() {
        // (q^2 + q + 1) / (q + 1) = q remainder 1
        let a = Poly::from_ints(&[1, 1, 1]);
        let b = Poly::from_ints(&[1, 1]);
        let (q, r) = a.divmod(&b);
        assert_eq!(q, Poly::from_ints(&[0, 1]));
        assert_eq!(r, Poly::one());
    }

    #[test]
    fn divmod_zero_dividend() {
        let b = Poly::from_ints(&[1, 1]);
        let (q, r) = Poly::zero().divmod(&b);
        assert!(q.is_zero());
        assert!(r.is_zero());
    }

    #[test]
    fn divmod_identity_quotient() {
        let b = Poly::from_ints(&[1, 1]);
        let (q, r) = b.divmod(&b);
        assert_eq!(q, Poly::one());
        assert!(r.is_zero());
    }

    #[test]
    fn ext_gcd_coprime_bezout() {
        let a = Poly::from_ints(&[1, 1]);
        let b = Poly::from_ints(&[1, 1, 1]);
        let (g, u, v) = a.ext_gcd(&b);
        assert_eq!(g, Poly::one());
        assert_eq!(&(&u * &a) + &(&v * &b), Poly::one());
    }

    #[test]
    fn ext_gcd_common_factor() {
        let a = Poly::from_ints(&[-1, 0, 1]); // q^2 - 1
        let b = Poly::from_ints(&[-1, 1]); // q - 1
        let (g, _, _) = a.ext_gcd(&b);
        assert_eq!(g, Poly::from_ints(&[-1, 1]));
    }

    #[test]
    fn ext_gcd_with_zero() {
        let a = Poly::from_ints(&[2, 4]);
        let (g, u, v) = a.ext_gcd(&Poly::zero());
        assert_eq!(g, Poly::from_coeffs(vec![rat(1, 2), rat_int(1)]));
        assert_eq!(u, Poly::constant(rat(1, 4)));
        assert!(v.is_zero());
    }

    #[test]
    fn taylor_shift_coefficients() {
        // z^3 about z = 1: (1 + w)^3, coefficient of w^2 is 3
        let z3 = Poly::monomial(rat_int(1), 3);
        assert_eq!(z3.coeff_shifted(&rat_int(1), 2), rat_int(3));
        assert_eq!(z3.coeff_shifted(&rat_int(1), 4), rat_int(0));
    }

    #[test]
    fn lagrange_recovers_quadratic() {
        // y = x^2 - 1 through 3 nodes
        let nodes: Vec<_> = [2i64, 3, 5]
            .iter()
            .map(|&x| (rat_int(x), rat_int(x * x - 1)))
            .collect();
        assert_eq!(lagrange_interpolate(&nodes), Poly::from_ints(&[-1, 0, 1]));
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec((-9i64..=9, 1i64..=9), 0..=max_deg + 1)
            .prop_map(|cs| Poly::from_coeffs(cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn divmod_reconstructs(a in arb_poly(12), b in arb_poly(12)) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.divmod(&b);
            prop_assert_eq!(&(&q * &b) + &r, a);
            if !r.is_zero() {
                prop_assert!(r.degree().unwrap() < b.degree().unwrap());
            }
        }

        #[test]
        fn ext_gcd_bezout_holds(a in arb_poly(8), b in arb_poly(8)) {
            prop_assume!(!a.is_zero() || !b.is_zero());
            let (g, u, v) = a.ext_gcd(&b);
            prop_assert_eq!(&(&u * &a) + &(&v * &b), g.clone());
            // g divides both inputs
            prop_assert!(a.divmod(&g).1.is_zero());
            prop_assert!(b.divmod(&g).1.is_zero());
            prop_assert!(g.leading_coeff().is_one());
        }

        #[test]
        fn mul_commutes_and_degree_adds(a in arb_poly(6), b in arb_poly(6)) {
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() && !b.is_zero() {
                prop_assert_eq!(
                    (&a * &b).degree().unwrap(),
                    a.degree().unwrap() + b.degree().unwrap()
                );
            }
        }
    }
}
