//! Reduced fractions of two polynomials: elements of the field Q(q).
//!
//! Every constructor normalizes eagerly (gcd-reduce, monic denominator), so
//! two equal rational functions always have identical components. Nested-sum
//! accumulation would blow up intermediate sizes otherwise.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::traits::{One, Zero};

use crate::poly::Poly;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Builds `num/den` in canonical form. Panics when `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, _) = num.divmod(&g);
        let (den, _) = den.divmod(&g);
        let lc_inv = den.leading_coeff().recip();
        RatFunc {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    /// `q^e` for any integer exponent, negative exponents landing in the denominator.
    pub fn q_pow(e: i64) -> Self {
        if e >= 0 {
            RatFunc::from_poly(Poly::monomial(Rational::one(), e as usize))
        } else {
            RatFunc {
                num: Poly::one(),
                den: Poly::monomial(Rational::one(), (-e) as usize),
            }
        }
    }

    /// Builds from parts already known to be coprime; only fixes the zero
    /// case and the monic-denominator normalization.
    fn from_reduced(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let lc_inv = den.leading_coeff().recip();
        RatFunc {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> RatFunc {
        assert!(!self.is_zero(), "reciprocal of zero");
        RatFunc::from_reduced(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        if e == 0 {
            return RatFunc::one();
        }
        if self.is_zero() {
            return RatFunc::zero();
        }
        // coprime parts stay coprime under powers
        RatFunc::from_reduced(self.num.pow(e), self.den.pow(e))
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Exact evaluation at a rational point; panics if the point is a pole.
    pub fn eval(&self, x: &Rational) -> Rational {
        let d = self.den.eval(x);
        assert!(!d.is_zero(), "evaluation at a pole");
        self.num.eval(x) / d
    }
}

// Addition and multiplication cross-reduce by denominator gcds before
// multiplying out, so the expensive gcd calls stay on the shared factors
// instead of the full products.

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            return RatFunc::from_reduced(
                &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
                &self.den * &rhs.den,
            );
        }
        let d1 = self.den.div_exact(&g);
        let d2 = rhs.den.div_exact(&g);
        let t = &(&self.num * &d2) + &(&rhs.num * &d1);
        if t.is_zero() {
            return RatFunc::zero();
        }
        let g2 = t.gcd(&g);
        RatFunc::from_reduced(t.div_exact(&g2), &d1 * &rhs.den.div_exact(&g2))
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        RatFunc::from_reduced(
            &self.num.div_exact(&g1) * &rhs.num.div_exact(&g2),
            &self.den.div_exact(&g2) * &rhs.den.div_exact(&g1),
        )
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.recip()
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn normalization_is_canonical() {
        // (q^2 - 1) / (2q + 2) reduces to (q - 1)/2 with monic denominator
        let f = RatFunc::new(Poly::from_ints(&[-1, 0, 1]), Poly::from_ints(&[2, 2]));
        assert_eq!(f.num(), &Poly::from_coeffs(vec![rat(-1, 2), rat(1, 2)]));
        assert_eq!(f.den(), &Poly::one());
    }

    #[test]
    fn field_arithmetic() {
        let q = RatFunc::q_pow(1);
        let one = RatFunc::one();
        // q/(1+q) + 1/(1+q) = 1
        let den = &one + &q;
        let sum = &(&q / &den) + &(&one / &den);
        assert_eq!(sum, one);
    }

    #[test]
    fn negative_powers() {
        let f = RatFunc::q_pow(-3);
        assert_eq!(&f * &RatFunc::q_pow(3), RatFunc::one());
        assert_eq!(f.eval(&rat_int(2)), rat(1, 8));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_ratfunc() -> impl Strategy<Value = RatFunc> {
            let poly = |lo: usize| {
                prop::collection::vec((-6i64..=6, 1i64..=6), lo..=4).prop_map(|cs| {
                    Poly::from_coeffs(cs.into_iter().map(|(n, d)| rat(n, d)).collect())
                })
            };
            (poly(0), poly(1))
                .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
                .prop_map(|(n, d)| RatFunc::new(n, d))
        }

        proptest! {
            // the cross-reduced fast paths must agree with the fully
            // normalizing constructor
            #[test]
            fn add_matches_naive(a in arb_ratfunc(), b in arb_ratfunc()) {
                let fast = &a + &b;
                let naive = RatFunc::new(
                    &(a.num() * b.den()) + &(b.num() * a.den()),
                    a.den() * b.den(),
                );
                prop_assert_eq!(fast, naive);
            }

            #[test]
            fn mul_matches_naive(a in arb_ratfunc(), b in arb_ratfunc()) {
                let fast = &a * &b;
                let naive = RatFunc::new(a.num() * b.num(), a.den() * b.den());
                prop_assert_eq!(fast, naive);
            }

            #[test]
            fn sub_of_self_is_zero(a in arb_ratfunc()) {
                prop_assert!((&a - &a).is_zero());
            }

            #[test]
            fn field_inverse(a in arb_ratfunc()) {
                prop_assume!(!a.is_zero());
                prop_assert_eq!(&a * &a.recip(), RatFunc::one());
            }
        }
    }
}
