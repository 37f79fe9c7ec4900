//! Truncated power series with polynomial coefficients.
//!
//! A `Series` is an expansion in a primary variable whose coefficients may
//! themselves be polynomials in a secondary variable (lambda or p). All
//! arithmetic is exact and never reads past the truncation order.

use std::fmt;

use num::traits::Zero;

use crate::poly::Poly;
use crate::rational::{factorial, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    /// Coefficient of x^k at index k; length = truncation_order + 1.
    coeffs: Vec<Poly>,
}

impl Series {
    /// Builds a series from ascending coefficients, padding or truncating to
    /// exactly `order + 1` entries.
    pub fn new(mut coeffs: Vec<Poly>, order: usize) -> Self {
        coeffs.resize(order + 1, Poly::zero());
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Series::new(vec![Poly::one()], order)
    }

    pub fn from_rationals(coeffs: Vec<Rational>, order: usize) -> Self {
        Series::new(coeffs.into_iter().map(Poly::constant).collect(), order)
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of x^k. Panics past the truncation order: that coefficient
    /// was never computed.
    pub fn coeff(&self, k: usize) -> &Poly {
        assert!(
            k < self.coeffs.len(),
            "coefficient {k} beyond truncation order {}",
            self.truncation_order()
        );
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// Drops the constant term and shifts every exponent down by one
    /// (division by x). The constant term must be zero.
    pub fn shift_down(&self) -> Series {
        assert!(self.coeffs[0].is_zero(), "shift_down with nonzero constant term");
        Series::new(self.coeffs[1..].to_vec(), self.truncation_order().saturating_sub(1))
    }

    pub fn add(&self, rhs: &Series) -> Series {
        let order = self.truncation_order().min(rhs.truncation_order());
        Series::new(
            (0..=order)
                .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
                .collect(),
            order,
        )
    }

    pub fn mul(&self, rhs: &Series) -> Series {
        let order = self.truncation_order().min(rhs.truncation_order());
        let mut coeffs = vec![Poly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Series::new(coeffs, order)
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series::new(
            self.coeffs.iter().map(|p| p.scale(c)).collect(),
            self.truncation_order(),
        )
    }

    /// Multiplicative inverse up to the truncation order.
    ///
    /// The constant term must be a nonzero rational constant; the standard
    /// recurrence then stays inside polynomial coefficients.
    pub fn invert(&self) -> Series {
        let c0 = self.coeffs[0]
            .as_constant()
            .expect("series inversion requires a constant leading coefficient");
        assert!(!c0.is_zero(), "series with zero constant term is not invertible");
        let inv0 = c0.recip();
        let order = self.truncation_order();
        let mut out = vec![Poly::zero(); order + 1];
        out[0] = Poly::constant(inv0.clone());
        let neg_inv0 = -inv0;
        for n in 1..=order {
            let mut acc = Poly::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() || out[n - k].is_zero() {
                    continue;
                }
                acc = &acc + &(&self.coeffs[k] * &out[n - k]);
            }
            out[n] = acc.scale(&neg_inv0);
        }
        Series::new(out, order)
    }

    /// Exponential of a series with zero constant term, via the derivative
    /// recurrence n*e_n = sum_{k=1..n} k*s_k*e_{n-k}.
    pub fn exp(&self) -> Series {
        assert!(
            self.coeffs[0].is_zero(),
            "series exponential requires zero constant term"
        );
        let order = self.truncation_order();
        let mut out = vec![Poly::zero(); order + 1];
        out[0] = Poly::one();
        for n in 1..=order {
            let mut acc = Poly::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() || out[n - k].is_zero() {
                    continue;
                }
                acc = &acc + &(&self.coeffs[k] * &out[n - k]).scale(&crate::rational::rat_int(k as i64));
            }
            out[n] = acc.scale(&Rational::new(1.into(), (n as i64).into()));
        }
        Series::new(out, order)
    }

    /// The exponential generating series sum_k x^k / (k+1)! = (e^x - 1)/x.
    pub fn exp_minus_one_over_x(order: usize) -> Series {
        Series::from_rationals(
            (0..=order)
                .map(|k| Rational::new(1.into(), factorial(k as u32 + 1)))
                .collect(),
            order,
        )
    }

    /// The series ln(1+x)/x = sum_k (-1)^k x^k / (k+1).
    pub fn log1p_over_x(order: usize) -> Series {
        Series::from_rationals(
            (0..=order)
                .map(|k| {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    Rational::new(sign.into(), (k as i64 + 1).into())
                })
                .collect(),
            order,
        )
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "] + O(x^{})", self.coeffs.len())
    }
}
