//! The quotient ring Q[q]/Phi_p(q) for an odd prime p.
//!
//! Phi_p = 1 + q + ... + q^{p-1} is irreducible over Q, so the quotient is a
//! field and every residue coprime to the modulus is invertible. Congruences
//! between q-harmonic sums are decided here: two rational functions are
//! congruent mod [p]_q exactly when their embedded canonical residues agree.

use std::fmt;
use std::sync::Arc;

use num::traits::One;

use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::rational::{is_prime, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycloError {
    /// The requested modulus index is not an odd prime. [n]_q factors for
    /// composite n, so the quotient would not be a field.
    NotPrime(u32),
    /// An element shared a factor with Phi_p; inverting it signals a
    /// violated hypothesis, not an arithmetic bug.
    NotInvertible,
}

impl fmt::Display for CycloError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycloError::NotPrime(n) => write!(f, "{n} is not an odd prime"),
            CycloError::NotInvertible => write!(f, "element is not invertible modulo Phi_p"),
        }
    }
}

impl std::error::Error for CycloError {}

/// The modulus Phi_p together with its prime index.
#[derive(Debug, PartialEq, Eq)]
pub struct CycloModulus {
    p: u32,
    phi: Poly,
}

impl CycloModulus {
    /// Constructs the modulus for an odd prime, rejecting composites.
    pub fn new(p: u32) -> Result<Arc<Self>, CycloError> {
        if p < 3 || !is_prime(p) {
            return Err(CycloError::NotPrime(p));
        }
        let phi = Poly::from_coeffs(vec![Rational::one(); p as usize]);
        Ok(Arc::new(CycloModulus { p, phi }))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn phi(&self) -> &Poly {
        &self.phi
    }

    /// Canonical residue of a polynomial.
    pub fn reduce(self: &Arc<Self>, f: &Poly) -> CycloElement {
        let (_, rep) = f.divmod(&self.phi);
        CycloElement {
            modulus: Arc::clone(self),
            rep,
        }
    }

    pub fn zero(self: &Arc<Self>) -> CycloElement {
        CycloElement {
            modulus: Arc::clone(self),
            rep: Poly::zero(),
        }
    }

    pub fn one(self: &Arc<Self>) -> CycloElement {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(self: &Arc<Self>, c: Rational) -> CycloElement {
        CycloElement {
            modulus: Arc::clone(self),
            rep: Poly::constant(c),
        }
    }

    /// q^e as a residue, for any integer exponent. q^p = 1 in the ring, so
    /// the exponent reduces modulo p.
    pub fn q_pow(self: &Arc<Self>, e: i64) -> CycloElement {
        let e = e.rem_euclid(self.p as i64) as usize;
        self.reduce(&Poly::monomial(Rational::one(), e))
    }

    /// Embeds a rational function whose denominator is coprime to Phi_p.
    pub fn embed_ratfunc(self: &Arc<Self>, f: &RatFunc) -> Result<CycloElement, CycloError> {
        let num = self.reduce(f.num());
        if num.is_zero() {
            return Ok(num);
        }
        let den = self.reduce(f.den());
        Ok(&num * &den.invert()?)
    }
}

/// Canonical residue in Q[q]/Phi_p(q): the unique representative of degree
/// less than p-1. Elements are immutable; equality is coefficient-wise.
#[derive(Clone, PartialEq, Eq)]
pub struct CycloElement {
    modulus: Arc<CycloModulus>,
    rep: Poly,
}

impl CycloElement {
    pub fn modulus(&self) -> &Arc<CycloModulus> {
        &self.modulus
    }

    pub fn rep(&self) -> &Poly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    /// The value as a rational when the residue has degree 0, otherwise `None`.
    pub fn as_constant(&self) -> Option<Rational> {
        self.rep.as_constant()
    }

    /// Multiplicative inverse via extended Euclid against Phi_p.
    pub fn invert(&self) -> Result<CycloElement, CycloError> {
        if self.rep.is_zero() {
            return Err(CycloError::NotInvertible);
        }
        let (g, u, _) = self.rep.ext_gcd(self.modulus.phi());
        if !g.is_one() {
            return Err(CycloError::NotInvertible);
        }
        Ok(self.modulus.reduce(&u))
    }

    pub fn pow(&self, mut e: u64) -> CycloElement {
        let mut acc = self.modulus.one();
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

    pub fn scale(&self, c: &Rational) -> CycloElement {
        CycloElement {
            modulus: Arc::clone(&self.modulus),
            rep: self.rep.scale(c),
        }
    }

    fn assert_same_modulus(&self, rhs: &CycloElement) {
        assert_eq!(
            self.modulus.p(),
            rhs.modulus.p(),
            "mixed moduli in ring arithmetic"
        );
    }
}

impl std::ops::Add for &CycloElement {
    type Output = CycloElement;
    fn add(self, rhs: &CycloElement) -> CycloElement {
        self.assert_same_modulus(rhs);
        CycloElement {
            modulus: Arc::clone(&self.modulus),
            rep: &self.rep + &rhs.rep,
        }
    }
}

impl std::ops::Sub for &CycloElement {
    type Output = CycloElement;
    fn sub(self, rhs: &CycloElement) -> CycloElement {
        self.assert_same_modulus(rhs);
        CycloElement {
            modulus: Arc::clone(&self.modulus),
            rep: &self.rep - &rhs.rep,
        }
    }
}

impl std::ops::Mul for &CycloElement {
    type Output = CycloElement;
    fn mul(self, rhs: &CycloElement) -> CycloElement {
        self.assert_same_modulus(rhs);
        self.modulus.reduce(&(&self.rep * &rhs.rep))
    }
}

impl std::ops::Neg for &CycloElement {
    type Output = CycloElement;
    fn neg(self) -> CycloElement {
        CycloElement {
            modulus: Arc::clone(&self.modulus),
            rep: -&self.rep,
        }
    }
}

impl fmt::Display for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

impl fmt::Debug for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloElement(p={}, {})", self.modulus.p(), self.rep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qobjects::q_int;
    use crate::rational::{rat, rat_int};
    use proptest::prelude::*;

    #[test]
    fn rejects_composite_and_tiny() {
        assert_eq!(CycloModulus::new(9).unwrap_err(), CycloError::NotPrime(9));
        assert_eq!(CycloModulus::new(2).unwrap_err(), CycloError::NotPrime(2));
        assert_eq!(CycloModulus::new(1).unwrap_err(), CycloError::NotPrime(1));
    }

    #[test]
    fn modulus_invariants() {
        let m = CycloModulus::new(7).unwrap();
        assert_eq!(m.phi().degree(), Some(6));
        assert_eq!(m.phi().eval(&rat_int(1)), rat_int(7));
    }

    #[test]
    fn reduce_examples() {
        let m3 = CycloModulus::new(3).unwrap();
        // q^2 = Phi_3 - 1 - q
        let q2 = m3.reduce(&Poly::monomial(rat_int(1), 2));
        assert_eq!(q2.rep(), &Poly::from_ints(&[-1, -1]));
        // the modulus itself reduces to zero
        assert!(m3.reduce(&m3.phi().clone()).is_zero());
        let m7 = CycloModulus::new(7).unwrap();
        assert_eq!(
            m7.reduce(&Poly::constant(rat_int(5))).as_constant(),
            Some(rat_int(5))
        );
    }

    #[test]
    fn invert_examples() {
        let m3 = CycloModulus::new(3).unwrap();
        let two_q = m3.reduce(&Poly::from_ints(&[1, 1]));
        let inv = two_q.invert().unwrap();
        assert_eq!(inv.rep(), &Poly::from_ints(&[0, -1]));
        assert_eq!(m3.one().invert().unwrap(), m3.one());
        // [2]_q in Q[q]/Phi_5: product with its inverse reduces to 1
        let m5 = CycloModulus::new(5).unwrap();
        let e = m5.reduce(&q_int(2));
        assert_eq!(&e * &e.invert().unwrap(), m5.one());
    }

    #[test]
    fn embed_examples() {
        let m3 = CycloModulus::new(3).unwrap();
        // q^2/(1+q): (1+q)^{-1} = -q, so q^2 * (-q) = -q^3 = -1
        let f = RatFunc::new(Poly::monomial(rat_int(1), 2), Poly::from_ints(&[1, 1]));
        assert_eq!(m3.embed_ratfunc(&f).unwrap().as_constant(), Some(rat_int(-1)));
        // zero numerator short-circuits
        let z = RatFunc::new(Poly::zero(), Poly::from_ints(&[3, 1]));
        assert!(m3.embed_ratfunc(&z).unwrap().is_zero());
        // (1 - q^p)/(1 - q) is the modulus itself
        let m5 = CycloModulus::new(5).unwrap();
        let f = RatFunc::new(
            Poly::from_ints(&[1, 0, 0, 0, 0, -1]),
            Poly::from_ints(&[1, -1]),
        );
        assert!(m5.embed_ratfunc(&f).unwrap().is_zero());
    }

    #[test]
    fn is_constant_detection() {
        let m7 = CycloModulus::new(7).unwrap();
        assert_eq!(m7.from_rational(rat(7, 2)).as_constant(), Some(rat(7, 2)));
        assert_eq!(m7.q_pow(1).as_constant(), None);
    }

    #[test]
    fn q_int_invertible_up_to_31() {
        for p in crate::rational::primes_in(3, 31) {
            let m = CycloModulus::new(p).unwrap();
            for k in 1..p {
                let e = m.reduce(&q_int(k));
                let inv = e.invert().expect("[k]_q must be invertible for k < p");
                assert_eq!(&e * &inv, m.one());
            }
        }
    }

    #[test]
    fn q_pow_wraps_mod_p() {
        let m5 = CycloModulus::new(5).unwrap();
        assert_eq!(m5.q_pow(5), m5.one());
        assert_eq!(m5.q_pow(-1), m5.q_pow(4));
        assert_eq!(&m5.q_pow(-3) * &m5.q_pow(3), m5.one());
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec((-9i64..=9, 1i64..=9), 0..=max_deg + 1)
            .prop_map(|cs| Poly::from_coeffs(cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn reduce_is_ring_homomorphism(f in arb_poly(10), g in arb_poly(10), pi in 0usize..3) {
            let p = [3u32, 5, 7][pi];
            let m = CycloModulus::new(p).unwrap();
            prop_assert_eq!(m.reduce(&(&f * &g)), &m.reduce(&f) * &m.reduce(&g));
            prop_assert_eq!(m.reduce(&(&f + &g)), &m.reduce(&f) + &m.reduce(&g));
        }

        #[test]
        fn canonical_difference_decides_congruence(f in arb_poly(10), g in arb_poly(10), pi in 0usize..3) {
            let p = [3u32, 5, 7][pi];
            let m = CycloModulus::new(p).unwrap();
            let equal = m.reduce(&f) == m.reduce(&g);
            let diff_zero = m.reduce(&(&f - &g)).is_zero();
            prop_assert_eq!(equal, diff_zero);
        }
    }

    #[test]
    fn random_inverses_roundtrip() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for p in [3u32, 5, 7, 11, 13] {
            let m = CycloModulus::new(p).unwrap();
            let mut done = 0;
            while done < 100 {
                let coeffs: Vec<Rational> = (0..p - 1)
                    .map(|_| rat_int(rng.random_range(-5i64..=5)))
                    .collect();
                let e = m.reduce(&Poly::from_coeffs(coeffs));
                match e.invert() {
                    Ok(inv) => {
                        assert_eq!(&e * &inv, m.one());
                        done += 1;
                    }
                    Err(_) => continue,
                }
            }
        }
    }
}
