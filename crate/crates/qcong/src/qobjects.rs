//! q-combinatorial building blocks: q-integers, Gaussian q-binomials,
//! Chebyshev polynomials and the classical power-sum expansion used as a
//! lemma for them.

use num::traits::{One, Zero};

use crate::poly::Poly;
use crate::rational::{gen_binomial, rat_int, rat_pow, Rational};

/// The q-analog of `n`: the polynomial 1 + q + ... + q^{n-1}.
pub fn q_int(n: u32) -> Poly {
    Poly::from_coeffs(vec![Rational::one(); n as usize])
}

/// A q-integer with its index attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QInt {
    n: u32,
    value: Poly,
}

impl QInt {
    pub fn new(n: u32) -> Self {
        QInt { n, value: q_int(n) }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn value(&self) -> &Poly {
        &self.value
    }
}

/// Precomputed triangle of Gaussian q-binomial coefficients.
///
/// Rows are built by the Pascal recurrence
/// `qbin(n,k) = qbin(n-1,k-1) + q^k qbin(n-1,k)`, which stays in polynomial
/// arithmetic; the product formula is kept as a test oracle only.
pub struct QBinomialTable {
    rows: Vec<Vec<Poly>>,
}

impl QBinomialTable {
    pub fn new(max_n: u32) -> Self {
        let mut rows: Vec<Vec<Poly>> = Vec::with_capacity(max_n as usize + 1);
        rows.push(vec![Poly::one()]);
        for n in 1..=max_n as usize {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(Poly::one());
            for k in 1..n {
                let shifted = &Poly::monomial(Rational::one(), k) * &prev[k];
                row.push(&prev[k - 1] + &shifted);
            }
            row.push(Poly::one());
            rows.push(row);
        }
        QBinomialTable { rows }
    }

    pub fn max_n(&self) -> u32 {
        (self.rows.len() - 1) as u32
    }

    /// `[n choose k]_q`; zero outside `0 <= k <= n`.
    pub fn get(&self, n: u32, k: i64) -> Poly {
        if k < 0 || k > n as i64 {
            return Poly::zero();
        }
        self.rows[n as usize][k as usize].clone()
    }
}

/// One-shot Gaussian q-binomial coefficient.
pub fn q_binomial(n: u32, k: i64) -> Poly {
    if k < 0 || k > n as i64 {
        return Poly::zero();
    }
    QBinomialTable::new(n).get(n, k)
}

/// Chebyshev polynomial of the first kind, from the three-term recurrence
/// T_0 = 1, T_1 = x, T_{n+1} = 2x T_n - T_{n-1}.
pub fn chebyshev_t(n: u32) -> Poly {
    let mut prev = Poly::one();
    if n == 0 {
        return prev;
    }
    let x = Poly::var();
    let mut cur = x.clone();
    let two_x = x.scale(&rat_int(2));
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Power sum a^n + b^n evaluated through the expansion in the elementary
/// symmetric functions ab and a+b:
/// sum_{k=0}^{[n/2]} (-1)^k n/(n-k) C(n-k,k) (ab)^k (a+b)^{n-2k}.
pub fn kummer_sum(n: u32, at: (&Rational, &Rational)) -> Rational {
    assert!(n >= 1);
    let (a, b) = at;
    let prod = a * b;
    let sum = a + b;
    let mut acc = Rational::zero();
    for k in 0..=n / 2 {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let coeff = rat_int(sign * n as i64) / rat_int((n - k) as i64)
            * gen_binomial(&rat_int((n - k) as i64), k);
        acc += coeff * rat_pow(&prod, k as i64) * rat_pow(&sum, (n - 2 * k) as i64);
    }
    acc
}

/// Verifies, as an exact identity of rational functions in z, that
/// `2 z^{-p/2} T_p(sqrt(z)(3-z)/2)` equals the alternating binomial sum
/// `sum_k (-1)^k p/(p-k) C(p-k,k) z^{-k} (3-z)^{p-2k}` for odd prime p.
///
/// Both sides are Laurent polynomials in z of degree at most p with pole
/// order at most (p-1)/2, so agreement at (3p-1)/2 + 1 distinct points is a
/// proof, not a heuristic. Sampling at perfect squares z = j^2 keeps sqrt(z)
/// rational and the whole computation exact.
pub fn chebyshev_expansion_check(p: u32) -> bool {
    assert!(p % 2 == 1 && p >= 3, "expansion is stated for odd primes");
    let t_p = chebyshev_t(p);
    let samples = (3 * p - 1) / 2 + 1;
    for j in 1..=samples as i64 {
        let z = rat_int(j * j);
        let sqrt_z = rat_int(j);
        let three_minus_z = rat_int(3) - &z;
        // left side: 2 T_p(sqrt(z)(3-z)/2) / z^{p/2}
        let arg = &sqrt_z * &three_minus_z / rat_int(2);
        let lhs = rat_int(2) * t_p.eval(&arg) / rat_pow(&sqrt_z, p as i64);
        // right side: the alternating binomial sum
        let mut rhs = Rational::zero();
        for k in 0..=(p - 1) / 2 {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let coeff = rat_int(sign * p as i64) / rat_int((p - k) as i64)
                * gen_binomial(&rat_int((p - k) as i64), k);
            rhs += coeff * rat_pow(&three_minus_z, (p - 2 * k) as i64) / rat_pow(&z, k as i64);
        }
        if lhs != rhs {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use rand::{Rng, SeedableRng};

    /// Product-formula oracle: prod_{j=1}^k (1-q^{n-k+j})/(1-q^j).
    fn q_binomial_product(n: u32, k: u32) -> Poly {
        let mut num = Poly::one();
        let mut den = Poly::one();
        for j in 1..=k {
            let mut top = vec![Rational::zero(); (n - k + j + 1) as usize];
            top[0] = Rational::one();
            top[(n - k + j) as usize] = -Rational::one();
            let mut bot = vec![Rational::zero(); (j + 1) as usize];
            bot[0] = Rational::one();
            bot[j as usize] = -Rational::one();
            num = &num * &Poly::from_coeffs(top);
            den = &den * &Poly::from_coeffs(bot);
        }
        let (quot, rem) = num.divmod(&den);
        assert!(rem.is_zero(), "product formula must divide exactly");
        quot
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(4, 2), Poly::from_ints(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(9, 0), Poly::one());
        assert_eq!(q_binomial(3, 1), q_int(3));
        assert!(q_binomial(3, -1).is_zero());
        assert!(q_binomial(3, 4).is_zero());
    }

    #[test]
    fn q_binomial_matches_product_formula() {
        let table = QBinomialTable::new(12);
        for n in 0..=12u32 {
            for k in 0..=n {
                assert_eq!(table.get(n, k as i64), q_binomial_product(n, k));
            }
        }
    }

    #[test]
    fn q_binomial_symmetry_and_value_at_one() {
        let table = QBinomialTable::new(12);
        for n in 0..=12u32 {
            for k in 0..=n {
                let b = table.get(n, k as i64);
                assert_eq!(b, table.get(n, (n - k) as i64));
                assert_eq!(
                    b.eval(&rat_int(1)),
                    gen_binomial(&rat_int(n as i64), k)
                );
            }
        }
    }

    #[test]
    fn both_pascal_recurrences() {
        let table = QBinomialTable::new(12);
        for n in 1..=12u32 {
            for k in 0..=n {
                let lhs = table.get(n, k as i64);
                // qbin(n,k) = qbin(n-1,k-1) + q^k qbin(n-1,k)
                let r1 = &table.get(n - 1, k as i64 - 1)
                    + &(&Poly::monomial(rat_int(1), k as usize) * &table.get(n - 1, k as i64));
                assert_eq!(lhs, r1);
                // qbin(n,k) = qbin(n-1,k-1) q^{n-k} + qbin(n-1,k)
                let r2 = &(&Poly::monomial(rat_int(1), (n - k) as usize)
                    * &table.get(n - 1, k as i64 - 1))
                    + &table.get(n - 1, k as i64);
                assert_eq!(lhs, r2);
            }
        }
    }

    #[test]
    fn q_int_invariants() {
        assert!(QInt::new(0).value().is_zero());
        assert_eq!(QInt::new(1).value(), &Poly::one());
        for n in 0..=8u32 {
            let v = QInt::new(n);
            let lhs = &(v.value() * &Poly::from_ints(&[1, -1]));
            let mut rhs = vec![Rational::zero(); n as usize + 1];
            rhs[0] = Rational::one();
            if n > 0 {
                rhs[n as usize] = -Rational::one();
            } else {
                rhs[0] = Rational::zero();
            }
            assert_eq!(lhs, &Poly::from_coeffs(rhs));
        }
    }

    #[test]
    fn chebyshev_small_cases() {
        assert_eq!(chebyshev_t(0), Poly::one());
        assert_eq!(chebyshev_t(1), Poly::var());
        assert_eq!(chebyshev_t(2), Poly::from_ints(&[-1, 0, 2]));
        assert_eq!(chebyshev_t(3), Poly::from_ints(&[0, -3, 0, 4]));
    }

    #[test]
    fn chebyshev_composition_law() {
        // T_m(T_n(x)) = T_{mn}(x) at rational sample points
        for m in 0..=4u32 {
            for n in 0..=4u32 {
                let tm = chebyshev_t(m);
                let tn = chebyshev_t(n);
                let tmn = chebyshev_t(m * n);
                for i in 0..10i64 {
                    let x = rat(i - 5, 7);
                    assert_eq!(tm.eval(&tn.eval(&x)), tmn.eval(&x));
                }
            }
        }
    }

    #[test]
    fn kummer_examples() {
        assert_eq!(kummer_sum(2, (&rat_int(1), &rat_int(1))), rat_int(2));
        assert_eq!(kummer_sum(3, (&rat_int(2), &rat_int(1))), rat_int(9));
        let a = rat(1, 2);
        let b = rat(-1, 3);
        assert_eq!(
            kummer_sum(5, (&a, &b)),
            rat_pow(&a, 5) + rat_pow(&b, 5)
        );
    }

    #[test]
    fn kummer_random_pairs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let a = rat(rng.random_range(-9i64..=9), rng.random_range(1i64..=9));
            let b = rat(rng.random_range(-9i64..=9), rng.random_range(1i64..=9));
            for n in 1..=10u32 {
                assert_eq!(
                    kummer_sum(n, (&a, &b)),
                    rat_pow(&a, n as i64) + rat_pow(&b, n as i64)
                );
            }
        }
    }

    #[test]
    fn chebyshev_expansion_small_primes() {
        assert!(chebyshev_expansion_check(3));
        assert!(chebyshev_expansion_check(5));
        assert!(chebyshev_expansion_check(7));
    }
}
