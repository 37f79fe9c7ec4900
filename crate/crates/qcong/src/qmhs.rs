//! Evaluators for multiple q-harmonic sums.
//!
//! Covers strict sums (indices k_1 < ... < k_l), non-strict sums
//! (k_1 <= ... <= k_l), mixed-strictness chains, and the q-binomial-weighted
//! sums used by the duality identities. Every evaluator exists in two forms:
//! over the rational-function field Q(q) and directly in Q[q]/Phi_p(q).
//!
//! Sums are evaluated by dynamic programming over the nesting (prefix sums
//! along the index chain), which drops the cost from O(n^l) tuple
//! enumeration to O(n l) term updates. Brute-force enumeration is kept in
//! the tests as an oracle.

use std::sync::Arc;

use num::traits::One;

use crate::cyclo::{CycloElement, CycloModulus};
use crate::poly::Poly;
use crate::qobjects::{q_int, QBinomialTable};
use crate::ratfunc::RatFunc;
use crate::rational::Rational;

/// Index data of a multiple q-harmonic sum: exponents `s` and twists `t`
/// of equal length. The twist is the exponent of q in each numerator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexSpec {
    s: Vec<u32>,
    t: Vec<u32>,
}

impl IndexSpec {
    pub fn new(s: Vec<u32>, t: Vec<u32>) -> Self {
        assert_eq!(s.len(), t.len(), "exponent and twist vectors differ in length");
        IndexSpec { s, t }
    }

    /// The conventional twist t_j = s_j - 1. Requires every s_j >= 1.
    pub fn default_twist(s: Vec<u32>) -> Self {
        let t = s
            .iter()
            .map(|&sj| {
                assert!(sj >= 1, "default twist requires positive exponents");
                sj - 1
            })
            .collect();
        IndexSpec { s, t }
    }

    /// The string {1}^a, u, {1}^b with default twists.
    pub fn ones_with_insert(a: u32, u: u32, b: u32) -> Self {
        let mut s = vec![1u32; a as usize];
        s.push(u);
        s.extend(std::iter::repeat_n(1, b as usize));
        IndexSpec::default_twist(s)
    }

    /// The homogeneous string {s}^t with default twists.
    pub fn repeated(s: u32, t: u32) -> Self {
        IndexSpec::default_twist(vec![s; t as usize])
    }

    pub fn empty() -> Self {
        IndexSpec {
            s: Vec::new(),
            t: Vec::new(),
        }
    }

    pub fn s(&self) -> &[u32] {
        &self.s
    }

    pub fn t(&self) -> &[u32] {
        &self.t
    }

    pub fn depth(&self) -> u32 {
        self.s.len() as u32
    }

    pub fn weight(&self) -> u32 {
        self.s.iter().sum()
    }

    /// Reverses both vectors.
    pub fn reverse(&self) -> IndexSpec {
        IndexSpec {
            s: self.s.iter().rev().copied().collect(),
            t: self.t.iter().rev().copied().collect(),
        }
    }

    /// Replaces the twist by s_j - t_j componentwise. Requires t_j <= s_j.
    pub fn twist_complement(&self) -> IndexSpec {
        let t = self
            .s
            .iter()
            .zip(&self.t)
            .map(|(&sj, &tj)| {
                assert!(tj <= sj, "twist complement requires t_j <= s_j");
                sj - tj
            })
            .collect();
        IndexSpec {
            s: self.s.clone(),
            t,
        }
    }

    /// Overrides every twist with the same value.
    pub fn with_uniform_twist(&self, twist: u32) -> IndexSpec {
        IndexSpec {
            s: self.s.clone(),
            t: vec![twist; self.s.len()],
        }
    }

    /// Concatenates argument sequences in order.
    pub fn cat(parts: &[&IndexSpec]) -> IndexSpec {
        let mut s = Vec::new();
        let mut t = Vec::new();
        for part in parts {
            s.extend_from_slice(&part.s);
            t.extend_from_slice(&part.t);
        }
        IndexSpec { s, t }
    }
}

/// A chain of `w` summation indices with strict inequalities at the marked
/// positions: `j_i < j_{i+1}` for `i` in the strict set, `j_i <= j_{i+1}`
/// otherwise. Each factor is q^{j_i}/[j_i]_q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedSpec {
    w: u32,
    strict: Vec<u32>,
}

impl MixedSpec {
    /// Builds a chain of length `w`; `strict` lists positions in 1..w-1.
    pub fn new(w: u32, mut strict: Vec<u32>) -> Self {
        strict.sort_unstable();
        strict.dedup();
        assert!(
            strict.iter().all(|&i| i >= 1 && i < w.max(1)),
            "strict positions must lie in 1..w-1"
        );
        MixedSpec { w, strict }
    }

    /// The chain encoding a composition: length = weight, strict exactly at
    /// the partial sums s_1, s_1+s_2, ..., excluding the total.
    pub fn from_composition(s: &[u32]) -> Self {
        let w: u32 = s.iter().sum();
        let mut strict = Vec::new();
        let mut acc = 0;
        for &part in &s[..s.len().saturating_sub(1)] {
            acc += part;
            strict.push(acc);
        }
        MixedSpec::new(w, strict)
    }

    pub fn w(&self) -> u32 {
        self.w
    }

    pub fn strict_positions(&self) -> &[u32] {
        &self.strict
    }

    fn strict_after(&self, position: u32) -> bool {
        self.strict.binary_search(&position).is_ok()
    }
}

/// One summand q^{t k}/[k]_q^s as a rational function.
fn term(k: u32, s_exp: u32, t_exp: u32) -> RatFunc {
    RatFunc::new(
        Poly::monomial(Rational::one(), (t_exp * k) as usize),
        q_int(k).pow(s_exp),
    )
}

/// Nested-sum engine over Q(q): returns, for each pinned last index
/// k = 1..=n, the sum over admissible chains ending exactly at k. Level `i`
/// uses exponents (s_i, t_i); `strict(i)` tells whether the step after the
/// i-th index (1-based) is strict. Each level consumes prefix sums of the
/// previous one, so a chain of length l costs O(n l) term updates.
fn chain_pinned(
    n: u32,
    levels: &[(u32, u32)],
    strict: impl Fn(u32) -> bool,
    seed: impl Fn(u32) -> RatFunc,
) -> Vec<RatFunc> {
    let n = n as usize;
    let mut layer: Vec<RatFunc> = Vec::new();
    for (li, &(s_exp, t_exp)) in levels.iter().enumerate() {
        let prefix: Vec<RatFunc> = if li == 0 {
            Vec::new()
        } else {
            let mut acc = RatFunc::zero();
            let mut out = Vec::with_capacity(n);
            for v in &layer {
                acc = &acc + v;
                out.push(acc.clone());
            }
            out
        };
        let mut next = Vec::with_capacity(n);
        for k in 1..=n {
            let factor = term(k as u32, s_exp, t_exp);
            let inner = if li == 0 {
                seed(k as u32)
            } else {
                let upto = if strict(li as u32) { k - 1 } else { k };
                if upto == 0 {
                    RatFunc::zero()
                } else {
                    prefix[upto - 1].clone()
                }
            };
            next.push(&factor * &inner);
        }
        layer = next;
    }
    layer
}

/// Total over all admissible chains with free last index in 1..=n.
///
/// Empty chains contribute the empty product 1. Strict chains of length
/// l > n vanish on their own; non-strict chains keep their definitional
/// value (diagonal tuples exist for every n >= 1), which is what the
/// q-binomial duality identities require at small n.
fn chain_total(
    n: u32,
    levels: &[(u32, u32)],
    strict: impl Fn(u32) -> bool,
    seed: impl Fn(u32) -> RatFunc,
) -> RatFunc {
    if levels.is_empty() {
        return RatFunc::one();
    }
    let pinned = chain_pinned(n, levels, strict, seed);
    let mut acc = RatFunc::zero();
    for v in &pinned {
        acc = &acc + v;
    }
    acc
}

/// Strict multiple q-harmonic sum H_n^q(s; t) over Q(q).
/// Returns 1 for the empty spec and 0 when n < depth.
pub fn h_sum(n: u32, spec: &IndexSpec) -> RatFunc {
    let levels: Vec<(u32, u32)> = spec.s.iter().copied().zip(spec.t.iter().copied()).collect();
    chain_total(n, &levels, |_| true, |_| RatFunc::one())
}

/// Non-strict multiple q-harmonic sum S_n^q(s; t) over Q(q).
pub fn s_sum(n: u32, spec: &IndexSpec) -> RatFunc {
    let levels: Vec<(u32, u32)> = spec.s.iter().copied().zip(spec.t.iter().copied()).collect();
    chain_total(n, &levels, |_| false, |_| RatFunc::one())
}

/// Mixed-strictness chain sum T_n^q over Q(q).
pub fn t_sum(n: u32, m: &MixedSpec) -> RatFunc {
    let levels = vec![(1u32, 1u32); m.w as usize];
    chain_total(n, &levels, |i| m.strict_after(i), |_| RatFunc::one())
}

/// Strict chains of `spec` pinned at the largest index: entry k-1 holds the
/// sum over chains with k_l = k. Returns an empty vector for the empty spec.
pub fn h_sum_pinned(n: u32, spec: &IndexSpec) -> Vec<RatFunc> {
    let levels: Vec<(u32, u32)> = spec.s.iter().copied().zip(spec.t.iter().copied()).collect();
    if levels.is_empty() {
        return Vec::new();
    }
    chain_pinned(n, &levels, |_| true, |_| RatFunc::one())
}

/// Mixed chains pinned at the largest index, seeded by a factor attached to
/// the smallest index j_1.
pub fn t_sum_pinned_seeded(
    n: u32,
    m: &MixedSpec,
    seed: impl Fn(u32) -> RatFunc,
) -> Vec<RatFunc> {
    let levels = vec![(1u32, 1u32); m.w as usize];
    if levels.is_empty() {
        return Vec::new();
    }
    chain_pinned(n, &levels, |i| m.strict_after(i), seed)
}

/// Mixed chains pinned at the largest index.
pub fn t_sum_pinned(n: u32, m: &MixedSpec) -> Vec<RatFunc> {
    t_sum_pinned_seeded(n, m, |_| RatFunc::one())
}

/// Mixed chain sum with a seed factor attached to the smallest index.
pub fn t_sum_seeded(n: u32, m: &MixedSpec, seed: impl Fn(u32) -> RatFunc) -> RatFunc {
    let levels = vec![(1u32, 1u32); m.w as usize];
    chain_total(n, &levels, |i| m.strict_after(i), seed)
}

/// The q-binomial-weighted multiple sum
/// `A_n(s) = sum_k qbin(n,k) (-1)^{k-1} q^{C(k,2)+k} * inner(k)` where
/// `inner(k)` runs over non-strict chains pinned at k with the spec's
/// twist weights.
pub fn bradley_a(n: u32, spec: &IndexSpec) -> RatFunc {
    assert!(spec.depth() >= 1, "the weighted sum needs depth >= 1");
    let levels: Vec<(u32, u32)> = spec.s.iter().copied().zip(spec.t.iter().copied()).collect();
    let pinned = chain_pinned(n, &levels, |_| false, |_| RatFunc::one());
    let table = QBinomialTable::new(n);
    let mut acc = RatFunc::zero();
    for k in 1..=n {
        let sign = if (k - 1) % 2 == 0 { 1 } else { -1 };
        let exp = (k as usize * (k as usize - 1)) / 2 + k as usize;
        let weight = RatFunc::from_poly(
            table
                .get(n, k as i64)
                .scale(&crate::rational::rat_int(sign)),
        );
        let weight = &weight * &RatFunc::q_pow(exp as i64);
        acc = &acc + &(&weight * &pinned[(k - 1) as usize]);
    }
    acc
}

// ---------------------------------------------------------------------------
// Ring-form evaluators: same chains, but every term is reduced into
// Q[q]/Phi_p(q) first and accumulation happens in the ring. Independent of
// the Q(q) evaluators so the two routes can cross-check each other.
// ---------------------------------------------------------------------------

/// Per-modulus cache of the inverses of [k]_q for k = 1..p-1.
pub struct RingTermCache {
    modulus: Arc<CycloModulus>,
    inv_qint: Vec<CycloElement>,
}

impl RingTermCache {
    pub fn new(modulus: &Arc<CycloModulus>) -> Self {
        let inv_qint = (1..modulus.p())
            .map(|k| {
                modulus
                    .reduce(&q_int(k))
                    .invert()
                    .expect("[k]_q is coprime to Phi_p for k < p")
            })
            .collect();
        RingTermCache {
            modulus: Arc::clone(modulus),
            inv_qint,
        }
    }

    pub fn modulus(&self) -> &Arc<CycloModulus> {
        &self.modulus
    }

    /// q^{t k} / [k]_q^s as a ring element, k in 1..p-1.
    pub fn term(&self, k: u32, s_exp: u32, t_exp: u32) -> CycloElement {
        let numer = self.modulus.q_pow((t_exp as i64) * (k as i64));
        &numer * &self.inv_qint[(k - 1) as usize].pow(s_exp as u64)
    }
}

fn ring_chain_pinned(
    cache: &RingTermCache,
    levels: &[(u32, u32)],
    strict: impl Fn(u32) -> bool,
    seed: impl Fn(u32) -> CycloElement,
) -> Vec<CycloElement> {
    let n = (cache.modulus.p() - 1) as usize;
    let mut layer: Vec<CycloElement> = Vec::new();
    for (li, &(s_exp, t_exp)) in levels.iter().enumerate() {
        let prefix: Vec<CycloElement> = if li == 0 {
            Vec::new()
        } else {
            let mut acc = cache.modulus.zero();
            let mut out = Vec::with_capacity(n);
            for v in &layer {
                acc = &acc + v;
                out.push(acc.clone());
            }
            out
        };
        let mut next = Vec::with_capacity(n);
        for k in 1..=n {
            let factor = cache.term(k as u32, s_exp, t_exp);
            let inner = if li == 0 {
                seed(k as u32)
            } else {
                let upto = if strict(li as u32) { k - 1 } else { k };
                if upto == 0 {
                    cache.modulus.zero()
                } else {
                    prefix[upto - 1].clone()
                }
            };
            next.push(&factor * &inner);
        }
        layer = next;
    }
    layer
}

fn ring_chain_total(
    cache: &RingTermCache,
    levels: &[(u32, u32)],
    strict: impl Fn(u32) -> bool,
) -> CycloElement {
    if levels.is_empty() {
        return cache.modulus.one();
    }
    let pinned = ring_chain_pinned(cache, levels, strict, |_| cache.modulus.one());
    let mut acc = cache.modulus.zero();
    for v in &pinned {
        acc = &acc + v;
    }
    acc
}

/// H_{p-1}^q(s; t) evaluated directly in Q[q]/Phi_p(q).
pub fn h_sum_mod(cache: &RingTermCache, spec: &IndexSpec) -> CycloElement {
    let levels: Vec<(u32, u32)> = spec.s.iter().copied().zip(spec.t.iter().copied()).collect();
    ring_chain_total(cache, &levels, |_| true)
}

/// S_{p-1}^q(s; t) evaluated directly in Q[q]/Phi_p(q).
pub fn s_sum_mod(cache: &RingTermCache, spec: &IndexSpec) -> CycloElement {
    let levels: Vec<(u32, u32)> = spec.s.iter().copied().zip(spec.t.iter().copied()).collect();
    ring_chain_total(cache, &levels, |_| false)
}

/// T_{p-1}^q evaluated directly in Q[q]/Phi_p(q).
pub fn t_sum_mod(cache: &RingTermCache, m: &MixedSpec) -> CycloElement {
    let levels = vec![(1u32, 1u32); m.w as usize];
    ring_chain_total(cache, &levels, |i| m.strict_after(i))
}

// ---------------------------------------------------------------------------
// Product expansion of two depth-one sums.
// ---------------------------------------------------------------------------

/// Which family of sums a depth-two expansion concerns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumKind {
    Strict,
    NonStrict,
}

/// The four-term expansion of a product of two depth-one sums:
/// `H_n(a) H_n(b) = H_n(a,b) + H_n(b,a) + H_n(a+b) + (1-q) H_n(a+b-1)`,
/// and the non-strict version with minus signs on the last two terms.
/// All sums carry default twists.
#[derive(Clone, Debug)]
pub struct Depth2Expansion {
    pub kind: SumKind,
    pub a: u32,
    pub b: u32,
}

/// Returns the symbolic expansion for exponents `a, b >= 1`.
pub fn depth2_product_expand(kind: SumKind, a: u32, b: u32) -> Depth2Expansion {
    assert!(a >= 1 && b >= 1);
    Depth2Expansion { kind, a, b }
}

impl Depth2Expansion {
    fn eval_sum(&self, n: u32, spec: &IndexSpec) -> RatFunc {
        match self.kind {
            SumKind::Strict => h_sum(n, spec),
            SumKind::NonStrict => s_sum(n, spec),
        }
    }

    /// The product side.
    pub fn lhs(&self, n: u32) -> RatFunc {
        let fa = self.eval_sum(n, &IndexSpec::default_twist(vec![self.a]));
        let fb = self.eval_sum(n, &IndexSpec::default_twist(vec![self.b]));
        &fa * &fb
    }

    /// The four-term side.
    pub fn rhs(&self, n: u32) -> RatFunc {
        let ab = self.eval_sum(n, &IndexSpec::default_twist(vec![self.a, self.b]));
        let ba = self.eval_sum(n, &IndexSpec::default_twist(vec![self.b, self.a]));
        let merged = self.eval_sum(n, &IndexSpec::default_twist(vec![self.a + self.b]));
        let lowered = self.eval_sum(n, &IndexSpec::default_twist(vec![self.a + self.b - 1]));
        let one_minus_q = RatFunc::from_poly(Poly::from_ints(&[1, -1]));
        let tail = &(&one_minus_q * &lowered) + &merged;
        let sum = &ab + &ba;
        match self.kind {
            SumKind::Strict => &sum + &tail,
            SumKind::NonStrict => &sum - &tail,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat_int, Rational};

    /// Brute-force tuple enumeration oracle for small n.
    fn brute_force(n: u32, spec: &IndexSpec, strict: bool) -> RatFunc {
        fn recurse(
            lo: u32,
            n: u32,
            spec: &IndexSpec,
            level: usize,
            strict: bool,
            acc: &RatFunc,
            total: &mut RatFunc,
        ) {
            if level == spec.depth() as usize {
                *total = &*total + acc;
                return;
            }
            for k in lo..=n {
                let t = acc * &term(k, spec.s()[level], spec.t()[level]);
                let next_lo = if strict { k + 1 } else { k };
                recurse(next_lo, n, spec, level + 1, strict, &t, total);
            }
        }
        let mut total = RatFunc::zero();
        recurse(1, n, spec, 0, strict, &RatFunc::one(), &mut total);
        total
    }

    #[test]
    fn h_sum_unrolled_example() {
        // H_3(1;1) = q + q^2/(1+q) + q^3/(1+q+q^2)
        let spec = IndexSpec::new(vec![1], vec![1]);
        let direct = &(&term(1, 1, 1) + &term(2, 1, 1)) + &term(3, 1, 1);
        assert_eq!(h_sum(3, &spec), direct);
    }

    #[test]
    fn short_n_vanishes() {
        let spec = IndexSpec::new(vec![1, 1, 1], vec![1, 1, 1]);
        assert!(h_sum(2, &spec).is_zero());
    }

    #[test]
    fn empty_spec_is_one() {
        assert_eq!(h_sum(5, &IndexSpec::empty()), RatFunc::one());
        assert_eq!(s_sum(0, &IndexSpec::empty()), RatFunc::one());
    }

    #[test]
    fn s_sum_unrolled_example() {
        // S_2(1,1;0,0) = 1 + 1/(1+q) + 1/(1+q)^2
        let spec = IndexSpec::new(vec![1, 1], vec![0, 0]);
        let one = RatFunc::one();
        let inv2 = RatFunc::new(Poly::one(), q_int(2));
        let expect = &(&one + &inv2) + &(&inv2 * &inv2);
        assert_eq!(s_sum(2, &spec), expect);
    }

    #[test]
    fn depth_one_h_equals_s() {
        for s in 1..=3u32 {
            for t in 0..=s {
                let spec = IndexSpec::new(vec![s], vec![t]);
                for n in 0..=5 {
                    assert_eq!(h_sum(n, &spec), s_sum(n, &spec));
                }
            }
        }
    }

    #[test]
    fn h_mod_example() {
        // H_2(1;1) = q - 1 in Q[q]/Phi_3
        let m = crate::cyclo::CycloModulus::new(3).unwrap();
        let cache = RingTermCache::new(&m);
        let spec = IndexSpec::new(vec![1], vec![1]);
        let got = h_sum_mod(&cache, &spec);
        assert_eq!(got.rep(), &Poly::from_ints(&[-1, 1]));
    }

    #[test]
    fn dp_matches_brute_force() {
        let specs = [
            IndexSpec::new(vec![1], vec![0]),
            IndexSpec::new(vec![2], vec![1]),
            IndexSpec::new(vec![1, 1], vec![0, 0]),
            IndexSpec::new(vec![1, 2], vec![0, 1]),
            IndexSpec::new(vec![2, 1, 1], vec![1, 0, 1]),
            IndexSpec::new(vec![1, 1, 1, 1], vec![0, 1, 0, 1]),
        ];
        for spec in &specs {
            for n in 0..=6u32 {
                assert_eq!(h_sum(n, spec), brute_force(n, spec, true), "H {spec:?} n={n}");
                assert_eq!(s_sum(n, spec), brute_force(n, spec, false), "S {spec:?} n={n}");
            }
        }
    }

    #[test]
    fn ring_form_matches_embedding() {
        for p in [5u32, 7] {
            let m = crate::cyclo::CycloModulus::new(p).unwrap();
            let cache = RingTermCache::new(&m);
            let specs = [
                IndexSpec::new(vec![1], vec![1]),
                IndexSpec::new(vec![2, 1], vec![1, 0]),
                IndexSpec::new(vec![1, 1, 2], vec![0, 1, 1]),
                IndexSpec::new(vec![2, 3], vec![1, 2]),
            ];
            for spec in &specs {
                let embedded_h = m.embed_ratfunc(&h_sum(p - 1, spec)).unwrap();
                assert_eq!(h_sum_mod(&cache, spec), embedded_h, "H {spec:?} p={p}");
                let embedded_s = m.embed_ratfunc(&s_sum(p - 1, spec)).unwrap();
                assert_eq!(s_sum_mod(&cache, spec), embedded_s, "S {spec:?} p={p}");
            }
        }
    }

    #[test]
    fn t_sum_single_chain() {
        let m = MixedSpec::new(1, vec![]);
        let expect = &term(1, 1, 1) + &term(2, 1, 1);
        assert_eq!(t_sum(2, &m), expect);
    }

    #[test]
    fn t_sum_fully_strict_is_h() {
        for w in 1..=4u32 {
            let m = MixedSpec::new(w, (1..w).collect());
            let spec = IndexSpec::new(vec![1; w as usize], vec![1; w as usize]);
            for n in 0..=6 {
                assert_eq!(t_sum(n, &m), h_sum(n, &spec), "w={w}, n={n}");
            }
        }
    }

    #[test]
    fn t_sum_fully_nonstrict_matches_composition_of_one_part() {
        // chain with no strict positions = the composition (s) of a single part
        for s in 1..=3u32 {
            let m = MixedSpec::from_composition(&[s]);
            assert_eq!(m.w(), s);
            assert!(m.strict_positions().is_empty());
            for n in 0..=5 {
                let spec = IndexSpec::new(vec![1; s as usize], vec![1; s as usize]);
                assert_eq!(t_sum(n, &m), s_sum(n, &spec));
            }
        }
    }

    #[test]
    fn t_sum_recursions() {
        // T_n(s,1) = sum_k q^k T_{k-1}(s)/[k]
        // T_n(s,r) = sum_k q^k T_k(s,r-1)/[k] for r > 1
        let compositions: [&[u32]; 5] = [&[1], &[2], &[1, 1], &[2, 1], &[1, 3]];
        for comp in compositions {
            for r in 1..=2u32 {
                let mut extended: Vec<u32> = comp.to_vec();
                extended.push(r);
                if extended.iter().sum::<u32>() > 5 {
                    continue;
                }
                let whole = MixedSpec::from_composition(&extended);
                for n in 0..=6u32 {
                    let mut acc = RatFunc::zero();
                    for k in 1..=n {
                        let inner = if r == 1 {
                            t_sum(k - 1, &MixedSpec::from_composition(comp))
                        } else {
                            let mut shorter: Vec<u32> = comp.to_vec();
                            shorter.push(r - 1);
                            t_sum(k, &MixedSpec::from_composition(&shorter))
                        };
                        acc = &acc + &(&term(k, 1, 1) * &inner);
                    }
                    assert_eq!(t_sum(n, &whole), acc, "comp={comp:?} r={r} n={n}");
                }
            }
        }
    }

    #[test]
    fn bradley_a_depth_one() {
        // A_1(1) = q
        let spec = IndexSpec::default_twist(vec![1]);
        assert_eq!(
            bradley_a(1, &spec),
            RatFunc::from_poly(Poly::from_ints(&[0, 1]))
        );
        // A_2(1) = q + q^2/(1+q)
        let expect = &term(1, 1, 1) + &term(2, 1, 1);
        assert_eq!(bradley_a(2, &spec), expect);
    }

    #[test]
    fn reverse_and_complement() {
        let spec = IndexSpec::new(vec![1, 2], vec![0, 1]);
        let rev = spec.reverse();
        assert_eq!(rev, IndexSpec::new(vec![2, 1], vec![1, 0]));
        assert_eq!(
            rev.twist_complement(),
            IndexSpec::new(vec![2, 1], vec![1, 1])
        );
        // palindromic spec is fixed by reversal
        let pal = IndexSpec::new(vec![1, 2, 1], vec![0, 1, 0]);
        assert_eq!(pal.reverse(), pal);
        // reversed-complemented default twist is all ones
        let d = IndexSpec::default_twist(vec![3, 1, 2]);
        let rc = d.reverse().twist_complement();
        assert_eq!(rc.t(), &[1, 1, 1]);
    }

    #[test]
    fn cat_examples() {
        let empty = IndexSpec::empty();
        let two = IndexSpec::default_twist(vec![2]);
        assert_eq!(IndexSpec::cat(&[&empty, &two]), two);
        let ones = IndexSpec::default_twist(vec![1, 1]);
        let three = IndexSpec::default_twist(vec![3]);
        assert_eq!(
            IndexSpec::cat(&[&ones, &three]).s(),
            &[1, 1, 3]
        );
    }

    #[test]
    fn depth2_expansion_holds() {
        for n in 0..=6u32 {
            for (a, b) in [(1u32, 1u32), (1, 2), (2, 2), (3, 1)] {
                for kind in [SumKind::Strict, SumKind::NonStrict] {
                    let e = depth2_product_expand(kind, a, b);
                    assert_eq!(e.lhs(n), e.rhs(n), "kind={kind:?} a={a} b={b} n={n}");
                }
            }
        }
    }

    #[test]
    fn sum_splitting_depth_two() {
        // S_n(a,b) = H_n(a,b) + diagonal, where the diagonal condenses to
        // H_n(a+b) + (1-q) H_n(a+b-1) under default twists
        for n in 0..=6u32 {
            for (a, b) in [(1u32, 1u32), (2, 1), (2, 2)] {
                let s = s_sum(n, &IndexSpec::default_twist(vec![a, b]));
                let h = h_sum(n, &IndexSpec::default_twist(vec![a, b]));
                let merged = h_sum(n, &IndexSpec::default_twist(vec![a + b]));
                let lowered = h_sum(n, &IndexSpec::default_twist(vec![a + b - 1]));
                let one_minus_q = RatFunc::from_poly(Poly::from_ints(&[1, -1]));
                let expect = &(&h + &merged) + &(&one_minus_q * &lowered);
                assert_eq!(s, expect, "a={a} b={b} n={n}");
            }
        }
    }

    #[test]
    fn ring_cache_term_is_exact() {
        let m = crate::cyclo::CycloModulus::new(5).unwrap();
        let cache = RingTermCache::new(&m);
        for k in 1..5u32 {
            for s in 1..=3u32 {
                for t in 0..=2u32 {
                    let direct = m.embed_ratfunc(&term(k, s, t)).unwrap();
                    assert_eq!(cache.term(k, s, t), direct);
                }
            }
        }
    }

    #[test]
    fn qint_times_one_minus_q() {
        for k in 1..=6u32 {
            let lhs = &q_int(k) * &Poly::from_ints(&[1, -1]);
            let mut coeffs = vec![Rational::from_integer(0.into()); k as usize + 1];
            coeffs[0] = rat_int(1);
            coeffs[k as usize] = rat_int(-1);
            assert_eq!(lhs, Poly::from_coeffs(coeffs));
        }
    }
}
