//! Congruence checks modulo Phi_p: depth-one results, homogeneous and
//! quasi-homogeneous families, structural relations (reversal, products,
//! dualities), and the combinatorial coefficient lemma.
//!
//! Right-hand sides with the prime in a binomial upper argument are computed
//! as exact rationals for the concrete prime, never symbolically in p.

use std::sync::Arc;
use std::time::Instant;

use num::traits::{One, Zero};

use crate::cyclo::{CycloElement, CycloModulus};
use crate::poly::{lagrange_interpolate, Poly};
use crate::qmhs::{h_sum_mod, s_sum_mod, t_sum_mod, IndexSpec, MixedSpec, RingTermCache, SumKind};
use crate::qobjects::QBinomialTable;
use crate::rational::{
    binomial, factorial, gen_binomial, primes_above, rat_int, rat_pow, Rational,
};
use crate::special::k_gf;

use super::report::{params, CheckReport, ExtractedConstant, Params};

pub(crate) fn modulus(p: u32) -> Arc<CycloModulus> {
    CycloModulus::new(p).expect("registry only enumerates odd primes")
}

/// (1-q)^e reduced into the ring.
pub(crate) fn one_minus_q_pow(m: &Arc<CycloModulus>, e: u32) -> CycloElement {
    m.reduce(&Poly::from_ints(&[1, -1]).pow(e))
}

/// c * (1-q)^e as a ring element.
pub(crate) fn scaled_power(m: &Arc<CycloModulus>, c: &Rational, e: u32) -> CycloElement {
    one_minus_q_pow(m, e).scale(c)
}

fn sign(n: u32) -> Rational {
    if n.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

// ---------------------------------------------------------------------------
// Depth-one congruences
// ---------------------------------------------------------------------------

/// Depth-one congruence families for single q-harmonic sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Depth1Check {
    /// H_{p-1}(1;0) = (p-1)/2 (1-q), p >= 3.
    AndrewsTwist0,
    /// H_{p-1}(1;1) = -(p-1)/2 (1-q), p >= 3.
    AndrewsTwist1,
    /// H_{p-1}(2;0) = -(p-1)(p-5)/12 (1-q)^2, p >= 5.
    ShiPanTwist0,
    /// H_{p-1}(2;1) = -(p^2-1)/12 (1-q)^2, p >= 5.
    ShiPanTwist1,
    /// H_{p-1}(n;1) = K_n(p) (1-q)^n, p >= 3, n >= 1.
    DilcherTwist1,
    /// H_{p-1}(n;0) = (1-q)^n ((p-1)/2 + sum_{m=2..n} K_m(p)), p >= 3.
    DilcherTwist0,
    /// H_{p-1}(n;t) = (1-q)^n sum_{m<t} C(t-1,m)(-1)^m K_{n-m}(p),
    /// p > 3, n >= t >= 1.
    GeneralTwist,
    /// H_{p-1}(n) with default twist = (-1)^n K_n(p) (1-q)^n, p >= 3.
    SingleDefault,
}

impl Depth1Check {
    pub fn id(self) -> &'static str {
        match self {
            Depth1Check::AndrewsTwist0 => "depth1.andrews0",
            Depth1Check::AndrewsTwist1 => "depth1.andrews1",
            Depth1Check::ShiPanTwist0 => "depth1.shipan0",
            Depth1Check::ShiPanTwist1 => "depth1.shipan1",
            Depth1Check::DilcherTwist1 => "depth1.dilcher1",
            Depth1Check::DilcherTwist0 => "depth1.dilcher0",
            Depth1Check::GeneralTwist => "depth1.twisted",
            Depth1Check::SingleDefault => "depth1.single",
        }
    }
}

/// Runs one depth-one congruence. `n` is the exponent (ignored by the four
/// fixed-exponent variants), `t` the twist (used by `GeneralTwist` only).
pub fn check_depth1(p: u32, kind: Depth1Check, n: u32, t: u32) -> CheckReport {
    let started = Instant::now();
    let (spec, rhs_scalar, weight, ps): (IndexSpec, Rational, u32, Params) = match kind {
        Depth1Check::AndrewsTwist0 => {
            if p < 3 {
                return CheckReport::hypothesis_violated(kind.id(), params(&[("p", p as i64)]), started);
            }
            (
                IndexSpec::new(vec![1], vec![0]),
                rat_int(p as i64 - 1) / rat_int(2),
                1,
                params(&[("p", p as i64)]),
            )
        }
        Depth1Check::AndrewsTwist1 => {
            if p < 3 {
                return CheckReport::hypothesis_violated(kind.id(), params(&[("p", p as i64)]), started);
            }
            (
                IndexSpec::new(vec![1], vec![1]),
                -rat_int(p as i64 - 1) / rat_int(2),
                1,
                params(&[("p", p as i64)]),
            )
        }
        Depth1Check::ShiPanTwist0 => {
            if p < 5 {
                return CheckReport::hypothesis_violated(kind.id(), params(&[("p", p as i64)]), started);
            }
            (
                IndexSpec::new(vec![2], vec![0]),
                -rat_int(p as i64 - 1) * rat_int(p as i64 - 5) / rat_int(12),
                2,
                params(&[("p", p as i64)]),
            )
        }
        Depth1Check::ShiPanTwist1 => {
            if p < 5 {
                return CheckReport::hypothesis_violated(kind.id(), params(&[("p", p as i64)]), started);
            }
            (
                IndexSpec::new(vec![2], vec![1]),
                -rat_int((p as i64) * (p as i64) - 1) / rat_int(12),
                2,
                params(&[("p", p as i64)]),
            )
        }
        Depth1Check::DilcherTwist1 => {
            let ps = params(&[("p", p as i64), ("n", n as i64)]);
            if p < 3 || n < 1 {
                return CheckReport::hypothesis_violated(kind.id(), ps, started);
            }
            (IndexSpec::new(vec![n], vec![1]), k_gf(n, p), n, ps)
        }
        Depth1Check::DilcherTwist0 => {
            let ps = params(&[("p", p as i64), ("n", n as i64)]);
            if p < 3 || n < 1 {
                return CheckReport::hypothesis_violated(kind.id(), ps, started);
            }
            let mut scalar = rat_int(p as i64 - 1) / rat_int(2);
            for m in 2..=n {
                scalar += k_gf(m, p);
            }
            (IndexSpec::new(vec![n], vec![0]), scalar, n, ps)
        }
        Depth1Check::GeneralTwist => {
            let ps = params(&[("p", p as i64), ("n", n as i64), ("t", t as i64)]);
            if p <= 3 || t < 1 || n < t {
                return CheckReport::hypothesis_violated(kind.id(), ps, started);
            }
            let mut scalar = Rational::zero();
            for m in 0..t {
                scalar += gen_binomial(&rat_int(t as i64 - 1), m) * sign(m) * k_gf(n - m, p);
            }
            (IndexSpec::new(vec![n], vec![t]), scalar, n, ps)
        }
        Depth1Check::SingleDefault => {
            let ps = params(&[("p", p as i64), ("s", n as i64)]);
            if p < 3 || n < 1 {
                return CheckReport::hypothesis_violated(kind.id(), ps, started);
            }
            (
                IndexSpec::default_twist(vec![n]),
                sign(n) * k_gf(n, p),
                n,
                ps,
            )
        }
    };
    let m = modulus(p);
    let cache = RingTermCache::new(&m);
    let lhs = h_sum_mod(&cache, &spec);
    let rhs = scaled_power(&m, &rhs_scalar, weight);
    CheckReport::compare(kind.id(), ps, &lhs, &rhs, started)
}

// ---------------------------------------------------------------------------
// Repeated-argument families with zero twist
// ---------------------------------------------------------------------------

/// Congruences for H_{p-1}({s}^t; {0}^t) strings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZhaoCheck {
    /// H_{p-1}({1}^t; {0}^t) = C(p-1,t) (1-q)^t / (t+1).
    Ones,
    /// H_{p-1}({2}^t; {0}^t) = ((-1)^t C(p-1,2t+1) + C(p-1,t)) (1-q)^{2t} / ((t+1)p), t >= 1, p > t.
    TwosExplicit,
}

impl ZhaoCheck {
    pub fn id(self) -> &'static str {
        match self {
            ZhaoCheck::Ones => "zhao.ones",
            ZhaoCheck::TwosExplicit => "zhao.twos",
        }
    }
}

pub fn check_zhao(p: u32, t: u32, which: ZhaoCheck) -> CheckReport {
    let started = Instant::now();
    let ps = params(&[("p", p as i64), ("t", t as i64)]);
    let m = modulus(p);
    let cache = RingTermCache::new(&m);
    match which {
        ZhaoCheck::Ones => {
            let spec = IndexSpec::new(vec![1; t as usize], vec![0; t as usize]);
            let lhs = h_sum_mod(&cache, &spec);
            let scalar = binomial(p as i64 - 1, t as i64) / rat_int(t as i64 + 1);
            let rhs = scaled_power(&m, &scalar, t);
            CheckReport::compare(which.id(), ps, &lhs, &rhs, started)
        }
        ZhaoCheck::TwosExplicit => {
            if t < 1 || p <= t {
                return CheckReport::hypothesis_violated(which.id(), ps, started);
            }
            let spec = IndexSpec::new(vec![2; t as usize], vec![0; t as usize]);
            let lhs = h_sum_mod(&cache, &spec);
            let scalar = (sign(t) * binomial(p as i64 - 1, 2 * t as i64 + 1)
                + binomial(p as i64 - 1, t as i64))
                / rat_int((t as i64 + 1) * p as i64);
            let rhs = scaled_power(&m, &scalar, 2 * t);
            CheckReport::compare(which.id(), ps, &lhs, &rhs, started)
        }
    }
}

/// Shape check for H_{p-1}({2}^t; {0}^t): the residue divided by
/// C(p-1,t)(1-q)^{2t} and rescaled by (-1)^t (2t+2)!/(2 t!) must be a
/// q-free constant for each prime, and those constants must interpolate to a
/// monic polynomial of degree t in p.
///
/// Uses the t+1 smallest primes above t as interpolation nodes. The report
/// compares the interpolated coefficient list against a template whose only
/// fixed entry is the monic leading coefficient.
pub fn check_zhao_monic(t: u32) -> (CheckReport, Vec<ExtractedConstant>) {
    let started = Instant::now();
    let nodes = primes_above(t.max(2), t as usize + 1);
    let mut ps = params(&[("t", t as i64)]);
    for (i, p) in nodes.iter().enumerate() {
        ps.insert(format!("p{i}"), *p as i64);
    }
    let id = "zhao.twos_monic";
    let mut constants = Vec::new();
    let mut points = Vec::new();
    for &p in &nodes {
        let m = modulus(p);
        let cache = RingTermCache::new(&m);
        let spec = IndexSpec::new(vec![2; t as usize], vec![0; t as usize]);
        let h = h_sum_mod(&cache, &spec);
        let inv_pow = one_minus_q_pow(&m, 2 * t)
            .invert()
            .expect("(1-q) is coprime to Phi_p");
        let rescale = sign(t) * Rational::from_integer(factorial(2 * t + 2))
            / (rat_int(2) * Rational::from_integer(factorial(t))
                * binomial(p as i64 - 1, t as i64));
        let x = (&h * &inv_pow).scale(&rescale);
        match x.as_constant() {
            Some(value) => {
                constants.push(ExtractedConstant {
                    p,
                    r: 2 * t,
                    t,
                    d: Vec::new(),
                    value: value.clone(),
                });
                points.push((rat_int(p as i64), value));
            }
            None => {
                let report = CheckReport::from_sides(
                    id,
                    ps,
                    &x,
                    &"a q-free constant",
                    false,
                    started,
                );
                return (report, constants);
            }
        }
    }
    let interpolated = lagrange_interpolate(&points);
    let monic_of_degree_t =
        interpolated.degree() == Some(t as usize) && interpolated.leading_coeff().is_one();
    let mut template: Vec<String> = interpolated.coeffs().iter().map(|_| "?".into()).collect();
    template.resize(t as usize + 1, "?".into());
    *template.last_mut().unwrap() = "1".into();
    let rhs = format!("[{}]", template.join(", "));
    let report = CheckReport::from_sides(id, ps, &interpolated, &rhs, monic_of_degree_t, started);
    (report, constants)
}

// ---------------------------------------------------------------------------
// Homogeneous families
// ---------------------------------------------------------------------------

/// Congruences for homogeneous strings (and the chain S(1,{2}^{t-1},1)).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomogCheck {
    /// H_{p-1}({2}^t) = (-1)^t C(p+t,2t+1) (1-q)^{2t} / (p(t+1)), t >= 1, p > t.
    H2,
    /// S_{p-1}({2}^t) = (1-q)^{2t} sum_i (t C(t-1,i) + (t-1) C(t,i)) (-1)^i K_{2t-i}, t >= 0, p > 2t+1.
    S2,
    /// H_{p-1}({3}^t) = (C(p+2t+1,3t+2) + C(-p+2t+1,3t+2)) (1-q)^{3t} / ((t+1)p^2), t >= 1, p > t.
    H3,
    /// S_{p-1}({1}^t) = -K_t(p) (1-q)^t, t >= 1, p > t.
    S1,
    /// S_{p-1}(1,{2}^{t-1},1) = (1-q)^{2t} sum_j (...)(-1)^{j+1} K_{2t-j}, t >= 1, p > 2t+1.
    S121Chain,
}

impl HomogCheck {
    pub fn id(self) -> &'static str {
        match self {
            HomogCheck::H2 => "homog.h2",
            HomogCheck::S2 => "homog.s2",
            HomogCheck::H3 => "homog.h3",
            HomogCheck::S1 => "homog.s1",
            HomogCheck::S121Chain => "homog.s121_chain",
        }
    }
}

/// The alternating K-combination shared by the non-strict homogeneous and
/// quasi-homogeneous families: sum_i (t C(t-1,i) + (t-1) C(t,i)) (-1)^i K_{2t-i}(p).
fn s2_scalar(p: u32, t: u32) -> Rational {
    let mut acc = Rational::zero();
    for i in 0..=t {
        let weight = rat_int(t as i64) * gen_binomial(&rat_int(t as i64 - 1), i)
            + rat_int(t as i64 - 1) * gen_binomial(&rat_int(t as i64), i);
        acc += weight * sign(i) * k_gf(2 * t - i, p);
    }
    acc
}

pub fn check_homogeneous(p: u32, t: u32, which: HomogCheck) -> CheckReport {
    let started = Instant::now();
    let ps = params(&[("p", p as i64), ("t", t as i64)]);
    let id = which.id();
    let hypothesis = match which {
        HomogCheck::H2 | HomogCheck::H3 | HomogCheck::S1 => t >= 1 && p > t,
        HomogCheck::S2 => p > 2 * t + 1,
        HomogCheck::S121Chain => t >= 1 && p > 2 * t + 1,
    };
    if !hypothesis {
        return CheckReport::hypothesis_violated(id, ps, started);
    }
    let m = modulus(p);
    let cache = RingTermCache::new(&m);
    let (lhs, rhs) = match which {
        HomogCheck::H2 => {
            let lhs = h_sum_mod(&cache, &IndexSpec::repeated(2, t));
            let scalar = sign(t) * binomial(p as i64 + t as i64, 2 * t as i64 + 1)
                / rat_int(p as i64 * (t as i64 + 1));
            (lhs, scaled_power(&m, &scalar, 2 * t))
        }
        HomogCheck::S2 => {
            let lhs = s_sum_mod(&cache, &IndexSpec::repeated(2, t));
            (lhs, scaled_power(&m, &s2_scalar(p, t), 2 * t))
        }
        HomogCheck::H3 => {
            let lhs = h_sum_mod(&cache, &IndexSpec::repeated(3, t));
            let scalar = (binomial(p as i64 + 2 * t as i64 + 1, 3 * t as i64 + 2)
                + binomial(-(p as i64) + 2 * t as i64 + 1, 3 * t as i64 + 2))
                / rat_int((t as i64 + 1) * (p as i64) * (p as i64));
            (lhs, scaled_power(&m, &scalar, 3 * t))
        }
        HomogCheck::S1 => {
            let lhs = s_sum_mod(&cache, &IndexSpec::repeated(1, t));
            (lhs, scaled_power(&m, &(-k_gf(t, p)), t))
        }
        HomogCheck::S121Chain => {
            let mut s = vec![1u32];
            s.extend(std::iter::repeat_n(2, t as usize - 1));
            s.push(1);
            let lhs = s_sum_mod(&cache, &IndexSpec::default_twist(s));
            (lhs, scaled_power(&m, &(-s2_scalar(p, t)), 2 * t))
        }
    };
    CheckReport::compare(id, ps, &lhs, &rhs, started)
}

// ---------------------------------------------------------------------------
// Quasi-homogeneous families
// ---------------------------------------------------------------------------

/// Congruences for symmetrized pairs of quasi-homogeneous sums, with
/// t = a + b + 1 throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuasiCheck {
    /// H({1}^a,2,{1}^b) + H({1}^b,2,{1}^a) = -C(p+1,t+2)(1-q)^{t+1}/p, p > t.
    H121,
    /// S({1}^a,2,{1}^b) + S({1}^b,2,{1}^a) = (1-q)^{t+1}(K_t - K_{t+1} - K_{a+1}K_{b+1}), p > 2t+1.
    S121,
    /// H({2}^a,3,{2}^b) + H({2}^b,3,{2}^a) = (-1)^{t-1} C(p+t,2t+1)(1-q)^{2t+1}/(p(t+1)), p > 2t+1.
    H232,
    /// S({2}^a,3,{2}^b) + S({2}^b,3,{2}^a) = -(1-q)^{2t+1} sum_i (...)(-1)^i K_{2t-i}, p > 2t+1.
    S232,
}

impl QuasiCheck {
    pub fn id(self) -> &'static str {
        match self {
            QuasiCheck::H121 => "quasi.h121",
            QuasiCheck::S121 => "quasi.s121",
            QuasiCheck::H232 => "quasi.h232",
            QuasiCheck::S232 => "quasi.s232",
        }
    }
}

pub fn check_quasi(p: u32, a: u32, b: u32, which: QuasiCheck) -> CheckReport {
    let started = Instant::now();
    let t = a + b + 1;
    let ps = params(&[("p", p as i64), ("a", a as i64), ("b", b as i64)]);
    let id = which.id();
    let hypothesis = match which {
        QuasiCheck::H121 => p > t,
        QuasiCheck::S121 | QuasiCheck::H232 | QuasiCheck::S232 => p > 2 * t + 1,
    };
    if !hypothesis {
        return CheckReport::hypothesis_violated(id, ps, started);
    }
    let m = modulus(p);
    let cache = RingTermCache::new(&m);
    let symmetrized = |base: u32, insert: u32, eval: &dyn Fn(&IndexSpec) -> CycloElement| {
        let fwd = IndexSpec::default_twist(quasi_string(base, insert, a, b));
        let rev = IndexSpec::default_twist(quasi_string(base, insert, b, a));
        &eval(&fwd) + &eval(&rev)
    };
    let (lhs, rhs) = match which {
        QuasiCheck::H121 => {
            let lhs = symmetrized(1, 2, &|s| h_sum_mod(&cache, s));
            let scalar =
                -binomial(p as i64 + 1, t as i64 + 2) / rat_int(p as i64);
            (lhs, scaled_power(&m, &scalar, t + 1))
        }
        QuasiCheck::S121 => {
            let lhs = symmetrized(1, 2, &|s| s_sum_mod(&cache, s));
            let scalar =
                k_gf(t, p) - k_gf(t + 1, p) - k_gf(a + 1, p) * k_gf(b + 1, p);
            (lhs, scaled_power(&m, &scalar, t + 1))
        }
        QuasiCheck::H232 => {
            let lhs = symmetrized(2, 3, &|s| h_sum_mod(&cache, s));
            let scalar = sign(t - 1) * binomial(p as i64 + t as i64, 2 * t as i64 + 1)
                / rat_int(p as i64 * (t as i64 + 1));
            (lhs, scaled_power(&m, &scalar, 2 * t + 1))
        }
        QuasiCheck::S232 => {
            let lhs = symmetrized(2, 3, &|s| s_sum_mod(&cache, s));
            (lhs, scaled_power(&m, &(-s2_scalar(p, t)), 2 * t + 1))
        }
    };
    CheckReport::compare(id, ps, &lhs, &rhs, started)
}

/// The composition {base}^a, insert, {base}^b.
fn quasi_string(base: u32, insert: u32, a: u32, b: u32) -> Vec<u32> {
    let mut s = vec![base; a as usize];
    s.push(insert);
    s.extend(std::iter::repeat_n(base, b as usize));
    s
}

// ---------------------------------------------------------------------------
// Structural relations
// ---------------------------------------------------------------------------

/// Reversal: X_{p-1}(s;t) = (-1)^w X_{p-1}(reverse(s); reverse(s)-reverse(t))
/// for X in {H, S}.
pub fn check_reversal(p: u32, spec: &IndexSpec, kind: SumKind) -> CheckReport {
    let started = Instant::now();
    let id = match kind {
        SumKind::Strict => "structural.reversal_h",
        SumKind::NonStrict => "structural.reversal_s",
    };
    let mut ps = params(&[("p", p as i64)]);
    encode_spec(&mut ps, spec);
    let m = modulus(p);
    let cache = RingTermCache::new(&m);
    let eval = |s: &IndexSpec| match kind {
        SumKind::Strict => h_sum_mod(&cache, s),
        SumKind::NonStrict => s_sum_mod(&cache, s),
    };
    let lhs = eval(spec);
    let reversed = spec.reverse().twist_complement();
    let rhs = eval(&reversed).scale(&sign(spec.weight()));
    CheckReport::compare(id, ps, &lhs, &rhs, started)
}

/// Symmetrized product expansion at depth two:
/// X(a,b) + X(b,a) = (-1)^{a+b}(1-q)^{a+b}(K_a K_b -/+ K_{a+b} +/- K_{a+b-1}).
pub fn check_product_pair(p: u32, a: u32, b: u32, kind: SumKind) -> CheckReport {
    let started = Instant::now();
    let id = match kind {
        SumKind::Strict => "structural.product_h",
        SumKind::NonStrict => "structural.product_s",
    };
    let ps = params(&[("p", p as i64), ("a", a as i64), ("b", b as i64)]);
    if a < 1 || b < 1 {
        return CheckReport::hypothesis_violated(id, ps, started);
    }
    let m = modulus(p);
    let cache = RingTermCache::new(&m);
    let eval = |s: Vec<u32>| {
        let spec = IndexSpec::default_twist(s);
        match kind {
            SumKind::Strict => h_sum_mod(&cache, &spec),
            SumKind::NonStrict => s_sum_mod(&cache, &spec),
        }
    };
    let lhs = &eval(vec![a, b]) + &eval(vec![b, a]);
    let ka_kb = k_gf(a, p) * k_gf(b, p);
    let diff = k_gf(a + b, p) - k_gf(a + b - 1, p);
    let scalar = sign(a + b)
        * match kind {
            SumKind::Strict => ka_kb - diff,
            SumKind::NonStrict => ka_kb + diff,
        };
    let rhs = scaled_power(&m, &scalar, a + b);
    CheckReport::compare(id, ps, &lhs, &rhs, started)
}

/// qbin(p-1, k) = (-1)^k q^{-C(k+1,2)} in the ring.
pub fn check_qbin_negation(p: u32, k: u32) -> CheckReport {
    let started = Instant::now();
    let id = "structural.qbin_negation";
    let ps = params(&[("p", p as i64), ("k", k as i64)]);
    if k >= p {
        return CheckReport::hypothesis_violated(id, ps, started);
    }
    let m = modulus(p);
    let lhs = m.reduce(&QBinomialTable::new(p - 1).get(p - 1, k as i64));
    let exponent = -((k as i64 + 1) * k as i64 / 2);
    let rhs = m.q_pow(exponent).scale(&sign(k));
    CheckReport::compare(id, ps, &lhs, &rhs, started)
}

/// The generating product of the all-ones sums:
/// prod_{k<p} (1 + x/(1-q^k)) = ((1+x)^p - 1)/(px), compared coefficient-wise
/// in x (all p coefficients as ring elements).
pub fn check_gen_product(p: u32) -> CheckReport {
    let started = Instant::now();
    let id = "structural.gen_product";
    let ps = params(&[("p", p as i64)]);
    let m = modulus(p);
    // left side: expand the product of linear factors over the ring
    let mut coeffs = vec![m.one()];
    for k in 1..p {
        let mut lin = Poly::from_ints(&[1]);
        lin = &lin - &Poly::monomial(Rational::one(), k as usize);
        let c = m
            .reduce(&lin)
            .invert()
            .expect("1 - q^k is coprime to Phi_p for k < p");
        // multiply (sum coeffs[l] x^l) by (1 + c x)
        let mut next = Vec::with_capacity(coeffs.len() + 1);
        next.push(coeffs[0].clone());
        for l in 1..=coeffs.len() {
            let carry = &coeffs[l - 1] * &c;
            if l < coeffs.len() {
                next.push(&coeffs[l] + &carry);
            } else {
                next.push(carry);
            }
        }
        coeffs = next;
    }
    // right side: coefficient of x^l in ((1+x)^p - 1)/(px) is C(p, l+1)/p
    let rhs: Vec<CycloElement> = (0..p)
        .map(|l| m.from_rational(binomial(p as i64, l as i64 + 1) / rat_int(p as i64)))
        .collect();
    let lhs_text = join_elements(&coeffs);
    let rhs_text = join_elements(&rhs);
    let equal = coeffs == rhs;
    CheckReport::from_sides(id, ps, &lhs_text, &rhs_text, equal, started)
}

/// Non-strict duality from the q-binomial-weighted sums: for positive pairs
/// (a_j, b_j), the sum built from the forward reading equals the sign-twisted
/// sum built from the reversed reading.
pub fn check_bradley_duality(p: u32, pairs: &[(u32, u32)]) -> CheckReport {
    let started = Instant::now();
    let id = "structural.bradley_duality";
    let mut ps = params(&[("p", p as i64)]);
    encode_pairs(&mut ps, pairs);
    assert!(pairs.iter().all(|&(a, b)| a >= 1 && b >= 1));
    let m = modulus(p);
    let cache = RingTermCache::new(&m);
    let lhs_spec = IndexSpec::default_twist(bradley_rhs_composition(pairs));
    let reversed: Vec<(u32, u32)> = pairs.iter().rev().map(|&(a, b)| (b, a)).collect();
    let rhs_spec = IndexSpec::default_twist(bradley_rhs_composition(&reversed));
    let total: u32 = pairs.iter().map(|&(a, b)| a + b).sum();
    let lhs = s_sum_mod(&cache, &lhs_spec);
    let rhs = s_sum_mod(&cache, &rhs_spec).scale(&sign(total));
    CheckReport::compare(id, ps, &lhs, &rhs, started)
}

/// S_{p-1}({1}^{a-1}, b) = (-1)^{a+b} S_{p-1}({1}^{b-1}, a), a, b >= 1.
pub fn check_ones_duality(p: u32, a: u32, b: u32) -> CheckReport {
    let started = Instant::now();
    let id = "structural.ones_duality";
    let ps = params(&[("p", p as i64), ("a", a as i64), ("b", b as i64)]);
    if a < 1 || b < 1 {
        return CheckReport::hypothesis_violated(id, ps, started);
    }
    let m = modulus(p);
    let cache = RingTermCache::new(&m);
    let mut s_lhs = vec![1u32; a as usize - 1];
    s_lhs.push(b);
    let mut s_rhs = vec![1u32; b as usize - 1];
    s_rhs.push(a);
    let lhs = s_sum_mod(&cache, &IndexSpec::default_twist(s_lhs));
    let rhs = s_sum_mod(&cache, &IndexSpec::default_twist(s_rhs)).scale(&sign(a + b));
    CheckReport::compare(id, ps, &lhs, &rhs, started)
}

/// Strict-sum duality: H_{p-1}(s) = (-1)^l T_{p-1}(chain of s) in the ring.
pub fn check_strict_duality(p: u32, composition: &[u32]) -> CheckReport {
    let started = Instant::now();
    let id = "structural.strict_duality";
    let mut ps = params(&[("p", p as i64)]);
    encode_composition(&mut ps, composition);
    let m = modulus(p);
    let cache = RingTermCache::new(&m);
    let lhs = h_sum_mod(&cache, &IndexSpec::default_twist(composition.to_vec()));
    let mixed = MixedSpec::from_composition(composition);
    let rhs = t_sum_mod(&cache, &mixed).scale(&sign(composition.len() as u32));
    CheckReport::compare(id, ps, &lhs, &rhs, started)
}

/// Collapse of a 1...1,2,1...1 string to depth two:
/// S_{p-1}({1}^a,2,{1}^b) = (-1)^{a+b+1} S_{p-1}(b+1, a+1).
pub fn check_s121_collapse(p: u32, a: u32, b: u32) -> CheckReport {
    let started = Instant::now();
    let id = "structural.s121_collapse";
    let ps = params(&[("p", p as i64), ("a", a as i64), ("b", b as i64)]);
    let m = modulus(p);
    let cache = RingTermCache::new(&m);
    let lhs = s_sum_mod(&cache, &IndexSpec::default_twist(quasi_string(1, 2, a, b)));
    let rhs = s_sum_mod(&cache, &IndexSpec::default_twist(vec![b + 1, a + 1]))
        .scale(&sign(a + b + 1));
    CheckReport::compare(id, ps, &lhs, &rhs, started)
}

/// The composition Cat_{j<r} ({1}^{a_j - 1}, b_j + 1), {1}^{a_r - 1}, b_r.
pub fn bradley_rhs_composition(pairs: &[(u32, u32)]) -> Vec<u32> {
    let r = pairs.len();
    let mut s = Vec::new();
    for (j, &(a, b)) in pairs.iter().enumerate() {
        s.extend(std::iter::repeat_n(1, a as usize - 1));
        if j + 1 < r {
            s.push(b + 1);
        } else {
            s.push(b);
        }
    }
    s
}

// ---------------------------------------------------------------------------
// Combinatorial coefficient lemma
// ---------------------------------------------------------------------------

/// Extracts [x^{3s}] from sum_k (-1)^k C(p-k-d, k-d) (2-x)^{p-2k} (1+x)^{e(k)}
/// and compares both variants (e = s-k and e = p+s-k) against their closed
/// binomial forms. Stated for all positive integers p, not only primes.
pub fn check_cl_lemma(p: u32, s: u32, delta: u32) -> CheckReport {
    let started = Instant::now();
    let id = "lemma.chapman";
    let ps = params(&[("p", p as i64), ("s", s as i64), ("delta", delta as i64)]);
    assert!(delta <= 1, "delta must be 0 or 1");
    if p < 1 || s < 1 {
        return CheckReport::hypothesis_violated(id, ps, started);
    }
    let target = 3 * s as usize;
    let mut t_val = Rational::zero();
    let mut t_tilde = Rational::zero();
    for k in delta..=(p - delta) {
        let weight =
            sign(k) * binomial(p as i64 - k as i64 - delta as i64, k as i64 - delta as i64);
        if weight.is_zero() {
            continue;
        }
        // (2-x)^{p-2k} = 2^{p-2k} (1 - x/2)^{p-2k}, truncated at x^{3s}
        let e2 = p as i64 - 2 * k as i64;
        let two_part = Poly::binomial_series(&(-rat_int(1) / rat_int(2)), e2, target)
            .scale(&rat_pow(&rat_int(2), e2));
        let one_part = Poly::binomial_series(&Rational::one(), s as i64 - k as i64, target);
        let one_part_shifted =
            Poly::binomial_series(&Rational::one(), p as i64 + s as i64 - k as i64, target);
        let conv = |a: &Poly, b: &Poly| -> Rational {
            let mut acc = Rational::zero();
            for j in 0..=target {
                acc += a.coeff(j) * b.coeff(target - j);
            }
            acc
        };
        t_val += &weight * conv(&two_part, &one_part);
        t_tilde += weight * conv(&two_part, &one_part_shifted);
    }
    let closed_t = sign(delta)
        * binomial(
            s as i64 + p as i64 - 2 * delta as i64 + 1,
            3 * s as i64 + 1,
        );
    let closed_t_tilde = sign(s + delta)
        * binomial(
            2 * s as i64 + p as i64 - 2 * delta as i64 + 1,
            3 * s as i64 + 1,
        );
    let lhs = format!("[{t_val}, {t_tilde}]");
    let rhs = format!("[{closed_t}, {closed_t_tilde}]");
    let equal = t_val == closed_t && t_tilde == closed_t_tilde;
    CheckReport::from_sides(id, ps, &lhs, &rhs, equal, started)
}

// ---------------------------------------------------------------------------
// Parameter encoding helpers
// ---------------------------------------------------------------------------

pub(crate) fn encode_spec(ps: &mut Params, spec: &IndexSpec) {
    for (i, &s) in spec.s().iter().enumerate() {
        ps.insert(format!("s{i}"), s as i64);
    }
    for (i, &t) in spec.t().iter().enumerate() {
        ps.insert(format!("t{i}"), t as i64);
    }
}

pub(crate) fn encode_composition(ps: &mut Params, composition: &[u32]) {
    for (i, &s) in composition.iter().enumerate() {
        ps.insert(format!("s{i}"), s as i64);
    }
}

pub(crate) fn encode_pairs(ps: &mut Params, pairs: &[(u32, u32)]) {
    for (i, &(a, b)) in pairs.iter().enumerate() {
        ps.insert(format!("a{i}"), a as i64);
        ps.insert(format!("b{i}"), b as i64);
    }
}

fn join_elements(elements: &[CycloElement]) -> String {
    elements
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
