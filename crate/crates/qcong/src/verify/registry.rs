//! Grid expansion and execution of the check registry.
//!
//! Cells are enumerated deterministically from the configured bounds and
//! indexed before dispatch, so report ordering is independent of the worker
//! count. Each cell is a pure computation; running them in parallel only
//! needs the final ordered collection as a synchronization point.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::qmhs::{IndexSpec, SumKind};
use crate::rational::rat;
use crate::Rational;

use super::congruences::*;
use super::conjecture::*;
use super::identities::*;
use super::report::{CheckReport, ExtractedConstant};

/// Parameter bounds for grid expansion. The defaults match the standing
/// verification grid; the command line can narrow or widen them.
#[derive(Clone, Debug)]
pub struct GridBounds {
    /// Odd primes the modular checks run at.
    pub primes: Vec<u32>,
    /// Upper bound on n for the exact identities.
    pub max_n: u32,
    /// Upper bound on the exponent of depth-one congruences.
    pub max_exponent: u32,
    /// Upper bound on t for the repeated-argument families.
    pub max_t: u32,
    /// Upper bound on composition weight.
    pub max_weight: u32,
    /// Upper bound on the depth of randomly sampled specs.
    pub max_depth: u32,
    /// Random reversal specs per prime.
    pub reversal_samples: u32,
    /// Weight bound for the cyclic ones/twos sweep.
    pub max_r_ones_twos: u32,
    /// Weight bound for the cyclic twos/threes sweep.
    pub max_r_twos_threes: u32,
}

impl Default for GridBounds {
    fn default() -> Self {
        GridBounds {
            primes: vec![3, 5, 7, 11, 13],
            max_n: 8,
            max_exponent: 6,
            max_t: 12,
            max_weight: 5,
            max_depth: 3,
            reversal_samples: 20,
            max_r_ones_twos: 8,
            max_r_twos_threes: 9,
        }
    }
}

/// One schedulable verification with everything needed to run it.
#[derive(Clone, Debug)]
pub enum CellKind {
    Depth1 { p: u32, kind: Depth1Check, n: u32, t: u32 },
    Zhao { p: u32, t: u32, which: ZhaoCheck },
    ZhaoMonic { t: u32 },
    Homog { p: u32, t: u32, which: HomogCheck },
    Quasi { p: u32, a: u32, b: u32, which: QuasiCheck },
    Reversal { p: u32, spec: IndexSpec, kind: SumKind },
    ProductPair { p: u32, a: u32, b: u32, kind: SumKind },
    QbinNegation { p: u32, k: u32 },
    GenProduct { p: u32 },
    BradleyDuality { p: u32, pairs: Vec<(u32, u32)> },
    OnesDuality { p: u32, a: u32, b: u32 },
    StrictDuality { p: u32, comp: Vec<u32> },
    S121Collapse { p: u32, a: u32, b: u32 },
    ClLemma { p: u32, s: u32, delta: u32 },
    Dilcher { n: u32, s: u32 },
    Prodinger { n: u32, s: u32 },
    BradleyIdentity { n: u32, pairs: Vec<(u32, u32)> },
    StrictToMixed { n: u32, comp: Vec<u32> },
    MixedToStrict { n: u32, comp: Vec<u32> },
    QbinColumnSum { n: u32, j: u32 },
    QbinAlternatingSum { n: u32, j: u32 },
    TransformRoundtrip { n: u32, seed: TransformSeed },
    TransformNested { n: u32, r: u32, seed: TransformSeed },
    TransformDual { n: u32, r: u32, seed: TransformSeed },
    AppendRecursion { n: u32, comp: Vec<u32>, r: u32 },
    TsumAlternating { n: u32, comp: Vec<u32> },
    TsumWeighted { n: u32, comp: Vec<u32>, r: u32 },
    HsumRecovery { n: u32, comp: Vec<u32>, r: u32 },
    Kummer { n: u32, a: Rational, b: Rational },
    ChebyshevExpansion { p: u32 },
    Conjecture { p: u32, t: u32, d: Vec<u32>, family: CyclicFamily },
}

impl CellKind {
    pub fn check_id(&self) -> &'static str {
        match self {
            CellKind::Depth1 { kind, .. } => kind.id(),
            CellKind::Zhao { which, .. } => which.id(),
            CellKind::ZhaoMonic { .. } => "zhao.twos_monic",
            CellKind::Homog { which, .. } => which.id(),
            CellKind::Quasi { which, .. } => which.id(),
            CellKind::Reversal { kind, .. } => match kind {
                SumKind::Strict => "structural.reversal_h",
                SumKind::NonStrict => "structural.reversal_s",
            },
            CellKind::ProductPair { kind, .. } => match kind {
                SumKind::Strict => "structural.product_h",
                SumKind::NonStrict => "structural.product_s",
            },
            CellKind::QbinNegation { .. } => "structural.qbin_negation",
            CellKind::GenProduct { .. } => "structural.gen_product",
            CellKind::BradleyDuality { .. } => "structural.bradley_duality",
            CellKind::OnesDuality { .. } => "structural.ones_duality",
            CellKind::StrictDuality { .. } => "structural.strict_duality",
            CellKind::S121Collapse { .. } => "structural.s121_collapse",
            CellKind::ClLemma { .. } => "lemma.chapman",
            CellKind::Dilcher { .. } => "ident.dilcher",
            CellKind::Prodinger { .. } => "ident.prodinger",
            CellKind::BradleyIdentity { .. } => "ident.bradley",
            CellKind::StrictToMixed { .. } => "ident.strict_to_mixed",
            CellKind::MixedToStrict { .. } => "ident.mixed_to_strict",
            CellKind::QbinColumnSum { .. } => "ident.qbin_column_sum",
            CellKind::QbinAlternatingSum { .. } => "ident.qbin_alternating_sum",
            CellKind::TransformRoundtrip { .. } => "ident.qbin_transform_roundtrip",
            CellKind::TransformNested { .. } => "ident.qbin_transform_nested",
            CellKind::TransformDual { .. } => "ident.qbin_transform_dual",
            CellKind::AppendRecursion { .. } => "ident.append_recursion",
            CellKind::TsumAlternating { .. } => "ident.tsum_alternating",
            CellKind::TsumWeighted { .. } => "ident.tsum_weighted",
            CellKind::HsumRecovery { .. } => "ident.hsum_recovery",
            CellKind::Kummer { .. } => "ident.kummer",
            CellKind::ChebyshevExpansion { .. } => "ident.chebyshev_expansion",
            CellKind::Conjecture { family, .. } => family.id(),
        }
    }
}

/// An indexed cell; index fixes the output position regardless of workers.
#[derive(Clone, Debug)]
pub struct Cell {
    pub index: usize,
    pub kind: CellKind,
}

/// Result of one executed cell.
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub index: usize,
    pub report: CheckReport,
    pub constant: Option<ExtractedConstant>,
}

/// Runs one cell.
pub fn run_cell(cell: &Cell) -> RunOutcome {
    let (report, constant) = match &cell.kind {
        CellKind::Depth1 { p, kind, n, t } => (check_depth1(*p, *kind, *n, *t), None),
        CellKind::Zhao { p, t, which } => (check_zhao(*p, *t, *which), None),
        CellKind::ZhaoMonic { t } => {
            let (report, _constants) = check_zhao_monic(*t);
            (report, None)
        }
        CellKind::Homog { p, t, which } => (check_homogeneous(*p, *t, *which), None),
        CellKind::Quasi { p, a, b, which } => (check_quasi(*p, *a, *b, *which), None),
        CellKind::Reversal { p, spec, kind } => (check_reversal(*p, spec, *kind), None),
        CellKind::ProductPair { p, a, b, kind } => (check_product_pair(*p, *a, *b, *kind), None),
        CellKind::QbinNegation { p, k } => (check_qbin_negation(*p, *k), None),
        CellKind::GenProduct { p } => (check_gen_product(*p), None),
        CellKind::BradleyDuality { p, pairs } => (check_bradley_duality(*p, pairs), None),
        CellKind::OnesDuality { p, a, b } => (check_ones_duality(*p, *a, *b), None),
        CellKind::StrictDuality { p, comp } => (check_strict_duality(*p, comp), None),
        CellKind::S121Collapse { p, a, b } => (check_s121_collapse(*p, *a, *b), None),
        CellKind::ClLemma { p, s, delta } => (check_cl_lemma(*p, *s, *delta), None),
        CellKind::Dilcher { n, s } => (check_dilcher(*n, *s), None),
        CellKind::Prodinger { n, s } => (check_prodinger(*n, *s), None),
        CellKind::BradleyIdentity { n, pairs } => (check_bradley_identity(*n, pairs), None),
        CellKind::StrictToMixed { n, comp } => (check_strict_to_mixed(*n, comp), None),
        CellKind::MixedToStrict { n, comp } => (check_mixed_to_strict(*n, comp), None),
        CellKind::QbinColumnSum { n, j } => (check_qbin_column_sum(*n, *j), None),
        CellKind::QbinAlternatingSum { n, j } => (check_qbin_alternating_sum(*n, *j), None),
        CellKind::TransformRoundtrip { n, seed } => (check_transform_roundtrip(*n, seed), None),
        CellKind::TransformNested { n, r, seed } => (check_transform_nested(*n, *r, seed), None),
        CellKind::TransformDual { n, r, seed } => (check_transform_dual(*n, *r, seed), None),
        CellKind::AppendRecursion { n, comp, r } => (check_append_recursion(*n, comp, *r), None),
        CellKind::TsumAlternating { n, comp } => (check_tsum_alternating(*n, comp), None),
        CellKind::TsumWeighted { n, comp, r } => (check_tsum_weighted(*n, comp, *r), None),
        CellKind::HsumRecovery { n, comp, r } => (check_hsum_recovery(*n, comp, *r), None),
        CellKind::Kummer { n, a, b } => (check_kummer(*n, a, b), None),
        CellKind::ChebyshevExpansion { p } => (check_chebyshev_expansion(*p), None),
        CellKind::Conjecture { p, t, d, family } => {
            let outcome = conjecture_check(*p, *t, d, *family);
            (outcome.report, outcome.constant)
        }
    };
    RunOutcome {
        index: cell.index,
        report,
        constant,
    }
}

/// Runs cells strictly sequentially.
pub fn run_cells_seq(cells: &[Cell]) -> Vec<RunOutcome> {
    cells.iter().map(run_cell).collect()
}

/// Runs cells on a worker pool of the given size (0 = one thread per core).
/// Output order matches input order for any worker count.
#[cfg(feature = "parallel")]
pub fn run_cells(cells: &[Cell], workers: usize) -> Vec<RunOutcome> {
    if workers == 1 || cells.len() < 2 {
        return run_cells_seq(cells);
    }
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("worker pool construction");
    pool.install(|| cells.par_iter().map(run_cell).collect())
}

/// Sequential fallback when the crate is built without the parallel feature.
#[cfg(not(feature = "parallel"))]
pub fn run_cells(cells: &[Cell], _workers: usize) -> Vec<RunOutcome> {
    run_cells_seq(cells)
}

/// Wildcard match supporting `*` (any substring) and `?` (any one byte).
pub fn glob_match(pattern: &str, text: &str) -> bool {
    let p: Vec<u8> = pattern.bytes().collect();
    let t: Vec<u8> = text.bytes().collect();
    let (mut pi, mut ti) = (0usize, 0usize);
    let (mut star, mut mark) = (usize::MAX, 0usize);
    while ti < t.len() {
        if pi < p.len() && (p[pi] == b'?' || p[pi] == t[ti]) {
            pi += 1;
            ti += 1;
        } else if pi < p.len() && p[pi] == b'*' {
            star = pi;
            mark = ti;
            pi += 1;
        } else if star != usize::MAX {
            pi = star + 1;
            mark += 1;
            ti = mark;
        } else {
            return false;
        }
    }
    while pi < p.len() && p[pi] == b'*' {
        pi += 1;
    }
    pi == p.len()
}

/// Keeps cells whose check id matches any pattern (no patterns = keep all).
pub fn filter_cells(cells: Vec<Cell>, patterns: &[String]) -> Vec<Cell> {
    if patterns.is_empty() {
        return cells;
    }
    cells
        .into_iter()
        .filter(|c| patterns.iter().any(|p| glob_match(p, c.kind.check_id())))
        .collect()
}

fn index_cells(kinds: Vec<CellKind>) -> Vec<Cell> {
    kinds
        .into_iter()
        .enumerate()
        .map(|(index, kind)| Cell { index, kind })
        .collect()
}

/// All ordered compositions with weight in `1..=max_weight`.
pub fn compositions_up_to(max_weight: u32) -> Vec<Vec<u32>> {
    fn extend(prefix: &mut Vec<u32>, remaining: u32, out: &mut Vec<Vec<u32>>) {
        for part in 1..=remaining {
            prefix.push(part);
            out.push(prefix.clone());
            extend(prefix, remaining - part, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_weight, &mut out);
    out.sort();
    out
}

/// Tuples of positive pairs (a_j, b_j) with r parts and total sum at most
/// `max_total`, ordered deterministically.
fn pair_tuples(max_parts: usize, max_total: u32) -> Vec<Vec<(u32, u32)>> {
    fn extend(
        prefix: &mut Vec<(u32, u32)>,
        budget: u32,
        max_parts: usize,
        out: &mut Vec<Vec<(u32, u32)>>,
    ) {
        if prefix.len() == max_parts {
            return;
        }
        for a in 1..=budget.saturating_sub(1) {
            for b in 1..=budget - a {
                prefix.push((a, b));
                out.push(prefix.clone());
                extend(prefix, budget - a - b, max_parts, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_total, max_parts, &mut out);
    out.sort();
    out
}

/// Deterministic pseudo-random specs of bounded weight and depth, with
/// twists bounded by the exponents so the reversal map stays inside
/// polynomial twists.
pub fn sample_specs(seed: u64, count: u32, max_weight: u32, max_depth: u32) -> Vec<IndexSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let depth = rng.random_range(1..=max_depth.max(1));
            let mut s = Vec::new();
            let mut budget = max_weight;
            for i in 0..depth {
                let remaining_slots = depth - i - 1;
                let hi = budget.saturating_sub(remaining_slots).max(1);
                let part = rng.random_range(1..=hi);
                s.push(part);
                budget = budget.saturating_sub(part);
            }
            let t = s.iter().map(|&sj| rng.random_range(0..=sj)).collect();
            IndexSpec::new(s, t)
        })
        .collect()
}

/// The standing verification grid (congruences, identities, lemma), in a
/// fixed deterministic order.
pub fn registry_cells(bounds: &GridBounds) -> Vec<Cell> {
    let mut kinds = Vec::new();
    let primes = &bounds.primes;
    let n_exp = bounds.max_exponent;

    // depth-one congruences
    for &p in primes {
        for kind in [
            Depth1Check::AndrewsTwist0,
            Depth1Check::AndrewsTwist1,
            Depth1Check::ShiPanTwist0,
            Depth1Check::ShiPanTwist1,
        ] {
            kinds.push(CellKind::Depth1 { p, kind, n: 0, t: 0 });
        }
        for n in 1..=n_exp {
            kinds.push(CellKind::Depth1 { p, kind: Depth1Check::DilcherTwist1, n, t: 0 });
            kinds.push(CellKind::Depth1 { p, kind: Depth1Check::DilcherTwist0, n, t: 0 });
            kinds.push(CellKind::Depth1 { p, kind: Depth1Check::SingleDefault, n, t: 0 });
            for t in 1..=n {
                kinds.push(CellKind::Depth1 { p, kind: Depth1Check::GeneralTwist, n, t });
            }
        }
    }

    // repeated-argument families with zero twist
    for &p in primes {
        for t in 0..=(p - 1).min(bounds.max_t) {
            kinds.push(CellKind::Zhao { p, t, which: ZhaoCheck::Ones });
        }
        for t in 1..=(p - 1).min(bounds.max_t) {
            kinds.push(CellKind::Zhao { p, t, which: ZhaoCheck::TwosExplicit });
        }
    }
    for t in 1..=3u32.min(bounds.max_t) {
        kinds.push(CellKind::ZhaoMonic { t });
    }

    // homogeneous families
    for &p in primes {
        for t in 1..=(p - 1).min(bounds.max_t) {
            kinds.push(CellKind::Homog { p, t, which: HomogCheck::H2 });
            kinds.push(CellKind::Homog { p, t, which: HomogCheck::H3 });
            kinds.push(CellKind::Homog { p, t, which: HomogCheck::S1 });
        }
        for t in 0..=((p - 2) / 2).min(bounds.max_t) {
            kinds.push(CellKind::Homog { p, t, which: HomogCheck::S2 });
            if t >= 1 {
                kinds.push(CellKind::Homog { p, t, which: HomogCheck::S121Chain });
            }
        }
    }

    // quasi-homogeneous families
    for &p in primes {
        for total in 0..=p.saturating_sub(2) {
            for a in 0..=total {
                let b = total - a;
                kinds.push(CellKind::Quasi { p, a, b, which: QuasiCheck::H121 });
            }
        }
        let cap = (p.saturating_sub(4)) / 2; // a+b with 2(a+b+1)+1 < p
        for total in 0..=cap {
            for a in 0..=total {
                let b = total - a;
                kinds.push(CellKind::Quasi { p, a, b, which: QuasiCheck::S121 });
                kinds.push(CellKind::Quasi { p, a, b, which: QuasiCheck::H232 });
                kinds.push(CellKind::Quasi { p, a, b, which: QuasiCheck::S232 });
            }
        }
    }

    // structural relations
    for &p in primes {
        let specs = sample_specs(
            0x51C0DE + p as u64,
            bounds.reversal_samples,
            bounds.max_weight,
            bounds.max_depth,
        );
        for spec in specs {
            kinds.push(CellKind::Reversal { p, spec: spec.clone(), kind: SumKind::Strict });
            kinds.push(CellKind::Reversal { p, spec, kind: SumKind::NonStrict });
        }
        for a in 1..=3 {
            for b in 1..=3 {
                kinds.push(CellKind::ProductPair { p, a, b, kind: SumKind::Strict });
                kinds.push(CellKind::ProductPair { p, a, b, kind: SumKind::NonStrict });
            }
        }
        for k in 0..p {
            kinds.push(CellKind::QbinNegation { p, k });
        }
        kinds.push(CellKind::GenProduct { p });
        for pairs in pair_tuples(3, bounds.max_weight + 2) {
            kinds.push(CellKind::BradleyDuality { p, pairs });
        }
        for a in 1..=bounds.max_weight + 2 {
            for b in 1..=bounds.max_weight + 2 - a {
                kinds.push(CellKind::OnesDuality { p, a, b });
            }
        }
        for comp in compositions_up_to(bounds.max_weight) {
            kinds.push(CellKind::StrictDuality { p, comp });
        }
        for total in 0..=bounds.max_weight {
            for a in 0..=total {
                kinds.push(CellKind::S121Collapse { p, a, b: total - a });
            }
        }
    }

    // combinatorial coefficient lemma, both parities of p
    for p in 1..=12 {
        for s in 1..=3 {
            for delta in 0..=1 {
                kinds.push(CellKind::ClLemma { p, s, delta });
            }
        }
    }

    // exact identities over Q(q)
    let comps = compositions_up_to(bounds.max_weight);
    for n in 1..=bounds.max_n {
        for s in 1..=bounds.max_weight {
            kinds.push(CellKind::Dilcher { n, s });
            kinds.push(CellKind::Prodinger { n, s });
        }
        for pairs in pair_tuples(3, bounds.max_weight + 1) {
            kinds.push(CellKind::BradleyIdentity { n, pairs });
        }
        for comp in &comps {
            kinds.push(CellKind::StrictToMixed { n, comp: comp.clone() });
            kinds.push(CellKind::MixedToStrict { n, comp: comp.clone() });
        }
        for j in 1..=n {
            kinds.push(CellKind::QbinColumnSum { n, j });
            kinds.push(CellKind::QbinAlternatingSum { n, j });
        }
    }

    // transform lemmas over seed sequences
    let seeds = transform_seeds(bounds.max_n);
    for seed in &seeds {
        kinds.push(CellKind::TransformRoundtrip { n: bounds.max_n, seed: seed.clone() });
        for n in 1..=bounds.max_n {
            for r in 1..=bounds.max_weight {
                kinds.push(CellKind::TransformNested { n, r, seed: seed.clone() });
                kinds.push(CellKind::TransformDual { n, r, seed: seed.clone() });
            }
        }
    }

    // nested-sum recursions (compositions here may be empty)
    let mut comps_with_empty = vec![Vec::new()];
    comps_with_empty.extend(comps.iter().cloned());
    for n in 1..=bounds.max_n {
        for comp in &comps_with_empty {
            let weight: u32 = comp.iter().sum();
            if weight <= bounds.max_weight {
                kinds.push(CellKind::TsumAlternating { n, comp: comp.clone() });
            }
            for r in 1..=bounds.max_weight.saturating_sub(weight) {
                kinds.push(CellKind::AppendRecursion { n, comp: comp.clone(), r });
                kinds.push(CellKind::TsumWeighted { n, comp: comp.clone(), r });
                kinds.push(CellKind::HsumRecovery { n, comp: comp.clone(), r });
            }
        }
    }

    // scalar lemmas
    for n in 1..=10 {
        for (a, b) in [(rat(1, 2), rat(-1, 3)), (rat(3, 1), rat(2, 5)), (rat(-2, 7), rat(5, 4))] {
            kinds.push(CellKind::Kummer { n, a, b });
        }
    }
    for &p in primes {
        kinds.push(CellKind::ChebyshevExpansion { p });
    }

    index_cells(kinds)
}

/// The three standing seed sequences for the transform lemmas: one built
/// from depth-one strict sums and two random polynomial sequences.
pub fn transform_seeds(max_n: u32) -> Vec<TransformSeed> {
    let h_spec = IndexSpec::default_twist(vec![2]);
    vec![
        TransformSeed::from_h_sums(0, &h_spec, max_n),
        TransformSeed::random(1, 0xA11CE, max_n),
        TransformSeed::random(2, 0xB0B, max_n),
        TransformSeed::random(3, 0xCAFE, max_n),
    ]
}

/// The full cyclic-sum sweep within the configured weight bounds.
pub fn conjecture_grid_cells(bounds: &GridBounds) -> Vec<Cell> {
    let mut kinds = Vec::new();
    for (family, max_r) in [
        (CyclicFamily::OnesTwos, bounds.max_r_ones_twos),
        (CyclicFamily::TwosThrees, bounds.max_r_twos_threes),
    ] {
        for r in 1..=max_r {
            for t in 1..=r {
                for d in d_vectors(family, t, r) {
                    for &p in &bounds.primes {
                        if p > r + 1 {
                            kinds.push(CellKind::Conjecture { p, t, d: d.clone(), family });
                        }
                    }
                }
            }
        }
    }
    index_cells(kinds)
}

/// A single conjecture cell per requested prime.
pub fn conjecture_single_cells(
    family: CyclicFamily,
    t: u32,
    d: Vec<u32>,
    primes: &[u32],
) -> Vec<Cell> {
    index_cells(
        primes
            .iter()
            .map(|&p| CellKind::Conjecture { p, t, d: d.clone(), family })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::report::CheckStatus;

    #[test]
    fn glob_semantics() {
        assert!(glob_match("depth1.*", "depth1.andrews0"));
        assert!(glob_match("*", "anything"));
        assert!(glob_match("ident.?bin*", "ident.qbin_column_sum"));
        assert!(!glob_match("depth1.*", "homog.h2"));
        assert!(glob_match("conj.cg12", "conj.cg12"));
        assert!(!glob_match("conj.cg12", "conj.cg23"));
    }

    #[test]
    fn compositions_small() {
        let comps = compositions_up_to(3);
        assert!(comps.contains(&vec![1, 1, 1]));
        assert!(comps.contains(&vec![3]));
        assert_eq!(comps.iter().filter(|c| c.iter().sum::<u32>() == 3).count(), 4);
        assert_eq!(comps.len(), 1 + 2 + 4);
    }

    #[test]
    fn sampled_specs_are_deterministic_and_bounded() {
        let a = sample_specs(42, 10, 5, 3);
        let b = sample_specs(42, 10, 5, 3);
        assert_eq!(a, b);
        for spec in &a {
            assert!(spec.weight() <= 5);
            assert!(spec.depth() >= 1 && spec.depth() <= 3);
            for (s, t) in spec.s().iter().zip(spec.t()) {
                assert!(t <= s);
            }
        }
    }

    #[test]
    fn small_grid_runs_clean() {
        let bounds = GridBounds {
            primes: vec![3, 5],
            max_n: 3,
            max_exponent: 2,
            max_t: 2,
            max_weight: 2,
            max_depth: 2,
            reversal_samples: 3,
            max_r_ones_twos: 2,
            max_r_twos_threes: 3,
        };
        let cells = registry_cells(&bounds);
        assert!(!cells.is_empty());
        let outcomes = run_cells_seq(&cells);
        for o in &outcomes {
            assert_ne!(
                o.report.status,
                CheckStatus::Fail,
                "unexpected failure: {}",
                o.report
            );
        }
        // indices are the positions
        for (i, o) in outcomes.iter().enumerate() {
            assert_eq!(o.index, i);
        }
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_matches_sequential() {
        let bounds = GridBounds {
            primes: vec![5],
            max_n: 3,
            max_exponent: 2,
            max_t: 2,
            max_weight: 2,
            max_depth: 2,
            reversal_samples: 2,
            max_r_ones_twos: 2,
            max_r_twos_threes: 3,
        };
        let cells = registry_cells(&bounds);
        let seq = run_cells_seq(&cells);
        let par = run_cells(&cells, 4);
        assert_eq!(seq.len(), par.len());
        for (s, p) in seq.iter().zip(&par) {
            assert_eq!(s.index, p.index);
            assert_eq!(s.report.check_id, p.report.check_id);
            assert_eq!(s.report.status, p.report.status);
            assert_eq!(s.report.lhs, p.report.lhs);
            assert_eq!(s.report.rhs, p.report.rhs);
        }
    }

    #[test]
    fn conjecture_grid_respects_bounds() {
        let bounds = GridBounds {
            primes: vec![5, 7],
            max_r_ones_twos: 4,
            max_r_twos_threes: 5,
            ..GridBounds::default()
        };
        let cells = conjecture_grid_cells(&bounds);
        assert!(!cells.is_empty());
        for cell in &cells {
            if let CellKind::Conjecture { p, t, d, family } = &cell.kind {
                let r = family.weight(*t, d);
                assert!(*p > r + 1);
                match family {
                    CyclicFamily::OnesTwos => assert!(r <= 4),
                    CyclicFamily::TwosThrees => assert!(r <= 5),
                }
            } else {
                panic!("unexpected cell kind");
            }
        }
    }

    #[test]
    fn filtering_by_id() {
        let cells = registry_cells(&GridBounds {
            primes: vec![3],
            max_n: 2,
            max_exponent: 1,
            max_t: 1,
            max_weight: 1,
            max_depth: 1,
            reversal_samples: 1,
            max_r_ones_twos: 2,
            max_r_twos_threes: 3,
        });
        let only_depth1 = filter_cells(cells.clone(), &["depth1.*".to_string()]);
        assert!(!only_depth1.is_empty());
        assert!(only_depth1
            .iter()
            .all(|c| c.kind.check_id().starts_with("depth1.")));
        let all = filter_cells(cells.clone(), &[]);
        assert_eq!(all.len(), cells.len());
    }
}
