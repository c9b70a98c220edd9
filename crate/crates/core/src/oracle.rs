//! Brute-force ground truth: enumerate every codeword and test closure under
//! reversal or reverse complement directly, plus generators of small codes.
//!
//! Words of length `n <= 16` are packed as two 2n-bit planes (low and high
//! bit of each Z4 coordinate, `a`-block then `b`-block), so reversal,
//! complement and membership lookups are a handful of word operations.

use std::collections::HashSet;

use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::code::{canonicalize, torsion_module_of, CanonicalGenerators, CyclicCode, Z4Code};
use crate::howell::HowellForm;
use crate::poly::{binary_divisors_of_xn_minus_one, divides_mod_xn, generator_degree, BinPoly, Poly, RPoly};
use crate::ring::{ComplementPair, RTheta, ThetaParam, Z2};

/// Default limit on the number of enumerated codewords.
pub const DEFAULT_CAP: u64 = 1 << 24;

/// Longest code length handled by the packed enumeration.
pub const MAX_LENGTH: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("code has 2^{log2_size} words, above the enumeration cap {cap}")]
    CapExceeded { log2_size: u32, cap: u64 },
    #[error("brute force supports n <= {MAX_LENGTH}, got n = {0}")]
    TooLong(usize),
}

type Word = (u64, u64);

fn z4_add(a: Word, b: Word) -> Word {
    (a.0 ^ b.0, a.1 ^ b.1 ^ (a.0 & b.0))
}

fn z4_scale(a: Word, c: u8) -> Word {
    match c & 3 {
        0 => (0, 0),
        1 => a,
        2 => (0, a.0),
        _ => (a.0, a.1 ^ a.0),
    }
}

/// Packed codewords of one code, with a membership set.
struct Packed {
    n: usize,
    rows: Vec<Word>,
    orders: Vec<u8>,
    set: WordSet,
}

enum WordSet {
    Bits(Vec<u64>),
    Hash(HashSet<u64>),
}

impl WordSet {
    fn contains(&self, k: u64) -> bool {
        match self {
            WordSet::Bits(b) => (b[(k >> 6) as usize] >> (k & 63)) & 1 == 1,
            WordSet::Hash(h) => h.contains(&k),
        }
    }

    fn insert(&mut self, k: u64) {
        match self {
            WordSet::Bits(b) => b[(k >> 6) as usize] |= 1 << (k & 63),
            WordSet::Hash(h) => {
                h.insert(k);
            }
        }
    }
}

impl Packed {
    fn new(module: &HowellForm, n: usize, cap: u64) -> Result<Self, OracleError> {
        if n > MAX_LENGTH {
            return Err(OracleError::TooLong(n));
        }
        let l = module.log2_size();
        if l >= 63 || (1u64 << l) > cap {
            return Err(OracleError::CapExceeded { log2_size: l, cap });
        }
        let rows: Vec<Word> = module.rows().iter().map(|r| r.single_word().expect("n <= 16")).collect();
        let orders = module.row_orders().collect();
        let set = if 4 * n <= 28 {
            WordSet::Bits(vec![0; ((1u64 << (4 * n)) / 64).max(1) as usize])
        } else {
            WordSet::Hash(HashSet::with_capacity(1 << l))
        };
        let mut p = Packed { n, rows, orders, set };
        let mut set = std::mem::replace(&mut p.set, WordSet::Hash(HashSet::new()));
        p.for_each(|w| {
            set.insert(p.key(w));
            true
        });
        p.set = set;
        Ok(p)
    }

    fn key(&self, w: Word) -> u64 {
        w.0 | (w.1 << (2 * self.n))
    }

    fn contains(&self, w: Word) -> bool {
        self.set.contains(self.key(w))
    }

    /// Calls `f` on every codeword until it returns `false`; returns
    /// whether every call returned `true`.
    fn for_each(&self, mut f: impl FnMut(Word) -> bool) -> bool {
        let k = self.rows.len();
        let mut digits = vec![0u8; k];
        let mut v: Word = (0, 0);
        loop {
            if !f(v) {
                return false;
            }
            let mut j = 0;
            loop {
                if j == k {
                    return true;
                }
                v = z4_add(v, self.rows[j]);
                digits[j] += 1;
                if digits[j] == self.orders[j] {
                    digits[j] = 0;
                    v = z4_add(v, z4_scale(self.rows[j], 4 - (self.orders[j] & 3)));
                    j += 1;
                    continue;
                }
                break;
            }
        }
    }

    fn block_mask(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    fn rev_plane(&self, x: u64) -> u64 {
        let n = self.n as u32;
        let m = self.block_mask();
        let r = |y: u64| (y & m).reverse_bits() >> (64 - n);
        r(x) | (r(x >> n) << n)
    }

    fn reverse(&self, w: Word) -> Word {
        (self.rev_plane(w.0), self.rev_plane(w.1))
    }

    /// `t 1 - u s^r` on packed words.
    fn rev_comp(&self, w: Word, cp: &PackedPair) -> Word {
        let (lo, hi) = self.reverse(w);
        let m = self.block_mask();
        let n = self.n;
        let a = (lo & m, hi & m);
        let b = (lo >> n, hi >> n);
        let a2 = z4_add(z4_scale(a, cp.ua), z4_scale(b, cp.ub_theta_a));
        let b2 = z4_add(z4_scale(a, cp.ub), z4_scale(b, cp.ua_plus_ub_theta_b));
        let us = (a2.0 | (b2.0 << n), a2.1 | (b2.1 << n));
        z4_add(cp.t_word, z4_scale(us, 3))
    }
}

struct PackedPair {
    ua: u8,
    ub: u8,
    ub_theta_a: u8,
    ua_plus_ub_theta_b: u8,
    t_word: Word,
}

impl PackedPair {
    fn new(cp: &ComplementPair, n: usize) -> Self {
        let u = cp.u();
        let th = cp.theta().theta();
        let m = (1u64 << n) - 1;
        let plane = |c: u8, bit: u8| if (c >> bit) & 1 == 1 { m } else { 0 };
        let t = cp.t();
        PackedPair {
            ua: u.a,
            ub: u.b,
            ub_theta_a: (u.b * th.a) & 3,
            ua_plus_ub_theta_b: (u.a + u.b * th.b) & 3,
            t_word: (plane(t.a, 0) | (plane(t.b, 0) << n), plane(t.a, 1) | (plane(t.b, 1) << n)),
        }
    }
}

/// Whether every codeword's reversal is a codeword.
pub fn brute_reversible(c: &CyclicCode, cap: u64) -> Result<bool, OracleError> {
    let p = Packed::new(c.module(), c.n(), cap)?;
    Ok(p.for_each(|w| p.contains(p.reverse(w))))
}

/// Whether every codeword's `(u, t)` reverse complement is a codeword.
pub fn brute_rev_comp(c: &CyclicCode, cp: &ComplementPair, cap: u64) -> Result<bool, OracleError> {
    Ok(brute_all(c, std::slice::from_ref(cp), cap)?.rev_comp[0])
}

/// Brute-force verdicts for reversibility and several pairs at once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BruteVerdicts {
    pub reversible: bool,
    pub rev_comp: Vec<bool>,
    /// `false` when the verdicts come from random sampling and a `true`
    /// is therefore not proven.
    pub exhaustive: bool,
}

/// Enumerates the code once and checks reversal and each pair's reverse
/// complement on every word.
///
/// Along the enumeration the words `-u s^r` are maintained incrementally for
/// every distinct `u`, so each check costs one addition and one lookup. The
/// reversal check uses `-s^r`, which lies in the code iff `s^r` does.
pub fn brute_all(c: &CyclicCode, pairs: &[ComplementPair], cap: u64) -> Result<BruteVerdicts, OracleError> {
    let p = Packed::new(c.module(), c.n(), cap)?;
    let n = c.n();
    let mut units: Vec<RTheta> = vec![RTheta::ONE];
    for cp in pairs {
        if !units.contains(&cp.u()) {
            units.push(cp.u());
        }
    }
    // rc with t = 0 gives -u s^r, a Z4-linear map of s.
    let maps: Vec<PackedPair> = units
        .iter()
        .map(|&u| PackedPair::new(&ComplementPair::new(c.theta(), u, RTheta::ZERO).expect("u^2 = 1"), n))
        .collect();
    let images: Vec<Vec<Word>> = maps.iter().map(|m| p.rows.iter().map(|&r| p.rev_comp(r, m)).collect()).collect();
    let checks: Vec<(usize, Word)> = pairs
        .iter()
        .map(|cp| (units.iter().position(|&u| u == cp.u()).unwrap(), PackedPair::new(cp, n).t_word))
        .collect();
    let mut reversible = true;
    let mut rev_comp = vec![true; pairs.len()];
    let mut acc: Vec<Word> = vec![(0, 0); units.len()];
    let k = p.rows.len();
    let mut digits = vec![0u8; k];
    loop {
        if reversible && !p.contains(acc[0]) {
            reversible = false;
        }
        for (ok, &(ui, t)) in rev_comp.iter_mut().zip(&checks) {
            if *ok && !p.contains(z4_add(t, acc[ui])) {
                *ok = false;
            }
        }
        if !reversible && rev_comp.iter().all(|&x| !x) {
            break;
        }
        let mut j = 0;
        loop {
            if j == k {
                return Ok(BruteVerdicts { reversible, rev_comp, exhaustive: true });
            }
            digits[j] += 1;
            let wrap = digits[j] == p.orders[j];
            // Adding the image once, or rewinding by (order - 1) images.
            let mult = if wrap { 4 - ((p.orders[j] - 1) & 3) } else { 1 };
            for (a, img) in acc.iter_mut().zip(&images) {
                *a = z4_add(*a, z4_scale(img[j], mult));
            }
            if wrap {
                digits[j] = 0;
                j += 1;
                continue;
            }
            break;
        }
    }
    Ok(BruteVerdicts { reversible, rev_comp, exhaustive: true })
}

/// Tests `samples` random codewords with Howell membership instead of
/// enumerating the code. A `false` is a proof; a `true` is not.
pub fn sampled_all(c: &CyclicCode, pairs: &[ComplementPair], samples: usize, seed: u64) -> BruteVerdicts {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let module = c.module();
    let orders: Vec<u8> = module.row_orders().collect();
    let ctx = c.quotient();
    let mut reversible = true;
    let mut rev_comp = vec![true; pairs.len()];
    for _ in 0..samples {
        let coeffs: Vec<u8> = orders.iter().map(|&o| rng.gen_range(0..o)).collect();
        let w = crate::code::vector_to_word(&module.combine(&coeffs), c.n(), c.theta());
        let r = ctx.reverse(&w).expect("length n");
        reversible &= c.member(&r).expect("length n");
        for (ok, cp) in rev_comp.iter_mut().zip(pairs) {
            let rc = crate::complement::reverse_complement(&w, &ctx, cp).expect("length n");
            *ok &= c.member(&rc).expect("length n");
        }
    }
    BruteVerdicts { reversible, rev_comp, exhaustive: false }
}

/// [`brute_all`] when the code fits under `cap`, else [`sampled_all`].
pub fn oracle_all(c: &CyclicCode, pairs: &[ComplementPair], cap: u64, samples: usize, seed: u64) -> BruteVerdicts {
    match brute_all(c, pairs, cap) {
        Ok(v) => v,
        Err(_) => sampled_all(c, pairs, samples, seed),
    }
}

/// Bounds for [`generate_all_codes`].
#[derive(Clone, Copy, Debug, Default)]
pub struct GenerationLimits {
    /// Largest degree allowed for the offsets `g13, g14, g23, g24`.
    pub max_offset_degree: Option<usize>,
}

/// All canonical `(g, p, a)` of Z4 cyclic codes of length `n`.
pub fn z4_code_params(n: usize) -> Vec<(BinPoly, BinPoly, BinPoly)> {
    let mut choices = binary_divisors_of_xn_minus_one(n);
    choices.push(BinPoly::zero(Z2));
    let mut out = Vec::new();
    for a in &choices {
        for g in &choices {
            if !divides_mod_xn(a, g, n) {
                continue;
            }
            if g.is_zero() {
                out.push((g.clone(), BinPoly::zero(Z2), a.clone()));
                continue;
            }
            for pm in 0..(1u64 << generator_degree(a, n)) {
                let p = BinPoly::from_mask(pm);
                if Z4Code::new(n, g.clone(), p.clone(), a.clone()).is_ok() {
                    out.push((g.clone(), p, a.clone()));
                }
            }
        }
    }
    out
}

fn pair_poly(g: &BinPoly, p: &BinPoly) -> crate::poly::Z4Poly {
    &g.lift() + &p.lift().scale(2)
}

fn offsets(bound0: usize, bound1: usize, limit: Option<usize>) -> Vec<(BinPoly, BinPoly)> {
    let cap = |b: usize| limit.map_or(b, |l| b.min(l + 1));
    let (b0, b1) = (cap(bound0), cap(bound1));
    let mut out = Vec::new();
    for m0 in 0..(1u64 << b0) {
        for m1 in 0..(1u64 << b1) {
            out.push((BinPoly::from_mask(m0), BinPoly::from_mask(m1)));
        }
    }
    out
}

/// Every canonical presentation of a cyclic code of length `n` over
/// `R_theta`, i.e. every code, each exactly once.
///
/// Candidates satisfy the divisibility and degree constraints; a candidate
/// is kept only when `<g33 + 2 g34, 2 g44>` is the whole torsion code, which
/// makes the presentation the unique canonical one.
pub fn generate_all_codes(n: usize, theta: ThetaParam, limits: GenerationLimits) -> Vec<CanonicalGenerators> {
    assert!((1..=8).contains(&n), "exhaustive generation is limited to n <= 8");
    let params = z4_code_params(n);
    let k = theta.k_theta();
    let kmul = |p: &crate::poly::Z4Poly| p.embed(theta).scale(k);
    let zero = || BinPoly::zero(Z2);
    let mut out = Vec::new();
    for (g33, g34, g44) in &params {
        let tor = Z4Code::new(n, g33.clone(), g34.clone(), g44.clone()).expect("valid params");
        let tgens = [kmul(&pair_poly(g33, g34)), kmul(&g44.lift().scale(2))];
        let bound3 = generator_degree(g33, n);
        let bound4 = generator_degree(g44, n);
        let torsion_ok = |extra: &[RPoly]| -> bool {
            let mut gens: Vec<RPoly> = extra.to_vec();
            gens.extend(tgens.iter().cloned());
            &torsion_module_of(&gens, n) == tor.module()
        };
        for (g11, g12, g22) in &params {
            let lead1 = pair_poly(g11, g12).embed(theta);
            let lead2 = g22.lift().scale(2).embed(theta);
            let gen1 = |o: &(BinPoly, BinPoly)| &lead1 + &kmul(&pair_poly(&o.0, &o.1));
            let gen2 = |o: &(BinPoly, BinPoly)| &lead2 + &kmul(&pair_poly(&o.0, &o.1));
            let cands = |lead: &BinPoly| {
                if lead.is_zero() {
                    vec![(zero(), zero())]
                } else {
                    offsets(bound3, bound4, limits.max_offset_degree)
                }
            };
            let good1: Vec<_> = cands(g11).into_iter().filter(|o| torsion_ok(&[gen1(o)])).collect();
            let good2: Vec<_> = cands(g22).into_iter().filter(|o| torsion_ok(&[gen2(o)])).collect();
            for o1 in &good1 {
                for o2 in &good2 {
                    if !torsion_ok(&[gen1(o1), gen2(o2)]) {
                        continue;
                    }
                    let g = [
                        g11.clone(),
                        g12.clone(),
                        o1.0.clone(),
                        o1.1.clone(),
                        g22.clone(),
                        o2.0.clone(),
                        o2.1.clone(),
                        g33.clone(),
                        g34.clone(),
                        g44.clone(),
                    ];
                    if let Ok(c) = CanonicalGenerators::new(n, theta, g) {
                        out.push(c);
                    }
                }
            }
        }
    }
    out
}

/// A random code of length `n`: the canonical presentation of the code
/// generated by one to three random polynomials `c * d * r`, with `c` a
/// random ring element, `d` a random divisor of `z^n - 1` and `r` random.
pub fn random_code(n: usize, theta: ThetaParam, rng: &mut impl rand::Rng) -> CanonicalGenerators {
    let divisors = binary_divisors_of_xn_minus_one(n);
    let count = rng.gen_range(1..=3);
    let raw: Vec<RPoly> = (0..count)
        .map(|_| {
            let d = divisors[rng.gen_range(0..divisors.len())].lift().embed(theta);
            let c = RTheta::from_index(rng.gen_range(1..16));
            let r: Vec<RTheta> = (0..rng.gen_range(1..=n)).map(|_| RTheta::from_index(rng.gen_range(0..16))).collect();
            let r = if rng.gen_bool(0.5) { Poly::one(theta) } else { Poly::new(theta, r) };
            (&d * &r).scale(c)
        })
        .collect();
    canonicalize(&raw, n, theta).expect("canonical extraction")
}

/// `count` random codes from a seeded generator; codes with more than
/// `2^max_log2_size` words are redrawn when a bound is given.
pub fn sample_codes(n: usize, theta: ThetaParam, count: usize, seed: u64, max_log2_size: Option<u32>) -> Vec<CanonicalGenerators> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 32) ^ (theta.theta().index() as u64));
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let g = random_code(n, theta, &mut rng);
        if let Some(m) = max_log2_size {
            let c = CyclicCode::build(g.clone()).expect("canonical generators are valid");
            if c.log2_size() > m {
                continue;
            }
        }
        out.push(g);
    }
    out
}

/// Up to `count` distinct random codes, drawing at most `max_draws` times.
/// Fewer are returned when the family is small or rarely hit.
pub fn sample_distinct_codes(n: usize, theta: ThetaParam, count: usize, seed: u64, max_draws: usize) -> Vec<CanonicalGenerators> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 32) ^ (theta.theta().index() as u64));
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(count);
    for _ in 0..max_draws {
        if out.len() == count {
            break;
        }
        let g = random_code(n, theta, &mut rng);
        if seen.insert(g.clone()) {
            out.push(g);
        }
    }
    out
}

/// Independent recount of all codes of length `n`: closes every sum of
/// principal ideals under addition and counts distinct modules.
pub fn count_codes_by_ideal_sums(n: usize, theta: ThetaParam) -> usize {
    let ctx = crate::poly::QuotientContext::new(n, theta).expect("n > 0");
    // Principal ideals generated by every word of length n.
    let total = 16usize.pow(n as u32);
    let mut principal: HashSet<HowellForm> = HashSet::new();
    for idx in 0..total {
        let coeffs: Vec<RTheta> = (0..n).map(|i| RTheta::from_index(((idx >> (4 * i)) & 15) as u8)).collect();
        let w = ctx.reduce(&Poly::new(theta, coeffs));
        principal.insert(crate::code::module_of(&[w], n));
    }
    let principal: Vec<HowellForm> = principal.into_iter().collect();
    let mut all: HashSet<HowellForm> = principal.iter().cloned().collect();
    let mut frontier: Vec<HowellForm> = all.iter().cloned().collect();
    while let Some(m) = frontier.pop() {
        for p in &principal {
            let mut rows = crate::howell::Z4Matrix::new(2 * n);
            for r in m.rows().iter().chain(p.rows()) {
                rows.push(r.clone()).expect("width");
            }
            let s = rows.howellize();
            if all.insert(s.clone()) {
                frontier.push(s);
            }
        }
    }
    all.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complement::reverse_complement;
    use crate::corpus;
    use crate::ring::enumerate_complement_pairs;

    #[test]
    fn distinct_sampling() {
        let t: ThetaParam = "v".parse().unwrap();
        let a = sample_distinct_codes(4, t, 40, 3, 10_000);
        assert_eq!(a, sample_distinct_codes(4, t, 40, 3, 10_000));
        assert_eq!(a.len(), 40);
        assert_eq!(a.iter().collect::<HashSet<_>>().len(), 40);
        // Fewer than 40 codes of length 1 exist.
        let b = sample_distinct_codes(1, t, 40, 3, 2_000);
        assert!(b.len() < 40);
        assert_eq!(b.len(), generate_all_codes(1, t, GenerationLimits::default()).len());
    }

    #[test]
    fn examples_against_prototype_sizes() {
        // Word counts of the six built-in codes.
        let sizes = [8, 16, 10, 9, 18, 12];
        for (ex, &s) in corpus::examples().iter().zip(&sizes) {
            let c = CyclicCode::build(ex.gens.clone()).unwrap();
            assert_eq!(c.log2_size(), s, "{}", ex.id);
        }
    }

    #[test]
    fn brute_force_on_examples() {
        for ex in corpus::examples() {
            let c = CyclicCode::build(ex.gens.clone()).unwrap();
            // Every built-in code is reversible by enumeration.
            assert!(brute_reversible(&c, DEFAULT_CAP).unwrap(), "{}", ex.id);
        }
        let c = CyclicCode::build(corpus::example("ex1").unwrap().gens).unwrap();
        assert!(matches!(brute_reversible(&c, 100), Err(OracleError::CapExceeded { log2_size: 8, cap: 100 })));
    }

    #[test]
    fn packed_rev_comp_matches_polynomial_version() {
        for ex in corpus::examples().into_iter().filter(|e| e.gens.n() <= 4) {
            let c = CyclicCode::build(ex.gens).unwrap();
            let p = Packed::new(c.module(), c.n(), DEFAULT_CAP).unwrap();
            let ctx = c.quotient();
            let pairs = enumerate_complement_pairs(c.theta());
            let mut count = 0;
            p.for_each(|w| {
                let v = crate::howell::Z4Vector::from_entries(
                    &(0..2 * c.n()).map(|i| (((w.0 >> i) & 1) | (((w.1 >> i) & 1) << 1)) as u8).collect::<Vec<_>>(),
                );
                let s = crate::code::vector_to_word(&v, c.n(), c.theta());
                assert!(c.member(&s).unwrap());
                for cp in &pairs {
                    let rc = reverse_complement(&s, &ctx, cp).unwrap();
                    let packed = p.rev_comp(w, &PackedPair::new(cp, c.n()));
                    assert_eq!(crate::code::word_to_vector(&rc, c.n()).single_word().unwrap(), packed);
                }
                count += 1;
                true
            });
            assert_eq!(count, 1 << c.log2_size());
        }
    }

    #[test]
    fn small_lattices() {
        assert_eq!(binary_divisors_of_xn_minus_one(1).len(), 1);
        assert_eq!(binary_divisors_of_xn_minus_one(2).len(), 2);
        // n = 1: Z4 codes are 0, <2>, <1>.
        assert_eq!(z4_code_params(1).len(), 3);
        // n = 2: ideals of Z4[z]/(z^2 - 1).
        let m: HashSet<_> = z4_code_params(2)
            .into_iter()
            .map(|(g, p, a)| Z4Code::new(2, g, p, a).unwrap().module().clone())
            .collect();
        assert_eq!(m.len(), z4_code_params(2).len());
    }

    #[test]
    fn generation_matches_ideal_recount() {
        for n in 1..=2 {
            for t in ThetaParam::all() {
                let gen = generate_all_codes(n, t, GenerationLimits::default());
                let modules: HashSet<HowellForm> =
                    gen.iter().map(|g| CyclicCode::build(g.clone()).unwrap().module().clone()).collect();
                assert_eq!(modules.len(), gen.len(), "duplicates at n = {n}, theta = {t}");
                assert_eq!(gen.len(), count_codes_by_ideal_sums(n, t), "n = {n}, theta = {t}");
            }
        }
    }

    #[test]
    fn sampling_is_reproducible() {
        let t: ThetaParam = "v".parse().unwrap();
        let a = sample_codes(4, t, 5, 7, None);
        let b = sample_codes(4, t, 5, 7, None);
        assert_eq!(a, b);
        for g in a {
            assert!(CyclicCode::build(g).unwrap().is_canonical());
        }
    }

    #[test]
    fn sampled_oracle_finds_no_false_counterexample() {
        let c = CyclicCode::build(corpus::example("ex1").unwrap().gens).unwrap();
        let pairs = enumerate_complement_pairs(c.theta());
        let v = sampled_all(&c, &pairs, 50, 1);
        assert!(!v.exhaustive);
        assert!(v.reversible);
        assert_eq!(v.rev_comp, brute_all(&c, &pairs, DEFAULT_CAP).unwrap().rev_comp);
    }
}
