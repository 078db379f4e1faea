use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::code::{is_subcode, LinearCode};
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Default number of candidate vectors a distance computation may examine.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

/// Default dimension cap for weight distributions.
pub const DEFAULT_DISTRIBUTION_CAP: usize = 24;

/// How the lower end of a [`DistanceBound`] was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceMethod {
    /// Exhaustive codeword enumeration.
    Enumeration,
    /// Ascending-weight search over error supports.
    WeightSearch,
    /// BCH bound from consecutive roots.
    DesignDistance,
    /// One-step majority-logic bound from a parity-check matrix.
    MajorityLogic,
    /// Minimum weight known in closed form for the code family.
    KnownFamily,
    /// Lower bound stated for the code family.
    FamilyBound,
}

/// Bounds on a (relative) minimum distance with its provenance.
///
/// `exact` holds iff `lower == upper`; `upper` is witnessed by a codeword or
/// is `n` when no witness was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceBound {
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    pub method: DistanceMethod,
}

impl DistanceBound {
    pub fn exact(d: usize, method: DistanceMethod) -> Self {
        DistanceBound { lower: d, upper: d, exact: true, method }
    }

    pub fn bound(lower: usize, upper: usize, method: DistanceMethod) -> Self {
        DistanceBound { lower, upper, exact: lower == upper, method }
    }

    /// The distance when exact.
    pub fn value(&self) -> Option<usize> {
        self.exact.then_some(self.lower)
    }
}

impl fmt::Display for DistanceBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exact {
            write!(f, "{}", self.lower)
        } else {
            write!(f, ">={}", self.lower)
        }
    }
}

/// Vectors the enumerators can accumulate.
trait Accum: Clone + Send + Sync {
    fn add_scaled(&mut self, other: &Self, c: u32, p: u32);
    fn is_zero(&self) -> bool;
    fn weight(&self) -> usize;
}

impl Accum for Vec<u64> {
    fn add_scaled(&mut self, other: &Self, _c: u32, _p: u32) {
        for (a, b) in self.iter_mut().zip(other) {
            *a ^= b;
        }
    }
    fn is_zero(&self) -> bool {
        self.iter().all(|&w| w == 0)
    }
    fn weight(&self) -> usize {
        self.iter().map(|w| w.count_ones() as usize).sum()
    }
}

impl Accum for Vec<u32> {
    fn add_scaled(&mut self, other: &Self, c: u32, p: u32) {
        for (a, &b) in self.iter_mut().zip(other) {
            *a = ((*a as u64 + c as u64 * b as u64) % p as u64) as u32;
        }
    }
    fn is_zero(&self) -> bool {
        self.iter().all(|&x| x == 0)
    }
    fn weight(&self) -> usize {
        self.iter().filter(|&&x| x != 0).count()
    }
}

fn rows_as_words(m: &Matrix) -> Vec<Vec<u64>> {
    (0..m.rows()).map(|r| m.row_words(r).to_vec()).collect()
}

fn rows_as_symbols(m: &Matrix) -> Vec<Vec<u32>> {
    m.to_rows()
}

/// Column `c` of `m` packed (GF(2)) or as symbols.
fn cols_as_words(m: &Matrix) -> Vec<Vec<u64>> {
    let t = m.transpose();
    rows_as_words(&t)
}

/// Visits every message of `p^k` with the codeword `sum m_i g_i` and the
/// side image `sum m_i s_i`. Chunks are processed in parallel; the
/// accumulator merge must be order independent.
#[allow(clippy::too_many_arguments)]
fn enumerate<V, A, I, F, M>(p: u32, gen: &[V], side: &[V], zero_g: V, zero_s: V, init: I, visit: F, merge: M) -> A
where
    V: Accum,
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &V, &V) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let k = gen.len();
    let split = (0..=k).take_while(|&c| (p as u64).pow(c as u32) <= 4096).last().unwrap_or(0);
    let chunks = (p as u64).pow(split as u32);
    let low = k - split;
    let chunk_len = (p as u64).pow(low as u32);
    (0..chunks)
        .into_par_iter()
        .fold(&init, |mut acc, j| {
            let mut cw = zero_g.clone();
            let mut sd = zero_s.clone();
            let mut hi = j;
            for i in low..k {
                let d = (hi % p as u64) as u32;
                hi /= p as u64;
                if d != 0 {
                    cw.add_scaled(&gen[i], d, p);
                    sd.add_scaled(&side[i], d, p);
                }
            }
            visit(&mut acc, &cw, &sd);
            if p == 2 {
                // Gray code over the low bits: step t flips row tz(t).
                for t in 1..chunk_len {
                    let i = t.trailing_zeros() as usize;
                    cw.add_scaled(&gen[i], 1, 2);
                    sd.add_scaled(&side[i], 1, 2);
                    visit(&mut acc, &cw, &sd);
                }
            } else {
                let mut digits = vec![0u32; low];
                for _ in 1..chunk_len {
                    let mut i = 0;
                    loop {
                        cw.add_scaled(&gen[i], 1, p);
                        sd.add_scaled(&side[i], 1, p);
                        digits[i] += 1;
                        if digits[i] < p {
                            break;
                        }
                        digits[i] = 0;
                        i += 1;
                    }
                    visit(&mut acc, &cw, &sd);
                }
            }
            acc
        })
        .reduce(&init, &merge)
}

fn saturating_binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 0..k {
        c = match c.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    c
}

/// Outcome of an ascending-weight search: all weights `<= cleared` hold no
/// qualifying vector; `found` is the first weight that does.
struct SearchOutcome {
    cleared: usize,
    found: Option<usize>,
}

/// Searches for a nonzero `e` with `sum e_i a_i = 0` and `sum e_i b_i != 0`
/// (when `b` is nonempty) in order of increasing weight, where `a_i`, `b_i`
/// are the columns of the two check matrices. Whole weight classes are
/// skipped once the budget would be exceeded.
fn weight_search<V: Accum>(p: u32, a: &[V], b: &[V], zero_a: V, zero_b: V, budget: u64) -> SearchOutcome {
    let n = a.len();
    let use_b = !b.is_empty();
    let mut spent: u128 = 0;
    for w in 1..=n {
        let cost = saturating_binomial(n, w).saturating_mul((p as u128 - 1).saturating_pow(w as u32 - 1));
        if spent.saturating_add(cost) > budget as u128 {
            return SearchOutcome { cleared: w - 1, found: None };
        }
        spent += cost;
        let hit = (0..n).into_par_iter().any(|first| {
            let mut sa = zero_a.clone();
            let mut sb = zero_b.clone();
            sa.add_scaled(&a[first], 1, p);
            if use_b {
                sb.add_scaled(&b[first], 1, p);
            }
            search_rec(p, a, b, use_b, first + 1, w - 1, &sa, &sb)
        });
        if hit {
            return SearchOutcome { cleared: w - 1, found: Some(w) };
        }
    }
    SearchOutcome { cleared: n, found: None }
}

#[allow(clippy::too_many_arguments)]
fn search_rec<V: Accum>(p: u32, a: &[V], b: &[V], use_b: bool, start: usize, left: usize, sa: &V, sb: &V) -> bool {
    if left == 0 {
        return sa.is_zero() && (!use_b || !sb.is_zero());
    }
    for pos in start..=a.len() - left {
        for c in 1..p {
            let mut na = sa.clone();
            na.add_scaled(&a[pos], c, p);
            let mut nb = sb.clone();
            if use_b {
                nb.add_scaled(&b[pos], c, p);
            }
            if search_rec(p, a, b, use_b, pos + 1, left - 1, &na, &nb) {
                return true;
            }
        }
    }
    false
}

/// Smallest weight among sampled codewords with nonzero side image (or any
/// nonzero codeword when `side` is empty): generator rows plus a fixed-seed
/// set of random combinations.
fn sampled_upper<V: Accum>(p: u32, gen: &[V], side: &[V], zero_g: V, zero_s: V, use_side: bool) -> Option<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_d157);
    let mut best: Option<usize> = None;
    let mut consider = |cw: &V, sd: &V| {
        let w = cw.weight();
        if w > 0 && (!use_side || !sd.is_zero()) {
            best = Some(best.map_or(w, |b| b.min(w)));
        }
    };
    for (g, s) in gen.iter().zip(side) {
        consider(g, s);
    }
    for _ in 0..2048 {
        let mut cw = zero_g.clone();
        let mut sd = zero_s.clone();
        for (g, s) in gen.iter().zip(side) {
            let c = rng.gen_range(0..p);
            if c != 0 {
                cw.add_scaled(g, c, p);
                sd.add_scaled(s, c, p);
            }
        }
        consider(&cw, &sd);
    }
    best
}

fn message_count(p: u32, k: usize) -> Option<u64> {
    (p as u64).checked_pow(k as u32)
}

fn assemble(
    n: usize,
    outcome: SearchOutcome,
    upper: Option<usize>,
    hint: Option<(usize, DistanceMethod)>,
) -> Result<DistanceBound> {
    if let Some(d) = outcome.found {
        return Ok(DistanceBound::exact(d, DistanceMethod::WeightSearch));
    }
    let (mut lower, mut method) = (outcome.cleared + 1, DistanceMethod::WeightSearch);
    if let Some((h, m)) = hint {
        if h > lower {
            lower = h;
            method = m;
        }
    }
    let upper = upper.unwrap_or(n);
    if upper < lower {
        return Err(Error::Range(format!(
            "distance lower bound {lower} exceeds a witnessed codeword of weight {upper}"
        )));
    }
    Ok(DistanceBound::bound(lower, upper, method))
}

/// Minimum distance of `code`.
///
/// Exact by enumeration when `p^k <= budget`; otherwise an ascending-weight
/// search over the parity-check columns spends at most `budget` candidates,
/// and the caller's `lower_hint` (e.g. a design distance) is folded in.
pub fn min_weight(code: &LinearCode, budget: u64, lower_hint: Option<(usize, DistanceMethod)>) -> Result<DistanceBound> {
    if code.k() == 0 {
        return Err(Error::ZeroCode);
    }
    relative_core(code, None, budget, lower_hint)
}

/// Minimum weight of `outer \ inner` for a proper subcode `inner`.
///
/// Same exactness rules as [`min_weight`]; membership in `inner` is decided
/// by its syndrome, never by enumerating `inner`.
pub fn relative_min_weight(
    outer: &LinearCode,
    inner: &LinearCode,
    budget: u64,
    lower_hint: Option<(usize, DistanceMethod)>,
) -> Result<DistanceBound> {
    if !is_subcode(inner, outer)? {
        return Err(Error::NotSubcode(format!("{inner:?} is not contained in {outer:?}")));
    }
    if inner.k() == outer.k() {
        return Err(Error::Range("relative weight of a code over itself is undefined".into()));
    }
    relative_core(outer, Some(inner), budget, lower_hint)
}

fn relative_core(
    outer: &LinearCode,
    inner: Option<&LinearCode>,
    budget: u64,
    hint: Option<(usize, DistanceMethod)>,
) -> Result<DistanceBound> {
    let p = outer.p();
    let n = outer.n();
    let g = outer.generator();
    // Side images: inner syndromes of the generator rows.
    let side = match inner {
        Some(inner) => g.mul_transpose(inner.parity_check())?,
        None => Matrix::zeros(p, g.rows(), 0),
    };
    let enumerable = message_count(p, outer.k()).is_some_and(|m| m <= budget);
    let use_side = inner.is_some();
    if p == 2 {
        let gen = rows_as_words(g);
        let sd = rows_as_words(&side);
        let zg = vec![0u64; gen.first().map_or(0, |r| r.len())];
        let zs = vec![0u64; sd.first().map_or(0, |r| r.len())];
        if enumerable {
            let d = enumerate_min(p, &gen, &sd, zg, zs, use_side);
            return Ok(DistanceBound::exact(d.expect("proper subcode leaves a codeword"), DistanceMethod::Enumeration));
        }
        let a = cols_as_words(outer.parity_check());
        let b = inner.map(|i| cols_as_words(i.parity_check())).unwrap_or_default();
        let za = vec![0u64; a.first().map_or(0, |r| r.len())];
        let zb = vec![0u64; b.first().map_or(0, |r| r.len())];
        let outcome = weight_search(p, &a, &b, za, zb, budget);
        let upper = sampled_upper(p, &gen, &sd, zg, zs, use_side);
        assemble(n, outcome, upper, hint)
    } else {
        let gen = rows_as_symbols(g);
        let sd = rows_as_symbols(&side);
        let zg = vec![0u32; n];
        let zs = vec![0u32; side.cols()];
        if enumerable {
            let d = enumerate_min(p, &gen, &sd, zg, zs, use_side);
            return Ok(DistanceBound::exact(d.expect("proper subcode leaves a codeword"), DistanceMethod::Enumeration));
        }
        let a = outer.parity_check().transpose().to_rows();
        let b = inner.map(|i| i.parity_check().transpose().to_rows()).unwrap_or_default();
        let za = vec![0u32; outer.parity_check().rows()];
        let zb = vec![0u32; inner.map_or(0, |i| i.parity_check().rows())];
        let outcome = weight_search(p, &a, &b, za, zb, budget);
        let upper = sampled_upper(p, &gen, &sd, zg, zs, use_side);
        assemble(n, outcome, upper, hint)
    }
}

fn enumerate_min<V: Accum>(p: u32, gen: &[V], side: &[V], zg: V, zs: V, use_side: bool) -> Option<usize> {
    enumerate(
        p,
        gen,
        side,
        zg,
        zs,
        || None::<usize>,
        |best, cw, sd| {
            let w = cw.weight();
            if w > 0 && (!use_side || !sd.is_zero()) && best.map_or(true, |b| w < b) {
                *best = Some(w);
            }
        },
        |a, b| match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, None) => x,
            (None, y) => y,
        },
    )
}

/// Hamming weight counts `counts[w]` for `0 <= w <= n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub counts: Vec<u64>,
    pub exact: bool,
}

impl WeightDistribution {
    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    /// Smallest nonzero weight present.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        self.counts.iter().enumerate().skip(1).find(|(_, &c)| c > 0).map(|(w, _)| w)
    }
}

/// Exact weight distribution by enumerating all `p^k` codewords.
pub fn weight_distribution(code: &LinearCode, cap: usize) -> Result<WeightDistribution> {
    if code.k() > cap {
        return Err(Error::Budget(format!("dimension {} exceeds the enumeration cap {cap}", code.k())));
    }
    let p = code.p();
    let n = code.n();
    let init = || vec![0u64; n + 1];
    let merge = |mut a: Vec<u64>, b: Vec<u64>| {
        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
        a
    };
    let counts = if code.k() == 0 {
        let mut c = init();
        c[0] = 1;
        c
    } else if p == 2 {
        let gen = rows_as_words(code.generator());
        let side = vec![Vec::<u64>::new(); gen.len()];
        let zg = vec![0u64; gen[0].len()];
        enumerate(p, &gen, &side, zg, Vec::new(), init, |acc, cw, _| acc[cw.weight()] += 1, merge)
    } else {
        let gen = rows_as_symbols(code.generator());
        let side = vec![Vec::<u32>::new(); gen.len()];
        enumerate(p, &gen, &side, vec![0u32; n], Vec::new(), init, |acc, cw, _| acc[cw.weight()] += 1, merge)
    };
    Ok(WeightDistribution { counts, exact: true })
}

/// The binary Krawtchouk polynomial
/// `K_j(r) = sum_s (-1)^s C(r, s) C(n - r, j - s)`.
pub fn krawtchouk(j: usize, r: usize, n: usize) -> Result<BigInt> {
    if j > n || r > n {
        return Err(Error::Range(format!("Krawtchouk indices j={j}, r={r} exceed n={n}")));
    }
    let mut acc = BigInt::zero();
    for s in 0..=j.min(r) {
        if j - s > n - r {
            continue;
        }
        let term = num_integer::binomial(BigInt::from(r), BigInt::from(s))
            * num_integer::binomial(BigInt::from(n - r), BigInt::from(j - s));
        if s % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// The binary MacWilliams transform `B_j = 2^-k sum_r K_j(r) A_r`.
///
/// Fails when the result has a negative or non-integral entry, which
/// certifies that the input is not the distribution of a binary `[n, k]`
/// code.
pub fn macwilliams(dist: &WeightDistribution, k: usize, n: usize) -> Result<WeightDistribution> {
    if dist.counts.len() != n + 1 {
        return Err(Error::InvalidDistribution(format!(
            "expected {} counts, got {}",
            n + 1,
            dist.counts.len()
        )));
    }
    let scale = BigInt::from(1) << k;
    let mut counts = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut acc = BigInt::zero();
        for (r, &a) in dist.counts.iter().enumerate() {
            if a != 0 {
                acc += krawtchouk(j, r, n)? * BigInt::from(a);
            }
        }
        let (q, rem) = acc.div_rem(&scale);
        if !rem.is_zero() || q.is_negative() {
            return Err(Error::InvalidDistribution(format!("transform entry {j} is {acc}/2^{k}")));
        }
        counts.push(q.to_u64().ok_or_else(|| Error::InvalidDistribution(format!("entry {j} overflows")))?);
    }
    Ok(WeightDistribution { counts, exact: dist.exact })
}
