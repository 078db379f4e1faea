//! Arithmetic in GF(p^s) with log/antilog tables, cyclotomic cosets,
//! q-ary digit weights, minimal polynomials and trace maps.
//!
//! Elements are encoded as integers `sum c_i p^i` over the polynomial basis
//! `1, x, ..., x^(s-1)` modulo the field's primitive modulus. The prime
//! subfield GF(p) is therefore the set of encodings `0..p` in every
//! extension, which makes prime-field constants portable across fields.

mod cyclotomic;
pub mod poly;

pub use cyclotomic::{
    cyclotomic_coset, cyclotomic_cosets, minimal_polynomial, multiplicative_order, qary_weight,
    CyclotomicCoset,
};

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// Largest supported field size. Tables are `O(q)` words.
pub const MAX_FIELD_SIZE: u64 = 1 << 22;

/// A finite field GF(p^s) with a fixed primitive modulus.
///
/// Cloning is cheap; the tables are shared. Two specs with equal `(p, s)` are
/// equal because the modulus is chosen deterministically.
#[derive(Clone)]
pub struct FieldSpec(Arc<Tables>);

struct Tables {
    p: u32,
    s: u32,
    q: u32,
    /// Monic, low degree first, length `s + 1`.
    modulus: Vec<u32>,
    alpha: u32,
    /// `exp[i] = alpha^i` for `0 <= i < q - 1`.
    exp: Vec<u32>,
    /// `log[a]` for nonzero `a`; `log[0]` is unused.
    log: Vec<u32>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.s == other.0.s
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.s)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a prime power `q = p^s` into `(p, s)`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let (mut r, mut s) = (q, 0u32);
    while r % p == 0 {
        r /= p;
        s += 1;
    }
    (r == 1 && p <= u32::MAX as u64).then_some((p as u32, s))
}

/// Returns GF(p^s) with the lexicographically smallest primitive modulus.
///
/// Identical `(p, s)` always yields the same field; results are memoized.
pub fn make_field(p: u32, s: u32) -> Result<FieldSpec> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if s == 0 {
        return Err(Error::Range("extension degree must be at least 1".into()));
    }
    let q = (p as u64).checked_pow(s).filter(|&q| q <= MAX_FIELD_SIZE);
    let Some(q) = q else {
        return Err(Error::Unsupported(format!(
            "GF({p}^{s}) exceeds the table limit of {MAX_FIELD_SIZE} elements"
        )));
    };
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), FieldSpec>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&(p, s)) {
        return Ok(f.clone());
    }
    let field = FieldSpec(Arc::new(build_tables(p, s, q as u32)));
    cache.lock().unwrap().insert((p, s), field.clone());
    Ok(field)
}

/// Digits of `a` in base `p`, low first, exactly `s` of them.
fn digits(mut a: u32, p: u32, s: u32) -> Vec<u32> {
    (0..s)
        .map(|_| {
            let d = a % p;
            a /= p;
            d
        })
        .collect()
}

fn from_digits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Multiplies the encoded polynomial `a` by `x` modulo `x^s + tail`.
fn mul_by_x(a: u32, tail: &[u32], p: u32, s: u32, top_place: u32) -> u32 {
    if p == 2 {
        let shifted = a << 1;
        return if shifted & (1 << s) != 0 {
            (shifted ^ (1 << s)) ^ from_digits(tail, 2)
        } else {
            shifted
        };
    }
    let top = a / top_place;
    let shifted = (a % top_place) * p;
    if top == 0 {
        return shifted;
    }
    let mut d = digits(shifted, p, s);
    for (di, &t) in d.iter_mut().zip(tail) {
        *di = (*di + p - (top * t) % p) % p;
    }
    from_digits(&d, p)
}

fn build_tables(p: u32, s: u32, q: u32) -> Tables {
    let top_place = p.pow(s - 1);
    let order = q - 1;
    // Candidate tails c_0 + c_1 x + ... + c_{s-1} x^{s-1} in increasing
    // integer encoding; x has order q - 1 exactly when the modulus is
    // primitive, which also forces irreducibility.
    for code in 1..q {
        let tail = digits(code, p, s);
        if tail[0] == 0 {
            continue;
        }
        let mut exp = Vec::with_capacity(order as usize);
        let mut cur = 1u32;
        let mut ok = true;
        for i in 0..order {
            if i > 0 && cur == 1 {
                ok = false;
                break;
            }
            exp.push(cur);
            cur = mul_by_x(cur, &tail, p, s, top_place);
        }
        if !ok || cur != 1 {
            continue;
        }
        let mut log = vec![0u32; q as usize];
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u32;
        }
        let mut modulus = tail.clone();
        modulus.push(1);
        let alpha = if s == 1 { exp.get(1).copied().unwrap_or(1) } else { p };
        return Tables { p, s, q, modulus, alpha, exp, log };
    }
    unreachable!("every finite field has a primitive element")
}

impl FieldSpec {
    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn s(&self) -> u32 {
        self.0.s
    }

    /// Number of elements, `p^s`.
    pub fn size(&self) -> u32 {
        self.0.q
    }

    /// Order of the multiplicative group, `p^s - 1`.
    pub fn order(&self) -> u32 {
        self.0.q - 1
    }

    /// Monic modulus coefficients over GF(p), low degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// The canonical primitive element (a root of the modulus).
    pub fn alpha(&self) -> u32 {
        self.0.alpha
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let p = self.0.p;
        if p == 2 {
            return a ^ b;
        }
        if self.0.s == 1 {
            return (a + b) % p;
        }
        let (mut a, mut b, mut place, mut out) = (a, b, 1u32, 0u32);
        while a > 0 || b > 0 {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        let p = self.0.p;
        if p == 2 {
            return a;
        }
        let (mut a, mut place, mut out) = (a, 1u32, 0u32);
        while a > 0 {
            out += ((p - a % p) % p) * place;
            a /= p;
            place *= p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let t = &self.0;
        let e = t.log[a as usize] as u64 + t.log[b as usize] as u64;
        t.exp[(e % (t.q as u64 - 1)) as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn checked_inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| {
            let t = &self.0;
            let l = t.log[a as usize];
            t.exp[((t.q - 1 - l) % (t.q - 1)) as usize]
        })
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        self.checked_inv(a).expect("zero has no inverse")
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let t = &self.0;
        let l = t.log[a as usize] as u128 * e as u128;
        t.exp[(l % (t.q as u128 - 1)) as usize]
    }

    /// `alpha^i`, with `i` reduced modulo the group order.
    pub fn exp(&self, i: u64) -> u32 {
        self.0.exp[(i % self.order() as u64) as usize]
    }

    /// Discrete logarithm base alpha; `None` for zero.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.0.log[a as usize])
    }

    /// The Frobenius automorphism `a -> a^p`.
    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, self.0.p as u64)
    }

    /// True when GF(p^sub_s) is a subfield.
    pub fn has_subfield(&self, sub_s: u32) -> bool {
        sub_s >= 1 && self.0.s % sub_s == 0
    }

    /// True when `a` lies in the subfield GF(p^sub_s).
    pub fn in_subfield(&self, a: u32, sub_s: u32) -> bool {
        self.pow(a, (self.0.p as u64).pow(sub_s)) == a
    }

    /// Trace of `a` down to the subfield GF(p^sub_s): the sum of its
    /// conjugates `a^(Q^j)` with `Q = p^sub_s`, `j < s / sub_s`.
    pub fn trace(&self, a: u32, sub_s: u32) -> Result<u32> {
        if !self.has_subfield(sub_s) {
            return Err(Error::Range(format!(
                "GF({}^{}) is not a subfield of {:?}",
                self.0.p, sub_s, self
            )));
        }
        let qsub = (self.0.p as u64).pow(sub_s);
        let (mut acc, mut conj) = (0u32, a);
        for _ in 0..self.0.s / sub_s {
            acc = self.add(acc, conj);
            conj = self.pow(conj, qsub);
        }
        Ok(acc)
    }

    /// Embeds `sub` into this field.
    ///
    /// The image of `sub.alpha()` is the first power `gamma^j` (gcd(j, q-1)
    /// = 1, `gamma = alpha^((Q-1)/(q-1))`) that is a root of `sub`'s modulus,
    /// so the map is a field homomorphism and deterministic.
    pub fn embedding(&self, sub: &FieldSpec) -> Result<Embedding> {
        if sub.p() != self.p() || !self.has_subfield(sub.s()) {
            return Err(Error::Range(format!("{sub:?} is not a subfield of {self:?}")));
        }
        let qs = sub.size();
        let mut to_big = vec![0u32; qs as usize];
        if sub.s() == 1 {
            for (c, slot) in to_big.iter_mut().enumerate() {
                *slot = c as u32;
            }
        } else {
            let cofactor = (self.order() / sub.order()) as u64;
            let gamma = self.exp(cofactor);
            let image = (1..sub.order() as u64)
                .filter(|&j| num_integer::gcd(j, sub.order() as u64) == 1)
                .map(|j| self.pow(gamma, j))
                .find(|&r| poly::eval(self, sub.modulus(), r) == 0)
                .expect("subfield modulus splits in the extension");
            for i in 0..sub.order() as u64 {
                to_big[sub.exp(i) as usize] = self.pow(image, i);
            }
        }
        let to_small = to_big.iter().enumerate().map(|(i, &b)| (b, i as u32)).collect();
        Ok(Embedding { to_big, to_small })
    }
}

/// A fixed embedding of a subfield GF(q) into GF(Q).
#[derive(Debug, Clone)]
pub struct Embedding {
    to_big: Vec<u32>,
    to_small: HashMap<u32, u32>,
}

impl Embedding {
    pub fn up(&self, a: u32) -> u32 {
        self.to_big[a as usize]
    }

    /// Preimage of `b`, if `b` lies in the subfield.
    pub fn down(&self, b: u32) -> Option<u32> {
        self.to_small.get(&b).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_gf2_alpha_is_one() {
        let f = make_field(2, 1).unwrap();
        assert_eq!(f.alpha(), 1);
        assert_eq!(f.order(), 1);
        assert_eq!(f.mul(1, 1), 1);
    }

    fn order_by_exponentiation(f: &FieldSpec, a: u32) -> u64 {
        let mut x = a;
        let mut k = 1u64;
        while x != 1 {
            x = f.mul(x, a);
            k += 1;
        }
        k
    }

    #[test]
    fn alpha_orders() {
        let f16 = make_field(2, 4).unwrap();
        assert_eq!(f16.modulus().len(), 5);
        assert_eq!(order_by_exponentiation(&f16, f16.alpha()), 15);
        let f256 = make_field(2, 8).unwrap();
        assert_eq!(order_by_exponentiation(&f256, f256.alpha()), 255);
        let f9 = make_field(3, 2).unwrap();
        assert_eq!(order_by_exponentiation(&f9, f9.alpha()), 8);
    }

    #[test]
    fn canonical_moduli() {
        // x^4 + x + 1 and x^8 + x^4 + x^3 + x^2 + 1 are the smallest binary
        // primitive polynomials of their degrees.
        assert_eq!(make_field(2, 4).unwrap().modulus(), &[1, 1, 0, 0, 1]);
        assert_eq!(make_field(2, 8).unwrap().modulus(), &[1, 0, 1, 1, 1, 0, 0, 0, 1]);
        // GF(5): x + 1 has root 4 of order 2; x + 2 has root 3 of order 4.
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(f5.modulus(), &[2, 1]);
        assert_eq!(f5.alpha(), 3);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(make_field(4, 1).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(make_field(2, 40), Err(Error::Unsupported(_))));
        assert!(make_field(2, 0).is_err());
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        let big = make_field(2, 4).unwrap();
        let sub = make_field(2, 2).unwrap();
        let e = big.embedding(&sub).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(e.up(sub.mul(a, b)), big.mul(e.up(a), e.up(b)));
                assert_eq!(e.up(sub.add(a, b)), big.add(e.up(a), e.up(b)));
            }
            assert!(big.in_subfield(e.up(a), 2));
            assert_eq!(e.down(e.up(a)), Some(a));
        }
        assert!(big.embedding(&make_field(2, 3).unwrap()).is_err());
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn trace_surjective_onto_gf2() {
        let f4 = make_field(2, 2).unwrap();
        assert_eq!(f4.trace(0, 1).unwrap(), 0);
        assert!((0..4).any(|a| f4.trace(a, 1).unwrap() == 1));
    }
}
