use std::collections::BTreeSet;

use num_integer::gcd;

use super::extension::ExtensionCode;
use crate::error::{Error, Result};
use crate::finite_field::{make_field, multiplicative_order, poly, FieldSpec};
use crate::linear_code::{LinearCode, Matrix};

/// A length-`n` cyclic code over GF(q) described by its defining set.
///
/// Coordinate `i` pairs with `beta^i`, where `beta = alpha^((Q-1)/n)` in the
/// splitting field GF(Q). For `n = Q - 1` this is `alpha^i`, the convention
/// shared with the Euclidean-geometry constructions.
#[derive(Debug, Clone)]
pub struct CyclicCode {
    n: usize,
    field: FieldSpec,
    defining_set: Vec<usize>,
    generator_poly: Vec<u32>,
    design_distance: Option<usize>,
}

/// The smallest extension GF(q^m) containing the `n`-th roots of unity.
pub fn splitting_field(field: &FieldSpec, n: usize) -> Result<FieldSpec> {
    let m = multiplicative_order(field.size() as usize, n)?;
    let s = (field.s() as usize).checked_mul(m).filter(|&s| s <= u32::MAX as usize);
    let s = s.ok_or_else(|| Error::Unsupported(format!("splitting field of x^{n}-1 over {field:?}")))?;
    make_field(field.p(), s as u32)
}

impl CyclicCode {
    /// Validates that `defining_set` is a union of q-cyclotomic cosets mod `n`
    /// and computes `g(x) = prod (x - beta^z)` over GF(q).
    pub fn new(n: usize, field: &FieldSpec, defining_set: impl IntoIterator<Item = usize>) -> Result<Self> {
        let q = field.size() as usize;
        if n < 1 || gcd(n, q) != 1 {
            return Err(Error::NotCoprime { n: n as u64, q: q as u64 });
        }
        let set: BTreeSet<usize> = defining_set.into_iter().collect();
        if let Some(&z) = set.iter().find(|&&z| z >= n) {
            return Err(Error::Range(format!("exponent {z} not below n = {n}")));
        }
        if let Some(&z) = set.iter().find(|&&z| !set.contains(&(z * q % n))) {
            return Err(Error::Range(format!("defining set not closed under x{q}: {z}")));
        }
        let big = splitting_field(field, n)?;
        let step = (big.order() as usize / n) as u64;
        let g_big = poly::from_roots(&big, set.iter().map(|&z| big.exp(z as u64 * step)));
        let emb = big.embedding(field)?;
        let generator_poly = g_big
            .iter()
            .map(|&c| emb.down(c).ok_or_else(|| Error::Range("generator coefficient outside GF(q)".into())))
            .collect::<Result<Vec<u32>>>()?;
        Ok(CyclicCode {
            n,
            field: field.clone(),
            defining_set: set.into_iter().collect(),
            generator_poly,
            design_distance: None,
        })
    }

    pub(crate) fn with_design_distance(mut self, d: usize) -> Self {
        self.design_distance = Some(d);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Alphabet size.
    pub fn q(&self) -> u32 {
        self.field.size()
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn defining_set(&self) -> &[usize] {
        &self.defining_set
    }

    /// Coefficients over GF(q), low degree first.
    pub fn generator_poly(&self) -> &[u32] {
        &self.generator_poly
    }

    pub fn dimension(&self) -> usize {
        self.n - self.defining_set.len()
    }

    /// BCH design distance, when the code was built as a BCH code.
    pub fn design_distance(&self) -> Option<usize> {
        self.design_distance
    }

    /// `{ j : -j mod n not in Z }`.
    pub fn dual_defining_set(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.defining_set.iter().copied().collect();
        (0..self.n).filter(|&j| !set.contains(&((self.n - j) % self.n))).collect()
    }

    pub fn dual(&self) -> Result<CyclicCode> {
        CyclicCode::new(self.n, &self.field, self.dual_defining_set())
    }

    /// True when `other` is a subcode: its defining set contains ours.
    pub fn contains_code(&self, other: &CyclicCode) -> bool {
        self.n == other.n
            && self.field == other.field
            && self.defining_set.iter().all(|z| other.defining_set.binary_search(z).is_ok())
    }

    /// Rows `x^i g(x)`, `i < k`, as GF(q) encodings.
    pub fn generator_rows(&self) -> Vec<Vec<u32>> {
        let k = self.dimension();
        (0..k)
            .map(|i| {
                let mut row = vec![0u32; self.n];
                row[i..i + self.generator_poly.len()].copy_from_slice(&self.generator_poly);
                row
            })
            .collect()
    }

    /// The check polynomial `h = (x^n - 1) / g`.
    pub fn check_poly(&self) -> Vec<u32> {
        let (h, r) = poly::divrem(&self.field, &poly::x_pow_minus_one(&self.field, self.n), &self.generator_poly);
        debug_assert!(r.is_empty(), "g divides x^n - 1");
        h
    }

    /// Rows `x^j h*(x)`, `j < n - k`, with `h*` the reciprocal of `h`.
    pub fn parity_check_rows(&self) -> Vec<Vec<u32>> {
        let h = self.check_poly();
        let rev: Vec<u32> = h.iter().rev().copied().collect();
        (0..self.defining_set.len())
            .map(|j| {
                let mut row = vec![0u32; self.n];
                row[j..j + rev.len()].copy_from_slice(&rev);
                row
            })
            .collect()
    }

    /// The code as explicit matrices over its prime alphabet.
    pub fn to_linear_code(&self) -> Result<LinearCode> {
        if self.field.s() != 1 {
            return Err(Error::Range(format!(
                "alphabet {:?} is not prime; use to_extension_code",
                self.field
            )));
        }
        let p = self.field.p();
        let g = Matrix::from_rows(p, self.n, &self.generator_rows())?;
        let h = Matrix::from_rows(p, self.n, &self.parity_check_rows())?;
        LinearCode::from_parts(g, h)
    }

    pub fn to_extension_code(&self) -> ExtensionCode {
        ExtensionCode::from_generator(&self.field, self.n, self.generator_rows()).expect("generator rows are valid")
    }

    /// The subfield subcode over GF(p): the cyclic code whose defining set is
    /// the closure of ours under multiplication by `p`.
    pub fn subfield_subcode(&self) -> Result<CyclicCode> {
        let p = self.field.p() as usize;
        let prime = make_field(self.field.p(), 1)?;
        let mut set: BTreeSet<usize> = BTreeSet::new();
        for &z in &self.defining_set {
            let mut cur = z;
            while set.insert(cur) {
                cur = cur * p % self.n;
            }
        }
        CyclicCode::new(self.n, &prime, set)
    }
}
