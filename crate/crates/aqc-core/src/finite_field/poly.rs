//! Dense univariate polynomials over a [`FieldSpec`], low degree first.
//!
//! The zero polynomial is the empty vector; every other value is trimmed so
//! its last coefficient is nonzero.

use super::FieldSpec;

pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Degree, or `None` for the zero polynomial.
pub fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn add(f: &FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| f.add(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
        .collect();
    trim(out)
}

pub fn mul(f: &FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(ai, bj));
        }
    }
    trim(out)
}

/// Quotient and remainder of `a / b`. Panics if `b` is zero.
pub fn divrem(f: &FieldSpec, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = f.inv(b[db]);
    let mut r = trim(a.to_vec());
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0u32; r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = f.mul(r[dr], lead_inv);
        q[dr - db] = c;
        for (j, &bj) in b[..=db].iter().enumerate() {
            r[dr - db + j] = f.sub(r[dr - db + j], f.mul(c, bj));
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub fn eval(f: &FieldSpec, a: &[u32], x: u32) -> u32 {
    a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// The monic polynomial `prod (x - r)` over the given roots.
pub fn from_roots(f: &FieldSpec, roots: impl IntoIterator<Item = u32>) -> Vec<u32> {
    let mut acc = vec![1u32];
    for r in roots {
        acc = mul(f, &acc, &[f.neg(r), 1]);
    }
    acc
}

/// `x^n - 1`.
pub fn x_pow_minus_one(f: &FieldSpec, n: usize) -> Vec<u32> {
    let mut a = vec![0u32; n + 1];
    a[0] = f.neg(1);
    a[n] = 1;
    a
}
