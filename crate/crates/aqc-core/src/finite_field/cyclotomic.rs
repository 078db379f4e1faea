use num_integer::gcd;
use serde::{Deserialize, Serialize};

use super::{poly, FieldSpec};
use crate::error::{Error, Result};

/// The orbit of `representative` under multiplication by `q` modulo `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicCoset {
    /// Smallest member.
    pub representative: usize,
    /// Sorted members.
    pub members: Vec<usize>,
    pub n: usize,
    pub q: usize,
}

fn check_coprime(n: usize, q: usize) -> Result<()> {
    if n == 0 || gcd(n, q) != 1 {
        return Err(Error::NotCoprime { n: n as u64, q: q as u64 });
    }
    Ok(())
}

/// `{ x q^j mod n : j >= 0 }`.
pub fn cyclotomic_coset(x: usize, n: usize, q: usize) -> Result<CyclotomicCoset> {
    check_coprime(n, q)?;
    if x >= n {
        return Err(Error::Range(format!("coset index {x} not below modulus {n}")));
    }
    let mut members = vec![x];
    let mut cur = (x as u128 * q as u128 % n as u128) as usize;
    while cur != x {
        members.push(cur);
        cur = (cur as u128 * q as u128 % n as u128) as usize;
    }
    members.sort_unstable();
    Ok(CyclotomicCoset { representative: members[0], members, n, q })
}

/// The partition of `0..n` into q-ary cyclotomic cosets, by representative.
pub fn cyclotomic_cosets(n: usize, q: usize) -> Result<Vec<CyclotomicCoset>> {
    check_coprime(n, q)?;
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for x in 0..n {
        if !seen[x] {
            let c = cyclotomic_coset(x, n, q)?;
            for &m in &c.members {
                seen[m] = true;
            }
            out.push(c);
        }
    }
    Ok(out)
}

/// Sum of the base-q digits of `h`.
pub fn qary_weight(mut h: u64, q: u64) -> u64 {
    assert!(q >= 2, "base must be at least 2");
    let mut w = 0;
    while h > 0 {
        w += h % q;
        h /= q;
    }
    w
}

/// The multiplicative order of `q` modulo `n`.
pub fn multiplicative_order(q: usize, n: usize) -> Result<usize> {
    check_coprime(n, q)?;
    if n == 1 {
        return Ok(1);
    }
    let mut k = 1usize;
    let mut cur = q % n;
    while cur != 1 {
        cur = (cur as u128 * q as u128 % n as u128) as usize;
        k += 1;
    }
    Ok(k)
}

/// Minimal polynomial over GF(p) of `beta^exponent`, where `beta` is the
/// element `alpha^((p^s - 1) / n)` of order `n` in `field`.
///
/// Coefficients are prime-field values `0..p`, low degree first.
pub fn minimal_polynomial(exponent: usize, field: &FieldSpec, n: usize) -> Result<Vec<u32>> {
    let order = field.order() as usize;
    if n == 0 || order % n != 0 {
        return Err(Error::Range(format!("{n} does not divide {order} in {field:?}")));
    }
    let coset = cyclotomic_coset(exponent % n, n, field.p() as usize)?;
    let step = (order / n) as u64;
    let g = poly::from_roots(field, coset.members.iter().map(|&e| field.exp(e as u64 * step)));
    debug_assert!(g.iter().all(|&c| c < field.p()));
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::make_field;

    #[test]
    fn coset_examples() {
        assert_eq!(cyclotomic_coset(0, 15, 2).unwrap().members, vec![0]);
        assert_eq!(cyclotomic_coset(1, 15, 2).unwrap().members, vec![1, 2, 4, 8]);
        assert_eq!(cyclotomic_coset(5, 15, 2).unwrap().members, vec![5, 10]);
        assert_eq!(cyclotomic_coset(6, 15, 2).unwrap().representative, 3);
        assert!(matches!(cyclotomic_coset(1, 15, 3), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn weight_examples() {
        assert_eq!(qary_weight(0, 4), 0);
        assert_eq!(qary_weight(13, 4), 4);
        assert_eq!(qary_weight(10, 4), 4);
    }

    #[test]
    fn minimal_polynomial_examples() {
        let f = make_field(2, 4).unwrap();
        assert_eq!(minimal_polynomial(0, &f, 15).unwrap(), vec![1, 1]);
        let m1 = minimal_polynomial(1, &f, 15).unwrap();
        assert_eq!(m1.len() - 1, 4);
        assert_eq!(minimal_polynomial(5, &f, 15).unwrap(), vec![1, 1, 1]);
        assert!(minimal_polynomial(1, &f, 7).is_err());
    }

    #[test]
    fn order_examples() {
        assert_eq!(multiplicative_order(2, 15).unwrap(), 4);
        assert_eq!(multiplicative_order(2, 1023).unwrap(), 10);
        assert_eq!(multiplicative_order(4, 15).unwrap(), 2);
    }
}
