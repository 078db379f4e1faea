use num_integer::gcd;
use serde::{Deserialize, Serialize};

use super::cyclic::CyclicCode;
use crate::error::{Error, Result};
use crate::finite_field::{cyclotomic_coset, make_field, multiplicative_order, prime_power, qary_weight};
use crate::linear_code::{LinearCode, Matrix};

fn alphabet(q: u32) -> Result<crate::finite_field::FieldSpec> {
    let (p, s) = prime_power(q as u64).ok_or_else(|| Error::Range(format!("{q} is not a prime power")))?;
    make_field(p, s)
}

/// Narrow-sense BCH code with defining set `C_1 u ... u C_(delta-1)`.
pub fn bch(n: usize, q: u32, delta: usize) -> Result<CyclicCode> {
    if gcd(n, q as usize) != 1 {
        return Err(Error::NotCoprime { n: n as u64, q: q as u64 });
    }
    if delta < 2 || delta > n {
        return Err(Error::Range(format!("design distance {delta} outside [2, {n}]")));
    }
    let field = alphabet(q)?;
    let mut set = Vec::new();
    for x in 1..delta {
        set.extend(cyclotomic_coset(x, n, q as usize)?.members);
    }
    Ok(CyclicCode::new(n, &field, set)?.with_design_distance(delta))
}

/// Closed-form BCH dimension `n - m ceil((delta - 1)(1 - 1/q))`.
///
/// Valid only for `q^floor(m/2) < n <= q^m - 1` with `m = ord_n(q)` and
/// `2 <= delta <= min(floor(n q^ceil(m/2) / (q^m - 1)), n)`; outside that
/// range the caller must count cosets instead.
pub fn bch_dimension_formula(n: usize, q: u32, delta: usize, m: usize) -> Result<usize> {
    let ord = multiplicative_order(q as usize, n)?;
    if ord != m {
        return Err(Error::Range(format!("m = {m} but ord_{n}({q}) = {ord}")));
    }
    let qq = q as u128;
    let qm = qq.pow(m as u32);
    let nn = n as u128;
    if qq.pow((m / 2) as u32) >= nn || nn > qm - 1 {
        return Err(Error::Range(format!("n = {n} outside (q^floor(m/2), q^m - 1]")));
    }
    let upper = (nn * qq.pow(m.div_ceil(2) as u32) / (qm - 1)).min(nn);
    if delta < 2 || delta as u128 > upper {
        return Err(Error::Range(format!("delta = {delta} outside [2, {upper}]")));
    }
    let t = ((delta as u128 - 1) * (qq - 1)).div_ceil(qq);
    Ok(n - m * t as usize)
}

/// Result of the dual-containment test for a narrow-sense BCH code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualContainment {
    /// Exact answer: `Z` and `-Z` are disjoint.
    pub contained: bool,
    /// `floor(kappa)`, the closed-form sufficient bound on `delta`.
    pub delta_max: usize,
    /// `delta <= delta_max`, where the closed form guarantees containment.
    pub in_proven_range: bool,
}

/// Decides `BCH(n, q; delta)^perp <= BCH(n, q; delta)` exactly and reports
/// the sufficient bound
/// `kappa = n (q^ceil(m/2) - 1 - (q - 2)[m odd]) / (q^m - 1)`.
pub fn bch_dual_containing(n: usize, q: u32, delta: usize) -> Result<DualContainment> {
    let code = bch(n, q, delta)?;
    let set = code.defining_set();
    let contained = set.iter().all(|&z| set.binary_search(&((n - z) % n)).is_err());
    let m = multiplicative_order(q as usize, n)?;
    let qq = q as u128;
    let odd = if m % 2 == 1 { qq - 2 } else { 0 };
    let num = n as u128 * (qq.pow(m.div_ceil(2) as u32) - 1 - odd);
    let delta_max = (num / (qq.pow(m as u32) - 1)) as usize;
    Ok(DualContainment { contained, delta_max, in_proven_range: delta <= delta_max })
}

/// Monomials of degree `<= r` in `m` variables, as bit masks, by degree then
/// mask order.
fn monomials(r: isize, m: usize) -> Vec<u32> {
    let mut out: Vec<u32> = (0u32..1 << m).filter(|&mask| mask.count_ones() as isize <= r).collect();
    out.sort_by_key(|&mask| (mask.count_ones(), mask));
    out
}

fn evaluation_matrix(r: isize, m: usize) -> Matrix {
    let monos = monomials(r, m);
    Matrix::from_fn(2, monos.len(), 1 << m, |row, point| ((point as u32 & monos[row]) == monos[row]) as u32)
}

/// Binary Reed-Muller code `RM(r, m)` from monomial evaluations at the
/// points of `{0,1}^m` (point `j` has `x_i` = bit `i` of `j`).
///
/// The parity check is `RM(m - 1 - r, m)`; [`LinearCode::from_parts`]
/// verifies that it is the dual.
pub fn reed_muller(r: usize, m: usize) -> Result<LinearCode> {
    if r > m || m > 20 {
        return Err(Error::Range(format!("RM({r}, {m}) requires 0 <= r <= m <= 20")));
    }
    let g = evaluation_matrix(r as isize, m);
    let h = evaluation_matrix(m as isize - 1 - r as isize, m);
    LinearCode::from_parts(g, h)
}

/// Cyclic generalized Reed-Muller code of order `nu` over GF(q), length
/// `q^m - 1`, with defining set `{ j : 0 < W_q(j) <= m(q-1) - nu - 1 }`.
///
/// Its dual has defining set `{0} u Z(m(q-1) - 1 - nu)`.
pub fn grm_cyclic(nu: usize, m: usize, q: u32) -> Result<CyclicCode> {
    let field = alphabet(q)?;
    let top = m * (q as usize - 1);
    if nu >= top {
        return Err(Error::Range(format!("order {nu} outside [0, {}]", top - 1)));
    }
    let n = (q as usize).checked_pow(m as u32).ok_or_else(|| Error::Unsupported("q^m overflows".into()))? - 1;
    let bound = (top - nu - 1) as u64;
    let set = (1..n).filter(|&j| qary_weight(j as u64, q as u64) <= bound);
    CyclicCode::new(n, &field, set)
}
