//! Euclidean geometries EG(m, p^s): flat enumeration, incidence matrices,
//! the flat-counting formulas, type-I EG codes, and the cyclic EG codes
//! given by q-ary weight root criteria.
//!
//! Points are the elements of GF(p^(ms)), viewed as an m-dimensional space
//! over the subfield GF(q), q = p^s. Point `alpha^i` is coordinate `i` of
//! every code on the non-origin points, matching the cyclic-code
//! convention, so the two constructions produce identical matrices. When the
//! origin is included it is the last coordinate, `q^m - 1`.

mod flats;

pub use flats::{
    count_flats_in_flat, count_flats_through_flat, enumerate_flats, incidence_matrix, EGSpec, Flat,
    IncidenceMatrix, FLAT_BUDGET,
};

use serde::{Deserialize, Serialize};

use crate::code_families::CyclicCode;
use crate::error::{Error, Result};
use crate::finite_field::{make_field, qary_weight, MAX_FIELD_SIZE};
use crate::linear_code::{LinearCode, Matrix, SparseBinaryMatrix};

/// The `mu`-flat versus point incidence matrix as a (redundant) parity
/// check over GF(p).
pub fn incidence_parity_check(eg: &EGSpec, mu: usize, exclude_origin: bool) -> Result<Matrix> {
    let inc = incidence_matrix(eg, mu, 0, exclude_origin)?;
    let h = inc.matrix();
    let mut m = Matrix::zeros(eg.p(), h.rows(), h.cols());
    for r in 0..h.rows() {
        for &c in h.row(r) {
            m.set(r, c as usize, 1);
        }
    }
    Ok(m)
}

/// Type-I EG code: the GF(p) null space of the incidence matrix of
/// `mu`-flats versus points.
pub fn eg_type1_code(eg: &EGSpec, mu: usize, exclude_origin: bool) -> Result<LinearCode> {
    Ok(LinearCode::from_parity_check(&incidence_parity_check(eg, mu, exclude_origin)?))
}

fn cyclic_params(m: usize, mu: usize, s: u32, p: u32) -> Result<(usize, u64)> {
    if mu < 1 || mu > m {
        return Err(Error::Range(format!("flat dimension {mu} outside [1, {m}]")));
    }
    let size = (p as u64).checked_pow(m as u32 * s).filter(|&x| x <= MAX_FIELD_SIZE);
    let size = size.ok_or_else(|| Error::Budget(format!("EG({m}, {p}^{s}) exceeds the supported size")))?;
    Ok((size as usize - 1, (p as u64).pow(s)))
}

fn weights_over_conjugates(h: usize, n: usize, p: u32, s: u32, q: u64) -> impl Iterator<Item = u64> {
    let mut cur = h;
    (0..s).map(move |_| {
        let w = qary_weight(cur as u64, q);
        cur = cur * p as usize % n;
        w
    })
}

/// Cyclic EG code `C_EG,c(m, mu, 0, s, p)` of length `p^(ms) - 1` over GF(p):
/// `h` is a root exponent iff
/// `0 < max_l W_q(h p^l mod n) <= (q - 1)(m - mu)`.
pub fn eg_cyclic_code(m: usize, mu: usize, s: u32, p: u32) -> Result<CyclicCode> {
    let (n, q) = cyclic_params(m, mu, s, p)?;
    let bound = (q - 1) * (m - mu) as u64;
    let set = (1..n).filter(|&h| {
        let w = weights_over_conjugates(h, n, p, s, q).max().unwrap_or(0);
        w > 0 && w <= bound
    });
    CyclicCode::new(n, &make_field(p, 1)?, set)
}

/// Defining set of the dual of [`eg_cyclic_code`]:
/// `{ h : min_l W_q(h p^l mod n) < mu (q - 1) }`, which always contains 0.
pub fn eg_cyclic_dual_defining_set(m: usize, mu: usize, s: u32, p: u32) -> Result<Vec<usize>> {
    let (n, q) = cyclic_params(m, mu, s, p)?;
    let bound = mu as u64 * (q - 1);
    Ok((0..n)
        .filter(|&h| weights_over_conjugates(h, n, p, s, q).min().unwrap_or(0) < bound)
        .collect())
}

/// `L + 1` for the longest run `1, 2, ..., L` of exponents in `set`.
pub fn consecutive_root_run(set: &[usize], n: usize) -> usize {
    let mut l = 0;
    while l + 1 < n.max(2) && set.contains(&(l + 1)) {
        l += 1;
    }
    l + 1
}

/// One-step majority-logic distance bound `d >= 1 + ceil(gamma / lambda)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MajorityLogicBound {
    /// Minimum column weight.
    pub gamma: usize,
    /// Largest number of checks shared by two columns (at least 1).
    pub lambda: usize,
    pub bound: usize,
}

/// Every check on a support position of a nonzero codeword meets a second
/// support position, and each other position covers at most `lambda` of
/// those checks.
pub fn majority_logic_bound(h: &SparseBinaryMatrix) -> MajorityLogicBound {
    let gamma = h.column_weights().into_iter().min().unwrap_or(0);
    let lambda = h.max_column_overlap().max(1);
    MajorityLogicBound { gamma, lambda, bound: 1 + gamma.div_ceil(lambda) }
}
