//! Linear-programming feasibility for asymmetric CSS parameters
//! `[[n, k, d_x/d_z]]`, solved exactly over the rationals.
//!
//! For a split `k'`, the variables are the weight distributions `A` (of
//! `C_z^perp`, size `2^k'`) and `B` (of `C_x^perp`, size `2^(n-k-k')`).
//! Their MacWilliams transforms `A^perp`, `B^perp` (of `C_z`, `C_x`) are
//! eliminated and appear as integer-scaled Krawtchouk rows.

mod simplex;

pub use simplex::{solve, Outcome, Relation, Row};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linear_code::krawtchouk;

/// Largest supported block length.
pub const MAX_LP_LENGTH: usize = 32;

/// The constraint system for one split `k'`; variables `A_0..A_n` then
/// `B_0..B_n`, all nonnegative.
#[derive(Debug, Clone)]
pub struct ConstraintSystem {
    pub n: usize,
    pub k: usize,
    pub k_prime: usize,
    pub d_x: usize,
    pub d_z: usize,
    pub rows: Vec<Row>,
}

impl ConstraintSystem {
    pub fn num_vars(&self) -> usize {
        2 * (self.n + 1)
    }

    /// Exact check of every constraint, including nonnegativity.
    pub fn check(&self, x: &[BigRational]) -> bool {
        if x.len() != self.num_vars() || x.iter().any(|v| *v < BigRational::zero()) {
            return false;
        }
        self.rows.iter().all(|r| {
            let lhs = r.coeffs.iter().zip(x).fold(BigRational::zero(), |s, (c, v)| s + c * v);
            match r.relation {
                Relation::Eq => lhs == r.rhs,
                Relation::Le => lhs <= r.rhs,
                Relation::Ge => lhs >= r.rhs,
            }
        })
    }
}

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

fn validate(n: usize, k: usize, d_x: usize, d_z: usize) -> Result<()> {
    if n == 0 || n > MAX_LP_LENGTH {
        return Err(Error::Unsupported(format!("n = {n} outside [1, {MAX_LP_LENGTH}]")));
    }
    if k == 0 || k >= n {
        return Err(Error::Range(format!("need 0 < k < n, got k = {k}, n = {n}")));
    }
    if !(1..=n).contains(&d_x) || !(1..=n).contains(&d_z) {
        return Err(Error::Range(format!("distances {d_x}/{d_z} outside [1, {n}]")));
    }
    Ok(())
}

/// Builds the constraints for the split `k'`:
///
/// * `A_0 = B_0 = 1`, `sum A = 2^k'`, `sum B = 2^(n-k-k')`;
/// * `2^(n-k-k') A_j = sum_i K_j(i) B_i` for `j < d_x`, `<=` otherwise;
/// * `2^k' B_j = sum_i K_j(i) A_i` for `j < d_z`, `<=` otherwise.
pub fn build_constraints(n: usize, k: usize, k_prime: usize, d_x: usize, d_z: usize) -> Result<ConstraintSystem> {
    validate(n, k, d_x, d_z)?;
    if k_prime > n - k {
        return Err(Error::Range(format!("split k' = {k_prime} exceeds n - k = {}", n - k)));
    }
    let kb = n - k - k_prime;
    let nv = 2 * (n + 1);
    let kraw: Vec<Vec<BigRational>> = (0..=n)
        .map(|j| (0..=n).map(|i| krawtchouk(j, i, n).map(int)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let size_a = int(BigInt::one() << k_prime);
    let size_b = int(BigInt::one() << kb);
    let unit = |idx: usize| {
        let mut c = vec![BigRational::zero(); nv];
        c[idx] = BigRational::one();
        c
    };
    let mut rows = vec![
        Row { coeffs: unit(0), relation: Relation::Eq, rhs: int(1) },
        Row { coeffs: unit(n + 1), relation: Relation::Eq, rhs: int(1) },
    ];
    let sum = |offset: usize, rhs: BigRational| {
        let mut c = vec![BigRational::zero(); nv];
        for v in c[offset..offset + n + 1].iter_mut() {
            *v = BigRational::one();
        }
        Row { coeffs: c, relation: Relation::Eq, rhs }
    };
    rows.push(sum(0, size_a.clone()));
    rows.push(sum(n + 1, size_b.clone()));
    // (own offset, other offset, own scale, equality window)
    for (own, other, scale, window) in [(0, n + 1, &size_b, d_x), (n + 1, 0, &size_a, d_z)] {
        for j in 1..=n {
            let mut c = vec![BigRational::zero(); nv];
            c[own + j] = scale.clone();
            for i in 0..=n {
                c[other + i] -= &kraw[j][i];
            }
            let relation = if j < window { Relation::Eq } else { Relation::Le };
            rows.push(Row { coeffs: c, relation, rhs: BigRational::zero() });
        }
    }
    Ok(ConstraintSystem { n, k, k_prime, d_x, d_z, rows })
}

fn ser_ratios<S: Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.to_string()))
}

fn ser_ratio<S: Serializer>(v: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// A rational solution for one split.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub k_prime: usize,
    #[serde(serialize_with = "ser_ratios")]
    pub a: Vec<BigRational>,
    #[serde(serialize_with = "ser_ratios")]
    pub b: Vec<BigRational>,
    /// `sum_{j=1..d_z-1} A_j` at this point.
    #[serde(serialize_with = "ser_ratio")]
    pub objective: BigRational,
    pub integral: bool,
}

impl Witness {
    /// `A` followed by `B`, the variable order of [`ConstraintSystem`].
    pub fn variables(&self) -> Vec<BigRational> {
        self.a.iter().chain(&self.b).cloned().collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Feasible,
    Infeasible,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FeasibilityReport {
    pub n: usize,
    pub k: usize,
    pub d_x: usize,
    pub d_z: usize,
    pub verdict: Verdict,
    /// `may exist` or `cannot exist`, for the relaxed CSS problem.
    pub summary: String,
    pub feasible_k_primes: Vec<usize>,
    pub witnesses: Vec<Witness>,
    pub integrality_note: String,
}

/// Splits examined: `0 < k' < n - k`, plus `k' = 0` when `d_z = 1` and
/// `k' = n - k` when `d_x = 1`.
pub fn candidate_splits(n: usize, k: usize, d_x: usize, d_z: usize) -> Vec<usize> {
    let top = n - k;
    (0..=top)
        .filter(|&kp| (kp > 0 || d_z == 1) && (kp < top || d_x == 1))
        .collect()
}

/// Solves one split; `None` if infeasible.
pub fn solve_split(n: usize, k: usize, k_prime: usize, d_x: usize, d_z: usize) -> Result<Option<Witness>> {
    let sys = build_constraints(n, k, k_prime, d_x, d_z)?;
    let mut obj = vec![BigRational::zero(); sys.num_vars()];
    for v in obj[1..d_z.min(n + 1)].iter_mut() {
        *v = -BigRational::one();
    }
    match solve(sys.num_vars(), &sys.rows, Some(&obj)) {
        Outcome::Infeasible => Ok(None),
        Outcome::Feasible { x, objective } => {
            debug_assert!(sys.check(&x));
            let objective = -objective.unwrap_or_default();
            let integral = x.iter().all(|v| v.is_integer());
            let b = x[n + 1..].to_vec();
            let mut a = x;
            a.truncate(n + 1);
            Ok(Some(Witness { k_prime, a, b, objective, integral }))
        }
        Outcome::Unbounded { .. } => Err(Error::Range("LP unexpectedly unbounded".into())),
    }
}

/// Feasibility of `[[n, k, d_x/d_z]]` over all splits, solved in parallel
/// and reported in `k'` order.
pub fn lp_feasible(n: usize, k: usize, d_x: usize, d_z: usize) -> Result<FeasibilityReport> {
    validate(n, k, d_x, d_z)?;
    let splits = candidate_splits(n, k, d_x, d_z);
    let results: Vec<Option<Witness>> =
        splits.par_iter().map(|&kp| solve_split(n, k, kp, d_x, d_z)).collect::<Result<_>>()?;
    let witnesses: Vec<Witness> = results.into_iter().flatten().collect();
    let feasible = !witnesses.is_empty();
    let integral = witnesses.iter().filter(|w| w.integral).count();
    let integrality_note = if !feasible {
        "no split admits a rational solution".to_string()
    } else if integral == witnesses.len() {
        "every witness is integral".to_string()
    } else {
        format!(
            "{integral} of {} witnesses are integral; integrality is relaxed and fractional witnesses are not conclusive",
            witnesses.len()
        )
    };
    Ok(FeasibilityReport {
        n,
        k,
        d_x,
        d_z,
        verdict: if feasible { Verdict::Feasible } else { Verdict::Infeasible },
        summary: if feasible {
            format!("a [[{n}, {k}, {d_x}/{d_z}]] CSS code may exist")
        } else {
            format!("a [[{n}, {k}, {d_x}/{d_z}]] CSS code cannot exist")
        },
        feasible_k_primes: witnesses.iter().map(|w| w.k_prime).collect(),
        witnesses,
        integrality_note,
    })
}

/// Re-substitutes a witness into its constraint system.
pub fn check_witness(report: &FeasibilityReport, witness: &Witness) -> Result<bool> {
    let sys = build_constraints(report.n, report.k, witness.k_prime, report.d_x, report.d_z)?;
    Ok(sys.check(&witness.variables()))
}

#[cfg(test)]
mod tests;
