//! Dense two-phase simplex over `BigRational` with Bland's rule.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Le,
    Ge,
}

/// `sum coeffs[j] x_j  (relation)  rhs`, over `x >= 0`.
#[derive(Debug, Clone)]
pub struct Row {
    pub coeffs: Vec<BigRational>,
    pub relation: Relation,
    pub rhs: BigRational,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Infeasible,
    /// A basic feasible point, and the minimized objective if one was given.
    Feasible { x: Vec<BigRational>, objective: Option<BigRational> },
    Unbounded { x: Vec<BigRational> },
}

struct Tableau {
    /// `rows[i][ncols]` is the right-hand side.
    rows: Vec<Vec<BigRational>>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize, cost: &mut [BigRational]) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *v -= &f * p;
                    }
                }
            }
        }
        if !cost[c].is_zero() {
            let f = cost[c].clone();
            for (v, p) in cost.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Reduced-cost row (last entry is minus the objective value).
    fn reduced_costs(&self, c: &[BigRational]) -> Vec<BigRational> {
        let mut cost: Vec<BigRational> = c.to_vec();
        cost.push(BigRational::zero());
        for (i, &b) in self.basis.iter().enumerate() {
            if !c[b].is_zero() {
                let f = c[b].clone();
                for (v, p) in cost.iter_mut().zip(&self.rows[i]) {
                    *v -= &f * p;
                }
            }
        }
        cost
    }

    /// Minimizes `c x` over columns allowed to enter; `false` if unbounded.
    fn minimize(&mut self, c: &[BigRational], allowed: usize) -> bool {
        let mut cost = self.reduced_costs(c);
        loop {
            let Some(enter) = (0..allowed).find(|&j| cost[j].is_negative()) else { return true };
            let mut leave: Option<(usize, BigRational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[enter].is_positive() {
                    let ratio = &row[self.ncols] / &row[enter];
                    let better = match &leave {
                        None => true,
                        Some((l, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l]),
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = leave else { return false };
            self.pivot(r, enter, &mut cost);
        }
    }

    fn point(&self, nvars: usize) -> Vec<BigRational> {
        let mut x = vec![BigRational::zero(); nvars];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < nvars {
                x[b] = self.rows[i][self.ncols].clone();
            }
        }
        x
    }
}

/// Solves `min objective . x` subject to `rows` and `x >= 0`; with no
/// objective only feasibility is decided.
pub fn solve(nvars: usize, rows: &[Row], objective: Option<&[BigRational]>) -> Outcome {
    let nslack = rows.iter().filter(|r| r.relation != Relation::Eq).count();
    let nart = rows.len();
    let ncols = nvars + nslack + nart;
    let mut tab = Tableau { rows: Vec::with_capacity(rows.len()), basis: Vec::with_capacity(rows.len()), ncols };
    let mut slack = nvars;
    for (i, r) in rows.iter().enumerate() {
        let mut t = vec![BigRational::zero(); ncols + 1];
        t[..nvars].clone_from_slice(&r.coeffs);
        match r.relation {
            Relation::Le => {
                t[slack] = BigRational::one();
                slack += 1;
            }
            Relation::Ge => {
                t[slack] = -BigRational::one();
                slack += 1;
            }
            Relation::Eq => {}
        }
        t[ncols] = r.rhs.clone();
        if r.rhs.is_negative() {
            for v in t.iter_mut() {
                *v = -v.clone();
            }
        }
        t[nvars + nslack + i] = BigRational::one();
        tab.rows.push(t);
        tab.basis.push(nvars + nslack + i);
    }

    let mut phase1 = vec![BigRational::zero(); ncols];
    for v in phase1[nvars + nslack..].iter_mut() {
        *v = BigRational::one();
    }
    tab.minimize(&phase1, ncols);
    let infeasible = tab
        .basis
        .iter()
        .enumerate()
        .any(|(i, &b)| b >= nvars + nslack && !tab.rows[i][ncols].is_zero());
    if infeasible {
        return Outcome::Infeasible;
    }

    // Drive zero-valued artificials out of the basis; drop redundant rows.
    let structural = nvars + nslack;
    let mut i = 0;
    while i < tab.rows.len() {
        if tab.basis[i] >= structural {
            match (0..structural).find(|&j| !tab.rows[i][j].is_zero()) {
                Some(j) => {
                    let mut dummy = vec![BigRational::zero(); ncols + 1];
                    tab.pivot(i, j, &mut dummy);
                }
                None => {
                    tab.rows.swap_remove(i);
                    tab.basis.swap_remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    let Some(obj) = objective else {
        return Outcome::Feasible { x: tab.point(nvars), objective: None };
    };
    let mut c = vec![BigRational::zero(); ncols];
    c[..nvars].clone_from_slice(obj);
    if !tab.minimize(&c, structural) {
        return Outcome::Unbounded { x: tab.point(nvars) };
    }
    let x = tab.point(nvars);
    let value = x.iter().zip(obj).map(|(a, b)| a * b).fold(BigRational::zero(), |s, v| s + v);
    Outcome::Feasible { x, objective: Some(value) }
}
