use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::finite_field::{make_field, FieldSpec};
use crate::linear_code::SparseBinaryMatrix;

/// Upper limit on the number of flats (and subspaces per level) enumerated.
pub const FLAT_BUDGET: u128 = 1 << 20;

fn exact_count(value: BigRational) -> Result<u128> {
    if !value.is_integer() {
        return Err(Error::Range(format!("flat count {value} is not an integer")));
    }
    value.to_integer().to_u128().ok_or_else(|| Error::Unsupported("flat count overflows u128".into()))
}

fn q_big(s: u32, p: u32) -> BigInt {
    BigInt::from(p).pow(s)
}

/// Number of `mu1`-flats in a `mu2`-flat of EG(*, p^s):
/// `q^(mu2 - mu1) prod_{i=1..mu1} (q^(mu2-i+1) - 1) / (q^(mu1-i+1) - 1)`.
pub fn count_flats_in_flat(mu2: usize, mu1: usize, s: u32, p: u32) -> Result<u128> {
    if mu1 >= mu2 && !(mu1 == 0 && mu2 == 0) {
        return Err(Error::Range(format!("need mu1 < mu2, got mu1 = {mu1}, mu2 = {mu2}")));
    }
    let q = q_big(s, p);
    let mut acc = BigRational::from_integer(q.pow((mu2 - mu1) as u32));
    for i in 1..=mu1 {
        let num = q.pow((mu2 - i + 1) as u32) - 1;
        let den = q.pow((mu1 - i + 1) as u32) - 1;
        acc *= BigRational::new(num, den);
    }
    exact_count(acc)
}

/// Number of `mu2`-flats of EG(m, p^s) containing a fixed `mu1`-flat:
/// `prod_{i=mu1+1..mu2} (q^(m-i+1) - 1) / (q^(mu2-i+1) - 1)`.
pub fn count_flats_through_flat(m: usize, mu2: usize, mu1: usize, s: u32, p: u32) -> Result<u128> {
    if mu1 > mu2 || mu2 > m || (mu1 == mu2 && mu2 != m) {
        return Err(Error::Range(format!("need mu1 < mu2 <= m, got ({m}, {mu2}, {mu1})")));
    }
    let q = q_big(s, p);
    let mut acc = BigRational::one();
    for i in mu1 + 1..=mu2 {
        let num = q.pow((m - i + 1) as u32) - 1;
        let den = q.pow((mu2 - i + 1) as u32) - 1;
        acc *= BigRational::new(num, den);
    }
    exact_count(acc)
}

/// The geometry EG(m, p^s) realized on GF(p^(ms)).
#[derive(Debug, Clone)]
pub struct EGSpec {
    m: usize,
    p: u32,
    s: u32,
    point_field: FieldSpec,
    /// GF(q) embedded in the point field.
    scalars: Vec<u32>,
}

impl EGSpec {
    pub fn new(m: usize, s: u32, p: u32) -> Result<Self> {
        if m < 1 || s < 1 {
            return Err(Error::Range("EG(m, p^s) needs m, s >= 1".into()));
        }
        let total = (m as u32).checked_mul(s).ok_or_else(|| Error::Unsupported("m s overflows".into()))?;
        let point_field = make_field(p, total)?;
        let sub = make_field(p, s)?;
        let emb = point_field.embedding(&sub)?;
        let scalars = (0..sub.size()).map(|a| emb.up(a)).collect();
        Ok(EGSpec { m, p, s, point_field, scalars })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn point_field(&self) -> &FieldSpec {
        &self.point_field
    }

    pub fn n_points(&self) -> usize {
        self.point_field.size() as usize
    }

    /// Code coordinate of a point: `alpha^i -> i`, origin last.
    pub fn coordinate(&self, point: u32) -> usize {
        match self.point_field.log(point) {
            Some(i) => i as usize,
            None => self.n_points() - 1,
        }
    }
}

/// A coset `base_point + span(direction_basis)` over GF(q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flat {
    pub dimension: usize,
    /// Smallest point encoding in the flat.
    pub base_point: u32,
    pub direction_basis: Vec<u32>,
    /// Sorted point encodings; the canonical key.
    pub points: Vec<u32>,
}

impl Flat {
    pub fn contains_origin(&self) -> bool {
        self.points.first() == Some(&0)
    }
}

fn subspaces(eg: &EGSpec, mu: usize) -> Result<Vec<(Vec<u32>, Vec<u32>)>> {
    let f = &eg.point_field;
    let npts = eg.n_points();
    let mut level: Vec<(Vec<u32>, Vec<u32>)> = vec![(vec![0], Vec::new())];
    for d in 0..mu {
        let expected = count_flats_through_flat(eg.m, d + 1, 0, eg.s, eg.p)?;
        if expected > FLAT_BUDGET {
            return Err(Error::Budget(format!("{expected} subspaces of dimension {} exceed the budget", d + 1)));
        }
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut next = Vec::new();
        for (pts, basis) in &level {
            let mut covered = vec![false; npts];
            for &x in pts {
                covered[x as usize] = true;
            }
            for v in 0..npts as u32 {
                if covered[v as usize] {
                    continue;
                }
                let mut span: Vec<u32> = Vec::with_capacity(pts.len() * eg.scalars.len());
                for &c in &eg.scalars {
                    let cv = f.mul(c, v);
                    span.extend(pts.iter().map(|&x| f.add(x, cv)));
                }
                span.sort_unstable();
                for &x in &span {
                    covered[x as usize] = true;
                }
                if seen.insert(span.clone()) {
                    let mut b = basis.clone();
                    b.push(v);
                    next.push((span, b));
                }
            }
        }
        next.sort();
        level = next;
    }
    Ok(level)
}

/// All `mu`-flats of `eg` in canonical (sorted point-set) order, optionally
/// only those avoiding the origin.
pub fn enumerate_flats(eg: &EGSpec, mu: usize, exclude_origin: bool) -> Result<Vec<Flat>> {
    if mu > eg.m {
        return Err(Error::Range(format!("flat dimension {mu} exceeds m = {}", eg.m)));
    }
    let total = if mu == eg.m { 1 } else { count_flats_in_flat(eg.m, mu, eg.s, eg.p)? };
    if total > FLAT_BUDGET {
        return Err(Error::Budget(format!("{total} flats exceed the budget of {FLAT_BUDGET}")));
    }
    let f = &eg.point_field;
    let npts = eg.n_points();
    let mut flats = Vec::with_capacity(total as usize);
    for (pts, basis) in subspaces(eg, mu)? {
        let mut covered = vec![false; npts];
        for b in 0..npts as u32 {
            if covered[b as usize] {
                continue;
            }
            let mut coset: Vec<u32> = pts.iter().map(|&x| f.add(x, b)).collect();
            coset.sort_unstable();
            for &x in &coset {
                covered[x as usize] = true;
            }
            if exclude_origin && coset[0] == 0 {
                continue;
            }
            flats.push(Flat { dimension: mu, base_point: b, direction_basis: basis.clone(), points: coset });
        }
    }
    flats.sort_by(|a, b| a.points.cmp(&b.points));
    Ok(flats)
}

/// Binary incidence of `mu2`-flats (rows) against `mu1`-flats (columns).
#[derive(Debug, Clone)]
pub struct IncidenceMatrix {
    matrix: SparseBinaryMatrix,
    rows: Vec<Flat>,
    cols: Vec<Flat>,
}

impl IncidenceMatrix {
    pub fn matrix(&self) -> &SparseBinaryMatrix {
        &self.matrix
    }

    pub fn row_flats(&self) -> &[Flat] {
        &self.rows
    }

    /// Column flats in column order.
    pub fn col_flats(&self) -> &[Flat] {
        &self.cols
    }
}

/// Incidence of `mu2`-flats versus `mu1`-flats. For `mu1 = 0` the columns
/// are points in code-coordinate order (see [`EGSpec::coordinate`]); with
/// `exclude_origin`, flats through the origin are dropped on both sides.
pub fn incidence_matrix(eg: &EGSpec, mu2: usize, mu1: usize, exclude_origin: bool) -> Result<IncidenceMatrix> {
    if mu1 >= mu2 {
        return Err(Error::Range(format!("need mu1 < mu2, got mu1 = {mu1}, mu2 = {mu2}")));
    }
    let rows = enumerate_flats(eg, mu2, exclude_origin)?;
    let mut cols = enumerate_flats(eg, mu1, exclude_origin)?;
    if mu1 == 0 {
        cols.sort_by_key(|c| eg.coordinate(c.points[0]));
    }
    let adjacency: Vec<Vec<u32>> = if mu1 == 0 {
        let index: BTreeMap<u32, u32> = cols.iter().enumerate().map(|(i, c)| (c.points[0], i as u32)).collect();
        rows.iter().map(|r| r.points.iter().filter_map(|x| index.get(x).copied()).collect()).collect()
    } else {
        rows.iter()
            .map(|r| {
                cols.iter()
                    .enumerate()
                    .filter(|(_, c)| c.points.iter().all(|x| r.points.binary_search(x).is_ok()))
                    .map(|(i, _)| i as u32)
                    .collect()
            })
            .collect()
    };
    let matrix = SparseBinaryMatrix::from_row_adjacency(cols.len(), adjacency)?;
    Ok(IncidenceMatrix { matrix, rows, cols })
}
