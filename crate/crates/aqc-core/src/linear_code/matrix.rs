use std::fmt;

use crate::error::{Error, Result};

/// Dense matrix over the prime field GF(p).
///
/// GF(2) matrices are bit-packed into `u64` words, row-major, with unused
/// high bits of the last word of every row kept at zero. Other primes store
/// one `u32` symbol per entry.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Storage,
}

#[derive(Clone, PartialEq, Eq)]
enum Storage {
    Bits { stride: usize, words: Vec<u64> },
    Symbols(Vec<u32>),
}

pub(crate) fn words_for(cols: usize) -> usize {
    cols.div_ceil(64)
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let (mut base, mut e, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

impl Matrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        let data = if p == 2 {
            let stride = words_for(cols);
            Storage::Bits { stride, words: vec![0; rows * stride] }
        } else {
            Storage::Symbols(vec![0; rows * cols])
        };
        Matrix { p, rows, cols, data }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows of symbols in `0..p`.
    pub fn from_rows(p: u32, cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut m = Self::zeros(p, rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {r} has length {}, expected {cols}",
                    row.len()
                )));
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= p {
                    return Err(Error::Range(format!("symbol {v} not in GF({p})")));
                }
                m.set(r, c, v);
            }
        }
        Ok(m)
    }

    pub fn from_fn(p: u32, rows: usize, cols: usize, f: impl Fn(usize, usize) -> u32) -> Self {
        let mut m = Self::zeros(p, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c) % p);
            }
        }
        m
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_binary(&self) -> bool {
        self.p == 2
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        debug_assert!(r < self.rows && c < self.cols);
        match &self.data {
            Storage::Bits { stride, words } => ((words[r * stride + c / 64] >> (c % 64)) & 1) as u32,
            Storage::Symbols(v) => v[r * self.cols + c],
        }
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        debug_assert!(r < self.rows && c < self.cols && v < self.p);
        match &mut self.data {
            Storage::Bits { stride, words } => {
                let w = &mut words[r * *stride + c / 64];
                let bit = 1u64 << (c % 64);
                if v & 1 == 1 {
                    *w |= bit;
                } else {
                    *w &= !bit;
                }
            }
            Storage::Symbols(d) => d[r * self.cols + c] = v,
        }
    }

    pub fn row(&self, r: usize) -> Vec<u32> {
        (0..self.cols).map(|c| self.get(r, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    /// Packed words of a GF(2) row. Panics for other primes.
    pub fn row_words(&self, r: usize) -> &[u64] {
        match &self.data {
            Storage::Bits { stride, words } => &words[r * stride..(r + 1) * stride],
            Storage::Symbols(_) => panic!("row_words on a non-binary matrix"),
        }
    }

    /// Symbols of a row of an odd-characteristic matrix. Panics for GF(2).
    pub fn row_symbols(&self, r: usize) -> &[u32] {
        match &self.data {
            Storage::Symbols(v) => &v[r * self.cols..(r + 1) * self.cols],
            Storage::Bits { .. } => panic!("row_symbols on a binary matrix"),
        }
    }

    pub fn push_row(&mut self, row: &[u32]) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        match &mut self.data {
            Storage::Bits { stride, words } => {
                let start = words.len();
                words.resize(start + *stride, 0);
                for (c, &v) in row.iter().enumerate() {
                    if v & 1 == 1 {
                        words[start + c / 64] |= 1 << (c % 64);
                    }
                }
            }
            Storage::Symbols(d) => d.extend(row.iter().map(|&v| v % self.p)),
        }
        self.rows += 1;
    }

    /// Appends a packed GF(2) row.
    pub fn push_row_words(&mut self, row: &[u64]) {
        match &mut self.data {
            Storage::Bits { stride, words } => {
                assert_eq!(row.len(), *stride, "row length mismatch");
                words.extend_from_slice(row);
            }
            Storage::Symbols(_) => panic!("push_row_words on a non-binary matrix"),
        }
        self.rows += 1;
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let width = match &self.data {
            Storage::Bits { stride, .. } => *stride,
            Storage::Symbols(_) => self.cols,
        };
        match &mut self.data {
            Storage::Bits { words, .. } => swap_chunks(words, width, a, b),
            Storage::Symbols(v) => swap_chunks(v, width, a, b),
        }
    }

    /// `row[dst] += c * row[src]`.
    pub fn add_scaled_row(&mut self, dst: usize, src: usize, c: u32) {
        self.add_scaled_row_from(dst, src, c, 0);
    }

    /// Like [`Self::add_scaled_row`], skipping columns below `from_col`,
    /// which the caller guarantees are zero in `src`.
    fn add_scaled_row_from(&mut self, dst: usize, src: usize, c: u32, from_col: usize) {
        let c = c % self.p;
        if c == 0 || dst == src {
            assert!(dst != src || c == 0, "cannot add a row to itself");
            return;
        }
        let p = self.p as u64;
        let cols = self.cols;
        match &mut self.data {
            Storage::Bits { stride, words } => {
                for w in from_col / 64..*stride {
                    let s = words[src * *stride + w];
                    words[dst * *stride + w] ^= s;
                }
            }
            Storage::Symbols(v) => {
                for j in from_col..cols {
                    let s = v[src * cols + j] as u64;
                    if s != 0 {
                        let d = &mut v[dst * cols + j];
                        *d = ((*d as u64 + c as u64 * s) % p) as u32;
                    }
                }
            }
        }
    }

    fn scale_row(&mut self, r: usize, c: u32) {
        if let Storage::Symbols(v) = &mut self.data {
            let p = self.p as u64;
            for x in &mut v[r * self.cols..(r + 1) * self.cols] {
                *x = (*x as u64 * c as u64 % p) as u32;
            }
        }
    }

    /// Reduces to reduced row echelon form in place; returns pivot columns.
    /// Rows past the rank are zero afterwards.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            self.swap_rows(r, pr);
            let lead = self.get(r, c);
            if lead != 1 {
                self.scale_row(r, inv_mod(lead, self.p));
            }
            for i in 0..self.rows {
                if i != r {
                    let v = self.get(i, c);
                    if v != 0 {
                        self.add_scaled_row_from(i, r, self.p - v, c);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// A reduced basis of the row space and its pivot columns.
    pub fn reduced(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref();
        m.truncate_rows(pivots.len());
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    pub fn truncate_rows(&mut self, rows: usize) {
        if rows >= self.rows {
            return;
        }
        match &mut self.data {
            Storage::Bits { stride, words } => words.truncate(rows * *stride),
            Storage::Symbols(v) => v.truncate(rows * self.cols),
        }
        self.rows = rows;
    }

    /// A basis (as rows) of `{ v : self * v^T = 0 }`.
    pub fn nullspace(&self) -> Matrix {
        let (red, pivots) = self.reduced();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut out = Matrix::zeros(self.p, 0, self.cols);
        let mut v = vec![0u32; self.cols];
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            v.iter_mut().for_each(|x| *x = 0);
            v[f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                let e = red.get(i, f);
                v[pc] = (self.p - e) % self.p;
            }
            out.push_row(&v);
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if v != 0 {
                    t.set(c, r, v);
                }
            }
        }
        t
    }

    /// `self * other^T`.
    pub fn mul_transpose(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols || self.p != other.p {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by the transpose of {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.p, self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                let v = self.row_dot(i, other, j);
                if v != 0 {
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    fn row_dot(&self, i: usize, other: &Matrix, j: usize) -> u32 {
        match (&self.data, &other.data) {
            (Storage::Bits { .. }, Storage::Bits { .. }) => {
                let ones: u32 = self
                    .row_words(i)
                    .iter()
                    .zip(other.row_words(j))
                    .map(|(a, b)| (a & b).count_ones())
                    .sum();
                ones & 1
            }
            _ => {
                let p = self.p as u64;
                let acc = self
                    .row_symbols(i)
                    .iter()
                    .zip(other.row_symbols(j))
                    .fold(0u64, |acc, (&a, &b)| (acc + a as u64 * b as u64) % p);
                acc as u32
            }
        }
    }

    /// `self * v^T` for a symbol vector `v`.
    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let p = self.p as u64;
        (0..self.rows)
            .map(|r| {
                let acc = (0..self.cols)
                    .filter(|&c| v[c] != 0)
                    .fold(0u64, |acc, c| (acc + self.get(r, c) as u64 * v[c] as u64) % p);
                acc as u32
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        match &self.data {
            Storage::Bits { words, .. } => words.iter().all(|&w| w == 0),
            Storage::Symbols(v) => v.iter().all(|&x| x == 0),
        }
    }

    pub fn row_weight(&self, r: usize) -> usize {
        match &self.data {
            Storage::Bits { .. } => self.row_words(r).iter().map(|w| w.count_ones() as usize).sum(),
            Storage::Symbols(_) => self.row_symbols(r).iter().filter(|&&x| x != 0).count(),
        }
    }

    pub fn row_weights(&self) -> Vec<usize> {
        (0..self.rows).map(|r| self.row_weight(r)).collect()
    }

    pub fn column_weights(&self) -> Vec<usize> {
        let mut w = vec![0usize; self.cols];
        for r in 0..self.rows {
            for (c, slot) in w.iter_mut().enumerate() {
                if self.get(r, c) != 0 {
                    *slot += 1;
                }
            }
        }
        w
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols || self.p != other.p {
            return Err(Error::Dimension("vstack of incompatible matrices".into()));
        }
        let mut out = self.clone();
        out.rows += other.rows;
        match (&mut out.data, &other.data) {
            (Storage::Bits { words, .. }, Storage::Bits { words: ow, .. }) => words.extend_from_slice(ow),
            (Storage::Symbols(v), Storage::Symbols(ov)) => v.extend_from_slice(ov),
            _ => unreachable!("storage follows the characteristic"),
        }
        Ok(out)
    }

    /// True when both matrices span the same row space.
    pub fn same_row_space(&self, other: &Matrix) -> bool {
        self.cols == other.cols && self.p == other.p && self.reduced().0 == other.reduced().0
    }
}

fn swap_chunks<T>(v: &mut [T], width: usize, a: usize, b: usize) {
    let (lo, hi) = (a.min(b), a.max(b));
    let (first, second) = v.split_at_mut(hi * width);
    first[lo * width..(lo + 1) * width].swap_with_slice(&mut second[..width]);
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix GF({}) {}x{}", self.p, self.rows, self.cols)?;
        for r in 0..self.rows.min(32) {
            let row: String = (0..self.cols.min(96))
                .map(|c| char::from_digit(self.get(r, c), 36).unwrap_or('?'))
                .collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

/// A reduced row-space basis supporting fast membership tests.
#[derive(Debug, Clone)]
pub struct RowSpace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(m: &Matrix) -> Self {
        let (basis, pivots) = m.reduced();
        RowSpace { basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Membership of a symbol vector.
    pub fn contains(&self, v: &[u32]) -> bool {
        let p = self.basis.p();
        let mut w: Vec<u32> = v.iter().map(|&x| x % p).collect();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = w[pc];
            if c != 0 {
                for (j, x) in w.iter_mut().enumerate() {
                    let b = self.basis.get(i, j);
                    if b != 0 {
                        *x = ((*x as u64 + (p - c) as u64 * b as u64) % p as u64) as u32;
                    }
                }
            }
        }
        w.iter().all(|&x| x == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_nullspace_binary() {
        let m = Matrix::from_rows(2, 4, &[vec![1, 1, 0, 0], vec![0, 1, 1, 0], vec![1, 0, 1, 0]]).unwrap();
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.rows(), 2);
        assert!(m.mul_transpose(&ns).unwrap().is_zero());
    }

    #[test]
    fn rref_and_nullspace_ternary() {
        let m = Matrix::from_rows(3, 4, &[vec![1, 2, 0, 1], vec![2, 1, 1, 0]]).unwrap();
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.rows(), 2);
        assert!(m.mul_transpose(&ns).unwrap().is_zero());
        let rs = RowSpace::new(&m);
        assert!(rs.contains(&[0, 0, 1, 1]));
        assert!(!rs.contains(&[1, 0, 0, 0]));
    }

    #[test]
    fn wide_binary_rows() {
        let n = 130;
        let m = Matrix::from_fn(2, 3, n, |r, c| ((c * (r + 1)) % 7 == 0) as u32);
        let t = m.transpose().transpose();
        assert_eq!(t, m);
        let ns = m.nullspace();
        assert_eq!(ns.rows(), n - m.rank());
        assert!(m.mul_transpose(&ns).unwrap().is_zero());
    }

    #[test]
    fn from_rows_validates() {
        assert!(Matrix::from_rows(2, 2, &[vec![1, 2]]).is_err());
        assert!(Matrix::from_rows(2, 3, &[vec![1, 0]]).is_err());
    }
}
