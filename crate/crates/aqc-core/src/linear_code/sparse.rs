use super::matrix::Matrix;
use crate::error::{Error, Result};

/// A binary matrix stored as row and column adjacency lists (a Tanner
/// graph). Both lists are sorted and describe the same set of ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseBinaryMatrix {
    cols: usize,
    row_adj: Vec<Vec<u32>>,
    col_adj: Vec<Vec<u32>>,
}

impl SparseBinaryMatrix {
    /// Builds from per-row sorted-or-unsorted column index lists.
    pub fn from_row_adjacency(cols: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        let mut col_adj = vec![Vec::new(); cols];
        let mut row_adj = Vec::with_capacity(rows.len());
        for (r, mut row) in rows.into_iter().enumerate() {
            row.sort_unstable();
            if row.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Dimension(format!("row {r} repeats a column")));
            }
            for &c in &row {
                if c as usize >= cols {
                    return Err(Error::Dimension(format!("row {r} references column {c} of {cols}")));
                }
                col_adj[c as usize].push(r as u32);
            }
            row_adj.push(row);
        }
        Ok(SparseBinaryMatrix { cols, row_adj, col_adj })
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        assert!(m.is_binary(), "sparse matrices are binary");
        let rows = (0..m.rows())
            .map(|r| (0..m.cols()).filter(|&c| m.get(r, c) == 1).map(|c| c as u32).collect())
            .collect();
        Self::from_row_adjacency(m.cols(), rows).expect("dense rows are well formed")
    }

    pub fn to_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(2, self.rows(), self.cols);
        for (r, row) in self.row_adj.iter().enumerate() {
            for &c in row {
                m.set(r, c as usize, 1);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.row_adj.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.row_adj[r]
    }

    pub fn col(&self, c: usize) -> &[u32] {
        &self.col_adj[c]
    }

    pub fn row_weights(&self) -> Vec<usize> {
        self.row_adj.iter().map(Vec::len).collect()
    }

    pub fn column_weights(&self) -> Vec<usize> {
        self.col_adj.iter().map(Vec::len).collect()
    }

    /// `H e^T` over GF(2) for a 0/1 vector `e`.
    pub fn syndrome(&self, e: &[u8]) -> Vec<u8> {
        assert_eq!(e.len(), self.cols, "vector length mismatch");
        self.row_adj
            .iter()
            .map(|row| row.iter().fold(0u8, |acc, &c| acc ^ (e[c as usize] & 1)))
            .collect()
    }

    /// Largest number of rows shared by two distinct columns.
    pub fn max_column_overlap(&self) -> usize {
        let mut best = 0usize;
        let mut counts = vec![0u32; self.cols];
        for c in 0..self.cols {
            let mut touched = Vec::new();
            for &r in &self.col_adj[c] {
                for &o in &self.row_adj[r as usize] {
                    if o as usize > c {
                        if counts[o as usize] == 0 {
                            touched.push(o);
                        }
                        counts[o as usize] += 1;
                    }
                }
            }
            for o in touched {
                best = best.max(counts[o as usize] as usize);
                counts[o as usize] = 0;
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_syndrome() {
        let m = Matrix::from_rows(2, 3, &[vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        let s = SparseBinaryMatrix::from_matrix(&m);
        assert_eq!(s.to_matrix(), m);
        assert_eq!(s.column_weights(), vec![1, 2, 1]);
        assert_eq!(s.syndrome(&[1, 0, 0]), vec![1, 0]);
        assert_eq!(s.max_column_overlap(), 1);
        assert!(SparseBinaryMatrix::from_row_adjacency(2, vec![vec![0, 2]]).is_err());
        assert!(SparseBinaryMatrix::from_row_adjacency(2, vec![vec![1, 1]]).is_err());
    }
}
