use std::sync::OnceLock;

use super::matrix::{Matrix, RowSpace};
use crate::error::{Error, Result};

/// A linear `[n, k]` code over GF(p) carrying both a generator matrix
/// (`k x n`, full row rank) and a parity-check matrix (`(n-k) x n`, full row
/// rank) with `G H^T = 0`.
#[derive(Clone)]
pub struct LinearCode {
    p: u32,
    n: usize,
    generator: Matrix,
    parity_check: Matrix,
    row_space: OnceLock<RowSpace>,
}

impl std::fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}] code over GF({})", self.n, self.k(), self.p)
    }
}

impl LinearCode {
    /// The row space of `g`; dependent rows are discarded.
    pub fn from_generator(g: &Matrix) -> Self {
        let (basis, _) = g.reduced();
        let parity_check = g.nullspace();
        Self::assemble(basis, parity_check)
    }

    /// The null space of `h`; dependent rows are discarded.
    pub fn from_parity_check(h: &Matrix) -> Self {
        let generator = h.nullspace();
        let (basis, _) = h.reduced();
        Self::assemble(generator, basis)
    }

    /// Adopts a generator/parity-check pair after checking full rank and
    /// orthogonality.
    pub fn from_parts(generator: Matrix, parity_check: Matrix) -> Result<Self> {
        let n = generator.cols();
        if parity_check.cols() != n || generator.p() != parity_check.p() {
            return Err(Error::Dimension("generator and parity check disagree on n or p".into()));
        }
        if generator.rows() + parity_check.rows() != n
            || generator.rank() != generator.rows()
            || parity_check.rank() != parity_check.rows()
        {
            return Err(Error::Dimension("generator and parity check are not complementary full-rank".into()));
        }
        if !generator.mul_transpose(&parity_check)?.is_zero() {
            return Err(Error::Dimension("G H^T != 0".into()));
        }
        Ok(Self::assemble(generator, parity_check))
    }

    fn assemble(generator: Matrix, parity_check: Matrix) -> Self {
        LinearCode {
            p: generator.p(),
            n: generator.cols(),
            generator,
            parity_check,
            row_space: OnceLock::new(),
        }
    }

    /// The `[n, 0]` code.
    pub fn zero(p: u32, n: usize) -> Self {
        Self::assemble(Matrix::zeros(p, 0, n), Matrix::identity(p, n))
    }

    /// The `[n, n]` code.
    pub fn full(p: u32, n: usize) -> Self {
        Self::assemble(Matrix::identity(p, n), Matrix::zeros(p, 0, n))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn parity_check(&self) -> &Matrix {
        &self.parity_check
    }

    /// The Euclidean dual `[n, n-k]`.
    pub fn dual(&self) -> LinearCode {
        Self::assemble(self.parity_check.clone(), self.generator.clone())
    }

    pub fn row_space(&self) -> &RowSpace {
        self.row_space.get_or_init(|| RowSpace::new(&self.generator))
    }

    /// Membership via the syndrome `H v^T`.
    pub fn contains(&self, v: &[u32]) -> bool {
        self.parity_check.mul_vec(v).iter().all(|&x| x == 0)
    }

    /// True when both codes have the same codewords.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.p == other.p
            && self.n == other.n
            && self.k() == other.k()
            && self.generator.mul_transpose(&other.parity_check).is_ok_and(|m| m.is_zero())
    }
}

/// True when every codeword of `inner` lies in `outer`.
pub fn is_subcode(inner: &LinearCode, outer: &LinearCode) -> Result<bool> {
    if inner.n() != outer.n() || inner.p() != outer.p() {
        return Err(Error::Dimension(format!(
            "cannot compare {inner:?} with {outer:?}"
        )));
    }
    Ok(inner.generator().mul_transpose(outer.parity_check())?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hamming7() -> LinearCode {
        let h = Matrix::from_fn(2, 3, 7, |r, c| (((c + 1) >> r) & 1) as u32);
        LinearCode::from_parity_check(&h)
    }

    #[test]
    fn dual_examples() {
        let full = LinearCode::full(2, 5);
        assert_eq!(full.dual().k(), 0);
        let rep = LinearCode::from_generator(&Matrix::from_rows(2, 3, &[vec![1, 1, 1]]).unwrap());
        let even = rep.dual();
        assert_eq!(even.k(), 2);
        assert!(even.contains(&[1, 1, 0]));
        assert!(!even.contains(&[1, 0, 0]));
        let h = hamming7();
        assert_eq!(h.k(), 4);
        assert_eq!(h.dual().k(), 3);
        assert!(h.dual().dual().same_code(&h));
    }

    #[test]
    fn subcode_examples() {
        let h = hamming7();
        assert!(is_subcode(&h, &h).unwrap());
        assert!(is_subcode(&LinearCode::zero(2, 7), &h).unwrap());
        assert!(is_subcode(&h.dual(), &h).unwrap());
        assert!(!is_subcode(&h, &h.dual()).unwrap());
        assert!(is_subcode(&h, &LinearCode::full(2, 6)).is_err());
    }

    #[test]
    fn from_parts_checks() {
        let h = hamming7();
        assert!(LinearCode::from_parts(h.generator().clone(), h.parity_check().clone()).is_ok());
        assert!(LinearCode::from_parts(h.generator().clone(), h.generator().clone()).is_err());
    }
}
