use crate::error::{Error, Result};
use crate::finite_field::FieldSpec;
use crate::linear_code::{LinearCode, Matrix};

/// A linear code over an extension field GF(p^l), kept as a reduced
/// generator matrix of field-element encodings.
#[derive(Debug, Clone)]
pub struct ExtensionCode {
    field: FieldSpec,
    n: usize,
    generator: Vec<Vec<u32>>,
}

/// Reduced row echelon form over `f`; returns pivot columns and drops zero
/// rows.
pub(crate) fn rref_over(f: &FieldSpec, rows: &mut Vec<Vec<u32>>, n: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = f.inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let factor = row[c];
                for (x, &pv) in row.iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(factor, pv));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

impl ExtensionCode {
    pub fn from_generator(field: &FieldSpec, n: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        for row in &rows {
            if row.len() != n || row.iter().any(|&x| x >= field.size()) {
                return Err(Error::Dimension(format!("generator row is not a vector of {field:?}^{n}")));
            }
        }
        let mut generator = rows;
        rref_over(field, &mut generator, n);
        Ok(ExtensionCode { field: field.clone(), n, generator })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.generator.len()
    }

    pub fn generator(&self) -> &[Vec<u32>] {
        &self.generator
    }

    /// A basis of the Euclidean dual.
    pub fn parity_check(&self) -> Vec<Vec<u32>> {
        let f = &self.field;
        let mut red = self.generator.clone();
        let pivots = rref_over(f, &mut red, self.n);
        let mut is_pivot = vec![false; self.n];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.n)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0u32; self.n];
                v[free] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(red[i][free]);
                }
                v
            })
            .collect()
    }

    pub fn dual(&self) -> ExtensionCode {
        ExtensionCode::from_generator(&self.field, self.n, self.parity_check()).expect("dual basis is well formed")
    }

    /// All `q^k` codewords; refused above `limit`.
    pub fn codewords(&self, limit: u64) -> Result<Vec<Vec<u32>>> {
        let q = self.field.size() as u64;
        let total = q.checked_pow(self.k() as u32).filter(|&t| t <= limit);
        let Some(total) = total else {
            return Err(Error::Budget(format!("q^k exceeds {limit}")));
        };
        let f = &self.field;
        let mut out = Vec::with_capacity(total as usize);
        for idx in 0..total {
            let mut v = vec![0u32; self.n];
            let mut rest = idx;
            for row in &self.generator {
                let c = (rest % q) as u32;
                rest /= q;
                if c != 0 {
                    for (x, &g) in v.iter_mut().zip(row) {
                        *x = f.add(*x, f.mul(c, g));
                    }
                }
            }
            out.push(v);
        }
        Ok(out)
    }
}

fn check_prime_target(code: &ExtensionCode, target: &FieldSpec) -> Result<()> {
    if target.p() != code.field.p() || target.s() != 1 {
        return Err(Error::Range(format!(
            "only the prime subfield GF({}) is supported as a target, got {target:?}",
            code.field.p()
        )));
    }
    Ok(())
}

/// `C|GF(p)`: the codewords of `code` whose coordinates all lie in the
/// prime subfield.
///
/// A prime-field vector satisfies a check row over GF(p^l) iff it satisfies
/// each of the `l` coordinate rows of that check in the polynomial basis.
pub fn subfield_subcode(code: &ExtensionCode, target: &FieldSpec) -> Result<LinearCode> {
    check_prime_target(code, target)?;
    let f = &code.field;
    let (p, s) = (f.p(), f.s());
    let mut h = Matrix::zeros(p, 0, code.n);
    for row in code.parity_check() {
        for t in 0..s {
            let place = p.pow(t);
            let digits: Vec<u32> = row.iter().map(|&x| (x / place) % p).collect();
            h.push_row(&digits);
        }
    }
    Ok(LinearCode::from_parity_check(&h))
}

/// `tr(C)`: the GF(p)-span of the coordinatewise traces of all codewords.
///
/// `C` is spanned over GF(p) by `x^t g` for generator rows `g` and
/// `t < l`, and the trace is GF(p)-linear, so those images span `tr(C)`.
pub fn trace_code(code: &ExtensionCode, target: &FieldSpec) -> Result<LinearCode> {
    check_prime_target(code, target)?;
    let f = &code.field;
    let mut g = Matrix::zeros(f.p(), 0, code.n);
    for row in &code.generator {
        for t in 0..f.s() {
            let beta = f.p().pow(t);
            let traced: Result<Vec<u32>> = row.iter().map(|&x| f.trace(f.mul(beta, x), 1)).collect();
            g.push_row(&traced?);
        }
    }
    Ok(LinearCode::from_generator(&g))
}
