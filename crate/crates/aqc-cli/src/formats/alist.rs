//! The alist sparse-matrix format: `n m`, maximum column and row weights,
//! the column weights, the row weights, then 1-indexed column and row
//! adjacency lists zero-padded to the maximum weight.

use std::fmt::Write as _;

use aqc_core::linear_code::SparseBinaryMatrix;

use crate::error::{CliError, Result};

/// Largest dimension accepted when reading.
pub const MAX_ALIST_DIM: usize = 1 << 22;
/// Largest number of nonzero entries accepted when reading.
pub const MAX_ALIST_ENTRIES: usize = 1 << 26;

pub fn write_alist(h: &SparseBinaryMatrix) -> String {
    let (n, m) = (h.cols(), h.rows());
    let cw = h.column_weights();
    let rw = h.row_weights();
    let max_c = cw.iter().copied().max().unwrap_or(0);
    let max_r = rw.iter().copied().max().unwrap_or(0);
    let mut out = String::new();
    let join = |v: &mut dyn Iterator<Item = usize>| v.map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let _ = writeln!(out, "{n} {m}");
    let _ = writeln!(out, "{max_c} {max_r}");
    let _ = writeln!(out, "{}", join(&mut cw.iter().copied()));
    let _ = writeln!(out, "{}", join(&mut rw.iter().copied()));
    for c in 0..n {
        let entries = h.col(c).iter().map(|&r| r as usize + 1).chain(std::iter::repeat(0));
        let _ = writeln!(out, "{}", join(&mut entries.take(max_c)));
    }
    for r in 0..m {
        let entries = h.row(r).iter().map(|&c| c as usize + 1).chain(std::iter::repeat(0));
        let _ = writeln!(out, "{}", join(&mut entries.take(max_r)));
    }
    out
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Format(format!("alist: {}", msg.into()))
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    /// Next non-blank line as numbers.
    fn numbers(&mut self, what: &str) -> Result<(usize, Vec<usize>)> {
        for (no, line) in self.inner.by_ref() {
            if line.trim().is_empty() {
                continue;
            }
            let nums = line
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| bad(format!("line {}: bad number {t:?}", no + 1))))
                .collect::<Result<Vec<_>>>()?;
            return Ok((no + 1, nums));
        }
        Err(bad(format!("unexpected end of input reading {what}")))
    }

    fn exactly(&mut self, what: &str, len: usize) -> Result<Vec<usize>> {
        let (no, v) = self.numbers(what)?;
        if v.len() != len {
            return Err(bad(format!("line {no}: {what} has {} entries, expected {len}", v.len())));
        }
        Ok(v)
    }
}

/// Reads one adjacency line: `weight` indices in `1..=bound`, then zeros.
fn adjacency(lines: &mut Lines<'_>, what: &str, weight: usize, bound: usize) -> Result<Vec<u32>> {
    let (no, v) = lines.numbers(what)?;
    let (head, tail) = v.split_at(weight.min(v.len()));
    if head.len() < weight || tail.iter().any(|&x| x != 0) {
        return Err(bad(format!("line {no}: {what} does not list exactly {weight} entries")));
    }
    head.iter()
        .map(|&x| {
            if x == 0 || x > bound {
                Err(bad(format!("line {no}: index {x} outside [1, {bound}]")))
            } else {
                Ok(x as u32 - 1)
            }
        })
        .collect()
}

/// Parses an alist matrix, checking the two adjacency views agree and that
/// no column is empty.
pub fn read_alist(text: &str) -> Result<SparseBinaryMatrix> {
    let mut lines = Lines { inner: text.lines().enumerate() };
    let dims = lines.exactly("dimensions", 2)?;
    let (n, m) = (dims[0], dims[1]);
    if n == 0 || n > MAX_ALIST_DIM || m > MAX_ALIST_DIM {
        return Err(bad(format!("dimensions {n} x {m} outside the supported range")));
    }
    let maxes = lines.exactly("maximum weights", 2)?;
    let cw = lines.exactly("column weights", n)?;
    let rw = lines.exactly("row weights", m)?;
    if cw.iter().copied().max().unwrap_or(0) != maxes[0] || rw.iter().copied().max().unwrap_or(0) != maxes[1] {
        return Err(bad("maximum weights disagree with the weight lists"));
    }
    if let Some(c) = cw.iter().position(|&w| w == 0) {
        return Err(bad(format!("column {} has weight 0", c + 1)));
    }
    let total: usize = cw.iter().sum();
    if total > MAX_ALIST_ENTRIES || total != rw.iter().sum::<usize>() || maxes[0] > m || maxes[1] > n {
        return Err(bad("weight lists are inconsistent or too large"));
    }
    let mut cols = Vec::with_capacity(n);
    for &w in &cw {
        cols.push(adjacency(&mut lines, "column list", w, m)?);
    }
    let mut rows = Vec::with_capacity(m);
    for &w in &rw {
        rows.push(adjacency(&mut lines, "row list", w, n)?);
    }
    if let Ok((no, _)) = lines.numbers("trailing data") {
        return Err(bad(format!("line {no}: unexpected trailing data")));
    }
    let h = SparseBinaryMatrix::from_row_adjacency(n, rows).map_err(|e| bad(e.to_string()))?;
    for (c, listed) in cols.iter_mut().enumerate() {
        listed.sort_unstable();
        if h.col(c) != listed.as_slice() {
            return Err(bad(format!("column {} disagrees with the row lists", c + 1)));
        }
    }
    Ok(h)
}
