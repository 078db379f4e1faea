use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linear_code::SparseBinaryMatrix;

pub const DEFAULT_MAX_ITER: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecodeStatus {
    /// Residual syndrome is zero.
    Converged,
    /// No bit has more than half of its checks unsatisfied.
    Stuck,
    /// The estimate revisited an earlier state.
    Oscillating,
    MaxIterations,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeOutcome {
    pub estimate: Vec<u8>,
    pub status: DecodeStatus,
    /// Flip rounds performed.
    pub iterations: usize,
}

impl DecodeOutcome {
    pub fn converged(&self) -> bool {
        self.status == DecodeStatus::Converged
    }
}

/// Hard-decision bit flipping from the all-zero estimate against a target
/// syndrome. Each round flips every bit whose unsatisfied-check count is
/// maximal among bits with more than half of their checks unsatisfied.
pub fn bitflip_decode(h: &SparseBinaryMatrix, syndrome: &[u8], max_iter: usize) -> Result<DecodeOutcome> {
    if syndrome.len() != h.rows() {
        return Err(Error::Dimension(format!("syndrome has length {}, H has {} rows", syndrome.len(), h.rows())));
    }
    let n = h.cols();
    let mut estimate = vec![0u8; n];
    let mut residual: Vec<u8> = syndrome.iter().map(|&b| b & 1).collect();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut unsat = vec![0usize; n];
    for iterations in 0.. {
        if residual.iter().all(|&b| b == 0) {
            return Ok(DecodeOutcome { estimate, status: DecodeStatus::Converged, iterations });
        }
        if iterations == max_iter {
            return Ok(DecodeOutcome { estimate, status: DecodeStatus::MaxIterations, iterations });
        }
        let mut best = 0;
        for (v, u) in unsat.iter_mut().enumerate() {
            let col = h.col(v);
            *u = col.iter().filter(|&&c| residual[c as usize] == 1).count();
            if 2 * *u > col.len() && *u > best {
                best = *u;
            }
        }
        if best == 0 {
            return Ok(DecodeOutcome { estimate, status: DecodeStatus::Stuck, iterations });
        }
        seen.insert(estimate.clone());
        for v in 0..n {
            if unsat[v] == best && 2 * best > h.col(v).len() {
                estimate[v] ^= 1;
                for &c in h.col(v) {
                    residual[c as usize] ^= 1;
                }
            }
        }
        if seen.contains(&estimate) {
            return Ok(DecodeOutcome { estimate, status: DecodeStatus::Oscillating, iterations: iterations + 1 });
        }
    }
    unreachable!()
}
