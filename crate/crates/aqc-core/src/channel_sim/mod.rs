//! Asymmetric Pauli channel from twirled amplitude and phase damping, its
//! two-BSC decomposition, analytic bounded-distance block error, a
//! hard-decision bit-flipping decoder and the seeded Monte Carlo engine for
//! the phase-flip channel.

mod decoder;
mod simulate;

pub use decoder::{bitflip_decode, DecodeOutcome, DecodeStatus, DEFAULT_MAX_ITER};
pub use simulate::{simulate_point, simulate_z_channel, simulate_z_with_matrix, wilson_interval, SimOptions, SimResult, ZSimResult};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exposure time and relaxation/dephasing times, in common units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TwirlParams {
    pub t: f64,
    pub t1: f64,
    pub t2: f64,
}

impl TwirlParams {
    pub fn new(t: f64, t1: f64, t2: f64) -> Result<Self> {
        if [t, t1, t2].iter().any(|v| !(v.is_finite() && *v > 0.0)) {
            return Err(Error::Range(format!("times must be positive and finite, got t = {t}, T1 = {t1}, T2 = {t2}")));
        }
        Ok(TwirlParams { t, t1, t2 })
    }
}

/// Pauli channel with `p_x = p_y`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsymmetricPauliChannel {
    pub p_x: f64,
    pub p_y: f64,
    pub p_z: f64,
}

impl AsymmetricPauliChannel {
    fn checked(p_x: f64, p_y: f64, p_z: f64) -> Result<Self> {
        let ok = |v: f64| (0.0..=1.0).contains(&v);
        if !(ok(p_x) && ok(p_y) && ok(p_z) && ok(p_x + p_y + p_z)) {
            return Err(Error::InvalidDistribution(format!("p_x = {p_x}, p_y = {p_y}, p_z = {p_z}")));
        }
        Ok(AsymmetricPauliChannel { p_x, p_y, p_z })
    }

    pub fn total(&self) -> f64 {
        self.p_x + self.p_y + self.p_z
    }

    /// `A = p_z / p_x`; `None` when `p_x = 0`.
    pub fn asymmetry(&self) -> Option<f64> {
        (self.p_x > 0.0).then(|| self.p_z / self.p_x)
    }
}

/// `p_x = p_y = (1 - e^(-t/T1))/4`, `p_z = 1/2 - p_x - e^(-t/T2)/2`.
pub fn twirl_probabilities(params: &TwirlParams) -> Result<AsymmetricPauliChannel> {
    let TwirlParams { t, t1, t2 } = TwirlParams::new(params.t, params.t1, params.t2)?;
    let p_x = -(-t / t1).exp_m1() / 4.0;
    let p_z = -(-t / t2).exp_m1() / 2.0 + (-t / t1).exp_m1() / 4.0;
    AsymmetricPauliChannel::checked(p_x, p_x, p_z)
}

/// `A = 1 + 2(1 - e^(x(1 - T1/T2))) / (e^x - 1)` with `x = t/T1`.
pub fn asymmetry_closed_form(params: &TwirlParams) -> f64 {
    let x = params.t / params.t1;
    1.0 - 2.0 * (x * (1.0 - params.t1 / params.t2)).exp_m1() / x.exp_m1()
}

/// Leading-order asymmetry for small `t`: `2 T1/T2 - 1`.
pub fn small_t_asymmetry(t1: f64, t2: f64) -> f64 {
    2.0 * t1 / t2 - 1.0
}

/// `p_x = p_y = p/(A+2)`, `p_z = pA/(A+2)`.
pub fn channel_from_total(p: f64, a: f64) -> Result<AsymmetricPauliChannel> {
    if !(0.0..=1.0).contains(&p) || !(a.is_finite() && a >= 0.0) {
        return Err(Error::Range(format!("need 0 <= p <= 1 and finite A >= 0, got p = {p}, A = {a}")));
    }
    let p_x = p / (a + 2.0);
    AsymmetricPauliChannel::checked(p_x, p_x, p - 2.0 * p_x)
}

/// The channel whose phase-flip BSC has crossover `p_phase`:
/// `p_x = p_y = p_phase/(A+1)`.
pub fn channel_from_phase(p_phase: f64, a: f64) -> Result<AsymmetricPauliChannel> {
    if !(0.0..=1.0).contains(&p_phase) || !(a.is_finite() && a >= 0.0) {
        return Err(Error::Range(format!("need 0 <= p_phase <= 1 and finite A >= 0, got {p_phase}, A = {a}")));
    }
    let p_x = p_phase / (a + 1.0);
    AsymmetricPauliChannel::checked(p_x, p_x, p_phase - p_x)
}

/// Crossover probabilities of the independent bit-flip and phase-flip BSCs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BscPair {
    pub p_bit: f64,
    pub p_phase: f64,
}

pub fn bsc_decomposition(channel: &AsymmetricPauliChannel) -> BscPair {
    BscPair { p_bit: channel.p_x + channel.p_y, p_phase: channel.p_y + channel.p_z }
}

/// Block error of a bounded-distance decoder correcting
/// `floor((d-1)/2)` errors on a BSC(p): the binomial upper tail, summed in
/// log space.
pub fn analytic_bdd_error(n: usize, d: usize, p: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Range(format!("p = {p} outside [0, 1]")));
    }
    if d < 1 || d > n {
        return Err(Error::Range(format!("d = {d} outside [1, {n}]")));
    }
    let t = (d - 1) / 2;
    if p == 0.0 {
        return Ok(0.0);
    }
    if p == 1.0 {
        return Ok(1.0);
    }
    let (lp, lq) = (p.ln(), (-p).ln_1p());
    let mut ln_binom = 0.0;
    let mut terms = Vec::with_capacity(n - t);
    for j in 0..=n {
        if j > t {
            terms.push(ln_binom + j as f64 * lp + (n - j) as f64 * lq);
        }
        if j < n {
            ln_binom += ((n - j) as f64).ln() - ((j + 1) as f64).ln();
        }
    }
    let max = terms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let sum: f64 = terms.iter().map(|&l| (l - max).exp()).sum();
    Ok((max + sum.ln()).exp().clamp(0.0, 1.0))
}

/// `P_e = 1 - (1 - P_e^x)(1 - P_e^z)`.
pub fn combine_error_rates(pe_x: f64, pe_z: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&pe_x) || !(0.0..=1.0).contains(&pe_z) {
        return Err(Error::Range(format!("rates {pe_x}, {pe_z} outside [0, 1]")));
    }
    Ok(1.0 - (1.0 - pe_x) * (1.0 - pe_z))
}
