use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::decoder::{bitflip_decode, DEFAULT_MAX_ITER};
use super::{analytic_bdd_error, bsc_decomposition, combine_error_rates, AsymmetricPauliChannel};
use crate::css_asym::AsymmetricCSSCode;
use crate::error::{Error, Result};
use crate::linear_code::SparseBinaryMatrix;

/// Two-sided 95% normal quantile.
const Z95: f64 = 1.959_963_984_540_054;

/// Wilson score interval for `k` successes in `n` trials.
pub fn wilson_interval(k: u64, n: u64) -> (f64, f64) {
    if n == 0 {
        return (0.0, 1.0);
    }
    let (k, n) = (k as f64, n as f64);
    let phat = k / n;
    let z2 = Z95 * Z95;
    let denom = 1.0 + z2 / n;
    let centre = (phat + z2 / (2.0 * n)) / denom;
    let half = Z95 * (phat * (1.0 - phat) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    ((centre - half).max(0.0), (centre + half).min(1.0))
}

#[derive(Debug, Clone)]
pub struct SimOptions {
    pub trials: u64,
    pub seed: u64,
    /// Worker threads; `None` uses the global pool. Results do not depend on
    /// this value.
    pub workers: Option<usize>,
    pub max_iter: usize,
}

impl SimOptions {
    pub fn new(trials: u64, seed: u64) -> Self {
        SimOptions { trials, seed, workers: None, max_iter: DEFAULT_MAX_ITER }
    }
}

/// Phase-flip channel estimate. A trial fails when the decoder does not
/// converge or converges to a different error.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZSimResult {
    pub p_phase: f64,
    pub trials: u64,
    pub seed: u64,
    pub block_errors: u64,
    /// Failures where the residual syndrome reached zero.
    pub converged_wrong: u64,
    /// Failures where the decoder stalled, oscillated or ran out of rounds.
    pub diverged: u64,
    /// `iteration_histogram[i]` counts trials that stopped after `i` rounds.
    pub iteration_histogram: Vec<u64>,
}

impl ZSimResult {
    pub fn rate(&self) -> f64 {
        self.block_errors as f64 / self.trials as f64
    }

    pub fn interval(&self) -> (f64, f64) {
        wilson_interval(self.block_errors, self.trials)
    }
}

#[derive(Default)]
struct Tally {
    converged_wrong: u64,
    diverged: u64,
    hist: Vec<u64>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.converged_wrong += other.converged_wrong;
        self.diverged += other.diverged;
        if self.hist.len() < other.hist.len() {
            self.hist.resize(other.hist.len(), 0);
        }
        for (a, b) in self.hist.iter_mut().zip(other.hist) {
            *a += b;
        }
        self
    }
}

/// The error for trial `trial`: i.i.d. Bernoulli(`p`) bits drawn from
/// ChaCha8 keyed by the master seed, on stream `trial`.
pub fn sample_error(n: usize, p: f64, seed: u64, trial: u64) -> Vec<u8> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    (0..n).map(|_| rng.gen_bool(p) as u8).collect()
}

fn run_trials(h: &SparseBinaryMatrix, p: f64, opts: &SimOptions) -> Result<Tally> {
    let trial = |t: u64| -> Result<Tally> {
        let e = sample_error(h.cols(), p, opts.seed, t);
        let out = bitflip_decode(h, &h.syndrome(&e), opts.max_iter)?;
        let mut tally = Tally { hist: vec![0; opts.max_iter + 2], ..Tally::default() };
        tally.hist[out.iterations.min(opts.max_iter + 1)] += 1;
        if !out.converged() {
            tally.diverged = 1;
        } else if out.estimate != e {
            tally.converged_wrong = 1;
        }
        Ok(tally)
    };
    (0..opts.trials)
        .into_par_iter()
        .map(trial)
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))
}

/// Simulates the phase-flip channel on the parity check `h`.
pub fn simulate_z_with_matrix(h: &SparseBinaryMatrix, p_phase: f64, opts: &SimOptions) -> Result<ZSimResult> {
    if !(0.0..=1.0).contains(&p_phase) {
        return Err(Error::Range(format!("p_phase = {p_phase} outside [0, 1]")));
    }
    if opts.trials == 0 {
        return Err(Error::Range("at least one trial is required".into()));
    }
    let tally = match opts.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?
            .install(|| run_trials(h, p_phase, opts))?,
        None => run_trials(h, p_phase, opts)?,
    };
    let mut hist = tally.hist;
    while hist.len() > 1 && hist.last() == Some(&0) {
        hist.pop();
    }
    Ok(ZSimResult {
        p_phase,
        trials: opts.trials,
        seed: opts.seed,
        block_errors: tally.converged_wrong + tally.diverged,
        converged_wrong: tally.converged_wrong,
        diverged: tally.diverged,
        iteration_histogram: hist,
    })
}

fn binary_h_z(code: &AsymmetricCSSCode) -> Result<SparseBinaryMatrix> {
    if code.h_z().p() != 2 {
        return Err(Error::Unsupported("simulation needs a binary code".into()));
    }
    Ok(SparseBinaryMatrix::from_matrix(code.h_z()))
}

/// Simulates phase flips against `H_z` of `code`.
pub fn simulate_z_channel(code: &AsymmetricCSSCode, p_phase: f64, opts: &SimOptions) -> Result<ZSimResult> {
    simulate_z_with_matrix(&binary_h_z(code)?, p_phase, opts)
}

/// One operating point: analytic bit-flip block error from `d_x`, simulated
/// phase-flip block error.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimResult {
    pub channel: AsymmetricPauliChannel,
    pub p_bit: f64,
    pub pe_x: f64,
    pub z: ZSimResult,
}

impl SimResult {
    pub fn pe_z(&self) -> f64 {
        self.z.rate()
    }

    /// Recomputed from `pe_x` and the simulated `pe_z`.
    pub fn pe(&self) -> f64 {
        combine_error_rates(self.pe_x, self.pe_z()).expect("rates lie in [0, 1]")
    }
}

/// Evaluates `channel` on a code given by its phase-check matrix and the
/// bit-flip distance `d_x`.
pub fn simulate_point(
    h_z: &SparseBinaryMatrix,
    d_x: usize,
    channel: &AsymmetricPauliChannel,
    opts: &SimOptions,
) -> Result<SimResult> {
    let bsc = bsc_decomposition(channel);
    let pe_x = analytic_bdd_error(h_z.cols(), d_x, bsc.p_bit.min(1.0))?;
    let z = simulate_z_with_matrix(h_z, bsc.p_phase.min(1.0), opts)?;
    Ok(SimResult { channel: *channel, p_bit: bsc.p_bit, pe_x, z })
}
