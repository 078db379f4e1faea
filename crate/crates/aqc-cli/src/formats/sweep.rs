//! Sweep specifications and the probability-range grammar:
//! a comma-separated list (`0.01,0.02`), `lin:a:b:n` or `log:a:b:n`
//! (`n` points, endpoints included).

use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// Largest number of points a range may expand to.
pub const MAX_RANGE_POINTS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum SweepMode {
    /// `p` is the total Pauli error probability `p_x + p_y + p_z`.
    FixedTotal,
    /// `p` is the phase-flip crossover `p_y + p_z`.
    FixedPhase,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    /// Descriptor path.
    pub code: String,
    pub p: Vec<f64>,
    pub a: Vec<f64>,
    pub trials: u64,
    pub seed: u64,
    pub mode: SweepMode,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.p.is_empty() || self.a.is_empty() {
            return Err(CliError::Usage("sweep needs at least one p and one A value".into()));
        }
        if let Some(p) = self.p.iter().find(|p| !(0.0..=1.0).contains(*p)) {
            return Err(CliError::Usage(format!("p = {p} outside [0, 1]")));
        }
        if let Some(a) = self.a.iter().find(|a| !(a.is_finite() && **a >= 0.0)) {
            return Err(CliError::Usage(format!("A = {a} must be finite and nonnegative")));
        }
        if self.trials == 0 {
            return Err(CliError::Usage("trials must be at least 1".into()));
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: SweepSpec = serde_json::from_str(text).map_err(|e| CliError::Format(format!("sweep: {e}")))?;
        spec.validate()?;
        Ok(spec)
    }
}

fn number(t: &str) -> Result<f64> {
    let v: f64 = t.trim().parse().map_err(|_| CliError::Format(format!("bad number {t:?}")))?;
    if !v.is_finite() {
        return Err(CliError::Format(format!("non-finite value {t:?}")));
    }
    Ok(v)
}

/// Expands a value list or range.
pub fn parse_range(spec: &str) -> Result<Vec<f64>> {
    let spec = spec.trim();
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        [kind @ ("lin" | "log"), a, b, n] => {
            let (a, b) = (number(a)?, number(b)?);
            let n: usize = n.trim().parse().map_err(|_| CliError::Format(format!("bad point count {n:?}")))?;
            if n == 0 || n > MAX_RANGE_POINTS {
                return Err(CliError::Format(format!("point count {n} outside [1, {MAX_RANGE_POINTS}]")));
            }
            if *kind == "log" && (a <= 0.0 || b <= 0.0) {
                return Err(CliError::Format("log ranges need positive endpoints".into()));
            }
            let frac = |i: usize| if n == 1 { 0.0 } else { i as f64 / (n - 1) as f64 };
            Ok((0..n)
                .map(|i| match *kind {
                    "lin" => a + (b - a) * frac(i),
                    _ => (a.ln() + (b.ln() - a.ln()) * frac(i)).exp(),
                })
                .collect())
        }
        [_] if !spec.is_empty() => spec.split(',').map(number).collect(),
        _ => Err(CliError::Format(format!("unrecognized range {spec:?}"))),
    }
}
