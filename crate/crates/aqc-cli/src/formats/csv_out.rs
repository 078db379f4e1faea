//! Result CSV: `#` comment lines carrying the tool version, seed and sweep,
//! then a header row and one row per sweep point.

use aqc_core::channel_sim::SimResult;

use super::sweep::{SweepMode, SweepSpec};
use super::TOOL_VERSION;

pub const CSV_HEADER: [&str; 11] =
    ["p", "A", "p_bit", "p_phase", "Pe_x", "Pe_z", "Pe_z_ci_lo", "Pe_z_ci_hi", "Pe", "trials", "seed"];

/// One row: the swept `p`, `A`, and the point's estimates.
pub struct CsvRow<'a> {
    pub p: f64,
    pub a: f64,
    pub result: &'a SimResult,
}

pub fn render_csv(spec: &SweepSpec, parameters: &str, rows: &[CsvRow<'_>]) -> String {
    let mode = match spec.mode {
        SweepMode::FixedTotal => "fixed-total",
        SweepMode::FixedPhase => "fixed-phase",
    };
    let mut out = String::new();
    out.push_str(&format!("# aqc {TOOL_VERSION}\n"));
    out.push_str(&format!("# code: {} {parameters}\n", spec.code));
    out.push_str(&format!("# mode: {mode}; p is the {}\n", match spec.mode {
        SweepMode::FixedTotal => "total Pauli error probability",
        SweepMode::FixedPhase => "phase-flip crossover probability",
    }));
    out.push_str(&format!("# trials: {}; seed: {}\n", spec.trials, spec.seed));
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for row in rows {
        let r = row.result;
        let (lo, hi) = r.z.interval();
        let fields = [
            row.p.to_string(),
            row.a.to_string(),
            r.p_bit.to_string(),
            r.z.p_phase.to_string(),
            r.pe_x.to_string(),
            r.pe_z().to_string(),
            lo.to_string(),
            hi.to_string(),
            r.pe().to_string(),
            r.z.trials.to_string(),
            r.z.seed.to_string(),
        ];
        w.write_record(&fields).expect("in-memory write");
    }
    out.push_str(&String::from_utf8(w.into_inner().expect("flush")).expect("utf-8"));
    out
}
