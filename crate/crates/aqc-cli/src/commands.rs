use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use aqc_core::channel_sim::{
    asymmetry_closed_form, channel_from_phase, channel_from_total, simulate_point, small_t_asymmetry,
    twirl_probabilities, SimOptions, SimResult, TwirlParams, DEFAULT_MAX_ITER,
};
use aqc_core::css_asym::AsymmetricCSSCode;
use aqc_core::linear_code::SparseBinaryMatrix;
use aqc_core::lp_bounds::lp_feasible;
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::formats::{
    parse_range, read_alist, render_csv, write_alist, CodeDescriptor, CsvRow, FamilyParams, SweepMode, SweepSpec,
    TOOL_VERSION,
};

#[derive(Debug, Parser)]
#[command(name = "aqc", version, about = "Asymmetric quantum CSS codes: construction, LP bounds and simulation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a code family member and print [[n, k, d_x/d_z]].
    Construct {
        #[command(subcommand)]
        family: FamilyCmd,
    },
    /// LP feasibility of [[n, k, d_x/d_z]] as JSON.
    LpCheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        dx: usize,
        #[arg(long)]
        dz: usize,
    },
    /// Pauli probabilities of twirled amplitude and phase damping.
    Twirl {
        #[arg(long)]
        t: f64,
        #[arg(long)]
        t1: f64,
        #[arg(long)]
        t2: f64,
    },
    /// Monte Carlo sweep over (p, A); writes CSV.
    Simulate(SimulateArgs),
    /// Rebuild a descriptor's code and write H_x, H_z as alist.
    ExportAlist {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct OutArgs {
    /// Directory for code.json, hx.alist and hz.alist.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum FamilyCmd {
    /// C_x = RM(r2, m), C_z = RM(m-1-r1, m).
    Rm {
        #[arg(long)]
        r1: usize,
        #[arg(long)]
        r2: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Symmetric RM code of order m-1-r with C_x raised by delta-r orders.
    RmGain {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        delta_r: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// C_x = BCH(delta1), C_z = BCH(delta2)^perp at n = 2^m - 1.
    Bch {
        #[arg(long)]
        delta1: usize,
        #[arg(long)]
        delta2: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// C_x = BCH(delta), C_z = cyclic EG code of mu-flats in EG(m, p^s).
    EgBch {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        mu: usize,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        delta: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Type-I EG codes of mu_x- and mu_z-flats on all points.
    EgPair {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        mu_x: usize,
        #[arg(long)]
        mu_z: usize,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        p: u32,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// Sweep specification (JSON); replaces --code, --p, --a, --trials,
    /// --seed and --mode.
    #[arg(long)]
    pub sweep: Option<PathBuf>,
    /// Code descriptor written by `construct --out`.
    #[arg(long, required_unless_present = "sweep")]
    pub code: Option<PathBuf>,
    /// Phase-check matrix overriding the descriptor's.
    #[arg(long)]
    pub hz: Option<PathBuf>,
    /// Values: `0.01,0.02`, `lin:a:b:n` or `log:a:b:n`.
    #[arg(long, required_unless_present = "sweep")]
    pub p: Option<String>,
    /// Channel asymmetries, same grammar as --p.
    #[arg(long, default_value = "1")]
    pub a: String,
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    #[arg(long, env = "AQC_SEED", default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = SweepMode::FixedTotal)]
    pub mode: SweepMode,
    /// Worker threads; results do not depend on it.
    #[arg(long)]
    pub workers: Option<usize>,
    /// CSV path; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

fn binary_sparse(h: &aqc_core::linear_code::Matrix) -> Option<SparseBinaryMatrix> {
    h.is_binary().then(|| SparseBinaryMatrix::from_matrix(h))
}

/// Writes `hx.alist` and `hz.alist` for binary codes and records them in the
/// descriptor.
fn write_matrices(dir: &Path, code: &AsymmetricCSSCode, desc: &mut CodeDescriptor) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    if let (Some(hx), Some(hz)) = (binary_sparse(code.h_x()), binary_sparse(code.h_z())) {
        write(&dir.join("hx.alist"), &write_alist(&hx))?;
        write(&dir.join("hz.alist"), &write_alist(&hz))?;
        desc.hx_file = Some("hx.alist".into());
        desc.hz_file = Some("hz.alist".into());
    }
    Ok(())
}

fn describe(code: &AsymmetricCSSCode, out: &mut dyn Write) -> std::io::Result<()> {
    let p = code.parameters();
    writeln!(out, "{p}")?;
    writeln!(out, "C_x: {}", code.cx_descriptor())?;
    writeln!(out, "C_z: {}", code.cz_descriptor())?;
    writeln!(out, "d_x: {} ({})", p.d_x, serde_json::to_value(p.d_x.method).unwrap().as_str().unwrap_or(""))?;
    writeln!(out, "d_z: {} ({})", p.d_z, serde_json::to_value(p.d_z.method).unwrap().as_str().unwrap_or(""))?;
    writeln!(out, "purity: {}", serde_json::to_value(p.purity).unwrap().as_str().unwrap_or(""))?;
    for note in code.notes() {
        writeln!(out, "note: {note}")?;
    }
    Ok(())
}

fn construct(family: FamilyCmd, out: &mut dyn Write) -> Result<()> {
    let (params, dir) = match family {
        FamilyCmd::Rm { r1, r2, m, out } => (FamilyParams::Rm { r1, r2, m }, out.out),
        FamilyCmd::RmGain { r, delta_r, m, out } => (FamilyParams::RmGain { r, delta_r, m }, out.out),
        FamilyCmd::Bch { delta1, delta2, m, out } => (FamilyParams::Bch { delta1, delta2, m }, out.out),
        FamilyCmd::EgBch { m, mu, s, p, delta, out } => (FamilyParams::EgBch { m, mu, s, p, delta }, out.out),
        FamilyCmd::EgPair { m, mu_x, mu_z, s, p, out } => (FamilyParams::EgPair { m, mu_x, mu_z, s, p }, out.out),
    };
    let code = params.build()?;
    let mut desc = CodeDescriptor::new(params, &code);
    if let Some(dir) = dir {
        write_matrices(&dir, &code, &mut desc)?;
        write(&dir.join("code.json"), &desc.to_json())?;
    }
    describe(&code, out).map_err(|e| CliError::io("<stdout>", e))
}

#[derive(Serialize)]
struct LpOutput<'a> {
    tool_version: &'a str,
    report: aqc_core::lp_bounds::FeasibilityReport,
}

/// Loads the phase-check matrix and `d_x` lower bound for a descriptor.
fn load_code(path: &Path, hz_override: Option<&Path>) -> Result<(CodeDescriptor, SparseBinaryMatrix)> {
    let desc = CodeDescriptor::from_json(&read(path)?)?;
    let base = path.parent().unwrap_or(Path::new("."));
    let hz_path = hz_override.map(Path::to_path_buf).or_else(|| desc.hz_file.as_ref().map(|f| base.join(f)));
    let h = match hz_path {
        Some(p) => read_alist(&read(&p)?)?,
        None => binary_sparse(desc.verify()?.h_z())
            .ok_or_else(|| CliError::Usage("simulation needs a binary code".into()))?,
    };
    if h.cols() != desc.parameters.n {
        return Err(CliError::Format(format!(
            "H_z has {} columns but the code has length {}",
            h.cols(),
            desc.parameters.n
        )));
    }
    Ok((desc, h))
}

/// Runs every `(p, A)` point of `spec` in specification order.
pub fn run_sweep(spec: &SweepSpec, h_z: &SparseBinaryMatrix, d_x: usize, workers: Option<usize>) -> Result<Vec<(f64, f64, SimResult)>> {
    spec.validate()?;
    let points: Vec<(f64, f64)> = spec.p.iter().flat_map(|&p| spec.a.iter().map(move |&a| (p, a))).collect();
    let opts = SimOptions { trials: spec.trials, seed: spec.seed, workers, max_iter: DEFAULT_MAX_ITER };
    points
        .par_iter()
        .map(|&(p, a)| {
            let channel = match spec.mode {
                SweepMode::FixedTotal => channel_from_total(p, a)?,
                SweepMode::FixedPhase => channel_from_phase(p, a)?,
            };
            Ok((p, a, simulate_point(h_z, d_x, &channel, &opts)?))
        })
        .collect()
}

fn simulate(args: SimulateArgs, out: &mut dyn Write) -> Result<()> {
    let spec = match &args.sweep {
        Some(path) => SweepSpec::from_json(&read(path)?)?,
        None => SweepSpec {
            code: args.code.as_ref().map(|p| p.display().to_string()).unwrap_or_default(),
            p: parse_range(args.p.as_deref().unwrap_or_default())?,
            a: parse_range(&args.a)?,
            trials: args.trials,
            seed: args.seed,
            mode: args.mode,
        },
    };
    spec.validate()?;
    let (desc, h_z) = load_code(Path::new(&spec.code), args.hz.as_deref())?;
    let results = run_sweep(&spec, &h_z, desc.parameters.d_x.lower, args.workers)?;
    let rows: Vec<CsvRow<'_>> = results.iter().map(|(p, a, r)| CsvRow { p: *p, a: *a, result: r }).collect();
    let text = render_csv(&spec, &desc.parameters.to_string(), &rows);
    match &args.out {
        Some(path) => write(path, &text),
        None => out.write_all(text.as_bytes()).map_err(|e| CliError::io("<stdout>", e)),
    }
}

/// Executes a parsed command, writing its report to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<()> {
    let io = |e| CliError::io("<stdout>", e);
    match cli.command {
        Command::Construct { family } => construct(family, out),
        Command::LpCheck { n, k, dx, dz } => {
            let report = lp_feasible(n, k, dx, dz)?;
            let json = serde_json::to_string_pretty(&LpOutput { tool_version: TOOL_VERSION, report })
                .expect("report serializes");
            writeln!(out, "{json}").map_err(io)
        }
        Command::Twirl { t, t1, t2 } => {
            let params = TwirlParams::new(t, t1, t2)?;
            let ch = twirl_probabilities(&params)?;
            writeln!(out, "p_x = {}", ch.p_x).map_err(io)?;
            writeln!(out, "p_y = {}", ch.p_y).map_err(io)?;
            writeln!(out, "p_z = {}", ch.p_z).map_err(io)?;
            match ch.asymmetry() {
                Some(a) => writeln!(out, "A = {a}").map_err(io)?,
                None => writeln!(out, "A = undefined").map_err(io)?,
            }
            writeln!(out, "A (closed form) = {}", asymmetry_closed_form(&params)).map_err(io)?;
            writeln!(out, "A (small t) = {}", small_t_asymmetry(t1, t2)).map_err(io)
        }
        Command::Simulate(args) => simulate(args, out),
        Command::ExportAlist { code, out: dir } => {
            let mut desc = CodeDescriptor::from_json(&read(&code)?)?;
            let built = desc.verify()?;
            write_matrices(&dir, &built, &mut desc)?;
            if desc.hz_file.is_none() {
                return Err(CliError::Usage("alist export needs a binary code".into()));
            }
            writeln!(out, "wrote {}", dir.display()).map_err(io)
        }
    }
}
