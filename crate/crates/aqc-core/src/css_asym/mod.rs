//! Asymmetric CSS codes `[[n, k, d_x/d_z]]` built from nested classical
//! codes, with the generic construction, the Singleton-type check and the
//! named family generators.
//!
//! Convention: rows of `H_x` (parity check of `C_x`) are Z-type stabilizer
//! generators and detect bit flips; rows of `H_z` are X-type generators and
//! detect phase flips.

mod families;

pub use families::{asym_qldpc_family, bch_family, bch_ldpc_delta0, bch_ldpc_family, rm_family, rm_rate_gain};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linear_code::{
    is_subcode, min_weight, relative_min_weight, DistanceBound, DistanceMethod, LinearCode, Matrix, DEFAULT_BUDGET,
};

/// Whether both distances equal the minimum weights of the constituents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Purity {
    Pure,
    Impure,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SingletonVerdict {
    Satisfied,
    Violated,
    /// At least one distance is only bounded.
    Indeterminate,
}

/// Serializable summary of an [`AsymmetricCSSCode`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CssParameters {
    pub n: usize,
    pub k: usize,
    pub d_x: DistanceBound,
    pub d_z: DistanceBound,
    pub purity: Purity,
}

impl fmt::Display for CssParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d_x == self.d_z {
            write!(f, "[[{}, {}, {}]]", self.n, self.k, self.d_x)
        } else {
            write!(f, "[[{}, {}, {}/{}]]", self.n, self.k, self.d_x, self.d_z)
        }
    }
}

/// An asymmetric CSS code. Invariants: `C_x^perp <= C_z`,
/// `k = k_x + k_z - n`, `H_x H_z^T = 0`, and the row space of `H_x`
/// (`H_z`) is `C_x^perp` (`C_z^perp`).
#[derive(Debug, Clone)]
pub struct AsymmetricCSSCode {
    c_x: LinearCode,
    c_z: LinearCode,
    h_x: Matrix,
    h_z: Matrix,
    d_x: DistanceBound,
    d_z: DistanceBound,
    purity: Purity,
    cx_descriptor: String,
    cz_descriptor: String,
    notes: Vec<String>,
}

impl AsymmetricCSSCode {
    pub fn n(&self) -> usize {
        self.c_x.n()
    }

    pub fn k(&self) -> usize {
        self.c_x.k() + self.c_z.k() - self.n()
    }

    pub fn d_x(&self) -> DistanceBound {
        self.d_x
    }

    pub fn d_z(&self) -> DistanceBound {
        self.d_z
    }

    pub fn purity(&self) -> Purity {
        self.purity
    }

    pub fn c_x(&self) -> &LinearCode {
        &self.c_x
    }

    pub fn c_z(&self) -> &LinearCode {
        &self.c_z
    }

    /// Parity check of `C_x`; possibly with redundant rows.
    pub fn h_x(&self) -> &Matrix {
        &self.h_x
    }

    /// Parity check of `C_z`; possibly with redundant rows.
    pub fn h_z(&self) -> &Matrix {
        &self.h_z
    }

    pub fn cx_descriptor(&self) -> &str {
        &self.cx_descriptor
    }

    pub fn cz_descriptor(&self) -> &str {
        &self.cz_descriptor
    }

    /// Warnings and conventions applied during construction.
    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn parameters(&self) -> CssParameters {
        CssParameters { n: self.n(), k: self.k(), d_x: self.d_x, d_z: self.d_z, purity: self.purity }
    }
}

/// Tuning for [`css_construct_with`].
#[derive(Debug, Clone)]
pub struct CssOptions {
    /// Work budget for each distance search.
    pub budget: u64,
    pub dx_hint: Option<(usize, DistanceMethod)>,
    pub dz_hint: Option<(usize, DistanceMethod)>,
    /// Also bound the constituents' minimum weights to decide purity.
    pub check_purity: bool,
    /// Replacement parity checks; must span `C_x^perp` / `C_z^perp`.
    pub h_x: Option<Matrix>,
    pub h_z: Option<Matrix>,
    pub cx_descriptor: Option<String>,
    pub cz_descriptor: Option<String>,
}

impl Default for CssOptions {
    fn default() -> Self {
        CssOptions {
            budget: DEFAULT_BUDGET,
            dx_hint: None,
            dz_hint: None,
            check_purity: true,
            h_x: None,
            h_z: None,
            cx_descriptor: None,
            cz_descriptor: None,
        }
    }
}

/// CSS combination with default options.
pub fn css_construct(c_x: &LinearCode, c_z: &LinearCode) -> Result<AsymmetricCSSCode> {
    css_construct_with(c_x, c_z, CssOptions::default())
}

fn checked_parity(code: &LinearCode, h: Option<Matrix>, name: &str) -> Result<Matrix> {
    let Some(h) = h else { return Ok(code.parity_check().clone()) };
    if h.cols() != code.n() || h.p() != code.p() {
        return Err(Error::Dimension(format!("{name} has the wrong shape or alphabet")));
    }
    if h.rank() != code.n() - code.k() || !code.generator().mul_transpose(&h)?.is_zero() {
        return Err(Error::Dimension(format!("{name} does not span the dual of its code")));
    }
    Ok(h)
}

fn constituent_purity(
    code: &LinearCode,
    d: &DistanceBound,
    budget: u64,
) -> Result<Purity> {
    let w = min_weight(code, budget, None)?;
    Ok(if w.upper < d.lower {
        Purity::Impure
    } else if d.exact && w.exact {
        if w.lower == d.lower { Purity::Pure } else { Purity::Impure }
    } else {
        Purity::Unknown
    })
}

/// CSS combination of `C_x` and `C_z` with `C_x^perp <= C_z`:
/// `d_x = wt(C_x \ C_z^perp)`, `d_z = wt(C_z \ C_x^perp)`, each exact when
/// the search budget allows and otherwise bounded using the hints.
///
/// When `k = 0` the relative weights are undefined; the minimum weights of
/// `C_x` and `C_z` are reported instead and a note is attached.
pub fn css_construct_with(c_x: &LinearCode, c_z: &LinearCode, mut opts: CssOptions) -> Result<AsymmetricCSSCode> {
    let (h_x, h_z) = validate(c_x, c_z, &mut opts)?;
    let cx_dual = c_x.dual();
    let mut notes = Vec::new();
    let k = c_x.k() + c_z.k() - c_x.n();
    let (d_x, d_z) = if k == 0 {
        notes.push("k = 0: distances are the constituent minimum weights".to_string());
        (min_weight(c_x, opts.budget, opts.dx_hint)?, min_weight(c_z, opts.budget, opts.dz_hint)?)
    } else {
        (
            relative_min_weight(c_x, &c_z.dual(), opts.budget, opts.dx_hint)?,
            relative_min_weight(c_z, &cx_dual, opts.budget, opts.dz_hint)?,
        )
    };
    let purity = if k == 0 {
        Purity::Pure
    } else if opts.check_purity {
        match (constituent_purity(c_x, &d_x, opts.budget)?, constituent_purity(c_z, &d_z, opts.budget)?) {
            (Purity::Pure, Purity::Pure) => Purity::Pure,
            (Purity::Impure, _) | (_, Purity::Impure) => Purity::Impure,
            _ => Purity::Unknown,
        }
    } else {
        Purity::Unknown
    };
    Ok(AsymmetricCSSCode {
        c_x: c_x.clone(),
        c_z: c_z.clone(),
        h_x,
        h_z,
        d_x,
        d_z,
        purity,
        cx_descriptor: opts.cx_descriptor.unwrap_or_else(|| format!("{c_x:?}")),
        cz_descriptor: opts.cz_descriptor.unwrap_or_else(|| format!("{c_z:?}")),
        notes,
    })
}

fn validate(c_x: &LinearCode, c_z: &LinearCode, opts: &mut CssOptions) -> Result<(Matrix, Matrix)> {
    if c_x.n() != c_z.n() || c_x.p() != c_z.p() {
        return Err(Error::Dimension(format!("{c_x:?} and {c_z:?} are incompatible")));
    }
    if !is_subcode(&c_x.dual(), c_z)? {
        return Err(Error::NotSubcode(format!("dual of C_x = {c_x:?} is not contained in C_z = {c_z:?}")));
    }
    Ok((checked_parity(c_x, opts.h_x.take(), "H_x")?, checked_parity(c_z, opts.h_z.take(), "H_z")?))
}

/// Validated construction with distances known in closed form; no search.
pub(crate) fn css_from_known(
    c_x: LinearCode,
    c_z: LinearCode,
    d_x: DistanceBound,
    d_z: DistanceBound,
    purity: Purity,
    mut opts: CssOptions,
) -> Result<AsymmetricCSSCode> {
    let (h_x, h_z) = validate(&c_x, &c_z, &mut opts)?;
    Ok(AsymmetricCSSCode {
        cx_descriptor: opts.cx_descriptor.unwrap_or_else(|| format!("{c_x:?}")),
        cz_descriptor: opts.cz_descriptor.unwrap_or_else(|| format!("{c_z:?}")),
        c_x,
        c_z,
        h_x,
        h_z,
        d_x,
        d_z,
        purity,
        notes: Vec::new(),
    })
}

/// `k <= n - d_x - d_z + 2`, decided only when both distances are exact.
pub fn singleton_check(code: &AsymmetricCSSCode) -> SingletonVerdict {
    match (code.d_x.value(), code.d_z.value()) {
        (Some(dx), Some(dz)) => {
            if code.k() as i64 <= code.n() as i64 - dx as i64 - dz as i64 + 2 {
                SingletonVerdict::Satisfied
            } else {
                SingletonVerdict::Violated
            }
        }
        _ => SingletonVerdict::Indeterminate,
    }
}

/// The same test on bare parameters.
pub fn singleton_holds(n: usize, k: usize, d_x: usize, d_z: usize) -> bool {
    k as i64 <= n as i64 - d_x as i64 - d_z as i64 + 2
}

#[cfg(test)]
mod tests;
