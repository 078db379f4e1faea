//! JSON code descriptors: family parameters, computed parameters with
//! distance provenance, and references to the matrix files.

use aqc_core::css_asym::{
    asym_qldpc_family, bch_family, bch_ldpc_family, rm_family, rm_rate_gain, AsymmetricCSSCode, CssParameters,
};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Family tag and the parameters needed to rebuild the code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilyParams {
    Rm { r1: usize, r2: usize, m: usize },
    RmGain { r: usize, delta_r: usize, m: usize },
    Bch { delta1: usize, delta2: usize, m: usize },
    EgBch { m: usize, mu: usize, s: u32, p: u32, delta: usize },
    EgPair { m: usize, mu_x: usize, mu_z: usize, s: u32, p: u32 },
    /// Matrices supplied externally; nothing to rebuild.
    Custom,
}

impl FamilyParams {
    pub fn build(&self) -> Result<AsymmetricCSSCode> {
        Ok(match *self {
            FamilyParams::Rm { r1, r2, m } => rm_family(r1, r2, m)?,
            FamilyParams::RmGain { r, delta_r, m } => rm_rate_gain(r, delta_r, m)?,
            FamilyParams::Bch { delta1, delta2, m } => bch_family(delta1, delta2, m)?,
            FamilyParams::EgBch { m, mu, s, p, delta } => bch_ldpc_family(m, mu, s, p, delta)?,
            FamilyParams::EgPair { m, mu_x, mu_z, s, p } => asym_qldpc_family(m, mu_x, mu_z, s, p)?,
            FamilyParams::Custom => {
                return Err(CliError::Usage("custom descriptors cannot be rebuilt from parameters".into()))
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub tool_version: String,
    #[serde(flatten)]
    pub family: FamilyParams,
    pub parameters: CssParameters,
    pub c_x: String,
    pub c_z: String,
    #[serde(default)]
    pub notes: Vec<String>,
    /// Matrix files, relative to the descriptor's directory.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hx_file: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hz_file: Option<String>,
}

impl CodeDescriptor {
    pub fn new(family: FamilyParams, code: &AsymmetricCSSCode) -> Self {
        CodeDescriptor {
            tool_version: TOOL_VERSION.to_string(),
            family,
            parameters: code.parameters(),
            c_x: code.cx_descriptor().to_string(),
            c_z: code.cz_descriptor().to_string(),
            notes: code.notes().to_vec(),
            hx_file: None,
            hz_file: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("descriptor serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Format(format!("descriptor: {e}")))
    }

    /// Rebuilds from the family parameters and checks the stored parameters
    /// are reproduced exactly.
    pub fn verify(&self) -> Result<AsymmetricCSSCode> {
        let code = self.family.build()?;
        if code.parameters() != self.parameters {
            return Err(CliError::Format(format!(
                "descriptor parameters {} do not match the rebuilt code {}",
                self.parameters,
                code.parameters()
            )));
        }
        Ok(code)
    }
}
