//! Asymmetric CSS quantum codes built from nested classical codes.
//!
//! The crate is layered bottom-up: [`finite_field`] supplies GF(p^s)
//! arithmetic, [`linear_code`] dense linear algebra and weight computations
//! over GF(p), [`code_families`] and [`eg_geometry`] the classical code
//! constructions, [`css_asym`] the CSS combination and family generators,
//! [`lp_bounds`] exact linear-programming feasibility and [`channel_sim`] the
//! asymmetric Pauli channel and the Monte Carlo decoder engine.

pub mod channel_sim;
pub mod code_families;
pub mod css_asym;
pub mod eg_geometry;
mod error;
pub mod finite_field;
pub mod linear_code;
pub mod lp_bounds;

pub use error::{Error, ErrorKind, Result};
