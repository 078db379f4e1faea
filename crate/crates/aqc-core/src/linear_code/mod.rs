//! Dense linear algebra over GF(p), code duality and containment, exact and
//! budgeted distance computation, weight distributions, the binary
//! MacWilliams transform and Krawtchouk polynomials.

mod code;
mod matrix;
mod sparse;
mod weights;

pub use code::{is_subcode, LinearCode};
pub use matrix::{Matrix, RowSpace};
pub use sparse::SparseBinaryMatrix;
pub use weights::{
    krawtchouk, macwilliams, min_weight, relative_min_weight, weight_distribution, DistanceBound,
    DistanceMethod, WeightDistribution, DEFAULT_BUDGET, DEFAULT_DISTRIBUTION_CAP,
};
