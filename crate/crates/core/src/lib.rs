//! Dynamical systems over complete weighted lattices.
//!
//! Scalars live in a clodum — a bounded chain with dual "additions" (∨, ∧)
//! and dual "multiplications" (⋆, ⋆′) that distribute over them. Vectors,
//! matrices and discrete-time signals over a clodum support max-⋆ and
//! min-⋆′ products, adjoint (residuated) operators, equation solving by
//! lattice projection, spectral analysis via maximum cycle means, and
//! state-space simulation of max-⋆ / min-⋆′ systems. Application layers
//! cover recursive max/min-sum filters, chamfer distance transforms,
//! Viterbi decoding with control inputs, and fuzzy Markov chains.

pub mod apps;
pub mod clodum;
pub mod control;
pub mod error;
pub mod linalg;
pub mod signal;
pub mod solve;
pub mod spectral;
pub mod system;

pub use clodum::{Clodum, Scalar, DEFAULT_TOLERANCE};
pub use error::{Error, Result};
pub use linalg::{Matrix, Vector};
pub use solve::{solve_max, solve_min, SolveReport};
pub use spectral::SpectralReport;
pub use system::{Mode, System, Trajectory};
