//! Application layers built on the core algebra: recursive max/min-sum
//! filters, chamfer distance transforms, Viterbi decoding with control
//! inputs, and fuzzy Markov chains.

pub mod distance;
pub mod filter;
pub mod fmc;
pub mod viterbi;

pub use distance::{distance_transform, GridField};
pub use filter::{filter_stability, FilterSpec, FilterStability};
pub use fmc::{fmc_analyze, FmcReport, FmcSpec};
pub use viterbi::{viterbi, HmmSpec, SaliencySystem, ViterbiResult};
