//! Fractional repetition (FR) codes for distributed storage.
//!
//! An FR code replicates `theta` coded packets over `n` storage nodes so that
//! a failed node can be rebuilt by plain copying from surviving replicas.
//! This crate models such codes ([`FrCode`]), computes their dimension,
//! reconstruction and surviving sets and code rates ([`analysis`]), checks
//! the known rate and dimension bounds ([`bounds`]), builds new codes
//! ([`construct`]) and replays failure schedules ([`sim`]).
//!
//! The enumeration kernels run on rayon when the default `parallel` feature is
//! enabled; results are identical with the feature off.

pub mod analysis;
mod bitset;
pub mod bounds;
pub mod code;
pub mod construct;
mod error;
pub mod fixtures;
pub mod format;
pub mod gen;
pub mod par;
pub mod rate;
pub mod sim;

pub use code::{CodeParams, FrCode, NpdiMatrix};
pub use error::{Error, Result};
pub use par::Strategy;
pub use rate::Rate;
