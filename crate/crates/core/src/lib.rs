//! Exact diagonal reduction of matrices over Bézout domains.
//!
//! The crate reduces a matrix `A` to `D = P·A·Q` with `D` diagonal and each
//! diagonal entry dividing the next, tracking `P`, `Q` and their inverses
//! through an explicit transcript of elementary operations. It also
//! certifies element-level ring conditions (stable range one, adequate and
//! PM splits, feckly clean decompositions) on concrete instances.

pub mod batch;
pub mod conditions;
pub mod diagonal;
pub mod error;
pub mod hermite;
pub mod matrices;
pub mod rings;
pub mod verify;

pub use error::{Error, Result};
