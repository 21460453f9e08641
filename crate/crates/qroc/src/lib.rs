//! ROC-curve analysis of two-hypothesis discrimination.
//!
//! Implements receiver-operation-characteristics geometry for a pair of
//! hypotheses given either as finite probability distributions (classical)
//! or as density operators (quantum): feasible regions, optimal curves,
//! Helstrom measurements, the Bhattacharyya coefficient as a Minkowski arc
//! length, fidelity-observable polylines, and unambiguous discrimination.
//!
//! Start with the runnable examples in `examples/` — one per capability.

pub mod classical;
pub mod elliptic;
pub mod error;
pub mod hermitian;
pub mod hull;
pub mod io;
pub mod quad;
pub mod report;
pub mod quantum;
pub mod similarity;
pub mod svg;
pub mod unambiguous;

pub use error::{Error, Result};
