//! Numerical verification lab for explicit almost complex structures on
//! spheres: the Calabi-Eckmann complex structure on S^3 x S^3 presented
//! through disc-bundle charts of S^6, and the octonionic almost complex
//! structure on S^6 itself.
//!
//! Everything is built from closed-form chart maps, quaternionic frames and
//! small fixed-size matrix fields. Forward-mode automatic differentiation
//! supplies exact first derivatives, so integrability can be decided by
//! evaluating the Nijenhuis tensor pointwise. The `cli` module drives the
//! whole battery of identity checks and emits a deterministic JSON report.

pub mod acs;
pub mod algebra;
pub mod autodiff;
pub mod charts;
pub mod cli;
pub mod frames;
pub mod homotopy;
pub mod nijenhuis;
pub mod report;
pub mod scalar;
pub mod suite;
