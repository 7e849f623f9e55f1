//! Special functions, oscillatory and singular quadrature, executable
//! summation formulas (Poisson, Abel–Plana, Euler–Maclaurin limits) and a
//! catalog of series and integral identities checked numerically.

// `!(x > 0.0)` style tests are used on purpose: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
mod extrapolate;
pub mod identity_catalog;
pub mod quadrature;
pub mod special_functions;
pub mod summation_engines;

pub use error::{NumError, Result};
pub use identity_catalog::{IdentityRecord, IdentityStatus, VerificationResult};
pub use quadrature::{OscillatoryKernel, QuadResult};
pub use special_functions::Approximation;
pub use summation_engines::{EngineReport, LimitLadder, LimitModel};
