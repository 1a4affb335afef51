//! Exact-arithmetic toolkit for the joint (eoc, pom) distribution on strictly
//! ordered binary trees.
//!
//! The crate has four layers:
//!
//! * [`poupard`]: the one-dimensional Poupard triangle, tangent numbers and the
//!   Poupard-matrix predicate.
//! * [`delta`]: the `(2n)x(2n)` Delta-sequence matrices built from partial
//!   difference equations by a generic propagation solver, behind a registry
//!   of interchangeable [`delta::BuildStrategy`] implementations.
//! * [`trees`]: streaming enumeration of strictly ordered binary trees, the
//!   eoc/pom statistics, the relabelling bijection and structural censuses.
//! * [`series`]: scalars in Q(sqrt 2), truncated trivariate power series and
//!   the trigonometric generating-function identities.
//!
//! [`verify`] ties these together into named checks that produce a
//! [`report::VerifyReport`].

pub mod delta;
pub mod error;
pub mod golden;
pub mod grid;
pub mod poupard;
pub mod report;
pub mod series;
pub mod trees;
pub mod verify;

pub use error::{Error, Result};
