//! Exact algebra for deciding when a point can sit at rational distance
//! from every vertex of a regular polygon with unit side.
//!
//! The modules build on each other: [`algebra`] supplies rationals,
//! polynomials and a quartic Galois classifier; [`cyclotomic`] does exact
//! arithmetic in `ℚ(ζ_m)` and computes Galois stabilizers; [`flatness`]
//! decides whether `ℚ(cot(π/n))` is flat; [`sqrt_sums`] handles sums of
//! square roots; [`geometry`] works with unit polygons. [`cli`] wraps all
//! of them into certificate-producing commands.

pub mod algebra;
pub mod certificate;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod flatness;
pub mod geometry;
pub mod sqrt_sums;

pub use certificate::{Certificate, Verdict};
pub use error::{Error, Result};
