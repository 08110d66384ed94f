//! Expected statistics of stochastic convex hulls.
//!
//! A [`StochasticDataset`] is a set of points in R^d where every point is
//! present independently with its own probability. The convex hull of the
//! random subset that shows up is a random polytope; this crate estimates
//! the expectation of its diameter, its width and its number of faces:
//!
//! - [`diameter`]: witness-sequence 1.633-approximation in time polynomial in
//!   both `n` and `d`, a simple 2-approximation, and a generator of hard
//!   instances built from graphs.
//! - [`width`]: witness-simplex constant-factor approximation and a Monte
//!   Carlo approximation scheme, for `d` in {2, 3}.
//! - [`complexity`]: exact face probabilities from membership probabilities
//!   and a rotational sweep over hyperplanes.
//! - [`oracle`]: exhaustive enumeration of all `2^n` realizations, used as
//!   ground truth in tests.

pub mod complexity;
pub mod dataset;
pub mod diameter;
mod error;
pub mod geom;
pub mod oracle;
pub mod width;

pub use dataset::{Realization, RngSeed, StochasticDataset};
pub use error::{Error, Result};
pub use geom::Point;
pub use oracle::Statistic;

/// Absolute tolerance for geometric ties and degeneracy predicates.
pub const EPS_GEO: f64 = 1e-9;
