//! Expected width in the plane and in space.
//!
//! The witness simplex of a full-dimensional point set is built greedily:
//! start from the `≺`-largest point and repeatedly add the point farthest
//! from the flat through the points chosen so far. Its width is within a
//! constant factor `c₁ = 5^{-(d-1)} / 2` of the width of the set, which gives
//! a deterministic constant-factor estimator; sampling the points that do not
//! affect the witness simplex turns it into an FPRAS.

mod expected;
mod fpras;
mod simplex;

pub use expected::expected_width_witness;
pub use fpras::{expected_width_fpras, fpras_sample_count, FprasConfig};
pub use simplex::{recover_vertex_list, simplex_width, witness_simplex, witness_simplex_prob, WitnessSimplex};

use crate::error::{Error, Result};

/// `c₁ = (1/2)·5^{-(d-1)}`: the witness simplex of a set `P` satisfies
/// `c₁·wid(P) ≤ wid(Δ_P) ≤ wid(P)`.
pub fn width_constant(dim: usize) -> f64 {
    0.5 * 5f64.powi(-(dim as i32 - 1))
}

pub(crate) fn check_width_dim(dim: usize) -> Result<()> {
    if dim == 2 || dim == 3 {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension { dim, reason: "width is implemented for d in {2, 3}" })
    }
}

#[cfg(test)]
mod tests {
    #[test]
    fn constants() {
        assert!((super::width_constant(2) - 0.1).abs() < 1e-15);
        assert!((super::width_constant(3) - 0.02).abs() < 1e-15);
    }
}
