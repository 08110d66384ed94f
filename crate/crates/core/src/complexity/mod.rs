//! Exact expected combinatorial complexity.
//!
//! A `k`-simplex `Δ` of present points is a face of the random hull exactly
//! when the common image of its vertices is not inside the hull of the other
//! present points after projecting onto the orthogonal complement of `Δ`.
//! Facets reduce to membership on a line, ridges to membership in the
//! plane, and summing the face probabilities gives the expected number of
//! faces.

mod face;
mod lambda;
mod membership;
mod stats;

pub use face::face_prob;
pub use lambda::{expected_complexity, lambda_terms, lambda_terms_charged, FaceProbabilityReport};
pub use membership::{membership_prob_1d, membership_prob_2d};
pub use stats::{s_statistics, s_statistics_collect, HyperplaneStat};

/// Product that supports removing factors, tracking exact zeros separately.
#[derive(Clone, Copy, Debug)]
pub(crate) struct ZeroCountProduct {
    nonzero: f64,
    zeros: usize,
}

impl ZeroCountProduct {
    pub(crate) fn new() -> Self {
        ZeroCountProduct { nonzero: 1.0, zeros: 0 }
    }

    pub(crate) fn mul(&mut self, x: f64) {
        if x == 0.0 {
            self.zeros += 1;
        } else {
            self.nonzero *= x;
        }
    }

    pub(crate) fn div(&mut self, x: f64) {
        if x == 0.0 {
            self.zeros -= 1;
        } else {
            self.nonzero /= x;
        }
    }

    pub(crate) fn value(&self) -> f64 {
        if self.zeros > 0 {
            0.0
        } else {
            self.nonzero
        }
    }
}

#[cfg(test)]
mod tests {
    use super::ZeroCountProduct;

    #[test]
    fn zero_count_product() {
        let mut p = ZeroCountProduct::new();
        p.mul(0.5);
        p.mul(0.0);
        p.mul(0.25);
        assert_eq!(p.value(), 0.0);
        p.div(0.0);
        assert_eq!(p.value(), 0.125);
        p.div(0.5);
        assert_eq!(p.value(), 0.25);
    }
}
