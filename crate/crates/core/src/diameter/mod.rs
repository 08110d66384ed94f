//! Expected diameter.
//!
//! The witness sequence of a polytope is a canonical 5-tuple of its vertices
//! `(v, u, w, y, z)`; `Λ = max(dist(u, w), dist(y, z))` is within a factor
//! `2√2/√3 ≈ 1.633` of the diameter. Summing `Pr[ψ] · Λ(ψ)` over the `O(n^5)`
//! candidate tuples gives a deterministic approximation of the expected
//! diameter in time polynomial in both `n` and `d`.

mod expected;
mod hardness;
mod witness;

pub use expected::{expected_diameter_two_approx, expected_diameter_witness};
pub use hardness::{hardness_identity_check, hardness_instance, Graph, HardnessInstance};
pub use witness::{diameter_approx_pointset, farthest_from, witness_prob, witness_sequence, WitnessSequence};

/// Approximation factor of the witness sequence, `2√2/√3`.
pub const WITNESS_FACTOR: f64 = 1.632_993_161_855_452;

/// Approximation factor of the critical-pair estimator.
pub const TWO_APPROX_FACTOR: f64 = 2.0;

#[cfg(test)]
mod tests {
    #[test]
    fn witness_factor_value() {
        let exact = 2.0 * 2f64.sqrt() / 3f64.sqrt();
        assert!((super::WITNESS_FACTOR - exact).abs() < 1e-15);
    }
}
