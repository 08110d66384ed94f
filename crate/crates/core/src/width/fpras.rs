use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::expected::SimplexEnumerator;
use super::simplex::excluded_by;
use super::{check_width_dim, width_constant};
use crate::dataset::{RngSeed, StochasticDataset};
use crate::error::{Error, Result};
use crate::geom::width_of;

const MEMO_BITS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FprasConfig {
    pub epsilon: f64,
    /// Replaces the default `γ = d / c₁²`, which is far more than needed in
    /// practice.
    pub gamma_override: Option<f64>,
    pub seed: RngSeed,
}

impl FprasConfig {
    pub fn new(epsilon: f64, seed: u64) -> Self {
        FprasConfig { epsilon, gamma_override: None, seed: RngSeed(seed) }
    }

    fn validate(&self) -> Result<()> {
        if !(self.epsilon.is_finite() && self.epsilon > 0.0) {
            return Err(Error::InvalidArgument(format!("epsilon must be positive, got {}", self.epsilon)));
        }
        if let Some(g) = self.gamma_override {
            if !(g.is_finite() && g > 0.0) {
                return Err(Error::InvalidArgument(format!("gamma must be positive, got {g}")));
            }
        }
        Ok(())
    }
}

/// Samples per witness simplex: `max(1, ⌈γ ln n / ε²⌉)`.
pub fn fpras_sample_count(n: usize, dim: usize, epsilon: f64, gamma_override: Option<f64>) -> usize {
    let gamma = gamma_override.unwrap_or_else(|| dim as f64 / width_constant(dim).powi(2));
    let m = (gamma * (n.max(1) as f64).ln() / (epsilon * epsilon)).ceil();
    (m as usize).max(1)
}

/// `(1 ± ε)`-approximation of the expected width with probability at least
/// 2/3.
///
/// For every witness simplex `Δ`, the points that neither are vertices of
/// `Δ` nor are forced absent by it are free; their presence does not change
/// the witness simplex, so `E[wid | Δ]` is estimated by averaging the exact
/// width over sampled subsets of free points joined with the vertices of
/// `Δ`. Simplex `k` in enumeration order samples from stream `k` of the
/// seed, so the result does not depend on thread scheduling.
pub fn expected_width_fpras(ds: &StochasticDataset, cfg: &FprasConfig) -> Result<f64> {
    check_width_dim(ds.dim())?;
    cfg.validate()?;
    let m = fpras_sample_count(ds.len(), ds.dim(), cfg.epsilon, cfg.gamma_override);
    let en = SimplexEnumerator::new(ds);
    let per_first: Vec<Vec<(Vec<usize>, f64)>> = (0..en.len())
        .into_par_iter()
        .map(|first| {
            let mut found = Vec::new();
            en.for_each_with_first(first, &mut |list, prob| found.push((list.to_vec(), prob)));
            found
        })
        .collect();
    let simplices: Vec<(Vec<usize>, f64)> = per_first.into_iter().flatten().collect();
    let terms: Vec<f64> = simplices
        .par_iter()
        .enumerate()
        .map(|(k, (list, prob))| prob * conditional_width(ds, &en.pts, list, m, cfg.seed, k as u64))
        .collect();
    Ok(terms.iter().sum())
}

fn conditional_width(
    ds: &StochasticDataset,
    pts: &[&[f64]],
    list: &[usize],
    m: usize,
    seed: RngSeed,
    stream: u64,
) -> f64 {
    let excluded = excluded_by(pts, list);
    let free: Vec<usize> = (0..pts.len()).filter(|&a| !excluded[a] && !list.contains(&a)).collect();
    let mut sample: Vec<&[f64]> = list.iter().map(|&i| pts[i]).collect();
    let width = |s: &[&[f64]]| width_of(s).expect("sample contains a full-dimensional simplex").value;
    if free.is_empty() {
        return width(&sample);
    }
    let mut rng = seed.stream(stream);
    // few free points: each distinct subset is measured once
    let mut memo = if free.len() <= MEMO_BITS { vec![f64::NAN; 1 << free.len()] } else { Vec::new() };
    let mut total = 0.0;
    for _ in 0..m {
        let mut mask = 0usize;
        sample.truncate(list.len());
        for (bit, &f) in free.iter().enumerate() {
            if rng.random::<f64>() < ds.prob(f) {
                sample.push(pts[f]);
                if bit < MEMO_BITS {
                    mask |= 1 << bit;
                }
            }
        }
        total += match memo.get_mut(mask) {
            Some(w) if !w.is_nan() => *w,
            Some(w) => {
                *w = width(&sample);
                *w
            }
            None => width(&sample),
        };
    }
    total / m as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_counts() {
        assert_eq!(fpras_sample_count(1, 2, 0.1, None), 1);
        let m = fpras_sample_count(10, 2, 0.5, None);
        assert_eq!(m, (200.0 * 10f64.ln() / 0.25).ceil() as usize);
        assert_eq!(fpras_sample_count(10, 3, 1.0, Some(1.0)), 3);
    }

    #[test]
    fn certain_points_give_exact_width() {
        let ds = StochasticDataset::from_rows(
            vec![vec![0.0, 0.0], vec![2.0, 0.0], vec![2.0, 1.0], vec![0.0, 1.0], vec![1.0, 0.5]],
            vec![1.0; 5],
        )
        .unwrap();
        let cfg = FprasConfig { epsilon: 0.5, gamma_override: Some(1.0), seed: RngSeed(3) };
        assert!((expected_width_fpras(&ds, &cfg).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_config() {
        let ds = StochasticDataset::from_rows(vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]], vec![0.5; 3])
            .unwrap();
        assert!(expected_width_fpras(&ds, &FprasConfig::new(0.0, 1)).is_err());
        let cfg = FprasConfig { epsilon: 0.1, gamma_override: Some(-1.0), seed: RngSeed(1) };
        assert!(expected_width_fpras(&ds, &cfg).is_err());
    }
}
