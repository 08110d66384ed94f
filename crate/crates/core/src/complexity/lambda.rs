use rayon::prelude::*;
use serde::Serialize;

use super::face::face_prob;
use super::stats::{sweep_all, HyperplaneStat};
use crate::dataset::StochasticDataset;
use crate::error::{Error, Result};
use crate::geom::vector;

/// Expected face counts by dimension.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FaceProbabilityReport {
    /// Expected number of `(d-1)`-faces.
    pub lambda1: f64,
    /// Expected number of `(d-2)`-faces.
    pub lambda2: f64,
    /// Expected number of faces of dimension at most `d-3`, when known.
    pub lower_terms: Option<f64>,
    /// Expected total number of faces, when every term is known.
    pub total: Option<f64>,
}

impl FaceProbabilityReport {
    fn new(dim: usize, lambda1: f64, lambda2: f64) -> Self {
        let lower_terms = (dim == 2).then_some(0.0);
        let total = lower_terms.map(|l| lambda1 + lambda2 + l);
        FaceProbabilityReport { lambda1, lambda2, lower_terms, total }
    }
}

fn check_dim(dim: usize) -> Result<()> {
    match dim {
        2 | 3 => Ok(()),
        dim => Err(Error::UnsupportedDimension { dim, reason: "face counts are implemented for d in {2, 3}" }),
    }
}

fn facet_prob(ds: &StochasticDataset, stat: &HyperplaneStat) -> f64 {
    let present: f64 = stat.on_plane.iter().map(|&i| ds.prob(i)).product();
    present * (stat.p_pos + stat.p_neg - stat.p_pos * stat.p_neg)
}

fn lambda1(ds: &StochasticDataset) -> Result<f64> {
    let groups = sweep_all(ds, || 0.0, |acc: &mut f64, stat| *acc += facet_prob(ds, &stat))?;
    Ok(groups.iter().sum())
}

fn ridges(n: usize, d: usize) -> Vec<Vec<usize>> {
    if d == 2 {
        (0..n).map(|i| vec![i]).collect()
    } else {
        (0..n).flat_map(|i| (i + 1..n).map(move |j| vec![i, j])).collect()
    }
}

/// `λ₁` from one sweep over hyperplane statistics and `λ₂` from one planar
/// membership query per `(d-2)`-simplex. For `d = 2` this is every face;
/// for `d = 3` the vertex count is not included.
pub fn lambda_terms(ds: &StochasticDataset) -> Result<FaceProbabilityReport> {
    check_dim(ds.dim())?;
    let l1 = lambda1(ds)?;
    let per_ridge: Vec<f64> = ridges(ds.len(), ds.dim())
        .par_iter()
        .map(|r| face_prob(ds, r))
        .collect::<Result<_>>()?;
    Ok(FaceProbabilityReport::new(ds.dim(), l1, per_ridge.iter().sum()))
}

/// Same as [`lambda_terms`], with `λ₂` charged to hyperplane statistics
/// instead of separate membership queries.
///
/// In the planar-membership sum for a ridge `Δ`, the term of point `a` is
/// `π(a)` times the probability that the open side of `aff(Δ ∪ {a})` to the
/// right of `a` is empty, which one side product of that hyperplane
/// supplies. Every hyperplane is charged once per choice of `a` among its
/// `d` points.
pub fn lambda_terms_charged(ds: &StochasticDataset) -> Result<FaceProbabilityReport> {
    check_dim(ds.dim())?;
    let d = ds.dim();
    let pts = ds.coords();
    let groups = sweep_all(
        ds,
        || (0.0, 0.0),
        |acc: &mut (f64, f64), stat| {
            acc.0 += facet_prob(ds, &stat);
            let present: f64 = stat.on_plane.iter().map(|&i| ds.prob(i)).product();
            for (skip, &a) in stat.on_plane.iter().enumerate() {
                let ridge: Vec<usize> = stat.on_plane.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                let left_normal: Vec<f64> = if d == 2 {
                    let w = vector::sub(pts[a], pts[ridge[0]]);
                    vec![-w[1], w[0]]
                } else {
                    vector::cross3(&vector::sub(pts[ridge[1]], pts[ridge[0]]), &vector::sub(pts[a], pts[ridge[0]])).to_vec()
                };
                let right = if vector::dot(&left_normal, &stat.normal) > 0.0 { stat.p_neg } else { stat.p_pos };
                acc.1 += present * right;
            }
        },
    )?;
    let none_outside: f64 = ridges(ds.len(), d)
        .iter()
        .map(|r| {
            let present: f64 = r.iter().map(|&v| ds.prob(v)).product();
            let absent: f64 = (0..ds.len()).filter(|a| !r.contains(a)).map(|a| 1.0 - ds.prob(a)).product();
            present * absent
        })
        .sum();
    let l1 = groups.iter().map(|g| g.0).sum();
    let l2 = none_outside + groups.iter().map(|g| g.1).sum::<f64>();
    Ok(FaceProbabilityReport::new(d, l1, l2))
}

/// Exact expected number of faces of the random hull in the plane, counting
/// vertices and edges (a segment has two vertices and one edge).
pub fn expected_complexity(ds: &StochasticDataset) -> Result<f64> {
    if ds.dim() != 2 {
        return Err(Error::UnsupportedDimension {
            dim: ds.dim(),
            reason: "the exact expected complexity is implemented for d = 2",
        });
    }
    Ok(lambda_terms(ds)?.total.expect("complete in the plane"))
}
