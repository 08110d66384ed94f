use std::f64::consts::PI;

use crate::dataset::StochasticDataset;
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::EPS_GEO;

/// Probability that `q` lies in the hull of the random subset of `xs`.
pub(crate) fn mem_1d(xs: &[f64], probs: &[f64], q: f64) -> Result<f64> {
    let (mut right, mut left) = (1.0, 1.0);
    for (&x, &p) in xs.iter().zip(probs) {
        if (x - q).abs() <= EPS_GEO {
            return Err(Error::GeneralPosition(format!("query {q} coincides with point {x}")));
        }
        if x > q {
            right *= 1.0 - p;
        } else {
            left *= 1.0 - p;
        }
    }
    Ok((1.0 - right) * (1.0 - left))
}

/// Membership probability on the line: `1 - (p⁺ + p⁻ - p⁺p⁻)` where `p⁺`
/// and `p⁻` are the probabilities that no point is present to the right and
/// to the left of `q`.
pub fn membership_prob_1d(ds: &StochasticDataset, q: f64) -> Result<f64> {
    if ds.dim() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, found: ds.dim() });
    }
    let xs: Vec<f64> = ds.points().iter().map(|p| p[0]).collect();
    mem_1d(&xs, ds.probs(), q)
}

/// Range products over a fixed array.
struct RangeProduct {
    size: usize,
    tree: Vec<f64>,
}

impl RangeProduct {
    fn new(values: &[f64]) -> Self {
        let size = values.len();
        let mut tree = vec![1.0; 2 * size];
        tree[size..].copy_from_slice(values);
        for i in (1..size).rev() {
            tree[i] = tree[2 * i] * tree[2 * i + 1];
        }
        RangeProduct { size, tree }
    }

    /// Product over `lo..hi`.
    fn product(&self, lo: usize, hi: usize) -> f64 {
        let (mut lo, mut hi) = (lo + self.size, hi + self.size);
        let mut acc = 1.0;
        while lo < hi {
            if lo & 1 == 1 {
                acc *= self.tree[lo];
                lo += 1;
            }
            if hi & 1 == 1 {
                hi -= 1;
                acc *= self.tree[hi];
            }
            lo /= 2;
            hi /= 2;
        }
        acc
    }
}

/// Probability that `q` lies in the hull of the random subset of `pts`.
///
/// If `q` is outside the hull of a nonempty realization, the directions from
/// `q` to the present points fit in an open half-turn and exactly one present
/// point `a` has all others strictly to the left of the ray `q → a`. Hence
/// `1 - mem = Π(1-τ) + Σ_a τ(a) Π_{b not strictly left of q→a} (1-τ(b))`,
/// and after sorting by angle each product ranges over a circular interval.
pub(crate) fn mem_2d(pts: &[[f64; 2]], probs: &[f64], q: [f64; 2]) -> Result<f64> {
    let n = pts.len();
    if n == 0 {
        return Ok(0.0);
    }
    let mut order: Vec<(f64, usize)> = Vec::with_capacity(n);
    for (i, p) in pts.iter().enumerate() {
        let (dx, dy) = (p[0] - q[0], p[1] - q[1]);
        if dx.hypot(dy) <= EPS_GEO {
            return Err(Error::GeneralPosition(format!("query coincides with point {i}")));
        }
        order.push((dy.atan2(dx), i));
    }
    check_no_collinear(&order)?;
    order.sort_unstable_by(|a, b| a.0.total_cmp(&b.0));

    let angles: Vec<f64> = order.iter().map(|o| o.0).chain(order.iter().map(|o| o.0 + 2.0 * PI)).collect();
    let miss: Vec<f64> = order.iter().chain(&order).map(|&(_, i)| 1.0 - probs[i]).collect();
    let range = RangeProduct::new(&miss);
    let mut outside = range.product(0, n);
    for (pos, &(theta, i)) in order.iter().enumerate() {
        let lo = angles.partition_point(|&t| t <= theta + PI);
        outside += probs[i] * range.product(lo, pos + n);
    }
    Ok((1.0 - outside).clamp(0.0, 1.0))
}

/// Rejects queries collinear with two of the points.
fn check_no_collinear(order: &[(f64, usize)]) -> Result<()> {
    if order.len() < 2 {
        return Ok(());
    }
    let mut lines: Vec<(f64, usize)> = order.iter().map(|&(a, i)| (a.rem_euclid(PI), i)).collect();
    lines.sort_unstable_by(|a, b| a.0.total_cmp(&b.0));
    let wrap = lines.first().zip(lines.last()).map(|(f, l)| (f.0 + PI - l.0, f.1, l.1));
    let gaps = lines.windows(2).map(|w| (w[1].0 - w[0].0, w[0].1, w[1].1)).chain(wrap);
    for (gap, a, b) in gaps {
        if gap <= EPS_GEO {
            return Err(Error::GeneralPosition(format!("query is collinear with points {a} and {b}")));
        }
    }
    Ok(())
}

/// Membership probability in the plane, by the witness-edge method in
/// `O(n log n)`.
pub fn membership_prob_2d(ds: &StochasticDataset, q: &Point) -> Result<f64> {
    if ds.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: ds.dim() });
    }
    if q.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: q.dim() });
    }
    let pts: Vec<[f64; 2]> = ds.points().iter().map(|p| [p[0], p[1]]).collect();
    mem_2d(&pts, ds.probs(), [q[0], q[1]])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(xs: &[f64], probs: &[f64]) -> StochasticDataset {
        StochasticDataset::from_rows(xs.iter().map(|&x| vec![x]).collect(), probs.to_vec()).unwrap()
    }

    #[test]
    fn one_dimensional_examples() {
        assert_eq!(membership_prob_1d(&line(&[-1.0, 1.0], &[1.0, 1.0]), 0.0).unwrap(), 1.0);
        assert_eq!(membership_prob_1d(&line(&[1.0, 2.0], &[0.5, 0.5]), 0.0).unwrap(), 0.0);
        assert!((membership_prob_1d(&line(&[-1.0, 1.0], &[0.5, 0.5]), 0.0).unwrap() - 0.25).abs() < 1e-15);
        assert!(membership_prob_1d(&line(&[-1.0, 1.0], &[0.5, 0.5]), 1.0).is_err());
    }

    fn plane(rows: &[[f64; 2]], p: f64) -> StochasticDataset {
        StochasticDataset::from_rows(rows.iter().map(|r| r.to_vec()).collect(), vec![p; rows.len()]).unwrap()
    }

    #[test]
    fn two_dimensional_examples() {
        let tri = [[0.0, 0.0], [4.0, 0.0], [0.0, 4.0]];
        let q = Point::new(vec![1.0, 1.0]).unwrap();
        assert!((membership_prob_2d(&plane(&tri, 1.0), &q).unwrap() - 1.0).abs() < 1e-15);
        assert!((membership_prob_2d(&plane(&tri, 0.5), &q).unwrap() - 0.125).abs() < 1e-15);
        let far = Point::new(vec![100.0, 37.0]).unwrap();
        assert!(membership_prob_2d(&plane(&tri, 0.5), &far).unwrap().abs() < 1e-15);
        let on_edge = Point::new(vec![2.0, 0.0]).unwrap();
        assert!(matches!(membership_prob_2d(&plane(&tri, 0.5), &on_edge), Err(Error::GeneralPosition(_))));
    }

    #[test]
    fn range_products() {
        let r = RangeProduct::new(&[2.0, 3.0, 5.0, 7.0, 11.0]);
        assert_eq!(r.product(0, 5), 2310.0);
        assert_eq!(r.product(1, 4), 105.0);
        assert_eq!(r.product(2, 2), 1.0);
    }
}
