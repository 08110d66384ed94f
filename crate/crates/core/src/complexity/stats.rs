use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use super::ZeroCountProduct;
use crate::dataset::StochasticDataset;
use crate::error::{Error, Result};
use crate::geom::{complement_frame, coords_in, vector};
use crate::EPS_GEO;

/// Side statistics of the hyperplane through `d` dataset points.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HyperplaneStat {
    /// Indices of the points on the hyperplane, increasing.
    pub on_plane: Vec<usize>,
    /// Probability that no point strictly on the positive side is present.
    pub p_pos: f64,
    /// Probability that no point strictly on the negative side is present.
    pub p_neg: f64,
    /// Unit normal pointing to the positive side; its first coordinate that
    /// is not within 1e-9 of zero is positive.
    pub normal: Vec<f64>,
}

struct Entry {
    index: usize,
    /// Direction angle of the projected point, in `[0, 2π)`.
    phi: f64,
    /// Rotation angle of the hyperplane, `phi mod π`.
    key: f64,
}

impl Entry {
    /// The hyperplane's direction representative points at this entry.
    fn upper(&self) -> bool {
        self.phi == self.key
    }
}

fn check_dim(ds: &StochasticDataset) -> Result<()> {
    match ds.dim() {
        2 | 3 => Ok(()),
        dim => Err(Error::UnsupportedDimension { dim, reason: "hyperplane statistics need d in {2, 3}" }),
    }
}

/// The fixed `(d-1)`-subsets whose sweeps report at least one hyperplane.
fn subsets(n: usize, d: usize) -> Vec<Vec<usize>> {
    if d == 2 {
        (0..n.saturating_sub(1)).map(|i| vec![i]).collect()
    } else {
        (0..n).flat_map(|i| (i + 1..n.saturating_sub(1)).map(move |j| vec![i, j])).collect()
    }
}

/// Rotates a hyperplane around the flat spanned by `subset`, visiting each
/// hyperplane through `subset` and one more point. The first stat is
/// computed directly; every later one moves two points between sides.
fn sweep(ds: &StochasticDataset, subset: &[usize], visit: &mut dyn FnMut(HyperplaneStat)) -> Result<()> {
    let d = ds.dim();
    let pts = ds.coords();
    let base: Vec<&[f64]> = subset.iter().map(|&i| pts[i]).collect();
    let frame = complement_frame(&base)?;
    let origin = coords_in(&frame, base[0]);

    let mut r = [frame[0][d - 1], frame[1][d - 1]];
    if r[0].hypot(r[1]) <= 1e-9 {
        r = [frame[0][0], frame[1][0]];
    }
    let len = r[0].hypot(r[1]);
    let r = [r[0] / len, r[1] / len];
    let rp = [-r[1], r[0]];

    let mut entries = Vec::with_capacity(ds.len());
    for a in (0..ds.len()).filter(|a| !subset.contains(a)) {
        let c = coords_in(&frame, pts[a]);
        let w = [c[0] - origin[0], c[1] - origin[1]];
        if w[0].hypot(w[1]) <= EPS_GEO {
            return Err(Error::GeneralPosition(format!("points {subset:?} and {a} are collinear")));
        }
        let mut phi = (w[0] * rp[0] + w[1] * rp[1]).atan2(w[0] * r[0] + w[1] * r[1]).rem_euclid(2.0 * PI);
        if phi >= 2.0 * PI {
            phi = 0.0;
        }
        let key = if phi >= PI { phi - PI } else { phi };
        entries.push(Entry { index: a, phi, key });
    }
    entries.sort_unstable_by(|a, b| a.key.total_cmp(&b.key));
    let Some(first) = entries.first() else {
        return Ok(());
    };
    let last = entries.last().expect("nonempty");
    let wrap = (entries.len() > 1).then_some((first.key + PI - last.key, first, last));
    for (gap, a, b) in entries.windows(2).map(|w| (w[1].key - w[0].key, &w[0], &w[1])).chain(wrap) {
        if gap <= EPS_GEO {
            return Err(Error::GeneralPosition(format!(
                "points {subset:?}, {} and {} lie on a common hyperplane",
                a.index, b.index
            )));
        }
    }

    let miss = |e: &Entry| 1.0 - ds.prob(e.index);
    let (mut left, mut right) = (ZeroCountProduct::new(), ZeroCountProduct::new());
    for e in &entries[1..] {
        let delta = (e.phi - first.key).rem_euclid(2.0 * PI);
        if delta < PI {
            left.mul(miss(e));
        } else {
            right.mul(miss(e));
        }
    }
    let top = *subset.last().expect("subset is nonempty");
    for j in 0..entries.len() {
        if j > 0 {
            let (entering, leaving) = (&entries[j], &entries[j - 1]);
            if entering.upper() {
                left.div(miss(entering));
            } else {
                right.div(miss(entering));
            }
            if leaving.upper() {
                right.mul(miss(leaving));
            } else {
                left.mul(miss(leaving));
            }
        }
        let e = &entries[j];
        if e.index < top {
            continue;
        }
        let a = pts[e.index];
        let mut normal: Vec<f64> = if d == 2 {
            vec![base[0][1] - a[1], a[0] - base[0][0]]
        } else {
            vector::cross3(&vector::sub(base[1], base[0]), &vector::sub(a, base[0])).to_vec()
        };
        let (s, c) = e.key.sin_cos();
        let lp = [-s * r[0] + c * rp[0], -s * r[1] + c * rp[1]];
        let lifted = vector::axpy(&vector::scale(&frame[0], lp[0]), lp[1], &frame[1]);
        if vector::dot(&normal, &lifted) < 0.0 {
            normal.iter_mut().for_each(|x| *x = -*x);
        }
        let (mut p_pos, mut p_neg) = (left.value(), right.value());
        if normal.iter().find(|x| x.abs() > 1e-9).is_some_and(|&x| x < 0.0) {
            normal.iter_mut().for_each(|x| *x = -*x);
            std::mem::swap(&mut p_pos, &mut p_neg);
        }
        let len = vector::norm(&normal);
        normal.iter_mut().for_each(|x| *x /= len);
        let mut on_plane = subset.to_vec();
        on_plane.push(e.index);
        visit(HyperplaneStat { on_plane, p_pos, p_neg, normal });
    }
    Ok(())
}

/// Per-subset accumulators, computed in parallel, in subset order.
pub(crate) fn sweep_all<T, F>(ds: &StochasticDataset, make: fn() -> T, visit: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&mut T, HyperplaneStat) + Sync,
{
    check_dim(ds)?;
    subsets(ds.len(), ds.dim())
        .par_iter()
        .map(|subset| {
            let mut acc = make();
            sweep(ds, subset, &mut |stat| visit(&mut acc, stat))?;
            Ok(acc)
        })
        .collect()
}

/// Visits the statistics of all `C(n, d)` hyperplanes through `d` dataset
/// points, each exactly once, in `O(n^d log n)` time.
///
/// The hyperplanes are grouped by their `d - 1` smallest indices; each group
/// is swept by rotating around the flat those points span.
pub fn s_statistics(ds: &StochasticDataset, mut visitor: impl FnMut(&HyperplaneStat)) -> Result<()> {
    check_dim(ds)?;
    for subset in subsets(ds.len(), ds.dim()) {
        sweep(ds, &subset, &mut |stat| visitor(&stat))?;
    }
    Ok(())
}

/// All hyperplane statistics, sweeping groups in parallel. The order is the
/// same as the visiting order of [`s_statistics`].
pub fn s_statistics_collect(ds: &StochasticDataset) -> Result<Vec<HyperplaneStat>> {
    let groups = sweep_all(ds, Vec::new, |acc: &mut Vec<HyperplaneStat>, stat| acc.push(stat))?;
    Ok(groups.into_iter().flatten().collect())
}
