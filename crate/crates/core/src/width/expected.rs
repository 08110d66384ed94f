use rayon::prelude::*;

use super::check_width_dim;
use super::simplex::{simplex_width_of, witness_simplex_of};
use crate::dataset::StochasticDataset;
use crate::error::Result;
use crate::geom::{lex_ranks, precedes_ranked, Flat};
use crate::EPS_GEO;

pub(crate) struct SimplexEnumerator<'a> {
    pub(crate) pts: Vec<&'a [f64]>,
    rank: Vec<usize>,
    prob: &'a [f64],
    miss: Vec<f64>,
    dim: usize,
}

impl<'a> SimplexEnumerator<'a> {
    pub(crate) fn new(ds: &'a StochasticDataset) -> Self {
        let pts = ds.coords();
        SimplexEnumerator {
            rank: lex_ranks(&pts),
            pts,
            prob: ds.probs(),
            miss: ds.probs().iter().map(|p| 1.0 - p).collect(),
            dim: ds.dim(),
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.pts.len()
    }

    fn flat_distances(&self, prefix: &[usize]) -> Vec<f64> {
        let refs: Vec<&[f64]> = prefix.iter().map(|&i| self.pts[i]).collect();
        let flat = Flat::through(&refs).expect("prefix vertices are affinely independent");
        self.pts.iter().map(|p| flat.distance_to(p)).collect()
    }

    /// Calls `emit(vertex_list, Pr[Δ])` for every witness simplex with
    /// `v_0 = first` and nonzero probability, in a fixed order.
    pub(crate) fn for_each_with_first(&self, first: usize, emit: &mut dyn FnMut(&[usize], f64)) {
        let mask: Vec<bool> = self.rank.iter().map(|&r| self.rank[first] < r).collect();
        let mut prefix = vec![first];
        self.descend(&mut prefix, &mask, emit);
    }

    fn descend(&self, prefix: &mut Vec<usize>, mask: &[bool], emit: &mut dyn FnMut(&[usize], f64)) {
        let dist = self.flat_distances(prefix);
        if prefix.len() == self.dim {
            self.finish(prefix, mask, &dist, emit);
            return;
        }
        let mut next = vec![false; self.len()];
        for v in 0..self.len() {
            if mask[v] || dist[v] <= EPS_GEO {
                continue;
            }
            for (a, m) in next.iter_mut().enumerate() {
                *m = mask[a] || precedes_ranked(dist[v], dist[a], self.rank[v], self.rank[a]);
            }
            if next[v] || prefix.iter().any(|&p| next[p]) {
                continue;
            }
            prefix.push(v);
            self.descend(prefix, &next, emit);
            prefix.pop();
        }
    }

    /// Last vertex: survivors sorted by distance to the flat through the
    /// prefix, so that each exclusion product is a suffix product times a
    /// short scan over the points tied within `EPS_GEO`.
    fn finish(&self, prefix: &[usize], mask: &[bool], dist: &[f64], emit: &mut dyn FnMut(&[usize], f64)) {
        let left: f64 = prefix.iter().map(|&p| self.prob[p]).product::<f64>()
            * (0..self.len()).filter(|&a| mask[a]).map(|a| self.miss[a]).product::<f64>();
        if left == 0.0 {
            return;
        }
        let mut cand: Vec<usize> = (0..self.len()).filter(|&a| !mask[a]).collect();
        cand.sort_unstable_by(|&a, &b| dist[a].total_cmp(&dist[b]).then(self.rank[a].cmp(&self.rank[b])));
        let mut suffix = vec![1.0; cand.len() + 1];
        for j in (0..cand.len()).rev() {
            suffix[j] = suffix[j + 1] * self.miss[cand[j]];
        }
        let mut list = prefix.to_vec();
        list.push(0);
        for (pos, &v) in cand.iter().enumerate() {
            let dv = dist[v];
            if dv <= EPS_GEO {
                continue;
            }
            *list.last_mut().unwrap() = v;
            if witness_simplex_of(&self.pts, &list).as_deref() != Some(&list[..]) {
                continue;
            }
            let lo = cand.partition_point(|&c| dist[c] < dv - EPS_GEO);
            let hi = cand.partition_point(|&c| dist[c] <= dv + EPS_GEO);
            let mut prob = left * self.prob[v] * suffix[hi];
            for (j, &c) in cand.iter().enumerate().take(hi).skip(lo) {
                if j != pos && self.rank[v] < self.rank[c] {
                    prob *= self.miss[c];
                }
            }
            if prob > 0.0 {
                emit(&list, prob);
            }
        }
    }
}

/// `Σ_Δ Pr[Δ]·wid(Δ)` over all candidate witness simplices: a deterministic
/// estimate with `c₁·E[wid] ≤ value ≤ E[wid]`. `O(n^{d+1} log n)` time.
pub fn expected_width_witness(ds: &StochasticDataset) -> Result<f64> {
    check_width_dim(ds.dim())?;
    let en = SimplexEnumerator::new(ds);
    let per_first: Vec<f64> = (0..en.len())
        .into_par_iter()
        .map(|first| {
            let mut sum = 0.0;
            en.for_each_with_first(first, &mut |list, prob| {
                let verts: Vec<&[f64]> = list.iter().map(|&i| en.pts[i]).collect();
                sum += prob * simplex_width_of(&verts);
            });
            sum
        })
        .collect();
    Ok(per_first.iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certain_triangle() {
        let ds = StochasticDataset::from_rows(vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![1.0, 1.0]], vec![1.0; 3])
            .unwrap();
        assert!((expected_width_witness(&ds).unwrap() - 0.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn certain_square() {
        let ds = StochasticDataset::from_rows(
            vec![vec![0.0, 0.0], vec![0.0, 1.0], vec![1.0, 0.0], vec![1.0, 1.0]],
            vec![1.0; 4],
        )
        .unwrap();
        assert!((expected_width_witness(&ds).unwrap() - 0.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn rejects_other_dimensions() {
        let ds = StochasticDataset::from_rows(vec![vec![0.0], vec![1.0]], vec![0.5; 2]).unwrap();
        assert!(expected_width_witness(&ds).is_err());
    }
}
