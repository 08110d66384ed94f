use rayon::prelude::*;

use super::witness::ray_point;
use crate::dataset::StochasticDataset;
use crate::geom::{lex_ranks, precedes_ranked, vector};
use crate::EPS_GEO;

struct Tables<'a> {
    pts: Vec<&'a [f64]>,
    dist: Vec<Vec<f64>>,
    rank: Vec<usize>,
    prob: &'a [f64],
    miss: Vec<f64>,
}

impl<'a> Tables<'a> {
    fn new(ds: &'a StochasticDataset) -> Self {
        let pts = ds.coords();
        let dist = pts.iter().map(|a| pts.iter().map(|b| vector::dist(a, b)).collect()).collect();
        Tables {
            rank: lex_ranks(&pts),
            pts,
            dist,
            prob: ds.probs(),
            miss: ds.probs().iter().map(|p| 1.0 - p).collect(),
        }
    }

    fn len(&self) -> usize {
        self.pts.len()
    }

    /// Marks every `a` with `p ≺_anchor a`, given the distances from the anchor.
    fn extend(&self, mask: &mut [bool], from: &[bool], anchor_dist: &[f64], p: usize) {
        let (dp, rp) = (anchor_dist[p], self.rank[p]);
        for (a, m) in mask.iter_mut().enumerate() {
            *m = from[a] || precedes_ranked(dp, anchor_dist[a], rp, self.rank[a]);
        }
    }
}

/// Expected `Λ` of the random hull, a 1.633-approximation of the expected
/// diameter (never an overestimate).
///
/// Tuples are grouped by their first four entries; for each group the
/// surviving candidates for the fifth entry are sorted by distance to the
/// fourth, so that each exclusion product is a suffix product. Runs in
/// `O(n^5 log n + n^4 d)` time with the outer loop split across threads.
pub fn expected_diameter_witness(ds: &StochasticDataset) -> f64 {
    let t = Tables::new(ds);
    let n = t.len();
    if n < 2 {
        return 0.0;
    }
    let per_first: Vec<f64> = (0..n).into_par_iter().map(|p1| sum_for_first(&t, p1)).collect();
    per_first.iter().sum()
}

fn sum_for_first(t: &Tables, p1: usize) -> f64 {
    let n = t.len();
    let m1: Vec<bool> = (0..n).map(|a| t.rank[p1] < t.rank[a]).collect();
    let (mut m2, mut m3, mut m4) = (vec![false; n], vec![false; n], vec![false; n]);
    let mut xdist = vec![0.0; n];
    let mut cand: Vec<usize> = Vec::with_capacity(n);
    let mut suffix = vec![1.0; n + 1];
    let mut total = 0.0;

    for p2 in (0..n).filter(|&p| p != p1 && !m1[p]) {
        t.extend(&mut m2, &m1, &t.dist[p1], p2);
        if m2[p1] || m2[p2] {
            continue;
        }
        for p3 in (0..n).filter(|&p| !m2[p]) {
            t.extend(&mut m3, &m2, &t.dist[p2], p3);
            if [p1, p2, p3].iter().any(|&p| m3[p]) {
                continue;
            }
            let x = ray_point(t.pts[p1], t.pts[p2], t.dist[p2][p3]);
            for (a, dx) in xdist.iter_mut().enumerate() {
                *dx = vector::dist(&x, t.pts[a]);
            }
            let duw = t.dist[p2][p3];
            for p4 in (0..n).filter(|&p| !m3[p]) {
                t.extend(&mut m4, &m3, &xdist, p4);
                let heads = [p1, p2, p3, p4];
                if heads.iter().any(|&p| m4[p]) {
                    continue;
                }
                let mut left: f64 = (0..n).filter(|&a| m4[a]).map(|a| t.miss[a]).product();
                for (i, &p) in heads.iter().enumerate() {
                    if !heads[..i].contains(&p) {
                        left *= t.prob[p];
                    }
                }
                if left == 0.0 {
                    continue;
                }

                let d4 = &t.dist[p4];
                cand.clear();
                cand.extend((0..n).filter(|&a| !m4[a]));
                cand.sort_unstable_by(|&a, &b| d4[a].total_cmp(&d4[b]).then(t.rank[a].cmp(&t.rank[b])));
                suffix[cand.len()] = 1.0;
                for j in (0..cand.len()).rev() {
                    suffix[j] = suffix[j + 1] * t.miss[cand[j]];
                }

                for (pos, &p5) in cand.iter().enumerate() {
                    let d5 = d4[p5];
                    if heads.iter().any(|&p| precedes_ranked(d5, d4[p], t.rank[p5], t.rank[p])) {
                        continue;
                    }
                    let lo = cand.partition_point(|&c| d4[c] < d5 - EPS_GEO);
                    let hi = cand.partition_point(|&c| d4[c] <= d5 + EPS_GEO);
                    let mut prob = suffix[hi];
                    for (j, &c) in cand.iter().enumerate().take(hi).skip(lo) {
                        if j != pos && t.rank[p5] < t.rank[c] {
                            prob *= t.miss[c];
                        }
                    }
                    if !heads.contains(&p5) {
                        prob *= t.prob[p5];
                    }
                    total += left * prob * duw.max(d5);
                }
            }
        }
    }
    total
}

/// Expected distance of the critical pair `(a_i, a_j)`: `a_i` is the first
/// present point in input order and `a_j` the present point farthest from
/// it (the `≺`-larger on ties). Since every point lies within
/// `dist(a_i, a_j)` of `a_i`, this is a 2-approximation of the expected
/// diameter, never overestimating it. O(n^3).
pub fn expected_diameter_two_approx(ds: &StochasticDataset) -> f64 {
    let t = Tables::new(ds);
    let n = t.len();
    let per_first: Vec<f64> = (0..n)
        .into_par_iter()
        .map(|i| {
            let before: f64 = t.miss[..i].iter().product();
            if before == 0.0 {
                return 0.0;
            }
            let di = &t.dist[i];
            let mut sum = 0.0;
            for j in (i + 1)..n {
                let beyond: f64 = (i + 1..n)
                    .filter(|&k| k != j && precedes_ranked(di[j], di[k], t.rank[j], t.rank[k]))
                    .map(|k| t.miss[k])
                    .product();
                sum += t.prob[j] * beyond * di[j];
            }
            before * t.prob[i] * sum
        })
        .collect();
    per_first.iter().sum()
}
