use crate::dataset::StochasticDataset;
use crate::error::{Error, Result};
use crate::geom::{lex_cmp, precedes_by, vector, Point};
use crate::EPS_GEO;

/// The witness sequence `(v, u, w, y, z)` of a point set, as indices into
/// the point set, with the auxiliary point `x` and `Λ`.
#[derive(Clone, Debug, PartialEq)]
pub struct WitnessSequence {
    pub indices: [usize; 5],
    /// On the ray from `u` through `v`, at distance `dist(u, w) / 2` from `u`.
    pub x: Vec<f64>,
    /// `max(dist(u, w), dist(y, z))`.
    pub lambda: f64,
}

impl WitnessSequence {
    pub fn v(&self) -> usize {
        self.indices[0]
    }
    pub fn u(&self) -> usize {
        self.indices[1]
    }
    pub fn w(&self) -> usize {
        self.indices[2]
    }
    pub fn y(&self) -> usize {
        self.indices[3]
    }
    pub fn z(&self) -> usize {
        self.indices[4]
    }
}

/// Index of the `≺`-largest member farthest from `x`; members whose distance
/// is within `EPS_GEO` of the maximum count as tied.
pub(crate) fn farthest_among(points: &[&[f64]], members: &[usize], x: &[f64]) -> usize {
    let dists: Vec<f64> = members.iter().map(|&i| vector::dist(points[i], x)).collect();
    let dmax = dists.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut best: Option<usize> = None;
    for (&i, &d) in members.iter().zip(&dists) {
        if d >= dmax - EPS_GEO && best.is_none_or(|b| lex_cmp(points[b], points[i]).is_lt()) {
            best = Some(i);
        }
    }
    best.expect("members is nonempty")
}

/// The farthest point from `x`, ties broken toward the `≺`-largest.
pub fn farthest_from(points: &[Point], x: &Point) -> Result<usize> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let refs: Vec<&[f64]> = points.iter().map(|p| p.coords()).collect();
    for p in &refs {
        crate::geom::check_dims(x, p)?;
    }
    let members: Vec<usize> = (0..points.len()).collect();
    Ok(farthest_among(&refs, &members, x))
}

pub(crate) fn ray_point(v: &[f64], u: &[f64], dist_uw: f64) -> Vec<f64> {
    let dir = vector::sub(v, u);
    let len = vector::norm(&dir);
    vector::axpy(u, dist_uw / (2.0 * len), &dir)
}

/// Witness sequence of the hull of `points[members]`, in O(d·|members|).
pub(crate) fn witness_sequence_of(points: &[&[f64]], members: &[usize]) -> WitnessSequence {
    let v = *members
        .iter()
        .max_by(|&&a, &&b| lex_cmp(points[a], points[b]))
        .expect("members is nonempty");
    if members.len() == 1 {
        return WitnessSequence { indices: [v; 5], x: points[v].to_vec(), lambda: 0.0 };
    }
    let u = farthest_among(points, members, points[v]);
    let w = farthest_among(points, members, points[u]);
    let duw = vector::dist(points[u], points[w]);
    let x = ray_point(points[v], points[u], duw);
    let y = farthest_among(points, members, &x);
    let z = farthest_among(points, members, points[y]);
    let lambda = duw.max(vector::dist(points[y], points[z]));
    WitnessSequence { indices: [v, u, w, y, z], x, lambda }
}

/// Witness sequence of a nonempty point set. A single point yields
/// `(p, p, p, p, p)` with `Λ = 0`.
pub fn witness_sequence(points: &[Point]) -> Result<WitnessSequence> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let refs: Vec<&[f64]> = points.iter().map(|p| p.coords()).collect();
    for p in &refs {
        crate::geom::check_dims(refs[0], p)?;
    }
    let members: Vec<usize> = (0..points.len()).collect();
    Ok(witness_sequence_of(&refs, &members))
}

/// `Λ` of the witness sequence: a 1.633-approximation of the diameter in
/// linear time.
pub fn diameter_approx_pointset(points: &[Point]) -> Result<f64> {
    Ok(witness_sequence(points)?.lambda)
}

/// Probability that `psi = (p1, ..., p5)` is the witness sequence of a
/// random hull: all five points present, and no point present that would
/// displace one of them.
pub fn witness_prob(ds: &StochasticDataset, psi: [usize; 5]) -> Result<f64> {
    for &i in &psi {
        ds.check_index(i)?;
    }
    let n = ds.len();
    let [p1, p2, p3, p4, p5] = psi;
    if p1 == p2 {
        if psi.iter().any(|&p| p != p1) {
            return Ok(0.0);
        }
        let others: f64 = (0..n).filter(|&a| a != p1).map(|a| 1.0 - ds.prob(a)).product();
        return Ok(ds.prob(p1) * others);
    }
    let pts = ds.coords();
    let x = ray_point(pts[p1], pts[p2], vector::dist(pts[p2], pts[p3]));
    let anchors: [(&[f64], usize); 4] = [(pts[p1], p2), (pts[p2], p3), (&x, p4), (pts[p4], p5)];
    let excluded = |a: usize| {
        lex_cmp(pts[p1], pts[a]).is_lt()
            || anchors.iter().any(|&(anchor, p)| {
                precedes_by(vector::dist(anchor, pts[p]), vector::dist(anchor, pts[a]), pts[p], pts[a])
            })
    };
    if psi.iter().any(|&p| excluded(p)) {
        return Ok(0.0);
    }
    let mut prob = 1.0;
    for a in 0..n {
        if psi.contains(&a) {
            prob *= ds.prob(a);
        } else if excluded(a) {
            prob *= 1.0 - ds.prob(a);
        }
    }
    Ok(prob)
}
