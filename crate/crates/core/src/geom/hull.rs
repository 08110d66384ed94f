//! Convex hulls in R^2 and R^3 with face enumeration, plus point-set diameter
//! and width.
//!
//! The R^3 hull enumerates supporting planes through point triples. That is
//! quartic, which is fine for the realization sizes the oracles enumerate
//! (a few dozen points at most).

use std::collections::{BTreeMap, BTreeSet};

use super::point::{check_dims, lex_cmp, Point};
use super::vector;
use crate::error::{Error, Result};
use crate::EPS_GEO;

/// Face structure of a convex hull.
#[derive(Clone, Debug, PartialEq)]
pub struct HullSummary {
    /// Affine dimension of the hull, `None` for an empty point set.
    pub dim_of_hull: Option<usize>,
    /// `face_counts[k]` is the number of k-dimensional faces, `k < d`.
    pub face_counts: Vec<usize>,
    pub vertices: Vec<Point>,
    /// Set when some orientation test fell within `EPS_GEO` of zero, i.e.
    /// the input is not in general position.
    pub near_degenerate: bool,
}

impl HullSummary {
    /// Total number of faces across all dimensions.
    pub fn complexity(&self) -> usize {
        self.face_counts.iter().sum()
    }
}

/// Index-level face lattice used by the oracles.
#[derive(Clone, Debug, Default)]
pub(crate) struct HullFaces {
    pub dim: Option<usize>,
    /// Faces grouped by dimension; each face is a sorted list of indices.
    pub faces: Vec<Vec<Vec<usize>>>,
    /// Counter-clockwise boundary when the hull is a full-dimensional polygon.
    pub ring: Vec<usize>,
    /// Outward unit normals of the facets of a full-dimensional polytope in R^3.
    pub normals: Vec<[f64; 3]>,
    pub near_degenerate: bool,
}

impl HullFaces {
    fn empty(d: usize) -> Self {
        HullFaces { faces: vec![Vec::new(); d], ..Default::default() }
    }

    pub fn vertex_indices(&self) -> Vec<usize> {
        self.faces.first().map_or_else(Vec::new, |v| v.iter().map(|f| f[0]).collect())
    }
}

fn check_hull_dim(d: usize) -> Result<()> {
    if d == 2 || d == 3 {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension { dim: d, reason: "hulls are implemented for d in {2, 3}" })
    }
}

/// Counter-clockwise hull of planar points (monotone chain). Boundary points
/// collinear within `EPS_GEO` are dropped; the flag reports whether any
/// such near-collinear triple was met.
pub(crate) fn hull2d(points: &[[f64; 2]]) -> (Vec<usize>, bool) {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| lex_cmp(&points[i], &points[j]));
    if order.len() < 3 {
        return (order, false);
    }
    let cross = |o: usize, a: usize, b: usize| {
        let (o, a, b) = (points[o], points[a], points[b]);
        (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    };
    let mut near = false;
    let mut chain = |iter: &mut dyn Iterator<Item = usize>| {
        let mut out: Vec<usize> = Vec::new();
        for i in iter {
            while out.len() >= 2 {
                let c = cross(out[out.len() - 2], out[out.len() - 1], i);
                if c > EPS_GEO {
                    break;
                }
                if c >= -EPS_GEO {
                    near = true;
                }
                out.pop();
            }
            out.push(i);
        }
        out
    };
    let mut lower = chain(&mut order.iter().copied());
    let mut upper = chain(&mut order.iter().rev().copied());
    lower.pop();
    upper.pop();
    lower.extend(upper);
    (lower, near)
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn ring_faces(ring: &[usize]) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let mut vertices: Vec<Vec<usize>> = ring.iter().map(|&i| vec![i]).collect();
    vertices.sort();
    let mut edges: Vec<Vec<usize>> = match ring.len() {
        0 | 1 => Vec::new(),
        2 => vec![sorted(ring.to_vec())],
        m => (0..m).map(|t| sorted(vec![ring[t], ring[(t + 1) % m]])).collect(),
    };
    edges.sort();
    (vertices, edges)
}

fn extreme_pair(points: &[&[f64]]) -> (usize, usize) {
    let mut lo = 0;
    let mut hi = 0;
    for i in 1..points.len() {
        if lex_cmp(points[i], points[lo]).is_lt() {
            lo = i;
        }
        if lex_cmp(points[i], points[hi]).is_gt() {
            hi = i;
        }
    }
    (lo, hi)
}

/// Planar coordinates of `points` in an orthonormal frame of their affine hull.
fn planar_coords(points: &[&[f64]], frame: &[Vec<f64>]) -> Vec<[f64; 2]> {
    points
        .iter()
        .map(|p| {
            let r = vector::sub(p, points[0]);
            [vector::dot(&r, &frame[0]), vector::dot(&r, &frame[1])]
        })
        .collect()
}

fn affine_frame(points: &[&[f64]]) -> Vec<Vec<f64>> {
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for p in &points[1..] {
        let r = vector::reject(&vector::reject(&vector::sub(p, points[0]), &basis), &basis);
        let len = vector::norm(&r);
        if len > EPS_GEO {
            basis.push(vector::scale(&r, 1.0 / len));
        }
    }
    basis
}

pub(crate) fn hull_faces(points: &[&[f64]]) -> Result<HullFaces> {
    let Some(first) = points.first() else {
        return Ok(HullFaces::empty(0));
    };
    let d = first.len();
    check_hull_dim(d)?;
    for p in points {
        check_dims(first, p)?;
    }
    let mut out = HullFaces::empty(d);
    let frame = affine_frame(points);
    let k = frame.len();
    out.dim = Some(k);
    match k {
        0 => out.faces[0] = vec![vec![0]],
        1 => {
            let (lo, hi) = extreme_pair(points);
            out.faces[0] = sorted(vec![lo, hi]).into_iter().map(|i| vec![i]).collect();
            out.faces[1] = vec![sorted(vec![lo, hi])];
            out.near_degenerate = points.len() > 2;
        }
        2 => {
            let planar = planar_coords(points, &frame);
            let (ring, near) = hull2d(&planar);
            let (v, e) = ring_faces(&ring);
            out.faces[0] = v;
            out.faces[1] = e;
            out.near_degenerate = near;
            if d == 3 {
                out.faces[2] = vec![sorted(ring.clone())];
                out.near_degenerate |= points.len() > 3;
            }
            out.ring = ring;
        }
        _ => hull3d_full(points, &mut out),
    }
    Ok(out)
}

fn hull3d_full(points: &[&[f64]], out: &mut HullFaces) {
    let n = points.len();
    let mut facets: BTreeMap<Vec<usize>, [f64; 3]> = BTreeMap::new();
    let mut signed = vec![0.0; n];
    for i in 0..n {
        for j in i + 1..n {
            let a = vector::sub(points[j], points[i]);
            for k in j + 1..n {
                let b = vector::sub(points[k], points[i]);
                let c = vector::cross3(&a, &b);
                let len = vector::norm(&c);
                if len <= EPS_GEO {
                    continue;
                }
                let normal = [c[0] / len, c[1] / len, c[2] / len];
                let (mut pos, mut neg) = (false, false);
                for (l, s) in signed.iter_mut().enumerate() {
                    *s = vector::dot(&normal, &vector::sub(points[l], points[i]));
                    pos |= *s > EPS_GEO;
                    neg |= *s < -EPS_GEO;
                    if pos && neg {
                        break;
                    }
                }
                if pos && neg {
                    continue;
                }
                let on: Vec<usize> = (0..n).filter(|&l| signed[l].abs() <= EPS_GEO).collect();
                let outward = if pos { [-normal[0], -normal[1], -normal[2]] } else { normal };
                facets.entry(on).or_insert(outward);
            }
        }
    }
    let mut vertices = BTreeSet::new();
    let mut edges = BTreeSet::new();
    let mut faces2 = Vec::new();
    for (on, normal) in facets {
        let ring: Vec<usize> = if on.len() == 3 {
            on.clone()
        } else {
            out.near_degenerate = true;
            let sub: Vec<&[f64]> = on.iter().map(|&l| points[l]).collect();
            let frame = affine_frame(&sub);
            let (ring, _) = hull2d(&planar_coords(&sub, &frame));
            ring.into_iter().map(|t| on[t]).collect()
        };
        let m = ring.len();
        for t in 0..m {
            vertices.insert(ring[t]);
            edges.insert(sorted(vec![ring[t], ring[(t + 1) % m]]));
        }
        faces2.push(sorted(ring));
        out.normals.push(normal);
    }
    out.faces[0] = vertices.into_iter().map(|v| vec![v]).collect();
    out.faces[1] = edges.into_iter().collect();
    faces2.sort();
    out.faces[2] = faces2;
}

/// Convex hull of points in R^2 or R^3 with per-dimension face counts.
///
/// A hull of affine dimension `k < d` reports its own faces of dimension
/// `0..=k`, the hull itself included.
pub fn convex_hull(points: &[Point]) -> Result<HullSummary> {
    let refs: Vec<&[f64]> = points.iter().map(|p| p.coords()).collect();
    let faces = hull_faces(&refs)?;
    let d = points.first().map_or(0, |p| p.dim());
    let face_counts = (0..d).map(|k| faces.faces[k].len()).collect();
    let vertices = faces.vertex_indices().into_iter().map(|i| points[i].clone()).collect();
    Ok(HullSummary {
        dim_of_hull: faces.dim,
        face_counts,
        vertices,
        near_degenerate: faces.near_degenerate,
    })
}

/// The farthest pair of a point set; indices refer to the input slice.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FarthestPair {
    /// The `≺`-smaller point of the pair.
    pub first: usize,
    pub second: usize,
    pub distance: f64,
}

pub(crate) fn farthest_pair_of(points: &[&[f64]]) -> Result<FarthestPair> {
    if points.len() < 2 {
        return Err(Error::TooFewPoints { what: "farthest pair", needed: 2, got: points.len() });
    }
    let ordered = |i: usize, j: usize| if lex_cmp(points[i], points[j]).is_lt() { (i, j) } else { (j, i) };
    let (a, b) = ordered(0, 1);
    let mut best = FarthestPair { first: a, second: b, distance: vector::dist(points[0], points[1]) };
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d = vector::dist(points[i], points[j]);
            let (a, b) = ordered(i, j);
            let better = if (d - best.distance).abs() <= EPS_GEO {
                lex_cmp(points[a], points[best.first])
                    .then_with(|| lex_cmp(points[b], points[best.second]))
                    .is_lt()
            } else {
                d > best.distance
            };
            if better {
                best = FarthestPair { first: a, second: b, distance: d };
            }
        }
    }
    Ok(best)
}

/// Exact farthest pair by an O(n^2) scan.
pub fn farthest_pair(points: &[Point]) -> Result<FarthestPair> {
    let refs: Vec<&[f64]> = points.iter().map(|p| p.coords()).collect();
    for p in &refs {
        check_dims(refs[0], p)?;
    }
    farthest_pair_of(&refs)
}

/// Diameter of the hull of a point subset, 0 for fewer than two points.
pub(crate) fn diameter_of(points: &[&[f64]]) -> f64 {
    farthest_pair_of(points).map_or(0.0, |p| p.distance)
}

/// Width of a point set together with a direction attaining it.
#[derive(Clone, Debug, PartialEq)]
pub struct Width {
    pub value: f64,
    pub direction: Vec<f64>,
}

pub(crate) fn directional_width(points: &[&[f64]], u: &[f64]) -> f64 {
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for p in points {
        let t = vector::dot(p, u);
        lo = lo.min(t);
        hi = hi.max(t);
    }
    hi - lo
}

pub(crate) fn width_of(points: &[&[f64]]) -> Result<Width> {
    let Some(first) = points.first() else {
        return Err(Error::EmptyInput);
    };
    let d = first.len();
    check_hull_dim(d)?;
    let faces = hull_faces(points)?;
    if faces.dim != Some(d) {
        let frame = affine_frame(points);
        let normal = vector::complement_basis(&frame, d).swap_remove(0);
        return Ok(Width { value: 0.0, direction: normal });
    }
    let mut best = Width { value: f64::INFINITY, direction: Vec::new() };
    let mut consider = |u: Vec<f64>, verts: &[&[f64]]| {
        let w = directional_width(verts, &u);
        if w < best.value {
            best = Width { value: w, direction: u };
        }
    };
    if d == 2 {
        let ring = &faces.ring;
        let verts: Vec<&[f64]> = ring.iter().map(|&i| points[i]).collect();
        for t in 0..ring.len() {
            let e = vector::sub(points[ring[(t + 1) % ring.len()]], points[ring[t]]);
            let len = vector::norm(&e);
            consider(vec![-e[1] / len, e[0] / len], &verts);
        }
    } else {
        let vidx = faces.vertex_indices();
        let verts: Vec<&[f64]> = vidx.iter().map(|&i| points[i]).collect();
        for n in &faces.normals {
            consider(n.to_vec(), &verts);
        }
        let dirs: Vec<Vec<f64>> = faces.faces[1]
            .iter()
            .map(|e| vector::sub(points[e[1]], points[e[0]]))
            .collect();
        for a in 0..dirs.len() {
            for b in a + 1..dirs.len() {
                let c = vector::cross3(&dirs[a], &dirs[b]);
                let len = vector::norm(&c);
                if len <= EPS_GEO {
                    continue;
                }
                consider(c.iter().map(|x| x / len).collect(), &verts);
            }
        }
    }
    Ok(best)
}

/// Exact width of a point set in R^2 or R^3. Point sets contained in a
/// hyperplane have width 0.
pub fn pointset_width(points: &[Point]) -> Result<Width> {
    let refs: Vec<&[f64]> = points.iter().map(|p| p.coords()).collect();
    if let Some(first) = refs.first() {
        for p in &refs {
            check_dims(first, p)?;
        }
    }
    width_of(&refs)
}
