use crate::dataset::StochasticDataset;
use crate::error::{Error, Result};
use crate::geom::{check_dims, lex_cmp, precedes_by, vector, Flat, Point};
use crate::EPS_GEO;

use super::check_width_dim;

/// A witness simplex, as indices into the point set it was built from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WitnessSimplex {
    /// `(v_0, ..., v_d)` in construction order.
    pub vertex_list: Vec<usize>,
}

impl WitnessSimplex {
    /// The vertex indices in increasing order.
    pub fn vertices(&self) -> Vec<usize> {
        let mut v = self.vertex_list.clone();
        v.sort_unstable();
        v
    }

    pub fn dim(&self) -> usize {
        self.vertex_list.len() - 1
    }
}

/// Among `members`, the index maximizing the distance to `flat`, ties
/// within `EPS_GEO` going to the `≺`-largest. `None` if every member lies
/// within `EPS_GEO` of the flat.
fn farthest_from_flat(points: &[&[f64]], members: &[usize], flat: &Flat) -> Option<usize> {
    let dists: Vec<f64> = members.iter().map(|&i| flat.distance_to(points[i])).collect();
    let dmax = dists.iter().copied().fold(0.0, f64::max);
    if dmax <= EPS_GEO {
        return None;
    }
    members
        .iter()
        .zip(&dists)
        .filter(|&(_, &d)| d >= dmax - EPS_GEO)
        .map(|(&i, _)| i)
        .max_by(|&a, &b| lex_cmp(points[a], points[b]))
}

/// Vertex list of the witness simplex of `points[members]`, or `None` when
/// they are contained in a hyperplane (up to `EPS_GEO`).
pub(crate) fn witness_simplex_of(points: &[&[f64]], members: &[usize]) -> Option<Vec<usize>> {
    let dim = points.first()?.len();
    let v0 = *members.iter().max_by(|&&a, &&b| lex_cmp(points[a], points[b]))?;
    let mut list = vec![v0];
    while list.len() <= dim {
        let refs: Vec<&[f64]> = list.iter().map(|&i| points[i]).collect();
        let flat = Flat::through(&refs).ok()?;
        list.push(farthest_from_flat(points, members, &flat)?);
    }
    Some(list)
}

fn point_refs(points: &[Point]) -> Result<Vec<&[f64]>> {
    let refs: Vec<&[f64]> = points.iter().map(|p| p.coords()).collect();
    let first = refs.first().ok_or(Error::EmptyInput)?;
    for p in &refs {
        check_dims(first, p)?;
    }
    Ok(refs)
}

/// Witness simplex of a point set in R^2 or R^3.
pub fn witness_simplex(points: &[Point]) -> Result<WitnessSimplex> {
    let refs = point_refs(points)?;
    check_width_dim(refs[0].len())?;
    let members: Vec<usize> = (0..refs.len()).collect();
    witness_simplex_of(&refs, &members)
        .map(|vertex_list| WitnessSimplex { vertex_list })
        .ok_or_else(|| Error::Degenerate("points lie in a common hyperplane; the width is 0".into()))
}

/// Rebuilds the vertex list from the unordered vertex set: the witness
/// simplex of its own vertices is itself.
pub fn recover_vertex_list(points: &[Point], vertices: &[usize]) -> Result<Vec<usize>> {
    let refs = point_refs(points)?;
    for &v in vertices {
        if v >= refs.len() {
            return Err(Error::InvalidIndex { index: v, len: refs.len() });
        }
    }
    if vertices.len() != refs[0].len() + 1 {
        return Err(Error::InvalidArgument(format!(
            "a simplex in R^{} has {} vertices, got {}",
            refs[0].len(),
            refs[0].len() + 1,
            vertices.len()
        )));
    }
    witness_simplex_of(&refs, vertices)
        .ok_or_else(|| Error::Degenerate("simplex vertices are affinely dependent".into()))
}

/// Exact width of a nondegenerate simplex given by its `d + 1` vertices.
pub(crate) fn simplex_width_of(v: &[&[f64]]) -> f64 {
    match v.len() {
        3 => {
            let area2 = vector::cross2(&vector::sub(v[1], v[0]), &vector::sub(v[2], v[0])).abs();
            let longest = [(0, 1), (1, 2), (0, 2)]
                .iter()
                .map(|&(a, b)| vector::dist(v[a], v[b]))
                .fold(0.0, f64::max);
            area2 / longest
        }
        4 => {
            let vol6 = {
                let c = vector::cross3(&vector::sub(v[1], v[0]), &vector::sub(v[2], v[0]));
                vector::dot(&c, &vector::sub(v[3], v[0])).abs()
            };
            let faces = [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]];
            let altitudes = faces.iter().map(|f| {
                let c = vector::cross3(&vector::sub(v[f[1]], v[f[0]]), &vector::sub(v[f[2]], v[f[0]]));
                vol6 / vector::norm(&c)
            });
            let slabs = [[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]].map(|[a, b, c, d]| {
                let n = vector::cross3(&vector::sub(v[b], v[a]), &vector::sub(v[d], v[c]));
                vol6 / vector::norm(&n)
            });
            altitudes.chain(slabs).fold(f64::INFINITY, f64::min)
        }
        _ => unreachable!("simplex widths are computed for d in {{2, 3}}"),
    }
}

/// Exact width of a simplex in R^2 or R^3.
pub fn simplex_width(vertices: &[Point]) -> Result<f64> {
    let refs = point_refs(vertices)?;
    let d = refs[0].len();
    check_width_dim(d)?;
    if refs.len() != d + 1 {
        return Err(Error::InvalidArgument(format!("a simplex in R^{d} has {} vertices", d + 1)));
    }
    if vector::affine_dim(&refs, EPS_GEO) != Some(d) {
        return Err(Error::Degenerate("simplex vertices are affinely dependent".into()));
    }
    Ok(simplex_width_of(&refs))
}

/// Points that cannot be present if `list` is the witness simplex: those
/// `≻ v_0`, and those beating `v_{i+1}` in distance from the flat `E_i`.
pub(crate) fn excluded_by(points: &[&[f64]], list: &[usize]) -> Vec<bool> {
    let mut out: Vec<bool> = points.iter().map(|p| lex_cmp(points[list[0]], p).is_lt()).collect();
    for i in 0..list.len() - 1 {
        let refs: Vec<&[f64]> = list[..=i].iter().map(|&j| points[j]).collect();
        let flat = Flat::through(&refs).expect("vertex list is affinely independent");
        let next = points[list[i + 1]];
        let dn = flat.distance_to(next);
        for (a, o) in out.iter_mut().enumerate() {
            *o = *o || precedes_by(dn, flat.distance_to(points[a]), next, points[a]);
        }
    }
    out
}

/// Probability that the witness simplex of the random hull has the given
/// vertex list. Lists that the construction would never produce from their
/// own vertex set have probability 0.
pub fn witness_simplex_prob(ds: &StochasticDataset, vertex_list: &[usize]) -> Result<f64> {
    check_width_dim(ds.dim())?;
    if vertex_list.len() != ds.dim() + 1 {
        return Err(Error::InvalidArgument(format!(
            "a simplex in R^{} has {} vertices, got {}",
            ds.dim(),
            ds.dim() + 1,
            vertex_list.len()
        )));
    }
    for &v in vertex_list {
        ds.check_index(v)?;
    }
    let pts = ds.coords();
    if witness_simplex_of(&pts, vertex_list).as_deref() != Some(vertex_list) {
        return Ok(0.0);
    }
    let excluded = excluded_by(&pts, vertex_list);
    if vertex_list.iter().any(|&v| excluded[v]) {
        return Ok(0.0);
    }
    let mut prob = 1.0;
    for (a, &ex) in excluded.iter().enumerate() {
        if vertex_list.contains(&a) {
            prob *= ds.prob(a);
        } else if ex {
            prob *= 1.0 - ds.prob(a);
        }
    }
    Ok(prob)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(c: &[&[f64]]) -> Vec<Point> {
        c.iter().map(|x| Point::new(x.to_vec()).unwrap()).collect()
    }

    #[test]
    fn unit_square_simplex() {
        let sq = pts(&[&[0.0, 0.0], &[0.0, 1.0], &[1.0, 0.0], &[1.0, 1.0]]);
        let w = witness_simplex(&sq).unwrap();
        assert_eq!(w.vertex_list, vec![3, 0, 2]);
        assert_eq!(w.vertices(), vec![0, 2, 3]);
        assert_eq!(recover_vertex_list(&sq, &[0, 2, 3]).unwrap(), vec![3, 0, 2]);
    }

    #[test]
    fn collinear_has_no_simplex() {
        let line = pts(&[&[0.0, 0.0], &[1.0, 1.0], &[2.0, 2.0]]);
        assert!(matches!(witness_simplex(&line), Err(Error::Degenerate(_))));
        assert!(matches!(witness_simplex(&pts(&[&[0.0; 4]])), Err(Error::UnsupportedDimension { .. })));
    }

    #[test]
    fn triangle_widths() {
        let t = pts(&[&[0.0, 0.0], &[1.0, 0.0], &[1.0, 1.0]]);
        assert!((simplex_width(&t).unwrap() - 0.5f64.sqrt()).abs() < 1e-15);
        let eq = pts(&[&[0.0, 0.0], &[1.0, 0.0], &[0.5, 0.75f64.sqrt()]]);
        assert!((simplex_width(&eq).unwrap() - 0.75f64.sqrt()).abs() < 1e-15);
        assert!(simplex_width(&pts(&[&[0.0, 0.0], &[1.0, 0.0], &[2.0, 0.0]])).is_err());
    }

    #[test]
    fn regular_tetrahedron_width() {
        let s = 0.5f64.sqrt();
        let t = pts(&[&[s, 0.0, 0.0], &[0.0, s, 0.0], &[0.0, 0.0, s], &[s, s, s]]);
        assert!((simplex_width(&t).unwrap() - 0.5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn simplex_probabilities() {
        let ds = StochasticDataset::from_rows(
            vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]],
            vec![0.5, 0.4, 0.3],
        )
        .unwrap();
        let w = witness_simplex(ds.points()).unwrap();
        assert!((witness_simplex_prob(&ds, &w.vertex_list).unwrap() - 0.06).abs() < 1e-15);
        let mut wrong = w.vertex_list.clone();
        wrong.swap(1, 2);
        assert_eq!(witness_simplex_prob(&ds, &wrong).unwrap(), 0.0);

        let with_top = StochasticDataset::from_rows(
            vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0], vec![5.0, 5.0]],
            vec![0.5, 0.4, 0.3, 1.0],
        )
        .unwrap();
        assert_eq!(witness_simplex_prob(&with_top, &w.vertex_list).unwrap(), 0.0);
    }
}
