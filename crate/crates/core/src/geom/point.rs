use std::cmp::Ordering;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use super::vector;
use crate::error::{Error, Result};
use crate::EPS_GEO;

/// A point in R^d with finite coordinates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if let Some((position, &value)) = coords.iter().enumerate().find(|(_, c)| !c.is_finite()) {
            return Err(Error::NonFinite { position, value });
        }
        Ok(Point(coords))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.0
    }

    pub fn dist(&self, other: &Point) -> f64 {
        vector::dist(&self.0, &other.0)
    }
}

impl Deref for Point {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl TryFrom<Vec<f64>> for Point {
    type Error = Error;

    fn try_from(coords: Vec<f64>) -> Result<Self> {
        Point::new(coords)
    }
}

impl From<Point> for Vec<f64> {
    fn from(p: Point) -> Vec<f64> {
        p.0
    }
}

pub(crate) fn check_dims(a: &[f64], b: &[f64]) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch { expected: a.len(), found: b.len() });
    }
    Ok(())
}

/// Lexicographic comparison of coordinate tuples. Coordinates are finite, so
/// this is a total order.
pub(crate) fn lex_cmp(a: &[f64], b: &[f64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.partial_cmp(y) {
            Some(Ordering::Equal) | None => continue,
            Some(o) => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// The strict order `a ≺ b`.
pub fn lex_less(a: &Point, b: &Point) -> Result<bool> {
    check_dims(a, b)?;
    Ok(lex_cmp(a, b) == Ordering::Less)
}

/// Distance-then-lex order with tolerance: `a` precedes `c` when it is
/// closer by more than `EPS_GEO`, or when the distances agree within
/// `EPS_GEO` and `a ≺ c`.
#[inline]
pub(crate) fn precedes_by(da: f64, dc: f64, a: &[f64], c: &[f64]) -> bool {
    if (da - dc).abs() <= EPS_GEO {
        lex_cmp(a, c) == Ordering::Less
    } else {
        da < dc
    }
}

/// Same as [`precedes_by`] with the lexicographic tie-break given by
/// precomputed ranks.
#[inline]
pub(crate) fn precedes_ranked(da: f64, dc: f64, rank_a: usize, rank_c: usize) -> bool {
    if (da - dc).abs() <= EPS_GEO {
        rank_a < rank_c
    } else {
        da < dc
    }
}

/// `a ≺_anchor c`: `a` is closer to `anchor` than `c` is, ties broken by `≺`.
pub fn prec_anchor(a: &Point, c: &Point, anchor: &Point) -> Result<bool> {
    check_dims(a, c)?;
    check_dims(a, anchor)?;
    Ok(precedes_by(vector::dist(a, anchor), vector::dist(c, anchor), a, c))
}

/// Rank of every point under `≺` (0 = smallest).
pub(crate) fn lex_ranks<P: Deref<Target = [f64]>>(points: &[P]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| lex_cmp(&points[i], &points[j]));
    let mut rank = vec![0; points.len()];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[f64]) -> Point {
        Point::new(c.to_vec()).unwrap()
    }

    #[test]
    fn lex_examples() {
        assert!(lex_less(&p(&[0.0, 1.0]), &p(&[1.0, 0.0])).unwrap());
        assert!(!lex_less(&p(&[1.0, 1.0]), &p(&[1.0, 1.0])).unwrap());
        assert!(lex_less(&p(&[1.0, 0.0]), &p(&[1.0, 1.0])).unwrap());
        assert_eq!(
            lex_less(&p(&[1.0]), &p(&[1.0, 2.0])),
            Err(Error::DimensionMismatch { expected: 1, found: 2 })
        );
    }

    #[test]
    fn anchor_examples() {
        assert!(prec_anchor(&p(&[0.0, 0.0]), &p(&[2.0, 0.0]), &p(&[0.0, 1.0])).unwrap());
        assert!(!prec_anchor(&p(&[1.0, 0.0]), &p(&[-1.0, 0.0]), &p(&[0.0, 0.0])).unwrap());
        let a = p(&[3.0, 4.0]);
        assert!(!prec_anchor(&a, &a, &p(&[0.0, 0.0])).unwrap());
    }

    #[test]
    fn rejects_nan() {
        assert!(matches!(Point::new(vec![0.0, f64::NAN]), Err(Error::NonFinite { position: 1, .. })));
    }

    #[test]
    fn ranks_follow_lex_order() {
        let pts = vec![p(&[1.0, 0.0]), p(&[0.0, 5.0]), p(&[1.0, -1.0])];
        assert_eq!(lex_ranks(&pts), vec![2, 0, 1]);
    }
}
