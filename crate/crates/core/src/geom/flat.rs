use super::point::{check_dims, precedes_by, Point};
use super::vector;
use crate::error::{Error, Result};
use crate::EPS_GEO;

/// An affine flat: `base + span(basis)` with an orthonormal `basis`.
#[derive(Clone, Debug, PartialEq)]
pub struct Flat {
    base: Vec<f64>,
    basis: Vec<Vec<f64>>,
}

impl Flat {
    /// The flat through the given points. Fails when the points are
    /// affinely dependent within `EPS_GEO` or would span all of R^d.
    pub fn through(points: &[&[f64]]) -> Result<Flat> {
        let (first, rest) = points.split_first().ok_or(Error::EmptyInput)?;
        let dim = first.len();
        for p in rest {
            check_dims(first, p)?;
        }
        if rest.len() >= dim {
            return Err(Error::InvalidArgument(format!(
                "{} points span a flat of dimension >= ambient dimension {dim}",
                points.len()
            )));
        }
        let diffs: Vec<Vec<f64>> = rest.iter().map(|p| vector::sub(p, first)).collect();
        let basis = vector::orthonormalize(&diffs, EPS_GEO)
            .ok_or_else(|| Error::Degenerate("points defining the flat are affinely dependent".into()))?;
        Ok(Flat { base: first.to_vec(), basis })
    }

    pub fn base(&self) -> &[f64] {
        &self.base
    }

    pub fn basis(&self) -> &[Vec<f64>] {
        &self.basis
    }

    /// Dimension of the flat.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.base.len()
    }

    pub(crate) fn distance_to(&self, p: &[f64]) -> f64 {
        vector::norm(&vector::reject(&vector::sub(p, &self.base), &self.basis))
    }
}

/// Euclidean distance from `p` to the flat.
pub fn dist_point_flat(p: &Point, flat: &Flat) -> Result<f64> {
    check_dims(flat.base(), p)?;
    Ok(flat.distance_to(p))
}

/// `a ≺_H b`: `a` is closer to the flat, ties within `EPS_GEO` broken by `≺`.
pub fn prec_flat(a: &Point, b: &Point, flat: &Flat) -> Result<bool> {
    check_dims(a, b)?;
    check_dims(flat.base(), a)?;
    Ok(precedes_by(flat.distance_to(a), flat.distance_to(b), a, b))
}

/// Result of projecting onto the orthogonal complement of a simplex's span.
#[derive(Clone, Debug, PartialEq)]
pub struct Projection {
    /// Images of the input points, in an orthonormal frame of the complement.
    pub projected: Vec<Point>,
    /// The common image of every spanning point.
    pub image_of_span: Point,
}

/// Orthonormal frame of the complement of `span{y_i - y_0}`.
pub(crate) fn complement_frame(spanning: &[&[f64]]) -> Result<Vec<Vec<f64>>> {
    let (first, rest) = spanning.split_first().ok_or(Error::EmptyInput)?;
    let dim = first.len();
    for p in rest {
        check_dims(first, p)?;
    }
    if rest.len() >= dim {
        return Err(Error::InvalidArgument("spanning set must have at most d points".into()));
    }
    let diffs: Vec<Vec<f64>> = rest.iter().map(|p| vector::sub(p, first)).collect();
    let span = vector::orthonormalize(&diffs, EPS_GEO)
        .ok_or_else(|| Error::Degenerate("spanning points are affinely dependent".into()))?;
    Ok(vector::complement_basis(&span, dim))
}

pub(crate) fn coords_in(frame: &[Vec<f64>], p: &[f64]) -> Vec<f64> {
    frame.iter().map(|b| vector::dot(b, p)).collect()
}

/// Orthogonal projection of `points` onto the orthogonal complement of the
/// linear span of `{y_i - y_0}` for `spanning = (y_0, ..., y_k)`.
pub fn project_orthocomplement(points: &[Point], spanning: &[Point]) -> Result<Projection> {
    let refs: Vec<&[f64]> = spanning.iter().map(|p| p.coords()).collect();
    let frame = complement_frame(&refs)?;
    let mut projected = Vec::with_capacity(points.len());
    for p in points {
        check_dims(&spanning[0], p)?;
        projected.push(Point::new(coords_in(&frame, p))?);
    }
    let image_of_span = Point::new(coords_in(&frame, &spanning[0]))?;
    Ok(Projection { projected, image_of_span })
}
