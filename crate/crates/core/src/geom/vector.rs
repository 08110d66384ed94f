//! Small dense-vector helpers over `&[f64]`.
//!
//! Dimensions here are tiny (mostly 2 or 3, at most a few dozen), so plain
//! slices beat pulling in a linear-algebra crate.

pub(crate) fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub(crate) fn dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

pub(crate) fn dist(a: &[f64], b: &[f64]) -> f64 {
    dist2(a, b).sqrt()
}

pub(crate) fn scale(a: &[f64], s: f64) -> Vec<f64> {
    a.iter().map(|x| x * s).collect()
}

/// `a + s * b`
pub(crate) fn axpy(a: &[f64], s: f64, b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + s * y).collect()
}

pub(crate) fn cross3(a: &[f64], b: &[f64]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub(crate) fn cross2(a: &[f64], b: &[f64]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

/// Removes from `v` its components along the orthonormal vectors in `basis`.
pub(crate) fn reject(v: &[f64], basis: &[Vec<f64>]) -> Vec<f64> {
    let mut r = v.to_vec();
    for b in basis {
        let c = dot(&r, b);
        for (ri, bi) in r.iter_mut().zip(b) {
            *ri -= c * bi;
        }
    }
    r
}

/// Gram-Schmidt. Returns `None` when some vector has a residual of norm at
/// most `tol` after rejection against the previous ones.
pub(crate) fn orthonormalize(vectors: &[Vec<f64>], tol: f64) -> Option<Vec<Vec<f64>>> {
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(vectors.len());
    for v in vectors {
        // two passes keep the basis orthogonal to machine precision
        let r = reject(&reject(v, &basis), &basis);
        let len = norm(&r);
        if len <= tol {
            return None;
        }
        basis.push(scale(&r, 1.0 / len));
    }
    Some(basis)
}

/// Extends an orthonormal family in R^dim to an orthonormal basis of the
/// orthogonal complement, returning only the new vectors.
pub(crate) fn complement_basis(basis: &[Vec<f64>], dim: usize) -> Vec<Vec<f64>> {
    let mut all: Vec<Vec<f64>> = basis.to_vec();
    let mut out = Vec::with_capacity(dim - basis.len());
    // pick the standard axes that survive rejection best, one at a time
    while all.len() < dim {
        let mut best: Option<Vec<f64>> = None;
        let mut best_len = 0.0;
        for axis in 0..dim {
            let mut e = vec![0.0; dim];
            e[axis] = 1.0;
            let r = reject(&reject(&e, &all), &all);
            let len = norm(&r);
            if len > best_len + 1e-12 {
                best_len = len;
                best = Some(r);
            }
        }
        let r = best.expect("standard basis always spans the complement");
        let u = scale(&r, 1.0 / best_len);
        all.push(u.clone());
        out.push(u);
    }
    out
}

/// Affine dimension of a point family, with residual tolerance `tol`.
pub(crate) fn affine_dim(points: &[&[f64]], tol: f64) -> Option<usize> {
    let first = points.first()?;
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for p in &points[1..] {
        let r = reject(&reject(&sub(p, first), &basis), &basis);
        let len = norm(&r);
        if len > tol {
            basis.push(scale(&r, 1.0 / len));
        }
    }
    Some(basis.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_is_orthonormal() {
        let b = orthonormalize(&[vec![1.0, 1.0, 0.0]], 1e-12).unwrap();
        let c = complement_basis(&b, 3);
        assert_eq!(c.len(), 2);
        for u in &c {
            assert!((norm(u) - 1.0).abs() < 1e-12);
            assert!(dot(u, &b[0]).abs() < 1e-12);
        }
        assert!(dot(&c[0], &c[1]).abs() < 1e-12);
    }

    #[test]
    fn affine_dim_of_collinear() {
        let pts = [[0.0, 0.0], [1.0, 1.0], [2.0, 2.0]];
        let refs: Vec<&[f64]> = pts.iter().map(|p| &p[..]).collect();
        assert_eq!(affine_dim(&refs, 1e-9), Some(1));
        assert_eq!(affine_dim(&[], 1e-9), None);
    }
}
