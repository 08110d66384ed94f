use super::membership::{mem_1d, mem_2d};
use crate::dataset::StochasticDataset;
use crate::error::{Error, Result};
use crate::geom::{complement_frame, coords_in};

/// Probability that the simplex with the given vertex indices is a face of
/// the random hull: all vertices present, and the image of the simplex not
/// covered by the other present points after projecting along it.
///
/// Supports facets (`k = d-1`, membership on a line) and ridges (`k = d-2`,
/// membership in the plane).
pub fn face_prob(ds: &StochasticDataset, simplex: &[usize]) -> Result<f64> {
    let d = ds.dim();
    for (i, &v) in simplex.iter().enumerate() {
        ds.check_index(v)?;
        if simplex[..i].contains(&v) {
            return Err(Error::InvalidArgument(format!("vertex {v} repeated in simplex")));
        }
    }
    let k = simplex.len().checked_sub(1).ok_or(Error::EmptyInput)?;
    if k >= d {
        return Err(Error::InvalidArgument(format!("a face in R^{d} has at most {d} vertices")));
    }
    if k + 3 <= d {
        return Err(Error::UnsupportedDimension {
            dim: d,
            reason: "face probabilities need k in {d-1, d-2}: membership is implemented on lines and planes only",
        });
    }
    let pts = ds.coords();
    let spanning: Vec<&[f64]> = simplex.iter().map(|&v| pts[v]).collect();
    let frame = complement_frame(&spanning)?;
    let image = coords_in(&frame, spanning[0]);
    let others: Vec<usize> = (0..ds.len()).filter(|a| !simplex.contains(a)).collect();
    let probs: Vec<f64> = others.iter().map(|&a| ds.prob(a)).collect();
    let mem = if frame.len() == 1 {
        let xs: Vec<f64> = others.iter().map(|&a| coords_in(&frame, pts[a])[0]).collect();
        mem_1d(&xs, &probs, image[0])?
    } else {
        let proj: Vec<[f64; 2]> = others
            .iter()
            .map(|&a| {
                let c = coords_in(&frame, pts[a]);
                [c[0], c[1]]
            })
            .collect();
        mem_2d(&proj, &probs, [image[0], image[1]])?
    };
    let present: f64 = simplex.iter().map(|&v| ds.prob(v)).product();
    Ok(present * (1.0 - mem))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle(p: f64) -> StochasticDataset {
        StochasticDataset::from_rows(vec![vec![0.0, 0.0], vec![4.0, 0.0], vec![0.0, 4.0]], vec![p; 3]).unwrap()
    }

    #[test]
    fn triangle_faces() {
        let ds = triangle(0.5);
        for e in [[0, 1], [1, 2], [0, 2]] {
            assert!((face_prob(&ds, &e).unwrap() - 0.25).abs() < 1e-15);
        }
        for v in 0..3 {
            assert!((face_prob(&ds, &[v]).unwrap() - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn dominated_vertex() {
        let ds = StochasticDataset::from_rows(
            vec![vec![0.0, 0.0], vec![4.0, 0.0], vec![0.0, 4.0], vec![1.0, 1.0]],
            vec![1.0; 4],
        )
        .unwrap();
        assert_eq!(face_prob(&ds, &[3]).unwrap(), 0.0);
        assert_eq!(face_prob(&ds, &[0, 3]).unwrap(), 0.0);
        assert_eq!(face_prob(&ds, &[0, 1]).unwrap(), 1.0);
    }

    #[test]
    fn rejects_bad_simplices() {
        let ds = triangle(0.5);
        assert!(face_prob(&ds, &[0, 0]).is_err());
        assert!(face_prob(&ds, &[0, 1, 2]).is_err());
        assert!(face_prob(&ds, &[]).is_err());
        let d4 = StochasticDataset::from_rows(
            vec![vec![0.0, 0.0, 0.0, 0.0], vec![1.0, 0.0, 0.0, 0.0]],
            vec![0.5; 2],
        )
        .unwrap();
        assert!(matches!(face_prob(&d4, &[0]), Err(Error::UnsupportedDimension { .. })));
    }
}
