//! Stochastic datasets, realizations and seeded sampling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{vector, Point};
use crate::EPS_GEO;

/// Points in R^d, each present independently with probability in (0, 1].
/// Point `i` keeps index `i` for the lifetime of the dataset.
#[derive(Clone, Debug, PartialEq)]
pub struct StochasticDataset {
    dim: usize,
    points: Vec<Point>,
    probs: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct PointRecord {
    coords: Vec<f64>,
    prob: f64,
}

#[derive(Serialize, Deserialize)]
struct DatasetRecord {
    dim: usize,
    points: Vec<PointRecord>,
}

impl StochasticDataset {
    pub fn new(dim: usize, points: Vec<Point>, probs: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument("dimension must be at least 1".into()));
        }
        if points.len() != probs.len() {
            return Err(Error::InvalidArgument(format!(
                "{} points but {} probabilities",
                points.len(),
                probs.len()
            )));
        }
        for (index, (p, &prob)) in points.iter().zip(&probs).enumerate() {
            if p.dim() != dim {
                return Err(Error::InvalidPoint {
                    index,
                    reason: format!("has {} coordinates, dataset dimension is {dim}", p.dim()),
                });
            }
            if !(prob > 0.0 && prob <= 1.0) {
                return Err(Error::InvalidProbability { index, prob });
            }
        }
        for index in 0..points.len() {
            for other in 0..index {
                if vector::dist(&points[index], &points[other]) <= EPS_GEO {
                    return Err(Error::DuplicatePoint { index, other });
                }
            }
        }
        Ok(StochasticDataset { dim, points, probs })
    }

    /// Builds a dataset from raw coordinate rows.
    pub fn from_rows(rows: Vec<Vec<f64>>, probs: Vec<f64>) -> Result<Self> {
        let dim = rows.first().map_or(0, |r| r.len());
        let mut points = Vec::with_capacity(rows.len());
        for (index, r) in rows.into_iter().enumerate() {
            points.push(Point::new(r).map_err(|e| Error::InvalidPoint { index, reason: e.to_string() })?);
        }
        Self::new(dim, points, probs)
    }

    /// Parses the JSON dataset format
    /// `{"dim": d, "points": [{"coords": [...], "prob": p}, ...]}`.
    /// Unknown top-level fields are ignored.
    pub fn from_json(text: &str) -> Result<Self> {
        let rec: DatasetRecord = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut points = Vec::with_capacity(rec.points.len());
        let mut probs = Vec::with_capacity(rec.points.len());
        for (index, p) in rec.points.into_iter().enumerate() {
            points.push(Point::new(p.coords).map_err(|e| Error::InvalidPoint { index, reason: e.to_string() })?);
            probs.push(p.prob);
        }
        Self::new(rec.dim, points, probs)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let rec = DatasetRecord {
            dim: self.dim,
            points: self
                .points
                .iter()
                .zip(&self.probs)
                .map(|(p, &prob)| PointRecord { coords: p.coords().to_vec(), prob })
                .collect(),
        };
        serde_json::to_value(rec).expect("dataset serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("dataset serializes")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn prob(&self, i: usize) -> f64 {
        self.probs[i]
    }

    pub(crate) fn coords(&self) -> Vec<&[f64]> {
        self.points.iter().map(|p| p.coords()).collect()
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<()> {
        if index < self.len() {
            Ok(())
        } else {
            Err(Error::InvalidIndex { index, len: self.len() })
        }
    }
}

/// A realization: the indices of the points that are present, ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Realization {
    indices: Vec<usize>,
}

impl Realization {
    pub fn new(ds: &StochasticDataset, mut indices: Vec<usize>) -> Result<Self> {
        indices.sort_unstable();
        indices.dedup();
        for &i in &indices {
            ds.check_index(i)?;
        }
        Ok(Realization { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }
}

/// Seed for a deterministic family of random streams.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RngSeed(pub u64);

impl RngSeed {
    /// Independent stream number `stream` under this seed.
    pub fn stream(self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.0);
        rng.set_stream(stream);
        rng
    }
}

/// Draws a realization: each point independently with its probability.
pub fn sample_realization<R: Rng + ?Sized>(ds: &StochasticDataset, rng: &mut R) -> Realization {
    let indices = (0..ds.len()).filter(|&i| rng.random::<f64>() < ds.prob(i)).collect();
    Realization { indices }
}

/// `Pr[R]`: product of `π` over present points and `1 - π` over absent ones.
pub fn realization_prob(ds: &StochasticDataset, r: &Realization) -> f64 {
    let mut prob = 1.0;
    let mut next = r.indices.iter().peekable();
    for i in 0..ds.len() {
        if next.peek() == Some(&&i) {
            next.next();
            prob *= ds.prob(i);
        } else {
            prob *= 1.0 - ds.prob(i);
        }
    }
    prob
}
