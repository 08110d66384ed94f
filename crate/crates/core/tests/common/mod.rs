#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stochastic_hull::{Point, StochasticDataset};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_points(rng: &mut impl Rng, n: usize, d: usize) -> Vec<Point> {
    (0..n)
        .map(|_| Point::new((0..d).map(|_| rng.random::<f64>()).collect()).unwrap())
        .collect()
}

pub fn random_dataset(rng: &mut impl Rng, n: usize, d: usize) -> StochasticDataset {
    let points = random_points(rng, n, d);
    let probs = (0..n).map(|_| rng.random_range(0.1..=1.0)).collect();
    StochasticDataset::new(d, points, probs).unwrap()
}

/// Every subset as `(members, probability)`.
pub fn realizations(ds: &StochasticDataset) -> Vec<(Vec<usize>, f64)> {
    let n = ds.len();
    (0u32..1 << n)
        .map(|mask| {
            let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let p = (0..n)
                .map(|i| if mask >> i & 1 == 1 { ds.prob(i) } else { 1.0 - ds.prob(i) })
                .product();
            (members, p)
        })
        .collect()
}

pub fn select(ds: &StochasticDataset, members: &[usize]) -> Vec<Point> {
    members.iter().map(|&i| ds.point(i).clone()).collect()
}

pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

pub fn brute_diameter(points: &[Point]) -> f64 {
    let mut best: f64 = 0.0;
    for a in points {
        for b in points {
            best = best.max(dist(a, b));
        }
    }
    best
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}
