mod common;

use common::*;
use rand::Rng;
use stochastic_hull::geom::pointset_width;
use stochastic_hull::oracle::{oracle_expectation, oracle_mean, Statistic};
use stochastic_hull::width::*;
use stochastic_hull::{RngSeed, StochasticDataset};

fn ordered_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for t in out {
            for i in (0..n).filter(|i| !t.contains(i)) {
                let mut u = t.clone();
                u.push(i);
                next.push(u);
            }
        }
        out = next;
    }
    out
}

fn naive_width_sum(ds: &StochasticDataset) -> (f64, f64) {
    let (mut weighted, mut mass) = (0.0, 0.0);
    for list in ordered_tuples(ds.len(), ds.dim() + 1) {
        let p = witness_simplex_prob(ds, &list).unwrap();
        if p > 0.0 {
            let verts = select(ds, &list);
            weighted += p * simplex_width(&verts).unwrap();
            mass += p;
        }
    }
    (weighted, mass)
}

fn realization_simplex_width(ds: &StochasticDataset, members: &[usize]) -> f64 {
    match witness_simplex(&select(ds, members)) {
        Ok(s) => simplex_width(&select(ds, &s.vertex_list.iter().map(|&i| members[i]).collect::<Vec<_>>())).unwrap(),
        Err(_) => 0.0,
    }
}

#[test]
fn simplex_width_brackets_pointset_width() {
    let mut r = rng(21);
    for d in [2, 3] {
        let c1 = width_constant(d);
        for _ in 0..60 {
            let n = r.random_range(d + 1..20);
            let pts = random_points(&mut r, n, d);
            let s = witness_simplex(&pts).unwrap();
            let verts = select_points(&pts, &s.vertex_list);
            let ws = simplex_width(&verts).unwrap();
            let w = pointset_width(&pts).unwrap().value;
            assert!(ws <= w * (1.0 + 1e-12) && ws >= c1 * w * (1.0 - 1e-12), "{ws} {w}");
            assert_eq!(recover_vertex_list(&pts, &s.vertices()).unwrap(), s.vertex_list);
        }
    }
}

fn select_points(pts: &[stochastic_hull::Point], idx: &[usize]) -> Vec<stochastic_hull::Point> {
    idx.iter().map(|&i| pts[i].clone()).collect()
}

#[test]
fn grouped_matches_naive_and_oracle() {
    let mut r = rng(22);
    for (d, n) in [(2, 6), (2, 8), (3, 6), (3, 7)] {
        let ds = random_dataset(&mut r, n, d);
        let grouped = expected_width_witness(&ds).unwrap();
        let (naive, mass) = naive_width_sum(&ds);
        assert!((grouped - naive).abs() <= 1e-12, "{grouped} vs {naive}");
        let oracle = oracle_mean(&ds, |m| realization_simplex_width(&ds, m)).unwrap();
        assert!((grouped - oracle).abs() <= 1e-9);
        let wid = oracle_expectation(&ds, Statistic::Width).unwrap();
        assert!(grouped <= wid * (1.0 + 1e-12) && grouped >= width_constant(d) * wid);
        // generic points: a realization has a witness simplex iff it has d+1 points
        let full: f64 = realizations(&ds).iter().filter(|(m, _)| m.len() > d).map(|(_, p)| p).sum();
        assert!((mass - full).abs() < 1e-12);
    }
}

#[test]
fn fpras_is_reproducible_and_exact_when_certain() {
    let mut r = rng(23);
    let ds = random_dataset(&mut r, 7, 2);
    let cfg = FprasConfig { epsilon: 0.2, gamma_override: Some(2.0), seed: RngSeed(9) };
    let a = expected_width_fpras(&ds, &cfg).unwrap();
    let b = expected_width_fpras(&ds, &cfg).unwrap();
    assert_eq!(a.to_bits(), b.to_bits());
    let other = expected_width_fpras(&ds, &FprasConfig { seed: RngSeed(10), ..cfg }).unwrap();
    assert_ne!(a.to_bits(), other.to_bits());

    let certain = StochasticDataset::new(3, random_points(&mut r, 8, 3), vec![1.0; 8]).unwrap();
    let exact = pointset_width(certain.points()).unwrap().value;
    assert!((expected_width_fpras(&certain, &cfg).unwrap() - exact).abs() < 1e-12);
}

#[test]
fn fpras_tracks_the_oracle() {
    let mut r = rng(24);
    let ds = random_dataset(&mut r, 8, 2);
    let oracle = oracle_expectation(&ds, Statistic::Width).unwrap();
    let mut hits = 0;
    for seed in 0..10 {
        let cfg = FprasConfig { epsilon: 0.1, gamma_override: Some(1.0), seed: RngSeed(seed) };
        let v = expected_width_fpras(&ds, &cfg).unwrap();
        if (v - oracle).abs() <= 0.1 * oracle {
            hits += 1;
        }
    }
    assert!(hits >= 7, "{hits} of 10 within tolerance");
}
