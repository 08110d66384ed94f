//! Ground truth by exhaustive enumeration of all `2^n` realizations.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dataset::StochasticDataset;
use crate::error::{Error, Result};
use crate::geom::{diameter_of, hull_faces, width_of};

/// Largest dataset the enumeration accepts (about 4.2M realizations).
pub const ORACLE_LIMIT: usize = 22;

const BLOCK_BITS: u32 = 12;

/// A statistic of the random hull.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistic {
    Diameter,
    Width,
    Complexity,
}

impl Statistic {
    pub fn name(self) -> &'static str {
        match self {
            Statistic::Diameter => "diameter",
            Statistic::Width => "width",
            Statistic::Complexity => "complexity",
        }
    }
}

impl std::str::FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "diameter" => Ok(Statistic::Diameter),
            "width" => Ok(Statistic::Width),
            "complexity" => Ok(Statistic::Complexity),
            other => Err(Error::InvalidArgument(format!("unknown statistic '{other}'"))),
        }
    }
}

fn check_size(ds: &StochasticDataset) -> Result<()> {
    if ds.len() > ORACLE_LIMIT {
        return Err(Error::TooLarge { n: ds.len(), limit: ORACLE_LIMIT });
    }
    Ok(())
}

/// Folds every realization of a block into an accumulator.
fn fold_block<A>(ds: &StochasticDataset, start: u64, end: u64, acc: &mut A, f: &(dyn Fn(&mut A, &[usize], f64) + Sync)) {
    let n = ds.len();
    let probs = ds.probs();
    let mut members = Vec::with_capacity(n);
    for mask in start..end {
        members.clear();
        let mut prob = 1.0;
        for (i, &p) in probs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                members.push(i);
                prob *= p;
            } else {
                prob *= 1.0 - p;
            }
        }
        f(acc, &members, prob);
    }
}

fn blocks(n: usize) -> Vec<(u64, u64)> {
    let total = 1u64 << n;
    let step = 1u64 << BLOCK_BITS;
    (0..total.div_ceil(step)).map(|b| (b * step, ((b + 1) * step).min(total))).collect()
}

/// `Σ_R Pr[R] · f(R)` over all realizations. `f` receives the indices of the
/// present points in ascending order. The summation order is fixed, so the
/// result does not depend on the thread count.
pub fn oracle_mean<F>(ds: &StochasticDataset, f: F) -> Result<f64>
where
    F: Fn(&[usize]) -> f64 + Sync,
{
    check_size(ds)?;
    let partial: Vec<f64> = blocks(ds.len())
        .into_par_iter()
        .map(|(start, end)| {
            let mut acc = 0.0;
            fold_block(ds, start, end, &mut acc, &|acc: &mut f64, members: &[usize], prob: f64| {
                if prob > 0.0 {
                    *acc += prob * f(members);
                }
            });
            acc
        })
        .collect();
    Ok(partial.iter().sum())
}

/// Exact pushforward distribution of a realization functional.
pub fn oracle_distribution<K, F>(ds: &StochasticDataset, f: F) -> Result<BTreeMap<K, f64>>
where
    K: Ord + Send,
    F: Fn(&[usize]) -> K + Sync,
{
    check_size(ds)?;
    let partial: Vec<BTreeMap<K, f64>> = blocks(ds.len())
        .into_par_iter()
        .map(|(start, end)| {
            let mut acc = BTreeMap::new();
            fold_block(ds, start, end, &mut acc, &|acc: &mut BTreeMap<K, f64>, members: &[usize], prob: f64| {
                *acc.entry(f(members)).or_insert(0.0) += prob;
            });
            acc
        })
        .collect();
    let mut out = BTreeMap::new();
    for block in partial {
        for (k, p) in block {
            *out.entry(k).or_insert(0.0) += p;
        }
    }
    Ok(out)
}

/// The statistic evaluated on one realization, empty realizations giving 0.
pub fn realization_statistic(ds: &StochasticDataset, members: &[usize], stat: Statistic) -> Result<f64> {
    let pts: Vec<&[f64]> = members.iter().map(|&i| ds.point(i).coords()).collect();
    if pts.is_empty() {
        return Ok(0.0);
    }
    Ok(match stat {
        Statistic::Diameter => diameter_of(&pts),
        Statistic::Width => width_of(&pts)?.value,
        Statistic::Complexity => hull_faces(&pts)?.faces.iter().map(Vec::len).sum::<usize>() as f64,
    })
}

/// Exact expectation of a statistic by enumerating every realization.
pub fn oracle_expectation(ds: &StochasticDataset, stat: Statistic) -> Result<f64> {
    check_size(ds)?;
    if stat != Statistic::Diameter && !(ds.dim() == 2 || ds.dim() == 3) {
        return Err(Error::UnsupportedDimension {
            dim: ds.dim(),
            reason: "width and complexity oracles need d in {2, 3}",
        });
    }
    oracle_mean(ds, |members| {
        realization_statistic(ds, members, stat).expect("dimension checked before enumeration")
    })
}
