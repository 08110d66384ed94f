use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};
use stochastic_hull::complexity::expected_complexity;
use stochastic_hull::diameter::{expected_diameter_two_approx, expected_diameter_witness, WITNESS_FACTOR};
use stochastic_hull::oracle::{oracle_expectation, Statistic};
use stochastic_hull::width::{expected_width_fpras, expected_width_witness, width_constant, FprasConfig};
use stochastic_hull::{RngSeed, StochasticDataset};

use crate::{ComputeArgs, EstimateArgs, Failure, Format, Method, Stat, VerifyArgs};

#[derive(Serialize)]
struct RunReport {
    schema: u32,
    statistic: &'static str,
    method: &'static str,
    value: f64,
    bounds: Option<[f64; 2]>,
    elapsed_ms: Option<f64>,
    seed: u64,
    dataset_digest: String,
}

#[derive(Serialize)]
struct VerifyReport {
    schema: u32,
    statistic: &'static str,
    method: &'static str,
    oracle: f64,
    estimate: f64,
    ratio: Option<f64>,
    /// Range the estimate must fall in, given the oracle value.
    accepted: [f64; 2],
    pass: bool,
}

fn stat_name(s: Stat) -> &'static str {
    match s {
        Stat::Diameter => "diameter",
        Stat::Width => "width",
        Stat::Complexity => "complexity",
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Witness => "witness",
        Method::TwoApprox => "two-approx",
        Method::Fpras => "fpras",
        Method::Oracle => "oracle",
        Method::Exact => "exact",
    }
}

fn load(args: &EstimateArgs) -> Result<StochasticDataset, Failure> {
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| Failure::Validation(format!("{}: {e}", args.input.display())))?;
    Ok(StochasticDataset::from_json(&text)?)
}

fn digest(ds: &StochasticDataset) -> String {
    hex::encode(Sha256::digest(ds.to_json().as_bytes()))
}

fn oracle_stat(s: Stat) -> Statistic {
    match s {
        Stat::Diameter => Statistic::Diameter,
        Stat::Width => Statistic::Width,
        Stat::Complexity => Statistic::Complexity,
    }
}

/// Runs the estimator. Returns the value and the factor `f` such that the
/// true expectation lies in `[value, f·value]`, if the method certifies one.
fn estimate(ds: &StochasticDataset, args: &EstimateArgs) -> Result<(f64, Option<f64>), Failure> {
    let unsupported = || {
        Failure::Capability(format!(
            "method {} is not available for {}",
            method_name(args.method),
            stat_name(args.stat)
        ))
    };
    Ok(match (args.stat, args.method) {
        (stat, Method::Oracle) | (stat @ (Stat::Diameter | Stat::Width), Method::Exact) => {
            (oracle_expectation(ds, oracle_stat(stat))?, Some(1.0))
        }
        (Stat::Diameter, Method::Witness) => (expected_diameter_witness(ds), Some(WITNESS_FACTOR)),
        (Stat::Diameter, Method::TwoApprox) => (expected_diameter_two_approx(ds), Some(2.0)),
        (Stat::Width, Method::Witness) => (expected_width_witness(ds)?, Some(1.0 / width_constant(ds.dim()))),
        (Stat::Width, Method::Fpras) => {
            let cfg = FprasConfig { epsilon: args.eps, gamma_override: args.gamma, seed: RngSeed(args.seed) };
            (expected_width_fpras(ds, &cfg)?, None)
        }
        (Stat::Complexity, Method::Witness | Method::Exact) => (expected_complexity(ds)?, Some(1.0)),
        _ => return Err(unsupported()),
    })
}

pub fn compute(args: &ComputeArgs) -> Result<(), Failure> {
    let est = &args.est;
    let ds = load(est)?;
    let start = Instant::now();
    let (value, factor) = estimate(&ds, est)?;
    let elapsed_ms = args.timing.then(|| start.elapsed().as_secs_f64() * 1e3);
    let report = RunReport {
        schema: 1,
        statistic: stat_name(est.stat),
        method: method_name(est.method),
        value,
        bounds: factor.map(|f| [value, value * f]),
        elapsed_ms,
        seed: est.seed,
        dataset_digest: digest(&ds),
    };
    let text = match est.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes"),
        Format::Text => {
            let bounds = report.bounds.map_or("none".to_string(), |[lo, hi]| format!("[{lo}, {hi}]"));
            format!("{} {} value={} bounds={bounds}", report.statistic, report.method, report.value)
        }
    };
    println!("{text}");
    Ok(())
}

/// Relative slack allowed when checking brackets.
const SLACK: f64 = 1e-9;

pub fn verify(args: &VerifyArgs) -> Result<(), Failure> {
    let est = &args.est;
    let ds = load(est)?;
    let oracle = oracle_expectation(&ds, oracle_stat(est.stat))?;
    let (value, factor) = estimate(&ds, est)?;
    // an estimate `v` with factor `f` certifies `v <= E <= f·v`
    let accepted = match factor {
        Some(f) => [oracle / f, oracle],
        None => [oracle * (1.0 - est.eps), oracle * (1.0 + est.eps)],
    };
    let pass = value >= accepted[0] * (1.0 - SLACK) - SLACK && value <= accepted[1] * (1.0 + SLACK) + SLACK;
    let report = VerifyReport {
        schema: 1,
        statistic: stat_name(est.stat),
        method: method_name(est.method),
        oracle,
        estimate: value,
        ratio: (oracle != 0.0).then(|| value / oracle),
        accepted,
        pass,
    };
    let text = match est.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes"),
        Format::Text => format!(
            "{} {} oracle={} estimate={} ratio={} accepted=[{}, {}] {}",
            report.statistic,
            report.method,
            report.oracle,
            report.estimate,
            report.ratio.map_or("none".to_string(), |r| r.to_string()),
            accepted[0],
            accepted[1],
            if pass { "PASS" } else { "FAIL" }
        ),
    };
    println!("{text}");
    if pass {
        Ok(())
    } else {
        Err(Failure::Violation("estimate outside its guaranteed range".into()))
    }
}
