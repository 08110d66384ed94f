use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use stochastic_hull::diameter::{hardness_instance, Graph};
use stochastic_hull::{Point, StochasticDataset};

use crate::{write_output, Failure, HardnessArgs, RandomArgs};

pub fn gen_random(args: &RandomArgs) -> Result<(), Failure> {
    if args.dim == 0 {
        return Err(Failure::Validation("--dim must be at least 1".into()));
    }
    if !(args.prob_min > 0.0 && args.prob_min <= args.prob_max && args.prob_max <= 1.0) {
        return Err(Failure::Validation(format!(
            "need 0 < --prob-min <= --prob-max <= 1, got {} and {}",
            args.prob_min, args.prob_max
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut points = Vec::with_capacity(args.n);
    let mut probs = Vec::with_capacity(args.n);
    for _ in 0..args.n {
        let coords: Vec<f64> = (0..args.dim).map(|_| rng.random::<f64>()).collect();
        points.push(Point::new(coords)?);
        probs.push(rng.random_range(args.prob_min..=args.prob_max));
    }
    let ds = StochasticDataset::new(args.dim, points, probs)?;
    write_output(args.output.as_ref(), &(ds.to_json() + "\n"))
}

fn parse_graph(spec: &str) -> Result<Graph, Failure> {
    if Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec).map_err(|e| Failure::Validation(format!("{spec}: {e}")))?;
        return Ok(Graph::parse(&text)?);
    }
    let bad = || Failure::Validation(format!("{spec:?} is neither a graph file nor one of K<n>, P<n>, C<n>"));
    let (kind, n) = spec.split_at_checked(1).ok_or_else(bad)?;
    let n: usize = n.parse().map_err(|_| bad())?;
    match kind {
        "K" => Ok(Graph::complete(n)),
        "P" => Ok(Graph::path(n)),
        "C" if n >= 3 => Ok(Graph::cycle(n)?),
        _ => Err(bad()),
    }
}

pub fn gen_hardness(args: &HardnessArgs) -> Result<(), Failure> {
    let graph = parse_graph(&args.graph)?;
    let inst = hardness_instance(&graph)?;
    let n = graph.vertex_count();
    let ind = graph.count_independent_sets()?;
    let total = 2f64.powi(n as i32);
    let identity = ((ind as f64 - n as f64 - 1.0) * inst.alpha + (total - ind as f64) * inst.beta) / total;
    let mut value = inst.dataset.to_json_value();
    value["hardness"] = json!({
        "vertices": n,
        "edges": graph.edges().iter().map(|&(u, v)| [u + 1, v + 1]).collect::<Vec<_>>(),
        "alpha": inst.alpha,
        "beta": inst.beta,
        "independent_sets": ind,
        "expected_diameter": identity,
    });
    let text = serde_json::to_string_pretty(&value).expect("json serializes") + "\n";
    write_output(args.output.as_ref(), &text)
}
