use crate::dataset::StochasticDataset;
use crate::error::{Error, Result};
use crate::geom::{vector, Point};
use crate::oracle::{oracle_expectation, Statistic};

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Validates a 0-based edge list: no loops, no repeated edges.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        let mut norm = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidIndex { index: u.max(v), len: n });
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self loop at vertex {}", u + 1)));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::InvalidArgument(format!("repeated edge {} {}", e.0 + 1, e.1 + 1)));
            }
            norm.push(e);
        }
        Ok(Graph { n, edges: norm })
    }

    /// Parses `n m` followed by `m` lines `u v` with 1-based vertex ids.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("empty graph file".into()))?;
        let [n, m] = parse_pair(header)?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines.next().ok_or_else(|| Error::Parse(format!("expected {m} edges")))?;
            let [u, v] = parse_pair(line)?;
            if u == 0 || v == 0 {
                return Err(Error::Parse(format!("vertex ids are 1-based: {line:?}")));
            }
            edges.push((u - 1, v - 1));
        }
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("unexpected line after {m} edges: {extra:?}")));
        }
        Graph::new(n, edges)
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph { n, edges }
    }

    pub fn path(n: usize) -> Self {
        Graph { n, edges: (1..n).map(|v| (v - 1, v)).collect() }
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n.saturating_sub(1)));
        Graph::new(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for (u, v) in &self.edges {
            s.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        s
    }

    /// Number of independent sets, counting the empty set and singletons.
    pub fn count_independent_sets(&self) -> Result<u64> {
        if self.n > 30 {
            return Err(Error::TooLarge { n: self.n, limit: 30 });
        }
        let mut adj = vec![0u32; self.n];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let count = (0u32..1 << self.n)
            .filter(|&mask| (0..self.n).all(|v| mask & (1 << v) == 0 || adj[v] & mask == 0))
            .count();
        Ok(count as u64)
    }
}

fn parse_pair(line: &str) -> Result<[usize; 2]> {
    let nums: Vec<usize> = line
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("not a nonnegative integer: {t:?}"))))
        .collect::<Result<_>>()?;
    match nums[..] {
        [a, b] => Ok([a, b]),
        _ => Err(Error::Parse(format!("expected two integers, got {line:?}"))),
    }
}

/// A dataset whose expected diameter encodes the number of independent sets
/// of a graph.
#[derive(Clone, Debug)]
pub struct HardnessInstance {
    pub dataset: StochasticDataset,
    /// Distance between non-adjacent vertices.
    pub alpha: f64,
    /// Distance between adjacent vertices.
    pub beta: f64,
    pub graph: Graph,
}

fn circumradius(k: usize) -> f64 {
    (k as f64 / (2.0 * (k as f64 + 1.0))).sqrt()
}

/// Unit-edge regular `k`-simplex in `R^k`, centred at the origin.
fn regular_simplex(k: usize) -> Vec<Vec<f64>> {
    if k == 0 {
        return vec![vec![]];
    }
    let h = (1.0 - circumradius(k - 1).powi(2)).sqrt();
    let shift = h / (k as f64 + 1.0);
    let mut pts: Vec<Vec<f64>> = regular_simplex(k - 1)
        .into_iter()
        .map(|mut p| {
            p.push(-shift);
            p
        })
        .collect();
    let mut apex = vec![0.0; k];
    apex[k - 1] = h - shift;
    pts.push(apex);
    pts
}

/// Two unit regular `k`-simplices glued along a common facet: `k` shared
/// vertices followed by the two apexes. All distances are 1 except the apex
/// pair, at twice the height of the simplex.
fn double_simplex(k: usize) -> Vec<Vec<f64>> {
    let h = (1.0 - circumradius(k - 1).powi(2)).sqrt();
    let mut pts: Vec<Vec<f64>> = regular_simplex(k - 1)
        .into_iter()
        .map(|mut p| {
            p.push(0.0);
            p
        })
        .collect();
    for s in [h, -h] {
        let mut apex = vec![0.0; k];
        apex[k - 1] = s;
        pts.push(apex);
    }
    pts
}

/// Embeds the vertices of `graph` so that adjacent pairs sit at distance
/// `beta` and all other pairs at `alpha < beta`, each with probability 1/2.
///
/// Every edge contributes a double-simplex block of coordinates in which its
/// endpoints are the two apexes; blocks are concatenated and the result is
/// expressed in an orthonormal frame of its affine span, padded to `n - 1`
/// coordinates.
pub fn hardness_instance(graph: &Graph) -> Result<HardnessInstance> {
    let n = graph.vertex_count();
    let m = graph.edges().len();
    if n < 3 {
        return Err(Error::TooFewPoints { what: "hardness graph vertices", needed: 3, got: n });
    }
    if m == 0 {
        return Err(Error::InvalidArgument("hardness graph needs at least one edge".into()));
    }
    let k = n - 2;
    let gadget = double_simplex(k);
    let beta_k = vector::dist(&gadget[k], &gadget[k + 1]);
    let mut coords = vec![Vec::with_capacity(k * m); n];
    for &(u, v) in graph.edges() {
        let mut shared = 0;
        for (w, c) in coords.iter_mut().enumerate() {
            let slot = if w == u {
                k
            } else if w == v {
                k + 1
            } else {
                shared += 1;
                shared - 1
            };
            c.extend_from_slice(&gadget[slot]);
        }
    }
    let diffs: Vec<Vec<f64>> = coords[1..].iter().map(|c| vector::sub(c, &coords[0])).collect();
    let mut frame: Vec<Vec<f64>> = Vec::with_capacity(n - 1);
    for d in &diffs {
        let r = vector::reject(&vector::reject(d, &frame), &frame);
        let len = vector::norm(&r);
        if len > 1e-9 {
            frame.push(vector::scale(&r, 1.0 / len));
        }
    }
    // a single edge spans only n-2 dimensions; pad with zeros
    let points: Vec<Point> = coords
        .iter()
        .map(|c| {
            let d = vector::sub(c, &coords[0]);
            let mut p: Vec<f64> = frame.iter().map(|b| vector::dot(&d, b)).collect();
            p.resize(n - 1, 0.0);
            Point::new(p)
        })
        .collect::<Result<_>>()?;

    let alpha = (m as f64).sqrt();
    let beta = ((m - 1) as f64 + beta_k * beta_k).sqrt();
    let dataset = StochasticDataset::new(n - 1, points, vec![0.5; n])?;
    let adjacent = |a: usize, b: usize| graph.edges().contains(&(a.min(b), a.max(b)));
    for a in 0..n {
        for b in a + 1..n {
            let want = if adjacent(a, b) { beta } else { alpha };
            let got = dataset.point(a).dist(dataset.point(b));
            if (got - want).abs() > 1e-9 {
                return Err(Error::Degenerate(format!(
                    "vertices {} and {} embedded at distance {got}, expected {want}",
                    a + 1,
                    b + 1
                )));
            }
        }
    }
    Ok(HardnessInstance { dataset, alpha, beta, graph: graph.clone() })
}

/// Returns `(oracle expected diameter, closed form from the independent-set
/// count)`; the two agree up to rounding.
///
/// The empty set and singletons have diameter 0, every other independent set
/// has diameter `alpha`, and every non-independent set has diameter `beta`.
pub fn hardness_identity_check(instance: &HardnessInstance) -> Result<(f64, f64)> {
    let n = instance.graph.vertex_count();
    if n > 20 {
        return Err(Error::TooLarge { n, limit: 20 });
    }
    let lhs = oracle_expectation(&instance.dataset, Statistic::Diameter)?;
    let ind = instance.graph.count_independent_sets()? as f64;
    let total = (1u64 << n) as f64;
    let rhs = ((ind - n as f64 - 1.0) * instance.alpha + (total - ind) * instance.beta) / total;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_simplex_has_unit_edges() {
        for k in 1..7 {
            let s = regular_simplex(k);
            assert_eq!(s.len(), k + 1);
            for i in 0..=k {
                assert!((vector::norm(&s[i]) - circumradius(k)).abs() < 1e-12);
                for j in 0..i {
                    assert!((vector::dist(&s[i], &s[j]) - 1.0).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn double_triangle_apex_distance() {
        let g = double_simplex(2);
        assert!((vector::dist(&g[2], &g[3]) - 3f64.sqrt()).abs() < 1e-12);
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)];
        for (a, b) in pairs {
            assert!((vector::dist(&g[a], &g[b]) - 1.0).abs() < 1e-12);
        }
        let seg = double_simplex(1);
        assert!((vector::dist(&seg[1], &seg[2]) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn graph_parsing() {
        let g = Graph::parse("3 2\n1 2\n2 3\n").unwrap();
        assert_eq!(g, Graph::path(3));
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
        assert!(Graph::parse("3 1\n1 1\n").is_err());
        assert!(Graph::parse("3 2\n1 2\n2 1\n").is_err());
        assert!(Graph::parse("3 1\n0 2\n").is_err());
        assert!(Graph::parse("3 1\n1 4\n").is_err());
        assert!(Graph::parse("3 2\n1 2\n").is_err());
        assert!(Graph::parse("3 x\n").is_err());
    }

    #[test]
    fn independent_set_counts() {
        assert_eq!(Graph::complete(3).count_independent_sets().unwrap(), 4);
        assert_eq!(Graph::path(3).count_independent_sets().unwrap(), 5);
        assert_eq!(Graph::cycle(5).unwrap().count_independent_sets().unwrap(), 11);
        assert_eq!(Graph::new(4, vec![]).unwrap().count_independent_sets().unwrap(), 16);
    }

    #[test]
    fn triangle_instance() {
        let inst = hardness_instance(&Graph::complete(3)).unwrap();
        assert_eq!(inst.dataset.dim(), 2);
        for i in 0..3 {
            for j in 0..i {
                let d = inst.dataset.point(i).dist(inst.dataset.point(j));
                assert!((d - inst.beta).abs() < 1e-9);
            }
        }
        let (lhs, rhs) = hardness_identity_check(&inst).unwrap();
        assert!((rhs - inst.beta / 2.0).abs() < 1e-12);
        assert!((lhs - rhs).abs() < 1e-9 * rhs);
    }

    #[test]
    fn path_instance() {
        let inst = hardness_instance(&Graph::path(3)).unwrap();
        assert!(inst.alpha < inst.beta);
        let d = |a: usize, b: usize| inst.dataset.point(a).dist(inst.dataset.point(b));
        assert!((d(0, 1) - inst.beta).abs() < 1e-9);
        assert!((d(1, 2) - inst.beta).abs() < 1e-9);
        assert!((d(0, 2) - inst.alpha).abs() < 1e-9);
        let (lhs, rhs) = hardness_identity_check(&inst).unwrap();
        assert!((rhs - (inst.alpha + 3.0 * inst.beta) / 8.0).abs() < 1e-12);
        assert!((lhs - rhs).abs() < 1e-9 * rhs);
    }

    #[test]
    fn rejects_degenerate_graphs() {
        assert!(hardness_instance(&Graph::path(2)).is_err());
        assert!(hardness_instance(&Graph::new(4, vec![]).unwrap()).is_err());
    }
}
