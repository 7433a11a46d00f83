//! Seeded generators of P5-free instances.
//!
//! Randomness comes from ChaCha8 (`rand_chacha` 0.3) seeded with
//! `seed_from_u64`, so a spec reproduces the same instance on every
//! platform. Draw order: graph, then lists, then weights.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::pattern::{Color, ColorSet, Instance, PatternGraph};
use crate::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphFamily {
    /// Random cotree: P4-free.
    Cograph,
    /// Clique plus independent set: 2K2-free, hence P5-free.
    Split,
    /// Erdős–Rényi, rejected until P5-free.
    RandomP5Free,
}

impl GraphFamily {
    pub const ALL: [GraphFamily; 3] = [GraphFamily::Cograph, GraphFamily::Split, GraphFamily::RandomP5Free];
}

impl FromStr for GraphFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cograph" => Ok(GraphFamily::Cograph),
            "split" => Ok(GraphFamily::Split),
            "random" | "random-p5free" => Ok(GraphFamily::RandomP5Free),
            other => Err(Error::InvalidArgument(format!("unknown graph family {other:?}"))),
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFamily::Cograph => "cograph",
            GraphFamily::Split => "split",
            GraphFamily::RandomP5Free => "random",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternSpec {
    Complete(usize),
    Path(usize),
    Edges { k: usize, edges: Vec<(Color, Color)> },
}

impl PatternSpec {
    pub fn build(&self) -> Result<PatternGraph> {
        match self {
            PatternSpec::Complete(k) => PatternGraph::complete(*k),
            PatternSpec::Path(k) => PatternGraph::path(*k),
            PatternSpec::Edges { k, edges } => PatternGraph::from_edges(*k, edges.iter().copied()),
        }
    }

    pub fn is_complete(&self) -> bool {
        match self {
            PatternSpec::Complete(_) => true,
            other => other.build().map(|h| h.is_complete()).unwrap_or(false),
        }
    }
}

/// `complete:K`, `path:K`, `edges:K:a-b,c-d` (1-based colors), or the
/// shorthands `KK` and `PK`.
impl FromStr for PatternSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad =
            || Error::InvalidArgument(format!("bad pattern {s:?}; expected complete:K, path:K or edges:K:a-b,..."));
        if let Some(k) = s.strip_prefix('K').and_then(|k| k.parse().ok()) {
            return Ok(PatternSpec::Complete(k));
        }
        if let Some(k) = s.strip_prefix('P').and_then(|k| k.parse().ok()) {
            return Ok(PatternSpec::Path(k));
        }
        let mut parts = s.splitn(3, ':');
        let kind = parts.next().ok_or_else(bad)?;
        let k: usize = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        match kind {
            "complete" => Ok(PatternSpec::Complete(k)),
            "path" => Ok(PatternSpec::Path(k)),
            "edges" => {
                let mut edges = Vec::new();
                for pair in parts.next().unwrap_or("").split(',').filter(|p| !p.is_empty()) {
                    let (a, b) = pair.split_once('-').ok_or_else(bad)?;
                    let a: usize = a.parse().map_err(|_| bad())?;
                    let b: usize = b.parse().map_err(|_| bad())?;
                    if a == 0 || b == 0 {
                        return Err(bad());
                    }
                    edges.push((a - 1, b - 1));
                }
                Ok(PatternSpec::Edges { k, edges })
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternSpec::Complete(k) => write!(f, "complete:{k}"),
            PatternSpec::Path(k) => write!(f, "path:{k}"),
            PatternSpec::Edges { k, edges } => {
                write!(f, "edges:{k}:")?;
                for (i, (a, b)) in edges.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{}-{}", a + 1, b + 1)?;
                }
                Ok(())
            }
        }
    }
}

/// A probability `num/den` in `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Density {
    num: u32,
    den: u32,
}

impl Density {
    pub fn new(num: u32, den: u32) -> Result<Self> {
        if den == 0 || num > den {
            return Err(Error::InvalidArgument(format!("density {num}/{den} is not in [0, 1]")));
        }
        Ok(Density { num, den })
    }

    pub fn one() -> Self {
        Density { num: 1, den: 1 }
    }

    fn sample(self, rng: &mut ChaCha8Rng) -> bool {
        rng.gen_ratio(self.num, self.den)
    }
}

/// Accepts `p/q` or a decimal such as `0.7`.
impl FromStr for Density {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("bad density {s:?}"));
        if let Some((p, q)) = s.split_once('/') {
            return Density::new(p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?);
        }
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if frac.len() > 6 || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let int: u32 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let den = 10u32.pow(frac.len() as u32);
        let frac: u32 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
        Density::new(int * den + frac, den)
    }
}

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSpec {
    pub family: GraphFamily,
    pub n: usize,
    /// Join probability for cographs, edge probability otherwise.
    pub density: Density,
    pub seed: u64,
    pub pattern: PatternSpec,
    /// Probability that a color stays in a vertex's list.
    pub list_density: Density,
    /// Weights are `p/q` with `p` uniform in this range...
    pub weight_numerators: (u32, u32),
    /// ...and `q` uniform in `1..=max_denominator`.
    pub max_denominator: u32,
    /// Rejection-sampling attempts for [`GraphFamily::RandomP5Free`].
    pub max_tries: u32,
}

impl GenSpec {
    /// Density 1/2, full lists, unit weights.
    pub fn new(family: GraphFamily, n: usize, pattern: PatternSpec, seed: u64) -> Self {
        GenSpec {
            family,
            n,
            density: Density { num: 1, den: 2 },
            seed,
            pattern,
            list_density: Density::one(),
            weight_numerators: (1, 1),
            max_denominator: 1,
            max_tries: 1000,
        }
    }
}

/// Spec for trial `index` of a seeded differential run. Families cycle,
/// `n` is uniform in `1..=max_n`, edge density is one of 1/3, 1/2, 2/3,
/// lists keep each color with probability 7/10 and weights are `p/q` with
/// `p` in `1..=9` and `q` in `1..=4`.
pub fn trial_spec(seed: u64, index: u64, max_n: usize, pattern: PatternSpec) -> GenSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let family = GraphFamily::ALL[(index % 3) as usize];
    let n = rng.gen_range(1..=max_n.max(1));
    let mut spec = GenSpec::new(family, n, pattern, rng.gen());
    spec.density =
        [Density { num: 1, den: 3 }, Density { num: 1, den: 2 }, Density { num: 2, den: 3 }][rng.gen_range(0..3)];
    spec.list_density = Density { num: 7, den: 10 };
    spec.weight_numerators = (1, 9);
    spec.max_denominator = 4;
    spec
}

pub fn generate(spec: &GenSpec) -> Result<Instance> {
    let (lo, hi) = spec.weight_numerators;
    if lo > hi || spec.max_denominator == 0 {
        return Err(Error::InvalidArgument("empty weight range".into()));
    }
    let pattern = spec.pattern.build()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let graph = match spec.family {
        GraphFamily::Cograph => cograph(&mut rng, spec.n, spec.density),
        GraphFamily::Split => split_graph(&mut rng, spec.n, spec.density),
        GraphFamily::RandomP5Free => random_p5_free(&mut rng, spec.n, spec.density, spec.max_tries)?,
    };
    let n = graph.n();
    let k = pattern.k();
    let lists = (0..n).map(|_| (0..k).filter(|_| spec.list_density.sample(&mut rng)).collect::<ColorSet>()).collect();
    let weights = (0..n)
        .map(|_| {
            let p = rng.gen_range(lo..=hi);
            let q = rng.gen_range(1..=spec.max_denominator);
            Weight::new(p.into(), q.into())
        })
        .collect();
    Instance::new(graph, pattern).with_lists(lists)?.with_weights(weights)
}

/// Merges random pairs of cographs by union or (with probability
/// `density`) join until one is left, then shuffles the labels.
fn cograph(rng: &mut ChaCha8Rng, n: usize, density: Density) -> Graph {
    let mut g = Graph::new(n);
    let mut pieces: Vec<Vec<Vertex>> = (0..n).map(|v| vec![v]).collect();
    while pieces.len() > 1 {
        let a = rng.gen_range(0..pieces.len());
        let left = pieces.swap_remove(a);
        let b = rng.gen_range(0..pieces.len());
        let right = pieces.swap_remove(b);
        if density.sample(rng) {
            for &u in &left {
                for &v in &right {
                    g.add_edge(u, v).expect("distinct vertices");
                }
            }
        }
        let mut merged = left;
        merged.extend(right);
        pieces.push(merged);
    }
    relabel(rng, &g)
}

fn split_graph(rng: &mut ChaCha8Rng, n: usize, density: Density) -> Graph {
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(rng);
    let clique_size = rng.gen_range(0..=n);
    let (clique, independent) = order.split_at(clique_size);
    let mut g = Graph::new(n);
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            g.add_edge(u, v).expect("distinct vertices");
        }
    }
    for &u in clique {
        for &v in independent {
            if density.sample(rng) {
                g.add_edge(u, v).expect("distinct vertices");
            }
        }
    }
    g
}

fn random_p5_free(rng: &mut ChaCha8Rng, n: usize, density: Density, max_tries: u32) -> Result<Graph> {
    for _ in 0..max_tries {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if density.sample(rng) {
                    g.add_edge(u, v).expect("distinct vertices");
                }
            }
        }
        if g.find_induced_p5().is_none() {
            return Ok(g);
        }
    }
    Err(Error::GeneratorExhausted(max_tries))
}

fn relabel(rng: &mut ChaCha8Rng, g: &Graph) -> Graph {
    let mut perm: Vec<Vertex> = (0..g.n()).collect();
    perm.shuffle(rng);
    Graph::from_edges(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).expect("permuted edges are valid")
}
