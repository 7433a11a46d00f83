//! Pattern graphs, color lists, instances and solutions, plus the list
//! homomorphism checker and finder every solver is measured against.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::Weight;

/// Colors are `0..k` internally, `1..=k` in text formats.
pub type Color = usize;

pub const MAX_COLORS: usize = 64;

/// A set of colors of a pattern with at most [`MAX_COLORS`] vertices.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSet(u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn full(k: usize) -> Self {
        if k >= 64 {
            ColorSet(u64::MAX)
        } else {
            ColorSet((1u64 << k) - 1)
        }
    }

    pub fn singleton(c: Color) -> Self {
        ColorSet(1 << c)
    }

    pub fn from_bits(bits: u64) -> Self {
        ColorSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, c: Color) -> bool {
        c < 64 && self.0 >> c & 1 == 1
    }

    pub fn insert(&mut self, c: Color) {
        self.0 |= 1 << c;
    }

    pub fn remove(&mut self, c: Color) {
        self.0 &= !(1 << c);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersection(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let c = bits.trailing_zeros() as Color;
                bits &= bits - 1;
                Some(c)
            }
        })
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut set = ColorSet::EMPTY;
        for c in iter {
            set.insert(c);
        }
        set
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// The target graph H: loopless, simple, on colors `0..k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternGraph {
    adj: Vec<ColorSet>,
}

impl PatternGraph {
    pub fn new(k: usize) -> Result<Self> {
        if k > MAX_COLORS {
            return Err(Error::PatternTooLarge { k, max: MAX_COLORS });
        }
        Ok(PatternGraph { adj: vec![ColorSet::EMPTY; k] })
    }

    pub fn from_edges<I: IntoIterator<Item = (Color, Color)>>(k: usize, edges: I) -> Result<Self> {
        let mut h = PatternGraph::new(k)?;
        for (a, b) in edges {
            h.add_edge(a, b)?;
        }
        Ok(h)
    }

    pub fn complete(k: usize) -> Result<Self> {
        let mut h = PatternGraph::new(k)?;
        for a in 0..k {
            h.adj[a] = ColorSet::full(k);
            h.adj[a].remove(a);
        }
        Ok(h)
    }

    /// The path `0 - 1 - ... - (k-1)`.
    pub fn path(k: usize) -> Result<Self> {
        PatternGraph::from_edges(k, (1..k).map(|c| (c - 1, c)))
    }

    pub fn add_edge(&mut self, a: Color, b: Color) -> Result<()> {
        let k = self.k();
        for c in [a, b] {
            if c >= k {
                return Err(Error::ColorOutOfRange { color: c, k });
            }
        }
        if a == b {
            return Err(Error::PatternLoop(a));
        }
        self.adj[a].insert(b);
        self.adj[b].insert(a);
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.adj.len()
    }

    pub fn colors(&self) -> ColorSet {
        ColorSet::full(self.k())
    }

    pub fn neighbors(&self, c: Color) -> ColorSet {
        self.adj[c]
    }

    pub fn has_edge(&self, a: Color, b: Color) -> bool {
        self.adj[a].contains(b)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.k()).all(|c| self.adj[c].len() + 1 == self.k())
    }

    pub fn edges(&self) -> impl Iterator<Item = (Color, Color)> + '_ {
        (0..self.k()).flat_map(move |a| self.adj[a].iter().filter(move |&b| b > a).map(move |b| (a, b)))
    }
}

/// A Maximum Partial List H-Coloring instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub pattern: PatternGraph,
    weights: Vec<Weight>,
    lists: Vec<ColorSet>,
}

impl Instance {
    /// Unit weights and full lists.
    pub fn new(graph: Graph, pattern: PatternGraph) -> Self {
        let n = graph.n();
        let full = pattern.colors();
        Instance { graph, pattern, weights: vec![Weight::from_integer(1.into()); n], lists: vec![full; n] }
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn k(&self) -> usize {
        self.pattern.k()
    }

    pub fn weight(&self, v: Vertex) -> &Weight {
        &self.weights[v]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn list(&self, v: Vertex) -> ColorSet {
        self.lists[v]
    }

    pub fn lists(&self) -> &[ColorSet] {
        &self.lists
    }

    pub fn set_weight(&mut self, v: Vertex, w: Weight) -> Result<()> {
        self.check_vertex(v)?;
        if w.is_negative() {
            return Err(Error::NegativeWeight(v));
        }
        self.weights[v] = w;
        Ok(())
    }

    pub fn set_list(&mut self, v: Vertex, list: ColorSet) -> Result<()> {
        self.check_vertex(v)?;
        if !list.is_subset(self.pattern.colors()) {
            let color = list.iter().find(|&c| c >= self.k()).unwrap_or(0);
            return Err(Error::ColorOutOfRange { color, k: self.k() });
        }
        self.lists[v] = list;
        Ok(())
    }

    pub fn with_weights(mut self, weights: Vec<Weight>) -> Result<Self> {
        if weights.len() != self.n() {
            return Err(Error::InvalidArgument(format!("expected {} weights, got {}", self.n(), weights.len())));
        }
        for (v, w) in weights.into_iter().enumerate() {
            self.set_weight(v, w)?;
        }
        Ok(self)
    }

    pub fn with_lists(mut self, lists: Vec<ColorSet>) -> Result<Self> {
        if lists.len() != self.n() {
            return Err(Error::InvalidArgument(format!("expected {} lists, got {}", self.n(), lists.len())));
        }
        for (v, l) in lists.into_iter().enumerate() {
            self.set_list(v, l)?;
        }
        Ok(self)
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n() {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        } else {
            Ok(())
        }
    }

    pub fn total_weight<I: IntoIterator<Item = Vertex>>(&self, vertices: I) -> Weight {
        vertices.into_iter().map(|v| &self.weights[v]).sum()
    }
}

/// A chosen vertex set with a witnessing coloring and its weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub coloring: BTreeMap<Vertex, Color>,
    pub weight: Weight,
}

impl Solution {
    pub fn empty() -> Self {
        Solution { coloring: BTreeMap::new(), weight: Weight::zero() }
    }

    /// Builds a solution whose weight is derived from `inst`.
    pub fn from_coloring<I: IntoIterator<Item = (Vertex, Color)>>(inst: &Instance, coloring: I) -> Self {
        let coloring: BTreeMap<Vertex, Color> = coloring.into_iter().collect();
        let weight = inst.total_weight(coloring.keys().copied());
        Solution { coloring, weight }
    }

    pub fn chosen(&self) -> Vec<Vertex> {
        self.coloring.keys().copied().collect()
    }

    pub fn chosen_set(&self, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.coloring.keys().copied())
    }

    pub fn len(&self) -> usize {
        self.coloring.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coloring.is_empty()
    }
}

/// The first constraint a candidate solution breaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    VertexOutOfRange(Vertex),
    ColorOutOfRange { vertex: Vertex, color: Color },
    NotInList { vertex: Vertex, color: Color },
    NonEdge { u: Vertex, v: Vertex, cu: Color, cv: Color },
    WeightMismatch { claimed: Box<Weight>, actual: Box<Weight> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexOutOfRange(v) => write!(f, "vertex {} is not in the graph", v + 1),
            Violation::ColorOutOfRange { vertex, color } => {
                write!(f, "vertex {} has color {} outside the pattern", vertex + 1, color + 1)
            }
            Violation::NotInList { vertex, color } => {
                write!(f, "vertex {} colored {} outside its list", vertex + 1, color + 1)
            }
            Violation::NonEdge { u, v, cu, cv } => {
                write!(f, "edge {}-{} maps to {}-{}, which is not an edge of the pattern", u + 1, v + 1, cu + 1, cv + 1)
            }
            Violation::WeightMismatch { claimed, actual } => {
                write!(f, "claimed weight {claimed} but chosen vertices weigh {actual}")
            }
        }
    }
}

impl std::error::Error for Violation {}

/// Checks list and edge constraints of a partial coloring (weight is not
/// involved). Shared by [`verify_solution`] and the solvers' branch checks.
pub fn check_coloring<'a, I>(inst: &Instance, coloring: I) -> std::result::Result<(), Violation>
where
    I: IntoIterator<Item = (&'a Vertex, &'a Color)> + Clone,
{
    let n = inst.n();
    let mut color_of = vec![None; n];
    for (&v, &c) in coloring.clone() {
        if v >= n {
            return Err(Violation::VertexOutOfRange(v));
        }
        if c >= inst.k() {
            return Err(Violation::ColorOutOfRange { vertex: v, color: c });
        }
        if !inst.list(v).contains(c) {
            return Err(Violation::NotInList { vertex: v, color: c });
        }
        color_of[v] = Some(c);
    }
    for (&u, &cu) in coloring {
        for v in inst.graph.neighbors(u).iter().filter(|&v| v > u) {
            if let Some(cv) = color_of[v] {
                if !inst.pattern.has_edge(cu, cv) {
                    return Err(Violation::NonEdge { u, v, cu, cv });
                }
            }
        }
    }
    Ok(())
}

pub fn verify_solution(inst: &Instance, sol: &Solution) -> std::result::Result<(), Violation> {
    check_coloring(inst, sol.coloring.iter())?;
    let actual = inst.total_weight(sol.coloring.keys().copied());
    if actual != sol.weight {
        return Err(Violation::WeightMismatch { claimed: Box::new(sol.weight.clone()), actual: Box::new(actual) });
    }
    Ok(())
}

/// A list homomorphism from `g` to `h`, one color per vertex, if any.
pub fn exists_list_hom(g: &Graph, h: &PatternGraph, lists: &[ColorSet]) -> Option<Vec<Color>> {
    let found = list_hom_within(g, h, lists, &g.vertices())?;
    Some(found.into_values().collect())
}

/// A list homomorphism from `g[subset]` to `h`.
pub fn list_hom_within(
    g: &Graph,
    h: &PatternGraph,
    lists: &[ColorSet],
    subset: &VertexSet,
) -> Option<BTreeMap<Vertex, Color>> {
    let mut domains: Vec<ColorSet> = lists.to_vec();
    let mut assigned: BTreeMap<Vertex, Color> = BTreeMap::new();
    if subset.iter().any(|v| domains[v].is_empty()) {
        return None;
    }
    if extend_hom(g, h, subset, &mut domains, &mut assigned) {
        Some(assigned)
    } else {
        None
    }
}

fn extend_hom(
    g: &Graph,
    h: &PatternGraph,
    subset: &VertexSet,
    domains: &mut Vec<ColorSet>,
    assigned: &mut BTreeMap<Vertex, Color>,
) -> bool {
    // Most constrained unassigned vertex first.
    let next = subset.iter().filter(|v| !assigned.contains_key(v)).min_by_key(|&v| (domains[v].len(), v));
    let Some(v) = next else {
        return true;
    };
    for c in domains[v].iter() {
        let saved = domains.clone();
        let mut dead_end = false;
        for w in g.neighbors(v).iter() {
            if subset.contains(w) && !assigned.contains_key(&w) {
                domains[w] = domains[w].intersection(h.neighbors(c));
                if domains[w].is_empty() {
                    dead_end = true;
                    break;
                }
            }
        }
        if !dead_end {
            assigned.insert(v, c);
            if extend_hom(g, h, subset, domains, assigned) {
                return true;
            }
            assigned.remove(&v);
        }
        *domains = saved;
    }
    false
}
