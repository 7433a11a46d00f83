//! Undirected simple graphs over dense vertex ids, with bitset adjacency.
//!
//! Vertex ids are `0..n` internally. The text formats and the CLI use
//! 1-based ids and translate at the boundary.

use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;
use itertools::Itertools;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A subset of `0..capacity`. Ordering is lexicographic on the sorted
/// element list, which is what every enumeration in the crate uses.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet(FixedBitSet);

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet(FixedBitSet::with_capacity(capacity))
    }

    pub fn full(capacity: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(capacity);
        bits.insert_range(..);
        VertexSet(bits)
    }

    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(capacity: usize, vertices: I) -> Self {
        let mut set = Self::new(capacity);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    pub fn capacity(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(v)
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0.insert(v);
    }

    pub fn remove(&mut self, v: Vertex) {
        self.0.set(v, false);
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.ones()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.minimum()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.0.union_with(&other.0);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.0.intersect_with(&other.0);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.0.difference_with(&other.0);
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn intersection_count(&self, other: &VertexSet) -> usize {
        self.0.intersection_count(&other.0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Raw bitset blocks, used for hashing memo keys.
    pub(crate) fn blocks(&self) -> &[usize] {
        self.0.as_slice()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n()).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: (0..n).map(|_| VertexSet::new(n)).collect() }
    }

    pub fn from_edges<I: IntoIterator<Item = (Vertex, Vertex)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.link(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.link(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.link(n - 1, 0);
        }
        g
    }

    /// Adds `uv`; repeated edges are idempotent.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        let n = self.n();
        if u >= n {
            return Err(Error::VertexOutOfRange { vertex: u, n });
        }
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.link(u, v);
        Ok(())
    }

    fn link(&mut self, u: Vertex, v: Vertex) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n())
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.iter().find(|&v| v >= self.n()) {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n() }),
            None => Ok(()),
        }
    }

    /// `N[s]`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// `N(s) = N[s] \ s`.
    pub fn open_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = self.closed_neighborhood(s);
        out.difference_with(s);
        out
    }

    /// Returns `g[s]` re-indexed to `0..|s|` in increasing order of the
    /// original ids, together with the new-to-old map.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<Vertex>)> {
        self.check_set(s)?;
        let old: Vec<Vertex> = s.to_vec();
        let mut new_of = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let mut sub = Graph::new(old.len());
        for (i, &v) in old.iter().enumerate() {
            for w in self.adj[v].iter() {
                if new_of[w] != usize::MAX && new_of[w] > i {
                    sub.link(i, new_of[w]);
                }
            }
        }
        Ok((sub, old))
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    /// Components of `g[alive]`, ordered by their smallest vertex.
    pub fn components_within(&self, alive: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = alive.clone();
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let comp = self.component_of(start, &remaining);
            remaining.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    fn component_of(&self, start: Vertex, alive: &VertexSet) -> VertexSet {
        let mut comp = VertexSet::new(self.n());
        comp.insert(start);
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            for w in self.adj[v].iter() {
                if alive.contains(w) && !comp.contains(w) {
                    comp.insert(w);
                    frontier.push(w);
                }
            }
        }
        comp
    }

    /// Whether `g[s]` is connected. The empty set counts as connected.
    pub fn is_connected_set(&self, s: &VertexSet) -> bool {
        match s.first() {
            None => true,
            Some(v) => self.component_of(v, s).len() == s.len(),
        }
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let k = s.len();
        s.iter().all(|v| self.adj[v].intersection_count(s) + 1 == k)
    }

    /// Whether all vertices of `s` have the same neighborhood outside `s`.
    pub fn is_module(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        self.is_module_within(&self.vertices(), s)
    }

    /// Module test in `g[alive]`; `s` must lie inside `alive`.
    pub fn is_module_within(&self, alive: &VertexSet, s: &VertexSet) -> Result<bool> {
        let first = s.first().ok_or(Error::EmptySet)?;
        let outside = alive.difference(s);
        let reference = self.adj[first].intersection(&outside);
        Ok(s.iter().skip(1).all(|v| self.adj[v].intersection(&outside) == reference))
    }

    /// Finds an induced path on five vertices, returned in path order.
    pub fn find_induced_p5(&self) -> Option<[Vertex; 5]> {
        self.find_induced_p5_within(&self.vertices())
    }

    pub fn find_induced_p5_within(&self, alive: &VertexSet) -> Option<[Vertex; 5]> {
        let mut path = Vec::with_capacity(5);
        for start in alive.iter() {
            path.push(start);
            if self.extend_induced_path(alive, &mut path) {
                return Some([path[0], path[1], path[2], path[3], path[4]]);
            }
            path.pop();
        }
        None
    }

    fn extend_induced_path(&self, alive: &VertexSet, path: &mut Vec<Vertex>) -> bool {
        if path.len() == 5 {
            return true;
        }
        let last = *path.last().expect("path is never empty here");
        for next in self.adj[last].iter() {
            if !alive.contains(next) || path.contains(&next) {
                continue;
            }
            // `next` may only touch `last` among the path vertices.
            let touches_earlier = path[..path.len() - 1].iter().any(|&p| self.adj[next].contains(p));
            if touches_earlier {
                continue;
            }
            path.push(next);
            if self.extend_induced_path(alive, path) {
                return true;
            }
            path.pop();
        }
        false
    }

    /// All `s` with `lo <= |s| <= hi` and `g[s]` connected, sorted
    /// lexicographically by their sorted vertex lists.
    pub fn enumerate_connected_subsets(&self, lo: usize, hi: usize) -> Vec<VertexSet> {
        self.connected_subsets_within(&self.vertices(), lo, hi)
    }

    pub fn connected_subsets_within(&self, alive: &VertexSet, lo: usize, hi: usize) -> Vec<VertexSet> {
        let mut out = Vec::new();
        if hi == 0 || lo > hi {
            return out;
        }
        // ESU: grow from each root, only adding vertices larger than the
        // root that are not already adjacent to the current set.
        for root in alive.iter() {
            let mut current = VertexSet::new(self.n());
            current.insert(root);
            let mut extension = VertexSet::new(self.n());
            for w in self.adj[root].iter().filter(|&w| w > root && alive.contains(w)) {
                extension.insert(w);
            }
            self.grow_connected(alive, root, &mut current, extension, lo, hi, &mut out);
        }
        out.sort();
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn grow_connected(
        &self,
        alive: &VertexSet,
        root: Vertex,
        current: &mut VertexSet,
        mut extension: VertexSet,
        lo: usize,
        hi: usize,
        out: &mut Vec<VertexSet>,
    ) {
        let size = current.len();
        if size >= lo {
            out.push(current.clone());
        }
        if size == hi {
            return;
        }
        let closed = self.closed_neighborhood(current);
        while let Some(w) = extension.first() {
            extension.remove(w);
            let mut next_ext = extension.clone();
            for x in self.adj[w].iter() {
                if x > root && alive.contains(x) && !closed.contains(x) {
                    next_ext.insert(x);
                }
            }
            current.insert(w);
            self.grow_connected(alive, root, current, next_ext, lo, hi, out);
            current.remove(w);
        }
    }

    /// All independent subsets of `pool` with at most `max_size`
    /// elements, including the empty set, in lexicographic order.
    pub fn enumerate_independent_subsets(&self, pool: &VertexSet, max_size: usize) -> Vec<VertexSet> {
        let items = pool.to_vec();
        let mut out = vec![VertexSet::new(self.n())];
        for size in 1..=max_size.min(items.len()) {
            for combo in items.iter().copied().combinations(size) {
                let independent = combo.iter().tuple_combinations().all(|(&a, &b)| !self.has_edge(a, b));
                if independent {
                    out.push(VertexSet::from_vertices(self.n(), combo));
                }
            }
        }
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, vs: &[Vertex]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn induced_subgraph_of_c5_is_a_path() {
        let g = Graph::cycle(5);
        let (sub, map) = g.induced_subgraph(&set(5, &[0, 1, 2])).unwrap();
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);

        let (empty, map) = g.induced_subgraph(&set(5, &[])).unwrap();
        assert_eq!(empty.n(), 0);
        assert!(map.is_empty());

        let (k3, _) = Graph::complete(4).induced_subgraph(&set(4, &[0, 1, 2])).unwrap();
        assert_eq!(k3, Graph::complete(3));
    }

    #[test]
    fn induced_subgraph_rejects_out_of_range() {
        let g = Graph::path(3);
        assert!(g.induced_subgraph(&set(6, &[4])).is_err());
    }

    #[test]
    fn components() {
        assert_eq!(Graph::cycle(5).connected_components().len(), 1);
        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let comps = two_triangles.connected_components();
        assert_eq!(comps, vec![set(6, &[0, 1, 2]), set(6, &[3, 4, 5])]);
        assert_eq!(Graph::new(3).connected_components().len(), 3);
    }

    #[test]
    fn modules() {
        let p4 = Graph::path(4);
        assert!(!p4.is_module(&set(4, &[1, 2])).unwrap());
        assert!(p4.is_module(&set(4, &[3])).unwrap());
        let c4 = Graph::cycle(4);
        assert!(c4.is_module(&set(4, &[0, 2])).unwrap());
        assert!(matches!(c4.is_module(&set(4, &[])), Err(Error::EmptySet)));
    }

    #[test]
    fn p5_detection() {
        let p5 = Graph::path(5);
        let found = p5.find_induced_p5().unwrap();
        assert!(found == [0, 1, 2, 3, 4] || found == [4, 3, 2, 1, 0]);
        assert_eq!(Graph::cycle(5).find_induced_p5(), None);
        let p6 = Graph::path(6);
        let w = p6.find_induced_p5().unwrap();
        for pair in w.windows(2) {
            assert!(p6.has_edge(pair[0], pair[1]));
        }
    }

    #[test]
    fn connected_subsets_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.enumerate_connected_subsets(2, 3).len(), 4);
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.enumerate_connected_subsets(2, 2), vec![set(4, &[0, 1]), set(4, &[0, 2]), set(4, &[0, 3])]);
        assert!(Graph::new(4).enumerate_connected_subsets(2, 2).is_empty());
        assert_eq!(Graph::complete(6).enumerate_connected_subsets(2, 2).len(), 15);
    }

    #[test]
    fn independent_subsets_examples() {
        let edge = Graph::path(2);
        let pool = set(2, &[0, 1]);
        assert_eq!(edge.enumerate_independent_subsets(&pool, 2).len(), 3);
        assert_eq!(Graph::new(2).enumerate_independent_subsets(&pool, 2).len(), 4);
        assert_eq!(Graph::new(2).enumerate_independent_subsets(&set(2, &[]), 2), vec![set(2, &[])]);
    }
}
