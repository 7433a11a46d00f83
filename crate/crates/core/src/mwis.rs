//! Exact maximum weight independent set by branch and bound.
//!
//! Weights are scaled to a common denominator and searched as integers:
//! `u128` when the total fits, arbitrary precision otherwise. Works on any
//! graph; nothing here relies on P5-freeness.

use std::ops::Add;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::graph::{Graph, Vertex, VertexSet};
use crate::Weight;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    pub graph: Graph,
    pub weights: Vec<Weight>,
}

impl WeightedGraph {
    pub fn new(graph: Graph, weights: Vec<Weight>) -> Self {
        assert_eq!(graph.n(), weights.len(), "one weight per vertex");
        WeightedGraph { graph, weights }
    }
}

/// Returns a maximum weight independent set and its weight.
pub fn solve_mwis(wg: &WeightedGraph) -> (VertexSet, Weight) {
    let alive = wg.graph.vertices();
    mwis_within(&wg.graph, &wg.weights, &alive)
}

/// MWIS of `graph[alive]`.
pub fn mwis_within(graph: &Graph, weights: &[Weight], alive: &VertexSet) -> (VertexSet, Weight) {
    // Zero-weight vertices never help; dropping them keeps the search small.
    let mut alive = alive.clone();
    for v in alive.clone().iter() {
        if weights[v].is_zero() {
            alive.remove(v);
        }
    }
    let denominator = alive.iter().fold(BigInt::one(), |acc, v| acc.lcm(weights[v].denom()));
    let scaled: Vec<BigUint> = (0..graph.n())
        .map(|v| {
            if alive.contains(v) {
                let w = &weights[v];
                (w.numer() * (&denominator / w.denom())).to_biguint().expect("weights are nonnegative")
            } else {
                BigUint::zero()
            }
        })
        .collect();
    let total: BigUint = scaled.iter().sum();

    let chosen = match total.to_u128() {
        Some(_) => {
            let small: Vec<u128> = scaled.iter().map(|w| w.to_u128().unwrap_or(0)).collect();
            Search::new(graph, small).run(&alive)
        }
        None => Search::new(graph, scaled).run(&alive),
    };
    let set = VertexSet::from_vertices(graph.n(), chosen.iter().copied());
    let weight = chosen.iter().map(|&v| &weights[v]).sum();
    (set, weight)
}

trait SearchWeight: Clone + Ord + Zero + Add<Output = Self> {}
impl<T: Clone + Ord + Zero + Add<Output = T>> SearchWeight for T {}

struct Search<'a, W> {
    graph: &'a Graph,
    weights: Vec<W>,
}

struct Best<W> {
    weight: W,
    set: Vec<Vertex>,
}

impl<'a, W: SearchWeight> Search<'a, W> {
    fn new(graph: &'a Graph, weights: Vec<W>) -> Self {
        Search { graph, weights }
    }

    fn run(&self, alive: &VertexSet) -> Vec<Vertex> {
        let (set, _) = self.solve_component_split(alive.clone());
        let mut set = set;
        set.sort_unstable();
        set
    }

    /// Solves each connected component independently.
    fn solve_component_split(&self, alive: VertexSet) -> (Vec<Vertex>, W) {
        let mut set = Vec::new();
        let mut weight = W::zero();
        for comp in self.graph.components_within(&alive) {
            let mut best = Best { weight: W::zero(), set: Vec::new() };
            let mut chosen = Vec::new();
            self.branch(comp, W::zero(), &mut chosen, &mut best);
            weight = weight + best.weight;
            set.extend(best.set);
        }
        (set, weight)
    }

    fn branch(&self, mut alive: VertexSet, mut current: W, chosen: &mut Vec<Vertex>, best: &mut Best<W>) {
        let mark = chosen.len();
        self.reduce(&mut alive, &mut current, chosen);

        if alive.is_empty() {
            if current > best.weight {
                best.weight = current;
                best.set = chosen.clone();
            }
            chosen.truncate(mark);
            return;
        }
        if current.clone() + self.clique_cover_bound(&alive) <= best.weight {
            chosen.truncate(mark);
            return;
        }

        let comps = self.graph.components_within(&alive);
        if comps.len() > 1 {
            let (set, weight) = self.solve_component_split(alive);
            let total = current + weight;
            if total > best.weight {
                best.weight = total;
                let mut all = chosen.clone();
                all.extend(set);
                best.set = all;
            }
            chosen.truncate(mark);
            return;
        }

        let pivot = alive
            .iter()
            .max_by_key(|&v| (self.graph.neighbors(v).intersection_count(&alive), std::cmp::Reverse(v)))
            .expect("alive is nonempty");

        // Include the pivot.
        let mut without_closed = alive.clone();
        without_closed.difference_with(self.graph.neighbors(pivot));
        without_closed.remove(pivot);
        chosen.push(pivot);
        self.branch(without_closed, current.clone() + self.weights[pivot].clone(), chosen, best);
        chosen.pop();

        // Exclude it.
        alive.remove(pivot);
        self.branch(alive, current, chosen, best);
        chosen.truncate(mark);
    }

    /// Degree-0 and degree-1 reductions, applied to a fixpoint.
    fn reduce(&self, alive: &mut VertexSet, current: &mut W, chosen: &mut Vec<Vertex>) {
        loop {
            let mut changed = false;
            for v in alive.clone().iter() {
                if !alive.contains(v) {
                    continue;
                }
                let mut nb = self.graph.neighbors(v).intersection(alive);
                match nb.len() {
                    0 => {
                        alive.remove(v);
                        *current = current.clone() + self.weights[v].clone();
                        chosen.push(v);
                        changed = true;
                    }
                    1 => {
                        let u = nb.first().expect("one neighbour");
                        if self.weights[v] >= self.weights[u] {
                            nb.insert(v);
                            alive.difference_with(&nb);
                            *current = current.clone() + self.weights[v].clone();
                            chosen.push(v);
                            changed = true;
                        }
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }
    }

    /// Greedy weighted clique cover: an independent set takes at most one
    /// vertex per clique, so the sum of clique maxima bounds it.
    fn clique_cover_bound(&self, alive: &VertexSet) -> W {
        let mut order: Vec<Vertex> = alive.iter().collect();
        order.sort_by(|&a, &b| self.weights[b].cmp(&self.weights[a]).then(a.cmp(&b)));
        let mut cliques: Vec<VertexSet> = Vec::new();
        let mut bound = W::zero();
        for v in order {
            let nb = self.graph.neighbors(v);
            match cliques.iter_mut().find(|c| c.is_subset(nb)) {
                Some(c) => c.insert(v),
                None => {
                    bound = bound + self.weights[v].clone();
                    cliques.push(VertexSet::from_vertices(self.graph.n(), [v]));
                }
            }
        }
        bound
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: i64) -> Weight {
        Weight::from_integer(n.into())
    }

    #[test]
    fn c5_unit() {
        let wg = WeightedGraph::new(Graph::cycle(5), vec![w(1); 5]);
        let (set, weight) = solve_mwis(&wg);
        assert_eq!(weight, w(2));
        assert!(wg.graph.is_independent(&set));
    }

    #[test]
    fn k3_takes_heaviest() {
        let wg = WeightedGraph::new(Graph::complete(3), vec![w(1), w(2), w(3)]);
        let (set, weight) = solve_mwis(&wg);
        assert_eq!(weight, w(3));
        assert_eq!(set.to_vec(), vec![2]);
    }

    #[test]
    fn p4_with_heavy_ends() {
        // Brute force over all 16 subsets of a-b-c-d with weights 2,1,1,2:
        // independent sets are {}, singletons, {a,c}, {a,d}, {b,d}; best {a,d} = 4.
        let wg = WeightedGraph::new(Graph::path(4), vec![w(2), w(1), w(1), w(2)]);
        let (set, weight) = solve_mwis(&wg);
        assert_eq!(weight, w(4));
        assert_eq!(set.to_vec(), vec![0, 3]);
    }

    #[test]
    fn empty_and_zero_weights() {
        let wg = WeightedGraph::new(Graph::new(0), vec![]);
        assert_eq!(solve_mwis(&wg).1, w(0));
        let wg = WeightedGraph::new(Graph::path(3), vec![w(0); 3]);
        assert_eq!(solve_mwis(&wg).1, w(0));
    }

    #[test]
    fn huge_weights_use_big_integers() {
        let big = Weight::new(BigInt::from(10).pow(40), BigInt::from(3));
        let wg = WeightedGraph::new(Graph::path(3), vec![big.clone(), w(1), big.clone()]);
        assert_eq!(solve_mwis(&wg).1, big.clone() + big);
    }
}
