//! Exhaustive reference solver. Shares nothing with the pipeline beyond
//! the data model, so it can referee differential tests.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{Vertex, VertexSet};
use crate::pattern::{list_hom_within, Color, Instance, Solution};
use crate::Weight;

/// Largest instance the oracle accepts without forcing.
pub const DEFAULT_CAP: usize = 14;

pub fn oracle_solve(inst: &Instance) -> Result<Solution> {
    oracle_solve_capped(inst, Some(DEFAULT_CAP))
}

/// Backtracking over vertices in id order; each vertex is either left out
/// or included with one of its list colors. `cap: None` removes the size
/// limit.
pub fn oracle_solve_capped(inst: &Instance, cap: Option<usize>) -> Result<Solution> {
    if let Some(cap) = cap {
        if inst.n() > cap {
            return Err(Error::TooLarge { n: inst.n(), cap });
        }
    }
    let n = inst.n();
    // remaining[i]: weight still obtainable from vertices i.. .
    let mut remaining = vec![Weight::zero(); n + 1];
    for v in (0..n).rev() {
        remaining[v] = remaining[v + 1].clone();
        if !inst.list(v).is_empty() {
            remaining[v] += inst.weight(v);
        }
    }
    let mut search =
        Backtrack { inst, remaining, colors: vec![None; n], best_weight: Weight::zero(), best: Vec::new() };
    search.visit(0, Weight::zero());
    let coloring: BTreeMap<Vertex, Color> = search.best.into_iter().collect();
    Ok(Solution { coloring, weight: search.best_weight })
}

struct Backtrack<'a> {
    inst: &'a Instance,
    remaining: Vec<Weight>,
    colors: Vec<Option<Color>>,
    best_weight: Weight,
    best: Vec<(Vertex, Color)>,
}

impl Backtrack<'_> {
    fn visit(&mut self, v: Vertex, current: Weight) {
        if current.clone() + &self.remaining[v] <= self.best_weight {
            return;
        }
        if v == self.inst.n() {
            self.best_weight = current;
            self.best = self.colors.iter().enumerate().filter_map(|(u, c)| c.map(|c| (u, c))).collect();
            return;
        }
        let g = &self.inst.graph;
        let h = &self.inst.pattern;
        for c in self.inst.list(v).iter() {
            let compatible =
                g.neighbors(v).iter().take_while(|&u| u < v).all(|u| self.colors[u].is_none_or(|cu| h.has_edge(c, cu)));
            if compatible {
                self.colors[v] = Some(c);
                self.visit(v + 1, current.clone() + self.inst.weight(v));
                self.colors[v] = None;
            }
        }
        self.visit(v + 1, current);
    }
}

/// Literal enumeration of all `2^n` vertex subsets, each checked with the
/// list homomorphism finder. Only for cross-checking the oracle.
pub fn subset_enumeration_solve(inst: &Instance) -> Result<Solution> {
    let n = inst.n();
    if n > 20 {
        return Err(Error::TooLarge { n, cap: 20 });
    }
    let mut best = Solution::empty();
    for mask in 0u32..(1u32 << n) {
        let subset = VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
        let weight = inst.total_weight(subset.iter());
        if weight <= best.weight {
            continue;
        }
        if let Some(coloring) = list_hom_within(&inst.graph, &inst.pattern, inst.lists(), &subset) {
            best = Solution { coloring, weight };
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::pattern::{verify_solution, ColorSet, PatternGraph};

    fn w(n: i64) -> Weight {
        Weight::from_integer(n.into())
    }

    #[test]
    fn c5_k2() {
        let inst = Instance::new(Graph::cycle(5), PatternGraph::complete(2).unwrap());
        let sol = oracle_solve(&inst).unwrap();
        assert_eq!(sol.weight, w(4));
        assert_eq!(verify_solution(&inst, &sol), Ok(()));
        assert_eq!(subset_enumeration_solve(&inst).unwrap().weight, w(4));
    }

    #[test]
    fn empty_lists_give_zero() {
        let inst = Instance::new(Graph::complete(4), PatternGraph::complete(2).unwrap())
            .with_lists(vec![ColorSet::EMPTY; 4])
            .unwrap();
        assert_eq!(oracle_solve(&inst).unwrap().weight, w(0));
    }

    #[test]
    fn edgeless_takes_everything() {
        let weights = vec![w(3), Weight::new(1.into(), 2.into()), w(7)];
        let inst = Instance::new(Graph::new(3), PatternGraph::complete(2).unwrap()).with_weights(weights).unwrap();
        assert_eq!(oracle_solve(&inst).unwrap().weight, Weight::new(21.into(), 2.into()));
    }

    #[test]
    fn cap_is_enforced() {
        let inst = Instance::new(Graph::new(15), PatternGraph::complete(2).unwrap());
        assert_eq!(oracle_solve(&inst), Err(Error::TooLarge { n: 15, cap: 14 }));
        assert!(oracle_solve_capped(&inst, None).is_ok());
    }
}
