//! The full pipeline: family, blob graph, MWIS, and back to a solution.

use rayon::prelude::*;

use crate::connected::ConnectedSolver;
use crate::control::{Budget, SolveOptions};
use crate::error::{Error, Result};
use crate::family::{family_from, Family};
use crate::graph::{Graph, VertexSet};
use crate::mwis::{solve_mwis, WeightedGraph};
use crate::pattern::{list_hom_within, verify_solution, Instance, Solution};
use crate::Weight;

/// Two sets touch if they share a vertex or an edge joins them.
pub fn touches(g: &Graph, a: &VertexSet, b: &VertexSet) -> bool {
    !a.is_disjoint(b) || a.iter().any(|u| !g.neighbors(u).is_disjoint(b))
}

/// One vertex per family member, edges between touching members, and
/// member weight as vertex weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlobGraph {
    pub weighted: WeightedGraph,
    pub members: Vec<VertexSet>,
}

pub fn build_blob_graph(inst: &Instance, family: &Family) -> BlobGraph {
    let g = &inst.graph;
    let members = family.members().to_vec();
    // N[C] per member turns each touch test into one disjointness check.
    let reach: Vec<VertexSet> = members.iter().map(|m| g.closed_neighborhood(m)).collect();
    let rows: Vec<Vec<usize>> = (0..members.len())
        .into_par_iter()
        .map(|i| (i + 1..members.len()).filter(|&j| !reach[i].is_disjoint(&members[j])).collect())
        .collect();
    let mut blob = Graph::new(members.len());
    for (i, row) in rows.into_iter().enumerate() {
        for j in row {
            blob.add_edge(i, j).expect("distinct blob vertices");
        }
    }
    let weights: Vec<Weight> = members.iter().map(|m| inst.total_weight(m.iter())).collect();
    BlobGraph { weighted: WeightedGraph::new(blob, weights), members }
}

/// Everything the pipeline produced for one instance.
#[derive(Clone, Debug)]
pub struct PipelineOutcome {
    pub solution: Solution,
    pub family: Family,
    pub blob: BlobGraph,
    /// Blob vertices of the chosen independent set.
    pub selected: Vec<usize>,
    pub exhaustive: bool,
    pub branches: u64,
}

/// Solves a P5-free instance exactly.
pub fn solve_full(inst: &Instance) -> Result<Solution> {
    Ok(solve_full_with(inst, &SolveOptions::exhaustive())?.solution)
}

pub fn solve_full_with(inst: &Instance, opts: &SolveOptions) -> Result<PipelineOutcome> {
    if let Some(p5) = inst.graph.find_induced_p5() {
        return Err(Error::NotP5Free(p5));
    }
    let budget = Budget::new(opts.budget);
    let solver = ConnectedSolver::new(inst, &budget);
    let family = opts.install(|| family_from(inst, &solver, &budget));
    let blob = opts.install(|| build_blob_graph(inst, &family));
    let (independent, weight) = solve_mwis(&blob.weighted);
    let selected = independent.to_vec();

    let mut solution = Solution::empty();
    for &b in &selected {
        let member = &blob.members[b];
        let coloring = list_hom_within(&inst.graph, &inst.pattern, inst.lists(), member)
            .ok_or_else(|| Error::InfeasibleMember(member.to_vec()))?;
        solution.coloring.extend(coloring);
    }
    solution.weight = weight;
    if let Err(violation) = verify_solution(inst, &solution) {
        // Selected members are pairwise non-touching, so this only fires if
        // a member was infeasible to begin with.
        return Err(Error::InvalidArgument(format!("assembled solution is invalid: {violation}")));
    }
    Ok(PipelineOutcome {
        solution,
        family,
        blob,
        selected,
        exhaustive: !budget.is_exceeded(),
        branches: budget.spent(),
    })
}
