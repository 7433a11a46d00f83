//! Construction of a family of connected vertex sets such that some
//! optimum is a disjoint, pairwise non-adjacent union of members.
//!
//! For every color subset `W`, connected dominator set `D` with
//! `|W| <= |D| <= |W| + 1` and surjective `h: D -> W`, the graph is pruned
//! around `D`; every extra set `D'` of at most `|W| + 1` vertices then
//! isolates a closed region `C*` around `D ∪ D'`, and the connected-case
//! solver's answer on `C*` contributes its components to the family.

use std::collections::{HashMap, HashSet};

use itertools::Itertools;
use rayon::prelude::*;

use crate::connected::{ConnectedSolver, ListState};
use crate::control::{Budget, Outcome, SolveOptions};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::pattern::{Color, ColorSet, Instance};

/// Where a family member came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Singleton,
    Guess { colors: ColorSet, dominators: Vec<Vertex>, assignment: Vec<Color>, extra: Vec<Vertex> },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Family {
    members: Vec<VertexSet>,
    provenance: Vec<Provenance>,
    index: HashSet<VertexSet>,
}

impl Family {
    pub fn new() -> Self {
        Family::default()
    }

    /// Adds `member` unless an equal set is already present.
    pub fn insert(&mut self, member: VertexSet, provenance: Provenance) -> bool {
        if member.is_empty() || !self.index.insert(member.clone()) {
            return false;
        }
        self.members.push(member);
        self.provenance.push(provenance);
        true
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn provenance(&self) -> &[Provenance] {
        &self.provenance
    }

    pub fn contains(&self, set: &VertexSet) -> bool {
        self.index.contains(set)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Deletes, until none is left, every vertex adjacent to at least one
/// dominator of each color class.
pub fn prune_common_neighbors(
    g: &Graph,
    alive: &VertexSet,
    dominators: &[Vertex],
    assignment: &[Color],
    colors: ColorSet,
) -> Result<VertexSet> {
    if dominators.len() != assignment.len() {
        return Err(Error::InvalidArgument("one color per dominator".into()));
    }
    for c in colors.iter() {
        if !assignment.contains(&c) {
            return Err(Error::EmptyColorClass(c));
        }
    }
    let mut alive = alive.clone();
    loop {
        let mut reach: Option<VertexSet> = None;
        for c in colors.iter() {
            let mut seen = VertexSet::new(g.n());
            for (&d, _) in dominators.iter().zip(assignment).filter(|(&d, &a)| a == c && alive.contains(d)) {
                seen.union_with(g.neighbors(d));
            }
            reach = Some(match reach {
                None => seen,
                Some(r) => r.intersection(&seen),
            });
        }
        let doomed = match reach {
            Some(r) => r.intersection(&alive),
            None => VertexSet::new(g.n()),
        };
        match doomed.first() {
            Some(u) => alive.remove(u),
            None => return Ok(alive),
        }
    }
}

/// Deletes components of `G - N[D]` that are not modules of the current
/// graph, until every remaining one is.
pub fn prune_non_module_components(g: &Graph, alive: &VertexSet, dominators: &[Vertex]) -> VertexSet {
    let mut alive = alive.clone();
    loop {
        let present = VertexSet::from_vertices(g.n(), dominators.iter().copied().filter(|&d| alive.contains(d)));
        let outside = alive.difference(&g.closed_neighborhood(&present));
        let offender = g
            .components_within(&outside)
            .into_iter()
            .find(|z| !g.is_module_within(&alive, z).expect("components are nonempty"));
        match offender {
            Some(z) => alive.difference_with(&z),
            None => return alive,
        }
    }
}

/// `C* = N[D ∪ D']` in the current graph, shrunk until no vertex of `C*`
/// has a neighbour outside it. Returns the reduced graph's vertex set and
/// the final `C*`, which is then a union of its components.
pub fn core_region(g: &Graph, alive: &VertexSet, dominators: &[Vertex], extra: &[Vertex]) -> (VertexSet, VertexSet) {
    let mut alive = alive.clone();
    let seed = VertexSet::from_vertices(g.n(), dominators.iter().chain(extra).copied().filter(|&v| alive.contains(v)));
    let mut core = g.closed_neighborhood(&seed).intersection(&alive);
    loop {
        let outside = alive.difference(&core);
        let leaking = core.iter().find(|&u| !g.neighbors(u).is_disjoint(&outside));
        match leaking {
            Some(u) => {
                core.remove(u);
                alive.remove(u);
            }
            None => return (alive, core),
        }
    }
}

/// Builds the family. The input graph must be P5-free.
pub fn build_family(inst: &Instance) -> Result<Family> {
    Ok(build_family_with(inst, &SolveOptions::exhaustive())?.value)
}

pub fn build_family_with(inst: &Instance, opts: &SolveOptions) -> Result<Outcome<Family>> {
    if let Some(p5) = inst.graph.find_induced_p5() {
        return Err(Error::NotP5Free(p5));
    }
    let budget = Budget::new(opts.budget);
    let solver = ConnectedSolver::new(inst, &budget);
    let family = opts.install(|| family_from(inst, &solver, &budget));
    Ok(Outcome { value: family, exhaustive: !budget.is_exceeded(), branches: budget.spent() })
}

struct Task {
    colors: ColorSet,
    core: VertexSet,
    provenance: Provenance,
}

pub(crate) fn family_from(inst: &Instance, solver: &ConnectedSolver<'_>, budget: &Budget) -> Family {
    let g = &inst.graph;
    let mut family = Family::new();
    for v in 0..inst.n() {
        if !inst.list(v).is_empty() {
            family.insert(VertexSet::from_vertices(g.n(), [v]), Provenance::Singleton);
        }
    }

    let tasks = collect_tasks(inst, budget);

    let solved: Vec<Vec<VertexSet>> = tasks
        .par_iter()
        .map(|task| {
            let lists = inst.lists().iter().map(|l| l.intersection(task.colors)).collect();
            let state = ListState { alive: task.core.clone(), lists };
            let partial = solver.solve(&state);
            let chosen = VertexSet::from_vertices(g.n(), partial.coloring.iter().map(|&(v, _)| v));
            g.components_within(&chosen)
        })
        .collect();

    for (task, components) in tasks.iter().zip(solved) {
        for comp in components {
            family.insert(comp, task.provenance.clone());
        }
    }
    family
}

/// Enumerates the `(W, D, h, D')` guesses and keeps one task per distinct
/// `(W, C*)`.
fn collect_tasks(inst: &Instance, budget: &Budget) -> Vec<Task> {
    let g = &inst.graph;
    let universe = inst.lists().iter().fold(ColorSet::EMPTY, |acc, &l| acc.union(l));

    let mut tasks = Vec::new();
    let mut seen: HashSet<(ColorSet, VertexSet)> = HashSet::new();
    // Regions depend only on the pruned graph and D.
    let mut regions: HashMap<(VertexSet, Vec<Vertex>), Vec<Region>> = HashMap::new();

    let subsets = (1..=universe.bits()).filter(|&bits| bits & !universe.bits() == 0);
    'colors: for bits in subsets {
        let colors = ColorSet::from_bits(bits);
        let k = colors.len();
        // A connected piece using one loopless color is a single vertex,
        // and singletons are already members.
        if k < 2 {
            continue;
        }
        let palette: Vec<Color> = colors.iter().collect();
        for d in g.enumerate_connected_subsets(k, k + 1) {
            let dominators = d.to_vec();
            for assignment in surjections(dominators.len(), &palette) {
                if !budget.charge() {
                    break 'colors;
                }
                let alive = prune_common_neighbors(g, &g.vertices(), &dominators, &assignment, colors)
                    .expect("assignment is surjective");
                let alive = prune_non_module_components(g, &alive, &dominators);
                let found = regions
                    .entry((alive.clone(), dominators.clone()))
                    .or_insert_with(|| distinct_regions(g, &alive, &dominators, k + 1));
                for (core, extra) in found.iter() {
                    if core.is_empty() || !seen.insert((colors, core.clone())) {
                        continue;
                    }
                    tasks.push(Task {
                        colors,
                        core: core.clone(),
                        provenance: Provenance::Guess {
                            colors,
                            dominators: dominators.clone(),
                            assignment: assignment.clone(),
                            extra: extra.clone(),
                        },
                    });
                }
            }
        }
    }
    tasks
}

/// A core `C*` and the first `D'` that produced it.
type Region = (VertexSet, Vec<Vertex>);

/// Every distinct `C*` over `D' ⊆ alive` with `|D'| <= max_extra`.
fn distinct_regions(g: &Graph, alive: &VertexSet, dominators: &[Vertex], max_extra: usize) -> Vec<Region> {
    let pool = alive.to_vec();
    let mut out: Vec<(VertexSet, Vec<Vertex>)> = Vec::new();
    let mut seen = HashSet::new();
    for size in 0..=max_extra.min(pool.len()) {
        for extra in pool.iter().copied().combinations(size) {
            let (_, core) = core_region(g, alive, dominators, &extra);
            if seen.insert(core.clone()) {
                out.push((core, extra));
            }
        }
    }
    out
}

/// All maps from `0..len` onto `palette` that hit every color.
fn surjections(len: usize, palette: &[Color]) -> Vec<Vec<Color>> {
    let mut out = Vec::new();
    if palette.is_empty() {
        return out;
    }
    for assignment in std::iter::repeat_n(palette.iter().copied(), len).multi_cartesian_product() {
        if palette.iter().all(|c| assignment.contains(c)) {
            out.push(assignment);
        }
    }
    out
}
