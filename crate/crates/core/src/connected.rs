//! Exact solver for instances that have a connected maximum-weight
//! solution.
//!
//! Each branch guesses a small dominating set `D` of the solution, a color
//! for every dominator and, for every ordered pair of dominator parts
//! `(X_i, X_j)` and color `r`, at most two vertices of `X_i` colored `r`
//! that see every `r`-colored neighbour in `X_j`. The guesses shrink the
//! lists until the parts decouple, and each part is solved recursively on a
//! strictly smaller color universe. Every assembled candidate is checked
//! against the original instance before it can become the answer, so the
//! output is always feasible, for any pattern graph.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Arc, Mutex};

use itertools::Itertools;
use num_traits::Zero;
use rayon::prelude::*;

use crate::control::{Budget, Outcome, SolveOptions};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::mwis::mwis_within;
use crate::pattern::{check_coloring, Color, ColorSet, Instance, PatternGraph, Solution};
use crate::Weight;

/// `(D, X_1, .., X_|D|, R)`: `X_i` holds the neighbours of `d_i` not
/// already claimed by `D` or an earlier part; `R` is everything else.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominatorPartition {
    pub dominators: Vec<Vertex>,
    pub parts: Vec<VertexSet>,
    pub rest: VertexSet,
}

pub fn partition_around(g: &Graph, dominators: &[Vertex]) -> Result<DominatorPartition> {
    if dominators.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut seen = HashSet::new();
    for &d in dominators {
        if d >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: d, n: g.n() });
        }
        if !seen.insert(d) {
            return Err(Error::InvalidArgument(format!("dominator {} repeated", d + 1)));
        }
    }
    Ok(partition_within(g, &g.vertices(), dominators))
}

pub(crate) fn partition_within(g: &Graph, alive: &VertexSet, dominators: &[Vertex]) -> DominatorPartition {
    let mut claimed = VertexSet::from_vertices(g.n(), dominators.iter().copied());
    let mut parts = Vec::with_capacity(dominators.len());
    for &d in dominators {
        let mut part = g.neighbors(d).intersection(alive);
        part.difference_with(&claimed);
        claimed.union_with(&part);
        parts.push(part);
    }
    let rest = alive.difference(&claimed);
    DominatorPartition { dominators: dominators.to_vec(), parts, rest }
}

/// The surviving vertices of an instance and their current lists.
/// Lists of vertices outside `alive` are ignored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListState {
    pub alive: VertexSet,
    pub lists: Vec<ColorSet>,
}

impl ListState {
    pub fn of(inst: &Instance) -> Self {
        ListState { alive: inst.graph.vertices(), lists: inst.lists().to_vec() }
    }

    /// Deletes vertices whose list became empty.
    pub fn drop_empty(&mut self) {
        for v in self.alive.clone().iter() {
            if self.lists[v].is_empty() {
                self.alive.remove(v);
            }
        }
    }

    pub fn universe(&self) -> ColorSet {
        self.alive.iter().fold(ColorSet::EMPTY, |acc, v| acc.union(self.lists[v]))
    }

    /// Materialises the state as a standalone instance over the surviving
    /// vertices, plus the new-to-old vertex map.
    pub fn to_instance(&self, inst: &Instance) -> (Instance, Vec<Vertex>) {
        let (graph, map) = inst.graph.induced_subgraph(&self.alive).expect("alive is a subset of the instance graph");
        let weights = map.iter().map(|&v| inst.weight(v).clone()).collect();
        let lists = map.iter().map(|&v| self.lists[v]).collect();
        let sub = Instance::new(graph, inst.pattern.clone())
            .with_weights(weights)
            .and_then(|i| i.with_lists(lists))
            .expect("weights and lists come from a valid instance");
        (sub, map)
    }

    fn memo_key(&self) -> Vec<u64> {
        let mut key: Vec<u64> = self.alive.blocks().iter().map(|&b| b as u64).collect();
        key.extend(self.alive.iter().map(|v| self.lists[v].bits()));
        key
    }
}

/// The guessed sets `X~_{i,j}^r`, keyed by `(i, j, r)` with `i < j` (part
/// indices are 0-based).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TildeGuess {
    pub sets: BTreeMap<(usize, usize, Color), VertexSet>,
}

impl TildeGuess {
    pub fn new() -> Self {
        TildeGuess::default()
    }

    pub fn insert(&mut self, i: usize, j: usize, color: Color, set: VertexSet) {
        self.sets.insert((i, j, color), set);
    }

    /// Each set must be independent, have at most two vertices and lie in
    /// its part `X_i`, with `i < j`.
    pub fn is_well_formed(&self, g: &Graph, partition: &DominatorPartition) -> bool {
        self.sets.iter().all(|(&(i, j, _), set)| {
            i < j
                && j < partition.parts.len()
                && set.len() <= 2
                && set.is_subset(&partition.parts[i])
                && g.is_independent(set)
        })
    }
}

/// One slot's net effect: vertices of `X_j` whose lists get intersected
/// with `N_H(r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Restriction {
    color: Color,
    targets: VertexSet,
}

/// Applies both list cleanups for a guess and deletes emptied vertices.
/// `R` is deleted as well; dominators are left in place.
pub fn apply_tilde_cleanup(inst: &Instance, partition: &DominatorPartition, guess: &TildeGuess) -> ListState {
    let g = &inst.graph;
    let mut state = ListState::of(inst);
    state.alive.difference_with(&partition.rest);
    let restrictions: Vec<Restriction> = guess
        .sets
        .iter()
        .map(|(&(_, j, color), set)| {
            let mut targets = g.open_neighborhood(set);
            targets.intersect_with(&partition.parts[j]);
            Restriction { color, targets }
        })
        .collect();
    cleanup(g, &inst.pattern, &mut state, partition, &restrictions);
    state
}

fn cleanup(
    g: &Graph,
    h: &PatternGraph,
    state: &mut ListState,
    partition: &DominatorPartition,
    restrictions: &[Restriction],
) {
    // A vertex next to a solution vertex colored r must take a color
    // adjacent to r.
    for rest in restrictions {
        let allowed = h.neighbors(rest.color);
        for v in rest.targets.iter() {
            state.lists[v] = state.lists[v].intersection(allowed);
        }
    }
    // Across parts, shared colors on an edge are dropped from the
    // earlier part's endpoint. Pairs go in lexicographic order.
    loop {
        let mut changed = false;
        for (i, j) in (0..partition.parts.len()).tuple_combinations() {
            for u in partition.parts[i].iter().filter(|&u| state.alive.contains(u)) {
                for v in g.neighbors(u).iter() {
                    if !state.alive.contains(v) || !partition.parts[j].contains(v) {
                        continue;
                    }
                    let shared = state.lists[u].intersection(state.lists[v]);
                    if !shared.is_empty() {
                        state.lists[u] = ColorSet::from_bits(state.lists[u].bits() & !shared.bits());
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    state.drop_empty();
}

/// Base case: every list is a singleton. The answer is a maximum weight
/// independent set of the conflict graph, whose edges are the graph edges
/// whose two fixed colors are not adjacent in the pattern.
pub fn solve_base_singleton_lists(inst: &Instance) -> Result<Solution> {
    if let Some(v) = (0..inst.n()).find(|&v| inst.list(v).len() > 1) {
        return Err(Error::InvalidArgument(format!(
            "vertex {} has {} colors; the base case needs singleton lists",
            v + 1,
            inst.list(v).len()
        )));
    }
    let mut state = ListState::of(inst);
    state.drop_empty();
    let partial = base_case(inst, &state);
    Ok(Solution::from_coloring(inst, partial.coloring.iter().copied()))
}

fn base_case(inst: &Instance, state: &ListState) -> Partial {
    let g = &inst.graph;
    let color = |v: Vertex| state.lists[v].iter().next().expect("nonempty list");
    let mut conflict = Graph::new(g.n());
    for u in state.alive.iter() {
        for v in g.neighbors(u).iter().filter(|&v| v > u && state.alive.contains(v)) {
            if !inst.pattern.has_edge(color(u), color(v)) {
                conflict.add_edge(u, v).expect("edge of the input graph");
            }
        }
    }
    let (chosen, weight) = mwis_within(&conflict, inst.weights(), &state.alive);
    Partial { coloring: chosen.iter().map(|v| (v, color(v))).collect(), weight }
}

#[derive(Clone, Debug)]
pub(crate) struct Partial {
    pub(crate) coloring: Vec<(Vertex, Color)>,
    pub(crate) weight: Weight,
}

impl Partial {
    fn empty() -> Self {
        Partial { coloring: Vec::new(), weight: Weight::zero() }
    }
}

/// Solves sub-instances of one fixed instance, memoising results by
/// `(surviving vertices, lists)`.
pub(crate) struct ConnectedSolver<'a> {
    inst: &'a Instance,
    budget: &'a Budget,
    memo: Mutex<HashMap<Vec<u64>, Arc<Partial>>>,
}

impl<'a> ConnectedSolver<'a> {
    pub(crate) fn new(inst: &'a Instance, budget: &'a Budget) -> Self {
        ConnectedSolver { inst, budget, memo: Mutex::new(HashMap::new()) }
    }

    /// Solves the sub-instance described by `state`.
    pub(crate) fn solve(&self, state: &ListState) -> Arc<Partial> {
        self.solve_inner(state, false)
    }

    /// Like [`solve`](Self::solve), but the dominator guesses of the
    /// outermost level are explored independently of each other (so they
    /// can run on a thread pool without changing the answer).
    pub(crate) fn solve_top(&self, state: &ListState) -> Arc<Partial> {
        self.solve_inner(state, true)
    }

    fn solve_inner(&self, state: &ListState, top: bool) -> Arc<Partial> {
        let mut state = state.clone();
        state.drop_empty();
        if state.alive.is_empty() {
            return Arc::new(Partial::empty());
        }
        let key = state.memo_key();
        if let Some(hit) = self.memo.lock().expect("memo lock").get(&key) {
            return hit.clone();
        }
        let result = Arc::new(self.compute(&state, top));
        if !self.budget.is_exceeded() {
            self.memo.lock().expect("memo lock").insert(key, result.clone());
        }
        result
    }

    fn compute(&self, state: &ListState, top: bool) -> Partial {
        let inst = self.inst;
        let universe = state.universe();
        if universe.len() <= 1 || state.alive.iter().all(|v| state.lists[v].len() == 1) {
            return base_case(inst, state);
        }

        let total = inst.total_weight(state.alive.iter());
        let mut best = self.best_singleton(state);
        if best.weight == total {
            return best;
        }

        let vertices = state.alive.to_vec();
        let max_size = universe.len().max(3).min(vertices.len());
        let candidates = (1..=max_size).flat_map(|size| vertices.iter().copied().combinations(size));

        if top {
            let floor = best.weight.clone();
            let dominator_sets: Vec<Vec<Vertex>> = candidates.collect();
            let per_set: Vec<Option<Partial>> = dominator_sets
                .par_iter()
                .map(|d| {
                    let mut local = Partial { coloring: Vec::new(), weight: floor.clone() };
                    let improved = self.explore_dominators(state, d, &mut local);
                    improved.then_some(local)
                })
                .collect();
            for found in per_set.into_iter().flatten() {
                if found.weight > best.weight {
                    best = found;
                }
            }
        } else {
            for d in candidates {
                self.explore_dominators(state, &d, &mut best);
                if best.weight == total || self.budget.is_exceeded() {
                    break;
                }
            }
        }
        best
    }

    fn best_singleton(&self, state: &ListState) -> Partial {
        let mut best = Partial::empty();
        for v in state.alive.iter() {
            if *self.inst.weight(v) > best.weight {
                let c = state.lists[v].iter().next().expect("nonempty list");
                best = Partial { coloring: vec![(v, c)], weight: self.inst.weight(v).clone() };
            }
        }
        best
    }

    /// Explores every branch with dominator sequence `d`. Returns whether
    /// `best` was improved.
    fn explore_dominators(&self, state: &ListState, d: &[Vertex], best: &mut Partial) -> bool {
        let g = &self.inst.graph;
        let dset = VertexSet::from_vertices(g.n(), d.iter().copied());
        let reach = g.closed_neighborhood(&dset).intersection(&state.alive);
        if self.inst.total_weight(reach.iter()) <= best.weight {
            return false;
        }
        let partition = partition_within(g, &state.alive, d);
        let mut improved = false;
        for colors in self.dominator_colorings(state, d) {
            if self.budget.is_exceeded() {
                break;
            }
            improved |= self.explore_coloring(state, &partition, &colors, best);
        }
        improved
    }

    /// Color assignments to the dominators that respect their lists and
    /// map adjacent dominators to adjacent colors.
    fn dominator_colorings(&self, state: &ListState, d: &[Vertex]) -> Vec<Vec<Color>> {
        let g = &self.inst.graph;
        let h = &self.inst.pattern;
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(d.len());
        fn rec(
            g: &Graph,
            h: &PatternGraph,
            state: &ListState,
            d: &[Vertex],
            current: &mut Vec<Color>,
            out: &mut Vec<Vec<Color>>,
        ) {
            let i = current.len();
            if i == d.len() {
                out.push(current.clone());
                return;
            }
            for c in state.lists[d[i]].iter() {
                let consistent = (0..i).all(|j| !g.has_edge(d[i], d[j]) || h.has_edge(c, current[j]));
                if consistent {
                    current.push(c);
                    rec(g, h, state, d, current, out);
                    current.pop();
                }
            }
        }
        rec(g, h, state, d, &mut current, &mut out);
        out
    }

    fn explore_coloring(
        &self,
        state: &ListState,
        partition: &DominatorPartition,
        colors: &[Color],
        best: &mut Partial,
    ) -> bool {
        let inst = self.inst;
        let g = &inst.graph;
        let h = &inst.pattern;
        let d = &partition.dominators;
        let dset = VertexSet::from_vertices(g.n(), d.iter().copied());
        let dominator_weight = inst.total_weight(d.iter().copied());

        // Colors a solution vertex in X_i could still take once the
        // dominators are colored; guessed tilde sets only use these.
        let mut feasible = state.lists.clone();
        for (i, &di) in d.iter().enumerate() {
            for v in g.neighbors(di).iter() {
                feasible[v] = feasible[v].intersection(h.neighbors(colors[i]));
            }
        }

        let slots = self.tilde_slots(state, partition, &feasible);

        let mut base = state.clone();
        base.alive.difference_with(&partition.rest);

        let mut seen_states: HashSet<Vec<u64>> = HashSet::new();
        let mut improved = false;
        let mut choice = vec![0usize; slots.len()];
        loop {
            if !self.budget.charge() {
                break;
            }
            let restrictions: Vec<Restriction> =
                slots.iter().zip(&choice).map(|(options, &k)| options[k].clone()).collect();

            let mut branch = base.clone();
            cleanup(g, h, &mut branch, partition, &restrictions);
            for (i, &di) in d.iter().enumerate() {
                for v in g.neighbors(di).iter() {
                    branch.lists[v] = branch.lists[v].intersection(h.neighbors(colors[i]));
                }
            }
            branch.alive.difference_with(&dset);
            branch.drop_empty();

            let upper = dominator_weight.clone() + inst.total_weight(branch.alive.iter());
            if upper > best.weight && seen_states.insert(branch.memo_key()) {
                if let Some(candidate) = self.assemble(&branch, partition, colors, &dominator_weight) {
                    if candidate.weight > best.weight {
                        *best = candidate;
                        improved = true;
                    }
                }
            }

            if !advance(&mut choice, &slots) {
                break;
            }
        }
        improved
    }

    /// Options per `(i, j, r)` slot, deduplicated by their effect on the
    /// lists. Slots whose only option is "no effect" are dropped.
    fn tilde_slots(
        &self,
        state: &ListState,
        partition: &DominatorPartition,
        feasible: &[ColorSet],
    ) -> Vec<Vec<Restriction>> {
        let g = &self.inst.graph;
        let h = &self.inst.pattern;
        let parts: Vec<VertexSet> = partition.parts.iter().map(|p| p.intersection(&state.alive)).collect();
        let universe = state.universe();
        let mut slots = Vec::new();
        for (i, j) in (0..parts.len()).tuple_combinations() {
            for r in universe.iter() {
                let pool = VertexSet::from_vertices(g.n(), parts[i].iter().filter(|&x| feasible[x].contains(r)));
                if pool.is_empty() {
                    continue;
                }
                let allowed = h.neighbors(r);
                // Only vertices that would actually lose a color matter.
                let sensitive =
                    VertexSet::from_vertices(g.n(), parts[j].iter().filter(|&v| !state.lists[v].is_subset(allowed)));
                let mut options: Vec<Restriction> = Vec::new();
                for tilde in g.enumerate_independent_subsets(&pool, 2) {
                    let mut targets = g.open_neighborhood(&tilde);
                    targets.intersect_with(&sensitive);
                    let option = Restriction { color: r, targets };
                    if !options.contains(&option) {
                        options.push(option);
                    }
                }
                if options.len() > 1 {
                    slots.push(options);
                }
            }
        }
        slots
    }

    /// Dominators plus the recursive solutions of every part, or `None`
    /// if the union fails the instance's constraints.
    fn assemble(
        &self,
        branch: &ListState,
        partition: &DominatorPartition,
        colors: &[Color],
        dominator_weight: &Weight,
    ) -> Option<Partial> {
        let g = &self.inst.graph;
        let mut coloring: Vec<(Vertex, Color)> =
            partition.dominators.iter().copied().zip(colors.iter().copied()).collect();
        let mut weight = dominator_weight.clone();
        for part in &partition.parts {
            let alive_part = part.intersection(&branch.alive);
            for comp in g.components_within(&alive_part) {
                let sub = ListState { alive: comp, lists: branch.lists.clone() };
                let solved = self.solve(&sub);
                coloring.extend(solved.coloring.iter().copied());
                weight += &solved.weight;
            }
        }
        let map: BTreeMap<Vertex, Color> = coloring.iter().copied().collect();
        check_coloring(self.inst, map.iter()).ok()?;
        Some(Partial { coloring, weight })
    }
}

/// Odometer step over the slot options; `false` once every combination
/// has been produced.
fn advance(choice: &mut [usize], slots: &[Vec<Restriction>]) -> bool {
    for (pos, options) in choice.iter_mut().zip(slots).rev() {
        *pos += 1;
        if *pos < options.len() {
            return true;
        }
        *pos = 0;
    }
    false
}

/// Solves `inst` exactly when it has a connected optimum and the pattern
/// is complete; otherwise returns the best feasible solution found.
pub fn solve_connected_case(inst: &Instance) -> Solution {
    solve_connected_case_with(inst, &SolveOptions::exhaustive()).value
}

pub fn solve_connected_case_with(inst: &Instance, opts: &SolveOptions) -> Outcome<Solution> {
    let budget = Budget::new(opts.budget);
    let solver = ConnectedSolver::new(inst, &budget);
    let partial = opts.install(|| solver.solve_top(&ListState::of(inst)));
    Outcome {
        value: Solution::from_coloring(inst, partial.coloring.iter().copied()),
        exhaustive: !budget.is_exceeded(),
        branches: budget.spent(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::verify_solution;

    fn w(n: i64) -> Weight {
        Weight::from_integer(n.into())
    }

    fn set(n: usize, vs: &[Vertex]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn partition_examples() {
        let p = partition_around(&Graph::cycle(5), &[0, 2]).unwrap();
        assert_eq!(p.parts, vec![set(5, &[1, 4]), set(5, &[3])]);
        assert!(p.rest.is_empty());

        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let p = partition_around(&star, &[0]).unwrap();
        assert_eq!(p.parts, vec![set(4, &[1, 2, 3])]);

        let p = partition_around(&Graph::path(4), &[1]).unwrap();
        assert_eq!(p.parts, vec![set(4, &[0, 2])]);
        assert_eq!(p.rest, set(4, &[3]));

        assert!(partition_around(&Graph::path(4), &[]).is_err());
        assert!(partition_around(&Graph::path(4), &[1, 1]).is_err());
    }

    fn singletons(colors: &[Option<Color>]) -> Vec<ColorSet> {
        colors.iter().map(|c| c.map_or(ColorSet::EMPTY, ColorSet::singleton)).collect()
    }

    #[test]
    fn base_case_examples() {
        let k2 = PatternGraph::complete(2).unwrap();
        let inst = Instance::new(Graph::path(2), k2.clone())
            .with_weights(vec![w(3), w(5)])
            .unwrap()
            .with_lists(singletons(&[Some(0), Some(0)]))
            .unwrap();
        assert_eq!(solve_base_singleton_lists(&inst).unwrap().weight, w(5));

        let inst = Instance::new(Graph::path(2), k2).with_lists(singletons(&[Some(0), Some(1)])).unwrap();
        assert_eq!(solve_base_singleton_lists(&inst).unwrap().weight, w(2));

        // Brute force over the 4 subsets of {u, v}: {u, v} maps 1-3, a
        // non-edge of P3, so the best is a single vertex.
        let inst = Instance::new(Graph::path(2), PatternGraph::path(3).unwrap())
            .with_lists(singletons(&[Some(0), Some(2)]))
            .unwrap();
        assert_eq!(solve_base_singleton_lists(&inst).unwrap().weight, w(1));

        let inst = Instance::new(Graph::path(2), PatternGraph::complete(2).unwrap());
        assert!(solve_base_singleton_lists(&inst).is_err());
    }

    #[test]
    fn cleanup_restricts_to_pattern_neighbourhood() {
        // 0 - 1 - 3 - 2 with dominators (0, 2): X_1 = {1}, X_2 = {3}.
        let g = Graph::from_edges(4, [(0, 1), (1, 3), (3, 2)]).unwrap();
        let p3 = PatternGraph::path(3).unwrap();
        let inst = Instance::new(g.clone(), p3);
        let partition = partition_around(&g, &[0, 2]).unwrap();
        let mut guess = TildeGuess::new();
        guess.insert(0, 1, 1, set(4, &[1]));
        assert!(guess.is_well_formed(&g, &partition));
        let state = apply_tilde_cleanup(&inst, &partition, &guess);
        // Vertex 3 is next to the guessed middle-colored vertex: N(1) = {0, 2}.
        // The second cleanup then drops 0 and 2 from vertex 1's list.
        assert_eq!(state.lists[3], [0, 2].into_iter().collect());
        assert_eq!(state.lists[1], ColorSet::singleton(1));
    }

    #[test]
    fn cleanup_with_k2_removes_the_guessed_color() {
        let g = Graph::from_edges(4, [(0, 1), (1, 3), (3, 2)]).unwrap();
        let inst = Instance::new(g.clone(), PatternGraph::complete(2).unwrap());
        let partition = partition_around(&g, &[0, 2]).unwrap();
        let mut guess = TildeGuess::new();
        guess.insert(0, 1, 0, set(4, &[1]));
        let state = apply_tilde_cleanup(&inst, &partition, &guess);
        assert_eq!(state.lists[3], ColorSet::singleton(1));
        assert_eq!(state.lists[1], ColorSet::singleton(0));
    }

    #[test]
    fn empty_guess_only_runs_second_cleanup() {
        let g = Graph::from_edges(4, [(0, 1), (1, 3), (3, 2)]).unwrap();
        let inst = Instance::new(g.clone(), PatternGraph::complete(2).unwrap());
        let partition = partition_around(&g, &[0, 2]).unwrap();
        let state = apply_tilde_cleanup(&inst, &partition, &TildeGuess::new());
        // Edge 1-3 crosses parts with identical lists; vertex 1 loses both.
        assert!(!state.alive.contains(1));
        assert_eq!(state.lists[3], ColorSet::full(2));
    }

    #[test]
    fn connected_examples() {
        let k2 = PatternGraph::complete(2).unwrap();
        let c5 = Instance::new(Graph::cycle(5), k2.clone());
        let sol = solve_connected_case(&c5);
        assert_eq!(sol.weight, w(4));
        assert_eq!(verify_solution(&c5, &sol), Ok(()));

        let lonely = Instance::new(Graph::new(1), k2.clone()).with_lists(vec![ColorSet::EMPTY]).unwrap();
        let sol = solve_connected_case(&lonely);
        assert!(sol.is_empty());
        assert_eq!(sol.weight, w(0));

        // Triangle, lists {1},{2},{1,2}: all three cannot be 2-colored; any
        // two can.
        let tri = Instance::new(Graph::complete(3), k2)
            .with_lists(vec![ColorSet::singleton(0), ColorSet::singleton(1), ColorSet::full(2)])
            .unwrap();
        assert_eq!(solve_connected_case(&tri).weight, w(2));
    }

    #[test]
    fn parallel_matches_sequential() {
        let inst = Instance::new(Graph::cycle(5), PatternGraph::complete(3).unwrap());
        let seq = solve_connected_case_with(&inst, &SolveOptions::exhaustive());
        let par = solve_connected_case_with(&inst, &SolveOptions::exhaustive().with_parallel(4));
        assert_eq!(seq.value, par.value);
        assert!(seq.exhaustive && par.exhaustive);
    }

    #[test]
    fn tiny_budget_is_reported() {
        let inst = Instance::new(Graph::cycle(5), PatternGraph::complete(3).unwrap());
        let out = solve_connected_case_with(&inst, &SolveOptions::exhaustive().with_budget(Some(1)));
        assert!(!out.exhaustive);
        assert_eq!(verify_solution(&inst, &out.value), Ok(()));
    }
}
