//! Small instances with hand-checkable optima. Each expected value is
//! also confirmed against the oracle.

use p5hom::*;

fn w(n: i64) -> Weight {
    Weight::from_integer(n.into())
}

fn k(n: usize) -> PatternGraph {
    PatternGraph::complete(n).unwrap()
}

fn check(inst: &Instance, expected: Weight) {
    assert_eq!(oracle_solve(inst).unwrap().weight, expected, "oracle");
    let sol = solve_full(inst).unwrap();
    assert_eq!(verify_solution(inst, &sol), Ok(()));
    assert_eq!(sol.weight, expected, "pipeline");
}

#[test]
fn c5_into_k2() {
    check(&Instance::new(Graph::cycle(5), k(2)), w(4));
}

#[test]
fn two_triangles_into_k2() {
    let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
    check(&Instance::new(g, k(2)), w(4));
}

#[test]
fn k4_into_k3() {
    check(&Instance::new(Graph::complete(4), k(3)), w(3));
}

#[test]
fn gem_into_k2() {
    let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]).unwrap();
    check(&Instance::new(g, k(2)), w(4));
}

#[test]
fn triangle_with_lists() {
    let lists = vec![ColorSet::singleton(0), ColorSet::singleton(1), ColorSet::full(2)];
    let inst = Instance::new(Graph::complete(3), k(2)).with_lists(lists).unwrap();
    check(&inst, w(2));
}

#[test]
fn path_pattern_on_triangle() {
    // A triangle cannot map into a path, and any two of its vertices can.
    check(&Instance::new(Graph::complete(3), PatternGraph::path(3).unwrap()), w(2));
}

#[test]
fn rational_weights() {
    let weights = vec![Weight::new(1.into(), 2.into()), Weight::new(1.into(), 3.into()), w(1)];
    let inst = Instance::new(Graph::complete(3), k(2)).with_weights(weights).unwrap();
    check(&inst, Weight::new(3.into(), 2.into()));
}

#[test]
fn format_weight_uses_fraction() {
    let inst = Instance::new(Graph::cycle(5), k(2));
    assert_eq!(format_weight(&solve_full(&inst).unwrap().weight), "4/1");
}
