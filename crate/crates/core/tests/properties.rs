use itertools::Itertools;
use num_traits::Zero;
use proptest::prelude::*;

use p5hom::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).tuple_combinations::<(usize, usize)>();
            let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_pattern() -> impl Strategy<Value = PatternSpec> {
    prop_oneof![(2usize..=3).prop_map(PatternSpec::Complete), (3usize..=4).prop_map(PatternSpec::Path),]
}

fn arb_instance(max_n: usize) -> impl Strategy<Value = Instance> {
    (0usize..3, 1..=max_n, arb_pattern(), any::<u64>()).prop_map(|(f, n, pattern, seed)| {
        let mut spec = GenSpec::new(GraphFamily::ALL[f], n, pattern, seed);
        spec.density = Density::new(1, 3).unwrap();
        spec.list_density = Density::new(7, 10).unwrap();
        spec.weight_numerators = (0, 9);
        spec.max_denominator = 5;
        generate(&spec).unwrap()
    })
}

fn is_induced_p5(g: &Graph, s: &[Vertex]) -> bool {
    let set = VertexSet::from_vertices(g.n(), s.iter().copied());
    let edges = s.iter().tuple_combinations().filter(|&(&u, &v)| g.has_edge(u, v)).count();
    let max_degree = s.iter().map(|&v| g.neighbors(v).intersection_count(&set)).max().unwrap();
    edges == 4 && max_degree <= 2 && g.is_connected_set(&set)
}

fn brute_mwis(g: &Graph, weights: &[Weight]) -> Weight {
    let n = g.n();
    (0u32..1 << n)
        .map(|mask| VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1)))
        .filter(|s| g.is_independent(s))
        .map(|s| s.iter().map(|v| weights[v].clone()).sum::<Weight>())
        .max()
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pipeline_matches_oracle(inst in arb_instance(7)) {
        let sol = solve_full(&inst).unwrap();
        prop_assert_eq!(verify_solution(&inst, &sol), Ok(()));
        prop_assert_eq!(sol.weight, oracle_solve(&inst).unwrap().weight);
    }

    #[test]
    fn oracle_matches_subset_enumeration(inst in arb_instance(8)) {
        prop_assert_eq!(oracle_solve(&inst).unwrap().weight, subset_enumeration_solve(&inst).unwrap().weight);
    }

    #[test]
    fn connected_case_is_sound(inst in arb_instance(7)) {
        let sol = solve_connected_case(&inst);
        prop_assert_eq!(verify_solution(&inst, &sol), Ok(()));
        prop_assert!(sol.weight <= oracle_solve(&inst).unwrap().weight);
    }

    #[test]
    fn family_members_are_feasible(inst in arb_instance(7)) {
        let family = build_family(&inst).unwrap();
        for member in family.members() {
            prop_assert!(inst.graph.is_connected_set(member));
            prop_assert!(list_hom_within(&inst.graph, &inst.pattern, inst.lists(), member).is_some());
        }
    }

    #[test]
    fn raising_a_weight_never_lowers_the_optimum(inst in arb_instance(6), v in 0usize..6, extra in 1u32..5) {
        let v = v % inst.n();
        let before = solve_full(&inst).unwrap().weight;
        let mut heavier = inst.clone();
        heavier.set_weight(v, inst.weight(v) + Weight::from_integer(extra.into())).unwrap();
        prop_assert!(solve_full(&heavier).unwrap().weight >= before);
    }

    #[test]
    fn mwis_matches_brute_force(g in arb_graph(12), raw in proptest::collection::vec(0u32..20, 12)) {
        let weights: Vec<Weight> = (0..g.n()).map(|v| Weight::new(raw[v].into(), (1 + v as u32 % 3).into())).collect();
        let (set, weight) = solve_mwis(&WeightedGraph::new(g.clone(), weights.clone()));
        prop_assert!(g.is_independent(&set));
        prop_assert_eq!(set.iter().map(|v| weights[v].clone()).sum::<Weight>(), weight.clone());
        prop_assert_eq!(weight, brute_mwis(&g, &weights));
    }

    #[test]
    fn p5_detector_matches_subset_check(g in arb_graph(9)) {
        let exhaustive = (0..g.n()).combinations(5).any(|s| is_induced_p5(&g, &s));
        match g.find_induced_p5() {
            Some(w) => {
                prop_assert!(is_induced_p5(&g, &w));
                for i in 0..4 {
                    prop_assert!(g.has_edge(w[i], w[i + 1]));
                }
            }
            None => prop_assert!(!exhaustive),
        }
    }

    #[test]
    fn instance_text_round_trips(inst in arb_instance(8)) {
        prop_assert_eq!(parse_instance(&write_instance(&inst)).unwrap(), inst);
    }

    #[test]
    fn removing_colors_never_raises_the_optimum(inst in arb_instance(6), v in 0usize..6) {
        let v = v % inst.n();
        let before = solve_full(&inst).unwrap().weight;
        let mut narrower = inst.clone();
        narrower.set_list(v, ColorSet::EMPTY).unwrap();
        let after = solve_full(&narrower).unwrap().weight;
        prop_assert!(after <= before);
        prop_assert!(after >= before - inst.weight(v));
    }
}

#[test]
fn zero_weights_are_allowed() {
    let inst = Instance::new(Graph::cycle(5), PatternGraph::complete(2).unwrap())
        .with_weights(vec![Weight::zero(); 5])
        .unwrap();
    assert!(solve_full(&inst).unwrap().weight.is_zero());
}
