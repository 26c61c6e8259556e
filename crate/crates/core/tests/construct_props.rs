use emdim::{
    chain_silicate, construct_ers, construct_ers_by, cyclic_silicate, exact_edge_metric_dimension, is_edge_resolving,
    is_minimal, labeling_chain, labeling_cyclic, predicted_dimension, Family, SolveOptions, Target,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

#[test]
fn chain_constructions_up_to_200() {
    for n in 1..=200 {
        let s = chain_silicate(n).unwrap();
        let lab = labeling_chain(n).unwrap();
        let set = construct_ers(&s, &lab).unwrap();
        assert_eq!(set.len(), lab.total());
        assert_eq!(set.len(), predicted_dimension(Family::Chain, n).unwrap());
        assert!(is_edge_resolving(&s.graph, &set).unwrap().resolving, "CS_{n}");
    }
}

#[test]
fn cyclic_constructions_up_to_200() {
    for n in 3..=200 {
        let s = cyclic_silicate(n).unwrap();
        let lab = labeling_cyclic(n).unwrap();
        let set = construct_ers(&s, &lab).unwrap();
        assert_eq!(set.len(), lab.total());
        assert_eq!(set.len(), predicted_dimension(Family::Cyclic, n).unwrap());
        // n = 3 is the one size where picking only degree-3 vertices cannot work
        assert_eq!(is_edge_resolving(&s.graph, &set).unwrap().resolving, n != 3, "CC_{n}");
    }
}

#[test]
fn small_constructions_are_optimal() {
    for n in 1..=6 {
        let s = chain_silicate(n).unwrap();
        let set = construct_ers(&s, &labeling_chain(n).unwrap()).unwrap();
        let exact = exact_edge_metric_dimension(&s.graph, &SolveOptions::edge()).unwrap();
        assert_eq!(exact.dimension, Some(set.len()), "CS_{n}");
    }
    for n in 4..=7 {
        let s = cyclic_silicate(n).unwrap();
        let set = construct_ers(&s, &labeling_cyclic(n).unwrap()).unwrap();
        let exact = exact_edge_metric_dimension(&s.graph, &SolveOptions::edge()).unwrap();
        assert_eq!(exact.dimension, Some(set.len()), "CC_{n}");
    }
}

#[test]
fn cc4_construction_is_minimal() {
    let s = cyclic_silicate(4).unwrap();
    let set = construct_ers(&s, &labeling_cyclic(4).unwrap()).unwrap();
    assert!(is_minimal(&s.graph, &set, Target::Edge).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn any_choice_of_cubic_vertices_works(chain: bool, n in 1usize..=30, seed: u64) {
        let (s, lab) = if chain {
            (chain_silicate(n).unwrap(), labeling_chain(n).unwrap())
        } else {
            let n = n.max(4);
            (cyclic_silicate(n).unwrap(), labeling_cyclic(n).unwrap())
        };
        let mut rng = StdRng::seed_from_u64(seed);
        let set = construct_ers_by(&s, &lab, |_, cubic, count| {
            cubic.choose_multiple(&mut rng, count).copied().collect()
        })
        .unwrap();
        prop_assert_eq!(set.len(), lab.total());
        prop_assert!(is_edge_resolving(&s.graph, &set).unwrap().resolving, "{} {:?}", s.spec, set);
    }
}
