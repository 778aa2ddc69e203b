use chroma::chromatic::{
    acyclic_orientation_sinks, check_sink_theorem, chromatic_by_colorings, chromatic_by_stable_partitions,
};
use chroma::combinat::{realize, uio_from_points, uio_recognize, Graph, Partition, UnitIntervalOrder};
use chroma::corrects::{covering_corrects_count, is_correct, is_prefix_connected, power_via_corrects};
use chroma::ghom::{power_g, schur_g, GAnalogueContext};
use chroma::lgvgrid::{build_grid, lgv_check, non_intersecting_multipaths, schur_via_lgv};
use chroma::symfunc::{convert, Basis, SymFunc};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

/// Random UIO on `1..=max_n` elements from a valid 1-based next-vector.
fn uio_strategy(max_n: usize) -> impl Strategy<Value = UnitIntervalOrder> {
    (1..=max_n).prop_flat_map(|n| prop::collection::vec(any::<u16>(), n)).prop_map(|seeds| {
        let n = seeds.len();
        let mut next = Vec::with_capacity(n);
        let mut prev = 0;
        for (i, s) in seeds.iter().enumerate() {
            let lo = prev.max(i + 2);
            let v = lo + *s as usize % (n + 2 - lo);
            next.push(v);
            prev = v;
        }
        UnitIntervalOrder::from_next(&next).expect("constructed valid")
    })
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| (Just(n), any::<u64>())).prop_map(|(n, mask)| {
        let pairs = n * (n - 1) / 2;
        Graph::from_edge_mask(n, if pairs == 0 { 0 } else { mask & ((1u64 << pairs) - 1) })
    })
}

fn partition_strategy(max_weight: usize) -> impl Strategy<Value = Partition> {
    (1..=max_weight).prop_flat_map(|d| prop::sample::select(chroma::combinat::partitions_of(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn next_vector_text_round_trips(u in uio_strategy(9)) {
        let back: UnitIntervalOrder = u.to_string().parse().unwrap();
        prop_assert_eq!(back, u);
    }

    #[test]
    fn realization_recovers_the_order(u in uio_strategy(9)) {
        let points = realize(&u);
        prop_assert_eq!(uio_from_points(&points).unwrap(), u.clone());
        prop_assert_eq!(uio_recognize(&u.to_poset()).unwrap(), u);
    }

    #[test]
    fn two_chromatic_algorithms_agree(g in graph_strategy(6)) {
        prop_assert_eq!(chromatic_by_colorings(&g), chromatic_by_stable_partitions(&g));
    }

    #[test]
    fn sink_theorem(g in graph_strategy(6)) {
        prop_assert!(check_sink_theorem(&g).unwrap());
        let total: u64 = acyclic_orientation_sinks(&g).values().sum();
        prop_assert!(total >= 1);
    }

    #[test]
    fn power_sums_from_corrects(u in uio_strategy(6), k in 1usize..=5) {
        let ctx = GAnalogueContext::for_uio(&u);
        prop_assert_eq!(power_via_corrects(&u, k).unwrap(), power_g(&ctx, k));
    }

    #[test]
    fn covering_count_is_top_e_coefficient(u in uio_strategy(6)) {
        let e = convert(&chromatic_by_stable_partitions(&u.inc_graph()), Basis::E).unwrap();
        let c = e.coeff(&Partition::row(u.len()));
        prop_assert_eq!(c, BigRational::from_integer(BigInt::from(covering_corrects_count(&u))));
    }

    #[test]
    fn prefix_connectivity_characterizes_correctness(u in uio_strategy(5), seq in prop::collection::vec(0usize..5, 1..=6)) {
        let seq: Vec<usize> = seq.into_iter().map(|x| x % u.len()).collect();
        let no_descent = seq.windows(2).all(|w| !u.gt(w[0], w[1]));
        prop_assert_eq!(is_correct(&u, &seq), no_descent && is_prefix_connected(&u, &seq));
    }

    #[test]
    fn schur_analogues_from_paths(u in uio_strategy(5), lambda in partition_strategy(4)) {
        let ctx = GAnalogueContext::for_uio(&u);
        let s = schur_g(&ctx, &lambda);
        prop_assert!(s.terms().all(|(_, c)| c >= &BigInt::from(0)));
        prop_assert_eq!(schur_via_lgv(&u, &lambda.conjugate()).unwrap(), s);
    }

    #[test]
    fn lgv_on_random_grids(u in uio_strategy(4), lambda in partition_strategy(4)) {
        let g = build_grid(&u, lambda.len(), &lambda).unwrap();
        prop_assert!(lgv_check(&g).unwrap());
        for mp in non_intersecting_multipaths(&g).unwrap() {
            prop_assert!(mp.sigma().iter().enumerate().all(|(i, &j)| i == j));
        }
    }

    #[test]
    fn conversions_round_trip(lambda in partition_strategy(6), from in 0usize..4, to in 0usize..4) {
        let f = SymFunc::basis_element(Basis::ALL[from], lambda);
        let there = convert(&f, Basis::ALL[to]).unwrap();
        prop_assert_eq!(convert(&there, Basis::ALL[from]).unwrap(), f);
    }
}
