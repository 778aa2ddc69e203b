//! Worked examples checked end to end through the public API.

use chroma::chromatic::{chromatic_by_stable_partitions, e_coefficients, positivity_report_with, ChromaticOptions};
use chroma::combinat::{enumerate_uios, uio_from_points, Graph, Partition, UnitIntervalOrder};
use chroma::corrects::{
    chi, classify_multipath, covering_corrects_count, delta_switch, is_correct, leftmost_lowest_intersection,
    ChainTail, ClassTag, InsertionRule,
};
use chroma::ghom::{elementary_g, GAnalogueContext};
use chroma::lgvgrid::{build_grid, GridVertex, Multipath};
use chroma::polyring::Poly;
use chroma::symfunc::{convert, expand_concrete, transition_matrix, Basis, SymFunc};
use num_bigint::BigInt;
use num_rational::BigRational;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn int(a: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(a))
}

fn u8_order() -> UnitIntervalOrder {
    UnitIntervalOrder::from_next(&[3, 4, 5, 6, 7, 8, 9, 9]).unwrap()
}

fn u5_grid(k: usize) -> chroma::lgvgrid::GridSpec {
    build_grid(&"3,4,5,6,6".parse().unwrap(), k, &Partition::column(k)).unwrap()
}

/// 1-based element lists to 0-based picks.
fn picks(w: &[&[usize]]) -> Vec<Vec<usize>> {
    w.iter().map(|x| x.iter().map(|e| e - 1).collect()).collect()
}

#[test]
fn half_integer_points() {
    let points: Vec<BigRational> = (1..=8).map(|i| q(i, 2)).collect();
    assert_eq!(uio_from_points(&points).unwrap(), u8_order());
    assert_eq!(u8_order().inc_graph(), Graph::path(8));
    let thirds: Vec<BigRational> = (1..=5).map(|i| q(i, 3)).collect();
    assert_eq!(uio_from_points(&thirds).unwrap(), UnitIntervalOrder::p_nk(5, 2));
}

#[test]
fn basis_examples() {
    let x = Poly::var(2, 0);
    let y = Poly::var(2, 1);
    assert_eq!(expand_concrete(Basis::P, &p("2"), 2), &x.pow(2) + &y.pow(2));

    let t = transition_matrix(Basis::P, Basis::E, 2).unwrap();
    assert_eq!(t.get(&p("2"), &p("2")), int(-2));
    assert_eq!(t.get(&p("2"), &p("1,1")), int(1));

    for n in 1..=6 {
        let e = SymFunc::basis_element(Basis::E, Partition::row(n));
        assert_eq!(convert(&e, Basis::S).unwrap(), SymFunc::basis_element(Basis::S, Partition::column(n)));
    }
    let m = convert(&SymFunc::basis_element(Basis::M, p("2,1")), Basis::P).unwrap();
    let expected = SymFunc::basis_element(Basis::P, p("2,1")).sub(&SymFunc::basis_element(Basis::P, p("3"))).unwrap();
    assert_eq!(m, expected);
}

#[test]
fn complete_graphs() {
    for n in 1..=6 {
        let factorial: i64 = (1..=n as i64).product();
        let c = e_coefficients(&Graph::complete(n)).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[&Partition::row(n)], BigInt::from(factorial));
    }
    assert_eq!(e_coefficients(&Graph::complete(2)).unwrap()[&p("2")], BigInt::from(2));
}

#[test]
fn half_integer_orders_are_e_positive() {
    let opts = ChromaticOptions { accelerator: true, ..ChromaticOptions::default() };
    for n in 1..=8 {
        let u = UnitIntervalOrder::p_nk(n, 1);
        assert!(positivity_report_with(&u.inc_graph(), &opts).unwrap().e_positive, "n={n}");
    }
}

#[test]
fn small_orders_are_s_positive() {
    for n in 1..=6 {
        for u in enumerate_uios(n) {
            let s = convert(&chromatic_by_stable_partitions(&u.inc_graph()), Basis::S).unwrap();
            assert!(s.is_positive(), "{u}");
        }
    }
}

#[test]
fn empty_elementary_analogue_is_one() {
    for n in 1..=4 {
        for u in enumerate_uios(n) {
            let ctx = GAnalogueContext::for_uio(&u);
            assert_eq!(elementary_g(&ctx, 0), Poly::one(n));
            assert!(elementary_g(&ctx, -1).is_zero());
        }
    }
}

#[test]
fn grid_labels() {
    let g = build_grid(&u8_order(), 4, &p("4,4,3,2")).unwrap();
    assert_eq!(g.bases()[0], GridVertex::new(4, 1));
    assert_eq!(g.destinations()[0], GridVertex::new(8, 9));
    let g = build_grid(&"3,4,5,6,6".parse().unwrap(), 7, &Partition::column(5)).unwrap();
    assert_eq!(g.destinations()[0], GridVertex::new(8, 6));
}

#[test]
fn correct_sequence_examples() {
    let u: UnitIntervalOrder = "3,4,5,6,6".parse().unwrap();
    for w in 0..5 {
        assert!(is_correct(&u, &[w]));
    }
    for a in 0..5 {
        for b in 0..5 {
            assert_eq!(is_correct(&u, &[a, b]), u.similar(a, b));
        }
    }
    for n in 1..=6 {
        let factorial: u64 = (1..=n as u64).product();
        assert_eq!(covering_corrects_count(&UnitIntervalOrder::antichain(n)), factorial);
    }
}

#[test]
fn switch_at_leftmost_lowest_crossing() {
    let g = u5_grid(7);
    let fig4 = Multipath::from_weight_vector(&g, &picks(&[&[], &[], &[1, 3, 5], &[], &[2, 4], &[4], &[5]])).unwrap();
    assert_eq!(leftmost_lowest_intersection(&fig4).unwrap(), GridVertex::new(4, 4));
    assert_eq!(fig4.shared_vertices().len(), 3);
    assert_eq!(classify_multipath(&g, &fig4).unwrap().tag, ClassTag::I);
    // paths from a_4 and a_5 end at b_5 and b_4; after the switch they end at b_4 and b_5
    assert_eq!((fig4.sigma()[3], fig4.sigma()[4]), (4, 3));
    let fig5 = delta_switch(&fig4).unwrap();
    assert_eq!((fig5.sigma()[3], fig5.sigma()[4]), (3, 4));
    assert_eq!(fig5.paths()[3].end(), g.destinations()[3]);
    assert_eq!(fig5.paths()[4].end(), g.destinations()[4]);
    assert_eq!(fig5.weight(), fig4.weight());
}

#[test]
fn chi_moves_chain_top_into_tail() {
    let g = u5_grid(7);
    let u = g.uio().clone();
    let fig6 = Multipath::from_weight_vector(&g, &picks(&[&[], &[], &[1, 3, 5], &[2], &[2], &[4], &[5]])).unwrap();
    assert_eq!(classify_multipath(&g, &fig6).unwrap().tag, ClassTag::J);
    let a = ChainTail { l: 3, seq: vec![0, 2, 4, 1, 1, 3, 4] };
    let b = chi(&u, &a, InsertionRule::FirstNotDominated);
    let fig7 = Multipath::from_weight_vector(&g, &b.weight_vector()).unwrap();
    assert_eq!(fig7.weight_vector(), picks(&[&[], &[1, 3], &[2], &[2], &[5], &[4], &[5]]));
    assert_eq!(fig7.weight(), fig6.weight());
    assert_eq!(fig7.sign(), -fig6.sign());
}
