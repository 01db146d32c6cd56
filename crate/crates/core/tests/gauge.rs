use std::collections::BTreeMap;

use fusion_census::catalog::{build_fib, build_pointed_cyclic, enumerate_ring, DEFAULT_BRAID_ORDER};
use fusion_census::gauge::{
    apply_gauge, apply_permutation, evaluate_monomial, gauge_weight, is_de_facto_invariant,
    is_de_jure_invariant, FormalMonomial, GaugeTransform,
};
use fusion_census::invariant::{
    evaluate_item, orbit, permute_monomial, InvariantItem, InvariantValue,
};
use fusion_census::ring::Permutation;
use fusion_census::skeleton::{admissible_f_indices, check_pentagon, SkeletalData};
use fusion_census::{data, Cyclo, Error};

fn mono(s: &str) -> FormalMonomial {
    s.parse().unwrap()
}

fn gauge(ring: &str, values: &[([usize; 3], Cyclo)]) -> GaugeTransform {
    let values: BTreeMap<_, _> = values.iter().cloned().collect();
    GaugeTransform::new(&data::ring(ring).unwrap(), values).unwrap()
}

fn semion() -> SkeletalData {
    enumerate_ring("z2", DEFAULT_BRAID_ORDER)
        .unwrap()
        .into_iter()
        .map(|(_, d)| d)
        .find(|d| d.r(2, 2, 1) == Some(&Cyclo::i()) && d.pivotal().unwrap()[1] == Cyclo::from_int(-1))
        .unwrap()
}

#[test]
fn trivial_gauge_is_identity() {
    let d = semion();
    let id = GaugeTransform::identity(d.ring());
    assert_eq!(apply_gauge(&d, &id).unwrap(), d);
}

#[test]
fn z2_gauge_leaves_symbols_fixed() {
    let d = semion();
    let moved = apply_gauge(&d, &gauge("z2", &[([2, 2, 1], Cyclo::from_int(-1))])).unwrap();
    assert_eq!(moved.f(2, 2, 2, 2, 1, 1), d.f(2, 2, 2, 2, 1, 1));
    assert_eq!(moved.r(2, 2, 1), d.r(2, 2, 1));
}

#[test]
fn fibonacci_gauge_flips_off_diagonal_entries() {
    let d = build_fib(1).unwrap();
    let moved = apply_gauge(&d, &gauge("fib", &[([2, 2, 2], Cyclo::i())])).unwrap();
    for (e, f) in [(1, 1), (2, 2)] {
        assert_eq!(moved.f(2, 2, 2, 2, e, f), d.f(2, 2, 2, 2, e, f));
    }
    for (e, f) in [(1, 2), (2, 1)] {
        assert_eq!(moved.f(2, 2, 2, 2, e, f).unwrap(), &-d.f(2, 2, 2, 2, e, f).unwrap());
    }
}

#[test]
fn vacuum_gauges_are_rejected() {
    let ring = data::ring("z2").unwrap();
    let values = [([1, 2, 2], Cyclo::from_int(-1))].into();
    assert!(matches!(GaugeTransform::new(&ring, values), Err(Error::Vacuum(_))));
    let zero = [([2, 2, 1], Cyclo::zero())].into();
    assert!(GaugeTransform::new(&ring, zero).is_err());
}

#[test]
fn permutations() {
    let z3 = enumerate_ring("z3", DEFAULT_BRAID_ORDER)
        .unwrap()
        .into_iter()
        .map(|(_, d)| d)
        .find(|d| d.has_braiding() && !d.r(2, 2, 3).unwrap().is_one())
        .unwrap();
    let id = Permutation::identity(3);
    assert_eq!(apply_permutation(&z3, &id).unwrap(), z3);

    let swap: Permutation = "(2 3)".parse().unwrap();
    let moved = apply_permutation(&z3, &swap).unwrap();
    assert_eq!(moved.r(3, 3, 2), z3.r(2, 2, 3));
    assert!(check_pentagon(&moved).pass);

    let z4 = enumerate_ring("z4", DEFAULT_BRAID_ORDER).unwrap().pop().unwrap().1;
    let s34 = Permutation::parse_cycles("(3 4)", 4).unwrap();
    let twice = apply_permutation(&apply_permutation(&z4, &s34).unwrap(), &s34).unwrap();
    assert_eq!(twice, z4);

    let not_auto = Permutation::parse_cycles("(1 2)", 3).unwrap();
    assert!(matches!(apply_permutation(&z3, &not_auto), Err(Error::InvalidArgument(_))));
}

#[test]
fn gauge_weights() {
    let m = mono("F[5,5,5,5,6,6]");
    let w = gauge_weight(&m);
    assert_eq!(w, [([6, 5, 5], 1), ([5, 6, 5], -1)].into());
    assert!(!is_de_jure_invariant(&m));
    m.check_admissible(&data::ring("adj_so16_2").unwrap()).unwrap();

    assert!(gauge_weight(&mono("d[2]")).is_empty());
    assert!(gauge_weight(&mono("R[2,2,1]")).is_empty());
    assert!(gauge_weight(&mono("R[3,3,2]^-2")).is_empty());
    assert!(is_de_jure_invariant(&mono("F[2,2,2,2,2,2]")));
    assert!(is_de_jure_invariant(&mono("d[4]")));
    assert!(!is_de_jure_invariant(&mono("R[2,3,3]")));
}

/// Adj(SO(16)_2)-shaped data, not a solution, with every F-symbol 1 except
/// `[F_5^{555}]_6^6 = value`.
fn so16_placeholder(value: Cyclo) -> SkeletalData {
    let ring = data::ring("adj_so16_2").unwrap();
    let f: Vec<_> = admissible_f_indices(&ring)
        .into_iter()
        .map(|i| (i, if i == [5, 5, 5, 5, 6, 6] { value.clone() } else { Cyclo::one() }))
        .collect();
    SkeletalData::new(ring, f, None, None).unwrap()
}

#[test]
fn de_facto_invariance() {
    let m = mono("F[5,5,5,5,6,6]");
    assert!(is_de_facto_invariant(&m, &so16_placeholder(Cyclo::zero())).unwrap());
    assert!(!is_de_facto_invariant(&m, &so16_placeholder(Cyclo::one())).unwrap());
    let fib = build_fib(1).unwrap();
    assert!(is_de_facto_invariant(&mono("F[2,2,2,2,2,2]"), &fib).unwrap());
}

#[test]
fn monomial_evaluation() {
    let fib = build_fib(1).unwrap();
    assert_eq!(evaluate_monomial(&mono("F[2,2,2,2,2,2]"), &fib).unwrap(), Cyclo::phi_bar());
    assert_eq!(
        evaluate_monomial(&mono("R[2,2,1]^2"), &semion()).unwrap(),
        Cyclo::from_int(-1)
    );
    let zero = so16_placeholder(Cyclo::zero());
    assert!(matches!(
        evaluate_monomial(&mono("F[5,5,5,5,6,6]^-1"), &zero),
        Err(Error::UndefinedValue(_))
    ));
    assert!(matches!(
        evaluate_monomial(&mono("R[2,2,1]"), &fib),
        Err(Error::NotApplicable(_))
    ));
}

#[test]
fn monomial_text() {
    let m = mono("F[3,3,3,1,3,3]^1 * R[2,2,1]^-1");
    assert_eq!(m.to_string(), "F[3,3,3,1,3,3] * R[2,2,1]^-1");
    assert_eq!(mono(&m.to_string()), m);
    assert!("F[1,2]".parse::<FormalMonomial>().is_err());
}

#[test]
fn monomial_permutation_and_orbits() {
    let z3 = data::ring("z3").unwrap();
    let swap = Permutation::parse_cycles("(2 3)", 3).unwrap();
    let m = mono("R[2,2,3]");
    let moved = permute_monomial(&swap, &m, &z3).unwrap();
    assert_eq!(moved, mono("R[3,3,2]"));
    assert_eq!(permute_monomial(&swap, &moved, &z3).unwrap(), m);
    assert_eq!(permute_monomial(&Permutation::identity(3), &m, &z3).unwrap(), m);

    let group = z3.automorphisms();
    let o = orbit(&InvariantItem::Mono(mono("d[2]")), &group).unwrap();
    let expected = [InvariantItem::Mono(mono("d[2]")), InvariantItem::Mono(mono("d[3]"))].into();
    assert_eq!(o, expected);

    let trivial = data::ring("ising").unwrap().automorphisms();
    assert_eq!(orbit(&InvariantItem::Mono(mono("d[3]")), &trivial).unwrap().len(), 1);

    let z5 = data::ring("z5").unwrap().automorphisms();
    let tuple = InvariantItem::Tuple(vec![mono("F[2,2,2,1,3,3]"), mono("d[2]")]);
    assert!(orbit(&tuple, &z5).unwrap().len() <= 4);
}

#[test]
fn item_evaluation() {
    // p_2 = -1 with [F_2^{222}]_1^1 = -1 gives d_2 = 1.
    let d = semion();
    let item = InvariantItem::Tuple(vec![mono("F[2,2,2,2,1,1]"), mono("R[2,2,1]"), mono("d[2]")]);
    let v = evaluate_item(&item, &d).unwrap();
    let expect = InvariantValue::TupleVal(vec![
        InvariantValue::Scalar(Cyclo::from_int(-1)),
        InvariantValue::Scalar(Cyclo::i()),
        InvariantValue::Scalar(Cyclo::one()),
    ]);
    assert_eq!(v, expect);

    let unbraided = build_pointed_cyclic(3, 1).unwrap();
    let x1 = InvariantItem::orbit_of(InvariantItem::Mono(mono("R[2,2,3]"))).unwrap();
    assert_eq!(evaluate_item(&x1, &unbraided).unwrap(), InvariantValue::NonBraided);

    let p = vec![Cyclo::one(), Cyclo::zeta(3, 1), Cyclo::zeta(3, 2)];
    let z3 = build_pointed_cyclic(3, 0).unwrap().with_pivotal(Some(p)).unwrap();
    let x2 = InvariantItem::orbit_of(InvariantItem::Mono(mono("d[2]"))).unwrap();
    let expect = InvariantValue::SetVal(
        [Cyclo::zeta(3, 1), Cyclo::zeta(3, 2)].into_iter().map(InvariantValue::Scalar).collect(),
    );
    assert_eq!(evaluate_item(&x2, &z3).unwrap(), expect);
}
