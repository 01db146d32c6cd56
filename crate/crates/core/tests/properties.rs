use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use proptest::prelude::*;

use fusion_census::catalog::{enumerate_ring, DEFAULT_BRAID_ORDER};
use fusion_census::data;
use fusion_census::gauge::{apply_gauge, apply_permutation, random_gauge, GaugeTransform};
use fusion_census::skeleton::{verify_all, SkeletalData};
use fusion_census::{format_cyclo, parse_cyclo, Cyclo, Rational};

const CONDUCTORS: &[u32] = &[1, 3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 24];

fn cyclo() -> impl Strategy<Value = Cyclo> {
    let term = (-6i64..=6, 1i64..=4, 0i64..48);
    (prop::sample::select(CONDUCTORS), prop::collection::vec(term, 0..5)).prop_map(|(n, terms)| {
        terms
            .into_iter()
            .map(|(num, den, k)| Cyclo::from(Rational::new(num, den)) * Cyclo::zeta(n, k))
            .sum()
    })
}

fn nonzero_cyclo() -> impl Strategy<Value = Cyclo> {
    cyclo().prop_filter("nonzero", |x| !x.is_zero())
}

trait Owned {
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
}

impl Owned for Cyclo {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_axioms(a in cyclo(), b in cyclo(), c in cyclo()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(a.mul(&Cyclo::one()), a.clone());
    }

    #[test]
    fn inverses(a in nonzero_cyclo(), b in nonzero_cyclo()) {
        prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        prop_assert_eq!(a.mul(&b).checked_div(&b).unwrap(), a);
    }

    #[test]
    fn equal_values_have_equal_forms(a in cyclo(), b in cyclo()) {
        // (a + b) - b is the same number as a, reached by another route.
        let c = &a.add(&b) - &b;
        prop_assert_eq!(format_cyclo(&c), format_cyclo(&a));
        prop_assert_eq!(c.terms(), a.terms());
    }

    #[test]
    fn conductor_is_minimal(a in cyclo()) {
        let n = a.conductor();
        // Re-embedding into a larger field and back gives the same conductor.
        let lifted = a.mul(&Cyclo::zeta(2 * n.max(1), 0));
        prop_assert_eq!(lifted.conductor(), n);
        if a.is_rational() {
            prop_assert_eq!(n, 1);
        }
    }

    #[test]
    fn conjugation_is_an_involutive_automorphism(a in cyclo(), b in cyclo()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        prop_assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
        let (x, y) = a.approx();
        let (cx, cy) = a.conj().approx();
        prop_assert!((x - cx).abs() < 1e-9 && (y + cy).abs() < 1e-9);
        prop_assert!(a.mul(&a.conj()).is_real());
    }

    #[test]
    fn galois_action_is_multiplicative(a in cyclo(), b in cyclo(), k in prop::sample::select(vec![1i64, -1, 11, 13, 17, 19, 23, 29, 31])) {
        prop_assert_eq!(a.mul(&b).galois(k), a.galois(k).mul(&b.galois(k)));
        prop_assert_eq!(a.add(&b).galois(k), a.galois(k).add(&b.galois(k)));
    }

    #[test]
    fn intervals_enclose_the_value(a in cyclo(), digits in 1u32..12) {
        let iv = a.to_complex(digits);
        let (x, y) = a.approx();
        let eps = 1e-9 * (1.0 + x.abs() + y.abs());
        prop_assert!(iv.re_lo.to_f64().unwrap() <= x + eps && x - eps <= iv.re_hi.to_f64().unwrap());
        prop_assert!(iv.im_lo.to_f64().unwrap() <= y + eps && y - eps <= iv.im_hi.to_f64().unwrap());
        prop_assert!(iv.width().to_f64().unwrap() <= 10f64.powi(-(digits as i32)));
    }

    #[test]
    fn literals_round_trip(a in cyclo()) {
        let text = format_cyclo(&a);
        prop_assert_eq!(parse_cyclo(&text).unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Cyclo>(&json).unwrap(), a);
    }
}

fn catalog_sample() -> Vec<SkeletalData> {
    ["z2", "fib", "ising", "z3", "ty_z3"]
        .into_iter()
        .flat_map(|r| enumerate_ring(r, DEFAULT_BRAID_ORDER).unwrap())
        .map(|(_, d)| d)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gauges_preserve_verdicts_and_census_names(seed in any::<u64>(), which in 0usize..1000) {
        let all = catalog_sample();
        let d = &all[which % all.len()];
        let name = data::census_names()
            .into_iter()
            .find(|n| data::ring(n).as_ref() == Some(d.ring()))
            .unwrap();
        let table = data::census(name).unwrap().unwrap();
        let g = random_gauge(d.ring(), seed, 24);
        let moved = apply_gauge(d, &g).unwrap();
        let verdicts = |x: &SkeletalData| verify_all(x).iter().map(|r| r.pass).collect::<Vec<_>>();
        prop_assert_eq!(verdicts(&moved), verdicts(d));
        prop_assert_eq!(table.evaluate(&moved).unwrap(), table.evaluate(d).unwrap());
    }

    #[test]
    fn gauges_compose_and_invert(s1 in any::<u64>(), s2 in any::<u64>()) {
        let ring = data::ring("ising").unwrap();
        let d = enumerate_ring("ising", DEFAULT_BRAID_ORDER).unwrap().remove(0).1;
        let g1 = random_gauge(&ring, s1, 16);
        let g2 = random_gauge(&ring, s2, 16);
        let step = apply_gauge(&apply_gauge(&d, &g2).unwrap(), &g1).unwrap();
        let once = apply_gauge(&d, &g1.compose(&g2).unwrap()).unwrap();
        prop_assert_eq!(&step, &once);
        let back = apply_gauge(&once, &g1.compose(&g2).unwrap().inverse()).unwrap();
        prop_assert_eq!(back, d);
    }

    #[test]
    fn random_gauges_are_reproducible_roots_of_unity(seed in any::<u64>(), order in 1u32..30) {
        let ring = data::ring("ty_z3").unwrap();
        let g = random_gauge(&ring, seed, order);
        prop_assert_eq!(&g, &random_gauge(&ring, seed, order));
        for (&[a, b, _], v) in g.values() {
            prop_assert!(a != 1 && b != 1);
            prop_assert!(v.pow(order as i64).unwrap().is_one());
        }
    }
}

#[test]
fn automorphisms_preserve_verdicts_and_orbit_columns() {
    for ring in ["z3", "z4", "ty_z4", "ty_z5"] {
        let table = data::census(ring).unwrap().unwrap();
        let group = data::ring(ring).unwrap().automorphisms();
        for (_, d) in enumerate_ring(ring, DEFAULT_BRAID_ORDER).unwrap() {
            let before = table.evaluate(&d).unwrap();
            for sigma in group.iter() {
                let moved = apply_permutation(&d, sigma).unwrap();
                assert!(verify_all(&moved).iter().all(|r| r.pass), "{ring} {sigma}");
                let after = table.evaluate(&moved).unwrap();
                for ((c, x), y) in table.columns().iter().zip(&before).zip(&after) {
                    if matches!(c.item, fusion_census::invariant::InvariantItem::Orbit(_)) {
                        assert_eq!(x, y, "{ring} {sigma} {}", c.name);
                    }
                }
                let back = apply_permutation(&moved, &sigma.inverse()).unwrap();
                assert_eq!(back, d);
            }
        }
    }
}

#[test]
fn explicit_gauge_files_round_trip() {
    let ring = data::ring("fib").unwrap();
    let values: BTreeMap<[usize; 3], Cyclo> = [([2, 2, 2], Cyclo::i())].into();
    let g = GaugeTransform::new(&ring, values).unwrap();
    let back = GaugeTransform::from_json(&g.to_json()).unwrap();
    assert_eq!(back, g);
}
