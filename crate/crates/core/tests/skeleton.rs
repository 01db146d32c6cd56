use std::collections::BTreeMap;

use fusion_census::catalog::{build_fib, build_ising, build_pointed_cyclic, solve_braidings, solve_pivotals};
use fusion_census::ring::FusionRing;
use fusion_census::skeleton::{
    check_hexagon, check_pentagon, check_pivotal, check_vacuum, classify_properties, is_spherical,
    quantum_dims, r_slots, s_matrix, SkeletalData, Unitarity,
};
use fusion_census::{data, Cyclo, Error};

fn int(v: i64) -> Cyclo {
    Cyclo::from_int(v)
}

/// Z2 data with cocycle class `q`, `R_1^{22} = r` and `p_2 = p`.
fn z2(q: u32, r: Option<Cyclo>, p: Option<Cyclo>) -> SkeletalData {
    let base = build_pointed_cyclic(2, q).unwrap();
    let rs = r.map(|r| {
        r_slots(base.ring())
            .into_iter()
            .map(|s| (s, if s == [2, 2, 1] { r.clone() } else { Cyclo::one() }))
            .collect::<BTreeMap<_, _>>()
    });
    base.with_braiding(rs)
        .unwrap()
        .with_pivotal(p.map(|p| vec![Cyclo::one(), p]))
        .unwrap()
}

fn trivial() -> SkeletalData {
    build_pointed_cyclic(1, 0).unwrap()
}

#[test]
fn ring_validation() {
    let z2 = data::ring("z2").unwrap();
    assert_eq!(z2.dual(2), 2);
    let z3 = data::ring("z3").unwrap();
    assert_eq!((z3.dual(2), z3.dual(3)), (3, 2));
    // Forcing N_{22}^2 = 1 on Z2 gives the (valid) Fibonacci ring.
    let fib = FusionRing::from_products(&[vec![vec![1], vec![2]], vec![vec![2], vec![1, 2]]]);
    assert_eq!(fib.unwrap(), data::ring("fib").unwrap());
    let bad = FusionRing::from_products(&[
        vec![vec![1], vec![2], vec![3]],
        vec![vec![2], vec![1], vec![3]],
        vec![vec![3], vec![3], vec![1, 3]],
    ]);
    assert!(matches!(bad, Err(Error::InvalidRing(_))));
}

#[test]
fn frobenius_perron_dimensions() {
    let close = |xs: Vec<f64>, ys: &[f64]| xs.iter().zip(ys).all(|(x, y)| (x - y).abs() < 1e-9);
    assert!(close(data::ring("z5").unwrap().fp_dims(1e-12), &[1.0; 5]));
    assert!(close(data::ring("fib").unwrap().fp_dims(1e-12), &[1.0, 1.618_033_988_749_895]));
    assert!(close(data::ring("ising").unwrap().fp_dims(1e-12), &[1.0, 1.0, std::f64::consts::SQRT_2]));
}

#[test]
fn automorphism_groups() {
    let show = |name: &str| -> Vec<String> {
        data::ring(name).unwrap().automorphisms().iter().map(|p| p.to_string()).collect()
    };
    assert_eq!(show("ising"), ["()"]);
    assert_eq!(show("z3"), ["()", "(2 3)"]);
    assert_eq!(show("z2xz2").len(), 6);
}

#[test]
fn vacuum_checks() {
    assert!(check_vacuum(&build_fib(1).unwrap()).pass);
    let broken = z2(0, None, None).map_f(|i, v| if *i == [1, 2, 2, 1, 2, 1] { int(2) } else { v.clone() });
    let rep = check_vacuum(&broken);
    assert!(!rep.pass);
    assert!(rep.counterexamples.iter().any(|c| c.indices == [1, 2, 2, 1, 2, 1]));
}

#[test]
fn missing_entries_are_rejected_at_construction() {
    let d = build_fib(1).unwrap();
    let f: Vec<_> = d.f_table().iter().skip(1).map(|(i, v)| (*i, v.clone())).collect();
    assert!(SkeletalData::new(d.ring().clone(), f, None, None).is_err());
}

#[test]
fn pentagon_checks() {
    assert!(check_pentagon(&trivial()).pass);
    assert!(check_pentagon(&z2(1, None, None)).pass);
    let fib = build_fib(1).unwrap();
    assert!(check_pentagon(&fib).pass);
    let broken = fib.map_f(|i, v| if *i == [2, 2, 2, 2, 1, 2] { -v } else { v.clone() });
    let rep = check_pentagon(&broken);
    assert!(!rep.pass);
    assert!(!rep.counterexamples.is_empty());
    assert_eq!(rep.counterexamples[0].equation, "pentagon");
}

#[test]
fn hexagon_checks() {
    assert!(check_hexagon(&z2(0, Some(int(-1)), None)).unwrap().pass);
    assert!(!check_hexagon(&z2(0, Some(Cyclo::i()), None)).unwrap().pass);
    assert!(matches!(check_hexagon(&z2(0, None, None)), Err(Error::NotApplicable(_))));

    // Class 1 admits R_1^{22} = ζ_5^3.
    let fib = build_fib(1).unwrap();
    let found = solve_braidings(&fib, 240)
        .unwrap()
        .into_iter()
        .find(|r| r[&[2, 2, 1]] == Cyclo::zeta(5, 3))
        .expect("a braiding with R_1^{22} = ζ_5^3");
    let braided = fib.with_braiding(Some(found)).unwrap();
    assert!(check_hexagon(&braided).unwrap().pass);
}

#[test]
fn pivotal_checks() {
    assert!(check_pivotal(&z2(0, None, Some(int(1)))).unwrap().pass);
    assert!(!check_pivotal(&z2(0, None, Some(Cyclo::i()))).unwrap().pass);
    assert!(matches!(check_pivotal(&z2(0, None, None)), Err(Error::NotApplicable(_))));
    let fib = build_fib(1).unwrap();
    let p = solve_pivotals(&fib).unwrap().remove(0);
    assert!(check_pivotal(&fib.with_pivotal(Some(p)).unwrap()).unwrap().pass);
}

#[test]
fn quantum_dimensions() {
    let t = trivial().with_pivotal(Some(vec![Cyclo::one()])).unwrap();
    assert_eq!(quantum_dims(&t).unwrap(), [Cyclo::one()]);
    assert_eq!(quantum_dims(&z2(0, None, Some(int(-1)))).unwrap()[1], int(-1));

    let ising = build_ising(1).unwrap();
    let dims: Vec<Cyclo> = solve_pivotals(&ising)
        .unwrap()
        .into_iter()
        .map(|p| quantum_dims(&ising.with_pivotal(Some(p)).unwrap()).unwrap()[2].clone())
        .collect();
    assert!(dims.contains(&Cyclo::sqrt_int(2)));
}

#[test]
fn sphericity() {
    assert!(is_spherical(&z2(0, None, Some(int(1)))).unwrap());
    let z3 = build_pointed_cyclic(3, 0).unwrap();
    let p = vec![Cyclo::one(), Cyclo::zeta(3, 1), Cyclo::zeta(3, 2)];
    let d = z3.with_pivotal(Some(p)).unwrap();
    assert!(check_pivotal(&d).unwrap().pass);
    assert!(!is_spherical(&d).unwrap());
    let ones = z3.with_pivotal(Some(vec![Cyclo::one(); 3])).unwrap();
    assert!(is_spherical(&ones).unwrap());
}

#[test]
fn s_matrices() {
    let t = trivial()
        .with_braiding(Some([([1, 1, 1], Cyclo::one())].into()))
        .unwrap()
        .with_pivotal(Some(vec![Cyclo::one()]))
        .unwrap();
    assert_eq!(s_matrix(&t).unwrap(), vec![vec![Cyclo::one()]]);

    let semion = z2(1, Some(Cyclo::i()), Some(int(-1)));
    assert_eq!(quantum_dims(&semion).unwrap()[1], int(1));
    assert_eq!(s_matrix(&semion).unwrap(), vec![vec![int(1), int(1)], vec![int(1), int(-1)]]);

    let boson = z2(0, Some(int(1)), Some(int(1)));
    assert_eq!(s_matrix(&boson).unwrap(), vec![vec![int(1); 2]; 2]);
    assert!(matches!(s_matrix(&z2(0, None, Some(int(1)))), Err(Error::NotApplicable(_))));
}

#[test]
fn property_flags() {
    let semion = classify_properties(&z2(1, Some(Cyclo::i()), Some(int(-1))));
    assert!(semion.braided && semion.spherical && semion.ribbon && semion.modular);
    assert_eq!(semion.unitary, Unitarity::YesInGivenGauge);

    let boson = classify_properties(&z2(0, Some(int(1)), Some(int(1))));
    assert!(boson.ribbon && !boson.modular);

    let fib = build_fib(1).unwrap();
    let p = solve_pivotals(&fib).unwrap().remove(0);
    let flags = classify_properties(&fib.with_pivotal(Some(p)).unwrap());
    assert_eq!(flags.unitary, Unitarity::NoInGivenGauge);

    assert_eq!(classify_properties(&fib).unitary, Unitarity::NotApplicable);
}

#[test]
fn files_round_trip() {
    let d = z2(1, Some(Cyclo::i()), Some(int(-1)));
    let back = SkeletalData::from_json(&d.to_json()).unwrap();
    assert_eq!(back, d);
    let by_name = r#"{"ring": "z2", "F": [
        {"i": [1,1,1,1,1,1], "v": "1"}, {"i": [1,1,2,2,1,2], "v": "1"},
        {"i": [1,2,1,2,2,2], "v": "1"}, {"i": [1,2,2,1,2,1], "v": "1"},
        {"i": [2,1,1,2,2,1], "v": "1"}, {"i": [2,1,2,1,2,2], "v": "1"},
        {"i": [2,2,1,1,1,2], "v": "1"}, {"i": [2,2,2,2,1,1], "v": "-1"}]}"#;
    assert_eq!(SkeletalData::from_json(by_name).unwrap(), z2(1, None, None));
}
