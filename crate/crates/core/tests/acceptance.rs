//! Acceptance criteria. Each test prints one PASS/FAIL line with its timing,
//! written straight to stdout so it shows without `--nocapture`.

use std::collections::BTreeMap;
use std::io::Write;
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fusion_census::catalog::{build_pointed_cyclic, enumerate_ring, DEFAULT_BRAID_ORDER};
use fusion_census::cyclo::{det, identity, mat_inverse, mat_mul};
use fusion_census::data;
use fusion_census::gauge::{
    apply_gauge, apply_permutation, gauge_weight, is_de_jure_invariant, random_gauge, FormalMonomial,
};
use fusion_census::invariant::{match_census, numeric_matches};
use fusion_census::skeleton::{check_pentagon, classify_properties, s_matrix, verify_all, SkeletalData};
use fusion_census::{Cyclo, Rational};

const CATALOG_RINGS: &[&str] = &[
    "trivial", "z2", "fib", "ising", "z3", "z4", "z5", "z6", "z7", "ty_z3", "ty_z4", "ty_z5",
];

/// Runs one criterion, prints its verdict line and re-raises any failure.
fn criterion(id: u32, what: &str, limit_secs: u64, body: impl FnOnce()) {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let took = start.elapsed();
    let in_time = took <= Duration::from_secs(limit_secs);
    let verdict = if outcome.is_ok() && in_time { "PASS" } else { "FAIL" };
    let note = if outcome.is_ok() && !in_time { " over time limit" } else { "" };
    let line = format!(
        "{verdict} criterion {id}: {what} ({:.2}s, limit {limit_secs}s){note}\n",
        took.as_secs_f64()
    );
    let _ = std::io::stdout().lock().write_all(line.as_bytes());
    if let Err(e) = outcome {
        resume_unwind(e);
    }
    assert!(in_time, "criterion {id} took {took:?}");
}

fn catalog() -> Vec<(String, SkeletalData)> {
    CATALOG_RINGS
        .iter()
        .flat_map(|r| {
            enumerate_ring(r, DEFAULT_BRAID_ORDER)
                .unwrap()
                .into_iter()
                .map(move |(_, d)| (r.to_string(), d))
        })
        .collect()
}

/// Every catalog datum on `ring` matches exactly one census row, each row is
/// hit, and the printed numeric values agree with the exact ones.
fn reproduce(ring: &str) {
    let table = data::census(ring).unwrap().unwrap();
    let mut hits: BTreeMap<String, usize> = BTreeMap::new();
    for (spec, d) in enumerate_ring(ring, DEFAULT_BRAID_ORDER).unwrap() {
        let found = match_census(&d, &table).unwrap();
        assert_eq!(found.len(), 1, "{ring}: {spec:?} matched {found:?}");
        let row = table.row(&found[0]).unwrap();
        if let Some(numeric) = &row.numeric {
            for (v, n) in table.evaluate(&d).unwrap().iter().zip(numeric) {
                assert!(numeric_matches(v, n, 5e-4), "{ring}: {} {v} vs {n:?}", row.name);
            }
        }
        *hits.entry(found[0].clone()).or_default() += 1;
    }
    for row in table.rows() {
        assert!(hits.contains_key(&row.name), "{ring}: row {} unmatched", row.name);
    }
}

#[test]
fn c1_z2_census() {
    criterion(1, "Z2 census reproduced", 1, || {
        reproduce("z2");
        assert_eq!(data::census("z2").unwrap().unwrap().rows().len(), 8);
    });
}

#[test]
fn c2_census_tables() {
    criterion(2, "Fib, Ising, Z3 and TY(Z3) census reproduced", 10, || {
        for ring in ["fib", "ising", "z3", "ty_z3"] {
            reproduce(ring);
        }
    });
}

/// A single entry with all three outer labels nontrivial, changed by a sign
/// on non-pointed data and by a primitive 9th root elsewhere.
fn perturb(d: &SkeletalData, rng: &mut ChaCha8Rng) -> ([usize; 6], SkeletalData) {
    let candidates: Vec<[usize; 6]> = d
        .f_table()
        .iter()
        .map(|(i, _)| *i)
        .filter(|i| i[0] != 1 && i[1] != 1 && i[2] != 1)
        .collect();
    let target = candidates[rng.gen_range(0..candidates.len())];
    let pointed = d.ring().fp_dims(1e-12).iter().all(|x| (x - 1.0).abs() < 1e-9);
    let factor = if pointed { Cyclo::zeta(9, 1) } else { Cyclo::from_int(-1) };
    let moved = d.map_f(|i, v| if *i == target { v * &factor } else { v.clone() });
    (target, moved)
}

#[test]
fn c3_verification() {
    criterion(3, "catalog verifies and perturbations fail the pentagon", 30, || {
        let all = catalog();
        for (ring, d) in &all {
            assert!(verify_all(d).iter().all(|r| r.pass), "{ring}");
        }
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut done = 0;
        while done < 20 {
            let (ring, d) = &all[rng.gen_range(0..all.len())];
            if d.ring().rank() == 1 {
                continue;
            }
            let (target, moved) = perturb(d, &mut rng);
            let rep = check_pentagon(&moved);
            assert!(!rep.pass, "{ring}: perturbing {target:?} still solves the pentagon");
            assert!(!rep.counterexamples.is_empty());
            done += 1;
        }
    });
}

#[test]
fn c4_gauge_and_relabeling_invariance() {
    criterion(4, "100 gauges per datum and all automorphisms leave the census unchanged", 60, || {
        let verdicts = |x: &SkeletalData| verify_all(x).iter().map(|r| r.pass).collect::<Vec<_>>();
        for ring in CATALOG_RINGS {
            let table = data::census(ring).transpose().unwrap();
            let group = data::ring(ring).unwrap().automorphisms();
            for (spec, d) in enumerate_ring(ring, DEFAULT_BRAID_ORDER).unwrap() {
                let values = table.as_ref().map(|t| t.evaluate(&d).unwrap());
                let names = table.as_ref().map(|t| match_census(&d, t).unwrap());
                let base = verdicts(&d);
                for seed in 0..100 {
                    let moved = apply_gauge(&d, &random_gauge(d.ring(), seed, 24)).unwrap();
                    assert_eq!(verdicts(&moved), base, "{ring} {spec:?} seed {seed}");
                    if let Some(t) = &table {
                        assert_eq!(Some(t.evaluate(&moved).unwrap()), values, "{ring} {spec:?} seed {seed}");
                    }
                }
                for sigma in group.iter() {
                    let moved = apply_permutation(&d, sigma).unwrap();
                    assert_eq!(verdicts(&moved), base, "{ring} {spec:?} {sigma}");
                    if let Some(t) = &table {
                        assert_eq!(Some(match_census(&moved, t).unwrap()), names, "{ring} {spec:?} {sigma}");
                    }
                }
            }
        }
    });
}

#[test]
fn c5_automorphism_counts() {
    criterion(5, "automorphism group orders", 1, || {
        let expected = [
            ("trivial", 1),
            ("z2", 1),
            ("fib", 1),
            ("ising", 1),
            ("rep_d3", 1),
            ("psu2_5", 1),
            ("z3", 2),
            ("z2xz2", 6),
            ("z4", 2),
            ("z5", 4),
            ("rep_d9", 24),
            ("z7", 6),
        ];
        for (ring, n) in expected {
            assert_eq!(data::ring(ring).unwrap().automorphisms().len(), n, "{ring}");
        }
    });
}

/// Z2 with cocycle class `q`, `R_1^{22} = r` and `p_2 = p`.
fn z2(q: u32, r: Cyclo, p: i64) -> SkeletalData {
    let base = build_pointed_cyclic(2, q).unwrap();
    let rs = [([1, 1, 1], Cyclo::one()), ([1, 2, 2], Cyclo::one()), ([2, 1, 2], Cyclo::one()), ([2, 2, 1], r)];
    base.with_braiding(Some(rs.into()))
        .unwrap()
        .with_pivotal(Some(vec![Cyclo::one(), Cyclo::from_int(p)]))
        .unwrap()
}

#[test]
fn c6_modularity() {
    criterion(6, "semion is modular with det S = -2; the Z2 boson is not", 1, || {
        let semion = z2(1, Cyclo::i(), -1);
        let flags = classify_properties(&semion);
        assert!(flags.ribbon && flags.modular);
        assert_eq!(det(&s_matrix(&semion).unwrap()).unwrap(), Cyclo::from_int(-2));

        let boson = z2(0, Cyclo::one(), 1);
        let flags = classify_properties(&boson);
        assert!(flags.ribbon && !flags.modular);
        assert!(det(&s_matrix(&boson).unwrap()).unwrap().is_zero());
    });
}

#[test]
fn c7_gauge_weights() {
    criterion(7, "gauge weights and de jure invariance", 1, || {
        let m: FormalMonomial = "F[5,5,5,5,6,6]".parse().unwrap();
        m.check_admissible(&data::ring("adj_so16_2").unwrap()).unwrap();
        assert_eq!(gauge_weight(&m), [([6, 5, 5], 1), ([5, 6, 5], -1)].into());
        assert!(!is_de_jure_invariant(&m));
        for s in ["d[3]", "R[2,2,1]", "R[5,5,6]", "R[6,6,1]^3"] {
            let m: FormalMonomial = s.parse().unwrap();
            assert!(gauge_weight(&m).is_empty(), "{s}");
            assert!(is_de_jure_invariant(&m), "{s}");
        }
    });
}

fn random_cyclo(rng: &mut ChaCha8Rng) -> Cyclo {
    let n = [1u32, 3, 4, 5, 7, 8, 9, 12, 15, 24][rng.gen_range(0..10)];
    (0..rng.gen_range(0..5))
        .map(|_| {
            let q = Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=6));
            Cyclo::from(q) * Cyclo::zeta(n, rng.gen_range(0..n as i64))
        })
        .sum()
}

#[test]
fn c8_exact_arithmetic() {
    criterion(8, "F-block inverses and field axioms are exact", 10, || {
        for (ring, d) in catalog() {
            for [a, b, c, e] in d.blocks() {
                let m = d.f_block(a, b, c, e);
                let inv = mat_inverse(&m).unwrap();
                assert_eq!(mat_mul(&inv, &m), identity(m.len()), "{ring} block {a},{b},{c},{e}");
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..1000 {
            let (x, y, z) = (random_cyclo(&mut rng), random_cyclo(&mut rng), random_cyclo(&mut rng));
            assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            assert_eq!(&x * &y, &y * &x);
            if !y.is_zero() {
                assert_eq!((&x * &y).checked_div(&y).unwrap(), x);
            }
        }
    });
}
