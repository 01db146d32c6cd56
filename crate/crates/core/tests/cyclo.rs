use fusion_census::cyclo::{identity, mat_inverse, mat_mul};
use fusion_census::{format_cyclo, parse_cyclo, Cyclo, Error};

fn z(n: u32, k: i64) -> Cyclo {
    Cyclo::zeta(n, k)
}

fn lit(s: &str) -> Cyclo {
    parse_cyclo(s).unwrap()
}

#[test]
fn roots_of_unity() {
    assert_eq!(Cyclo::from_root(2, 1).unwrap(), Cyclo::from_int(-1));
    assert_eq!(Cyclo::from_root(1, 0).unwrap(), Cyclo::one());
    assert_eq!(Cyclo::from_root(4, 2).unwrap(), Cyclo::from_int(-1));
    assert!(matches!(Cyclo::from_root(0, 1), Err(Error::InvalidArgument(_))));
}

#[test]
fn sums_and_products() {
    let s: Cyclo = (1..5).map(|k| z(5, k)).sum();
    assert_eq!(s, Cyclo::from_int(-1));

    let root2 = &z(8, 1) + &z(8, 7);
    assert_eq!(root2, Cyclo::sqrt_int(2));
    assert!(root2.is_real());
    assert_eq!(&root2 * &root2, Cyclo::from_int(2));

    let x = lit("3/7*E(9)^2 - E(4)");
    assert_eq!(&x + &Cyclo::zero(), x);

    assert!((&z(3, 1) * &z(3, 2)).is_one());
    assert_eq!(&z(8, 1) * &z(8, 1), Cyclo::i());

    let phi = &-&z(5, 2) - &z(5, 3);
    let phi_bar = &(&Cyclo::one() + &z(5, 2)) + &z(5, 3);
    assert_eq!(phi, Cyclo::phi());
    assert_eq!(phi_bar, Cyclo::phi_bar());
    assert_eq!(&phi * &phi_bar, Cyclo::from_int(-1));
}

#[test]
fn inverses() {
    for n in [3u32, 5, 8, 12] {
        for k in 0..n as i64 {
            assert_eq!(z(n, k).inv().unwrap(), z(n, n as i64 - k));
        }
    }
    assert_eq!(Cyclo::phi().inv().unwrap(), &Cyclo::phi() - &Cyclo::one());
    assert_eq!(Cyclo::zero().inv(), Err(Error::DivisionByZero));
}

#[test]
fn conjugates() {
    assert_eq!(z(5, 1).conj(), z(5, 4));
    assert_eq!(Cyclo::i().conj(), -Cyclo::i());
    let root2 = &z(8, 1) + &z(8, 7);
    assert_eq!(root2.conj(), root2);
}

#[test]
fn numeric_rendering() {
    assert_eq!(lit("E(7)^4 + E(7)^3 + 2").format_numeric(3), "0.198");
    assert_eq!(z(16, 1).format_numeric(3), "0.924 + 0.383i");
    assert_eq!(Cyclo::phi().format_numeric(3), "1.618");
    assert_eq!(Cyclo::phi_bar().format_numeric(3), "-0.618");
    assert_eq!(Cyclo::from_int(2).format_numeric(3), "2");
    assert_eq!(Cyclo::from_int(-1).format_numeric(3), "-1");
}

#[test]
fn parsing_and_printing() {
    assert_eq!(lit("E(5)^3"), z(5, 3));
    let expected = &(&z(3, 2) * &Cyclo::from(fusion_census::Rational::new(-1, 2))) + &z(7, 1);
    assert_eq!(lit("-1/2*E(3)^2 + E(7)"), expected);
    match parse_cyclo("E(4") {
        Err(Error::Parse { offset, .. }) => assert_eq!(offset, 3),
        other => panic!("expected a parse error, got {other:?}"),
    }
    assert_eq!(format_cyclo(&Cyclo::zero()), "0");
    assert_eq!(format_cyclo(&Cyclo::from_int(-1)), "-1");
    assert_eq!(format_cyclo(&z(3, 1)), "E(3)");
}

#[test]
fn matrix_inverse() {
    let id = identity(3);
    assert_eq!(mat_inverse(&id).unwrap(), id);

    // The catalog Fibonacci block squares to the identity.
    let inv_phi = Cyclo::phi().inv().unwrap();
    let k = vec![
        vec![inv_phi.clone(), Cyclo::one()],
        vec![inv_phi.clone(), -&inv_phi],
    ];
    assert_eq!(mat_mul(&k, &k), identity(2));
    assert_eq!(mat_inverse(&k).unwrap(), k);

    let singular = vec![vec![Cyclo::one(); 2]; 2];
    assert_eq!(mat_inverse(&singular), Err(Error::SingularMatrix));
}
