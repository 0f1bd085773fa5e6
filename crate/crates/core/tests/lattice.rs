use horikawa::hj::Chain;
use horikawa::poly::Poly;
use num_rational::BigRational;
use horikawa::lattice::*;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn fd(d: u32) -> PicardLattice {
    PicardLattice::hirzebruch(d)
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn ch(v: &[u32]) -> Chain {
    Chain::new(v.to_vec()).unwrap()
}

#[test]
fn hirzebruch_examples() {
    let l = fd(0);
    assert_eq!(l.gram(), &vec![vec![0, 1], vec![1, 0]]);
    assert_eq!(l.canonical(), DivisorClass::from_ints(&[-2, -2]));
    let l = fd(2);
    assert_eq!(l.gram(), &vec![vec![-2, 1], vec![1, 0]]);
    assert_eq!(l.canonical(), DivisorClass::from_ints(&[-2, -4]));
    let l = fd(5);
    let d0 = l.class(&[("D", 1), ("F", 5)]).unwrap();
    assert_eq!(l.intersect_int(&d0, &d0).unwrap(), 5);
    assert_eq!(l.k_squared(), 8);
}

#[test]
fn blow_up_examples() {
    let l = fd(0).blow_up("E1").unwrap();
    assert_eq!(l.k_squared(), 7);
    let l = l.blow_up("E2").unwrap();
    let (e1, e2) = (l.basis("E1").unwrap(), l.basis("E2").unwrap());
    assert_eq!(l.intersect_int(&e1, &e2).unwrap(), 0);
    assert!(l.blow_up("E1").is_err());
    for nu in 0..6usize {
        let labels: Vec<String> = (1..=nu).map(|k| format!("A{k}")).collect();
        let y = fd(3).blow_up_many(&["E1", "E2"]).unwrap().blow_up_many(&labels).unwrap();
        assert_eq!(y.k_squared(), 6 - nu as i64);
        assert_eq!(10 * y.chi_o() - 2 * y.k_squared(), 2 * nu as i64 - 2);
    }
}

#[test]
fn intersection_examples() {
    let l = fd(4);
    let d = l.basis("D").unwrap();
    let d0 = l.class(&[("D", 1), ("F", 4)]).unwrap();
    assert_eq!(l.intersect_int(&d, &d0).unwrap(), 0);
    for dd in 0..8u32 {
        let l = fd(dd);
        let c = Poly::linear(1, 3 + 3 * i64::from(dd));
        let b = l.class_poly(&[("D", Poly::constant(6)), ("F", c)]).unwrap();
        let got = l.intersect(&b, &l.basis("D").unwrap()).unwrap();
        assert_eq!(got, Poly::linear(1, 3 - 3 * i64::from(dd)));
    }
    let y = fd(2).blow_up_many(&["E1", "E2"]).unwrap();
    let r = y.class(&[("F", 1), ("E1", -1), ("E2", -1)]).unwrap();
    assert_eq!(y.intersect_int(&r, &r).unwrap(), -2);
    assert!(y.intersect(&r, &fd(2).zero()).is_err());
}

#[test]
fn riemann_roch_examples() {
    for dd in 0..10u32 {
        let l = fd(dd);
        let d3 = 3 * i64::from(dd);
        let class = |a: i64, b: i64| {
            l.class_poly(&[("D", Poly::constant(a)), ("F", Poly::linear(1, b + d3))]).unwrap()
        };
        assert_eq!(l.chi_rr(&class(6, 4)).unwrap(), Poly::linear(7, 35));
        assert_eq!(l.chi_rr(&class(6, 3)).unwrap(), Poly::linear(7, 28));
        assert_eq!(l.arithmetic_genus(&class(6, 3)).unwrap(), Poly::linear(5, 10));
        assert_eq!(l.chi_rr(&l.zero()).unwrap(), Poly::constant(1));
        assert_eq!(l.arithmetic_genus(&l.basis("D").unwrap()).unwrap(), Poly::constant(0));
    }
    let y = fd(1).blow_up("E1").unwrap();
    assert_eq!(y.arithmetic_genus(&y.basis("E1").unwrap()).unwrap(), Poly::constant(0));
}

#[test]
fn parity_violation_is_reported() {
    // An odd Gram diagonal with K = 0 breaks the Wu relation.
    let bad = PicardLattice::from_parts(vec!["X".into()], vec![vec![1]], vec![0], 1).unwrap();
    let x = bad.basis("X").unwrap();
    assert!(matches!(bad.chi_rr(&x), Err(horikawa::Error::Invariant(_))));
}

#[test]
fn nef_certificate_examples() {
    for dd in 0..6u32 {
        let y = fd(dd).blow_up_many(&["E1", "E2"]).unwrap();
        for a in 2..8i64 {
            let m = y
                .class(&[("D", 2), ("F", 2 * i64::from(dd) + a), ("E1", -1), ("E2", -1)])
                .unwrap();
            let curves = vec![
                ("R'", y.class(&[("F", 1), ("E1", -1), ("E2", -1)]).unwrap()),
                ("E1", y.basis("E1").unwrap()),
                ("F", y.basis("F").unwrap()),
            ];
            let rep = y.pairing_report(&m, &curves).unwrap();
            assert_eq!(rep["R'"], Poly::constant(0));
            assert_eq!(rep["E1"], Poly::constant(1));
            assert_eq!(rep["F"], Poly::constant(2));
        }
    }
}

#[test]
fn chain_gram_examples() {
    assert_eq!(chain_gram(&ch(&[4])), vec![vec![-4]]);
    assert_eq!(chain_gram(&ch(&[3, 3])), vec![vec![-3, 1], vec![1, -3]]);
    assert_eq!(horikawa::matrix::determinant(&chain_gram(&ch(&[3, 2, 3]))), (-12).into());
    assert!(is_negative_definite(&chain_gram(&ch(&[4]))));
    assert!(is_negative_definite(&chain_gram(&ch(&[2, 2]))));
    assert!(!is_negative_definite(&[vec![-1, 2], vec![2, -1]]));
}

#[test]
fn discrepancy_examples() {
    assert_eq!(discrepancies(&ch(&[4])).unwrap(), vec![q(-1, 2)]);
    assert_eq!(discrepancies(&ch(&[3, 2, 3])).unwrap(), vec![q(-1, 2); 3]);
    assert_eq!(discrepancies(&ch(&[2])).unwrap(), vec![q(0, 1)]);
    assert_eq!(discrepancies(&ch(&[2, 5])).unwrap(), vec![q(-1, 3), q(-2, 3)]);
}

#[test]
fn hyperbolic_signature() {
    let y = fd(3).blow_up_many(&["E1", "E2", "A1"]).unwrap();
    assert_eq!(y.signature(), (1, 4));
    assert_eq!(fd(0).signature(), (1, 1));
}

#[test]
fn render_forms() {
    let y = fd(0).blow_up_many(&["E1", "E2"]).unwrap();
    let l = y
        .class_poly(&[
            ("D", Poly::constant(6)),
            ("F", Poly::linear(1, 3)),
            ("E1", Poly::constant(-2)),
            ("E2", Poly::constant(-2)),
        ])
        .unwrap();
    assert_eq!(y.render(&l), "6D+(n+3)F-2E1-2E2");
    assert_eq!(y.render(&y.zero()), "0");
}

fn lattice_strategy() -> impl Strategy<Value = PicardLattice> {
    (0u32..12, 0usize..6).prop_map(|(d, k)| {
        let labels: Vec<String> = (1..=k).map(|i| format!("E{i}")).collect();
        PicardLattice::hirzebruch(d).blow_up_many(&labels).unwrap()
    })
}

proptest! {
    #[test]
    fn noether_relation(l in lattice_strategy()) {
        prop_assert_eq!(l.k_squared() + l.rank() as i64, 10);
        prop_assert_eq!(l.signature(), (1, l.rank() - 1));
    }

    #[test]
    fn serre_symmetry(l in lattice_strategy(), coeffs in prop::collection::vec(-20i64..20, 8)) {
        let a = DivisorClass::from_ints(&coeffs[..l.rank()]);
        let k = l.canonical();
        prop_assert_eq!(l.chi_rr(&(&k - &a)).unwrap(), l.chi_rr(&a).unwrap());
    }

    #[test]
    fn genus_and_euler_characteristic(l in lattice_strategy(), coeffs in prop::collection::vec(-20i64..20, 8)) {
        // chi(O_C) = chi(O) - chi(O(-C)) = 1 - p_a(C).
        let a = DivisorClass::from_ints(&coeffs[..l.rank()]);
        prop_assert_eq!(l.arithmetic_genus(&a).unwrap(), l.chi_rr(&(-&a)).unwrap());
    }

    #[test]
    fn long_chains_are_negative_definite(v in prop::collection::vec(2u32..9, 1..=12)) {
        let c = Chain::new(v).unwrap();
        prop_assert!(is_negative_definite(&chain_gram(&c)));
    }

    #[test]
    fn discrepancies_in_half_open_interval(v in prop::collection::vec(2u32..9, 1..=12)) {
        let c = Chain::new(v).unwrap();
        let a = discrepancies(&c).unwrap();
        for x in &a {
            prop_assert!(*x > -BigRational::one() && *x <= BigRational::zero());
        }
    }
}
