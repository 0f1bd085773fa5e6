use horikawa::poly::Poly;
use horikawa::systems::*;

fn cfg(d: u32, i: u8, j: u8) -> BlowupConfig {
    BlowupConfig::new(d, i, j).unwrap()
}

fn dim_at(a: &SystemAnalysis, n: i64) -> Option<i64> {
    a.dim.value().and_then(|p| p.eval_int(n))
}

#[test]
fn config_rules() {
    assert!(BlowupConfig::new(0, 1, 0).is_err());
    assert!(BlowupConfig::new(3, 2, 0).is_err());
    assert_eq!(BlowupConfig::all(0).len(), 2);
    assert_eq!(BlowupConfig::all(4).len(), 4);
    let c = cfg(3, 1, 1);
    let y = c.lattice();
    let e = c.e1_minus_e2().unwrap();
    assert_eq!(y.intersect_int(&e, &e).unwrap(), -2);
    assert_eq!(y.arithmetic_genus(&e).unwrap(), Poly::constant(0));
    assert_eq!(y.intersect_int(&c.d_prime(), &c.d_prime()).unwrap(), -4);
}

#[test]
fn l_class_examples() {
    let c = cfg(0, 0, 0);
    let y = c.lattice();
    let l = l_class(&c, NSpec::Concrete(13)).unwrap();
    assert_eq!(l, y.class(&[("D", 6), ("F", 16), ("E1", -2), ("E2", -2)]).unwrap());
    assert_eq!(y.intersect_int(&l, &l).unwrap(), 184);
    assert_eq!(y.intersect_int(&l, &c.r_prime()).unwrap(), 2);
    for d in 1..8u32 {
        let c = cfg(d, 1, 0);
        let l = l_class(&c, NSpec::Symbolic(Regime::AtLeast3dMinus1)).unwrap();
        let got = c.lattice().intersect(&l, &c.d_prime()).unwrap();
        assert_eq!(got, Poly::linear(1, 1 - 3 * i64::from(d)));
    }
    assert!(l_class(&c, NSpec::Concrete(14)).is_err());
}

#[test]
fn analysis_examples() {
    let a = analyze_system(&cfg(2, 0, 1), NSpec::Concrete(17)).unwrap();
    assert_eq!((a.fixed, dim_at(&a, 17)), (FixedPart::Zero, Some(7 * 17 + 21)));
    let a = analyze_system(&cfg(7, 1, 0), NSpec::Concrete(18)).unwrap();
    assert_eq!(a.regime, Regime::Eq3dMinus3);
    assert_eq!((a.fixed, dim_at(&a, 18)), (FixedPart::DPrime, Some(7 * 18 + 22)));
    let a = analyze_system(&cfg(9, 1, 1), NSpec::Concrete(20)).unwrap();
    assert_eq!(a.regime, Regime::Between);
    assert_eq!(a.fixed, FixedPart::DPrimePlusE1MinusE2);
    assert_eq!(dim_at(&a, 20), Some(6 * 20 + 27 + 19));
    let a = analyze_system(&cfg(10, 1, 0), NSpec::Concrete(17)).unwrap();
    assert!(!a.reduced);
    assert_eq!(a.dim, LinearDim::Undefined);
}

#[test]
fn symbolic_rows() {
    let a = analyze_system(&cfg(3, 0, 0), NSpec::Symbolic(Regime::AtLeast3dMinus1)).unwrap();
    assert_eq!(a.dim, LinearDim::Value(Poly::linear(7, 21)));
    let a = analyze_system(&cfg(6, 1, 0), NSpec::Symbolic(Regime::Between)).unwrap();
    assert_eq!(a.dim, LinearDim::Value(Poly::linear(6, 18 + 19)));
    // n = 3d-3 = 3 with d = 2 is below d + 3.
    assert!(analyze_system(&cfg(2, 0, 0), NSpec::Symbolic(Regime::Eq3dMinus3)).is_err());
    assert!(analyze_system(&cfg(2, 0, 0), NSpec::Symbolic(Regime::Between)).is_err());
}

#[test]
fn regimes_partition_admissible_pairs() {
    for n in 4..120i64 {
        for d in 0..=n {
            if Regime::of(n, d).is_err() {
                assert!(Regime::ALL.iter().all(|r| !r.contains(n, d)) || (n - d) % 2 == 0 || n < d + 3);
                continue;
            }
            let hits = Regime::ALL.iter().filter(|r| r.contains(n, d)).count();
            assert_eq!(hits, 1, "n={n} d={d}");
            assert_ne!(n, 3 * d - 2);
        }
    }
}

#[test]
fn peeling_matches_table() {
    for n in 4..90i64 {
        for d in 0..=n {
            let Ok(r) = Regime::of(n, d) else { continue };
            for c in BlowupConfig::all(d as u32) {
                let got = fixed_part_by_peeling(&c.lattice(), &c, n).unwrap();
                assert_eq!(got, table3_entry(r, c.i(), c.j()), "n={n} {c}");
            }
        }
    }
}

#[test]
fn poly_serde_round_trip() {
    for p in [Poly::linear(7, 21), Poly::linear(-1, 0), Poly::constant(-4), Poly::linear(6, -3)] {
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<Poly>(&s).unwrap(), p);
    }
    assert_eq!("2d-1<=n<3d-3".parse::<Regime>().unwrap(), Regime::Between);
}
