use horikawa::lattice::DivisorClass;
use horikawa::poly::Poly;
use horikawa::moduli::*;

#[test]
fn invariant_examples() {
    let i = invariants(HorikawaKind::Second, 14).unwrap();
    assert_eq!((i.p_g, i.k_squared, i.chi), (15, 27, 16));
    let i = invariants(HorikawaKind::First, 3).unwrap();
    assert_eq!((i.p_g, i.k_squared, i.chi), (4, 4, 5));
    let i = invariants(HorikawaKind::Second, 1).unwrap();
    assert_eq!((i.p_g, i.k_squared, i.chi), (2, 1, 3));
}

#[test]
fn admissibility_gate() {
    assert!(check_admissible(HorikawaKind::First, 14, 1).is_ok());
    assert!(check_admissible(HorikawaKind::First, 14, 2).is_err());
    assert!(check_admissible(HorikawaKind::First, 17, 10).is_ok());
    assert!(check_admissible(HorikawaKind::Second, 17, 10).is_err());
    assert!(check_admissible(HorikawaKind::Second, 16, 9).is_ok());
    assert!(check_admissible(HorikawaKind::First, 5, 4).is_err());
    assert!(check_admissible(HorikawaKind::First, 5, 2).is_ok());
    assert!(check_admissible(HorikawaKind::First, 5, 1).is_err());
}

#[test]
fn branch_class_examples() {
    for (n, d) in [(14, 1), (17, 4), (20, 9)] {
        let (l, b) = branch_class(HorikawaKind::First, n, d).unwrap();
        assert_eq!(b, DivisorClass::from_ints(&[6, n + 3 + 3 * d]));
        let k = l.canonical();
        // K_S = pull-back of K + B/2 on the double cover; K_S^2 = 2 (K + B/2)^2.
        let kb = &k.scale(2) + &b;
        assert_eq!(l.intersect_int(&kb, &kb).unwrap() / 2, 2 * n - 2);
    }
    for (n, d) in [(14, 3), (16, 9)] {
        let (l, b) = branch_class(HorikawaKind::Second, n, d).unwrap();
        assert_eq!(b, DivisorClass::from_ints(&[6, n + 5 + 3 * d]));
        let (_, r) = second_kind_residual(n, d).unwrap();
        assert_eq!(l.chi_rr(&r).unwrap(), Poly::constant(7 * n + 35));
    }
    assert!(branch_class(HorikawaKind::First, 14, 2).is_err());
}

#[test]
fn second_kind_examples() {
    let r = stratum_dim_second(15, 0).unwrap();
    assert_eq!(r.dim, StratumDim::Value(7 * 15 + 19));
    assert_eq!(r.dense, Some(true));
    let r = stratum_dim_second(14, 1).unwrap();
    assert_eq!(r.dim, StratumDim::Value(7 * 14 + 19));
    assert_eq!(r.dense, Some(true));
    let r = stratum_dim_second(14, 3).unwrap();
    assert_eq!(r.dim, StratumDim::Value(7 * 14 + 17));
    assert_eq!(r.dense, Some(false));
    for k in 2..20 {
        let r = stratum_dim_second(4 * k, 2 * k + 1).unwrap();
        assert_eq!(r.eta, Some(2 * k - 1));
        assert_eq!(r.dim, StratumDim::Value(28 * k + 19));
        assert!(r.is_component);
    }
}

#[test]
fn second_kind_sweep() {
    for n in 7..=200 {
        for d in admissible_ds(HorikawaKind::Second, n) {
            let r = stratum_dim_second(n, d).unwrap();
            let eta = r.eta.unwrap();
            assert!(eta == 0 || eta <= d - 2);
            assert_ne!(n + 4, 3 * d);
            let dim = r.dim.value().unwrap();
            assert!(dim <= 7 * n + 19);
            if eta > 0 {
                // The codimension equals the number of A_1 points.
                assert_eq!(7 * n + 19 - dim, r.nu);
            }
        }
    }
}

#[test]
fn moduli_component_examples() {
    let c = moduli_components(HorikawaKind::First, 9).unwrap();
    assert_eq!(c.len(), 2);
    assert!(c.iter().all(|x| x.dim == 84));
    assert_eq!(c[1].types, vec![6]);
    assert_eq!(c[0].types, vec![0, 2, 4]);
    let c = moduli_components(HorikawaKind::Second, 14).unwrap();
    assert_eq!((c.len(), c[0].dim), (1, 117));
    let c = moduli_components(HorikawaKind::Second, 16).unwrap();
    assert_eq!(c.len(), 2);
    assert!(c.iter().all(|x| x.dim == 131));
    assert_eq!(c[1].types, vec![9]);
    assert_eq!(c[0].label, "2a");
    assert!(moduli_components(HorikawaKind::First, 5).is_err());
    assert!(moduli_components(HorikawaKind::Second, 6).is_err());
}

#[test]
fn d_strata_examples() {
    let (a, b) = d_strata(15, 0).unwrap();
    assert_eq!((a.dim, b.dim), (StratumDim::Value(7 * 15 + 18), StratumDim::Empty));
    let (a, b) = d_strata(20, 3).unwrap();
    assert_eq!(a.dim, StratumDim::Value(7 * 20 + 19 - 3));
    assert_eq!(b.dim, StratumDim::Value(7 * 20 + 18 - 3));
    assert!(a.is_component && !b.is_component);
    let (a, b) = d_strata(19, 10).unwrap();
    assert_eq!(a.dim, StratumDim::Value(6 * 19 + 20 + 15));
    assert_eq!(b.dim, StratumDim::Value(6 * 19 + 20 + 16));
    assert!(a.is_component && b.is_component);
    let (a, b) = d_strata(17, 10).unwrap();
    assert_eq!((a.dim, b.dim), (StratumDim::Value(7 * 17 + 18), StratumDim::Empty));
    assert!(d_strata(13, 0).is_err());
    assert!(d_strata(14, 2).is_err());
}

#[test]
fn nu_examples() {
    assert_eq!(nu_count(20, 7, Which::DPrime).unwrap(), 0);
    assert_eq!(nu_count(21, 8, Which::DPrime).unwrap(), 0);
    assert_eq!(nu_count(19, 10, Which::DPrime).unwrap(), 2);
    assert_eq!(nu_count(19, 10, Which::DDoublePrime).unwrap(), 1);
    assert_eq!(nu_count(16, 9, Which::DDoublePrime).unwrap(), 0);
    assert!(nu_count(17, 10, Which::DDoublePrime).is_err());
    assert!(nu_count(15, 0, Which::DDoublePrime).is_err());
}

#[test]
fn dn_component_examples() {
    let c = dn_components(17).unwrap();
    assert_eq!(c.iter().map(|x| x.d).collect::<Vec<_>>(), vec![0, 10]);
    let c = dn_components(15).unwrap();
    assert_eq!(c.iter().map(|x| x.d).collect::<Vec<_>>(), vec![0]);
    let c = dn_components(16).unwrap();
    assert_eq!(c.iter().map(|x| (x.d, x.which)).collect::<Vec<_>>(), vec![(1, Which::DPrime), (9, Which::DDoublePrime)]);
    assert_eq!(c[0].membership, Membership::TwoA);
    assert_eq!(c[1].membership, Membership::TwoB);
    let c = dn_components(14).unwrap();
    assert_eq!(c.iter().map(|x| x.d).collect::<Vec<_>>(), vec![1]);
    assert!(dn_components(13).is_err());
}

#[test]
fn closure_facts() {
    assert_eq!(closure_contains(20, 7, Which::DPrime), Some(true));
    assert_eq!(closure_contains(19, 10, Which::DPrime), Some(false));
    assert_eq!(closure_contains(17, 10, Which::DPrime), None);
    assert_eq!(closure_contains(20, 9, Which::DPrime), Some(false));
    assert_eq!(closure_contains(20, 9, Which::DDoublePrime), Some(true));
    // The 2b stratum is of type n = 2d - 2.
    for k in 4..30 {
        assert_eq!(closure_contains(4 * k, 2 * k + 1, Which::DDoublePrime), Some(true));
    }
}

#[test]
fn topology_examples() {
    let f = intersection_form(HorikawaKind::First, 13, ComponentTag::B).unwrap();
    assert_eq!(f.parity, Parity::Even);
    assert_eq!(f.signature, -96);
    assert_eq!(f.class, UnimodularClass::Even { e8: -12, hyperbolic: 29 });
    assert_eq!(f.rank, 154);
    let f = intersection_form(HorikawaKind::First, 9, ComponentTag::A).unwrap();
    assert_eq!(f.parity, Parity::Odd);
    let f = intersection_form(HorikawaKind::First, 9, ComponentTag::B).unwrap();
    assert_eq!(f.parity, Parity::Odd);
    for n in 3..60 {
        let f = intersection_form(HorikawaKind::Second, n, ComponentTag::Whole).unwrap();
        assert_eq!(f.parity, Parity::Odd);
        assert_eq!((f.rank, f.signature), (10 * n + 23, -6 * n - 17));
    }
    assert!(intersection_form(HorikawaKind::First, 14, ComponentTag::B).is_err());
    assert!(intersection_form(HorikawaKind::Second, 14, ComponentTag::A).is_err());
    assert!(intersection_form(HorikawaKind::First, 2, ComponentTag::A).is_err());
}

#[test]
fn tag_parsing() {
    assert_eq!(ComponentTag::parse("1b").unwrap(), (Some(HorikawaKind::First), ComponentTag::B));
    assert_eq!(ComponentTag::parse("2").unwrap(), (Some(HorikawaKind::Second), ComponentTag::Whole));
    assert_eq!(ComponentTag::parse("a").unwrap(), (None, ComponentTag::A));
    assert!(ComponentTag::parse("1c").is_err());
}
