use horikawa::moduli::{HorikawaKind, Which};
use horikawa::tangent::*;

#[test]
fn h2_examples() {
    assert_eq!(h2_tx(14, 1).unwrap(), 11);
    assert_eq!(h2_degrees(8, 5).unwrap(), [4, -1]);
    assert_eq!(h2_tx(8, 5).unwrap(), 5);
    assert_eq!(h2_degrees(5, 0).unwrap(), [0, 0]);
    assert_eq!(h2_tx(5, 0).unwrap(), 2);
    assert!(h2_tx(6, 4).is_err());
    assert!(h2_tx(14, 2).is_err());
}

#[test]
fn h1_examples() {
    let a = h1_assembly(20, 3, Which::DPrime).unwrap();
    assert_eq!(a.minus_chi_k_b, 7 * 20 + 21);
    assert_eq!(a.minus_chi_k_delta, -1);
    assert_eq!(a.h1, 7 * 20 + 18);

    let d = 10;
    let a = h1_assembly(2 * d - 3, d, Which::DPrime).unwrap();
    assert_eq!(a.components[0].minus_chi_k, -d + 1);
    assert_eq!(a.components[1].minus_chi_k, 15 * d - 1);
    assert_eq!(a.h1, 14 * d - 3);

    let (n, d) = (19, 10);
    let a = h1_assembly(n, d, Which::DDoublePrime).unwrap();
    assert_eq!(a.h1, 2 * d + 6 * n + 16);
    assert_eq!(a.h1, 7 * n + 18 - a.nu);
}

#[test]
fn report_examples() {
    let r = tangent_report(14, 1, Which::DPrime).unwrap();
    assert_eq!((r.h1, r.h2, r.divisor_tangent_dim), (116, 11, 116));
    let r = tangent_report(16, 9, Which::DDoublePrime).unwrap();
    assert_eq!((r.nu, r.h1), (0, 130));
    let p = tangent_report(19, 10, Which::DPrime).unwrap();
    let q = tangent_report(19, 10, Which::DDoublePrime).unwrap();
    assert_eq!(p.h2, q.h2);
    assert_eq!(r.qg_tangent_dim, 7 * 16 + 19);
    assert!(tangent_report(15, 0, Which::DDoublePrime).is_err());
    assert!(tangent_report(13, 0, Which::DPrime).is_err());
}

#[test]
fn sweep() {
    for n in 14..=120 {
        for d in horikawa::moduli::admissible_ds(HorikawaKind::First, n) {
            for which in [Which::DPrime, Which::DDoublePrime] {
                if which == Which::DDoublePrime && (d == 0 || n == 2 * d - 3) {
                    continue;
                }
                tangent_report(n, d, which).unwrap();
            }
        }
    }
}
