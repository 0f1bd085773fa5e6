use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use horikawa::matrix::*;
use proptest::prelude::*;

fn cofactor_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|c| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &v)| v).collect())
                .collect();
            let s = if c % 2 == 0 { 1 } else { -1 };
            s * m[0][c] as i128 * cofactor_det(&minor)
        })
        .sum()
}

#[test]
fn definiteness_examples() {
    assert!(is_negative_definite(&[vec![-4]]));
    assert!(is_negative_definite(&[vec![-2, 1], vec![1, -2]]));
    assert!(!is_negative_definite(&[vec![-1, 2], vec![2, -1]]));
    assert!(!is_negative_definite(&[vec![0, 1], vec![1, 0]]));
    assert_eq!(determinant(&[vec![-1, 2], vec![2, -1]]), BigInt::from(-3));
}

#[test]
fn determinant_with_zero_pivot() {
    let m = vec![vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]];
    assert_eq!(determinant(&m), BigInt::from(cofactor_det(&m)));
}

#[test]
fn big_integer_fallback() {
    let big = 1i64 << 40;
    let m = vec![vec![big, 1, 0], vec![1, big, 1], vec![0, 1, big]];
    let b = BigInt::from(big);
    let expected = &b * &b * &b - BigInt::from(2) * &b;
    assert_eq!(determinant(&m), expected);
}

#[test]
fn inertia_of_hyperbolic_plane() {
    assert_eq!(inertia(&[vec![0, 1], vec![1, 0]]), (1, 1, 0));
    assert_eq!(inertia(&[vec![-2, 1], vec![1, 0]]), (1, 1, 0));
    assert_eq!(inertia(&[vec![1, 1], vec![1, 1]]), (1, 0, 1));
}

proptest! {
    #[test]
    fn bareiss_matches_cofactor(v in prop::collection::vec(-9i64..10, 16)) {
        let m: Vec<Vec<i64>> = v.chunks(4).map(|c| c.to_vec()).collect();
        prop_assert_eq!(determinant(&m), BigInt::from(cofactor_det(&m)));
    }

    #[test]
    fn solve_satisfies_system(v in prop::collection::vec(-9i64..10, 9), b in prop::collection::vec(-9i64..10, 3)) {
        let m: Vec<Vec<i64>> = v.chunks(3).map(|c| c.to_vec()).collect();
        match solve_rational(&m, &b) {
            None => prop_assert!(determinant(&m).is_zero()),
            Some(x) => {
                for (row, &rhs) in m.iter().zip(&b) {
                    let lhs: BigRational = row.iter().zip(&x)
                        .map(|(&a, xi)| BigRational::from_integer(a.into()) * xi)
                        .sum();
                    prop_assert_eq!(lhs, BigRational::from_integer(rhs.into()));
                }
            }
        }
    }

    #[test]
    fn inertia_counts_match_sylvester(v in prop::collection::vec(-5i64..6, 6)) {
        let m = vec![
            vec![v[0], v[1], v[2]],
            vec![v[1], v[3], v[4]],
            vec![v[2], v[4], v[5]],
        ];
        let neg: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        let (p, n, z) = inertia(&m);
        prop_assert_eq!(p + n + z, 3);
        prop_assert_eq!(is_negative_definite(&m), n == 3);
        prop_assert_eq!(is_negative_definite(&neg), p == 3);
        prop_assert_eq!(z == 0, !determinant(&m).is_zero());
    }
}
