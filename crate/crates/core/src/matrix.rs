//! Exact integer matrix algebra: fraction-free elimination and rational solves.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<i64>>;

trait Exact: Clone + PartialEq {
    fn from_i64(v: i64) -> Self;
    fn is_nil(&self) -> bool;
    fn one() -> Self;
    fn neg(&self) -> Self;
    /// `(a d - b c) / e`, exact.
    fn cross_div(a: &Self, d: &Self, b: &Self, c: &Self, e: &Self) -> Option<Self>;
    fn into_big(self) -> BigInt;
}

impl Exact for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn one() -> Self {
        1
    }
    fn neg(&self) -> Self {
        -self
    }
    fn cross_div(a: &Self, d: &Self, b: &Self, c: &Self, e: &Self) -> Option<Self> {
        a.checked_mul(*d)?.checked_sub(b.checked_mul(*c)?)?.checked_div(*e)
    }
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl Exact for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn one() -> Self {
        One::one()
    }
    fn neg(&self) -> Self {
        -self
    }
    fn cross_div(a: &Self, d: &Self, b: &Self, c: &Self, e: &Self) -> Option<Self> {
        Some((a * d - b * c) / e)
    }
    fn into_big(self) -> BigInt {
        self
    }
}

struct Elimination<T> {
    /// Pivots in order; without row swaps these are the leading principal minors.
    pivots: Vec<T>,
    det: T,
}

/// Bareiss elimination. `None` only on machine-integer overflow.
fn bareiss<T: Exact>(m: &[Vec<i64>], allow_swaps: bool) -> Option<Elimination<T>> {
    let n = m.len();
    let mut a: Vec<Vec<T>> = m
        .iter()
        .map(|r| r.iter().map(|&v| T::from_i64(v)).collect())
        .collect();
    let mut prev = T::one();
    let mut negate = false;
    let mut pivots = Vec::with_capacity(n);
    for k in 0..n {
        if a[k][k].is_nil() {
            let swap = if allow_swaps {
                (k + 1..n).find(|&r| !a[r][k].is_nil())
            } else {
                None
            };
            match swap {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => {
                    pivots.push(a[k][k].clone());
                    return Some(Elimination {
                        pivots,
                        det: T::from_i64(0),
                    });
                }
            }
        }
        pivots.push(a[k][k].clone());
        for i in k + 1..n {
            if a[i][k].is_nil() {
                // Row i only gets rescaled by pivot/prev.
                for j in k + 1..n {
                    if !a[i][j].is_nil() {
                        let zero = T::from_i64(0);
                        a[i][j] = T::cross_div(&a[k][k], &a[i][j], &zero, &zero, &prev)?;
                    }
                }
                continue;
            }
            for j in k + 1..n {
                a[i][j] = T::cross_div(&a[k][k], &a[i][j], &a[i][k], &a[k][j], &prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let last = if n == 0 { T::one() } else { a[n - 1][n - 1].clone() };
    Some(Elimination {
        pivots,
        det: if negate { last.neg() } else { last },
    })
}

fn run<R>(m: &[Vec<i64>], swaps: bool, f: impl Fn(Elimination<BigInt>) -> R) -> R {
    match bareiss::<i128>(m, swaps) {
        Some(e) => f(Elimination {
            pivots: e.pivots.into_iter().map(Exact::into_big).collect(),
            det: e.det.into_big(),
        }),
        None => f(bareiss::<BigInt>(m, swaps).expect("big integers do not overflow")),
    }
}

pub fn is_square(m: &[Vec<i64>]) -> bool {
    m.iter().all(|r| r.len() == m.len())
}

pub fn is_symmetric(m: &[Vec<i64>]) -> bool {
    is_square(m) && (0..m.len()).all(|i| (0..i).all(|j| m[i][j] == m[j][i]))
}

/// Exact determinant of a square matrix.
pub fn determinant(m: &[Vec<i64>]) -> BigInt {
    assert!(is_square(m), "determinant of a non-square matrix");
    run(m, true, |e| e.det)
}

/// Leading principal minors `D_1, D_2, ...`, stopping after the first one that vanishes.
pub fn leading_principal_minors(m: &[Vec<i64>]) -> Vec<BigInt> {
    assert!(is_square(m), "minors of a non-square matrix");
    run(m, false, |e| e.pivots)
}

/// Sylvester's criterion: `(-1)^k D_k > 0` for every `k`.
pub fn is_negative_definite(m: &[Vec<i64>]) -> bool {
    if m.is_empty() || !is_symmetric(m) {
        return false;
    }
    let minors = leading_principal_minors(m);
    minors.len() == m.len()
        && minors
            .iter()
            .enumerate()
            .all(|(k, d)| if k % 2 == 0 { d.is_negative() } else { d.is_positive() })
}

/// Unique solution of `a x = b` over the rationals, or `None` if `a` is singular.
pub fn solve_rational(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<BigRational>> {
    let n = a.len();
    assert!(is_square(a) && b.len() == n, "shape mismatch in linear solve");
    let q = |v: i64| BigRational::from_integer(BigInt::from(v));
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| row.iter().map(|&v| q(v)).chain(std::iter::once(q(rhs))).collect())
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&r| !m[r][k].is_zero())?;
        m.swap(k, p);
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] / &pivot;
            for j in k..=n {
                if !m[k][j].is_zero() {
                    let t = &f * &m[k][j];
                    m[i][j] -= t;
                }
            }
        }
    }
    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = m[i][n].clone();
        for j in i + 1..n {
            if !m[i][j].is_zero() {
                acc -= &m[i][j] * &x[j];
            }
        }
        x[i] = acc / &m[i][i];
    }
    Some(x)
}

/// Inertia `(positive, negative, zero)` by congruence diagonalization.
pub fn inertia(m: &[Vec<i64>]) -> (usize, usize, usize) {
    assert!(is_symmetric(m), "inertia of a non-symmetric matrix");
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
        .collect();
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    // Only the trailing block k.. is live; it stays symmetric as a Schur complement.
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // e_k -> e_k + e_j makes the diagonal entry 2 a_kj.
                for c in k..n {
                    let t = a[j][c].clone();
                    a[k][c] += t;
                }
                for r in k..n {
                    let t = a[r][j].clone();
                    a[r][k] += t;
                }
            } else {
                zero += 1;
                continue;
            }
        }
        let p = a[k][k].clone();
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &p;
            for j in k + 1..n {
                if !a[k][j].is_zero() {
                    let t = &f * &a[k][j];
                    a[i][j] -= t;
                }
            }
            a[i][k] = BigRational::zero();
        }
    }
    (pos, neg, zero)
}
