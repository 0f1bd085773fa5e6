//! Polynomials in the single symbol `n`, used for table rows that are linear in `n`.
//!
//! Divisor coordinates have degree at most 1, so every pairing has degree at most 2.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

type Q = Ratio<i64>;

/// `c[0] + c[1] n + c[2] n^2` with rational coefficients.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    c: [Q; 3],
}

impl Poly {
    pub const MAX_DEGREE: usize = 2;

    pub fn constant(v: i64) -> Self {
        Self::linear(0, v)
    }

    /// The symbol `n` itself.
    pub fn n() -> Self {
        Self::linear(1, 0)
    }

    /// `a n + b`.
    pub fn linear(a: i64, b: i64) -> Self {
        Poly {
            c: [Q::from_integer(b), Q::from_integer(a), Q::zero()],
        }
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.c[k]
    }

    pub fn degree(&self) -> Option<usize> {
        (0..3).rev().find(|&k| !self.c[k].is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    pub fn as_constant(&self) -> Option<Q> {
        match self.degree() {
            None => Some(Q::zero()),
            Some(0) => Some(self.c[0]),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.as_constant()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    pub fn eval(&self, n: i64) -> Q {
        let x = Q::from_integer(n);
        self.c[0] + self.c[1] * x + self.c[2] * x * x
    }

    /// Evaluates at `n`, failing when the value is not an integer.
    pub fn eval_int(&self, n: i64) -> Option<i64> {
        let v = self.eval(n);
        v.is_integer().then(|| v.to_integer())
    }

    /// A degree-2 polynomial takes integer values on all of Z iff it does at three consecutive points.
    pub fn is_integer_valued(&self) -> bool {
        (0..3).all(|k| self.eval(k).is_integer())
    }

    pub fn half(&self) -> Self {
        let h = Q::new(1, 2);
        Poly {
            c: [self.c[0] * h, self.c[1] * h, self.c[2] * h],
        }
    }

    /// Substitutes a concrete value, returning a constant.
    pub fn at(&self, n: i64) -> Self {
        Poly {
            c: [self.eval(n), Q::zero(), Q::zero()],
        }
    }

    pub fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        let mut out = [Q::zero(); 3];
        for i in 0..3 {
            for j in 0..3 {
                let t = self.c[i] * rhs.c[j];
                if t.is_zero() {
                    continue;
                }
                if i + j > 2 {
                    return None;
                }
                out[i + j] += t;
            }
        }
        Some(Poly { c: out })
    }

    pub fn scale(&self, k: i64) -> Self {
        let k = Q::from_integer(k);
        Poly {
            c: [self.c[0] * k, self.c[1] * k, self.c[2] * k],
        }
    }
}

impl From<i64> for Poly {
    fn from(v: i64) -> Self {
        Poly::constant(v)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        Poly {
            c: [self.c[0] + rhs.c[0], self.c[1] + rhs.c[1], self.c[2] + rhs.c[2]],
        }
    }
}

impl AddAssign for Poly {
    fn add_assign(&mut self, rhs: Poly) {
        *self = *self + rhs;
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        self + (-rhs)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            c: [-self.c[0], -self.c[1], -self.c[2]],
        }
    }
}

impl Mul for Poly {
    type Output = Poly;
    /// Panics if the product has degree above 2; classes with degree-1 coordinates never get there.
    fn mul(self, rhs: Poly) -> Poly {
        self.checked_mul(&rhs)
            .expect("polynomial product exceeds degree 2")
    }
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: Q, first: bool, mono: &str) -> fmt::Result {
    let neg = c.is_negative();
    let a = c.abs();
    if neg {
        f.write_str("-")?;
    } else if !first {
        f.write_str("+")?;
    }
    if mono.is_empty() || !a.is_one() {
        if a.is_integer() {
            write!(f, "{}", a.numer())?;
        } else {
            write!(f, "{}/{}", a.numer(), a.denom())?;
        }
    }
    f.write_str(mono)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, mono) in [(2, "n^2"), (1, "n"), (0, "")] {
            if !self.c[k].is_zero() {
                write_coeff(f, self.c[k], first, mono)?;
                first = false;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// An integer-affine form `a n + b d + c`, the shape of every closed form in the dimension tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Affine {
    pub n: i64,
    pub d: i64,
    pub c: i64,
}

impl Affine {
    pub const fn new(n: i64, d: i64, c: i64) -> Self {
        Affine { n, d, c }
    }

    pub fn eval(&self, n: i64, d: i64) -> i64 {
        self.n * n + self.d * d + self.c
    }

    /// Fixes `d`, leaving a polynomial in `n`.
    pub fn with_d(&self, d: i64) -> Poly {
        Poly::linear(self.n, self.d * d + self.c)
    }

    pub fn shift(&self, by: i64) -> Self {
        Affine::new(self.n, self.d, self.c + by)
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let order = if self.d >= 0 {
            [(self.n, "n"), (self.d, "d"), (self.c, "")]
        } else {
            [(self.n, "n"), (self.c, ""), (self.d, "d")]
        };
        for (k, mono) in order {
            if k == 0 {
                continue;
            }
            write_coeff(f, Q::from_integer(k), first, mono)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Exact `a / 2` for an even integer polynomial, or `None` when some integer `n` gives an odd value.
pub(crate) fn halve_integer_valued(p: &Poly) -> Option<Poly> {
    let h = p.half();
    h.is_integer_valued().then_some(h)
}
