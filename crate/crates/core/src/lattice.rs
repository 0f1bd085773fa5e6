//! Intersection theory on rational surfaces given by a labeled basis.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, invariant, Result};
use crate::hj::Chain;
use crate::matrix::{self, IntMatrix};
use crate::poly::{halve_integer_valued, Poly};

/// A divisor class as coordinates over a lattice basis; coordinates may depend on `n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct DivisorClass {
    coords: Vec<Poly>,
}

impl DivisorClass {
    pub fn zero(rank: usize) -> Self {
        DivisorClass {
            coords: vec![Poly::constant(0); rank],
        }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        DivisorClass {
            coords: v.iter().map(|&x| Poly::constant(x)).collect(),
        }
    }

    pub fn from_polys(coords: Vec<Poly>) -> Self {
        DivisorClass { coords }
    }

    pub fn coords(&self) -> &[Poly] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// Integer coordinates, when none depends on `n`.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.coords.iter().map(Poly::as_integer).collect()
    }

    pub fn scale(&self, k: i64) -> Self {
        DivisorClass {
            coords: self.coords.iter().map(|c| c.scale(k)).collect(),
        }
    }

    /// Substitutes a concrete `n`.
    pub fn at(&self, n: i64) -> Self {
        DivisorClass {
            coords: self.coords.iter().map(|c| c.at(n)).collect(),
        }
    }

    /// Pads with zero coordinates, the pull-back to a blow-up.
    pub fn pull_back(&self, rank: usize) -> Self {
        let mut coords = self.coords.clone();
        coords.resize(rank, Poly::constant(0));
        DivisorClass { coords }
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(Poly, Poly) -> Poly) -> Self {
        assert_eq!(self.rank(), rhs.rank(), "divisor classes of different rank");
        DivisorClass {
            coords: self.coords.iter().zip(&rhs.coords).map(|(&a, &b)| f(a, b)).collect(),
        }
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: DivisorClass) -> DivisorClass {
        &self + &rhs
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        &self - &rhs
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        self.scale(-1)
    }
}

/// Labeled basis, symmetric Gram matrix, canonical class and `chi(O)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PicardLattice {
    labels: Vec<String>,
    gram: IntMatrix,
    canonical: Vec<i64>,
    chi_o: i64,
    /// Nonzero Gram entries, for sparse pairing.
    support: Vec<(usize, usize, i64)>,
}

/// Summary used by reports and the Python bindings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSummary {
    pub labels: Vec<String>,
    pub gram: IntMatrix,
    pub canonical: Vec<i64>,
    pub chi_o: i64,
    pub k_squared: i64,
}

fn support_of(gram: &IntMatrix) -> Vec<(usize, usize, i64)> {
    let mut s = Vec::new();
    for (i, row) in gram.iter().enumerate() {
        for (j, &g) in row.iter().enumerate() {
            if g != 0 {
                s.push((i, j, g));
            }
        }
    }
    s
}

impl PicardLattice {
    pub fn from_parts(labels: Vec<String>, gram: IntMatrix, canonical: Vec<i64>, chi_o: i64) -> Result<Self> {
        let r = labels.len();
        if gram.len() != r || gram.iter().any(|row| row.len() != r) || canonical.len() != r {
            return Err(invalid(format!("lattice data must all have size {r}")));
        }
        if !matrix::is_symmetric(&gram) {
            return Err(invalid("Gram matrix is not symmetric"));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(invalid(format!("duplicate basis label {l:?}")));
            }
        }
        let support = support_of(&gram);
        Ok(PicardLattice {
            labels,
            gram,
            canonical,
            chi_o,
            support,
        })
    }

    /// `F_d` with basis `D, F`: `D^2 = -d`, `D.F = 1`, `F^2 = 0`, `K = -2D - (d+2)F`.
    pub fn hirzebruch(d: u32) -> Self {
        let d = i64::from(d);
        PicardLattice::from_parts(
            vec!["D".into(), "F".into()],
            vec![vec![-d, 1], vec![1, 0]],
            vec![-2, -(d + 2)],
            1,
        )
        .expect("well-formed Hirzebruch lattice")
    }

    /// Adds an exceptional class `E` with `E^2 = -1`, orthogonal to the old basis, and `K += E`.
    pub fn blow_up(&self, label: &str) -> Result<Self> {
        self.blow_up_many(&[label])
    }

    /// Blows up once per label, in order.
    pub fn blow_up_many<S: AsRef<str>>(&self, new_labels: &[S]) -> Result<Self> {
        let mut labels = self.labels.clone();
        for l in new_labels {
            let l = l.as_ref();
            if labels.iter().any(|x| x == l) {
                return Err(crate::error::domain(format!("label {l:?} already in the basis")));
            }
            labels.push(l.to_string());
        }
        let (r, k) = (self.rank(), new_labels.len());
        let mut gram = self.gram.clone();
        for row in gram.iter_mut() {
            row.resize(r + k, 0);
        }
        let mut support = self.support.clone();
        for i in r..r + k {
            let mut row = vec![0; r + k];
            row[i] = -1;
            gram.push(row);
            support.push((i, i, -1));
        }
        let mut canonical = self.canonical.clone();
        canonical.resize(r + k, 1);
        let out = PicardLattice {
            labels,
            gram,
            canonical,
            chi_o: self.chi_o,
            support,
        };
        if out.k_squared() != self.k_squared() - k as i64 {
            return Err(invariant("each blow-up must lower K^2 by one"));
        }
        if out.noether_defect() != self.noether_defect() {
            return Err(invariant("blow-up broke K^2 + rank = 12 chi(O) - 2"));
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn chi_o(&self) -> i64 {
        self.chi_o
    }

    pub fn summary(&self) -> LatticeSummary {
        LatticeSummary {
            labels: self.labels.clone(),
            gram: self.gram.clone(),
            canonical: self.canonical.clone(),
            chi_o: self.chi_o,
            k_squared: self.k_squared(),
        }
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| invalid(format!("no basis element {label:?}")))
    }

    pub fn basis(&self, label: &str) -> Result<DivisorClass> {
        let mut v = vec![0; self.rank()];
        v[self.index_of(label)?] = 1;
        Ok(DivisorClass::from_ints(&v))
    }

    /// `sum k_i X_i` from `(label, k_i)` terms.
    pub fn class(&self, terms: &[(&str, i64)]) -> Result<DivisorClass> {
        let terms: Vec<(&str, Poly)> = terms.iter().map(|&(l, k)| (l, Poly::constant(k))).collect();
        self.class_poly(&terms)
    }

    pub fn class_poly(&self, terms: &[(&str, Poly)]) -> Result<DivisorClass> {
        let mut c = DivisorClass::zero(self.rank());
        for &(l, k) in terms {
            let i = self.index_of(l)?;
            c.coords[i] += k;
        }
        Ok(c)
    }

    pub fn canonical(&self) -> DivisorClass {
        DivisorClass::from_ints(&self.canonical)
    }

    pub fn zero(&self) -> DivisorClass {
        DivisorClass::zero(self.rank())
    }

    fn check(&self, a: &DivisorClass) -> Result<()> {
        if a.rank() != self.rank() {
            return Err(invalid(format!(
                "class has {} coordinates, lattice has rank {}",
                a.rank(),
                self.rank()
            )));
        }
        Ok(())
    }

    pub fn intersect(&self, a: &DivisorClass, b: &DivisorClass) -> Result<Poly> {
        self.check(a)?;
        self.check(b)?;
        if let (Some(x), Some(y)) = (a.to_ints(), b.to_ints()) {
            let v: i64 = self.support.iter().map(|&(i, j, g)| x[i] * g * y[j]).sum();
            return Ok(Poly::constant(v));
        }
        let mut acc = Poly::constant(0);
        for &(i, j, g) in &self.support {
            if a.coords[i].is_zero() || b.coords[j].is_zero() {
                continue;
            }
            acc += (a.coords[i] * b.coords[j]).scale(g);
        }
        Ok(acc)
    }

    /// Integer pairing of integer classes.
    pub fn intersect_int(&self, a: &DivisorClass, b: &DivisorClass) -> Result<i64> {
        self.intersect(a, b)?
            .as_integer()
            .ok_or_else(|| invalid("pairing depends on n"))
    }

    pub fn k_squared(&self) -> i64 {
        let k = &self.canonical;
        self.support.iter().map(|&(i, j, g)| k[i] * g * k[j]).sum()
    }

    /// `K^2 + rank - (12 chi(O) - 2)`, zero for rational surfaces.
    pub fn noether_defect(&self) -> i64 {
        self.k_squared() + self.rank() as i64 - (12 * self.chi_o - 2)
    }

    /// `chi(O(a)) = chi(O) + a.(a - K)/2`.
    pub fn chi_rr(&self, a: &DivisorClass) -> Result<Poly> {
        let k = self.canonical();
        let twice = self.intersect(a, &(a - &k))?;
        let half = halve_integer_valued(&twice)
            .ok_or_else(|| invariant(format!("a.(a-K) = {twice} is not even")))?;
        Ok(half + Poly::constant(self.chi_o))
    }

    /// `p_a(a) = 1 + a.(a + K)/2`.
    pub fn arithmetic_genus(&self, a: &DivisorClass) -> Result<Poly> {
        let k = self.canonical();
        let twice = self.intersect(a, &(a + &k))?;
        let half = halve_integer_valued(&twice)
            .ok_or_else(|| invariant(format!("a.(a+K) = {twice} is not even")))?;
        Ok(half + Poly::constant(1))
    }

    /// Pairings of `a` with every named curve.
    pub fn pairing_report<S: AsRef<str>>(
        &self,
        a: &DivisorClass,
        curves: &[(S, DivisorClass)],
    ) -> Result<BTreeMap<String, Poly>> {
        curves
            .iter()
            .map(|(name, c)| Ok((name.as_ref().to_string(), self.intersect(a, c)?)))
            .collect()
    }

    /// `(positive, negative)` inertia of the Gram matrix.
    pub fn signature(&self) -> (usize, usize) {
        let (p, n, _) = matrix::inertia(&self.gram);
        (p, n)
    }

    /// Copy with `delta` added to the symmetric pair of entries `(i, j)`, `(j, i)`; for fault injection.
    pub fn perturbed(&self, i: usize, j: usize, delta: i64) -> Result<Self> {
        let r = self.rank();
        if i >= r || j >= r {
            return Err(invalid(format!("Gram index ({i}, {j}) outside rank {r}")));
        }
        let mut gram = self.gram.clone();
        gram[i][j] += delta;
        if i != j {
            gram[j][i] += delta;
        }
        PicardLattice::from_parts(self.labels.clone(), gram, self.canonical.clone(), self.chi_o)
    }

    /// Human-readable form such as `6D+(n+16)F-2E1-2E2`.
    pub fn render(&self, a: &DivisorClass) -> String {
        let mut out = String::new();
        for (c, l) in a.coords.iter().zip(&self.labels) {
            if c.is_zero() {
                continue;
            }
            let term = match c.as_integer() {
                Some(1) => l.clone(),
                Some(-1) => format!("-{l}"),
                Some(k) => format!("{k}{l}"),
                None => format!("({c}){l}"),
            };
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for PicardLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lattice <{}> K={}", self.labels.join(", "), self.render(&self.canonical()))
    }
}

/// Tridiagonal intersection matrix of a chain: `-e_i` on the diagonal, `1` beside it.
pub fn chain_gram(c: &Chain) -> IntMatrix {
    let r = c.len();
    let mut g = vec![vec![0i64; r]; r];
    for (i, &e) in c.entries().iter().enumerate() {
        g[i][i] = -i64::from(e);
        if i + 1 < r {
            g[i][i + 1] = 1;
            g[i + 1][i] = 1;
        }
    }
    g
}

pub fn is_negative_definite(m: &[Vec<i64>]) -> bool {
    matrix::is_negative_definite(m)
}

/// Coefficients `a_i` in `K = p^*K + sum a_i C_i`, from adjunction `C_j.(sum a_i C_i) = e_j - 2`.
pub fn discrepancies(c: &Chain) -> Result<Vec<BigRational>> {
    let g = chain_gram(c);
    let rhs: Vec<i64> = c.entries().iter().map(|&e| i64::from(e) - 2).collect();
    matrix::solve_rational(&g, &rhs).ok_or_else(|| invariant(format!("singular Gram matrix for {c}")))
}
