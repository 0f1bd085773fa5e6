//! The linear systems `|L_ij|` on `F_d` blown up at two points of a ruling.
//!
//! `L_ij = 6D + (n+3+3d)F - 2E1 - 2E2` on `Y_ij`, where `i = 1` puts the first point on `D`
//! and `j = 1` makes the second point infinitely near the first.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, invalid, invariant, Error, Result};
use crate::lattice::{DivisorClass, PicardLattice};
use crate::moduli::{check_admissible, HorikawaKind};
use crate::poly::{halve_integer_valued, Affine, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BlowupConfig {
    d: u32,
    i: u8,
    j: u8,
}

impl BlowupConfig {
    pub fn new(d: u32, i: u8, j: u8) -> Result<Self> {
        if i > 1 || j > 1 {
            return Err(invalid(format!("i and j must be 0 or 1, got i={i}, j={j}")));
        }
        if d == 0 && i == 1 {
            return Err(domain("on F_0 there is no negative section, so i must be 0"));
        }
        Ok(BlowupConfig { d, i, j })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn i(&self) -> u8 {
        self.i
    }

    pub fn j(&self) -> u8 {
        self.j
    }

    /// `F_d` blown up at `P1`, `P2` with exceptional classes `E1`, `E2`.
    pub fn lattice(&self) -> PicardLattice {
        PicardLattice::hirzebruch(self.d)
            .blow_up_many(&["E1", "E2"])
            .expect("fresh labels")
    }

    /// Strict transform of `D`.
    pub fn d_prime(&self) -> DivisorClass {
        let mut v = vec![1, 0, 0, 0];
        if self.i == 1 {
            v[2] = -1;
        }
        DivisorClass::from_ints(&v)
    }

    /// Strict transform of the ruling through `P1`.
    pub fn r_prime(&self) -> DivisorClass {
        DivisorClass::from_ints(&[0, 1, -1, -1])
    }

    /// The (-2)-curve `E1 - E2`, present when `P2` is infinitely near `P1`.
    pub fn e1_minus_e2(&self) -> Option<DivisorClass> {
        (self.j == 1).then(|| DivisorClass::from_ints(&[0, 0, 1, -1]))
    }

    pub fn all(d: u32) -> Vec<BlowupConfig> {
        let mut v = Vec::new();
        for i in 0..=u8::from(d > 0) {
            for j in 0..=1 {
                v.push(BlowupConfig { d, i, j });
            }
        }
        v
    }
}

impl fmt::Display for BlowupConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y{}{} on F_{}", self.i, self.j, self.d)
    }
}

/// The five row ranges of the dimension tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Regime {
    /// `n >= 3d - 1`
    AtLeast3dMinus1,
    /// `n = 3d - 3`
    Eq3dMinus3,
    /// `2d - 1 <= n < 3d - 3`
    Between,
    /// `n = 2d - 2`
    Eq2dMinus2,
    /// `n = 2d - 3`
    Eq2dMinus3,
}

impl Regime {
    pub const ALL: [Regime; 5] = [
        Regime::AtLeast3dMinus1,
        Regime::Eq3dMinus3,
        Regime::Between,
        Regime::Eq2dMinus2,
        Regime::Eq2dMinus3,
    ];

    /// Regime of an admissible first-kind pair.
    pub fn of(n: i64, d: i64) -> Result<Regime> {
        check_admissible(HorikawaKind::First, n, d)?;
        Ok(Regime::classify(n, d))
    }

    fn classify(n: i64, d: i64) -> Regime {
        if n >= 3 * d - 1 {
            Regime::AtLeast3dMinus1
        } else if n == 3 * d - 3 {
            Regime::Eq3dMinus3
        } else if n >= 2 * d - 1 {
            Regime::Between
        } else if n == 2 * d - 2 {
            Regime::Eq2dMinus2
        } else {
            Regime::Eq2dMinus3
        }
    }

    pub fn contains(&self, n: i64, d: i64) -> bool {
        Regime::classify(n, d) == *self && n >= 2 * d - 3
    }

    /// The unique `n` of an equality row.
    pub fn pinned_n(&self, d: i64) -> Option<i64> {
        match self {
            Regime::Eq3dMinus3 => Some(3 * d - 3),
            Regime::Eq2dMinus2 => Some(2 * d - 2),
            Regime::Eq2dMinus3 => Some(2 * d - 3),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Regime::AtLeast3dMinus1 => "n>=3d-1",
            Regime::Eq3dMinus3 => "n=3d-3",
            Regime::Between => "2d-1<=n<3d-3",
            Regime::Eq2dMinus2 => "n=2d-2",
            Regime::Eq2dMinus3 => "n=2d-3",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Regime {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Regime::ALL
            .into_iter()
            .find(|r| r.label() == s.replace(' ', ""))
            .ok_or_else(|| invalid(format!("unknown regime {s:?}")))
    }
}

/// A concrete `n`, or the symbol `n` ranging over one regime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NSpec {
    Concrete(i64),
    Symbolic(Regime),
}

/// Resolves `n` to a polynomial together with its regime, enforcing admissibility.
pub fn resolve_n(n: NSpec, d: u32) -> Result<(Poly, Regime, Option<i64>)> {
    let d = i64::from(d);
    match n {
        NSpec::Concrete(n) => Ok((Poly::constant(n), Regime::of(n, d)?, Some(n))),
        NSpec::Symbolic(r) => match r.pinned_n(d) {
            Some(n) => {
                Regime::of(n, d)?;
                Ok((Poly::constant(n), r, Some(n)))
            }
            None => {
                // The open rows need at least one admissible value; the bounds below are generous.
                let any = (d + 3..=3 * d + 4)
                    .any(|n| r.contains(n, d) && check_admissible(HorikawaKind::First, n, d).is_ok());
                if !any {
                    return Err(domain(format!("row {r} has no admissible n for d={d}")));
                }
                Ok((Poly::n(), r, None))
            }
        },
    }
}

/// The fixed part recorded for a system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FixedPart {
    Zero,
    DPrime,
    DPrimePlusE1MinusE2,
    NonReduced,
}

impl FixedPart {
    pub fn label(&self) -> &'static str {
        match self {
            FixedPart::Zero => "0",
            FixedPart::DPrime => "D'",
            FixedPart::DPrimePlusE1MinusE2 => "D'+(E1-E2)",
            FixedPart::NonReduced => "Non-reduced",
        }
    }

    pub fn contains_d_prime(&self) -> bool {
        matches!(self, FixedPart::DPrime | FixedPart::DPrimePlusE1MinusE2)
    }

    pub fn class(&self, cfg: &BlowupConfig) -> Option<DivisorClass> {
        match self {
            FixedPart::Zero => Some(DivisorClass::zero(4)),
            FixedPart::DPrime => Some(cfg.d_prime()),
            FixedPart::DPrimePlusE1MinusE2 => Some(cfg.d_prime() + cfg.e1_minus_e2()?),
            FixedPart::NonReduced => None,
        }
    }
}

impl fmt::Display for FixedPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Fixed part of `|L_ij|` by row, as tabulated.
pub fn table3_entry(regime: Regime, i: u8, j: u8) -> FixedPart {
    use FixedPart::*;
    match (regime, i, j) {
        (Regime::AtLeast3dMinus1, _, _) => Zero,
        (Regime::Eq3dMinus3, 0, _) => Zero,
        (Regime::Eq3dMinus3, _, 0) => DPrime,
        (Regime::Eq3dMinus3, _, _) => DPrimePlusE1MinusE2,
        (Regime::Between, 0, _) => DPrime,
        (Regime::Between, _, 0) => DPrime,
        (Regime::Between, _, _) => DPrimePlusE1MinusE2,
        (Regime::Eq2dMinus2, 0, _) => DPrime,
        (Regime::Eq2dMinus2, _, 0) => DPrime,
        (Regime::Eq2dMinus2, _, _) => NonReduced,
        (Regime::Eq2dMinus3, 0, _) => DPrime,
        (Regime::Eq2dMinus3, _, _) => NonReduced,
    }
}

/// `dim |L_i0|` by row as a closed form in `(n, d)`; `None` where the general member is non-reduced.
pub fn table2_entry(regime: Regime, i: u8) -> Option<Affine> {
    Some(match (regime, i) {
        (Regime::AtLeast3dMinus1, _) => Affine::new(7, 0, 21),
        (Regime::Eq3dMinus3, 0) => Affine::new(7, 0, 21),
        (Regime::Eq3dMinus3, _) => Affine::new(7, 0, 22),
        (Regime::Between, 0) => Affine::new(6, 3, 17),
        (Regime::Between, _) => Affine::new(6, 3, 19),
        (Regime::Eq2dMinus2, 0) => Affine::new(7, 1, 19),
        (Regime::Eq2dMinus2, _) => Affine::new(7, 1, 21),
        (Regime::Eq2dMinus3, 0) => Affine::new(6, 3, 17),
        (Regime::Eq2dMinus3, _) => return None,
    })
}

/// Closed form for `dim |L_ij|`, undefined where the fixed part is non-reduced.
pub fn table2_closed_form(regime: Regime, i: u8, j: u8) -> Option<Affine> {
    if table3_entry(regime, i, j) == FixedPart::NonReduced {
        return None;
    }
    table2_entry(regime, i)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LinearDim {
    Value(Poly),
    Undefined,
}

impl LinearDim {
    pub fn value(&self) -> Option<Poly> {
        match self {
            LinearDim::Value(p) => Some(*p),
            LinearDim::Undefined => None,
        }
    }
}

impl fmt::Display for LinearDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinearDim::Value(p) => write!(f, "{p}"),
            LinearDim::Undefined => f.write_str("x"),
        }
    }
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_linear(&s).ok_or_else(|| serde::de::Error::custom(format!("not a linear form in n: {s:?}")))
    }
}

/// Parses integer-linear forms `an+b` as printed by `Display`.
fn parse_linear(s: &str) -> Option<Poly> {
    let s = s.trim();
    if let Ok(v) = s.parse::<i64>() {
        return Some(Poly::constant(v));
    }
    let idx = s.find('n')?;
    let (head, tail) = (&s[..idx], &s[idx + 1..]);
    let a = match head {
        "" => 1,
        "-" => -1,
        h => h.parse().ok()?,
    };
    let b = if tail.is_empty() { 0 } else { tail.trim_start_matches('+').parse().ok()? };
    Some(Poly::linear(a, b))
}

/// Verdict on one `|L_ij|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemAnalysis {
    pub config: BlowupConfig,
    pub regime: Regime,
    pub n: Poly,
    pub l: DivisorClass,
    pub reduced: bool,
    pub fixed: FixedPart,
    pub z: Option<DivisorClass>,
    pub m: Option<DivisorClass>,
    pub dim: LinearDim,
}

/// `6D + (n+3+3d)F - 2E1 - 2E2`.
pub fn l_class(cfg: &BlowupConfig, n: NSpec) -> Result<DivisorClass> {
    let (np, _, _) = resolve_n(n, cfg.d)?;
    Ok(l_class_at(cfg, np))
}

fn l_class_at(cfg: &BlowupConfig, n: Poly) -> DivisorClass {
    let c = n + Poly::constant(3 + 3 * i64::from(cfg.d));
    DivisorClass::from_polys(vec![
        Poly::constant(6),
        c,
        Poly::constant(-2),
        Poly::constant(-2),
    ])
}

/// `(M^2 - M.K) / 2`, the Riemann-Roch dimension of a nef and big moving part.
pub fn rr_dimension(y: &PicardLattice, m: &DivisorClass) -> Result<Poly> {
    let k = y.canonical();
    let twice = y.intersect(m, m)? - y.intersect(m, &k)?;
    halve_integer_valued(&twice).ok_or_else(|| invariant(format!("M^2 - M.K = {twice} is odd")))
}

pub fn analyze_system(cfg: &BlowupConfig, n: NSpec) -> Result<SystemAnalysis> {
    analyze_system_on(&cfg.lattice(), cfg, n)
}

/// As [`analyze_system`], on a caller-supplied lattice with basis `D, F, E1, E2`.
pub fn analyze_system_on(y: &PicardLattice, cfg: &BlowupConfig, n: NSpec) -> Result<SystemAnalysis> {
    if y.rank() != 4 {
        return Err(invalid("Y_ij lattices have rank 4"));
    }
    let (np, regime, concrete) = resolve_n(n, cfg.d)?;
    let l = l_class_at(cfg, np);
    let fixed = table3_entry(regime, cfg.i, cfg.j);
    let Some(z) = fixed.class(cfg) else {
        return Ok(SystemAnalysis {
            config: *cfg,
            regime,
            n: np,
            l,
            reduced: false,
            fixed,
            z: None,
            m: None,
            dim: LinearDim::Undefined,
        });
    };
    let m = &l - &z;
    let dim = rr_dimension(y, &m)?;
    if let Some(nv) = concrete {
        let k = y.canonical();
        let mk = y.intersect(&m, &k)?.eval(nv);
        let m2 = y.intersect(&m, &m)?.eval(nv);
        if mk >= 0.into() || m2 <= 0.into() {
            return Err(invariant(format!(
                "{cfg} at n={nv}: need M.K < 0 < M^2, got M.K={mk}, M^2={m2}"
            )));
        }
    }
    Ok(SystemAnalysis {
        config: *cfg,
        regime,
        n: np,
        l,
        reduced: true,
        fixed,
        z: Some(z),
        m: Some(m),
        dim: LinearDim::Value(dim),
    })
}

/// Fixed part found by peeling off `D'` and `E1 - E2` while they pair negatively with the rest.
///
/// A curve peeled twice makes the general member non-reduced.
pub fn fixed_part_by_peeling(y: &PicardLattice, cfg: &BlowupConfig, n: i64) -> Result<FixedPart> {
    let l = l_class_at(cfg, Poly::constant(n));
    let mut curves = vec![cfg.d_prime()];
    curves.extend(cfg.e1_minus_e2());
    let mut mult = vec![0u32; curves.len()];
    let mut z = y.zero();
    loop {
        let rest = &l - &z;
        let mut peeled = false;
        for (c, k) in curves.iter().zip(mult.iter_mut()) {
            if y.intersect_int(c, &rest)? < 0 {
                *k += 1;
                if *k >= 2 {
                    return Ok(FixedPart::NonReduced);
                }
                z = &z + c;
                peeled = true;
                break;
            }
        }
        if !peeled {
            break;
        }
    }
    Ok(match mult.as_slice() {
        [0] | [0, 0] => FixedPart::Zero,
        [1] | [1, 0] => FixedPart::DPrime,
        [1, 1] => FixedPart::DPrimePlusE1MinusE2,
        other => {
            return Err(invariant(format!(
                "peeling produced an unrecorded fixed part {other:?} for {cfg} at n={n}"
            )))
        }
    })
}
