//! Numerical bookkeeping for the moduli of Horikawa surfaces and the 2-Gorenstein strata `D_{n,d}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, invalid, invariant, Error, Result};
use crate::lattice::{DivisorClass, PicardLattice};
use crate::poly::{Affine, Poly};
use crate::systems::{analyze_system_on, BlowupConfig, LinearDim, NSpec};

/// First kind: `K^2 = 2p_g - 4`. Second kind: `K^2 = 2p_g - 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HorikawaKind {
    First,
    Second,
}

impl fmt::Display for HorikawaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HorikawaKind::First => "first",
            HorikawaKind::Second => "second",
        })
    }
}

impl FromStr for HorikawaKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "first" | "1" => Ok(HorikawaKind::First),
            "second" | "2" => Ok(HorikawaKind::Second),
            _ => Err(invalid(format!("kind must be first or second, got {s:?}"))),
        }
    }
}

/// The one place where type-(d) admissibility is decided.
///
/// `n - d` odd, `n >= d + 3`, and `n >= 2d - 3` (first kind) or `n >= 2d - 2` (second kind).
pub fn check_admissible(kind: HorikawaKind, n: i64, d: i64) -> Result<()> {
    if d < 0 {
        return Err(domain(format!("d must be nonnegative, got {d}")));
    }
    if (n - d).rem_euclid(2) != 1 {
        return Err(domain(format!("n - d must be odd, got n={n}, d={d}")));
    }
    let floor = match kind {
        HorikawaKind::First => (d + 3).max(2 * d - 3),
        HorikawaKind::Second => (d + 3).max(2 * d - 2),
    };
    if n < floor {
        return Err(domain(format!(
            "{kind} kind of type ({d}) needs n >= {floor}, got n={n}"
        )));
    }
    Ok(())
}

/// Every admissible `d` at this `n`, ascending.
pub fn admissible_ds(kind: HorikawaKind, n: i64) -> Vec<i64> {
    (0..=n.max(0))
        .filter(|&d| check_admissible(kind, n, d).is_ok())
        .collect()
}

fn require_n_at_least(n: i64, min: i64, what: &str) -> Result<()> {
    if n < min {
        return Err(domain(format!("{what} needs n >= {min}, got n={n}")));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceInvariants {
    pub p_g: i64,
    pub k_squared: i64,
    pub chi: i64,
}

/// `p_g = n + 1`, `chi = n + 2`, `K^2 = 2n - 2` or `2n - 1`.
pub fn invariants(kind: HorikawaKind, n: i64) -> Result<SurfaceInvariants> {
    match kind {
        HorikawaKind::First => require_n_at_least(n, 2, "a first-kind surface")?,
        HorikawaKind::Second => require_n_at_least(n, 1, "a second-kind surface")?,
    }
    let k_squared = match kind {
        HorikawaKind::First => 2 * n - 2,
        HorikawaKind::Second => 2 * n - 1,
    };
    Ok(SurfaceInvariants {
        p_g: n + 1,
        k_squared,
        chi: n + 2,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HorikawaFamily {
    pub kind: HorikawaKind,
    pub n: i64,
    pub d: i64,
}

impl HorikawaFamily {
    pub fn new(kind: HorikawaKind, n: i64, d: i64) -> Result<Self> {
        check_admissible(kind, n, d)?;
        Ok(HorikawaFamily { kind, n, d })
    }

    pub fn invariants(&self) -> SurfaceInvariants {
        invariants(self.kind, self.n).expect("admissible families have n >= 3")
    }

    pub fn branch_class(&self) -> (PicardLattice, DivisorClass) {
        let extra = match self.kind {
            HorikawaKind::First => 3,
            HorikawaKind::Second => 5,
        };
        f_d_class(self.d, 6, self.n + extra + 3 * self.d)
    }
}

fn f_d_class(d: i64, a: i64, b: i64) -> (PicardLattice, DivisorClass) {
    let l = PicardLattice::hirzebruch(d as u32);
    let c = DivisorClass::from_ints(&[a, b]);
    (l, c)
}

/// Branch divisor `6D + (n+3+3d)F` (first kind) or `6D + (n+5+3d)F` (second kind) on `F_d`.
pub fn branch_class(kind: HorikawaKind, n: i64, d: i64) -> Result<(PicardLattice, DivisorClass)> {
    Ok(HorikawaFamily::new(kind, n, d)?.branch_class())
}

/// The second-kind branch curve minus its ruling: `6D + (n+4+3d)F`.
pub fn second_kind_residual(n: i64, d: i64) -> Result<(PicardLattice, DivisorClass)> {
    check_admissible(HorikawaKind::Second, n, d)?;
    Ok(f_d_class(d, 6, n + 4 + 3 * d))
}

/// `dim Aut(F_d)`.
pub fn aut_dim_fd(d: i64) -> i64 {
    if d == 0 {
        6
    } else {
        d + 5
    }
}

/// `dim Aut(Y_00)`; the `d = 0` value is taken as given.
pub fn aut_dim_y00(d: i64) -> i64 {
    if d == 0 {
        3
    } else {
        d + 2
    }
}

/// `dim Aut(Y_10)`, defined for `d > 0`.
pub fn aut_dim_y10(d: i64) -> i64 {
    d + 3
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StratumFamily {
    #[serde(rename = "Mnd-Hor2")]
    Hor2,
    #[serde(rename = "D'")]
    DPrime,
    #[serde(rename = "D''")]
    DDoublePrime,
    #[serde(rename = "D")]
    D,
}

impl StratumFamily {
    pub fn label(&self) -> &'static str {
        match self {
            StratumFamily::Hor2 => "Mnd-Hor2",
            StratumFamily::DPrime => "D'",
            StratumFamily::DDoublePrime => "D''",
            StratumFamily::D => "D",
        }
    }
}

impl fmt::Display for StratumFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// `D'` (chain misses the negative section, `P1` off `D`) or `D''` (`P1` on `D`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Which {
    #[serde(rename = "D'")]
    DPrime,
    #[serde(rename = "D''")]
    DDoublePrime,
}

impl Which {
    pub fn family(&self) -> StratumFamily {
        match self {
            Which::DPrime => StratumFamily::DPrime,
            Which::DDoublePrime => StratumFamily::DDoublePrime,
        }
    }

    /// `i` of the blow-up configuration carrying this stratum.
    pub fn i(&self) -> u8 {
        match self {
            Which::DPrime => 0,
            Which::DDoublePrime => 1,
        }
    }
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family().label())
    }
}

impl FromStr for Which {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "D'" | "Dp" | "dp" | "prime" | "D1" => Ok(Which::DPrime),
            "D''" | "Dpp" | "dpp" | "double-prime" | "D2" => Ok(Which::DDoublePrime),
            _ => Err(invalid(format!("stratum must be D' or D'' (or Dp/Dpp), got {s:?}"))),
        }
    }
}

/// A dimension, or an empty stratum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StratumDim {
    Value(i64),
    Empty,
}

impl StratumDim {
    pub fn value(&self) -> Option<i64> {
        match self {
            StratumDim::Value(v) => Some(*v),
            StratumDim::Empty => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumRecord {
    pub family: StratumFamily,
    pub n: i64,
    pub d: i64,
    pub dim: StratumDim,
    /// Closed form the dimension was checked against, `None` for empty strata.
    pub formula: Option<Affine>,
    pub nu: i64,
    pub is_component: bool,
    pub eta: Option<i64>,
    /// Dense in the whole second-kind moduli space; second kind only.
    pub dense: Option<bool>,
}

/// The three cases for the type-(d) stratum of second-kind surfaces.
pub fn stratum_dim_second(n: i64, d: i64) -> Result<StratumRecord> {
    check_admissible(HorikawaKind::Second, n, d)?;
    if n + 4 == 3 * d {
        return Err(invariant(format!("n + 4 = 3d at admissible n={n}, d={d}")));
    }
    let eta = (3 * d - n - 4).max(0);
    if eta > 0 && eta > d - 2 {
        return Err(invariant(format!("eta={eta} exceeds d-2 at n={n}, d={d}")));
    }
    let formula = if d == 0 {
        Affine::new(7, 0, 19)
    } else if eta == 0 {
        Affine::new(7, -1, 20)
    } else {
        // 7n + 21 + eta - d with eta = 3d - n - 4.
        Affine::new(6, 2, 17)
    };
    let by_count = second_kind_parameter_count(n, d, eta)?;
    let closed = formula.eval(n, d);
    if by_count != closed {
        return Err(invariant(format!(
            "second-kind stratum (n={n}, d={d}): parameter count {by_count}, closed form {closed}"
        )));
    }
    let top = 7 * n + 19;
    Ok(StratumRecord {
        family: StratumFamily::Hor2,
        n,
        d,
        dim: StratumDim::Value(closed),
        formula: Some(formula),
        nu: if eta > 0 { n + 2 - 2 * d } else { 0 },
        is_component: closed == top,
        eta: Some(eta),
        dense: Some(d == 0 || (eta == 0 && d == 1)),
    })
}

/// Riemann-Roch count of the parameters, independent of the closed forms.
fn second_kind_parameter_count(n: i64, d: i64, eta: i64) -> Result<i64> {
    let l = PicardLattice::hirzebruch(d as u32);
    let dim_of = |a: i64| -> Result<i64> {
        let c = DivisorClass::from_ints(&[a, n + 4 + 3 * d]);
        let chi = l.chi_rr(&c)?;
        chi.as_integer()
            .map(|v| v - 1)
            .ok_or_else(|| invariant("concrete class with symbolic chi"))
    };
    if eta == 0 {
        // Two triple points on the ruling cost 10, the ruling moves in a pencil.
        Ok(dim_of(6)? - 10 + 1 - aut_dim_fd(d))
    } else {
        // D splits off; a node and a triple point on the moving ruling cost 7.
        Ok(dim_of(5)? - 7 - aut_dim_fd(d))
    }
}

/// Component tags: the whole space, or the `a` / `b` halves when it splits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ComponentTag {
    Whole,
    A,
    B,
}

impl ComponentTag {
    pub fn label(&self, kind: HorikawaKind) -> String {
        let k = match kind {
            HorikawaKind::First => "1",
            HorikawaKind::Second => "2",
        };
        match self {
            ComponentTag::Whole => k.to_string(),
            ComponentTag::A => format!("{k}a"),
            ComponentTag::B => format!("{k}b"),
        }
    }

    /// Parses `1`, `1a`, `2b`, `a`, `whole`...
    pub fn parse(s: &str) -> Result<(Option<HorikawaKind>, ComponentTag)> {
        let s = s.trim().to_ascii_lowercase();
        let (kind, rest) = match s.chars().next() {
            Some('1') => (Some(HorikawaKind::First), &s[1..]),
            Some('2') => (Some(HorikawaKind::Second), &s[1..]),
            _ => (None, s.as_str()),
        };
        let tag = match rest {
            "" | "whole" => ComponentTag::Whole,
            "a" => ComponentTag::A,
            "b" => ComponentTag::B,
            _ => return Err(invalid(format!("unknown component tag {s:?}"))),
        };
        Ok((kind, tag))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuliComponent {
    pub kind: HorikawaKind,
    pub n: i64,
    pub tag: ComponentTag,
    pub label: String,
    pub dim: i64,
    /// The types `d` whose strata lie in this component.
    pub types: Vec<i64>,
}

/// `n = 4k + 1, k >= 2` for the first kind; `n = 4k, k >= 2` for the second.
fn moduli_splits(kind: HorikawaKind, n: i64) -> bool {
    match kind {
        HorikawaKind::First => n % 4 == 1 && n >= 9,
        HorikawaKind::Second => n % 4 == 0 && n >= 8,
    }
}

pub fn moduli_components(kind: HorikawaKind, n: i64) -> Result<Vec<ModuliComponent>> {
    let (min, dim) = match kind {
        HorikawaKind::First => (6, 7 * n + 21),
        HorikawaKind::Second => (7, 7 * n + 19),
    };
    require_n_at_least(n, min, &format!("the {kind}-kind classification"))?;
    let ds = admissible_ds(kind, n);
    let make = |tag: ComponentTag, types: Vec<i64>| ModuliComponent {
        kind,
        n,
        tag,
        label: tag.label(kind),
        dim,
        types,
    };
    if !moduli_splits(kind, n) {
        return Ok(vec![make(ComponentTag::Whole, ds)]);
    }
    // The b component holds exactly the largest admissible type: 2k+2 (first), 2k+1 (second).
    let top = match kind {
        HorikawaKind::First => (n - 1) / 2 + 2,
        HorikawaKind::Second => n / 2 + 1,
    };
    if ds.last() != Some(&top) {
        return Err(invariant(format!("largest admissible type at n={n} is not {top}")));
    }
    let a: Vec<i64> = ds.iter().copied().filter(|&d| d != top).collect();
    Ok(vec![make(ComponentTag::A, a), make(ComponentTag::B, vec![top])])
}

/// Closed forms for `(D', D'')` and whether each is an irreducible component of `D_{n,d}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Table1Row {
    D0,
    AtLeast3dMinus1,
    Eq3dMinus3,
    Between,
    Eq2dMinus3,
}

impl Table1Row {
    pub const ALL: [Table1Row; 5] = [
        Table1Row::D0,
        Table1Row::AtLeast3dMinus1,
        Table1Row::Eq3dMinus3,
        Table1Row::Between,
        Table1Row::Eq2dMinus3,
    ];

    pub fn of(n: i64, d: i64) -> Result<Table1Row> {
        check_admissible(HorikawaKind::First, n, d)?;
        Ok(if d == 0 {
            Table1Row::D0
        } else if n >= 3 * d - 1 {
            Table1Row::AtLeast3dMinus1
        } else if n == 3 * d - 3 {
            Table1Row::Eq3dMinus3
        } else if n >= 2 * d - 2 {
            Table1Row::Between
        } else {
            Table1Row::Eq2dMinus3
        })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Table1Row::D0 => "d=0",
            Table1Row::AtLeast3dMinus1 => "n>=3d-1,d>=1",
            Table1Row::Eq3dMinus3 => "n=3d-3",
            Table1Row::Between => "2d-2<=n<3d-3",
            Table1Row::Eq2dMinus3 => "2d=n+3",
        }
    }

    /// `(closed form or empty, is_component)` for the chosen stratum.
    pub fn entry(&self, which: Which) -> (Option<Affine>, bool) {
        use Table1Row::*;
        match (self, which) {
            (D0, Which::DPrime) => (Some(Affine::new(7, 0, 18)), true),
            (D0, Which::DDoublePrime) => (None, false),
            (AtLeast3dMinus1, Which::DPrime) => (Some(Affine::new(7, -1, 19)), true),
            (AtLeast3dMinus1, Which::DDoublePrime) => (Some(Affine::new(7, -1, 18)), false),
            (Eq3dMinus3, _) => (Some(Affine::new(7, -1, 19)), true),
            (Between, Which::DPrime) => (Some(Affine::new(6, 2, 15)), true),
            (Between, Which::DDoublePrime) => (Some(Affine::new(6, 2, 16)), true),
            (Eq2dMinus3, Which::DPrime) => (Some(Affine::new(7, 0, 18)), true),
            (Eq2dMinus3, Which::DDoublePrime) => (None, false),
        }
    }
}

impl fmt::Display for Table1Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn require_stratum_range(n: i64, d: i64) -> Result<()> {
    require_n_at_least(n, 14, "the stratification of D_n")?;
    check_admissible(HorikawaKind::First, n, d)
}

/// `dim D' = dim|L_00| - dim Aut(Y_00)` and `dim D'' = dim|L_10| - dim Aut(Y_10)`, on caller-built lattices.
pub fn d_strata_by_lattice(
    n: i64,
    d: i64,
    lattice_of: &dyn Fn(&BlowupConfig) -> PicardLattice,
) -> Result<(StratumDim, StratumDim)> {
    require_stratum_range(n, d)?;
    let du = d as u32;
    let dim_of = |cfg: BlowupConfig| -> Result<Option<i64>> {
        let a = analyze_system_on(&lattice_of(&cfg), &cfg, NSpec::Concrete(n))?;
        Ok(match a.dim {
            LinearDim::Value(p) => p.as_integer(),
            LinearDim::Undefined => None,
        })
    };
    let y00 = BlowupConfig::new(du, 0, 0)?;
    let dp = dim_of(y00)?
        .map(|v| StratumDim::Value(v - aut_dim_y00(d)))
        .ok_or_else(|| invariant(format!("|L_00| is non-reduced at n={n}, d={d}")))?;
    let dpp = if d == 0 || n == 2 * d - 3 {
        StratumDim::Empty
    } else {
        let y10 = BlowupConfig::new(du, 1, 0)?;
        match dim_of(y10)? {
            Some(v) => StratumDim::Value(v - aut_dim_y10(d)),
            None => return Err(invariant(format!("|L_10| is non-reduced at n={n}, d={d}"))),
        }
    };
    Ok((dp, dpp))
}

/// The tabulated closed forms evaluated at `(n, d)`.
pub fn d_strata_by_table(n: i64, d: i64) -> Result<(StratumDim, StratumDim)> {
    require_stratum_range(n, d)?;
    let row = Table1Row::of(n, d)?;
    let eval = |w: Which| match row.entry(w).0 {
        Some(f) => StratumDim::Value(f.eval(n, d)),
        None => StratumDim::Empty,
    };
    Ok((eval(Which::DPrime), eval(Which::DDoublePrime)))
}

/// Records for `D'_{n,d}` and `D''_{n,d}`; both computation routes must agree.
pub fn d_strata(n: i64, d: i64) -> Result<(StratumRecord, StratumRecord)> {
    let by_lattice = d_strata_by_lattice(n, d, &|c| c.lattice())?;
    let by_table = d_strata_by_table(n, d)?;
    if by_lattice != by_table {
        return Err(invariant(format!(
            "stratum dimensions disagree at n={n}, d={d}: lattice {by_lattice:?}, table {by_table:?}"
        )));
    }
    let row = Table1Row::of(n, d)?;
    let record = |w: Which, dim: StratumDim| -> Result<StratumRecord> {
        let (formula, is_component) = row.entry(w);
        let nu = match dim {
            StratumDim::Empty => 0,
            StratumDim::Value(_) => nu_count(n, d, w)?,
        };
        Ok(StratumRecord {
            family: w.family(),
            n,
            d,
            dim,
            formula,
            nu,
            is_component,
            eta: None,
            dense: None,
        })
    };
    Ok((
        record(Which::DPrime, by_lattice.0)?,
        record(Which::DDoublePrime, by_lattice.1)?,
    ))
}

/// Number of `A_1` points on the general surface of the stratum.
pub fn nu_count(n: i64, d: i64, which: Which) -> Result<i64> {
    check_admissible(HorikawaKind::First, n, d)?;
    if which == Which::DDoublePrime && (d == 0 || n == 2 * d - 3) {
        return Err(domain(format!("D''_{{{n},{d}}} is empty")));
    }
    if n >= 3 * d - 3 || n == 2 * d - 3 {
        return Ok(0);
    }
    Ok(match which {
        Which::DPrime => n + 3 - 2 * d,
        Which::DDoublePrime => n + 2 - 2 * d,
    })
}

/// Which component of the second-kind moduli space contains a stratum of `D_n` in its closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Membership {
    /// The moduli space is irreducible.
    Whole,
    /// Component 2a, holding the odd types `d <= 2k - 1`.
    TwoA,
    /// Component 2b, holding type `2k + 1`.
    TwoB,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DnComponent {
    pub n: i64,
    pub d: i64,
    pub which: Which,
    pub dim: i64,
    pub membership: Membership,
}

/// Irreducible components of the closure of `D_n`, all of dimension `7n + 18`.
pub fn dn_components(n: i64) -> Result<Vec<DnComponent>> {
    require_n_at_least(n, 14, "the components of D_n")?;
    let split = moduli_splits(HorikawaKind::Second, n);
    let mut out = Vec::new();
    let mut push = |d: i64, which: Which, membership: Membership| {
        out.push(DnComponent {
            n,
            d,
            which,
            dim: 7 * n + 18,
            membership,
        })
    };
    match n.rem_euclid(4) {
        1 => {
            push(0, Which::DPrime, Membership::Whole);
            push((n + 3) / 2, Which::DPrime, Membership::Whole);
        }
        3 => push(0, Which::DPrime, Membership::Whole),
        2 => push(1, Which::DPrime, Membership::Whole),
        _ => {
            debug_assert!(split);
            push(1, Which::DPrime, Membership::TwoA);
            push((n + 2) / 2, Which::DDoublePrime, Membership::TwoB);
        }
    }
    Ok(out)
}

/// Whether the closure of the type-(d) second-kind stratum contains the given part of `D_{n,d}`.
///
/// `None` outside the range where this is recorded (`n = 2d - 3`, which is not a second-kind type).
pub fn closure_contains(n: i64, d: i64, which: Which) -> Option<bool> {
    check_admissible(HorikawaKind::Second, n, d).ok()?;
    if n >= 3 * d - 3 {
        Some(true)
    } else {
        Some(which == Which::DDoublePrime)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Isomorphism class of an indefinite unimodular form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum UnimodularClass {
    /// `positive <1> + negative <-1>`.
    Odd { positive: i64, negative: i64 },
    /// `e8` copies of `E8` (negative sign means `-E8`) plus `hyperbolic` copies of `H`.
    Even { e8: i64, hyperbolic: i64 },
}

impl fmt::Display for UnimodularClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            UnimodularClass::Odd { positive, negative } => write!(f, "{positive}<1>+{negative}<-1>"),
            UnimodularClass::Even { e8, hyperbolic } => {
                let sign = if e8 < 0 { "-" } else { "" };
                write!(f, "{}({sign}E8)+{hyperbolic}H", e8.abs())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionForm {
    pub kind: HorikawaKind,
    pub n: i64,
    pub component: String,
    pub rank: i64,
    pub signature: i64,
    pub b_plus: i64,
    pub b_minus: i64,
    pub parity: Parity,
    pub class: UnimodularClass,
}

/// Tags the topology classifier accepts at `(kind, n)`.
pub fn topology_tags(kind: HorikawaKind, n: i64) -> Vec<ComponentTag> {
    match kind {
        HorikawaKind::First if n % 4 == 1 && n >= 5 => vec![ComponentTag::A, ComponentTag::B],
        HorikawaKind::First => vec![ComponentTag::A],
        HorikawaKind::Second if moduli_splits(kind, n) => {
            vec![ComponentTag::Whole, ComponentTag::A, ComponentTag::B]
        }
        HorikawaKind::Second => vec![ComponentTag::Whole],
    }
}

/// Rank, signature, parity and unimodular class of `H^2` of the minimal model.
pub fn intersection_form(kind: HorikawaKind, n: i64, tag: ComponentTag) -> Result<IntersectionForm> {
    require_n_at_least(n, 3, "the topology classifier")?;
    if !topology_tags(kind, n).contains(&tag) {
        return Err(domain(format!(
            "no component {} for {kind}-kind surfaces at n={n}",
            tag.label(kind)
        )));
    }
    let inv = invariants(kind, n)?;
    let rank = 12 * inv.chi - inv.k_squared - 2;
    let signature = inv.k_squared - 8 * inv.chi;
    let parity = match (kind, tag) {
        (HorikawaKind::First, ComponentTag::B) if n % 8 == 5 => Parity::Even,
        _ => Parity::Odd,
    };
    let b_plus = (rank + signature) / 2;
    let b_minus = (rank - signature) / 2;
    if b_plus != 2 * inv.p_g + 1 {
        return Err(invariant(format!("b+ = {b_plus} but 2p_g + 1 = {}", 2 * inv.p_g + 1)));
    }
    let class = match parity {
        Parity::Odd => UnimodularClass::Odd {
            positive: b_plus,
            negative: b_minus,
        },
        Parity::Even => {
            if signature % 16 != 0 {
                return Err(invariant(format!(
                    "even form with signature {signature} not divisible by 16"
                )));
            }
            UnimodularClass::Even {
                e8: signature / 8,
                hyperbolic: (rank - signature.abs()) / 2,
            }
        }
    };
    Ok(IntersectionForm {
        kind,
        n,
        component: tag.label(kind),
        rank,
        signature,
        b_plus,
        b_minus,
        parity,
        class,
    })
}

/// Dimension of a stratum as a polynomial in `n` at fixed `d`, for symbolic rendering.
pub fn table1_symbolic(row: Table1Row, which: Which, d: i64) -> Option<Poly> {
    row.entry(which).0.map(|f| f.with_d(d))
}
