//! Hirzebruch-Jung continued fractions and T-chains.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{domain, invalid, invariant, Error, Result};

/// A string of rational curves, entry `e_i` meaning self-intersection `-e_i`.
///
/// Ordered by length first, then lexicographically by entries.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Chain(Vec<u32>);

impl Chain {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(invalid("a chain needs at least one entry"));
        }
        if let Some(e) = entries.iter().find(|&&e| e < 2) {
            return Err(invalid(format!("chain entries must be >= 2, got {e}")));
        }
        Ok(Chain(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn reversed(&self) -> Chain {
        Chain(self.0.iter().rev().copied().collect())
    }

    /// `[4]` or `[3, 2, ..., 2, 3]`.
    pub fn is_two_gorenstein_shape(&self) -> bool {
        match self.0.as_slice() {
            [4] => true,
            [3, mid @ .., 3] => mid.iter().all(|&e| e == 2),
            _ => false,
        }
    }

    /// The 2-Gorenstein seed `[3, 2^k, 3]`.
    pub fn seed(k: usize) -> Chain {
        let mut v = vec![3];
        v.extend(std::iter::repeat(2).take(k));
        v.push(3);
        Chain(v)
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }
}

impl TryFrom<Vec<u32>> for Chain {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Chain::new(v)
    }
}

impl From<Chain> for Vec<u32> {
    fn from(c: Chain) -> Self {
        c.0
    }
}

impl Ord for Chain {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Chain {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Chain{self}")
    }
}

/// Accepts `3,2,3`, `[3, 2, 3]` or `3 2 3`.
impl FromStr for Chain {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let entries = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| invalid(format!("not a chain entry: {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Chain::new(entries)
    }
}

/// The singularity `1/n(1, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclicQuotientSingularity {
    n: u64,
    q: u64,
}

impl CyclicQuotientSingularity {
    pub fn new(n: u64, q: u64) -> Result<Self> {
        if q == 0 || q >= n {
            return Err(invalid(format!("need 0 < q < n, got n={n}, q={q}")));
        }
        if n.gcd(&q) != 1 {
            return Err(invalid(format!("n={n} and q={q} are not coprime")));
        }
        Ok(CyclicQuotientSingularity { n, q })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The singularity whose resolution is `c`, read off from `hj_eval(c) = n/q`.
    pub fn of_chain(c: &Chain) -> Result<Self> {
        let (n, q) = eval_u128(c)
            .and_then(|(n, q)| Some((u64::try_from(n).ok()?, u64::try_from(q).ok()?)))
            .ok_or_else(|| domain(format!("index of {c} exceeds 64 bits")))?;
        CyclicQuotientSingularity::new(n, q)
    }
}

impl fmt::Display for CyclicQuotientSingularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}(1,{})", self.n, self.q)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ChainKind {
    DuVal,
    T,
    NotT,
}

impl fmt::Display for ChainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChainKind::DuVal => "DuVal",
            ChainKind::T => "T",
            ChainKind::NotT => "NotT",
        })
    }
}

/// `1/(delta m^2)(1, delta m a - 1)` with `m >= 2`, `gcd(m, a) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TParameters {
    pub delta: u64,
    pub m: u64,
    pub a: u64,
    pub two_gorenstein: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ChainClassification {
    DuVal,
    T(TParameters),
    NotT,
}

impl ChainClassification {
    pub fn kind(&self) -> ChainKind {
        match self {
            ChainClassification::DuVal => ChainKind::DuVal,
            ChainClassification::T(_) => ChainKind::T,
            ChainClassification::NotT => ChainKind::NotT,
        }
    }

    pub fn t(&self) -> Option<&TParameters> {
        match self {
            ChainClassification::T(p) => Some(p),
            _ => None,
        }
    }

    pub fn delta(&self) -> Option<u64> {
        self.t().map(|p| p.delta)
    }

    pub fn two_gorenstein(&self) -> bool {
        self.t().is_some_and(|p| p.two_gorenstein)
    }

    /// Whether this is a T-singularity; Du Val counts when `du_val_counts_as_t` is set.
    pub fn is_t(&self, du_val_counts_as_t: bool) -> bool {
        match self {
            ChainClassification::DuVal => du_val_counts_as_t,
            ChainClassification::T(_) => true,
            ChainClassification::NotT => false,
        }
    }
}

impl fmt::Display for ChainClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainClassification::T(p) => {
                write!(f, "T δ={} m={} a={}", p.delta, p.m, p.a)?;
                if p.two_gorenstein {
                    f.write_str("  2-Gorenstein")?;
                }
                Ok(())
            }
            other => write!(f, "{}", other.kind()),
        }
    }
}

pub fn hj_expand(s: &CyclicQuotientSingularity) -> Chain {
    let (mut n, mut q) = (s.n, s.q);
    let mut entries = Vec::new();
    while q > 0 {
        let e = n.div_ceil(q);
        entries.push(e as u32);
        (n, q) = (q, e * q - n);
    }
    Chain(entries)
}

/// `(n, q)` with `hj_eval(c) = n/q`, or `None` on overflow.
fn eval_u128(c: &Chain) -> Option<(u128, u128)> {
    let mut it = c.0.iter().rev();
    let mut p = u128::from(*it.next()?);
    let mut q = 1u128;
    for &e in it {
        let np = u128::from(e).checked_mul(p)?.checked_sub(q)?;
        (p, q) = (np, p);
    }
    Some((p, q))
}

fn eval_big(c: &Chain) -> (BigInt, BigInt) {
    let mut it = c.0.iter().rev();
    let mut p = BigInt::from(*it.next().expect("chains are nonempty"));
    let mut q = BigInt::from(1);
    for &e in it {
        let np = BigInt::from(e) * &p - &q;
        q = std::mem::replace(&mut p, np);
    }
    (p, q)
}

/// Exact value of `e_1 - 1/(e_2 - 1/(... - 1/e_r))`, already in lowest terms.
pub fn hj_eval(c: &Chain) -> BigRational {
    // The backward recurrence (p, q) -> (e p - q, p) preserves gcd(p, q) = 1.
    let (p, q) = match eval_u128(c) {
        Some((p, q)) => (BigInt::from(p), BigInt::from(q)),
        None => eval_big(c),
    };
    BigRational::new_raw(p, q)
}

/// Classification by the T-form, using `gcd(n, q + 1) = delta m`.
pub fn classify_singularity(s: &CyclicQuotientSingularity) -> ChainClassification {
    let (n, q) = (s.n, s.q);
    if q == n - 1 {
        return ChainClassification::DuVal;
    }
    let g = n.gcd(&(q + 1));
    let g2 = u128::from(g) * u128::from(g);
    if g2 % u128::from(n) != 0 {
        return ChainClassification::NotT;
    }
    let delta = (g2 / u128::from(n)) as u64;
    let m = n / g;
    let a = (q + 1) / g;
    if m < 2 {
        return ChainClassification::NotT;
    }
    ChainClassification::T(TParameters {
        delta,
        m,
        a,
        two_gorenstein: m == 2,
    })
}

/// Independent classification by trying every `m >= 2` dividing both `n` and `q + 1`.
pub fn classify_singularity_exhaustive(s: &CyclicQuotientSingularity) -> ChainClassification {
    let (n, q) = (s.n, s.q);
    if q == n - 1 {
        return ChainClassification::DuVal;
    }
    let mut found = None;
    // Any m divides both n = delta m^2 and q + 1 = delta m a.
    let g = n.gcd(&(q + 1));
    let mut m = 2u64;
    while m <= g && m * m <= n {
        if n % (m * m) == 0 {
            let delta = n / (m * m);
            if (q + 1) % (delta * m) == 0 {
                let a = (q + 1) / (delta * m);
                if a.gcd(&m) == 1 {
                    debug_assert!(found.is_none(), "T-parameters are unique");
                    found = Some(TParameters {
                        delta,
                        m,
                        a,
                        two_gorenstein: m == 2,
                    });
                }
            }
        }
        m += 1;
    }
    found.map_or(ChainClassification::NotT, ChainClassification::T)
}

/// Outcome of undoing growth moves until a seed appears.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionOutcome {
    DuVal,
    T { delta: u64 },
    NotT,
}

pub fn classify_by_reduction(c: &Chain) -> ReductionOutcome {
    if c.0.iter().all(|&e| e == 2) {
        return ReductionOutcome::DuVal;
    }
    let mut v = c.0.clone();
    let (mut lo, mut hi) = (0usize, v.len());
    loop {
        let len = hi - lo;
        let (first, last) = (v[lo], v[hi - 1]);
        if len == 1 {
            return if first == 4 {
                ReductionOutcome::T { delta: 1 }
            } else {
                ReductionOutcome::NotT
            };
        }
        if first == 3 && last == 3 && v[lo + 1..hi - 1].iter().all(|&e| e == 2) {
            return ReductionOutcome::T { delta: len as u64 };
        }
        if first == 2 && last >= 3 {
            v[hi - 1] -= 1;
            lo += 1;
        } else if last == 2 && first >= 3 {
            v[lo] -= 1;
            hi -= 1;
        } else {
            return ReductionOutcome::NotT;
        }
    }
}

/// Classifies by reduction and by the singularity form; the two must agree.
pub fn classify_chain(c: &Chain) -> Result<ChainClassification> {
    let by_form = classify_singularity(&CyclicQuotientSingularity::of_chain(c)?);
    let by_reduction = classify_by_reduction(c);
    let agree = match (by_reduction, &by_form) {
        (ReductionOutcome::DuVal, ChainClassification::DuVal) => true,
        (ReductionOutcome::NotT, ChainClassification::NotT) => true,
        (ReductionOutcome::T { delta }, ChainClassification::T(p)) => {
            delta == p.delta && p.two_gorenstein == c.is_two_gorenstein_shape()
        }
        _ => false,
    };
    if !agree {
        return Err(invariant(format!(
            "classification routes disagree on {c}: reduction {by_reduction:?}, form {by_form:?}"
        )));
    }
    Ok(by_form)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "left" | "l" => Ok(Side::Left),
            "right" | "r" => Ok(Side::Right),
            _ => Err(invalid(format!("side must be left or right, got {s:?}"))),
        }
    }
}

/// Left: `[2, e_1, ..., e_r + 1]`. Right: `[e_1 + 1, ..., e_r, 2]`.
pub fn grow_chain(c: &Chain, side: Side) -> Chain {
    let mut v = Vec::with_capacity(c.len() + 1);
    match side {
        Side::Left => {
            v.push(2);
            v.extend_from_slice(&c.0);
            *v.last_mut().unwrap() += 1;
        }
        Side::Right => {
            v.extend_from_slice(&c.0);
            v[0] += 1;
            v.push(2);
        }
    }
    Chain(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerateOptions {
    pub max_length: usize,
    pub only_two_gorenstein: bool,
    /// Keep only the smaller of each chain and its reversal.
    pub dedupe_reversal: bool,
}

/// All T-chains up to `max_length`, sorted by (length, entries).
///
/// The count roughly doubles with each unit of length.
pub fn enumerate_t_chains(max_length: usize, only_two_gorenstein: bool) -> Result<Vec<Chain>> {
    enumerate_t_chains_with(EnumerateOptions {
        max_length,
        only_two_gorenstein,
        dedupe_reversal: false,
    })
}

pub fn enumerate_t_chains_with(opts: EnumerateOptions) -> Result<Vec<Chain>> {
    if opts.max_length < 1 {
        return Err(invalid("max_length must be at least 1"));
    }
    let mut seen: BTreeSet<Chain> = BTreeSet::new();
    seen.insert(Chain(vec![4]));
    for k in 0..opts.max_length.saturating_sub(1) {
        seen.insert(Chain::seed(k));
    }
    if !opts.only_two_gorenstein {
        let mut frontier: Vec<Chain> = seen.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for c in frontier.iter().filter(|c| c.len() < opts.max_length) {
                for side in [Side::Left, Side::Right] {
                    let g = grow_chain(c, side);
                    if seen.insert(g.clone()) {
                        next.push(g);
                    }
                }
            }
            frontier = next;
        }
    }
    let mut out: Vec<Chain> = seen.into_iter().collect();
    if opts.dedupe_reversal {
        out.retain(|c| *c <= c.reversed());
    }
    Ok(out)
}

/// `r - delta + 1`, the jump in `K^2` from contracting the chain.
pub fn k2_contribution(c: &Chain) -> Result<u64> {
    match classify_chain(c)? {
        ChainClassification::T(p) => Ok(c.len() as u64 + 1 - p.delta),
        other => Err(domain(format!(
            "{c} is {}, not a T-chain",
            other.kind()
        ))),
    }
}

/// Numerator and denominator of `hj_eval` as machine integers, when they fit.
pub fn hj_eval_u64(c: &Chain) -> Option<(u64, u64)> {
    let (p, q) = eval_u128(c)?;
    Some((p.to_u64()?, q.to_u64()?))
}
