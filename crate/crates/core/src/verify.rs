//! Cross-path checks over whole ranges, with a machine-readable report.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::hj::{
    classify_chain, classify_singularity_exhaustive, enumerate_t_chains, grow_chain, hj_eval, hj_eval_u64,
    hj_expand, k2_contribution, Chain, ChainClassification, CyclicQuotientSingularity, Side,
};
use crate::lattice::{chain_gram, discrepancies, is_negative_definite, PicardLattice};
use crate::matrix::determinant;
use crate::moduli::{
    admissible_ds, closure_contains, d_strata, d_strata_by_lattice, d_strata_by_table, dn_components,
    intersection_form, moduli_components, nu_count, stratum_dim_second, topology_tags, ComponentTag, HorikawaKind,
    Membership, Parity, StratumDim, Which,
};
use crate::systems::{
    analyze_system_on, fixed_part_by_peeling, l_class, table2_closed_form, table3_entry, BlowupConfig, FixedPart,
    LinearDim, NSpec, Regime,
};
use crate::tangent::{h1_assembly, h2_tx};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    All,
    Hj,
    Lattice,
    Systems,
    Moduli,
    Tangent,
}

impl Scope {
    pub fn covers(&self, module: Scope) -> bool {
        *self == Scope::All || *self == module
    }

    pub fn label(&self) -> &'static str {
        match self {
            Scope::All => "all",
            Scope::Hj => "hj-calculus",
            Scope::Lattice => "picard-lattice",
            Scope::Systems => "hirzebruch-systems",
            Scope::Moduli => "horikawa-moduli",
            Scope::Tangent => "tangent-cohomology",
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Scope {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Scope::All,
            "hj" | "hj-calculus" => Scope::Hj,
            "lattice" | "picard-lattice" => Scope::Lattice,
            "systems" | "hirzebruch-systems" => Scope::Systems,
            "moduli" | "horikawa-moduli" => Scope::Moduli,
            "tangent" | "tangent-cohomology" => Scope::Tangent,
            _ => return Err(invalid(format!("unknown scope {s:?}"))),
        })
    }
}

/// One Gram entry shifted by `delta` (and its mirror) on every `Y_ij` lattice; fault injection only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tamper {
    pub i: usize,
    pub j: usize,
    pub delta: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub scope: Scope,
    pub n_max: i64,
    /// Largest `n` in the continued-fraction round trip; defaults to `n_max`.
    pub hj_n_max: Option<u64>,
    pub chain_max_len: usize,
    pub chain_max_entry: u32,
    pub t_chain_max_len: usize,
    pub two_gorenstein_max_len: usize,
    pub tamper: Option<Tamper>,
}

impl VerifyOptions {
    pub fn new(scope: Scope, n_max: i64) -> Self {
        VerifyOptions {
            scope,
            n_max,
            hj_n_max: None,
            chain_max_len: 9,
            chain_max_entry: 6,
            t_chain_max_len: 12,
            two_gorenstein_max_len: 30,
            tamper: None,
        }
    }

    fn y_lattice(&self, cfg: &BlowupConfig) -> PicardLattice {
        let y = cfg.lattice();
        match self.tamper {
            Some(t) => y.perturbed(t.i, t.j, t.delta).unwrap_or(y),
            None => y,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub check: String,
    pub n: Option<i64>,
    pub d: Option<i64>,
    pub which: Option<String>,
    pub cell: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub module: Scope,
    pub status: Status,
    pub passed: u64,
    pub failed: u64,
    pub first_failure: Option<Failure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub scope: Scope,
    pub n_max: i64,
    pub checks: Vec<CheckResult>,
    pub all_passed: bool,
    pub first_failure: Option<Failure>,
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Recorder {
    name: &'static str,
    passed: u64,
    failed: u64,
    first: Option<Failure>,
}

#[derive(Default)]
struct Cell {
    n: Option<i64>,
    d: Option<i64>,
    which: Option<String>,
    cell: String,
}

impl Cell {
    fn nd(n: i64, d: i64) -> Self {
        Cell {
            n: Some(n),
            d: Some(d),
            ..Default::default()
        }
    }

    fn which(mut self, w: impl fmt::Display) -> Self {
        self.which = Some(w.to_string());
        self
    }

    fn named(mut self, s: impl Into<String>) -> Self {
        self.cell = s.into();
        self
    }

    fn plain(s: impl Into<String>) -> Self {
        Cell::default().named(s)
    }
}

impl Recorder {
    fn new(name: &'static str) -> Self {
        Recorder {
            name,
            passed: 0,
            failed: 0,
            first: None,
        }
    }

    fn eq<T: PartialEq + fmt::Debug>(&mut self, cell: impl FnOnce() -> Cell, expected: T, got: T) {
        if expected == got {
            self.passed += 1;
        } else {
            self.fail(cell(), format!("{expected:?}"), format!("{got:?}"));
        }
    }

    fn holds(&mut self, cell: impl FnOnce() -> Cell, ok: bool, expected: &str) {
        if ok {
            self.passed += 1;
        } else {
            self.fail(cell(), expected.to_string(), "violated".to_string());
        }
    }

    fn fail(&mut self, cell: Cell, expected: String, got: String) {
        self.failed += 1;
        if self.first.is_none() {
            self.first = Some(Failure {
                check: self.name.to_string(),
                n: cell.n,
                d: cell.d,
                which: cell.which,
                cell: cell.cell,
                expected,
                got,
            });
        }
    }

    fn error(&mut self, cell: Cell, expected: impl Into<String>, e: &Error) {
        self.fail(cell, expected.into(), e.to_string());
    }

    fn finish(self, module: Scope) -> CheckResult {
        CheckResult {
            name: self.name.to_string(),
            module,
            status: if self.failed == 0 { Status::Pass } else { Status::Fail },
            passed: self.passed,
            failed: self.failed,
            first_failure: self.first,
        }
    }
}

type CheckFn = fn(&VerifyOptions) -> Recorder;

/// Every check, in report order, with the module it belongs to.
pub const CHECKS: &[(&str, Scope)] = &[
    ("hj_round_trip", Scope::Hj),
    ("chain_oracle", Scope::Hj),
    ("growth_closure", Scope::Hj),
    ("t_chain_gram", Scope::Lattice),
    ("discrepancy_constants", Scope::Lattice),
    ("lattice_noether", Scope::Lattice),
    ("table2_two_path", Scope::Systems),
    ("table3_certificates", Scope::Systems),
    ("table1_two_path", Scope::Moduli),
    ("nu_consistency", Scope::Moduli),
    ("second_kind_strata", Scope::Moduli),
    ("dn_components", Scope::Moduli),
    ("topology", Scope::Moduli),
    ("tangent_assembly", Scope::Tangent),
];

fn check_fn(name: &str) -> CheckFn {
    match name {
        "hj_round_trip" => hj_round_trip,
        "chain_oracle" => chain_oracle,
        "growth_closure" => growth_closure,
        "t_chain_gram" => t_chain_gram,
        "discrepancy_constants" => discrepancy_constants,
        "lattice_noether" => lattice_noether,
        "table2_two_path" => table2_two_path,
        "table3_certificates" => table3_certificates,
        "table1_two_path" => table1_two_path,
        "nu_consistency" => nu_consistency,
        "second_kind_strata" => second_kind_strata,
        "dn_components" => dn_components_check,
        "topology" => topology,
        "tangent_assembly" => tangent_assembly,
        _ => unreachable!("unknown check {name}"),
    }
}

/// Runs one named check regardless of scope.
pub fn run_check(name: &str, opts: &VerifyOptions) -> Result<CheckResult> {
    let (_, module) = CHECKS
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| invalid(format!("unknown check {name:?}")))?;
    Ok(check_fn(name)(opts).finish(*module))
}

pub fn verify(opts: &VerifyOptions) -> Result<VerifyReport> {
    if opts.n_max < 14 {
        return Err(crate::error::domain(format!("n-max must be at least 14, got {}", opts.n_max)));
    }
    let mut checks = Vec::new();
    for &(name, module) in CHECKS {
        if opts.scope.covers(module) {
            checks.push(check_fn(name)(opts).finish(module));
        } else {
            checks.push(CheckResult {
                name: name.to_string(),
                module,
                status: Status::Skipped,
                passed: 0,
                failed: 0,
                first_failure: None,
            });
        }
    }
    let first_failure = checks.iter().find_map(|c| c.first_failure.clone());
    Ok(VerifyReport {
        scope: opts.scope,
        n_max: opts.n_max,
        all_passed: checks.iter().all(|c| c.status != Status::Fail),
        first_failure,
        checks,
    })
}

/// `sum_{n=2}^{N} phi(n)` by a sieve, the number of pairs `0 < q < n <= N` with `gcd(n, q) = 1`.
pub fn coprime_pair_count(n_max: u64) -> u64 {
    let n = n_max as usize;
    let mut phi: Vec<u64> = (0..=n as u64).collect();
    for p in 2..=n {
        if phi[p] == p as u64 {
            for k in (p..=n).step_by(p) {
                phi[k] -= phi[k] / p as u64;
            }
        }
    }
    phi.iter().skip(2).sum()
}

fn hj_round_trip(opts: &VerifyOptions) -> Recorder {
    let mut r = Recorder::new("hj_round_trip");
    let top = opts.hj_n_max.unwrap_or(opts.n_max.max(2) as u64);
    for n in 2..=top {
        for q in 1..n {
            if n.gcd(&q) != 1 {
                continue;
            }
            let s = CyclicQuotientSingularity::new(n, q).expect("coprime pair");
            let c = hj_expand(&s);
            let got = match hj_eval_u64(&c) {
                Some(v) => v,
                None => {
                    let v = hj_eval(&c);
                    (u64::try_from(v.numer()).unwrap_or(0), u64::try_from(v.denom()).unwrap_or(0))
                }
            };
            r.eq(|| Cell::plain(format!("{n}/{q}")).named(format!("1/{n}(1,{q})")), (n, q), got);
        }
    }
    let (pairs, expected) = (r.passed + r.failed, coprime_pair_count(top));
    if pairs != expected {
        r.fail(Cell::plain("pair count"), expected.to_string(), pairs.to_string());
    }
    r
}

/// Calls `f` on every chain of length `1..=max_len` with entries in `2..=max_entry`.
pub fn for_each_chain(max_len: usize, max_entry: u32, mut f: impl FnMut(&[u32])) {
    for len in 1..=max_len {
        let mut v = vec![2u32; len];
        'next: loop {
            f(&v);
            for k in (0..len).rev() {
                if v[k] < max_entry {
                    v[k] += 1;
                    continue 'next;
                }
                v[k] = 2;
            }
            break;
        }
    }
}

fn kind_and_delta(c: &ChainClassification) -> (String, Option<u64>) {
    (c.kind().to_string(), c.delta())
}

fn chain_oracle(opts: &VerifyOptions) -> Recorder {
    let mut r = Recorder::new("chain_oracle");
    for_each_chain(opts.chain_max_len, opts.chain_max_entry, |v| {
        let c = Chain::new(v.to_vec()).expect("entries >= 2");
        let cell = || Cell::plain(c.to_string());
        let by_routes = match classify_chain(&c) {
            Ok(x) => x,
            Err(e) => return r.error(cell(), "reduction and singularity routes agree", &e),
        };
        let s = match CyclicQuotientSingularity::of_chain(&c) {
            Ok(s) => s,
            Err(e) => return r.error(cell(), "chain value is a valid pair", &e),
        };
        let brute = classify_singularity_exhaustive(&s);
        r.eq(cell, kind_and_delta(&brute), kind_and_delta(&by_routes));
        let det = determinant(&chain_gram(&c));
        r.eq(cell, BigInt::from(s.n()), det.abs());
    });
    r
}

fn growth_closure(opts: &VerifyOptions) -> Recorder {
    let mut r = Recorder::new("growth_closure");
    let chains = enumerate_t_chains(opts.t_chain_max_len, false).expect("length >= 1");
    for c in &chains {
        let before = classify_chain(c).ok().and_then(|x| x.delta());
        let k2 = k2_contribution(c).ok();
        for side in [Side::Left, Side::Right] {
            let g = grow_chain(c, side);
            let cell = || Cell::plain(format!("{c} {side:?}"));
            let after = classify_chain(&g).ok().and_then(|x| x.delta());
            r.eq(cell, before, after);
            r.eq(cell, k2.map(|k| k + 1), k2_contribution(&g).ok());
        }
    }
    // 2^r - 1 chains of each length r.
    let expected: usize = (1..=opts.t_chain_max_len).map(|r| (1usize << r) - 1).sum();
    r.eq(|| Cell::plain("T-chain count"), expected, chains.len());
    r
}

fn t_chain_gram(opts: &VerifyOptions) -> Recorder {
    let mut r = Recorder::new("t_chain_gram");
    let half = BigRational::new((-1).into(), 2.into());
    for c in enumerate_t_chains(opts.t_chain_max_len, false).expect("length >= 1") {
        let cell = || Cell::plain(c.to_string());
        let g = chain_gram(&c);
        r.holds(cell, is_negative_definite(&g), "negative definite");
        r.eq(cell, hj_eval(&c).numer().clone(), determinant(&g).abs());
        match discrepancies(&c) {
            Ok(a) => {
                let in_range = a.iter().all(|x| x > &-BigRational::one() && x <= &BigRational::zero());
                r.holds(cell, in_range, "discrepancies in (-1, 0]");
                let constant = a.iter().all(|x| *x == half);
                r.eq(cell, c.is_two_gorenstein_shape(), constant);
            }
            Err(e) => r.error(cell(), "discrepancies solvable", &e),
        }
    }
    r
}

fn discrepancy_constants(opts: &VerifyOptions) -> Recorder {
    let mut r = Recorder::new("discrepancy_constants");
    let half = BigRational::new((-1).into(), 2.into());
    for c in enumerate_t_chains(opts.two_gorenstein_max_len, true).expect("length >= 1") {
        let cell = || Cell::plain(c.to_string());
        match discrepancies(&c) {
            Ok(a) => r.eq(cell, vec![half.clone(); c.len()], a),
            Err(e) => r.error(cell(), "discrepancies solvable", &e),
        }
        r.eq(cell, Some(1), k2_contribution(&c).ok());
    }
    r
}

fn lattice_noether(opts: &VerifyOptions) -> Recorder {
    let mut r = Recorder::new("lattice_noether");
    for d in 0..=(opts.n_max / 2 + 2) as u32 {
        let mut y = PicardLattice::hirzebruch(d);
        for k in 0..=6 {
            if k > 0 {
                y = y.blow_up(&format!("X{k}")).expect("fresh label");
            }
            let cell = || Cell::plain(format!("F_{d} blown up {k} times"));
            r.eq(cell, 10, y.k_squared() + y.rank() as i64);
            r.eq(cell, (1, y.rank() - 1), y.signature());
        }
    }
    r
}

fn table2_two_path(opts: &VerifyOptions) -> Recorder {
    let mut r = Recorder::new("table2_two_path");
    for n in 14..=opts.n_max {
        for d in admissible_ds(HorikawaKind::First, n) {
            let mut dims = [[None; 2]; 2];
            for cfg in BlowupConfig::all(d as u32) {
                let cell = || Cell::nd(n, d).named(format!("|L_{}{}|", cfg.i(), cfg.j()));
                let a = match analyze_system_on(&opts.y_lattice(&cfg), &cfg, NSpec::Concrete(n)) {
                    Ok(a) => a,
                    Err(e) => {
                        r.error(cell(), "reduced system with M.K < 0 < M^2", &e);
                        continue;
                    }
                };
                let expected = table2_closed_form(a.regime, cfg.i(), cfg.j()).map(|f| f.eval(n, d));
                let got = match a.dim {
                    LinearDim::Value(p) => p.as_integer(),
                    LinearDim::Undefined => None,
                };
                r.eq(cell, expected, got);
                dims[cfg.i() as usize][cfg.j() as usize] = got;
                if a.regime == Regime::Eq2dMinus2 {
                    // The n = 2d-2 row agrees with the generic middle row at its endpoint.
                    if let (Some(own), Some(generic)) = (
                        table2_closed_form(Regime::Eq2dMinus2, cfg.i(), cfg.j()),
                        crate::systems::table2_entry(Regime::Between, cfg.i()),
                    ) {
                        r.eq(cell, generic.eval(n, d), own.eval(n, d));
                    }
                }
            }
            for (i, row) in dims.iter().enumerate() {
                if let [Some(a), Some(b)] = row {
                    r.eq(|| Cell::nd(n, d).named(format!("|L_{i}0| = |L_{i}1|")), a, b);
                }
            }
        }
    }
    r
}

fn table3_certificates(opts: &VerifyOptions) -> Recorder {
    let mut r = Recorder::new("table3_certificates");
    for n in 14..=opts.n_max {
        for d in admissible_ds(HorikawaKind::First, n) {
            let regime = match Regime::of(n, d) {
                Ok(x) => x,
                Err(e) => {
                    r.error(Cell::nd(n, d), "a table row", &e);
                    continue;
                }
            };
            for cfg in BlowupConfig::all(d as u32) {
                let cell = || Cell::nd(n, d).named(format!("Z_{}{}", cfg.i(), cfg.j()));
                let y = opts.y_lattice(&cfg);
                let fixed = table3_entry(regime, cfg.i(), cfg.j());
                match fixed_part_by_peeling(&y, &cfg, n) {
                    Ok(p) => r.eq(cell, fixed, p),
                    Err(e) => r.error(cell(), fixed.label(), &e),
                }
                if fixed == FixedPart::NonReduced {
                    continue;
                }
                let l = l_class(&cfg, NSpec::Concrete(n)).expect("admissible");
                let dp = cfg.d_prime();
                let Ok(dl) = y.intersect_int(&dp, &l) else { continue };
                r.eq(cell, fixed.contains_d_prime(), dl < 0);
                let z_d = if fixed.contains_d_prime() { dp.clone() } else { y.zero() };
                let rest = &l - &z_d;
                if fixed.contains_d_prime() {
                    let v = y.intersect_int(&dp, &rest).unwrap_or(i64::MIN);
                    r.holds(cell, v >= 0, "D'.(L - D') >= 0");
                }
                if let Some(e) = cfg.e1_minus_e2() {
                    let v = y.intersect_int(&e, &rest).unwrap_or(i64::MIN);
                    r.eq(cell, fixed == FixedPart::DPrimePlusE1MinusE2, v == -1);
                }
            }
        }
    }
    r
}

fn table1_two_path(opts: &VerifyOptions) -> Recorder {
    let mut r = Recorder::new("table1_two_path");
    let lattice_of = |cfg: &BlowupConfig| opts.y_lattice(cfg);
    for n in 14..=opts.n_max {
        for d in admissible_ds(HorikawaKind::First, n) {
            let table = match d_strata_by_table(n, d) {
                Ok(t) => t,
                Err(e) => {
                    r.error(Cell::nd(n, d), "closed form", &e);
                    continue;
                }
            };
            match d_strata_by_lattice(n, d, &lattice_of) {
                Ok(lat) => {
                    r.eq(|| Cell::nd(n, d).which(Which::DPrime), table.0, lat.0);
                    r.eq(|| Cell::nd(n, d).which(Which::DDoublePrime), table.1, lat.1);
                }
                Err(e) => r.error(Cell::nd(n, d), format!("{table:?}"), &e),
            }
        }
    }
    r
}

fn nu_consistency(opts: &VerifyOptions) -> Recorder {
    let mut r = Recorder::new("nu_consistency");
    for n in 14..=opts.n_max {
        for d in admissible_ds(HorikawaKind::First, n) {
            if !(2 * d - 2 <= n && n <= 3 * d - 5) {
                continue;
            }
            let Ok((dp, dpp)) = d_strata(n, d) else {
                r.fail(Cell::nd(n, d), "both strata".into(), "error".into());
                continue;
            };
            for (w, rec) in [(Which::DPrime, dp), (Which::DDoublePrime, dpp)] {
                let nu = nu_count(n, d, w).unwrap_or(-1);
                r.eq(|| Cell::nd(n, d).which(w), StratumDim::Value(7 * n + 18 - nu), rec.dim);
            }
        }
    }
    r
}

fn second_kind_strata(opts: &VerifyOptions) -> Recorder {
    let mut r = Recorder::new("second_kind_strata");
    for n in 7..=opts.n_max {
        for d in admissible_ds(HorikawaKind::Second, n) {
            let cell = || Cell::nd(n, d).which("Mnd-Hor2");
            match stratum_dim_second(n, d) {
                Ok(rec) => {
                    let eta = rec.eta.unwrap_or(-1);
                    r.holds(cell, eta == 0 || eta <= d - 2, "eta <= d - 2");
                    r.holds(cell, n + 4 != 3 * d, "n + 4 != 3d");
                    let dim = rec.dim.value().unwrap_or(i64::MAX);
                    r.holds(cell, dim <= 7 * n + 19, "dim <= 7n+19");
                    r.eq(cell, dim == 7 * n + 19, rec.is_component);
                }
                Err(e) => r.error(cell(), "a stratum record", &e),
            }
        }
        for (kind, min, modulus, residue) in [(HorikawaKind::First, 6, 4, 1), (HorikawaKind::Second, 7, 4, 0)] {
            if n < min {
                continue;
            }
            let cell = || Cell::plain(format!("{kind} kind components at n={n}"));
            let split = n % modulus == residue && n >= 8;
            match moduli_components(kind, n) {
                Ok(c) => r.eq(cell, if split { 2 } else { 1 }, c.len()),
                Err(e) => r.error(cell(), "component list", &e),
            }
        }
    }
    r
}

fn dn_components_check(opts: &VerifyOptions) -> Recorder {
    let mut r = Recorder::new("dn_components");
    for n in 14..=opts.n_max {
        let comps = match dn_components(n) {
            Ok(c) => c,
            Err(e) => {
                r.error(Cell::plain(format!("D_{n}")), "component list", &e);
                continue;
            }
        };
        let single = matches!(n % 4, 2 | 3);
        r.eq(|| Cell::plain(format!("D_{n} component count")), single, comps.len() == 1);
        let top = 7 * n + 18;
        let second = moduli_components(HorikawaKind::Second, n).unwrap_or_default();
        for c in &comps {
            let cell = || Cell::nd(n, c.d).which(c.which).named("listed component");
            r.eq(cell, top, c.dim);
            let tag = match c.membership {
                Membership::Whole => ComponentTag::Whole,
                Membership::TwoA => ComponentTag::A,
                Membership::TwoB => ComponentTag::B,
            };
            if c.membership != Membership::Whole {
                let holds = second.iter().any(|m| m.tag == tag && m.types.contains(&c.d));
                r.holds(cell, holds, "type lies in the named component");
                r.eq(cell, Some(true), closure_contains(n, c.d, c.which));
            }
        }
        for d in admissible_ds(HorikawaKind::First, n) {
            let Ok((dp, dpp)) = d_strata(n, d) else {
                r.fail(Cell::nd(n, d), "both strata".into(), "error".into());
                continue;
            };
            for (w, rec) in [(Which::DPrime, dp), (Which::DDoublePrime, dpp)] {
                let listed = comps.iter().any(|c| c.d == d && c.which == w);
                let at_top = rec.dim == StratumDim::Value(top);
                r.eq(|| Cell::nd(n, d).which(w).named("top-dimensional"), listed, at_top);
            }
        }
    }
    r
}

fn topology(opts: &VerifyOptions) -> Recorder {
    let mut r = Recorder::new("topology");
    for n in 3..=opts.n_max {
        for kind in [HorikawaKind::First, HorikawaKind::Second] {
            for tag in topology_tags(kind, n) {
                let cell = || Cell::plain(format!("{kind} kind {} at n={n}", tag.label(kind)));
                let f = match intersection_form(kind, n, tag) {
                    Ok(f) => f,
                    Err(e) => {
                        r.error(cell(), "an intersection form", &e);
                        continue;
                    }
                };
                let even = kind == HorikawaKind::First && tag == ComponentTag::B && n % 8 == 5;
                r.eq(cell, if even { Parity::Even } else { Parity::Odd }, f.parity);
                if f.parity == Parity::Even {
                    r.eq(cell, 0, f.signature % 16);
                }
            }
        }
    }
    r
}

fn tangent_assembly(opts: &VerifyOptions) -> Recorder {
    let mut r = Recorder::new("tangent_assembly");
    for n in 14..=opts.n_max {
        for d in admissible_ds(HorikawaKind::First, n) {
            r.eq(|| Cell::nd(n, d).named("h2"), Ok(n - 3), h2_tx(n, d));
            for w in [Which::DPrime, Which::DDoublePrime] {
                if w == Which::DDoublePrime && (d == 0 || n == 2 * d - 3) {
                    continue;
                }
                let cell = || Cell::nd(n, d).which(w).named("h1");
                let nu = match nu_count(n, d, w) {
                    Ok(v) => v,
                    Err(e) => {
                        r.error(cell(), "nu", &e);
                        continue;
                    }
                };
                match h1_assembly(n, d, w) {
                    Ok(a) => {
                        r.eq(cell, 2 * nu - 2, a.minus_chi_ty);
                        r.eq(cell, 7 * n + 18 - nu, a.h1);
                    }
                    Err(e) => r.error(cell(), format!("{}", 7 * n + 18 - nu), &e),
                }
            }
        }
    }
    r
}
