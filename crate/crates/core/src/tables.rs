//! Row types for every reproducible table, in canonical `(n, d)` order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, invalid, Error, Result};
use crate::hj::{
    classify_chain, classify_singularity, enumerate_t_chains_with, hj_expand, k2_contribution,
    CyclicQuotientSingularity, EnumerateOptions,
};
use crate::lattice::discrepancies;
use crate::moduli::{
    admissible_ds, d_strata, intersection_form, stratum_dim_second, topology_tags, HorikawaKind, StratumDim,
    StratumRecord, Table1Row, Which,
};
use crate::poly::Affine;
use crate::systems::{analyze_system, table2_closed_form, BlowupConfig, LinearDim, NSpec, Regime};
use crate::tangent::tangent_report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TableId {
    T1,
    T2,
    T3,
    Strata,
    Hj,
    Chains,
    Topology,
}

impl FromStr for TableId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "t1" => TableId::T1,
            "t2" => TableId::T2,
            "t3" => TableId::T3,
            "strata" => TableId::Strata,
            "hj" => TableId::Hj,
            "chains" => TableId::Chains,
            "topology" => TableId::Topology,
            _ => return Err(invalid(format!("unknown table {s:?}"))),
        })
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableId::T1 => "T1",
            TableId::T2 => "T2",
            TableId::T3 => "T3",
            TableId::Strata => "strata",
            TableId::Hj => "hj",
            TableId::Chains => "chains",
            TableId::Topology => "topology",
        })
    }
}

/// How an empty stratum is printed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum EmptyStyle {
    #[default]
    Symbol,
    MinusOne,
}

impl EmptyStyle {
    pub fn render(&self) -> &'static str {
        match self {
            EmptyStyle::Symbol => "∅",
            EmptyStyle::MinusOne => "-1",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRequest {
    pub table: TableId,
    pub n_lo: i64,
    pub n_hi: i64,
    /// Restricts `d`; `None` means every admissible `d`.
    pub d_range: Option<(i64, i64)>,
    pub empty_style: EmptyStyle,
    /// Print numbers even when the whole range shares one row.
    pub eval: bool,
    pub dedupe_chains: bool,
    pub du_val_counts_as_t: bool,
    pub two_gorenstein_only: bool,
    pub max_len: usize,
    /// `None` means both kinds.
    pub kind: Option<HorikawaKind>,
}

impl TableRequest {
    pub fn new(table: TableId, n_lo: i64, n_hi: i64) -> Self {
        TableRequest {
            table,
            n_lo,
            n_hi,
            d_range: None,
            empty_style: EmptyStyle::Symbol,
            eval: false,
            dedupe_chains: false,
            du_val_counts_as_t: false,
            two_gorenstein_only: false,
            max_len: 6,
            kind: None,
        }
    }

    fn cells(&self, kind: HorikawaKind) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for n in self.n_lo..=self.n_hi {
            for d in admissible_ds(kind, n) {
                if self.d_range.is_none_or(|(lo, hi)| lo <= d && d <= hi) {
                    out.push((n, d));
                }
            }
        }
        out
    }
}

/// One value of a dimension table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridRow {
    pub n: i64,
    pub d: i64,
    pub regime: String,
    pub column: String,
    /// A number, a fixed-part label, or the empty marker.
    pub value: String,
    /// The closed form, when the whole request shares one row.
    pub formula: Option<String>,
    pub component: Option<bool>,
    pub anchor: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrataRow {
    pub n: i64,
    pub d: i64,
    pub family: String,
    pub dim: String,
    pub nu: i64,
    pub is_component: bool,
    pub eta: Option<i64>,
    pub dense: Option<bool>,
    pub h1: Option<i64>,
    pub h2: Option<i64>,
    pub anchor: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HjRow {
    pub n: u64,
    pub q: u64,
    pub chain: String,
    pub kind: String,
    pub is_t: bool,
    pub delta: Option<u64>,
    pub m: Option<u64>,
    pub a: Option<u64>,
    pub two_gorenstein: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainRow {
    pub chain: String,
    pub length: usize,
    pub singularity: String,
    pub delta: u64,
    pub two_gorenstein: bool,
    pub k2_contribution: u64,
    pub discrepancies: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopologyRow {
    pub kind: HorikawaKind,
    pub n: i64,
    pub component: String,
    pub rank: i64,
    pub signature: i64,
    pub b_plus: i64,
    pub b_minus: i64,
    pub parity: String,
    pub class: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "table", content = "rows")]
pub enum Table {
    T1(Vec<GridRow>),
    T2(Vec<GridRow>),
    T3(Vec<GridRow>),
    #[serde(rename = "strata")]
    Strata(Vec<StrataRow>),
    #[serde(rename = "hj")]
    Hj(Vec<HjRow>),
    #[serde(rename = "chains")]
    Chains(Vec<ChainRow>),
    #[serde(rename = "topology")]
    Topology(Vec<TopologyRow>),
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or(String::new(), T::to_string)
}

impl Table {
    pub fn len(&self) -> usize {
        match self {
            Table::T1(r) | Table::T2(r) | Table::T3(r) => r.len(),
            Table::Strata(r) => r.len(),
            Table::Hj(r) => r.len(),
            Table::Chains(r) => r.len(),
            Table::Topology(r) => r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn header(&self) -> Vec<&'static str> {
        match self {
            Table::T1(_) | Table::T2(_) | Table::T3(_) => {
                vec!["n", "d", "regime", "column", "value", "formula", "component", "anchor"]
            }
            Table::Strata(_) => vec![
                "n", "d", "family", "dim", "nu", "component", "eta", "dense", "h1", "h2", "anchor",
            ],
            Table::Hj(_) => vec!["n", "q", "chain", "kind", "is_t", "delta", "m", "a", "two_gorenstein"],
            Table::Chains(_) => vec![
                "chain",
                "length",
                "singularity",
                "delta",
                "two_gorenstein",
                "k2_contribution",
                "discrepancies",
            ],
            Table::Topology(_) => vec![
                "kind", "n", "component", "rank", "signature", "b_plus", "b_minus", "parity", "class",
            ],
        }
    }

    /// Every row as strings, in header order.
    pub fn records(&self) -> Vec<Vec<String>> {
        match self {
            Table::T1(rows) | Table::T2(rows) | Table::T3(rows) => rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.d.to_string(),
                        r.regime.clone(),
                        r.column.clone(),
                        r.value.clone(),
                        opt(&r.formula),
                        opt(&r.component),
                        r.anchor.clone(),
                    ]
                })
                .collect(),
            Table::Strata(rows) => rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.d.to_string(),
                        r.family.clone(),
                        r.dim.clone(),
                        r.nu.to_string(),
                        r.is_component.to_string(),
                        opt(&r.eta),
                        opt(&r.dense),
                        opt(&r.h1),
                        opt(&r.h2),
                        r.anchor.clone(),
                    ]
                })
                .collect(),
            Table::Hj(rows) => rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.q.to_string(),
                        r.chain.clone(),
                        r.kind.clone(),
                        r.is_t.to_string(),
                        opt(&r.delta),
                        opt(&r.m),
                        opt(&r.a),
                        r.two_gorenstein.to_string(),
                    ]
                })
                .collect(),
            Table::Chains(rows) => rows
                .iter()
                .map(|r| {
                    vec![
                        r.chain.clone(),
                        r.length.to_string(),
                        r.singularity.clone(),
                        r.delta.to_string(),
                        r.two_gorenstein.to_string(),
                        r.k2_contribution.to_string(),
                        r.discrepancies.clone(),
                    ]
                })
                .collect(),
            Table::Topology(rows) => rows
                .iter()
                .map(|r| {
                    vec![
                        r.kind.to_string(),
                        r.n.to_string(),
                        r.component.clone(),
                        r.rank.to_string(),
                        r.signature.to_string(),
                        r.b_plus.to_string(),
                        r.b_minus.to_string(),
                        r.parity.clone(),
                        r.class.clone(),
                    ]
                })
                .collect(),
        }
    }
}

pub fn build_table(req: &TableRequest) -> Result<Table> {
    if req.n_lo > req.n_hi {
        return Err(invalid(format!("empty n-range {}..{}", req.n_lo, req.n_hi)));
    }
    if let Some((lo, hi)) = req.d_range {
        if lo > hi {
            return Err(invalid(format!("empty d-range {lo}..{hi}")));
        }
    }
    match req.table {
        TableId::T1 => t1(req).map(Table::T1),
        TableId::T2 => t2(req).map(Table::T2),
        TableId::T3 => t3(req).map(Table::T3),
        TableId::Strata => strata(req).map(Table::Strata),
        TableId::Hj => hj(req).map(Table::Hj),
        TableId::Chains => chains(req).map(Table::Chains),
        TableId::Topology => topology(req).map(Table::Topology),
    }
}

fn require_14(req: &TableRequest) -> Result<()> {
    if req.n_lo < 14 {
        return Err(domain(format!("this table needs n >= 14, got {}", req.n_lo)));
    }
    Ok(())
}

fn render_dim(v: Option<i64>, style: EmptyStyle) -> String {
    v.map_or_else(|| style.render().to_string(), |x| x.to_string())
}

/// Formula text when every cell shares one row label.
fn shared<T: PartialEq + Copy>(req: &TableRequest, labels: &[T]) -> bool {
    !req.eval && !labels.is_empty() && labels.iter().all(|l| *l == labels[0])
}

fn affine_text(f: Option<Affine>) -> String {
    f.map_or_else(|| "∅".to_string(), |a| a.to_string())
}

fn t1(req: &TableRequest) -> Result<Vec<GridRow>> {
    require_14(req)?;
    let cells = req.cells(HorikawaKind::First);
    let rows: Vec<Table1Row> = cells.iter().map(|&(n, d)| Table1Row::of(n, d)).collect::<Result<_>>()?;
    let symbolic = shared(req, &rows);
    let mut out = Vec::new();
    for (&(n, d), row) in cells.iter().zip(&rows) {
        let (dp, dpp) = d_strata(n, d)?;
        for (w, rec) in [(Which::DPrime, dp), (Which::DDoublePrime, dpp)] {
            let (formula, comp) = row.entry(w);
            out.push(GridRow {
                n,
                d,
                regime: row.label().to_string(),
                column: format!("dim {w}"),
                value: render_dim(rec.dim.value(), req.empty_style),
                formula: symbolic.then(|| affine_text(formula)),
                component: Some(comp),
                anchor: format!("T1 row {}", row.label()),
            });
        }
    }
    Ok(out)
}

fn t2(req: &TableRequest) -> Result<Vec<GridRow>> {
    let cells = req.cells(HorikawaKind::First);
    let regimes: Vec<Regime> = cells.iter().map(|&(n, d)| Regime::of(n, d)).collect::<Result<_>>()?;
    let symbolic = shared(req, &regimes);
    let mut out = Vec::new();
    for (&(n, d), regime) in cells.iter().zip(&regimes) {
        for cfg in BlowupConfig::all(d as u32) {
            let a = analyze_system(&cfg, NSpec::Concrete(n))?;
            let value = match a.dim {
                LinearDim::Value(p) => p.as_integer().map_or_else(|| p.to_string(), |v| v.to_string()),
                LinearDim::Undefined => "x".to_string(),
            };
            let formula = table2_closed_form(*regime, cfg.i(), cfg.j());
            out.push(GridRow {
                n,
                d,
                regime: regime.label().to_string(),
                column: format!("dim|L_{}{}|", cfg.i(), cfg.j()),
                value,
                formula: symbolic.then(|| formula.map_or_else(|| "x".to_string(), |f| f.to_string())),
                component: None,
                anchor: format!("T2 row {}", regime.label()),
            });
        }
    }
    Ok(out)
}

fn t3(req: &TableRequest) -> Result<Vec<GridRow>> {
    let cells = req.cells(HorikawaKind::First);
    let mut out = Vec::new();
    for &(n, d) in &cells {
        for cfg in BlowupConfig::all(d as u32) {
            let a = analyze_system(&cfg, NSpec::Concrete(n))?;
            out.push(GridRow {
                n,
                d,
                regime: a.regime.label().to_string(),
                column: format!("Z_{}{}", cfg.i(), cfg.j()),
                value: a.fixed.label().to_string(),
                formula: None,
                component: None,
                anchor: format!("T3 row {}", a.regime.label()),
            });
        }
    }
    Ok(out)
}

fn strata_row(rec: &StratumRecord, style: EmptyStyle, anchor: String) -> StrataRow {
    StrataRow {
        n: rec.n,
        d: rec.d,
        family: rec.family.label().to_string(),
        dim: render_dim(rec.dim.value(), style),
        nu: rec.nu,
        is_component: rec.is_component,
        eta: rec.eta,
        dense: rec.dense,
        h1: None,
        h2: None,
        anchor,
    }
}

fn strata(req: &TableRequest) -> Result<Vec<StrataRow>> {
    require_14(req)?;
    let mut out = Vec::new();
    for n in req.n_lo..=req.n_hi {
        let keep = |d: i64| req.d_range.is_none_or(|(lo, hi)| lo <= d && d <= hi);
        let mut ds: Vec<i64> = admissible_ds(HorikawaKind::First, n);
        ds.extend(admissible_ds(HorikawaKind::Second, n));
        ds.sort_unstable();
        ds.dedup();
        for d in ds.into_iter().filter(|&d| keep(d)) {
            if let Ok(rec) = stratum_dim_second(n, d) {
                out.push(strata_row(&rec, req.empty_style, "second-kind type (d) stratum".to_string()));
            }
            if let Ok((dp, dpp)) = d_strata(n, d) {
                let row = Table1Row::of(n, d)?;
                for (w, rec) in [(Which::DPrime, dp), (Which::DDoublePrime, dpp)] {
                    let mut r = strata_row(&rec, req.empty_style, format!("T1 row {}", row.label()));
                    if rec.dim != StratumDim::Empty {
                        let t = tangent_report(n, d, w)?;
                        r.h1 = Some(t.h1);
                        r.h2 = Some(t.h2);
                    }
                    out.push(r);
                }
            }
        }
    }
    Ok(out)
}

fn hj(req: &TableRequest) -> Result<Vec<HjRow>> {
    if req.n_lo < 2 {
        return Err(domain(format!("singularities need n >= 2, got {}", req.n_lo)));
    }
    let mut out = Vec::new();
    for n in req.n_lo as u64..=req.n_hi as u64 {
        for q in 1..n {
            let Ok(s) = CyclicQuotientSingularity::new(n, q) else { continue };
            let c = classify_singularity(&s);
            let p = c.t();
            out.push(HjRow {
                n,
                q,
                chain: hj_expand(&s).to_string(),
                kind: c.kind().to_string(),
                is_t: c.is_t(req.du_val_counts_as_t),
                delta: p.map(|p| p.delta),
                m: p.map(|p| p.m),
                a: p.map(|p| p.a),
                two_gorenstein: c.two_gorenstein(),
            });
        }
    }
    Ok(out)
}

fn chains(req: &TableRequest) -> Result<Vec<ChainRow>> {
    let list = enumerate_t_chains_with(EnumerateOptions {
        max_length: req.max_len,
        only_two_gorenstein: req.two_gorenstein_only,
        dedupe_reversal: req.dedupe_chains,
    })?;
    let mut out = Vec::new();
    for c in list {
        let cls = classify_chain(&c)?;
        let s = CyclicQuotientSingularity::of_chain(&c)?;
        let a = discrepancies(&c)?;
        out.push(ChainRow {
            chain: c.to_string(),
            length: c.len(),
            singularity: s.to_string(),
            delta: cls.delta().unwrap_or(0),
            two_gorenstein: cls.two_gorenstein(),
            k2_contribution: k2_contribution(&c)?,
            discrepancies: a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "),
        });
    }
    Ok(out)
}

fn topology(req: &TableRequest) -> Result<Vec<TopologyRow>> {
    let kinds = match req.kind {
        Some(k) => vec![k],
        None => vec![HorikawaKind::First, HorikawaKind::Second],
    };
    let mut out = Vec::new();
    for n in req.n_lo.max(3)..=req.n_hi {
        for &kind in &kinds {
            for tag in topology_tags(kind, n) {
                let f = intersection_form(kind, n, tag)?;
                out.push(TopologyRow {
                    kind,
                    n,
                    component: f.component.clone(),
                    rank: f.rank,
                    signature: f.signature,
                    b_plus: f.b_plus,
                    b_minus: f.b_minus,
                    parity: match f.parity {
                        crate::moduli::Parity::Even => "even".to_string(),
                        crate::moduli::Parity::Odd => "odd".to_string(),
                    },
                    class: f.class.to_string(),
                });
            }
        }
    }
    Ok(out)
}
