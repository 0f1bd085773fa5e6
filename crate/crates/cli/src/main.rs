use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use horikawa::hj::{
    classify_chain, classify_singularity, enumerate_t_chains_with, grow_chain, hj_eval, hj_expand,
    k2_contribution, EnumerateOptions,
};
use horikawa::lattice::discrepancies;
use horikawa::moduli::{
    d_strata, intersection_form, moduli_components, stratum_dim_second, topology_tags, ComponentTag,
    HorikawaKind, Which,
};
use horikawa::tables::{build_table, EmptyStyle, Table, TableId, TableRequest};
use horikawa::tangent::tangent_report;
use horikawa::verify::{verify, Scope, Status, Tamper, VerifyOptions};
use horikawa::{Chain, CyclicQuotientSingularity, Error, Side};

#[derive(Parser)]
#[command(name = "horikawa", version, about = "T-chains, Hirzebruch lattices and Horikawa moduli strata")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hirzebruch-Jung continued fractions and T-chains.
    #[command(subcommand)]
    Hj(HjCommand),
    /// Render one of the tables over a range of n.
    Table(TableArgs),
    /// Run the cross-path checks.
    Verify(VerifyArgs),
    /// Stratum records at one (n, d), as JSON.
    Strata { n: i64, d: i64 },
    /// Tangent cohomology at a general point of D'_{n,d} or D''_{n,d}, as JSON.
    Tangent {
        n: i64,
        d: i64,
        #[arg(value_parser = parse_which)]
        which: Which,
    },
    /// Irreducible components of the moduli space, as JSON.
    Components {
        #[arg(value_parser = parse_kind)]
        kind: HorikawaKind,
        n: i64,
    },
    /// Intersection forms of the minimal models, as JSON.
    Topology {
        #[arg(value_parser = parse_kind)]
        kind: HorikawaKind,
        n: i64,
        /// Component tag such as `a`, `b` or `1b`; every component when omitted.
        tag: Option<String>,
    },
}

#[derive(Subcommand)]
enum HjCommand {
    /// Chain of 1/n(1,q) with its classification.
    Expand { n: u64, q: u64 },
    /// Value of [e1, ..., er] as a reduced fraction.
    Eval {
        #[arg(required = true)]
        entries: Vec<u32>,
    },
    /// Classify a chain `e1 e2 ...` or a singularity `n/q`.
    Classify {
        #[arg(required = true)]
        input: Vec<String>,
    },
    /// One growth step on a T-chain.
    Grow {
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(required = true)]
        entries: Vec<u32>,
    },
    /// Every T-chain up to a length.
    Enum {
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        two_gorenstein: bool,
        /// Keep one chain of each reversal pair.
        #[arg(long)]
        dedupe: bool,
    },
    /// Discrepancies of the exceptional curves.
    Discrepancies {
        #[arg(required = true)]
        entries: Vec<u32>,
    },
    /// Contribution of a T-singularity to K^2 of a smoothing.
    K2 {
        #[arg(required = true)]
        entries: Vec<u32>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct TableArgs {
    /// T1, T2, T3, strata, hj, chains or topology.
    #[arg(value_parser = parse_table_id)]
    id: TableId,
    /// A single n.
    #[arg(long, conflicts_with_all = ["n_min", "n_max"])]
    n: Option<i64>,
    #[arg(long)]
    n_min: Option<i64>,
    #[arg(long)]
    n_max: Option<i64>,
    /// A single d; every admissible d when omitted.
    #[arg(long, conflicts_with_all = ["d_min", "d_max"])]
    d: Option<i64>,
    #[arg(long)]
    d_min: Option<i64>,
    #[arg(long)]
    d_max: Option<i64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Numbers instead of closed forms.
    #[arg(long)]
    eval: bool,
    /// How an empty stratum prints: `∅` or `-1`.
    #[arg(long, value_parser = parse_empty, allow_hyphen_values = true, default_value = "∅")]
    empty_as: EmptyStyle,
    #[arg(long)]
    dedupe_chains: bool,
    #[arg(long)]
    du_val_counts_as_t: bool,
    #[arg(long)]
    two_gorenstein: bool,
    /// Longest chain for the chains table.
    #[arg(long, default_value_t = 6)]
    max_len: usize,
    /// Restrict the topology table to one kind.
    #[arg(long, value_parser = parse_kind)]
    kind: Option<HorikawaKind>,
}

#[derive(Args)]
struct VerifyArgs {
    /// all, hj, lattice, systems, moduli or tangent.
    #[arg(value_parser = parse_scope, default_value = "all")]
    scope: Scope,
    #[arg(long, default_value_t = 200)]
    n_max: i64,
    /// Bound on n for the round trip and chain oracle; defaults to --n-max.
    #[arg(long)]
    hj_n_max: Option<u64>,
    /// Print the full JSON report even when every check passes.
    #[arg(long)]
    json: bool,
    #[arg(long, hide = true, value_parser = parse_tamper, allow_hyphen_values = true)]
    tamper_gram: Option<Tamper>,
}

fn parse_kind(s: &str) -> Result<HorikawaKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_which(s: &str) -> Result<Which, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_table_id(s: &str) -> Result<TableId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_scope(s: &str) -> Result<Scope, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_empty(s: &str) -> Result<EmptyStyle, String> {
    match s {
        "∅" | "symbol" | "empty" => Ok(EmptyStyle::Symbol),
        "-1" | "minus-one" => Ok(EmptyStyle::MinusOne),
        _ => Err(format!("expected ∅ or -1, got {s:?}")),
    }
}

fn parse_tamper(s: &str) -> Result<Tamper, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [i, j, delta] = parts.as_slice() else {
        return Err("expected i,j,delta".to_string());
    };
    Ok(Tamper {
        i: i.parse().map_err(|_| format!("bad row index {i:?}"))?,
        j: j.parse().map_err(|_| format!("bad column index {j:?}"))?,
        delta: delta.parse().map_err(|_| format!("bad delta {delta:?}"))?,
    })
}

enum Failure {
    Usage(String),
    Domain(Error),
    Checks,
    /// The reader closed stdout early.
    Closed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Out<'a> = &'a mut dyn Write;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    let result = run(cli, &mut lock);
    let _ = lock.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Closed) => ExitCode::SUCCESS,
    }
}

fn run(cli: Cli, out: Out) -> Result<(), Failure> {
    match cli.command {
        Command::Hj(cmd) => hj(cmd, out),
        Command::Table(args) => table(args, out),
        Command::Verify(args) => run_verify(args, out),
        Command::Strata { n, d } => {
            let mut recs = Vec::new();
            if let Ok((dp, dpp)) = d_strata(n, d) {
                recs.push(serde_json::to_value(dp).expect("record serializes"));
                recs.push(serde_json::to_value(dpp).expect("record serializes"));
            }
            match stratum_dim_second(n, d) {
                Ok(r) => recs.push(serde_json::to_value(r).expect("record serializes")),
                Err(e) if recs.is_empty() => return Err(e.into()),
                Err(_) => {}
            }
            json(out, &recs)
        }
        Command::Tangent { n, d, which } => json(out, &tangent_report(n, d, which)?),
        Command::Components { kind, n } => json(out, &moduli_components(kind, n)?),
        Command::Topology { kind, n, tag } => {
            let tags = match tag {
                Some(t) => {
                    let (k, tag) = ComponentTag::parse(&t)?;
                    if k.is_some_and(|k| k != kind) {
                        return Err(Failure::Usage(format!("component {t} does not belong to the {kind} kind")));
                    }
                    vec![tag]
                }
                None => topology_tags(kind, n),
            };
            let forms = tags
                .into_iter()
                .map(|t| intersection_form(kind, n, t))
                .collect::<horikawa::Result<Vec<_>>>()?;
            json(out, &forms)
        }
    }
}

fn json<T: serde::Serialize + ?Sized>(out: Out, v: &T) -> Result<(), Failure> {
    let s = serde_json::to_string_pretty(v).expect("value serializes");
    writeln!(out, "{s}").map_err(io_err)
}

fn io_err(e: io::Error) -> Failure {
    match e.kind() {
        io::ErrorKind::BrokenPipe => Failure::Closed,
        _ => Failure::Usage(format!("write failed: {e}")),
    }
}

fn chain(entries: Vec<u32>) -> Result<Chain, Failure> {
    Ok(Chain::new(entries)?)
}

fn hj(cmd: HjCommand, out: Out) -> Result<(), Failure> {
    match cmd {
        HjCommand::Expand { n, q } => {
            let s = CyclicQuotientSingularity::new(n, q)?;
            writeln!(out, "{}  {}", hj_expand(&s), classify_singularity(&s)).map_err(io_err)
        }
        HjCommand::Eval { entries } => writeln!(out, "{}", hj_eval(&chain(entries)?)).map_err(io_err),
        HjCommand::Classify { input } => {
            let line = match input.as_slice() {
                [one] if one.contains('/') => {
                    let (n, q) = one.split_once('/').expect("checked for a slash");
                    let n = n.trim().parse().map_err(|_| Failure::Usage(format!("bad n in {one:?}")))?;
                    let q = q.trim().parse().map_err(|_| Failure::Usage(format!("bad q in {one:?}")))?;
                    let s = CyclicQuotientSingularity::new(n, q)?;
                    format!("{}  {}", hj_expand(&s), classify_singularity(&s))
                }
                entries => {
                    let v = entries
                        .iter()
                        .flat_map(|e| e.split(','))
                        .filter(|e| !e.trim().is_empty())
                        .map(|e| e.trim().parse::<u32>().map_err(|_| Failure::Usage(format!("bad entry {e:?}"))))
                        .collect::<Result<Vec<_>, _>>()?;
                    let c = chain(v)?;
                    let s = CyclicQuotientSingularity::of_chain(&c)?;
                    format!("{c}  {s}  {}", classify_chain(&c)?)
                }
            };
            writeln!(out, "{line}").map_err(io_err)
        }
        HjCommand::Grow { side, entries } => {
            let c = chain(entries)?;
            if !classify_chain(&c)?.is_t(false) {
                return Err(Error::Domain(format!("growth needs a T-chain, {c} is not one")).into());
            }
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            writeln!(out, "{}", grow_chain(&c, side)).map_err(io_err)
        }
        HjCommand::Enum { max_len, two_gorenstein, dedupe } => {
            let list = enumerate_t_chains_with(EnumerateOptions {
                max_length: max_len,
                only_two_gorenstein: two_gorenstein,
                dedupe_reversal: dedupe,
            })?;
            for c in list {
                writeln!(out, "{c}").map_err(io_err)?;
            }
            Ok(())
        }
        HjCommand::Discrepancies { entries } => {
            let a = discrepancies(&chain(entries)?)?;
            let text: Vec<String> = a.iter().map(ToString::to_string).collect();
            writeln!(out, "{}", text.join(" ")).map_err(io_err)
        }
        HjCommand::K2 { entries } => writeln!(out, "{}", k2_contribution(&chain(entries)?)?).map_err(io_err),
    }
}

fn range(one: Option<i64>, lo: Option<i64>, hi: Option<i64>, what: &str) -> Result<Option<(i64, i64)>, Failure> {
    let r = match (one, lo, hi) {
        (Some(v), _, _) => Some((v, v)),
        (None, None, None) => None,
        (None, Some(l), Some(h)) => Some((l, h)),
        (None, Some(l), None) => Some((l, l)),
        (None, None, Some(h)) => Some((h, h)),
    };
    if let Some((l, h)) = r {
        if l > h {
            return Err(Failure::Usage(format!("empty {what}-range {l}..{h}")));
        }
    }
    Ok(r)
}

fn table(args: TableArgs, out: Out) -> Result<(), Failure> {
    let n = match (range(args.n, args.n_min, args.n_max, "n")?, args.id) {
        (Some(r), _) => r,
        (None, TableId::Chains) => (0, 0),
        (None, _) => return Err(Failure::Usage("the table needs --n or --n-min/--n-max".to_string())),
    };
    let mut req = TableRequest::new(args.id, n.0, n.1);
    req.d_range = range(args.d, args.d_min, args.d_max, "d")?;
    req.empty_style = args.empty_as;
    req.eval = args.eval;
    req.dedupe_chains = args.dedupe_chains;
    req.du_val_counts_as_t = args.du_val_counts_as_t;
    req.two_gorenstein_only = args.two_gorenstein;
    req.max_len = args.max_len;
    req.kind = args.kind;
    let t = build_table(&req)?;
    if t.is_empty() {
        eprintln!("note: no admissible cells in the requested range");
    }
    render(&t, args.format, out)
}

fn render(t: &Table, format: Format, out: Out) -> Result<(), Failure> {
    match format {
        Format::Json => json(out, t),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let csv_err = |e: csv::Error| match e.into_kind() {
                csv::ErrorKind::Io(e) => io_err(e),
                other => Failure::Usage(format!("write failed: {other:?}")),
            };
            w.write_record(t.header()).map_err(csv_err)?;
            for r in t.records() {
                w.write_record(&r).map_err(csv_err)?;
            }
            w.flush().map_err(io_err)
        }
        Format::Text => {
            let header: Vec<String> = t.header().into_iter().map(String::from).collect();
            let rows = t.records();
            let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
            for r in &rows {
                for (w, c) in widths.iter_mut().zip(r) {
                    *w = (*w).max(c.chars().count());
                }
            }
            for r in std::iter::once(&header).chain(&rows) {
                let mut line = String::new();
                for (i, (c, w)) in r.iter().zip(&widths).enumerate() {
                    if i > 0 {
                        line.push_str("  ");
                    }
                    line.push_str(c);
                    line.extend(std::iter::repeat_n(' ', w - c.chars().count()));
                }
                writeln!(out, "{}", line.trim_end()).map_err(io_err)?;
            }
            Ok(())
        }
    }
}

fn run_verify(args: VerifyArgs, out: Out) -> Result<(), Failure> {
    let mut opts = VerifyOptions::new(args.scope, args.n_max);
    opts.hj_n_max = args.hj_n_max;
    opts.tamper = args.tamper_gram;
    let report = verify(&opts)?;
    for c in &report.checks {
        let counts = match c.status {
            Status::Skipped => "out of scope".to_string(),
            _ => format!("passed={} failed={}", c.passed, c.failed),
        };
        writeln!(out, "{}  {:<22} {:<19} {counts}", c.status, c.name, c.module.label()).map_err(io_err)?;
    }
    if args.json || !report.all_passed {
        writeln!(out, "{}", report.to_json()).map_err(io_err)?;
    }
    if report.all_passed {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}
