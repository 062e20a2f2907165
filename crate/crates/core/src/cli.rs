//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 for bad input or usage, 2 when a
//! mathematical invariant fails (an internal inconsistency or a failed
//! verification).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::boundary::{build_dtilde_boundary, generator_from_a_tilde, parse_boundary, Boundary, Reading};
use crate::dtilde::{all_variables, Provenance, VariableCatalog};
use crate::error::{Error, Result};
use crate::exactalg::{parse_rational, RationalFunction};
use crate::frieze::{render_ascii, FriezeEntry, FriezeSession};
use crate::oracle::{configure_threads, default_depth, enumerate_by_mutation, verify_values, Report};
use crate::quiver::{parse_quiver_json, DTilde, Quiver};
use crate::tiling::TilingSession;

#[derive(Debug, Parser)]
#[command(name = "frieze-lab", version, about = "Cluster variables of type D-tilde from SL2-tilings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a window of the tiling below a boundary.
    Tile(TileArgs),
    /// Frieze (or modelled-quiver) values over a range of slices.
    Frieze(FriezeArgs),
    /// Catalog of cluster variables of a D-tilde quiver.
    Variables(VariablesArgs),
    /// Check a catalog against enumeration by mutation.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Substitute numbers after the symbolic computation: `all=1` or
    /// `u1=2,u3=1/2`.
    #[arg(long)]
    pub numeric: Option<String>,
}

#[derive(Debug, Args)]
pub struct TileArgs {
    /// Quiver file (JSON); a D-tilde quiver or an oriented cycle.
    #[arg(long, conflicts_with = "boundary", required_unless_present = "boundary")]
    pub quiver: Option<String>,
    /// Boundary in the `^inf( ... )^inf` grammar.
    #[arg(long)]
    pub boundary: Option<String>,
    /// `c0,r0,c1,r1`, columns and rows inclusive; rows grow downward.
    #[arg(long, default_value = "0,0,5,5", allow_hyphen_values = true)]
    pub window: String,
    /// Apply `--numeric` to the boundary labels before tiling.
    #[arg(long, requires = "numeric")]
    pub numeric_first: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct FriezeArgs {
    #[arg(long)]
    pub quiver: String,
    /// `a,b`, inclusive.
    #[arg(long, default_value = "0,2", allow_hyphen_values = true)]
    pub k_range: String,
    /// Emit the modelled quiver (forks glued) instead of the frieze.
    #[arg(long)]
    pub modelled: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    #[arg(long)]
    pub quiver: String,
    /// Transjective slices `a,b`; the initial cluster is always included.
    #[arg(long, default_value = "-2,2", allow_hyphen_values = true)]
    pub k_range: String,
    #[arg(long, default_value_t = 1)]
    pub tube_depth: usize,
    /// Mutation depth for the oracle (default 9 for n = 4, 7 otherwise).
    #[arg(long)]
    pub depth: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VariablesArgs {
    #[command(flatten)]
    pub catalog: CatalogArgs,
    /// Run the oracle and embed its report.
    #[arg(long)]
    pub verify: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub catalog: CatalogArgs,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_ints<const N: usize>(s: &str, what: &str) -> Result<[i64; N]> {
    let parts: Vec<i64> = s
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Parse(format!("{what} must be {N} comma-separated integers, got {s:?}")))?;
    parts
        .try_into()
        .map_err(|_| Error::Parse(format!("{what} must be {N} comma-separated integers, got {s:?}")))
}

/// Parses `all=1` or `u1=2,u3=1/2` into a substitution; `all` covers
/// `u0..=max_var`.
pub fn parse_numeric(s: &str, max_var: usize) -> Result<BTreeMap<usize, RationalFunction>> {
    let mut map = BTreeMap::new();
    for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("numeric entry {item:?} is not key=value")))?;
        let value = parse_rational(value)?;
        if !value.variables().is_empty() {
            return Err(Error::Parse(format!("numeric value {value} is not a number")));
        }
        let key = key.trim();
        if key == "all" {
            for v in 0..=max_var {
                map.entry(v).or_insert_with(|| value.clone());
            }
        } else {
            let idx = key
                .strip_prefix('u')
                .and_then(|d| d.parse::<usize>().ok())
                .ok_or_else(|| Error::Parse(format!("unknown variable {key:?}")))?;
            map.insert(idx, value);
        }
    }
    Ok(map)
}

fn read_quiver(arg: &str) -> Result<Quiver> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| Error::Parse(format!("cannot read {arg}: {e}")))?
    };
    parse_quiver_json(&text)
}

fn read_dtilde(arg: &str) -> Result<DTilde> {
    DTilde::from_quiver(&read_quiver(arg)?)
}

fn max_vertex(q: &Quiver) -> usize {
    q.vertices().max().map_or(0, |v| v.max(0) as usize)
}

/// Boundary of a quiver: the D-tilde construction with `u0 = 1`, or the
/// periodic boundary of an oriented cycle cut at its smallest vertex.
fn quiver_boundary(q: &Quiver) -> Result<Boundary> {
    if let Ok(d) = DTilde::from_quiver(q) {
        let (b, _) = build_dtilde_boundary(&d)?;
        return b.substitute(&BTreeMap::from([(0, RationalFunction::one())]));
    }
    let cut = q.vertices().next().ok_or_else(|| Error::Quiver("empty quiver".into()))?;
    Ok(Boundary::periodic(generator_from_a_tilde(q, cut, Reading::Clockwise)?))
}

fn cmd_tile(a: &TileArgs) -> Result<String> {
    let [c0, r0, c1, r1] = parse_ints::<4>(&a.window, "--window")?;
    let (boundary, max_var) = match (&a.quiver, &a.boundary) {
        (Some(q), _) => {
            let q = read_quiver(q)?;
            (quiver_boundary(&q)?, max_vertex(&q))
        }
        (None, Some(s)) => {
            let b = parse_boundary(s)?;
            let max_var = std::cell::Cell::new(0);
            b.map_values(|v| {
                max_var.set(max_var.get().max(v.variables().into_iter().max().unwrap_or(0)));
                Ok(v.clone())
            })?;
            (b, max_var.get())
        }
        (None, None) => return Err(Error::Parse("tile needs --quiver or --boundary".into())),
    };
    let numeric = a.output.numeric.as_deref().map(|s| parse_numeric(s, max_var)).transpose()?;
    let boundary = match (&numeric, a.numeric_first) {
        (Some(map), true) => boundary.substitute(map)?,
        _ => boundary,
    };
    let session = TilingSession::new(boundary);
    let mut window = session.window(c0, r0, c1, r1)?;
    if let Some(map) = numeric.filter(|_| !a.numeric_first) {
        window = window.map(|v| v.substitute(&map))?;
    }
    if let Err((c, r)) = window.check_unimodular() {
        return Err(Error::Internal(format!("2x2 block at ({c}, {r}) has determinant != 1")));
    }
    Ok(match a.output.format {
        Format::Json => window.to_json(),
        Format::Csv => window.to_csv(),
        Format::Text => window.to_text(),
    })
}

fn frieze_output(entries: &[FriezeEntry], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(entries).expect("serializable"),
        Format::Csv => {
            let mut out = String::from("k,vertex,value\n");
            for e in entries {
                writeln!(out, "{},{},{}", e.k, e.vertex, e.value).expect("string write");
            }
            out
        }
        Format::Text => render_ascii(entries),
    }
}

fn cmd_frieze(a: &FriezeArgs) -> Result<String> {
    let d = read_dtilde(&a.quiver)?;
    let [k0, k1] = parse_ints::<2>(&a.k_range, "--k-range")?;
    if k0 > k1 {
        return Err(Error::Range(format!("k range {k0},{k1} is empty")));
    }
    let session = FriezeSession::new(&d)?;
    let mut entries = if a.modelled {
        session.dump_modelled(k0, k1)?
    } else {
        session.dump(k0, k1)?
    };
    if let Some(s) = &a.output.numeric {
        let map = parse_numeric(s, d.n() + 1)?;
        for e in &mut entries {
            e.value = e.value.substitute(&map)?;
        }
    }
    Ok(frieze_output(&entries, a.output.format))
}

fn build_catalog(a: &CatalogArgs) -> Result<(DTilde, VariableCatalog)> {
    let d = read_dtilde(&a.quiver)?;
    let [k0, k1] = parse_ints::<2>(&a.k_range, "--k-range")?;
    let catalog = all_variables(&d, Some((k0, k1)), a.tube_depth)?;
    Ok((d, catalog))
}

fn run_oracle(d: &DTilde, catalog: &VariableCatalog, depth: Option<usize>) -> Result<Report> {
    let depth = depth.unwrap_or_else(|| default_depth(d.n()));
    let oracle = enumerate_by_mutation(&d.seed(), depth)?;
    Ok(verify_values(catalog.values(), &oracle))
}

#[derive(Serialize)]
struct VerifiedCatalog<'a> {
    #[serde(flatten)]
    catalog: &'a VariableCatalog,
    report: &'a Report,
}

fn catalog_csv(catalog: &VariableCatalog) -> String {
    let mut out = String::from("kind,k,line,part,tube,tube_rank,mouth_index,depth,value\n");
    for e in &catalog.entries {
        let row = match &e.provenance {
            Provenance::Transjective { k, line, part } => format!(
                "transjective,{k},{line},{},,,,",
                part.map(|p| p.to_string()).unwrap_or_default()
            ),
            Provenance::Tube { tube, tube_rank, mouth_index, depth, .. } => {
                format!("tube,,,,\"{tube}\",{tube_rank},{mouth_index},{depth}")
            }
        };
        writeln!(out, "{row},{}", e.value).expect("string write");
    }
    out
}

fn catalog_text(catalog: &VariableCatalog) -> String {
    let mut out = String::new();
    for e in &catalog.entries {
        let tag = match &e.provenance {
            Provenance::Transjective { k, line, part: Some(p) } => format!("k={k} {line}.{p}"),
            Provenance::Transjective { k, line, part: None } => format!("k={k} {line}"),
            Provenance::Tube { tube, mouth_index, depth, .. } => format!("tube {tube} i={mouth_index} d={depth}"),
        };
        writeln!(out, "{tag:<24} {}", e.value).expect("string write");
    }
    out
}

fn cmd_variables(a: &VariablesArgs) -> Result<(String, bool)> {
    let (d, mut catalog) = build_catalog(&a.catalog)?;
    let report = if a.verify {
        Some(run_oracle(&d, &catalog, a.catalog.depth)?)
    } else {
        None
    };
    if let Some(s) = &a.output.numeric {
        let map = parse_numeric(s, d.n() + 1)?;
        for e in &mut catalog.entries {
            e.value = e.value.substitute(&map)?;
        }
    }
    let ok = report.as_ref().is_none_or(|r| r.pass);
    let text = match (a.output.format, &report) {
        (Format::Json, Some(report)) => {
            serde_json::to_string_pretty(&VerifiedCatalog { catalog: &catalog, report }).expect("serializable")
        }
        (Format::Json, None) => catalog.to_json(),
        (Format::Csv, _) => catalog_csv(&catalog),
        (Format::Text, _) => catalog_text(&catalog),
    };
    Ok((text, ok))
}

fn cmd_verify(a: &VerifyArgs) -> Result<(String, bool)> {
    let (d, catalog) = build_catalog(&a.catalog)?;
    let report = run_oracle(&d, &catalog, a.catalog.depth)?;
    let text = match a.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("serializable"),
        Format::Csv => {
            let mut out = String::from("entry,found,witness_depth\n");
            for e in &report.entries {
                let depth = e.witness_depth.map(|d| d.to_string()).unwrap_or_default();
                writeln!(out, "{},{},{depth}", e.entry, e.found).expect("string write");
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for e in &report.entries {
                let verdict = match e.witness_depth {
                    Some(d) => format!("found at depth {d}"),
                    None => "MISSING".into(),
                };
                writeln!(out, "{verdict:<18} {}", e.entry).expect("string write");
            }
            let found = report.entries.iter().filter(|e| e.found).count();
            writeln!(out, "{found}/{} found, oracle depth {}", report.entries.len(), report.depth)
                .expect("string write");
            out
        }
    };
    Ok((text, report.pass))
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_) => 2,
        _ => 1,
    }
}

/// Runs a parsed command; returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let result = configure_threads().and_then(|()| match &cli.command {
        Command::Tile(a) => cmd_tile(a).and_then(|t| emit(&t, a.output.out.as_ref())).map(|()| true),
        Command::Frieze(a) => cmd_frieze(a).and_then(|t| emit(&t, a.output.out.as_ref())).map(|()| true),
        Command::Variables(a) => {
            cmd_variables(a).and_then(|(t, ok)| emit(&t, a.output.out.as_ref()).map(|()| ok))
        }
        Command::Verify(a) => cmd_verify(a).and_then(|(t, ok)| emit(&t, a.out.as_ref()).map(|()| ok)),
    });
    match result {
        Ok(true) => 0,
        Ok(false) => {
            eprintln!("error: verification failed: some catalog entries were not found by mutation");
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

/// Parses arguments and runs; usage errors exit with 1.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            code
        }
    }
}
