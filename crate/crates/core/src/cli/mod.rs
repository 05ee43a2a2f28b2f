//! `pglab` command-line front end.
//!
//! Exit codes: 0 success, 1 check failure or I/O error, 2 usage or input
//! error, 3 size cap exceeded.

mod report;

pub use report::{AnalysisReport, ClassSummary, ClosedForm, GroupReport, PGroupReport, VerifyRecord};

use crate::connectivity::{components, Caps};
use crate::groups::{build_abelian_p, build_cyclic, parse_cayley_table, FiniteGroup, GroupError};
use crate::numtheory::{divisors, factorize};
use crate::powergraph::{build_power_graph, build_power_graph_zn_fast, build_reduced_graph, equiv_classes, Graph};
use crate::theorems::{
    abelian_p_component_formula, kappa_closed_form, verify_target, xi1, xi2, Target, VerifyOptions,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use thiserror::Error;

/// Largest `p`-group order accepted by `pgroup`.
pub const PGROUP_ORDER_CAP: usize = 1 << 14;

#[derive(Debug, Parser)]
#[command(name = "pglab", version, about = "Power graphs of finite groups: separating sets and vertex connectivity")]
pub struct Cli {
    /// Emit JSON instead of a text table.
    #[arg(long, global = true)]
    json: bool,

    /// Vertex cap for exact connectivity by max-flow.
    #[arg(long, global = true, env = "PGLAB_FLOW_CAP", default_value_t = Caps::default().flow)]
    flow_cap: usize,

    /// Vertex cap for brute-force subset search and enumeration.
    #[arg(long, global = true, env = "PGLAB_BRUTE_CAP", default_value_t = Caps::default().brute)]
    brute_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze the power graph of Z_n.
    Analyze {
        n: u64,
        #[command(flatten)]
        exact: ExactFlags,
    },
    /// Run every applicable check for each n in an inclusive range `a..b`.
    Verify { range: String },
    /// Components of the proper power graph of Z_{p^a_1} x ... x Z_{p^a_r}.
    Pgroup {
        #[arg(long)]
        p: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        exponents: Vec<u32>,
    },
    /// Write a graph of Z_n as DOT or as an edge list.
    Export {
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Edges)]
        format: Format,
        #[arg(long, value_enum, default_value_t = GraphTarget::Power)]
        target: GraphTarget,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Analyze the power graph of a group given as a Cayley table file.
    Cayley {
        file: PathBuf,
        #[command(flatten)]
        exact: ExactFlags,
    },
}

#[derive(Debug, Args)]
struct ExactFlags {
    /// Require exact kappa; fail with exit code 3 if it exceeds the flow cap.
    #[arg(long, conflicts_with = "no_exact")]
    exact: bool,
    /// Skip exact kappa.
    #[arg(long)]
    no_exact: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Edges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphTarget {
    Power,
    Proper,
    Reduced,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    CapExceeded(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::CapExceeded(_) => 3,
            CliError::Io(_) | CliError::Json(_) => 1,
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::TooLarge { .. } => CliError::CapExceeded(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

/// Parses `a..b` into an inclusive range with `2 <= a <= b`.
pub fn parse_range(s: &str) -> Result<(u64, u64), CliError> {
    let bad = || CliError::Usage(format!("malformed range {s:?}, expected a..b"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: u64 = a.trim().parse().map_err(|_| bad())?;
    let b: u64 = b.trim().parse().map_err(|_| bad())?;
    if a < 2 || a > b {
        return Err(CliError::Usage(format!("range {s:?} must satisfy 2 <= a <= b")));
    }
    Ok((a, b))
}

/// Parses `args` (program name first) and runs the command. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return e.exit_code();
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn caps(cli: &Cli) -> Caps {
    Caps {
        flow: cli.flow_cap,
        brute: cli.brute_cap,
        enumerate: cli.brute_cap,
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, json: bool, value: &T, text: impl FnOnce() -> String) -> Result<(), CliError> {
    if json {
        serde_json::to_writer(&mut *out, value)?;
        writeln!(out)?;
    } else {
        write!(out, "{}", text())?;
    }
    Ok(())
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Analyze { n, exact } => analyze(cli, *n, exact, out),
        Command::Verify { range } => verify(cli, range, out),
        Command::Pgroup { p, exponents } => pgroup(cli, *p, exponents, out),
        Command::Export {
            n,
            format,
            target,
            output,
        } => export(*n, *format, *target, output.as_ref(), out, err),
        Command::Cayley { file, exact } => cayley(cli, file, exact, out),
    }
}

/// Harness options for a graph of `order` vertices, or the cap error `--exact` demands.
fn options_for(cli: &Cli, order: usize, exact: &ExactFlags) -> Result<VerifyOptions, CliError> {
    let caps = caps(cli);
    if exact.exact && order > caps.flow {
        return Err(CliError::CapExceeded(format!(
            "exact kappa needs at most {} vertices, graph has {order}",
            caps.flow
        )));
    }
    Ok(VerifyOptions {
        caps,
        exact: !exact.no_exact,
        ..VerifyOptions::default()
    })
}

fn exit_for(checks: &[crate::theorems::Check]) -> i32 {
    let failed = checks
        .iter()
        .any(|c| c.status == crate::theorems::CheckStatus::Fail);
    i32::from(failed)
}

fn analyze(cli: &Cli, n: u64, exact: &ExactFlags, out: &mut dyn Write) -> Result<i32, CliError> {
    if n < 2 {
        return Err(CliError::Usage(format!("n must be at least 2, got {n}")));
    }
    let opts = options_for(cli, n as usize, exact)?;
    let f = factorize(n).map_err(|e| CliError::Usage(e.to_string()))?;
    let divs = divisors(n).expect("n > 0");
    let verification = verify_target(&Target::Cyclic(n), &opts).map_err(|e| CliError::Usage(e.to_string()))?;
    let formula = kappa_closed_form(n).expect("n >= 2");
    let g = build_cyclic(n).expect("n >= 2");
    let report = AnalysisReport {
        n,
        factorization: f.factors().to_vec(),
        phi: f.phi(),
        class_count: divs.len(),
        class_sizes: report::class_sizes(n, &divs),
        reduced_graph_vertices: (!f.is_prime()).then(|| (n - f.phi() - 1) as usize),
        kappa_closed_form: ClosedForm {
            case: formula.case,
            value: formula.value,
        },
        xi1: xi1(n).ok(),
        xi2: xi2(n).ok(),
        kappa_exact: verification.kappa,
        witness: report::labels(&g, &verification.witness),
        checks: verification.checks,
    };
    emit(out, cli.json, &report, || report.render(&report::format_factorization(&f)))?;
    Ok(exit_for(&report.checks))
}

fn verify(cli: &Cli, range: &str, out: &mut dyn Write) -> Result<i32, CliError> {
    let (a, b) = parse_range(range)?;
    let opts = VerifyOptions {
        caps: caps(cli),
        ..VerifyOptions::default()
    };
    // Indexed parallel collection keeps ascending order.
    let records: Vec<VerifyRecord> = (a..=b)
        .into_par_iter()
        .map(|n| {
            let r = verify_target(&Target::Cyclic(n), &opts).expect("n >= 2");
            VerifyRecord::new(n, r)
        })
        .collect();
    let mut failed = 0;
    for r in &records {
        failed += r.failed;
        emit(out, cli.json, r, || r.render())?;
    }
    Ok(i32::from(failed > 0))
}

fn pgroup(cli: &Cli, p: u64, exponents: &[u32], out: &mut dyn Write) -> Result<i32, CliError> {
    let g = build_abelian_p(p, exponents)?;
    if g.order() > PGROUP_ORDER_CAP {
        return Err(CliError::CapExceeded(format!(
            "group order {} exceeds the cap of {PGROUP_ORDER_CAP}",
            g.order()
        )));
    }
    let formula = abelian_p_component_formula(p, exponents.len() as u32).expect("validated by the group builder");
    let proper = build_power_graph(&g).without(&[g.identity()]);
    let comps = components(&proper);
    let mut counts = Vec::with_capacity(comps.len());
    let mut universal = true;
    for comp in &comps {
        let order_p: Vec<usize> = comp
            .iter()
            .copied()
            .filter(|&v| g.element_order(proper.element(v)) as u64 == p)
            .collect();
        counts.push(order_p.len());
        universal &= order_p
            .iter()
            .all(|&v| comp.iter().all(|&w| w == v || proper.is_adjacent(v, w)));
    }
    let opts = VerifyOptions {
        caps: caps(cli),
        ..VerifyOptions::default()
    };
    let verification = verify_target(&Target::Group(g.clone()), &opts).expect("group targets always verify");
    let report = PGroupReport {
        group: g.name().to_string(),
        p,
        exponents: exponents.to_vec(),
        order: g.order(),
        components: comps.len(),
        formula,
        order_p_per_component: counts,
        order_p_universal: universal,
        kappa_exact: verification.kappa,
        checks: verification.checks,
    };
    emit(out, cli.json, &report, || report.render())?;
    Ok(exit_for(&report.checks))
}

fn export(
    n: u64,
    format: Format,
    target: GraphTarget,
    output: Option<&PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be positive".into()));
    }
    let (graph, name) = match target {
        GraphTarget::Power => (build_power_graph_zn_fast(n).expect("n > 0"), format!("power_Z{n}")),
        GraphTarget::Proper => (
            build_power_graph_zn_fast(n).expect("n > 0").without(&[0]),
            format!("proper_Z{n}"),
        ),
        GraphTarget::Reduced => match build_reduced_graph(n) {
            Ok(g) => (g, format!("reduced_Z{n}")),
            Err(e) => {
                writeln!(err, "note: {e}")?;
                (Graph::null(), format!("reduced_Z{n}"))
            }
        },
    };
    let body = if graph.is_null() {
        String::new()
    } else {
        match format {
            Format::Dot => graph.to_dot(&name),
            Format::Edges => graph.to_edge_list(),
        }
    };
    match output {
        Some(path) => std::fs::write(path, body)?,
        None => out.write_all(body.as_bytes())?,
    }
    Ok(0)
}

fn load_group(path: &PathBuf) -> Result<FiniteGroup, CliError> {
    let text = std::fs::read_to_string(path)?;
    let g = parse_cayley_table(&text)?;
    Ok(match path.file_stem() {
        Some(stem) => g.with_name(stem.to_string_lossy()),
        None => g,
    })
}

fn cayley(cli: &Cli, path: &PathBuf, exact: &ExactFlags, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = load_group(path)?;
    let opts = options_for(cli, g.order(), exact)?;
    let classes = equiv_classes(&g);
    let verification = verify_target(&Target::Group(g.clone()), &opts).expect("group targets always verify");
    let report = GroupReport {
        name: g.name().to_string(),
        order: g.order(),
        abelian: g.is_abelian(),
        cyclic: g.is_cyclic(),
        class_count: classes.len(),
        classes: report::class_summaries(&g, &classes),
        kappa_exact: verification.kappa,
        witness: report::labels(&g, &verification.witness),
        checks: verification.checks,
    };
    emit(out, cli.json, &report, || report.render())?;
    Ok(exit_for(&report.checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("pglab").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn json(args: &[&str]) -> (i32, serde_json::Value) {
        let mut full = vec!["--json"];
        full.extend_from_slice(args);
        let (code, out, _) = call(&full);
        (code, serde_json::from_str(&out).unwrap())
    }

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("2..100").unwrap(), (2, 100));
        assert_eq!(parse_range("30..30").unwrap(), (30, 30));
        for bad in ["x..y", "2-10", "10..2", "1..5", "..5", "3.."] {
            assert_eq!(parse_range(bad).unwrap_err().exit_code(), 2, "{bad}");
        }
    }

    #[test]
    fn analyze_12() {
        let (code, v) = json(&["analyze", "12", "--exact"]);
        assert_eq!(code, 0);
        assert_eq!(v["kappa_exact"], 6);
        assert_eq!(v["xi1"], 6);
        assert_eq!(v["xi2"], 6);
        assert_eq!(v["phi"], 4);
        assert_eq!(v["class_count"], 6);
        assert_eq!(v["class_sizes"]["12"], 1);
        assert_eq!(v["class_sizes"]["1"], 4);
        assert_eq!(v["witness"], serde_json::json!(["0", "1", "5", "6", "7", "11"]));
        assert_eq!(v["kappa_closed_form"]["case"], "TwoPrimePowers");
    }

    #[test]
    fn analyze_7_and_210() {
        let (_, v) = json(&["analyze", "7"]);
        assert_eq!(v["kappa_closed_form"]["case"], "PrimePower");
        assert_eq!(v["kappa_closed_form"]["value"], 6);
        assert!(v["reduced_graph_vertices"].is_null());

        let (code, v) = json(&["analyze", "210"]);
        assert_eq!(code, 0);
        assert_eq!(v["kappa_closed_form"]["case"], "NoClosedForm");
        assert!(v["kappa_closed_form"]["value"].is_null());
        assert_eq!(v["xi1"], 70);
        assert!(v["kappa_exact"].as_u64().unwrap() <= 70);
    }

    #[test]
    fn analyze_key_order_is_fixed() {
        let (_, out, _) = call(&["--json", "analyze", "6"]);
        let keys = [
            "\"n\"", "\"factorization\"", "\"phi\"", "\"class_count\"", "\"class_sizes\"",
            "\"reduced_graph_vertices\"", "\"kappa_closed_form\"", "\"xi1\"", "\"xi2\"",
            "\"kappa_exact\"", "\"witness\"", "\"checks\"",
        ];
        let pos: Vec<usize> = keys.iter().map(|k| out.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]), "{out}");
    }

    #[test]
    fn analyze_caps() {
        let (code, _, err) = call(&["--flow-cap", "10", "analyze", "12", "--exact"]);
        assert_eq!(code, 3, "{err}");
        let (code, v) = json(&["--flow-cap", "10", "analyze", "12"]);
        assert_eq!(code, 0);
        assert!(v["kappa_exact"].is_null());
        let (code, v) = json(&["analyze", "12", "--no-exact"]);
        assert_eq!(code, 0);
        assert!(v["kappa_exact"].is_null());
        assert_eq!(call(&["analyze", "1"]).0, 2);
        assert_eq!(call(&["analyze", "12", "--exact", "--no-exact"]).0, 2);
    }

    #[test]
    fn verify_records_in_order() {
        let (code, out, _) = call(&["--json", "verify", "28..32"]);
        assert_eq!(code, 0);
        let ns: Vec<u64> = out
            .lines()
            .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["n"].as_u64().unwrap())
            .collect();
        assert_eq!(ns, vec![28, 29, 30, 31, 32]);
        assert_eq!(call(&["verify", "x..y"]).0, 2);
    }

    #[test]
    fn verify_reports_the_z4_counterexample() {
        let (code, out, _) = call(&["verify", "4..4"]);
        assert_eq!(code, 1);
        assert!(out.contains("FAIL kappa_phi_plus_one_iff_pq"), "{out}");
    }

    #[test]
    fn pgroup_examples() {
        let (code, v) = json(&["pgroup", "--p", "2", "--exponents", "1,1"]);
        assert_eq!(code, 0);
        assert_eq!((v["components"].as_u64(), v["formula"].as_u64()), (Some(3), Some(3)));

        let (_, v) = json(&["pgroup", "--p", "3", "--exponents", "1,1"]);
        assert_eq!(v["components"], 4);
        assert_eq!(v["order_p_per_component"], serde_json::json!([2, 2, 2, 2]));
        assert_eq!(v["order_p_universal"], true);

        let (_, v) = json(&["pgroup", "--p", "2", "--exponents", "3"]);
        assert_eq!(v["components"], 1);

        assert_eq!(call(&["pgroup", "--p", "4", "--exponents", "1"]).0, 2);
        assert_eq!(call(&["pgroup", "--p", "2", "--exponents", "15"]).0, 3);
    }

    #[test]
    fn export_examples() {
        let (code, out, _) = call(&["export", "6", "--format", "edges", "--target", "reduced"]);
        assert_eq!((code, out.as_str()), (0, "2 4\n"));

        let (_, out, _) = call(&["export", "12", "--format", "edges", "--target", "reduced"]);
        assert_eq!(out, "2 4\n2 6\n2 8\n2 10\n3 6\n3 9\n4 8\n4 10\n6 9\n6 10\n8 10\n");

        let (_, out, _) = call(&["export", "4", "--format", "dot", "--target", "power"]);
        assert!(out.starts_with("graph "));
        assert_eq!(out.matches(" -- ").count(), 6);

        let (code, out, err) = call(&["export", "7", "--target", "reduced"]);
        assert_eq!((code, out.as_str()), (0, ""));
        assert!(err.contains("null graph"));

        assert_eq!(call(&["export", "6", "--format", "svg"]).0, 2);
    }
}
