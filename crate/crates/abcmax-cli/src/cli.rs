//! Argument parsing and dispatch for the `abcmax` binary.
//!
//! Exit codes: 0 success (or a conjecture report, whatever it says),
//! 1 a verification or grid assertion did not hold, 2 usage or input error,
//! 3 capacity or I/O error.

use crate::exec::AutoExecutor;
use crate::graph6::{parse_graph6, write_graph6, Graph6Error};
use crate::report;
use crate::svg::{render_svg, ChartSpec};
use crate::sweep::{sweep, write_csv, SweepFamily};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};

use abcmax::{
    abc_index, build_edgeconn_extremal, build_independence_extremal, build_pendant_extremal,
    build_turan, check_bridge_monotonicity, check_chromatic_conjecture, chromatic_number,
    claim_grid, edge_connectivity, formula_bipartite, formula_edgeconn, formula_independence,
    formula_pendant, independence_number, pendant_count, verify_chromatic_bipartite,
    verify_edgeconn, verify_independence, verify_pendant, ExtremalReport, FamilyError, Graph,
    GridCheckResult, VerifyError,
};

// ===== errors =====

#[derive(Debug)]
enum CliError {
    /// Bad argument or input value.
    Input(String),
    /// The request exceeds a hard capacity limit.
    Capacity(String),
    /// Filesystem failure.
    Io(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Capacity(_) | CliError::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Capacity(m) | CliError::Io(m) => m,
        }
    }
}

impl From<Graph6Error> for CliError {
    fn from(e: Graph6Error) -> CliError {
        match e {
            Graph6Error::OrderTooLarge { .. } | Graph6Error::Graph(_) => {
                CliError::Capacity(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> CliError {
        match e {
            FamilyError::Range { .. } => CliError::Input(e.to_string()),
            FamilyError::Graph(_) => CliError::Capacity(e.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> CliError {
        CliError::Input(e.to_string())
    }
}

// ===== argument surface =====

#[derive(Parser)]
#[command(
    name = "abcmax",
    version,
    about = "Extremal ABC index toolkit: compute, build, verify, sweep"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildFamily {
    /// Complement of a clique joined to a clique (independence number).
    Independence,
    /// Star, short path with leaves, or clique with leaves (pendant count).
    Pendant,
    /// Clique joined to a vertex plus a clique (edge connectivity).
    EdgeConnectivity,
    /// Balanced complete multipartite graph (chromatic number).
    Turan,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormulaFamily {
    Independence,
    Pendant,
    EdgeConnectivity,
    /// Balanced complete bipartite maximum; ignores --param.
    Bipartite,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyTarget {
    Independence,
    Pendant,
    EdgeConnectivity,
    /// The chromatic-number-2 class.
    Bipartite,
}

#[derive(Subcommand)]
enum Command {
    /// Print the ABC index of a graph6-encoded graph.
    Compute {
        /// Headerless graph6 string, at most 32 vertices.
        graph6: String,
    },
    /// Build the extremal graph of a family and print it.
    Build {
        family: BuildFamily,
        #[arg(long)]
        n: u64,
        /// Family parameter: beta, p, k, or the part count for turan.
        #[arg(long)]
        param: u64,
        /// Print only the graph6 string.
        #[arg(long, conflicts_with = "summary")]
        graph6: bool,
        /// Print the full summary (default).
        #[arg(long)]
        summary: bool,
    },
    /// Print the closed-form class maximum.
    Formula {
        family: FormulaFamily,
        #[arg(long)]
        n: u64,
        /// Family parameter; unused for bipartite.
        #[arg(long, default_value_t = 0)]
        param: u64,
    },
    /// Exhaustively verify one extremal characterization at order n.
    Verify {
        target: VerifyTarget,
        #[arg(long)]
        n: usize,
        /// Shard count for the scan; more than one shard runs threaded.
        #[arg(long, default_value_t = 1)]
        shards: usize,
        /// Acknowledge the long n = 8 run.
        #[arg(long)]
        large: bool,
        /// Also write the reports as a JSON envelope.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run a conjecture harness; reports support, never asserts.
    Conjecture {
        #[command(subcommand)]
        which: ConjectureCmd,
    },
    /// Evaluate closed-form sweeps and write CSV, optionally SVG.
    Sweep {
        /// Comma-separated families from beta, p, k.
        #[arg(long, value_delimiter = ',', required = true)]
        families: Vec<String>,
        /// Comma-separated orders.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<u64>,
        #[arg(long)]
        csv: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Restrict every family to this inclusive parameter range, LO,HI.
        #[arg(long)]
        range: Option<String>,
        /// Also write the rows as a JSON envelope.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Scan the split-bound inequality over its integer grid.
    ClaimGrid {
        #[arg(long, default_value_t = 300)]
        n_max: i64,
        /// Also write the scan result as a JSON envelope.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ConjectureCmd {
    /// Compare the balanced multipartite construction against brute force.
    Chromatic {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        chi: usize,
        #[arg(long, default_value_t = 1)]
        shards: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Scan the one-bridge value for monotonicity toward the balanced split.
    Bridge {
        #[arg(long, default_value_t = 200)]
        n_max: i64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

// ===== entry point =====

/// Parse arguments, dispatch, and return the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}

fn dispatch(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Compute { graph6 } => cmd_compute(&graph6),
        Command::Build {
            family,
            n,
            param,
            graph6,
            summary: _,
        } => cmd_build(family, n, param, graph6),
        Command::Formula { family, n, param } => cmd_formula(family, n, param),
        Command::Verify {
            target,
            n,
            shards,
            large,
            json,
        } => cmd_verify(target, n, shards, large, json.as_deref()),
        Command::Conjecture { which } => match which {
            ConjectureCmd::Chromatic { n, chi, shards, json } => {
                cmd_conjecture_chromatic(n, chi, shards, json.as_deref())
            }
            ConjectureCmd::Bridge { n_max, json } => cmd_conjecture_bridge(n_max, json.as_deref()),
        },
        Command::Sweep {
            families,
            n,
            csv,
            svg,
            range,
            json,
        } => cmd_sweep(&families, &n, &csv, svg.as_deref(), range.as_deref(), json.as_deref()),
        Command::ClaimGrid { n_max, json } => cmd_claim_grid(n_max, json.as_deref()),
    }
}

fn write_file(path: &Path, content: &str) -> Result<(), CliError> {
    std::fs::write(path, content)
        .map_err(|e| CliError::Io(format!("cannot write {}: {}", path.display(), e)))
}

fn write_envelope(path: &Path, command: &str, inputs: Value, results: Vec<Value>) -> Result<(), CliError> {
    let env = report::envelope(command, inputs, results);
    let text = serde_json::to_string_pretty(&env)
        .map_err(|e| CliError::Io(format!("cannot serialize report: {}", e)))?;
    write_file(path, &text)
}

// ===== subcommands =====

fn cmd_compute(text: &str) -> Result<i32, CliError> {
    let g = parse_graph6(text)?;
    println!("{:.12}", abc_index(&g));
    Ok(0)
}

fn build_graph(family: BuildFamily, n: u64, param: u64) -> Result<Graph, CliError> {
    if n > 32 {
        return Err(CliError::Capacity(format!(
            "order {} exceeds the 32-vertex capacity",
            n
        )));
    }
    let g = match family {
        BuildFamily::Independence => build_independence_extremal(n as usize, param as usize)?,
        BuildFamily::Pendant => build_pendant_extremal(n as usize, param as usize)?,
        BuildFamily::EdgeConnectivity => build_edgeconn_extremal(n as usize, param as usize)?,
        BuildFamily::Turan => build_turan(n as usize, param as usize)?,
    };
    Ok(g)
}

fn cmd_build(family: BuildFamily, n: u64, param: u64, graph6_only: bool) -> Result<i32, CliError> {
    let g = build_graph(family, n, param)?;
    let text = write_graph6(&g);
    if graph6_only {
        println!("{}", text);
        return Ok(0);
    }
    let (label, measured) = match family {
        BuildFamily::Independence => ("independence_number", independence_number(&g)),
        BuildFamily::Pendant => ("pendant_count", pendant_count(&g)),
        BuildFamily::EdgeConnectivity => ("edge_connectivity", edge_connectivity(&g)),
        BuildFamily::Turan => ("chromatic_number", chromatic_number(&g)),
    };
    println!("graph6: {}", text);
    println!("n: {}", g.n());
    println!("edges: {}", g.edge_count());
    let degrees: Vec<String> = g.degree_sequence().iter().map(|d| d.to_string()).collect();
    println!("degrees: {}", degrees.join(" "));
    println!("{}: {}", label, measured);
    println!("abc: {:.12}", abc_index(&g));
    Ok(0)
}

fn cmd_formula(family: FormulaFamily, n: u64, param: u64) -> Result<i32, CliError> {
    let value = match family {
        FormulaFamily::Independence => formula_independence(n, param)?,
        FormulaFamily::Pendant => formula_pendant(n, param)?,
        FormulaFamily::EdgeConnectivity => formula_edgeconn(n, param)?,
        FormulaFamily::Bipartite => formula_bipartite(n)?,
    };
    println!("{:.12}", value);
    Ok(0)
}

fn print_extremal_line(rep: &ExtremalReport) {
    let max = match rep.max_value {
        Some(v) => format!("{:.12}", v),
        None => String::from("none"),
    };
    let formula = match rep.formula_value {
        Some(v) => format!("{:.12}", v),
        None => String::from("none"),
    };
    let verdict = if !rep.asserted {
        "informational"
    } else if rep.unique_and_matches {
        "ok"
    } else {
        "MISMATCH"
    };
    println!(
        "{} n={} {}={}: class={} max={} formula={} maximizer_classes={} {}",
        rep.constraint.kind.label(),
        rep.n,
        param_short(rep),
        rep.constraint.value,
        rep.class_size,
        max,
        formula,
        rep.maximizer_iso_classes.len(),
        verdict
    );
}

fn param_short(rep: &ExtremalReport) -> &'static str {
    match rep.constraint.kind {
        abcmax::ParamKind::Independence => "beta",
        abcmax::ParamKind::Pendant => "p",
        abcmax::ParamKind::EdgeConnectivity => "k",
        abcmax::ParamKind::Chromatic => "chi",
    }
}

fn cmd_verify(
    target: VerifyTarget,
    n: usize,
    shards: usize,
    large: bool,
    json: Option<&Path>,
) -> Result<i32, CliError> {
    if n >= 8 && !large {
        return Err(CliError::Input(String::from(
            "order 8 scans 2^28 graphs and takes a while; pass --large to confirm",
        )));
    }
    let exec = AutoExecutor::for_shards(shards);
    let (name, reports) = match target {
        VerifyTarget::Independence => ("independence", verify_independence(n, shards, &exec)?),
        VerifyTarget::Pendant => ("pendant", verify_pendant(n, shards, &exec)?),
        VerifyTarget::EdgeConnectivity => {
            ("edge-connectivity", verify_edgeconn(n, shards, &exec)?)
        }
        VerifyTarget::Bipartite => (
            "bipartite",
            vec![verify_chromatic_bipartite(n, shards, &exec)?],
        ),
    };
    for rep in &reports {
        print_extremal_line(rep);
    }
    let asserted = reports.iter().filter(|r| r.asserted).count();
    let matched = reports
        .iter()
        .filter(|r| r.asserted && r.unique_and_matches)
        .count();
    println!("verified: {}/{} asserted classes match", matched, asserted);
    if let Some(path) = json {
        let results = reports.iter().map(report::extremal_json).collect();
        write_envelope(
            path,
            "verify",
            json!({ "target": name, "n": n, "shards": shards }),
            results,
        )?;
    }
    Ok(if matched == asserted { 0 } else { 1 })
}

fn cmd_conjecture_chromatic(
    n: usize,
    chi: usize,
    shards: usize,
    json: Option<&Path>,
) -> Result<i32, CliError> {
    let exec = AutoExecutor::for_shards(shards);
    let rep = check_chromatic_conjecture(n, chi, shards, &exec)?;
    let brute = match rep.brute_max {
        Some(v) => format!("{:.12}", v),
        None => String::from("none (empty class)"),
    };
    println!(
        "chromatic conjecture n={} chi={}: construction={:.12} brute={} witnesses={} holds={}",
        rep.n,
        rep.chi,
        rep.turan_value,
        brute,
        rep.witnesses.len(),
        if rep.holds { "yes" } else { "NO" }
    );
    for w in &rep.witnesses {
        println!("witness: {}", write_graph6(w));
    }
    if let Some(path) = json {
        write_envelope(
            path,
            "conjecture-chromatic",
            json!({ "n": n, "chi": chi, "shards": shards }),
            vec![report::conjecture_json(&rep)],
        )?;
    }
    // a conjecture harness reports; it never fails the process
    Ok(0)
}

fn print_grid(result: &GridCheckResult) {
    println!("check: {}", result.description);
    println!("domain: {}", result.domain);
    println!("points checked: {}", result.checked);
    if result.passed() {
        println!("violations: none");
    } else {
        println!("violations: {}", result.violations.len());
        for v in &result.violations {
            println!("  {} margin={:.12}", v.point, v.margin);
        }
    }
}

fn cmd_conjecture_bridge(n_max: i64, json: Option<&Path>) -> Result<i32, CliError> {
    let result = check_bridge_monotonicity(n_max);
    print_grid(&result);
    if let Some(path) = json {
        write_envelope(
            path,
            "conjecture-bridge",
            json!({ "n_max": n_max }),
            vec![report::grid_json(&result)],
        )?;
    }
    Ok(0)
}

fn parse_range(text: &str) -> Result<(u64, u64), CliError> {
    let mut parts = text.split(',');
    let bad = || CliError::Input(format!("range must be LO,HI with LO <= HI, got {:?}", text));
    let lo: u64 = parts.next().and_then(|s| s.trim().parse().ok()).ok_or_else(bad)?;
    let hi: u64 = parts.next().and_then(|s| s.trim().parse().ok()).ok_or_else(bad)?;
    if parts.next().is_some() || lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn cmd_sweep(
    family_names: &[String],
    orders: &[u64],
    csv_path: &Path,
    svg_path: Option<&Path>,
    range_text: Option<&str>,
    json: Option<&Path>,
) -> Result<i32, CliError> {
    let mut families = Vec::new();
    for name in family_names {
        match SweepFamily::from_label(name.trim()) {
            Some(f) => {
                if !families.contains(&f) {
                    families.push(f);
                }
            }
            None => {
                return Err(CliError::Input(format!(
                    "unknown family {:?}; expected beta, p, or k",
                    name
                )))
            }
        }
    }
    let range = match range_text {
        Some(t) => Some(parse_range(t)?),
        None => None,
    };
    let out = sweep(orders, &families, range).map_err(|e| CliError::Input(e.to_string()))?;
    for note in &out.notes {
        println!("note: {}", note);
    }
    write_file(csv_path, &write_csv(&out))?;
    println!("wrote {} rows to {}", out.rows.len(), csv_path.display());
    if let Some(path) = svg_path {
        let chart = render_svg(&out.rows, &ChartSpec::default())
            .map_err(|e| CliError::Input(e.to_string()))?;
        write_file(path, &chart)?;
        println!("wrote chart to {}", path.display());
    }
    if let Some(path) = json {
        let results = out.rows.iter().map(report::sweep_row_json).collect();
        write_envelope(
            path,
            "sweep",
            json!({ "families": family_names, "n": orders, "range": range_text }),
            results,
        )?;
    }
    Ok(0)
}

fn cmd_claim_grid(n_max: i64, json: Option<&Path>) -> Result<i32, CliError> {
    let result = claim_grid(n_max);
    print_grid(&result);
    if let Some(path) = json {
        write_envelope(
            path,
            "claim-grid",
            json!({ "n_max": n_max }),
            vec![report::grid_json(&result)],
        )?;
    }
    Ok(if result.passed() { 0 } else { 1 })
}
