//! Command line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use crate::graph::{inclusion_graph, SimpleGraph};
use crate::group::{construct_with_cap, order_cap_from_env, GroupError};
use crate::iso::{is_isomorphic, IsoError};
use crate::lattice::lattice_with_cap;
use crate::parse::{parse_spec, SpecError};
use crate::verify::{catalog, sweep, Instance, InstanceError, VerifyError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

const SPEC_HELP: &str = "Group specs: Z n, D n, Q8, M8, M p^3, A n, S n, SD(q,p,alpha,t), SDP2Q(p,q), \
G5(p,q,t), G6(p,q), Heis(p), joined by x for direct products (Z4xZ2). \
D n takes the order of the group: D8 is the dihedral group with 8 elements. \
The order cap defaults to 400 and is read from INCL_ORDER_CAP.";

#[derive(Debug, Parser)]
#[command(name = "incgraph", version, about = "Inclusion graphs of subgroups of finite groups", after_help = SPEC_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants of I(G) and how they compare with the classification
    Analyze {
        spec: String,
        #[arg(long)]
        json: bool,
    },
    /// Write I(G) as Graphviz or JSON
    Export {
        spec: String,
        #[arg(long, value_enum)]
        format: ExportFormat,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check the classification over the group catalog, writing JSON lines
    Sweep {
        #[arg(long)]
        max_order: u64,
        /// Theorem id to check; repeatable, all when omitted
        #[arg(long = "theorem", value_name = "ID")]
        theorems: Vec<String>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Decide whether two groups have isomorphic inclusion graphs
    Isocheck { spec1: String, spec2: String },
    /// List catalog specs up to an order
    Catalog {
        #[arg(long)]
        max_order: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Dot,
    Json,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("{0}")]
    Resource(String),
    #[error("{0}")]
    Verify(#[from] VerifyError),
    #[error("{0}")]
    Internal(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Spec(_) | CliError::Verify(_) => EXIT_INVALID,
            CliError::Resource(_) => EXIT_RESOURCE,
            CliError::Internal(_) | CliError::Io(_) => EXIT_INTERNAL,
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::OrderCapExceeded { .. } => CliError::Resource(e.to_string()),
            other => CliError::Spec(SpecError::Semantic(other)),
        }
    }
}

impl From<InstanceError> for CliError {
    fn from(e: InstanceError) -> Self {
        if e.resource_cap {
            CliError::Resource(e.message)
        } else {
            CliError::Internal(e.message)
        }
    }
}

impl From<IsoError> for CliError {
    fn from(e: IsoError) -> Self {
        match e {
            IsoError::VertexLimitExceeded { .. } => CliError::Resource(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

/// Parses arguments, runs the command and returns the exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_INVALID;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    match run(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run(command: &Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Analyze { spec, json } => cmd_analyze(spec, *json, out),
        Command::Export { spec, format, output } => cmd_export(spec, *format, output),
        Command::Sweep {
            max_order,
            theorems,
            output,
        } => cmd_sweep(*max_order, theorems, output, out),
        Command::Isocheck { spec1, spec2 } => cmd_isocheck(spec1, spec2, out),
        Command::Catalog { max_order } => cmd_catalog(*max_order, out),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn distance(d: Option<usize>) -> String {
    d.map_or("inf".to_string(), |d| d.to_string())
}

pub fn cmd_analyze(text: &str, as_json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let spec = parse_spec(text)?;
    let inst = Instance::build(&spec, order_cap_from_env())?;
    let mismatches = inst.profile.as_ref().map(|p| p.mismatches(&inst.report)).unwrap_or_default();
    let code = if mismatches.is_empty() { EXIT_OK } else { EXIT_MISMATCH };

    if as_json {
        let expected = match &inst.profile {
            Ok(p) => p.to_json(),
            Err(e) => json!({"error": e.to_string()}),
        };
        let m: Vec<_> = mismatches
            .iter()
            .map(|m| json!({"theorem": m.theorem, "expected": m.expected, "observed": m.observed}))
            .collect();
        let record = json!({
            "spec": spec.to_string(),
            "order": inst.order(),
            "class": format!("{:?}", inst.class),
            "subgroups": inst.lattice.len(),
            "lattice_height": inst.lattice.height(),
            "report": inst.report.to_json(),
            "expected": expected,
            "mismatches": m,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&record).expect("serializable"))?;
        return Ok(code);
    }

    let r = &inst.report;
    writeln!(out, "group: {} (order {})", spec, inst.order())?;
    writeln!(out, "class: {:?}", inst.class)?;
    writeln!(out, "subgroups: {}, lattice height {}", inst.lattice.len(), inst.lattice.height())?;
    writeln!(out, "vertices: {}", r.n_vertices)?;
    writeln!(out, "edges: {}", r.n_edges)?;
    writeln!(out, "connected: {} ({} components)", yes_no(r.connected), r.n_components)?;
    writeln!(out, "diameter: {}", distance(r.diameter))?;
    writeln!(out, "girth: {}", distance(r.girth))?;
    writeln!(out, "bipartite: {}", yes_no(r.bipartite))?;
    writeln!(out, "max degree: {}", r.max_degree)?;
    writeln!(out, "clique number: {}", r.clique_number)?;
    writeln!(out, "chromatic number: {}", r.chromatic_number)?;
    writeln!(out, "shape: {}", r.shape)?;
    writeln!(out, "claw-free: {}", yes_no(r.claw_free))?;
    writeln!(out, "planar: {}", yes_no(r.planar))?;
    match &inst.profile {
        Ok(p) if p.predictions.is_empty() => {
            for note in &p.notes {
                writeln!(out, "note: {note}")?;
            }
        }
        Ok(p) => {
            writeln!(out, "predictions: {} checked, {} mismatched", p.predictions.len(), mismatches.len())?;
            for pred in &p.predictions {
                let status = if pred.fact.holds(r) { "ok" } else { "MISMATCH" };
                write!(out, "  {status:8} {}: {}", pred.theorem, pred.fact)?;
                if !pred.fact.holds(r) {
                    write!(out, " (observed {})", pred.fact.observed(r))?;
                }
                writeln!(out)?;
            }
            for note in &p.notes {
                writeln!(out, "note: {note}")?;
            }
        }
        Err(e) => writeln!(out, "predictions: none ({e})")?,
    }
    Ok(code)
}

fn graph_of(text: &str) -> Result<(String, SimpleGraph), CliError> {
    let spec = parse_spec(text)?;
    let cap = order_cap_from_env();
    let g = construct_with_cap(&spec, cap)?;
    let lat = lattice_with_cap(&g, cap)?;
    Ok((spec.to_string(), inclusion_graph(&lat)))
}

pub fn cmd_export(text: &str, format: ExportFormat, path: &PathBuf) -> Result<i32, CliError> {
    let (name, graph) = graph_of(text)?;
    let body = match format {
        ExportFormat::Dot => graph.to_dot(&format!("I({name})")),
        ExportFormat::Json => format!("{}\n", graph.to_json()),
    };
    std::fs::write(path, body)?;
    Ok(EXIT_OK)
}

pub fn cmd_sweep(max_order: u64, theorems: &[String], path: &PathBuf, out: &mut dyn Write) -> Result<i32, CliError> {
    let result = sweep(max_order, theorems, order_cap_from_env())?;
    std::fs::write(path, result.to_jsonl())?;
    for r in &result.results {
        let verdict = if r.passed() { "PASS" } else { "FAIL" };
        write!(out, "{verdict} {} ({} checks)", r.theorem_id, r.instances_tested)?;
        if !r.passed() {
            let specs: Vec<&str> = r.counterexamples.iter().map(|c| c.spec.as_str()).collect();
            write!(out, " counterexamples: {}", specs.join(", "))?;
        }
        writeln!(out)?;
    }
    writeln!(out, "instances: {}", result.instance_lines.len())?;
    writeln!(out, "sha256: {}", result.digest)?;
    Ok(if result.any_failed() {
        EXIT_MISMATCH
    } else if result.resource_capped() {
        EXIT_RESOURCE
    } else {
        EXIT_OK
    })
}

pub fn cmd_isocheck(a: &str, b: &str, out: &mut dyn Write) -> Result<i32, CliError> {
    let (name_a, ga) = graph_of(a)?;
    let (name_b, gb) = graph_of(b)?;
    match is_isomorphic(&ga, &gb)? {
        Some(map) => {
            writeln!(out, "isomorphic: I({name_a}) ~ I({name_b}) ({} vertices, {} edges)", ga.n_vertices(), ga.n_edges())?;
            for (v, &w) in map.iter().enumerate() {
                writeln!(out, "  {} -> {}", ga.labels()[v], gb.labels()[w])?;
            }
        }
        None => writeln!(out, "not isomorphic: I({name_a}), I({name_b})")?,
    }
    Ok(EXIT_OK)
}

pub fn cmd_catalog(max_order: u64, out: &mut dyn Write) -> Result<i32, CliError> {
    for spec in catalog(max_order) {
        writeln!(out, "{}\t{}", spec.order().unwrap_or(0), spec)?;
    }
    Ok(EXIT_OK)
}
