//! Command-line surface. Every command yields an exit status and a JSON
//! payload; diagnostics go to standard error.
//!
//! Exit statuses: 0 success, 1 a hypothesis or verification fails, 2 bad
//! input or too small a radius, 3 internal inconsistency.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::engine::{check_extraction_conditions, run_observed, ExtractionReport, RunState};
use crate::error::{Error, Result};
use crate::extension::{finite_hamilton, verify_certificate, HamiltonCertificate};
use crate::generators;
use crate::graph::{EdgeSet, FiniteGraph};
use crate::io;
use crate::predicates;
use crate::presentation::{self, GraphPresentation, PRESETS};

#[derive(Debug, Parser)]
#[command(
    name = "clawham",
    version,
    about = "Hamilton cycles in locally connected claw-free graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate claw-freeness, local connectivity, 2-connectivity and chordality.
    Check {
        /// Graph file (JSON or edge list); standard input when omitted or `-`.
        graph: Option<PathBuf>,
    },
    /// Build a Hamilton cycle with a replayable certificate.
    Hamilton {
        graph: Option<PathBuf>,
        #[arg(long)]
        certificate_out: Option<PathBuf>,
    },
    /// Replay a certificate against a graph.
    VerifyCertificate {
        certificate: PathBuf,
        graph: Option<PathBuf>,
    },
    /// Work with infinite presentations.
    #[command(subcommand)]
    Infinite(Infinite),
    /// Emit a graph from a named family or a preset ball.
    Gen(GenArgs),
}

#[derive(Debug, Subcommand)]
pub enum Infinite {
    /// Build the cycle sequence on a ball and check the extraction conditions.
    Run(RunArgs),
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long)]
    pub preset: String,
    #[arg(long, default_value_t = 3)]
    pub rounds: usize,
    /// Ball radius; the preset's default when omitted.
    #[arg(long)]
    pub radius: Option<usize>,
    /// Write one JSON record per cycle of the sequence.
    #[arg(long)]
    pub log_out: Option<PathBuf>,
    /// Write the stable edge set as DOT.
    #[arg(long)]
    pub dot_out: Option<PathBuf>,
    /// Offsets of the custom circulant oracle, e.g. `1,2,3`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub offsets: Option<Vec<i64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Edges,
    Dot,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// A family (path, cycle, complete, star, wheel, ladder, octahedron,
    /// petersen, cube, diamond, bowtie) or a preset name.
    pub family: String,
    #[arg(long, default_value_t = 6)]
    pub size: usize,
    /// Take this power of the graph.
    #[arg(long)]
    pub power: Option<usize>,
    /// Take the line graph this many times (once when given bare).
    #[arg(long, num_args = 0..=1, default_value_t = 0, default_missing_value = "1")]
    pub line: usize,
    /// Ball radius for presets.
    #[arg(long)]
    pub radius: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

/// What a command produced.
#[derive(Debug)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn json(status: i32, payload: &Value) -> Self {
        Outcome {
            status,
            stdout: format!(
                "{}\n",
                serde_json::to_string_pretty(payload).expect("payloads serialise")
            ),
            stderr: String::new(),
        }
    }

    fn text(text: String) -> Self {
        Outcome {
            status: 0,
            stdout: text,
            stderr: String::new(),
        }
    }

    fn from_error(err: Error) -> Self {
        let (status, payload) = match &err {
            Error::Predicate { predicate, report } => {
                (1, json!({"ok": false, "predicate": predicate, "report": report}))
            }
            Error::Domain(m) => (2, json!({"ok": false, "error": "domain", "message": m})),
            Error::Parse(m) => (2, json!({"ok": false, "error": "parse", "message": m})),
            Error::RadiusTooSmall {
                radius,
                suggested,
                reason,
            } => (
                2,
                json!({"ok": false, "error": "radius_too_small", "radius": radius, "suggested_radius": suggested, "reason": reason}),
            ),
            Error::Internal { message, witness } => (
                3,
                json!({"ok": false, "error": "internal", "message": message, "witness": witness}),
            ),
            Error::Progress { uncovered } => (3, json!({"ok": false, "error": "progress", "witness": uncovered})),
        };
        let mut out = Outcome::json(status, &payload);
        out.stderr = format!("error: {err}\n");
        out
    }
}

fn read_source(path: Option<&Path>, stdin: &mut dyn Read) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).map_err(|e| Error::Parse(format!("cannot read {}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Error::Parse(format!("cannot read standard input: {e}")))?;
            Ok(s)
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::domain(format!("cannot write {}: {e}", path.display())))
}

fn read_graph(path: Option<&Path>, stdin: &mut dyn Read) -> Result<FiniteGraph> {
    io::parse_graph(&read_source(path, stdin)?)
}

pub fn cmd_check(g: &FiniteGraph) -> Result<Outcome> {
    let two = predicates::is_two_connected(g)?;
    let claw = predicates::is_claw_free(g);
    let local = predicates::is_locally_connected(g);
    let chordal = predicates::is_chordal(g);
    let status = if claw.holds && local.holds && two.holds { 0 } else { 1 };
    Ok(Outcome::json(
        status,
        &json!({
            "claw_free": claw,
            "locally_connected": local,
            "two_connected": two,
            "chordal": chordal,
        }),
    ))
}

pub fn cmd_hamilton(g: &FiniteGraph, certificate_out: Option<&Path>) -> Result<Outcome> {
    let cert = finite_hamilton(g)?;
    let text = serde_json::to_string_pretty(&cert).expect("certificates serialise");
    if let Some(p) = certificate_out {
        write_file(p, &format!("{text}\n"))?;
    }
    Ok(Outcome::json(
        0,
        &serde_json::to_value(&cert).expect("certificates serialise"),
    ))
}

pub fn cmd_verify(cert_text: &str, g: &FiniteGraph) -> Result<Outcome> {
    let cert: HamiltonCertificate =
        serde_json::from_str(cert_text).map_err(|e| Error::Parse(format!("certificate: {e}")))?;
    let verdict = verify_certificate(g, &cert);
    let status = if verdict.ok { 0 } else { 1 };
    Ok(Outcome::json(
        status,
        &serde_json::to_value(&verdict).expect("verdicts serialise"),
    ))
}

fn presentation_for(name: &str, offsets: Option<&[i64]>, radius: Option<usize>) -> Result<GraphPresentation> {
    let pres = match (name, offsets) {
        ("custom-oracle", Some(o)) => presentation::preset_with_offsets(o)?,
        (_, Some(_)) => return Err(Error::domain("--offsets applies to custom-oracle only")),
        _ => presentation::preset(name)?,
    };
    Ok(match radius {
        Some(r) => pres.with_radius(r),
        None => pres,
    })
}

fn extraction_payload(report: &ExtractionReport) -> Value {
    json!({
        "all_pass": report.all_pass(),
        "conditions": report.conditions(),
        "stable_degree": report.stable_degree,
        "separator_nesting": report.separator_nesting,
        "chains": report.chains.iter().map(|c| json!({
            "proxy_size": c.proxy.len(),
            "parts": c.parts,
            "ambiguous": c.ambiguous,
            "contains_proxy": c.contains_proxy,
            "nested": c.nested,
            "recedes": c.recedes,
        })).collect::<Vec<_>>(),
        "stable_vertices": report.stable_vertices.len(),
        "stable_edges": report.stable_edges.len(),
        "signature": {
            "paths": report.signature.paths.len(),
            "expected": report.signature.expected,
            "all_paths": report.signature.all_paths,
            "holds": report.signature.holds(),
        },
    })
}

fn stable_dot(state: &RunState, report: &ExtractionReport) -> String {
    let last = state.cycles.last().expect("a run has C_0").edges();
    let unstable: EdgeSet = last.difference(&report.stable_edges).copied().collect();
    io::to_dot_styled(
        &state.graph,
        &state.name,
        |v| state.labels[v].to_string(),
        &report.stable_edges,
        &unstable,
    )
}

pub fn cmd_infinite(args: &RunArgs) -> Result<Outcome> {
    let pres = presentation_for(&args.preset, args.offsets.as_deref(), args.radius)?;
    let mut log = String::new();
    let state = run_observed(&pres, args.rounds, |state, i| {
        log.push_str(&state.log_record(i).to_string());
        log.push('\n');
        Ok(())
    })?;
    if let Some(p) = &args.log_out {
        write_file(p, &log)?;
    }
    let report = if state.rounds.len() >= 2 {
        Some(check_extraction_conditions(&state)?)
    } else {
        None
    };
    if let (Some(p), Some(r)) = (&args.dot_out, &report) {
        write_file(p, &stable_dot(&state, r))?;
    }
    let conclusions = state.rounds.iter().all(|r| r.conclusions.holds());
    let pass = conclusions && report.as_ref().is_none_or(ExtractionReport::all_pass);
    let payload = json!({
        "ok": pass,
        "preset": state.name,
        "radius": state.radius,
        "rounds": state.rounds.len(),
        "k": state.ks(),
        "cycle_lengths": state.cycles.iter().map(|c| c.len()).collect::<Vec<_>>(),
        "tuple_checks": state.rounds.iter().map(|r| r.tuple_checks).sum::<usize>(),
        "cut_lemma_conclusions_hold": conclusions,
        "extraction": report.as_ref().map(extraction_payload),
        "log": args.log_out.as_ref().map(|p| p.display().to_string()),
    });
    Ok(Outcome::json(if pass { 0 } else { 3 }, &payload))
}

fn family(name: &str, n: usize) -> Result<FiniteGraph> {
    let need = |min: usize| {
        if n < min {
            Err(Error::domain(format!("{name} needs --size at least {min}")))
        } else {
            Ok(())
        }
    };
    Ok(match name {
        "path" => {
            need(1)?;
            generators::path(n)
        }
        "cycle" => {
            need(3)?;
            generators::cycle(n)
        }
        "complete" => {
            need(1)?;
            generators::complete(n)
        }
        "star" => generators::star(n),
        "wheel" => {
            need(3)?;
            generators::wheel(n)
        }
        "ladder" => {
            need(1)?;
            generators::ladder(n)
        }
        "octahedron" => generators::octahedron(),
        "petersen" => generators::petersen(),
        "cube" => generators::cube(),
        "diamond" => generators::diamond(),
        "bowtie" => generators::bowtie(),
        other => return Err(Error::domain(format!("unknown family {other}"))),
    })
}

pub fn cmd_gen(args: &GenArgs) -> Result<Outcome> {
    let (mut g, labels) = if PRESETS.contains(&args.family.as_str()) {
        let ball = presentation_for(&args.family, None, args.radius)?.ball()?;
        (ball.graph, Some(ball.labels))
    } else {
        (family(&args.family, args.size)?, None)
    };
    if let Some(k) = args.power {
        g = generators::graph_power(&g, k)?;
    }
    let mut labels = labels;
    for _ in 0..args.line {
        g = generators::line_graph(&g)?.graph;
        labels = None;
    }
    let text = match args.format {
        Format::Json => format!("{}\n", io::to_json(&g)),
        Format::Edges => io::to_edge_list(&g),
        Format::Dot => match &labels {
            Some(l) => io::to_dot_styled(&g, &args.family, |v| l[v].to_string(), &EdgeSet::new(), &EdgeSet::new()),
            None => io::to_dot(&g, &args.family),
        },
    };
    Ok(Outcome::text(text))
}

/// Runs one parsed command with `stdin` as standard input.
pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    let result = match &cli.command {
        Command::Check { graph } => read_graph(graph.as_deref(), stdin).and_then(|g| cmd_check(&g)),
        Command::Hamilton { graph, certificate_out } => {
            read_graph(graph.as_deref(), stdin).and_then(|g| cmd_hamilton(&g, certificate_out.as_deref()))
        }
        Command::VerifyCertificate { certificate, graph } => read_source(Some(certificate), stdin)
            .and_then(|cert| Ok((cert, read_graph(graph.as_deref(), stdin)?)))
            .and_then(|(cert, g)| cmd_verify(&cert, &g)),
        Command::Infinite(Infinite::Run(args)) => cmd_infinite(args),
        Command::Gen(args) => cmd_gen(args),
    };
    result.unwrap_or_else(Outcome::from_error)
}

/// Parses `args`, runs the command and writes its output; returns the exit
/// status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return status;
        }
    };
    let out = execute(&cli, &mut std::io::stdin().lock());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    out.status
}
