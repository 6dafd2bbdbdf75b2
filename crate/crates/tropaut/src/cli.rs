//! The command-line interface.
//!
//! Exit status contract: 0 success, 1 usage error (malformed invocation),
//! 2 domain error (unreadable or invalid input, or an operation's
//! precondition fails), 3 bound violation found by a verification command —
//! so a CI job running `verify` fails loudly if a bound check ever fails.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs;
use std::io::Read;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tropaut_core::aut::{
    automorphism_order, automorphisms_with_cap, fixed_point_order_bound, stabilizer_order,
    CellSet, DEFAULT_ELEMENT_CAP,
};
use tropaut_core::enumeration::{refined_fixed_point_bound, enumerate_leafless, EnumSpec};
use tropaut_core::families::{
    banana, bouquet, classify_extremal, classify_fixed_point_extremal, h, h1, h2, lollipop,
};
use tropaut_core::metric::MetricGraph;
use tropaut_core::{Multigraph, Rational, VertexId};

use crate::format::{code_hex, graph_to_doc, parse_graph_json, parse_lengths, FormatError};
use crate::parallel;
use crate::render;

/// The failure modes a command can hit, keyed to their exit status.
#[derive(Debug)]
pub enum CliError {
    /// Malformed invocation: conflicting or missing flags, unparseable
    /// flag values. Exit status 1.
    Usage(String),
    /// Well-formed invocation rejected by the data or the library:
    /// unreadable file, invalid graph JSON, precondition failure.
    /// Exit status 2.
    Domain(String),
}

impl From<tropaut_core::Error> for CliError {
    fn from(e: tropaut_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::Domain(format!("{e:#}"))
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError::Usage(message.into())
}

#[derive(Parser)]
#[command(
    name = "tropaut",
    version,
    about = "Automorphism and isometry groups of multigraphs and metric graphs, \
             with exhaustive bound verification at small genus"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the automorphism group of a graph.
    Aut(AutArgs),
    /// Compute the isometry group of a metric graph.
    MetricAut(MetricAutArgs),
    /// List the bridges and cut vertices of a graph.
    Bridges(BridgesArgs),
    /// Contract an edge set (all bridges by default).
    Contract(ContractArgs),
    /// Extract the leafless core (maximum subgraph of minimum degree 2).
    Core(CoreArgs),
    /// Compute the canonical loopless model of a metric graph.
    CanonicalModel(CanonicalModelArgs),
    /// Classify a graph against the extremal families.
    Classify(ClassifyArgs),
    /// Emit a built-in family graph as JSON.
    Family(FamilyArgs),
    /// Enumerate connected leafless graphs of a given first Betti number.
    Enumerate(EnumerateArgs),
    /// Verify the order bound over an exhaustive enumeration.
    Verify(VerifyArgs),
    /// Verify the bound for one metric graph, or over random metric trials.
    VerifyMetric(VerifyMetricArgs),
    /// Check vertex stabilizers against the fixed-point bound.
    FixedPoint(FixedPointArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Banana,
    Bouquet,
    Lollipop,
    H1,
    H2,
    H,
}

impl Family {
    fn needs_genus(self) -> bool {
        matches!(self, Family::Banana | Family::Bouquet | Family::Lollipop)
    }

    fn label(self) -> &'static str {
        match self {
            Family::Banana => "banana",
            Family::Bouquet => "bouquet",
            Family::Lollipop => "lollipop",
            Family::H1 => "h1",
            Family::H2 => "h2",
            Family::H => "h",
        }
    }
}

/// Graph selection shared by the single-graph commands: a JSON file (`-` for
/// standard input) or a built-in family.
#[derive(Args)]
struct GraphInput {
    /// Graph JSON file to read; `-` reads standard input.
    input: Option<String>,
    /// Use a built-in family instead of a file.
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Genus parameter for banana, bouquet, and lollipop.
    #[arg(long)]
    g: Option<usize>,
    /// Subdivision counts for a family: one integer (uniform) or a
    /// comma-separated list with one count per edge; a count of 1 keeps the
    /// edge.
    #[arg(long)]
    counts: Option<String>,
    /// Edge lengths as a comma-separated list of positive rationals
    /// (e.g. 1,2,1/2), one per edge; overrides lengths from the file.
    #[arg(long)]
    lengths: Option<String>,
}

/// A loaded graph: combinatorial structure plus optional metric data.
struct Loaded {
    graph: Multigraph,
    lengths: Option<Vec<Rational>>,
}

impl Loaded {
    fn metric(self) -> Result<MetricGraph, CliError> {
        match self.lengths {
            Some(lengths) => Ok(MetricGraph::new(self.graph, lengths)?),
            None => Ok(MetricGraph::unit(self.graph)),
        }
    }
}

fn build_family(family: Family, g: Option<usize>) -> Result<(Multigraph, String), CliError> {
    if family.needs_genus() {
        let g = g.ok_or_else(|| {
            usage(format!("--family {} requires --g", family.label()))
        })?;
        let graph = match family {
            Family::Banana => banana(g)?,
            Family::Bouquet => bouquet(g)?,
            Family::Lollipop => lollipop(g)?,
            _ => unreachable!(),
        };
        Ok((graph, format!("{}({g})", family.label())))
    } else {
        if g.is_some() {
            return Err(usage(format!(
                "--g is not accepted with --family {}",
                family.label()
            )));
        }
        let graph = match family {
            Family::H1 => h1(),
            Family::H2 => h2(),
            Family::H => h(),
            _ => unreachable!(),
        };
        Ok((graph, family.label().to_owned()))
    }
}

fn parse_counts(spec: &str, num_edges: usize) -> Result<Vec<usize>, CliError> {
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    let values: Vec<usize> = parts
        .iter()
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| usage(format!("--counts: `{p}` is not a nonnegative integer")))
        })
        .collect::<Result<_, _>>()?;
    let counts = if values.len() == 1 {
        vec![values[0]; num_edges]
    } else if values.len() == num_edges {
        values
    } else {
        return Err(usage(format!(
            "--counts: expected 1 or {num_edges} entries, got {}",
            values.len()
        )));
    };
    if let Some(pos) = counts.iter().position(|&c| c == 0) {
        return Err(usage(format!("--counts: count for edge {pos} is 0; counts must be ≥ 1")));
    }
    Ok(counts)
}

fn parse_length_flag(spec: &str, num_edges: usize) -> Result<Vec<Rational>, CliError> {
    let entries: Vec<String> = spec.split(',').map(|p| p.trim().to_owned()).collect();
    if entries.len() != num_edges {
        return Err(usage(format!(
            "--lengths: expected {num_edges} entries (one per edge), got {}",
            entries.len()
        )));
    }
    parse_lengths(&entries).map_err(|e| usage(format!("--lengths: {e}")))
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Domain(format!("reading standard input: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Domain(format!("reading {path}: {e}")))
    }
}

impl GraphInput {
    fn load(&self) -> Result<Loaded, CliError> {
        let mut loaded = match (&self.input, self.family) {
            (Some(_), Some(_)) => {
                return Err(usage("give either an input file or --family, not both"));
            }
            (None, None) => {
                return Err(usage("an input file (or `-` for stdin) or --family is required"));
            }
            (Some(path), None) => {
                if self.g.is_some() {
                    return Err(usage("--g requires --family"));
                }
                if self.counts.is_some() {
                    return Err(usage("--counts requires --family"));
                }
                let parsed = parse_graph_json(&read_input(path)?)?;
                Loaded { graph: parsed.graph, lengths: parsed.lengths }
            }
            (None, Some(family)) => {
                let (mut graph, _name) = build_family(family, self.g)?;
                if let Some(spec) = &self.counts {
                    let counts = parse_counts(spec, graph.num_edges())?;
                    graph = graph.subdivide(&counts)?;
                }
                Loaded { graph, lengths: None }
            }
        };
        if let Some(spec) = &self.lengths {
            loaded.lengths = Some(parse_length_flag(spec, loaded.graph.num_edges())?);
        }
        Ok(loaded)
    }
}

#[derive(Args)]
struct AutArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Materialize group elements only up to this order.
    #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
    cap: usize,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct MetricAutArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Materialize group elements only up to this order.
    #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
    cap: usize,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BridgesArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ContractArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Comma-separated edge ids to contract; all bridges when omitted.
    #[arg(long)]
    edges: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CoreArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CanonicalModelArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FamilyArgs {
    /// The family to build: banana, bouquet, lollipop, h1, h2, h.
    #[arg(long, value_enum)]
    family: Family,
    /// Genus parameter for banana, bouquet, and lollipop.
    #[arg(long)]
    g: Option<usize>,
    /// Subdivision counts: one integer (uniform) or one count per edge.
    #[arg(long)]
    counts: Option<String>,
    /// Edge lengths as positive rationals, one per (subdivided) edge.
    #[arg(long)]
    lengths: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// First Betti number of the enumerated graphs.
    #[arg(long)]
    betti: usize,
    /// Largest vertex count to enumerate (at most 8).
    #[arg(long)]
    max_vertices: usize,
    /// Minimum degree: 2 (leafless) or 3 (stable).
    #[arg(long, default_value_t = 2)]
    min_degree: usize,
    /// Worker threads for canonical-code computation.
    #[arg(long)]
    jobs: Option<usize>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// First Betti number of the sweep.
    #[arg(long)]
    betti: usize,
    /// Largest vertex count to enumerate (at most 8).
    #[arg(long)]
    max_vertices: usize,
    /// Minimum degree: 2 (leafless) or 3 (stable).
    #[arg(long, default_value_t = 2)]
    min_degree: usize,
    /// Worker threads for the per-graph checks.
    #[arg(long)]
    jobs: Option<usize>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyMetricArgs {
    /// Metric graph JSON file to check; omit to run a random sweep.
    input: Option<String>,
    /// Edge lengths overriding the file's, as positive rationals.
    #[arg(long)]
    lengths: Option<String>,
    /// Genus for the random sweep mode.
    #[arg(long)]
    g: Option<usize>,
    /// Number of random trials in sweep mode (default 100).
    #[arg(long)]
    trials: Option<usize>,
    /// Seed for the random sweep (default 0).
    #[arg(long)]
    seed: Option<u64>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FixedPointArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Vertex whose stabilizer to check (single-graph mode).
    #[arg(long)]
    vertex: Option<usize>,
    /// First Betti number (sweep mode).
    #[arg(long)]
    betti: Option<usize>,
    /// Largest vertex count to enumerate (sweep mode, at most 8).
    #[arg(long)]
    max_vertices: Option<usize>,
    /// Minimum degree in sweep mode: 2 (leafless) or 3 (stable).
    #[arg(long, default_value_t = 2)]
    min_degree: usize,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

/// Parses `argv` and runs the selected command, returning the process exit
/// status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(CliError::Usage(message)) => {
            eprintln!("usage error: {message}");
            1
        }
        Err(CliError::Domain(message)) => {
            eprintln!("error: {message}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Aut(args) => cmd_aut(args),
        Command::MetricAut(args) => cmd_metric_aut(args),
        Command::Bridges(args) => cmd_bridges(args),
        Command::Contract(args) => cmd_contract(args),
        Command::Core(args) => cmd_core(args),
        Command::CanonicalModel(args) => cmd_canonical_model(args),
        Command::Classify(args) => cmd_classify(args),
        Command::Family(args) => cmd_family(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Verify(args) => cmd_verify(args),
        Command::VerifyMetric(args) => cmd_verify_metric(args),
        Command::FixedPoint(args) => cmd_fixed_point(args),
    }
}

fn emit(json_mode: bool, value: &Value, text: &str) {
    if json_mode {
        println!("{value}");
    } else {
        print!("{text}");
    }
}

fn id_list(ids: impl IntoIterator<Item = usize>) -> String {
    let parts: Vec<String> = ids.into_iter().map(|i| i.to_string()).collect();
    if parts.is_empty() {
        "(none)".to_owned()
    } else {
        parts.join(", ")
    }
}

fn cmd_aut(args: AutArgs) -> Result<i32, CliError> {
    let loaded = args.input.load()?;
    let group = automorphisms_with_cap(&loaded.graph, args.cap)?;
    emit(args.json, &render::group_to_json(&group), &render::group_to_text(&group));
    Ok(0)
}

fn cmd_metric_aut(args: MetricAutArgs) -> Result<i32, CliError> {
    let metric = args.input.load()?.metric()?;
    let group = metric.isometry_group_with_cap(args.cap)?;
    emit(
        args.json,
        &render::isometry_group_to_json(&group),
        &render::isometry_group_to_text(&group),
    );
    Ok(0)
}

fn cmd_bridges(args: BridgesArgs) -> Result<i32, CliError> {
    let graph = args.input.load()?.graph;
    let bridges: Vec<usize> = graph.bridges().into_iter().map(|e| e.0).collect();
    let cuts: Vec<usize> = graph.cut_vertices().into_iter().map(|v| v.0).collect();
    let value = json!({ "bridges": bridges, "cut_vertices": cuts });
    let text = format!(
        "bridges: {}\ncut vertices: {}\n",
        id_list(bridges.clone()),
        id_list(cuts.clone())
    );
    emit(args.json, &value, &text);
    Ok(0)
}

fn cmd_contract(args: ContractArgs) -> Result<i32, CliError> {
    let graph = args.input.load()?.graph;
    let edges: BTreeSet<tropaut_core::EdgeId> = match &args.edges {
        Some(spec) => spec
            .split(',')
            .map(str::trim)
            .map(|p| {
                p.parse::<usize>()
                    .map(tropaut_core::EdgeId)
                    .map_err(|_| usage(format!("--edges: `{p}` is not an edge id")))
            })
            .collect::<Result<_, _>>()?,
        None => graph.bridges(),
    };
    let contraction = graph.contract(&edges)?;
    let doc = graph_to_doc(&contraction.graph, None, None);
    let value = json!({
        "graph": serde_json::to_value(&doc).expect("document serialization is infallible"),
        "vertex_map": contraction.vertex_map.iter().map(|v| v.0).collect::<Vec<_>>(),
        "edge_map": contraction.edge_map.iter().map(|e| e.map(|e| e.0)).collect::<Vec<_>>(),
    });
    let mut text = format!(
        "contracted edges: {}\nresult: {} vertices, {} edges\n",
        id_list(edges.iter().map(|e| e.0)),
        contraction.graph.num_vertices(),
        contraction.graph.num_edges()
    );
    text.push_str(&format!(
        "vertex map: [{}]\n",
        contraction
            .vertex_map
            .iter()
            .map(|v| v.0.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    ));
    text.push_str(&format!(
        "edge map: [{}]\n",
        contraction
            .edge_map
            .iter()
            .map(|e| e.map_or("-".to_owned(), |e| e.0.to_string()))
            .collect::<Vec<_>>()
            .join(", ")
    ));
    emit(args.json, &value, &text);
    Ok(0)
}

fn cmd_core(args: CoreArgs) -> Result<i32, CliError> {
    let graph = args.input.load()?.graph;
    let sub = graph.leafless_core();
    let doc = graph_to_doc(&sub.graph, None, None);
    let value = json!({
        "graph": serde_json::to_value(&doc).expect("document serialization is infallible"),
        "vertices": sub.vertices.iter().map(|v| v.0).collect::<Vec<_>>(),
        "edges": sub.edges.iter().map(|e| e.0).collect::<Vec<_>>(),
    });
    let text = format!(
        "core: {} vertices, {} edges\nvertices kept: {}\nedges kept: {}\n",
        sub.graph.num_vertices(),
        sub.graph.num_edges(),
        id_list(sub.vertices.iter().map(|v| v.0)),
        id_list(sub.edges.iter().map(|e| e.0))
    );
    emit(args.json, &value, &text);
    Ok(0)
}

fn cmd_canonical_model(args: CanonicalModelArgs) -> Result<i32, CliError> {
    let metric = args.input.load()?.metric()?;
    let model = metric.canonical_model()?;
    emit(
        args.json,
        &render::canonical_model_to_json(&model),
        &render::canonical_model_to_text(&model),
    );
    Ok(0)
}

fn cmd_classify(args: ClassifyArgs) -> Result<i32, CliError> {
    let graph = args.input.load()?.graph;
    let betti = graph.betti_number();
    let order = automorphism_order(&graph)?;
    let class = classify_extremal(&graph)?;
    let value = json!({
        "betti": betti,
        "order": order,
        "class": render::extremal_class_to_json(&class),
    });
    let text = format!(
        "betti {betti}\norder {order}\nclass {}\n",
        render::extremal_class_to_text(&class)
    );
    emit(args.json, &value, &text);
    Ok(0)
}

fn cmd_family(args: FamilyArgs) -> Result<i32, CliError> {
    let (mut graph, name) = build_family(args.family, args.g)?;
    if let Some(spec) = &args.counts {
        let counts = parse_counts(spec, graph.num_edges())?;
        graph = graph.subdivide(&counts)?;
    }
    let lengths = match &args.lengths {
        Some(spec) => Some(parse_length_flag(spec, graph.num_edges())?),
        None => None,
    };
    let doc = graph_to_doc(&graph, lengths.as_deref(), Some(&name));
    if args.json {
        let value = serde_json::to_value(&doc).expect("document serialization is infallible");
        println!("{value}");
    } else {
        let mut text = format!(
            "name {name}\nvertices {}\nedges:\n",
            graph.num_vertices()
        );
        for e in graph.edges() {
            let (u, v) = graph.endpoints(e);
            text.push_str(&format!("  {}: {}-{}\n", e.0, u.0, v.0));
        }
        if let Some(ls) = &lengths {
            text.push_str(&format!(
                "lengths: {}\n",
                ls.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(", ")
            ));
        }
        print!("{text}");
    }
    Ok(0)
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<i32, CliError> {
    let spec = EnumSpec::new(args.betti, args.max_vertices, args.min_degree)?;
    let graphs = enumerate_leafless(&spec)?;
    let codes = parallel::canonical_codes(&graphs, args.jobs)?;
    if args.json {
        let rows: Vec<Value> = graphs
            .iter()
            .zip(&codes)
            .map(|(g, code)| {
                json!({
                    "code": code_hex(code),
                    "vertices": g.num_vertices(),
                    "edges": g
                        .edges()
                        .map(|e| {
                            let (u, v) = g.endpoints(e);
                            json!({ "u": u.0, "v": v.0 })
                        })
                        .collect::<Vec<_>>(),
                })
            })
            .collect();
        let value = json!({
            "spec": {
                "betti": spec.betti,
                "max_vertices": spec.max_vertices,
                "min_degree": spec.min_degree,
            },
            "count": graphs.len(),
            "graphs": rows,
        });
        println!("{value}");
    } else {
        let mut text = format!(
            "spec: betti {}, max vertices {}, min degree {}\ngraphs: {}\n",
            spec.betti,
            spec.max_vertices,
            spec.min_degree,
            graphs.len()
        );
        for (g, code) in graphs.iter().zip(&codes) {
            text.push_str(&format!(
                "{} vertices={} edges={}\n",
                code_hex(code),
                g.num_vertices(),
                g.num_edges()
            ));
        }
        print!("{text}");
    }
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, CliError> {
    let spec = EnumSpec::new(args.betti, args.max_vertices, args.min_degree)?;
    let report = parallel::verify_bound_timed(&spec, args.jobs)?;
    emit(
        args.json,
        &render::verification_report_to_json(&report),
        &render::verification_report_to_text(&report),
    );
    Ok(if report.violations.is_empty() { 0 } else { 3 })
}

fn cmd_verify_metric(args: VerifyMetricArgs) -> Result<i32, CliError> {
    match (&args.input, args.g) {
        (Some(_), Some(_)) => Err(usage("give either a metric graph file or --g, not both")),
        (None, None) => Err(usage("a metric graph file (or `-` for stdin) or --g is required")),
        (Some(path), None) => {
            if args.trials.is_some() || args.seed.is_some() {
                return Err(usage("--trials and --seed apply to sweep mode (--g)"));
            }
            let parsed = parse_graph_json(&read_input(path)?)?;
            let mut loaded =
                Loaded { graph: parsed.graph, lengths: parsed.lengths };
            if let Some(spec) = &args.lengths {
                loaded.lengths = Some(parse_length_flag(spec, loaded.graph.num_edges())?);
            }
            let metric = loaded.metric()?;
            let report = metric.verify_metric_bound()?;
            emit(
                args.json,
                &render::metric_bound_report_to_json(&report),
                &render::metric_bound_report_to_text(&report),
            );
            Ok(if report.ok { 0 } else { 3 })
        }
        (None, Some(genus)) => {
            if args.lengths.is_some() {
                return Err(usage("--lengths needs a metric graph file"));
            }
            let report = parallel::random_metric_sweep_timed(
                genus,
                args.trials.unwrap_or(100),
                args.seed.unwrap_or(0),
            )?;
            emit(
                args.json,
                &render::metric_sweep_report_to_json(&report),
                &render::metric_sweep_report_to_text(&report),
            );
            Ok(if report.violations.is_empty() { 0 } else { 3 })
        }
    }
}

fn cmd_fixed_point(args: FixedPointArgs) -> Result<i32, CliError> {
    let sweep_flags = args.betti.is_some() || args.max_vertices.is_some();
    let single_flags = args.vertex.is_some()
        || args.input.input.is_some()
        || args.input.family.is_some()
        || args.input.g.is_some()
        || args.input.counts.is_some()
        || args.input.lengths.is_some();
    if sweep_flags && single_flags {
        return Err(usage(
            "give a graph with --vertex, or sweep flags --betti/--max-vertices, not both",
        ));
    }
    if sweep_flags {
        let betti = args.betti.ok_or_else(|| usage("sweep mode requires --betti"))?;
        let max_vertices = args
            .max_vertices
            .ok_or_else(|| usage("sweep mode requires --max-vertices"))?;
        let spec = EnumSpec::new(betti, max_vertices, args.min_degree)?;
        let report = parallel::verify_fixed_point_timed(&spec)?;
        emit(
            args.json,
            &render::fixed_point_report_to_json(&report),
            &render::fixed_point_report_to_text(&report),
        );
        return Ok(if report.violations.is_empty() { 0 } else { 3 });
    }
    let vertex = args
        .vertex
        .ok_or_else(|| usage("single-graph mode requires --vertex (or use --betti/--max-vertices for a sweep)"))?;
    let graph = args.input.load()?.graph;
    let x = VertexId(vertex);
    let order = stabilizer_order(&graph, &CellSet::from_vertices([x]))?;
    let betti = graph.betti_number();
    let bound = fixed_point_order_bound(betti)?;
    let class = classify_fixed_point_extremal(&graph, x)?;
    let refined = if graph.bridges().is_empty()
        && graph.delete_vertex(x)?.graph.connected_components().len() == 1
    {
        let d = graph
            .edges()
            .filter(|&e| {
                let (u, v) = graph.endpoints(e);
                u == x || v == x
            })
            .count();
        refined_fixed_point_bound(betti, d)
    } else {
        None
    };
    let ok = order <= bound && refined.map_or(true, |r| order <= r);
    let value = json!({
        "vertex": vertex,
        "order": order,
        "bound": bound,
        "refined": refined,
        "class": render::fixed_point_class_to_json(&class),
        "ok": ok,
    });
    let refined_text =
        refined.map_or("not applicable".to_owned(), |r| r.to_string());
    let text = format!(
        "vertex {vertex}\norder {order}\nbound {bound}\nrefined {refined_text}\nclass {}\nstatus {}\n",
        class.tag(),
        if ok { "ok" } else { "VIOLATION" }
    );
    emit(args.json, &value, &text);
    Ok(if ok { 0 } else { 3 })
}
