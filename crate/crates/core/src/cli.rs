//! The `fum` command-line tool.
//!
//! Exit codes: 0 on success or a passing check, 1 when a check fails, a
//! graph is not colorable within the budget, a search hits its limits or
//! finds a counterexample, 2 on unusable input (including graphs outside
//! the hypothesis), 3 when the constructive algorithm or the solver breaks
//! its own contract.

use std::ffi::OsString;
use std::fmt::Debug;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::coloring::{
    compute_xset, verify_fum, verify_lemma_contract, Color, Coloring, FaceScope, PathError,
    PrecoloredPath, VerificationReport, XMode,
};
use crate::constructive::{extend_precoloring, fum_color_star_forest, ConstructError};
use crate::format::{self, Format, FormatError, GraphDocument};
use crate::instances::enumerate::{enumerate_small, enumerate_subcubic, MAX_VERTICES};
use crate::instances::filter::HypothesisFilter;
use crate::instances::planar_code::write_planar_code;
use crate::instances::random::{random_batch, RandomModel};
use crate::instances::search::{default_search_limits, search_counterexamples, SearchConfig};
use crate::plane_graph::{BoundaryClass, PlaneGraph};
use crate::solver::{chi_fum, ChiValue, Limits, SolverError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Environment variable naming a directory for relative report paths.
pub const REPORT_DIR_VAR: &str = "FUM_REPORT_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "fum",
    version,
    about = "Facial unique-maximum colorings of plane graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the embedding and report its invariants.
    Validate { file: PathBuf },
    /// List the faces with their boundary walks.
    Faces { file: PathBuf },
    /// Check the coloring stored in the document.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        scope: ScopeArg,
        /// Check the precoloring-extension contract instead (palette 1..4,
        /// color 4 off the outer face, precolored vertices kept).
        #[arg(long)]
        lemma: bool,
        /// Use these colors (comma separated) instead of the stored coloring.
        #[arg(long, value_delimiter = ',')]
        coloring: Option<Vec<Color>>,
    },
    /// Compute χ_fum exactly with the backtracking solver.
    Solve {
        file: PathBuf,
        #[arg(long)]
        kmax: Color,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Color with the constructive algorithm and print the colored document.
    Color {
        file: PathBuf,
        /// Precolored outer path `v:c,v:c`; switches to precoloring extension.
        #[arg(long)]
        precolor: Option<String>,
        /// Print the applied reductions.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "text")]
        to: Format,
    },
    /// Look for graphs whose χ_fum exceeds a threshold.
    Search(SearchArgs),
    /// Convert between formats; `-` writes to standard output.
    Convert {
        input: PathBuf,
        output: PathBuf,
        #[arg(long, value_enum)]
        to: Format,
    },
    /// Graphviz rendering of the graph and its stored coloring.
    ExportDot { file: PathBuf },
    /// Generate seeded random plane graphs.
    Generate {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "star-forest")]
        model: ModelArg,
        /// Edge deletion probability for `minus-edges`.
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, value_enum, default_value = "text")]
        to: Format,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScopeArg {
    All,
    Internal,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModelArg {
    Triangulation,
    MinusEdges,
    StarForest,
}

#[derive(Debug, Args)]
struct LimitArgs {
    /// Search-node budget.
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Wall-clock budget in milliseconds.
    #[arg(long)]
    timeout_ms: Option<u64>,
}

impl LimitArgs {
    fn apply(&self, mut limits: Limits) -> Limits {
        if let Some(n) = self.max_nodes {
            limits.max_nodes = n;
        }
        if let Some(ms) = self.timeout_ms {
            limits.max_time = Some(Duration::from_millis(ms));
        }
        limits
    }
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// A graph file, `enum:N`, `subcubic:N` or `random:COUNT:N`.
    source: String,
    #[arg(long, value_enum, default_value = "all")]
    filter: HypothesisFilter,
    #[arg(long)]
    threshold: Color,
    /// JSON-lines report path (relative paths honor FUM_REPORT_DIR).
    #[arg(long)]
    report: Option<PathBuf>,
    /// Witness colorings, one `id colors...` line per graph.
    #[arg(long)]
    witnesses: Option<PathBuf>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Seed for `random:` sources.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value = "star-forest")]
    model: ModelArg,
    /// Keep wall-clock times in the report (makes it nondeterministic).
    #[arg(long)]
    timing: bool,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("{0}")]
    Usage(String),
}

/// The leading identifier of a value's debug form, i.e. its variant name.
fn variant<T: Debug>(value: &T) -> String {
    format!("{value:?}")
        .chars()
        .take_while(|c| c.is_alphanumeric() || *c == '_')
        .collect()
}

impl CliError {
    fn name(&self) -> String {
        match self {
            CliError::Io { .. } => "Io".to_string(),
            CliError::Format(FormatError::Graph(e)) => variant(e),
            CliError::Format(FormatError::Coloring(e))
            | CliError::Solver(SolverError::Coloring(e)) => variant(e),
            CliError::Format(FormatError::Path(e)) | CliError::Path(e) => variant(e),
            CliError::Format(FormatError::PlanarCode(e)) => variant(e),
            CliError::Format(FormatError::Json(_)) => "Json".to_string(),
            CliError::Format(e) => variant(e),
            CliError::Construct(ConstructError::InvalidPrecoloring(e))
            | CliError::Solver(SolverError::Path(e)) => variant(e),
            CliError::Construct(ConstructError::Coloring(e)) => variant(e),
            CliError::Construct(e) => variant(e),
            CliError::Solver(e) => variant(e),
            CliError::Usage(_) => "Usage".to_string(),
        }
    }

    fn exit_code(&self) -> i32 {
        match self {
            CliError::Construct(
                ConstructError::TransferFailed { .. }
                | ConstructError::ChildContractFailure { .. }
                | ConstructError::InternalCaseExhaustion { .. },
            )
            | CliError::Solver(SolverError::UnsoundWitness(_)) => EXIT_INTERNAL,
            _ => EXIT_INPUT,
        }
    }
}

type CliResult = Result<i32, CliError>;

/// Runs the tool on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let stream: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(stream, "{}", e.render());
            return code;
        }
    };
    let result = dispatch(cli.command, out, err);
    let _ = out.flush();
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", e.name());
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    match command {
        Command::Validate { file } => validate(&file, out),
        Command::Faces { file } => faces(&file, out),
        Command::Verify {
            file,
            scope,
            lemma,
            coloring,
        } => verify(&file, scope, lemma, coloring, out),
        Command::Solve { file, kmax, limits } => {
            solve(&file, kmax, limits.apply(Limits::default()), out)
        }
        Command::Color {
            file,
            precolor,
            trace,
            to,
        } => color(&file, precolor.as_deref(), trace, to, out, err),
        Command::Search(args) => search(&args, out, err),
        Command::Convert { input, output, to } => convert(&input, &output, to, out),
        Command::ExportDot { file } => {
            let doc = read_one(&file)?;
            emit(
                out,
                format::export_dot(&doc.graph, doc.coloring.as_ref()).as_bytes(),
            )?;
            Ok(EXIT_OK)
        }
        Command::Generate {
            seed,
            n,
            model,
            p,
            count,
            to,
        } => generate(seed, n, model, p, count, to, out),
    }
}

fn io_error(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

fn read_input(path: &Path) -> Result<Vec<u8>, CliError> {
    if path == Path::new("-") {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf).map_err(io_error(path))?;
        return Ok(buf);
    }
    std::fs::read(path).map_err(io_error(path))
}

fn read_one(path: &Path) -> Result<GraphDocument, CliError> {
    Ok(format::read_document(&read_input(path)?)?)
}

fn emit(out: &mut dyn Write, bytes: &[u8]) -> Result<(), CliError> {
    out.write_all(bytes)
        .map_err(io_error(Path::new("<stdout>")))
}

fn write_output(path: &Path, bytes: &[u8], out: &mut dyn Write) -> Result<(), CliError> {
    if path == Path::new("-") {
        return emit(out, bytes);
    }
    std::fs::write(path, bytes).map_err(io_error(path))
}

macro_rules! say {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).map_err(io_error(Path::new("<stdout>")))?
    };
}

fn join(items: impl IntoIterator<Item = impl ToString>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn validate(file: &Path, out: &mut dyn Write) -> CliResult {
    let docs = format::read_documents(&read_input(file)?)?;
    let mut all_ok = true;
    for (i, doc) in docs.iter().enumerate() {
        let g = &doc.graph;
        let f = g.faces().len();
        let c = g.component_count();
        let euler = g.n() == 0 || g.n() + f == g.m() + 1 + c;
        let darts: usize = g.faces().faces().iter().map(|face| face.walk_len()).sum();
        let handshake = darts == 2 * g.m();
        all_ok &= euler && handshake;
        let verdict = |ok: bool| if ok { "ok" } else { "FAILED" };
        say!(
            out,
            "graph {i}: n={} m={} faces={f} components={c} max_degree={}",
            g.n(),
            g.m(),
            g.max_degree()
        );
        say!(out, "  euler: {}", verdict(euler));
        say!(out, "  face lengths sum to 2m: {}", verdict(handshake));
        say!(out, "  outer face: {}", join(g.outer_vertices()));
        let boundary = match g.classify_boundary() {
            BoundaryClass::Cycle(cycle) => format!("cycle {}", join(cycle)),
            BoundaryClass::WalkWithCutVertex(v) => format!("walk with cut vertex {v}"),
            BoundaryClass::NoInternalFaces => "no internal faces".to_string(),
            BoundaryClass::Disconnected(parts) => format!("{} components", parts.len()),
        };
        say!(out, "  boundary: {boundary}");
        let x = compute_xset(g, &PrecoloredPath::empty(), XMode::Theorem);
        say!(
            out,
            "  degree>=4 vertices: [{}] inducing {:?}",
            join(&x.members),
            x.class()
        );
    }
    Ok(if all_ok { EXIT_OK } else { EXIT_FAIL })
}

fn faces(file: &Path, out: &mut dyn Write) -> CliResult {
    let doc = read_one(file)?;
    let g = &doc.graph;
    for (i, face) in g.faces().faces().iter().enumerate() {
        let tag = if g.faces().is_outer(i) { " outer" } else { "" };
        say!(out, "face {i}{tag} length {}", face.walk_len());
        for walk in face.walks() {
            say!(out, "  walk {}", join(walk.iter().map(|d| d.tail)));
        }
        let isolated: Vec<_> = face
            .vertices()
            .iter()
            .filter(|&&v| g.degree(v) == 0)
            .collect();
        if !isolated.is_empty() {
            say!(out, "  isolated {}", join(isolated));
        }
    }
    Ok(EXIT_OK)
}

fn print_report(report: &VerificationReport, out: &mut dyn Write) -> Result<(), CliError> {
    if let Some((u, v)) = report.conflict {
        say!(out, "improper: edge {u} {v} has equal colors");
    }
    for f in report.failing_faces() {
        let tag = if f.outer { " (outer)" } else { "" };
        say!(
            out,
            "face {}{tag}: max color {} attained by {}",
            f.face,
            f.max,
            join(&f.attaining)
        );
    }
    if !report.palette_violations.is_empty() {
        say!(out, "outside palette: {}", join(&report.palette_violations));
    }
    if !report.outer_reserved.is_empty() {
        say!(
            out,
            "color 4 on the outer face: {}",
            join(&report.outer_reserved)
        );
    }
    if !report.precoloring_mismatches.is_empty() {
        say!(
            out,
            "precoloring changed at: {}",
            join(&report.precoloring_mismatches)
        );
    }
    say!(
        out,
        "{} ({} faces checked)",
        if report.passed() { "PASS" } else { "FAIL" },
        report.faces.len()
    );
    Ok(())
}

fn verify(
    file: &Path,
    scope: ScopeArg,
    lemma: bool,
    colors: Option<Vec<Color>>,
    out: &mut dyn Write,
) -> CliResult {
    let doc = read_one(file)?;
    let g = &doc.graph;
    let coloring = match colors {
        Some(c) => Some(Coloring::new(c).map_err(FormatError::from)?),
        None => doc.coloring,
    };
    let Some(coloring) = coloring else {
        return Err(CliError::Usage("the document has no coloring".to_string()));
    };
    if coloring.len() != g.n() {
        return Err(
            FormatError::from(crate::coloring::ColoringError::PartialColoring {
                expected: g.n(),
                got: coloring.len(),
            })
            .into(),
        );
    }
    let report = if lemma {
        let p = doc.precolored.unwrap_or_default();
        p.check_on(g)?;
        verify_lemma_contract(g, &p, &coloring).map_err(FormatError::from)?
    } else {
        let scope = match scope {
            ScopeArg::All => FaceScope::All,
            ScopeArg::Internal => FaceScope::Internal,
        };
        verify_fum(g, &coloring, scope).map_err(FormatError::from)?
    };
    print_report(&report, out)?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAIL })
}

fn solve(file: &Path, kmax: Color, limits: Limits, out: &mut dyn Write) -> CliResult {
    let doc = read_one(file)?;
    let result = chi_fum(&doc.graph, kmax, &limits)?;
    let code = match &result.value {
        ChiValue::Exact { value, witness } => {
            say!(out, "chi_fum = {value}");
            say!(out, "witness {witness}");
            EXIT_OK
        }
        ChiValue::Exceeds { k_max } => {
            say!(out, "chi_fum > {k_max}");
            EXIT_FAIL
        }
        ChiValue::Unknown { at } => {
            say!(out, "unknown: limits reached while trying {at} colors");
            EXIT_FAIL
        }
    };
    say!(out, "nodes {}", result.stats.nodes);
    Ok(code)
}

fn parse_precolor(spec: &str) -> Result<PrecoloredPath, CliError> {
    let bad = || CliError::Usage(format!("bad --precolor {spec:?}; expected v:c,v:c"));
    let entries = spec
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|item| {
            let (v, c) = item.split_once(':').ok_or_else(bad)?;
            Ok((
                v.trim().parse().map_err(|_| bad())?,
                c.trim().parse().map_err(|_| bad())?,
            ))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(PrecoloredPath::new(entries)?)
}

fn color(
    file: &Path,
    precolor: Option<&str>,
    trace: bool,
    to: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult {
    let doc = read_one(file)?;
    let precolored = match precolor {
        Some(spec) => Some(parse_precolor(spec)?),
        None => doc.precolored,
    };
    let outcome = match &precolored {
        Some(p) => extend_precoloring(&doc.graph, p)?,
        None => fum_color_star_forest(&doc.graph)?,
    };
    let trace_text = outcome.trace.to_string();
    let colored = GraphDocument {
        graph: doc.graph,
        coloring: Some(outcome.coloring),
        precolored,
    };
    if trace && to == Format::Text {
        for line in trace_text.lines() {
            say!(out, "# {line}");
        }
    } else if trace {
        err.write_all(trace_text.as_bytes())
            .map_err(io_error(Path::new("<stderr>")))?;
    }
    emit(out, &format::write_document(&colored, to)?)?;
    Ok(EXIT_OK)
}

fn model(arg: ModelArg, p: f64) -> RandomModel {
    match arg {
        ModelArg::Triangulation => RandomModel::Triangulation,
        ModelArg::MinusEdges => RandomModel::TriangulationMinusRandomEdges(p),
        ModelArg::StarForest => RandomModel::StarForestX,
    }
}

fn search_source(args: &SearchArgs) -> Result<Vec<PlaneGraph>, CliError> {
    let number = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| CliError::Usage(format!("bad number {s:?} in source")))
    };
    let parts: Vec<&str> = args.source.split(':').collect();
    match parts[..] {
        ["enum", n] => {
            let n = number(n)?;
            if n > MAX_VERTICES {
                return Err(CliError::Usage(format!(
                    "enum: is limited to {MAX_VERTICES} vertices"
                )));
            }
            Ok(enumerate_small(n))
        }
        ["subcubic", n] => Ok(enumerate_subcubic(number(n)?)),
        ["random", count, n] => {
            let seed = args
                .seed
                .ok_or_else(|| CliError::Usage("random sources need --seed".to_string()))?;
            let n = number(n)?;
            Ok(random_batch(
                seed,
                number(count)?,
                n,
                n,
                model(args.model, 0.3),
            ))
        }
        _ => {
            let docs = format::read_documents(&read_input(Path::new(&args.source))?)?;
            Ok(docs.into_iter().map(|d| d.graph).collect())
        }
    }
}

fn report_path(path: &Path) -> PathBuf {
    match std::env::var_os(REPORT_DIR_VAR) {
        Some(dir) if path.is_relative() && path != Path::new("-") => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

fn search(args: &SearchArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let graphs = search_source(args)?;
    let cfg = SearchConfig {
        filter: args.filter,
        threshold: args.threshold,
        limits: args.limits.apply(default_search_limits()),
        jobs: args.jobs,
    };
    let mut report = search_counterexamples(&args.source, &graphs, &cfg)?;
    if !args.timing {
        report = report.without_timing();
    }
    if let Some(path) = &args.report {
        write_output(&report_path(path), report.to_json_lines().as_bytes(), out)?;
    }
    if let Some(path) = &args.witnesses {
        write_output(&report_path(path), report.witness_lines().as_bytes(), out)?;
    }
    let s = &report.summary;
    let max = s.max_chi.map_or("-".to_string(), |c| c.to_string());
    say!(
        out,
        "examined {} matched {} counterexamples {} timeouts {} max_chi {max}",
        s.examined,
        s.matched,
        s.counterexamples,
        s.timeouts
    );
    for r in report.counterexamples() {
        let chi = r.chi.map_or("unknown".to_string(), |c| c.to_string());
        writeln!(err, "counterexample #{} {} chi_fum = {chi}", r.index, r.id)
            .map_err(io_error(Path::new("<stderr>")))?;
    }
    Ok(if s.counterexamples == 0 && s.timeouts == 0 {
        EXIT_OK
    } else {
        EXIT_FAIL
    })
}

fn convert(input: &Path, output: &Path, to: Format, out: &mut dyn Write) -> CliResult {
    let docs = format::read_documents(&read_input(input)?)?;
    let bytes = if to == Format::PlanarCode && docs.len() != 1 {
        for doc in &docs {
            format::write_document(doc, to)?;
        }
        write_planar_code(docs.iter().map(|d| &d.graph)).map_err(FormatError::from)?
    } else {
        if docs.len() != 1 {
            return Err(FormatError::NotSingleGraph(docs.len()).into());
        }
        format::write_document(&docs[0], to)?
    };
    write_output(output, &bytes, out)?;
    Ok(EXIT_OK)
}

fn generate(
    seed: u64,
    n: usize,
    model_arg: ModelArg,
    p: f64,
    count: usize,
    to: Format,
    out: &mut dyn Write,
) -> CliResult {
    if !(0.0..=1.0).contains(&p) {
        return Err(CliError::Usage(format!("--p must lie in [0, 1], got {p}")));
    }
    let graphs = random_batch(seed, count, n, n, model(model_arg, p));
    let bytes = match (to, graphs.as_slice()) {
        (Format::PlanarCode, _) => write_planar_code(graphs.iter()).map_err(FormatError::from)?,
        (_, [g]) => format::write_document(&GraphDocument::new(g.clone()), to)?,
        _ => {
            return Err(CliError::Usage(
                "several graphs need --to planar-code".to_string(),
            ))
        }
    };
    emit(out, &bytes)?;
    Ok(EXIT_OK)
}
