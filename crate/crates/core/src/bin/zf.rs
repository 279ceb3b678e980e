//! Command line front end. Machine readable JSON goes to stdout,
//! diagnostics to stderr. Exit codes: 0 success, 1 usage or input error,
//! 2 computation infeasible, 3 verification mismatch, 4 invalid script.

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use zero_forcing::dot::to_dot;
use zero_forcing::engine::{
    chain_set, propagate, propagation_time_of_set, run_relaxed, EngineError,
};
use zero_forcing::formats::{
    parse_script, parse_vertex_list, read_graph_auto, vertex_set_from_list, write_edge_list,
    ChronologyJson, FormatError, GraphJson,
};
use zero_forcing::generators;
use zero_forcing::graph::{Graph, VertexSet};
use zero_forcing::search::{
    self, path_cover_number, SearchError, SearchOptions, PATH_COVER_CEILING,
};
use zero_forcing::verify::{self, Budget, CaseStatus, FamilyCase};

#[derive(Parser)]
#[command(
    name = "zf",
    version,
    about = "Zero forcing numbers, propagation times, and path covers of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family graph and print it in the chosen format
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Spoke count for gear and helm
        #[arg(short)]
        m: Option<usize>,
        /// Intermediate vertices per gear tooth (default 1)
        #[arg(short)]
        r: Option<usize>,
        /// Pendants per helm spoke (default 1)
        #[arg(short)]
        s: Option<usize>,
        /// Size parameter for wheel, path, and cycle
        #[arg(short)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "edges")]
        format: FormatArg,
        /// Output file; stdout when absent
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the synchronous process from a blue set, or replay a script
    Closure {
        /// Graph file in edge list or JSON format, `-` for stdin
        graph: String,
        /// Comma separated initial blue vertices, e.g. 0,3,5
        #[arg(long)]
        blue: Option<String>,
        /// Relaxed chronology JSON to validate and replay
        #[arg(long)]
        script: Option<PathBuf>,
    },
    /// Compute the zero forcing number
    Zf {
        graph: String,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        all_witnesses: bool,
        /// Also fully enumerate the stratum below z
        #[arg(long)]
        prove_minimality: bool,
        /// Start the climb at cardinality 1
        #[arg(long)]
        no_pruning: bool,
        /// Start no lower than half the degree one vertices
        #[arg(long)]
        pendant_bound: bool,
    },
    /// Compute the zero forcing number and propagation time
    Pt {
        graph: String,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        all_witnesses: bool,
        #[arg(long)]
        prove_minimality: bool,
        #[arg(long)]
        no_pruning: bool,
        #[arg(long)]
        pendant_bound: bool,
        /// Take the propagation time of the first witness only (an upper
        /// bound) instead of minimizing over all witnesses
        #[arg(long)]
        pt_first_witness: bool,
    },
    /// Compute the path cover number
    Pathcover { graph: String },
    /// Check family predictions against exhaustive search over a grid
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        /// Inclusive range `a..b` (or single value) for m
        #[arg(long)]
        m_range: Option<String>,
        /// Inclusive range for gear r
        #[arg(long)]
        r_range: Option<String>,
        /// Inclusive range for generalized helm s
        #[arg(long)]
        s_range: Option<String>,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Render a graph as DOT, optionally with a blue set and its chains
    ExportDot {
        graph: String,
        #[arg(long)]
        blue: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum FamilyArg {
    Gear,
    Helm,
    Wheel,
    Path,
    Cycle,
}

#[derive(Copy, Clone, ValueEnum)]
enum FormatArg {
    Edges,
    Json,
    Dot,
}

#[derive(Copy, Clone, ValueEnum)]
enum SuiteArg {
    Gear,
    Helm,
    #[value(alias = "generalized-helm")]
    Ghelm,
    All,
}

enum CliError {
    Usage(String),
    Infeasible(String),
    Mismatch(String),
    InvalidScript(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Infeasible(_) => 2,
            CliError::Mismatch(_) => 3,
            CliError::InvalidScript(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m)
            | CliError::Infeasible(m)
            | CliError::Mismatch(m)
            | CliError::InvalidScript(m) => m,
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<generators::GenError> for CliError {
    fn from(e: generators::GenError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::TooLarge { .. } => CliError::Infeasible(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let kind = e.kind();
            use clap::error::ErrorKind;
            if matches!(kind, ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            eprint!("{e}");
            std::process::exit(1);
        }
    };
    if let Err(e) = run(cli.command) {
        eprintln!("error: {}", e.message());
        std::process::exit(e.code());
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Gen {
            family,
            m,
            r,
            s,
            n,
            format,
            out,
        } => cmd_gen(family, m, r, s, n, format, out),
        Command::Closure {
            graph,
            blue,
            script,
        } => cmd_closure(&graph, blue.as_deref(), script.as_deref()),
        Command::Zf {
            graph,
            workers,
            all_witnesses,
            prove_minimality,
            no_pruning,
            pendant_bound,
        } => {
            let opts = SearchOptions {
                workers: resolve_workers(workers),
                all_witnesses,
                prove_minimality,
                no_pruning,
                pendant_bound,
                ..SearchOptions::default()
            };
            let g = load_graph(&graph)?;
            let report = search::zero_forcing_number(&g, &opts)?;
            emit(&report);
            Ok(())
        }
        Command::Pt {
            graph,
            workers,
            all_witnesses,
            prove_minimality,
            no_pruning,
            pendant_bound,
            pt_first_witness,
        } => {
            let opts = SearchOptions {
                workers: resolve_workers(workers),
                all_witnesses,
                prove_minimality,
                no_pruning,
                pendant_bound,
                pt_first_witness,
                ..SearchOptions::default()
            };
            let g = load_graph(&graph)?;
            let report = search::propagation_time(&g, &opts)?;
            emit(&report);
            Ok(())
        }
        Command::Pathcover { graph } => {
            let g = load_graph(&graph)?;
            let t0 = std::time::Instant::now();
            let p = path_cover_number(&g)?;
            emit(&serde_json::json!({
                "n": g.n(),
                "path_cover": p,
                "ceiling": PATH_COVER_CEILING,
                "wall_time_ms": t0.elapsed().as_secs_f64() * 1e3,
            }));
            Ok(())
        }
        Command::Verify {
            suite,
            m_range,
            r_range,
            s_range,
            workers,
        } => cmd_verify(suite, m_range, r_range, s_range, resolve_workers(workers)),
        Command::ExportDot { graph, blue, out } => cmd_export_dot(&graph, blue.as_deref(), out),
    }
}

/// Worker resolution: explicit flag, then the ZF_WORKERS environment
/// variable, then all available parallelism.
fn resolve_workers(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("ZF_WORKERS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(0)
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("reading {path}: {e}")))
    }
}

fn load_graph(path: &str) -> Result<Graph, CliError> {
    Ok(read_graph_auto(&read_input(path)?)?)
}

fn emit<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serializes")
    );
}

fn write_output(out: Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(&path, content)
            .map_err(|e| CliError::Usage(format!("writing {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn require(param: Option<usize>, name: &str, family: &str) -> Result<usize, CliError> {
    param.ok_or_else(|| CliError::Usage(format!("{family} requires -{name}")))
}

fn reject(param: Option<usize>, name: &str, family: &str) -> Result<(), CliError> {
    if param.is_some() {
        return Err(CliError::Usage(format!(
            "-{name} does not apply to {family}"
        )));
    }
    Ok(())
}

fn cmd_gen(
    family: FamilyArg,
    m: Option<usize>,
    r: Option<usize>,
    s: Option<usize>,
    n: Option<usize>,
    format: FormatArg,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let (g, index_map) = match family {
        FamilyArg::Gear => {
            reject(s, "s", "gear")?;
            reject(n, "n", "gear")?;
            let m = require(m, "m", "gear")?;
            let r = r.unwrap_or(1);
            (
                generators::gear(m, r)?,
                Some(generators::gear_index_map(m, r)),
            )
        }
        FamilyArg::Helm => {
            reject(r, "r", "helm")?;
            reject(n, "n", "helm")?;
            let m = require(m, "m", "helm")?;
            let s = s.unwrap_or(1);
            (
                generators::helm(m, s)?,
                Some(generators::helm_index_map(m, s)),
            )
        }
        FamilyArg::Wheel | FamilyArg::Path | FamilyArg::Cycle => {
            let name = match family {
                FamilyArg::Wheel => "wheel",
                FamilyArg::Path => "path",
                _ => "cycle",
            };
            reject(m, "m", name)?;
            reject(r, "r", name)?;
            reject(s, "s", name)?;
            let n = require(n, "n", name)?;
            let g = match family {
                FamilyArg::Wheel => generators::wheel(n)?,
                FamilyArg::Path => generators::path(n)?,
                _ => generators::cycle(n)?,
            };
            (g, None)
        }
    };
    let rendered = match format {
        FormatArg::Edges => write_edge_list(&g),
        FormatArg::Dot => to_dot(&g, None, &[]),
        FormatArg::Json => {
            let mut json = GraphJson::from_graph(&g);
            if let Some(map) = index_map {
                json = json.with_index_map(map);
            }
            let mut text = serde_json::to_string_pretty(&json).expect("graph serializes");
            text.push('\n');
            text
        }
    };
    write_output(out, &rendered)
}

fn parse_blue(g: &Graph, list: &str) -> Result<VertexSet, CliError> {
    let vertices = parse_vertex_list(list)?;
    vertex_set_from_list(g.n(), &vertices).map_err(|e| CliError::Usage(e.to_string()))
}

fn cmd_closure(
    graph: &str,
    blue: Option<&str>,
    script: Option<&std::path::Path>,
) -> Result<(), CliError> {
    let g = load_graph(graph)?;
    match script {
        None => {
            let blue = blue.ok_or_else(|| {
                CliError::Usage("closure needs --blue (or --script with an initial set)".into())
            })?;
            let b = parse_blue(&g, blue)?;
            let c = propagate(&g, &b);
            emit(&serde_json::json!({
                "chronology": ChronologyJson::from(&c),
                "final": c.final_set().to_vec(),
                "forcing": c.is_complete(),
                "pt": propagation_time_of_set(&g, &b),
            }));
            Ok(())
        }
        Some(path) => {
            let text = read_input(&path.display().to_string())?;
            let parsed = parse_script(&text)
                .map_err(|e| CliError::InvalidScript(format!("parsing script: {e}")))?;
            let b = match (blue, parsed.initial) {
                (Some(list), None) => parse_blue(&g, list)?,
                (None, Some(initial)) => vertex_set_from_list(g.n(), &initial)
                    .map_err(|e| CliError::InvalidScript(e.to_string()))?,
                (Some(list), Some(initial)) => {
                    let from_flag = parse_blue(&g, list)?;
                    let from_script = vertex_set_from_list(g.n(), &initial)
                        .map_err(|e| CliError::InvalidScript(e.to_string()))?;
                    if from_flag != from_script {
                        return Err(CliError::Usage(
                            "--blue disagrees with the script's initial set".into(),
                        ));
                    }
                    from_flag
                }
                (None, None) => {
                    return Err(CliError::Usage(
                        "script has no initial set; pass --blue".into(),
                    ))
                }
            };
            let c = run_relaxed(&g, &b, &parsed.steps).map_err(|e| match e {
                EngineError::InvalidForceAtStep { .. } | EngineError::DuplicateTarget { .. } => {
                    CliError::InvalidScript(e.to_string())
                }
                EngineError::IncompleteChronology => CliError::InvalidScript(e.to_string()),
            })?;
            emit(&serde_json::json!({
                "chronology": ChronologyJson::from(&c),
                "final": c.final_set().to_vec(),
                "forcing": c.is_complete(),
                "completion_time": c.completion_time(),
            }));
            Ok(())
        }
    }
}

/// Parses `a..b` as an inclusive range; a bare number is a single point.
fn parse_range(text: &str, what: &str) -> Result<std::ops::RangeInclusive<usize>, CliError> {
    let bad = || CliError::Usage(format!("{what} range `{text}` is not `a..b` or a number"));
    if let Some((a, b)) = text.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b
            .trim()
            .trim_start_matches('=')
            .parse()
            .map_err(|_| bad())?;
        if a > b {
            return Err(CliError::Usage(format!("{what} range `{text}` is empty")));
        }
        Ok(a..=b)
    } else {
        let v: usize = text.trim().parse().map_err(|_| bad())?;
        Ok(v..=v)
    }
}

fn cmd_verify(
    suite: SuiteArg,
    m_range: Option<String>,
    r_range: Option<String>,
    s_range: Option<String>,
    workers: usize,
) -> Result<(), CliError> {
    let parse_opt = |text: Option<String>, what: &str, default: std::ops::RangeInclusive<usize>| {
        text.map_or(Ok(default), |t| parse_range(&t, what))
    };
    let mut cases: Vec<FamilyCase> = Vec::new();
    if matches!(suite, SuiteArg::Gear | SuiteArg::All) {
        let ms = parse_opt(m_range.clone(), "m", 3..=6)?;
        let rs = parse_opt(r_range.clone(), "r", 1..=3)?;
        cases.extend(verify::gear_grid(ms, rs)?);
    }
    if matches!(suite, SuiteArg::Helm | SuiteArg::All) {
        let ms = parse_opt(m_range.clone(), "m", 3..=12)?;
        cases.extend(verify::helm_grid(ms)?);
    }
    if matches!(suite, SuiteArg::Ghelm | SuiteArg::All) {
        let ms = parse_opt(m_range, "m", 3..=4)?;
        let ss = parse_opt(s_range, "s", 2..=3)?;
        cases.extend(verify::generalized_helm_grid(ms, ss)?);
    }
    let results = verify::run_grid(&cases, &Budget::default(), workers);
    eprint!("{}", verify::render_table(&results));
    emit(&results);
    let count = |status: CaseStatus| results.iter().filter(|c| c.status == status).count();
    let mismatches = count(CaseStatus::Mismatch);
    if mismatches > 0 {
        return Err(CliError::Mismatch(format!(
            "{mismatches} case(s) disagree with the prediction"
        )));
    }
    let skipped = count(CaseStatus::BudgetExceeded);
    if skipped > 0 {
        return Err(CliError::Infeasible(format!(
            "{skipped} case(s) exceeded the candidate budget; the rest match"
        )));
    }
    Ok(())
}

fn cmd_export_dot(graph: &str, blue: Option<&str>, out: Option<PathBuf>) -> Result<(), CliError> {
    let g = load_graph(graph)?;
    let rendered = match blue {
        None => to_dot(&g, None, &[]),
        Some(list) => {
            let b = parse_blue(&g, list)?;
            let c = propagate(&g, &b);
            if c.is_complete() {
                let chains = chain_set(&c).expect("complete chronology");
                to_dot(&g, Some(&b), &chains.chain_edges())
            } else {
                eprintln!("note: blue set does not force; rendering without chains");
                to_dot(&g, Some(&b), &[])
            }
        }
    };
    write_output(out, &rendered)
}
