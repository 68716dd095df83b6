//! Command-line front end. [`run`] parses arguments, writes to the given
//! streams and returns the process exit code.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::colorer::{constructive_color_with, exact_chi2, verify_coloring, Coloring, DEFAULT_BUDGET};
use crate::density::mad_exact;
use crate::discharging::{audit, Regime};
use crate::error::Error;
use crate::generators::{generate, GeneratorSpec};
use crate::graph::{parse_edge_list, Graph};
use crate::rational::Rational;
use crate::report::{Analysis, DegreeReport};
use crate::structure::{find_configurations, sponsorship_for_audit};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID_COLORING: i32 = 2;
pub const EXIT_IRREDUCIBLE: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

const ABOUT: &str = "2-distance coloring toolkit for sparse graphs";

const AFTER_HELP: &str = "\
Graphs are edge lists: one `u v` pair per line, `#` starts a comment.
Vertex ids are dense integers 0..n-1 and are never renumbered: n is one more
than the largest id unless an `n <count>` line declares it (isolated vertices
need the declaration). Colorings are `v c` lines with colors 0..k-1.

Exit codes: 0 success, 1 parse or usage error, 2 invalid coloring,
3 irreducible graph, 4 exact search budget exceeded.";

#[derive(Debug, Parser)]
#[command(name = "twodist", version, about = ABOUT, after_help = AFTER_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Size, degrees, exact mad and girth.
    Analyze(Input),
    /// List reducible configurations.
    Detect(RegimeInput),
    /// Run the discharging rules and audit the outcome.
    Discharge {
        #[command(flatten)]
        input: RegimeInput,
        /// Write the transfer log as CSV.
        #[arg(long, value_name = "PATH")]
        transfers: Option<PathBuf>,
    },
    /// Build a (D+2)-coloring by reduce-and-extend.
    Color {
        #[command(flatten)]
        input: RegimeInput,
        /// Write the coloring here instead of standard output.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Check a coloring file against a graph.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Coloring file with `v c` lines.
        coloring: PathBuf,
        /// Palette size; defaults to one more than the largest color.
        #[arg(short, long)]
        k: Option<usize>,
    },
    /// Compute chi2 exactly by branch and bound.
    Exact {
        #[command(flatten)]
        input: Input,
        /// Search node budget.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Write an optimal coloring here.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Emit a generated graph as an edge list.
    Generate(GenerateArgs),
    /// Color every graph in a set of files or directories.
    Corpus {
        /// Edge-list files, or directories whose files are all read.
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        #[arg(long, value_enum, ignore_case = true)]
        regime: Option<RegimeArg>,
        /// Declared maximum degree D; defaults to each graph's own.
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct Input {
    /// Edge-list file, or `-` for standard input.
    pub graph: PathBuf,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct RegimeInput {
    #[command(flatten)]
    pub input: Input,
    /// Inferred from mad and maximum degree when omitted.
    #[arg(long, value_enum, ignore_case = true)]
    pub regime: Option<RegimeArg>,
    /// Declared maximum degree D; defaults to the graph's own.
    #[arg(long)]
    pub delta: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RegimeArg {
    A,
    B,
}

impl From<RegimeArg> for Regime {
    fn from(r: RegimeArg) -> Regime {
        match r {
            RegimeArg::A => Regime::A,
            RegimeArg::B => Regime::B,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GeneratorKind {
    #[value(name = "moore_2_2")]
    Moore22,
    #[value(name = "moore_3_2")]
    Moore32,
    #[value(name = "moore_7_2")]
    Moore72,
    #[value(name = "wegner_girth3")]
    WegnerGirth3,
    #[value(name = "wegner_girth4")]
    WegnerGirth4,
    #[value(name = "random_sparse")]
    RandomSparse,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// Generator name; alternatively pass `--spec`.
    #[arg(value_enum, required_unless_present = "spec", conflicts_with = "spec")]
    pub kind: Option<GeneratorKind>,
    /// Generator spec as JSON, e.g. `{"kind":"wegner_girth4","delta":8}`, or a path to a JSON file.
    #[arg(long)]
    pub spec: Option<String>,
    /// Maximum degree for the extremal and random generators.
    #[arg(long)]
    pub delta: Option<usize>,
    /// Vertex count for random_sparse.
    #[arg(short, long)]
    pub n: Option<usize>,
    /// Strict mad upper bound for random_sparse, as `p/q`.
    #[arg(long, default_value = "8/3")]
    pub mad_cap: Rational,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the edge list here; the degree report then goes to standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

/// A failure mapped to an exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Irreducible(_) | Error::ExtensionFailed { .. } | Error::InvalidExtension(_) => EXIT_IRREDUCIBLE,
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::ColorOutOfRange { .. } | Error::ColoringSizeMismatch { .. } | Error::Uncolored(_) => {
            EXIT_INVALID_COLORING
        }
        _ => EXIT_USAGE,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: exit_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Analyze(input) => analyze(&input, out),
        Command::Detect(input) => detect(&input, out),
        Command::Discharge { input, transfers } => discharge(&input, transfers.as_deref(), out),
        Command::Color { input, out: path } => color(&input, path.as_deref(), out),
        Command::Verify { input, coloring, k } => verify(&input, &coloring, k, out),
        Command::Exact {
            input,
            budget,
            out: path,
        } => exact(&input, budget, path.as_deref(), out),
        Command::Generate(args) => generate_cmd(&args, out, err),
        Command::Corpus {
            paths,
            regime,
            delta,
            json,
        } => corpus(&paths, regime, delta, json, out),
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let bytes = if path == Path::new("-") {
        let mut buf = Vec::new();
        std::io::Read::read_to_end(&mut std::io::stdin(), &mut buf)?;
        buf
    } else {
        fs::read(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?
    };
    parse_edge_list(&bytes).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// The regime and declared degree to use for `g`.
fn settings(g: &Graph, regime: Option<RegimeArg>, delta: Option<usize>) -> Result<(Regime, usize), Failure> {
    let d = delta.unwrap_or_else(|| g.max_degree());
    let regime = match regime {
        Some(r) => r.into(),
        None => Regime::infer(mad_exact(g), g.max_degree()).ok_or_else(|| {
            Failure::usage("no regime applies to this graph (mad and maximum degree); pass --regime A or --regime B")
        })?,
    };
    Ok((regime, d))
}

fn analyze(input: &Input, out: &mut dyn Write) -> Outcome {
    let g = read_graph(&input.graph)?;
    let a = Analysis::of(&g);
    if input.json {
        emit_json(out, &a)?;
    } else {
        write!(out, "{a}")?;
    }
    Ok(EXIT_OK)
}

fn detect(input: &RegimeInput, out: &mut dyn Write) -> Outcome {
    let g = read_graph(&input.input.graph)?;
    let (regime, d) = settings(&g, input.regime, input.delta)?;
    let configurations = find_configurations(&g, regime, d);
    if input.input.json {
        #[derive(Serialize)]
        struct Detection<'a> {
            regime: Regime,
            d: usize,
            configurations: &'a [crate::structure::Configuration],
            sponsorship: crate::structure::SponsorAssignment,
        }
        emit_json(
            out,
            &Detection {
                regime,
                d,
                configurations: &configurations,
                sponsorship: sponsorship_for_audit(&g, d),
            },
        )?;
    } else {
        writeln!(
            out,
            "regime {regime}, D = {d}: {} configuration(s)",
            configurations.len()
        )?;
        for c in &configurations {
            writeln!(out, "{} witness {:?} deletes {:?}", c.kind, c.witness, c.deletable)?;
        }
    }
    Ok(EXIT_OK)
}

fn discharge(input: &RegimeInput, transfers: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let g = read_graph(&input.input.graph)?;
    let (regime, d) = settings(&g, input.regime, input.delta)?;
    let report = audit(&g, regime, d);
    if let Some(path) = transfers {
        fs::write(path, report.state.transfer_csv())?;
    }
    if input.input.json {
        emit_json(out, &report)?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "regime {regime}, D = {d}, mad = {}", report.mad)?;
    writeln!(
        out,
        "initial charge sum {} ({})",
        report.sum_initial,
        if report.sum_initial_negative {
            "negative"
        } else {
            "not negative"
        }
    )?;
    writeln!(out, "final charge sum   {}", report.sum_final)?;
    writeln!(
        out,
        "conservation {}",
        if report.conservation { "ok" } else { "FAILED" }
    )?;
    writeln!(out, "transfers {}", report.state.transfers.len())?;
    writeln!(out, "configurations {}", report.configurations.len())?;
    if report.nonnegativity_checked {
        writeln!(out, "negative final charges {}", report.negative_vertices.len())?;
    }
    for flag in &report.contradiction_flags {
        writeln!(out, "flag: {flag}")?;
    }
    Ok(EXIT_OK)
}

fn color(input: &RegimeInput, path: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let g = read_graph(&input.input.graph)?;
    let (regime, d) = settings(&g, input.regime, input.delta)?;
    let run = constructive_color_with(&g, regime, d)?;
    if let Some(path) = path {
        fs::write(path, run.coloring.to_text())?;
    }
    if input.input.json {
        emit_json(out, &run)?;
    } else if path.is_none() {
        write!(out, "{}", run.coloring.to_text())?;
    } else {
        writeln!(
            out,
            "{} colors used of {}, {} reductions",
            run.coloring.used(),
            run.coloring.k,
            run.reductions
        )?;
    }
    Ok(EXIT_OK)
}

fn verify(input: &Input, coloring: &Path, k: Option<usize>, out: &mut dyn Write) -> Outcome {
    let g = read_graph(&input.graph)?;
    let text = fs::read_to_string(coloring).map_err(|e| Failure::usage(format!("{}: {e}", coloring.display())))?;
    let c = Coloring::parse(&text, g.n(), k).map_err(|e| Failure::usage(format!("{}: {e}", coloring.display())))?;
    let violations = verify_coloring(&g, &c)?;
    if input.json {
        #[derive(Serialize)]
        struct Verdict<'a> {
            valid: bool,
            colors: usize,
            violations: &'a [crate::colorer::Violation],
        }
        emit_json(
            out,
            &Verdict {
                valid: violations.is_empty(),
                colors: c.used(),
                violations: &violations,
            },
        )?;
    } else if violations.is_empty() {
        writeln!(out, "valid 2-distance coloring with {} colors", c.used())?;
    } else {
        for v in &violations {
            writeln!(out, "conflict: {} and {} share color {}", v.u, v.v, v.color)?;
        }
        writeln!(out, "{} conflict(s)", violations.len())?;
    }
    Ok(if violations.is_empty() {
        EXIT_OK
    } else {
        EXIT_INVALID_COLORING
    })
}

fn exact(input: &Input, budget: u64, path: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let g = read_graph(&input.graph)?;
    match exact_chi2(&g, budget) {
        Ok((chi2, coloring)) => {
            if let Some(path) = path {
                fs::write(path, coloring.to_text())?;
            }
            if input.json {
                emit_json(out, &serde_json::json!({ "chi2": chi2 }))?;
            } else {
                writeln!(out, "chi2 = {chi2}")?;
            }
            Ok(EXIT_OK)
        }
        Err(Error::BudgetExceeded { budget, lower, upper }) if input.json => {
            emit_json(
                out,
                &serde_json::json!({ "budget_exceeded": budget, "lower": lower, "upper": upper }),
            )?;
            Ok(EXIT_BUDGET)
        }
        Err(e) => Err(e.into()),
    }
}

fn spec_from(args: &GenerateArgs) -> Result<GeneratorSpec, Failure> {
    if let Some(spec) = &args.spec {
        let text = if spec.trim_start().starts_with('{') {
            spec.clone()
        } else {
            fs::read_to_string(spec).map_err(|e| Failure::usage(format!("{spec}: {e}")))?
        };
        return Ok(serde_json::from_str(&text)?);
    }
    let delta = || args.delta.ok_or_else(|| Failure::usage("this generator needs --delta"));
    Ok(match args.kind.expect("clap requires kind or spec") {
        GeneratorKind::Moore22 => GeneratorSpec::Moore22,
        GeneratorKind::Moore32 => GeneratorSpec::Moore32,
        GeneratorKind::Moore72 => GeneratorSpec::Moore72,
        GeneratorKind::WegnerGirth3 => GeneratorSpec::WegnerGirth3 { delta: delta()? },
        GeneratorKind::WegnerGirth4 => GeneratorSpec::WegnerGirth4 { delta: delta()? },
        GeneratorKind::RandomSparse => GeneratorSpec::RandomSparse {
            n: args.n.ok_or_else(|| Failure::usage("random_sparse needs -n"))?,
            mad_cap: args.mad_cap,
            delta_target: delta()?,
            seed: args.seed,
        },
    })
}

fn generate_cmd(args: &GenerateArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let spec = spec_from(args)?;
    let g = generate(&spec)?;
    let report = DegreeReport::of(&g);
    match &args.out {
        Some(path) => {
            fs::write(path, g.to_edge_list())?;
            if args.json {
                emit_json(out, &report)?;
            } else {
                writeln!(out, "{report}")?;
            }
        }
        None => {
            write!(out, "{}", g.to_edge_list())?;
            writeln!(err, "{report}")?;
        }
    }
    Ok(EXIT_OK)
}

/// Outcome of coloring one corpus instance.
#[derive(Clone, Debug, Serialize)]
pub struct CorpusRow {
    pub path: String,
    pub n: usize,
    pub max_degree: usize,
    pub mad: Option<Rational>,
    pub regime: Option<Regime>,
    pub colors_used: Option<usize>,
    pub palette: Option<usize>,
    pub irreducible: bool,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusSummary {
    pub instances: usize,
    pub successes: usize,
    pub max_colors_used: usize,
    pub irreducible: usize,
    pub errors: usize,
    pub rows: Vec<CorpusRow>,
}

fn corpus_files(paths: &[PathBuf]) -> Result<Vec<PathBuf>, Failure> {
    let mut files = Vec::new();
    for p in paths {
        if p.is_dir() {
            let mut inner: Vec<PathBuf> = fs::read_dir(p)?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.is_file())
                .collect();
            inner.sort();
            files.extend(inner);
        } else {
            files.push(p.clone());
        }
    }
    Ok(files)
}

fn corpus_row(path: &Path, regime: Option<RegimeArg>, delta: Option<usize>) -> CorpusRow {
    let mut row = CorpusRow {
        path: path.display().to_string(),
        n: 0,
        max_degree: 0,
        mad: None,
        regime: None,
        colors_used: None,
        palette: None,
        irreducible: false,
        error: None,
    };
    let g = match fs::read(path).map_err(Error::from).and_then(|b| parse_edge_list(&b)) {
        Ok(g) => g,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    let mad = mad_exact(&g);
    row.n = g.n();
    row.max_degree = g.max_degree();
    row.mad = Some(mad);
    row.regime = regime.map(Regime::from).or_else(|| Regime::infer(mad, g.max_degree()));
    let Some(r) = row.regime else {
        row.error = Some("no regime applies".into());
        return row;
    };
    match constructive_color_with(&g, r, delta.unwrap_or(g.max_degree())) {
        Ok(run) => {
            row.colors_used = Some(run.coloring.used());
            row.palette = Some(run.coloring.k);
        }
        Err(e) => {
            row.irreducible = exit_code(&e) == EXIT_IRREDUCIBLE;
            row.error = Some(e.to_string());
        }
    }
    row
}

fn corpus(
    paths: &[PathBuf],
    regime: Option<RegimeArg>,
    delta: Option<usize>,
    json: bool,
    out: &mut dyn Write,
) -> Outcome {
    let files = corpus_files(paths)?;
    let rows: Vec<CorpusRow> = files.par_iter().map(|p| corpus_row(p, regime, delta)).collect();
    let summary = CorpusSummary {
        instances: rows.len(),
        successes: rows.iter().filter(|r| r.colors_used.is_some()).count(),
        max_colors_used: rows.iter().filter_map(|r| r.colors_used).max().unwrap_or(0),
        irreducible: rows.iter().filter(|r| r.irreducible).count(),
        errors: rows.iter().filter(|r| r.error.is_some() && !r.irreducible).count(),
        rows,
    };
    if json {
        emit_json(out, &summary)?;
    } else {
        writeln!(
            out,
            "{:<40} {:>6} {:>4} {:>8} {:>6} {:>8}",
            "instance", "n", "Δ", "mad", "regime", "colors"
        )?;
        for r in &summary.rows {
            let mad = r.mad.map_or("-".into(), |m| m.to_string());
            let regime = r.regime.map_or("-".into(), |r| r.to_string());
            let colors = match (r.colors_used, &r.error) {
                (Some(c), _) => format!("{c}/{}", r.palette.unwrap_or(0)),
                (None, Some(_)) if r.irreducible => "irreducible".into(),
                _ => "error".into(),
            };
            writeln!(
                out,
                "{:<40} {:>6} {:>4} {:>8} {:>6} {:>8}",
                r.path, r.n, r.max_degree, mad, regime, colors
            )?;
            if let Some(e) = &r.error {
                writeln!(out, "  {e}")?;
            }
        }
        writeln!(
            out,
            "instances {}  successes {}  max colors used {}  irreducible {}  errors {}",
            summary.instances, summary.successes, summary.max_colors_used, summary.irreducible, summary.errors
        )?;
    }
    Ok(if summary.irreducible > 0 {
        EXIT_IRREDUCIBLE
    } else if summary.errors > 0 {
        EXIT_USAGE
    } else {
        EXIT_OK
    })
}
