//! The `kemeny` command line: `analyze`, `family`, `verify` and `experiment`.
//!
//! Exit codes: 0 success, 2 input error, 3 disconnected graph, 4 failed
//! verification.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::centrality::{analyze_graph, AnalyzeOptions};
use crate::error::Error;
use crate::experiments::{
    branch_centrality, branch_shape, default_s_values, stability, table1, StabilityFamily,
};
use crate::families::{generate, random_tree, CliqueLink, FamilySpec};
use crate::graph::parse_edge_list;
use crate::output::{fmt_num, to_csv, to_dot, to_json, RenderOptions};
use crate::tol;
use crate::verify::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DISCONNECTED: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "kemeny",
    version,
    about = "Kemeny's constant and Kemeny-based edge centrality"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Score every edge of a graph read from an edge list (`-` for stdin).
    Analyze(AnalyzeArgs),
    /// Write a generated graph as an edge list.
    Family(FamilyArgs),
    /// Run cross-route verification suites.
    Verify {
        #[arg(value_enum, default_value = "all")]
        suite: SuiteArg,
    },
    /// Reproduce a numerical experiment as CSV.
    Experiment(ExperimentArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Dot,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    input: PathBuf,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Add a regularized score column with r = 1 - S.
    #[arg(long, value_name = "S")]
    regularized: Option<f64>,
    /// Fill the interlacing bounds and fail if a cut-edge violates them.
    #[arg(long)]
    bounds: bool,
    /// Reject the vertex label 0.
    #[arg(long)]
    one_based: bool,
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    /// path, star, complete_pendant, binary_tree, barbell, spider,
    /// clique_path, epqr (alias branch_tree) or random_tree.
    kind: String,
    /// Integer parameters of the family.
    params: Vec<usize>,
    /// Link style for clique paths.
    #[arg(long, value_enum, default_value = "edge")]
    link: LinkArg,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LinkArg {
    Edge,
    Shared,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Oracles,
    ClosedForms,
    Bounds,
    Complements,
    All,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExperimentName {
    Stability,
    Table1,
    BranchCentrality,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StabilityFamilyArg {
    Path,
    BinaryTree,
}

#[derive(Debug, Args)]
struct ExperimentArgs {
    #[arg(value_enum)]
    name: ExperimentName,
    #[arg(long, value_enum, default_value = "path")]
    family: StabilityFamilyArg,
    /// Path length for the stability experiment.
    #[arg(long, default_value_t = 50)]
    n: usize,
    /// Binary tree depth for the stability experiment.
    #[arg(long, default_value_t = 5)]
    depth: usize,
    #[arg(long, default_value_t = 100)]
    p: usize,
    #[arg(long, default_value_t = 10)]
    q: usize,
    #[arg(long, default_value_t = 10)]
    r: usize,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Disconnected { .. } => EXIT_DISCONNECTED,
        _ => EXIT_INPUT,
    }
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), i32> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            EXIT_INPUT
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn fail(err: Error) -> i32 {
    eprintln!("error: {err}");
    exit_code(&err)
}

fn analyze(args: AnalyzeArgs) -> Result<(), i32> {
    let text = if args.input.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        std::fs::read_to_string(&args.input)
    }
    .map_err(|e| {
        eprintln!("error: cannot read {}: {e}", args.input.display());
        EXIT_INPUT
    })?;
    let g = parse_edge_list(&text, args.one_based).map_err(fail)?;
    let options = AnalyzeOptions {
        regularization: args.regularized,
        threads: args.threads,
    };
    let report = analyze_graph(&g, &options).map_err(fail)?;
    let render = RenderOptions {
        bounds: args.bounds,
        regularized: args.regularized.is_some(),
    };
    let text = match args.format {
        Format::Csv => to_csv(&g, &report, render),
        Format::Json => to_json(&g, &report, render),
        Format::Dot => to_dot(&g, &report),
    };
    emit(&text, args.output.as_ref())?;
    if args.bounds {
        let violations = report
            .records
            .iter()
            .filter(|r| r.is_cut)
            .filter(|r| {
                let (lo, hi) = (r.lower.unwrap_or(f64::NAN), r.upper.unwrap_or(f64::NAN));
                !(r.c >= lo - tol::BOUNDS && r.c <= hi + tol::BOUNDS)
            })
            .count();
        if violations > 0 {
            eprintln!("error: {violations} cut-edges violate the interlacing bounds");
            return Err(EXIT_VERIFY);
        }
    }
    Ok(())
}

fn family_spec(kind: &str, params: &[usize], link: LinkArg) -> Result<FamilySpec, String> {
    let need = |k: usize| -> Result<(), String> {
        if params.len() == k {
            Ok(())
        } else {
            Err(format!(
                "{kind} takes {k} parameter(s), got {}",
                params.len()
            ))
        }
    };
    let link = match link {
        LinkArg::Edge => CliqueLink::Edge,
        LinkArg::Shared => CliqueLink::Shared,
    };
    let kind = kind.replace('-', "_");
    Ok(match kind.as_str() {
        "path" => {
            need(1)?;
            FamilySpec::Path { n: params[0] }
        }
        "star" => {
            need(1)?;
            FamilySpec::Star { n: params[0] }
        }
        "complete_pendant" => {
            need(1)?;
            FamilySpec::CompletePendant { n: params[0] }
        }
        "binary_tree" => {
            need(1)?;
            FamilySpec::BinaryTree { depth: params[0] }
        }
        "barbell" => {
            need(3)?;
            FamilySpec::Barbell {
                p: params[0],
                m: params[1],
                n: params[2],
            }
        }
        "spider" => {
            if params.is_empty() {
                return Err("spider needs at least one branch length".into());
            }
            FamilySpec::Spider {
                branches: params.to_vec(),
            }
        }
        "clique_path" => match params {
            [] => FamilySpec::clique_path_default(link),
            [size, count] => FamilySpec::CliquePath {
                size: *size,
                count: *count,
                link,
            },
            _ => return Err("clique_path takes no parameters or `size count`".into()),
        },
        "epqr" | "branch_tree" => match params {
            [p, q, r] => FamilySpec::BranchTree {
                p: *p,
                q: *q,
                r: *r,
                s: None,
            },
            [p, q, r, s] => FamilySpec::BranchTree {
                p: *p,
                q: *q,
                r: *r,
                s: Some(*s),
            },
            _ => return Err(format!("{kind} takes 3 or 4 branch lengths")),
        },
        other => return Err(format!("unknown family `{other}`")),
    })
}

fn family(args: FamilyArgs) -> Result<(), i32> {
    let kind = args.kind.replace('-', "_");
    let g = if kind == "random_tree" {
        match args.params.as_slice() {
            [n, seed] => random_tree(*n, *seed as u64),
            _ => {
                eprintln!("error: random_tree takes `n seed`");
                return Err(EXIT_INPUT);
            }
        }
    } else {
        let spec = family_spec(&kind, &args.params, args.link).map_err(|e| {
            eprintln!("error: {e}");
            EXIT_INPUT
        })?;
        generate(&spec)
    }
    .map_err(fail)?;
    emit(&g.to_edge_list(), args.output.as_ref())
}

fn verify(suite: SuiteArg) -> Result<(), i32> {
    let name = match suite {
        SuiteArg::Oracles => "oracles",
        SuiteArg::ClosedForms => "closed-forms",
        SuiteArg::Bounds => "bounds",
        SuiteArg::Complements => "complements",
        SuiteArg::All => "all",
    };
    let suites = Suite::parse(name).expect("every SuiteArg names a suite");
    let mut failed = 0;
    let mut total = 0;
    for s in suites {
        for check in run_suite(s) {
            println!("{check}");
            total += 1;
            if !check.passed {
                failed += 1;
            }
        }
    }
    println!("{} of {} checks passed", total - failed, total);
    if failed > 0 {
        Err(EXIT_VERIFY)
    } else {
        Ok(())
    }
}

fn experiment(args: ExperimentArgs) -> Result<(), i32> {
    let mut out = String::new();
    match args.name {
        ExperimentName::Table1 => {
            out.push_str("depth,level,centrality\n");
            for row in table1().map_err(fail)? {
                for (k, c) in row.levels.iter().enumerate() {
                    let _ = writeln!(out, "{},{},{:.4}", row.depth, k + 1, c);
                }
            }
        }
        ExperimentName::Stability => {
            let family = match args.family {
                StabilityFamilyArg::Path => StabilityFamily::Path { n: args.n },
                StabilityFamilyArg::BinaryTree => StabilityFamily::BinaryTree { depth: args.depth },
            };
            let s_values = default_s_values();
            let rows = stability(family, &s_values).map_err(fail)?;
            out.push_str("u,v,reference,direct,direct_error");
            for s in &s_values {
                let _ = write!(out, ",error_s={}", fmt_num(*s));
            }
            out.push('\n');
            for row in &rows {
                let _ = write!(
                    out,
                    "{},{},{},{},{}",
                    row.edge.u + 1,
                    row.edge.v + 1,
                    fmt_num(row.reference),
                    fmt_num(row.direct),
                    fmt_num(row.direct_error)
                );
                for &(_, _, err) in &row.regularized {
                    let _ = write!(out, ",{}", fmt_num(err));
                }
                out.push('\n');
            }
        }
        ExperimentName::BranchCentrality => {
            let profile = branch_centrality(args.p, args.q, args.r).map_err(fail)?;
            out.push_str("i,centrality\n");
            for &(i, c) in &profile {
                let _ = writeln!(out, "{},{}", i, fmt_num(c));
            }
            let shape = branch_shape(args.p, args.q, args.r, &profile);
            eprintln!(
                "maximum at i = {}, local maxima {:?}, balance point {}, decreasing after maximum: {}",
                shape.argmax, shape.local_maxima, shape.balance_point, shape.decreasing_after_max
            );
        }
    }
    emit(&out, args.output.as_ref())
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let result = match cli.command {
        Command::Analyze(a) => analyze(a),
        Command::Family(f) => family(f),
        Command::Verify { suite } => verify(suite),
        Command::Experiment(e) => experiment(e),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(code) => code,
    }
}
