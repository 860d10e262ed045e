use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use domratio::domination::ratio_report;
use domratio::edge_list::parse_edge_list;
use domratio::enumeration::{enumerate_trees, Shard};
use domratio::graph::balanced_double_star;
use domratio::graph6::{encode_graph6, parse_graph6, MAX_VERTICES};
use domratio::harness::{
    linegraph_check, merge_reports, verify, Envelope, Record, VerificationReport, VerifyOptions,
};
use domratio::proof::run_construction;
use domratio::Graph;

const WORKERS_ENV: &str = "DOMRATIO_WORKERS";

/// Exit codes: 0 success, 1 mathematical violation, 2 input or usage error.
#[derive(Parser)]
#[command(
    name = "domratio",
    version,
    about = "Domination vs independent domination on trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edges,
}

#[derive(Subcommand)]
enum Command {
    /// Report γ, i and the ratio bound for each input graph.
    Solve {
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        /// Input file, or `-` for stdin.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Run the constructive bound on one tree and emit its certificate.
    Construct {
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Check the bound on every tree up to a given order.
    Verify {
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long, default_value_t = 1)]
        shards: usize,
        #[arg(long, default_value_t = 0)]
        shard_id: usize,
        /// Emit one record per equality case with Δ >= 3.
        #[arg(long)]
        list_equality: bool,
        /// Also certify the constructive bound on every tree.
        #[arg(long)]
        construct: bool,
    },
    /// Merge the summaries of sharded `verify` runs.
    Merge {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
    },
    /// Check i(L(T)) = γ(L(T)) for every tree up to a given order.
    LinegraphCheck {
        #[arg(long)]
        n_max: usize,
    },
    /// Generate a graph family member as graph6.
    Gen {
        #[arg(value_enum)]
        kind: Family,
        #[arg(long, allow_negative_numbers = true)]
        s: i64,
    },
    /// List every tree of a given order as graph6, one per line.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    DoubleStar,
}

enum Failure {
    Violation,
    Usage(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn read_input(input: &str) -> io::Result<String> {
    let mut text = String::new();
    if input == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = fs::read_to_string(input)?;
    }
    Ok(text)
}

fn parse_graphs(text: &str, format: Format) -> Vec<Result<Graph, String>> {
    match format {
        Format::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| parse_graph6(l.trim_end()).map_err(|e| format!("line {}: {e}", i + 1)))
            .collect(),
        Format::Edges => vec![parse_edge_list(text).map_err(|e| e.to_string())],
    }
}

fn graph6_if_small(g: &Graph) -> Option<String> {
    (g.n() <= MAX_VERTICES)
        .then(|| encode_graph6(g).ok())
        .flatten()
}

fn emit(out: &mut impl Write, record: Record) -> io::Result<()> {
    serde_json::to_writer(&mut *out, &Envelope::new(record))?;
    writeln!(out)
}

fn cmd_solve(format: Format, input: &str, out: &mut impl Write) -> CmdResult {
    let text = read_input(input)?;
    for (idx, parsed) in parse_graphs(&text, format).into_iter().enumerate() {
        let g = parsed.map_err(Failure::Usage)?;
        let report = ratio_report(&g)?;
        emit(
            out,
            Record::Solve {
                index: idx + 1,
                graph6: graph6_if_small(&g),
                report,
            },
        )?;
    }
    Ok(())
}

fn cmd_construct(format: Format, input: &str, out: &mut impl Write) -> CmdResult {
    let text = read_input(input)?;
    let g = parse_graphs(&text, format)
        .into_iter()
        .next()
        .ok_or_else(|| Failure::Usage("no graph in input".into()))?
        .map_err(Failure::Usage)?;
    let certificate = run_construction(&g)?;
    let passed = certificate.passed();
    emit(
        out,
        Record::Certificate {
            graph6: graph6_if_small(&g),
            certificate,
        },
    )?;
    if passed {
        Ok(())
    } else {
        Err(Failure::Violation)
    }
}

fn emit_verification(
    report: VerificationReport,
    list_equality: bool,
    out: &mut impl Write,
) -> CmdResult {
    for v in &report.violations {
        emit(out, Record::Violation(v.clone()))?;
    }
    for f in &report.construction_failures {
        emit(out, Record::ConstructionFailure(f.clone()))?;
    }
    if list_equality {
        for e in &report.equality_cases {
            emit(out, Record::EqualityCase(e.clone()))?;
        }
    }
    let clean = report.is_clean();
    emit(out, Record::VerificationSummary(report))?;
    if clean {
        Ok(())
    } else {
        Err(Failure::Violation)
    }
}

fn cmd_merge(inputs: &[PathBuf], out: &mut impl Write) -> CmdResult {
    let mut parts = Vec::new();
    for path in inputs {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let env: Envelope =
                serde_json::from_str(line).map_err(|e| format!("{}: {e}", path.display()))?;
            if let Record::VerificationSummary(r) = env.record {
                parts.push(r);
            }
        }
    }
    emit_verification(merge_reports(parts)?, false, out)
}

fn run(cli: Cli, out: &mut impl Write) -> CmdResult {
    match cli.command {
        Command::Solve { format, input } => cmd_solve(format, &input, out),
        Command::Construct { format, input } => cmd_construct(format, &input, out),
        Command::Verify {
            n_max,
            n_min,
            shards,
            shard_id,
            list_equality,
            construct,
        } => {
            let report = verify(VerifyOptions {
                n_min,
                n_max,
                shard: Shard::new(shards, shard_id)?,
                construct_all: construct,
            })?;
            emit_verification(report, list_equality, out)
        }
        Command::Merge { inputs } => cmd_merge(&inputs, out),
        Command::LinegraphCheck { n_max } => {
            let report = linegraph_check(n_max)?;
            let ok = report.all_ratios_one;
            emit(out, Record::LinegraphSummary(report))?;
            if ok {
                Ok(())
            } else {
                Err(Failure::Violation)
            }
        }
        Command::Gen {
            kind: Family::DoubleStar,
            s,
        } => {
            let s = usize::try_from(s).map_err(|_| format!("s must be >= 1, got {s}"))?;
            let g = balanced_double_star(s)?;
            writeln!(out, "{}", encode_graph6(&g)?)?;
            Ok(())
        }
        Command::Enumerate { n } => {
            for g in enumerate_trees(n)? {
                writeln!(out, "{}", encode_graph6(&g)?)?;
            }
            Ok(())
        }
    }
}

fn configure_workers() -> Result<(), String> {
    let Ok(value) = std::env::var(WORKERS_ENV) else {
        return Ok(());
    };
    let workers: usize = value
        .parse()
        .map_err(|_| format!("{WORKERS_ENV} must be a positive integer, got {value:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_workers() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Err(Failure::Violation), _) => ExitCode::from(1),
        (Err(Failure::Usage(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        (Ok(()), Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
