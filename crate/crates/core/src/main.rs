use std::io::{self, BufRead, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use clawfree::enumerate::{enumerate, EnumerationConfig};
use clawfree::families::{build_family, build_inflation, check_family_claims, Family, FamilySpec, InflationSpec};
use clawfree::invariants::GraphReport;
use clawfree::structure::classify_claw_bull_free;
use clawfree::verify::{report_emit, verify, ReportFormat, TheoremId};
use clawfree::{parse_graph6, Error, PatternId};

#[derive(Parser)]
#[command(name = "clawfree", version, about = "Exact algorithms for claw-free graphs and perfection")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Build a member of one of the counterexample families.
    Family {
        family: Family,
        #[arg(long)]
        s: usize,
        #[arg(long, value_enum, conflicts_with = "verify")]
        emit: Option<Emit>,
        /// Check the family's claims and print the report.
        #[arg(long)]
        verify: bool,
    },
    /// Build the inflation C[n1, .., nk] and print it as graph6.
    Inflate {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
    },
    /// Classify graphs against the (claw, bull)-free dichotomy.
    Classify {
        /// A graph6 string or a file with one graph per line; stdin if absent.
        input: Option<String>,
    },
    /// Enumerate graphs up to isomorphism.
    Enumerate {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long, value_delimiter = ',')]
        free: Vec<PatternId>,
        #[arg(long)]
        min_alpha: Option<usize>,
        #[arg(long)]
        exclude_odd_cycles: bool,
        #[arg(long, value_enum)]
        emit: Option<Emit>,
    },
    /// Run a verification campaign.
    Verify {
        #[arg(long)]
        theorem: TheoremId,
        #[arg(long)]
        y: Option<PatternId>,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Invariants and perfection verdict for graphs given as graph6.
    Check {
        /// A graph6 string or a file with one graph per line; stdin if absent.
        input: Option<String>,
    },
}

/// Outcome of a command: 0 verified/ok, 1 counterexample or failed claim.
enum Outcome {
    Ok,
    Counterexample,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Counterexample) => ExitCode::from(1),
        Err(Error::TheoremViolation { graph6, reason }) => {
            eprintln!("counterexample {graph6}: {reason}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn print_json<T: Serialize>(out: &mut impl Write, value: &T) -> clawfree::Result<()> {
    let s = serde_json::to_string(value).expect("serialisable");
    writeln!(out, "{s}").map_err(io_error)
}

fn io_error(e: io::Error) -> Error {
    Error::InvalidParameter(format!("i/o: {e}"))
}

/// Graph6 lines from a literal, a file, or stdin.
fn graph_lines(input: Option<String>) -> clawfree::Result<Vec<String>> {
    let lines: Vec<String> = match input.as_deref() {
        None | Some("-") => io::stdin().lock().lines().collect::<io::Result<_>>().map_err(io_error)?,
        Some(s) if Path::new(s).is_file() => {
            std::fs::read_to_string(s).map_err(io_error)?.lines().map(str::to_string).collect()
        }
        Some(s) => vec![s.to_string()],
    };
    Ok(lines.into_iter().map(|l| l.trim().to_string()).filter(|l| !l.is_empty()).collect())
}

fn run(command: Command) -> clawfree::Result<Outcome> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let outcome = match command {
        Command::Family { family, s, emit, verify } => {
            let spec = FamilySpec::new(family, s)?;
            if verify {
                let report = check_family_claims(spec)?;
                print_json(&mut out, &report)?;
                if report.passed() { Outcome::Ok } else { Outcome::Counterexample }
            } else {
                let lg = build_family(spec)?;
                match emit {
                    Some(Emit::Graph6) => writeln!(out, "{}", lg.graph).map_err(io_error)?,
                    None => print_json(
                        &mut out,
                        &serde_json::json!({
                            "family": family.to_string(),
                            "s": s,
                            "graph6": lg.graph.to_string(),
                            "n": lg.graph.n(),
                            "edges": lg.graph.edge_count(),
                            "labels": lg.labels,
                        }),
                    )?,
                }
                Outcome::Ok
            }
        }
        Command::Inflate { sizes } => {
            let (g, _) = build_inflation(&InflationSpec::new(sizes)?)?;
            writeln!(out, "{g}").map_err(io_error)?;
            Outcome::Ok
        }
        Command::Classify { input } => {
            for line in graph_lines(input)? {
                let g = parse_graph6(&line)?;
                let verdict = classify_claw_bull_free(&g)?;
                print_json(&mut out, &serde_json::json!({ "graph6": line, "verdict": verdict }))?;
            }
            Outcome::Ok
        }
        Command::Enumerate { max_n, connected, free, min_alpha, exclude_odd_cycles, emit } => {
            let config = EnumerationConfig {
                max_n,
                connected_only: connected,
                free_of: free,
                min_alpha,
                exclude_odd_cycles,
            };
            let mut per_n = vec![0usize; max_n];
            let mut failed = None;
            let total = enumerate(&config, |g| {
                per_n[g.n() - 1] += 1;
                if let Some(Emit::Graph6) = emit {
                    if let Err(e) = writeln!(out, "{g}") {
                        failed.get_or_insert(e);
                    }
                }
            })?;
            if let Some(e) = failed {
                return Err(io_error(e));
            }
            if emit.is_none() {
                print_json(&mut out, &serde_json::json!({ "total": total, "by_n": per_n }))?;
            }
            Outcome::Ok
        }
        Command::Verify { theorem, y, max_n, format } => {
            let report = verify(theorem, max_n, y)?;
            let format = match format {
                Format::Json => ReportFormat::Json,
                Format::Csv => ReportFormat::Csv,
            };
            let text = report_emit(&report, format);
            write!(out, "{text}").map_err(io_error)?;
            if format == ReportFormat::Json {
                writeln!(out).map_err(io_error)?;
            }
            if report.verified() { Outcome::Ok } else { Outcome::Counterexample }
        }
        Command::Check { input } => {
            for line in graph_lines(input)? {
                let g = parse_graph6(&line)?;
                print_json(&mut out, &GraphReport::compute(&g))?;
            }
            Outcome::Ok
        }
    };
    out.flush().map_err(io_error)?;
    Ok(outcome)
}
