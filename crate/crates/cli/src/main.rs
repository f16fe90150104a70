//! `fools`: command-line front end for the solitaire engine, strategies and
//! census.
//!
//! Machine-readable results go to standard output as JSON (census records as
//! JSON lines after a `#schema=1` header, `enumerate` as graph6 lines);
//! human-readable progress and summaries go to standard error.

mod spec;

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use fools_core::census::{self, Cache, CensusOptions, Questions, SCHEMA_HEADER, SUITES};
use fools_core::engine::{self, Config, Solver};
use fools_core::graph::families::complete;
use fools_core::graph::invariants::independence_number;
use fools_core::graph::{enumerate_all, enumerate_connected, write_graph6, Graph, VertexSet};
use fools_core::strategies::{self, Claim, ClaimKind, StrategyCertificate};
use fools_core::{Error, Limits};

use spec::{parse_graph, parse_set};

#[derive(Parser)]
#[command(name = "fools", version, about = "Peg solitaire and fool's solitaire on graphs")]
struct Cli {
    /// Largest graph order for exact searches.
    #[arg(long, global = true)]
    cap: Option<usize>,

    /// Reserved; every computation is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fool's solitaire number with a witness game.
    Fools {
        graph: String,
        /// Search through independent sets instead of playing forward.
        #[arg(long)]
        dual: bool,
    },
    /// Plays a configuration with the given holes down to one peg.
    Solve {
        graph: String,
        /// Holes as `0,3,4`, a hex bitset `0x19`, or `-` for none.
        #[arg(long)]
        holes: String,
    },
    /// Solvable, freely solvable and freely neighborhood-solvable.
    Profile { graph: String },
    /// Emits a certificate built by one of the constructions.
    Strategy {
        #[command(subcommand)]
        kind: StrategyKind,
    },
    /// Checks a certificate file (`-` reads standard input).
    Check { path: PathBuf },
    /// Computes a record for every graph6 line of the input.
    Census {
        /// graph6 input file, `-` for standard input.
        #[arg(long = "in")]
        input: PathBuf,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads; defaults to the machine's parallelism.
        #[arg(long)]
        jobs: Option<usize>,
        /// Earlier census output whose records may be reused.
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Comma-separated subset of `alpha,fools,solvability`.
        #[arg(long, default_value = "alpha,fools,solvability")]
        questions: String,
    },
    /// Lists graphs on `n` vertices, one per isomorphism class, as graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Only connected graphs.
        #[arg(long)]
        connected: bool,
    },
    /// Runs a verification suite, or `all`.
    Verify {
        #[arg(long)]
        suite: String,
    },
}

#[derive(Subcommand)]
enum StrategyKind {
    /// `G ∨ H` from holes at a maximum independent set.
    Join {
        g: String,
        h: String,
        /// Holes; defaults to a maximum independent set of the join.
        #[arg(long)]
        set: Option<String>,
    },
    /// `G □ K_k` for `k >= 3`.
    Cartesian {
        g: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        set: Option<String>,
    },
    /// Bipartite graph with a Hamiltonian path.
    Hampath { g: String },
    /// `G □ H` from holes at the product of maximum terminal states.
    Product { g: String, h: String },
    /// `K_k` from a single hole to a chosen final peg.
    Complete {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        hole: usize,
        #[arg(long)]
        target: usize,
    },
}

/// Failure classes mapped to exit codes.
enum Failure {
    /// Bad input, unmet preconditions, I/O: exit 1.
    Usage(String),
    /// A check the program makes on its own results failed: exit 2.
    Assertion(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Strategy(_) => Failure::Assertion(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure::Usage(e)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let limits = cli.cap.map(Limits::with_cap).unwrap_or_default();
    match run(cli.command, &limits) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Assertion(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(2)
        }
    }
}

fn print_json(value: &impl serde::Serialize) -> Outcome {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value).map_err(io::Error::other)?;
    writeln!(out)?;
    Ok(())
}

fn print_cert(cert: &StrategyCertificate) -> Outcome {
    let mut out = io::stdout().lock();
    writeln!(out, "{}", cert.to_json())?;
    Ok(())
}

fn run(command: Command, limits: &Limits) -> Outcome {
    match command {
        Command::Fools { graph, dual } => {
            let g = parse_graph(&graph)?;
            let report = if dual {
                engine::fools_number_dual(&g, limits)?
            } else {
                engine::fools_number(&g, limits)?
            };
            report.verify(&g).map_err(|e| Failure::Assertion(e.to_string()))?;
            print_json(&report)
        }
        Command::Solve { graph, holes } => {
            let g = parse_graph(&graph)?;
            let start = Config::with_holes(g.n(), parse_set(&holes)?)?;
            let mut solver = Solver::new(&g, limits)?;
            match solver.reduce_to_single_peg(&start) {
                Some(seq) => {
                    let claim = Claim {
                        description: format!("{} with holes {:?}", write_graph6(&g), start.holes()),
                        kind: ClaimKind::Solvable,
                    };
                    let end = seq.replay(&g, &start)?;
                    let cert = StrategyCertificate {
                        claim,
                        graph: g,
                        start,
                        sequence: seq,
                        end,
                    };
                    cert.check().map_err(|e| Failure::Assertion(e.to_string()))?;
                    print_cert(&cert)
                }
                None => print_json(&"unsolvable"),
            }
        }
        Command::Profile { graph } => {
            let g = parse_graph(&graph)?;
            print_json(&engine::solvability_profile(&g, limits)?)
        }
        Command::Strategy { kind } => strategy(kind, limits),
        Command::Check { path } => {
            let mut text = String::new();
            open_input(&path)?.read_to_string(&mut text)?;
            let cert = StrategyCertificate::from_json(&text)?;
            match cert.check() {
                Ok(()) => print_json(&json!({ "valid": true, "claim": cert.claim })),
                Err(e) => {
                    print_json(&json!({ "valid": false, "reason": e.to_string() }))?;
                    Err(Failure::Assertion(e.to_string()))
                }
            }
        }
        Command::Census {
            input,
            out,
            jobs,
            cache,
            questions,
        } => run_census(input, out, jobs, cache, &questions, limits),
        Command::Enumerate { n, connected } => {
            let graphs: Vec<Graph> = if connected {
                enumerate_connected(n)?.collect()
            } else {
                enumerate_all(n)?
            };
            let mut out = BufWriter::new(io::stdout().lock());
            for g in graphs {
                writeln!(out, "{}", write_graph6(&g))?;
            }
            out.flush()?;
            Ok(())
        }
        Command::Verify { suite } => verify(&suite, limits),
    }
}

fn default_set(g: &Graph, limits: &Limits) -> Result<VertexSet, Failure> {
    Ok(independence_number(g, limits)?.sets[0])
}

fn strategy(kind: StrategyKind, limits: &Limits) -> Outcome {
    let cert = match kind {
        StrategyKind::Join { g, h, set } => {
            let (g, h) = (parse_graph(&g)?, parse_graph(&h)?);
            let s = match set {
                Some(s) => parse_set(&s)?,
                None => default_set(&fools_core::graph::join(&g, &h)?, limits)?,
            };
            strategies::solve_join(&g, &h, s, limits)?
        }
        StrategyKind::Cartesian { g, k, set } => {
            let g = parse_graph(&g)?;
            let s = match set {
                Some(s) => parse_set(&s)?,
                None if k >= 3 => default_set(&fools_core::graph::cartesian(&g, &complete(k))?.0, limits)?,
                None => VertexSet::EMPTY,
            };
            strategies::cartesian_kk_solve(&g, k, s, limits)?
        }
        StrategyKind::Hampath { g } => strategies::hampath_solve(&parse_graph(&g)?, limits)?,
        StrategyKind::Product { g, h } => {
            let (g, h) = (parse_graph(&g)?, parse_graph(&h)?);
            let sg = engine::fools_number(&g, limits)?.terminal;
            let sh = engine::fools_number(&h, limits)?.terminal;
            strategies::product_compose(&g, &h, sg, sh, limits)?
        }
        StrategyKind::Complete { k, hole, target } => {
            let seq = strategies::kk_solve_with_target(k, hole, target)?;
            let g = complete(k);
            let start = Config::single_hole(k, hole)?;
            let end = seq.replay(&g, &start)?;
            StrategyCertificate {
                claim: Claim {
                    description: format!("K_{k} from a hole at {hole} to a peg at {target}"),
                    kind: ClaimKind::Solvable,
                },
                graph: g,
                start,
                sequence: seq,
                end,
            }
        }
    };
    cert.check().map_err(|e| Failure::Assertion(e.to_string()))?;
    print_cert(&cert)
}

fn open_input(path: &PathBuf) -> io::Result<Box<dyn BufRead>> {
    if path.as_os_str() == "-" {
        Ok(Box::new(BufReader::new(io::stdin())))
    } else {
        Ok(Box::new(BufReader::new(File::open(path)?)))
    }
}

fn parse_questions(text: &str) -> Result<Questions, String> {
    let mut q = Questions {
        alpha: false,
        fools: false,
        solvability: false,
    };
    for part in text.split(',').map(str::trim) {
        match part {
            "alpha" => q.alpha = true,
            "fools" | "F" => q.fools = true,
            "solvability" => q.solvability = true,
            other => return Err(format!("unknown question `{other}`; use alpha, fools, solvability")),
        }
    }
    Ok(q)
}

fn run_census(
    input: PathBuf,
    out: Option<PathBuf>,
    jobs: Option<usize>,
    cache: Option<PathBuf>,
    questions: &str,
    limits: &Limits,
) -> Outcome {
    let questions = parse_questions(questions)?;
    let cache = match &cache {
        Some(p) if p.exists() => Some(Cache::load(BufReader::new(File::open(p)?))?),
        _ => None,
    };
    let reader = open_input(&input)?;
    let mut sink: BufWriter<Box<dyn Write>> = BufWriter::new(match &out {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout().lock()),
    });
    writeln!(sink, "{SCHEMA_HEADER}")?;
    let options = CensusOptions {
        questions,
        limits: *limits,
        jobs,
        cache: cache.as_ref(),
    };
    let summary = census::run_census(reader, &options, |rec| writeln!(sink, "{}", rec.to_json()))?;
    sink.flush()?;

    eprintln!(
        "{} records, {} connected: {} solvable, {} freely solvable, {} freely neighborhood-solvable",
        summary.records, summary.connected, summary.solvable, summary.freely_solvable, summary.freely_nbhd_solvable
    );
    let pct = |r: Option<f64>| r.map_or("n/a".to_string(), |r| format!("{:.2}%", 100.0 * r));
    eprintln!(
        "freely neighborhood-solvable: {} of freely solvable, {} of connected",
        pct(summary.nbhd_ratio_of_freely()),
        pct(summary.nbhd_ratio_of_connected())
    );
    if summary.cache_hits > 0 {
        eprintln!("{} records reused from the cache", summary.cache_hits);
    }
    for (line, msg) in &summary.skipped {
        eprintln!("skipped line {line}: {msg}");
    }
    if summary.violations.is_empty() {
        Ok(())
    } else {
        for v in &summary.violations {
            eprintln!("violation: {v}");
        }
        Err(Failure::Assertion(format!("{} record invariants failed", summary.violations.len())))
    }
}

fn verify(suite: &str, limits: &Limits) -> Outcome {
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let mut failed = 0;
    for name in names {
        let report = census::verify_theorems(name, limits)?;
        let bad = report.failures().count();
        eprintln!("{name}: {} instances, {bad} failed", report.entries.len());
        for e in report.failures() {
            eprintln!("  {}: predicted {}, computed {} ({})", e.instance, e.predicted, e.computed, e.certificate);
        }
        failed += bad;
        print_json(&report)?;
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Assertion(format!("{failed} instances disagree with the prediction")))
    }
}
