//! Command-line surface for the imbalance toolkit.
//!
//! Exit codes: 0 success (feasible, equivalent), 1 negative domain answer
//! (infeasible sequence, gcd above capacity, counterexample found), 2 invalid
//! input (parse errors, unsorted sequences, enumeration too large), 3 breach
//! of an internal invariant.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rdigraph::checks::{
    check_feasible_nondecreasing, check_feasible_nonincreasing, positional_bounds,
    square_inequality, Verdict,
};
use rdigraph::fileio::{parse_graph, parse_sequence, serialize_graph, to_dot};
use rdigraph::imbalance_set::{construct_from_imbalance_set, imbalance_set_of};
use rdigraph::moves::reduce_with_log;
use rdigraph::oracle::{enumerate_imbalance_sequences, EnumerationLimits};
use rdigraph::realize::{min_arc_lower_bound, realize};
use rdigraph::{Error, RGraph, SortOrder};

#[derive(Parser)]
#[command(
    name = "rdigraph",
    version,
    about = "Imbalance sequences of capped directed multigraphs: check, realize, transform"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    NonDecreasing,
    NonIncreasing,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumerateMode {
    /// List every achievable imbalance sequence.
    Sequences,
    /// Cross-check the enumeration against the feasibility check.
    Verify,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a sequence is an imbalance sequence at capacity r.
    Check {
        /// Comma-separated integers, e.g. "-2,-2,4".
        #[arg(allow_hyphen_values = true)]
        sequence: String,
        #[arg(short = 'r', long = "capacity")]
        capacity: u32,
        /// How the sequence is sorted.
        #[arg(long, value_enum, default_value = "non-decreasing")]
        order: OrderArg,
    },
    /// Build a minimum-arc realization of a feasible sequence.
    Realize {
        /// Non-decreasing comma-separated integers.
        #[arg(allow_hyphen_values = true)]
        sequence: String,
        #[arg(short = 'r', long = "capacity")]
        capacity: u32,
        /// Write the graph file here instead of standard output.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Apply arc-reducing moves to a graph file until none applies.
    Reduce {
        input: PathBuf,
        /// Write the reduced graph file here instead of standard output.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Build a graph whose distinct imbalances are P and the negations of Q.
    ImbalanceSet {
        /// Strictly increasing positive integers, e.g. "1,2".
        #[arg(long)]
        p: String,
        /// Strictly increasing positive integers; realized negated.
        #[arg(long)]
        q: String,
        #[arg(short = 'r', long = "capacity")]
        capacity: u32,
        /// Write the graph file here instead of standard output.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Print a graph file's imbalance data and verify its own sequence.
    Diagnose { input: PathBuf },
    /// Enumerate every graph on n vertices at capacity r.
    Enumerate {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'r', long = "capacity")]
        capacity: u32,
        #[arg(value_enum)]
        mode: EnumerateMode,
    },
    /// Emit a graph file as DOT.
    Dot { input: PathBuf },
}

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::Infeasible(_) | Error::GcdExceedsCapacity { .. } | Error::NotRealizable => 1,
        Error::InternalContradiction(_) | Error::MoveNotApplicable(_) => 3,
        _ => 2,
    }
}

fn fail(e: Error) -> u8 {
    eprintln!("error: {e}");
    exit_for(&e)
}

fn join(values: &[i64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn format_set(set: &BTreeSet<i64>) -> String {
    let inner = set
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    format!("{{{inner}}}")
}

fn read_graph(path: &PathBuf) -> Result<RGraph, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{}: {e}", path.display()),
    })?;
    parse_graph(&text)
}

fn emit_graph(g: &RGraph, out: Option<&PathBuf>) -> Result<(), Error> {
    let text = serialize_graph(g);
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::Parse {
            line: 0,
            msg: format!("{}: {e}", path.display()),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_check(sequence: &str, capacity: u32, order: OrderArg) -> u8 {
    let run = || -> Result<Verdict, Error> {
        let values = parse_sequence(sequence)?;
        match order {
            OrderArg::NonDecreasing => check_feasible_nondecreasing(&values, capacity),
            OrderArg::NonIncreasing => check_feasible_nonincreasing(&values, capacity),
        }
    };
    match run() {
        Ok(verdict) => match verdict.witness {
            None => {
                println!("FEASIBLE");
                0
            }
            Some(w) => {
                println!("INFEASIBLE at k={}: {} vs {}", w.index, w.lhs, w.rhs);
                1
            }
        },
        Err(e) => fail(e),
    }
}

fn cmd_realize(sequence: &str, capacity: u32, out: Option<&PathBuf>) -> u8 {
    let run = || -> Result<(), Error> {
        let values = parse_sequence(sequence)?;
        let re = realize(&values, capacity)?;
        println!("arcs: {}", re.arc_count);
        let map = re
            .vertex_map
            .iter()
            .enumerate()
            .map(|(pos, v)| format!("{pos}->{v}"))
            .collect::<Vec<_>>()
            .join(" ");
        println!("vertex map: {map}");
        emit_graph(&re.graph, out)
    };
    run().map_or_else(fail, |()| 0)
}

fn cmd_reduce(input: &PathBuf, out: Option<&PathBuf>) -> u8 {
    let run = || -> Result<(), Error> {
        let g = read_graph(input)?;
        let (reduced, log) = reduce_with_log(&g);
        println!("arcs before: {}", g.arc_count());
        println!("arcs after: {}", reduced.arc_count());
        for m in &log {
            println!("applied: {m}");
        }
        emit_graph(&reduced, out)
    };
    run().map_or_else(fail, |()| 0)
}

fn cmd_imbalance_set(p: &str, q: &str, capacity: u32, out: Option<&PathBuf>) -> u8 {
    let run = || -> Result<(), Error> {
        let p = parse_sequence(p)?;
        let q = parse_sequence(q)?;
        let (g, layout) = construct_from_imbalance_set(&p, &q, capacity)?;
        let blocks = layout
            .blocks
            .iter()
            .map(|b| format!("{}[{}..{})", b.name, b.first_vertex, b.first_vertex + b.size))
            .collect::<Vec<_>>()
            .join(" ");
        println!("vertices: {}", layout.total_vertices);
        println!("blocks: {blocks}");
        println!("imbalance set: {}", format_set(&imbalance_set_of(&g)));
        emit_graph(&g, out)
    };
    run().map_or_else(fail, |()| 0)
}

fn cmd_diagnose(input: &PathBuf) -> u8 {
    let run = || -> Result<u8, Error> {
        let g = read_graph(input)?;
        let asc = g.imbalance_sequence(SortOrder::NonDecreasing);
        let desc = g.imbalance_sequence(SortOrder::NonIncreasing);
        println!("vertices: {}", g.vertex_count());
        println!("capacity: {}", g.capacity());
        println!("arcs: {}", g.arc_count());
        println!("sequence (non-decreasing): {}", join(asc.values()));
        println!("sequence (non-increasing): {}", join(desc.values()));
        println!("imbalance set: {}", format_set(&imbalance_set_of(&g)));
        println!("min-arc lower bound: {}", min_arc_lower_bound(asc.values())?);
        println!("transitive: {}", if g.is_transitive() { "yes" } else { "no" });

        let r = g.capacity();
        let mut broken = false;
        let mut report = |name: &str, verdict: Verdict| {
            match verdict.witness {
                None => println!("{name}: PASS"),
                Some(w) => {
                    println!("{name}: FAIL ({w})");
                    broken = true;
                }
            };
        };
        report("feasibility check", check_feasible_nondecreasing(asc.values(), r)?);
        report("positional bounds", positional_bounds(asc.values(), r)?);
        report("square-sum bound", square_inequality(desc.values(), r)?);
        // A graph's own sequence can only fail these if the library is wrong.
        Ok(if broken { 3 } else { 0 })
    };
    run().unwrap_or_else(fail)
}

fn nondecreasing_candidates(n: usize, limit: i64) -> Vec<Vec<i64>> {
    fn rec(out: &mut Vec<Vec<i64>>, current: &mut Vec<i64>, n: usize, from: i64, limit: i64) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in from..=limit {
            current.push(v);
            rec(out, current, n, v, limit);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut out, &mut Vec::with_capacity(n), n, -limit, limit);
    out
}

fn cmd_enumerate(n: usize, capacity: u32, mode: EnumerateMode) -> u8 {
    let run = || -> Result<u8, Error> {
        let limits = EnumerationLimits::new(n, capacity);
        let enumerated = enumerate_imbalance_sequences(&limits)?;
        match mode {
            EnumerateMode::Sequences => {
                for seq in &enumerated {
                    println!("{}", join(seq));
                }
                Ok(0)
            }
            EnumerateMode::Verify => {
                let limit = i64::from(capacity) * (n as i64 - 1);
                let checked: BTreeSet<Vec<i64>> = nondecreasing_candidates(n, limit)
                    .into_iter()
                    .filter(|b| {
                        check_feasible_nondecreasing(b, capacity)
                            .map(|v| v.ok())
                            .unwrap_or(false)
                    })
                    .collect();
                if let Some(seq) = enumerated.difference(&checked).next() {
                    println!("COUNTEREXAMPLE: {} (enumerated but rejected by the check)", join(seq));
                    return Ok(1);
                }
                if let Some(seq) = checked.difference(&enumerated).next() {
                    println!("COUNTEREXAMPLE: {} (accepted by the check but not enumerated)", join(seq));
                    return Ok(1);
                }
                println!("EQUIVALENT");
                Ok(0)
            }
        }
    };
    run().unwrap_or_else(fail)
}

fn cmd_dot(input: &PathBuf) -> u8 {
    let run = || -> Result<(), Error> {
        let g = read_graph(input)?;
        print!("{}", to_dot(&g));
        Ok(())
    };
    run().map_or_else(fail, |()| 0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Check {
            sequence,
            capacity,
            order,
        } => cmd_check(sequence, *capacity, *order),
        Command::Realize {
            sequence,
            capacity,
            out,
        } => cmd_realize(sequence, *capacity, out.as_ref()),
        Command::Reduce { input, out } => cmd_reduce(input, out.as_ref()),
        Command::ImbalanceSet {
            p,
            q,
            capacity,
            out,
        } => cmd_imbalance_set(p, q, *capacity, out.as_ref()),
        Command::Diagnose { input } => cmd_diagnose(input),
        Command::Enumerate { n, capacity, mode } => cmd_enumerate(*n, *capacity, *mode),
        Command::Dot { input } => cmd_dot(input),
    };
    ExitCode::from(code)
}
