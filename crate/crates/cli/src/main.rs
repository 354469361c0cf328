//! `zagreb`: generate cycle-star graphs, apply operators, compute Zagreb
//! indices and run the closed-form verification grid.
//!
//! Graphs travel between commands as edge lists on stdin/stdout or in files.
//! Exit codes: 0 success (and, for `verify`, every verdict Match), 1 usage or
//! parse error, 2 verification finished with mismatches.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zagreb_core::io::{
    emit_dot, emit_edge_list, emit_graph6, emit_report, parse_edge_list, parse_graph6, ReportFormat,
};
use zagreb_core::operators::parse_pipeline;
use zagreb_core::{apply_pipeline, cycle_star, index_report, verify_grid, CycleStarParams, Graph};

type BoxError = Box<dyn std::error::Error>;

#[derive(Parser)]
#[command(
    name = "zagreb",
    version,
    about = "Zagreb indices of operator graphs of cycle-star graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph family member as an edge list.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Apply a comma-separated operator pipeline (subdivision, line, line-cut).
    Apply {
        #[arg(long)]
        ops: String,
        #[command(flatten)]
        io: GraphIo,
    },
    /// Print order, size, Zagreb indices, coindices and partitions.
    Indices {
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        io: GraphIo,
    },
    /// Check every closed form over a (k, leaves) grid.
    Verify {
        /// Cycle lengths, `A..B` inclusive or a single value.
        #[arg(long, default_value = "3..10")]
        k: String,
        /// Leaf counts n - k, `A..B` inclusive or a single value.
        #[arg(long, default_value = "1..10")]
        leaves: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Convert a graph to DOT or graph6.
    Export {
        #[arg(long, conflicts_with = "graph6", required_unless_present = "graph6")]
        dot: bool,
        #[arg(long)]
        graph6: bool,
        #[command(flatten)]
        io: GraphIo,
    },
}

#[derive(Subcommand)]
enum Family {
    /// CS_{k,n-k}: a k-cycle with `leaves` pendant vertices on one cycle vertex.
    CycleStar {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        leaves: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GraphIo {
    /// Input file; stdin when omitted.
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = InputFormat::EdgeList)]
    input_format: InputFormat,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    EdgeList,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Csv => ReportFormat::Csv,
            Format::Json => ReportFormat::Json,
        }
    }
}

fn read_input(path: &Option<PathBuf>) -> io::Result<String> {
    match path {
        Some(p) => fs::read_to_string(p),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn write_output(path: &Option<PathBuf>, text: &str) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

impl GraphIo {
    fn read_graph(&self) -> Result<Graph, BoxError> {
        let text = read_input(&self.input)?;
        Ok(match self.input_format {
            InputFormat::EdgeList => parse_edge_list(&text)?,
            InputFormat::Graph6 => parse_graph6(&text)?,
        })
    }
}

/// Parses `A..B` (inclusive) or `A`.
fn parse_range(s: &str) -> Result<(i64, i64), BoxError> {
    let bad = || format!("invalid range `{s}` (expected A..B or A)");
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok((
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            ))
        }
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            Ok((v, v))
        }
    }
}

fn run(cli: Cli) -> Result<u8, BoxError> {
    match cli.command {
        Command::Gen {
            family: Family::CycleStar { k, leaves, output },
        } => {
            let g = cycle_star(CycleStarParams::new(k, leaves)?);
            write_output(&output, &emit_edge_list(&g))?;
        }
        Command::Apply { ops, io } => {
            let ops = parse_pipeline(&ops)?;
            let g = apply_pipeline(&io.read_graph()?, &ops)?;
            write_output(&io.output, &emit_edge_list(&g))?;
        }
        Command::Indices { json, io } => {
            let r = index_report(&io.read_graph()?)?;
            let text = if json {
                serde_json::to_string_pretty(&r)? + "\n"
            } else {
                let mut s = format!(
                    "order {}\nsize {}\nm1 {}\nm2 {}\nm1_coindex {}\nm2_coindex {}\n",
                    r.order, r.size, r.m1, r.m2, r.m1_coindex, r.m2_coindex
                );
                for (d, c) in &r.degree_distribution {
                    s.push_str(&format!("degree {d} {c}\n"));
                }
                for ((a, b), c) in &r.edge_partition {
                    s.push_str(&format!("edge {a}-{b} {c}\n"));
                }
                s
            };
            write_output(&io.output, &text)?;
        }
        Command::Verify {
            k,
            leaves,
            format,
            output,
        } => {
            let (k_min, k_max) = parse_range(&k)?;
            let (l_min, l_max) = parse_range(&leaves)?;
            let report = verify_grid(k_min, k_max, l_min, l_max)?;
            write_output(&output, &emit_report(&report, format.into()))?;
            if !report.all_match() {
                return Ok(2);
            }
        }
        Command::Export { dot, graph6: _, io } => {
            let g = io.read_graph()?;
            let text = if dot {
                emit_dot(&g)
            } else {
                emit_graph6(&g)? + "\n"
            };
            write_output(&io.output, &text)?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
