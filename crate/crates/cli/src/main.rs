//! `shannon`: solve, analyse and verify Shannon vertex-switching games.
//!
//! Exit status is 0 on success, 1 when the input is well formed but the
//! requested analysis does not apply to it (or a verification fails), and
//! 2 when the input cannot be read or parsed.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use shannon_core::census::{enumerate_connected, run_census, CensusRow};
use shannon_core::detect::{fill_in, Verdict};
use shannon_core::hex::{annotate, to_graph, HexBoard};
use shannon_core::verify::{self, SuiteResult};
use shannon_core::{Error, Graph, MultiGame, Player, Position, Solver, VertexSet};

#[derive(Parser)]
#[command(name = "shannon", version, about = "Shannon vertex-switching game analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide the winner of a Shannon game.
    Solve {
        /// Graph file in the text format; `-` or absent reads stdin.
        input: Option<PathBuf>,
        #[arg(long, default_value = "short")]
        mover: Player,
        /// Also print the first winning move for the mover.
        #[arg(long)]
        strategy: bool,
    },
    /// Solve the local game on a playing area.
    Multisolve {
        input: Option<PathBuf>,
        /// Comma-separated vertices of the area.
        #[arg(long, value_delimiter = ',', required = true)]
        area: Vec<usize>,
        #[arg(long, default_value = "short")]
        first: Player,
    },
    /// Run fill-in and print every fact found and the reduced graph.
    Detect {
        input: Option<PathBuf>,
        /// Check each fact against the exhaustive solvers where feasible.
        #[arg(long)]
        verify: bool,
    },
    /// Exhaustive cross-checks over all connected graphs up to an order.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Count graph properties over a graph6 stream of connected graphs.
    Census {
        /// graph6 file; `-` or absent reads stdin.
        input: Option<PathBuf>,
        #[arg(long)]
        n: usize,
        /// Generate the graphs instead of reading them.
        #[arg(long)]
        generate: bool,
    },
    /// Analyse a Hex position.
    Hex {
        input: Option<PathBuf>,
        /// Print the board with dead, captured and lost cells marked.
        #[arg(long)]
        annotate: bool,
        /// Decide the winner.
        #[arg(long)]
        solve: bool,
        #[arg(long, default_value = "short")]
        mover: Player,
    },
}

/// Failure of a subcommand, with the exit status it maps to.
enum Failure {
    Input(String),
    Analysis(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        if e.is_malformed_input() {
            Failure::Input(e.to_string())
        } else {
            Failure::Analysis(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn open(input: &Option<PathBuf>) -> Result<Box<dyn BufRead>, Failure> {
    match input {
        Some(p) if p.as_os_str() != "-" => {
            let f = File::open(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
            Ok(Box::new(BufReader::new(f)))
        }
        _ => Ok(Box::new(BufReader::new(io::stdin()))),
    }
}

fn read_text(input: &Option<PathBuf>) -> Result<String, Failure> {
    let mut s = String::new();
    open(input)?.read_to_string(&mut s)?;
    Ok(s)
}

fn read_graph(input: &Option<PathBuf>) -> Result<Graph, Failure> {
    Ok(Graph::parse_text(&read_text(input)?)?)
}

fn solve_cmd(out: &mut impl Write, g: Graph, mover: Player, strategy: bool) -> Outcome {
    let p = Position::new(g, mover)?;
    let mut solver = Solver::new();
    writeln!(out, "{}", solver.solve(&p))?;
    if strategy {
        match solver.winning_move(&p) {
            Some(v) => writeln!(out, "move {v}")?,
            None => writeln!(out, "move none")?,
        }
    }
    Ok(())
}

fn detect_cmd(out: &mut impl Write, g: &Graph, check: bool) -> Outcome {
    let report = fill_in(g)?;
    let mut refuted = 0;
    if check {
        let mut lines: Vec<String> = Vec::new();
        for step in &report.steps {
            let v = step.verify()?;
            refuted += (v == Verdict::Refuted) as usize;
            lines.push(format!("{}\t{v}", step.fact));
        }
        lines.sort();
        lines.dedup();
        for l in lines {
            writeln!(out, "{l}")?;
        }
    } else {
        for l in report.lines() {
            writeln!(out, "{l}")?;
        }
    }
    writeln!(out, "reduced")?;
    write!(out, "{}", report.reduced)?;
    if refuted > 0 {
        return Err(Failure::Analysis(format!("{refuted} facts refuted")));
    }
    Ok(())
}

fn print_suite(out: &mut impl Write, r: &SuiteResult) -> io::Result<()> {
    let status = if r.passed() { "pass" } else { "FAIL" };
    writeln!(
        out,
        "{status}\t{}\tchecks={} failures={} skipped={}",
        r.name, r.checks, r.failure_count, r.skipped
    )?;
    for f in &r.failures {
        writeln!(out, "\t{f}")?;
    }
    Ok(())
}

fn verify_cmd(out: &mut impl Write, max_n: usize) -> Outcome {
    let mut graphs = Vec::new();
    for n in 1..=max_n {
        graphs.extend(enumerate_connected(n)?);
    }
    let suites: [fn(&[Graph]) -> SuiteResult; 10] = [
        verify::detector_soundness,
        verify::fill_in_preservation,
        verify::domination_equivalence,
        verify::fast_path_agreement,
        verify::robustness,
        verify::three_domination,
        verify::four_domination,
        verify::dead_vertex_edge_consistency,
        verify::capture_pruning,
        verify::edge_monotonicity,
    ];
    let mut failed = 0;
    for suite in suites {
        let r = suite(&graphs);
        print_suite(out, &r)?;
        failed += !r.passed() as usize;
    }
    if failed > 0 {
        return Err(Failure::Analysis(format!("{failed} suites failed")));
    }
    Ok(())
}

fn census_cmd(out: &mut impl Write, input: &Option<PathBuf>, n: usize, generate: bool) -> Outcome {
    let row = if generate {
        CensusRow::from_graphs(n, &enumerate_connected(n)?)
    } else {
        run_census(open(input)?, n)?
    };
    writeln!(out, "{row}")?;
    Ok(())
}

fn hex_cmd(out: &mut impl Write, board: &HexBoard, show: bool, solve: bool, mover: Player) -> Outcome {
    if !board.is_balanced() {
        eprintln!("warning: stone counts differ by more than one");
    }
    if show || !solve {
        let a = annotate(board)?;
        write!(out, "{}", a.to_text())?;
        for l in a.report.lines() {
            writeln!(out, "{l}")?;
        }
    }
    if solve {
        solve_cmd(out, to_graph(board)?, mover, false)?;
    }
    Ok(())
}

fn run(cli: Cli, out: &mut impl Write) -> Outcome {
    match cli.command {
        Command::Solve {
            input,
            mover,
            strategy,
        } => solve_cmd(out, read_graph(&input)?, mover, strategy),
        Command::Multisolve { input, area, first } => {
            let g = read_graph(&input)?;
            let area: VertexSet = area.iter().collect();
            let m = MultiGame::new(&g, area)?;
            writeln!(out, "{}", m.solve(first))?;
            Ok(())
        }
        Command::Detect { input, verify } => detect_cmd(out, &read_graph(&input)?, verify),
        Command::Verify { max_n } => verify_cmd(out, max_n),
        Command::Census { input, n, generate } => census_cmd(out, &input, n, generate),
        Command::Hex {
            input,
            annotate,
            solve,
            mover,
        } => {
            let board = HexBoard::parse(&read_text(&input)?)?;
            hex_cmd(out, &board, annotate, solve, mover)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Analysis(msg)) => {
            let _ = out.flush();
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
