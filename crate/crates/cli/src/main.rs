use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use outerinj::enumgen::GraphClassFilter;
use outerinj::Girth;
use outerinj_cli::commands::{self, Extra, Failure, Outcome, Theorem, EXIT_PARSE};

/// Injective colorings of outerplanar graphs.
///
/// Graphs are edge-list documents: a header `p N` then one `u v` pair per
/// line (0-based, `#` comments). Use `-` to read from stdin.
#[derive(Parser)]
#[command(name = "outerinj", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a coloring for injectivity and optional side properties.
    Validate {
        input: PathBuf,
        /// Colors as whitespace-separated integers or a `color --json` document.
        #[arg(long)]
        coloring: PathBuf,
        /// Also require at most three colors on every path of length three
        /// through two 2-vertices.
        #[arg(long, conflicts_with = "exactly3")]
        at_most3: bool,
        /// Also require exactly three colors on those paths.
        #[arg(long)]
        exactly3: bool,
        /// Also require distinct neighborhood color sets across edges joining
        /// two 3-vertices.
        #[arg(long)]
        neighborhoods: bool,
        #[arg(long)]
        json: bool,
    },
    /// Color with a constructive procedure.
    Color {
        input: PathBuf,
        /// auto, 15, 16, 20, 7 or 14.
        #[arg(long, default_value = "auto")]
        theorem: Theorem,
        #[arg(long)]
        json: bool,
    },
    /// Injective chromatic number by exact search.
    Exact {
        input: PathBuf,
        /// Largest palette to try; defaults to Δ² - Δ + 1.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// List every 2-connected outerplanar graph on 0..N, one per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        min_delta: usize,
        #[arg(long)]
        max_delta: Option<usize>,
        /// Integer or `inf`.
        #[arg(long, value_parser = commands::parse_girth)]
        min_girth: Option<Girth>,
        /// Reject inner faces of degree R mod M, given as `M:R`.
        #[arg(long, value_parser = commands::parse_residue)]
        forbid_face_mod: Option<(usize, usize)>,
        /// Print counts and a (Δ, girth) histogram instead of the graphs.
        #[arg(long)]
        stats: bool,
        #[arg(long)]
        json: bool,
    },
    /// Find a graph with the given Δ, girth and injective chromatic number.
    Search {
        #[arg(long)]
        delta: usize,
        #[arg(long, value_parser = commands::parse_girth)]
        girth: Girth,
        #[arg(long)]
        chi: usize,
        #[arg(long)]
        nmax: usize,
    },
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map(|_| text).map_err(|e| Failure { code: EXIT_PARSE, message: format!("{}: {e}", path.display()) })
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    match cli.command {
        Command::Validate { input, coloring, at_most3, exactly3, neighborhoods, json } => {
            let extras: Vec<Extra> =
                [(at_most3, Extra::AtMost3), (exactly3, Extra::Exactly3), (neighborhoods, Extra::Neighborhoods)]
                    .into_iter()
                    .filter_map(|(on, e)| on.then_some(e))
                    .collect();
            commands::validate(&read(&input)?, &read(&coloring)?, &extras, json)
        }
        Command::Color { input, theorem, json } => commands::color(&read(&input)?, theorem, json),
        Command::Exact { input, cap, json } => commands::exact(&read(&input)?, cap, json),
        Command::Enumerate { n, min_delta, max_delta, min_girth, forbid_face_mod, stats, json } => {
            let filter = GraphClassFilter {
                min_delta,
                max_delta: max_delta.unwrap_or(usize::MAX),
                min_girth: min_girth.unwrap_or(Girth::Finite(0)),
                require_2connected: true,
                forbid_face_degree_mod: forbid_face_mod,
            };
            commands::enumerate(n, filter, stats, json)
        }
        Command::Search { delta, girth, chi, nmax } => commands::search(delta, girth, chi, nmax),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // bad arguments share the parse-error code; clap would use 2
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_PARSE as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code as u8)
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code as u8)
        }
    }
}
