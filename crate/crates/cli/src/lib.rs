//! Command-line front end for `gameprov`.
//!
//! [`run`] does all the work and returns the exit code together with the
//! text destined for stdout and stderr, so the binary is a thin wrapper and
//! tests can drive the CLI in-process.

use std::fs;
use std::io::Read;

use clap::{error::ErrorKind, Args, Parser, Subcommand, ValueEnum};

use gameprov::formats::{
    parse_apx, parse_edge_list, parse_solved_game_json, render_apx, render_edge_list,
    AfExplanation, AfSolution, Export,
};
use gameprov::{
    af_to_game, argument_provenance, match_rpq, provenance, solve, validate_solution,
    argumentation::solve_af, ArgumentationFramework, GameGraph, ProvenanceKind, Rpq,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "gameprov", version, about = "Solve win-move games and explain their values")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve a game given as an edge list.
    Solve {
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print the labeling sweeps, one line per step.
    Trace { input: String },
    /// Extract the provenance subgraph of one position.
    Prov(ProvArgs),
    /// Grounded labeling of an APX argumentation framework.
    Af(AfArgs),
    /// Check a solution; exits 2 when it is not correct.
    Validate {
        input: String,
        /// Read a labeled game in JSON form instead of solving an edge list.
        #[arg(long)]
        labeled: bool,
    },
    /// Convert between edge lists, APX, JSON and DOT.
    Convert {
        input: String,
        #[arg(long, value_enum)]
        to: Target,
    },
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("query").required(true).args(["kind", "rpq"]))]
struct ProvArgs {
    input: String,
    #[arg(long)]
    node: String,
    #[arg(long, value_enum)]
    kind: Option<Kind>,
    /// Regular path query over the labels Wpr, Wsc, W, L and D.
    #[arg(long)]
    rpq: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
struct AfArgs {
    input: String,
    /// Explain the status of this argument.
    #[arg(long, requires = "kind")]
    explain: Option<String>,
    #[arg(long, value_enum, requires = "explain")]
    kind: Option<AfKind>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Target {
    Json,
    Dot,
    Apx,
    Edgelist,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Potential,
    Actual,
    Primary,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AfKind {
    Actual,
    Primary,
}

impl From<Kind> for ProvenanceKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Potential => ProvenanceKind::Potential,
            Kind::Actual => ProvenanceKind::Actual,
            Kind::Primary => ProvenanceKind::Primary,
        }
    }
}

impl From<AfKind> for ProvenanceKind {
    fn from(k: AfKind) -> Self {
        match k {
            AfKind::Actual => ProvenanceKind::Actual,
            AfKind::Primary => ProvenanceKind::Primary,
        }
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// Runs the CLI on `args` (including the program name). `stdin` is read
/// only when an input path is `-`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match execute(cli.command, stdin) {
        Ok(outcome) => outcome,
        Err(msg) => Outcome::usage(msg),
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String, String> {
    if path == "-" {
        let mut text = String::new();
        stdin
            .read_to_string(&mut text)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn load_game(path: &str, stdin: &mut dyn Read) -> Result<GameGraph, String> {
    let text = read_input(path, stdin)?;
    parse_edge_list(&text).map_err(|e| format!("{path}: {e}"))
}

fn load_af(path: &str, stdin: &mut dyn Read) -> Result<ArgumentationFramework, String> {
    let text = read_input(path, stdin)?;
    parse_apx(&text).map_err(|e| format!("{path}: {e}"))
}

/// APX if the path says so, or if the first statement looks like `arg(` or
/// `att(`.
fn looks_like_apx(path: &str, text: &str) -> bool {
    if path.ends_with(".apx") {
        return true;
    }
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('%') && !l.starts_with('#'));
    first.is_some_and(|l| {
        ["arg", "att"]
            .iter()
            .any(|d| l.strip_prefix(d).is_some_and(|r| r.trim_start().starts_with('(')))
    })
}

fn render(x: &dyn Export, format: Format) -> String {
    match format {
        Format::Json => x.to_json() + "\n",
        Format::Dot => x.to_dot(),
    }
}

fn execute(command: Command, stdin: &mut dyn Read) -> Result<Outcome, String> {
    let out = match command {
        Command::Solve { input, format } => {
            let (solved, _) = solve(&load_game(&input, stdin)?);
            render(&solved, format)
        }
        Command::Trace { input } => solve(&load_game(&input, stdin)?).1.to_string(),
        Command::Prov(args) => {
            let (solved, _) = solve(&load_game(&args.input, stdin)?);
            let sub = match (args.kind, args.rpq) {
                (_, Some(expr)) => {
                    let r = Rpq::parse(&expr).map_err(|e| e.to_string())?;
                    match_rpq(&solved, &args.node, &r)
                }
                (Some(kind), None) => provenance(&solved, &args.node, kind.into()),
                (None, None) => unreachable!("clap requires --kind or --rpq"),
            }
            .map_err(|e| e.to_string())?;
            render(&sub, args.format)
        }
        Command::Af(args) => {
            let af = load_af(&args.input, stdin)?;
            match (args.explain, args.kind) {
                (Some(x), Some(kind)) => {
                    let why = argument_provenance(&af, &x, kind.into()).map_err(|e| e.to_string())?;
                    render(&AfExplanation(&why), args.format)
                }
                _ => render(&AfSolution(&solve_af(&af)), args.format),
            }
        }
        Command::Validate { input, labeled } => {
            let solved = if labeled {
                let text = read_input(&input, stdin)?;
                parse_solved_game_json(&text).map_err(|e| format!("{input}: {e}"))?
            } else {
                solve(&load_game(&input, stdin)?).0
            };
            let violations = validate_solution(&solved);
            if !violations.is_empty() {
                let listing = violations.iter().map(|v| format!("{v}\n")).collect();
                return Ok(Outcome {
                    code: EXIT_INVALID,
                    stdout: listing,
                    stderr: format!("{} violation(s)\n", violations.len()),
                });
            }
            "ok\n".to_string()
        }
        Command::Convert { input, to } => {
            let text = read_input(&input, stdin)?;
            let game = if looks_like_apx(&input, &text) {
                af_to_game(&parse_apx(&text).map_err(|e| format!("{input}: {e}"))?)
            } else {
                parse_edge_list(&text).map_err(|e| format!("{input}: {e}"))?
            };
            match to {
                Target::Json => game.to_json() + "\n",
                Target::Dot => game.to_dot(),
                Target::Apx => render_apx(&ArgumentationFramework::from_game(&game)),
                Target::Edgelist => render_edge_list(&game),
            }
        }
    };
    Ok(Outcome::ok(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn apx_sniffing() {
        assert!(looks_like_apx("x.apx", ""));
        assert!(looks_like_apx("-", "% c\n\narg(a).\n"));
        assert!(looks_like_apx("-", "att (a,b)."));
        assert!(!looks_like_apx("-", "arg x\n"));
        assert!(!looks_like_apx("-", "a b\n"));
    }

    #[test]
    fn bad_flags_exit_with_usage() {
        let out = run(["gameprov", "solve", "x", "--bogus"], &mut std::io::empty());
        assert_eq!(out.code, EXIT_USAGE);
        assert!(!out.stderr.is_empty());
        let out = run(["gameprov"], &mut std::io::empty());
        assert_eq!(out.code, EXIT_USAGE);
    }

    #[test]
    fn help_is_success() {
        let out = run(["gameprov", "--help"], &mut std::io::empty());
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stdout.contains("solve"));
    }

    #[test]
    fn stdin_input() {
        let mut input = "a b\n".as_bytes();
        let out = run(["gameprov", "trace", "-"], &mut input);
        assert_eq!(out.stdout, "step 0 RR: b\nstep 1 GR: a\nstep inf DRAW:\n");
    }
}
