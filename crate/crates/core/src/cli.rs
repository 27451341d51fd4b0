//! Command-line driver.
//!
//! Exit codes: 0 success or verified true, 1 verified false or a failed
//! structure check, 2 usage, parse or argument errors, 3 budget exceeded.

use std::io::{Read, Write};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::anticommuting::{self, classify_structure, construct_maximum, extend_to_maximum, is_anticommuting};
use crate::budget::Budget;
use crate::commuting::{decompose, is_maximally_commuting, random_maximal_commuting};
use crate::counting;
use crate::error::Error;
use crate::oracle;
use crate::pauli::{format_stanzas, parse_set_lines, Label, PauliSet};

/// Random seed: a fixed integer, or `random` for entropy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Seed {
    Fixed(u64),
    Random,
}

impl Seed {
    fn resolve(self) -> u64 {
        match self {
            Seed::Fixed(s) => s,
            Seed::Random => rand::random(),
        }
    }
}

impl FromStr for Seed {
    type Err = String;

    fn from_str(s: &str) -> Result<Seed, String> {
        if s == "random" {
            return Ok(Seed::Random);
        }
        s.parse().map(Seed::Fixed).map_err(|_| format!("expected an integer or `random`, got {s:?}"))
    }
}

#[derive(Parser, Debug)]
#[command(name = "abelian-pauli", version, about = "Maximal commuting and anticommuting sets of abelian Paulis")]
struct Cli {
    /// Wrap output as {"ok": bool, "result": ...}.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a maximal set.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Check whether a set is commuting or anticommuting.
    Verify {
        #[arg(value_parser = ["commuting", "anticommuting"])]
        kind: String,
        /// Also require maximality.
        #[arg(long)]
        maximal: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Extend an anticommuting minimal generating set to maximum size.
    Extend {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "0")]
        seed: Seed,
    },
    /// Split a set by its first factor.
    Decompose {
        #[command(flatten)]
        input: Input,
    },
    /// Decomposition form of a maximal anticommuting set.
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Closed-form counts.
    #[command(subcommand)]
    Count(CountCommand),
    /// Brute-force enumerations.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Args, Debug)]
struct Input {
    /// Input file in the line format; standard input if omitted.
    file: Option<String>,
    /// Number of factors, needed only for empty input.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// Maximum-size anticommuting set, deterministic unless --from is given.
    MaxAnticommuting {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value = "0")]
        seed: Seed,
        /// Extend this anticommuting minimal generating set instead.
        #[arg(long)]
        from: Option<String>,
    },
    /// Uniformly random maximal commuting subgroup.
    MaxCommuting {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "0")]
        seed: Seed,
    },
}

#[derive(Subcommand, Debug)]
enum CountCommand {
    CommutingSubgroups {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    MaxCommuting {
        #[arg(long)]
        n: usize,
    },
    AnticommutingExtensions {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        to: usize,
    },
    MaxAnticommuting {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Count (or list with --list) maximal commuting subgroups.
    MaxCommuting {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        list: bool,
    },
    /// Count (or list with --list) maximal anticommuting sets of size m.
    MaxAnticommuting {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        list: bool,
    },
    /// Census and coset-pattern checks.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "0")]
        seed: Seed,
    },
}

/// What a command produced: text for plain output, JSON for `--json`.
struct Outcome {
    text: String,
    value: Value,
    ok: bool,
}

impl Outcome {
    fn success(text: String, value: Value) -> Outcome {
        Outcome { text, value, ok: true }
    }

    fn set(s: &PauliSet) -> Outcome {
        Outcome::success(s.to_lines(), set_json(s))
    }

    fn verdict(v: bool) -> Outcome {
        Outcome { text: format!("{v}\n"), value: json!(v), ok: v }
    }

    fn count(v: impl ToString) -> Outcome {
        let s = v.to_string();
        Outcome::success(format!("{s}\n"), json!(s))
    }
}

fn set_json(s: &PauliSet) -> Value {
    json!(s.iter().map(|p| p.to_string()).collect::<Vec<_>>())
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
}

impl Io<'_> {
    fn read_set(&mut self, input: &Input) -> Result<PauliSet, Error> {
        let text = match &input.file {
            Some(path) => read_file(path)?,
            None => {
                let mut text = String::new();
                self.stdin
                    .read_to_string(&mut text)
                    .map_err(|e| Error::argument(format!("reading standard input: {e}")))?;
                text
            }
        };
        parse_set_lines(&text, input.n)
    }
}

fn read_file(path: &str) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::argument(format!("{path}: {e}")))
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Capacity(_) => 3,
        Error::Violation(_) => 1,
        Error::Parse { .. } | Error::Dimension { .. } | Error::Argument(_) | Error::Overflow => 2,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse { .. } => "parse",
        Error::Dimension { .. } => "dimension",
        Error::Argument(_) => "argument",
        Error::Capacity(_) => "capacity",
        Error::Violation(_) => "violation",
        Error::Overflow => "overflow",
    }
}

fn execute(command: Command, io: &mut Io<'_>) -> Result<Outcome, Error> {
    let budget = Budget::from_env()?;
    match command {
        Command::Gen(GenCommand::MaxAnticommuting { n, seed, from }) => {
            let set = match from {
                Some(path) => {
                    let g = parse_set_lines(&read_file(&path)?, n)?;
                    extend_to_maximum(&g, seed.resolve())?
                }
                None => construct_maximum(n.ok_or_else(|| Error::argument("--n is required without --from"))?)?,
            };
            Ok(Outcome::set(&set))
        }
        Command::Gen(GenCommand::MaxCommuting { n, seed }) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.resolve());
            Ok(Outcome::set(&random_maximal_commuting(n, &mut rng, &budget)?))
        }
        Command::Verify { kind, maximal, input } => {
            let s = io.read_set(&input)?;
            let verdict = match (kind.as_str(), maximal) {
                ("commuting", false) => s.is_pairwise_commuting(),
                ("commuting", true) => is_maximally_commuting(&s),
                (_, false) => is_anticommuting(&s),
                (_, true) => is_anticommuting(&s) && anticommuting::is_maximally_anticommuting(&s)?,
            };
            Ok(Outcome::verdict(verdict))
        }
        Command::Extend { input, seed } => {
            let g = io.read_set(&input)?;
            Ok(Outcome::set(&extend_to_maximum(&g, seed.resolve())?))
        }
        Command::Decompose { input } => {
            let d = decompose(&io.read_set(&input)?)?;
            let mut text = String::new();
            let mut value = serde_json::Map::new();
            for label in Label::ALL {
                let part = d.part(label);
                if !text.is_empty() {
                    text.push('\n');
                }
                text.push_str(&format!("# C_{label}\n{}", part.to_lines()));
                value.insert(label.to_string(), set_json(part));
            }
            let uvw: String = d.uvw.iter().map(|l| l.as_char()).collect();
            value.insert("uvw".into(), json!(uvw));
            Ok(Outcome::success(text, Value::Object(value)))
        }
        Command::Classify { input } => {
            let c = classify_structure(&io.read_set(&input)?)?;
            let uvw: String = c.decomposition.uvw.iter().map(|l| l.as_char()).collect();
            let overlaps: Vec<String> = c.singleton_overlaps.iter().map(|(a, b)| format!("{a}{b}")).collect();
            let [i, u, v, w] = c.sizes;
            let mut text = format!("case {}\nuvw {uvw}\nsizes i={i} u={u} v={v} w={w}\n", c.case);
            if !overlaps.is_empty() {
                text.push_str(&format!("overlaps {}\n", overlaps.join(" ")));
            }
            let value = json!({
                "case": c.case.to_string(),
                "uvw": uvw,
                "sizes": {"i": i, "u": u, "v": v, "w": w},
                "overlaps": overlaps,
            });
            Ok(Outcome::success(text, value))
        }
        Command::Count(c) => Ok(Outcome::count(match c {
            CountCommand::CommutingSubgroups { n, m } => counting::count_commuting_subgroups(n, m)?,
            CountCommand::MaxCommuting { n } => counting::count_maximal_commuting(n)?,
            CountCommand::AnticommutingExtensions { n, m, to } => counting::count_anticommuting_extensions(n, m, to)?,
            CountCommand::MaxAnticommuting { n, m } => counting::count_maximal_anticommuting(n, m)?,
        })),
        Command::Oracle(OracleCommand::MaxCommuting { n, list }) => {
            Ok(listing(oracle::enumerate_maximal_commuting(n, &budget)?, list))
        }
        Command::Oracle(OracleCommand::MaxAnticommuting { n, m, list }) => {
            Ok(listing(oracle::enumerate_maximal_anticommuting(n, m, &budget)?, list))
        }
        Command::Oracle(OracleCommand::Census { n, seed }) => {
            let r = oracle::census_check(n, &budget, seed.resolve())?;
            let census: usize = r.census_sets.values().sum();
            let cosets: usize = r.coset_sets.values().sum();
            let text = format!(
                "census sets {census}\ncoset sets {cosets}\neven-f cosets {}\nodd-f cosets {}\n",
                r.even_f_cosets, r.odd_f_cosets
            );
            let value = json!({
                "census_sets": census,
                "coset_sets": cosets,
                "even_f_cosets": r.even_f_cosets,
                "odd_f_cosets": r.odd_f_cosets,
            });
            Ok(Outcome::success(text, value))
        }
    }
}

fn listing(sets: Vec<PauliSet>, list: bool) -> Outcome {
    if list {
        let value = json!(sets.iter().map(set_json).collect::<Vec<_>>());
        Outcome::success(format_stanzas(&sets), value)
    } else {
        Outcome::count(sets.len())
    }
}

/// Runs the driver with explicit streams and returns the exit code.
pub fn run_with_io(
    argv: impl IntoIterator<Item = impl Into<std::ffi::OsString> + Clone>,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(stdout, "{rendered}") } else { write!(stderr, "{rendered}") };
            return code;
        }
    };
    let json = cli.json;
    let mut io = Io { stdin };
    let (code, written) = match execute(cli.command, &mut io) {
        Ok(out) => {
            let code = if out.ok { 0 } else { 1 };
            let written = if json {
                writeln!(stdout, "{}", json!({"ok": out.ok, "result": out.value}))
            } else {
                write!(stdout, "{}", out.text)
            };
            (code, written)
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            let written = if json {
                let result = json!({"error": error_kind(&e), "message": e.to_string()});
                writeln!(stdout, "{}", json!({"ok": false, "result": result}))
            } else {
                Ok(())
            };
            (exit_code(&e), written)
        }
    };
    match written {
        Ok(()) => code,
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: writing output: {e}");
            2
        }
    }
}

/// Runs the driver on the process streams.
pub fn run(argv: impl IntoIterator<Item = impl Into<std::ffi::OsString> + Clone>) -> i32 {
    let mut stdout = std::io::stdout().lock();
    let code = run_with_io(argv, &mut std::io::stdin().lock(), &mut stdout, &mut std::io::stderr());
    let _ = stdout.flush();
    code
}
