//! The `zero-hecke` command line.
//!
//! Exit status: 0 when every check passes, 1 when a mathematical check
//! fails, 2 for usage and configuration errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::HeckeAlgebra;
use crate::diagram::{self, Orientation, SignedDiagram};
use crate::error::{Error, Result};
use crate::monoid::MAX_TABLE_N;
use crate::render;
use crate::repr;
use crate::verify::{self, Suite, SuiteOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const DEFAULT_MAX_N: usize = 8;
const WARN_ABOVE_N: usize = 7;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "zero-hecke", version, about = "Orthogonal idempotents of the 0-Hecke algebra from signed diagrams")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads for the parallel checks.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,

    /// Largest N accepted by --n.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Size of the symmetric group.
    #[arg(long)]
    pub n: usize,

    #[arg(long, value_enum, default_value_t = Orientation::Standard)]
    pub orientation: Orientation,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print diagram demipotents expanded in the π basis.
    Expand {
        #[command(flatten)]
        common: Common,
        /// A sign string such as `+-+`; all diagrams when omitted.
        #[arg(long)]
        diagram: Option<String>,
    },
    /// Nilpotence degree of every diagram demipotent for N = 2..=n.
    NilpotenceTable {
        #[command(flatten)]
        common: Common,
    },
    /// Run verification suites.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Stop at the first failing check.
        #[arg(long)]
        fail_fast: bool,
    },
    /// Write every idempotent, one JSON record per line (or a CSV summary).
    Export {
        #[command(flatten)]
        common: Common,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Expand { common, .. }
            | Command::NilpotenceTable { common }
            | Command::Verify { common, .. }
            | Command::Export { common } => common,
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `stdout` and diagnostics to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    if let Err(msg) = validate(&cli) {
        let _ = writeln!(stderr, "error: {msg}");
        return EXIT_USAGE;
    }
    let n = cli.command.common().n;
    if n > WARN_ABOVE_N {
        let _ = writeln!(stderr, "warning: N = {n} needs memory and time on the order of N!·2^(N-1)");
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: cannot start {} worker threads: {e}", cli.jobs);
            return EXIT_USAGE;
        }
    };
    match pool.install(|| execute(&cli.command)) {
        Ok(outcome) => {
            if let Some(note) = &outcome.note {
                let _ = writeln!(stderr, "{note}");
            }
            let write = match &cli.command.common().out {
                Some(path) => {
                    std::fs::write(path, &outcome.text).map_err(|source| Error::Io { path: path.clone(), source })
                }
                None => stdout
                    .write_all(outcome.text.as_bytes())
                    .map_err(|source| Error::Io { path: "<stdout>".into(), source }),
            };
            if let Err(e) = write {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_USAGE;
            }
            if outcome.passed {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn validate(cli: &Cli) -> std::result::Result<(), String> {
    if cli.jobs == 0 {
        return Err("--jobs must be at least 1".into());
    }
    if cli.max_n > MAX_TABLE_N {
        return Err(format!("--max-n cannot exceed {MAX_TABLE_N}"));
    }
    let n = cli.command.common().n;
    if !(2..=cli.max_n).contains(&n) {
        return Err(format!("--n must be in 2..={} (got {n})", cli.max_n));
    }
    if let Command::Expand { diagram: Some(s), .. } = &cli.command {
        let d: SignedDiagram = s.parse().map_err(|e: Error| e.to_string())?;
        if d.nodes() != n - 1 {
            return Err(format!("diagram {d} has {} nodes; N = {n} needs {}", d.nodes(), n - 1));
        }
    }
    Ok(())
}

struct Outcome {
    text: String,
    passed: bool,
    note: Option<String>,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, passed: true, note: None }
    }
}

fn execute(command: &Command) -> Result<Outcome> {
    let common = command.common();
    let o = common.orientation;
    match command {
        Command::Expand { diagram, .. } => {
            let alg = HeckeAlgebra::new(common.n)?;
            let diagrams: Vec<SignedDiagram> = match diagram {
                Some(s) => vec![s.parse()?],
                None => SignedDiagram::all(common.n - 1).collect(),
            };
            let rows = diagrams.iter().map(|d| render::expansion_row(&alg, d, o)).collect::<Result<Vec<_>>>()?;
            let text = match common.format {
                Format::Text if diagram.is_some() => format!("{}\n", rows[0].expanded),
                Format::Text => {
                    let w = rows.iter().map(|r| display_width(&r.factored)).max().unwrap_or(0);
                    rows.iter()
                        .map(|r| {
                            let pad = " ".repeat(w - display_width(&r.factored));
                            format!("{}  {}{pad}  {}\n", r.diagram, r.factored, r.expanded)
                        })
                        .collect()
                }
                Format::Json => json_lines(&rows)?,
                Format::Csv => render::to_csv(&rows)?,
            };
            Ok(Outcome::ok(text))
        }
        Command::NilpotenceTable { .. } => {
            let rows = render::nilpotence_rows(common.n, o)?;
            let text = match common.format {
                Format::Text => render::nilpotence_text(&rows),
                Format::Json => json_lines(&rows)?,
                Format::Csv => render::to_csv(&rows)?,
            };
            Ok(Outcome::ok(text))
        }
        Command::Verify { suite, fail_fast, .. } => {
            let alg = HeckeAlgebra::new(common.n)?;
            let report = verify::run_suite(&alg, *suite, SuiteOptions { orientation: o, fail_fast: *fail_fast })?;
            let note = format!("verify: N={} suite={} in {:.2?}", common.n, suite.as_str(), report.elapsed);
            let text = match common.format {
                Format::Text => render::report_text(&report),
                Format::Json => render::report_json(&report)? + "\n",
                Format::Csv => render::report_csv(&report)?,
            };
            Ok(Outcome { text, passed: report.passed(), note: Some(note) })
        }
        Command::Export { .. } => {
            let alg = HeckeAlgebra::new(common.n)?;
            let idems = diagram::all_idempotents(&alg, o)?;
            let text = match common.format {
                Format::Json | Format::Text => render::idempotents_jsonl(&idems)?,
                Format::Csv => {
                    let records: Vec<repr::DiagramRecord> =
                        idems.iter().map(|i| repr::DiagramRecord::new(&alg, i)).collect();
                    render::records_csv(&records)?
                }
            };
            Ok(Outcome::ok(text))
        }
    }
}

/// Column width ignoring the combining macron in `π̄`.
fn display_width(s: &str) -> usize {
    s.chars().filter(|&c| c != '\u{304}').count()
}

fn json_lines<T: serde::Serialize>(rows: &[T]) -> Result<String> {
    let mut out = String::new();
    for r in rows {
        out.push_str(&serde_json::to_string(r)?);
        out.push('\n');
    }
    Ok(out)
}

/// Convenience wrapper writing to the process streams.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}
