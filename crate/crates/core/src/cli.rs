//! The `sxq` command line.
//!
//! Exit status: 0 when the query matched, 1 when it did not, 2 on usage,
//! parse or I/O errors.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::query::{compile_query, parse_query, BindingSet, CompiledQuery};
use crate::reader::read;
use crate::value::Value;

pub const MATCHED: i32 = 0;
pub const NO_MATCH: i32 = 1;
pub const ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "sxq", version, about = "Match s-expression query templates against data and print variable bindings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the bindings of the first solution.
    Match {
        query: String,
        /// Input file; standard input when omitted.
        file: Option<PathBuf>,
    },
    /// Print the bindings of every solution.
    All {
        /// Stop after N solutions.
        #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
        max: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        query: String,
        file: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// One printed solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputRecord {
    pub index: usize,
    pub bindings: BindingSet,
}

impl OutputRecord {
    pub fn text(&self) -> String {
        self.bindings.to_string()
    }

    pub fn json(&self) -> String {
        serde_json::to_string(&self.bindings).expect("bindings serialize to JSON")
    }
}

#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// Runs the tool with explicit streams and returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { ERROR } else { MATCHED };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return status;
        }
    };
    match execute(cli.command, stdin, stdout) {
        Ok(status) => status,
        Err(Failure(message)) => {
            let _ = writeln!(stderr, "sxq: {message}");
            ERROR
        }
    }
}

fn execute(command: Command, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Match { query, file } => {
            let (mut query, target) = prepare(&query, file, stdin)?;
            let records = solutions(&mut query, &target, Some(1));
            for r in &records {
                writeln!(stdout, "{}", r.text())?;
            }
            Ok(status(&records))
        }
        Command::All { max, format, query, file } => {
            let (mut query, target) = prepare(&query, file, stdin)?;
            let max = max.map(|n| usize::try_from(n).unwrap_or(usize::MAX));
            let records = solutions(&mut query, &target, max);
            for r in &records {
                let line = match format {
                    Format::Text => r.text(),
                    Format::Json => r.json(),
                };
                writeln!(stdout, "{line}")?;
            }
            Ok(status(&records))
        }
    }
}

fn status(records: &[OutputRecord]) -> i32 {
    if records.is_empty() {
        NO_MATCH
    } else {
        MATCHED
    }
}

fn prepare(query: &str, file: Option<PathBuf>, stdin: &mut dyn Read) -> Result<(CompiledQuery, Value), Failure> {
    let ast = parse_query(query).map_err(|e| Failure(format!("query: {e}")))?;
    let (name, text) = match file {
        Some(path) => {
            let text = std::fs::read_to_string(&path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
            (path.display().to_string(), text)
        }
        None => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure(format!("<stdin>: {e}")))?;
            ("<stdin>".to_string(), text)
        }
    };
    let target = read(&text).map_err(|e| Failure(format!("{name}:{e}")))?;
    Ok((compile_query(&ast), target))
}

/// The records `sxq all` would print.
pub fn solutions(query: &mut CompiledQuery, target: &Value, max: Option<usize>) -> Vec<OutputRecord> {
    query
        .collect_bindings(target, max)
        .into_iter()
        .enumerate()
        .map(|(index, bindings)| OutputRecord { index, bindings })
        .collect()
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}
