//! `peiffer`: validate, construct and round-trip algebraic structures
//! described in the `.alg` language.
//!
//! Exit status: 0 when every requested check passes, 1 when a report holds a
//! failure, 2 on input or structural errors (including usage errors).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use peiffer::frontend::commands::{self, ConstructKind, Format, Outcome};

#[derive(Parser)]
#[command(name = "peiffer", version, about = "Exact checks for crossed modules, categorical algebras and braidings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every axiom of the top-level declarations (or of one subject).
    Validate {
        file: PathBuf,
        #[arg(long)]
        subject: Option<String>,
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: Format,
    },
    /// Same checks as `validate`, printed as JSON by default.
    Report {
        file: PathBuf,
        #[arg(long)]
        subject: Option<String>,
        #[arg(long, default_value = "json", value_parser = parse_format)]
        format: Format,
    },
    /// Apply a construction and print the result as canonical source.
    Construct {
        #[arg(value_parser = parse_kind)]
        kind: ConstructKind,
        file: PathBuf,
        #[arg(long)]
        subject: String,
        /// Write the output here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check that α and β of a braiding are braided isomorphisms.
    Roundtrip {
        file: PathBuf,
        #[arg(long)]
        subject: Option<String>,
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: Format,
    },
    /// Print the canonical form of a file.
    Fmt { file: PathBuf },
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

fn parse_kind(s: &str) -> Result<ConstructKind, String> {
    s.parse()
}

fn read(path: &Path) -> Result<String, Outcome> {
    std::fs::read_to_string(path).map_err(|e| Outcome {
        code: 2,
        stdout: String::new(),
        stderr: format!("error: cannot read {}: {e}\n", path.display()),
    })
}

fn run(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Validate { file, subject, format } | Command::Report { file, subject, format } => {
            read(&file).map(|src| commands::validate(&src, subject.as_deref(), format))
        }
        Command::Roundtrip { file, subject, format } => {
            read(&file).map(|src| commands::roundtrip(&src, subject.as_deref(), format))
        }
        Command::Fmt { file } => read(&file).map(|src| commands::fmt(&src)),
        Command::Construct { kind, file, subject, output } => read(&file).map(|src| {
            let out = commands::construct(kind, &src, &subject);
            match output {
                Some(path) if out.code == 0 => match std::fs::write(&path, &out.stdout) {
                    Ok(()) => Outcome { code: 0, stdout: String::new(), stderr: String::new() },
                    Err(e) => Outcome {
                        code: 2,
                        stdout: String::new(),
                        stderr: format!("error: cannot write {}: {e}\n", path.display()),
                    },
                },
                _ => out,
            }
        }),
    };
    result.unwrap_or_else(|o| o)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = run(cli);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
