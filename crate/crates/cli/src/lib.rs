//! Command-line front end: JSON documents in, reports, documents or SVG out.

pub mod commands;
pub mod document;
pub mod report;
pub mod svg;

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::Parser;

use commands::{execute, Cli, Failure};
use document::parse_document;

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                return 2;
            }
            let _ = write!(stdout, "{text}");
            return 0;
        }
    };
    let result = read_input(&cli, stdin)
        .and_then(|text| Ok(parse_document(&text)?))
        .and_then(|doc| execute(&cli.command, doc));
    match result {
        Ok(outcome) => {
            let _ = stdout.write_all(outcome.stdout.as_bytes());
            outcome.code
        }
        Err(failure) => {
            let _ = writeln!(stderr, "starfan: {}", failure.message());
            failure.code()
        }
    }
}

fn read_input(cli: &Cli, stdin: &mut dyn Read) -> Result<String, Failure> {
    match cli.command.file() {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display()))),
        _ => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::Input(format!("cannot read standard input: {e}")))?;
            Ok(text)
        }
    }
}
