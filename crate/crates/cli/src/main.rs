mod args;
mod commands;

use args::{Cli, Format};
use clap::error::ErrorKind;
use clap::Parser;
use commands::{Failure, Inputs, Outcome};
use serde::Serialize;
use serde_json::Value;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

const EXIT_INTERNAL: u8 = 1;
const EXIT_PRECONDITION: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Serialize)]
struct Diagnostics {
    error_estimate: Option<f64>,
    nodes: Option<usize>,
    warnings: Vec<String>,
}

#[derive(Serialize)]
struct ErrorInfo {
    kind: String,
    message: String,
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    inputs: &'a Inputs,
    result: Value,
    diagnostics: Diagnostics,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<ErrorInfo>,
}

fn error_kind(e: &gaussratio::Error) -> String {
    let debug = format!("{e:?}");
    debug.split(['(', ' ', '{']).next().unwrap_or_default().to_string()
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Io(p.to_path_buf(), e)),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(|e| Failure::Io("<stdout>".into(), e))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let name = cli.command.name();
    let inputs = match commands::resolve(&cli.command, &cli.opts) {
        Ok(i) => i,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
        Err(_) => unreachable!("resolve only reports usage errors"),
    };
    if let Some(n) = cli.opts.threads {
        if n == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(EXIT_USAGE);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INTERNAL);
        }
    }
    let output = cli.opts.output.as_deref();
    let outcome = commands::run(&cli.command, &inputs, cli.opts.format);
    let (envelope, code) = match outcome {
        Ok(Outcome { result, error_estimate, nodes, warnings, csv }) => {
            if let (Format::Csv, Some(csv)) = (cli.opts.format, csv) {
                return match write_out(output, &csv) {
                    Ok(()) => ExitCode::SUCCESS,
                    Err(f) => report_io(f),
                };
            }
            let diagnostics = Diagnostics { error_estimate, nodes, warnings };
            (Envelope { command: name, inputs: &inputs, result, diagnostics, error: None }, 0)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            let code = if e.is_precondition() { EXIT_PRECONDITION } else { EXIT_INTERNAL };
            let diagnostics = Diagnostics { error_estimate: None, nodes: None, warnings: Vec::new() };
            let error = Some(ErrorInfo { kind: error_kind(&e), message: e.to_string() });
            (Envelope { command: name, inputs: &inputs, result: Value::Null, diagnostics, error }, code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
        Err(f @ Failure::Io(..)) => return report_io(f),
    };
    let mut text = serde_json::to_string(&envelope).expect("serializable envelope");
    text.push('\n');
    match write_out(output, &text) {
        Ok(()) => ExitCode::from(code),
        Err(f) => report_io(f),
    }
}

fn report_io(f: Failure) -> ExitCode {
    if let Failure::Io(path, e) = f {
        eprintln!("error: {}: {e}", path.display());
    }
    ExitCode::from(EXIT_INTERNAL)
}
