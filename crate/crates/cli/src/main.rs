use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rees_quot::{parse_script, Config, ParseError, Session};
use serde_json::json;

#[derive(Parser)]
#[command(name = "rees-quot", version, about = "Spectra and structure of R[It]/(I^2(t^2+at+b))")]
struct Cli {
    #[command(subcommand)]
    command: Mode,
}

#[derive(Subcommand)]
enum Mode {
    /// Run a script file.
    Run {
        script: PathBuf,
        /// Print only the JSON lines.
        #[arg(long)]
        json_only: bool,
        /// Largest finite model enumerated.
        #[arg(long, env = "REES_QUOT_CAP")]
        cap: Option<usize>,
        /// Seed for sampled sweeps.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Read statements from standard input.
    Repl {
        #[arg(long, env = "REES_QUOT_CAP")]
        cap: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn config(json_only: bool, cap: Option<usize>, seed: u64) -> Config {
    let mut c = Config { json_only, seed, ..Config::default() };
    if let Some(cap) = cap {
        c.cap = cap;
    }
    c
}

fn parse_error_line(e: &ParseError) -> String {
    json!({
        "cmd": null,
        "status": "error",
        "result": { "error": "ParseError", "line": e.line, "col": e.col, "expected": e.expected, "message": e.message },
        "witness": null,
    })
    .to_string()
}

fn run(path: PathBuf, cfg: Config) -> ExitCode {
    let text = match std::fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cannot read {}: {e}", path.display());
            return ExitCode::from(2);
        }
    };
    let commands = match parse_script(&text) {
        Ok(c) => c,
        Err(e) => {
            println!("{}", parse_error_line(&e));
            eprintln!("{}: {e}", path.display());
            return ExitCode::from(2);
        }
    };
    let mut session = Session::new(cfg);
    let (mut out, mut err) = (io::stdout().lock(), io::stderr().lock());
    match session.run(&commands, &mut out, &mut err) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("output error: {e}");
            ExitCode::from(1)
        }
    }
}

fn repl(cfg: Config) -> ExitCode {
    let mut session = Session::new(cfg);
    let mut buffer = String::new();
    let mut failed = false;
    eprint!("> ");
    for line in io::stdin().lock().lines() {
        let Ok(line) = line else { break };
        buffer.push_str(&line);
        buffer.push('\n');
        if !line.trim_end().ends_with(';') {
            continue;
        }
        match parse_script(&buffer) {
            Ok(commands) => {
                let (mut out, mut err) = (io::stdout().lock(), io::stderr().lock());
                if session.run(&commands, &mut out, &mut err).unwrap_or(1) != 0 {
                    failed = true;
                }
                let _ = out.flush();
            }
            Err(e) => {
                println!("{}", parse_error_line(&e));
                eprintln!("{e}");
            }
        }
        buffer.clear();
        eprint!("> ");
    }
    ExitCode::from(u8::from(failed))
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Mode::Run { script, json_only, cap, seed } => run(script, config(json_only, cap, seed)),
        Mode::Repl { cap, seed } => repl(config(false, cap, seed)),
    }
}
