use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

mod args;
mod commands;

fn main() -> ExitCode {
    let cli = match args::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut out = Vec::new();
    let code = match commands::run(&cli.command, &mut out) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            1
        }
    };
    // Output is buffered so a failing command never prints a partial result.
    if code != 1 {
        let _ = std::io::stdout().write_all(&out);
    }
    ExitCode::from(code)
}
