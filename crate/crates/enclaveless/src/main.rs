mod cli;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let parsed = match cli::Cli::try_parse() {
        Ok(parsed) => parsed,
        Err(err) => {
            // help/version requests are success, everything else is usage
            let code = if err.use_stderr() {
                cli::EXIT_USAGE as u8
            } else {
                cli::EXIT_OK as u8
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli::run(parsed, &mut out) {
        Ok(code) => {
            let _ = out.flush();
            ExitCode::from(code as u8)
        }
        Err(err) => {
            let _ = out.flush();
            if !err.message.is_empty() {
                eprintln!("error: {}", err.message);
            }
            ExitCode::from(err.code as u8)
        }
    }
}
