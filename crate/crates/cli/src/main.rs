use std::io::Write as _;
use std::process::ExitCode;

use clap::Parser;
use lcd_rough_cli::app::{run, Cli, EXIT_TOOL_ERROR};
use lcd_rough_cli::report::write_atomic;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_TOOL_ERROR } else { 0 });
        }
    };
    let out = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_TOOL_ERROR);
        }
    };
    let written = match &cli.output {
        Some(path) => write_atomic(path, out.text.as_bytes()),
        None => std::io::stdout().write_all(out.text.as_bytes()).map_err(Into::into),
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(EXIT_TOOL_ERROR);
    }
    ExitCode::from(out.exit)
}
