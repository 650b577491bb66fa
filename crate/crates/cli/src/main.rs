//! `wsa`: command-line front end.
//!
//! Exit status: 0 success, 1 invalid input (quiver axioms, assumptions,
//! singular socle, size caps), 2 a failed internal identity, 3 I/O, 4 parse,
//! 5 usage.

mod args;
mod error;
mod run;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use error::{exit, CliError};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() { 5 } else { 0 };
            let _ = e.print();
            return exit(status);
        }
    };
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    if cli.jobs == 0 {
        log::info!("using all cores");
    }
    match run::run(&cli) {
        Ok((label, field, report)) => {
            // A closed pipe (e.g. `| head`) is not an error of the command.
            let _ = writeln!(
                std::io::stdout(),
                "{}",
                run::render(&cli, &label, &field, &report)
            );
            exit(report.status)
        }
        Err(e) => {
            report_error(&cli, &e);
            exit(e.status())
        }
    }
}

fn report_error(cli: &Cli, e: &CliError) {
    if cli.format == args::Format::Json {
        let doc = serde_json::json!({
            "tool": "wsa",
            "version": env!("CARGO_PKG_VERSION"),
            "verb": run::verb_name(&cli.verb),
            "status": e.status(),
            "error": e.to_string(),
        });
        let _ = writeln!(
            std::io::stdout(),
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializable")
        );
    }
    eprintln!("error: {e}");
}
