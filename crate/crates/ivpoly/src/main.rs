use std::process::ExitCode;

use clap::Parser;

use ivpoly::app::{run, Cli, CliError, Format, EXIT_ERROR};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not errors.
            if e.use_stderr() {
                let err = CliError {
                    code: "usage",
                    message: e.to_string(),
                    exit: EXIT_ERROR,
                };
                eprintln!("{}", err.to_json());
                return ExitCode::from(EXIT_ERROR as u8);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    let format = cli.global.format;
    match run(&cli) {
        Ok(outcome) => {
            match format {
                Format::Json => println!("{}", outcome.report),
                Format::Text => println!("{}", outcome.text),
            }
            ExitCode::from(outcome.exit as u8)
        }
        Err(err) => {
            eprintln!("{}", err.to_json());
            ExitCode::from(err.exit as u8)
        }
    }
}
