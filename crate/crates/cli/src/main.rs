mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use commands::VerifyBounds;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let format = cli.format;
    let outcome = match &cli.command {
        Command::GenG { g, count } => commands::gen_g(format, g, *count),
        Command::GenF { f, m } => commands::gen_f(format, f, *m),
        Command::Check { a, b, c } => commands::check(format, a, b, c),
        Command::Density {
            family,
            grid,
            out,
            sieve_budget,
        } => commands::density(format, *family, grid, out.as_deref(), *sieve_budget),
        Command::Verify {
            scope,
            c_max,
            m_max,
            y_max,
            b_max,
            f,
        } => commands::verify(
            format,
            *scope,
            VerifyBounds {
                c_max: *c_max,
                m_max: *m_max,
                y_max: *y_max,
                b_max: *b_max,
                fs: f,
            },
        ),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
