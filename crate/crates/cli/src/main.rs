mod args;
mod commands;
mod config;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};

use args::Cli;
use commands::{Settings, UsageError};
use config::Config;

fn is_usage(err: &anyhow::Error) -> bool {
    err.chain().any(|e| e.is::<UsageError>())
}

fn print_grammar() {
    eprintln!("\n{}\n\n{}\n\nRun `tristram --help` for all options.", Cli::command().render_usage(), args::GRAMMAR);
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            print_grammar();
            return ExitCode::from(2);
        }
    };

    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if is_usage(&e) => {
            eprintln!("error: {e:#}");
            print_grammar();
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<()> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(UsageError("--threads must be at least 1".into()).into());
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    let config = match &cli.config {
        Some(path) => Config::load(path).map_err(|e| anyhow::Error::new(UsageError(format!("{e:#}"))))?,
        None => Config::default(),
    };
    let settings = Settings::new(&config, cli.out_dir.clone(), cli.seifert_file.as_deref())?;
    commands::run(&settings, &cli.command)
}
