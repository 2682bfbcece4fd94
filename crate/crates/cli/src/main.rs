use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use logmap_cli::{commands, Cli, CliError, Output};

fn run(cli: &Cli) -> Result<Output, CliError> {
    let output = commands::run(cli.command, &cli.config)?;
    match &cli.config.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            output.write(cli.config.format, &mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            output.write(cli.config.format, stdout.lock())?;
        }
    }
    if let Output::Report(report) = &output {
        if !report.all_passed() {
            let failed: Vec<String> = report
                .checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| format!("#{} {}", c.id, c.name))
                .collect();
            return Err(CliError::VerificationFailed(failed.join(", ")));
        }
    }
    Ok(output)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("logmap: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
