mod cli;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use crate::cli::Cli;
use crate::output::Emitter;

/// Environment variable giving the default worker count.
const JOBS_ENV: &str = "ECCENTRIC_JOBS";

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli.jobs.or_else(|| std::env::var(JOBS_ENV).ok().and_then(|v| v.parse().ok()));
    if let Some(jobs) = jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }

    let stdout = std::io::stdout();
    let mut out = Emitter::new(cli.format, stdout.lock());
    let result = commands::run(&cli, &mut out).and_then(|()| out.flush().map_err(Into::into));
    match result {
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {}", e.0);
            ExitCode::from(2)
        }
        Ok(()) if out.failed => ExitCode::from(1),
        Ok(()) => ExitCode::SUCCESS,
    }
}
