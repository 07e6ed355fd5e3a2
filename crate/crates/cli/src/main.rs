use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use ultrasync_cli::config::{Cli, RunConfig};

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = RunConfig::from_cli(&cli).and_then(|cfg| {
        let out = ultrasync_cli::run(&cfg)?;
        for w in &out.warnings {
            eprintln!("warning: {w}");
        }
        match &cfg.output_path {
            Some(path) => std::fs::write(path, &out.text)?,
            None => match std::io::stdout().write_all(out.text.as_bytes()) {
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
                r => r?,
            },
        }
        Ok(out.exit_code)
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
