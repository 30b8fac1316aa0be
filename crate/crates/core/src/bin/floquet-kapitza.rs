use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use floquet_kapitza::cli::{parse_config, run, CliError, Command, Format, RunManifest};

/// Kapitza stabilization runs driven by a TOML config.
#[derive(Debug, Parser)]
#[command(version, about)]
struct Args {
    command: Command,
    /// TOML run configuration.
    #[arg(long)]
    config: PathBuf,
    /// Output directory; overrides `out_dir` in the config.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Overrides `format` in the config.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

fn execute(args: Args) -> Result<RunManifest, CliError> {
    let mut config = parse_config(&args.config)?;
    match config.command {
        Some(c) if c != args.command => {
            return Err(CliError::Validation(format!(
                "command line asks for {} but the config says {c}",
                args.command
            )))
        }
        _ => config.command = Some(args.command),
    }
    if let Some(out) = args.out {
        config.out_dir = out;
    }
    if let Some(format) = args.format {
        config.format = format;
    }
    run(&config)
}

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(args) {
        Ok(manifest) => {
            let dir = manifest.config["out_dir"]
                .as_str()
                .unwrap_or(".")
                .to_string();
            for f in manifest
                .files
                .iter()
                .map(String::as_str)
                .chain([RunManifest::FILE_NAME])
            {
                println!("{}", PathBuf::from(&dir).join(f).display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
