use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Result;
use clap::{Parser, Subcommand};

mod commands;
mod ideal;
mod manifest;

use commands::{BuildArgs, DecodeArgs, LemmaArgs, RankArgs, Status, ToricArgs, Usage, VerifyArgs};
use manifest::RunManifest;

/// Number of worker threads; defaults to the machine's parallelism.
const THREADS_ENV: &str = "GOLDEN_THREADS";

#[derive(Parser, Debug)]
#[command(name = "golden", version, about = "Build, verify and decode golden codes")]
struct Cli {
    /// Where to write the run manifest. Defaults to the output directory
    /// for build, toric and decode, and to stderr otherwise.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact checks of the rings, the geometry and the Coxeter relations.
    Verify(VerifyArgs),
    /// Enumerate the quotient group for an ideal and export the code.
    Build(BuildArgs),
    /// Export the toric code on a p × p torus.
    Toric(ToricArgs),
    /// Monte Carlo decoding of a built code.
    Decode(DecodeArgs),
    /// Check one of the path-shortening lemmas.
    Lemma(LemmaArgs),
    /// GF(2) rank of an exported check matrix.
    Rank(RankArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Verify(_) => "verify",
            Command::Build(_) => "build",
            Command::Toric(_) => "toric",
            Command::Decode(_) => "decode",
            Command::Lemma(_) => "lemma",
            Command::Rank(_) => "rank",
        }
    }

    fn parameters(&self) -> serde_json::Result<serde_json::Value> {
        match self {
            Command::Verify(a) => serde_json::to_value(a),
            Command::Build(a) => serde_json::to_value(a),
            Command::Toric(a) => serde_json::to_value(a),
            Command::Decode(a) => serde_json::to_value(a),
            Command::Lemma(a) => serde_json::to_value(a),
            Command::Rank(a) => serde_json::to_value(a),
        }
    }

    fn default_manifest(&self) -> Option<PathBuf> {
        match self {
            Command::Build(a) => Some(a.out.join("manifest.json")),
            Command::Toric(a) => Some(a.out.join("manifest.json")),
            Command::Decode(a) => {
                let mut p = a.csv_path().into_os_string();
                p.push(".manifest.json");
                Some(p.into())
            }
            _ => None,
        }
    }
}

fn configure_threads() -> Result<(), Usage> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = value.parse().map_err(|_| Usage(format!("{THREADS_ENV} must be a positive integer, got {value:?}")))?;
    if n == 0 {
        return Err(Usage(format!("{THREADS_ENV} must be positive")));
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| Usage(e.to_string()))
}

fn run(cli: &Cli, manifest: &mut RunManifest) -> Result<Status> {
    match &cli.command {
        Command::Verify(a) => commands::verify(a),
        Command::Build(a) => commands::build(a, manifest),
        Command::Toric(a) => commands::toric(a, manifest),
        Command::Decode(a) => commands::decode(a, manifest),
        Command::Lemma(a) => commands::lemma(a),
        Command::Rank(a) => commands::rank(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let start = Instant::now();
    let parameters = cli.command.parameters().expect("arguments serialize");
    let mut manifest = RunManifest::new(cli.command.name(), parameters);
    let code = match run(&cli, &mut manifest) {
        Ok(status) => status.exit_code(),
        Err(e) if e.is::<Usage>() => {
            eprintln!("error: {e}");
            2
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            1
        }
    };
    manifest.exit_code = code;
    manifest.timing.wall_seconds = start.elapsed().as_secs_f64();
    let target = cli.manifest.clone().or_else(|| if code == 0 { cli.command.default_manifest() } else { None });
    match target {
        Some(path) => {
            if let Err(e) = manifest.write(&path) {
                eprintln!("error: writing manifest {}: {e}", path.display());
            }
        }
        None => eprintln!("{}", serde_json::to_string(&manifest).expect("manifest serializes")),
    }
    ExitCode::from(code as u8)
}
