//! `qbus` command line: run scenario configs and presets, list presets,
//! check the numerics against the linear-resonator closed forms.
//!
//! Exit codes: 0 success, 1 configuration or IO error, 2 numerical failure.
//! Errors go to stderr as `ERROR <code>: <message>`.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use qbus_core::scenarios::{self, PresetOptions, ScenarioConfig, ScenarioError, PRESETS};

mod manifest;
mod oracle_check;

pub use manifest::{config_digest, RunManifest};
pub use oracle_check::{oracle_check, OracleReport};

#[derive(Debug, Parser)]
#[command(name = "qbus", version, about = "Two qubits entangled through a (nonlinear) resonator")]
pub struct Cli {
    /// Output directory.
    #[arg(long, global = true, default_value = "results")]
    pub out: PathBuf,
    /// Override the Fock cutoff M.
    #[arg(long, global = true)]
    pub fock: Option<usize>,
    /// Override the number of time samples.
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    /// Worker threads for α grids (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a scenario from a JSON config file.
    Run { config: PathBuf },
    /// Run a built-in preset.
    Preset {
        name: String,
        /// Long horizon where the preset has one (fig3: 25000 ωt).
        #[arg(long)]
        long: bool,
    },
    /// Print the preset catalog.
    List,
    /// Compare propagated negativities with the closed forms.
    OracleCheck {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
}

/// A failure with its exit code and machine-readable code.
#[derive(Debug)]
pub struct CliError {
    pub code: &'static str,
    pub message: String,
    pub exit: i32,
}

impl CliError {
    fn config(code: &'static str, message: impl Into<String>) -> Self {
        Self { code, message: message.into(), exit: 1 }
    }

    fn io(path: &Path, err: io::Error) -> Self {
        Self::config("io", format!("{}: {err}", path.display()))
    }
}

impl From<ScenarioError> for CliError {
    fn from(e: ScenarioError) -> Self {
        Self {
            code: e.code(),
            message: e.to_string(),
            exit: if e.is_config_error() { 1 } else { 2 },
        }
    }
}

/// Parses an argv vector (program name first) without running anything.
pub fn parse_args<I, T>(args: I) -> Result<Cli, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    Cli::try_parse_from(args)
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match parse_args(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let _ = writeln!(stderr, "ERROR usage: {}", e.to_string().trim_end());
                    1
                }
            };
        }
    };
    match execute(&cli, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "ERROR {}: {}", e.code, e.message);
            e.exit
        }
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    if cli.threads > 0 {
        // Fails only if a global pool already exists, e.g. in-process reruns.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global();
    }
    let print = |stdout: &mut dyn Write, s: String| writeln!(stdout, "{s}").map_err(|e| CliError::io(Path::new("<stdout>"), e));
    match &cli.command {
        Command::List => {
            for p in PRESETS {
                print(stdout, format!("{:<6} {}", p.name, p.description))?;
            }
            Ok(())
        }
        Command::OracleCheck { samples, seed } => {
            let report = oracle_check(*samples, *seed)?;
            print(
                stdout,
                format!("max |dN| = {:.3e} over {} samples (tolerance {:.0e})", report.max_deviation, report.samples, report.tolerance),
            )?;
            if report.passed() {
                Ok(())
            } else {
                Err(CliError {
                    code: "oracle-mismatch",
                    message: format!("max |dN| = {:e} exceeds {:e}", report.max_deviation, report.tolerance),
                    exit: 2,
                })
            }
        }
        Command::Run { config } => {
            let text = fs::read_to_string(config).map_err(|e| CliError::io(config, e))?;
            let cfg = ScenarioConfig::from_json_str(&text)?;
            let written = run_config(cli, cfg)?;
            for path in written {
                print(stdout, path.display().to_string())?;
            }
            Ok(())
        }
        Command::Preset { name, long } => {
            let cfgs = scenarios::preset_with(name, PresetOptions { long: *long })?;
            for cfg in cfgs {
                for path in run_config(cli, cfg)? {
                    print(stdout, path.display().to_string())?;
                }
            }
            Ok(())
        }
    }
}

fn apply_overrides(cli: &Cli, mut cfg: ScenarioConfig) -> Result<ScenarioConfig, CliError> {
    if let Some(m) = cli.fock {
        cfg.system.fock_cutoff = m;
    }
    if let Some(n) = cli.samples {
        cfg.sample_count = n;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|e| CliError::io(path, e))
}

/// Runs one config and writes `{name}.csv`, snapshot JSON files and
/// `{name}_manifest.json` into the output directory.
pub fn run_config(cli: &Cli, cfg: ScenarioConfig) -> Result<Vec<PathBuf>, CliError> {
    let cfg = apply_overrides(cli, cfg)?;
    let started = chrono::Utc::now();
    let result = scenarios::run_scenario(&cfg)?;

    fs::create_dir_all(&cli.out).map_err(|e| CliError::io(&cli.out, e))?;
    let mut written = Vec::new();
    let csv_path = cli.out.join(format!("{}.csv", cfg.name));
    write_file(&csv_path, qbus_core::report::csv_string(&result).as_bytes())?;
    written.push(csv_path);

    let snaps = qbus_core::report::snapshots(&result);
    for (snap, file) in snaps.iter().zip(qbus_core::report::snapshot_file_names(&cfg.name, snaps.len())) {
        let path = cli.out.join(file);
        let mut buf = Vec::new();
        qbus_core::report::emit_snapshot(snap, &mut buf).map_err(|e| CliError::io(&path, e))?;
        write_file(&path, &buf)?;
        written.push(path);
    }

    let manifest_path = cli.out.join(format!("{}_manifest.json", cfg.name));
    let manifest = RunManifest::new(&cfg, started, chrono::Utc::now(), &written);
    write_file(&manifest_path, manifest.to_json().as_bytes())?;
    written.push(manifest_path);
    Ok(written)
}
