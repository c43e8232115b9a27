use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use bredon_cli::commands::{self, Mode, Report};
use bredon_cli::error::CliError;
use bredon_cli::generate::Limits;
use bredon_cli::verify::Property;
use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "bredon",
    version,
    about = "Groupoid actions, orbit categories and Bredon (co)homology"
)]
struct Cli {
    /// Record wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a groupoid, space, complex, coefficient or bundle file.
    Validate {
        file: PathBuf,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bredon cohomology or homology of a complex.
    Bredon {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long, value_enum, default_value = "cohomology")]
        mode: Mode,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Orbit category of the isotropy group at an object.
    Orbitcat {
        file: PathBuf,
        #[arg(long)]
        base: String,
        /// Also check that canonical orbits realise it.
        #[arg(long)]
        verify: bool,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Randomised check of one property.
    Verify {
        #[arg(long, value_enum)]
        prop: Property,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 4)]
        max_objects: usize,
        #[arg(long, default_value_t = 8)]
        max_group: usize,
        #[arg(long, default_value_t = 20)]
        max_points: usize,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a built-in example's files.
    Example {
        name: String,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

impl Command {
    /// Where the report goes; `example` writes its files to `--out` and the report to stdout.
    fn report_path(&self) -> Option<&Path> {
        match self {
            Command::Validate { out, .. }
            | Command::Bredon { out, .. }
            | Command::Orbitcat { out, .. }
            | Command::Verify { out, .. } => out.as_deref(),
            Command::Example { .. } => None,
        }
    }
}

fn dispatch(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Validate { file, .. } => commands::cmd_validate(file),
        Command::Bredon {
            complex, coeffs, mode, ..
        } => commands::cmd_bredon(complex, coeffs, *mode),
        Command::Orbitcat { file, base, verify, .. } => commands::cmd_orbitcat(file, base, *verify),
        Command::Verify {
            prop,
            seed,
            trials,
            max_objects,
            max_group,
            max_points,
            ..
        } => {
            if *max_objects == 0 || *max_group == 0 || *max_points == 0 {
                return Err(CliError::Usage("limits must be positive".into()));
            }
            let limits = Limits {
                max_objects: *max_objects,
                max_group: *max_group,
                max_points: *max_points,
            };
            Ok(commands::cmd_verify(*prop, *seed, *trials, &limits))
        }
        Command::Example { name, out } => commands::cmd_example(name, out),
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    let start = Instant::now();
    let result = dispatch(&cli.command).and_then(|mut report| {
        if cli.timing {
            report.timing_ms = Some(start.elapsed().as_secs_f64() * 1000.0);
        }
        emit(&report.to_json(), cli.command.report_path())?;
        Ok(report.exit_code())
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            log::debug!("{e:?}");
            let body = serde_json::json!({ "ok": false, "error": { "kind": e.kind(), "message": e.to_string() } });
            eprintln!("{}", serde_json::to_string_pretty(&body).expect("error serializes"));
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
