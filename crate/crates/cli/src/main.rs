use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod failure;
mod record;

use failure::Failure;

#[derive(Parser)]
#[command(
    name = "invspec",
    version,
    about = "Invariant spectrum bounds for toric and cohomogeneity-one metrics"
)]
struct Cli {
    /// Also write the run record to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Polynomial-trial upper bounds.
    Bound {
        #[command(subcommand)]
        kind: BoundKind,
    },
    /// Invariant eigenvalues checked against the bounds.
    Spectrum {
        #[command(subcommand)]
        kind: SpectrumKind,
    },
    /// Numerical identity checks.
    Verify {
        #[command(subcommand)]
        kind: VerifyKind,
    },
    /// Comparison tables.
    Compare {
        #[command(subcommand)]
        kind: CompareKind,
    },
}

#[derive(Subcommand)]
enum BoundKind {
    /// Bounds for a moment polytope.
    Toric {
        polytope: PathBuf,
        #[arg(long)]
        k: usize,
        /// Projection direction, e.g. `1,0`; normalized before use.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        direction: Option<Vec<f64>>,
        /// Also minimize over directions.
        #[arg(long)]
        sweep: bool,
    },
    /// Profile-independent bounds for invariant metrics on the n-sphere.
    Cohom1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum SpectrumKind {
    /// Torus-invariant spectrum over an interval.
    Toric1d {
        polytope: PathBuf,
        /// Potential file; the Guillemin potential when omitted.
        #[arg(long)]
        potential: Option<PathBuf>,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 4000)]
        mesh: usize,
    },
    /// Rotation-invariant spectrum of a sphere profile.
    Cohom1 {
        profile: PathBuf,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 4000)]
        mesh: usize,
    },
}

#[derive(Subcommand)]
enum VerifyKind {
    /// Boundary integration-by-parts identity for monomial test functions.
    Ibp {
        polytope: PathBuf,
        potential: PathBuf,
        #[arg(long, default_value_t = 4)]
        degree: usize,
    },
}

#[derive(Subcommand)]
enum CompareKind {
    /// Bessel-zero constants next to the interval bounds.
    Af {
        #[arg(long)]
        k: usize,
    },
}

fn run(cli: &Cli) -> Result<commands::Outcome, Failure> {
    match &cli.command {
        Command::Bound {
            kind:
                BoundKind::Toric {
                    polytope,
                    k,
                    direction,
                    sweep,
                },
        } => commands::bound_toric(polytope, *k, direction.clone(), *sweep),
        Command::Bound {
            kind: BoundKind::Cohom1 { n, k },
        } => commands::bound_cohom1(*n, *k),
        Command::Spectrum {
            kind:
                SpectrumKind::Toric1d {
                    polytope,
                    potential,
                    count,
                    mesh,
                },
        } => commands::spectrum_toric1d(polytope, potential.as_deref(), *count, *mesh),
        Command::Spectrum {
            kind:
                SpectrumKind::Cohom1 {
                    profile,
                    count,
                    mesh,
                },
        } => commands::spectrum_cohom1(profile, *count, *mesh),
        Command::Verify {
            kind:
                VerifyKind::Ibp {
                    polytope,
                    potential,
                    degree,
                },
        } => commands::verify_ibp(polytope, potential, *degree),
        Command::Compare {
            kind: CompareKind::Af { k },
        } => commands::compare_af(*k),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let text = outcome.record.to_string();
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &text) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(failure::EXIT_INPUT);
        }
    }
    print!("{text}");
    match outcome.exit_code {
        failure::EXIT_NOT_DELZANT => {
            eprintln!("warning: polytope is not Delzant; bounds are formal")
        }
        failure::EXIT_CHECK_FAILED => eprintln!("error: a check failed"),
        _ => {}
    }
    ExitCode::from(outcome.exit_code)
}
