//! Command implementations behind the `eprgame` binary.
//!
//! Every command writes to the supplied sinks and returns a process exit
//! code: 0 on success, 1 when `verify` finds a disagreement, 2 for usage or
//! configuration errors.

pub mod config;
pub mod verify;

use std::f64::consts::FRAC_PI_2;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::epr::{outcome_distribution, Direction, EntanglementAngle};
use crate::error::Error;
use crate::game::{
    embedded_payoff, embedded_payoff_bob, expected_payoff_alice, expected_payoff_bob, find_equilibria,
    find_equilibria_general, pd_transition, Continuum, EquilibriumReport, StrategyProfile,
};

pub use config::{parse_angle, GameConfig, Preset};
pub use verify::{verify, Sample, VerifyReport};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "eprgame", version, about = "Two-player games in an EPR setting")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Outcome probabilities for one pair of measurement directions.
    Probs {
        #[command(flatten)]
        game: GameArgs,
        /// Alice's direction, 1 or 2.
        #[arg(long, default_value_t = 1)]
        i: usize,
        /// Bob's direction, 1 or 2.
        #[arg(long, default_value_t = 1)]
        j: usize,
    },
    /// Expected payoffs at a mixed-strategy profile.
    Payoff {
        #[command(flatten)]
        game: GameArgs,
        #[arg(long)]
        x: f64,
        #[arg(long)]
        y: f64,
    },
    /// Nash equilibria at one entanglement angle.
    Ne {
        #[command(flatten)]
        game: GameArgs,
    },
    /// Equilibria over an evenly spaced γ grid on [0, π/2], as CSV.
    Sweep {
        #[command(flatten)]
        game: GameArgs,
        /// Number of grid points, at least 2.
        #[arg(long, default_value_t = 101)]
        grid: usize,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Entanglement angle at which cooperation becomes an equilibrium.
    Transition {
        #[command(flatten)]
        game: GameArgs,
    },
    /// Compare the multivector, closed-form and state-vector probabilities.
    Verify {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
}

#[derive(Debug, Clone, Args)]
pub struct GameArgs {
    /// TOML game configuration.
    #[arg(long, conflicts_with = "preset")]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
    /// Entanglement angle: radians, `<x>deg` or a multiple of pi. Overrides the config.
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<String>,
}

/// A command-level failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self { code: EXIT_USAGE, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Self { code: EXIT_USAGE, message: format!("i/o error: {e}") }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

/// A loaded game plus the γ it should be evaluated at, if known.
struct Loaded {
    config: GameConfig,
    gamma: Option<EntanglementAngle>,
}

impl GameArgs {
    fn load(&self) -> Result<Loaded, Failure> {
        let config = match (&self.config, self.preset) {
            (Some(path), _) => GameConfig::load(path)?,
            (None, Some(preset)) => preset.game(),
            (None, None) => return Err(usage("one of --config or --preset is required")),
        };
        let gamma = match &self.gamma {
            Some(text) => Some(EntanglementAngle::new(parse_angle(text)?)?),
            None => config.gamma,
        };
        Ok(Loaded { config, gamma })
    }
}

impl Loaded {
    fn gamma(&self) -> Result<EntanglementAngle, Failure> {
        self.gamma.ok_or_else(|| usage("no entanglement angle: pass --gamma or set `gamma` in the config"))
    }

    fn equilibria(&self, gamma: EntanglementAngle) -> EquilibriumReport {
        if self.config.custom_angles {
            find_equilibria_general(&self.config.epr_config(gamma), &self.config.payoffs)
        } else {
            find_equilibria(&self.config.payoffs, gamma)
        }
    }

    fn payoffs(&self, profile: StrategyProfile, gamma: EntanglementAngle) -> (f64, f64) {
        let game = &self.config.payoffs;
        if self.config.custom_angles {
            let cfg = self.config.epr_config(gamma);
            (expected_payoff_alice(profile, &cfg, game), expected_payoff_bob(profile, &cfg, game))
        } else {
            (embedded_payoff(profile, gamma, game), embedded_payoff_bob(profile, gamma, game))
        }
    }
}

/// Run a parsed command line and return the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = match &cli.command {
        Command::Probs { game, i, j } => probs(game, *i, *j, out),
        Command::Payoff { game, x, y } => payoff(game, *x, *y, out),
        Command::Ne { game } => ne(game, out),
        Command::Sweep { game, grid, out: path } => sweep(game, *grid, path.as_ref(), out),
        Command::Transition { game } => transition(game, out),
        Command::Verify { samples, seed, tol } => run_verify(*samples, *seed, *tol, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

fn probs(args: &GameArgs, i: usize, j: usize, out: &mut dyn Write) -> Result<(), Failure> {
    let loaded = args.load()?;
    let cfg = loaded.config.epr_config(loaded.gamma()?);
    let dist = outcome_distribution(Direction::from_index(i)?, Direction::from_index(j)?, &cfg)?;
    for (label, p) in ["P00", "P01", "P10", "P11"].iter().zip(dist.as_array()) {
        writeln!(out, "{label} {p:.12}")?;
    }
    writeln!(out, "sum {:.12}", dist.sum())?;
    Ok(())
}

fn payoff(args: &GameArgs, x: f64, y: f64, out: &mut dyn Write) -> Result<(), Failure> {
    let loaded = args.load()?;
    let profile = StrategyProfile::new(x, y)?;
    let (a, b) = loaded.payoffs(profile, loaded.gamma()?);
    writeln!(out, "payoff_a {a:.12}")?;
    writeln!(out, "payoff_b {b:.12}")?;
    Ok(())
}

fn ne(args: &GameArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let loaded = args.load()?;
    let report = loaded.equilibria(loaded.gamma()?);
    writeln!(out, "gamma {:.12}", report.gamma.radians())?;
    for e in &report.equilibria {
        writeln!(
            out,
            "{:<5} ({:.12}, {:.12})  payoff_a {:.12}  payoff_b {:.12}  {}",
            e.kind,
            e.profile.x,
            e.profile.y,
            e.payoff_a,
            e.payoff_b,
            if e.strict { "strict" } else { "weak" }
        )?;
    }
    match &report.continuum {
        Some(Continuum::Everywhere) => writeln!(out, "continuum: every profile")?,
        Some(Continuum::Segments(segments)) => {
            for s in segments {
                writeln!(
                    out,
                    "continuum: ({:.12}, {:.12}) to ({:.12}, {:.12})",
                    s.from.x, s.from.y, s.to.x, s.to.y
                )?;
            }
        }
        None => {}
    }
    for note in &report.notes {
        writeln!(out, "note: {note}")?;
    }
    Ok(())
}

/// CSV header for `sweep`.
pub const SWEEP_HEADER: &str = "gamma,x_star,y_star,payoff_a,payoff_b,kind,strict";

fn sweep(args: &GameArgs, grid: usize, path: Option<&PathBuf>, out: &mut dyn Write) -> Result<(), Failure> {
    if grid < 2 {
        return Err(usage(format!("--grid must be at least 2, got {grid}")));
    }
    let loaded = args.load()?;
    let mut csv = String::new();
    csv.push_str(SWEEP_HEADER);
    csv.push('\n');
    for k in 0..grid {
        let gamma = if k + 1 == grid { FRAC_PI_2 } else { k as f64 / (grid - 1) as f64 * FRAC_PI_2 };
        let report = loaded.equilibria(EntanglementAngle::new(gamma)?);
        for e in &report.equilibria {
            csv.push_str(&format!(
                "{:.12},{:.12},{:.12},{:.12},{:.12},{},{}\n",
                gamma, e.profile.x, e.profile.y, e.payoff_a, e.payoff_b, e.kind, e.strict
            ));
        }
    }
    match path {
        Some(path) => std::fs::write(path, csv)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?,
        None => out.write_all(csv.as_bytes())?,
    }
    Ok(())
}

fn transition(args: &GameArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let loaded = args.load()?;
    match pd_transition(&loaded.config.payoffs) {
        Ok(t) => {
            writeln!(out, "analytic {:.12}", t.analytic)?;
            writeln!(out, "bisection {:.12}", t.bisected)?;
            writeln!(out, "difference {:e}", t.discrepancy())?;
            writeln!(out, "iterations {}", t.iterations)?;
        }
        Err(e @ (Error::NotPrisonersDilemma(_) | Error::NoTransition(_))) => {
            writeln!(out, "no transition in [0, π/2] ({e})")?;
        }
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

fn run_verify(samples: usize, seed: u64, tol: f64, out: &mut dyn Write) -> Result<(), Failure> {
    if samples == 0 {
        return Err(usage("--samples must be at least 1"));
    }
    if tol.is_nan() || tol < 0.0 {
        return Err(usage(format!("--tol must be nonnegative, got {tol}")));
    }
    let report = verify(samples, seed, tol);
    writeln!(out, "samples {}", report.samples)?;
    writeln!(out, "seed {seed}")?;
    writeln!(out, "tol {:e}", report.tol)?;
    writeln!(out, "max_deviation {:e}", report.max_deviation)?;
    match &report.first_failure {
        None => {
            writeln!(out, "PASS")?;
            Ok(())
        }
        Some(sample) => {
            writeln!(out, "FAIL")?;
            writeln!(out, "first failing {sample}")?;
            Err(Failure {
                code: EXIT_VERIFY_FAILED,
                message: format!("pipelines disagree beyond {:e}", report.tol),
            })
        }
    }
}
