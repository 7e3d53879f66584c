//! `fge` argument parsing and subcommand dispatch.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fge_core::astro::{critical_mass, dwarf_report, WhiteDwarf};
use fge_core::constants::{SOLAR_MASS, SOLAR_RADIUS};
use fge_core::entanglement::{average_entanglement, eos_evaluate, Measure};
use fge_core::exchange::{solve_zeta, zeta_zero_temperature, DEFAULT_TOL};
use fge_core::fermi::{GasRegime, MuMode};

use crate::output::{AverageOutput, DwarfOutput, EvalOutput, ZetaOutput};
use crate::sweep::{figure1_spec, run_sweep, write_csv, Spacing, SweepSpec, SweepVariable};
use crate::Error;

#[derive(Debug, Parser)]
#[command(
    name = "fge",
    version,
    about = "Pair entanglement of electrons in a degenerate Fermi gas"
)]
pub struct Cli {
    /// Relative quadrature tolerance.
    #[arg(long, global = true, env = "FGE_QUAD_TOL", default_value_t = DEFAULT_TOL)]
    pub tol: f64,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Entanglement of a pair at distance r in a gas at pressure P and temperature T.
    Eval(EvalArgs),
    /// Reduced entanglement distance ζ at t = T/T_F.
    Zeta(ZetaArgs),
    /// Sweep one of r, P, T and write CSV.
    Sweep(SweepArgs),
    /// The T = 0, r = 1e-10 m pressure sweep of concurrence and entropy of formation.
    Figure1,
    /// Entanglement distance of a uniform-density white dwarf.
    Dwarf(DwarfArgs),
    /// Entanglement averaged over 0 ≤ x ≤ ζ(t).
    Avg(AvgArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum RegimeArg {
    Nonrel,
    Rel,
}

impl From<RegimeArg> for GasRegime {
    fn from(r: RegimeArg) -> Self {
        match r {
            RegimeArg::Nonrel => GasRegime::NonRelativistic,
            RegimeArg::Rel => GasRegime::ExtremeRelativistic,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MuModeArg {
    /// μ = ε_F
    Fermi,
    /// μ from particle-number conservation
    Exact,
}

impl From<MuModeArg> for MuMode {
    fn from(m: MuModeArg) -> Self {
        match m {
            MuModeArg::Fermi => MuMode::FermiEnergyApprox,
            MuModeArg::Exact => MuMode::ExactNormalization,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MeasureArg {
    Concurrence,
    Eof,
}

impl From<MeasureArg> for Measure {
    fn from(m: MeasureArg) -> Self {
        match m {
            MeasureArg::Concurrence => Measure::Concurrence,
            MeasureArg::Eof => Measure::EntropyOfFormation,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VariableArg {
    Pressure,
    Distance,
    Temperature,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SpacingArg {
    Linear,
    Log,
}

#[derive(Debug, Args)]
pub struct GasArgs {
    #[arg(long, value_enum, default_value = "nonrel")]
    pub regime: RegimeArg,
    #[arg(long = "mu-mode", value_enum, default_value = "exact")]
    pub mu_mode: MuModeArg,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Pair separation, m.
    #[arg(long, allow_negative_numbers = true)]
    pub r: f64,
    /// Degeneracy pressure, Pa.
    #[arg(long = "P", allow_negative_numbers = true)]
    pub pressure: f64,
    /// Temperature, K.
    #[arg(long = "T", allow_negative_numbers = true, default_value_t = 0.0)]
    pub temperature: f64,
    #[command(flatten)]
    pub gas: GasArgs,
}

#[derive(Debug, Args)]
pub struct ZetaArgs {
    /// T/T_F
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub t: f64,
    #[command(flatten)]
    pub gas: GasArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long = "var", value_enum)]
    pub variable: VariableArg,
    #[arg(long, allow_negative_numbers = true)]
    pub min: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub max: f64,
    #[arg(long, default_value_t = 200)]
    pub count: usize,
    #[arg(long, value_enum, default_value = "log")]
    pub spacing: SpacingArg,
    /// Fixed separation, m.
    #[arg(long, allow_negative_numbers = true)]
    pub r: Option<f64>,
    /// Fixed pressure, Pa.
    #[arg(long = "P", allow_negative_numbers = true)]
    pub pressure: Option<f64>,
    /// Fixed temperature, K.
    #[arg(long = "T", allow_negative_numbers = true)]
    pub temperature: Option<f64>,
    #[command(flatten)]
    pub gas: GasArgs,
}

#[derive(Debug, Args)]
pub struct DwarfArgs {
    /// Mass, kg.
    #[arg(
        long = "M",
        allow_negative_numbers = true,
        required_unless_present = "mass_solar",
        conflicts_with = "mass_solar"
    )]
    pub mass: Option<f64>,
    /// Mass in solar masses.
    #[arg(long = "M-solar", allow_negative_numbers = true)]
    pub mass_solar: Option<f64>,
    /// Radius, m.
    #[arg(
        long = "R",
        allow_negative_numbers = true,
        required_unless_present = "radius_solar",
        conflicts_with = "radius_solar"
    )]
    pub radius: Option<f64>,
    /// Radius in solar radii.
    #[arg(long = "R-solar", allow_negative_numbers = true)]
    pub radius_solar: Option<f64>,
    /// Surface temperature, K.
    #[arg(long = "T", allow_negative_numbers = true)]
    pub temperature: f64,
    /// Protons per nucleus.
    #[arg(long = "Z", allow_negative_numbers = true, default_value_t = 6.0)]
    pub z: f64,
    /// Nucleons per nucleus.
    #[arg(long = "A", allow_negative_numbers = true, default_value_t = 12.0)]
    pub a: f64,
    #[arg(long, value_enum, default_value = "nonrel")]
    pub regime: RegimeArg,
}

#[derive(Debug, Args)]
pub struct AvgArgs {
    /// T/T_F
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub t: f64,
    #[arg(long, value_enum, default_value = "concurrence")]
    pub measure: MeasureArg,
    #[command(flatten)]
    pub gas: GasArgs,
}

/// Parses `args` and runs the subcommand, writing to `stdout` unless `--out` is given.
pub fn run<I, T>(args: I, stdout: &mut dyn Write) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match execute(&cli, stdout) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

pub fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<(), Error> {
    let tol = cli.tol;
    match &cli.command {
        Command::Eval(a) => {
            let rep = eos_evaluate(
                a.r,
                a.pressure,
                a.temperature,
                a.gas.regime.into(),
                a.gas.mu_mode.into(),
                tol,
            )?;
            emit_json(&EvalOutput::from(&rep), cli.out.as_deref(), stdout)
        }
        Command::Zeta(a) => {
            let mode = a.gas.mu_mode.into();
            let z = solve_zeta(a.t, a.gas.regime.into(), mode, tol)?;
            emit_json(&ZetaOutput::new(&z, mode), cli.out.as_deref(), stdout)
        }
        Command::Sweep(a) => {
            let spec = SweepSpec {
                variable: match a.variable {
                    VariableArg::Pressure => SweepVariable::Pressure,
                    VariableArg::Distance => SweepVariable::Distance,
                    VariableArg::Temperature => SweepVariable::Temperature,
                },
                min: a.min,
                max: a.max,
                count: a.count,
                spacing: match a.spacing {
                    SpacingArg::Linear => Spacing::Linear,
                    SpacingArg::Log => Spacing::Log,
                },
                r: a.r,
                pressure: a.pressure,
                temperature: a.temperature,
                regime: a.gas.regime.into(),
                mu_mode: a.gas.mu_mode.into(),
                tol,
            };
            emit_csv(&spec, cli.out.as_deref(), stdout)
        }
        Command::Figure1 => emit_csv(&figure1_spec(tol), cli.out.as_deref(), stdout),
        Command::Dwarf(a) => {
            let mass = a
                .mass
                .unwrap_or_else(|| a.mass_solar.unwrap_or(f64::NAN) * SOLAR_MASS);
            let radius = a
                .radius
                .unwrap_or_else(|| a.radius_solar.unwrap_or(f64::NAN) * SOLAR_RADIUS);
            let dwarf = WhiteDwarf::new(mass, radius, a.temperature, a.z, a.a)?;
            let rep = dwarf_report(&dwarf, zeta_zero_temperature(), a.regime.into())?;
            let m_crit = critical_mass(&rep)?;
            emit_json(&DwarfOutput::new(&rep, m_crit), cli.out.as_deref(), stdout)
        }
        Command::Avg(a) => {
            let (regime, mode) = (a.gas.regime.into(), a.gas.mu_mode.into());
            let avg = average_entanglement(a.t, regime, a.measure.into(), mode, tol)?;
            emit_json(
                &AverageOutput::new(&avg, regime, mode),
                cli.out.as_deref(),
                stdout,
            )
        }
    }
}

fn emit_json<S: Serialize>(
    value: &S,
    out: Option<&Path>,
    stdout: &mut dyn Write,
) -> Result<(), Error> {
    let mut text = serde_json::to_string(value)?;
    text.push('\n');
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn emit_csv(spec: &SweepSpec, out: Option<&Path>, stdout: &mut dyn Write) -> Result<(), Error> {
    // rows first, so a failing sweep leaves no partial file behind
    let rows = run_sweep(spec)?;
    match out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            write_csv(&rows, &mut w)?;
            w.flush()?;
        }
        None => write_csv(&rows, stdout)?,
    }
    Ok(())
}
