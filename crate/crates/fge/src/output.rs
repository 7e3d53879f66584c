//! JSON shapes printed by the subcommands.

use serde::Serialize;

use fge_core::astro::DwarfReport;
use fge_core::entanglement::{AverageEntanglement, EntanglementReport, Measure};
use fge_core::exchange::ZetaResult;
use fge_core::fermi::{GasRegime, MuMode};

pub fn regime_name(r: GasRegime) -> &'static str {
    match r {
        GasRegime::NonRelativistic => "nonrel",
        GasRegime::ExtremeRelativistic => "rel",
    }
}

pub fn mu_mode_name(m: MuMode) -> &'static str {
    match m {
        MuMode::FermiEnergyApprox => "fermi",
        MuMode::ExactNormalization => "exact",
    }
}

pub fn measure_name(m: Measure) -> &'static str {
    match m {
        Measure::Concurrence => "concurrence",
        Measure::EntropyOfFormation => "eof",
    }
}

#[derive(Debug, Serialize)]
pub struct EvalOutput {
    pub r: f64,
    pub pressure: f64,
    pub temperature: f64,
    pub regime: &'static str,
    pub mu_mode: &'static str,
    pub fermi_momentum: f64,
    pub x: f64,
    pub t_over_tf: f64,
    pub mu_tilde: f64,
    pub f: f64,
    pub entangled: bool,
    pub concurrence: f64,
    pub entropy_of_formation: f64,
    pub zeta: f64,
    pub r_e: f64,
    pub quadrature_error_estimate: f64,
}

impl From<&EntanglementReport> for EvalOutput {
    fn from(e: &EntanglementReport) -> Self {
        Self {
            r: e.r,
            pressure: e.pressure,
            temperature: e.temperature,
            regime: regime_name(e.regime),
            mu_mode: mu_mode_name(e.mu_mode),
            fermi_momentum: e.fermi_momentum,
            x: e.x,
            t_over_tf: e.t_over_tf,
            mu_tilde: e.mu_tilde,
            f: e.f,
            entangled: e.entangled,
            concurrence: e.concurrence,
            entropy_of_formation: e.entropy_of_formation,
            zeta: e.zeta,
            r_e: e.r_e,
            quadrature_error_estimate: e.quadrature_error_estimate,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ZetaOutput {
    pub zeta: f64,
    pub t: f64,
    pub regime: &'static str,
    pub mu_mode: &'static str,
    pub mu_tilde: f64,
    pub residual: f64,
}

impl ZetaOutput {
    pub fn new(z: &ZetaResult, mu_mode: MuMode) -> Self {
        Self {
            zeta: z.zeta,
            t: z.t,
            regime: regime_name(z.regime),
            mu_mode: mu_mode_name(mu_mode),
            mu_tilde: z.mu_tilde,
            residual: z.residual,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ValidityOutput {
    pub degenerate: bool,
    pub ideal: bool,
    pub t_over_tf: f64,
    pub density_ratio: f64,
}

#[derive(Debug, Serialize)]
pub struct DwarfOutput {
    pub mass: f64,
    pub radius: f64,
    pub surface_temperature: f64,
    pub z: f64,
    pub a: f64,
    pub regime: &'static str,
    pub mass_density: f64,
    pub electron_density: f64,
    pub fermi_momentum: f64,
    pub fermi_temperature: f64,
    pub t_over_tf: f64,
    pub zeta: f64,
    pub r_e: f64,
    pub critical_mass: f64,
    pub validity: ValidityOutput,
    pub fermi_energy_over_rest_mass: f64,
    pub relativistic_warning: bool,
}

impl DwarfOutput {
    pub fn new(d: &DwarfReport, critical_mass: f64) -> Self {
        Self {
            mass: d.dwarf.mass,
            radius: d.dwarf.radius,
            surface_temperature: d.dwarf.surface_temperature,
            z: d.dwarf.z,
            a: d.dwarf.a,
            regime: regime_name(d.regime),
            mass_density: d.mass_density,
            electron_density: d.electron_density,
            fermi_momentum: d.fermi_momentum,
            fermi_temperature: d.fermi_temperature,
            t_over_tf: d.t_over_tf,
            zeta: d.zeta,
            r_e: d.r_e,
            critical_mass,
            validity: ValidityOutput {
                degenerate: d.validity.degenerate,
                ideal: d.validity.ideal,
                t_over_tf: d.validity.t_over_tf,
                density_ratio: d.validity.density_ratio,
            },
            fermi_energy_over_rest_mass: d.fermi_energy_over_rest_mass,
            relativistic_warning: d.relativistic_warning,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct AverageOutput {
    pub t: f64,
    pub regime: &'static str,
    pub mu_mode: &'static str,
    pub measure: &'static str,
    pub value: f64,
    pub zeta: f64,
}

impl AverageOutput {
    pub fn new(a: &AverageEntanglement, regime: GasRegime, mu_mode: MuMode) -> Self {
        Self {
            t: a.t,
            regime: regime_name(regime),
            mu_mode: mu_mode_name(mu_mode),
            measure: measure_name(a.measure),
            value: a.value,
            zeta: a.zeta,
        }
    }
}
