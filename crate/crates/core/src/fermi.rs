//! Ideal Fermi gas bookkeeping in the two relativistic limits.
//!
//! Everything here is a closed-form conversion except the exact chemical
//! potential, which fixes μ by particle-number conservation,
//! ∫₀^∞ u² n(u) du = 1/3 in reduced momentum u = k/k_F.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::constants::constants;
use crate::constants::{BOLTZMANN, ELECTRON_MASS, HBAR, LIGHT_SPEED};
use crate::error::{non_negative, positive, Error, Result};
use crate::quadrature::AdaptiveQuadrature;
use crate::roots::bisect;

/// T/T_F at or below which the gas counts as degenerate.
pub const DEGENERACY_THRESHOLD: f64 = 0.01;
/// Factor by which the density must exceed the Coulomb threshold to count as ideal.
pub const IDEALITY_FACTOR: f64 = 100.0;

/// ln(1e14): the Fermi factor is below 1e-14 beyond this many k_BT above μ.
pub(crate) const OCCUPATION_CUTOFF: f64 = 32.236_191_301_916_64;

const NORMALIZATION_TOL: f64 = 1e-13;
const MU_BRACKET_WIDTH: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GasRegime {
    /// ε = ħ²k²/2m
    NonRelativistic,
    /// ε = ħck
    ExtremeRelativistic,
}

impl GasRegime {
    /// Reduced dispersion d(u) = ε(u k_F)/ε_F.
    #[inline]
    pub fn reduced_dispersion(self, u: f64) -> f64 {
        match self {
            GasRegime::NonRelativistic => u * u,
            GasRegime::ExtremeRelativistic => u,
        }
    }

    /// Inverse of [`Self::reduced_dispersion`] on d ≥ 0.
    #[inline]
    pub(crate) fn reduced_momentum(self, d: f64) -> f64 {
        match self {
            GasRegime::NonRelativistic => libm::sqrt(d.max(0.0)),
            GasRegime::ExtremeRelativistic => d.max(0.0),
        }
    }
}

/// How the chemical potential of a finite-temperature gas is fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MuMode {
    /// μ = ε_F at every temperature.
    FermiEnergyApprox,
    /// μ from particle-number conservation.
    #[default]
    ExactNormalization,
}

pub fn fermi_momentum_from_density(n: f64) -> Result<f64> {
    let n = positive("density", n)?;
    Ok(libm::cbrt(3.0 * PI * PI * n))
}

pub fn density_from_fermi_momentum(k_f: f64) -> Result<f64> {
    let k = positive("Fermi momentum", k_f)?;
    Ok(k * k * k / (3.0 * PI * PI))
}

/// Degeneracy pressure of the T = 0 gas, Pa.
pub fn pressure_from_density(n: f64, regime: GasRegime) -> Result<f64> {
    let n = positive("density", n)?;
    let three_pi2 = 3.0 * PI * PI;
    Ok(match regime {
        GasRegime::NonRelativistic => {
            libm::pow(three_pi2, 2.0 / 3.0) * HBAR * HBAR / (5.0 * ELECTRON_MASS)
                * libm::pow(n, 5.0 / 3.0)
        }
        GasRegime::ExtremeRelativistic => {
            libm::cbrt(three_pi2) * HBAR * LIGHT_SPEED / 4.0 * libm::pow(n, 4.0 / 3.0)
        }
    })
}

pub fn fermi_momentum_from_pressure(p: f64, regime: GasRegime) -> Result<f64> {
    let p = positive("pressure", p)?;
    Ok(match regime {
        GasRegime::NonRelativistic => {
            libm::pow(15.0 * PI * PI * ELECTRON_MASS * p / (HBAR * HBAR), 0.2)
        }
        GasRegime::ExtremeRelativistic => {
            libm::pow(12.0 * PI * PI * p / (HBAR * LIGHT_SPEED), 0.25)
        }
    })
}

/// r_e = ζ/k_F.
pub fn entanglement_distance(k_f: f64, zeta: f64) -> Result<f64> {
    let k = positive("Fermi momentum", k_f)?;
    let z = positive("zeta", zeta)?;
    Ok(z / k)
}

/// Degeneracy pressure of the gas whose entanglement distance is `r_e`.
pub fn pressure_from_entanglement_distance(r_e: f64, regime: GasRegime, zeta: f64) -> Result<f64> {
    let r = positive("entanglement distance", r_e)?;
    let z = positive("zeta", zeta)?;
    Ok(match regime {
        GasRegime::NonRelativistic => {
            libm::pow(z, 5.0) * HBAR * HBAR / (15.0 * PI * PI * ELECTRON_MASS) * libm::pow(r, -5.0)
        }
        GasRegime::ExtremeRelativistic => {
            libm::pow(z, 4.0) * HBAR * LIGHT_SPEED / (12.0 * PI * PI) * libm::pow(r, -4.0)
        }
    })
}

/// Single-particle energy ε(k), J.
pub fn dispersion(k: f64, regime: GasRegime) -> Result<f64> {
    let k = non_negative("wavenumber", k)?;
    Ok(match regime {
        GasRegime::NonRelativistic => HBAR * HBAR * k * k / (2.0 * ELECTRON_MASS),
        GasRegime::ExtremeRelativistic => HBAR * LIGHT_SPEED * k,
    })
}

/// 1/(e^z + 1) without overflow for any finite z.
#[inline]
pub fn fermi_dirac(z: f64) -> f64 {
    if z > 0.0 {
        let e = libm::exp(-z);
        e / (1.0 + e)
    } else {
        1.0 / (1.0 + libm::exp(z))
    }
}

/// Fermi-Dirac occupation of the level at wavenumber `k`.
///
/// `T = 0` is the exact step: 1 below μ, 1/2 at μ, 0 above.
pub fn occupation(k: f64, mu: f64, temperature: f64, regime: GasRegime) -> Result<f64> {
    let t = non_negative("temperature", temperature)?;
    let e = dispersion(k, regime)?;
    if t == 0.0 {
        return Ok(if e < mu {
            1.0
        } else if e == mu {
            0.5
        } else {
            0.0
        });
    }
    Ok(fermi_dirac((e - mu) / (BOLTZMANN * t)))
}

/// Reduced momentum beyond which n(u) < 1e-14.
///
/// μ̃ is floored at zero so that a classical (μ̃ < 0) gas keeps its thermal tail.
pub(crate) fn reduced_cutoff(mu_tilde: f64, t: f64, regime: GasRegime) -> f64 {
    regime.reduced_momentum(mu_tilde.max(0.0) + t * OCCUPATION_CUTOFF)
}

/// Width in u of the Fermi step around `u_f`.
fn step_width(u_f: f64, t: f64, regime: GasRegime) -> f64 {
    match regime {
        GasRegime::NonRelativistic => (t / (2.0 * u_f)).min(libm::sqrt(t)),
        GasRegime::ExtremeRelativistic => t,
    }
}

/// Sorted breakpoints on [0, u_max] that bracket the Fermi step at geometrically
/// growing distances, so no panel straddles the step without a node near it.
pub(crate) fn fermi_breakpoints(mu_tilde: f64, t: f64, regime: GasRegime, u_max: f64) -> Vec<f64> {
    let mut points = vec![0.0, u_max];
    let u_f = regime.reduced_momentum(mu_tilde);
    if u_f > 0.0 && u_f < u_max {
        points.push(u_f);
        let w = step_width(u_f, t, regime);
        let mut d = w;
        while d < u_max {
            if u_f - d > 0.0 {
                points.push(u_f - d);
            }
            if u_f + d < u_max {
                points.push(u_f + d);
            }
            d *= 4.0;
        }
    }
    points.sort_by(f64::total_cmp);
    points
}

/// ∫₀^∞ u² n(u) du for reduced chemical potential μ̃ and reduced temperature t > 0.
pub fn normalization_integral(mu_tilde: f64, t: f64, regime: GasRegime) -> Result<f64> {
    let t = positive("reduced temperature", t)?;
    let u_max = reduced_cutoff(mu_tilde, t, regime);
    if u_max <= 0.0 {
        return Ok(0.0);
    }
    let integrand = |u: f64| u * u * fermi_dirac((regime.reduced_dispersion(u) - mu_tilde) / t);
    let breakpoints = fermi_breakpoints(mu_tilde, t, regime, u_max);
    let r = AdaptiveQuadrature::<16, 8>::new(4096).integrate(
        &integrand,
        &breakpoints,
        NORMALIZATION_TOL,
    )?;
    Ok(r.value)
}

/// μ/ε_F at reduced temperature `t = T/T_F`.
///
/// Exact mode bisects on the bracket [−50t, 2]; the normalization integral is
/// increasing in μ, so the bracket holds a unique root whenever it holds a sign change.
pub fn reduced_chemical_potential(t: f64, regime: GasRegime, mode: MuMode) -> Result<f64> {
    let t = non_negative("reduced temperature", t)?;
    if t == 0.0 || mode == MuMode::FermiEnergyApprox {
        return Ok(1.0);
    }
    let residual = |m: f64| normalization_integral(m, t, regime).map(|v| v - 1.0 / 3.0);
    let (lo, hi) = (-50.0 * t, 2.0);
    let (r_lo, r_hi) = (residual(lo)?, residual(hi)?);
    if r_lo > 0.0 || r_hi < 0.0 {
        return Err(Error::ChemicalPotentialBracket {
            t,
            lo,
            hi,
            residual_lo: r_lo,
            residual_hi: r_hi,
        });
    }
    let (mu, _) = bisect(lo, hi, r_lo, r_hi, residual, MU_BRACKET_WIDTH, 0.0)?;
    Ok(mu)
}

/// Chemical potential in joules for a gas of density `n` at temperature `T`.
pub fn chemical_potential(
    n: f64,
    temperature: f64,
    regime: GasRegime,
    mode: MuMode,
) -> Result<f64> {
    let state = FermiGasState::new(n, temperature, regime, mode)?;
    Ok(state.chemical_potential)
}

/// An ideal Fermi gas with its derived Fermi-surface quantities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FermiGasState {
    pub density: f64,
    pub temperature: f64,
    pub regime: GasRegime,
    pub mu_mode: MuMode,
    pub fermi_momentum: f64,
    pub fermi_energy: f64,
    pub fermi_temperature: f64,
    pub chemical_potential: f64,
    pub pressure: f64,
}

impl FermiGasState {
    pub fn new(density: f64, temperature: f64, regime: GasRegime, mu_mode: MuMode) -> Result<Self> {
        let k_f = fermi_momentum_from_density(density)?;
        Self::build(density, k_f, temperature, regime, mu_mode)
    }

    /// The gas whose T = 0 degeneracy pressure is `pressure`.
    pub fn from_pressure(
        pressure: f64,
        temperature: f64,
        regime: GasRegime,
        mu_mode: MuMode,
    ) -> Result<Self> {
        let k_f = fermi_momentum_from_pressure(pressure, regime)?;
        let n = density_from_fermi_momentum(k_f)?;
        Self::build(n, k_f, temperature, regime, mu_mode)
    }

    fn build(
        density: f64,
        k_f: f64,
        temperature: f64,
        regime: GasRegime,
        mu_mode: MuMode,
    ) -> Result<Self> {
        let temperature = non_negative("temperature", temperature)?;
        let fermi_energy = dispersion(k_f, regime)?;
        let fermi_temperature = fermi_energy / BOLTZMANN;
        let mu_tilde =
            reduced_chemical_potential(temperature / fermi_temperature, regime, mu_mode)?;
        Ok(Self {
            density,
            temperature,
            regime,
            mu_mode,
            fermi_momentum: k_f,
            fermi_energy,
            fermi_temperature,
            chemical_potential: mu_tilde * fermi_energy,
            pressure: pressure_from_density(density, regime)?,
        })
    }

    pub fn t_over_tf(&self) -> f64 {
        self.temperature / self.fermi_temperature
    }

    pub fn reduced_chemical_potential(&self) -> f64 {
        self.chemical_potential / self.fermi_energy
    }

    pub fn degeneracy_ok(&self) -> bool {
        self.t_over_tf() <= DEGENERACY_THRESHOLD
    }
}

/// Advisory flags for the ideal degenerate gas approximation, with the raw ratios.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidityReport {
    pub degenerate: bool,
    pub ideal: bool,
    pub t_over_tf: f64,
    /// n over the Coulomb threshold density (q²m/(4πε₀ħ²))³ Z².
    pub density_ratio: f64,
}

/// Density above which kinetic energy dominates the Coulomb energy for nuclear charge `z`.
///
/// This is Z²/a₀³ with a₀ the Bohr radius.
pub fn ideality_threshold_density(z: f64) -> f64 {
    let a0 = constants().bohr_radius();
    z * z / (a0 * a0 * a0)
}

/// Checks T ≪ T_F and n ≫ (q²m/(4πε₀ħ²))³ Z². Expects `z >= 1`.
pub fn validity(state: &FermiGasState, z: f64) -> ValidityReport {
    let t_over_tf = state.t_over_tf();
    let density_ratio = state.density / ideality_threshold_density(z);
    ValidityReport {
        degenerate: t_over_tf <= DEGENERACY_THRESHOLD,
        ideal: density_ratio >= IDEALITY_FACTOR,
        t_over_tf,
        density_ratio,
    }
}
