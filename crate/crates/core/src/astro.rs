//! White dwarfs as uniform-density degenerate electron gases.

use core::f64::consts::PI;

use crate::constants::{ELECTRON_MASS, HYDROGEN_MASS, LIGHT_SPEED, SOLAR_MASS, SOLAR_RADIUS};
use crate::error::{positive, Error, Result};
use crate::fermi::{
    entanglement_distance, fermi_momentum_from_density, validity, FermiGasState, GasRegime, MuMode,
    ValidityReport,
};

/// ε_F/(mc²) above which the non-relativistic treatment is flagged.
pub const RELATIVISTIC_WARNING: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WhiteDwarf {
    pub mass: f64,
    pub radius: f64,
    pub surface_temperature: f64,
    /// Protons per nucleus.
    pub z: f64,
    /// Nucleons per nucleus.
    pub a: f64,
}

impl WhiteDwarf {
    pub fn new(mass: f64, radius: f64, surface_temperature: f64, z: f64, a: f64) -> Result<Self> {
        positive("mass", mass)?;
        positive("radius", radius)?;
        positive("surface temperature", surface_temperature)?;
        if !(z.is_finite() && z >= 1.0) {
            return Err(Error::Domain {
                quantity: "Z",
                requirement: "at least 1",
                value: z,
            });
        }
        if !(a.is_finite() && a >= z) {
            return Err(Error::Domain {
                quantity: "A",
                requirement: "at least Z",
                value: a,
            });
        }
        Ok(Self {
            mass,
            radius,
            surface_temperature,
            z,
            a,
        })
    }

    /// Carbon-oxygen composition, Z/A = 1/2.
    pub fn carbon_oxygen(mass: f64, radius: f64, surface_temperature: f64) -> Result<Self> {
        Self::new(mass, radius, surface_temperature, 6.0, 12.0)
    }

    /// 1 M☉, 0.008 R☉, 27000 K, carbon-oxygen.
    pub fn sirius_b() -> Self {
        Self {
            mass: SOLAR_MASS,
            radius: 0.008 * SOLAR_RADIUS,
            surface_temperature: 27_000.0,
            z: 6.0,
            a: 12.0,
        }
    }

    /// M/((4/3)πR³)
    pub fn mass_density(&self) -> f64 {
        self.mass / (4.0 / 3.0 * PI * self.radius * self.radius * self.radius)
    }

    /// Zρ/(A m_H)
    pub fn electron_density(&self) -> f64 {
        self.z * self.mass_density() / (self.a * HYDROGEN_MASS)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DwarfReport {
    pub dwarf: WhiteDwarf,
    pub regime: GasRegime,
    pub mass_density: f64,
    pub electron_density: f64,
    pub fermi_momentum: f64,
    pub fermi_temperature: f64,
    pub t_over_tf: f64,
    pub zeta: f64,
    pub r_e: f64,
    pub validity: ValidityReport,
    /// ε_F/(mc²) with the non-relativistic ε_F = ħ²k_F²/(2m).
    pub fermi_energy_over_rest_mass: f64,
    pub relativistic_warning: bool,
}

/// ρ → n → k_F → r_e = ζ/k_F for a uniform-density star.
pub fn dwarf_report(dwarf: &WhiteDwarf, zeta: f64, regime: GasRegime) -> Result<DwarfReport> {
    let dwarf = WhiteDwarf::new(
        dwarf.mass,
        dwarf.radius,
        dwarf.surface_temperature,
        dwarf.z,
        dwarf.a,
    )?;
    let n = dwarf.electron_density();
    let k_f = fermi_momentum_from_density(n)?;
    let r_e = entanglement_distance(k_f, zeta)?;
    let state = FermiGasState::new(
        n,
        dwarf.surface_temperature,
        regime,
        MuMode::FermiEnergyApprox,
    )?;
    let nonrel_fermi_energy = FermiGasState::new(
        n,
        0.0,
        GasRegime::NonRelativistic,
        MuMode::FermiEnergyApprox,
    )?
    .fermi_energy;
    let ratio = nonrel_fermi_energy / (ELECTRON_MASS * LIGHT_SPEED * LIGHT_SPEED);
    Ok(DwarfReport {
        dwarf,
        regime,
        mass_density: dwarf.mass_density(),
        electron_density: n,
        fermi_momentum: k_f,
        fermi_temperature: state.fermi_temperature,
        t_over_tf: state.t_over_tf(),
        zeta,
        r_e,
        validity: validity(&state, dwarf.z),
        fermi_energy_over_rest_mass: ratio,
        relativistic_warning: ratio > RELATIVISTIC_WARNING,
    })
}

/// r_e ∝ R M^{−1/3}, calibrated at `reference`.
pub fn scaling_law_re(mass: f64, radius: f64, reference: &DwarfReport) -> Result<f64> {
    positive("mass", mass)?;
    positive("radius", radius)?;
    let d = &reference.dwarf;
    Ok(reference.r_e * (radius / d.radius) * libm::cbrt(d.mass / mass))
}

/// The mass at which the calibrated r_e ∝ R M^{−1/3} law gives r_e = R.
///
/// With c = r_e,ref M_ref^{1/3}/R_ref the condition c R M^{−1/3} = R
/// gives M = c³ independent of R.
pub fn critical_mass(reference: &DwarfReport) -> Result<f64> {
    let d = &reference.dwarf;
    positive("reference entanglement distance", reference.r_e)?;
    let c = reference.r_e * libm::cbrt(d.mass) / d.radius;
    Ok(c * c * c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exchange::zeta_zero_temperature;

    fn rel(a: f64, b: f64) -> f64 {
        (a / b - 1.0).abs()
    }

    fn sirius() -> DwarfReport {
        dwarf_report(
            &WhiteDwarf::sirius_b(),
            zeta_zero_temperature(),
            GasRegime::NonRelativistic,
        )
        .unwrap()
    }

    #[test]
    fn sirius_b_chain() {
        // mpmath with the same constants
        let r = sirius();
        assert!(rel(r.mass_density, 2.754_182_627_482_284e9) < 1e-13);
        assert!(rel(r.electron_density, 8.228_648_297_017_413e35) < 1e-13);
        assert!(rel(r.fermi_momentum, 2.899_010_801_509_196e12) < 1e-13);
        assert!(rel(r.r_e, 6.260_145_619_521_15e-13) < 1e-13);
        assert!(rel(r.t_over_tf, 7.266_312_132e-6) < 1e-9);
        assert!(r.validity.degenerate && r.validity.ideal);
        assert!(r.relativistic_warning);
        assert!(rel(r.fermi_energy_over_rest_mass, 0.6266) < 1e-3);
    }

    #[test]
    fn shares_the_fermi_code_path() {
        let r = sirius();
        let expect = entanglement_distance(
            fermi_momentum_from_density(r.electron_density).unwrap(),
            r.zeta,
        )
        .unwrap();
        assert_eq!(r.r_e, expect);
    }

    #[test]
    fn composition_is_validated() {
        assert!(WhiteDwarf::new(SOLAR_MASS, 1e7, 1e4, 6.0, 5.0).is_err());
        assert!(WhiteDwarf::new(SOLAR_MASS, 1e7, 1e4, 0.5, 1.0).is_err());
        assert!(WhiteDwarf::new(-1.0, 1e7, 1e4, 6.0, 12.0).is_err());
        assert!(WhiteDwarf::new(SOLAR_MASS, 1e7, 0.0, 6.0, 12.0).is_err());
        let bad = WhiteDwarf {
            a: 2.0,
            ..WhiteDwarf::sirius_b()
        };
        assert!(dwarf_report(&bad, 1.8, GasRegime::NonRelativistic).is_err());
        assert_eq!(
            WhiteDwarf::carbon_oxygen(1.0, 1.0, 1.0).unwrap().z * 2.0,
            12.0
        );
    }

    #[test]
    fn scaling_law() {
        let r = sirius();
        let d = r.dwarf;
        assert_eq!(scaling_law_re(d.mass, d.radius, &r).unwrap(), r.r_e);
        assert!(
            rel(
                scaling_law_re(d.mass, 2.0 * d.radius, &r).unwrap(),
                2.0 * r.r_e
            ) < 1e-15
        );
        assert!(
            rel(
                scaling_law_re(8.0 * d.mass, d.radius, &r).unwrap(),
                0.5 * r.r_e
            ) < 1e-15
        );

        let doubled = WhiteDwarf {
            radius: 2.0 * d.radius,
            ..d
        };
        let full = dwarf_report(&doubled, r.zeta, GasRegime::NonRelativistic).unwrap();
        assert!(rel(full.r_e, 2.0 * r.r_e) < 1e-12);
    }

    #[test]
    fn critical_mass_value() {
        let r = sirius();
        let m = critical_mass(&r).unwrap();
        assert!(rel(m, 2.830_314_202_841_791e-27) < 1e-10);

        let mut scaled = r;
        scaled.r_e *= 2.0;
        assert!(rel(critical_mass(&scaled).unwrap(), 8.0 * m) < 1e-14);

        // at M_crit the law returns r_e = R for any R
        for radius in [1.0, 1e-15, 1e6] {
            assert!(rel(scaling_law_re(m, radius, &r).unwrap(), radius) < 1e-9);
        }
    }
}
