//! Physical constants in SI units.
//!
//! Microscopic values are CODATA 2018. The hydrogen-atom mass is the
//! ¹H relative atomic mass times the atomic mass constant. Solar values are
//! the conventional astronomical ones.

/// Reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054_571_817e-34;
/// Electron rest mass, kg.
pub const ELECTRON_MASS: f64 = 9.109_383_701_5e-31;
/// Speed of light in vacuum, m/s (exact).
pub const LIGHT_SPEED: f64 = 299_792_458.0;
/// Boltzmann constant, J/K (exact).
pub const BOLTZMANN: f64 = 1.380_649e-23;
/// Mass of the hydrogen atom, kg.
pub const HYDROGEN_MASS: f64 = 1.673_532_838e-27;
/// Elementary charge, C (exact).
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;
/// Vacuum permittivity, F/m.
pub const VACUUM_PERMITTIVITY: f64 = 8.854_187_812_8e-12;
/// Solar mass, kg.
pub const SOLAR_MASS: f64 = 1.988_92e30;
/// Solar radius (IAU nominal), m.
pub const SOLAR_RADIUS: f64 = 6.957e8;

/// The full constant set as a value, for callers that want to pass it around.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub hbar: f64,
    pub electron_mass: f64,
    pub light_speed: f64,
    pub boltzmann: f64,
    pub hydrogen_mass: f64,
    pub elementary_charge: f64,
    pub vacuum_permittivity: f64,
    pub solar_mass: f64,
    pub solar_radius: f64,
}

const CONSTANTS: PhysicalConstants = PhysicalConstants {
    hbar: HBAR,
    electron_mass: ELECTRON_MASS,
    light_speed: LIGHT_SPEED,
    boltzmann: BOLTZMANN,
    hydrogen_mass: HYDROGEN_MASS,
    elementary_charge: ELEMENTARY_CHARGE,
    vacuum_permittivity: VACUUM_PERMITTIVITY,
    solar_mass: SOLAR_MASS,
    solar_radius: SOLAR_RADIUS,
};

pub const fn constants() -> PhysicalConstants {
    CONSTANTS
}

impl PhysicalConstants {
    /// ħc, J·m.
    pub fn hbar_c(&self) -> f64 {
        self.hbar * self.light_speed
    }

    /// Electron rest energy mc², J.
    pub fn electron_rest_energy(&self) -> f64 {
        self.electron_mass * self.light_speed * self.light_speed
    }

    /// Coulomb coupling q²/(4πε₀), J·m. This is the SI form of the Gaussian `e²`.
    pub fn coulomb_coupling(&self) -> f64 {
        self.elementary_charge * self.elementary_charge
            / (4.0 * core::f64::consts::PI * self.vacuum_permittivity)
    }

    /// Bohr radius 4πε₀ħ²/(m q²), m.
    pub fn bohr_radius(&self) -> f64 {
        self.hbar * self.hbar / (self.electron_mass * self.coulomb_coupling())
    }
}
