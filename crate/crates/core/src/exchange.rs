//! The exchange amplitude f and the entanglement-distance constant ζ.
//!
//! f(r, T) = 3/(r k_F³) ∫₀^∞ k n_k sin(kr) dk. In reduced variables
//! u = k/k_F, x = k_F r, t = T/T_F and μ̃ = μ/ε_F this becomes
//!
//! ```text
//! f(x, t) = (3/x) ∫₀^∞ u n(u) sin(ux) du,    n(u) = 1/(exp((d(u) − μ̃)/t) + 1)
//! ```
//!
//! with d(u) = u² or u depending on the regime. At t = 0 the integral is
//! elementary: f(x, 0) = 3(sin x − x cos x)/x³ = 3 j₁(x)/x.
//!
//! The finite-temperature integral is split at every half period of
//! sin(ux), at the Fermi point and at geometrically spaced points around it,
//! then refined adaptively with 16-point Gauss-Legendre panels checked
//! against 8-point ones. The tail where n(u) < 1e-14 is dropped.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::constants::{BOLTZMANN, ELECTRON_MASS, HBAR, LIGHT_SPEED};
use crate::error::{non_negative, positive, Error, Result};
use crate::fermi::{
    dispersion, fermi_breakpoints, fermi_dirac, normalization_integral, reduced_chemical_potential,
    reduced_cutoff, FermiGasState, GasRegime, MuMode, OCCUPATION_CUTOFF,
};
use crate::quadrature::AdaptiveQuadrature;
use crate::roots::bisect;

/// Default relative tolerance of the finite-temperature quadrature.
pub const DEFAULT_TOL: f64 = 1e-10;
pub const MIN_TOL: f64 = 1e-14;
pub const MAX_TOL: f64 = 1e-6;

/// Below this x the three-term series replaces the closed form.
pub const SERIES_CROSSOVER: f64 = 1e-3;
/// Below this x the finite-temperature amplitude uses its r → 0 limit.
pub const SMALL_X: f64 = 1e-6;

/// f² = 1/2 residual the ζ solver must reach.
pub const ZETA_RESIDUAL: f64 = 1e-10;
const ZETA_SCAN_START: f64 = 1e-3;
const ZETA_SCAN_END: f64 = 3.0;
const ZETA_SCAN_STEP: f64 = 0.1;

const PANEL_BUDGET: usize = 20_000;
/// At most this many base panels per unit of reduced momentum.
const PANELS_PER_UNIT: f64 = 64.0;

/// Dimensionless point at which f is evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedCoordinates {
    x: f64,
    t: f64,
    mu_tilde: f64,
    regime: GasRegime,
}

impl ReducedCoordinates {
    /// `x = k_F r ≥ 0`, `t = T/T_F ≥ 0`, `mu_tilde = μ/ε_F` (must be 1 at t = 0).
    pub fn new(x: f64, t: f64, mu_tilde: f64, regime: GasRegime) -> Result<Self> {
        let x = non_negative("x = k_F r", x)?;
        let t = non_negative("t = T/T_F", t)?;
        if !mu_tilde.is_finite() || (t == 0.0 && mu_tilde != 1.0) {
            return Err(Error::Domain {
                quantity: "mu/eps_F",
                requirement: "finite, and exactly 1 at zero temperature",
                value: mu_tilde,
            });
        }
        Ok(Self {
            x,
            t,
            mu_tilde,
            regime,
        })
    }

    /// Coordinates with μ̃ fixed by `mode`.
    pub fn with_mu_mode(x: f64, t: f64, regime: GasRegime, mode: MuMode) -> Result<Self> {
        let mu = reduced_chemical_potential(t, regime, mode)?;
        Self::new(x, t, mu, regime)
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn mu_tilde(&self) -> f64 {
        self.mu_tilde
    }

    pub fn regime(&self) -> GasRegime {
        self.regime
    }

    pub fn with_x(self, x: f64) -> Result<Self> {
        Self::new(x, self.t, self.mu_tilde, self.regime)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExchangeAmplitude {
    pub value: f64,
    pub coords: ReducedCoordinates,
    /// Estimated error relative to the L1 norm of the integrand; zero for the closed form.
    pub quadrature_error_estimate: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaResult {
    pub zeta: f64,
    pub t: f64,
    pub regime: GasRegime,
    pub mu_tilde: f64,
    /// |f(ζ, t)² − 1/2|
    pub residual: f64,
}

pub(crate) fn check_tol(tol: f64) -> Result<f64> {
    if (MIN_TOL..=MAX_TOL).contains(&tol) {
        Ok(tol)
    } else {
        Err(Error::Domain {
            quantity: "quadrature tolerance",
            requirement: "within [1e-14, 1e-6]",
            value: tol,
        })
    }
}

/// 3 j₁(x)/x for x ≥ 0 without the cancellation in sin x − x cos x.
pub(crate) fn f0(x: f64) -> f64 {
    if x < SERIES_CROSSOVER {
        let x2 = x * x;
        1.0 - x2 / 10.0 + x2 * x2 / 280.0
    } else if x < 1.0 {
        // Σ_k (−1)^k 3 x^{2k} / (2^k k! (2k+3)!!)
        let x2 = x * x;
        let mut term: f64 = 1.0;
        let mut sum = 1.0;
        let mut k = 0.0;
        while term.abs() > 1e-18 {
            term *= -x2 / (2.0 * (k + 1.0) * (2.0 * k + 5.0));
            sum += term;
            k += 1.0;
        }
        sum
    } else {
        let (s, c) = (libm::sin(x), libm::cos(x));
        3.0 * (s - x * c) / (x * x * x)
    }
}

/// f(x, 0) = 3(sin x − x cos x)/x³, equal to 1 at x = 0.
pub fn f_zero_temperature(x: f64) -> Result<f64> {
    let x = non_negative("x = k_F r", x)?;
    Ok(f0(x))
}

/// Base breakpoints for the oscillatory integral over [0, u_max].
fn oscillation_breakpoints(x: f64, u_max: f64, out: &mut Vec<f64>) {
    let width = (PI / x).max(1.0 / PANELS_PER_UNIT);
    let mut u = width;
    while u < u_max {
        out.push(u);
        u += width;
    }
}

fn merge_breakpoints(mut points: Vec<f64>) -> Vec<f64> {
    points.sort_by(f64::total_cmp);
    points.dedup_by(|a, b| (*a - *b).abs() <= 1e-14 * b.abs().max(1e-300));
    points
}

/// f at t > 0 by panel quadrature of the Fermi-Dirac integral.
pub fn f_finite_temperature(coords: ReducedCoordinates, tol: f64) -> Result<ExchangeAmplitude> {
    let tol = check_tol(tol)?;
    let ReducedCoordinates {
        x,
        t,
        mu_tilde,
        regime,
    } = coords;
    let t = positive("t = T/T_F", t)?;

    if x < SMALL_X {
        // r → 0: (3/x) sin(ux) → 3u
        let value = 3.0 * normalization_integral(mu_tilde, t, regime)?;
        return Ok(ExchangeAmplitude {
            value,
            coords,
            quadrature_error_estimate: 0.0,
        });
    }

    let u_max = reduced_cutoff(mu_tilde, t, regime);
    let mut points = fermi_breakpoints(mu_tilde, t, regime, u_max);
    oscillation_breakpoints(x, u_max, &mut points);
    let points = merge_breakpoints(points);

    let integrand =
        |u: f64| u * fermi_dirac((regime.reduced_dispersion(u) - mu_tilde) / t) * libm::sin(u * x);
    let r = AdaptiveQuadrature::<16, 8>::new(PANEL_BUDGET).integrate(&integrand, &points, tol)?;
    Ok(ExchangeAmplitude {
        value: 3.0 * r.value / x,
        coords,
        quadrature_error_estimate: r.relative_error(),
    })
}

/// f at any reduced coordinates: closed form at t = 0, quadrature otherwise.
pub fn exchange_amplitude(coords: ReducedCoordinates, tol: f64) -> Result<ExchangeAmplitude> {
    if coords.t == 0.0 {
        Ok(ExchangeAmplitude {
            value: f0(coords.x),
            coords,
            quadrature_error_estimate: 0.0,
        })
    } else {
        f_finite_temperature(coords, tol)
    }
}

/// Prefactor γ (non-relativistic) or γ′ (extreme relativistic) with
/// 3/(r k_F³) = γ/(r P^{3/5}) resp. γ′/(r P^{3/4}).
pub fn gamma_prefactor(regime: GasRegime) -> f64 {
    match regime {
        GasRegime::NonRelativistic => libm::pow(
            HBAR * HBAR * libm::pow(3.0, 5.0 / 3.0) / (15.0 * PI * PI * ELECTRON_MASS),
            0.6,
        ),
        GasRegime::ExtremeRelativistic => libm::pow(
            HBAR * LIGHT_SPEED * libm::pow(3.0, 4.0 / 3.0) / (12.0 * PI * PI),
            0.75,
        ),
    }
}

/// Exponent of P in the pressure form of f: 3/5 or 3/4.
pub fn pressure_exponent(regime: GasRegime) -> f64 {
    match regime {
        GasRegime::NonRelativistic => 0.6,
        GasRegime::ExtremeRelativistic => 0.75,
    }
}

/// f for electrons at separation `r` in a gas of degeneracy pressure `p` and temperature `T`.
pub fn f_from_pressure(
    r: f64,
    p: f64,
    temperature: f64,
    regime: GasRegime,
    mu_mode: MuMode,
    tol: f64,
) -> Result<ExchangeAmplitude> {
    let r = positive("distance", r)?;
    let state = FermiGasState::from_pressure(p, temperature, regime, mu_mode)?;
    let coords = ReducedCoordinates::new(
        state.fermi_momentum * r,
        state.t_over_tf(),
        if state.temperature == 0.0 {
            1.0
        } else {
            state.reduced_chemical_potential()
        },
        regime,
    )?;
    exchange_amplitude(coords, tol)
}

/// ∫₀^∞ k n_k sin(kr) dk evaluated in SI wavenumbers, m⁻².
///
/// `mu` is the chemical potential in joules; at `T = 0` the occupation is the
/// step at `k_f` and `mu` is ignored.
pub fn dimensional_integral(
    r: f64,
    k_f: f64,
    temperature: f64,
    mu: f64,
    regime: GasRegime,
    tol: f64,
) -> Result<f64> {
    let tol = check_tol(tol)?;
    let r = positive("distance", r)?;
    let k_f = positive("Fermi momentum", k_f)?;
    let temperature = non_negative("temperature", temperature)?;
    let half_period = PI / r;
    let quad = AdaptiveQuadrature::<16, 8>::new(PANEL_BUDGET);

    if temperature == 0.0 {
        let mut points = alloc::vec![0.0, k_f];
        let mut k = half_period;
        while k < k_f {
            points.push(k);
            k += half_period;
        }
        let points = merge_breakpoints(points);
        let integrand = |k: f64| k * libm::sin(k * r);
        return Ok(quad.integrate(&integrand, &points, tol)?.value);
    }

    let kt = BOLTZMANN * temperature;
    let (k_mu, k_max, step) = match regime {
        GasRegime::NonRelativistic => {
            let k_of = |e: f64| libm::sqrt(2.0 * ELECTRON_MASS * e.max(0.0)) / HBAR;
            let k_mu = k_of(mu);
            // Δk = k_B T/(dε/dk), capped at the width of a step centred on k = 0
            let step = (kt * ELECTRON_MASS / (HBAR * HBAR * k_mu)).min(k_of(kt));
            (k_mu, k_of(mu.max(0.0) + OCCUPATION_CUTOFF * kt), step)
        }
        GasRegime::ExtremeRelativistic => {
            let hc = HBAR * LIGHT_SPEED;
            (
                mu.max(0.0) / hc,
                (mu.max(0.0) + OCCUPATION_CUTOFF * kt) / hc,
                kt / hc,
            )
        }
    };

    let mut points = alloc::vec![0.0, k_max];
    if k_mu > 0.0 && k_mu < k_max {
        points.push(k_mu);
        let mut d = step;
        while d < k_max {
            if k_mu - d > 0.0 {
                points.push(k_mu - d);
            }
            if k_mu + d < k_max {
                points.push(k_mu + d);
            }
            d *= 4.0;
        }
    }
    let width = half_period.max(k_f / PANELS_PER_UNIT);
    let mut k = width;
    while k < k_max {
        points.push(k);
        k += width;
    }
    let points = merge_breakpoints(points);

    let integrand = |k: f64| {
        // dispersion cannot fail for k ≥ 0
        let e = dispersion(k, regime).unwrap_or(f64::NAN);
        k * fermi_dirac((e - mu) / kt) * libm::sin(k * r)
    };
    Ok(quad.integrate(&integrand, &points, tol)?.value)
}

/// f = 3/(r k_F³) ∫ k n_k sin(kr) dk evaluated entirely in SI units.
pub fn f_dimensional(
    r: f64,
    k_f: f64,
    temperature: f64,
    mu: f64,
    regime: GasRegime,
    tol: f64,
) -> Result<f64> {
    let integral = dimensional_integral(r, k_f, temperature, mu, regime, tol)?;
    Ok(3.0 / (r * k_f * k_f * k_f) * integral)
}

/// f = γ/(r P^{3/5}) ∫ k n_k sin(kr) dk (or the γ′, P^{3/4} form), in SI units.
pub fn f_from_pressure_dimensional(
    r: f64,
    p: f64,
    temperature: f64,
    regime: GasRegime,
    mu_mode: MuMode,
    tol: f64,
) -> Result<f64> {
    let state = FermiGasState::from_pressure(p, temperature, regime, mu_mode)?;
    let integral = dimensional_integral(
        r,
        state.fermi_momentum,
        temperature,
        state.chemical_potential,
        regime,
        tol,
    )?;
    Ok(gamma_prefactor(regime) / (r * libm::pow(p, pressure_exponent(regime))) * integral)
}

/// Smallest x > 0 with f(x, t)² = 1/2.
///
/// Scans [1e-3, 3] in steps of 0.1 for the first sign change of f² − 1/2 and
/// bisects inside it.
pub fn solve_zeta(t: f64, regime: GasRegime, mu_mode: MuMode, tol: f64) -> Result<ZetaResult> {
    let t = non_negative("t = T/T_F", t)?;
    let tol = check_tol(tol)?;
    let base = ReducedCoordinates::with_mu_mode(0.0, t, regime, mu_mode)?;
    solve_zeta_at(base, tol)
}

/// ζ for the temperature and chemical potential carried by `base` (its x is ignored).
pub(crate) fn solve_zeta_at(base: ReducedCoordinates, tol: f64) -> Result<ZetaResult> {
    let (t, regime) = (base.t, base.regime);
    let excess = |x: f64| -> Result<f64> {
        let f = exchange_amplitude(base.with_x(x)?, tol)?.value;
        Ok(f * f - 0.5)
    };

    let base = base.with_x(0.0)?;
    let at_origin = exchange_amplitude(base, tol)?.value;
    if at_origin * at_origin <= 0.5 {
        return Err(Error::NoEntanglement {
            t,
            x: 0.0,
            f_squared: at_origin * at_origin,
        });
    }

    let mut lo = ZETA_SCAN_START;
    let mut g_lo = excess(lo)?;
    if g_lo <= 0.0 {
        return Err(Error::NoEntanglement {
            t,
            x: lo,
            f_squared: g_lo + 0.5,
        });
    }
    let mut i = 1;
    let (hi, g_hi) = loop {
        let x = (ZETA_SCAN_START + ZETA_SCAN_STEP * i as f64).min(ZETA_SCAN_END);
        let g = excess(x)?;
        if g <= 0.0 {
            break (x, g);
        }
        if x >= ZETA_SCAN_END {
            return Err(Error::BracketTooSmall {
                t,
                lo: ZETA_SCAN_START,
                hi: ZETA_SCAN_END,
            });
        }
        lo = x;
        g_lo = g;
        i += 1;
    };

    let (zeta, g) = bisect(lo, hi, g_lo, g_hi, excess, 1e-15, 1e-15)?;
    let residual = g.abs();
    if residual >= ZETA_RESIDUAL {
        return Err(Error::Residual { x: zeta, residual });
    }
    Ok(ZetaResult {
        zeta,
        t,
        regime,
        mu_tilde: base.mu_tilde,
        residual,
    })
}

/// ζ₀, the zero-temperature root of f² = 1/2.
pub fn zeta_zero_temperature() -> f64 {
    solve_zeta(
        0.0,
        GasRegime::NonRelativistic,
        MuMode::ExactNormalization,
        DEFAULT_TOL,
    )
    .map(|z| z.zeta)
    .unwrap_or(f64::NAN)
}
