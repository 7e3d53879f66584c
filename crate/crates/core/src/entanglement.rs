//! Spin entanglement of an electron pair from the exchange amplitude f.
//!
//! The normalized two-spin state is the Werner state
//! ρ = (I − f² SWAP)/(4 − 2f²) in the basis (↑↑, ↑↓, ↓↑, ↓↓). It is entangled
//! iff f² > 1/2, with concurrence max{(2f² − 1)/(2 − f²), 0}. The matrix
//! routines ([`wootters_concurrence`], [`ppt_min_eigenvalue`]) work on the
//! explicit 4×4 state and serve as independent checks of the closed forms.

use core::cell::Cell;

use nalgebra::{Complex, Matrix4};

use crate::error::{non_negative, positive, Error, Result};
use crate::exchange::{check_tol, exchange_amplitude, solve_zeta_at, ReducedCoordinates};
use crate::fermi::{FermiGasState, GasRegime, MuMode};
use crate::quadrature::AdaptiveQuadrature;

pub type C64 = Complex<f64>;

/// 2f² − 1 at or below this counts as the separable boundary.
///
/// The double nearest 1/√2 squares to 0.5000000000000001; without slack it
/// would read as entangled.
pub const BOUNDARY_SLACK: f64 = 8.0 * f64::EPSILON;

/// Entrywise tolerance for Hermiticity, trace and positivity checks.
pub const STATE_TOL: f64 = 1e-12;

/// |f| may exceed 1 by this much from quadrature error before it is rejected.
pub const AMPLITUDE_SLACK: f64 = 1e-9;

/// Relative tolerance of the averaged measure.
pub const AVERAGE_TOL: f64 = 1e-8;

/// A normalized density matrix of two spin-1/2 particles.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoSpinState {
    matrix: Matrix4<C64>,
    f_source: Option<f64>,
}

fn c(re: f64) -> C64 {
    Complex::new(re, 0.0)
}

fn sorted<const N: usize>(mut v: [f64; N]) -> [f64; N] {
    v.sort_by(f64::total_cmp);
    v
}

fn hermitian_eigenvalues(m: &Matrix4<C64>) -> [f64; 4] {
    let e = m.symmetric_eigen().eigenvalues;
    sorted([e[0], e[1], e[2], e[3]])
}

impl TwoSpinState {
    /// Validates Hermiticity, unit trace and positivity to [`STATE_TOL`].
    pub fn from_matrix(matrix: Matrix4<C64>) -> Result<Self> {
        let mut asym: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                let d = matrix[(i, j)] - matrix[(j, i)].conj();
                asym = asym.max(libm::hypot(d.re, d.im));
            }
        }
        if asym > STATE_TOL {
            return Err(Error::Domain {
                quantity: "density matrix anti-Hermitian part",
                requirement: "at most 1e-12",
                value: asym,
            });
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > STATE_TOL || trace.im.abs() > STATE_TOL {
            return Err(Error::Domain {
                quantity: "density matrix trace",
                requirement: "1 within 1e-12",
                value: trace.re,
            });
        }
        let min = hermitian_eigenvalues(&matrix)[0];
        if min < -STATE_TOL {
            return Err(Error::Domain {
                quantity: "density matrix minimum eigenvalue",
                requirement: "non-negative within 1e-12",
                value: min,
            });
        }
        Ok(Self {
            matrix,
            f_source: None,
        })
    }

    pub fn matrix(&self) -> &Matrix4<C64> {
        &self.matrix
    }

    /// The amplitude this state was built from, if any.
    pub fn f_source(&self) -> Option<f64> {
        self.f_source
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> [f64; 4] {
        hermitian_eigenvalues(&self.matrix)
    }

    /// Partial transpose over the second spin: ρ^{T_B}_{(ij),(kl)} = ρ_{(il),(kj)}.
    pub fn partial_transpose(&self) -> Matrix4<C64> {
        Matrix4::from_fn(|row, col| {
            let (i, j) = (row / 2, row % 2);
            let (k, l) = (col / 2, col % 2);
            self.matrix[(2 * i + l, 2 * k + j)]
        })
    }
}

fn check_amplitude(f: f64) -> Result<f64> {
    if f.is_finite() && f.abs() <= 1.0 {
        Ok(f)
    } else {
        Err(Error::Domain {
            quantity: "exchange amplitude |f|",
            requirement: "at most 1",
            value: f,
        })
    }
}

/// (I − f² SWAP)/(4 − 2f²).
pub fn werner_state_from_f(f: f64) -> Result<TwoSpinState> {
    let f = check_amplitude(f)?;
    let f2 = f * f;
    let norm = 4.0 - 2.0 * f2;
    let mut m = Matrix4::<C64>::identity();
    m[(0, 0)] = c(1.0 - f2);
    m[(3, 3)] = c(1.0 - f2);
    // SWAP exchanges ↑↓ and ↓↑
    m[(1, 2)] = c(-f2);
    m[(2, 1)] = c(-f2);
    m /= c(norm);
    Ok(TwoSpinState {
        matrix: m,
        f_source: Some(f),
    })
}

/// Peres-Horodecki: f² > 1/2, with the boundary itself separable.
pub fn is_entangled(f: f64) -> Result<bool> {
    let f = check_amplitude(f)?;
    Ok(2.0 * f * f - 1.0 > BOUNDARY_SLACK)
}

/// max{(2f² − 1)/(2 − f²), 0}
pub fn concurrence_closed_form(f: f64) -> Result<f64> {
    let f = check_amplitude(f)?;
    let excess = 2.0 * f * f - 1.0;
    Ok(if excess > BOUNDARY_SLACK {
        excess / (2.0 - f * f)
    } else {
        0.0
    })
}

/// h(y) = −y log₂ y − (1−y) log₂(1−y), with h(0) = h(1) = 0.
pub fn binary_entropy(y: f64) -> f64 {
    let term = |p: f64| if p <= 0.0 { 0.0 } else { -p * libm::log2(p) };
    term(y) + term(1.0 - y)
}

/// Entropy of formation in bits for concurrence `c`.
pub fn entropy_of_formation_from_concurrence(c: f64) -> f64 {
    if c <= 0.0 {
        return 0.0;
    }
    binary_entropy(0.5 + 0.5 * libm::sqrt((1.0 - c * c).max(0.0)))
}

pub fn entropy_of_formation(f: f64) -> Result<f64> {
    Ok(entropy_of_formation_from_concurrence(
        concurrence_closed_form(f)?,
    ))
}

/// σ_y ⊗ σ_y, which is real in the computational basis.
fn spin_flip() -> Matrix4<C64> {
    let mut y = Matrix4::<C64>::zeros();
    y[(0, 3)] = c(-1.0);
    y[(1, 2)] = c(1.0);
    y[(2, 1)] = c(1.0);
    y[(3, 0)] = c(-1.0);
    y
}

fn hermitian_sqrt(m: &Matrix4<C64>) -> Matrix4<C64> {
    let eig = m.symmetric_eigen();
    let v = eig.eigenvectors;
    let d = Matrix4::from_diagonal(&eig.eigenvalues.map(|e| c(libm::sqrt(e.max(0.0)))));
    v * d * v.adjoint()
}

/// Wootters concurrence max{0, λ₁ − λ₂ − λ₃ − λ₄}.
///
/// The λᵢ are the square roots of the eigenvalues of ρρ̃ with
/// ρ̃ = (σy⊗σy)ρ*(σy⊗σy). They are computed as the singular values of
/// √ρ √ρ̃, which avoids taking square roots of near-zero eigenvalues.
pub fn wootters_concurrence(state: &TwoSpinState) -> f64 {
    let y = spin_flip();
    let root = hermitian_sqrt(&state.matrix);
    let root_tilde = y * root.map(|z| z.conj()) * y;
    let s = (root * root_tilde).singular_values();
    let [l4, l3, l2, l1] = sorted([s[0], s[1], s[2], s[3]]);
    (l1 - l2 - l3 - l4).max(0.0)
}

/// Smallest eigenvalue of the partial transpose over the second spin.
pub fn ppt_min_eigenvalue(state: &TwoSpinState) -> f64 {
    hermitian_eigenvalues(&state.partial_transpose())[0]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    Concurrence,
    EntropyOfFormation,
}

impl Measure {
    pub fn of_amplitude(self, f: f64) -> Result<f64> {
        match self {
            Measure::Concurrence => concurrence_closed_form(f),
            Measure::EntropyOfFormation => entropy_of_formation(f),
        }
    }
}

/// Entanglement of an electron pair at separation r in a gas at pressure P and temperature T.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglementReport {
    pub r: f64,
    pub pressure: f64,
    pub temperature: f64,
    pub regime: GasRegime,
    pub mu_mode: MuMode,
    pub fermi_momentum: f64,
    /// k_F r
    pub x: f64,
    pub t_over_tf: f64,
    pub mu_tilde: f64,
    pub f: f64,
    pub entangled: bool,
    pub concurrence: f64,
    pub entropy_of_formation: f64,
    pub zeta: f64,
    /// ζ(t)/k_F
    pub r_e: f64,
    pub quadrature_error_estimate: f64,
}

/// Pulls amplitudes within [`AMPLITUDE_SLACK`] of ±1 back onto the interval.
fn clamp_amplitude(f: f64) -> Result<f64> {
    if f.abs() <= 1.0 {
        Ok(f)
    } else if f.abs() <= 1.0 + AMPLITUDE_SLACK {
        Ok(f.signum())
    } else {
        Err(Error::Domain {
            quantity:
                "exchange amplitude |f| (mu = eps_F overfills the Fermi sea at this temperature)",
            requirement: "at most 1",
            value: f,
        })
    }
}

/// Concurrence and entropy of formation as functions of (r, P, T).
pub fn eos_evaluate(
    r: f64,
    pressure: f64,
    temperature: f64,
    regime: GasRegime,
    mu_mode: MuMode,
    tol: f64,
) -> Result<EntanglementReport> {
    let r = positive("distance", r)?;
    let tol = check_tol(tol)?;
    let state = FermiGasState::from_pressure(pressure, temperature, regime, mu_mode)?;
    let t = state.t_over_tf();
    let mu_tilde = if t == 0.0 {
        1.0
    } else {
        state.reduced_chemical_potential()
    };
    let coords = ReducedCoordinates::new(state.fermi_momentum * r, t, mu_tilde, regime)?;
    let amplitude = exchange_amplitude(coords, tol)?;
    let f = clamp_amplitude(amplitude.value)?;
    let concurrence = concurrence_closed_form(f)?;
    let zeta = solve_zeta_at(coords, tol)?.zeta;
    Ok(EntanglementReport {
        r,
        pressure,
        temperature,
        regime,
        mu_mode,
        fermi_momentum: state.fermi_momentum,
        x: coords.x(),
        t_over_tf: t,
        mu_tilde,
        f,
        entangled: is_entangled(f)?,
        concurrence,
        entropy_of_formation: entropy_of_formation_from_concurrence(concurrence),
        zeta,
        r_e: zeta / state.fermi_momentum,
        quadrature_error_estimate: amplitude.quadrature_error_estimate,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AverageEntanglement {
    pub value: f64,
    /// Upper end of the averaging window, ζ(t).
    pub zeta: f64,
    pub t: f64,
    pub measure: Measure,
}

/// (1/ζ) ∫₀^ζ E(x, t) dx over the region where pairs are certainly entangled.
pub fn average_entanglement(
    t: f64,
    regime: GasRegime,
    measure: Measure,
    mu_mode: MuMode,
    tol: f64,
) -> Result<AverageEntanglement> {
    let t = non_negative("t = T/T_F", t)?;
    let tol = check_tol(tol)?;
    let base = ReducedCoordinates::with_mu_mode(0.0, t, regime, mu_mode)?;
    let zeta = solve_zeta_at(base, tol)?.zeta;

    let failure: Cell<Option<Error>> = Cell::new(None);
    let integrand = |x: f64| {
        let value = base
            .with_x(x)
            .and_then(|c| exchange_amplitude(c, tol))
            .and_then(|a| clamp_amplitude(a.value))
            .and_then(|f| measure.of_amplitude(f));
        match value {
            Ok(v) => v,
            Err(e) => {
                failure.set(Some(e));
                0.0
            }
        }
    };
    let integral =
        AdaptiveQuadrature::<64, 32>::new(2000).integrate(&integrand, &[0.0, zeta], AVERAGE_TOL)?;
    if let Some(e) = failure.take() {
        return Err(e);
    }
    Ok(AverageEntanglement {
        value: integral.value / zeta,
        zeta,
        t,
        measure,
    })
}
