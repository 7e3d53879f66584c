use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input lies outside the domain of the operation.
    #[error("{quantity} must be {requirement}, got {value:e}")]
    Domain {
        quantity: &'static str,
        requirement: &'static str,
        value: f64,
    },

    /// f(x)² is already at or below 1/2 at the start of the scan window.
    #[error("no entanglement at any distance: f^2 = {f_squared} <= 1/2 already at x = {x:e} (t = {t:e})")]
    NoEntanglement { t: f64, x: f64, f_squared: f64 },

    /// f(x)² stays above 1/2 across the whole scan window.
    #[error("f^2 stays above 1/2 on the scan window [{lo}, {hi}] (t = {t:e}); bracket too small")]
    BracketTooSmall { t: f64, lo: f64, hi: f64 },

    /// The particle-number residual has no sign change on the μ/ε_F bracket.
    #[error(
        "chemical potential bracket [{lo:e}, {hi:e}] (in units of the Fermi energy) has no sign change: \
         residuals {residual_lo:e}, {residual_hi:e} at t = {t:e}"
    )]
    ChemicalPotentialBracket {
        t: f64,
        lo: f64,
        hi: f64,
        residual_lo: f64,
        residual_hi: f64,
    },

    /// Adaptive quadrature ran out of panels before meeting its tolerance.
    #[error("quadrature did not converge within {panels} panels (estimated relative error {estimate:e})")]
    Quadrature { panels: usize, estimate: f64 },

    /// Root refinement finished without meeting the residual target.
    #[error("root refinement stalled at x = {x} with residual {residual:e}")]
    Residual { x: f64, residual: f64 },
}

/// Rejects NaN, infinities and anything not strictly positive.
pub(crate) fn positive(quantity: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Domain {
            quantity,
            requirement: "positive and finite",
            value,
        })
    }
}

pub(crate) fn non_negative(quantity: &'static str, value: f64) -> Result<f64> {
    if value >= 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Domain {
            quantity,
            requirement: "non-negative and finite",
            value,
        })
    }
}
