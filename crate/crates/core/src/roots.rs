use crate::error::Result;

/// Bisection on a bracket where `g(lo)` and `g(hi)` have opposite signs.
///
/// Stops when the bracket is narrower than `x_tol` or `|g| <= g_tol`.
/// Returns the point with the smaller |g| among the final candidates and its value.
pub(crate) fn bisect<G>(
    mut lo: f64,
    mut hi: f64,
    mut g_lo: f64,
    g_hi: f64,
    mut g: G,
    x_tol: f64,
    g_tol: f64,
) -> Result<(f64, f64)>
where
    G: FnMut(f64) -> Result<f64>,
{
    debug_assert!(g_lo.signum() != g_hi.signum() || g_lo == 0.0 || g_hi == 0.0);
    let mut best = if g_lo.abs() <= g_hi.abs() {
        (lo, g_lo)
    } else {
        (hi, g_hi)
    };
    for _ in 0..200 {
        if best.1.abs() <= g_tol || (hi - lo).abs() <= x_tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo.min(hi) || mid >= lo.max(hi) {
            break;
        }
        let g_mid = g(mid)?;
        if g_mid.abs() < best.1.abs() {
            best = (mid, g_mid);
        }
        if g_mid == 0.0 {
            break;
        }
        if g_mid.signum() == g_lo.signum() {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    Ok(best)
}
