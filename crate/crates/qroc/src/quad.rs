//! Adaptive Simpson quadrature with Richardson extrapolation. Handles the
//! square-root endpoint behavior of ROC arc-length integrands by bisecting
//! until the local Richardson error estimate meets the budget.

use crate::error::{Error, Result};

/// Integrate `f` over [a, b] to absolute tolerance `tol`. Each subinterval
/// is accepted when the two-panel Simpson estimate agrees with the one-panel
/// estimate within 15x its share of the budget; `max_depth` bounds the
/// bisection depth (40 is ample for bounded integrands with square-root
/// endpoint derivatives).
pub fn adaptive_simpson<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    tol: f64,
    max_depth: u32,
) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::OutOfRange {
            name: "tol",
            value: tol,
        });
    }
    if a == b {
        return Ok(0.0);
    }
    let m = 0.5 * (a + b);
    let fa = f(a);
    let fm = f(m);
    let fb = f(b);
    let whole = simpson(fa, fm, fb, b - a);
    recurse(&mut f, a, b, fa, fm, fb, whole, tol, max_depth)
}

fn simpson(fa: f64, fm: f64, fb: f64, width: f64) -> f64 {
    width / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse<F: FnMut(f64) -> f64>(
    f: &mut F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(fa, flm, fm, m - a);
    let right = simpson(fm, frm, fb, b - m);
    let delta = left + right - whole;
    // machine-scale intervals can no longer be usefully bisected; whatever
    // discrepancy remains there is far below any meaningful budget
    let width_floor = 64.0 * f64::EPSILON * a.abs().max(b.abs()).max(1.0);
    if delta.abs() <= 15.0 * tol || (b - a).abs() <= width_floor {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(Error::NoConvergence {
            context: format!("adaptive Simpson stalled on [{a}, {b}] with error {delta:e}"),
        });
    }
    let half_tol = 0.5 * tol;
    Ok(recurse(f, a, m, fa, flm, fm, left, half_tol, depth - 1)?
        + recurse(f, m, b, fm, frm, fb, right, half_tol, depth - 1)?)
}
