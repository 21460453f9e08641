//! The ROC curve of two pure qubit states is an ellipse arc.
//!
//! Parametrize pure states by the angle theta with acceptance probability
//! cos^2(theta/2). Projective measurements onto |alpha> trace the ellipse
//! TP = (1 + cos(alpha - theta_p))/2, FP = (1 + cos(alpha - theta_q))/2 as
//! alpha runs over a full turn. The upper arc between the tangency points
//! with the square's edges is exactly what the minimum-error (Helstrom)
//! measurement family reaches; the rest of the ellipse needs measurements
//! that are deliberately suboptimal.
//!
//! Run with: cargo run --example pure_pair_ellipse

use qroc::hermitian::fidelity;
use qroc::quantum::{
    helstrom, helstrom_sweep, pure_ellipse_point, pure_state, roc_point, sweep_curve,
};

fn main() -> qroc::Result<()> {
    // Angles chosen so the ellipse passes through the binary-feature points
    // (0.4, 0.7) and (0.6, 0.3): theta = 2 arccos(sqrt(p)).
    let theta_p = 2.0 * 0.7_f64.sqrt().acos();
    let theta_q = 2.0 * 0.4_f64.sqrt().acos();
    let rho_p = pure_state(theta_p);
    let rho_n = pure_state(theta_q);

    let f = fidelity(&rho_p, &rho_n)?;
    println!("theta_p = {theta_p:.6}, theta_q = {theta_q:.6}");
    println!("fidelity F = {f:.12}");
    println!();

    println!("ellipse touches the square at:");
    for (label, alpha) in [
        ("TP = 1 edge (fp = F)    ", theta_p),
        ("FP = 1 edge (tp = F)    ", theta_q),
        ("TP = 0 edge (fp = 1 - F)", theta_p + std::f64::consts::PI),
        ("FP = 0 edge (tp = 1 - F)", theta_q + std::f64::consts::PI),
    ] {
        let pt = pure_ellipse_point(theta_p, theta_q, alpha);
        println!("  {label} -> ({:.6}, {:.6})", pt.fp, pt.tp);
    }
    println!("and passes through (0.4, 0.7) at alpha = 0:");
    let at_zero = pure_ellipse_point(theta_p, theta_q, 0.0);
    println!("  ({:.6}, {:.6})", at_zero.fp, at_zero.tp);

    // Minimum-error measurements sweep only the upper-left arc. The swept
    // polyline plus the two corners is the optimal ROC curve.
    let grid: Vec<f64> = (0..=100).map(|i| i as f64 / 100.0).collect();
    let entries = helstrom_sweep(&rho_p, &rho_n, &grid)?;
    let curve = sweep_curve(&entries)?;
    println!();
    println!(
        "Helstrom sweep: {} samples -> optimal curve with {} vertices",
        entries.len(),
        curve.points().len()
    );

    let h = helstrom(&rho_p, &rho_n, 0.5)?;
    let pt = roc_point(&rho_p, &rho_n, &h.measurement)?;
    println!();
    println!("equal priors: p_err = {:.12}", h.p_err_min);
    println!("  operating point ({:.6}, {:.6})", pt.fp, pt.tp);
    println!(
        "  expected p_err = (1 - sqrt(1 - F))/2 = {:.12}",
        0.5 * (1.0 - (1.0 - f).sqrt())
    );
    Ok(())
}
