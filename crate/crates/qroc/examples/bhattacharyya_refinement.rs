//! The quantum Bhattacharyya coefficient as a curve length.
//!
//! For density-operator hypotheses the Bhattacharyya coefficient generalizes
//! to the Minkowski length of the optimal ROC curve: inscribed polylines
//! through Helstrom-optimal points converge to it from above as the prior
//! grid refines (adding a vertex never lengthens a Minkowski polyline).
//! This example shows the refinement trace, the sqrt-fidelity upper bound,
//! and the commuting case where the bound is met with equality.
//!
//! Run with: cargo run --example bhattacharyya_refinement

use qroc::hermitian::{fidelity, random_density, CMatrix, c64};
use qroc::hermitian::DensityOperator;
use qroc::similarity::quantum_bhattacharyya_with;
use qroc::similarity::BhattOptions;

fn diagonal_state(probs: &[f64]) -> qroc::Result<DensityOperator> {
    let n = probs.len();
    let m = CMatrix::from_fn(n, n, |i, j| {
        if i == j {
            c64(probs[i], 0.0)
        } else {
            c64(0.0, 0.0)
        }
    });
    qroc::hermitian::validate_density(&m)
}

fn main() -> qroc::Result<()> {
    let opts = BhattOptions {
        tol: 1e-8,
        min_levels: 4,
        ..BhattOptions::default()
    };

    println!("-- random full-rank pair, dim 3 --");
    let rho_p = random_density(3, 3, 11)?;
    let rho_n = random_density(3, 3, 12)?;
    let report = quantum_bhattacharyya_with(&rho_p, &rho_n, &opts)?;
    for (level, len) in report.level_lengths.iter().enumerate() {
        println!("  level {level}: polyline length {len:.12}");
    }
    println!(
        "  B = {:.12} after {} levels (last delta {:.2e})",
        report.value, report.refinement_levels, report.last_delta
    );
    let f = fidelity(&rho_p, &rho_n)?;
    println!("  sqrt(F) = {:.12}  (upper bound)", f.sqrt());
    println!();

    println!("-- commuting pair: B equals sqrt(F) --");
    let dp = diagonal_state(&[0.7, 0.2, 0.1])?;
    let dn = diagonal_state(&[0.3, 0.3, 0.4])?;
    let report = quantum_bhattacharyya_with(&dp, &dn, &opts)?;
    let f = fidelity(&dp, &dn)?;
    let classical: f64 = [0.7_f64 * 0.3, 0.2 * 0.3, 0.1 * 0.4]
        .iter()
        .map(|t| t.sqrt())
        .sum();
    println!("  B          = {:.12}", report.value);
    println!("  sqrt(F)    = {:.12}", f.sqrt());
    println!("  sum sqrt(p_i q_i) = {classical:.12}");
    println!();

    println!("-- orthogonal pair: B = 0 --");
    let e1 = diagonal_state(&[1.0, 0.0])?;
    let e2 = diagonal_state(&[0.0, 1.0])?;
    let report = quantum_bhattacharyya_with(&e1, &e2, &opts)?;
    println!("  B = {:.2e}", report.value);
    Ok(())
}
