//! Unambiguous discrimination: never wrong, sometimes silent.
//!
//! When each state has weight in the other's kernel, a three-outcome POVM
//! can conclusively identify either state with zero false conclusives, at
//! the price of an inconclusive outcome. The conclusive effects are scaled
//! kernel projectors m_p = lambda1 * K_n and m_n = lambda2 * K_p; the
//! weights trade detection rates against each other through the constraint
//! that the inconclusive effect stays positive.
//!
//! Run with: cargo run --example unambiguous_discrimination

use qroc::hermitian::{c64, fidelity, random_density, validate_density, CMatrix};
use qroc::unambiguous::{build_povm, feasibility, max_lambda1, success_rates};

fn main() -> qroc::Result<()> {
    // |psi> = (|e1> + |e3>)/sqrt(2) against a mixed state on span{e1, e2}.
    let psi = [0.5_f64.sqrt(), 0.0, 0.5_f64.sqrt()];
    let mut m = CMatrix::zeros(3, 3);
    for i in 0..3 {
        for j in 0..3 {
            m[(i, j)] = c64(psi[i] * psi[j], 0.0);
        }
    }
    let rho_p = validate_density(&m)?;
    let mut d = CMatrix::zeros(3, 3);
    d[(0, 0)] = c64(0.6, 0.0);
    d[(1, 1)] = c64(0.4, 0.0);
    let rho_n = validate_density(&d)?;

    let report = feasibility(&rho_p, &rho_n, 1e-9)?;
    println!("feasibility:");
    println!("  can detect P conclusively: {}", report.can_detect_p);
    println!("  can detect N conclusively: {}", report.can_detect_n);
    println!("  kernel ranks: P {}, N {}", report.kernel_rank_p, report.kernel_rank_n);

    let povm = build_povm(&rho_p, &rho_n, 0.5, 0.5)?;
    let (succ_p, succ_n, inc_p, inc_n) = success_rates(&povm, &rho_p, &rho_n)?;
    println!();
    println!("POVM at lambda1 = lambda2 = 1/2:");
    println!("  P: conclusive {succ_p:.6}, inconclusive {inc_p:.6}");
    println!("  N: conclusive {succ_n:.6}, inconclusive {inc_n:.6}");

    // Pushing lambda1 as high as positivity allows. With overlapping
    // kernels the ceiling sits strictly below 1.
    let best = max_lambda1(&rho_p, &rho_n, 0.5)?;
    println!();
    println!("largest admissible lambda1 at lambda2 = 1/2: {best:.9}");
    let povm = build_povm(&rho_p, &rho_n, best, 0.5)?;
    let (succ_p, _, _, _) = success_rates(&povm, &rho_p, &rho_n)?;
    println!("  conclusive-P rate there: {succ_p:.6}");

    // Pure-vs-pure: at equal weights the conclusive rate is (1 - F)/2.
    println!();
    let qp = qroc::quantum::pure_state(0.0);
    let qn = qroc::quantum::pure_state(1.2);
    let f = fidelity(&qp, &qn)?;
    let povm = build_povm(&qp, &qn, 0.5, 0.5)?;
    let (succ_p, succ_n, _, _) = success_rates(&povm, &qp, &qn)?;
    println!("pure qubit pair, overlap F = {f:.6}:");
    println!("  conclusive rates at 1/2, 1/2: {succ_p:.6}, {succ_n:.6}");
    println!("  (1 - F)/2 = {:.6}", 0.5 * (1.0 - f));

    // Full-rank states leave no kernel to project on.
    let fp = random_density(3, 3, 41)?;
    let fn_ = random_density(3, 3, 43)?;
    let report = feasibility(&fp, &fn_, 1e-9)?;
    println!();
    println!(
        "full-rank pair: can_detect_p = {}, can_detect_n = {}",
        report.can_detect_p, report.can_detect_n
    );
    match build_povm(&fp, &fn_, 0.5, 0.5) {
        Err(e) => println!("  build_povm: {e}"),
        Ok(_) => unreachable!("full-rank pair must be infeasible"),
    }
    Ok(())
}
