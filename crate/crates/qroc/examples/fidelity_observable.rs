//! The measurement that attains sqrt-fidelity classically.
//!
//! Measuring in the eigenbasis of M = rho_n^{-1/2} sqrt(sqrt(rho_n) rho_p
//! sqrt(rho_n)) rho_n^{-1/2} turns the state pair into a classical
//! distribution pair whose Bhattacharyya coefficient equals sqrt(F) — the
//! largest value any measurement can produce. The polyline of its optimal
//! classical ROC curve therefore lies inside the quantum feasible region
//! and touches nothing beyond it.
//!
//! Run with: cargo run --example fidelity_observable

use qroc::classical::{bhattacharyya, minkowski_length, optimal_roc};
use qroc::hermitian::{fidelity, random_density};
use qroc::similarity::{
    eigenbasis_distributions, fidelity_observable, fidelity_observable_with, fidelity_polyline,
    SingularPolicy,
};

fn main() -> qroc::Result<()> {
    let rho_p = random_density(3, 3, 301)?;
    let rho_n = random_density(3, 3, 302)?;

    let m = fidelity_observable(&rho_p, &rho_n)?;
    println!("observable M (3x3, Hermitian):");
    for i in 0..3 {
        let row: Vec<String> = (0..3)
            .map(|j| format!("{:+.4}{:+.4}i", m[(i, j)].re, m[(i, j)].im))
            .collect();
        println!("  [{}]", row.join(", "));
    }

    let (p_dist, q_dist) = eigenbasis_distributions(&m, &rho_p, &rho_n)?;
    println!();
    println!("induced outcome distributions in M's eigenbasis:");
    println!("  under rho_p: {:?}", p_dist.probs());
    println!("  under rho_n: {:?}", q_dist.probs());

    let b_classical = bhattacharyya(&p_dist, &q_dist)?;
    let f = fidelity(&rho_p, &rho_n)?;
    println!();
    println!("classical B of the induced pair: {b_classical:.12}");
    println!("sqrt(Uhlmann fidelity):          {:.12}", f.sqrt());

    let polyline = fidelity_polyline(&rho_p, &rho_n)?;
    println!();
    println!(
        "optimal classical curve on the induced pair: {} vertices, Minkowski length {:.12}",
        polyline.points().len(),
        minkowski_length(&polyline)
    );
    let direct = optimal_roc(&p_dist, &q_dist)?;
    assert_eq!(polyline.points().len(), direct.points().len());

    // A singular rho_n needs a pseudo-inverse on its support (the default);
    // the strict policy refuses instead of silently projecting.
    let pure_n = random_density(3, 1, 9)?;
    match fidelity_observable_with(&rho_p, &pure_n, SingularPolicy::Strict) {
        Err(e) => println!("\nstrict policy on a rank-1 rho_n: {e}"),
        Ok(_) => unreachable!("rank-1 state must be rejected under Strict"),
    }
    let m = fidelity_observable_with(&rho_p, &pure_n, SingularPolicy::PseudoInverse)?;
    println!("pseudo-inverse policy returns a {}x{} observable", m.nrows(), m.ncols());
    Ok(())
}
