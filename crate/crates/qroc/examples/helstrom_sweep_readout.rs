//! Sweeping the minimum-error measurement over all priors.
//!
//! The Helstrom measurement for prior weight lambda accepts on the positive
//! eigenspace of lambda*rho_p - (1-lambda)*rho_n. Sweeping lambda from 0
//! to 1 traces the optimal ROC curve; the rank of the accepting effect
//! jumps at eigenvalue crossings, and each jump marks a straight stretch of
//! the curve. The maximum of tp - fp over the swept curve reads out the
//! trace distance without computing it directly.
//!
//! Run with: cargo run --example helstrom_sweep_readout

use qroc::hermitian::{random_density, trace_distance};
use qroc::quantum::{feasible_region, helstrom_sweep, sweep_curve, trace_distance_readout};

fn main() -> qroc::Result<()> {
    let rho_p = random_density(4, 4, 2024)?;
    let rho_n = random_density(4, 4, 2025)?;

    let grid: Vec<f64> = (0..=200).map(|i| i as f64 / 200.0).collect();
    let entries = helstrom_sweep(&rho_p, &rho_n, &grid)?;
    println!(
        "adaptive sweep produced {} samples from a 201-point prior grid",
        entries.len()
    );

    // Where the accepting rank jumps, report the prior and the gap.
    println!();
    println!("rank transitions along the sweep:");
    for pair in entries.windows(2) {
        if pair[0].rank_pos != pair[1].rank_pos {
            println!(
                "  lambda ~ {:.6}: rank {} -> {}   point ({:.4}, {:.4}) -> ({:.4}, {:.4})",
                pair[1].lambda,
                pair[0].rank_pos,
                pair[1].rank_pos,
                pair[0].point.fp,
                pair[0].point.tp,
                pair[1].point.fp,
                pair[1].point.tp,
            );
        }
    }

    let curve = sweep_curve(&entries)?;
    let direct = trace_distance(&rho_p, &rho_n)?;
    let readout = trace_distance_readout(&curve);
    println!();
    println!("trace distance, direct:        {direct:.12}");
    println!("trace distance, curve readout: {readout:.12}");

    // The full measurement-accessible region: Haar-random projectors of
    // every rank, their complements, and the swept boundary.
    let region = feasible_region(&rho_p, &rho_n, 60, 7)?;
    println!();
    println!("feasible-region sampling (60 per rank):");
    for (rank, cloud) in &region.rank_clouds {
        println!("  rank {rank}: {} points", cloud.len());
    }
    println!("  hull: {} vertices", region.hull.len());
    println!(
        "  upper boundary: {} vertices from (0,0) to (1,1)",
        region.upper_curve.points().len()
    );
    Ok(())
}
