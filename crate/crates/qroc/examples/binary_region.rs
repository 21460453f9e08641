//! ROC geometry of a single binary feature.
//!
//! Two hypotheses assign probabilities p and q to the same yes/no outcome.
//! Every classifier built on that outcome (including randomized ones) lands
//! inside a parallelogram spanned by (0,0), (q,p), (1,1), (1-q,1-p); the
//! optimal ROC curve is the upper edge pair. The Bhattacharyya coefficient
//! equals the Minkowski length of that optimal curve.
//!
//! Run with: cargo run --example binary_region

use qroc::classical::{
    bhattacharyya, failure_probability, iso_failure_line, minkowski_length, optimal_roc,
    Distribution, RocPoint,
};

fn main() -> qroc::Result<()> {
    let p = Distribution::binary(0.7)?;
    let q = Distribution::binary(0.4)?;

    println!("P(yes) = 0.7, Q(yes) = 0.4");
    println!();

    let curve = optimal_roc(&p, &q)?;
    println!("optimal ROC curve (fp, tp):");
    for pt in curve.points() {
        println!("  ({:.4}, {:.4})", pt.fp, pt.tp);
    }

    // The reachable region is the curve plus its point reflection through
    // (1/2, 1/2) — swapping the meaning of "accept" turns (fp, tp) into
    // (1-fp, 1-tp).
    println!();
    println!("region vertices:");
    let mut vertices: Vec<RocPoint> = curve.points().to_vec();
    for pt in curve.points().iter().rev() {
        let c = pt.complement();
        if vertices.iter().all(|v| (v.fp - c.fp).abs() > 1e-12 || (v.tp - c.tp).abs() > 1e-12) {
            vertices.push(c);
        }
    }
    for v in &vertices {
        println!("  ({:.4}, {:.4})", v.fp, v.tp);
    }

    let b = bhattacharyya(&p, &q)?;
    let len = minkowski_length(&curve);
    println!();
    println!("Bhattacharyya coefficient  B = {b:.12}");
    println!("Minkowski curve length       = {len:.12}");
    println!("(equal by construction: each segment contributes sqrt(dTP * dFP))");

    // Lines of constant failure probability have slope (1-lambda)/lambda:
    // sliding one until it touches the curve reads off the minimum failure
    // probability for prior lambda.
    println!();
    println!("minimum failure probability by prior:");
    for lambda in [0.25, 0.5, 0.75] {
        let best = curve
            .points()
            .iter()
            .map(|pt| failure_probability(pt, lambda))
            .fold(f64::INFINITY, f64::min);
        let (intercept, slope) = iso_failure_line(lambda, best)?;
        println!(
            "  lambda = {lambda:.2}: p_fail = {best:.6} along TP = {intercept:.4} + {slope:.4} FP"
        );
    }
    Ok(())
}
