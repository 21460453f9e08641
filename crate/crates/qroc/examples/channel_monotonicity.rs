//! Quantum channels cannot make states easier to tell apart.
//!
//! The quantum Bhattacharyya coefficient is monotone under completely
//! positive trace-preserving maps: applying the same channel to both
//! hypotheses never decreases B (discriminability only degrades). This
//! example checks the inequality for the identity, a depolarizing channel,
//! and a batch of random Kraus channels.
//!
//! Run with: cargo run --example channel_monotonicity

use qroc::hermitian::{random_density, random_kraus_channel, KrausChannel};
use qroc::similarity::check_cp_monotonicity;

fn main() -> qroc::Result<()> {
    let rho_p = random_density(2, 2, 501)?;
    let rho_n = random_density(2, 2, 502)?;

    let identity = KrausChannel::identity(2);
    let (before, after, ok) = check_cp_monotonicity(&rho_p, &rho_n, &identity, 1e-6)?;
    println!("identity channel:     B {before:.9} -> {after:.9}  (monotone: {ok})");

    let depol = KrausChannel::depolarizing_to_mixed(2);
    let (before, after, ok) = check_cp_monotonicity(&rho_p, &rho_n, &depol, 1e-6)?;
    println!("fully depolarizing:   B {before:.9} -> {after:.9}  (monotone: {ok})");

    println!();
    println!("random Kraus channels (3 operators each):");
    let mut failures = 0;
    for seed in 0..10 {
        let ch = random_kraus_channel(2, 3, 9000 + seed)?;
        let (before, after, ok) = check_cp_monotonicity(&rho_p, &rho_n, &ch, 1e-4)?;
        println!("  seed {seed}: B {before:.9} -> {after:.9}  increase {:+.3e}", after - before);
        if !ok {
            failures += 1;
        }
    }
    println!();
    if failures == 0 {
        println!("monotonicity held for every channel");
    } else {
        println!("monotonicity violated {failures} times — should never happen");
    }
    Ok(())
}
