//! Emitting the full artifact set (CSV + JSON + SVG) from code.
//!
//! The same entry points the command-line binary dispatches to are public:
//! each takes input descriptions plus a RunConfig and writes its artifacts
//! into the configured directory. This example produces all four figure
//! pipelines into ./figure-pipeline-out.
//!
//! Run with: cargo run --example figure_pipeline

use std::fs;
use std::path::PathBuf;

use qroc::hermitian::random_density;
use qroc::io::save_density;
use qroc::report::{
    cmd_bhatta_scan, cmd_classical, cmd_general, cmd_pure, cmd_unambiguous, OutputFormat,
    RunConfig,
};

fn main() -> qroc::Result<()> {
    let out = PathBuf::from("figure-pipeline-out");
    fs::create_dir_all(&out)?;

    let cfg = |sub: &str| RunConfig {
        output_dir: out.join(sub),
        samples_per_rank: 80,
        format: OutputFormat::All,
        ..RunConfig::default()
    };

    // Distribution inputs are plain JSON arrays.
    let p_file = out.join("p.json");
    let q_file = out.join("q.json");
    fs::write(&p_file, "[0.7, 0.3]\n")?;
    fs::write(&q_file, "[0.4, 0.6]\n")?;
    let artifacts = cmd_classical(&p_file, &q_file, &cfg("classical"))?;
    report("classical", &artifacts);

    let artifacts = cmd_pure(
        2.0 * 0.7_f64.sqrt().acos(),
        2.0 * 0.4_f64.sqrt().acos(),
        &cfg("pure"),
    )?;
    report("pure", &artifacts);

    let artifacts = cmd_bhatta_scan(101, &cfg("scan"))?;
    report("scan", &artifacts);

    // State inputs live in JSON files too; save_density writes the format
    // load_density reads.
    let rho_p_file = out.join("rho_p.json");
    let rho_n_file = out.join("rho_n.json");
    save_density(&rho_p_file, &random_density(4, 4, 71)?)?;
    save_density(&rho_n_file, &random_density(4, 4, 72)?)?;
    let artifacts = cmd_general(&rho_p_file, &rho_n_file, &cfg("general"))?;
    report("general", &artifacts);

    let up_file = out.join("u_p.json");
    let un_file = out.join("u_n.json");
    save_density(&up_file, &random_density(3, 1, 81)?)?;
    save_density(&un_file, &random_density(3, 2, 82)?)?;
    let artifacts = cmd_unambiguous(&up_file, &un_file, 0.5, 0.5, &cfg("unambiguous"))?;
    report("unambiguous", &artifacts);

    Ok(())
}

fn report(label: &str, artifacts: &[PathBuf]) {
    println!("{label}:");
    for a in artifacts {
        println!("  {}", a.display());
    }
}
