//! Analysis commands behind the command-line front end: each loads its
//! inputs, runs the relevant analyses, and writes CSV tables, a scalar
//! `results.json`, and a standalone SVG figure into an output directory,
//! returning the paths it wrote. All outputs are deterministic functions of
//! the inputs and the seed.

use std::f64::consts::PI;
use std::fs;
use std::path::{Path, PathBuf};

use serde_json::json;

use crate::classical::{bhattacharyya, optimal_roc, Distribution, RocCurve};
use crate::error::{Error, Result};
use crate::hermitian::{fidelity, trace_distance};
use crate::io::{load_density, load_distribution, matrix_to_json, write_csv, write_json};
use crate::quantum::{
    feasible_region, helstrom_sweep, pure_ellipse_point, pure_state, sweep_curve,
    trace_distance_readout,
};
use crate::similarity::{fidelity_polyline, pure_b_closed_form, pure_b_quadrature,
    quantum_bhattacharyya};
use crate::svg::{palette, Figure};
use crate::unambiguous::{build_povm, feasibility, success_rates};

/// Which artifact families a command writes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
    Svg,
    All,
}

impl OutputFormat {
    fn csv(self) -> bool {
        matches!(self, OutputFormat::Csv | OutputFormat::All)
    }

    fn json(self) -> bool {
        matches!(self, OutputFormat::Json | OutputFormat::All)
    }

    fn svg(self) -> bool {
        matches!(self, OutputFormat::Svg | OutputFormat::All)
    }
}

/// Knobs shared by the analysis commands.
#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Seed for every randomized sampling step.
    pub seed: u64,
    /// Base prior-grid size for Helstrom sweeps.
    pub lambda_grid_size: usize,
    /// Haar samples per measurement rank in feasible-region scatters.
    pub samples_per_rank: usize,
    /// Convergence tolerance for Bhattacharyya refinement and quadrature.
    pub tol_b: f64,
    /// Threshold on kernel weight for unambiguous feasibility.
    pub eig_tol: f64,
    /// Directory the artifacts are written into (created if missing).
    pub output_dir: PathBuf,
    /// Artifact families to emit.
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 7,
            lambda_grid_size: 201,
            samples_per_rank: 160,
            tol_b: 1e-6,
            eig_tol: 1e-9,
            output_dir: PathBuf::from("."),
            format: OutputFormat::All,
        }
    }
}

impl RunConfig {
    fn validate(&self) -> Result<()> {
        if self.lambda_grid_size < 2 {
            return Err(Error::OutOfRange {
                name: "lambda_grid_size",
                value: self.lambda_grid_size as f64,
            });
        }
        if self.samples_per_rank < 1 {
            return Err(Error::OutOfRange {
                name: "samples_per_rank",
                value: self.samples_per_rank as f64,
            });
        }
        if !(self.tol_b > 0.0) {
            return Err(Error::OutOfRange {
                name: "tol_b",
                value: self.tol_b,
            });
        }
        if !(self.eig_tol > 0.0) {
            return Err(Error::OutOfRange {
                name: "eig_tol",
                value: self.eig_tol,
            });
        }
        fs::create_dir_all(&self.output_dir)
            .map_err(|e| Error::from(e).with_path(self.output_dir.display().to_string()))?;
        Ok(())
    }

    fn path(&self, name: &str) -> PathBuf {
        self.output_dir.join(name)
    }

    fn uniform_lambda_grid(&self) -> Vec<f64> {
        (0..self.lambda_grid_size)
            .map(|i| i as f64 / (self.lambda_grid_size - 1) as f64)
            .collect()
    }
}

fn curve_rows(curve: &RocCurve) -> Vec<Vec<f64>> {
    curve.points().iter().map(|p| vec![p.fp, p.tp]).collect()
}

fn curve_tuples(curve: &RocCurve) -> Vec<(f64, f64)> {
    curve.points().iter().map(|p| (p.fp, p.tp)).collect()
}

fn write_figure(cfg: &RunConfig, name: &str, fig: &Figure, artifacts: &mut Vec<PathBuf>) -> Result<()> {
    let path = cfg.path(name);
    fs::write(&path, fig.render())
        .map_err(|e| Error::from(e).with_path(path.display().to_string()))?;
    artifacts.push(path);
    Ok(())
}

/// Classical analysis of two finite distributions: feasible-region polygon,
/// optimal upper polyline, Bhattacharyya coefficient, and a region figure.
pub fn cmd_classical(
    p_file: impl AsRef<Path>,
    q_file: impl AsRef<Path>,
    cfg: &RunConfig,
) -> Result<Vec<PathBuf>> {
    cfg.validate()?;
    let p = load_distribution(p_file)?;
    let q = load_distribution(q_file)?;
    let curve = optimal_roc(&p, &q)?;
    let b = bhattacharyya(&p, &q)?;

    // the region is point-symmetric: its boundary is the optimal polyline
    // plus the reflection of the interior vertices through (1/2, 1/2)
    let mut region: Vec<(f64, f64)> = curve_tuples(&curve);
    let n = curve.points().len();
    for pt in curve.points()[1..n - 1].iter().rev() {
        region.push((1.0 - pt.fp, 1.0 - pt.tp));
    }

    let mut artifacts = Vec::new();
    if cfg.format.csv() {
        let region_rows: Vec<Vec<f64>> = region.iter().map(|&(fp, tp)| vec![fp, tp]).collect();
        write_csv(cfg.path("region.csv"), "fp,tp", &region_rows)?;
        artifacts.push(cfg.path("region.csv"));
        write_csv(cfg.path("optimal_curve.csv"), "fp,tp", &curve_rows(&curve))?;
        artifacts.push(cfg.path("optimal_curve.csv"));
    }
    if cfg.format.json() {
        write_json(
            cfg.path("results.json"),
            &json!({
                "bhattacharyya": b,
                "outcomes": p.len(),
            }),
        )?;
        artifacts.push(cfg.path("results.json"));
    }
    if cfg.format.svg() {
        let mut fig = Figure::unit_square("Classical ROC region and optimal curve");
        fig.polygon(&region, palette::REGION_FILL, palette::REGION_STROKE);
        fig.polyline(&[(0.0, 0.0), (1.0, 1.0)], palette::DIAGONAL, 1.5, true);
        fig.polyline(&curve_tuples(&curve), palette::OPTIMAL, 2.5, false);
        fig.dots(&curve_tuples(&curve), palette::OPTIMAL, 4.0);
        fig.legend_line(palette::OPTIMAL, false, "optimal ROC polyline");
        fig.legend_line(palette::REGION_STROKE, false, "feasible region");
        fig.legend_line(palette::DIAGONAL, true, "random guessing");
        write_figure(cfg, "fig1.svg", &fig, &mut artifacts)?;
    }
    Ok(artifacts)
}

/// Pure-state pair analysis: the ROC ellipse, the Helstrom-reachable arc
/// with measurement ranks, the classical reference polyline for the same
/// diagonal weights, fidelity touch points, and the ellipse figure.
pub fn cmd_pure(theta_p: f64, theta_q: f64, cfg: &RunConfig) -> Result<Vec<PathBuf>> {
    cfg.validate()?;
    let rho_p = pure_state(theta_p);
    let rho_n = pure_state(theta_q);
    let overlap = fidelity(&rho_p, &rho_n)?;

    let n_alpha = 720;
    let ellipse: Vec<Vec<f64>> = (0..=n_alpha)
        .map(|i| {
            let alpha = 2.0 * PI * (i as f64 / n_alpha as f64);
            let pt = pure_ellipse_point(theta_p, theta_q, alpha);
            vec![alpha, pt.fp, pt.tp]
        })
        .collect();

    let sweep = helstrom_sweep(&rho_p, &rho_n, &cfg.uniform_lambda_grid())?;
    let swept = sweep_curve(&sweep)?;

    // classical reference: the binary pair with the same diagonal weights
    let p_weight = (theta_p / 2.0).cos().powi(2);
    let q_weight = (theta_q / 2.0).cos().powi(2);
    let classical = optimal_roc(
        &Distribution::binary(p_weight)?,
        &Distribution::binary(q_weight)?,
    )?;

    // the four ellipse points the fidelity pins down: tangencies with the
    // square's edges at alpha in {theta_p, theta_q, theta_p+pi, theta_q+pi}
    let touch: Vec<Vec<f64>> = [theta_p, theta_q, theta_p + PI, theta_q + PI]
        .iter()
        .map(|&alpha| {
            let pt = pure_ellipse_point(theta_p, theta_q, alpha);
            vec![alpha, pt.fp, pt.tp]
        })
        .collect();

    let delta = {
        let d = (theta_q - theta_p).rem_euclid(2.0 * PI);
        if d > PI {
            2.0 * PI - d
        } else {
            d
        }
    };

    let mut artifacts = Vec::new();
    if cfg.format.csv() {
        write_csv(cfg.path("ellipse.csv"), "alpha,fp,tp", &ellipse)?;
        artifacts.push(cfg.path("ellipse.csv"));
        let sweep_rows: Vec<Vec<f64>> = sweep
            .iter()
            .map(|e| vec![e.lambda, e.point.fp, e.point.tp, e.rank_pos as f64])
            .collect();
        write_csv(
            cfg.path("helstrom_arc.csv"),
            "lambda,fp,tp,rank",
            &sweep_rows,
        )?;
        artifacts.push(cfg.path("helstrom_arc.csv"));
        write_csv(
            cfg.path("classical_reference.csv"),
            "fp,tp",
            &curve_rows(&classical),
        )?;
        artifacts.push(cfg.path("classical_reference.csv"));
        write_csv(cfg.path("touch_points.csv"), "alpha,fp,tp", &touch)?;
        artifacts.push(cfg.path("touch_points.csv"));
    }
    if cfg.format.json() {
        write_json(
            cfg.path("results.json"),
            &json!({
                "theta_p": theta_p,
                "theta_q": theta_q,
                "fidelity": overlap,
                "bhattacharyya_closed_form": pure_b_closed_form(delta)?,
                "bhattacharyya_quadrature": pure_b_quadrature(theta_p, theta_q, cfg.tol_b)?,
            }),
        )?;
        artifacts.push(cfg.path("results.json"));
    }
    if cfg.format.svg() {
        let mut fig = Figure::unit_square("Pure-state ROC ellipse and Helstrom arc");
        fig.polyline(&[(0.0, 0.0), (1.0, 1.0)], palette::DIAGONAL, 1.5, true);
        fig.polyline(&curve_tuples(&classical), palette::CLASSICAL_REF, 2.0, false);

        // split the ellipse into arcs the sweep reaches and arcs it cannot
        let boundary = curve_tuples(&swept);
        let mut run: Vec<(f64, f64)> = Vec::new();
        let mut run_accessible = true;
        for row in &ellipse {
            let pt = (row[1], row[2]);
            let accessible = distance_to_polyline(pt, &boundary) < 1e-6;
            if run.is_empty() || accessible == run_accessible {
                run.push(pt);
            } else {
                draw_arc(&mut fig, &run, run_accessible);
                let bridge = *run.last().unwrap();
                run = vec![bridge, pt];
            }
            run_accessible = accessible;
        }
        draw_arc(&mut fig, &run, run_accessible);

        fig.polyline(&boundary, palette::OPTIMAL, 1.2, false);
        let touch_pts: Vec<(f64, f64)> = touch.iter().map(|r| (r[1], r[2])).collect();
        fig.dots(&touch_pts, palette::FIDELITY, 5.0);
        fig.legend_line(palette::OPTIMAL, false, "Helstrom-accessible boundary");
        fig.legend_line(palette::INACCESSIBLE, true, "inaccessible ellipse arc");
        fig.legend_line(palette::CLASSICAL_REF, false, "classical reference");
        fig.legend_dot(palette::FIDELITY, "fidelity touch points");
        write_figure(cfg, "fig2.svg", &fig, &mut artifacts)?;
    }
    Ok(artifacts)
}

fn draw_arc(fig: &mut Figure, run: &[(f64, f64)], accessible: bool) {
    if accessible {
        fig.polyline(run, palette::OPTIMAL, 2.5, false);
    } else {
        fig.polyline(run, palette::INACCESSIBLE, 2.0, true);
    }
}

fn distance_to_polyline(pt: (f64, f64), polyline: &[(f64, f64)]) -> f64 {
    let mut best = f64::INFINITY;
    for seg in polyline.windows(2) {
        let (ax, ay) = seg[0];
        let (bx, by) = seg[1];
        let (dx, dy) = (bx - ax, by - ay);
        let len2 = dx * dx + dy * dy;
        let t = if len2 > 0.0 {
            (((pt.0 - ax) * dx + (pt.1 - ay) * dy) / len2).clamp(0.0, 1.0)
        } else {
            0.0
        };
        let (px, py) = (ax + t * dx - pt.0, ay + t * dy - pt.1);
        best = best.min((px * px + py * py).sqrt());
    }
    best
}

/// Scan the pure-state Bhattacharyya coefficient and square-root fidelity
/// over the angle separation: one CSV row per grid angle, plus the
/// two-curve comparison figure.
pub fn cmd_bhatta_scan(n_points: usize, cfg: &RunConfig) -> Result<Vec<PathBuf>> {
    cfg.validate()?;
    if n_points < 2 {
        return Err(Error::OutOfRange {
            name: "n_points",
            value: n_points as f64,
        });
    }
    let mut rows = Vec::with_capacity(n_points);
    for i in 0..n_points {
        let theta = PI * (i as f64 / (n_points - 1) as f64);
        rows.push(vec![
            theta,
            pure_b_quadrature(0.0, theta, cfg.tol_b)?,
            pure_b_closed_form(theta)?,
            (theta / 2.0).cos().abs(),
        ]);
    }

    let mut artifacts = Vec::new();
    if cfg.format.csv() {
        write_csv(
            cfg.path("bhatta_scan.csv"),
            "theta_q,b_quadrature,b_closed_form,sqrt_fidelity",
            &rows,
        )?;
        artifacts.push(cfg.path("bhatta_scan.csv"));
    }
    if cfg.format.svg() {
        let x_ticks = vec![
            (0.0, "0".to_string()),
            (PI / 4.0, "π/4".to_string()),
            (PI / 2.0, "π/2".to_string()),
            (3.0 * PI / 4.0, "3π/4".to_string()),
            (PI, "π".to_string()),
        ];
        let y_ticks = [0.0, 0.25, 0.5, 0.75, 1.0]
            .iter()
            .map(|&v| (v, format!("{v}")))
            .collect();
        let mut fig = Figure::with_ranges(
            "Bhattacharyya coefficient vs square-root fidelity",
            "angle separation θ_q",
            "similarity",
            (0.0, PI),
            (0.0, 1.0),
            x_ticks,
            y_ticks,
        );
        let b_curve: Vec<(f64, f64)> = rows.iter().map(|r| (r[0], r[2])).collect();
        let f_curve: Vec<(f64, f64)> = rows.iter().map(|r| (r[0], r[3])).collect();
        fig.polyline(&f_curve, palette::FIDELITY, 2.5, false);
        fig.polyline(&b_curve, palette::OPTIMAL, 2.5, false);
        fig.legend_line(palette::OPTIMAL, false, "Bhattacharyya coefficient B");
        fig.legend_line(palette::FIDELITY, false, "square-root fidelity");
        write_figure(cfg, "fig3.svg", &fig, &mut artifacts)?;
    }
    Ok(artifacts)
}

/// Full analysis of an arbitrary state pair: Haar-sampled rank clouds, the
/// feasible-region hull, the Helstrom sweep, the fidelity-observable
/// polyline, headline scalars, and the layered region figure.
pub fn cmd_general(
    rho_p_file: impl AsRef<Path>,
    rho_n_file: impl AsRef<Path>,
    cfg: &RunConfig,
) -> Result<Vec<PathBuf>> {
    cfg.validate()?;
    let rho_p = load_density(rho_p_file)?;
    let rho_n = load_density(rho_n_file)?;
    let dim = rho_p.dim();

    let region = feasible_region(&rho_p, &rho_n, cfg.samples_per_rank, cfg.seed)?;
    let sweep = helstrom_sweep(&rho_p, &rho_n, &cfg.uniform_lambda_grid())?;
    let swept = sweep_curve(&sweep)?;
    let polyline = fidelity_polyline(&rho_p, &rho_n)?;
    let b_report = quantum_bhattacharyya(&rho_p, &rho_n, cfg.tol_b)?;

    let mut artifacts = Vec::new();
    if cfg.format.csv() {
        for (&rank, cloud) in &region.rank_clouds {
            if rank == 0 || rank == dim {
                continue; // corner-only pseudo-clouds
            }
            let rows: Vec<Vec<f64>> = cloud.iter().map(|p| vec![p.fp, p.tp]).collect();
            let name = format!("rank_cloud_{rank}.csv");
            write_csv(cfg.path(&name), "fp,tp", &rows)?;
            artifacts.push(cfg.path(&name));
        }
        let hull_rows: Vec<Vec<f64>> = region.hull.iter().map(|&(x, y)| vec![x, y]).collect();
        write_csv(cfg.path("hull.csv"), "fp,tp", &hull_rows)?;
        artifacts.push(cfg.path("hull.csv"));
        let sweep_rows: Vec<Vec<f64>> = sweep
            .iter()
            .map(|e| vec![e.lambda, e.point.fp, e.point.tp, e.rank_pos as f64])
            .collect();
        write_csv(
            cfg.path("helstrom_curve.csv"),
            "lambda,fp,tp,rank",
            &sweep_rows,
        )?;
        artifacts.push(cfg.path("helstrom_curve.csv"));
        write_csv(
            cfg.path("fidelity_polyline.csv"),
            "fp,tp",
            &curve_rows(&polyline),
        )?;
        artifacts.push(cfg.path("fidelity_polyline.csv"));
    }
    if cfg.format.json() {
        write_json(
            cfg.path("results.json"),
            &json!({
                "dim": dim,
                "trace_distance_direct": trace_distance(&rho_p, &rho_n)?,
                "trace_distance_readout": trace_distance_readout(&swept),
                "fidelity": fidelity(&rho_p, &rho_n)?,
                "quantum_bhattacharyya": b_report.value,
                "bhattacharyya_refinement_levels": b_report.refinement_levels,
            }),
        )?;
        artifacts.push(cfg.path("results.json"));
    }
    if cfg.format.svg() {
        let mut fig = Figure::unit_square("Feasible ROC region of a state pair");
        fig.polygon(&region.hull, palette::REGION_FILL, palette::REGION_STROKE);
        fig.polyline(&[(0.0, 0.0), (1.0, 1.0)], palette::DIAGONAL, 1.5, true);
        for (&rank, cloud) in &region.rank_clouds {
            if rank == 0 || rank == dim {
                continue;
            }
            let color = palette::RANKS[(rank - 1) % palette::RANKS.len()];
            let pts: Vec<(f64, f64)> = cloud.iter().map(|p| (p.fp, p.tp)).collect();
            fig.dots(&pts, color, 2.0);
            fig.legend_dot(color, &format!("rank-{rank} measurements"));
        }
        fig.polyline(&curve_tuples(&swept), palette::OPTIMAL, 2.5, false);
        fig.polyline(&curve_tuples(&polyline), palette::FIDELITY, 2.0, false);
        let poly_pts = curve_tuples(&polyline);
        fig.dots(&poly_pts, palette::FIDELITY, 3.5);
        fig.legend_line(palette::OPTIMAL, false, "Helstrom optimal curve");
        fig.legend_line(palette::FIDELITY, false, "fidelity-observable polyline");
        write_figure(cfg, "fig4.svg", &fig, &mut artifacts)?;
    }
    Ok(artifacts)
}

/// Unambiguous-discrimination analysis: feasibility flags, the POVM at the
/// requested weights with its success rates, and a success-rate table over
/// a fixed 21x21 weight grid (admissible combinations only).
pub fn cmd_unambiguous(
    rho_p_file: impl AsRef<Path>,
    rho_n_file: impl AsRef<Path>,
    lambda1: f64,
    lambda2: f64,
    cfg: &RunConfig,
) -> Result<Vec<PathBuf>> {
    cfg.validate()?;
    let rho_p = load_density(rho_p_file)?;
    let rho_n = load_density(rho_n_file)?;

    let report = feasibility(&rho_p, &rho_n, cfg.eig_tol)?;
    let mut artifacts = Vec::new();
    if cfg.format.json() {
        write_json(
            cfg.path("feasibility.json"),
            &json!({
                "can_detect_p": report.can_detect_p,
                "can_detect_n": report.can_detect_n,
                "kernel_rank_p": report.kernel_rank_p,
                "kernel_rank_n": report.kernel_rank_n,
            }),
        )?;
        artifacts.push(cfg.path("feasibility.json"));
    }

    // propagates InfeasiblePair (exit 3) after the feasibility verdict is
    // already on disk
    let povm = build_povm(&rho_p, &rho_n, lambda1, lambda2)?;
    let (succ_p, succ_n, inc_p, inc_n) = success_rates(&povm, &rho_p, &rho_n)?;

    if cfg.format.json() {
        write_json(
            cfg.path("povm.json"),
            &json!({
                "lambda1": povm.lambda1(),
                "lambda2": povm.lambda2(),
                "succ_p": succ_p,
                "succ_n": succ_n,
                "inconclusive_p": inc_p,
                "inconclusive_n": inc_n,
                "m_p": matrix_to_json(povm.m_p()),
                "m_n": matrix_to_json(povm.m_n()),
                "m_inconclusive": matrix_to_json(povm.m_inconclusive()),
            }),
        )?;
        artifacts.push(cfg.path("povm.json"));
    }
    if cfg.format.csv() {
        let side = 21;
        let mut rows = Vec::new();
        for i in 0..side {
            for j in 0..side {
                let l1 = i as f64 / (side - 1) as f64;
                let l2 = j as f64 / (side - 1) as f64;
                match build_povm(&rho_p, &rho_n, l1, l2) {
                    Ok(p) => {
                        let (sp, sn, ip, inn) = success_rates(&p, &rho_p, &rho_n)?;
                        rows.push(vec![l1, l2, sp, sn, ip, inn]);
                    }
                    // outside the admissible weight polytope: skip the cell
                    Err(Error::EffectSumExceedsIdentity { .. })
                    | Err(Error::InfeasiblePair { .. }) => {}
                    Err(e) => return Err(e),
                }
            }
        }
        write_csv(
            cfg.path("success_rates.csv"),
            "lambda1,lambda2,succ_p,succ_n,inconclusive_p,inconclusive_n",
            &rows,
        )?;
        artifacts.push(cfg.path("success_rates.csv"));
    }
    Ok(artifacts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::{read_csv, save_density};
    use crate::hermitian::random_density;
    use std::fs;

    fn temp_cfg(name: &str) -> RunConfig {
        let dir = std::env::temp_dir().join("qroc-report-tests").join(name);
        let _ = fs::remove_dir_all(&dir);
        RunConfig {
            output_dir: dir,
            samples_per_rank: 20,
            lambda_grid_size: 41,
            ..RunConfig::default()
        }
    }

    fn write_dist(dir: &Path, name: &str, probs: &str) -> PathBuf {
        fs::create_dir_all(dir).unwrap();
        let path = dir.join(name);
        fs::write(&path, probs).unwrap();
        path
    }

    #[test]
    fn classical_command_reproduces_the_binary_region() {
        let cfg = temp_cfg("classical");
        let p = write_dist(&cfg.output_dir, "p.json", "[0.7, 0.3]");
        let q = write_dist(&cfg.output_dir, "q.json", "[0.4, 0.6]");
        let artifacts = cmd_classical(&p, &q, &cfg).unwrap();
        assert_eq!(artifacts.len(), 4);

        let region = read_csv(cfg.path("region.csv"), "fp,tp").unwrap();
        let want = [(0.0, 0.0), (0.4, 0.7), (1.0, 1.0), (0.6, 0.3)];
        assert_eq!(region.len(), 4);
        for (row, (fp, tp)) in region.iter().zip(want) {
            assert!((row[0] - fp).abs() < 1e-12 && (row[1] - tp).abs() < 1e-12);
        }
        let svg = fs::read_to_string(cfg.path("fig1.svg")).unwrap();
        assert!(svg.contains("</svg>"));
        let results: serde_json::Value =
            serde_json::from_str(&fs::read_to_string(cfg.path("results.json")).unwrap()).unwrap();
        let b = results["bhattacharyya"].as_f64().unwrap();
        assert!((b - (0.7_f64 * 0.4).sqrt() - (0.3_f64 * 0.6).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn pure_command_emits_the_four_tables_and_figure() {
        let cfg = temp_cfg("pure");
        let theta_p = 2.0 * (0.7_f64).sqrt().acos();
        let theta_q = 2.0 * (0.4_f64).sqrt().acos();
        let artifacts = cmd_pure(theta_p, theta_q, &cfg).unwrap();
        assert_eq!(artifacts.len(), 6);

        let ellipse = read_csv(cfg.path("ellipse.csv"), "alpha,fp,tp").unwrap();
        assert_eq!(ellipse.len(), 721);
        // alpha = 0 is the classical vertex (q, p)
        assert!((ellipse[0][1] - 0.4).abs() < 1e-12 && (ellipse[0][2] - 0.7).abs() < 1e-12);

        let touch = read_csv(cfg.path("touch_points.csv"), "alpha,fp,tp").unwrap();
        assert_eq!(touch.len(), 4);
        let f = ((theta_p - theta_q) / 2.0).cos().powi(2);
        assert!((touch[0][1] - f).abs() < 1e-12 && (touch[0][2] - 1.0).abs() < 1e-12);
        assert!(touch[3][1].abs() < 1e-12 && (touch[3][2] - (1.0 - f)).abs() < 1e-12);

        let svg = fs::read_to_string(cfg.path("fig2.svg")).unwrap();
        assert!(svg.contains("stroke-dasharray")); // inaccessible arcs present
    }

    #[test]
    fn scan_command_rows_are_ordered_and_bounded() {
        let mut cfg = temp_cfg("scan");
        cfg.tol_b = 1e-8;
        cmd_bhatta_scan(9, &cfg).unwrap();
        let rows = read_csv(
            cfg.path("bhatta_scan.csv"),
            "theta_q,b_quadrature,b_closed_form,sqrt_fidelity",
        )
        .unwrap();
        assert_eq!(rows.len(), 9);
        assert!((rows[0][1] - 1.0).abs() < 1e-8 && (rows[0][2] - 1.0).abs() < 1e-12);
        assert!(rows[8][1].abs() < 1e-8 && rows[8][2].abs() < 1e-12);
        for row in &rows {
            assert!(row[1] <= row[3] + 1e-6, "B exceeds sqrt fidelity: {row:?}");
            assert!((row[1] - row[2]).abs() < 1e-6, "routes disagree: {row:?}");
        }
    }

    #[test]
    fn general_command_layers_all_artifacts() {
        let cfg = temp_cfg("general");
        fs::create_dir_all(&cfg.output_dir).unwrap();
        let p_path = cfg.path("rho_p.json");
        let n_path = cfg.path("rho_n.json");
        save_density(&p_path, &random_density(3, 3, 21).unwrap()).unwrap();
        save_density(&n_path, &random_density(3, 2, 22).unwrap()).unwrap();
        let artifacts = cmd_general(&p_path, &n_path, &cfg).unwrap();
        let names: Vec<String> = artifacts
            .iter()
            .map(|p| p.file_name().unwrap().to_string_lossy().into_owned())
            .collect();
        for want in [
            "rank_cloud_1.csv",
            "rank_cloud_2.csv",
            "hull.csv",
            "helstrom_curve.csv",
            "fidelity_polyline.csv",
            "results.json",
            "fig4.svg",
        ] {
            assert!(names.iter().any(|n| n == want), "missing {want}: {names:?}");
        }

        // every emitted curve point stays in the unit square
        for name in ["hull.csv", "fidelity_polyline.csv"] {
            for row in read_csv(cfg.path(name), "fp,tp").unwrap() {
                assert!((0.0..=1.0).contains(&row[0]) && (0.0..=1.0).contains(&row[1]));
            }
        }
        let results: serde_json::Value =
            serde_json::from_str(&fs::read_to_string(cfg.path("results.json")).unwrap()).unwrap();
        let direct = results["trace_distance_direct"].as_f64().unwrap();
        let readout = results["trace_distance_readout"].as_f64().unwrap();
        assert!((direct - readout).abs() < 1e-3);
    }

    #[test]
    fn unambiguous_command_reports_and_builds() {
        let cfg = temp_cfg("unamb");
        fs::create_dir_all(&cfg.output_dir).unwrap();
        let p_path = cfg.path("rho_p.json");
        let n_path = cfg.path("rho_n.json");
        save_density(&p_path, &pure_state(0.0)).unwrap();
        save_density(&n_path, &pure_state(std::f64::consts::FRAC_PI_2)).unwrap();
        let artifacts = cmd_unambiguous(&p_path, &n_path, 0.5, 0.5, &cfg).unwrap();
        assert_eq!(artifacts.len(), 3);

        let feas: serde_json::Value =
            serde_json::from_str(&fs::read_to_string(cfg.path("feasibility.json")).unwrap())
                .unwrap();
        assert_eq!(feas["can_detect_p"], true);
        let povm: serde_json::Value =
            serde_json::from_str(&fs::read_to_string(cfg.path("povm.json")).unwrap()).unwrap();
        assert!((povm["succ_p"].as_f64().unwrap() - 0.25).abs() < 1e-12);

        let table = read_csv(
            cfg.path("success_rates.csv"),
            "lambda1,lambda2,succ_p,succ_n,inconclusive_p,inconclusive_n",
        )
        .unwrap();
        assert!(!table.is_empty() && table.len() < 21 * 21); // aggressive cells skipped
    }

    #[test]
    fn infeasible_pair_still_writes_the_feasibility_verdict() {
        let cfg = temp_cfg("unamb-infeasible");
        fs::create_dir_all(&cfg.output_dir).unwrap();
        let p_path = cfg.path("rho_p.json");
        let n_path = cfg.path("rho_n.json");
        save_density(&p_path, &random_density(3, 3, 31).unwrap()).unwrap();
        save_density(&n_path, &random_density(3, 3, 32).unwrap()).unwrap();
        let err = cmd_unambiguous(&p_path, &n_path, 0.5, 0.5, &cfg).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        let feas: serde_json::Value =
            serde_json::from_str(&fs::read_to_string(cfg.path("feasibility.json")).unwrap())
                .unwrap();
        assert_eq!(feas["can_detect_p"], false);
        assert_eq!(feas["can_detect_n"], false);
    }

    #[test]
    fn outputs_are_deterministic() {
        let cfg_a = temp_cfg("det-a");
        let cfg_b = temp_cfg("det-b");
        fs::create_dir_all(&cfg_a.output_dir).unwrap();
        fs::create_dir_all(&cfg_b.output_dir).unwrap();
        for cfg in [&cfg_a, &cfg_b] {
            let p_path = cfg.path("rho_p.json");
            let n_path = cfg.path("rho_n.json");
            save_density(&p_path, &random_density(3, 3, 41).unwrap()).unwrap();
            save_density(&n_path, &random_density(3, 1, 42).unwrap()).unwrap();
            cmd_general(&p_path, &n_path, cfg).unwrap();
        }
        for name in ["rank_cloud_1.csv", "hull.csv", "results.json", "fig4.svg"] {
            let a = fs::read(cfg_a.path(name)).unwrap();
            let b = fs::read(cfg_b.path(name)).unwrap();
            assert_eq!(a, b, "{name} differs between identical runs");
        }
    }

    #[test]
    fn format_flag_gates_artifact_families() {
        let mut cfg = temp_cfg("formats");
        cfg.format = OutputFormat::Svg;
        let p = write_dist(&cfg.output_dir, "p.json", "[0.7, 0.3]");
        let q = write_dist(&cfg.output_dir, "q.json", "[0.4, 0.6]");
        let artifacts = cmd_classical(&p, &q, &cfg).unwrap();
        assert_eq!(artifacts.len(), 1);
        assert!(artifacts[0].ends_with("fig1.svg"));
        assert!(!cfg.path("region.csv").exists());
    }

    #[test]
    fn config_validation_rejects_bad_knobs() {
        let mut cfg = temp_cfg("badcfg");
        cfg.lambda_grid_size = 1;
        let p = write_dist(&cfg.output_dir, "p.json", "[0.7, 0.3]");
        assert!(matches!(
            cmd_classical(&p, &p, &cfg),
            Err(Error::OutOfRange { .. })
        ));
    }
}
