//! Quantum ROC geometry: Helstrom-optimal measurements, the pure-state
//! ellipse, measurement-accessible feasible regions via Haar-sampled
//! projectors and convex hulls, prior sweeps, and trace-distance readout.
//!
//! Throughout, `rho_p` is the state under the positive hypothesis and
//! `rho_n` the state under the negative one; a two-outcome measurement
//! produces tp = tr(M⁺ ρ_P) and fp = tr(M⁺ ρ_N).

use std::collections::BTreeMap;

use nalgebra::{Complex, DVector};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::classical::{RocCurve, RocPoint};
use crate::error::{Error, Result};
use crate::hermitian::{
    c64, eig_hermitian, haar_projector_with, validate_density, CMatrix, DensityOperator,
    Projector, EIG_TOL,
};
use crate::hull::{convex_hull, upper_chain};

/// A two-outcome measurement given by a positive-conclusion effect `m_pos`
/// with `m_neg = I - m_pos` held explicitly so the pair always sums to the
/// identity by construction.
#[derive(Debug, Clone)]
pub struct TwoOutcomeMeasurement {
    m_pos: CMatrix,
    m_neg: CMatrix,
}

impl TwoOutcomeMeasurement {
    /// Build from an arbitrary effect operator. The effect must be Hermitian
    /// with spectrum inside [-1e-9, 1+1e-9].
    pub fn from_effect(m_pos: CMatrix) -> Result<Self> {
        let (values, _) = eig_hermitian(&m_pos)?;
        let min = values.first().copied().unwrap_or(0.0);
        let max = values.last().copied().unwrap_or(0.0);
        if min < -EIG_TOL {
            return Err(Error::NotPositive { min_eig: min });
        }
        if max > 1.0 + EIG_TOL {
            return Err(Error::DomainError {
                what: format!("effect eigenvalue {max} exceeds 1"),
            });
        }
        let dim = m_pos.nrows();
        let m_neg = CMatrix::identity(dim, dim) - &m_pos;
        Ok(TwoOutcomeMeasurement { m_pos, m_neg })
    }

    /// Projective measurement (accept on the projector's range).
    pub fn from_projector(p: &Projector) -> Self {
        TwoOutcomeMeasurement {
            m_pos: p.matrix().clone(),
            m_neg: p.complement().matrix().clone(),
        }
    }

    /// The measurement that never concludes "positive".
    pub fn trivial_reject(dim: usize) -> Self {
        Self::from_projector(&Projector::zero(dim))
    }

    /// The measurement that always concludes "positive".
    pub fn trivial_accept(dim: usize) -> Self {
        Self::from_projector(&Projector::identity(dim))
    }

    /// Swap the roles of the two outcomes (classical negation of the
    /// conclusion); maps the ROC point to its reflection through (1/2, 1/2).
    pub fn complemented(&self) -> Self {
        TwoOutcomeMeasurement {
            m_pos: self.m_neg.clone(),
            m_neg: self.m_pos.clone(),
        }
    }

    pub fn m_pos(&self) -> &CMatrix {
        &self.m_pos
    }

    pub fn m_neg(&self) -> &CMatrix {
        &self.m_neg
    }

    pub fn dim(&self) -> usize {
        self.m_pos.nrows()
    }

    /// Whether the positive effect is a projector (idempotent within `tol`).
    pub fn is_projective(&self, tol: f64) -> bool {
        let residue = &self.m_pos * &self.m_pos - &self.m_pos;
        residue.iter().all(|c| c.norm() <= tol)
    }
}

/// Outcome of the minimum-error discrimination problem at a fixed prior.
#[derive(Debug, Clone)]
pub struct HelstromResult {
    /// Projective measurement onto the positive eigenspace of
    /// lambda*rho_p - (1-lambda)*rho_n.
    pub measurement: TwoOutcomeMeasurement,
    /// Minimum achievable error probability, (1 - trace norm)/2.
    pub p_err_min: f64,
    /// Rank of the positive effect.
    pub rank_pos: usize,
}

/// Minimum-error measurement for priors (lambda, 1-lambda): accept on the
/// positive eigenspace of the weighted difference
/// lambda*rho_p - (1-lambda)*rho_n. Zero eigenvalues go to the negative
/// effect, so lambda = 0 maps to the (0,0) corner exactly.
pub fn helstrom(
    rho_p: &DensityOperator,
    rho_n: &DensityOperator,
    lambda: f64,
) -> Result<HelstromResult> {
    check_same_dim(rho_p, rho_n)?;
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::OutOfRange {
            name: "lambda",
            value: lambda,
        });
    }
    let dim = rho_p.dim();
    let weighted = rho_p.matrix() * c64(lambda, 0.0) - rho_n.matrix() * c64(1.0 - lambda, 0.0);
    let (values, vectors) = eig_hermitian(&weighted)?;
    let cols: Vec<DVector<Complex<f64>>> = values
        .iter()
        .enumerate()
        .filter(|&(_, &v)| v > EIG_TOL)
        .map(|(j, _)| vectors.column(j).into_owned())
        .collect();
    let rank_pos = cols.len();
    let projector = if rank_pos == 0 {
        Projector::zero(dim)
    } else {
        Projector::from_orthonormal_columns(dim, &cols)
    };
    let trace_norm: f64 = values.iter().map(|v| v.abs()).sum();
    let p_err_min = (0.5 * (1.0 - trace_norm)).max(0.0);
    Ok(HelstromResult {
        measurement: TwoOutcomeMeasurement::from_projector(&projector),
        p_err_min,
        rank_pos,
    })
}

/// ROC point of a measurement on a state pair:
/// (fp, tp) = (tr(m_pos rho_n), tr(m_pos rho_p)), clamped into the unit
/// square. Errors if a trace has imaginary residue above 1e-10 (it cannot
/// for Hermitian inputs; the check guards corrupted operators).
pub fn roc_point(
    rho_p: &DensityOperator,
    rho_n: &DensityOperator,
    m: &TwoOutcomeMeasurement,
) -> Result<RocPoint> {
    check_same_dim(rho_p, rho_n)?;
    if m.dim() != rho_p.dim() {
        return Err(Error::DimensionMismatch {
            left: m.dim(),
            right: rho_p.dim(),
        });
    }
    let tp = real_trace_product(m.m_pos(), rho_p.matrix())?;
    let fp = real_trace_product(m.m_pos(), rho_n.matrix())?;
    Ok(RocPoint::clamped(fp, tp))
}

fn real_trace_product(a: &CMatrix, b: &CMatrix) -> Result<f64> {
    let t = (a * b).trace();
    if t.im.abs() > 1e-10 {
        return Err(Error::DomainError {
            what: format!("trace has imaginary residue {}", t.im),
        });
    }
    Ok(t.re)
}

fn check_same_dim(a: &DensityOperator, b: &DensityOperator) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    Ok(())
}

/// The real pure state cos(theta/2)|0> + sin(theta/2)|1> as a density
/// operator. theta = 2*arccos(sqrt(p)) recovers the binary distribution
/// (p, 1-p) in the computational basis.
pub fn pure_state(theta: f64) -> DensityOperator {
    let v = DVector::from_column_slice(&[c64((theta / 2.0).cos(), 0.0), c64((theta / 2.0).sin(), 0.0)]);
    let m = &v * v.adjoint();
    validate_density(&m).expect("pure-state outer product is a valid density operator")
}

/// One point of the pure-state ROC ellipse at measurement angle `alpha`:
/// tp = (1 + cos(alpha - theta_p))/2, fp = (1 + cos(alpha - theta_q))/2.
pub fn pure_ellipse_point(theta_p: f64, theta_q: f64, alpha: f64) -> RocPoint {
    RocPoint::clamped(
        (1.0 + (alpha - theta_q).cos()) / 2.0,
        (1.0 + (alpha - theta_p).cos()) / 2.0,
    )
}

/// The full ROC ellipse of a pure-state pair, sampled at `n_alpha` uniform
/// angles alpha in [0, 2*pi). Projective qubit measurements onto
/// cos(alpha/2)|0> + sin(alpha/2)|1> trace out this curve.
pub fn pure_ellipse(theta_p: f64, theta_q: f64, n_alpha: usize) -> Vec<RocPoint> {
    assert!(n_alpha >= 4, "need at least 4 ellipse samples, got {n_alpha}");
    (0..n_alpha)
        .map(|k| {
            let alpha = 2.0 * std::f64::consts::PI * k as f64 / n_alpha as f64;
            pure_ellipse_point(theta_p, theta_q, alpha)
        })
        .collect()
}

/// The prior lambda whose Helstrom measurement touches the pure-state
/// ellipse at angle `alpha`.
///
/// The ellipse tangent has slope dTP/dFP = sin(theta_p - alpha)/
/// sin(theta_q - alpha), and the iso-failure line for prior lambda has slope
/// (1 - lambda)/lambda; equating them gives
/// lambda = sq/(sq + sp) with sp = sin(theta_p - alpha),
/// sq = sin(theta_q - alpha).
///
/// Undefined where sq vanishes (vertical tangent, the FP = 1 touch point)
/// and where sq + sp vanishes (the major-axis endpoints, whose slope -1
/// tangent is no iso-failure line). On the accessible upper arc the result
/// lies in [0, 1] and `helstrom` at that prior lands on the same point.
pub fn tangent_prior(theta_p: f64, theta_q: f64, alpha: f64) -> Result<f64> {
    let sp = (theta_p - alpha).sin();
    let sq = (theta_q - alpha).sin();
    if sq.abs() <= 1e-12 || (sq + sp).abs() <= 1e-12 {
        return Err(Error::TangentUndefined { alpha });
    }
    Ok(sq / (sq + sp))
}

/// One sample of a Helstrom prior sweep.
#[derive(Debug, Clone, Copy)]
pub struct SweepEntry {
    pub lambda: f64,
    pub point: RocPoint,
    /// Rank of the positive effect; jumps mark splits in the optimal curve.
    pub rank_pos: usize,
}

/// Helstrom-optimal ROC points over a grid of priors, refined adaptively:
/// between neighboring entries more than 1e-3 apart in ROC space the prior
/// interval is bisected, down to a floor interval of 1e-9 (a genuine
/// discontinuity — a rank split — stops at the floor). Entries are returned
/// in ascending prior order and include every requested grid value.
pub fn helstrom_sweep(
    rho_p: &DensityOperator,
    rho_n: &DensityOperator,
    lambda_grid: &[f64],
) -> Result<Vec<SweepEntry>> {
    check_same_dim(rho_p, rho_n)?;
    let mut grid: Vec<f64> = lambda_grid.to_vec();
    for &l in &grid {
        if !(0.0..=1.0).contains(&l) {
            return Err(Error::OutOfRange {
                name: "lambda",
                value: l,
            });
        }
    }
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    if grid.is_empty() {
        return Ok(Vec::new());
    }

    let sample = |lambda: f64| -> Result<SweepEntry> {
        let h = helstrom(rho_p, rho_n, lambda)?;
        let point = roc_point(rho_p, rho_n, &h.measurement)?;
        Ok(SweepEntry {
            lambda,
            point,
            rank_pos: h.rank_pos,
        })
    };

    fn gap(a: &SweepEntry, b: &SweepEntry) -> f64 {
        let dx = b.point.fp - a.point.fp;
        let dy = b.point.tp - a.point.tp;
        (dx * dx + dy * dy).sqrt()
    }

    fn refine(
        a: &SweepEntry,
        b: &SweepEntry,
        sample: &impl Fn(f64) -> Result<SweepEntry>,
        out: &mut Vec<SweepEntry>,
    ) -> Result<()> {
        if gap(a, b) < 1e-3 || (b.lambda - a.lambda) < 1e-9 {
            out.push(*b);
            return Ok(());
        }
        let mid = sample(0.5 * (a.lambda + b.lambda))?;
        refine(a, &mid, sample, out)?;
        refine(&mid, b, sample, out)
    }

    let mut out = Vec::with_capacity(grid.len());
    out.push(sample(grid[0])?);
    for &l in &grid[1..] {
        let prev = *out.last().unwrap();
        let next = sample(l)?;
        refine(&prev, &next, &sample, &mut out)?;
    }
    Ok(out)
}

/// Assemble a sweep into a monotone ROC curve from (0,0) to (1,1). The
/// corners are always appended: they are attained by the trivial
/// always-reject/always-accept measurements, and the boundary reaches them
/// by straight segments (classical randomization).
pub fn sweep_curve(entries: &[SweepEntry]) -> Result<RocCurve> {
    roc_curve_through(entries.iter().map(|e| e.point).collect())
}

/// Monotone ROC curve through points sampled along the optimal boundary in
/// ascending prior order, with the trivial corners prepended and appended.
///
/// The boundary is traced monotonically in the prior: both coordinates are
/// non-decreasing in exact arithmetic, so the input order is the curve
/// order. Near an eigenvalue crossing, though, a coordinate can wiggle
/// below its running maximum by the eigensolver's noise floor (observed up
/// to ~1e-7 where the positive eigenvalues are nearly degenerate); sorting
/// by such a coordinate would shuffle the other one, so instead each
/// coordinate is clamped up to its running maximum. Decreases beyond 1e-6
/// are a real ordering violation and are rejected.
pub(crate) fn roc_curve_through(pts: Vec<RocPoint>) -> Result<RocCurve> {
    const NOISE: f64 = 1e-6;
    let mut out = Vec::with_capacity(pts.len() + 2);
    out.push(RocPoint { fp: 0.0, tp: 0.0 });
    let mut max_fp = 0.0_f64;
    let mut max_tp = 0.0_f64;
    for mut p in pts {
        if p.fp < max_fp - NOISE || p.tp < max_tp - NOISE {
            return Err(Error::DomainError {
                what: "boundary samples are not in ascending prior order".to_string(),
            });
        }
        p.fp = p.fp.max(max_fp).min(1.0);
        p.tp = p.tp.max(max_tp).min(1.0);
        max_fp = p.fp;
        max_tp = p.tp;
        let last = *out.last().unwrap();
        if (p.fp - last.fp).abs() > 1e-15 || (p.tp - last.tp).abs() > 1e-15 {
            out.push(p);
        }
    }
    let last = *out.last().unwrap();
    if (last.fp - 1.0).abs() > 1e-15 || (last.tp - 1.0).abs() > 1e-15 {
        out.push(RocPoint { fp: 1.0, tp: 1.0 });
    }
    RocCurve::new(out)
}

/// The measurement-accessible ROC region of a state pair.
#[derive(Debug, Clone)]
pub struct FeasibleRegion {
    /// Haar-sampled (plus Helstrom) ROC points keyed by positive-effect rank.
    /// Every point's reflection through (1/2, 1/2) appears in the
    /// complementary rank's cloud.
    pub rank_clouds: BTreeMap<usize, Vec<RocPoint>>,
    /// Convex hull of all sampled points, counterclockwise from (0,0).
    pub hull: Vec<(f64, f64)>,
    /// Upper boundary of the hull from (0,0) to (1,1).
    pub upper_curve: RocCurve,
}

/// Sample the accessible ROC region: `samples_per_rank` Haar-random
/// projectors for every rank 1..dim-1 (ranks 0 and dim contribute the exact
/// corners), plus a full adaptive Helstrom sweep to pin the upper boundary,
/// plus the reflection of every point through (1/2, 1/2) obtained by
/// negating the measurement's conclusion. Deterministic for a fixed seed.
pub fn feasible_region(
    rho_p: &DensityOperator,
    rho_n: &DensityOperator,
    samples_per_rank: usize,
    seed: u64,
) -> Result<FeasibleRegion> {
    check_same_dim(rho_p, rho_n)?;
    if samples_per_rank == 0 {
        return Err(Error::OutOfRange {
            name: "samples_per_rank",
            value: 0.0,
        });
    }
    let dim = rho_p.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut clouds: BTreeMap<usize, Vec<RocPoint>> = BTreeMap::new();
    for r in 0..=dim {
        clouds.insert(r, Vec::new());
    }
    clouds.get_mut(&0).unwrap().push(RocPoint { fp: 0.0, tp: 0.0 });
    clouds.get_mut(&dim).unwrap().push(RocPoint { fp: 1.0, tp: 1.0 });

    for rank in 1..dim {
        for _ in 0..samples_per_rank {
            let proj = haar_projector_with(dim, rank, &mut rng)?;
            let m = TwoOutcomeMeasurement::from_projector(&proj);
            let pt = roc_point(rho_p, rho_n, &m)?;
            clouds.get_mut(&rank).unwrap().push(pt);
            clouds.get_mut(&(dim - rank)).unwrap().push(pt.complement());
        }
    }

    let grid: Vec<f64> = (0..=200).map(|k| k as f64 / 200.0).collect();
    for entry in helstrom_sweep(rho_p, rho_n, &grid)? {
        clouds.get_mut(&entry.rank_pos).unwrap().push(entry.point);
        clouds
            .get_mut(&(dim - entry.rank_pos))
            .unwrap()
            .push(entry.point.complement());
    }

    let all: Vec<(f64, f64)> = clouds
        .values()
        .flat_map(|pts| pts.iter().map(RocPoint::as_tuple))
        .collect();
    let hull = convex_hull(&all, 1e-12);
    let upper: Vec<RocPoint> = upper_chain(&hull, 1e-12)
        .into_iter()
        .map(|(fp, tp)| RocPoint::clamped(fp, tp))
        .collect();
    let upper_curve = RocCurve::new(upper)?;
    Ok(FeasibleRegion {
        rank_clouds: clouds,
        hull,
        upper_curve,
    })
}

/// The boundary ellipse of a qubit pair's rank-1 ROC region: projective
/// measurements onto the great circle through both Bloch vectors. For mixed
/// states the pure-state ellipse shrinks anisotropically toward (1/2, 1/2).
/// Out-of-plane measurement axes only interpolate toward the diagonal, so
/// this planar family attains the extremes.
pub fn qubit_roc_ellipse(
    rho_p: &DensityOperator,
    rho_n: &DensityOperator,
    n_alpha: usize,
) -> Result<Vec<RocPoint>> {
    check_same_dim(rho_p, rho_n)?;
    if rho_p.dim() != 2 {
        return Err(Error::DimensionMismatch {
            left: rho_p.dim(),
            right: 2,
        });
    }
    assert!(n_alpha >= 4, "need at least 4 ellipse samples, got {n_alpha}");
    let rp = bloch_vector(rho_p)?;
    let rn = bloch_vector(rho_n)?;
    let e1 = unit_or(&rp, &rn);
    let e2 = orthonormal_partner(&e1, &rn);
    let mut points = Vec::with_capacity(n_alpha);
    for k in 0..n_alpha {
        let alpha = 2.0 * std::f64::consts::PI * k as f64 / n_alpha as f64;
        let axis = [
            alpha.cos() * e1[0] + alpha.sin() * e2[0],
            alpha.cos() * e1[1] + alpha.sin() * e2[1],
            alpha.cos() * e1[2] + alpha.sin() * e2[2],
        ];
        // tr(M rho) = (1 + axis . r)/2 for the projector M onto +axis
        let tp = 0.5 * (1.0 + dot(&axis, &rp));
        let fp = 0.5 * (1.0 + dot(&axis, &rn));
        points.push(RocPoint::clamped(fp, tp));
    }
    Ok(points)
}

fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn norm3(a: &[f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

/// First in-plane basis vector: direction of `primary`, falling back to
/// `secondary`, falling back to z for a fully degenerate (both maximally
/// mixed) pair.
fn unit_or(primary: &[f64; 3], secondary: &[f64; 3]) -> [f64; 3] {
    for v in [primary, secondary] {
        let n = norm3(v);
        if n > 1e-12 {
            return [v[0] / n, v[1] / n, v[2] / n];
        }
    }
    [0.0, 0.0, 1.0]
}

/// Unit vector orthogonal to `e1`, in the plane of `e1` and `toward` when
/// they are linearly independent; otherwise an arbitrary perpendicular axis.
fn orthonormal_partner(e1: &[f64; 3], toward: &[f64; 3]) -> [f64; 3] {
    let along = dot(toward, e1);
    let mut t = [
        toward[0] - along * e1[0],
        toward[1] - along * e1[1],
        toward[2] - along * e1[2],
    ];
    if norm3(&t) <= 1e-12 {
        // collinear Bloch vectors: any perpendicular completes the circle
        let fallback = if e1[2].abs() < 0.9 { [0.0, 0.0, 1.0] } else { [1.0, 0.0, 0.0] };
        let along = dot(&fallback, e1);
        t = [
            fallback[0] - along * e1[0],
            fallback[1] - along * e1[1],
            fallback[2] - along * e1[2],
        ];
    }
    let n = norm3(&t);
    [t[0] / n, t[1] / n, t[2] / n]
}

/// Read the trace distance off a ROC curve: the maximum of tp - fp, attained
/// where the 45-degree line is tangent to the optimal curve.
pub fn trace_distance_readout(curve: &RocCurve) -> f64 {
    curve
        .points()
        .iter()
        .map(|pt| pt.tp - pt.fp)
        .fold(0.0, f64::max)
}

/// Qubit density operator with the given Bloch vector.
pub fn qubit_from_bloch(r: [f64; 3]) -> Result<DensityOperator> {
    let norm = norm3(&r);
    if norm > 1.0 + 1e-12 {
        return Err(Error::BlochVectorTooLong { norm });
    }
    let m = CMatrix::from_row_slice(
        2,
        2,
        &[
            c64((1.0 + r[2]) / 2.0, 0.0),
            c64(r[0] / 2.0, -r[1] / 2.0),
            c64(r[0] / 2.0, r[1] / 2.0),
            c64((1.0 - r[2]) / 2.0, 0.0),
        ],
    );
    validate_density(&m)
}

/// Bloch vector of a qubit state.
pub fn bloch_vector(rho: &DensityOperator) -> Result<[f64; 3]> {
    if rho.dim() != 2 {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: 2,
        });
    }
    let m = rho.matrix();
    Ok([
        2.0 * m[(1, 0)].re,
        2.0 * m[(1, 0)].im,
        m[(0, 0)].re - m[(1, 1)].re,
    ])
}
