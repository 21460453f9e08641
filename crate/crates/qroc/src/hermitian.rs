//! Complex Hermitian linear algebra: density operators, spectral projectors,
//! matrix square roots, trace distance / fidelity, Haar-random sampling and
//! Kraus channels.
//!
//! Everything here works on small dense matrices (dimensions up to a few
//! dozen); eigendecomposition is the workhorse throughout.

use nalgebra::{Complex, DMatrix, DVector};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

/// Dense complex matrix, the carrier type for all operators.
pub type CMatrix = DMatrix<Complex<f64>>;

/// Hermiticity tolerance: max |A - A^H| entry, absolute (entries are O(1)).
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Eigenvalue zero-tolerance for support/kernel decisions.
pub const EIG_TOL: f64 = 1e-9;
/// Tolerance on |trace - 1| for density operators.
pub const TRACE_TOL: f64 = 1e-9;

#[inline]
pub fn c64(re: f64, im: f64) -> Complex<f64> {
    Complex::new(re, im)
}

/// Max-entry deviation from Hermiticity, max_ij |A_ij - conj(A_ji)|.
pub fn hermitian_defect(m: &CMatrix) -> f64 {
    let mut worst = 0.0_f64;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

/// Real part of the trace (the imaginary part of a Hermitian trace is noise).
pub fn trace_re(m: &CMatrix) -> f64 {
    (0..m.nrows().min(m.ncols())).map(|i| m[(i, i)].re).sum()
}

/// Eigendecomposition of a Hermitian matrix: eigenvalues ascending, columns
/// of the returned matrix are the matching orthonormal eigenvectors.
///
/// Uses cyclic Jacobi rotations rather than tridiagonalization + QR: every
/// step is an exact unitary similarity, so the returned vectors always pair
/// correctly with the returned values (residuals stay at machine scale even
/// when the spectrum mixes O(1) and O(1e-6) eigenvalues, a regime where QR
/// deflation can mislabel vectors), and accuracy on small eigenvalues is
/// better. Quadratic convergence makes the cost a non-issue at the small
/// dimensions used here.
pub fn eig_hermitian(m: &CMatrix) -> Result<(Vec<f64>, CMatrix)> {
    if m.nrows() != m.ncols() {
        return Err(Error::DimensionMismatch {
            left: m.nrows(),
            right: m.ncols(),
        });
    }
    let defect = hermitian_defect(m);
    if defect > HERMITIAN_TOL {
        return Err(Error::NonHermitian { defect });
    }
    // Work on the exactly-Hermitian average so round-off in the input cannot
    // leak into the iteration.
    let mut a = (m + m.adjoint()) * c64(0.5, 0.0);
    let n = m.nrows();
    let mut v = CMatrix::identity(n, n);

    let fro = a.norm();
    let tol_sq = (f64::EPSILON * fro).powi(2).max(f64::MIN_POSITIVE);
    let off_sq = |a: &CMatrix| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                s += a[(p, q)].norm_sqr();
            }
        }
        s
    };

    let mut sweeps = 0;
    while off_sq(&a) > tol_sq {
        sweeps += 1;
        if sweeps > 60 {
            return Err(Error::NoConvergence {
                context: format!("Hermitian Jacobi eigensolver, dim {n}"),
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let beta = a[(p, q)];
                let b = beta.norm();
                if b == 0.0 {
                    continue;
                }
                let alpha = a[(p, p)].re;
                let gamma = a[(q, q)].re;
                // Zero a_pq with the unitary [[c, -conj(s)], [s, c]] on the
                // (p, q) plane: c real, s = t*c*exp(-i arg(beta)), and t the
                // smaller-magnitude root of b t^2 - (gamma - alpha) t - b = 0
                // (the roots multiply to -1; taking the small one keeps the
                // rotation angle under 45 degrees, which is what makes cyclic
                // Jacobi converge).
                let theta = (gamma - alpha) / (2.0 * b);
                let t = if theta >= 0.0 {
                    -1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let x = t * c;
                let phase = beta / c64(b, 0.0);
                let s = phase.conj() * c64(x, 0.0);
                let s_bar = phase * c64(x, 0.0);

                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * c64(c, 0.0) + akq * s;
                    a[(k, q)] = akq * c64(c, 0.0) - akp * s_bar;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = apk * c64(c, 0.0) + aqk * s_bar;
                    a[(q, k)] = aqk * c64(c, 0.0) - apk * s;
                }
                // The rotated 2x2 block is known exactly; writing it removes
                // the round-off residue the generic update leaves behind.
                a[(p, p)] = c64(alpha * c * c + gamma * x * x + 2.0 * b * x * c, 0.0);
                a[(q, q)] = c64(alpha * x * x + gamma * c * c - 2.0 * b * x * c, 0.0);
                a[(p, q)] = c64(0.0, 0.0);
                a[(q, p)] = c64(0.0, 0.0);

                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * c64(c, 0.0) + vkq * s;
                    v[(k, q)] = vkq * c64(c, 0.0) - vkp * s_bar;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut vectors = CMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &v.column(src));
    }
    Ok((values, vectors))
}

/// Rebuild V diag(values) V^H.
pub fn from_spectrum(values: &[f64], vectors: &CMatrix) -> CMatrix {
    let d = DVector::from_iterator(values.len(), values.iter().map(|&v| c64(v, 0.0)));
    vectors * DMatrix::from_diagonal(&d) * vectors.adjoint()
}

// ---------------------------------------------------------------------------
// Density operators
// ---------------------------------------------------------------------------

/// A validated density operator: Hermitian, unit trace, positive semidefinite
/// (eigenvalues within -1e-9 are clamped to zero and the spectrum
/// renormalized). Carries its eigendecomposition.
#[derive(Debug, Clone)]
pub struct DensityOperator {
    matrix: CMatrix,
    eigenvalues: Vec<f64>, // ascending
    eigenvectors: CMatrix, // columns, matching order
}

impl DensityOperator {
    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Orthonormal eigenvectors as columns, ordered like `eigenvalues`.
    pub fn eigenvectors(&self) -> &CMatrix {
        &self.eigenvectors
    }

    /// Rank with respect to the `tol` eigenvalue cutoff.
    pub fn rank(&self, tol: f64) -> usize {
        self.eigenvalues.iter().filter(|&&v| v > tol).count()
    }
}

/// Validate a raw matrix as a density operator.
///
/// Checks Hermiticity (1e-12), positivity (eigenvalues >= -1e-9; small
/// negatives are clamped to 0) and unit trace (1e-9). The matrix is stored
/// exactly as given — so a parse/serialize round trip is bit-faithful —
/// while the cached spectrum is the clamped, renormalized one.
pub fn validate_density(m: &CMatrix) -> Result<DensityOperator> {
    let (values, vectors) = eig_hermitian(m)?;
    let min_eig = values.first().copied().unwrap_or(0.0);
    if min_eig < -EIG_TOL {
        return Err(Error::NotPositive { min_eig });
    }
    let trace = trace_re(m);
    if (trace - 1.0).abs() > TRACE_TOL {
        return Err(Error::BadTrace { trace });
    }
    let clamped: Vec<f64> = values.iter().map(|&v| v.max(0.0)).collect();
    let sum: f64 = clamped.iter().sum();
    // sum >= trace - d*EIG_TOL > 0 here
    let renorm: Vec<f64> = clamped.iter().map(|&v| v / sum).collect();
    Ok(DensityOperator {
        matrix: m.clone(),
        eigenvalues: renorm,
        eigenvectors: vectors,
    })
}

// ---------------------------------------------------------------------------
// Projectors
// ---------------------------------------------------------------------------

/// An orthogonal projector with its rank.
#[derive(Debug, Clone)]
pub struct Projector {
    matrix: CMatrix,
    rank: usize,
}

impl Projector {
    pub fn zero(dim: usize) -> Self {
        Projector {
            matrix: CMatrix::zeros(dim, dim),
            rank: 0,
        }
    }

    pub fn identity(dim: usize) -> Self {
        Projector {
            matrix: CMatrix::identity(dim, dim),
            rank: dim,
        }
    }

    /// Projector onto the span of the given orthonormal columns.
    pub fn from_orthonormal_columns(dim: usize, cols: &[DVector<Complex<f64>>]) -> Self {
        let mut m = CMatrix::zeros(dim, dim);
        for v in cols {
            m += v * v.adjoint();
        }
        Projector {
            matrix: m,
            rank: cols.len(),
        }
    }

    /// Validate an arbitrary matrix as a projector (Hermitian, idempotent to
    /// 1e-9, trace within 1e-9 of an integer).
    pub fn from_matrix(m: CMatrix) -> Result<Self> {
        let defect = hermitian_defect(&m);
        if defect > 1e-9 {
            return Err(Error::NonHermitian { defect });
        }
        let idem = (&m * &m - &m).iter().map(|z| z.norm()).fold(0.0, f64::max);
        if idem > 1e-9 {
            return Err(Error::DomainError {
                what: format!("matrix is not idempotent: max |P^2 - P| = {idem:.3e}"),
            });
        }
        let tr = trace_re(&m);
        let rank = tr.round();
        if (tr - rank).abs() > 1e-9 || rank < 0.0 {
            return Err(Error::DomainError {
                what: format!("projector trace {tr} is not a non-negative integer"),
            });
        }
        Ok(Projector {
            matrix: m,
            rank: rank as usize,
        })
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// The complementary projector I - P.
    pub fn complement(&self) -> Self {
        Projector {
            matrix: CMatrix::identity(self.dim(), self.dim()) - &self.matrix,
            rank: self.dim() - self.rank,
        }
    }
}

/// Split a Hermitian matrix into spectral projectors onto its positive
/// (eigenvalue > tol), negative (< -tol) and near-zero (|eigenvalue| <= tol)
/// eigenspaces. The three projectors sum to the identity.
pub fn spectral_split(m: &CMatrix, tol: f64) -> Result<(Projector, Projector, Projector)> {
    let (values, vectors) = eig_hermitian(m)?;
    let dim = m.nrows();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut zero = Vec::new();
    for (i, &v) in values.iter().enumerate() {
        let col = vectors.column(i).into_owned();
        if v > tol {
            pos.push(col);
        } else if v < -tol {
            neg.push(col);
        } else {
            zero.push(col);
        }
    }
    Ok((
        Projector::from_orthonormal_columns(dim, &pos),
        Projector::from_orthonormal_columns(dim, &neg),
        Projector::from_orthonormal_columns(dim, &zero),
    ))
}

/// Projector onto the support (eigenvalue > tol eigenspace) of a state.
pub fn support_projector(rho: &DensityOperator, tol: f64) -> Projector {
    let dim = rho.dim();
    let cols: Vec<_> = rho
        .eigenvalues
        .iter()
        .enumerate()
        .filter(|&(_, &v)| v > tol)
        .map(|(i, _)| rho.eigenvectors.column(i).into_owned())
        .collect();
    Projector::from_orthonormal_columns(dim, &cols)
}

/// Projector onto the kernel of a state: I - support.
pub fn kernel_projector(rho: &DensityOperator, tol: f64) -> Projector {
    support_projector(rho, tol).complement()
}

// ---------------------------------------------------------------------------
// Distance and fidelity
// ---------------------------------------------------------------------------

fn check_same_dim(a: &DensityOperator, b: &DensityOperator) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    Ok(())
}

/// Trace distance (1/2)*tr|a - b|, in [0, 1].
pub fn trace_distance(a: &DensityOperator, b: &DensityOperator) -> Result<f64> {
    check_same_dim(a, b)?;
    let (values, _) = eig_hermitian(&(a.matrix() - b.matrix()))?;
    Ok(0.5 * values.iter().map(|v| v.abs()).sum::<f64>())
}

/// Uhlmann fidelity F = (tr sqrt(sqrt(a) b sqrt(a)))^2, in [0, 1].
pub fn fidelity(a: &DensityOperator, b: &DensityOperator) -> Result<f64> {
    check_same_dim(a, b)?;
    let ra = sqrt_of_state(a);
    let inner = &ra * b.matrix() * &ra;
    // inner is PSD up to round-off. The square root turns spectrum dust of
    // size eps into sqrt(eps) — far above eps — so eigenvalues at round-off
    // scale must be zeroed, not merely clamped, before the root.
    let (values, _) = eig_hermitian(&inner)?;
    let cutoff = spectrum_dust_cutoff(&values);
    let root_trace: f64 = values
        .iter()
        .map(|&v| if v <= cutoff { 0.0 } else { v.sqrt() })
        .sum();
    Ok((root_trace * root_trace).min(1.0))
}

/// Threshold below which an eigenvalue of a nominally-PSD matrix is
/// numerical noise: a small multiple of eps times the spectral radius.
fn spectrum_dust_cutoff(values: &[f64]) -> f64 {
    let scale = values.iter().fold(0.0_f64, |m, &v| m.max(v.abs()));
    scale * f64::EPSILON * (values.len() as f64)
}

/// Square root from the cached (already clamped) spectrum of a state.
fn sqrt_of_state(rho: &DensityOperator) -> CMatrix {
    let vals: Vec<f64> = rho.eigenvalues.iter().map(|&v| v.sqrt()).collect();
    from_spectrum(&vals, &rho.eigenvectors)
}

/// Principal square root of a positive semidefinite Hermitian matrix via its
/// eigendecomposition (dimensions here are small, iterative methods buy
/// nothing). Eigenvalues in [-1e-9, 0) are treated as zero, and round-off
/// dust near zero is zeroed rather than square-rooted.
pub fn matrix_sqrt_psd(m: &CMatrix) -> Result<CMatrix> {
    let (values, vectors) = eig_hermitian(m)?;
    let min_eig = values.first().copied().unwrap_or(0.0);
    if min_eig < -EIG_TOL {
        return Err(Error::NotPositive { min_eig });
    }
    let cutoff = spectrum_dust_cutoff(&values);
    let roots: Vec<f64> = values
        .iter()
        .map(|&v| if v <= cutoff { 0.0 } else { v.sqrt() })
        .collect();
    Ok(from_spectrum(&roots, &vectors))
}

// ---------------------------------------------------------------------------
// Haar-random sampling
// ---------------------------------------------------------------------------

/// Complex matrix with i.i.d. standard complex Gaussian entries.
pub fn ginibre(rows: usize, cols: usize, rng: &mut impl Rng) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        c64(re, im)
    })
}

/// Haar-distributed random unitary: QR of a complex Gaussian matrix with the
/// R diagonal's phases folded into Q (Mezzadri's correction; without it the
/// QR convention biases the distribution).
pub fn haar_unitary(dim: usize, rng: &mut impl Rng) -> CMatrix {
    let g = ginibre(dim, dim, rng);
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..dim {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { c64(1.0, 0.0) };
        for i in 0..dim {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// Haar-random rank-`rank` projector: span of the first `rank` columns of a
/// Haar-random unitary. Deterministic for a fixed seed.
pub fn haar_random_projector(dim: usize, rank: usize, seed: u64) -> Result<Projector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    haar_projector_with(dim, rank, &mut rng)
}

/// Same as [`haar_random_projector`] but drawing from a caller-owned stream.
pub fn haar_projector_with(dim: usize, rank: usize, rng: &mut impl Rng) -> Result<Projector> {
    if rank > dim {
        return Err(Error::RankOutOfRange { rank, dim });
    }
    if rank == 0 {
        return Ok(Projector::zero(dim));
    }
    if rank == dim {
        return Ok(Projector::identity(dim));
    }
    let u = haar_unitary(dim, rng);
    let cols: Vec<_> = (0..rank).map(|j| u.column(j).into_owned()).collect();
    Ok(Projector::from_orthonormal_columns(dim, &cols))
}

/// Random density operator of the given rank: G G^H / tr(G G^H) with G a
/// dim x rank complex Gaussian matrix (Hilbert-Schmidt-style ensemble).
pub fn random_density(dim: usize, rank: usize, seed: u64) -> Result<DensityOperator> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_density_with(dim, rank, &mut rng)
}

/// Same as [`random_density`] from a caller-owned stream.
pub fn random_density_with(dim: usize, rank: usize, rng: &mut impl Rng) -> Result<DensityOperator> {
    if rank == 0 || rank > dim {
        return Err(Error::RankOutOfRange { rank, dim });
    }
    let g = ginibre(dim, rank, rng);
    let mut m = &g * g.adjoint();
    let tr = trace_re(&m);
    m /= c64(tr, 0.0);
    validate_density(&m)
}

// ---------------------------------------------------------------------------
// Kraus channels
// ---------------------------------------------------------------------------

/// A trace-preserving completely positive map given by Kraus operators
/// (all d_out x d_in), with sum K^H K = identity.
#[derive(Debug, Clone)]
pub struct KrausChannel {
    operators: Vec<CMatrix>,
    dim_in: usize,
    dim_out: usize,
}

impl KrausChannel {
    /// Validate a Kraus family: consistent shapes, completeness within 1e-9.
    pub fn new(operators: Vec<CMatrix>) -> Result<Self> {
        let first = operators.first().ok_or(Error::DomainError {
            what: "empty Kraus family".into(),
        })?;
        let (dim_out, dim_in) = (first.nrows(), first.ncols());
        for k in &operators {
            if k.nrows() != dim_out || k.ncols() != dim_in {
                return Err(Error::DimensionMismatch {
                    left: k.nrows(),
                    right: dim_out,
                });
            }
        }
        let mut sum = CMatrix::zeros(dim_in, dim_in);
        for k in &operators {
            sum += k.adjoint() * k;
        }
        let defect = (&sum - CMatrix::identity(dim_in, dim_in))
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        if defect > 1e-9 {
            return Err(Error::DomainError {
                what: format!("Kraus completeness violated: |sum K^H K - I| = {defect:.3e}"),
            });
        }
        Ok(KrausChannel {
            operators,
            dim_in,
            dim_out,
        })
    }

    pub fn identity(dim: usize) -> Self {
        KrausChannel {
            operators: vec![CMatrix::identity(dim, dim)],
            dim_in: dim,
            dim_out: dim,
        }
    }

    /// Fully depolarizing channel to I/d (Kraus family of scaled basis units).
    pub fn depolarizing_to_mixed(dim: usize) -> Self {
        let scale = c64(1.0 / (dim as f64).sqrt(), 0.0);
        let mut ops = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let mut k = CMatrix::zeros(dim, dim);
                k[(i, j)] = scale;
                ops.push(k);
            }
        }
        KrausChannel {
            operators: ops,
            dim_in: dim,
            dim_out: dim,
        }
    }

    pub fn operators(&self) -> &[CMatrix] {
        &self.operators
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }
}

/// Apply a channel in the Schroedinger picture: sum_k K rho K^H, revalidated.
pub fn apply_channel(ch: &KrausChannel, rho: &DensityOperator) -> Result<DensityOperator> {
    if ch.dim_in != rho.dim() {
        return Err(Error::DimensionMismatch {
            left: ch.dim_in,
            right: rho.dim(),
        });
    }
    let mut out = CMatrix::zeros(ch.dim_out, ch.dim_out);
    for k in &ch.operators {
        out += k * rho.matrix() * k.adjoint();
    }
    validate_density(&out)
}

/// Random CPTP channel with `kraus_count` Kraus operators, dim -> dim:
/// the blocks of a Haar-style random isometry C^dim -> C^(dim*kraus_count).
pub fn random_kraus_channel(dim: usize, kraus_count: usize, seed: u64) -> Result<KrausChannel> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_kraus_channel_with(dim, kraus_count, &mut rng)
}

/// Same as [`random_kraus_channel`] from a caller-owned stream.
pub fn random_kraus_channel_with(
    dim: usize,
    kraus_count: usize,
    rng: &mut impl Rng,
) -> Result<KrausChannel> {
    if kraus_count == 0 {
        return Err(Error::OutOfRange {
            name: "kraus_count",
            value: 0.0,
        });
    }
    // QR of a tall Gaussian matrix gives an isometry V (V^H V = I); its
    // dim x dim row blocks are automatically a complete Kraus family.
    let tall = ginibre(dim * kraus_count, dim, rng);
    let qr = tall.qr();
    let v = qr.q(); // (dim*kraus_count) x dim, orthonormal columns
    let ops: Vec<CMatrix> = (0..kraus_count)
        .map(|b| v.rows(b * dim, dim).into_owned())
        .collect();
    KrausChannel::new(ops)
}
