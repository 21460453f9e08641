//! Unambiguous discrimination of two arbitrary states: a three-outcome
//! measurement that never misidentifies, at the price of an inconclusive
//! outcome. Conclusive effects are weighted kernel projectors, so a positive
//! verdict is possible exactly when the other state's kernel carries some of
//! this state's weight.

use crate::error::{Error, Result};
use crate::hermitian::{
    c64, eig_hermitian, kernel_projector, trace_re, CMatrix, DensityOperator, Projector, EIG_TOL,
};

/// A three-outcome POVM {conclusively positive, conclusively negative,
/// inconclusive} built for one specific state pair. The conclusive effects
/// are lambda1 * K_N and lambda2 * K_P (kernel projectors of the opposite
/// state), which guarantees zero false conclusives on that pair.
#[derive(Debug, Clone)]
pub struct UnambiguousPovm {
    m_p: CMatrix,
    m_n: CMatrix,
    m_inconclusive: CMatrix,
    lambda1: f64,
    lambda2: f64,
}

impl UnambiguousPovm {
    /// Effect announcing "certainly the positive state".
    pub fn m_p(&self) -> &CMatrix {
        &self.m_p
    }

    /// Effect announcing "certainly the negative state".
    pub fn m_n(&self) -> &CMatrix {
        &self.m_n
    }

    /// Effect announcing "no verdict".
    pub fn m_inconclusive(&self) -> &CMatrix {
        &self.m_inconclusive
    }

    /// Weight on the positive-conclusive projector.
    pub fn lambda1(&self) -> f64 {
        self.lambda1
    }

    /// Weight on the negative-conclusive projector.
    pub fn lambda2(&self) -> f64 {
        self.lambda2
    }

    /// Hilbert-space dimension the effects act on.
    pub fn dim(&self) -> usize {
        self.m_p.nrows()
    }
}

/// Whether each state can ever be identified with certainty against the
/// other, plus the kernel ranks the verdicts are read from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FeasibilityReport {
    /// Some of rho_p's weight lies in rho_n's kernel.
    pub can_detect_p: bool,
    /// Some of rho_n's weight lies in rho_p's kernel.
    pub can_detect_n: bool,
    /// Dimension of rho_p's kernel (detects the negative state).
    pub kernel_rank_p: usize,
    /// Dimension of rho_n's kernel (detects the positive state).
    pub kernel_rank_n: usize,
}

/// Test both conclusive directions: the positive state is detectable iff
/// tr(K_N rho_p) > tol, where K_N projects onto the kernel of rho_n, and
/// symmetrically. States with fully overlapping supports fail both ways.
pub fn feasibility(
    rho_p: &DensityOperator,
    rho_n: &DensityOperator,
    tol: f64,
) -> Result<FeasibilityReport> {
    if rho_p.dim() != rho_n.dim() {
        return Err(Error::DimensionMismatch {
            left: rho_p.dim(),
            right: rho_n.dim(),
        });
    }
    let kernel_p = kernel_projector(rho_p, EIG_TOL);
    let kernel_n = kernel_projector(rho_n, EIG_TOL);
    Ok(FeasibilityReport {
        can_detect_p: kernel_weight(&kernel_n, rho_p) > tol,
        can_detect_n: kernel_weight(&kernel_p, rho_n) > tol,
        kernel_rank_p: kernel_p.rank(),
        kernel_rank_n: kernel_n.rank(),
    })
}

/// Probability weight a state places in a (kernel) projector's range.
fn kernel_weight(kernel: &Projector, rho: &DensityOperator) -> f64 {
    trace_re(&(kernel.matrix() * rho.matrix()))
}

/// Build the three-outcome POVM with conclusive weights lambda1, lambda2 in
/// [0, 1]. Each weighted direction must be feasible, and the weighted kernel
/// sum must stay below the identity (its slack's smallest eigenvalue is
/// checked against -1e-10); lambda1 = lambda2 = 1/2 always satisfies that.
pub fn build_povm(
    rho_p: &DensityOperator,
    rho_n: &DensityOperator,
    lambda1: f64,
    lambda2: f64,
) -> Result<UnambiguousPovm> {
    if rho_p.dim() != rho_n.dim() {
        return Err(Error::DimensionMismatch {
            left: rho_p.dim(),
            right: rho_n.dim(),
        });
    }
    for (name, value) in [("lambda1", lambda1), ("lambda2", lambda2)] {
        if !(0.0..=1.0).contains(&value) {
            return Err(Error::OutOfRange { name, value });
        }
    }
    let kernel_p = kernel_projector(rho_p, EIG_TOL);
    let kernel_n = kernel_projector(rho_n, EIG_TOL);
    if lambda1 > 0.0 && kernel_weight(&kernel_n, rho_p) <= EIG_TOL {
        return Err(Error::InfeasiblePair {
            direction: "positive state never conclusive (kernel of the negative state carries \
                        none of its weight)"
                .into(),
        });
    }
    if lambda2 > 0.0 && kernel_weight(&kernel_p, rho_n) <= EIG_TOL {
        return Err(Error::InfeasiblePair {
            direction: "negative state never conclusive (kernel of the positive state carries \
                        none of its weight)"
                .into(),
        });
    }

    let dim = rho_p.dim();
    let m_p = kernel_n.matrix() * c64(lambda1, 0.0);
    let m_n = kernel_p.matrix() * c64(lambda2, 0.0);
    let m_inconclusive = CMatrix::identity(dim, dim) - &m_p - &m_n;
    let (slack_eigs, _) = eig_hermitian(&m_inconclusive)?;
    if slack_eigs[0] < -1e-10 {
        return Err(Error::EffectSumExceedsIdentity {
            min_eig: slack_eigs[0],
        });
    }
    Ok(UnambiguousPovm {
        m_p,
        m_n,
        m_inconclusive,
        lambda1,
        lambda2,
    })
}

/// Conclusive and inconclusive rates of the POVM on a state pair:
/// (succ_p, succ_n, inconclusive_p, inconclusive_n). On the pair the POVM
/// was built for, false conclusives vanish, so each state's success and
/// inconclusive rates sum to one.
pub fn success_rates(
    povm: &UnambiguousPovm,
    rho_p: &DensityOperator,
    rho_n: &DensityOperator,
) -> Result<(f64, f64, f64, f64)> {
    if povm.dim() != rho_p.dim() || rho_p.dim() != rho_n.dim() {
        return Err(Error::DimensionMismatch {
            left: povm.dim(),
            right: rho_p.dim().max(rho_n.dim()),
        });
    }
    Ok((
        trace_re(&(povm.m_p() * rho_p.matrix())),
        trace_re(&(povm.m_n() * rho_n.matrix())),
        trace_re(&(povm.m_inconclusive() * rho_p.matrix())),
        trace_re(&(povm.m_inconclusive() * rho_n.matrix())),
    ))
}

/// Largest lambda1 that keeps lambda1 * K_N + lambda2 * K_P below the
/// identity for a fixed lambda2, found by bisection on the slack's smallest
/// eigenvalue. lambda1 = 0 is always admissible, so the bracket is sound.
pub fn max_lambda1(
    rho_p: &DensityOperator,
    rho_n: &DensityOperator,
    lambda2: f64,
) -> Result<f64> {
    if rho_p.dim() != rho_n.dim() {
        return Err(Error::DimensionMismatch {
            left: rho_p.dim(),
            right: rho_n.dim(),
        });
    }
    if !(0.0..=1.0).contains(&lambda2) {
        return Err(Error::OutOfRange {
            name: "lambda2",
            value: lambda2,
        });
    }
    let kernel_p = kernel_projector(rho_p, EIG_TOL);
    let kernel_n = kernel_projector(rho_n, EIG_TOL);
    let dim = rho_p.dim();
    let slack_min = |lambda1: f64| -> Result<f64> {
        let slack = CMatrix::identity(dim, dim)
            - kernel_n.matrix() * c64(lambda1, 0.0)
            - kernel_p.matrix() * c64(lambda2, 0.0);
        Ok(eig_hermitian(&slack)?.0[0])
    };
    if slack_min(1.0)? >= 0.0 {
        return Ok(1.0);
    }
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if slack_min(mid)? >= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::{hermitian_defect, random_density, validate_density};
    use crate::quantum::{pure_state, roc_point, TwoOutcomeMeasurement};
    use std::f64::consts::{FRAC_PI_2, PI};

    fn fixture_pair() -> (DensityOperator, DensityOperator) {
        // |psi> = (sqrt(.5), 0, sqrt(.5)); rho_n = diag(0.6, 0.4, 0).
        // ker rho_n = e3 axis, so tr(K_N rho_p) = |<e3|psi>|^2 = 0.5;
        // tr(K_P rho_n) = 1 - <psi|rho_n|psi> = 1 - 0.3 = 0.7.
        let a = 0.5_f64.sqrt();
        let psi = [a, 0.0, a];
        let rho_p = validate_density(&CMatrix::from_fn(3, 3, |i, j| {
            c64(psi[i] * psi[j], 0.0)
        }))
        .unwrap();
        let rho_n = validate_density(&CMatrix::from_fn(3, 3, |i, j| {
            if i == j {
                c64([0.6, 0.4, 0.0][i], 0.0)
            } else {
                c64(0.0, 0.0)
            }
        }))
        .unwrap();
        (rho_p, rho_n)
    }

    fn assert_povm_valid(povm: &UnambiguousPovm, rho_p: &DensityOperator, rho_n: &DensityOperator) {
        let dim = povm.dim();
        let mut sum = CMatrix::zeros(dim, dim);
        for effect in [povm.m_p(), povm.m_n(), povm.m_inconclusive()] {
            assert!(hermitian_defect(effect) < 1e-9);
            let (eigs, _) = eig_hermitian(effect).unwrap();
            assert!(eigs[0] > -1e-9, "effect has eigenvalue {}", eigs[0]);
            sum += effect;
        }
        let defect = (&sum - CMatrix::identity(dim, dim))
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max);
        assert!(defect < 1e-10, "effects sum off identity by {defect}");
        // zero false conclusives on the pair it was built for
        assert!(trace_re(&(povm.m_p() * rho_n.matrix())).abs() <= 1e-10);
        assert!(trace_re(&(povm.m_n() * rho_p.matrix())).abs() <= 1e-10);
    }

    #[test]
    fn feasibility_of_distinct_pure_states() {
        let report = feasibility(&pure_state(0.0), &pure_state(1.0), 1e-9).unwrap();
        assert!(report.can_detect_p && report.can_detect_n);
        assert_eq!(report.kernel_rank_p, 1);
        assert_eq!(report.kernel_rank_n, 1);
    }

    #[test]
    fn feasibility_of_full_rank_states_fails_both_ways() {
        let rho_p = random_density(3, 3, 7).unwrap();
        let rho_n = random_density(3, 3, 8).unwrap();
        let report = feasibility(&rho_p, &rho_n, 1e-9).unwrap();
        assert!(!report.can_detect_p && !report.can_detect_n);
        assert_eq!(report.kernel_rank_p, 0);
        assert_eq!(report.kernel_rank_n, 0);
    }

    #[test]
    fn feasibility_of_the_engineered_fixture() {
        let (rho_p, rho_n) = fixture_pair();
        let report = feasibility(&rho_p, &rho_n, 1e-9).unwrap();
        assert!(report.can_detect_p && report.can_detect_n);
        assert_eq!(report.kernel_rank_p, 2);
        assert_eq!(report.kernel_rank_n, 1);
    }

    #[test]
    fn one_sided_feasibility() {
        // rho_p pure along e1, rho_n full rank on span(e1, e2): the positive
        // state sits inside the negative support, so only N is detectable.
        let rho_p = validate_density(&CMatrix::from_fn(2, 2, |i, j| {
            if i == 0 && j == 0 {
                c64(1.0, 0.0)
            } else {
                c64(0.0, 0.0)
            }
        }))
        .unwrap();
        let rho_n = validate_density(&CMatrix::from_fn(2, 2, |i, j| {
            if i == j {
                c64(0.5, 0.0)
            } else {
                c64(0.0, 0.0)
            }
        }))
        .unwrap();
        let report = feasibility(&rho_p, &rho_n, 1e-9).unwrap();
        assert!(!report.can_detect_p);
        assert!(report.can_detect_n);
        assert!(matches!(
            build_povm(&rho_p, &rho_n, 0.5, 0.5),
            Err(Error::InfeasiblePair { .. })
        ));
        // dropping the infeasible direction makes the build legal
        let povm = build_povm(&rho_p, &rho_n, 0.0, 0.5).unwrap();
        assert_povm_valid(&povm, &rho_p, &rho_n);
    }

    #[test]
    fn fixture_povm_rates_at_half_weights() {
        let (rho_p, rho_n) = fixture_pair();
        let povm = build_povm(&rho_p, &rho_n, 0.5, 0.5).unwrap();
        assert_povm_valid(&povm, &rho_p, &rho_n);
        let (succ_p, succ_n, inc_p, inc_n) = success_rates(&povm, &rho_p, &rho_n).unwrap();
        assert!((succ_p - 0.25).abs() < 1e-12, "succ_p = {succ_p}");
        assert!((succ_n - 0.35).abs() < 1e-12, "succ_n = {succ_n}");
        assert!((succ_p + inc_p - 1.0).abs() < 1e-10);
        assert!((succ_n + inc_n - 1.0).abs() < 1e-10);
    }

    #[test]
    fn pure_pair_success_reads_the_overlap() {
        // overlap F = cos^2(theta/2) = 1/2; at half weights succ = (1-F)/2
        let rho_p = pure_state(0.0);
        let rho_n = pure_state(FRAC_PI_2);
        let povm = build_povm(&rho_p, &rho_n, 0.5, 0.5).unwrap();
        assert_povm_valid(&povm, &rho_p, &rho_n);
        let (succ_p, succ_n, _, _) = success_rates(&povm, &rho_p, &rho_n).unwrap();
        assert!((succ_p - 0.25).abs() < 1e-12);
        assert!((succ_n - 0.25).abs() < 1e-12);
    }

    #[test]
    fn orthogonal_pure_states_discriminate_perfectly() {
        let rho_p = pure_state(0.0);
        let rho_n = pure_state(PI);
        let povm = build_povm(&rho_p, &rho_n, 1.0, 1.0).unwrap();
        assert_povm_valid(&povm, &rho_p, &rho_n);
        let inc_norm = povm
            .m_inconclusive()
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max);
        assert!(inc_norm < 1e-10, "inconclusive effect survives: {inc_norm}");
        let (succ_p, succ_n, _, _) = success_rates(&povm, &rho_p, &rho_n).unwrap();
        assert!((succ_p - 1.0).abs() < 1e-12 && (succ_n - 1.0).abs() < 1e-12);
    }

    #[test]
    fn one_sided_weights_sit_on_the_tp_axis() {
        // lambda2 = 0 merges the negative-conclusive outcome into the
        // inconclusive one; the conclusive-vs-rest split has fp = 0 and
        // tp = 1 - F, the ROC square's left edge.
        let rho_p = pure_state(0.0);
        let rho_n = pure_state(FRAC_PI_2);
        let povm = build_povm(&rho_p, &rho_n, 1.0, 0.0).unwrap();
        assert_povm_valid(&povm, &rho_p, &rho_n);
        let split = TwoOutcomeMeasurement::from_effect(povm.m_p().clone()).unwrap();
        let pt = roc_point(&rho_p, &rho_n, &split).unwrap();
        assert!(pt.fp <= 1e-10, "fp = {}", pt.fp);
        assert!((pt.tp - 0.5).abs() < 1e-12, "tp = {}", pt.tp);
    }

    #[test]
    fn aggressive_weights_overflow_the_identity() {
        // two distinct pure qubits: both kernels are rank 1 and overlap, so
        // lambda1 = lambda2 = 1 pushes the kernel sum above the identity
        let rho_p = pure_state(0.0);
        let rho_n = pure_state(1.0);
        assert!(matches!(
            build_povm(&rho_p, &rho_n, 1.0, 1.0),
            Err(Error::EffectSumExceedsIdentity { .. })
        ));
        // half weights always fit
        assert!(build_povm(&rho_p, &rho_n, 0.5, 0.5).is_ok());
    }

    #[test]
    fn identical_states_are_infeasible() {
        let rho = random_density(2, 2, 4).unwrap();
        let report = feasibility(&rho, &rho, 1e-9).unwrap();
        assert!(!report.can_detect_p && !report.can_detect_n);
        assert!(matches!(
            build_povm(&rho, &rho, 0.5, 0.5),
            Err(Error::InfeasiblePair { .. })
        ));
    }

    #[test]
    fn success_is_linear_and_increasing_in_the_weights() {
        // the fixture kernels overlap non-orthogonally, so stay inside the
        // admissible polytope: at lambda2 = 0.25 the weighted kernel sum
        // fits under the identity for all lambda1 up to 1/2
        let (rho_p, rho_n) = fixture_pair();
        let mut last = -1.0;
        for i in 0..=4 {
            let lambda1 = i as f64 / 8.0;
            let povm = build_povm(&rho_p, &rho_n, lambda1, 0.25).unwrap();
            let (succ_p, succ_n, _, _) = success_rates(&povm, &rho_p, &rho_n).unwrap();
            assert!((succ_p - lambda1 * 0.5).abs() < 1e-12, "nonlinear in lambda1");
            assert!((succ_n - 0.25 * 0.7).abs() < 1e-12, "succ_n moved with lambda1");
            assert!(succ_p > last);
            last = succ_p;
        }
    }

    #[test]
    fn max_lambda1_saturates_the_identity() {
        // orthogonal kernels (e1 for rho_n, e3 for rho_p): full weight fits
        let diag = |entries: [f64; 3]| {
            validate_density(&CMatrix::from_fn(3, 3, |i, j| {
                if i == j {
                    c64(entries[i], 0.0)
                } else {
                    c64(0.0, 0.0)
                }
            }))
            .unwrap()
        };
        let rho_p = diag([0.5, 0.5, 0.0]);
        let rho_n = diag([0.0, 0.3, 0.7]);
        assert!((max_lambda1(&rho_p, &rho_n, 1.0).unwrap() - 1.0).abs() < 1e-12);

        // overlapping rank-1 kernels of a distinct pure pair: at lambda2
        // fixed, the slack eigenvalue crosses zero strictly inside (0, 1)
        let p = pure_state(0.0);
        let n = pure_state(1.0);
        let best = max_lambda1(&p, &n, 0.75).unwrap();
        assert!((0.0..1.0).contains(&best));
        assert!(build_povm(&p, &n, best, 0.75).is_ok());
        assert!(matches!(
            build_povm(&p, &n, (best + 2e-10).min(1.0), 0.75),
            Err(Error::EffectSumExceedsIdentity { .. })
        ));
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let rho2 = random_density(2, 2, 1).unwrap();
        let rho3 = random_density(3, 3, 2).unwrap();
        assert!(matches!(
            feasibility(&rho2, &rho3, 1e-9),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            build_povm(&rho2, &rho3, 0.5, 0.5),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
