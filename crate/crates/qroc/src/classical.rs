//! Classical ROC analysis for a pair of finite probability distributions:
//! classifier points, the binary feasible parallelogram, the optimal curve by
//! likelihood-ratio ordering, iso-failure lines, and the Bhattacharyya
//! coefficient as a Minkowski arc length.
//!
//! Conventions: `tp` (true positive rate) is the probability of concluding
//! "positive" under the positive hypothesis, `fp` the same probability under
//! the negative hypothesis. ROC points are plotted as (fp, tp).

use crate::error::{Error, Result};

/// A finite probability distribution (entries >= 0, summing to 1).
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    probs: Vec<f64>,
}

impl Distribution {
    /// Validate a probability vector: length >= 2, entries >= 0 (round-off
    /// negatives above -1e-12 are clamped), sum within 1e-12 of 1.
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.len() < 2 {
            return Err(Error::InvalidDistribution {
                reason: format!("need at least 2 outcomes, got {}", probs.len()),
            });
        }
        let mut clean = probs;
        for p in &mut clean {
            if *p < 0.0 {
                if *p < -1e-12 {
                    return Err(Error::InvalidDistribution {
                        reason: format!("negative probability {p}"),
                    });
                }
                *p = 0.0;
            }
        }
        let sum: f64 = clean.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidDistribution {
                reason: format!("probabilities sum to {sum}, not 1"),
            });
        }
        Ok(Distribution { probs: clean })
    }

    /// The two-outcome distribution (p, 1-p).
    pub fn binary(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::OutOfRange { name: "p", value: p });
        }
        Ok(Distribution { probs: vec![p, 1.0 - p] })
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }
}

/// A point in ROC space, coordinates in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RocPoint {
    pub fp: f64,
    pub tp: f64,
}

impl RocPoint {
    /// Validating constructor: rejects coordinates outside [0,1] by more than
    /// 1e-9, clamps round-off overshoot into the unit square.
    pub fn new(fp: f64, tp: f64) -> Result<Self> {
        for (name, v) in [("fp", fp), ("tp", tp)] {
            if !(-1e-9..=1.0 + 1e-9).contains(&v) {
                return Err(Error::OutOfRange { name, value: v });
            }
        }
        Ok(Self::clamped(fp, tp))
    }

    /// Clamp both coordinates into [0, 1].
    pub fn clamped(fp: f64, tp: f64) -> Self {
        RocPoint {
            fp: fp.clamp(0.0, 1.0),
            tp: tp.clamp(0.0, 1.0),
        }
    }

    /// The point reached by negating the classifier's conclusion:
    /// (fp, tp) -> (1-fp, 1-tp). Exact, so symmetry tests can require
    /// bitwise-faithful pairing.
    pub fn complement(&self) -> Self {
        RocPoint {
            fp: 1.0 - self.fp,
            tp: 1.0 - self.tp,
        }
    }

    pub fn as_tuple(&self) -> (f64, f64) {
        (self.fp, self.tp)
    }
}

/// A monotone ROC curve from (0,0) to (1,1).
#[derive(Debug, Clone)]
pub struct RocCurve {
    points: Vec<RocPoint>,
}

impl RocCurve {
    /// Validate endpoint and monotonicity invariants (1e-12 on endpoints).
    pub fn new(points: Vec<RocPoint>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::DomainError {
                what: "ROC curve needs at least two points".into(),
            });
        }
        let first = points.first().unwrap();
        let last = points.last().unwrap();
        if first.fp.abs() > 1e-12 || first.tp.abs() > 1e-12 {
            return Err(Error::DomainError {
                what: format!("ROC curve must start at (0,0), got ({}, {})", first.fp, first.tp),
            });
        }
        if (last.fp - 1.0).abs() > 1e-12 || (last.tp - 1.0).abs() > 1e-12 {
            return Err(Error::DomainError {
                what: format!("ROC curve must end at (1,1), got ({}, {})", last.fp, last.tp),
            });
        }
        for w in points.windows(2) {
            if w[1].fp < w[0].fp - 1e-12 || w[1].tp < w[0].tp - 1e-12 {
                return Err(Error::DomainError {
                    what: "ROC curve coordinates must be non-decreasing".into(),
                });
            }
        }
        Ok(RocCurve { points })
    }

    pub fn points(&self) -> &[RocPoint] {
        &self.points
    }

    /// Slopes between consecutive distinct points are non-increasing
    /// (optimal curves are concave).
    pub fn is_concave(&self, tol: f64) -> bool {
        let mut prev_slope = f64::INFINITY;
        for w in self.points.windows(2) {
            let dx = w[1].fp - w[0].fp;
            let dy = w[1].tp - w[0].tp;
            if dx.abs() <= 1e-15 && dy.abs() <= 1e-15 {
                continue;
            }
            let slope = if dx.abs() <= 1e-15 { f64::INFINITY } else { dy / dx };
            if slope > prev_slope + tol {
                return false;
            }
            if slope != f64::INFINITY || prev_slope != f64::INFINITY {
                prev_slope = slope;
            }
        }
        true
    }
}

/// A randomized binary classifier for two-outcome variables, given by its
/// acceptance probabilities on each outcome.
#[derive(Debug, Clone, Copy)]
pub struct BinaryClassifier {
    pa_p: f64,
    pa_n: f64,
}

impl BinaryClassifier {
    pub fn new(pa_p: f64, pa_n: f64) -> Result<Self> {
        for (name, v) in [("pa_p", pa_p), ("pa_n", pa_n)] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::OutOfRange { name, value: v });
            }
        }
        Ok(BinaryClassifier { pa_p, pa_n })
    }

    pub fn pa_p(&self) -> f64 {
        self.pa_p
    }

    pub fn pa_n(&self) -> f64 {
        self.pa_n
    }

    /// The same classifier under the complementary indicator labeling
    /// (acceptance read on the other outcome): (pa_p, pa_n) -> (1-pa_p, 1-pa_n).
    ///
    /// Both labeling conventions appear in the literature; under this one the
    /// all-zero classifier lands on (q, p) instead of (1-q, 1-p).
    pub fn complementary(&self) -> Self {
        BinaryClassifier {
            pa_p: 1.0 - self.pa_p,
            pa_n: 1.0 - self.pa_n,
        }
    }
}

/// ROC point of a randomized classifier on binary distributions (p, 1-p),
/// (q, 1-q):
/// tp = pa_p*p + (1-pa_n)*(1-p), fp = pa_p*q + (1-pa_n)*(1-q).
pub fn classifier_point(p: f64, q: f64, c: &BinaryClassifier) -> Result<RocPoint> {
    for (name, v) in [("p", p), ("q", q)] {
        if !(0.0..=1.0).contains(&v) {
            return Err(Error::OutOfRange { name, value: v });
        }
    }
    let tp = c.pa_p * p + (1.0 - c.pa_n) * (1.0 - p);
    let fp = c.pa_p * q + (1.0 - c.pa_n) * (1.0 - q);
    RocPoint::new(fp, tp)
}

/// The feasible ROC region for binary distributions: the parallelogram with
/// vertices (0,0), (q,p), (1,1), (1-q,1-p), returned in that order.
///
/// (That order matches the canonical listing; it is counterclockwise when the
/// vertical axis points down, as in SVG screen coordinates.)
pub fn feasible_region_binary(p: f64, q: f64) -> Result<[RocPoint; 4]> {
    for (name, v) in [("p", p), ("q", q)] {
        if !(0.0..=1.0).contains(&v) {
            return Err(Error::OutOfRange { name, value: v });
        }
        if v == 0.0 || v == 1.0 {
            return Err(Error::DegenerateDistribution { value: v });
        }
    }
    Ok([
        RocPoint { fp: 0.0, tp: 0.0 },
        RocPoint { fp: q, tp: p },
        RocPoint { fp: 1.0, tp: 1.0 },
        RocPoint { fp: 1.0 - q, tp: 1.0 - p },
    ])
}

/// The optimal ROC curve: cumulative sums of (Q, P) with outcomes taken in
/// descending likelihood-ratio p_i/q_i order. Outcomes with q_i = 0 sort
/// first (infinite ratio), outcomes with p_i = q_i = 0 are dropped, and ties
/// are merged into a single segment.
pub fn optimal_roc(p: &Distribution, q: &Distribution) -> Result<RocCurve> {
    if p.len() != q.len() {
        return Err(Error::DimensionMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    let mut pairs: Vec<(f64, f64)> = p
        .probs()
        .iter()
        .zip(q.probs())
        .map(|(&pi, &qi)| (pi, qi))
        .filter(|&(pi, qi)| pi > 0.0 || qi > 0.0)
        .collect();
    // descending p/q; cross-multiplied comparison handles q = 0 cleanly
    pairs.sort_by(|a, b| (b.0 * a.1).total_cmp(&(a.0 * b.1)));
    // merge equal-ratio neighbors
    let mut merged: Vec<(f64, f64)> = Vec::with_capacity(pairs.len());
    for (pi, qi) in pairs {
        if let Some(last) = merged.last_mut() {
            if (pi * last.1 - last.0 * qi).abs() <= 1e-12 {
                last.0 += pi;
                last.1 += qi;
                continue;
            }
        }
        merged.push((pi, qi));
    }
    let mut points = Vec::with_capacity(merged.len() + 1);
    points.push(RocPoint { fp: 0.0, tp: 0.0 });
    let (mut cum_p, mut cum_q) = (0.0, 0.0);
    for (pi, qi) in merged {
        cum_p += pi;
        cum_q += qi;
        points.push(RocPoint::clamped(cum_q, cum_p));
    }
    // cumulative round-off can miss (1,1) by ~1e-16; pin the endpoint
    if let Some(last) = points.last_mut() {
        debug_assert!((last.fp - 1.0).abs() < 1e-12 && (last.tp - 1.0).abs() < 1e-12);
        *last = RocPoint { fp: 1.0, tp: 1.0 };
    }
    RocCurve::new(points)
}

/// Bhattacharyya coefficient sum_k sqrt(p_k q_k), in [0, 1].
pub fn bhattacharyya(p: &Distribution, q: &Distribution) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::DimensionMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    Ok(p.probs()
        .iter()
        .zip(q.probs())
        .map(|(&pi, &qi)| (pi * qi).sqrt())
        .sum())
}

/// Minkowski length of one segment: sqrt(dTP * dFP), with round-off-negative
/// products clamped to zero. (In the (s,t) = ((tp+fp)/2, (tp-fp)/2) chart the
/// metric is ds^2 - dt^2; the product form is algebraically identical and
/// avoids the cancellation.)
pub fn minkowski_segment(a: &RocPoint, b: &RocPoint) -> f64 {
    ((b.tp - a.tp) * (b.fp - a.fp)).max(0.0).sqrt()
}

/// Minkowski length of a polyline in ROC space: sum of sqrt(dTP * dFP) over
/// segments. Equals the Bhattacharyya coefficient on optimal curves.
pub fn minkowski_length(curve: &RocCurve) -> f64 {
    curve
        .points()
        .windows(2)
        .map(|w| minkowski_segment(&w[0], &w[1]))
        .sum()
}

/// The line of constant failure probability in ROC space for prior `lambda`:
/// TP = intercept + slope*FP with intercept = (lambda - p_fail)/lambda and
/// slope = (1 - lambda)/lambda.
pub fn iso_failure_line(lambda: f64, p_fail: f64) -> Result<(f64, f64)> {
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::OutOfRange {
            name: "lambda",
            value: lambda,
        });
    }
    Ok(((lambda - p_fail) / lambda, (1.0 - lambda) / lambda))
}

/// Overall failure probability of the discriminator at a ROC point, with
/// prior weight `lambda` on the positive hypothesis:
/// (1-lambda)*fp + lambda*(1-tp). `lambda` must lie in [0, 1].
pub fn failure_probability(pt: &RocPoint, lambda: f64) -> f64 {
    assert!(
        (0.0..=1.0).contains(&lambda),
        "prior lambda must lie in [0,1], got {lambda}"
    );
    (1.0 - lambda) * pt.fp + lambda * (1.0 - pt.tp)
}
