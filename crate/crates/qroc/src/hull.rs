//! 2D convex hull (Andrew's monotone chain) over f64 points, with a
//! deduplication pass so near-identical samples don't destabilize the
//! collinearity test.

/// Cross product (b - a) x (c - a); positive for a counterclockwise turn.
#[inline]
pub fn cross(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> f64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

/// Deduplicate lexicographically sorted points: keep one representative per
/// cluster of points within `tol` in both coordinates.
fn dedup_sorted(points: &mut Vec<(f64, f64)>, tol: f64) {
    points.dedup_by(|next, kept| (next.0 - kept.0).abs() <= tol && (next.1 - kept.1).abs() <= tol);
}

/// Convex hull in counterclockwise order, starting from the lexicographically
/// smallest point. Collinear interior points are dropped. Input may contain
/// duplicates; points closer than `dedup_tol` are merged first.
pub fn convex_hull(points: &[(f64, f64)], dedup_tol: f64) -> Vec<(f64, f64)> {
    let mut pts: Vec<(f64, f64)> = points.to_vec();
    pts.sort_by(|a, b| a.partial_cmp(b).expect("finite coordinates"));
    dedup_sorted(&mut pts, dedup_tol);
    if pts.len() <= 2 {
        return pts;
    }

    // monotone chain: lower then upper
    let mut lower: Vec<(f64, f64)> = Vec::with_capacity(pts.len());
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(f64, f64)> = Vec::with_capacity(pts.len());
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// The chain of hull vertices running *above* the segment from the
/// lexicographically smallest to the largest point, endpoints included,
/// ordered by increasing x. For ROC clouds containing (0,0) and (1,1) this is
/// the optimal upper boundary.
pub fn upper_chain(points: &[(f64, f64)], dedup_tol: f64) -> Vec<(f64, f64)> {
    let mut pts: Vec<(f64, f64)> = points.to_vec();
    pts.sort_by(|a, b| a.partial_cmp(b).expect("finite coordinates"));
    dedup_sorted(&mut pts, dedup_tol);
    if pts.len() <= 2 {
        return pts;
    }
    let mut upper: Vec<(f64, f64)> = Vec::with_capacity(pts.len());
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    upper.reverse();
    upper
}

/// Check convexity of a counterclockwise polygon: every consecutive edge pair
/// turns left (cross >= -tol).
pub fn is_convex_ccw(polygon: &[(f64, f64)], tol: f64) -> bool {
    let n = polygon.len();
    if n < 3 {
        return true;
    }
    (0..n).all(|i| cross(polygon[i], polygon[(i + 1) % n], polygon[(i + 2) % n]) >= -tol)
}

/// Signed distance-free point-in-convex-polygon test (CCW polygon), with a
/// slack so boundary points pass.
pub fn contains_point(polygon: &[(f64, f64)], p: (f64, f64), tol: f64) -> bool {
    let n = polygon.len();
    if n < 3 {
        // degenerate polygon: accept only points on the segment/point
        return match n {
            0 => false,
            1 => (p.0 - polygon[0].0).abs() <= tol && (p.1 - polygon[0].1).abs() <= tol,
            _ => {
                let (a, b) = (polygon[0], polygon[1]);
                cross(a, b, p).abs() <= tol
                    && p.0 >= a.0.min(b.0) - tol
                    && p.0 <= a.0.max(b.0) + tol
                    && p.1 >= a.1.min(b.1) - tol
                    && p.1 <= a.1.max(b.1) + tol
            }
        };
    }
    (0..n).all(|i| cross(polygon[i], polygon[(i + 1) % n], p) >= -tol)
}
