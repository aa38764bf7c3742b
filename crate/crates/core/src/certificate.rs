//! Separating-weight certificates for weakly efficient points.
//!
//! A certificate for `y*` against a set `Y` is a weight vector `a >= 0`,
//! `sum a_i = 1`, with `<a, y - y*> >= 0` for every `y` in `Y`. Its support
//! `I = {i : a_i > 0}` then witnesses `y*` as `I`-efficient: no point can
//! dominate `y*` on `I` without driving the inner product negative. The
//! weights come from maximizing the worst-case inner product over the weight
//! simplex — a linear program solved on its few-row side, with the weights
//! recovered from the dual prices.
//!
//! When the hull of `Y` is convex and `y*` is weakly efficient the optimum
//! is nonnegative and a certificate exists; on nonconvex instances a
//! negative optimum is an expected outcome, reported as
//! [`CertificateOutcome::NoCertificate`] rather than an error.

use crate::effset;
use crate::error::{Error, Result};
use crate::order::{IndexSet, Point};
use crate::simplex::{solve_standard, LpOutcome};
use serde::{Deserialize, Serialize};

/// Weights below this threshold are treated as zero when forming the support.
pub const SUPPORT_TOL: f64 = 1e-9;
/// Most negative worst-case inner product still accepted as a certificate.
pub const MARGIN_TOL: f64 = 1e-9;

const MAX_PIVOTS: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightCertificate {
    /// Nonnegative weights summing to one.
    pub weights: Vec<f64>,
    /// Indices of the weights above [`SUPPORT_TOL`].
    pub support: IndexSet,
    /// Worst-case value of `<a, y - y*>` over `Y`.
    pub margin: f64,
    /// Did the combinatorial recheck (margin and `I`-efficiency) pass?
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum CertificateOutcome {
    Found(WeightCertificate),
    /// The best achievable margin is negative: no separating weights exist.
    /// Expected on instances whose free disposal hull is not convex.
    NoCertificate { best_weights: Vec<f64>, margin: f64 },
}

/// Maximizes `min_y <a, y - y*>` over the weight simplex and packages the
/// optimum. `y_star` is expected to be weakly efficient (caller-checked);
/// for a polytope, passing its vertex list certifies the whole hull.
pub fn find_certificate(set: &effset::PointSet, y_star: &Point) -> Result<CertificateOutcome> {
    let Some(m) = set.dim() else {
        return Err(Error::invalid("cannot certify against an empty set"));
    };
    if y_star.dim() != m {
        return Err(Error::dim(format!(
            "point has dimension {}, set has {m}",
            y_star.dim()
        )));
    }
    let diffs: Vec<Vec<f64>> = set
        .points()
        .iter()
        .map(|y| {
            y.coords()
                .iter()
                .zip(y_star.coords())
                .map(|(yi, si)| yi - si)
                .collect()
        })
        .collect();

    if diffs.iter().all(|d| d.iter().all(|&v| v == 0.0)) {
        // every point equals y*: any weights work, return the uniform ones
        let weights = vec![1.0 / m as f64; m];
        let support = IndexSet::full(m)?;
        return Ok(CertificateOutcome::Found(WeightCertificate {
            weights,
            support,
            margin: 0.0,
            verified: true,
        }));
    }

    let weights = optimal_weights(&diffs, m)?;
    let margin = worst_margin(&weights, &diffs);
    if margin < -MARGIN_TOL {
        return Ok(CertificateOutcome::NoCertificate { best_weights: weights, margin });
    }
    let support = support_index_set(&weights, SUPPORT_TOL)?;
    let mut certificate = WeightCertificate { weights, support, margin, verified: false };
    certificate.verified = verify_certificate(set, y_star, &certificate)?;
    Ok(CertificateOutcome::Found(certificate))
}

/// Solves the weight problem on its few-row side:
/// `min mu  s.t.  sum_j lambda_j d_j <= mu (per coordinate), sum lambda = 1`,
/// whose dual prices are exactly the optimal weights.
fn optimal_weights(diffs: &[Vec<f64>], m: usize) -> Result<Vec<f64>> {
    let n = diffs.len();
    // columns: lambda_1..lambda_n, mu+, mu-, s_1..s_m
    let cols = n + 2 + m;
    let mut cost = vec![0.0; cols];
    cost[n] = 1.0;
    cost[n + 1] = -1.0;
    let mut rows = Vec::with_capacity(m + 1);
    for i in 0..m {
        let mut row = vec![0.0; cols];
        for (j, d) in diffs.iter().enumerate() {
            row[j] = d[i];
        }
        row[n] = -1.0;
        row[n + 1] = 1.0;
        row[n + 2 + i] = 1.0;
        rows.push(row);
    }
    let mut simplex_row = vec![0.0; cols];
    simplex_row[..n].fill(1.0);
    rows.push(simplex_row);
    let mut rhs = vec![0.0; m + 1];
    rhs[m] = 1.0;

    let solution = match solve_standard(&cost, &rows, &rhs, MAX_PIVOTS)? {
        LpOutcome::Optimal(s) => s,
        LpOutcome::Infeasible => {
            return Err(Error::Inconsistency(
                "weight problem is always feasible but reported infeasible".into(),
            ))
        }
        LpOutcome::Unbounded => {
            return Err(Error::Inconsistency(
                "weight problem is bounded but reported unbounded".into(),
            ))
        }
    };
    let mut weights: Vec<f64> = solution.dual[..m].iter().map(|&y| (-y).max(0.0)).collect();
    let total: f64 = weights.iter().sum();
    if total <= 0.0 {
        return Err(Error::Inconsistency("dual prices produced zero weights".into()));
    }
    for w in weights.iter_mut() {
        *w /= total;
    }
    Ok(weights)
}

fn worst_margin(weights: &[f64], diffs: &[Vec<f64>]) -> f64 {
    diffs
        .iter()
        .map(|d| d.iter().zip(weights).map(|(di, wi)| di * wi).sum::<f64>())
        .fold(f64::INFINITY, f64::min)
}

/// The support `{i : a_i > support_tol}` of a weight vector, 1-based.
pub fn support_index_set(weights: &[f64], support_tol: f64) -> Result<IndexSet> {
    if weights.iter().any(|&w| w < 0.0) {
        return Err(Error::invalid("weights must be nonnegative"));
    }
    let members: Vec<usize> = weights
        .iter()
        .enumerate()
        .filter(|(_, &w)| w > support_tol)
        .map(|(i, _)| i + 1)
        .collect();
    if members.is_empty() {
        return Err(Error::invalid("all weights at or below the support tolerance"));
    }
    IndexSet::new(members)
}

/// Rechecks a certificate combinatorially: the margin over all of `Y` and
/// membership of `y*` in the `I`-efficient set of `Y ∪ {y*}`.
pub fn verify_certificate(
    set: &effset::PointSet,
    y_star: &Point,
    certificate: &WeightCertificate,
) -> Result<bool> {
    let Some(m) = set.dim() else {
        return Err(Error::invalid("cannot verify against an empty set"));
    };
    if certificate.weights.len() != m || y_star.dim() != m {
        return Err(Error::dim("certificate dimensions do not match the set"));
    }
    let margin = set
        .points()
        .iter()
        .map(|y| {
            y.coords()
                .iter()
                .zip(y_star.coords())
                .zip(&certificate.weights)
                .map(|((yi, si), wi)| (yi - si) * wi)
                .sum::<f64>()
        })
        .fold(f64::INFINITY, f64::min);
    if margin < -MARGIN_TOL {
        return Ok(false);
    }
    let mut points: Vec<Point> = set.points().to_vec();
    points.push(y_star.clone());
    let star_index = points.len() - 1;
    let extended = effset::PointSet::new(points)?;
    let efficient = effset::efficient_set(&extended, &certificate.support)?;
    Ok(efficient.contains(&star_index))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::effset::PointSet;

    fn pset(rows: &[&[f64]]) -> PointSet {
        PointSet::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn pt(coords: &[f64]) -> Point {
        Point::new(coords.to_vec()).unwrap()
    }

    fn diamond() -> PointSet {
        pset(&[&[0.0, 1.0], &[1.0, 0.0], &[2.0, 1.0], &[1.0, 2.0]])
    }

    fn found(outcome: CertificateOutcome) -> WeightCertificate {
        match outcome {
            CertificateOutcome::Found(c) => c,
            other => panic!("expected a certificate, got {other:?}"),
        }
    }

    /// Grid search over the 2-D weight simplex: the independent optimum.
    fn grid_best_margin(diffs: &[(f64, f64)], steps: usize) -> f64 {
        let mut best = f64::NEG_INFINITY;
        for k in 0..=steps {
            let s = k as f64 / steps as f64;
            let margin = diffs
                .iter()
                .map(|(dx, dy)| s * dx + (1.0 - s) * dy)
                .fold(f64::INFINITY, f64::min);
            best = best.max(margin);
        }
        best
    }

    #[test]
    fn midpoint_of_the_efficient_face() {
        let y_star = pt(&[0.5, 0.5]);
        let c = found(find_certificate(&diamond(), &y_star).unwrap());
        // the optimum is unique here: equal weights, zero margin
        assert!((c.weights[0] - 0.5).abs() < 1e-9);
        assert!((c.weights[1] - 0.5).abs() < 1e-9);
        assert!(c.margin.abs() < 1e-9);
        assert_eq!(c.support, IndexSet::new([1, 2]).unwrap());
        assert!(c.verified);
    }

    #[test]
    fn vertex_gets_a_valid_support() {
        let y_star = pt(&[0.0, 1.0]);
        let c = found(find_certificate(&diamond(), &y_star).unwrap());
        assert!(c.margin.abs() < 1e-9);
        assert!(c.verified);
        // the handcrafted first-coordinate certificate is also valid
        let by_hand = WeightCertificate {
            weights: vec![1.0, 0.0],
            support: IndexSet::new([1]).unwrap(),
            margin: 0.0,
            verified: false,
        };
        assert!(verify_certificate(&diamond(), &y_star, &by_hand).unwrap());
    }

    #[test]
    fn singleton_set_returns_uniform_weights() {
        let y_star = pt(&[3.0, 4.0]);
        let single = pset(&[&[3.0, 4.0]]);
        let c = found(find_certificate(&single, &y_star).unwrap());
        assert_eq!(c.weights, vec![0.5, 0.5]);
        assert_eq!(c.margin, 0.0);
        assert!(c.verified);
    }

    #[test]
    fn wrong_weights_fail_verification() {
        // weighting only the second coordinate is refuted by the other vertex
        let y_star = pt(&[0.0, 1.0]);
        let bad = WeightCertificate {
            weights: vec![0.0, 1.0],
            support: IndexSet::new([2]).unwrap(),
            margin: 0.0,
            verified: false,
        };
        assert!(!verify_certificate(&diamond(), &y_star, &bad).unwrap());
    }

    #[test]
    fn non_weakly_efficient_point_has_no_certificate() {
        // an interior point is strictly dominated; every weighting fails
        let y_star = pt(&[1.0, 1.0]);
        match find_certificate(&diamond(), &y_star).unwrap() {
            CertificateOutcome::NoCertificate { margin, .. } => {
                assert!(margin < -MARGIN_TOL);
            }
            other => panic!("expected no certificate, got {other:?}"),
        }
    }

    #[test]
    fn matches_the_grid_oracle_on_random_sets() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let n = rng.gen_range(1..=8);
            let rows: Vec<Vec<f64>> = (0..n)
                .map(|_| vec![rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)])
                .collect();
            let y_star = pt(&[rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)]);
            let diffs: Vec<(f64, f64)> = rows
                .iter()
                .map(|r| (r[0] - y_star.coord(0), r[1] - y_star.coord(1)))
                .collect();
            let set = PointSet::from_rows(rows).unwrap();
            let oracle = grid_best_margin(&diffs, 4000);
            let lp_margin = match find_certificate(&set, &y_star).unwrap() {
                CertificateOutcome::Found(c) => c.margin,
                CertificateOutcome::NoCertificate { margin, .. } => margin,
            };
            assert!(
                lp_margin >= oracle - 1e-9 && lp_margin <= oracle + 1e-2,
                "lp {lp_margin} vs grid {oracle}"
            );
        }
    }

    #[test]
    fn scaling_preserves_the_support() {
        let y_star = pt(&[0.5, 0.5]);
        let c1 = found(find_certificate(&diamond(), &y_star).unwrap());
        let scaled_rows: Vec<Vec<f64>> = diamond()
            .points()
            .iter()
            .map(|p| p.coords().iter().map(|v| v * 3.75).collect())
            .collect();
        let scaled = PointSet::from_rows(scaled_rows).unwrap();
        let c2 = found(find_certificate(&scaled, &pt(&[1.875, 1.875])).unwrap());
        assert_eq!(c1.support, c2.support);
    }

    #[test]
    fn separation_with_zero_offset() {
        // the zero offset separates differences from the negative orthant:
        // <a, y - y*> >= 0 on Y while <a, z> < 0 for strictly negative z
        use rand::{Rng, SeedableRng};
        let y_star = pt(&[0.5, 0.5]);
        let c = found(find_certificate(&diamond(), &y_star).unwrap());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let z = [rng.gen_range(-5.0..-1e-6), rng.gen_range(-5.0..-1e-6)];
            let dot: f64 = z.iter().zip(&c.weights).map(|(zi, wi)| zi * wi).sum();
            assert!(dot < 0.0);
        }
    }

    #[test]
    fn support_tolerance_truncates() {
        assert_eq!(
            support_index_set(&[0.5, 0.5], 1e-12).unwrap(),
            IndexSet::new([1, 2]).unwrap()
        );
        assert_eq!(
            support_index_set(&[1.0, 0.0], 1e-12).unwrap(),
            IndexSet::new([1]).unwrap()
        );
        assert_eq!(
            support_index_set(&[1e-15, 1.0], 1e-12).unwrap(),
            IndexSet::new([2]).unwrap()
        );
        assert!(support_index_set(&[1e-15, 1e-15], 1e-12).is_err());
        assert!(support_index_set(&[-0.1, 1.1], 1e-12).is_err());
    }

    #[test]
    fn dimension_checks() {
        let y_star = pt(&[0.0, 0.0, 0.0]);
        assert!(find_certificate(&diamond(), &y_star).is_err());
        let empty = PointSet::new(vec![]).unwrap();
        assert!(find_certificate(&empty, &pt(&[0.0])).is_err());
    }
}
