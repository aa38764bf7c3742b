//! Efficient and weakly efficient subsets of finite point sets.
//!
//! For a finite `Y` and a coordinate subset `I`, the efficient set keeps the
//! indices whose point is not dominated (`lneq` on `I`) by any other point of
//! `Y`; the weakly efficient set uses strict dominance (`lt`) instead. On top
//! of the set computations sit the two conditions the equivalence verdict is
//! built from:
//!
//! * alpha — the weakly efficient set equals the efficient set;
//! * beta  — for every nonempty coordinate subset `I`, the `I`-efficient set
//!   is contained in the efficient set.
//!
//! Alpha always implies beta. The converse holds whenever the free disposal
//! hull of `Y` is convex; whether it is convex is not decidable from a finite
//! sample, so [`theorem_verdict`] takes that fact as an input flag computed by
//! the exact planar geometry (or a sampled check) rather than inferring it.

use crate::error::{Error, Result};
use crate::order::{self, IndexSet, Point};
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// A finite ordered collection of points of uniform dimension. Duplicate
/// coordinates are allowed and meaningful: efficiency is decided per index,
/// and duplicates of an efficient value are all efficient.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointSet {
    points: Vec<Point>,
    labels: Option<Vec<String>>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if let Some(first) = points.first() {
            let m = first.dim();
            if points.iter().any(|p| p.dim() != m) {
                return Err(Error::dim("points of mixed dimensions in one set"));
            }
        }
        Ok(PointSet { points, labels: None })
    }

    pub fn with_labels(points: Vec<Point>, labels: Vec<String>) -> Result<Self> {
        if labels.len() != points.len() {
            return Err(Error::invalid(format!(
                "{} labels for {} points",
                labels.len(),
                points.len()
            )));
        }
        let mut set = PointSet::new(points)?;
        set.labels = Some(labels);
        Ok(set)
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let points = rows.into_iter().map(Point::new).collect::<Result<Vec<_>>>()?;
        PointSet::new(points)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Dimension of the points, or `None` for the empty set.
    pub fn dim(&self) -> Option<usize> {
        self.points.first().map(Point::dim)
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }
}

/// Candidate solutions paired with their images in objective space.
/// The mapping itself stays with the caller; only evaluated images enter.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolutionSet {
    entries: Vec<(String, Point)>,
}

impl SolutionSet {
    pub fn new(entries: Vec<(String, Point)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (id, _) in &entries {
            if !seen.insert(id.clone()) {
                return Err(Error::invalid(format!("duplicate solution id {id:?}")));
            }
        }
        if let Some((_, first)) = entries.first() {
            let m = first.dim();
            if entries.iter().any(|(_, p)| p.dim() != m) {
                return Err(Error::dim("images of mixed dimensions"));
            }
        }
        Ok(SolutionSet { entries })
    }

    pub fn entries(&self) -> &[(String, Point)] {
        &self.entries
    }

    pub fn images(&self) -> Result<PointSet> {
        PointSet::new(self.entries.iter().map(|(_, p)| p.clone()).collect())
    }
}

fn prepare(set: &PointSet, idx: &IndexSet) -> Result<Vec<usize>> {
    if let Some(m) = set.dim() {
        idx.check_dim(m)?;
    }
    Ok(idx.positions().collect())
}

/// Groups indices by exact coordinate value (bit pattern). Dominance is a
/// property of the value, so each distinct value is tested once; tie-rich
/// inputs collapse substantially.
fn value_groups(set: &PointSet) -> Vec<(Vec<usize>, &[f64])> {
    let mut groups: BTreeMap<Vec<u64>, Vec<usize>> = BTreeMap::new();
    for (i, p) in set.points().iter().enumerate() {
        let key: Vec<u64> = p.coords().iter().map(|c| c.to_bits()).collect();
        groups.entry(key).or_default().push(i);
    }
    groups
        .into_values()
        .map(|idxs| {
            let rep = set.point(idxs[0]).coords();
            (idxs, rep)
        })
        .collect()
}

fn undominated_indices(
    set: &PointSet,
    idx: &IndexSet,
    dominates: impl Fn(&[f64], &[f64], &[usize]) -> bool,
) -> Result<BTreeSet<usize>> {
    let positions = prepare(set, idx)?;
    let groups = value_groups(set);
    let mut result = BTreeSet::new();
    for (idxs, rep) in &groups {
        let dominated = groups
            .iter()
            .any(|(_, other)| !std::ptr::eq(*other, *rep) && dominates(other, rep, &positions));
        if !dominated {
            result.extend(idxs.iter().copied());
        }
    }
    Ok(result)
}

/// Indices of the points of `set` not dominated via `lneq` on `idx`.
pub fn efficient_set(set: &PointSet, idx: &IndexSet) -> Result<BTreeSet<usize>> {
    undominated_indices(set, idx, order::raw::lneq_on)
}

/// Indices of the points of `set` not strictly dominated (`lt`) on `idx`.
pub fn weakly_efficient_set(set: &PointSet, idx: &IndexSet) -> Result<BTreeSet<usize>> {
    undominated_indices(set, idx, order::raw::lt_on)
}

/// Efficient set over all coordinates, on the specialized maximal-vector
/// sweep for dimensions 2 and 3 and on the pairwise path otherwise.
/// Always agrees with `efficient_set(set, full)` index for index.
pub fn efficient_set_fast(set: &PointSet) -> BTreeSet<usize> {
    match set.dim() {
        None => BTreeSet::new(),
        Some(2) => fast_2d(set),
        Some(3) => fast_3d(set),
        Some(m) => {
            let full = IndexSet::full(m).expect("m >= 1");
            efficient_set(set, &full).expect("dimensions verified")
        }
    }
}

fn sorted_groups(set: &PointSet) -> Vec<(Vec<usize>, Vec<f64>)> {
    let mut groups: Vec<(Vec<usize>, Vec<f64>)> = value_groups(set)
        .into_iter()
        .map(|(idxs, rep)| (idxs, rep.to_vec()))
        .collect();
    groups.sort_by(|a, b| a.1.partial_cmp(&b.1).expect("finite coordinates"));
    groups
}

fn fast_2d(set: &PointSet) -> BTreeSet<usize> {
    // Lexicographic sweep: within one x-group only the lowest y survives,
    // and it survives iff it beats the best y seen at strictly smaller x.
    let groups = sorted_groups(set);
    let mut result = BTreeSet::new();
    let mut best_y_before = f64::INFINITY;
    let mut i = 0;
    while i < groups.len() {
        let x = groups[i].1[0];
        let mut j = i;
        while j < groups.len() && groups[j].1[0] == x {
            j += 1;
        }
        let min_y = groups[i].1[1]; // groups are y-sorted within equal x
        if min_y < best_y_before {
            result.extend(groups[i].0.iter().copied());
        }
        best_y_before = best_y_before.min(min_y);
        i = j;
    }
    result
}

/// Staircase of (y, z) minima over the processed prefix: y strictly
/// increasing, z strictly decreasing.
struct Frontier2 {
    stairs: Vec<(f64, f64)>,
}

impl Frontier2 {
    fn new() -> Self {
        Frontier2 { stairs: Vec::new() }
    }

    /// Is there a processed pair with y <= qy and z <= qz?
    fn covers(&self, qy: f64, qz: f64) -> bool {
        // last stair with y <= qy holds the prefix-minimal z
        let pos = self.stairs.partition_point(|&(y, _)| y <= qy);
        pos > 0 && self.stairs[pos - 1].1 <= qz
    }

    fn insert(&mut self, y: f64, z: f64) {
        if self.covers(y, z) {
            return;
        }
        let pos = self.stairs.partition_point(|&(sy, _)| sy < y);
        // drop stairs made redundant by the new pair
        let mut end = pos;
        while end < self.stairs.len() && self.stairs[end].1 >= z {
            end += 1;
        }
        self.stairs.splice(pos..end, [(y, z)]);
    }
}

fn fast_3d(set: &PointSet) -> BTreeSet<usize> {
    // Lexicographic sweep with a 2-D dominance staircase over (y, z).
    // Any dominator of a value sorts strictly before it, so querying before
    // inserting makes each distinct value see exactly its candidates.
    let groups = sorted_groups(set);
    let mut result = BTreeSet::new();
    let mut frontier = Frontier2::new();
    for (idxs, rep) in &groups {
        if !frontier.covers(rep[1], rep[2]) {
            result.extend(idxs.iter().copied());
        }
        frontier.insert(rep[1], rep[2]);
    }
    result
}

/// Solution ids whose image is not matched-or-beaten by any other entry.
/// Unlike efficiency, an exact duplicate image disqualifies both entries.
pub fn strictly_efficient(set: &SolutionSet) -> BTreeSet<String> {
    let entries = set.entries();
    let mut result = BTreeSet::new();
    for (i, (id, image)) in entries.iter().enumerate() {
        let positions: Vec<usize> = (0..image.dim()).collect();
        let beaten = entries.iter().enumerate().any(|(j, (_, other))| {
            j != i && order::raw::leq_on(other.coords(), image.coords(), &positions)
        });
        if !beaten {
            result.insert(id.clone());
        }
    }
    result
}

/// One subset whose efficient set escapes the full efficient set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BetaViolation {
    pub subset: IndexSet,
    pub index: usize,
    pub point: Point,
}

/// Checks that every subset-efficient set is contained in the efficient set
/// (condition beta), enumerating the `2^m - 1` nonempty subsets in increasing
/// cardinality and lexicographic order within each cardinality.
pub fn condition_beta(set: &PointSet) -> Result<(bool, Vec<BetaViolation>)> {
    let Some(m) = set.dim() else {
        return Ok((true, Vec::new()));
    };
    if m > 20 {
        return Err(Error::CapacityExceeded(format!(
            "subset enumeration needs 2^{m} - 1 subsets; limit is m <= 20"
        )));
    }
    let full = IndexSet::full(m)?;
    let efficient = efficient_set(set, &full)?;
    let mut violations = Vec::new();
    for k in 1..=m {
        for combo in (1..=m).combinations(k) {
            let subset = IndexSet::new(combo)?;
            for j in efficient_set(set, &subset)? {
                if !efficient.contains(&j) {
                    violations.push(BetaViolation {
                        subset: subset.clone(),
                        index: j,
                        point: set.point(j).clone(),
                    });
                }
            }
        }
    }
    Ok((violations.is_empty(), violations))
}

/// Checks that the weakly efficient set equals the efficient set
/// (condition alpha); witnesses are the weakly-but-not-efficient points.
pub fn condition_alpha(set: &PointSet) -> Result<(bool, Vec<(usize, Point)>)> {
    let Some(m) = set.dim() else {
        return Ok((true, Vec::new()));
    };
    let full = IndexSet::full(m)?;
    let weak = weakly_efficient_set(set, &full)?;
    let efficient = efficient_set(set, &full)?;
    let witnesses: Vec<(usize, Point)> = weak
        .difference(&efficient)
        .map(|&j| (j, set.point(j).clone()))
        .collect();
    Ok((witnesses.is_empty(), witnesses))
}

/// Joint alpha/beta verdict for a point set, together with the externally
/// supplied convexity status of the free disposal hull.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    /// `None` when convexity of the hull was not determined.
    pub fdh_convex: Option<bool>,
    pub alpha_holds: bool,
    pub beta_holds: bool,
    pub beta_violations: Vec<BetaViolation>,
    pub alpha_witnesses: Vec<(usize, Point)>,
}

/// Assembles both conditions and cross-checks the implications that must
/// hold: alpha implies beta unconditionally, and under a convex free
/// disposal hull the two conditions agree. A failure of either check means
/// an implementation bug, not bad input, and is reported as an error.
pub fn theorem_verdict(set: &PointSet, fdh_convex: Option<bool>) -> Result<TheoremVerdict> {
    let (alpha_holds, alpha_witnesses) = condition_alpha(set)?;
    let (beta_holds, beta_violations) = condition_beta(set)?;
    if alpha_holds && !beta_holds {
        return Err(Error::Inconsistency(
            "alpha holds but beta does not; this implication needs no hypothesis".into(),
        ));
    }
    if fdh_convex == Some(true) && alpha_holds != beta_holds {
        return Err(Error::Inconsistency(
            "convex free disposal hull but alpha and beta disagree".into(),
        ));
    }
    Ok(TheoremVerdict {
        fdh_convex,
        alpha_holds,
        beta_holds,
        beta_violations,
        alpha_witnesses,
    })
}


#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pset(rows: &[&[f64]]) -> PointSet {
        PointSet::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn idx(members: &[usize]) -> IndexSet {
        IndexSet::new(members.iter().copied()).unwrap()
    }

    fn ex32_vertices() -> PointSet {
        pset(&[&[0.0, 2.0], &[0.0, 1.0], &[1.0, 0.0], &[2.0, 0.0]])
    }

    fn ex31_vertices() -> PointSet {
        pset(&[&[0.0, 1.0], &[1.0, 0.0], &[2.0, 1.0], &[1.0, 2.0]])
    }

    #[test]
    fn efficient_set_basic() {
        let y = pset(&[&[0.0, 1.0], &[1.0, 0.0], &[1.0, 1.0]]);
        let got = efficient_set(&y, &idx(&[1, 2])).unwrap();
        assert_eq!(got, BTreeSet::from([0, 1]));

        let single = pset(&[&[0.0, 0.0]]);
        assert_eq!(
            efficient_set(&single, &idx(&[1, 2])).unwrap(),
            BTreeSet::from([0])
        );

        // restricted to the first coordinate, the two x-minimal vertices stay
        let got = efficient_set(&ex32_vertices(), &idx(&[1])).unwrap();
        assert_eq!(got, BTreeSet::from([0, 1]));
    }

    #[test]
    fn duplicates_of_an_efficient_value_are_all_efficient() {
        let y = pset(&[&[0.0, 1.0], &[0.0, 1.0], &[2.0, 2.0]]);
        let got = efficient_set(&y, &idx(&[1, 2])).unwrap();
        assert_eq!(got, BTreeSet::from([0, 1]));
    }

    #[test]
    fn weakly_efficient_set_basic() {
        let tie = pset(&[&[0.0, 1.0], &[0.0, 2.0]]);
        assert_eq!(
            weakly_efficient_set(&tie, &idx(&[1, 2])).unwrap(),
            BTreeSet::from([0, 1])
        );

        // (1,1) is weak: no point beats it strictly in both coordinates
        let y = pset(&[&[0.0, 1.0], &[1.0, 0.0], &[1.0, 1.0]]);
        let expected: BTreeSet<usize> = oracle::weakly_efficient(
            &[vec![0.0, 1.0], vec![1.0, 0.0], vec![1.0, 1.0]],
            &[1, 2],
        )
        .into_iter()
        .collect();
        assert_eq!(expected, BTreeSet::from([0, 1, 2]));
        assert_eq!(weakly_efficient_set(&y, &idx(&[1, 2])).unwrap(), expected);

        assert_eq!(
            weakly_efficient_set(&ex32_vertices(), &idx(&[1, 2])).unwrap(),
            BTreeSet::from([0, 1, 2, 3])
        );
    }

    #[test]
    fn empty_set_is_fine() {
        let empty = PointSet::new(Vec::new()).unwrap();
        assert!(efficient_set(&empty, &idx(&[1])).unwrap().is_empty());
        assert!(efficient_set_fast(&empty).is_empty());
        let (holds, v) = condition_beta(&empty).unwrap();
        assert!(holds && v.is_empty());
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let y = pset(&[&[0.0, 1.0]]);
        assert!(efficient_set(&y, &idx(&[3])).is_err());
        assert!(PointSet::from_rows(vec![vec![0.0], vec![0.0, 1.0]]).is_err());
    }

    #[test]
    fn fast_path_trivial_shapes() {
        // staircase: mutually incomparable
        let stairs: Vec<Vec<f64>> = (0..10).map(|i| vec![i as f64, (10 - i) as f64]).collect();
        let y = PointSet::from_rows(stairs).unwrap();
        assert_eq!(efficient_set_fast(&y).len(), 10);

        // one point dominating everything
        let y = pset(&[&[5.0, 5.0], &[0.0, 0.0], &[3.0, 7.0]]);
        assert_eq!(efficient_set_fast(&y), BTreeSet::from([1]));
    }

    #[test]
    fn fast_path_matches_oracle_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for case in 0..300 {
            let m = if case % 2 == 0 { 2 } else { 3 };
            let n = rng.gen_range(1..=10);
            let rows: Vec<Vec<f64>> = (0..n)
                .map(|_| (0..m).map(|_| rng.gen_range(0..4) as f64).collect())
                .collect();
            let expected: BTreeSet<usize> = oracle::efficient(
                &rows,
                &(1..=m).collect::<Vec<_>>(),
            )
            .into_iter()
            .collect();
            let y = PointSet::from_rows(rows).unwrap();
            assert_eq!(efficient_set_fast(&y), expected, "case {case}");
        }
    }

    #[test]
    fn strictly_efficient_rules() {
        let dup = SolutionSet::new(vec![
            ("a".into(), Point::new(vec![0.0, 1.0]).unwrap()),
            ("b".into(), Point::new(vec![0.0, 1.0]).unwrap()),
        ])
        .unwrap();
        assert!(strictly_efficient(&dup).is_empty());
        // ... although both are efficient
        let eff = efficient_set(&dup.images().unwrap(), &idx(&[1, 2])).unwrap();
        assert_eq!(eff.len(), 2);

        let incomparable = SolutionSet::new(vec![
            ("a".into(), Point::new(vec![0.0, 1.0]).unwrap()),
            ("b".into(), Point::new(vec![1.0, 0.0]).unwrap()),
        ])
        .unwrap();
        assert_eq!(
            strictly_efficient(&incomparable),
            BTreeSet::from(["a".to_string(), "b".to_string()])
        );

        let dominated = SolutionSet::new(vec![
            ("a".into(), Point::new(vec![0.0, 0.0]).unwrap()),
            ("b".into(), Point::new(vec![0.0, 1.0]).unwrap()),
        ])
        .unwrap();
        assert_eq!(strictly_efficient(&dominated), BTreeSet::from(["a".to_string()]));
    }

    #[test]
    fn duplicate_solution_ids_rejected() {
        let r = SolutionSet::new(vec![
            ("a".into(), Point::new(vec![0.0]).unwrap()),
            ("a".into(), Point::new(vec![1.0]).unwrap()),
        ]);
        assert!(r.is_err());
    }

    #[test]
    fn condition_beta_examples() {
        // the first violation is the x-minimal vertex escaping the efficient set
        let (holds, violations) = condition_beta(&ex32_vertices()).unwrap();
        assert!(!holds);
        assert_eq!(violations[0].subset, idx(&[1]));
        assert_eq!(violations[0].point.coords(), &[0.0, 2.0]);
        // reported in cardinality-then-lex subset order
        assert_eq!(violations[1].subset, idx(&[2]));
        assert_eq!(violations[1].point.coords(), &[2.0, 0.0]);

        let (holds, violations) = condition_beta(&pset(&[&[0.0, 0.0]])).unwrap();
        assert!(holds && violations.is_empty());

        let (holds, _) = condition_beta(&ex31_vertices()).unwrap();
        assert!(holds);
    }

    #[test]
    fn condition_beta_capacity() {
        let row: Vec<f64> = vec![0.0; 21];
        let y = PointSet::from_rows(vec![row]).unwrap();
        assert!(matches!(
            condition_beta(&y),
            Err(Error::CapacityExceeded(_))
        ));
    }

    #[test]
    fn condition_alpha_examples() {
        let (holds, witnesses) = condition_alpha(&pset(&[&[0.0, 1.0], &[0.0, 2.0]])).unwrap();
        assert!(!holds);
        assert_eq!(witnesses, vec![(1, Point::new(vec![0.0, 2.0]).unwrap())]);

        let (holds, _) = condition_alpha(&pset(&[&[0.0, 1.0], &[1.0, 0.0]])).unwrap();
        assert!(holds);

        let (holds, _) = condition_alpha(&ex32_vertices()).unwrap();
        assert!(!holds);
    }

    #[test]
    fn verdict_consistency_on_finite_sets() {
        let v = theorem_verdict(&ex32_vertices(), Some(true)).unwrap();
        assert!(!v.alpha_holds && !v.beta_holds);

        let v = theorem_verdict(&pset(&[&[0.0, 0.0]]), Some(true)).unwrap();
        assert!(v.alpha_holds && v.beta_holds);

        let v = theorem_verdict(&ex31_vertices(), None).unwrap();
        assert!(v.alpha_holds && v.beta_holds);
    }

    #[test]
    fn random_tie_rich_instances_satisfy_alpha_implies_beta() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..200 {
            let m = rng.gen_range(2..=3);
            let n = rng.gen_range(1..=25);
            let rows: Vec<Vec<f64>> = (0..n)
                .map(|_| (0..m).map(|_| rng.gen_range(0..3) as f64).collect())
                .collect();
            let y = PointSet::from_rows(rows).unwrap();
            // errors only on genuine implication failures, so unwrap is the assertion
            let v = theorem_verdict(&y, None).unwrap();
            // subset relation: efficient within weakly efficient
            let full = IndexSet::full(m).unwrap();
            let e = efficient_set(&y, &full).unwrap();
            let w = weakly_efficient_set(&y, &full).unwrap();
            assert!(e.is_subset(&w));
            if v.alpha_holds {
                assert!(v.beta_holds);
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_grid_set() -> impl Strategy<Value = PointSet> {
            (2usize..=3).prop_flat_map(|m| {
                proptest::collection::vec(
                    proptest::collection::vec(0.0f64..4.0, m).prop_map(|v| {
                        v.into_iter().map(|c| c.floor()).collect::<Vec<_>>()
                    }),
                    1..30,
                )
                .prop_map(|rows| PointSet::from_rows(rows).unwrap())
            })
        }

        proptest! {
            #[test]
            fn subset_efficient_sets_are_weakly_efficient(y in small_grid_set()) {
                // M_I Y ⊆ WM_I Y ⊆ WM Y for every nonempty I
                let m = y.dim().unwrap();
                let full = IndexSet::full(m).unwrap();
                let wm_full = weakly_efficient_set(&y, &full).unwrap();
                for mask in 1u32..(1 << m) {
                    let members: Vec<usize> =
                        (1..=m).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                    let sub = IndexSet::new(members).unwrap();
                    let eff = efficient_set(&y, &sub).unwrap();
                    let weak = weakly_efficient_set(&y, &sub).unwrap();
                    prop_assert!(eff.is_subset(&weak));
                    prop_assert!(weak.is_subset(&wm_full));
                }
            }

            #[test]
            fn removing_a_non_efficient_point_preserves_the_efficient_values(y in small_grid_set()) {
                let m = y.dim().unwrap();
                let full = IndexSet::full(m).unwrap();
                let eff = efficient_set(&y, &full).unwrap();
                let dominated: Vec<usize> =
                    (0..y.len()).filter(|i| !eff.contains(i)).collect();
                if let Some(&drop) = dominated.first() {
                    let rows: Vec<Vec<f64>> = y
                        .points()
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != drop)
                        .map(|(_, p)| p.coords().to_vec())
                        .collect();
                    let reduced = PointSet::from_rows(rows).unwrap();
                    let eff2 = efficient_set(&reduced, &full).unwrap();
                    // compare as coordinate multisets; indices shift after removal
                    let vals = |set: &BTreeSet<usize>, y: &PointSet| {
                        let mut v: Vec<Vec<u64>> = set
                            .iter()
                            .map(|&i| y.point(i).coords().iter().map(|c| c.to_bits()).collect())
                            .collect();
                        v.sort();
                        v
                    };
                    prop_assert_eq!(vals(&eff, &y), vals(&eff2, &reduced));
                }
            }

            #[test]
            fn fast_equals_pairwise(y in small_grid_set()) {
                let m = y.dim().unwrap();
                let full = IndexSet::full(m).unwrap();
                prop_assert_eq!(efficient_set_fast(&y), efficient_set(&y, &full).unwrap());
            }
        }
    }
}
