//! Finite unions of closed/open segments and isolated points, with exact
//! point-set comparison.
//!
//! Efficient chains are such unions: a junction vertex may be excluded from
//! an otherwise closed piece, so subset and equality tests must see through
//! representation differences (`[a,b]` versus `[a,b) ∪ {b}`, a point plugging
//! a hole from a different line, and so on). All operations here are defined
//! on the underlying point sets.

use super::interval::{QInterval, QIntervalSet};
use super::rational::{LineKey, QPoint};
use std::collections::{BTreeMap, BTreeSet};

/// One rendered piece of a chain.
#[derive(Debug, Clone, PartialEq)]
pub enum ChainPiece {
    Segment {
        start: QPoint,
        end: QPoint,
        start_closed: bool,
        end_closed: bool,
    },
    Point(QPoint),
}

/// A union of segments and isolated points.
#[derive(Debug, Clone, Default)]
pub struct SegmentChain {
    lines: BTreeMap<LineKey, QIntervalSet>,
    points: BTreeSet<QPoint>,
}

impl SegmentChain {
    pub fn empty() -> Self {
        SegmentChain::default()
    }

    /// Builds a chain from closed/flagged segments and isolated points.
    pub fn from_parts(
        segments: Vec<(QPoint, QPoint, bool, bool)>,
        points: Vec<QPoint>,
    ) -> Self {
        let mut per_line: BTreeMap<LineKey, Vec<QInterval>> = BTreeMap::new();
        let mut loose: Vec<QPoint> = Vec::new();
        for (a, b, a_closed, b_closed) in segments {
            if a == b {
                if a_closed && b_closed {
                    loose.push(a);
                }
                continue;
            }
            let key = LineKey::through(&a, &b).expect("distinct endpoints");
            let (ta, tb) = (key.param(&a), key.param(&b));
            let (lo, hi, lo_c, hi_c) = if ta <= tb {
                (ta, tb, a_closed, b_closed)
            } else {
                (tb, ta, b_closed, a_closed)
            };
            if let Some(iv) = QInterval::new(lo, hi, lo_c, hi_c) {
                per_line.entry(key).or_default().push(iv);
            }
        }
        loose.extend(points);
        let mut chain = SegmentChain {
            lines: per_line
                .into_iter()
                .map(|(k, items)| (k, QIntervalSet::from_intervals(items)))
                .collect(),
            points: BTreeSet::new(),
        };
        for p in loose {
            chain.absorb_point(p);
        }
        chain
    }

    fn absorb_point(&mut self, p: QPoint) {
        let mut on_some_line = false;
        for (key, set) in self.lines.iter_mut() {
            if key.contains(&p) {
                on_some_line = true;
                *set = set.union(&QIntervalSet::from_intervals(vec![QInterval::point(
                    key.param(&p),
                )]));
            }
        }
        if !on_some_line {
            self.points.insert(p);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty() && self.lines.values().all(QIntervalSet::is_empty)
    }

    pub fn contains_point(&self, p: &QPoint) -> bool {
        self.points.contains(p)
            || self
                .lines
                .iter()
                .any(|(key, set)| key.contains(p) && set.contains(&key.param(p)))
    }

    /// The trace of this chain on the given line, as parameter intervals:
    /// intervals stored on the line itself, isolated points on it, and
    /// single-point crossings contributed by the chain's other lines.
    fn coverage_on(&self, line: &LineKey) -> QIntervalSet {
        let mut items: Vec<QInterval> = Vec::new();
        if let Some(set) = self.lines.get(line) {
            items.extend(set.items().iter().cloned());
        }
        for p in &self.points {
            if line.contains(p) {
                items.push(QInterval::point(line.param(p)));
            }
        }
        for (other, set) in &self.lines {
            if other == line {
                continue;
            }
            if let Some(q) = line.intersect(other) {
                if set.contains(&other.param(&q)) {
                    items.push(QInterval::point(line.param(&q)));
                }
            }
        }
        QIntervalSet::from_intervals(items)
    }

    pub fn is_subset_of(&self, other: &SegmentChain) -> bool {
        for (line, set) in &self.lines {
            if !set.is_subset_of(&other.coverage_on(line)) {
                return false;
            }
        }
        self.points.iter().all(|p| other.contains_point(p))
    }

    pub fn same_set(&self, other: &SegmentChain) -> bool {
        self.is_subset_of(other) && other.is_subset_of(self)
    }

    pub fn union(&self, other: &SegmentChain) -> SegmentChain {
        let mut segments = Vec::new();
        let mut points = Vec::new();
        for chain in [self, other] {
            for piece in chain.pieces() {
                match piece {
                    ChainPiece::Segment { start, end, start_closed, end_closed } => {
                        segments.push((start, end, start_closed, end_closed));
                    }
                    ChainPiece::Point(p) => points.push(p),
                }
            }
        }
        SegmentChain::from_parts(segments, points)
    }

    /// Point-set difference.
    pub fn subtract(&self, other: &SegmentChain) -> SegmentChain {
        let mut segments = Vec::new();
        let mut points = Vec::new();
        for (line, set) in &self.lines {
            let remaining = set.subtract(&other.coverage_on(line));
            for iv in remaining.items() {
                if iv.is_point() {
                    points.push(line.at(&iv.lo));
                } else {
                    segments.push((
                        line.at(&iv.lo),
                        line.at(&iv.hi),
                        iv.lo_closed,
                        iv.hi_closed,
                    ));
                }
            }
        }
        points.extend(
            self.points
                .iter()
                .filter(|p| !other.contains_point(p))
                .cloned(),
        );
        SegmentChain::from_parts(segments, points)
    }

    /// Deterministically ordered pieces. Points that sit inside a rendered
    /// segment are not repeated.
    pub fn pieces(&self) -> Vec<ChainPiece> {
        let mut segments: Vec<ChainPiece> = Vec::new();
        let mut point_candidates: BTreeSet<QPoint> = self.points.clone();
        for (line, set) in &self.lines {
            for iv in set.items() {
                if iv.is_point() {
                    point_candidates.insert(line.at(&iv.lo));
                } else {
                    segments.push(ChainPiece::Segment {
                        start: line.at(&iv.lo),
                        end: line.at(&iv.hi),
                        start_closed: iv.lo_closed,
                        end_closed: iv.hi_closed,
                    });
                }
            }
        }
        let covered = |p: &QPoint| {
            self.lines.iter().any(|(key, set)| {
                key.contains(p)
                    && set
                        .items()
                        .iter()
                        .any(|iv| !iv.is_point() && iv.contains(&key.param(p)))
            })
        };
        let mut pieces = segments;
        for p in point_candidates {
            if !covered(&p) {
                pieces.push(ChainPiece::Point(p));
            }
        }
        pieces
    }

    /// Some point of the set, if nonempty; used for violation witnesses.
    pub fn any_point(&self) -> Option<QPoint> {
        for (line, set) in &self.lines {
            if let Some(iv) = set.items().first() {
                if iv.lo_closed {
                    return Some(line.at(&iv.lo));
                }
                if iv.hi_closed {
                    return Some(line.at(&iv.hi));
                }
                let mid = (&iv.lo + &iv.hi) / super::rational::q_int(2);
                return Some(line.at(&mid));
            }
        }
        self.points.iter().next().cloned()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(a: (i64, i64), b: (i64, i64), ac: bool, bc: bool) -> (QPoint, QPoint, bool, bool) {
        (
            QPoint::from_ints(a.0, a.1),
            QPoint::from_ints(b.0, b.1),
            ac,
            bc,
        )
    }

    #[test]
    fn closed_segment_equals_half_open_plus_point() {
        let full = SegmentChain::from_parts(vec![seg((0, 0), (2, 2), true, true)], vec![]);
        let split = SegmentChain::from_parts(
            vec![seg((0, 0), (2, 2), true, false)],
            vec![QPoint::from_ints(2, 2)],
        );
        assert!(full.same_set(&split));

        let holed = SegmentChain::from_parts(vec![seg((0, 0), (2, 2), true, false)], vec![]);
        assert!(!full.same_set(&holed));
        assert!(holed.is_subset_of(&full));
        assert!(!full.is_subset_of(&holed));
    }

    #[test]
    fn subtract_removes_a_junction_point_across_lines() {
        // a descending piece and the vertical step below its endpoint
        let wm = SegmentChain::from_parts(
            vec![seg((0, 3), (1, 2), true, true), seg((1, 2), (1, 1), true, true)],
            vec![],
        );
        // dominated: the vertical step except its bottom
        let removed = SegmentChain::from_parts(vec![seg((1, 2), (1, 1), true, false)], vec![]);
        let m = wm.subtract(&removed);
        assert!(!m.contains_point(&QPoint::from_ints(1, 2)));
        assert!(m.contains_point(&QPoint::from_ints(1, 1)));
        assert!(m.contains_point(&QPoint::from_ints(0, 3)));
        // the surviving set is [p1, p2) on the slanted line plus the bottom point
        let expected = SegmentChain::from_parts(
            vec![seg((0, 3), (1, 2), true, false)],
            vec![QPoint::from_ints(1, 1)],
        );
        assert!(m.same_set(&expected));
    }

    #[test]
    fn crossing_segment_plugs_a_single_point_hole() {
        // [0,2] on the x-axis minus {1}, then a vertical segment through (1,0)
        let base = SegmentChain::from_parts(vec![seg((0, 0), (2, 0), true, true)], vec![]);
        let hole = SegmentChain::from_parts(vec![], vec![QPoint::from_ints(1, 0)]);
        let punched = base.subtract(&hole);
        assert!(!punched.contains_point(&QPoint::from_ints(1, 0)));

        let plug = SegmentChain::from_parts(vec![seg((1, -1), (1, 1), true, true)], vec![]);
        let whole = punched.union(&plug);
        assert!(base.is_subset_of(&whole));
    }

    #[test]
    fn pieces_render_without_duplicates() {
        let chain = SegmentChain::from_parts(
            vec![seg((0, 0), (2, 0), true, true)],
            vec![QPoint::from_ints(1, 0), QPoint::from_ints(5, 5)],
        );
        let pieces = chain.pieces();
        assert_eq!(pieces.len(), 2);
        assert!(matches!(&pieces[0], ChainPiece::Segment { .. }));
        assert!(matches!(&pieces[1], ChainPiece::Point(p) if *p == QPoint::from_ints(5, 5)));
    }

    #[test]
    fn empty_behaviour() {
        let empty = SegmentChain::empty();
        assert!(empty.is_empty());
        assert!(empty.is_subset_of(&empty));
        assert_eq!(empty.any_point(), None);
        let something = SegmentChain::from_parts(vec![], vec![QPoint::from_ints(0, 0)]);
        assert!(empty.is_subset_of(&something));
        assert!(!something.is_subset_of(&empty));
        assert_eq!(something.any_point(), Some(QPoint::from_ints(0, 0)));
    }
}
