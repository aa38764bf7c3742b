//! Exact 1-D interval sets with per-endpoint open/closed flags.
//!
//! These carry the half-open bookkeeping of efficient chains: unions merge
//! `[a,b) ∪ [b,c]` but keep the puncture in `[a,b) ∪ (b,c]`, and subtraction
//! can open an endpoint or split an interval around a removed point.

use super::rational::Q;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QInterval {
    pub lo: Q,
    pub hi: Q,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl QInterval {
    pub fn new(lo: Q, hi: Q, lo_closed: bool, hi_closed: bool) -> Option<Self> {
        match lo.cmp(&hi) {
            std::cmp::Ordering::Less => Some(QInterval { lo, hi, lo_closed, hi_closed }),
            std::cmp::Ordering::Equal if lo_closed && hi_closed => {
                Some(QInterval { lo, hi, lo_closed, hi_closed })
            }
            _ => None,
        }
    }

    pub fn closed(lo: Q, hi: Q) -> Option<Self> {
        QInterval::new(lo, hi, true, true)
    }

    pub fn point(t: Q) -> Self {
        QInterval { lo: t.clone(), hi: t, lo_closed: true, hi_closed: true }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, t: &Q) -> bool {
        let above = t > &self.lo || (t == &self.lo && self.lo_closed);
        let below = t < &self.hi || (t == &self.hi && self.hi_closed);
        above && below
    }
}

/// Canonical union of intervals: sorted, pairwise disjoint, not mergeable.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QIntervalSet {
    items: Vec<QInterval>,
}

// lower bound (t, closed): closed sorts before open at the same t
fn lo_key(iv: &QInterval) -> (Q, bool) {
    (iv.lo.clone(), !iv.lo_closed)
}

// does `next` connect to a set currently reaching (hi, hi_closed)?
fn connects(hi: &Q, hi_closed: bool, next: &QInterval) -> bool {
    next.lo < *hi || (next.lo == *hi && (hi_closed || next.lo_closed))
}

impl QIntervalSet {
    pub fn empty() -> Self {
        QIntervalSet::default()
    }

    pub fn from_intervals(mut items: Vec<QInterval>) -> Self {
        items.sort_by(|a, b| lo_key(a).cmp(&lo_key(b)));
        let mut merged: Vec<QInterval> = Vec::new();
        for iv in items {
            match merged.last_mut() {
                Some(last) if connects(&last.hi, last.hi_closed, &iv) => {
                    // extend the upper bound if the new interval reaches further
                    if iv.hi > last.hi {
                        last.hi = iv.hi;
                        last.hi_closed = iv.hi_closed;
                    } else if iv.hi == last.hi {
                        last.hi_closed |= iv.hi_closed;
                    }
                }
                _ => merged.push(iv),
            }
        }
        QIntervalSet { items: merged }
    }

    pub fn items(&self) -> &[QInterval] {
        &self.items
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn contains(&self, t: &Q) -> bool {
        self.items.iter().any(|iv| iv.contains(t))
    }

    pub fn union(&self, other: &QIntervalSet) -> QIntervalSet {
        let mut items = self.items.clone();
        items.extend(other.items.iter().cloned());
        QIntervalSet::from_intervals(items)
    }

    /// Point-set difference `self \ other`.
    pub fn subtract(&self, other: &QIntervalSet) -> QIntervalSet {
        let mut result: Vec<QInterval> = Vec::new();
        for iv in &self.items {
            let mut rest = vec![iv.clone()];
            for cut in &other.items {
                let mut next = Vec::new();
                for piece in rest {
                    next.extend(subtract_one(&piece, cut));
                }
                rest = next;
                if rest.is_empty() {
                    break;
                }
            }
            result.extend(rest);
        }
        QIntervalSet::from_intervals(result)
    }

    pub fn is_subset_of(&self, other: &QIntervalSet) -> bool {
        self.subtract(other).is_empty()
    }
}

fn subtract_one(a: &QInterval, b: &QInterval) -> Vec<QInterval> {
    // quick reject: no overlap
    if b.hi < a.lo
        || a.hi < b.lo
        || (b.hi == a.lo && !(b.hi_closed && a.lo_closed))
        || (a.hi == b.lo && !(a.hi_closed && b.lo_closed))
    {
        return vec![a.clone()];
    }
    let mut out = Vec::new();
    // left remainder: [a.lo, b.lo] with the right end open iff b includes b.lo
    if let Some(left) = QInterval::new(a.lo.clone(), b.lo.clone(), a.lo_closed, !b.lo_closed) {
        out.push(left);
    }
    // right remainder
    if let Some(right) = QInterval::new(b.hi.clone(), a.hi.clone(), !b.hi_closed, a.hi_closed) {
        out.push(right);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom2d::rational::q_int;

    fn iv(lo: i64, hi: i64, lc: bool, hc: bool) -> QInterval {
        QInterval::new(q_int(lo), q_int(hi), lc, hc).unwrap()
    }

    #[test]
    fn union_merging_respects_flags() {
        // [0,1) ∪ [1,2] merges, [0,1) ∪ (1,2] does not
        let s = QIntervalSet::from_intervals(vec![iv(0, 1, true, false), iv(1, 2, true, true)]);
        assert_eq!(s.items().len(), 1);
        assert!(s.contains(&q_int(1)));

        let s = QIntervalSet::from_intervals(vec![iv(0, 1, true, false), iv(1, 2, false, true)]);
        assert_eq!(s.items().len(), 2);
        assert!(!s.contains(&q_int(1)));

        // an isolated point plugs the hole
        let s = s.union(&QIntervalSet::from_intervals(vec![QInterval::point(q_int(1))]));
        assert_eq!(s.items().len(), 1);
    }

    #[test]
    fn subtract_can_open_endpoints_and_split() {
        let base = QIntervalSet::from_intervals(vec![iv(0, 10, true, true)]);
        let cut = QIntervalSet::from_intervals(vec![QInterval::point(q_int(3))]);
        let res = base.subtract(&cut);
        assert_eq!(res.items().len(), 2);
        assert!(!res.contains(&q_int(3)));
        assert!(res.contains(&q_int(0)) && res.contains(&q_int(10)));

        // removing a half-open piece keeps its open end
        let cut = QIntervalSet::from_intervals(vec![iv(0, 5, false, true)]);
        let res = base.subtract(&cut);
        assert_eq!(res.items().len(), 2);
        assert!(res.contains(&q_int(0)));
        assert!(!res.contains(&q_int(2)));
        assert!(!res.contains(&q_int(5)));
        assert!(res.contains(&q_int(6)));
    }

    #[test]
    fn subset_via_subtraction() {
        let a = QIntervalSet::from_intervals(vec![iv(0, 4, true, true)]);
        let b = QIntervalSet::from_intervals(vec![
            iv(0, 2, true, false),
            iv(2, 4, false, true),
            QInterval::point(q_int(2)),
        ]);
        assert!(a.is_subset_of(&b));
        let holed = QIntervalSet::from_intervals(vec![iv(0, 2, true, false), iv(2, 4, false, true)]);
        assert!(!a.is_subset_of(&holed));
        assert!(holed.is_subset_of(&a));
    }

    #[test]
    fn degenerate_construction() {
        assert!(QInterval::new(q_int(2), q_int(1), true, true).is_none());
        assert!(QInterval::new(q_int(1), q_int(1), true, false).is_none());
        assert!(QInterval::new(q_int(1), q_int(1), true, true).is_some());
    }
}
