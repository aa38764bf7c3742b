//! Simple polygons with exact predicates.

use super::interval::{QInterval, QIntervalSet};
use super::rational::{cross, on_segment, q_from_f64, QPoint, Q};
use crate::error::{Error, Result};
use num::{Signed, Zero};

/// A simple polygon, stored counterclockwise with consecutive collinear
/// vertices removed. The polygon is the closed region (boundary plus
/// interior).
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon2 {
    verts: Vec<QPoint>,
}

impl Polygon2 {
    pub fn new(vertices: &[(f64, f64)]) -> Result<Self> {
        let verts = vertices
            .iter()
            .map(|&(x, y)| Ok(QPoint::new(q_from_f64(x)?, q_from_f64(y)?)))
            .collect::<Result<Vec<_>>>()?;
        Polygon2::from_rational(verts)
    }

    pub fn from_ints(vertices: &[(i64, i64)]) -> Self {
        let verts = vertices
            .iter()
            .map(|&(x, y)| QPoint::from_ints(x, y))
            .collect();
        Polygon2::from_rational(verts).expect("caller supplies valid integer polygons")
    }

    pub fn from_rational(mut verts: Vec<QPoint>) -> Result<Self> {
        // drop consecutive duplicates (including the wrap pair)
        verts.dedup();
        while verts.len() > 1 && verts.first() == verts.last() {
            verts.pop();
        }
        // drop middle vertices that sit between their neighbours
        loop {
            let n = verts.len();
            if n < 3 {
                return Err(Error::DegeneratePolygon("fewer than 3 distinct vertices".into()));
            }
            let mut removed = false;
            for i in 0..n {
                let prev = &verts[(i + n - 1) % n];
                let next = &verts[(i + 1) % n];
                let v = &verts[i];
                if cross(prev, v, next).is_zero() {
                    if on_segment(prev, next, v) {
                        verts.remove(i);
                        removed = true;
                        break;
                    }
                    // collinear spike turning back on itself
                    return Err(Error::DegeneratePolygon("collinear spike at a vertex".into()));
                }
            }
            if !removed {
                break;
            }
        }
        let area2 = signed_area2(&verts);
        if area2.is_zero() {
            return Err(Error::DegeneratePolygon("zero area".into()));
        }
        if area2.is_negative() {
            verts.reverse();
        }
        let poly = Polygon2 { verts };
        poly.check_simple()?;
        Ok(poly)
    }

    pub fn vertices(&self) -> &[QPoint] {
        &self.verts
    }

    pub fn vertices_f64(&self) -> Vec<(f64, f64)> {
        self.verts.iter().map(QPoint::to_f64s).collect()
    }

    pub fn edges(&self) -> impl Iterator<Item = (&QPoint, &QPoint)> {
        let n = self.verts.len();
        (0..n).map(move |i| (&self.verts[i], &self.verts[(i + 1) % n]))
    }

    fn check_simple(&self) -> Result<()> {
        let n = self.verts.len();
        for i in 0..n {
            let (a1, b1) = (&self.verts[i], &self.verts[(i + 1) % n]);
            for j in (i + 1)..n {
                let (a2, b2) = (&self.verts[j], &self.verts[(j + 1) % n]);
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                if adjacent {
                    // neighbours may share only their common endpoint;
                    // collinear folds were rejected during normalization,
                    // so it remains to rule out a stray containment
                    let shared = if j == i + 1 { b1 } else { a1 };
                    let other1 = if j == i + 1 { a1 } else { b1 };
                    let other2 = if j == i + 1 { b2 } else { a2 };
                    if on_segment(a2, b2, other1) && other1 != shared
                        || on_segment(a1, b1, other2) && other2 != shared
                    {
                        return Err(Error::DegeneratePolygon("self-touching boundary".into()));
                    }
                } else if segments_meet(a1, b1, a2, b2) {
                    return Err(Error::DegeneratePolygon("self-intersecting boundary".into()));
                }
            }
        }
        Ok(())
    }

    pub fn bbox(&self) -> (QPoint, QPoint) {
        let mut min = self.verts[0].clone();
        let mut max = self.verts[0].clone();
        for v in &self.verts {
            if v.x < min.x {
                min.x = v.x.clone();
            }
            if v.y < min.y {
                min.y = v.y.clone();
            }
            if v.x > max.x {
                max.x = v.x.clone();
            }
            if v.y > max.y {
                max.y = v.y.clone();
            }
        }
        (min, max)
    }

    pub fn on_boundary(&self, p: &QPoint) -> bool {
        self.edges().any(|(a, b)| on_segment(a, b, p))
    }

    /// Membership in the closed region.
    pub fn contains(&self, p: &QPoint) -> bool {
        if self.on_boundary(p) {
            return true;
        }
        // parity of crossings of the ray going right from p
        let mut inside = false;
        for (a, b) in self.edges() {
            if (a.y > p.y) != (b.y > p.y) {
                let x_int = &a.x + (&p.y - &a.y) * (&b.x - &a.x) / (&b.y - &a.y);
                if x_int > p.x {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// The portion of the segment `[a, b]` inside the closed polygon, as a
    /// set of parameters `t` of `a + t (b - a)` over `[0, 1]`.
    pub fn clip_segment(&self, a: &QPoint, b: &QPoint) -> QIntervalSet {
        if a == b {
            return if self.contains(a) {
                QIntervalSet::from_intervals(vec![QInterval::point(Q::zero())])
            } else {
                QIntervalSet::empty()
            };
        }
        let mut ts: Vec<Q> = vec![Q::zero(), Q::from_integer(1.into())];
        let dir_x = &b.x - &a.x;
        let dir_y = &b.y - &a.y;
        for (ea, eb) in self.edges() {
            let ed_x = &eb.x - &ea.x;
            let ed_y = &eb.y - &ea.y;
            let denom = &dir_x * &ed_y - &dir_y * &ed_x;
            let diff_x = &ea.x - &a.x;
            let diff_y = &ea.y - &a.y;
            if !denom.is_zero() {
                let t = (&diff_x * &ed_y - &diff_y * &ed_x) / denom.clone();
                let s = (&diff_x * &dir_y - &diff_y * &dir_x) / denom;
                let unit = |v: &Q| !v.is_negative() && *v <= Q::from_integer(1.into());
                if unit(&t) && unit(&s) {
                    ts.push(t);
                }
            } else if (&diff_x * &dir_y - &diff_y * &dir_x).is_zero() {
                // collinear edge: project both endpoints onto the parameter
                let len2 = &dir_x * &dir_x + &dir_y * &dir_y;
                for e in [ea, eb] {
                    let t = ((&e.x - &a.x) * &dir_x + (&e.y - &a.y) * &dir_y) / len2.clone();
                    if !t.is_negative() && t <= Q::from_integer(1.into()) {
                        ts.push(t);
                    }
                }
            }
        }
        ts.sort();
        ts.dedup();
        let at = |t: &Q| QPoint::new(&a.x + t * &dir_x, &a.y + t * &dir_y);
        let mut pieces = Vec::new();
        for w in ts.windows(2) {
            let mid = (&w[0] + &w[1]) / Q::from_integer(2.into());
            if self.contains(&at(&mid)) {
                pieces.push(QInterval::closed(w[0].clone(), w[1].clone()).expect("sorted"));
            }
        }
        for t in &ts {
            if self.contains(&at(t)) {
                pieces.push(QInterval::point(t.clone()));
            }
        }
        QIntervalSet::from_intervals(pieces)
    }
}

fn signed_area2(verts: &[QPoint]) -> Q {
    let n = verts.len();
    let mut acc = Q::zero();
    for i in 0..n {
        let p = &verts[i];
        let q = &verts[(i + 1) % n];
        acc += &p.x * &q.y - &q.x * &p.y;
    }
    acc
}

/// Do two closed segments share at least one point?
fn segments_meet(a: &QPoint, b: &QPoint, c: &QPoint, d: &QPoint) -> bool {
    let d1 = cross(a, b, c);
    let d2 = cross(a, b, d);
    let d3 = cross(c, d, a);
    let d4 = cross(c, d, b);
    if ((d1.is_positive() && d2.is_negative()) || (d1.is_negative() && d2.is_positive()))
        && ((d3.is_positive() && d4.is_negative()) || (d3.is_negative() && d4.is_positive()))
    {
        return true;
    }
    (d1.is_zero() && on_segment(a, b, c))
        || (d2.is_zero() && on_segment(a, b, d))
        || (d3.is_zero() && on_segment(c, d, a))
        || (d4.is_zero() && on_segment(c, d, b))
}
