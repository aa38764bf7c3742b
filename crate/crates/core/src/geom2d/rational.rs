//! Exact rational scalars and planar points.
//!
//! All planar geometry in this module tree runs on arbitrary-precision
//! rationals. Inputs arrive as `f64` (every finite float is an exact
//! rational), and every derived coordinate — intersections, envelope
//! breakpoints — stays exact, so half-open set comparisons are decided
//! without tolerances.

use crate::error::{Error, Result};
use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_from_f64(x: f64) -> Result<Q> {
    Q::from_float(x).ok_or_else(|| Error::invalid(format!("non-finite coordinate {x}")))
}

pub fn q_to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Compact exact rendering, `"p"` or `"p/q"`.
pub fn q_to_string(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QPoint {
    pub x: Q,
    pub y: Q,
}

impl QPoint {
    pub fn new(x: Q, y: Q) -> Self {
        QPoint { x, y }
    }

    pub fn from_f64(x: f64, y: f64) -> Result<Self> {
        Ok(QPoint::new(q_from_f64(x)?, q_from_f64(y)?))
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        QPoint::new(q_int(x), q_int(y))
    }

    pub fn to_f64s(&self) -> (f64, f64) {
        (q_to_f64(&self.x), q_to_f64(&self.y))
    }
}

/// Cross product of `(a - o)` and `(b - o)`; positive on left turns.
pub fn cross(o: &QPoint, a: &QPoint, b: &QPoint) -> Q {
    let abx = &a.x - &o.x;
    let aby = &a.y - &o.y;
    let obx = &b.x - &o.x;
    let oby = &b.y - &o.y;
    &abx * &oby - &aby * &obx
}

/// Cross product of two direction vectors.
pub fn cross_dir(ax: &Q, ay: &Q, bx: &Q, by: &Q) -> Q {
    ax * by - ay * bx
}

/// Is `p` on the closed segment `[a, b]`?
pub fn on_segment(a: &QPoint, b: &QPoint, p: &QPoint) -> bool {
    if !cross(a, b, p).is_zero() {
        return false;
    }
    let dot = (&p.x - &a.x) * (&b.x - &a.x) + (&p.y - &a.y) * (&b.y - &a.y);
    let len2 = (&b.x - &a.x) * (&b.x - &a.x) + (&b.y - &a.y) * (&b.y - &a.y);
    !dot.is_negative() && dot <= len2
}

/// The canonical key of the line through two distinct points: a primitive
/// integer normal `(a, b)` with sign-normalized leading coefficient, plus
/// the rational offset `c` with `a*x + b*y = c`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LineKey {
    pub a: BigInt,
    pub b: BigInt,
    pub c: Q,
}

impl LineKey {
    pub fn through(p: &QPoint, q: &QPoint) -> Option<LineKey> {
        if p == q {
            return None;
        }
        // normal of the direction (q - p)
        let na = &q.y - &p.y;
        let nb = &p.x - &q.x;
        // clear denominators and reduce
        let scale = Q::from_integer(na.denom() * nb.denom() / na.denom().gcd(nb.denom()));
        let ia = (&na * &scale).to_integer();
        let ib = (&nb * &scale).to_integer();
        let g = ia.gcd(&ib);
        let (mut ia, mut ib) = (ia / &g, ib / &g);
        let flip = ia.is_negative() || (ia.is_zero() && ib.is_negative());
        if flip {
            ia = -ia;
            ib = -ib;
        }
        let c = Q::from_integer(ia.clone()) * &p.x + Q::from_integer(ib.clone()) * &p.y;
        Some(LineKey { a: ia, b: ib, c })
    }

    pub fn is_vertical(&self) -> bool {
        self.b.is_zero()
    }

    pub fn contains(&self, p: &QPoint) -> bool {
        Q::from_integer(self.a.clone()) * &p.x + Q::from_integer(self.b.clone()) * &p.y == self.c
    }

    /// Parameter of a point on this line: `x` for non-vertical lines, `y`
    /// for vertical ones. The point is assumed to lie on the line.
    pub fn param(&self, p: &QPoint) -> Q {
        if self.is_vertical() {
            p.y.clone()
        } else {
            p.x.clone()
        }
    }

    /// Inverse of [`LineKey::param`].
    pub fn at(&self, t: &Q) -> QPoint {
        if self.is_vertical() {
            let x = &self.c / Q::from_integer(self.a.clone());
            QPoint::new(x, t.clone())
        } else {
            let y = (&self.c - Q::from_integer(self.a.clone()) * t)
                / Q::from_integer(self.b.clone());
            QPoint::new(t.clone(), y)
        }
    }

    /// Intersection point of two non-parallel lines.
    pub fn intersect(&self, other: &LineKey) -> Option<QPoint> {
        let det = &self.a * &other.b - &other.a * &self.b;
        if det.is_zero() {
            return None;
        }
        let det = Q::from_integer(det);
        let x = (&self.c * Q::from_integer(other.b.clone())
            - &other.c * Q::from_integer(self.b.clone()))
            / det.clone();
        let y = (&other.c * Q::from_integer(self.a.clone())
            - &self.c * Q::from_integer(other.a.clone()))
            / det;
        Some(QPoint::new(x, y))
    }
}
