//! The lower-left boundary of a polygon's free disposal hull.
//!
//! The hull `P + R^2_{>=0}` of a compact polygon is bounded below-left by a
//! monotone chain: x non-decreasing, y non-increasing, with a vertical ray
//! above its first point and a horizontal ray right of its last point.
//! The chain is assembled as the pointwise minimum of the hull contributions
//! of the polygon's vertices and strictly decreasing edges; every breakpoint
//! where the minimum can switch is enumerated exactly, so the chain is exact.

use super::polygon::Polygon2;
use super::rational::{cross_dir, QPoint, Q};
use num::{Signed, Zero};

/// A generator contributes a non-increasing partial function of x:
/// a vertex holds its own level from its x on; a strictly decreasing edge
/// interpolates over its span and holds its lower level afterwards.
enum Gen {
    Level { from_x: Q, y: Q },
    Edge { a: QPoint, b: QPoint }, // a.x < b.x, a.y > b.y
}

impl Gen {
    fn start_x(&self) -> &Q {
        match self {
            Gen::Level { from_x, .. } => from_x,
            Gen::Edge { a, .. } => &a.x,
        }
    }

    fn eval(&self, x: &Q) -> Option<Q> {
        if x < self.start_x() {
            return None;
        }
        Some(match self {
            Gen::Level { y, .. } => y.clone(),
            Gen::Edge { a, b } => {
                if x >= &b.x {
                    b.y.clone()
                } else {
                    &a.y + (x - &a.x) * (&b.y - &a.y) / (&b.x - &a.x)
                }
            }
        })
    }
}

/// The staircase boundary of a free disposal hull. `chain` runs from the
/// bottom of the vertical ray (leftmost x, lowest y there) to the leftmost
/// point attaining the global minimum y, where the horizontal ray starts.
#[derive(Debug, Clone, PartialEq)]
pub struct Staircase2 {
    chain: Vec<QPoint>,
}

impl Staircase2 {
    pub fn chain(&self) -> &[QPoint] {
        &self.chain
    }

    pub fn vertical_ray_base(&self) -> &QPoint {
        &self.chain[0]
    }

    pub fn horizontal_ray_base(&self) -> &QPoint {
        self.chain.last().unwrap()
    }

    pub fn pieces(&self) -> impl Iterator<Item = (&QPoint, &QPoint)> {
        self.chain.windows(2).map(|w| (&w[0], &w[1]))
    }

    /// Value of the envelope at `x`, if `x` is within its domain. At a jump
    /// this is the lower value.
    pub fn value_at(&self, x: &Q) -> Option<Q> {
        if x < &self.chain[0].x {
            return None;
        }
        let last = self.horizontal_ray_base();
        if x >= &last.x {
            return Some(last.y.clone());
        }
        let mut best: Option<Q> = None;
        for (a, b) in self.pieces() {
            if x >= &a.x && x <= &b.x {
                let y = if a.x == b.x {
                    b.y.clone() // vertical step: lower end
                } else {
                    &a.y + (x - &a.x) * (&b.y - &a.y) / (&b.x - &a.x)
                };
                best = Some(match best {
                    Some(cur) if cur <= y => cur,
                    _ => y,
                });
            }
        }
        best
    }

    /// Membership of a point in the free disposal hull.
    pub fn hull_contains(&self, p: &QPoint) -> bool {
        match self.value_at(&p.x) {
            Some(y) => p.y >= y,
            None => false,
        }
    }
}

/// Computes the staircase boundary of `P + R^2_{>=0}`.
pub fn lower_envelope(polygon: &Polygon2) -> Staircase2 {
    let mut gens: Vec<Gen> = Vec::new();
    for v in polygon.vertices() {
        gens.push(Gen::Level { from_x: v.x.clone(), y: v.y.clone() });
    }
    for (p, q) in polygon.edges() {
        let (a, b) = if p.x <= q.x { (p, q) } else { (q, p) };
        if a.x < b.x && a.y > b.y {
            gens.push(Gen::Edge { a: a.clone(), b: b.clone() });
        }
    }

    // breakpoints: every x where the active set or the minimizer can change
    let mut xs: Vec<Q> = Vec::new();
    for v in polygon.vertices() {
        xs.push(v.x.clone());
    }
    let levels: Vec<Q> = polygon.vertices().iter().map(|v| v.y.clone()).collect();
    let edges: Vec<(&QPoint, &QPoint)> = gens
        .iter()
        .filter_map(|g| match g {
            Gen::Edge { a, b } => Some((a, b)),
            _ => None,
        })
        .collect();
    for (i, (a1, b1)) in edges.iter().enumerate() {
        let s1 = (&b1.y - &a1.y) / (&b1.x - &a1.x);
        // crossing a constant level inside the edge span
        for level in &levels {
            if (level < &b1.y) == (level < &a1.y) {
                continue;
            }
            let x = &a1.x + (level - &a1.y) / s1.clone();
            if x >= a1.x && x <= b1.x {
                xs.push(x);
            }
        }
        // crossing another edge's line inside both spans
        for (a2, b2) in edges.iter().skip(i + 1) {
            let s2 = (&b2.y - &a2.y) / (&b2.x - &a2.x);
            if s1 == s2 {
                continue;
            }
            let x = (&a2.y - &a1.y + &s1 * &a1.x - &s2 * &a2.x) / (&s1 - &s2);
            if x >= a1.x && x <= b1.x && x >= a2.x && x <= b2.x {
                xs.push(x);
            }
        }
    }
    xs.sort();
    xs.dedup();

    let g_at = |x: &Q| -> Q {
        gens.iter()
            .filter_map(|g| g.eval(x))
            .min()
            .expect("some generator is active within the domain")
    };
    // left limit at x: minimum over generators active strictly before x
    let g_left = |x: &Q, active_from: &Q| -> Q {
        gens.iter()
            .filter(|g| g.start_x() <= active_from)
            .filter_map(|g| g.eval(x))
            .min()
            .expect("active set is nonempty")
    };

    let mut chain: Vec<QPoint> = vec![QPoint::new(xs[0].clone(), g_at(&xs[0]))];
    let push = |chain: &mut Vec<QPoint>, p: QPoint| {
        if chain.last() != Some(&p) {
            chain.push(p);
        }
    };
    for w in xs.windows(2) {
        let (x0, x1) = (&w[0], &w[1]);
        let y0 = g_at(x0);
        if y0 < chain.last().unwrap().y {
            // a generator anchored at x0 drops the envelope: vertical step
            push(&mut chain, QPoint::new(x0.clone(), y0));
        }
        let y1 = g_left(x1, x0);
        push(&mut chain, QPoint::new(x1.clone(), y1));
    }
    let x_last = xs.last().unwrap();
    let y_final = g_at(x_last);
    if y_final < chain.last().unwrap().y {
        push(&mut chain, QPoint::new(x_last.clone(), y_final));
    }

    // merge collinear runs
    let mut compact: Vec<QPoint> = Vec::new();
    for p in chain {
        while compact.len() >= 2 {
            let a = &compact[compact.len() - 2];
            let b = &compact[compact.len() - 1];
            let c1 = cross_dir(&(&b.x - &a.x), &(&b.y - &a.y), &(&p.x - &b.x), &(&p.y - &b.y));
            if c1.is_zero() {
                compact.pop();
            } else {
                break;
            }
        }
        compact.push(p);
    }
    // the horizontal ray owns everything at the global minimum level
    while compact.len() >= 2 && compact[compact.len() - 2].y == compact[compact.len() - 1].y {
        compact.pop();
    }
    Staircase2 { chain: compact }
}

/// Is the free disposal hull convex? The hull is convex exactly when the
/// boundary traversal — down the vertical ray, along the chain, out the
/// horizontal ray — only ever turns left.
pub fn fdh_is_convex(polygon: &Polygon2) -> bool {
    staircase_is_convex(&lower_envelope(polygon))
}

pub fn staircase_is_convex(stair: &Staircase2) -> bool {
    let mut dirs: Vec<(Q, Q)> = vec![(Q::zero(), Q::from_integer((-1).into()))];
    for (a, b) in stair.pieces() {
        dirs.push((&b.x - &a.x, &b.y - &a.y));
    }
    dirs.push((Q::from_integer(1.into()), Q::zero()));
    dirs.windows(2)
        .all(|w| !cross_dir(&w[0].0, &w[0].1, &w[1].0, &w[1].1).is_negative())
}
