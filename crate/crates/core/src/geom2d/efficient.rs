//! Exact efficient and weakly efficient sets of a polygonal domain.
//!
//! A polygon point is weakly efficient exactly when it lies on the boundary
//! of the free disposal hull, so the weakly efficient set is the polygon's
//! trace on the staircase (both rays included). Dominance via `lneq` can then
//! only act along the staircase's axis-parallel runs: on a vertical run the
//! lowest polygon point dominates everything above it, on a horizontal run
//! the leftmost dominates everything to its right. The efficient set is the
//! weakly efficient set minus those dominated run portions — which is how a
//! junction vertex at the top of a step ends up excluded while the bottom of
//! the step stays in.

use super::chain::SegmentChain;
use super::envelope::{lower_envelope, Staircase2};
use super::polygon::Polygon2;
use super::rational::{QPoint, Q};
use crate::error::{Error, Result};
use crate::order::IndexSet;

#[derive(Debug, Clone, Copy, PartialEq)]
enum PieceKind {
    Decreasing,
    VerticalRun,
    HorizontalRun,
}

struct ClippedPiece {
    kind: PieceKind,
    /// Closed sub-segments of the staircase piece inside the polygon.
    segments: Vec<(QPoint, QPoint)>,
    /// Isolated touch points inside the polygon.
    points: Vec<QPoint>,
}

fn clip_piece(polygon: &Polygon2, a: &QPoint, b: &QPoint, kind: PieceKind) -> ClippedPiece {
    let mut segments = Vec::new();
    let mut points = Vec::new();
    if a == b {
        if polygon.contains(a) {
            points.push(a.clone());
        }
        return ClippedPiece { kind, segments, points };
    }
    let at = |t: &Q| {
        QPoint::new(&a.x + t * (&b.x - &a.x), &a.y + t * (&b.y - &a.y))
    };
    for iv in polygon.clip_segment(a, b).items() {
        if iv.is_point() {
            points.push(at(&iv.lo));
        } else {
            segments.push((at(&iv.lo), at(&iv.hi)));
        }
    }
    ClippedPiece { kind, segments, points }
}

/// Staircase pieces extended with the two rays, each clipped to the polygon.
fn clipped_staircase(polygon: &Polygon2, stair: &Staircase2) -> Vec<ClippedPiece> {
    let (_, bbmax) = polygon.bbox();
    let mut out = Vec::new();

    let base = stair.vertical_ray_base();
    let top = QPoint::new(base.x.clone(), bbmax.y.clone().max(base.y.clone()));
    out.push(clip_piece(polygon, base, &top, PieceKind::VerticalRun));

    for (a, b) in stair.pieces() {
        let kind = if a.x == b.x {
            PieceKind::VerticalRun
        } else if a.y == b.y {
            PieceKind::HorizontalRun
        } else {
            PieceKind::Decreasing
        };
        out.push(clip_piece(polygon, a, b, kind));
    }

    let base = stair.horizontal_ray_base();
    let right = QPoint::new(bbmax.x.clone().max(base.x.clone()), base.y.clone());
    out.push(clip_piece(polygon, base, &right, PieceKind::HorizontalRun));
    out
}

fn chain_of(pieces: &[ClippedPiece]) -> SegmentChain {
    let segments = pieces
        .iter()
        .flat_map(|p| p.segments.iter())
        .map(|(a, b)| (a.clone(), b.clone(), true, true))
        .collect();
    let points = pieces
        .iter()
        .flat_map(|p| p.points.iter())
        .cloned()
        .collect();
    SegmentChain::from_parts(segments, points)
}

/// All polygon points with no polygon point strictly below-left of them:
/// the polygon's trace on the staircase, every piece closed.
pub fn weakly_efficient_chain(polygon: &Polygon2) -> SegmentChain {
    let stair = lower_envelope(polygon);
    chain_of(&clipped_staircase(polygon, &stair))
}

/// The dominated portion of one axis-parallel run: everything except the
/// run's minimal polygon point.
fn dominated_part(piece: &ClippedPiece) -> Option<SegmentChain> {
    let measure = |p: &QPoint| match piece.kind {
        PieceKind::VerticalRun => p.y.clone(),
        PieceKind::HorizontalRun => p.x.clone(),
        PieceKind::Decreasing => unreachable!("runs only"),
    };
    let mut min_point: Option<QPoint> = None;
    for candidate in piece
        .segments
        .iter()
        .flat_map(|(a, b)| [a, b])
        .chain(piece.points.iter())
    {
        let better = match &min_point {
            None => true,
            Some(cur) => measure(candidate) < measure(cur),
        };
        if better {
            min_point = Some(candidate.clone());
        }
    }
    let min_point = min_point?;
    let arc = chain_of(std::slice::from_ref(piece));
    let survivor = SegmentChain::from_parts(Vec::new(), vec![min_point]);
    Some(arc.subtract(&survivor))
}

/// Efficient set of the polygon for the full coordinate pair: weakly
/// efficient points minus the dominated run portions.
fn efficient_chain_full(polygon: &Polygon2) -> SegmentChain {
    let stair = lower_envelope(polygon);
    let clipped = clipped_staircase(polygon, &stair);
    let wm = chain_of(&clipped);
    let mut removed = SegmentChain::empty();
    for piece in &clipped {
        if piece.kind == PieceKind::Decreasing {
            continue;
        }
        if let Some(dominated) = dominated_part(piece) {
            removed = removed.union(&dominated);
        }
    }
    wm.subtract(&removed)
}

/// The face of the polygon minimizing one coordinate (a vertex or an edge,
/// closed; disconnected polygons of touching pieces are possible and kept).
fn minimizing_face(polygon: &Polygon2, coord: usize) -> SegmentChain {
    let (bbmin, bbmax) = polygon.bbox();
    let (a, b) = if coord == 1 {
        (
            QPoint::new(bbmin.x.clone(), bbmin.y.clone()),
            QPoint::new(bbmin.x.clone(), bbmax.y.clone()),
        )
    } else {
        (
            QPoint::new(bbmin.x.clone(), bbmin.y.clone()),
            QPoint::new(bbmax.x.clone(), bbmin.y.clone()),
        )
    };
    let piece = clip_piece(polygon, &a, &b, PieceKind::Decreasing);
    chain_of(std::slice::from_ref(&piece))
}

/// Efficient set restricted to a coordinate subset. Supported subsets in the
/// plane: `{1}`, `{2}`, and `{1,2}`.
pub fn efficient_chain(polygon: &Polygon2, idx: &IndexSet) -> Result<SegmentChain> {
    match idx.members() {
        [1] => Ok(minimizing_face(polygon, 1)),
        [2] => Ok(minimizing_face(polygon, 2)),
        [1, 2] => Ok(efficient_chain_full(polygon)),
        other => Err(Error::invalid(format!(
            "unsupported coordinate subset {other:?} for planar chains"
        ))),
    }
}
