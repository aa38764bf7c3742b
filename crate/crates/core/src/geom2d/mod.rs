//! Exact efficiency analysis of planar polygonal domains.
//!
//! Everything here runs on exact rational arithmetic: staircase envelopes,
//! convexity of the free disposal hull, efficient/weakly efficient chains
//! with half-open endpoint bookkeeping, and the alpha/beta verdict those
//! chains decide.

mod chain;
mod efficient;
mod envelope;
mod interval;
mod polygon;
pub mod rational;

pub use chain::{ChainPiece, SegmentChain};
pub use efficient::{efficient_chain, weakly_efficient_chain};
pub use envelope::{fdh_is_convex, lower_envelope, Staircase2};
pub use polygon::Polygon2;

use crate::error::{Error, Result};
use crate::order::IndexSet;
use rational::{q_to_f64, q_to_string, QPoint};
use serde::Serialize;

/// Exact alpha/beta verdict for a polygon, with the chains that decide it.
#[derive(Debug, Clone)]
pub struct PolygonVerdict {
    pub fdh_convex: bool,
    pub alpha_holds: bool,
    pub beta_holds: bool,
    /// Coordinate subsets whose efficient face escapes the efficient set,
    /// each with a witness point.
    pub beta_violations: Vec<(IndexSet, QPoint)>,
    pub staircase: Staircase2,
    pub weakly_efficient: SegmentChain,
    pub efficient: SegmentChain,
    pub min_face_1: SegmentChain,
    pub min_face_2: SegmentChain,
}

/// Computes convexity of the free disposal hull, condition alpha (weakly
/// efficient chain equals efficient chain) and condition beta (each
/// single-coordinate face lies inside the efficient chain), all exactly.
/// Violations of "alpha implies beta" or, under a convex hull, of
/// "alpha iff beta" would mean a bug here and are reported as errors.
pub fn polygon_verdict(polygon: &Polygon2) -> Result<PolygonVerdict> {
    let staircase = lower_envelope(polygon);
    let fdh_convex = envelope::staircase_is_convex(&staircase);
    let weakly_efficient = weakly_efficient_chain(polygon);
    let efficient = efficient_chain(polygon, &IndexSet::new([1, 2])?)?;
    let min_face_1 = efficient_chain(polygon, &IndexSet::new([1])?)?;
    let min_face_2 = efficient_chain(polygon, &IndexSet::new([2])?)?;

    let alpha_holds = efficient.same_set(&weakly_efficient);
    let mut beta_violations = Vec::new();
    for (members, face) in [(vec![1], &min_face_1), (vec![2], &min_face_2)] {
        if !face.is_subset_of(&efficient) {
            let witness = face
                .subtract(&efficient)
                .any_point()
                .ok_or_else(|| Error::Inconsistency("non-subset with empty difference".into()))?;
            beta_violations.push((IndexSet::new(members)?, witness));
        }
    }
    let beta_holds = beta_violations.is_empty();

    if alpha_holds && !beta_holds {
        return Err(Error::Inconsistency(
            "alpha holds but beta fails on a polygon; implication needs no hypothesis".into(),
        ));
    }
    if fdh_convex && alpha_holds != beta_holds {
        return Err(Error::Inconsistency(
            "convex free disposal hull but alpha and beta disagree".into(),
        ));
    }

    Ok(PolygonVerdict {
        fdh_convex,
        alpha_holds,
        beta_holds,
        beta_violations,
        staircase,
        weakly_efficient,
        efficient,
        min_face_1,
        min_face_2,
    })
}

/// Names of the bundled example polygons.
pub const EXAMPLE_NAMES: [&str; 4] = ["3.1", "3.2", "3.3", "3.4"];

/// The bundled example gallery: four small integer polygons covering the
/// four interesting convexity/alpha/beta combinations.
pub fn example(name: &str) -> Option<Polygon2> {
    let verts: &[(i64, i64)] = match name {
        "3.1" => &[(0, 1), (1, 0), (2, 1), (1, 2)],
        "3.2" => &[(0, 2), (0, 1), (1, 0), (2, 0)],
        "3.3" => &[(0, 3), (1, 2), (1, 1), (2, 0), (2, 3)],
        "3.4" => &[(0, 3), (2, 2), (3, 0), (3, 3)],
        _ => return None,
    };
    Some(Polygon2::from_ints(verts))
}

// --- serialization DTOs ---

/// A coordinate pair carrying both a float approximation and the exact value.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct CoordDto {
    pub approx: [f64; 2],
    pub exact: [String; 2],
}

impl From<&QPoint> for CoordDto {
    fn from(p: &QPoint) -> Self {
        CoordDto {
            approx: [q_to_f64(&p.x), q_to_f64(&p.y)],
            exact: [q_to_string(&p.x), q_to_string(&p.y)],
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PieceDto {
    Segment {
        start: CoordDto,
        end: CoordDto,
        start_closed: bool,
        end_closed: bool,
    },
    Point {
        at: CoordDto,
    },
}

impl From<&ChainPiece> for PieceDto {
    fn from(piece: &ChainPiece) -> Self {
        match piece {
            ChainPiece::Segment { start, end, start_closed, end_closed } => PieceDto::Segment {
                start: start.into(),
                end: end.into(),
                start_closed: *start_closed,
                end_closed: *end_closed,
            },
            ChainPiece::Point(p) => PieceDto::Point { at: p.into() },
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct ChainDto {
    pub pieces: Vec<PieceDto>,
}

impl From<&SegmentChain> for ChainDto {
    fn from(chain: &SegmentChain) -> Self {
        ChainDto {
            pieces: chain.pieces().iter().map(PieceDto::from).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StaircaseDto {
    /// Finite chain from the bottom of the vertical ray to the start of the
    /// horizontal ray.
    pub chain: Vec<CoordDto>,
    pub vertical_ray_from: CoordDto,
    pub horizontal_ray_from: CoordDto,
}

impl From<&Staircase2> for StaircaseDto {
    fn from(stair: &Staircase2) -> Self {
        StaircaseDto {
            chain: stair.chain().iter().map(CoordDto::from).collect(),
            vertical_ray_from: stair.vertical_ray_base().into(),
            horizontal_ray_from: stair.horizontal_ray_base().into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BetaViolationDto {
    pub subset: IndexSet,
    pub witness: CoordDto,
}

#[derive(Debug, Clone, Serialize)]
pub struct PolygonVerdictDto {
    pub fdh_convex: bool,
    pub alpha_holds: bool,
    pub beta_holds: bool,
    pub beta_violations: Vec<BetaViolationDto>,
    pub staircase: StaircaseDto,
    pub weakly_efficient: ChainDto,
    pub efficient: ChainDto,
    pub min_face_1: ChainDto,
    pub min_face_2: ChainDto,
}

impl From<&PolygonVerdict> for PolygonVerdictDto {
    fn from(v: &PolygonVerdict) -> Self {
        PolygonVerdictDto {
            fdh_convex: v.fdh_convex,
            alpha_holds: v.alpha_holds,
            beta_holds: v.beta_holds,
            beta_violations: v
                .beta_violations
                .iter()
                .map(|(subset, witness)| BetaViolationDto {
                    subset: subset.clone(),
                    witness: witness.into(),
                })
                .collect(),
            staircase: (&v.staircase).into(),
            weakly_efficient: (&v.weakly_efficient).into(),
            efficient: (&v.efficient).into(),
            min_face_1: (&v.min_face_1).into(),
            min_face_2: (&v.min_face_2).into(),
        }
    }
}
