//! Componentwise partial orders on `R^m` restricted to a coordinate subset.
//!
//! Three relations are provided, each comparing two points only on the
//! coordinates selected by an [`IndexSet`]:
//!
//! * [`leq`]  — every selected coordinate is `<=`,
//! * [`lt`]   — every selected coordinate is strictly `<`,
//! * [`lneq`] — `leq` holds and at least one selected coordinate is strict
//!   (the dominance relation used to define efficient points).
//!
//! Comparisons are exact floating-point comparisons. There is deliberately no
//! tolerance here: tie semantics are what distinguish weak efficiency from
//! efficiency, so fuzzing them would change the answers.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A point of `R^m`. Coordinates are finite (no NaN, no infinities);
/// this is enforced at construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Point {
    coords: Vec<f64>,
}

impl From<Point> for Vec<f64> {
    fn from(p: Point) -> Self {
        p.coords
    }
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::invalid("a point needs at least one coordinate"));
        }
        if let Some(c) = coords.iter().find(|c| !c.is_finite()) {
            return Err(Error::invalid(format!("non-finite coordinate {c}")));
        }
        Ok(Point { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> f64 {
        self.coords[i]
    }
}

impl TryFrom<Vec<f64>> for Point {
    type Error = Error;

    fn try_from(coords: Vec<f64>) -> Result<Self> {
        Point::new(coords)
    }
}

/// A nonempty subset of the coordinate indices `{1, ..., m}`, kept sorted.
/// Indices are 1-based throughout, matching the usual objective numbering.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct IndexSet {
    members: Vec<usize>,
}

impl TryFrom<Vec<usize>> for IndexSet {
    type Error = Error;

    fn try_from(members: Vec<usize>) -> Result<Self> {
        IndexSet::new(members)
    }
}

impl From<IndexSet> for Vec<usize> {
    fn from(s: IndexSet) -> Self {
        s.members
    }
}

impl IndexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        if members.is_empty() {
            return Err(Error::invalid("index set must be nonempty"));
        }
        if members[0] == 0 {
            return Err(Error::invalid("indices are 1-based; 0 is not a valid index"));
        }
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("duplicate index in index set"));
        }
        Ok(IndexSet { members })
    }

    /// The full set `{1, ..., m}`.
    pub fn full(m: usize) -> Result<Self> {
        IndexSet::new(1..=m)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false // nonempty by construction
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn max_index(&self) -> usize {
        *self.members.last().unwrap()
    }

    /// Checks the set is usable against points of dimension `m`.
    pub fn check_dim(&self, m: usize) -> Result<()> {
        if self.max_index() > m {
            return Err(Error::dim(format!(
                "index {} out of range for dimension {m}",
                self.max_index()
            )));
        }
        Ok(())
    }

    /// Iterates the selected 0-based coordinate positions.
    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().map(|i| i - 1)
    }
}

fn check_pair(y: &Point, y2: &Point, idx: &IndexSet) -> Result<()> {
    if y.dim() != y2.dim() {
        return Err(Error::dim(format!(
            "points have dimensions {} and {}",
            y.dim(),
            y2.dim()
        )));
    }
    idx.check_dim(y.dim())
}

/// `y <=_I y2`: every selected coordinate of `y` is `<=` the one of `y2`.
pub fn leq(y: &Point, y2: &Point, idx: &IndexSet) -> Result<bool> {
    check_pair(y, y2, idx)?;
    Ok(idx.positions().all(|p| y.coord(p) <= y2.coord(p)))
}

/// `y <_I y2`: every selected coordinate strictly smaller.
pub fn lt(y: &Point, y2: &Point, idx: &IndexSet) -> Result<bool> {
    check_pair(y, y2, idx)?;
    Ok(idx.positions().all(|p| y.coord(p) < y2.coord(p)))
}

/// `y` dominates `y2` on `I`: `leq` holds and at least one coordinate is strict.
pub fn lneq(y: &Point, y2: &Point, idx: &IndexSet) -> Result<bool> {
    check_pair(y, y2, idx)?;
    let mut strict = false;
    for p in idx.positions() {
        let (a, b) = (y.coord(p), y2.coord(p));
        if a > b {
            return Ok(false);
        }
        strict |= a < b;
    }
    Ok(strict)
}

/// Unchecked slice variants, for inner loops that have validated dimensions
/// up front. Positions are 0-based here.
pub(crate) mod raw {
    pub fn leq_on(a: &[f64], b: &[f64], positions: &[usize]) -> bool {
        positions.iter().all(|&p| a[p] <= b[p])
    }

    pub fn lt_on(a: &[f64], b: &[f64], positions: &[usize]) -> bool {
        positions.iter().all(|&p| a[p] < b[p])
    }

    pub fn lneq_on(a: &[f64], b: &[f64], positions: &[usize]) -> bool {
        let mut strict = false;
        for &p in positions {
            if a[p] > b[p] {
                return false;
            }
            strict |= a[p] < b[p];
        }
        strict
    }
}
