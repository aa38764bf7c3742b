//! Multi-objective efficiency analysis over finite point sets and planar
//! polygonal domains.
//!
//! The crate computes efficient, weakly efficient, and strictly efficient
//! sets, decides the alpha/beta equivalence conditions exactly on 2-D
//! polygons, produces separating-weight certificates for weakly efficient
//! points of convex free-disposal-hull instances, provides sampled convexity
//! checkers, and applies the machinery to a bi-objective lasso whose
//! objectives carry a small coupling term that removes weak-only solutions.

mod simplex;
pub mod certificate;
pub mod convexopt;
pub mod effset;
pub mod error;
pub mod geom2d;
pub mod lasso;
pub mod order;
pub mod svg;

pub use error::{Error, Result};
pub use order::{IndexSet, Point};
