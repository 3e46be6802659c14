//! Exact computations on strong digraphs: distance matrices, Smith normal
//! forms, distance ideals over the integers, forbidden-pattern
//! classification of digraphs with one trivial distance ideal, and the
//! closed forms for the solved families.

pub mod digraph;
pub mod error;
pub mod families;
pub mod ideal;
pub mod linalg;
pub mod pattern;
pub mod poly;
pub mod verify;

pub use digraph::{Digraph, DistanceMatrixKind, LambdaParams};
pub use error::{Error, Result};
pub use ideal::{Ideal, TrivialityProfile};
pub use linalg::{BigMatrix, SnfResult};
pub use pattern::{ClassificationResult, Pattern};
pub use poly::{MonomialOrder, MultiPoly, SymMatrix, VarContext};
