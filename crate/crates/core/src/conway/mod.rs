//! Conway polynomial evaluation and its independent cross-checks.

pub mod burau;
pub mod hoste;
pub mod poly;
pub mod skein;

pub use burau::{alexander_burau, conway_to_alexander, reduced_burau};
pub use hoste::{hoste_by_laplacian, hoste_by_trees, TREE_ENUMERATION_LIMIT};
pub use poly::{LaurentPoly, TruncatedPoly};
pub use skein::{a_coefficient, conway_truncated, SkeinEngine, SkeinStats};

use crate::diagram::LinkingMatrix;

/// `a_{p-1}` from linking numbers. Uses the matrix-tree evaluator; the
/// tree-enumeration evaluator is kept for cross-checking.
pub fn hoste_lowest(m: &LinkingMatrix) -> i64 {
    hoste_by_laplacian(m)
}
