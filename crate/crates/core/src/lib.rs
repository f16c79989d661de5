//! Braid words, exchange moves, link diagrams and truncated Conway
//! polynomials, with checks of the quantitative behaviour of exchange-move
//! families.

pub mod braid;
pub mod conway;
pub mod diagram;
pub mod error;
pub mod experiments;

pub use braid::{
    canonical_case1_braid, canonical_case2_braid, canonical_odd_knot_braid, full_twist_word,
    kappa_word, Admissibility, BraidWord, CycleDecomposition, ExchangeForm, Letter,
    NormalizedCycle, Permutation, Sign, Theorem1Verdict,
};
pub use conway::{LaurentPoly, SkeinEngine, TruncatedPoly};
pub use diagram::{ComponentLabeling, LinkDiagram, LinkingMatrix};
pub use error::{BraidError, DiagramError, ExperimentError};
