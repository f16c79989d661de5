//! Benchmark inputs shared by the criterion targets.

use braidex_core::{canonical_odd_knot_braid, BraidWord, LinkDiagram};

/// Axis link of `b_m²` for the canonical odd knot braid on `n` strands.
pub fn squared_axis_link(n: usize, m: i64) -> LinkDiagram {
    let form = canonical_odd_knot_braid(n).expect("odd n >= 5");
    LinkDiagram::axis_link(&form.family_member(m).square())
}

/// A fixed mid-sized braid used for the Burau and closure benchmarks.
pub fn sample_braid() -> BraidWord {
    BraidWord::parse(4, "-3 -3 -2 -2 -3 -1 -2 -2 -1 -1 2").expect("valid word")
}
