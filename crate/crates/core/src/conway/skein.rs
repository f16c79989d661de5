//! Truncated Conway polynomial by skein-tree descent.
//!
//! Walk the components from their starts. The first time a crossing is met
//! on its under-strand, apply `∇(L_+) - ∇(L_-) = z∇(L_0)`: the smoothing is
//! evaluated recursively with one degree less, and the crossing is switched
//! so the walk can continue. When the walk ends the diagram is descending
//! and represents an unlink. Branches are cut short when the diagram is
//! split, when the component count leaves nothing to compute within the
//! budget, and when only the lowest coefficient remains (linking numbers
//! give it directly).

use std::collections::HashMap;

use crate::diagram::LinkDiagram;

use super::hoste::hoste_by_laplacian;
use super::poly::TruncatedPoly;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SkeinStats {
    pub nodes: u64,
    pub linking_leaves: u64,
    pub pruned: u64,
    pub cache_hits: u64,
}

type Memo = HashMap<(Vec<u32>, usize), Vec<i64>>;

/// Skein evaluator with an optional memo cache keyed by canonical diagram
/// serialization and degree budget.
#[derive(Debug, Default)]
pub struct SkeinEngine {
    cache: Option<Memo>,
    skip_linking_leaves: bool,
    stats: SkeinStats,
}

impl SkeinEngine {
    pub fn new() -> SkeinEngine {
        SkeinEngine::with_cache(true)
    }

    pub fn with_cache(enabled: bool) -> SkeinEngine {
        SkeinEngine {
            cache: enabled.then(HashMap::new),
            skip_linking_leaves: false,
            stats: SkeinStats::default(),
        }
    }

    /// Descends all the way to unlinks instead of reading the lowest
    /// coefficient off the linking numbers. Slower; used as an oracle.
    pub fn without_linking_leaves(mut self) -> SkeinEngine {
        self.skip_linking_leaves = true;
        self
    }

    pub fn stats(&self) -> SkeinStats {
        self.stats
    }

    /// Coefficients `a_0..=a_max_degree` of the Conway polynomial.
    pub fn conway_truncated(&mut self, d: &LinkDiagram, max_degree: usize) -> TruncatedPoly {
        let components = d.component_count();
        let coefficients = self.eval(d, max_degree);
        TruncatedPoly::new(coefficients, Some(components))
    }

    fn eval(&mut self, d: &LinkDiagram, budget: usize) -> Vec<i64> {
        self.stats.nodes += 1;
        let mut out = vec![0i64; budget + 1];
        let d = d.simplify();
        let labels = d.components();
        let p = labels.count();
        if p == 0 {
            return out;
        }
        if d.crossing_count() == 0 {
            if p == 1 {
                out[0] = 1;
            }
            return out;
        }
        if budget + 1 < p || d.is_split_with(&labels) {
            self.stats.pruned += 1;
            return out;
        }
        // Only degrees m with m + p odd can be non-zero.
        let top = if (budget + p) % 2 == 1 { budget } else { budget - 1 };
        if top + 1 == p && !self.skip_linking_leaves {
            self.stats.linking_leaves += 1;
            out[top] = hoste_by_laplacian(&d.linking_matrix_with(&labels));
            return out;
        }
        if top == 0 {
            // p == 1 by parity: a knot has a_0 = 1.
            out[0] = 1;
            return out;
        }

        let key = self.cache.as_ref().map(|_| (d.canonical_key(&labels), top));
        if let (Some(cache), Some(key)) = (&self.cache, &key) {
            if let Some(hit) = cache.get(key) {
                self.stats.cache_hits += 1;
                out[..=top].copy_from_slice(hit);
                return out;
            }
        }

        let mut work = d.clone();
        let mut seen = vec![false; d.crossing_count()];
        for (c, over) in d.traversal(&labels) {
            if std::mem::replace(&mut seen[c], true) || over {
                continue;
            }
            let sign = work.sign(c).value();
            let smoothed = work.smooth_crossing(c).expect("crossing exists");
            let sub = self.eval(&smoothed, top - 1);
            for (k, &a) in sub.iter().enumerate() {
                out[k + 1] += sign * a;
            }
            work.switch_in_place(c);
        }
        if p == 1 {
            out[0] += 1;
        }

        if let (Some(cache), Some(key)) = (&mut self.cache, key) {
            cache.insert(key, out[..=top].to_vec());
        }
        out
    }
}

/// One-shot evaluation with a fresh cache.
pub fn conway_truncated(d: &LinkDiagram, max_degree: usize) -> TruncatedPoly {
    SkeinEngine::new().conway_truncated(d, max_degree)
}

/// The coefficient of `z^m`.
pub fn a_coefficient(d: &LinkDiagram, m: usize) -> i64 {
    conway_truncated(d, m).coefficient(m).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::conway::hoste::hoste_by_trees;

    fn closure(n: usize, s: &[i64]) -> LinkDiagram {
        LinkDiagram::closure(&BraidWord::from_signed(n, s).unwrap())
    }

    #[test]
    fn unknot() {
        for budget in 0..4 {
            let p = conway_truncated(&LinkDiagram::unlink(1), budget);
            let mut want = vec![0; budget + 1];
            want[0] = 1;
            assert_eq!(p.coefficients(), want.as_slice());
        }
        assert_eq!(conway_truncated(&closure(2, &[1]), 3).coefficients(), &[1, 0, 0, 0]);
    }

    #[test]
    fn hopf_and_trefoil() {
        assert_eq!(conway_truncated(&closure(2, &[1, 1]), 1).coefficients(), &[0, 1]);
        assert_eq!(conway_truncated(&closure(2, &[-1, -1]), 1).coefficients(), &[0, -1]);
        assert_eq!(conway_truncated(&closure(2, &[1, 1, 1]), 2).coefficients(), &[1, 0, 1]);
        // figure eight: 1 - z^2
        assert_eq!(
            conway_truncated(&closure(3, &[1, -2, 1, -2]), 4).coefficients(),
            &[1, 0, -1, 0, 0]
        );
        // (2,5) torus knot: 1 + 3z^2 + z^4
        assert_eq!(
            conway_truncated(&closure(2, &[1, 1, 1, 1, 1]), 4).coefficients(),
            &[1, 0, 3, 0, 1]
        );
    }

    #[test]
    fn axis_link_of_trivial_braid() {
        let d = LinkDiagram::axis_link(&BraidWord::identity(2));
        assert_eq!(a_coefficient(&d, 2), 1);
        assert_eq!(hoste_by_trees(&d.linking_matrix()), 1);
        let d = LinkDiagram::axis_link(&BraidWord::identity(1));
        assert_eq!(conway_truncated(&d, 3).coefficients(), &[0, 1, 0, 0]);
    }

    #[test]
    fn budget_zero_terminates() {
        let p = conway_truncated(&closure(2, &[1, 1]), 0);
        assert_eq!(p.coefficients(), &[0]);
        let p = conway_truncated(&closure(3, &[1, 1, 2, 2]), 0);
        assert_eq!(p.coefficients(), &[0]);
    }

    #[test]
    fn full_descent_agrees() {
        let b = BraidWord::from_signed(4, &[1, 1, -2, 3, 3, 2, 2, -1, 3]).unwrap();
        for d in [LinkDiagram::axis_link(&b), LinkDiagram::closure(&b)] {
            let fast = SkeinEngine::new().conway_truncated(&d, 5);
            let slow = SkeinEngine::with_cache(false)
                .without_linking_leaves()
                .conway_truncated(&d, 5);
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn cache_does_not_change_results() {
        let b = BraidWord::from_signed(4, &[1, -2, 3, 2, 1, -3, 2, -1, 2]).unwrap();
        let d = LinkDiagram::axis_link(&b);
        let with = SkeinEngine::with_cache(true).conway_truncated(&d, 5);
        let without = SkeinEngine::with_cache(false).conway_truncated(&d, 5);
        assert_eq!(with, without);
    }
}
