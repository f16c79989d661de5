//! Exact checks of the quantitative claims about the families
//! `b_m = α κ^m β κ^{-m}` and verification of the 4-braid corpus.

mod checks;
mod corpus;
mod report;

use std::fmt;
use std::ops::RangeInclusive;

use num_rational::Ratio;
use rayon::prelude::*;

use crate::braid::{BraidWord, ExchangeForm};
use crate::conway::SkeinEngine;
use crate::diagram::LinkDiagram;
use crate::error::ExperimentError;

pub use checks::{eq54_check, lemma64_check, prop25_check, prop41_dn_check};
pub use corpus::{parse_corpus, table8_verify, table8_verify_str, CorpusRow};
pub use report::{Check, ExperimentReport, SampleRow};

/// Evaluation settings shared by every experiment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvalOptions {
    pub cache: bool,
}

impl Default for EvalOptions {
    fn default() -> EvalOptions {
        EvalOptions { cache: true }
    }
}

/// `m ↦ a_degree` over a contiguous range of `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientSequence {
    degree: usize,
    start: i64,
    values: Vec<i64>,
    components: usize,
    parity_ok: bool,
}

impl CoefficientSequence {
    pub fn new(degree: usize, start: i64, values: Vec<i64>) -> CoefficientSequence {
        CoefficientSequence {
            degree,
            start,
            values,
            components: 0,
            parity_ok: true,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn range(&self) -> RangeInclusive<i64> {
        self.start..=self.start + self.values.len() as i64 - 1
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, m: i64) -> Option<i64> {
        let i = usize::try_from(m - self.start).ok()?;
        self.values.get(i).copied()
    }

    pub fn points(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.range().zip(self.values.iter().copied())
    }

    /// Component count of the sampled links (0 when unknown).
    pub fn components(&self) -> usize {
        self.components
    }

    /// Whether every truncated polynomial behind the samples vanished where
    /// its component count forces it to.
    pub fn parity_ok(&self) -> bool {
        self.parity_ok
    }

    /// `k`-th forward differences; entry `i` belongs to `m = start + i`.
    pub fn differences(&self, k: usize) -> Vec<i64> {
        let mut d = self.values.clone();
        for _ in 0..k {
            d = d.windows(2).map(|w| w[1] - w[0]).collect();
        }
        d
    }

    pub fn fit(&self, degree_bound: usize) -> Result<PolynomialFit, ExperimentError> {
        fit_polynomial(self, degree_bound)
    }
}

/// Polynomial in `m` with exact rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialFit {
    degree_bound: usize,
    coefficients: Vec<Ratio<i64>>,
}

impl PolynomialFit {
    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn coefficients(&self) -> &[Ratio<i64>] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> Ratio<i64> {
        self.coefficients.get(k).copied().unwrap_or_default()
    }

    pub fn eval(&self, m: i64) -> Ratio<i64> {
        self.coefficients
            .iter()
            .rev()
            .fold(Ratio::from_integer(0), |acc, &c| acc * m + c)
    }
}

impl fmt::Display for PolynomialFit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if *c.numer() == 0 {
                continue;
            }
            let negative = *c.numer() < 0;
            let mag = if negative { -c } else { *c };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = if mag.is_integer() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            match k {
                0 => out.push_str(&mag),
                _ => {
                    if mag != "1" {
                        out.push_str(&mag);
                    }
                    out.push('m');
                    if k > 1 {
                        out.push_str(&format!("^{k}"));
                    }
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// Newton interpolation through the first `degree_bound + 1` samples,
/// checked against every remaining sample.
pub fn fit_polynomial(
    s: &CoefficientSequence,
    degree_bound: usize,
) -> Result<PolynomialFit, ExperimentError> {
    let needed = degree_bound + 2;
    if s.values.len() < needed {
        return Err(ExperimentError::TooFewSamples {
            needed,
            got: s.values.len(),
        });
    }
    let mut coefficients = vec![Ratio::from_integer(0i64); degree_bound + 1];
    // basis polynomial Π_{j<k} (m - start - j), integer coefficients
    let mut basis = vec![1i64];
    let mut factorial = 1i64;
    for k in 0..=degree_bound {
        if k > 0 {
            factorial *= k as i64;
            let shift = s.start + k as i64 - 1;
            let mut next = vec![0i64; basis.len() + 1];
            for (i, &b) in basis.iter().enumerate() {
                next[i + 1] += b;
                next[i] -= shift * b;
            }
            basis = next;
        }
        let delta = s.differences(k)[0];
        let scale = Ratio::new(delta, factorial);
        for (i, &b) in basis.iter().enumerate() {
            coefficients[i] += scale * b;
        }
    }
    let fit = PolynomialFit {
        degree_bound,
        coefficients,
    };
    if let Some((m, _)) = s.points().find(|&(m, v)| fit.eval(m) != Ratio::from_integer(v)) {
        return Err(ExperimentError::NotPolynomial {
            degree: degree_bound,
            m,
        });
    }
    Ok(fit)
}

/// Evaluates `a_degree` of `build(m)` for every `m`, in parallel.
pub(crate) fn sample<F>(
    ms: RangeInclusive<i64>,
    degree: usize,
    opts: EvalOptions,
    build: F,
) -> Result<CoefficientSequence, ExperimentError>
where
    F: Fn(i64) -> Result<LinkDiagram, ExperimentError> + Sync,
{
    let start = *ms.start();
    if ms.is_empty() {
        return Err(ExperimentError::TooFewSamples { needed: 1, got: 0 });
    }
    let results: Vec<(i64, usize, bool)> = ms
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|m| {
            let d = build(m)?;
            let p = d.component_count();
            if degree + 1 < p {
                return Err(ExperimentError::DegreeTooLow {
                    degree,
                    lowest: p - 1,
                    components: p,
                });
            }
            let poly = SkeinEngine::with_cache(opts.cache).conway_truncated(&d, degree);
            Ok((poly.coefficient(degree).unwrap(), p, poly.satisfies_parity()))
        })
        .collect::<Result<_, _>>()?;
    let components = results[0].1;
    Ok(CoefficientSequence {
        degree,
        start,
        values: results.iter().map(|r| r.0).collect(),
        components: if results.iter().all(|r| r.1 == components) {
            components
        } else {
            0
        },
        parity_ok: results.iter().all(|r| r.2),
    })
}

/// `m ↦ a_degree` of the axis link of `b_m` (or of `b_m²`).
pub fn axis_sequence(
    f: &ExchangeForm,
    square: bool,
    ms: RangeInclusive<i64>,
    degree: usize,
    opts: EvalOptions,
) -> Result<CoefficientSequence, ExperimentError> {
    sample(ms, degree, opts, |m| {
        Ok(LinkDiagram::axis_link(&member(f, m, square)))
    })
}

pub(crate) fn member(f: &ExchangeForm, m: i64, square: bool) -> BraidWord {
    let b = f.family_member(m);
    if square {
        b.square()
    } else {
        b
    }
}

/// Label of the component through top position `k` in the axis link of `w`.
pub fn axis_component_label(w: &BraidWord, k: usize) -> usize {
    let cycles = w.permutation().cycles();
    let mut seen: Vec<usize> = Vec::new();
    for j in 1..=k {
        let key = cycles.cycle_of(j).iter().copied().min().unwrap();
        if !seen.contains(&key) {
            seen.push(key);
        }
    }
    let key = cycles.cycle_of(k).iter().copied().min().unwrap();
    seen.iter().position(|&x| x == key).unwrap()
}
