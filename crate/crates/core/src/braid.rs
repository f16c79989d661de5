//! Braid words in Artin generators, their permutations, and the exchange-move
//! families built on top of them.
//!
//! Words are read left to right and drawn top to bottom. A permutation maps a
//! top position to the bottom position reached by the strand starting there.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::BraidError;

/// Crossing sign, shared by braid letters and diagram crossings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }
}

/// One Artin generator `σ_i^{±1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    index: usize,
    sign: Sign,
}

impl Letter {
    pub fn new(index: usize, sign: Sign) -> Letter {
        assert!(index >= 1, "generator indices start at 1");
        Letter { index, sign }
    }

    pub fn pos(index: usize) -> Letter {
        Letter::new(index, Sign::Pos)
    }

    pub fn neg(index: usize) -> Letter {
        Letter::new(index, Sign::Neg)
    }

    /// `i > 0` is `σ_i`, `i < 0` is `σ_{-i}^{-1}`.
    pub fn from_signed(v: i64) -> Option<Letter> {
        match v {
            0 => None,
            v if v > 0 => Some(Letter::pos(v as usize)),
            v => Some(Letter::neg(v.unsigned_abs() as usize)),
        }
    }

    pub fn to_signed(self) -> i64 {
        self.index as i64 * self.sign.value()
    }

    pub fn index(self) -> usize {
        self.index
    }

    pub fn sign(self) -> Sign {
        self.sign
    }

    pub fn inverse(self) -> Letter {
        Letter::new(self.index, self.sign.flip())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_signed())
    }
}

/// A word in the Artin generators of `B_n`. The empty word is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<BraidWord, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        if let Some(l) = letters.iter().find(|l| l.index >= strands) {
            return Err(BraidError::IndexOutOfRange {
                index: l.index,
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> BraidWord {
        assert!(strands >= 1);
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn from_signed(strands: usize, word: &[i64]) -> Result<BraidWord, BraidError> {
        let letters = word
            .iter()
            .enumerate()
            .map(|(position, &v)| {
                Letter::from_signed(v).ok_or(BraidError::Parse {
                    position,
                    token: v.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        BraidWord::new(strands, letters)
    }

    /// Parses whitespace separated signed integers. Positions in errors are
    /// 0-based token offsets.
    pub fn parse(strands: usize, text: &str) -> Result<BraidWord, BraidError> {
        let mut letters = Vec::new();
        for (position, token) in text.split_whitespace().enumerate() {
            let v = i64::from_str(token).map_err(|_| BraidError::Parse {
                position,
                token: token.to_string(),
            })?;
            let letter = Letter::from_signed(v).ok_or_else(|| BraidError::Parse {
                position,
                token: token.to_string(),
            })?;
            if letter.index >= strands {
                return Err(BraidError::IndexOutOfRange {
                    index: letter.index,
                    strands,
                });
            }
            letters.push(letter);
        }
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.to_signed()).collect()
    }

    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Composes a sequence of words on the same strand count.
    pub fn product<'a, I>(strands: usize, words: I) -> Result<BraidWord, BraidError>
    where
        I: IntoIterator<Item = &'a BraidWord>,
    {
        words
            .into_iter()
            .try_fold(BraidWord::identity(strands), |acc, w| acc.compose(w))
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Interchanges every `σ_i` and `σ_i^{-1}`.
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|l| l.inverse()).collect(),
        }
    }

    pub fn reverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// Moves the first `k` letters to the end (conjugation by that prefix).
    /// `k` is taken modulo the word length; negative values rotate the other
    /// way.
    pub fn cyclic_rotate(&self, k: isize) -> BraidWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let shift = k.rem_euclid(letters.len() as isize) as usize;
            letters.rotate_left(shift);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    pub fn power(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.letters.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub fn square(&self) -> BraidWord {
        self.power(2)
    }

    /// `w ↦ w σ_n^{±1}` on `n + 1` strands.
    pub fn stabilize(&self, sign: Sign) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.push(Letter::new(self.strands, sign));
        BraidWord {
            strands: self.strands + 1,
            letters,
        }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign.value()).sum()
    }

    pub fn permutation(&self) -> Permutation {
        // positions[p] = top position of the strand currently at position p
        let mut at: Vec<usize> = (1..=self.strands).collect();
        for l in &self.letters {
            at.swap(l.index - 1, l.index);
        }
        let mut images = vec![0; self.strands];
        for (bottom, &top) in at.iter().enumerate() {
            images[top - 1] = bottom + 1;
        }
        Permutation { images }
    }

    /// Linking number between the closures of the strand sets `a` and `b`
    /// (top positions, 1-based). Both sets must be unions of cycles of the
    /// braid permutation.
    pub fn strand_linking(&self, a: &[usize], b: &[usize]) -> Result<i64, BraidError> {
        let n = self.strands;
        let mut class = vec![0u8; n + 1];
        for (set, tag) in [(a, 1u8), (b, 2u8)] {
            for &k in set {
                if k == 0 || k > n {
                    return Err(BraidError::IndexOutOfRange { index: k, strands: n });
                }
                if class[k] != 0 {
                    return Err(BraidError::NotDisjoint);
                }
                class[k] = tag;
            }
        }
        let perm = self.permutation();
        for k in 1..=n {
            if class[k] != 0 && class[perm.apply(k)] != class[k] {
                return Err(BraidError::NotUnionOfCycles);
            }
        }
        let mut at: Vec<usize> = (1..=n).collect();
        let mut twice = 0i64;
        for l in &self.letters {
            let (x, y) = (class[at[l.index - 1]], class[at[l.index]]);
            if x != 0 && y != 0 && x != y {
                twice += l.sign.value();
            }
            at.swap(l.index - 1, l.index);
        }
        Ok(twice / 2)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

/// A permutation of `{1..n}`; `apply(k)` is the bottom position of the strand
/// starting at top position `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Permutation, BraidError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(BraidError::NotAPermutation);
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self` followed by `other`, so that `π(ab) = π(a).then(π(b))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            images: self.images.iter().map(|&v| other.apply(v)).collect(),
        }
    }

    pub fn cycles(&self) -> CycleDecomposition {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k);
                k = self.apply(k);
            }
            cycles.push(cycle);
        }
        CycleDecomposition { n, cycles }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycles())
    }
}

/// Disjoint cycles of a permutation, each starting at its smallest element,
/// ordered by that element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    n: usize,
    cycles: Vec<Vec<usize>>,
}

/// An `n`-cycle written as `(x_1, …, x_{n-1}, n)`, mapping `x_i ↦ x_{i+1}`
/// and `n ↦ x_1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalizedCycle {
    pub entries: Vec<usize>,
    /// The 1-based position `l` with `x_l = 1`.
    pub one_position: usize,
}

impl CycleDecomposition {
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn count(&self) -> usize {
        self.cycles.len()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    pub fn cycle_of(&self, k: usize) -> &[usize] {
        self.cycles
            .iter()
            .find(|c| c.contains(&k))
            .expect("element outside the permutation domain")
    }

    pub fn normalized(&self) -> Result<NormalizedCycle, BraidError> {
        if self.cycles.len() != 1 || self.n == 0 {
            return Err(BraidError::NotFullCycle);
        }
        let cycle = &self.cycles[0];
        let at_n = cycle.iter().position(|&x| x == self.n).expect("n-cycle contains n");
        let entries: Vec<usize> = (1..=cycle.len())
            .map(|i| cycle[(at_n + i) % cycle.len()])
            .collect();
        let one_position = entries.iter().position(|&x| x == 1).unwrap() + 1;
        Ok(NormalizedCycle {
            entries,
            one_position,
        })
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// `Δ²_{[i,j]}^{count} = ((σ_i ⋯ σ_{j-1})^{j-i+1})^{count}` on `strands` strands.
pub fn full_twist_word(
    strands: usize,
    i: usize,
    j: usize,
    count: i64,
) -> Result<BraidWord, BraidError> {
    if i < 1 || i >= j || j > strands {
        return Err(BraidError::InvalidRange { i, j, strands });
    }
    let cycle = BraidWord {
        strands,
        letters: (i..j).map(Letter::pos).collect(),
    };
    Ok(cycle.power((j - i + 1) as i64).power(count))
}

/// `κ = (σ_1 ⋯ σ_{n-2})(σ_{n-2} ⋯ σ_1)`, a pure braid.
pub fn kappa_word(strands: usize) -> Result<BraidWord, BraidError> {
    if strands < 3 {
        return Err(BraidError::TooFewStrands {
            needed: 3,
            got: strands,
        });
    }
    let letters = (1..=strands - 2)
        .chain((1..=strands - 2).rev())
        .map(Letter::pos)
        .collect();
    Ok(BraidWord { strands, letters })
}

/// Outcome of the exchange-move admissibility test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Admissibility {
    pub admissible: bool,
    /// Set for `n ≤ 3`, where the exchange move is degenerate and the word is
    /// reported admissible without inspection.
    pub degenerate: bool,
}

/// A braid written `α·β` with `α` avoiding `σ_{n-1}` and `β` avoiding `σ_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeForm {
    alpha: BraidWord,
    beta: BraidWord,
}

impl ExchangeForm {
    pub fn new(alpha: BraidWord, beta: BraidWord) -> Result<ExchangeForm, BraidError> {
        let n = alpha.strands;
        if beta.strands != n {
            return Err(BraidError::StrandMismatch {
                left: n,
                right: beta.strands,
            });
        }
        if n < 3 {
            return Err(BraidError::TooFewStrands { needed: 3, got: n });
        }
        if alpha.letters.iter().any(|l| l.index == n - 1) {
            return Err(BraidError::InvalidExchangeForm("alpha uses the last generator"));
        }
        if beta.letters.iter().any(|l| l.index == 1) {
            return Err(BraidError::InvalidExchangeForm("beta uses the first generator"));
        }
        Ok(ExchangeForm { alpha, beta })
    }

    pub fn strands(&self) -> usize {
        self.alpha.strands
    }

    pub fn alpha(&self) -> &BraidWord {
        &self.alpha
    }

    pub fn beta(&self) -> &BraidWord {
        &self.beta
    }

    pub fn word(&self) -> BraidWord {
        self.alpha.compose(&self.beta).expect("same strand count")
    }

    /// The form of the mirrored braid: `ᾱ·β̄`.
    pub fn mirror(&self) -> ExchangeForm {
        ExchangeForm {
            alpha: self.alpha.mirror(),
            beta: self.beta.mirror(),
        }
    }

    /// `α κ^m β κ^{-m}`.
    pub fn family_member(&self, m: i64) -> BraidWord {
        let kappa = kappa_word(self.strands()).expect("forms have at least 3 strands");
        let mut letters = self.alpha.letters.clone();
        letters.extend(kappa.power(m).letters);
        letters.extend_from_slice(&self.beta.letters);
        letters.extend(kappa.power(-m).letters);
        BraidWord {
            strands: self.strands(),
            letters,
        }
    }
}

/// Positions (in the word) of letters with index 1 and index `n - 1`.
fn boundary_pattern(w: &BraidWord) -> Vec<(usize, bool)> {
    let n = w.strands;
    w.letters
        .iter()
        .enumerate()
        .filter(|(_, l)| l.index == 1 || l.index == n - 1)
        .map(|(pos, l)| (pos, l.index == 1))
        .collect()
}

/// Number of maximal runs of equal kind in a cyclic sequence.
fn cyclic_runs(kinds: &[bool]) -> usize {
    if kinds.is_empty() {
        return 0;
    }
    let changes = (0..kinds.len())
        .filter(|&i| kinds[i] != kinds[(i + 1) % kinds.len()])
        .count();
    changes.max(1)
}

impl BraidWord {
    /// Exchange-move admissibility up to cyclic rotation: the index-1 letters
    /// and the index-(n-1) letters each occupy one cyclic block when the word
    /// is restricted to those two indices.
    pub fn admits_exchange(&self) -> Admissibility {
        if self.strands <= 3 {
            return Admissibility {
                admissible: true,
                degenerate: true,
            };
        }
        let kinds: Vec<bool> = boundary_pattern(self).into_iter().map(|(_, k)| k).collect();
        Admissibility {
            admissible: cyclic_runs(&kinds) <= 2,
            degenerate: false,
        }
    }

    /// A cyclic rotation of the word split as `α·β`, or `None` when no
    /// rotation admits the split.
    pub fn exchange_split(&self) -> Option<ExchangeForm> {
        let n = self.strands;
        if n < 3 {
            return None;
        }
        let pattern = boundary_pattern(self);
        let kinds: Vec<bool> = pattern.iter().map(|&(_, k)| k).collect();
        if n == 3 {
            // Every letter is σ_1 or σ_2; the same block test applies.
            if cyclic_runs(&kinds) > 2 {
                return None;
            }
        } else if !self.admits_exchange().admissible {
            return None;
        }
        let has_first = kinds.iter().any(|&k| k);
        let has_last = kinds.iter().any(|&k| !k);
        let empty = BraidWord::identity(n);
        let (alpha, beta) = match (has_first, has_last) {
            (_, false) => (self.clone(), empty),
            (false, true) => (empty, self.clone()),
            (true, true) => {
                // Start right after the last letter of the (n-1)-block.
                let m = pattern.len();
                let end_of_last = (0..m)
                    .find(|&i| !kinds[i] && kinds[(i + 1) % m])
                    .expect("two blocks");
                let start = pattern[end_of_last].0 + 1;
                let rotated = self.cyclic_rotate(start as isize);
                let cut = rotated
                    .letters
                    .iter()
                    .position(|l| l.index == n - 1)
                    .expect("last generator present");
                (
                    BraidWord {
                        strands: n,
                        letters: rotated.letters[..cut].to_vec(),
                    },
                    BraidWord {
                        strands: n,
                        letters: rotated.letters[cut..].to_vec(),
                    },
                )
            }
        };
        ExchangeForm::new(alpha, beta).ok()
    }

    pub fn theorem1_verdict(&self) -> Theorem1Verdict {
        let perm = self.permutation();
        let adm = self.admits_exchange();
        if !adm.admissible {
            Theorem1Verdict::NotAdmissible
        } else if perm.apply(1) == 1 {
            Theorem1Verdict::FixesFirst
        } else if perm.apply(self.strands) == self.strands {
            Theorem1Verdict::FixesLast
        } else {
            Theorem1Verdict::Applies {
                degenerate: adm.degenerate,
            }
        }
    }
}

/// Whether the infinitely-many-conjugacy-classes criterion applies to a word,
/// and which condition failed if not.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem1Verdict {
    Applies { degenerate: bool },
    NotAdmissible,
    FixesFirst,
    FixesLast,
}

impl Theorem1Verdict {
    pub fn applies(self) -> bool {
        matches!(self, Theorem1Verdict::Applies { .. })
    }

    pub fn reason(self) -> &'static str {
        match self {
            Theorem1Verdict::Applies { degenerate: false } => "applies",
            Theorem1Verdict::Applies { degenerate: true } => "applies (degenerate, n <= 3)",
            Theorem1Verdict::NotAdmissible => "no exchange move up to cyclic rotation",
            Theorem1Verdict::FixesFirst => "π(b)(1) = 1",
            Theorem1Verdict::FixesLast => "π(b)(n) = n",
        }
    }
}

fn word_of(strands: usize, signed: impl IntoIterator<Item = i64>) -> BraidWord {
    let letters = signed
        .into_iter()
        .map(|v| Letter::from_signed(v).expect("nonzero"))
        .collect();
    BraidWord::new(strands, letters).expect("indices in range")
}

/// `α = σ_1^{-1}`, `β = σ_3^{-1}σ_5^{-1}⋯σ_{n-2}^{-1} · σ_2^{-1}σ_4^{-1}⋯σ_{n-1}^{-1}`
/// for odd `n ≥ 5`. The closure is a knot whose normalized cycle has
/// `x_{n'+1} = 1`.
pub fn canonical_odd_knot_braid(n: usize) -> Result<ExchangeForm, BraidError> {
    if n < 5 || n.is_multiple_of(2) {
        return Err(BraidError::InvalidParameters(format!(
            "odd strand count >= 5 required, got {n}"
        )));
    }
    let alpha = word_of(n, [-1]);
    let odd = (3..=n - 2).step_by(2).map(|i| -(i as i64));
    let even = (2..=n - 1).step_by(2).map(|i| -(i as i64));
    let beta = word_of(n, odd.chain(even));
    ExchangeForm::new(alpha, beta)
}

/// `α = σ_1`, `β = σ_3⋯σ_{n-2} · σ_2⋯σ_{n-2}σ_{n-1}σ_{n-2}^{-1}⋯σ_2^{-1}`.
/// The permutation is `(1 n 2)` times a cycle on `3..n-1`.
pub fn canonical_case1_braid(n: usize) -> Result<ExchangeForm, BraidError> {
    if n < 4 {
        return Err(BraidError::InvalidParameters(format!(
            "at least 4 strands required, got {n}"
        )));
    }
    let alpha = word_of(n, [1]);
    let inner = (3..=n - 2).map(|i| i as i64);
    let band = (2..=n - 1)
        .map(|i| i as i64)
        .chain((2..=n - 2).rev().map(|i| -(i as i64)));
    let beta = word_of(n, inner.chain(band));
    ExchangeForm::new(alpha, beta)
}

/// `α = σ_1⋯σ_{n_1-1}`, `β = σ_{n_1+1}⋯σ_{n-1}` with `n = n_1 + n_2`; the
/// permutation has the two cycles `(1..n_1)` and `(n_1+1..n)`.
pub fn canonical_case2_braid(n1: usize, n2: usize) -> Result<ExchangeForm, BraidError> {
    if n1 < 2 || n2 < 2 {
        return Err(BraidError::InvalidParameters(format!(
            "both cycle lengths must be at least 2, got ({n1}, {n2})"
        )));
    }
    let n = n1 + n2;
    let alpha = word_of(n, (1..n1).map(|i| i as i64));
    let beta = word_of(n, (n1 + 1..n).map(|i| i as i64));
    ExchangeForm::new(alpha, beta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &[i64]) -> BraidWord {
        BraidWord::from_signed(n, s).unwrap()
    }

    #[test]
    fn compose_and_reduce() {
        let a = w(2, &[1]);
        let b = w(2, &[-1]);
        assert_eq!(a.compose(&b).unwrap().to_signed(), vec![1, -1]);
        assert!(a.compose(&b).unwrap().free_reduce().is_empty());
        let id = BraidWord::identity(4);
        let x = w(4, &[1, 2]);
        assert_eq!(id.compose(&x).unwrap(), x);
        assert_eq!(x.compose(&w(4, &[3])).unwrap().to_signed(), vec![1, 2, 3]);
        assert!(matches!(
            a.compose(&w(3, &[])),
            Err(BraidError::StrandMismatch { .. })
        ));
    }

    #[test]
    fn free_reduce_cases() {
        assert_eq!(w(4, &[1, 2, -2, 3]).free_reduce().to_signed(), vec![1, 3]);
        let reduced = w(4, &[1, 2, 1, 3]);
        assert_eq!(reduced.free_reduce(), reduced);
        assert!(w(3, &[1, 2, -2, -1]).free_reduce().is_empty());
    }

    #[test]
    fn involutions() {
        assert_eq!(w(3, &[1, -2]).mirror().to_signed(), vec![-1, 2]);
        assert_eq!(w(3, &[1, 2]).inverse().to_signed(), vec![-2, -1]);
        assert_eq!(w(3, &[1, -2]).reverse().to_signed(), vec![-2, 1]);
        assert_eq!(w(4, &[1, 2, 3]).cyclic_rotate(1).to_signed(), vec![2, 3, 1]);
        assert_eq!(w(4, &[1, 2, 3]).cyclic_rotate(-1).to_signed(), vec![3, 1, 2]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            BraidWord::parse(4, "1 x 2"),
            Err(BraidError::Parse { position: 1, .. })
        ));
        assert!(matches!(
            BraidWord::parse(4, "1 0"),
            Err(BraidError::Parse { position: 1, .. })
        ));
        assert!(matches!(
            BraidWord::parse(4, "4"),
            Err(BraidError::IndexOutOfRange { index: 4, strands: 4 })
        ));
        let b = BraidWord::parse(4, " -3 -3 -2 1 ").unwrap();
        assert_eq!(b.to_string(), "-3 -3 -2 1");
    }

    #[test]
    fn permutations() {
        assert_eq!(w(2, &[1]).permutation().images(), &[2, 1]);
        assert!(BraidWord::identity(5).permutation().is_identity());
        // 1↦4, 2↦1, 3↦2, 4↦3
        let p = w(4, &[1, 2, 3]).permutation();
        assert_eq!(p.images(), &[4, 1, 2, 3]);
        assert_eq!(p.cycles().to_string(), "(1 4 3 2)");
    }

    #[test]
    fn normalized_cycles() {
        let c = w(4, &[-1, -2, -3]).permutation().cycles();
        let nc = c.normalized().unwrap();
        assert_eq!(nc.entries, vec![3, 2, 1, 4]);
        assert_eq!(nc.one_position, 3);

        let nc = w(5, &[-1, -3, -2, -4]).permutation().cycles().normalized().unwrap();
        assert_eq!(nc.entries, vec![4, 2, 1, 3, 5]);
        assert_eq!(nc.one_position, 3);

        let c = BraidWord::identity(4).permutation().cycles();
        assert_eq!(c.count(), 4);
        assert!(matches!(c.normalized(), Err(BraidError::NotFullCycle)));
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(w(4, &[1, 2, 3]).exponent_sum(), 3);
        let x = w(4, &[1, -2, -3, 2, 2]);
        assert_eq!(x.mirror().exponent_sum(), -x.exponent_sum());
        let f = ExchangeForm::new(w(4, &[1, -2]), w(4, &[3, 3])).unwrap();
        for m in -3..=3 {
            assert_eq!(f.family_member(m).exponent_sum(), 2);
        }
    }

    #[test]
    fn strand_linking_examples() {
        assert_eq!(w(2, &[1, 1]).strand_linking(&[1], &[2]).unwrap(), 1);
        assert_eq!(w(2, &[-1, -1]).strand_linking(&[1], &[2]).unwrap(), -1);
        let b = w(3, &[1, 1, 2, 2]);
        assert_eq!(b.strand_linking(&[1], &[2]).unwrap(), 1);
        assert_eq!(b.strand_linking(&[2], &[3]).unwrap(), 1);
        assert_eq!(b.strand_linking(&[1], &[3]).unwrap(), 0);
        assert_eq!(b.strand_linking(&[1], &[2, 3]).unwrap(), 1);
        assert!(matches!(
            w(2, &[1]).strand_linking(&[1], &[2]),
            Err(BraidError::NotUnionOfCycles)
        ));
        assert!(matches!(
            b.strand_linking(&[1], &[1]),
            Err(BraidError::NotDisjoint)
        ));
    }

    #[test]
    fn twists_and_kappa() {
        assert_eq!(full_twist_word(2, 1, 2, 1).unwrap().to_signed(), vec![1, 1]);
        assert!(full_twist_word(4, 1, 3, 0).unwrap().is_empty());
        for (i, j) in [(1, 4), (2, 4), (1, 3)] {
            for c in [-1, 1] {
                assert!(full_twist_word(4, i, j, c).unwrap().permutation().is_identity());
            }
        }
        assert!(full_twist_word(4, 3, 3, 1).is_err());
        assert_eq!(full_twist_word(4, 2, 4, -1).unwrap().exponent_sum(), -6);

        assert_eq!(kappa_word(4).unwrap().to_signed(), vec![1, 2, 2, 1]);
        assert_eq!(kappa_word(3).unwrap().to_signed(), vec![1, 1]);
        assert!(kappa_word(2).is_err());
        for n in 3..=12 {
            assert!(kappa_word(n).unwrap().permutation().is_identity());
        }
    }

    #[test]
    fn admissibility_examples() {
        let six_one = BraidWord::parse(4, "-3 -3 -2 1 1 2 -1 3 -2").unwrap();
        assert!(six_one.admits_exchange().admissible);
        assert!(!w(4, &[1, 3, 1, 3]).admits_exchange().admissible);
        let f = w(4, &[1, 2, 3]).exchange_split().unwrap();
        assert_eq!(f.alpha().to_signed(), vec![1, 2]);
        assert_eq!(f.beta().to_signed(), vec![3]);
        let d = BraidWord::identity(3).admits_exchange();
        assert!(d.admissible && d.degenerate);
    }

    #[test]
    fn split_is_a_rotation() {
        let six_one = BraidWord::parse(4, "-3 -3 -2 1 1 2 -1 3 -2").unwrap();
        let f = six_one.exchange_split().unwrap();
        let joined = f.word();
        assert!((0..six_one.len() as isize).any(|k| six_one.cyclic_rotate(k) == joined));
        assert!(f.alpha().letters().iter().all(|l| l.index() != 3));
        assert!(f.beta().letters().iter().all(|l| l.index() != 1));

        let only_mid = w(4, &[2, 2]);
        let f = only_mid.exchange_split().unwrap();
        assert_eq!(f.word(), only_mid);
        let no_first = w(4, &[2, 3]);
        let f = no_first.exchange_split().unwrap();
        assert!(f.alpha().is_empty());
    }

    #[test]
    fn family_members() {
        let f = ExchangeForm::new(w(4, &[1]), w(4, &[3])).unwrap();
        assert_eq!(f.family_member(0).to_signed(), vec![1, 3]);
        assert_eq!(
            f.family_member(1).to_signed(),
            vec![1, 1, 2, 2, 1, 3, -1, -2, -2, -1]
        );
        let p0 = f.family_member(0).permutation();
        for m in -3..=3 {
            assert_eq!(f.family_member(m).permutation(), p0);
        }
        assert!(ExchangeForm::new(w(4, &[3]), w(4, &[2])).is_err());
        assert!(ExchangeForm::new(w(4, &[2]), w(4, &[1])).is_err());
    }

    #[test]
    fn theorem1_examples() {
        let six_one = BraidWord::parse(4, "-3 -3 -2 1 1 2 -1 3 -2").unwrap();
        assert!(six_one.theorem1_verdict().applies());
        let v = w(4, &[2, 3, 2]).theorem1_verdict();
        assert_eq!(v, Theorem1Verdict::FixesFirst);
        assert_eq!(v.reason(), "π(b)(1) = 1");
        let v = w(4, &[1, 2]).theorem1_verdict();
        assert_eq!(v, Theorem1Verdict::FixesLast);
        assert_eq!(v.reason(), "π(b)(n) = n");
        assert_eq!(w(4, &[1, 3, 1, 3]).theorem1_verdict(), Theorem1Verdict::NotAdmissible);
    }

    #[test]
    fn canonical_odd() {
        let f = canonical_odd_knot_braid(5).unwrap();
        assert_eq!(f.word().to_signed(), vec![-1, -3, -2, -4]);
        let nc = f.word().permutation().cycles().normalized().unwrap();
        assert_eq!(nc.entries, vec![4, 2, 1, 3, 5]);
        assert_eq!(nc.one_position, 3);
        let nc = canonical_odd_knot_braid(7)
            .unwrap()
            .word()
            .permutation()
            .cycles()
            .normalized()
            .unwrap();
        assert_eq!(nc.entries, vec![6, 4, 2, 1, 3, 5, 7]);
        assert_eq!(nc.one_position, 4);
        for n in [5, 7, 9, 11] {
            let b = canonical_odd_knot_braid(n).unwrap().word();
            assert!(b.admits_exchange().admissible);
            assert!(b.theorem1_verdict().applies());
            let nc = b.permutation().cycles().normalized().unwrap();
            assert_eq!(nc.one_position, (n - 1) / 2 + 1);
            assert_eq!(b.square().permutation().cycles().count(), 1);
        }
        assert!(canonical_odd_knot_braid(6).is_err());
        assert!(canonical_odd_knot_braid(3).is_err());
    }

    #[test]
    fn canonical_case1() {
        let b = canonical_case1_braid(4).unwrap().word();
        assert_eq!(b.to_signed(), vec![1, 2, 3, -2]);
        assert_eq!(b.permutation().cycles().to_string(), "(1 4 2)(3)");
        let b = canonical_case1_braid(6).unwrap().word();
        assert_eq!(b.permutation().cycles().to_string(), "(1 6 2)(3 5 4)");
        for n in 4..=9 {
            let b = canonical_case1_braid(n).unwrap().word();
            let c = b.permutation().cycles();
            let first: Vec<usize> = c.cycle_of(1).to_vec();
            let rest: Vec<usize> = (3..n).collect();
            assert_eq!(first, vec![1, n, 2]);
            assert_eq!(b.strand_linking(&[1, 2, n], &rest).unwrap(), 0);
        }
        assert!(canonical_case1_braid(3).is_err());
    }

    #[test]
    fn canonical_case2() {
        assert_eq!(canonical_case2_braid(2, 2).unwrap().word().to_signed(), vec![1, 3]);
        assert_eq!(
            canonical_case2_braid(3, 2).unwrap().word().to_signed(),
            vec![1, 2, 4]
        );
        for (a, b) in [(2, 2), (2, 3), (3, 3), (4, 2)] {
            let mut lens = canonical_case2_braid(a, b)
                .unwrap()
                .word()
                .permutation()
                .cycles()
                .lengths();
            lens.sort();
            let mut want = vec![a, b];
            want.sort();
            assert_eq!(lens, want);
        }
        assert!(canonical_case2_braid(1, 3).is_err());
    }

    #[test]
    fn square_and_stabilize() {
        assert_eq!(w(2, &[1]).square().to_signed(), vec![1, 1]);
        let s = w(2, &[1]).stabilize(Sign::Pos);
        assert_eq!(s.strands(), 3);
        assert_eq!(s.to_signed(), vec![1, 2]);
    }
}
