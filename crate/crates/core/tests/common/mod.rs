#![allow(dead_code)]

use proptest::prelude::*;

use braidex_core::{BraidWord, ExchangeForm, Letter, Sign};

fn letters(lo: usize, hi: usize, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    // an empty index range (one strand) only admits the empty word
    let max_len = if lo > hi { 0 } else { max_len };
    let hi = hi.max(lo);
    prop::collection::vec((lo..=hi, any::<bool>()), 0..=max_len).prop_map(move |v| {
        v.into_iter()
            .map(|(i, pos)| Letter::new(i, if pos { Sign::Pos } else { Sign::Neg }))
            .collect()
    })
}

/// Words on `min_n..=max_n` strands with at most `max_len` letters.
pub fn braid(min_n: usize, max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (min_n..=max_n).prop_flat_map(move |n| {
        letters(1, n - 1, max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
    })
}

/// Words on exactly `n` strands.
pub fn braid_on(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    letters(1, n - 1, max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
}

/// `(w, c)` on a common strand count.
pub fn braid_pair(max_n: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2..=max_n).prop_flat_map(move |n| (braid_on(n, max_len), braid_on(n, max_len)))
}

/// Exchange forms on `min_n..=max_n` strands.
pub fn exchange_form(min_n: usize, max_n: usize, max_len: usize) -> impl Strategy<Value = ExchangeForm> {
    (min_n..=max_n).prop_flat_map(move |n| {
        (letters(1, n - 2, max_len), letters(2, n - 1, max_len)).prop_map(move |(a, b)| {
            ExchangeForm::new(BraidWord::new(n, a).unwrap(), BraidWord::new(n, b).unwrap()).unwrap()
        })
    })
}
