//! Sumsets, iterated sumsets, translates and difference sets relative to a
//! fixed finite semigroup.

use serde::{Deserialize, Serialize};

use crate::algebra::{ElementSet, FiniteSemigroup};

/// `X + Y = {x + y : x in X, y in Y}`.
#[inline]
pub fn sumset(a: &FiniteSemigroup, x: ElementSet, y: ElementSet) -> ElementSet {
    a.sum(x, y)
}

/// `X_1 + X_2 + .. + X_k`, evaluated left to right. Empty input gives the empty set.
pub fn sumset_chain(a: &FiniteSemigroup, summands: &[ElementSet]) -> ElementSet {
    let mut it = summands.iter();
    let Some(&first) = it.next() else {
        return ElementSet::EMPTY;
    };
    it.fold(first, |acc, &s| a.sum(acc, s))
}

/// `kZ = Z + .. + Z` with `k >= 1` summands.
///
/// Commutative ambients use repeated doubling; otherwise the sum is taken
/// strictly left to right (see [`n_fold_sequential`]).
///
/// # Panics
///
/// If `k == 0`.
pub fn n_fold(a: &FiniteSemigroup, z: ElementSet, k: usize) -> ElementSet {
    assert!(k >= 1, "n_fold needs at least one summand");
    if !a.is_commutative() {
        return n_fold_sequential(a, z, k);
    }
    let mut result: Option<ElementSet> = None;
    let mut power = z;
    let mut k = k;
    loop {
        if k & 1 == 1 {
            result = Some(match result {
                Some(r) => a.sum(r, power),
                None => power,
            });
        }
        k >>= 1;
        if k == 0 {
            break;
        }
        power = a.sum(power, power);
    }
    result.expect("k >= 1")
}

/// `kZ` by `k - 1` successive sumsets with `Z` on the right.
pub fn n_fold_sequential(a: &FiniteSemigroup, z: ElementSet, k: usize) -> ElementSet {
    assert!(k >= 1, "n_fold needs at least one summand");
    (1..k).fold(z, |acc, _| a.sum(acc, z))
}

/// `z + X`.
pub fn translate_left(a: &FiniteSemigroup, z: usize, x: ElementSet) -> ElementSet {
    a.left_translate(z, x)
}

/// `X + z`.
pub fn translate_right(a: &FiniteSemigroup, x: ElementSet, z: usize) -> ElementSet {
    a.right_translate(x, z)
}

/// `X - Y = {z : (z + Y) meets X}`, by a scan of the whole carrier.
pub fn right_difference(a: &FiniteSemigroup, x: ElementSet, y: ElementSet) -> ElementSet {
    (0..a.order())
        .filter(|&z| !a.left_translate(z, y).is_disjoint(x))
        .collect()
}

/// `-X + Y = {z : (X + z) meets Y}`, by a scan of the whole carrier.
pub fn left_difference(a: &FiniteSemigroup, x: ElementSet, y: ElementSet) -> ElementSet {
    (0..a.order())
        .filter(|&z| !a.right_translate(x, z).is_disjoint(y))
        .collect()
}

/// The three equivalent conditions on `(X, Y)`:
/// `X + 2Y ⊆ X + Y`, `X + nY ⊆ X + Y` for every `n >= 1`, and `X + <Y> = X + Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanCheck {
    pub two_fold: bool,
    pub all_folds: bool,
    pub closure: bool,
}

impl SpanCheck {
    pub fn consistent(&self) -> bool {
        self.two_fold == self.all_folds && self.all_folds == self.closure
    }
}

/// Evaluates each condition of [`SpanCheck`] independently.
///
/// The partial unions `Y ∪ 2Y ∪ .. ∪ nY` grow strictly until they reach
/// `<Y>`, so `n` up to `|<Y>|` covers every multiple.
pub fn span_check(a: &FiniteSemigroup, x: ElementSet, y: ElementSet) -> SpanCheck {
    let base = a.sum(x, y);
    let two_fold = a.sum(base, y).is_subset(base);

    let span = a.generated(y);
    let mut all_folds = true;
    let mut current = base;
    for _ in 1..span.len().max(1) {
        current = a.sum(current, y);
        if !current.is_subset(base) {
            all_folds = false;
            break;
        }
    }

    let closure = a.sum(x, span) == base;
    SpanCheck { two_fold, all_folds, closure }
}
