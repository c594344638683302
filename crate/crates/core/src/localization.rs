//! Locating `|X| + |Y| - 1` distinct elements of `X + Y` through the sum
//! matrix and a system of distinct representatives.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{ElementSet, ExtendedNat, FiniteSemigroup};
use crate::cd_constants::omega_value;

/// Largest family the exhaustive Hall check accepts.
pub const EXHAUSTIVE_HALL_LIMIT: usize = 20;

/// `entries[i][j] = xs[i] + ys[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumMatrix {
    pub xs: Vec<usize>,
    pub ys: Vec<usize>,
    pub entries: Vec<Vec<usize>>,
}

impl SumMatrix {
    pub fn rows(&self) -> usize {
        self.xs.len()
    }

    pub fn cols(&self) -> usize {
        self.ys.len()
    }

    pub fn row_set(&self, i: usize) -> ElementSet {
        self.entries[i].iter().copied().collect()
    }

    /// Every entry, which is exactly `X + Y`.
    pub fn entry_set(&self) -> ElementSet {
        self.entries.iter().flatten().copied().collect()
    }
}

/// The sum matrix with both sets numbered in ascending order.
pub fn sum_matrix(a: &FiniteSemigroup, x: ElementSet, y: ElementSet) -> SumMatrix {
    sum_matrix_numbered(a, &x.to_vec(), &y.to_vec())
}

/// The sum matrix for explicit numberings `x_1..x_k` and `y_1..y_l`.
pub fn sum_matrix_numbered(a: &FiniteSemigroup, xs: &[usize], ys: &[usize]) -> SumMatrix {
    SumMatrix {
        xs: xs.to_vec(),
        ys: ys.to_vec(),
        entries: xs.iter().map(|&xi| ys.iter().map(|&yj| a.op(xi, yj)).collect()).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HallOutcome {
    pub holds: bool,
    /// Indices of sets whose union is smaller than their number.
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("exhaustive Hall check supports at most {EXHAUSTIVE_HALL_LIMIT} sets, got {0}")]
pub struct TooManySets(pub usize);

/// Maximum matching of sets to distinct elements.
///
/// Rows are processed in ascending order and each augmenting search tries
/// elements in ascending order, so the result is reproducible.
/// `result[i]` is the element matched to set `i`, if any.
pub fn distinct_representatives(sets: &[ElementSet]) -> Vec<Option<usize>> {
    let mut owner: [Option<usize>; 64] = [None; 64];
    let mut matched = vec![None; sets.len()];
    for row in 0..sets.len() {
        let mut seen = ElementSet::EMPTY;
        augment(sets, row, &mut seen, &mut owner, &mut matched);
    }
    matched
}

fn augment(
    sets: &[ElementSet],
    row: usize,
    seen: &mut ElementSet,
    owner: &mut [Option<usize>; 64],
    matched: &mut [Option<usize>],
) -> bool {
    for e in sets[row].difference(*seen) {
        if seen.contains(e) {
            continue;
        }
        seen.insert(e);
        let free = match owner[e] {
            None => true,
            Some(other) => augment(sets, other, seen, owner, matched),
        };
        if free {
            owner[e] = Some(row);
            matched[row] = Some(e);
            return true;
        }
    }
    false
}

/// Hall's condition decided by matching.
///
/// On failure the witness is the set of rows reachable from the first
/// unmatched row by alternating paths: their union is covered by the other
/// reachable rows' partners, so it has one element fewer than there are rows.
pub fn hall_check(sets: &[ElementSet]) -> HallOutcome {
    let matched = distinct_representatives(sets);
    let Some(start) = matched.iter().position(Option::is_none) else {
        return HallOutcome { holds: true, witness: None };
    };
    let mut owner: [Option<usize>; 64] = [None; 64];
    for (row, e) in matched.iter().enumerate() {
        if let Some(e) = *e {
            owner[e] = Some(row);
        }
    }
    let mut rows = vec![start];
    let mut reached = ElementSet::EMPTY;
    let mut i = 0;
    while i < rows.len() {
        for e in sets[rows[i]].difference(reached) {
            reached.insert(e);
            let next = owner[e].expect("maximum matching leaves no free neighbour");
            if !rows.contains(&next) {
                rows.push(next);
            }
        }
        i += 1;
    }
    rows.sort_unstable();
    HallOutcome { holds: false, witness: Some(rows) }
}

/// Hall's condition by checking all `2^k` unions. The witness is the first
/// failing index set in increasing bit order.
pub fn hall_check_exhaustive(sets: &[ElementSet]) -> Result<HallOutcome, TooManySets> {
    let k = sets.len();
    if k > EXHAUSTIVE_HALL_LIMIT {
        return Err(TooManySets(k));
    }
    let mut unions = vec![ElementSet::EMPTY; 1 << k];
    for mask in 1usize..1 << k {
        let low = mask.trailing_zeros() as usize;
        unions[mask] = unions[mask & (mask - 1)].union(sets[low]);
        if unions[mask].len() < mask.count_ones() as usize {
            let witness = (0..k).filter(|i| mask >> i & 1 == 1).collect();
            return Ok(HallOutcome { holds: false, witness: Some(witness) });
        }
    }
    Ok(HallOutcome { holds: true, witness: None })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalizationResult {
    pub matrix: SumMatrix,
    /// The fixed subset of `X + Y` of size `|Y| - 1`.
    pub z: ElementSet,
    /// `(x_i + Y) \ Z` for each row.
    pub rows: Vec<ElementSet>,
    pub representatives: Vec<usize>,
    /// `Z` together with the representatives.
    pub witnessed: ElementSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalizeError {
    #[error("X and Y must be non-empty")]
    EmptyOperand,
    #[error("set {set} does not fit in a carrier of size {n}")]
    OutOfRange { set: ElementSet, n: usize },
    #[error("hypotheses fail: {}", .0.join(", "))]
    PreconditionFailed(Vec<String>),
    #[error("Z = {z} must be a subset of X + Y with {expected} elements")]
    BadZ { z: ElementSet, expected: usize },
    /// Unreachable while the hypotheses hold; reported rather than panicking.
    #[error("rows {witness:?} have no distinct representatives")]
    NoSystemOfRepresentatives { witness: Vec<usize> },
}

/// The default `Z = x_1 + {y_1, .., y_{l-1}}` under ascending numbering.
pub fn default_z(a: &FiniteSemigroup, x: ElementSet, y: ElementSet) -> ElementSet {
    let (Some(x1), l) = (x.first(), y.len()) else {
        return ElementSet::EMPTY;
    };
    a.left_translate(x1, y.iter().take(l.saturating_sub(1)).collect())
}

/// Picks one element from each row `(x_i + Y) \ Z`, all distinct.
///
/// Requires `a` cancellative, `<Y>` commutative and `|X + Y| < ω(Y)`; `Z`
/// defaults to [`default_z`].
pub fn localize(
    a: &FiniteSemigroup,
    x: ElementSet,
    y: ElementSet,
    z: Option<ElementSet>,
) -> Result<LocalizationResult, LocalizeError> {
    for s in [x, y] {
        if !s.fits(a.order()) {
            return Err(LocalizeError::OutOfRange { set: s, n: a.order() });
        }
    }
    if x.is_empty() || y.is_empty() {
        return Err(LocalizeError::EmptyOperand);
    }
    let sum = a.sum(x, y);
    let mut failing = Vec::new();
    if !a.is_cancellative() {
        failing.push("cancellative".to_string());
    }
    if !a.generates_commutative(y) {
        failing.push("<Y> commutative".to_string());
    }
    if ExtendedNat::from(sum.len()) >= omega_value(a, y) {
        failing.push("|X+Y| < ω(Y)".to_string());
    }
    if !failing.is_empty() {
        return Err(LocalizeError::PreconditionFailed(failing));
    }

    let expected = y.len() - 1;
    let z = z.unwrap_or_else(|| default_z(a, x, y));
    if z.len() != expected || !z.is_subset(sum) {
        return Err(LocalizeError::BadZ { z, expected });
    }

    let matrix = sum_matrix(a, x, y);
    let rows: Vec<ElementSet> = (0..matrix.rows()).map(|i| matrix.row_set(i).difference(z)).collect();
    let matched = distinct_representatives(&rows);
    if matched.iter().any(Option::is_none) {
        let witness = hall_check(&rows).witness.unwrap_or_default();
        return Err(LocalizeError::NoSystemOfRepresentatives { witness });
    }
    let representatives: Vec<usize> = matched.into_iter().flatten().collect();
    let witnessed = representatives.iter().fold(z, |mut acc, &r| {
        acc.insert(r);
        acc
    });
    Ok(LocalizationResult { matrix, z, rows, representatives, witnessed })
}
