#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::OnceLock;

use semisum::algebra::{built_in, ElementSet, FiniteSemigroup, SemigroupSpec};

pub fn set<const N: usize>(m: [usize; N]) -> ElementSet {
    ElementSet::from(m)
}

/// Built-in constructions of order at most 12, built once per test binary.
pub fn catalog_12() -> &'static [(SemigroupSpec, FiniteSemigroup)] {
    static CELL: OnceLock<Vec<(SemigroupSpec, FiniteSemigroup)>> = OnceLock::new();
    CELL.get_or_init(|| built_in(12))
}

pub fn groups_up_to(n: usize) -> Vec<(SemigroupSpec, FiniteSemigroup)> {
    built_in(n).into_iter().filter(|(_, a)| a.is_group()).collect()
}

/// The semigroup generated by maps on `[0, t)` under "apply left, then right".
///
/// `None` if the closure has more than 64 elements. Random generators give
/// tables with little structure: usually neither commutative, cancellative
/// nor unital.
pub fn transformation_semigroup(generators: &[Vec<u8>]) -> Option<FiniteSemigroup> {
    let mut elements: Vec<Vec<u8>> = Vec::new();
    let mut index: HashMap<Vec<u8>, usize> = HashMap::new();
    for g in generators {
        if !index.contains_key(g) {
            index.insert(g.clone(), elements.len());
            elements.push(g.clone());
        }
    }
    let compose = |f: &[u8], g: &[u8]| -> Vec<u8> { f.iter().map(|&i| g[i as usize]).collect() };
    let mut i = 0;
    while i < elements.len() {
        for g in generators {
            let h = compose(&elements[i], g);
            if !index.contains_key(&h) {
                if elements.len() == 64 {
                    return None;
                }
                index.insert(h.clone(), elements.len());
                elements.push(h);
            }
        }
        i += 1;
    }
    let n = elements.len();
    FiniteSemigroup::from_fn(n, |a, b| index[&compose(&elements[a], &elements[b])]).ok()
}

/// Direct double loop over the table.
pub fn naive_sum(a: &FiniteSemigroup, x: ElementSet, y: ElementSet) -> ElementSet {
    let mut out = ElementSet::EMPTY;
    for i in x {
        for j in y {
            out.insert(a.op(i, j));
        }
    }
    out
}

/// Cancellativity straight from the definition.
pub fn cancellative_by_scan(a: &FiniteSemigroup) -> bool {
    let n = a.order();
    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                if q != r && (a.op(p, q) == a.op(p, r) || a.op(q, p) == a.op(r, p)) {
                    return false;
                }
            }
        }
    }
    true
}

/// All subsets of `[0, n)` as bit patterns `0..2^n`, including the empty set.
pub fn subsets(n: usize) -> impl Iterator<Item = ElementSet> {
    (0u64..1 << n).map(ElementSet::from_bits)
}

pub fn nonempty_subsets(n: usize) -> impl Iterator<Item = ElementSet> {
    (1u64..1 << n).map(ElementSet::from_bits)
}
