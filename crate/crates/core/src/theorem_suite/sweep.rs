//! Exhaustive checks of one statement over every pair of non-empty subsets.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{assess, Ambient, SetFacts, Statement, VerifyError};
use crate::algebra::{ElementSet, ExtendedNat, FiniteSemigroup};

/// Carriers above this size need an explicit cap on subset size.
pub const UNCAPPED_LIMIT: usize = 16;

/// Violations kept verbatim in a summary; the count is always exact.
const KEPT_WITNESSES: usize = 100;

// Pairs handed to a worker at a time, measured in X values.
const CHUNK: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SweepOptions {
    /// Only subsets with at most this many elements.
    pub max_size: Option<usize>,
    /// Worker threads; `0` lets the pool decide.
    pub jobs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("carrier of size {n} has too many subsets; pass a max size")]
    CarrierTooLarge { n: usize },
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairWitness {
    pub x: ElementSet,
    pub y: ElementSet,
    pub lhs: usize,
    pub rhs: ExtendedNat,
}

/// Aggregate result of a sweep.
///
/// Everything except `elapsed` depends only on the semigroup, statement and
/// size cap, never on the number of workers.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepSummary {
    pub statement: Statement,
    pub order: usize,
    pub max_size: Option<usize>,
    pub sets: usize,
    pub pairs: u64,
    pub applicable: u64,
    pub tight: u64,
    pub first_tight: Option<PairWitness>,
    pub violation_count: u64,
    pub violations: Vec<PairWitness>,
    pub comparisons: u64,
    pub strict_comparisons: u64,
    pub first_strict: Option<PairWitness>,
    pub comparison_failure_count: u64,
    /// Witnesses hold the sharper right-hand side in `rhs`.
    pub comparison_failures: Vec<PairWitness>,
    #[serde(skip)]
    pub elapsed: Duration,
}

// `elapsed` is skipped by serde, so comparing the serialized forms compares
// everything else.
impl PartialEq for SweepSummary {
    fn eq(&self, other: &Self) -> bool {
        serde_json::to_value(self).ok() == serde_json::to_value(other).ok()
    }
}

impl Eq for SweepSummary {}

impl SweepSummary {
    pub fn is_clean(&self) -> bool {
        self.violation_count == 0 && self.comparison_failure_count == 0
    }
}

/// Non-empty subsets of `[0, n)` with at most `max_size` elements, in
/// increasing order of their bit patterns.
pub fn enumerate_sets(n: usize, max_size: Option<usize>) -> Result<Vec<ElementSet>, SweepError> {
    let cap = max_size.unwrap_or(n).min(n);
    if n > UNCAPPED_LIMIT && max_size.is_none() {
        return Err(SweepError::CarrierTooLarge { n });
    }
    let mut sets = Vec::new();
    if n <= UNCAPPED_LIMIT {
        sets.extend(
            (1u64..1 << n)
                .filter(|b| b.count_ones() as usize <= cap)
                .map(ElementSet::from_bits),
        );
    } else {
        let mut current = Vec::with_capacity(cap);
        combinations(n, cap, 0, &mut current, &mut sets);
        sets.sort_unstable();
    }
    Ok(sets)
}

fn combinations(n: usize, cap: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<ElementSet>) {
    if !current.is_empty() {
        out.push(current.iter().copied().collect());
    }
    if current.len() == cap {
        return;
    }
    for next in start..n {
        current.push(next);
        combinations(n, cap, next + 1, current, out);
        current.pop();
    }
}

#[derive(Default)]
struct Partial {
    pairs: u64,
    applicable: u64,
    tight: u64,
    first_tight: Option<PairWitness>,
    violation_count: u64,
    violations: Vec<PairWitness>,
    comparisons: u64,
    strict_comparisons: u64,
    first_strict: Option<PairWitness>,
    comparison_failure_count: u64,
    comparison_failures: Vec<PairWitness>,
}

impl Partial {
    fn absorb(&mut self, other: Partial) {
        self.pairs += other.pairs;
        self.applicable += other.applicable;
        self.tight += other.tight;
        self.first_tight = self.first_tight.or(other.first_tight);
        self.violation_count += other.violation_count;
        keep(&mut self.violations, other.violations);
        self.comparisons += other.comparisons;
        self.strict_comparisons += other.strict_comparisons;
        self.first_strict = self.first_strict.or(other.first_strict);
        self.comparison_failure_count += other.comparison_failure_count;
        keep(&mut self.comparison_failures, other.comparison_failures);
    }
}

fn keep(into: &mut Vec<PairWitness>, from: Vec<PairWitness>) {
    let room = KEPT_WITNESSES.saturating_sub(into.len());
    into.extend(from.into_iter().take(room));
}

fn push_capped(into: &mut Vec<PairWitness>, w: PairWitness) {
    if into.len() < KEPT_WITNESSES {
        into.push(w);
    }
}

fn run_chunk(
    a: &FiniteSemigroup,
    statement: Statement,
    ambient: &Ambient,
    facts: &[SetFacts],
    xs: &[SetFacts],
) -> Partial {
    let mut p = Partial::default();
    for fx in xs {
        for fy in facts {
            p.pairs += 1;
            let verdict = assess(statement, ambient, fx, fy);
            let needs_lhs = verdict.applicable() || verdict.comparison.is_some();
            if !needs_lhs {
                continue;
            }
            let lhs = a.sum(fx.set, fy.set).len();
            let witness = |rhs| PairWitness { x: fx.set, y: fy.set, lhs, rhs };
            if verdict.applicable() {
                p.applicable += 1;
                let value = ExtendedNat::from(lhs);
                if value == verdict.rhs {
                    p.tight += 1;
                    p.first_tight.get_or_insert(witness(verdict.rhs));
                } else if value < verdict.rhs {
                    p.violation_count += 1;
                    push_capped(&mut p.violations, witness(verdict.rhs));
                }
            }
            if let Some(cmp) = verdict.comparison {
                p.comparisons += 1;
                if cmp.strict() {
                    p.strict_comparisons += 1;
                    p.first_strict.get_or_insert(witness(cmp.sharper_rhs));
                }
                if !cmp.holds() {
                    p.comparison_failure_count += 1;
                    push_capped(&mut p.comparison_failures, witness(cmp.sharper_rhs));
                }
            }
        }
    }
    p
}

/// Checks `statement` on every pair `(X, Y)` of non-empty subsets of `a`.
///
/// Pairs are visited with `X` in the outer loop, both in increasing bit
/// order, and the "first" witnesses refer to that order. Work is split into
/// chunks of `X` values whose partial results are merged in order, so the
/// summary does not depend on `options.jobs`.
pub fn sweep(a: &FiniteSemigroup, statement: Statement, options: SweepOptions) -> Result<SweepSummary, SweepError> {
    let started = Instant::now();
    let ambient = Ambient::new(a);
    ambient.require(statement)?;
    let sets = enumerate_sets(a.order(), options.max_size)?;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .map_err(|e| SweepError::Pool(e.to_string()))?;

    let partials: Vec<Partial> = pool.install(|| {
        let facts: Vec<SetFacts> = sets.par_iter().map(|&s| SetFacts::new(a, &ambient, s)).collect();
        facts
            .par_chunks(CHUNK)
            .map(|xs| run_chunk(a, statement, &ambient, &facts, xs))
            .collect()
    });

    let mut total = Partial::default();
    for p in partials {
        total.absorb(p);
    }
    Ok(SweepSummary {
        statement,
        order: a.order(),
        max_size: options.max_size,
        sets: sets.len(),
        pairs: total.pairs,
        applicable: total.applicable,
        tight: total.tight,
        first_tight: total.first_tight,
        violation_count: total.violation_count,
        violations: total.violations,
        comparisons: total.comparisons,
        strict_comparisons: total.strict_comparisons,
        first_strict: total.first_strict,
        comparison_failure_count: total.comparison_failure_count,
        comparison_failures: total.comparison_failures,
        elapsed: started.elapsed(),
    })
}
