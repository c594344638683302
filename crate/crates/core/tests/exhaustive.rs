//! Invariants checked on every subset (or pair of subsets) of small carriers.

mod common;

use std::collections::BTreeMap;

use common::{cancellative_by_scan, catalog_12, groups_up_to, nonempty_subsets, set, subsets};
use semisum::algebra::{built_in, cyclic, dihedral, quaternion8, ElementSet, ExtendedNat};
use semisum::cd_constants::omega_value;
use semisum::localization::{hall_check, hall_check_exhaustive, localize, sum_matrix};
use semisum::set_calculus::{right_difference, sumset};
use semisum::theorem_suite::{sweep, Statement, SweepOptions};

#[test]
fn cancellativity_and_orders_on_the_catalog() {
    for (spec, a) in catalog_12() {
        assert_eq!(a.is_cancellative(), cancellative_by_scan(a), "{spec}");
        if a.is_group() {
            for z in 0..a.order() {
                assert_eq!(a.order() % a.element_order(z), 0, "{spec}: ord({z})");
            }
        }
    }
}

#[test]
fn sumsets_are_monotone_on_z6() {
    let a = cyclic(6).unwrap();
    let all: Vec<ElementSet> = subsets(6).collect();
    for &y1 in &all {
        for &y2 in &all {
            let big = sumset(&a, y1, y2);
            for x1 in all.iter().filter(|s| s.is_subset(y1)) {
                for x2 in all.iter().filter(|s| s.is_subset(y2)) {
                    assert!(sumset(&a, *x1, *x2).is_subset(big));
                }
            }
        }
    }
}

#[test]
fn group_sumsets_dominate_summands() {
    for (spec, a) in groups_up_to(8) {
        for x in nonempty_subsets(a.order()) {
            for y in nonempty_subsets(a.order()) {
                assert!(sumset(&a, x, y).len() >= x.len().max(y.len()), "{spec}: {x} + {y}");
            }
        }
    }
}

#[test]
fn sumset_sizes_bounded_by_products_and_translation_invariant() {
    for (spec, a) in built_in(6) {
        for x in subsets(a.order()) {
            for y in subsets(a.order()) {
                let s = sumset(&a, x, y);
                assert!(s.len() <= x.len() * y.len(), "{spec}");
                if a.is_cancellative() {
                    for z in 0..a.order() {
                        assert_eq!(a.left_translate(z, s).len(), s.len(), "{spec}");
                        assert_eq!(a.right_translate(s, z).len(), s.len(), "{spec}");
                    }
                }
            }
        }
    }
}

#[test]
fn subtracting_a_unit_translates() {
    for (spec, a) in built_in(8).into_iter().filter(|(_, a)| a.is_monoid()) {
        for x in subsets(a.order()) {
            for z in a.units() {
                let d = right_difference(&a, x, ElementSet::singleton(z));
                assert_eq!(d, a.right_translate(x, a.inverse(z).unwrap()), "{spec}");
                assert_eq!(d.len(), x.len(), "{spec}");
            }
        }
    }
}

#[test]
fn shifting_by_central_unit_keeps_span_commutative() {
    for a in [dihedral(4).unwrap(), quaternion8().unwrap()] {
        for x in subsets(8).filter(|x| x.len() <= 4 && a.generates_commutative(*x)) {
            for z in a.centralizer(x).intersection(a.units()) {
                let shifted = a.right_translate(x, a.inverse(z).unwrap());
                assert!(a.generates_commutative(shifted), "{x} - {z}");
                let shifted = a.left_translate(a.inverse(z).unwrap(), x);
                assert!(a.generates_commutative(shifted), "-{z} + {x}");
            }
        }
    }
}

fn statements_for(a: &semisum::FiniteSemigroup) -> Vec<Statement> {
    Statement::ALL
        .into_iter()
        .filter(|s| match s {
            Statement::Chowla | Statement::Pillai | Statement::CyclicDelta => a.is_standard_cyclic(),
            Statement::HamidouneKarolyi => a.is_group(),
            _ => true,
        })
        .collect()
}

#[test]
fn no_statement_is_violated_on_small_groups() {
    let mut carriers = groups_up_to(8);
    for m in 9..=13 {
        carriers.push((semisum::SemigroupSpec::Cyclic(m), cyclic(m).unwrap()));
    }
    let mut tight: BTreeMap<Statement, u64> = BTreeMap::new();
    for (spec, a) in &carriers {
        for statement in statements_for(a) {
            let s = sweep(a, statement, SweepOptions::default()).unwrap();
            assert!(s.is_clean(), "{statement} on {spec}: {:?}", s.violations);
            *tight.entry(statement).or_default() += s.tight;
            if statement == Statement::HamidouneKarolyi {
                // Both bounds apply whenever <Y> is commutative.
                assert!(s.comparisons > 0 && s.comparison_failure_count == 0, "{spec}");
            }
        }
    }
    for statement in Statement::ALL {
        assert!(tight.get(&statement).copied().unwrap_or(0) > 0, "no tight pair for {statement}");
    }
}

#[test]
fn delta_bound_dominates_pillai_up_to_12() {
    let mut strict = 0;
    for m in 1..=12 {
        let s = sweep(&cyclic(m).unwrap(), Statement::CyclicDelta, SweepOptions::default()).unwrap();
        assert_eq!(s.comparison_failure_count, 0, "m = {m}");
        assert_eq!(s.comparisons, s.pairs);
        strict += s.strict_comparisons;
    }
    assert!(strict > 0);
}

/// Every subset of `pool` with `size` elements.
fn subsets_of_size(pool: ElementSet, size: usize) -> Vec<ElementSet> {
    let elems = pool.to_vec();
    let mut out = Vec::new();
    for bits in 0u64..1 << elems.len() {
        if bits.count_ones() as usize == size {
            out.push((0..elems.len()).filter(|i| bits >> i & 1 == 1).map(|i| elems[i]).collect());
        }
    }
    out
}

#[test]
fn localization_succeeds_for_every_choice_of_z() {
    let mut carriers = groups_up_to(8);
    carriers.retain(|(_, a)| a.order() >= 2);
    let mut instances = 0u64;
    for (spec, a) in &carriers {
        for y in nonempty_subsets(a.order()).filter(|y| a.generates_commutative(*y)) {
            let omega = omega_value(a, y);
            for x in nonempty_subsets(a.order()) {
                let sum = sumset(a, x, y);
                if ExtendedNat::from(sum.len()) >= omega {
                    continue;
                }
                for z in subsets_of_size(sum, y.len() - 1) {
                    let r = localize(a, x, y, Some(z)).unwrap_or_else(|e| panic!("{spec}: {x} {y} {z}: {e}"));
                    assert_eq!(r.witnessed.len(), x.len() + y.len() - 1);
                    // The union of any h rows has at least h elements.
                    assert!(hall_check_exhaustive(&r.rows).unwrap().holds);
                    instances += 1;
                }
            }
        }
    }
    assert!(instances > 10_000, "{instances}");
}

#[test]
fn localization_rows_satisfy_hall_in_prime_cyclic_groups() {
    for p in [2usize, 3, 5, 7, 11] {
        let a = cyclic(p).unwrap();
        for y in nonempty_subsets(p) {
            let omega = omega_value(&a, y);
            for x in nonempty_subsets(p) {
                let sum = sumset(&a, x, y);
                if ExtendedNat::from(sum.len()) >= omega {
                    continue;
                }
                let r = localize(&a, x, y, None).unwrap();
                assert_eq!(r.witnessed.len(), x.len() + y.len() - 1);
                assert_eq!(hall_check(&r.rows), hall_check_exhaustive(&r.rows).unwrap());
                assert_eq!(sum_matrix(&a, x, y).entry_set(), sum);
            }
        }
    }
}

#[test]
fn sum_matrix_single_row_is_a_translate() {
    let a = dihedral(3).unwrap();
    for x in 0..6 {
        for y in nonempty_subsets(6) {
            let m = sum_matrix(&a, ElementSet::singleton(x), y);
            assert_eq!(m.rows(), 1);
            assert_eq!(m.row_set(0), a.left_translate(x, y));
        }
    }
    assert_eq!(sum_matrix(&a, set([0]), set([1])).entries, vec![vec![1]]);
}
