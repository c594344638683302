//! Generalized Davenport transforms and the audit of their properties.
//!
//! For subsets `X, Y` of a monoid and `m >= 1`, any `z` in
//! `(mX + 2Y) \ (X + Y)` together with a witness `x_z in (m-1)X`,
//! `y_z in Y` with `z in x_z + X + Y + y_z` splits `Y` into
//!
//! ```text
//! Ỹ_z = {y in Y : z in x_z + X + Y + y}      Y_z = Y \ Ỹ_z
//! ```
//!
//! and `(X, Y_z)` is the transformed pair.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{ElementSet, FiniteSemigroup};
use crate::set_calculus::{n_fold, right_difference};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("the ambient semigroup has no identity; pass its unitization")]
    NotUnital,
    #[error("X and Y must be non-empty")]
    EmptyOperand,
    #[error("the exponent m must be at least 1")]
    ZeroExponent,
    #[error("{z} is not in (mX + 2Y) \\ (X + Y)")]
    CandidateInvalid { z: usize },
    #[error("no witness (x_z, y_z) exists for {z}")]
    NoWitness { z: usize },
    #[error("Y_z is empty, so the transform has nothing to audit")]
    EmptyTransform,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformResult {
    pub m: usize,
    pub z: usize,
    pub x_z: usize,
    pub y_z: usize,
    pub y_tilde: ElementSet,
    pub y_prime: ElementSet,
}

/// Outcome of one audited property.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AuditItem {
    Holds,
    Fails,
    NotApplicable,
}

impl AuditItem {
    fn gated(applicable: bool, holds: bool) -> Self {
        match (applicable, holds) {
            (false, _) => AuditItem::NotApplicable,
            (true, true) => AuditItem::Holds,
            (true, false) => AuditItem::Fails,
        }
    }

    pub fn is_failure(self) -> bool {
        self == AuditItem::Fails
    }
}

/// The five properties of a transform with non-empty `Y_z`.
///
/// Items whose hypotheses fail (cancellativity, commutativity of `<Y>`) are
/// `NotApplicable`, never `Fails`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformAudit {
    /// `Y_z` and `Ỹ_z` are non-empty, disjoint, proper subsets of `Y` and `Ỹ_z = Y \ Y_z`.
    pub partition: AuditItem,
    /// `(x_z + X + Y_z) ∪ (z - Ỹ_z) ⊆ x_z + X + Y` (cancellative).
    pub containment: AuditItem,
    /// `(x_z + X + Y_z) ∩ (z - Ỹ_z) = ∅` (`<Y>` commutative).
    pub disjointness: AuditItem,
    /// `|z - Ỹ_z| >= |Ỹ_z|` (cancellative).
    pub difference_size: AuditItem,
    /// `|X + Y| + |Y_z| >= |X + Y_z| + |Y|` (both).
    pub size_inequality: AuditItem,
    pub inequality_lhs: usize,
    pub inequality_rhs: usize,
}

impl TransformAudit {
    pub fn items(&self) -> [(&'static str, AuditItem); 5] {
        [
            ("(i) partition of Y", self.partition),
            ("(ii) containment in x_z+X+Y", self.containment),
            ("(iii) disjointness", self.disjointness),
            ("(iv) |z-Ỹ_z| >= |Ỹ_z|", self.difference_size),
            ("(v) |X+Y|+|Y_z| >= |X+Y_z|+|Y|", self.size_inequality),
        ]
    }

    pub fn all_applicable_hold(&self) -> bool {
        self.items().iter().all(|(_, item)| !item.is_failure())
    }
}

/// `mX`, with `0X = {identity}`.
fn multiple(a: &FiniteSemigroup, x: ElementSet, k: usize, identity: usize) -> ElementSet {
    if k == 0 {
        ElementSet::singleton(identity)
    } else {
        n_fold(a, x, k)
    }
}

fn check_inputs(a: &FiniteSemigroup, x: ElementSet, y: ElementSet, m: usize) -> Result<usize, TransformError> {
    let identity = a.identity().ok_or(TransformError::NotUnital)?;
    if x.is_empty() || y.is_empty() {
        return Err(TransformError::EmptyOperand);
    }
    if m == 0 {
        return Err(TransformError::ZeroExponent);
    }
    Ok(identity)
}

/// `(mX + 2Y) \ (X + Y)`; empty when no transform exists.
pub fn transform_candidates(
    a: &FiniteSemigroup,
    x: ElementSet,
    y: ElementSet,
    m: usize,
) -> Result<ElementSet, TransformError> {
    check_inputs(a, x, y, m)?;
    let two_y = a.sum(y, y);
    let big = a.sum(n_fold(a, x, m), two_y);
    Ok(big.difference(a.sum(x, y)))
}

/// Transforms `(X, Y)` relative to `z`.
///
/// The witness `(x_z, y_z)` is the lexicographically smallest pair of element
/// indices with `z in x_z + X + Y + y_z`; for `m = 1`, `x_z` is the identity.
pub fn apply_transform(
    a: &FiniteSemigroup,
    x: ElementSet,
    y: ElementSet,
    m: usize,
    z: usize,
) -> Result<TransformResult, TransformError> {
    let identity = check_inputs(a, x, y, m)?;
    let candidates = transform_candidates(a, x, y, m)?;
    if !candidates.contains(z) {
        return Err(TransformError::CandidateInvalid { z });
    }
    let x_plus_y = a.sum(x, y);
    let x_pool = multiple(a, x, m - 1, identity);

    // z ∈ w + y  for some w in x_z + X + Y
    let hits = |x_z: usize, t: usize| a.right_translate(a.left_translate(x_z, x_plus_y), t).contains(z);

    let (x_z, y_z) = x_pool
        .iter()
        .find_map(|xz| y.iter().find(|&t| hits(xz, t)).map(|t| (xz, t)))
        .ok_or(TransformError::NoWitness { z })?;

    let y_tilde: ElementSet = y.iter().filter(|&t| hits(x_z, t)).collect();
    Ok(TransformResult { m, z, x_z, y_z, y_tilde, y_prime: y.difference(y_tilde) })
}

/// Evaluates the five transform properties for `result`.
pub fn audit_transform(
    a: &FiniteSemigroup,
    x: ElementSet,
    y: ElementSet,
    result: &TransformResult,
) -> Result<TransformAudit, TransformError> {
    let (y_prime, y_tilde) = (result.y_prime, result.y_tilde);
    if y_prime.is_empty() {
        return Err(TransformError::EmptyTransform);
    }
    let cancellative = a.is_cancellative();
    let commutative_span = a.generates_commutative(y);

    let partition = !y_tilde.is_empty()
        && y_prime.is_disjoint(y_tilde)
        && y_prime.is_subset(y)
        && y_tilde.is_subset(y)
        && y_prime != y
        && y_tilde != y
        && y_tilde == y.difference(y_prime);

    let shifted_all = a.left_translate(result.x_z, a.sum(x, y));
    let shifted_prime = a.left_translate(result.x_z, a.sum(x, y_prime));
    let z_minus = right_difference(a, ElementSet::singleton(result.z), y_tilde);

    let containment = shifted_prime.union(z_minus).is_subset(shifted_all);
    let disjointness = shifted_prime.is_disjoint(z_minus);
    let difference_size = z_minus.len() >= y_tilde.len();

    let inequality_lhs = a.sum(x, y).len() + y_prime.len();
    let inequality_rhs = a.sum(x, y_prime).len() + y.len();

    Ok(TransformAudit {
        partition: AuditItem::gated(true, partition),
        containment: AuditItem::gated(cancellative, containment),
        disjointness: AuditItem::gated(commutative_span, disjointness),
        difference_size: AuditItem::gated(cancellative, difference_size),
        size_inequality: AuditItem::gated(cancellative && commutative_span, inequality_lhs >= inequality_rhs),
        inequality_lhs,
        inequality_rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{cyclic, dihedral, SemigroupSpec};

    fn set<const N: usize>(m: [usize; N]) -> ElementSet {
        ElementSet::from(m)
    }

    #[test]
    fn candidate_examples() {
        let z8 = cyclic(8).unwrap();
        assert_eq!(transform_candidates(&z8, set([0, 1]), set([0, 1]), 1), Ok(set([3])));
        assert_eq!(transform_candidates(&z8, set([0, 1]), set([0, 1]), 2), Ok(set([3, 4])));
        let z4 = cyclic(4).unwrap();
        assert_eq!(transform_candidates(&z4, set([0]), set([0, 2]), 1), Ok(ElementSet::EMPTY));
    }

    #[test]
    fn candidate_errors() {
        let lz = SemigroupSpec::LeftZero(2).build().unwrap();
        assert_eq!(transform_candidates(&lz, set([0]), set([1]), 1), Err(TransformError::NotUnital));
        let z4 = cyclic(4).unwrap();
        assert_eq!(transform_candidates(&z4, ElementSet::EMPTY, set([1]), 1), Err(TransformError::EmptyOperand));
        assert_eq!(transform_candidates(&z4, set([0]), set([1]), 0), Err(TransformError::ZeroExponent));
        assert_eq!(
            apply_transform(&z4, set([0]), set([0, 2]), 1, 2),
            Err(TransformError::CandidateInvalid { z: 2 })
        );
    }

    #[test]
    fn transform_mod_8() {
        let z8 = cyclic(8).unwrap();
        let (x, y) = (set([0, 1]), set([0, 1]));
        let t = apply_transform(&z8, x, y, 1, 3).unwrap();
        assert_eq!((t.x_z, t.y_z), (0, 1));
        assert_eq!(t.y_tilde, set([1]));
        assert_eq!(t.y_prime, set([0]));
        let audit = audit_transform(&z8, x, y, &t).unwrap();
        assert!(audit.items().iter().all(|(_, i)| *i == AuditItem::Holds));
        assert_eq!((audit.inequality_lhs, audit.inequality_rhs), (4, 4));
    }

    #[test]
    fn transform_mod_9() {
        let z9 = cyclic(9).unwrap();
        let t = apply_transform(&z9, set([0, 1, 2]), set([0, 1]), 1, 4).unwrap();
        assert_eq!(t.y_tilde, set([1]));
        assert_eq!(t.y_prime, set([0]));
    }

    #[test]
    fn identity_stays_in_y_prime() {
        let z7 = cyclic(7).unwrap();
        for xb in 1u64..128 {
            for yb in (1u64..128).filter(|b| b & 1 == 1) {
                let (x, y) = (ElementSet::from_bits(xb), ElementSet::from_bits(yb));
                for z in transform_candidates(&z7, x, y, 1).unwrap() {
                    let t = apply_transform(&z7, x, y, 1, z).unwrap();
                    assert!(t.y_prime.contains(0));
                    assert!(t.y_prime.len() < y.len());
                }
            }
        }
    }

    #[test]
    fn empty_y_prime_is_not_audited() {
        let z8 = cyclic(8).unwrap();
        let t = apply_transform(&z8, set([0]), set([1]), 1, 2).unwrap();
        assert_eq!(t.y_prime, ElementSet::EMPTY);
        assert_eq!(audit_transform(&z8, set([0]), set([1]), &t), Err(TransformError::EmptyTransform));
    }

    #[test]
    fn non_commutative_span_is_not_applicable() {
        let d4 = dihedral(4).unwrap();
        let mut seen = false;
        for xb in 1u64..256 {
            let x = ElementSet::from_bits(xb);
            let y = set([0, 1, 4]);
            for z in transform_candidates(&d4, x, y, 1).unwrap() {
                let t = apply_transform(&d4, x, y, 1, z).unwrap();
                if let Ok(audit) = audit_transform(&d4, x, y, &t) {
                    assert_eq!(audit.disjointness, AuditItem::NotApplicable);
                    assert_eq!(audit.size_inequality, AuditItem::NotApplicable);
                    assert_ne!(audit.containment, AuditItem::NotApplicable);
                    seen = true;
                }
            }
        }
        assert!(seen);
    }

    #[test]
    fn higher_exponent_witness_lies_in_the_right_multiple() {
        let z8 = cyclic(8).unwrap();
        let (x, y) = (set([0, 1]), set([0, 1]));
        for z in [3, 4] {
            let t = apply_transform(&z8, x, y, 2, z).unwrap();
            assert!(x.contains(t.x_z));
            assert!(t.y_tilde.contains(t.y_z));
        }
    }
}
