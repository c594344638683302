//! The quantities that drive the lower bounds: ω of a set, ω of a pair, the
//! Cauchy-Davenport constant Ω, and the gcd form δ used on `Z/mZ`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{cyclic, ElementSet, ExtendedNat, FiniteSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstantError {
    #[error("the set must be non-empty")]
    EmptySet,
    #[error("the set must have at least two elements")]
    TooFewElements,
    #[error("modulus must be between 1 and 64, got {0}")]
    BadModulus(usize),
    #[error("element {element} is not a residue modulo {m}")]
    OutOfRange { element: usize, m: usize },
}

/// One row of ω: a unit `z0` of `Z` and `min ord(z - z0)` over the rest of `Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaRow {
    pub unit: usize,
    pub inner_inf: ExtendedNat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaBreakdown {
    pub set: ElementSet,
    pub rows: Vec<OmegaRow>,
    pub overall: ExtendedNat,
}

/// Inner infimum for a fixed unit `z0`: `min ord(z + inverse(z0))` over
/// `z in Z \ {z0}`, infinity when nothing is left.
fn inner_inf(a: &FiniteSemigroup, z: ElementSet, z0: usize) -> ExtendedNat {
    let inv = a.inverse(z0).expect("z0 is a unit");
    let mut rest = z;
    rest.remove(z0);
    rest.iter()
        .map(|w| a.element_order(a.op(w, inv)))
        .min()
        .map_or(ExtendedNat::Infinity, ExtendedNat::from)
}

/// ω(Z) with one row per unit of `Z`.
///
/// `z - z0` is the element `z + inverse(z0)`, which is well defined because
/// `z0` ranges over units only. With no unit in `Z` the supremum is over
/// nothing and the result is `0`.
pub fn omega(a: &FiniteSemigroup, z: ElementSet) -> OmegaBreakdown {
    let rows: Vec<OmegaRow> = z
        .intersection(a.units())
        .iter()
        .map(|unit| OmegaRow { unit, inner_inf: inner_inf(a, z, unit) })
        .collect();
    let overall = rows.iter().map(|r| r.inner_inf).max().unwrap_or(ExtendedNat::ZERO);
    OmegaBreakdown { set: z, rows, overall }
}

/// ω(Z) without the per-row breakdown.
pub fn omega_value(a: &FiniteSemigroup, z: ElementSet) -> ExtendedNat {
    let mut best = ExtendedNat::ZERO;
    for unit in z.intersection(a.units()) {
        best = best.max(inner_inf(a, z, unit));
        if best == ExtendedNat::Infinity {
            break;
        }
    }
    best
}

/// ω(X, Y) = max(ω(X), ω(Y)).
pub fn omega_pair(a: &FiniteSemigroup, x: ElementSet, y: ElementSet) -> ExtendedNat {
    omega_value(a, x).max(omega_value(a, y))
}

/// Ω(X, Y): `0` if either set is empty, otherwise `min(ω(X, Y), |X| + |Y| - 1)`.
///
/// Ω also has a branch for infinite operands, `max(|X|, |Y|)`; every carrier
/// here is finite, so that branch never applies.
pub fn cd_constant(a: &FiniteSemigroup, x: ElementSet, y: ElementSet) -> ExtendedNat {
    if x.is_empty() || y.is_empty() {
        return ExtendedNat::ZERO;
    }
    omega_pair(a, x, y).min(ExtendedNat::from(x.len() + y.len() - 1))
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn check_residues(m: usize, z: ElementSet) -> Result<(), ConstantError> {
    if m == 0 || m > crate::algebra::MAX_CARRIER {
        return Err(ConstantError::BadModulus(m));
    }
    match z.last() {
        Some(top) if top >= m => Err(ConstantError::OutOfRange { element: top, m }),
        _ => Ok(()),
    }
}

/// `δ_Z = min over z0 in Z of max over z in Z \ {z0} of gcd(m, z - z0)`,
/// and `1` for a singleton.
pub fn delta(m: usize, z: ElementSet) -> Result<usize, ConstantError> {
    check_residues(m, z)?;
    if z.is_empty() {
        return Err(ConstantError::EmptySet);
    }
    if z.len() == 1 {
        return Ok(1);
    }
    let value = z
        .iter()
        .map(|z0| {
            z.iter()
                .filter(|&w| w != z0)
                .map(|w| gcd(m, (w + m - z0) % m))
                .max()
                .expect("at least two elements")
        })
        .min()
        .expect("non-empty");
    Ok(value)
}

/// Largest `gcd(m, y - y0)` over distinct `y, y0` in `Y`, and `1` when `|Y| < 2`.
pub fn pillai_delta(m: usize, y: ElementSet) -> Result<usize, ConstantError> {
    check_residues(m, y)?;
    if y.is_empty() {
        return Err(ConstantError::EmptySet);
    }
    let mut best = 1;
    for a in y.iter() {
        for b in y.iter().filter(|&b| b != a) {
            best = best.max(gcd(m, (a + m - b) % m));
        }
    }
    Ok(best)
}

/// `(ω(Z), m / δ_Z)` on `Z/mZ`; the two are equal.
pub fn omega_gcd_crosscheck(m: usize, z: ElementSet) -> Result<(ExtendedNat, ExtendedNat), ConstantError> {
    let d = delta(m, z)?;
    if z.len() < 2 {
        return Err(ConstantError::TooFewElements);
    }
    let zm = cyclic(m).map_err(|_| ConstantError::BadModulus(m))?;
    Ok((omega_value(&zm, z), ExtendedNat::from(m / d)))
}
