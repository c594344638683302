//! Subsets of a carrier `{0, .., n-1}` with `n <= 64`, stored as a single word.

use std::fmt;
use std::str::FromStr;

use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest carrier an [`ElementSet`] can describe.
pub const MAX_CARRIER: usize = 64;

/// A subset of the carrier, one bit per element.
///
/// Sets are extensional: two sets are equal iff they have the same members.
/// The ambient carrier size is not stored; operations that need it take the
/// semigroup as an argument.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The whole carrier `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_CARRIER, "carrier of size {n} exceeds {MAX_CARRIER}");
        if n == MAX_CARRIER {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(z: usize) -> Self {
        debug_assert!(z < MAX_CARRIER);
        ElementSet(1u64 << z)
    }

    #[inline]
    pub fn contains(self, z: usize) -> bool {
        z < MAX_CARRIER && self.0 >> z & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, z: usize) {
        debug_assert!(z < MAX_CARRIER);
        self.0 |= 1u64 << z;
    }

    #[inline]
    pub fn remove(&mut self, z: usize) {
        debug_assert!(z < MAX_CARRIER);
        self.0 &= !(1u64 << z);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest member, if any.
    #[inline]
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Members in ascending order.
    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// True iff every member is `< n`.
    #[inline]
    pub fn fits(self, n: usize) -> bool {
        self.is_subset(ElementSet::full(n))
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Ascending iterator over the members of an [`ElementSet`].
#[derive(Clone, Debug)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let z = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(z)
    }

    #[inline]
    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElementSet::EMPTY;
        for z in iter {
            s.insert(z);
        }
        s
    }
}

impl<const N: usize> From<[usize; N]> for ElementSet {
    fn from(members: [usize; N]) -> Self {
        members.into_iter().collect()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, z) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{z}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetLiteralError {
    #[error("set literal must be enclosed in braces, got `{0}`")]
    MissingBraces(String),
    #[error("invalid element `{token}` in set literal")]
    BadElement { token: String },
    #[error("element {value} exceeds the largest supported index {}", MAX_CARRIER - 1)]
    TooLarge { value: usize },
}

impl FromStr for ElementSet {
    type Err = SetLiteralError;

    /// Parses `{0,3,5}`; `{}` is the empty set. Whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| SetLiteralError::MissingBraces(t.to_string()))?;
        let mut set = ElementSet::EMPTY;
        if inner.trim().is_empty() {
            return Ok(set);
        }
        for token in inner.split(',') {
            let token = token.trim();
            let value: usize = token.parse().map_err(|_| SetLiteralError::BadElement {
                token: token.to_string(),
            })?;
            if value >= MAX_CARRIER {
                return Err(SetLiteralError::TooLarge { value });
            }
            set.insert(value);
        }
        Ok(set)
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for z in self.iter() {
            seq.serialize_element(&z)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct SetVisitor;

        impl<'de> Visitor<'de> for SetVisitor {
            type Value = ElementSet;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a list of element indices below 64")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<ElementSet, A::Error> {
                let mut set = ElementSet::EMPTY;
                while let Some(z) = seq.next_element::<usize>()? {
                    if z >= MAX_CARRIER {
                        return Err(de::Error::custom(format!("element {z} out of range")));
                    }
                    set.insert(z);
                }
                Ok(set)
            }
        }

        deserializer.deserialize_seq(SetVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_parsing() {
        assert_eq!("{0,3,5}".parse::<ElementSet>().unwrap(), ElementSet::from([0, 3, 5]));
        assert_eq!("{}".parse::<ElementSet>().unwrap(), ElementSet::EMPTY);
        assert_eq!(" { 1 , 2 } ".parse::<ElementSet>().unwrap(), ElementSet::from([1, 2]));
        assert!(matches!("1,2".parse::<ElementSet>(), Err(SetLiteralError::MissingBraces(_))));
        assert!(matches!("{1,x}".parse::<ElementSet>(), Err(SetLiteralError::BadElement { .. })));
        assert!(matches!("{64}".parse::<ElementSet>(), Err(SetLiteralError::TooLarge { value: 64 })));
    }

    #[test]
    fn display_is_sorted_literal() {
        assert_eq!(ElementSet::from([5, 0, 3]).to_string(), "{0,3,5}");
        assert_eq!(ElementSet::EMPTY.to_string(), "{}");
    }

    #[test]
    fn full_and_fits() {
        assert_eq!(ElementSet::full(0), ElementSet::EMPTY);
        assert_eq!(ElementSet::full(64).len(), 64);
        assert!(ElementSet::from([0, 4]).fits(5));
        assert!(!ElementSet::from([0, 5]).fits(5));
    }

    #[test]
    fn first_last() {
        let s = ElementSet::from([3, 9, 63]);
        assert_eq!(s.first(), Some(3));
        assert_eq!(s.last(), Some(63));
        assert_eq!(ElementSet::EMPTY.first(), None);
    }
}
