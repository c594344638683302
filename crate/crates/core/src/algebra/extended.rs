use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A cardinal that is either a non-negative integer or the countable infinity.
///
/// The derived ordering puts every `Finite(k)` below `Infinity`, which is what
/// the sup/inf conventions for ω and 𝔭 need: the infimum of nothing is
/// `Infinity` and the supremum of nothing is `Finite(0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtendedNat {
    Finite(u64),
    Infinity,
}

impl ExtendedNat {
    pub const ZERO: ExtendedNat = ExtendedNat::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedNat::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtendedNat::Finite(k) => Some(k),
            ExtendedNat::Infinity => None,
        }
    }
}

impl From<u64> for ExtendedNat {
    fn from(k: u64) -> Self {
        ExtendedNat::Finite(k)
    }
}

impl From<usize> for ExtendedNat {
    fn from(k: usize) -> Self {
        ExtendedNat::Finite(k as u64)
    }
}

impl fmt::Display for ExtendedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedNat::Finite(k) => write!(f, "{k}"),
            ExtendedNat::Infinity => f.write_str("infinity"),
        }
    }
}

/// Finite values serialize as JSON numbers, infinity as the string `"infinity"`.
impl Serialize for ExtendedNat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtendedNat::Finite(k) => serializer.serialize_u64(*k),
            ExtendedNat::Infinity => serializer.serialize_str("infinity"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtendedNat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ExtVisitor;

        impl<'de> Visitor<'de> for ExtVisitor {
            type Value = ExtendedNat;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-negative integer or \"infinity\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExtendedNat, E> {
                Ok(ExtendedNat::Finite(v))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExtendedNat, E> {
                u64::try_from(v)
                    .map(ExtendedNat::Finite)
                    .map_err(|_| E::custom("negative cardinal"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<ExtendedNat, E> {
                if v == "infinity" {
                    Ok(ExtendedNat::Infinity)
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(v), &self))
                }
            }
        }

        deserializer.deserialize_any(ExtVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::ExtendedNat::{self, *};

    #[test]
    fn ordering_puts_infinity_on_top() {
        assert!(Finite(u64::MAX) < Infinity);
        assert!(Finite(2) < Finite(3));
        assert_eq!(Finite(4).min(Infinity), Finite(4));
        assert_eq!(Finite(4).max(Infinity), Infinity);
    }

    #[test]
    fn json_token() {
        assert_eq!(serde_json::to_string(&Infinity).unwrap(), "\"infinity\"");
        assert_eq!(serde_json::to_string(&Finite(7)).unwrap(), "7");
        let back: ExtendedNat = serde_json::from_str("\"infinity\"").unwrap();
        assert_eq!(back, Infinity);
        let back: ExtendedNat = serde_json::from_str("12").unwrap();
        assert_eq!(back, Finite(12));
        assert!(serde_json::from_str::<ExtendedNat>("\"inf\"").is_err());
    }
}
