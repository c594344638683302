//! Finite semigroups, subsets of their carriers, and extended cardinals.

mod constructions;
mod element_set;
mod extended;
mod semigroup;

pub use constructions::{
    built_in, catalog, cyclic, dihedral, product, quaternion8, BuildError, SemigroupSpec,
    SpecParseError,
};
pub use element_set::{ElementSet, Iter, SetLiteralError, MAX_CARRIER};
pub use extended::ExtendedNat;
pub use semigroup::{parse_cayley, CayleyError, FiniteSemigroup, SemigroupError};
