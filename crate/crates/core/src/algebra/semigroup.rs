//! Finite semigroups given by validated Cayley tables.

use std::borrow::Cow;
use std::fmt;

use thiserror::Error;

use super::element_set::{ElementSet, MAX_CARRIER};
use super::extended::ExtendedNat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("the carrier must be non-empty")]
    Empty,
    #[error("carrier of size {n} exceeds the supported maximum of {MAX_CARRIER}")]
    TooLarge { n: usize },
    #[error("operation table has {got} rows or entries where {expected} were expected")]
    WrongTableSize { expected: usize, got: usize },
    #[error("table[{a}][{b}] = {value} is outside the carrier [0, {n})")]
    IndexOutOfRange { a: usize, b: usize, value: usize, n: usize },
    #[error("operation is not associative: ({a} + {b}) + {c} = {left} but {a} + ({b} + {c}) = {right}")]
    NonAssociative { a: usize, b: usize, c: usize, left: usize, right: usize },
}

/// A semigroup on the carrier `{0, .., n-1}` with `1 <= n <= 64`.
///
/// Construction checks associativity and caches the identity, units and
/// inverses, commutativity, cancellativity and the order of every element,
/// so every value of this type is a valid semigroup. It is immutable and can
/// be shared freely between threads.
#[derive(Clone)]
pub struct FiniteSemigroup {
    n: usize,
    table: Vec<u8>,
    identity: Option<usize>,
    inverse: Vec<Option<u8>>,
    units: ElementSet,
    commutative: bool,
    cancellative: bool,
    orders: Vec<u32>,
    // For each x and each byte-chunk of a set, the image of that chunk under y -> x + y.
    translate: Vec<u64>,
    chunks: usize,
}

impl FiniteSemigroup {
    /// Builds a semigroup from an `n x n` table where `table[a][b] = a + b`.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self, SemigroupError> {
        let n = table.len();
        let mut flat = Vec::with_capacity(n * n);
        for row in &table {
            if row.len() != n {
                return Err(SemigroupError::WrongTableSize { expected: n, got: row.len() });
            }
            flat.extend_from_slice(row);
        }
        Self::from_flat(n, &flat)
    }

    pub fn from_fn(n: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self, SemigroupError> {
        let flat: Vec<usize> = (0..n * n).map(|i| op(i / n, i % n)).collect();
        Self::from_flat(n, &flat)
    }

    /// Builds from a row-major table of length `n * n`.
    pub fn from_flat(n: usize, flat: &[usize]) -> Result<Self, SemigroupError> {
        if n == 0 {
            return Err(SemigroupError::Empty);
        }
        if n > MAX_CARRIER {
            return Err(SemigroupError::TooLarge { n });
        }
        if flat.len() != n * n {
            return Err(SemigroupError::WrongTableSize { expected: n * n, got: flat.len() });
        }
        if let Some(i) = flat.iter().position(|&v| v >= n) {
            return Err(SemigroupError::IndexOutOfRange { a: i / n, b: i % n, value: flat[i], n });
        }
        let table: Vec<u8> = flat.iter().map(|&v| v as u8).collect();
        let at = |a: usize, b: usize| table[a * n + b] as usize;

        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    let left = at(ab, c);
                    let right = at(a, at(b, c));
                    if left != right {
                        return Err(SemigroupError::NonAssociative { a, b, c, left, right });
                    }
                }
            }
        }

        let identity = (0..n).find(|&e| (0..n).all(|z| at(e, z) == z && at(z, e) == z));

        let mut inverse = vec![None; n];
        let mut units = ElementSet::EMPTY;
        if let Some(e) = identity {
            for (z, slot) in inverse.iter_mut().enumerate() {
                if let Some(w) = (0..n).find(|&w| at(z, w) == e && at(w, z) == e) {
                    *slot = Some(w as u8);
                    units.insert(z);
                }
            }
        }

        let commutative = (0..n).all(|a| (a + 1..n).all(|b| at(a, b) == at(b, a)));

        let full = ElementSet::full(n);
        let rows_are_permutations =
            (0..n).all(|a| (0..n).map(|b| at(a, b)).collect::<ElementSet>() == full);
        let cols_are_permutations =
            (0..n).all(|b| (0..n).map(|a| at(a, b)).collect::<ElementSet>() == full);
        let cancellative = rows_are_permutations && cols_are_permutations;

        let orders = (0..n)
            .map(|z| {
                let mut seen = ElementSet::EMPTY;
                let mut cur = z;
                while !seen.contains(cur) {
                    seen.insert(cur);
                    cur = at(cur, z);
                }
                seen.len() as u32
            })
            .collect();

        let chunks = n.div_ceil(8);
        let mut translate = vec![0u64; n * chunks * 256];
        for x in 0..n {
            for c in 0..chunks {
                let base = (x * chunks + c) * 256;
                for byte in 1..256usize {
                    let low = byte.trailing_zeros() as usize;
                    let y = 8 * c + low;
                    let image = if y < n { 1u64 << at(x, y) } else { 0 };
                    translate[base + byte] = translate[base + (byte & (byte - 1))] | image;
                }
            }
        }

        Ok(FiniteSemigroup {
            n,
            table,
            identity,
            inverse,
            units,
            commutative,
            cancellative,
            orders,
            translate,
            chunks,
        })
    }

    /// Number of elements of the carrier.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    /// The whole carrier as a set.
    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| (0..self.n).map(|b| self.op(a, b)).collect()).collect()
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn is_monoid(&self) -> bool {
        self.identity.is_some()
    }

    /// Units of the monoid; empty when there is no identity.
    pub fn units(&self) -> ElementSet {
        self.units
    }

    pub fn inverse(&self, z: usize) -> Option<usize> {
        self.inverse[z].map(usize::from)
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    /// Every row and column of the table is a permutation of the carrier.
    pub fn is_cancellative(&self) -> bool {
        self.cancellative
    }

    /// Unital and every element is a unit.
    pub fn is_group(&self) -> bool {
        self.units.len() == self.n
    }

    /// Whether this is literally `Z/nZ` with `a + b = (a + b) mod n`.
    pub fn is_standard_cyclic(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.op(a, b) == (a + b) % self.n))
    }

    /// `|<z>|`, the number of distinct multiples `z, 2z, 3z, ..`.
    #[inline]
    pub fn element_order(&self, z: usize) -> usize {
        self.orders[z] as usize
    }

    pub fn ord(&self, z: usize) -> ExtendedNat {
        ExtendedNat::from(self.element_order(z))
    }

    /// `x + Y`.
    #[inline]
    pub fn left_translate(&self, x: usize, set: ElementSet) -> ElementSet {
        let base = x * self.chunks * 256;
        let mut bits = set.bits();
        let mut out = 0u64;
        let mut c = 0;
        while bits != 0 {
            out |= self.translate[base + c * 256 + (bits & 0xff) as usize];
            bits >>= 8;
            c += 1;
        }
        ElementSet::from_bits(out)
    }

    /// `X + y`.
    pub fn right_translate(&self, set: ElementSet, y: usize) -> ElementSet {
        set.iter().map(|x| self.op(x, y)).collect()
    }

    /// The subsemigroup generated by `z`, i.e. the union of all `kZ`, `k >= 1`.
    pub fn generated(&self, z: ElementSet) -> ElementSet {
        let mut closure = z;
        loop {
            let next = closure.union(self.sum(closure, z));
            if next == closure {
                return closure;
            }
            closure = next;
        }
    }

    // Sumset used internally; the public API lives in `set_calculus`.
    #[inline]
    pub(crate) fn sum(&self, x: ElementSet, y: ElementSet) -> ElementSet {
        let mut out = ElementSet::EMPTY;
        if y.is_empty() {
            return out;
        }
        for a in x.iter() {
            out = out.union(self.left_translate(a, y));
        }
        out
    }

    /// Whether all elements of `s` commute pairwise.
    pub fn commutes_within(&self, s: ElementSet) -> bool {
        if self.commutative {
            return true;
        }
        let members = s.to_vec();
        members.iter().enumerate().all(|(i, &a)| {
            members[i + 1..].iter().all(|&b| self.op(a, b) == self.op(b, a))
        })
    }

    /// Whether `<z>` is a commutative subsemigroup (checked on the closure).
    pub fn generates_commutative(&self, z: ElementSet) -> bool {
        self.commutative || self.commutes_within(self.generated(z))
    }

    /// `{z : z + x = x + z for all x in X}`.
    pub fn centralizer(&self, x: ElementSet) -> ElementSet {
        (0..self.n)
            .filter(|&z| x.iter().all(|a| self.op(z, a) == self.op(a, z)))
            .collect()
    }

    /// The least order of an element other than the identity of the
    /// unitization, or infinity when the unitization is trivial.
    ///
    /// Orders of elements of `A` are the same in `A` and in its unitization,
    /// and the adjoined identity is excluded, so this is computed on `A`.
    pub fn p_constant(&self) -> ExtendedNat {
        (0..self.n)
            .filter(|&z| Some(z) != self.identity)
            .map(|z| self.element_order(z))
            .min()
            .map_or(ExtendedNat::Infinity, ExtendedNat::from)
    }

    /// `A` itself when it has an identity, otherwise `A` with a new identity
    /// adjoined as element `n`.
    ///
    /// Fails only for a non-unital semigroup that already has 64 elements.
    pub fn unitization(&self) -> Result<Cow<'_, FiniteSemigroup>, SemigroupError> {
        if self.identity.is_some() {
            return Ok(Cow::Borrowed(self));
        }
        let n = self.n;
        let e = n;
        let extended = FiniteSemigroup::from_fn(n + 1, |a, b| {
            if a == e {
                b
            } else if b == e {
                a
            } else {
                self.op(a, b)
            }
        })?;
        Ok(Cow::Owned(extended))
    }

    /// Renders the table in the Cayley text format.
    pub fn to_cayley_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for a in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|b| self.op(a, b).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl PartialEq for FiniteSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.table == other.table
    }
}

impl Eq for FiniteSemigroup {}

impl fmt::Debug for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSemigroup")
            .field("n", &self.n)
            .field("identity", &self.identity)
            .field("units", &self.units)
            .field("commutative", &self.commutative)
            .field("cancellative", &self.cancellative)
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CayleyError {
    #[error("missing size header")]
    MissingHeader,
    #[error("line {line}: bad size header `{token}`")]
    BadHeader { line: usize, token: String },
    #[error("line {line}: expected {expected} entries, found {got}")]
    RaggedRow { line: usize, expected: usize, got: usize },
    #[error("line {line}: bad entry `{token}`")]
    BadEntry { line: usize, token: String },
    #[error("line {line}: entry {value} is outside [0, {n})")]
    OutOfRange { line: usize, value: usize, n: usize },
    #[error("expected {expected} table rows, found {got}")]
    MissingRows { expected: usize, got: usize },
    #[error("line {line}: unexpected data after the table")]
    TrailingData { line: usize },
    #[error(transparent)]
    Invalid(#[from] SemigroupError),
}

/// Parses the Cayley text format: a line holding `n`, then `n` rows of `n`
/// whitespace-separated entries. Blank lines are skipped.
pub fn parse_cayley(text: &str) -> Result<FiniteSemigroup, CayleyError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(CayleyError::MissingHeader)?;
    let n: usize = header.parse().map_err(|_| CayleyError::BadHeader {
        line: header_line,
        token: header.to_string(),
    })?;
    if n == 0 {
        return Err(SemigroupError::Empty.into());
    }
    if n > MAX_CARRIER {
        return Err(SemigroupError::TooLarge { n }.into());
    }

    let mut flat = Vec::with_capacity(n * n);
    for row in 0..n {
        let (line, content) = lines
            .next()
            .ok_or(CayleyError::MissingRows { expected: n, got: row })?;
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != n {
            return Err(CayleyError::RaggedRow { line, expected: n, got: tokens.len() });
        }
        for token in tokens {
            let value: usize = token.parse().map_err(|_| CayleyError::BadEntry {
                line,
                token: token.to_string(),
            })?;
            if value >= n {
                return Err(CayleyError::OutOfRange { line, value, n });
            }
            flat.push(value);
        }
    }
    if let Some((line, _)) = lines.next() {
        return Err(CayleyError::TrailingData { line });
    }
    Ok(FiniteSemigroup::from_flat(n, &flat)?)
}
