//! Built-in semigroups and the textual spec grammar that names them.
//!
//! ```text
//! spec := "cyclic:" m | "dihedral:" k | "quaternion8" | "leftzero:" n
//!       | "maxchain:" n | "product:(" spec "," spec ")" | "cayley:" path
//! ```

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::semigroup::{parse_cayley, CayleyError, FiniteSemigroup, SemigroupError};

/// A named semigroup: one of the standard constructions or a Cayley file.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum SemigroupSpec {
    /// `Z/mZ`.
    Cyclic(usize),
    /// The dihedral group of order `2k`. Rotations `r^i` are elements `0..k`,
    /// reflections `s r^i` are elements `k..2k`.
    Dihedral(usize),
    /// `{1, i, j, k, -1, -i, -j, -k}` as elements `0..8` in that order.
    Quaternion8,
    /// Pairs `(a, b)` numbered `a * |B| + b`, componentwise operation.
    Product(Box<SemigroupSpec>, Box<SemigroupSpec>),
    /// `a + b = a`.
    LeftZero(usize),
    /// `a + b = max(a, b)`; a monoid with identity `0`.
    MaxChain(usize),
    Cayley(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecParseError {
    #[error("at offset {position}: unknown construction `{token}`")]
    UnknownSpec { position: usize, token: String },
    #[error("at offset {position}: expected {expected}, found `{token}`")]
    Unexpected { position: usize, expected: &'static str, token: String },
}

#[derive(Debug, Error)]
pub enum BuildError {
    #[error("{spec}: parameter must be at least {min}")]
    BadParameter { spec: String, min: usize },
    #[error("{spec}: {source}")]
    Invalid { spec: String, source: SemigroupError },
    #[error("cannot read {}: {message}", path.display())]
    Io { path: PathBuf, message: String },
    #[error("{}: {source}", path.display())]
    Cayley { path: PathBuf, source: CayleyError },
}

impl SemigroupSpec {
    /// Constructs the validated Cayley table this spec names.
    pub fn build(&self) -> Result<FiniteSemigroup, BuildError> {
        let invalid = |source| BuildError::Invalid { spec: self.to_string(), source };
        let at_least = |value: usize, min: usize| {
            if value < min {
                Err(BuildError::BadParameter { spec: self.to_string(), min })
            } else {
                Ok(())
            }
        };
        match self {
            SemigroupSpec::Cyclic(m) => {
                at_least(*m, 1)?;
                cyclic(*m).map_err(invalid)
            }
            SemigroupSpec::Dihedral(k) => {
                at_least(*k, 1)?;
                dihedral(*k).map_err(invalid)
            }
            SemigroupSpec::Quaternion8 => quaternion8().map_err(invalid),
            SemigroupSpec::LeftZero(n) => {
                at_least(*n, 1)?;
                FiniteSemigroup::from_fn(*n, |a, _| a).map_err(invalid)
            }
            SemigroupSpec::MaxChain(n) => {
                at_least(*n, 1)?;
                FiniteSemigroup::from_fn(*n, |a, b| a.max(b)).map_err(invalid)
            }
            SemigroupSpec::Product(left, right) => {
                let a = left.build()?;
                let b = right.build()?;
                product(&a, &b).map_err(invalid)
            }
            SemigroupSpec::Cayley(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| BuildError::Io {
                    path: path.clone(),
                    message: e.to_string(),
                })?;
                parse_cayley(&text).map_err(|source| BuildError::Cayley { path: path.clone(), source })
            }
        }
    }
}

pub fn cyclic(m: usize) -> Result<FiniteSemigroup, SemigroupError> {
    FiniteSemigroup::from_fn(m, |a, b| (a + b) % m)
}

pub fn dihedral(k: usize) -> Result<FiniteSemigroup, SemigroupError> {
    // s^a r^i  *  s^b r^j  =  s^(a+b) r^((-1)^b i + j)
    let split = |z: usize| (z / k, z % k);
    FiniteSemigroup::from_fn(2 * k, |x, y| {
        let (a, i) = split(x);
        let (b, j) = split(y);
        let i = if b == 1 { (k - i) % k } else { i };
        ((a + b) % 2) * k + (i + j) % k
    })
}

pub fn quaternion8() -> Result<FiniteSemigroup, SemigroupError> {
    // Products of the basis units 1, i, j, k as (negated, unit).
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    FiniteSemigroup::from_fn(8, |x, y| {
        let (neg, u) = UNIT[x % 4][y % 4];
        let negative = neg ^ (x >= 4) ^ (y >= 4);
        usize::from(negative) * 4 + u
    })
}

pub fn product(a: &FiniteSemigroup, b: &FiniteSemigroup) -> Result<FiniteSemigroup, SemigroupError> {
    let nb = b.order();
    FiniteSemigroup::from_fn(a.order() * nb, |x, y| {
        a.op(x / nb, y / nb) * nb + b.op(x % nb, y % nb)
    })
}

/// Every built-in construction (no Cayley files) of order at most `max_order`:
/// cyclic groups, dihedral groups, `Q8`, max-chains, left-zero semigroups, and
/// direct products of those (including one level of nesting).
pub fn catalog(max_order: usize) -> Vec<SemigroupSpec> {
    use SemigroupSpec::*;
    let mut specs = Vec::new();
    for m in 1..=max_order {
        specs.push(Cyclic(m));
    }
    for k in 1..=max_order / 2 {
        specs.push(Dihedral(k));
    }
    if max_order >= 8 {
        specs.push(Quaternion8);
    }
    for n in 1..=max_order {
        specs.push(MaxChain(n));
        specs.push(LeftZero(n));
    }

    let mut factors: Vec<(SemigroupSpec, usize)> = Vec::new();
    for n in 2..=max_order / 2 {
        factors.push((Cyclic(n), n));
        factors.push((MaxChain(n), n));
        factors.push((LeftZero(n), n));
        if n % 2 == 0 && n >= 4 {
            factors.push((Dihedral(n / 2), n));
        }
    }
    let mut products = Vec::new();
    for (i, (a, na)) in factors.iter().enumerate() {
        for (b, nb) in &factors[i..] {
            if na * nb <= max_order {
                products.push((Product(Box::new(a.clone()), Box::new(b.clone())), na * nb));
            }
        }
    }
    let mut nested = Vec::new();
    for (p, np) in &products {
        for (c, nc) in &factors {
            if np * nc <= max_order {
                nested.push(Product(Box::new(p.clone()), Box::new(c.clone())));
            }
        }
    }
    specs.extend(products.into_iter().map(|(p, _)| p));
    specs.extend(nested);
    specs
}

/// The built-in catalog, constructed.
pub fn built_in(max_order: usize) -> Vec<(SemigroupSpec, FiniteSemigroup)> {
    catalog(max_order)
        .into_iter()
        .map(|spec| {
            let a = spec.build().expect("built-in constructions are valid semigroups");
            (spec, a)
        })
        .collect()
}

impl fmt::Display for SemigroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemigroupSpec::Cyclic(m) => write!(f, "cyclic:{m}"),
            SemigroupSpec::Dihedral(k) => write!(f, "dihedral:{k}"),
            SemigroupSpec::Quaternion8 => f.write_str("quaternion8"),
            SemigroupSpec::Product(a, b) => write!(f, "product:({a},{b})"),
            SemigroupSpec::LeftZero(n) => write!(f, "leftzero:{n}"),
            SemigroupSpec::MaxChain(n) => write!(f, "maxchain:{n}"),
            SemigroupSpec::Cayley(p) => write!(f, "cayley:{}", p.display()),
        }
    }
}

impl From<SemigroupSpec> for String {
    fn from(spec: SemigroupSpec) -> String {
        spec.to_string()
    }
}

impl TryFrom<String> for SemigroupSpec {
    type Error = SpecParseError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl FromStr for SemigroupSpec {
    type Err = SpecParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = SpecParser { src: s, pos: 0, depth: 0 };
        let spec = parser.spec()?;
        parser.skip_ws();
        if parser.pos != s.len() {
            return Err(parser.unexpected("end of input"));
        }
        Ok(spec)
    }
}

struct SpecParser<'a> {
    src: &'a str,
    pos: usize,
    depth: usize,
}

impl SpecParser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn token_here(&self) -> String {
        let rest = self.rest();
        let end = rest.find([',', ')', '(']).unwrap_or(rest.len()).max(rest.len().min(1));
        rest[..end].to_string()
    }

    fn unexpected(&self, expected: &'static str) -> SpecParseError {
        SpecParseError::Unexpected { position: self.pos, expected, token: self.token_here() }
    }

    fn eat(&mut self, literal: &str) -> bool {
        if self.rest().starts_with(literal) {
            self.pos += literal.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, literal: &'static str) -> Result<(), SpecParseError> {
        self.skip_ws();
        if self.eat(literal) {
            Ok(())
        } else {
            Err(self.unexpected(literal))
        }
    }

    fn number(&mut self) -> Result<usize, SpecParseError> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        let value = self.rest()[..digits].parse().map_err(|_| self.unexpected("a number"))?;
        self.pos += digits;
        Ok(value)
    }

    fn spec(&mut self) -> Result<SemigroupSpec, SpecParseError> {
        self.skip_ws();
        let start = self.pos;
        let name_len = self.rest().bytes().take_while(u8::is_ascii_alphanumeric).count();
        let name = &self.src[start..start + name_len];
        self.pos += name_len;
        let spec = match name {
            "quaternion8" => SemigroupSpec::Quaternion8,
            "cyclic" | "dihedral" | "leftzero" | "maxchain" => {
                self.expect(":")?;
                let value = self.number()?;
                match name {
                    "cyclic" => SemigroupSpec::Cyclic(value),
                    "dihedral" => SemigroupSpec::Dihedral(value),
                    "leftzero" => SemigroupSpec::LeftZero(value),
                    _ => SemigroupSpec::MaxChain(value),
                }
            }
            "product" => {
                self.expect(":")?;
                self.expect("(")?;
                self.depth += 1;
                let left = self.spec()?;
                self.expect(",")?;
                let right = self.spec()?;
                self.expect(")")?;
                self.depth -= 1;
                SemigroupSpec::Product(Box::new(left), Box::new(right))
            }
            "cayley" => {
                self.expect(":")?;
                // Inside a product the path ends at the next separator.
                let rest = self.rest();
                let len = if self.depth > 0 { rest.find([',', ')']).unwrap_or(rest.len()) } else { rest.len() };
                let path = PathBuf::from(rest[..len].trim());
                if path.as_os_str().is_empty() {
                    return Err(self.unexpected("a file path"));
                }
                self.pos += len;
                SemigroupSpec::Cayley(path)
            }
            _ => {
                self.pos = start;
                return Err(SpecParseError::UnknownSpec { position: start, token: self.token_here() });
            }
        };
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ElementSet;

    #[test]
    fn parse_and_display_round_trip() {
        for text in [
            "cyclic:12",
            "dihedral:4",
            "quaternion8",
            "leftzero:2",
            "maxchain:3",
            "product:(cyclic:2,cyclic:3)",
            "product:(product:(cyclic:2,cyclic:2),maxchain:2)",
            "cayley:tables/z4.txt",
            "product:(cayley:a.txt,cyclic:2)",
        ] {
            let spec: SemigroupSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        let spaced: SemigroupSpec = " product:( cyclic:2 , cyclic:3 ) ".parse().unwrap();
        assert_eq!(spaced.to_string(), "product:(cyclic:2,cyclic:3)");
    }

    #[test]
    fn parse_errors_carry_the_token() {
        assert_eq!(
            "torus:3".parse::<SemigroupSpec>(),
            Err(SpecParseError::UnknownSpec { position: 0, token: "torus:3".into() })
        );
        assert!(matches!(
            "cyclic:x".parse::<SemigroupSpec>(),
            Err(SpecParseError::Unexpected { position: 7, expected: "a number", .. })
        ));
        assert!(matches!(
            "product:(cyclic:2 cyclic:3)".parse::<SemigroupSpec>(),
            Err(SpecParseError::Unexpected { expected: ",", .. })
        ));
        assert!(matches!(
            "cyclic:3)".parse::<SemigroupSpec>(),
            Err(SpecParseError::Unexpected { position: 8, .. })
        ));
        assert!("product:(cyclic:2,foo:1)".parse::<SemigroupSpec>().is_err());
    }

    #[test]
    fn cyclic_five() {
        let a = SemigroupSpec::Cyclic(5).build().unwrap();
        assert!(a.is_cancellative() && a.is_commutative());
        assert!(a.is_standard_cyclic());
    }

    #[test]
    fn dihedral_four_flags_and_relations() {
        let a = dihedral(4).unwrap();
        assert_eq!(a.order(), 8);
        assert!(a.is_cancellative());
        assert!(!a.is_commutative());
        assert!(a.is_group());
        let (r, s) = (1, 4);
        // s r = s r^1 (element 5), r s = s r^3 (element 7).
        assert_eq!(a.op(s, r), 5);
        assert_eq!(a.op(r, s), 7);
        assert_eq!(a.element_order(r), 4);
        for refl in 4..8 {
            assert_eq!(a.element_order(refl), 2);
        }
    }

    #[test]
    fn quaternion_group() {
        let q = quaternion8().unwrap();
        assert!(q.is_cancellative() && q.is_group());
        assert!(!q.is_commutative());
        let (one, i, j, k, minus_one) = (0, 1, 2, 3, 4);
        assert_eq!(q.op(i, j), k);
        assert_eq!(q.op(j, i), k + 4);
        assert_eq!(q.op(i, i), minus_one);
        assert_eq!(q.identity(), Some(one));
        // Every cyclic subgroup is cyclic by definition; check the subgroup
        // generated by each single element has the element's order.
        for y in 0..8 {
            assert_eq!(q.generated(ElementSet::singleton(y)).len(), q.element_order(y));
        }
        assert_eq!(q.element_order(minus_one), 2);
        assert_eq!(q.element_order(i), 4);
    }

    #[test]
    fn bad_parameters_and_unknown_files() {
        assert!(matches!(SemigroupSpec::Cyclic(0).build(), Err(BuildError::BadParameter { .. })));
        assert!(matches!(
            SemigroupSpec::Cayley("/nonexistent/table.txt".into()).build(),
            Err(BuildError::Io { .. })
        ));
        assert!(matches!(
            SemigroupSpec::Product(Box::new(SemigroupSpec::Cyclic(9)), Box::new(SemigroupSpec::Cyclic(8)))
                .build(),
            Err(BuildError::Invalid { source: SemigroupError::TooLarge { n: 72 }, .. })
        ));
    }

    #[test]
    fn product_of_two_and_three_is_z6() {
        let p = SemigroupSpec::Product(Box::new(SemigroupSpec::Cyclic(2)), Box::new(SemigroupSpec::Cyclic(3)))
            .build()
            .unwrap();
        let z6 = cyclic(6).unwrap();
        assert_eq!(p.order(), 6);
        assert!(p.is_commutative() && p.is_group());
        let exponent = (0..6).map(|z| p.element_order(z)).max().unwrap();
        assert_eq!(exponent, 6);
        // (a, b) at index 3a + b maps to the residue congruent to a mod 2, b mod 3.
        let phi = |z: usize| (3 * (z / 3) + 4 * (z % 3)) % 6;
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(phi(p.op(x, y)), z6.op(phi(x), phi(y)));
            }
        }
        for xb in 0u64..64 {
            for yb in [1u64, 0b11, 0b100101, 0b111111] {
                let (x, y) = (ElementSet::from_bits(xb), ElementSet::from_bits(yb));
                let image = |s: ElementSet| s.iter().map(phi).collect::<ElementSet>();
                assert_eq!(image(p.sum(x, y)), z6.sum(image(x), image(y)));
            }
        }
    }

    #[test]
    fn catalog_builds_and_contains_the_expected_groups() {
        let all = built_in(8);
        let groups: Vec<_> = all.iter().filter(|(_, a)| a.is_group()).collect();
        assert!(groups.iter().any(|(s, _)| *s == SemigroupSpec::Quaternion8));
        assert!(groups.iter().any(|(s, _)| *s == SemigroupSpec::Dihedral(4)));
        assert!(groups.iter().any(|(_, a)| a.order() == 8 && a.is_commutative()
            && (0..8).all(|z| a.element_order(z) <= 2)));
        assert!(all.iter().all(|(_, a)| a.order() <= 8));
        assert!(all.iter().any(|(_, a)| !a.is_monoid()));
    }
}
