//! Sumset lower bounds as executable checks.
//!
//! Each [`Statement`] pairs a set of hypotheses with a right-hand side; a
//! [`BoundReport`] records both for one `(X, Y)`. Verifiers never refuse a pair
//! whose hypotheses fail: they mark it not applicable, so sweeps stay total.

mod sweep;

use std::fmt;
use std::str::FromStr;

use arrayvec::ArrayVec;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{cyclic, ElementSet, ExtendedNat, FiniteSemigroup};
use crate::cd_constants::{delta, gcd, omega_value, pillai_delta};

pub use sweep::{enumerate_sets, sweep, PairWitness, SweepError, SweepOptions, SweepSummary};

/// The lower bounds this crate can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Statement {
    /// Groups of prime order `p`: `|X+Y| >= min(p, |X|+|Y|-1)`.
    CauchyDavenport,
    /// `Z/mZ`, `0 in Y`, every other `y` coprime to `m`: `min(m, |X|+|Y|-1)`.
    Chowla,
    /// `Z/mZ`: `min(m / δ, |X|+|Y|-1)` with δ the largest gcd of a difference in `Y`.
    Pillai,
    /// Groups: `min(𝔭(A), |X|+|Y|-1)`.
    HamidouneKarolyi,
    /// Cancellative, all non-identity orders at least `|X|+|Y|-1`, `<X>` or
    /// `<Y>` commutative: `|X|+|Y|-1`.
    KempermanWeak,
    /// Cancellative, `<Y>` commutative: `min(ω(Y), |X|+|Y|-1)`.
    MainBound,
    /// Cancellative, `<X>` commutative: `min(ω(X), |X|+|Y|-1)`.
    MirrorBound,
    /// Cancellative, `<X>` and `<Y>` commutative: `Ω(X, Y)`.
    PairBound,
    /// `Z/mZ`: `min(m / min(δ_X, δ_Y), |X|+|Y|-1)`.
    CyclicDelta,
}

impl Statement {
    pub const ALL: [Statement; 9] = [
        Statement::CauchyDavenport,
        Statement::Chowla,
        Statement::Pillai,
        Statement::HamidouneKarolyi,
        Statement::KempermanWeak,
        Statement::MainBound,
        Statement::MirrorBound,
        Statement::PairBound,
        Statement::CyclicDelta,
    ];

    /// Identifier used on the command line and in machine output.
    pub fn id(self) -> &'static str {
        match self {
            Statement::CauchyDavenport => "cd-1813",
            Statement::Chowla => "chowla",
            Statement::Pillai => "pillai",
            Statement::HamidouneKarolyi => "hk",
            Statement::KempermanWeak => "kemperman-weak",
            Statement::MainBound => "thm2.2",
            Statement::MirrorBound => "cor2.4",
            Statement::PairBound => "cor2.7",
            Statement::CyclicDelta => "cor2.9",
        }
    }

    fn needs_cyclic(self) -> bool {
        matches!(self, Statement::Chowla | Statement::Pillai | Statement::CyclicDelta)
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown statement `{0}` (expected one of cd-1813, chowla, pillai, hk, kemperman-weak, thm2.2, cor2.4, cor2.7, cor2.9)")]
pub struct UnknownStatement(pub String);

impl FromStr for Statement {
    type Err = UnknownStatement;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wanted = s.trim().to_ascii_lowercase();
        Statement::ALL
            .into_iter()
            .find(|st| st.id() == wanted)
            .ok_or_else(|| UnknownStatement(s.to_string()))
    }
}

impl From<Statement> for String {
    fn from(s: Statement) -> String {
        s.id().to_string()
    }
}

impl TryFrom<String> for Statement {
    type Error = UnknownStatement;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("X and Y must be non-empty")]
    EmptyOperand,
    #[error("{statement} needs a group")]
    NotGroup { statement: Statement },
    #[error("{statement} needs the ambient to be cyclic:m")]
    NotCyclic { statement: Statement },
    #[error("set {set} does not fit in a carrier of size {n}")]
    OutOfRange { set: ElementSet, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
}

/// A sharper bound next to a weaker one for the same pair; the sharper
/// right-hand side is expected to dominate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub sharper: Statement,
    pub sharper_rhs: ExtendedNat,
    pub weaker: Statement,
    pub weaker_rhs: ExtendedNat,
}

impl Comparison {
    pub fn holds(&self) -> bool {
        self.sharper_rhs >= self.weaker_rhs
    }

    pub fn strict(&self) -> bool {
        self.sharper_rhs > self.weaker_rhs
    }
}

/// One statement evaluated on one pair.
///
/// `satisfied` compares the two sides regardless of the hypotheses; it only
/// carries meaning when `applicable` holds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub statement: Statement,
    pub x: ElementSet,
    pub y: ElementSet,
    pub hypotheses: Vec<Hypothesis>,
    pub lhs: usize,
    pub rhs: ExtendedNat,
    pub applicable: bool,
    pub satisfied: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comparison: Option<Comparison>,
}

impl BoundReport {
    /// Applicable and the bound fails, or a sharper bound fell below a weaker one.
    pub fn is_violation(&self) -> bool {
        (self.applicable && !self.satisfied) || self.comparison.is_some_and(|c| !c.holds())
    }

    pub fn is_tight(&self) -> bool {
        self.applicable && ExtendedNat::from(self.lhs) == self.rhs
    }
}

/// Facts about the ambient semigroup shared by every pair.
#[derive(Debug, Clone)]
pub(crate) struct Ambient {
    order: usize,
    cancellative: bool,
    group: bool,
    p_constant: ExtendedNat,
    modulus: Option<usize>,
}

impl Ambient {
    pub(crate) fn new(a: &FiniteSemigroup) -> Self {
        Ambient {
            order: a.order(),
            cancellative: a.is_cancellative(),
            group: a.is_group(),
            p_constant: a.p_constant(),
            modulus: a.is_standard_cyclic().then_some(a.order()),
        }
    }

    pub(crate) fn require(&self, statement: Statement) -> Result<(), VerifyError> {
        if statement == Statement::HamidouneKarolyi && !self.group {
            return Err(VerifyError::NotGroup { statement });
        }
        if statement.needs_cyclic() && self.modulus.is_none() {
            return Err(VerifyError::NotCyclic { statement });
        }
        Ok(())
    }
}

/// Per-set quantities, computed once per set in sweeps.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SetFacts {
    pub(crate) set: ElementSet,
    len: usize,
    omega: ExtendedNat,
    commutative_span: bool,
    // Only on Z/mZ.
    delta: usize,
    pillai_delta: usize,
    chowla_ready: bool,
}

impl SetFacts {
    pub(crate) fn new(a: &FiniteSemigroup, ambient: &Ambient, set: ElementSet) -> Self {
        let (delta, pillai_delta, chowla_ready) = match ambient.modulus {
            Some(m) if !set.is_empty() => (
                delta(m, set).expect("set fits Z/mZ"),
                pillai_delta(m, set).expect("set fits Z/mZ"),
                set.contains(0) && set.iter().filter(|&y| y != 0).all(|y| gcd(m, y) == 1),
            ),
            _ => (1, 1, false),
        };
        SetFacts {
            set,
            len: set.len(),
            omega: omega_value(a, set),
            commutative_span: a.generates_commutative(set),
            delta,
            pillai_delta,
            chowla_ready,
        }
    }
}

pub(crate) struct Assessment {
    pub(crate) hypotheses: ArrayVec<(&'static str, bool), 3>,
    pub(crate) rhs: ExtendedNat,
    pub(crate) comparison: Option<Comparison>,
}

impl Assessment {
    pub(crate) fn applicable(&self) -> bool {
        self.hypotheses.iter().all(|&(_, holds)| holds)
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Hypotheses and right-hand side of `statement` for the pair `(X, Y)`.
/// Callers have already checked [`Ambient::require`] and non-emptiness.
pub(crate) fn assess(statement: Statement, ambient: &Ambient, fx: &SetFacts, fy: &SetFacts) -> Assessment {
    use Statement::*;
    let trivial = ExtendedNat::from(fx.len + fy.len - 1);
    let mut hypotheses = ArrayVec::new();
    let mut comparison = None;
    let modulus = || ambient.modulus.expect("checked by require");
    let main_rhs = fy.omega.min(trivial);

    let rhs = match statement {
        CauchyDavenport => {
            hypotheses.push(("group", ambient.group));
            hypotheses.push(("prime order", is_prime(ambient.order)));
            ExtendedNat::from(ambient.order).min(trivial)
        }
        Chowla => {
            hypotheses.push(("0 in Y and gcd(m, y) = 1 for y in Y \\ {0}", fy.chowla_ready));
            ExtendedNat::from(modulus()).min(trivial)
        }
        Pillai => ExtendedNat::from(modulus() / fy.pillai_delta).min(trivial),
        CyclicDelta => {
            let m = modulus();
            let rhs = ExtendedNat::from(m / fx.delta.min(fy.delta)).min(trivial);
            comparison = Some(Comparison {
                sharper: CyclicDelta,
                sharper_rhs: rhs,
                weaker: Pillai,
                weaker_rhs: ExtendedNat::from(m / fy.pillai_delta).min(trivial),
            });
            rhs
        }
        HamidouneKarolyi => {
            let rhs = ambient.p_constant.min(trivial);
            if ambient.cancellative && fy.commutative_span {
                comparison = Some(Comparison {
                    sharper: MainBound,
                    sharper_rhs: main_rhs,
                    weaker: HamidouneKarolyi,
                    weaker_rhs: rhs,
                });
            }
            rhs
        }
        KempermanWeak => {
            hypotheses.push(("cancellative", ambient.cancellative));
            hypotheses.push(("non-identity orders >= |X|+|Y|-1", ambient.p_constant >= trivial));
            hypotheses.push(("<X> or <Y> commutative", fx.commutative_span || fy.commutative_span));
            trivial
        }
        MainBound => {
            hypotheses.push(("cancellative", ambient.cancellative));
            hypotheses.push(("<Y> commutative", fy.commutative_span));
            main_rhs
        }
        MirrorBound => {
            hypotheses.push(("cancellative", ambient.cancellative));
            hypotheses.push(("<X> commutative", fx.commutative_span));
            fx.omega.min(trivial)
        }
        PairBound => {
            hypotheses.push(("cancellative", ambient.cancellative));
            hypotheses.push(("<X> commutative", fx.commutative_span));
            hypotheses.push(("<Y> commutative", fy.commutative_span));
            fx.omega.max(fy.omega).min(trivial)
        }
    };
    Assessment { hypotheses, rhs, comparison }
}

/// Evaluates `statement` on `(X, Y)` in `a`.
pub fn verify(
    a: &FiniteSemigroup,
    statement: Statement,
    x: ElementSet,
    y: ElementSet,
) -> Result<BoundReport, VerifyError> {
    let ambient = Ambient::new(a);
    ambient.require(statement)?;
    for s in [x, y] {
        if !s.fits(a.order()) {
            return Err(VerifyError::OutOfRange { set: s, n: a.order() });
        }
    }
    if x.is_empty() || y.is_empty() {
        return Err(VerifyError::EmptyOperand);
    }
    let fx = SetFacts::new(a, &ambient, x);
    let fy = SetFacts::new(a, &ambient, y);
    let assessment = assess(statement, &ambient, &fx, &fy);
    let lhs = a.sum(x, y).len();
    Ok(BoundReport {
        statement,
        x,
        y,
        applicable: assessment.applicable(),
        hypotheses: assessment
            .hypotheses
            .iter()
            .map(|&(name, holds)| Hypothesis { name: name.to_string(), holds })
            .collect(),
        lhs,
        satisfied: ExtendedNat::from(lhs) >= assessment.rhs,
        rhs: assessment.rhs,
        comparison: assessment.comparison,
    })
}

/// `|X+Y| >= min(ω(Y), |X|+|Y|-1)` for cancellative `A` with `<Y>` commutative.
pub fn verify_main(a: &FiniteSemigroup, x: ElementSet, y: ElementSet) -> Result<BoundReport, VerifyError> {
    verify(a, Statement::MainBound, x, y)
}

/// The mirrored bound with ω(X), and the symmetric bound `|X+Y| >= Ω(X, Y)`.
pub fn verify_mirror(
    a: &FiniteSemigroup,
    x: ElementSet,
    y: ElementSet,
) -> Result<[BoundReport; 2], VerifyError> {
    Ok([verify(a, Statement::MirrorBound, x, y)?, verify(a, Statement::PairBound, x, y)?])
}

pub fn verify_kemperman_weak(
    a: &FiniteSemigroup,
    x: ElementSet,
    y: ElementSet,
) -> Result<BoundReport, VerifyError> {
    verify(a, Statement::KempermanWeak, x, y)
}

pub fn verify_hk(a: &FiniteSemigroup, x: ElementSet, y: ElementSet) -> Result<BoundReport, VerifyError> {
    verify(a, Statement::HamidouneKarolyi, x, y)
}

pub fn verify_cauchy_davenport(
    a: &FiniteSemigroup,
    x: ElementSet,
    y: ElementSet,
) -> Result<BoundReport, VerifyError> {
    verify(a, Statement::CauchyDavenport, x, y)
}

/// Chowla, Pillai and the δ-bound on `Z/mZ`, in that order.
pub fn verify_zmod(m: usize, x: ElementSet, y: ElementSet) -> Result<Vec<BoundReport>, VerifyError> {
    let a = cyclic(m).map_err(|_| VerifyError::NotCyclic { statement: Statement::CyclicDelta })?;
    [Statement::Chowla, Statement::Pillai, Statement::CyclicDelta]
        .into_iter()
        .map(|s| verify(&a, s, x, y))
        .collect()
}
