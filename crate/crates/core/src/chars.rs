//! The formal character ring: exact weight multiplicities for Weyl, simple
//! and tilting modules of GL3 in the restricted range, products, and
//! triangular decomposition into Weyl characters.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::alcoves::{classify_alcove, Region};
use crate::error::{Error, Result};
use crate::weights::{reflect, Reflection, Root, Weight, WeylElement};

mod ssyt;

pub use ssyt::ssyt_count;

/// A finitely supported map `Weight → Z`. Zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalCharacter(BTreeMap<Weight, i64>);

impl FormalCharacter {
    pub fn zero() -> Self {
        FormalCharacter(BTreeMap::new())
    }

    /// The character of a one-dimensional module of weight `λ`.
    pub fn monomial(lambda: Weight) -> Self {
        let mut c = Self::zero();
        c.add_term(lambda, 1);
        c
    }

    pub fn from_terms<I: IntoIterator<Item = (Weight, i64)>>(terms: I) -> Self {
        let mut c = Self::zero();
        for (w, m) in terms {
            c.add_term(w, m);
        }
        c
    }

    pub fn add_term(&mut self, weight: Weight, mult: i64) {
        if mult == 0 {
            return;
        }
        let entry = self.0.entry(weight).or_insert(0);
        *entry += mult;
        if *entry == 0 {
            self.0.remove(&weight);
        }
    }

    pub fn get(&self, weight: Weight) -> i64 {
        self.0.get(&weight).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Weight, i64)> + '_ {
        self.0.iter().map(|(&w, &m)| (w, m))
    }

    /// Sum of all multiplicities.
    pub fn dim(&self) -> i64 {
        self.0.values().sum()
    }

    pub fn scaled(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        FormalCharacter(self.0.iter().map(|(&w, &m)| (w, k * m)).collect())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.values().all(|&m| m > 0)
    }

    /// Invariance under the coordinate action of S3.
    pub fn is_s3_stable(&self) -> bool {
        self.iter()
            .all(|(w, m)| WeylElement::ALL.iter().all(|s| self.get(s.act(w)) == m))
    }
}

impl Add for &FormalCharacter {
    type Output = FormalCharacter;
    fn add(self, rhs: &FormalCharacter) -> FormalCharacter {
        let mut out = self.clone();
        for (w, m) in rhs.iter() {
            out.add_term(w, m);
        }
        out
    }
}

impl Sub for &FormalCharacter {
    type Output = FormalCharacter;
    fn sub(self, rhs: &FormalCharacter) -> FormalCharacter {
        let mut out = self.clone();
        for (w, m) in rhs.iter() {
            out.add_term(w, -m);
        }
        out
    }
}

impl Neg for &FormalCharacter {
    type Output = FormalCharacter;
    fn neg(self) -> FormalCharacter {
        self.scaled(-1)
    }
}

impl Mul for &FormalCharacter {
    type Output = FormalCharacter;
    fn mul(self, rhs: &FormalCharacter) -> FormalCharacter {
        char_mul(self, rhs)
    }
}

#[derive(Serialize)]
struct CharEntry {
    weight: Weight,
    mult: i64,
}

impl Serialize for FormalCharacter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for (weight, mult) in self.iter() {
            seq.serialize_element(&CharEntry { weight, mult })?;
        }
        seq.end()
    }
}

/// Kostant's partition function for GL3: the number of ways to write `μ`
/// as a nonnegative combination of positive roots.
pub fn kostant_partition(mu: Weight) -> i64 {
    // μ = n1 α12 + n2 α23 forces μ = (n1, n2 − n1, −n2).
    if mu.sum() != 0 {
        return 0;
    }
    let (n1, n2) = (mu[0], -mu[2]);
    if n1 < 0 || n2 < 0 {
        return 0;
    }
    n1.min(n2) + 1
}

const RHO: Weight = Weight::new(1, 0, -1);

/// `dim V(λ)_ν` by Kostant's alternating sum over S3.
pub fn weyl_mult(lambda: Weight, nu: Weight) -> i64 {
    if !lambda.is_dominant() {
        return 0;
    }
    let shifted = lambda + RHO;
    WeylElement::ALL
        .iter()
        .map(|w| w.sign() * kostant_partition(w.act(shifted) - (nu + RHO)))
        .sum()
}

/// Weights with the sum of `λ` inside the coordinate box `[λ3, λ1]^3`;
/// every weight of `V(λ)` lies here.
pub fn support_box(lambda: Weight) -> impl Iterator<Item = Weight> {
    let (lo, hi, total) = (lambda[2], lambda[0], lambda.sum());
    (lo..=hi).flat_map(move |a| {
        (lo..=hi).filter_map(move |b| {
            let c = total - a - b;
            (lo..=hi).contains(&c).then_some(Weight::new(a, b, c))
        })
    })
}

pub fn weyl_char(lambda: Weight) -> FormalCharacter {
    if !lambda.is_dominant() {
        return FormalCharacter::zero();
    }
    FormalCharacter::from_terms(support_box(lambda).map(|nu| (nu, weyl_mult(lambda, nu))))
}

/// Weyl's dimension formula.
pub fn weyl_dim(lambda: Weight) -> i64 {
    if !lambda.is_dominant() {
        return 0;
    }
    let (a, b) = lambda.sl3_restrict();
    (a + 1) * (b + 1) * (a + b + 2) / 2
}

/// `[L(λ)]` for restricted `λ`: `[V(λ)] − [V(s2 λ)]` on `C(2)`, else `[V(λ)]`.
pub fn simple_char(lambda: Weight, p: i64) -> Result<FormalCharacter> {
    match classify_alcove(lambda, p) {
        Region::NonDominant => Ok(FormalCharacter::zero()),
        Region::C2 => Ok(&weyl_char(lambda) - &weyl_char(reflect(Reflection::S2, lambda, p))),
        r if r.is_restricted() => Ok(weyl_char(lambda)),
        _ => Err(Error::NotRestricted { weight: lambda, p }),
    }
}

/// `[T(λ)]` as a sum of Weyl characters, for `λ ∈ X1(T) ∪ C(3) ∪ C(3') ∪ C(p)`.
pub fn tilting_weyl_factors(lambda: Weight, p: i64) -> Result<Vec<Weight>> {
    let a12 = Root::A12.vector();
    let a23 = Root::A23.vector();
    let a13 = Root::A13.vector();
    let factors = match classify_alcove(lambda, p) {
        Region::NonDominant => vec![],
        Region::C1 | Region::C1_2 | Region::C2_3 => vec![lambda],
        Region::C2 => vec![lambda, reflect(Reflection::S2, lambda, p)],
        Region::C3 => vec![lambda, reflect(Reflection::S3, lambda, p)],
        Region::C3p => vec![lambda, reflect(Reflection::S3Prime, lambda, p)],
        Region::Cp => {
            let (a, b) = lambda.sl3_restrict();
            if (a, b) == (p, p - 1) {
                vec![lambda, lambda - a12, lambda - a13]
            } else if (a, b) == (p - 1, p) {
                vec![lambda, lambda - a23, lambda - a13]
            } else {
                // (p, p): sum over all six roots.
                Root::ALL.iter().map(|r| lambda - a13 + r.vector()).collect()
            }
        }
        Region::OtherDominant => return Err(Error::OutsideTiltingDomain { weight: lambda, p }),
    };
    Ok(factors)
}

pub fn tilting_char(lambda: Weight, p: i64) -> Result<FormalCharacter> {
    let mut out = FormalCharacter::zero();
    for mu in tilting_weyl_factors(lambda, p)? {
        out = &out + &weyl_char(mu);
    }
    Ok(out)
}

/// Product in the character ring (convolution of weight maps).
pub fn char_mul(a: &FormalCharacter, b: &FormalCharacter) -> FormalCharacter {
    let mut out = FormalCharacter::zero();
    for (wa, ma) in a.iter() {
        for (wb, mb) in b.iter() {
            out.add_term(wa + wb, ma * mb);
        }
    }
    out
}

/// Writes `c` as `Σ m_λ [V(λ)]` by repeatedly peeling off the highest
/// remaining dominant weight. Terms come out in peeling order: by
/// `λ1 − λ3` descending, then lexicographically descending.
pub fn decompose_weyl(c: &FormalCharacter) -> Result<Vec<(Weight, i64)>> {
    let mut rest = c.clone();
    let mut out = Vec::new();
    while let Some((top, _)) = rest.iter().max_by_key(|&(w, _)| (w.spread(), w)) {
        // The top weight of a genuine element must be dominant.
        if !top.is_dominant() {
            return Err(Error::NotInWeylSpan(top));
        }
        let m = rest.get(top);
        rest = &rest - &weyl_char(top).scaled(m);
        out.push((top, m));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SummandKind {
    Simple,
    Tilting,
}

impl Serialize for SummandKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(match self {
            SummandKind::Simple => "L",
            SummandKind::Tilting => "T",
        })
    }
}

/// One indecomposable summand `L(λ)^{⊕m}` or `T(λ)^{⊕m}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub kind: SummandKind,
    pub weight: Weight,
    pub mult: i64,
}

impl Summand {
    pub fn character(&self, p: i64) -> Result<FormalCharacter> {
        let base = match self.kind {
            SummandKind::Simple => simple_char(self.weight, p)?,
            SummandKind::Tilting => tilting_char(self.weight, p)?,
        };
        Ok(base.scaled(self.mult))
    }
}

pub type SummandList = Vec<Summand>;

pub fn summands_char(summands: &[Summand], p: i64) -> Result<FormalCharacter> {
    summands
        .iter()
        .try_fold(FormalCharacter::zero(), |acc, s| Ok(&acc + &s.character(p)?))
}
