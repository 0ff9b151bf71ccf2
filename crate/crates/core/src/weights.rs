//! Weight lattice and root system of GL3, and the f-fold tuples used for
//! restriction of scalars from F_q to F_p.
//!
//! Weights keep their full Z^3 coordinates. Twisting by the determinant is
//! never applied implicitly; use [`Weight::normalized`] or the twist helpers
//! in [`crate::fq`] when a comparison should be up to twist.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A character of the diagonal torus, `(λ1, λ2, λ3)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub [i64; 3]);

impl Weight {
    pub const ZERO: Weight = Weight([0, 0, 0]);
    /// The determinant character `(1,1,1)`.
    pub const DET: Weight = Weight([1, 1, 1]);

    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        Weight([a, b, c])
    }

    pub fn uniform(c: i64) -> Self {
        Weight([c, c, c])
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `(λ1 − λ2, λ2 − λ3)`.
    pub fn sl3_restrict(&self) -> (i64, i64) {
        (self.0[0] - self.0[1], self.0[1] - self.0[2])
    }

    /// `λ1 − λ3`.
    pub fn spread(&self) -> i64 {
        self.0[0] - self.0[2]
    }

    pub fn is_dominant(&self) -> bool {
        self.0[0] >= self.0[1] && self.0[1] >= self.0[2]
    }

    /// Membership in X0(T), the multiples of the determinant.
    pub fn is_central(&self) -> bool {
        self.sl3_restrict() == (0, 0)
    }

    /// Representative of the twist class with third coordinate zero.
    pub fn normalized(&self) -> Weight {
        *self - Weight::uniform(self.0[2])
    }

    pub fn pairing(&self, root: Root) -> i64 {
        let (i, j) = root.indices();
        self.0[i] - self.0[j]
    }

    /// `-w0 λ`, the highest weight of the dual module.
    pub fn dual(&self) -> Weight {
        Weight([-self.0[2], -self.0[1], -self.0[0]])
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1], self.0[2] + rhs.0[2]])
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        Weight([self.0[0] - rhs.0[0], self.0[1] - rhs.0[1], self.0[2] - rhs.0[2]])
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight([-self.0[0], -self.0[1], -self.0[2]])
    }
}

impl Mul<Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: Weight) -> Weight {
        Weight([self * rhs.0[0], self * rhs.0[1], self * rhs.0[2]])
    }
}

impl Index<usize> for Weight {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.0[0], self.0[1], self.0[2])
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::ParseWeight(s.to_string()));
        }
        let mut out = [0i64; 3];
        for (slot, part) in out.iter_mut().zip(&parts) {
            *slot = part.parse().map_err(|_| Error::ParseWeight(s.to_string()))?;
        }
        Ok(Weight(out))
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `ε_i − ε_j` for `i ≠ j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Root {
    A12,
    A23,
    A13,
    A21,
    A32,
    A31,
}

impl Root {
    pub const POSITIVE: [Root; 3] = [Root::A12, Root::A23, Root::A13];
    pub const NEGATIVE: [Root; 3] = [Root::A21, Root::A32, Root::A31];
    pub const ALL: [Root; 6] = [Root::A12, Root::A23, Root::A13, Root::A21, Root::A32, Root::A31];

    /// Zero-based coordinate indices `(i, j)` with `α = ε_i − ε_j`.
    pub fn indices(self) -> (usize, usize) {
        match self {
            Root::A12 => (0, 1),
            Root::A23 => (1, 2),
            Root::A13 => (0, 2),
            Root::A21 => (1, 0),
            Root::A32 => (2, 1),
            Root::A31 => (2, 0),
        }
    }

    pub fn vector(self) -> Weight {
        let (i, j) = self.indices();
        let mut v = [0; 3];
        v[i] = 1;
        v[j] = -1;
        Weight(v)
    }

    pub fn is_positive(self) -> bool {
        matches!(self, Root::A12 | Root::A23 | Root::A13)
    }

    pub fn negate(self) -> Root {
        match self {
            Root::A12 => Root::A21,
            Root::A23 => Root::A32,
            Root::A13 => Root::A31,
            Root::A21 => Root::A12,
            Root::A32 => Root::A23,
            Root::A31 => Root::A13,
        }
    }

    /// `w0 α` with `w0 = (13)`.
    pub fn w0(self) -> Root {
        match self {
            Root::A12 => Root::A32,
            Root::A23 => Root::A21,
            Root::A13 => Root::A31,
            Root::A21 => Root::A23,
            Root::A32 => Root::A12,
            Root::A31 => Root::A13,
        }
    }
}

/// An element of `Φ ∪ {0}`: the shift applied to one slot of a weight tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shift {
    Zero,
    Root(Root),
}

impl Shift {
    /// `Φ⁺ ∪ {0}` in the order `α13, α12, α23, 0`.
    pub const POSITIVE_OR_ZERO: [Shift; 4] = [
        Shift::Root(Root::A13),
        Shift::Root(Root::A12),
        Shift::Root(Root::A23),
        Shift::Zero,
    ];

    /// `Φ ∪ {0}`.
    pub const ALL: [Shift; 7] = [
        Shift::Root(Root::A13),
        Shift::Root(Root::A12),
        Shift::Root(Root::A23),
        Shift::Zero,
        Shift::Root(Root::A31),
        Shift::Root(Root::A21),
        Shift::Root(Root::A32),
    ];

    pub fn vector(self) -> Weight {
        match self {
            Shift::Zero => Weight::ZERO,
            Shift::Root(r) => r.vector(),
        }
    }

    pub fn is_positive_or_zero(self) -> bool {
        match self {
            Shift::Zero => true,
            Shift::Root(r) => r.is_positive(),
        }
    }

    pub fn negate(self) -> Shift {
        match self {
            Shift::Zero => Shift::Zero,
            Shift::Root(r) => Shift::Root(r.negate()),
        }
    }

    /// `-w0 α`: the shift seen from the dual pair.
    pub fn dual(self) -> Shift {
        match self {
            Shift::Zero => Shift::Zero,
            Shift::Root(r) => Shift::Root(r.w0().negate()),
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Shift::Zero => "0",
            Shift::Root(Root::A13) => "a13",
            Shift::Root(Root::A12) => "a12",
            Shift::Root(Root::A23) => "a23",
            Shift::Root(Root::A31) => "-a13",
            Shift::Root(Root::A21) => "-a12",
            Shift::Root(Root::A32) => "-a23",
        }
    }
}

impl From<Root> for Shift {
    fn from(r: Root) -> Self {
        Shift::Root(r)
    }
}

impl fmt::Display for Shift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Shift {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Shift::ALL
            .into_iter()
            .find(|sh| sh.tag() == s)
            .ok_or_else(|| Error::Parse(s.to_string()))
    }
}

impl Serialize for Shift {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.tag())
    }
}

impl<'de> Deserialize<'de> for Shift {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// True iff `μ − λ` is a nonnegative combination of the simple roots.
pub fn dominance_leq(lambda: Weight, mu: Weight) -> bool {
    let d = mu - lambda;
    d.sum() == 0 && d[0] >= 0 && d[0] + d[1] >= 0
}

/// `0 ≤ λ1 − λ2, λ2 − λ3 ≤ p^n − 1`.
pub fn is_p_restricted(lambda: Weight, p: i64, n: u32) -> bool {
    let bound = p.pow(n) - 1;
    let (a, b) = lambda.sl3_restrict();
    (0..=bound).contains(&a) && (0..=bound).contains(&b)
}

/// The three affine reflections bounding the restricted region.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reflection {
    S2,
    S3,
    S3Prime,
}

pub fn reflect(kind: Reflection, lambda: Weight, p: i64) -> Weight {
    let [a, b, c] = lambda.0;
    match kind {
        Reflection::S2 => Weight([c + p - 2, b, a - p + 2]),
        Reflection::S3 => Weight([b + p - 1, a - p + 1, c]),
        Reflection::S3Prime => Weight([a, c + p - 1, b - p + 1]),
    }
}

/// A permutation of the three coordinates; `perm[i]` is the image of `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    perm: [usize; 3],
}

impl WeylElement {
    pub const ID: WeylElement = WeylElement { perm: [0, 1, 2] };
    pub const S12: WeylElement = WeylElement { perm: [1, 0, 2] };
    pub const S23: WeylElement = WeylElement { perm: [0, 2, 1] };
    pub const C123: WeylElement = WeylElement { perm: [1, 2, 0] };
    pub const C132: WeylElement = WeylElement { perm: [2, 0, 1] };
    /// The longest element `w0 = (13)`.
    pub const W0: WeylElement = WeylElement { perm: [2, 1, 0] };

    /// All of S3 in the order `id, (12), (23), (123), (132), (13)`.
    pub const ALL: [WeylElement; 6] = [
        WeylElement::ID,
        WeylElement::S12,
        WeylElement::S23,
        WeylElement::C123,
        WeylElement::C132,
        WeylElement::W0,
    ];

    pub fn from_perm(perm: [usize; 3]) -> Option<Self> {
        let mut seen = [false; 3];
        for &i in &perm {
            if i > 2 || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(WeylElement { perm })
    }

    pub fn sign(&self) -> i64 {
        let p = self.perm;
        let inversions = (0..3)
            .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement {
            perm: [
                self.perm[other.perm[0]],
                self.perm[other.perm[1]],
                self.perm[other.perm[2]],
            ],
        }
    }

    /// `w ε_i = ε_{w(i)}`, extended linearly.
    pub fn act(&self, lambda: Weight) -> Weight {
        let mut out = [0; 3];
        for i in 0..3 {
            out[self.perm[i]] = lambda.0[i];
        }
        Weight(out)
    }
}

pub fn weyl_act(w: &WeylElement, lambda: Weight) -> Weight {
    w.act(lambda)
}

pub fn sl3_restrict(lambda: Weight) -> (i64, i64) {
    lambda.sl3_restrict()
}

/// `p ≥ 5` prime and `f ≥ 1`; `q = p^f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Params {
    pub p: i64,
    pub f: usize,
    pub q: i64,
}

impl Params {
    // q is kept well inside i64 so that sums Σ p^j λ_j of small weights
    // cannot overflow.
    const MAX_Q: i64 = 1 << 40;

    pub fn new(p: i64, f: usize) -> Result<Self> {
        if p < 5 || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        if f == 0 {
            return Err(Error::InvalidDegree(f));
        }
        let q = u32::try_from(f)
            .ok()
            .and_then(|e| p.checked_pow(e))
            .filter(|&q| q <= Self::MAX_Q)
            .ok_or(Error::InvalidDegree(f))?;
        Ok(Params { p, f, q })
    }

    /// `p^j` for `0 ≤ j < f`.
    pub fn power(&self, j: usize) -> i64 {
        self.p.pow(j as u32)
    }

    pub fn check_index(&self, j0: usize) -> Result<()> {
        if j0 < self.f {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { j0, f: self.f })
        }
    }
}

pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of X(T)^f, indexed by `J = Z/fZ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightTuple(pub Vec<Weight>);

impl WeightTuple {
    pub fn new(parts: Vec<Weight>) -> Self {
        WeightTuple(parts)
    }

    pub fn single(lambda: Weight) -> Self {
        WeightTuple(vec![lambda])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parts(&self) -> &[Weight] {
        &self.0
    }

    /// Slot `j` with cyclic indexing, so `at(-1)` is the last slot.
    pub fn at(&self, j: isize) -> Weight {
        let f = self.0.len() as isize;
        self.0[j.rem_euclid(f) as usize]
    }

    pub fn check_len(&self, params: &Params) -> Result<()> {
        if self.0.len() == params.f {
            Ok(())
        } else {
            Err(Error::TupleLength {
                expected: params.f,
                got: self.0.len(),
            })
        }
    }

    /// `λ + α_{j0}`: the shift applied in slot `j0` only.
    pub fn shifted(&self, j0: usize, shift: Shift) -> WeightTuple {
        let mut out = self.clone();
        out.0[j0] = out.0[j0] + shift.vector();
        out
    }

    pub fn with_slot(&self, j0: usize, lambda: Weight) -> WeightTuple {
        let mut out = self.clone();
        out.0[j0] = lambda;
        out
    }

    /// `Σ_j p^j λ_j`.
    pub fn summed(&self, p: i64) -> Weight {
        self.0.iter().rev().fold(Weight::ZERO, |acc, &w| p * acc + w)
    }

    pub fn is_restricted(&self, p: i64) -> bool {
        self.0.iter().all(|&w| is_p_restricted(w, p, 1))
    }

    pub fn dualize(&self) -> WeightTuple {
        WeightTuple(self.0.iter().map(Weight::dual).collect())
    }
}

impl Sub for &WeightTuple {
    type Output = WeightTuple;
    fn sub(self, rhs: &WeightTuple) -> WeightTuple {
        WeightTuple(self.0.iter().zip(&rhs.0).map(|(&a, &b)| a - b).collect())
    }
}

pub fn dualize(lambda: &WeightTuple) -> WeightTuple {
    lambda.dualize()
}

impl fmt::Display for WeightTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl FromStr for WeightTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::ParseWeight(s.to_string()));
        }
        s.split(';')
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(WeightTuple)
    }
}

impl Serialize for WeightTuple {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for WeightTuple {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
