//! Region classification of weights, the socle map for tilting modules, and
//! the good-pair / bad-pair decision tables.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fq::twist_offsets;
use crate::weights::{reflect, Params, Reflection, Root, Shift, Weight, WeightTuple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Region {
    C1,
    C1_2,
    C2,
    C2_3,
    C3,
    C3p,
    Cp,
    OtherDominant,
    NonDominant,
}

impl Region {
    pub fn tag(self) -> &'static str {
        match self {
            Region::C1 => "C(1)",
            Region::C1_2 => "C(1|2)",
            Region::C2 => "C(2)",
            Region::C2_3 => "C(2|3)",
            Region::C3 => "C(3)",
            Region::C3p => "C(3')",
            Region::Cp => "C(p)",
            Region::OtherDominant => "other-dominant",
            Region::NonDominant => "non-dominant",
        }
    }

    pub fn is_restricted(self) -> bool {
        matches!(self, Region::C1 | Region::C1_2 | Region::C2 | Region::C2_3)
    }

    /// `X1(T) ∪ C(3) ∪ C(3') ∪ C(p)`: where tilting characters and the
    /// socle map are available.
    pub fn in_tilting_domain(self) -> bool {
        !matches!(self, Region::OtherDominant | Region::NonDominant)
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for Region {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.tag())
    }
}

// Membership tests for each region, without precedence.

fn in_c1(l: Weight, p: i64) -> bool {
    restricted(l, p) && l.spread() <= p - 3
}

fn in_c1_2(l: Weight, p: i64) -> bool {
    restricted(l, p) && l.spread() == p - 2
}

fn in_c2(l: Weight, p: i64) -> bool {
    let (a, b) = l.sl3_restrict();
    (0..=p - 2).contains(&a) && (0..=p - 2).contains(&b) && l.spread() >= p - 1
}

fn in_c2_3(l: Weight, p: i64) -> bool {
    let (a, b) = l.sl3_restrict();
    restricted(l, p) && (a == p - 1 || b == p - 1)
}

fn in_c3(l: Weight, p: i64) -> bool {
    let (a, _) = l.sl3_restrict();
    l.is_dominant() && (a == p || a == p + 1) && l.spread() <= 2 * p - 2
}

fn in_c3p(l: Weight, p: i64) -> bool {
    let (_, b) = l.sl3_restrict();
    l.is_dominant() && (b == p || b == p + 1) && l.spread() <= 2 * p - 2
}

fn in_cp(l: Weight, p: i64) -> bool {
    matches!(l.sl3_restrict(), (a, b) if (a, b) == (p, p - 1) || (a, b) == (p - 1, p) || (a, b) == (p, p))
}

fn restricted(l: Weight, p: i64) -> bool {
    crate::weights::is_p_restricted(l, p, 1)
}

/// Every region predicate that holds for `λ`. Used to check disjointness.
pub fn matching_regions(lambda: Weight, p: i64) -> Vec<Region> {
    type Test = (Region, fn(Weight, i64) -> bool);
    let tests: [Test; 7] = [
        (Region::C1, in_c1),
        (Region::C1_2, in_c1_2),
        (Region::C2, in_c2),
        (Region::C2_3, in_c2_3),
        (Region::C3, in_c3),
        (Region::C3p, in_c3p),
        (Region::Cp, in_cp),
    ];
    tests.iter().filter(|(_, t)| t(lambda, p)).map(|&(r, _)| r).collect()
}

pub fn classify_alcove(lambda: Weight, p: i64) -> Region {
    if !lambda.is_dominant() {
        return Region::NonDominant;
    }
    matching_regions(lambda, p)
        .first()
        .copied()
        .unwrap_or(Region::OtherDominant)
}

/// Highest weight of the G-socle of the tilting module `T(λ)`.
pub fn lambda_prime(lambda: Weight, p: i64) -> Result<Weight> {
    let a13 = Root::A13.vector();
    let out = match classify_alcove(lambda, p) {
        Region::C1 | Region::C1_2 | Region::C2_3 => lambda,
        Region::C2 => reflect(Reflection::S2, lambda, p),
        Region::C3 => reflect(Reflection::S3, lambda, p),
        Region::C3p => reflect(Reflection::S3Prime, lambda, p),
        Region::Cp if lambda.sl3_restrict() == (p, p) => lambda - 2 * a13,
        Region::Cp => lambda - a13,
        Region::OtherDominant | Region::NonDominant => return Err(Error::OutsideTiltingDomain { weight: lambda, p }),
    };
    debug_assert!(restricted(out, p), "λ' = {out} not restricted for λ = {lambda}");
    Ok(out)
}

/// `λ ∈ C(α)⁺`, the set of restricted `λ` for which `(λ, λ + α)` is a good
/// pair. Only defined for `α ∈ Φ⁺ ∪ {0}`; negative roots give `false`.
pub fn in_c_alpha_plus(lambda: Weight, alpha: Shift, p: i64) -> bool {
    if !restricted(lambda, p) {
        return false;
    }
    let (a, b) = lambda.sl3_restrict();
    let s = a + b;
    let window = |lo: i64| (lo..=p - 3).contains(&s) || (p - 1..=2 * p - 4).contains(&s);
    match alpha {
        Shift::Zero => true,
        Shift::Root(Root::A13) => {
            (a <= p - 2 && b <= p - 2 && ((0..=p - 4).contains(&s) || (p - 1..=2 * p - 4).contains(&s)))
                || (a, b) == (p - 2, 0)
                || (a, b) == (0, p - 2)
        }
        Shift::Root(Root::A12) => (a <= p - 3 && (1..=p - 1).contains(&b) && window(1)) || (a, b) == (p - 3, 1),
        Shift::Root(Root::A23) => ((1..=p - 1).contains(&a) && b <= p - 3 && window(1)) || (a, b) == (1, p - 3),
        Shift::Root(_) => false,
    }
}

/// The ten region pairs of the good-pair table.
pub const GOOD_REGION_PAIRS: [(Region, Region); 10] = [
    (Region::C1, Region::C1),
    (Region::C1_2, Region::C1_2),
    (Region::C2_3, Region::C2_3),
    (Region::C2, Region::C2),
    (Region::C1, Region::C1_2),
    (Region::C1_2, Region::C1),
    (Region::C1_2, Region::C2_3),
    (Region::C2_3, Region::C1_2),
    (Region::C2_3, Region::C2),
    (Region::C2, Region::C2_3),
];

pub fn good_pair(lambda: Weight, mu: Weight, p: i64) -> bool {
    if !restricted(lambda, p) || !restricted(mu, p) {
        return false;
    }
    let key = (classify_alcove(lambda, p), classify_alcove(mu, p));
    GOOD_REGION_PAIRS.contains(&key)
}

/// Membership in `C(α, j0)`: the single-embedding definition when `f = 1`
/// and the definition with the `j0 − 1` side conditions when `f ≥ 2`.
///
/// Panics if the tuple length differs from `f` or `j0 ≥ f`.
pub fn in_c_alpha_j0(lambda: &WeightTuple, alpha: Shift, j0: usize, params: &Params) -> bool {
    assert_eq!(lambda.len(), params.f, "tuple length must equal f");
    assert!(j0 < params.f, "j0 out of range");
    let p = params.p;
    if !lambda.is_restricted(p) {
        return false;
    }
    let cur = lambda.parts()[j0];
    let (a, b) = cur.sl3_restrict();

    if params.f == 1 {
        return match alpha {
            Shift::Root(Root::A13) => in_c_alpha_plus(cur, alpha, p) && a.min(b) <= p - 4,
            Shift::Root(Root::A12) => in_c_alpha_plus(cur, alpha, p) && a <= p - 4,
            Shift::Root(Root::A23) => in_c_alpha_plus(cur, alpha, p) && b <= p - 4,
            Shift::Zero => a <= p - 3 && b <= p - 3 && a + b != p - 2,
            Shift::Root(_) => false,
        };
    }

    let prev = lambda.at(j0 as isize - 1);
    let (pa, pb) = prev.sl3_restrict();
    let others_wide = || {
        lambda
            .parts()
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != j0)
            .all(|(_, w)| w.spread() >= p - 1)
    };
    match alpha {
        Shift::Root(Root::A13) => in_c_alpha_plus(cur, alpha, p) && prev.spread() <= 2 * p - 3,
        Shift::Root(Root::A12) => {
            in_c_alpha_plus(cur, alpha, p) && pa <= p - 2 && !((a, b) == (p - 3, 1) && others_wide())
        }
        Shift::Root(Root::A23) => {
            in_c_alpha_plus(cur, alpha, p) && pb <= p - 2 && !((a, b) == (1, p - 3) && others_wide())
        }
        Shift::Zero => lambda.parts().iter().all(|w| {
            let (x, y) = w.sl3_restrict();
            x <= p - 2 && y <= p - 2
        }),
        Shift::Root(_) => false,
    }
}

/// How `λ'` is compared with `λ + α_{j0}` when matching bad-pair shapes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MatchMode {
    /// Equal up to a twist `(c_j, c_j, c_j)` per slot with
    /// `Σ p^j c_j ≡ 0 mod (q − 1)`, i.e. as Serre weights.
    #[default]
    Twist,
    /// Equal as weight tuples.
    Literal,
}

pub fn shape_matches(target: &WeightTuple, candidate: &WeightTuple, params: &Params, mode: MatchMode) -> bool {
    match mode {
        MatchMode::Literal => target == candidate,
        MatchMode::Twist => twist_offsets(target, candidate, params).is_some(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum BadCase {
    /// `λ' = λ + α13` in slot `j0`.
    #[serde(rename = "i")]
    Alpha13,
    /// `λ' = λ + α12` in slot `j0`.
    #[serde(rename = "ii")]
    Alpha12,
    /// `λ' = λ + α23` in slot `j0`.
    #[serde(rename = "iii")]
    Alpha23,
    /// `λ' = λ`.
    #[serde(rename = "iv")]
    Equal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BadWitness {
    pub case: BadCase,
    pub j0: usize,
}

fn bad_side_condition(lambda: &WeightTuple, case: BadCase, j0: usize, params: &Params) -> bool {
    let p = params.p;
    let cur = lambda.parts()[j0];
    let (a, b) = cur.sl3_restrict();
    if params.f == 1 {
        return match case {
            BadCase::Alpha13 => (p - 3..=p - 2).contains(&a) && (p - 3..=p - 2).contains(&b),
            BadCase::Alpha12 => a == p - 3 && (1..=p - 1).contains(&b),
            BadCase::Alpha23 => b == p - 3 && (1..=p - 1).contains(&a),
            BadCase::Equal => [a, b].iter().any(|&x| x == p - 2 || x == p - 1) || a + b == p - 2,
        };
    }
    let prev = lambda.at(j0 as isize - 1);
    let (pa, pb) = prev.sl3_restrict();
    let others_wide = || {
        lambda
            .parts()
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != j0)
            .all(|(_, w)| w.spread() >= p - 1)
    };
    match case {
        BadCase::Alpha13 => (pa, pb) == (p - 1, p - 1),
        BadCase::Alpha12 => pa == p - 1 || ((a, b) == (p - 3, 1) && others_wide()),
        BadCase::Alpha23 => pb == p - 1 || ((a, b) == (1, p - 3) && others_wide()),
        BadCase::Equal => lambda.parts().iter().any(|w| {
            let (x, y) = w.sl3_restrict();
            x == p - 1 || y == p - 1
        }),
    }
}

/// Every `(case, j0)` for which `(λ, λ')` satisfies a bad-pair clause.
/// The equality clause is reported once, with `j0 = 0`.
pub fn bad_pair_witnesses(
    lambda: &WeightTuple,
    lambda_prime: &WeightTuple,
    params: &Params,
    mode: MatchMode,
) -> Vec<BadWitness> {
    let mut out = Vec::new();
    let shapes = [
        (BadCase::Alpha13, Shift::Root(Root::A13)),
        (BadCase::Alpha12, Shift::Root(Root::A12)),
        (BadCase::Alpha23, Shift::Root(Root::A23)),
    ];
    for j0 in 0..params.f {
        for &(case, shift) in &shapes {
            let candidate = lambda.shifted(j0, shift);
            if shape_matches(lambda_prime, &candidate, params, mode) && bad_side_condition(lambda, case, j0, params) {
                out.push(BadWitness { case, j0 });
            }
        }
    }
    if shape_matches(lambda_prime, lambda, params, mode) && bad_side_condition(lambda, BadCase::Equal, 0, params) {
        out.push(BadWitness {
            case: BadCase::Equal,
            j0: 0,
        });
    }
    out
}

pub fn bad_pair(lambda: &WeightTuple, lambda_prime: &WeightTuple, params: &Params, mode: MatchMode) -> bool {
    !bad_pair_witnesses(lambda, lambda_prime, params, mode).is_empty()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchedShape {
    pub j0: usize,
    pub alpha: Shift,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    /// Whether the matched shape is a good pair in its slot; `false` when no
    /// single-slot shift relates the two tuples.
    pub good: bool,
    pub bad_forward: bool,
    pub bad_backward: bool,
    pub matched_shape: Option<MatchedShape>,
    pub regions: Vec<(Region, Region)>,
    pub match_mode: MatchMode,
}

pub fn pair_verdict(
    lambda: &WeightTuple,
    lambda_prime: &WeightTuple,
    params: &Params,
    mode: MatchMode,
) -> Result<PairVerdict> {
    lambda.check_len(params)?;
    lambda_prime.check_len(params)?;
    for t in [lambda, lambda_prime] {
        if let Some(&w) = t.parts().iter().find(|&&w| !restricted(w, params.p)) {
            return Err(Error::NotRestricted { weight: w, p: params.p });
        }
    }
    let matched = (0..params.f)
        .flat_map(|j0| Shift::ALL.into_iter().map(move |alpha| (j0, alpha)))
        .find(|&(j0, alpha)| shape_matches(lambda_prime, &lambda.shifted(j0, alpha), params, mode));
    let good = matched.is_some_and(|(j0, alpha)| {
        let base = lambda.parts()[j0];
        good_pair(base, base + alpha.vector(), params.p)
    });
    Ok(PairVerdict {
        good,
        bad_forward: bad_pair(lambda, lambda_prime, params, mode),
        bad_backward: bad_pair(lambda_prime, lambda, params, mode),
        matched_shape: matched.map(|(j0, alpha)| MatchedShape { j0, alpha }),
        regions: lambda
            .parts()
            .iter()
            .zip(lambda_prime.parts())
            .map(|(&x, &y)| (classify_alcove(x, params.p), classify_alcove(y, params.p)))
            .collect(),
        match_mode: mode,
    })
}
