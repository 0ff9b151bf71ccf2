//! `L(λ) ⊗ L(α13)` as a direct sum of simple and tilting modules, and the
//! resulting socles of `F(λ) ⊗ F(α13)^{[j0]}` over GL3(F_q).

use std::collections::BTreeSet;

use serde::Serialize;

use crate::alcoves::{classify_alcove, good_pair, lambda_prime, Region};
use crate::chars::{Summand, SummandKind, SummandList};
use crate::error::{Error, Result};
use crate::fq::canonical_twist;
use crate::weights::{is_p_restricted, Params, Root, Shift, Weight, WeightTuple};

const SHIFT_ORDER: [Root; 3] = [Root::A13, Root::A12, Root::A23];

fn push(out: &mut SummandList, kind: SummandKind, weight: Weight, mult: i64) {
    assert!(mult >= 0, "negative multiplicity {mult} for {weight}");
    if mult > 0 && weight.is_dominant() {
        out.push(Summand { kind, weight, mult });
    }
}

/// `LT^λ(μ)`: simple when `(λ, μ)` is a good pair, tilting otherwise.
fn lt_kind(lambda: Weight, mu: Weight, p: i64) -> SummandKind {
    if good_pair(lambda, mu, p) {
        SummandKind::Simple
    } else {
        SummandKind::Tilting
    }
}

fn ind(b: bool) -> i64 {
    b as i64
}

/// The indecomposable summands of `L(λ) ⊗ L(α13)` for restricted `λ`.
pub fn tensor_simple_alpha13(lambda: Weight, p: i64) -> Result<SummandList> {
    let region = classify_alcove(lambda, p);
    if !region.is_restricted() {
        return Err(Error::NotRestricted { weight: lambda, p });
    }
    let (a, b) = lambda.sl3_restrict();
    let s = a + b;
    let mut out = Vec::new();
    let plus = |r: Root| lambda + r.vector();
    match region {
        Region::C1 | Region::C1_2 | Region::C2_3 if (a, b) == (p - 1, p - 1) => {
            push(&mut out, SummandKind::Tilting, plus(Root::A13), 1);
            push(&mut out, SummandKind::Simple, lambda, 2);
        }
        Region::C1 | Region::C1_2 | Region::C2_3 => {
            for r in SHIFT_ORDER {
                push(&mut out, lt_kind(lambda, plus(r), p), plus(r), 1);
            }
            if s <= p - 3 {
                for r in SHIFT_ORDER {
                    push(&mut out, SummandKind::Simple, plus(r.negate()), 1);
                }
            }
            let delta = ind(a >= 1) + ind(b >= 1) - ind(s == p - 3) - ind(s == 2 * p - 3);
            push(&mut out, SummandKind::Simple, lambda, delta);
        }
        Region::C2 => {
            push(&mut out, SummandKind::Simple, plus(Root::A13), 1);
            for r in [Root::A12, Root::A23] {
                push(&mut out, lt_kind(lambda, plus(r), p), plus(r), 1);
            }
            push(&mut out, SummandKind::Simple, plus(Root::A31), ind(s > p));
            push(&mut out, SummandKind::Simple, plus(Root::A21), ind(s >= p));
            push(&mut out, SummandKind::Simple, plus(Root::A32), ind(s >= p));
            let delta = ind(a <= p - 3) + ind(b <= p - 3) - ind(s == p - 1);
            push(&mut out, SummandKind::Simple, lambda, delta);
        }
        _ => unreachable!("restricted regions are exhausted above"),
    }
    Ok(out)
}

fn check_restricted_except(lambda: &WeightTuple, skip: Option<usize>, p: i64) -> Result<()> {
    for (j, &w) in lambda.parts().iter().enumerate() {
        if Some(j) != skip && !is_p_restricted(w, p, 1) {
            return Err(Error::NotRestricted { weight: w, p });
        }
    }
    Ok(())
}

/// The tuple whose Serre weight is the socle of `T^{j0}(λ)` restricted to
/// GL3(F_q): slot `j0` becomes `λ'_{j0}`.
pub fn tilting_socle_tuple(lambda: &WeightTuple, j0: usize, params: &Params) -> Result<WeightTuple> {
    lambda.check_len(params)?;
    params.check_index(j0)?;
    check_restricted_except(lambda, Some(j0), params.p)?;
    Ok(lambda.with_slot(j0, lambda_prime(lambda.parts()[j0], params.p)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocleReport {
    /// Canonical twist representatives, without multiplicity.
    pub constituents: BTreeSet<WeightTuple>,
    /// Whether the constituents are known to be the whole socle rather
    /// than a superset of it.
    pub exact: bool,
}

/// The Jordan–Hölder constituents of `soc(F(λ) ⊗ F(α13)^{[j0]})`.
pub fn socle_tensor(lambda: &WeightTuple, j0: usize, params: &Params) -> Result<SocleReport> {
    lambda.check_len(params)?;
    params.check_index(j0)?;
    check_restricted_except(lambda, None, params.p)?;
    let base = lambda.parts()[j0];
    let constituents = Shift::ALL
        .iter()
        .filter(|alpha| good_pair(base, base + alpha.vector(), params.p))
        .map(|&alpha| canonical_twist(&lambda.shifted(j0, alpha), params))
        .collect();
    Ok(SocleReport {
        constituents,
        exact: !base.is_central(),
    })
}

/// The same socle assembled from the summands of `L(λ_{j0}) ⊗ L(α13)`:
/// a simple summand contributes itself and a tilting summand `T(μ)`
/// contributes `F(μ')`.
pub fn socle_from_summands(lambda: &WeightTuple, j0: usize, params: &Params) -> Result<BTreeSet<WeightTuple>> {
    lambda.check_len(params)?;
    params.check_index(j0)?;
    check_restricted_except(lambda, None, params.p)?;
    tensor_simple_alpha13(lambda.parts()[j0], params.p)?
        .iter()
        .map(|s| {
            let slot = match s.kind {
                SummandKind::Simple => s.weight,
                SummandKind::Tilting => lambda_prime(s.weight, params.p)?,
            };
            Ok(canonical_twist(&lambda.with_slot(j0, slot), params))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::summands_char;

    fn w(a: i64, b: i64, c: i64) -> Weight {
        Weight::new(a, b, c)
    }

    fn tuple(s: &str) -> WeightTuple {
        s.parse().unwrap()
    }

    fn l(weight: Weight, mult: i64) -> Summand {
        Summand {
            kind: SummandKind::Simple,
            weight,
            mult,
        }
    }

    fn t(weight: Weight) -> Summand {
        Summand {
            kind: SummandKind::Tilting,
            weight,
            mult: 1,
        }
    }

    #[test]
    fn lowest_alcove_example() {
        let got = tensor_simple_alpha13(w(2, 1, 0), 5).unwrap();
        assert_eq!(
            got,
            vec![
                t(w(3, 1, -1)),
                l(w(3, 0, 0), 1),
                l(w(2, 2, -1), 1),
                l(w(1, 1, 1), 1),
                l(w(2, 1, 0), 1)
            ]
        );
        assert_eq!(summands_char(&got, 5).unwrap().dim(), 64);
    }

    #[test]
    fn corner_example() {
        let got = tensor_simple_alpha13(w(8, 4, 0), 5).unwrap();
        assert_eq!(got, vec![t(w(9, 4, -1)), l(w(8, 4, 0), 2)]);
    }

    #[test]
    fn upper_alcove_example() {
        let got = tensor_simple_alpha13(w(4, 1, 0), 5).unwrap();
        assert_eq!(got, vec![l(w(5, 1, -1), 1), t(w(5, 0, 0)), l(w(4, 2, -1), 1)]);
    }

    #[test]
    fn rejects_unrestricted() {
        assert!(tensor_simple_alpha13(w(6, 0, 0), 5).is_err());
        assert!(tensor_simple_alpha13(w(0, 1, 0), 5).is_err());
    }

    #[test]
    fn tilting_socle_examples() {
        let p1 = Params::new(5, 1).unwrap();
        let p2 = Params::new(5, 2).unwrap();
        assert_eq!(tilting_socle_tuple(&tuple("4,2,0"), 0, &p1).unwrap(), tuple("3,2,1"));
        assert_eq!(
            tilting_socle_tuple(&tuple("6,1,0;2,1,0"), 0, &p2).unwrap(),
            tuple("5,2,0;2,1,0")
        );
        assert_eq!(tilting_socle_tuple(&tuple("9,4,0"), 0, &p1).unwrap(), tuple("8,4,1"));
        assert!(tilting_socle_tuple(&tuple("6,1,0;7,1,0"), 0, &p2).is_err());
        assert!(tilting_socle_tuple(&tuple("2,1,0"), 1, &p1).is_err());
    }

    #[test]
    fn socle_examples() {
        let p7 = Params::new(7, 1).unwrap();
        let got = socle_tensor(&tuple("5,2,0"), 0, &p7).unwrap();
        let expected: BTreeSet<_> = ["4,2,1", "4,3,0", "5,1,1", "5,2,0"].into_iter().map(tuple).collect();
        assert_eq!(got.constituents, expected);
        assert!(got.exact);

        let p5 = Params::new(5, 1).unwrap();
        let got = socle_tensor(&tuple("0,0,0"), 0, &p5).unwrap();
        assert!(!got.exact);
        assert!(got.constituents.contains(&tuple("0,0,0")));

        let p25 = Params::new(5, 2).unwrap();
        let got = socle_tensor(&tuple("2,1,0;2,1,0"), 1, &p25).unwrap();
        assert!(got.exact);
        assert!(got.constituents.contains(&tuple("2,1,0;3,0,0")));
        assert!(!got.constituents.contains(&tuple("2,1,0;3,1,-1")));
        assert!(!got
            .constituents
            .contains(&canonical_twist(&tuple("2,1,0;3,1,-1"), &p25)));
    }

    #[test]
    fn both_socle_routes_agree_on_examples() {
        let p7 = Params::new(7, 1).unwrap();
        let lam = tuple("5,2,0");
        assert_eq!(
            socle_from_summands(&lam, 0, &p7).unwrap(),
            socle_tensor(&lam, 0, &p7).unwrap().constituents
        );
    }
}
