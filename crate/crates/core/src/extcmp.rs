//! Decides, for a pair of Serre weights, whether `Ext^1` over `K/Z1` is
//! guaranteed to agree with `Ext^1` over GL3(F_q).

use std::collections::BTreeMap;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::alcoves::{bad_pair_witnesses, good_pair, shape_matches, BadWitness, MatchMode};
use crate::chars::simple_char;
use crate::error::{Error, Result};
use crate::weights::{is_p_restricted, Params, Shift, Weight, WeightTuple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ExtStatus {
    EqualByVanishing,
    EqualByTheorem,
    NotCovered,
}

impl ExtStatus {
    pub const ALL: [ExtStatus; 3] = [
        ExtStatus::EqualByVanishing,
        ExtStatus::EqualByTheorem,
        ExtStatus::NotCovered,
    ];
}

/// `F(λ') ≅ F(λ + α_{j0})`, with whether `(λ_{j0}, λ_{j0} + α)` is good.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct HomMatch {
    pub j0: usize,
    pub alpha: Shift,
    pub good: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub forward: Vec<BadWitness>,
    pub backward: Vec<BadWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtVerdict {
    pub status: ExtStatus,
    pub matches: Vec<HomMatch>,
    pub bad_forward: bool,
    pub bad_backward: bool,
    pub h1_dim: i64,
    pub match_mode: MatchMode,
    /// A non-good match sits at a slot with `λ_{j0} ∈ X0(T)`, where only an
    /// inclusion of socles is known, so vanishing was not concluded.
    pub gated: bool,
    pub witnesses: Witnesses,
}

fn check_pair(lambda: &WeightTuple, lambda_prime: &WeightTuple, params: &Params) -> Result<()> {
    for t in [lambda, lambda_prime] {
        t.check_len(params)?;
        if let Some(&w) = t.parts().iter().find(|&&w| !is_p_restricted(w, params.p, 1)) {
            return Err(Error::NotRestricted { weight: w, p: params.p });
        }
    }
    Ok(())
}

/// Every `(j0, α)` with `α ∈ Φ ∪ {0}` such that `F(λ')` is `F(λ + α_{j0})`.
pub fn hom_obstruction(
    lambda: &WeightTuple,
    lambda_prime: &WeightTuple,
    params: &Params,
    mode: MatchMode,
) -> Result<Vec<HomMatch>> {
    check_pair(lambda, lambda_prime, params)?;
    let mut out = Vec::new();
    for j0 in 0..params.f {
        let base = lambda.parts()[j0];
        for alpha in Shift::ALL {
            if shape_matches(lambda_prime, &lambda.shifted(j0, alpha), params, mode) {
                let good = good_pair(base, base + alpha.vector(), params.p);
                out.push(HomMatch { j0, alpha, good });
            }
        }
    }
    Ok(out)
}

/// `dim H^1(K1/Z1, F) = f · dim F(α13)`.
pub fn h1_dim(params: &Params) -> Result<i64> {
    Ok(params.f as i64 * simple_char(Weight::new(1, 0, -1), params.p)?.dim())
}

pub fn ext_compare(lambda: &WeightTuple, lambda_prime: &WeightTuple, params: &Params) -> Result<ExtVerdict> {
    ext_compare_with(lambda, lambda_prime, params, MatchMode::default())
}

pub fn ext_compare_with(
    lambda: &WeightTuple,
    lambda_prime: &WeightTuple,
    params: &Params,
    mode: MatchMode,
) -> Result<ExtVerdict> {
    let matches = hom_obstruction(lambda, lambda_prime, params, mode)?;
    let forward = bad_pair_witnesses(lambda, lambda_prime, params, mode);
    let backward = bad_pair_witnesses(lambda_prime, lambda, params, mode);
    let any_good = matches.iter().any(|m| m.good);
    let gated = matches.iter().any(|m| !m.good && lambda.parts()[m.j0].is_central());
    let status = if !any_good && !gated {
        ExtStatus::EqualByVanishing
    } else if forward.is_empty() && backward.is_empty() {
        ExtStatus::EqualByTheorem
    } else {
        ExtStatus::NotCovered
    };
    Ok(ExtVerdict {
        status,
        matches,
        bad_forward: !forward.is_empty(),
        bad_backward: !backward.is_empty(),
        h1_dim: h1_dim(params)?,
        match_mode: mode,
        gated,
        witnesses: Witnesses { forward, backward },
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanMode {
    /// Pairs `(λ, λ + α_{j0})` for `α ∈ Φ ∪ {0}`.
    #[default]
    Shifts,
    /// `λ` against every Serre weight, one representative per twist class.
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanOptions {
    pub mode: ScanMode,
    /// Evaluate a uniform random subset of this many pairs.
    pub sample: Option<usize>,
    pub seed: u64,
    pub jobs: usize,
    pub limit: u128,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            mode: ScanMode::Shifts,
            sample: None,
            seed: 0,
            jobs: 1,
            limit: 5_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub lambda: WeightTuple,
    pub lambda_prime: WeightTuple,
    pub status: ExtStatus,
    pub bad_forward: bool,
    pub bad_backward: bool,
    pub good_match: bool,
    pub gated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub p: i64,
    pub f: usize,
    pub mode: ScanMode,
    pub pairs: usize,
    pub counts: BTreeMap<ExtStatus, usize>,
    pub records: Vec<ScanRecord>,
}

/// All restricted tuples with every third coordinate zero, in
/// lexicographic order of the `(λ1 − λ2, λ2 − λ3)` data.
pub fn normalized_tuples(params: &Params) -> Vec<WeightTuple> {
    let p = params.p;
    let mut out = vec![WeightTuple::new(vec![])];
    for _ in 0..params.f {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..p).flat_map(move |a| {
                    let prefix = prefix.clone();
                    (0..p).map(move |b| {
                        let mut parts = prefix.parts().to_vec();
                        parts.push(Weight::new(a + b, b, 0));
                        WeightTuple::new(parts)
                    })
                })
            })
            .collect();
    }
    out
}

/// Adds the uniform twist whose third coordinates are the base-p digits
/// of `r`.
fn with_residue(lambda: &WeightTuple, r: i64, p: i64) -> WeightTuple {
    let mut r = r;
    WeightTuple::new(
        lambda
            .parts()
            .iter()
            .map(|&w| {
                let d = r % p;
                r /= p;
                w + Weight::uniform(d)
            })
            .collect(),
    )
}

fn pair_count(params: &Params, mode: ScanMode) -> u128 {
    let base = (params.p as u128).pow(2 * params.f as u32);
    match mode {
        ScanMode::Shifts => base.saturating_mul(6 * params.f as u128 + 1),
        ScanMode::Exhaustive => base.saturating_mul(base).saturating_mul(params.q as u128 - 1),
    }
}

fn enumerate_pairs(params: &Params, mode: ScanMode) -> Vec<(WeightTuple, WeightTuple)> {
    let tuples = normalized_tuples(params);
    let mut out = Vec::new();
    match mode {
        ScanMode::Shifts => {
            for lambda in &tuples {
                out.push((lambda.clone(), lambda.clone()));
                for j0 in 0..params.f {
                    for alpha in Shift::ALL.into_iter().filter(|&a| a != Shift::Zero) {
                        let shifted = lambda.shifted(j0, alpha);
                        if shifted.is_restricted(params.p) {
                            out.push((lambda.clone(), shifted));
                        }
                    }
                }
            }
        }
        ScanMode::Exhaustive => {
            for lambda in &tuples {
                for other in &tuples {
                    for r in 0..params.q - 1 {
                        out.push((lambda.clone(), with_residue(other, r, params.p)));
                    }
                }
            }
        }
    }
    out
}

pub fn scan(params: &Params, options: &ScanOptions) -> Result<ScanReport> {
    let requested = pair_count(params, options.mode);
    if requested > options.limit {
        return Err(Error::ResourceBound {
            requested,
            limit: options.limit,
        });
    }
    let mut pairs = enumerate_pairs(params, options.mode);
    if let Some(n) = options.sample.filter(|&n| n < pairs.len()) {
        let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
        let mut picked = sample(&mut rng, pairs.len(), n).into_vec();
        picked.sort_unstable();
        pairs = picked.into_iter().map(|i| pairs[i].clone()).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs.max(1))
        .build()
        .expect("thread pool");
    let records: Vec<ScanRecord> = pool.install(|| {
        pairs
            .par_iter()
            .map(|(lambda, lambda_prime)| {
                let v = ext_compare(lambda, lambda_prime, params)?;
                Ok(ScanRecord {
                    lambda: lambda.clone(),
                    lambda_prime: lambda_prime.clone(),
                    status: v.status,
                    bad_forward: v.bad_forward,
                    bad_backward: v.bad_backward,
                    good_match: v.matches.iter().any(|m| m.good),
                    gated: v.gated,
                })
            })
            .collect::<Result<_>>()
    })?;
    let mut counts: BTreeMap<ExtStatus, usize> = ExtStatus::ALL.iter().map(|&s| (s, 0)).collect();
    for r in &records {
        *counts.entry(r.status).or_default() += 1;
    }
    Ok(ScanReport {
        p: params.p,
        f: params.f,
        mode: options.mode,
        pairs: records.len(),
        counts,
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::Root;

    fn tuple(s: &str) -> WeightTuple {
        s.parse().unwrap()
    }

    fn p5() -> Params {
        Params::new(5, 1).unwrap()
    }

    const A12: Shift = Shift::Root(Root::A12);
    const A13: Shift = Shift::Root(Root::A13);

    #[test]
    fn hom_obstruction_examples() {
        let p = p5();
        let got = hom_obstruction(&tuple("2,1,0"), &tuple("3,0,0"), &p, MatchMode::Twist).unwrap();
        assert_eq!(
            got,
            vec![HomMatch {
                j0: 0,
                alpha: A12,
                good: true
            }]
        );
        let got = hom_obstruction(&tuple("2,1,0"), &tuple("3,1,-1"), &p, MatchMode::Twist).unwrap();
        assert_eq!(
            got,
            vec![HomMatch {
                j0: 0,
                alpha: A13,
                good: false
            }]
        );
        assert!(hom_obstruction(&tuple("2,1,0"), &tuple("4,4,0"), &p, MatchMode::Twist)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn twisted_targets_match_in_twist_mode_only() {
        let p = p5();
        let twisted = tuple("7,4,4");
        assert_eq!(
            hom_obstruction(&tuple("2,1,0"), &twisted, &p, MatchMode::Twist)
                .unwrap()
                .len(),
            1
        );
        assert!(hom_obstruction(&tuple("2,1,0"), &twisted, &p, MatchMode::Literal)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn ext_compare_examples() {
        let p = p5();
        let v = ext_compare(&tuple("2,1,0"), &tuple("3,0,0"), &p).unwrap();
        assert_eq!(v.status, ExtStatus::EqualByTheorem);
        assert_eq!(v.h1_dim, 8);
        let v = ext_compare(&tuple("2,1,0"), &tuple("3,1,-1"), &p).unwrap();
        assert_eq!(v.status, ExtStatus::EqualByVanishing);
        let v = ext_compare(&tuple("3,3,0"), &tuple("3,3,0"), &p).unwrap();
        assert_eq!(v.status, ExtStatus::NotCovered);
        assert!(v.bad_forward && v.bad_backward);
    }

    #[test]
    fn ext_compare_rejects_unrestricted() {
        let p = p5();
        assert!(matches!(
            ext_compare(&tuple("6,0,0"), &tuple("2,1,0"), &p),
            Err(Error::NotRestricted { .. })
        ));
        assert!(matches!(
            ext_compare(&tuple("2,1,0;0,0,0"), &tuple("2,1,0"), &p),
            Err(Error::TupleLength { .. })
        ));
    }

    #[test]
    fn verdict_serialization_shape() {
        let v = ext_compare(&tuple("2,1,0"), &tuple("3,0,0"), &p5()).unwrap();
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["status"], "EqualByTheorem");
        assert_eq!(json["matches"][0]["alpha"], "a12");
        assert_eq!(json["matches"][0]["j0"], 0);
        assert_eq!(json["h1_dim"], 8);
        assert_eq!(json["match_mode"], "twist");
    }

    #[test]
    fn scan_conserves_counts() {
        let p = p5();
        let report = scan(&p, &ScanOptions::default()).unwrap();
        assert_eq!(report.counts.values().sum::<usize>(), report.pairs);
        assert_eq!(report.pairs, report.records.len());
        for r in &report.records {
            if r.status == ExtStatus::EqualByTheorem {
                assert!(!r.bad_forward && !r.bad_backward);
            }
        }
    }

    #[test]
    fn exhaustive_scan_size() {
        let p = p5();
        let opts = ScanOptions {
            mode: ScanMode::Exhaustive,
            ..ScanOptions::default()
        };
        assert_eq!(scan(&p, &opts).unwrap().pairs, 25 * 25 * 4);
    }

    #[test]
    fn scan_refuses_large_requests() {
        let p = Params::new(7, 3).unwrap();
        let opts = ScanOptions {
            mode: ScanMode::Exhaustive,
            ..ScanOptions::default()
        };
        assert!(matches!(scan(&p, &opts), Err(Error::ResourceBound { .. })));
    }

    #[test]
    fn sampled_scan_is_seeded() {
        let p = p5();
        let opts = ScanOptions {
            sample: Some(20),
            seed: 7,
            ..ScanOptions::default()
        };
        let a = scan(&p, &opts).unwrap();
        let b = scan(
            &p,
            &ScanOptions {
                jobs: 3,
                ..opts.clone()
            },
        )
        .unwrap();
        assert_eq!(a.pairs, 20);
        assert_eq!(a, b);
    }
}
