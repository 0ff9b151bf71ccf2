use proptest::prelude::*;

use gl3_serre::alcoves::{bad_pair, classify_alcove, good_pair, in_c_alpha_plus, MatchMode, Region};
use gl3_serre::chars::{
    char_mul, decompose_weyl, simple_char, ssyt_count, tilting_char, weyl_char, weyl_dim, weyl_mult, FormalCharacter,
};
use gl3_serre::extcmp::{ext_compare, scan, ScanOptions};
use gl3_serre::fq::{canonical_twist, chi_equal, chi_equal_lattice, serre_equiv, twist_offsets};
use gl3_serre::weights::{Params, Shift, Weight, WeightTuple};

fn prime() -> impl Strategy<Value = i64> {
    prop::sample::select(vec![5i64, 7, 11])
}

fn dominant(max: i64) -> impl Strategy<Value = Weight> {
    (0..=max, 0..=max, -4i64..=4).prop_map(|(a, b, c)| Weight::new(a + b + c, b + c, c))
}

fn restricted(p: i64) -> impl Strategy<Value = Weight> {
    (0..p, 0..p, -3i64..=3).prop_map(|(a, b, c)| Weight::new(a + b + c, b + c, c))
}

fn restricted_tuple(p: i64, f: usize) -> impl Strategy<Value = WeightTuple> {
    prop::collection::vec(restricted(p), f).prop_map(WeightTuple::new)
}

fn field() -> impl Strategy<Value = Params> {
    (prime(), 1usize..=3).prop_map(|(p, f)| Params::new(p, f).unwrap())
}

fn any_tuple(f: usize) -> impl Strategy<Value = WeightTuple> {
    prop::collection::vec((-12i64..=12, -12i64..=12, -12i64..=12), f)
        .prop_map(|v| WeightTuple::new(v.into_iter().map(|(a, b, c)| Weight::new(a, b, c)).collect()))
}

fn recombine(terms: &[(Weight, i64)]) -> FormalCharacter {
    terms
        .iter()
        .fold(FormalCharacter::zero(), |acc, &(w, m)| &acc + &weyl_char(w).scaled(m))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn weyl_characters_are_symmetric(lambda in dominant(9)) {
        let ch = weyl_char(lambda);
        prop_assert!(ch.is_s3_stable());
        prop_assert!(ch.is_nonnegative());
        prop_assert_eq!(ch.dim(), weyl_dim(lambda));
        prop_assert_eq!(ch.get(lambda), 1);
    }

    #[test]
    fn kostant_agrees_with_tableaux(lambda in dominant(7), nu in dominant(7)) {
        let nu = nu + Weight::uniform((lambda.sum() - nu.sum()).div_euclid(3));
        if nu.sum() == lambda.sum() {
            let shift = Weight::uniform(-lambda[2].min(nu[0]).min(nu[1]).min(nu[2]));
            let count = ssyt_count(lambda + shift, nu + shift).unwrap() as i64;
            prop_assert_eq!(weyl_mult(lambda, nu), count);
        }
    }

    #[test]
    fn multiplication_is_commutative(x in dominant(4), y in dominant(4), z in dominant(2)) {
        let (a, b, c) = (weyl_char(x), weyl_char(y), weyl_char(z));
        prop_assert_eq!(char_mul(&a, &b), char_mul(&b, &a));
        prop_assert_eq!(char_mul(&char_mul(&a, &b), &c), char_mul(&a, &char_mul(&b, &c)));
        prop_assert_eq!(char_mul(&a, &b).dim(), a.dim() * b.dim());
    }

    #[test]
    fn simple_and_tilting_characters(p in prime(), seed in (0i64..100, 0i64..100)) {
        let lambda = Weight::new(seed.0 % p + seed.1 % p, seed.1 % p, 0);
        let l = simple_char(lambda, p).unwrap();
        let t = tilting_char(lambda, p).unwrap();
        prop_assert!(l.is_nonnegative() && l.is_s3_stable());
        prop_assert!(t.is_nonnegative() && t.is_s3_stable());
        prop_assert!((&t - &l).is_nonnegative());
        prop_assert!(l.dim() <= weyl_dim(lambda));
        for ch in [l, t] {
            let terms = decompose_weyl(&ch).unwrap();
            prop_assert_eq!(recombine(&terms), ch);
        }
    }

    #[test]
    fn dualize_is_an_involution(p in prime(), lambda in dominant(12)) {
        let d = lambda.dual();
        prop_assert_eq!(d.dual(), lambda);
        let (a, b) = lambda.sl3_restrict();
        prop_assert_eq!(d.sl3_restrict(), (b, a));
        let mirrored = match classify_alcove(lambda, p) {
            Region::C3 => Region::C3p,
            Region::C3p => Region::C3,
            r => r,
        };
        prop_assert_eq!(classify_alcove(d, p), mirrored);
    }

    #[test]
    fn eigencharacter_tests_agree((params, mu, nu) in field().prop_flat_map(|params| {
        let f = params.f;
        (Just(params), any_tuple(f), any_tuple(f))
    })) {
        prop_assert_eq!(chi_equal(&mu, &nu, &params), chi_equal_lattice(&mu, &nu, &params));
        prop_assert!(chi_equal(&mu, &mu, &params));
    }

    #[test]
    fn canonical_twist_is_a_normal_form((params, lambda, other) in field().prop_flat_map(|params| {
        let (p, f) = (params.p, params.f);
        (Just(params), restricted_tuple(p, f), restricted_tuple(p, f))
    })) {
        let c = canonical_twist(&lambda, &params);
        prop_assert_eq!(canonical_twist(&c, &params), c.clone());
        prop_assert!(serre_equiv(&lambda, &c, &params));
        prop_assert!(twist_offsets(&lambda, &c, &params).is_some());
        let same = canonical_twist(&other, &params) == c;
        prop_assert_eq!(serre_equiv(&lambda, &other, &params), same);
    }

    #[test]
    fn good_pairs_are_dual(p in prime(), lambda in (0i64..13, 0i64..13), alpha in prop::sample::select(Shift::POSITIVE_OR_ZERO.to_vec())) {
        let lambda = Weight::new(lambda.0 % p + lambda.1 % p, lambda.1 % p, 0);
        let plus = in_c_alpha_plus(lambda, alpha, p);
        prop_assert_eq!(plus, good_pair(lambda, lambda + alpha.vector(), p));
        prop_assert_eq!(plus, in_c_alpha_plus(lambda.dual(), alpha.dual(), p));
    }

    #[test]
    fn bad_pairs_are_dual((params, lambda, j0, alpha) in (prime(), 1usize..=2).prop_flat_map(|(p, f)| {
        let params = Params::new(p, f).unwrap();
        (Just(params), restricted_tuple(p, f), 0..f, prop::sample::select(Shift::ALL.to_vec()))
    })) {
        let other = lambda.shifted(j0, alpha);
        prop_assume!(other.is_restricted(params.p));
        for mode in [MatchMode::Twist, MatchMode::Literal] {
            prop_assert_eq!(
                bad_pair(&lambda, &other, &params, mode),
                bad_pair(&lambda.dualize(), &other.dualize(), &params, mode)
            );
        }
        let forward = ext_compare(&lambda, &other, &params).unwrap();
        let backward = ext_compare(&other.dualize(), &lambda.dualize(), &params).unwrap();
        prop_assert_eq!(forward.status, backward.status);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn sampled_scans_conserve_counts(seed in any::<u64>(), sample in 1usize..60, jobs in 1usize..4) {
        let params = Params::new(5, 2).unwrap();
        let options = ScanOptions { sample: Some(sample), seed, jobs, ..ScanOptions::default() };
        let report = scan(&params, &options).unwrap();
        prop_assert_eq!(report.pairs, sample);
        prop_assert_eq!(report.records.len(), sample);
        prop_assert_eq!(report.counts.values().sum::<usize>(), sample);
        let again = scan(&params, &ScanOptions { jobs: 1, ..options }).unwrap();
        prop_assert_eq!(again, report);
    }
}
