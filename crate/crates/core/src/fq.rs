//! Arithmetic over F_q: Serre-weight identification, torus eigencharacters
//! and eigenspace weight supports inside `F(λ) = ⊗_j L(λ_j)^{[j]}`.

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::chars::{simple_char, FormalCharacter};
use crate::error::{Error, Result};
use crate::weights::{is_p_restricted, Params, Weight, WeightTuple};

/// Per-slot offsets `c_j` with `target_j = candidate_j + (c_j, c_j, c_j)` and
/// `Σ p^j c_j ≡ 0 mod (q − 1)`, if they exist.
pub fn twist_offsets(target: &WeightTuple, candidate: &WeightTuple, params: &Params) -> Option<Vec<i64>> {
    if target.len() != candidate.len() {
        return None;
    }
    let offsets = target
        .parts()
        .iter()
        .zip(candidate.parts())
        .map(|(&t, &c)| {
            let d = t - c;
            d.is_central().then_some(d[0])
        })
        .collect::<Option<Vec<i64>>>()?;
    let total: i64 = offsets.iter().enumerate().map(|(j, &c)| params.power(j) * c).sum();
    (total.rem_euclid(params.q - 1) == 0).then_some(offsets)
}

/// `F(λ) ≅ F(λ')`: `Σ_j p^j (λ_j − λ'_j)` is `(c, c, c)` with `(q − 1) | c`.
pub fn serre_equiv(lambda: &WeightTuple, lambda_prime: &WeightTuple, params: &Params) -> bool {
    if lambda.len() != lambda_prime.len() {
        return false;
    }
    let d = (lambda - lambda_prime).summed(params.p);
    d.is_central() && d[0].rem_euclid(params.q - 1) == 0
}

/// The representative of the twist class of a restricted tuple whose
/// third coordinates are the base-p digits of `Σ p^j λ_{j,3} mod (q − 1)`.
pub fn canonical_twist(lambda: &WeightTuple, params: &Params) -> WeightTuple {
    let mut r = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(j, w)| params.power(j) * w[2])
        .sum::<i64>()
        .rem_euclid(params.q - 1);
    let parts = lambda
        .parts()
        .iter()
        .map(|&w| {
            let digit = r % params.p;
            r /= params.p;
            w.normalized() + Weight::uniform(digit)
        })
        .collect();
    WeightTuple::new(parts)
}

/// Componentwise residues of `Σ_j p^j μ_j` modulo `q − 1`: the canonical
/// form of the eigencharacter `χ_μ`.
pub fn chi_residues(mu: &WeightTuple, params: &Params) -> [i64; 3] {
    let s = mu.summed(params.p);
    [0, 1, 2].map(|i| s[i].rem_euclid(params.q - 1))
}

pub fn chi_equal(mu: &WeightTuple, nu: &WeightTuple, params: &Params) -> bool {
    mu.len() == nu.len() && chi_residues(mu, params) == chi_residues(nu, params)
}

/// Solves `d = (p − π) c`, i.e. `d_j = p c_j − c_{j−1}` for all `j ∈ Z/f`,
/// returning `c` when it is integral.
pub fn solve_p_minus_pi(d: &WeightTuple, params: &Params) -> Option<WeightTuple> {
    let f = d.len();
    let parts = (0..f)
        .map(|j| {
            let acc = (0..f).fold(Weight::ZERO, |acc, i| {
                acc + params.power(f - 1 - i) * d.at(j as isize - i as isize)
            });
            let m = params.q - 1;
            (0..3)
                .all(|k| acc[k] % m == 0)
                .then(|| Weight::new(acc[0] / m, acc[1] / m, acc[2] / m))
        })
        .collect::<Option<Vec<Weight>>>()?;
    Some(WeightTuple::new(parts))
}

/// `(p − π) c`.
pub fn apply_p_minus_pi(c: &WeightTuple, params: &Params) -> WeightTuple {
    let parts = (0..c.len())
        .map(|j| params.p * c.parts()[j] - c.at(j as isize - 1))
        .collect();
    WeightTuple::new(parts)
}

/// `χ_μ = χ_ν` decided by membership of `μ − ν` in `(p − π)X(T)^f`.
pub fn chi_equal_lattice(mu: &WeightTuple, nu: &WeightTuple, params: &Params) -> bool {
    mu.len() == nu.len() && solve_p_minus_pi(&(mu - nu), params).is_some()
}

/// One weight `ν` of `F(λ)` in a given eigenspace, with the per-slot
/// weight-space dimensions `dim L(λ_j)_{ν_j}` and their product.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SupportEntry {
    pub nu: WeightTuple,
    pub dims: Vec<i64>,
    pub total: i64,
}

/// Integer ranges for the coefficients `c_{1,j}` and `c_{2,j}` of the
/// enumeration, together with the base point `μ*` they are measured from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportGrid {
    pub base: WeightTuple,
    pub c1: Vec<RangeInclusive<i64>>,
    pub c2: Vec<RangeInclusive<i64>>,
}

impl SupportGrid {
    pub fn size(&self) -> u128 {
        self.c1
            .iter()
            .chain(&self.c2)
            .map(|r| (r.end() - r.start() + 1).max(0) as u128)
            .product()
    }
}

const MAX_GRID: u128 = 50_000_000;

fn div_floor(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -(-a).div_euclid(b)
}

/// The coefficient box containing every `c` whose `ν` lands in the weight
/// box of `λ`, or `None` when no weight of `F(λ)` can share `χ_μ`.
pub fn support_grid(lambda: &WeightTuple, mu: &WeightTuple, params: &Params) -> Option<SupportGrid> {
    let f = lambda.len();
    let m = params.q - 1;
    // Move μ within its class so that each slot has the degree of λ_j.
    let t: Vec<i64> = (0..f).map(|j| lambda.parts()[j].sum() - mu.parts()[j].sum()).collect();
    let degrees = WeightTuple::new(t.iter().map(|&x| Weight::new(x, 0, 0)).collect());
    let shift = solve_p_minus_pi(&degrees, params)?;
    let base = WeightTuple::new(
        mu.parts()
            .iter()
            .zip(apply_p_minus_pi(&shift, params).parts())
            .map(|(&a, &b)| a + b)
            .collect(),
    );
    // ν_j − μ*_j = p c_j − c_{j−1} with c_j = c_{1,j} α12 + c_{2,j} α23, so
    // c_{1,j} = Σ_i p^{f−1−i} (ν − μ*)_{j−i,1} / (q − 1) and similarly for
    // c_{2,j} with minus the third coordinate.
    let lo_hi = |j: usize, coord: usize| {
        let w = lambda.parts()[j];
        (w[2] - base.parts()[j][coord], w[0] - base.parts()[j][coord])
    };
    let mut c1 = Vec::with_capacity(f);
    let mut c2 = Vec::with_capacity(f);
    for j in 0..f {
        let (mut lo1, mut hi1, mut lo3, mut hi3) = (0, 0, 0, 0);
        for i in 0..f {
            let k = (j as isize - i as isize).rem_euclid(f as isize) as usize;
            let pw = params.power(f - 1 - i);
            let (a, b) = lo_hi(k, 0);
            lo1 += pw * a;
            hi1 += pw * b;
            let (a, b) = lo_hi(k, 2);
            lo3 += pw * a;
            hi3 += pw * b;
        }
        c1.push(div_ceil(lo1, m)..=div_floor(hi1, m));
        c2.push(div_ceil(-hi3, m)..=div_floor(-lo3, m));
    }
    Some(SupportGrid { base, c1, c2 })
}

fn grid_points(grid: &SupportGrid) -> Vec<Vec<(i64, i64)>> {
    let mut points: Vec<Vec<(i64, i64)>> = vec![vec![]];
    for (r1, r2) in grid.c1.iter().zip(&grid.c2) {
        let mut next = Vec::new();
        for prefix in &points {
            for a in r1.clone() {
                for b in r2.clone() {
                    let mut v = prefix.clone();
                    v.push((a, b));
                    next.push(v);
                }
            }
        }
        points = next;
    }
    points
}

/// All weights `ν` of `F(λ)` with `χ_ν = χ_μ`, sorted by `ν`.
pub fn eigenspace_support(lambda: &WeightTuple, mu: &WeightTuple, params: &Params) -> Result<Vec<SupportEntry>> {
    lambda.check_len(params)?;
    mu.check_len(params)?;
    if let Some(&w) = lambda.parts().iter().find(|&&w| !is_p_restricted(w, params.p, 1)) {
        return Err(Error::NotRestricted { weight: w, p: params.p });
    }
    let Some(grid) = support_grid(lambda, mu, params) else {
        return Ok(vec![]);
    };
    let size = grid.size();
    if size > MAX_GRID {
        return Err(Error::ResourceBound {
            requested: size,
            limit: MAX_GRID,
        });
    }
    let chars: Vec<FormalCharacter> = lambda
        .parts()
        .iter()
        .map(|&w| simple_char(w, params.p))
        .collect::<Result<_>>()?;
    let a12 = Weight::new(1, -1, 0);
    let a23 = Weight::new(0, 1, -1);
    let mut out = Vec::new();
    for point in grid_points(&grid) {
        let c = WeightTuple::new(point.iter().map(|&(x, y)| x * a12 + y * a23).collect());
        let d = apply_p_minus_pi(&c, params);
        let nu = WeightTuple::new(grid.base.parts().iter().zip(d.parts()).map(|(&a, &b)| a + b).collect());
        let dims: Vec<i64> = chars.iter().zip(nu.parts()).map(|(ch, &x)| ch.get(x)).collect();
        if dims.iter().all(|&x| x > 0) {
            let total = dims.iter().product();
            out.push(SupportEntry { nu, dims, total });
        }
    }
    out.sort();
    Ok(out)
}
