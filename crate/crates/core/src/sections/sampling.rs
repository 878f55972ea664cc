//! Randomised point oracles for restricted flag spaces.
//!
//! Points of `X_w` are drawn as `U·P_w` with `U` random upper unitriangular
//! and `P_w` the permutation matrix with `k`-th column `e_{w(k)}`; points of
//! the opposite variety `X^v` as `L·P_v` with `L` lower unitriangular.
//! All arithmetic is exact, so the only failure mode is an accidental rank
//! drop, which the doubling check catches.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::flag::{flag_generators, FlagMonomial};
use crate::error::{Error, Result};
use crate::exactalg::{evaluate_integer, integer_rank, minor_poly, rank_of_span, ExactMatrix, Polynomial};
use crate::weyl::{bruhat_leq, IndexSet, Permutation};

/// Seed, sample count and entry bound for one oracle run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SamplePlan {
    pub seed: u64,
    pub count: usize,
    pub bound: i64,
}

/// Entries of the random unipotent factors lie in `[-50, 50]`.
pub const DEFAULT_BOUND: i64 = 50;
/// Extra samples beyond the dimension of the ambient space.
pub const DEFAULT_MARGIN: usize = 25;

impl SamplePlan {
    pub fn new(seed: u64, count: usize) -> Self {
        SamplePlan { seed, count, bound: DEFAULT_BOUND }
    }

    /// `N = dim V_m + 25` for the flag space of degree `m`.
    pub fn for_flag_space(seed: u64, n: usize, m: &[u32]) -> Result<Self> {
        Ok(SamplePlan::new(seed, flag_space_dim(n, m)? + DEFAULT_MARGIN))
    }

    pub fn doubled(&self) -> Self {
        SamplePlan { count: self.count * 2, ..*self }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Family {
    Schubert,
    Opposite,
}

/// Row-major integer points, `plan.count` of them; a longer plan with the
/// same seed extends a shorter one.
fn points(p: &Permutation, plan: &SamplePlan, family: Family) -> Vec<Vec<BigInt>> {
    let n = p.n();
    let mut rng = ChaCha8Rng::seed_from_u64(plan.seed);
    rng.set_stream(match family {
        Family::Schubert => 1,
        Family::Opposite => 2,
    });
    (0..plan.count)
        .map(|_| {
            // unitriangular factor
            let mut u = alloc::vec![0i64; n * n];
            for i in 0..n {
                for j in 0..n {
                    u[i * n + j] = match (i.cmp(&j), family) {
                        (core::cmp::Ordering::Equal, _) => 1,
                        (core::cmp::Ordering::Less, Family::Schubert) => rng.gen_range(-plan.bound..=plan.bound),
                        (core::cmp::Ordering::Greater, Family::Opposite) => rng.gen_range(-plan.bound..=plan.bound),
                        _ => 0,
                    };
                }
            }
            // (U·P)[i][k] = U[i][w(k)]
            let mut out = Vec::with_capacity(n * n);
            for i in 0..n {
                for k in 0..n {
                    out.push(BigInt::from(u[i * n + p.apply(k as u8 + 1) as usize - 1]));
                }
            }
            out
        })
        .collect()
}

fn to_matrix(n: usize, pt: &[BigInt]) -> ExactMatrix {
    let rows = (0..n).map(|i| (0..n).map(|j| BigRational::from_integer(pt[i * n + j].clone())).collect()).collect();
    ExactMatrix::from_rows(rows).expect("square")
}

/// All `plan.count` Schubert samples as row-major integer points.
pub fn schubert_samples(w: &Permutation, plan: &SamplePlan) -> Vec<Vec<BigInt>> {
    points(w, plan, Family::Schubert)
}

/// All `plan.count` opposite samples as row-major integer points.
pub fn opposite_samples(v: &Permutation, plan: &SamplePlan) -> Vec<Vec<BigInt>> {
    points(v, plan, Family::Opposite)
}

/// First sample `U·P_w` of the plan.
pub fn sample_schubert_matrix(w: &Permutation, plan: &SamplePlan) -> ExactMatrix {
    to_matrix(w.n(), &points(w, &SamplePlan { count: 1, ..*plan }, Family::Schubert)[0])
}

/// First sample `L·P_v` of the plan.
pub fn sample_opposite_matrix(v: &Permutation, plan: &SamplePlan) -> ExactMatrix {
    to_matrix(v.n(), &points(v, &SamplePlan { count: 1, ..*plan }, Family::Opposite)[0])
}

/// `U·P_w` for a given upper unitriangular `U` (entries row-major).
pub fn schubert_point(w: &Permutation, u: &ExactMatrix) -> Result<ExactMatrix> {
    u.mul(&permutation_matrix(w))
}

/// The matrix with `k`-th column `e_{w(k)}`.
pub fn permutation_matrix(w: &Permutation) -> ExactMatrix {
    let n = w.n();
    let mut m = ExactMatrix::zeros(n, n);
    for k in 0..n {
        m.set(w.apply(k as u8 + 1) as usize - 1, k, BigRational::one());
    }
    m
}

/// `dim V_m`: rank of all flag generators of degree `m` as polynomials.
pub fn flag_space_dim(n: usize, m: &[u32]) -> Result<usize> {
    let polys: Vec<Polynomial> = flag_generators(n, m)?.iter().map(FlagMonomial::poly).collect();
    Ok(rank_of_span(&polys))
}

/// Evaluation matrix: one row per point, one column per generator.
fn evaluation_matrix(n: usize, gens: &[FlagMonomial], pts: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut minors: BTreeMap<IndexSet, Polynomial> = BTreeMap::new();
    for g in gens {
        for r in g.rows() {
            minors.entry(r.clone()).or_insert_with(|| minor_poly(r, &IndexSet::initial(r.len())).expect("sizes"));
        }
    }
    pts.iter()
        .map(|pt| {
            let vals: BTreeMap<&IndexSet, BigInt> =
                minors.iter().map(|(r, p)| (r, evaluate_integer(p, n, pt))).collect();
            gens.iter()
                .map(|g| g.rows().iter().fold(BigInt::one(), |acc, r| acc * &vals[r]))
                .collect()
        })
        .collect()
}

fn stable_rank(label: &str, plan: &SamplePlan, rank_at: impl Fn(&SamplePlan) -> usize) -> Result<usize> {
    let r = rank_at(plan);
    let r2 = rank_at(&plan.doubled());
    if r != r2 {
        return Err(Error::UnstableSample(alloc::format!(
            "{label}: rank {r} with {} samples but {r2} with {} (seed {})",
            plan.count,
            2 * plan.count,
            plan.seed
        )));
    }
    Ok(r)
}

/// Dimension of the restriction of `V_m` to `X_w`: the rank of the
/// evaluation matrix of all flag generators at Schubert samples.
pub fn schubert_dim_oracle(w: &Permutation, m: &[u32], plan: &SamplePlan) -> Result<usize> {
    let n = w.n();
    let gens = flag_generators(n, m)?;
    stable_rank("schubert oracle", plan, |p| integer_rank(evaluation_matrix(n, &gens, &schubert_samples(w, p))))
}

/// `dim V_m − dim(K_w + K^v)`, which in generator coordinates is
/// `rank E_w + rank E^v − rank [E_w; E^v]`; zero unless `v ≤ w`.
pub fn richardson_dim_oracle(w: &Permutation, v: &Permutation, m: &[u32], plan: &SamplePlan) -> Result<usize> {
    let n = w.n();
    let gens = flag_generators(n, m)?;
    if !bruhat_leq(v, w) {
        return Ok(0);
    }
    stable_rank("richardson oracle", plan, |p| {
        let ew = evaluation_matrix(n, &gens, &schubert_samples(w, p));
        let ev = evaluation_matrix(n, &gens, &opposite_samples(v, p));
        let (rw, rv) = (integer_rank(ew.clone()), integer_rank(ev.clone()));
        let both = integer_rank(ew.into_iter().chain(ev).collect());
        rw + rv - both
    })
}

/// True if `minor [R | 1..d]` is identically zero on the sample.
pub fn minor_vanishes(pt: &[BigInt], n: usize, r: &IndexSet) -> bool {
    evaluate_integer(&minor_poly(r, &IndexSet::initial(r.len())).expect("sizes"), n, pt).is_zero()
}
