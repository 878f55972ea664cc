//! Flag standard monomials: products of minors `[R | 1..d]` and their
//! Schubert and Richardson filters.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{invalid, Result};
use crate::exactalg::{minor_poly, Polynomial};
use crate::tableaux::multisets;
use crate::weyl::{bruhat_leq, uparrow, IndexSet, Permutation};

/// A product of flag minors `[R_{t,d} | 1..d]`.
///
/// Rows are listed bottom to top with sizes non-decreasing: the `m_1`
/// singletons first, the `(n-1)`-sets last.  Inside one size the rows are
/// kept lexicographically non-increasing, so equal products have equal
/// representations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlagMonomial {
    n: usize,
    rows: Vec<IndexSet>,
}

impl FlagMonomial {
    pub fn new(n: usize, mut rows: Vec<IndexSet>) -> Result<Self> {
        if rows.iter().any(|r| r.is_empty() || r.len() >= n || r.largest().is_some_and(|x| x as usize > n)) {
            return Err(invalid(alloc::format!("flag rows must be proper nonempty subsets of 1..{n}")));
        }
        rows.sort_by(|a, b| a.len().cmp(&b.len()).then(b.cmp(a)));
        Ok(FlagMonomial { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rows bottom to top.
    pub fn rows(&self) -> &[IndexSet] {
        &self.rows
    }

    /// `m_d` for `d = 1..n-1`.
    pub fn mult(&self) -> Vec<u32> {
        let mut m = alloc::vec![0u32; self.n - 1];
        for r in &self.rows {
            m[r.len() - 1] += 1;
        }
        m
    }

    /// Semistandard: in every column the entries weakly decrease from the
    /// bottom row upwards (`top ≤ bottom`), checked on adjacent rows.
    pub fn is_standard(&self) -> bool {
        self.rows.windows(2).all(|w| {
            let (below, above) = (&w[0], &w[1]);
            below.iter().zip(above.iter()).all(|(b, a)| a <= b)
        })
    }

    /// `∏ [R | 1..d]` on the generic matrix.
    pub fn poly(&self) -> Polynomial {
        let mut acc = Polynomial::one();
        for r in &self.rows {
            acc = &acc * &minor_poly(r, &IndexSet::initial(r.len())).expect("valid sizes");
        }
        acc
    }
}

impl fmt::Display for FlagMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "[")?;
            for (k, x) in r.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "|1..{}]", r.len())?;
        }
        if self.rows.is_empty() {
            f.write_str("1")?;
        }
        Ok(())
    }
}

fn check_mult(n: usize, m: &[u32]) -> Result<()> {
    if n < 2 || m.len() != n - 1 {
        return Err(invalid(alloc::format!("flag multiplicity needs n-1 = {} entries", n.saturating_sub(1))));
    }
    Ok(())
}

/// All products with `m_d` rows of size `d`, one per multiset.
pub fn flag_generators(n: usize, m: &[u32]) -> Result<Vec<FlagMonomial>> {
    check_mult(n, m)?;
    let choices: Vec<Vec<IndexSet>> = (1..n).map(|d| IndexSet::subsets(n, d)).collect();
    let per_degree: Vec<Vec<Vec<usize>>> =
        (1..n).map(|d| multisets(choices[d - 1].len(), m[d - 1] as usize)).collect();
    let mut out = Vec::new();
    let mut idx = alloc::vec![0usize; n - 1];
    loop {
        let mut rows = Vec::new();
        for d in 1..n {
            rows.extend(per_degree[d - 1][idx[d - 1]].iter().map(|&c| choices[d - 1][c].clone()));
        }
        out.push(FlagMonomial::new(n, rows)?);
        let Some(p) = (0..n - 1).rev().find(|&p| idx[p] + 1 < per_degree[p].len()) else { break };
        idx[p] += 1;
        for q in p + 1..n - 1 {
            idx[q] = 0;
        }
    }
    Ok(out)
}

/// Standard monomials of degree `m` on the whole flag variety.
pub fn standard_monomials(n: usize, m: &[u32]) -> Result<Vec<FlagMonomial>> {
    Ok(flag_generators(n, m)?.into_iter().filter(FlagMonomial::is_standard).collect())
}

/// Standard monomials whose every row satisfies `(w(1..d))↑ ⪰ R`.
pub fn schubert_monomials(w: &Permutation, m: &[u32]) -> Result<Vec<FlagMonomial>> {
    let n = w.n();
    let tops: Vec<IndexSet> = (1..n).map(|d| uparrow(w, d)).collect::<Result<_>>()?;
    Ok(standard_monomials(n, m)?
        .into_iter()
        .filter(|f| f.rows().iter().all(|r| tops[r.len() - 1].dominates_eq(r)))
        .collect())
}

/// Standard monomials whose every row satisfies
/// `(w(1..d))↑ ⪰ R ⪰ (v(1..d))↑`; empty unless `v ≤ w`.
pub fn richardson_monomials(w: &Permutation, v: &Permutation, m: &[u32]) -> Result<Vec<FlagMonomial>> {
    if w.n() != v.n() {
        return Err(invalid("w and v live in different symmetric groups"));
    }
    if !bruhat_leq(v, w) {
        check_mult(w.n(), m)?;
        return Ok(Vec::new());
    }
    let n = w.n();
    let tops: Vec<IndexSet> = (1..n).map(|d| uparrow(w, d)).collect::<Result<_>>()?;
    let bots: Vec<IndexSet> = (1..n).map(|d| uparrow(v, d)).collect::<Result<_>>()?;
    Ok(standard_monomials(n, m)?
        .into_iter()
        .filter(|f| f.rows().iter().all(|r| tops[r.len() - 1].dominates_eq(r) && r.dominates_eq(&bots[r.len() - 1])))
        .collect())
}

// ---------------------------------------------------------------------------
// defining chains

/// A coset of `S_n / W_P` seen through its sorted prefixes of the sizes in
/// `degrees`.
type Coset = Vec<IndexSet>;

fn cosets(n: usize, degrees: &[usize]) -> Vec<Coset> {
    let set: BTreeSet<Coset> = Permutation::all(n)
        .iter()
        .map(|p| degrees.iter().map(|&d| uparrow(p, d).expect("d in range")).collect())
        .collect();
    set.into_iter().collect()
}

fn project(p: &Permutation, degrees: &[usize]) -> Coset {
    degrees.iter().map(|&d| uparrow(p, d).expect("d in range")).collect()
}

fn coset_leq(a: &Coset, b: &Coset) -> bool {
    a.iter().zip(b).all(|(x, y)| y.dominates_eq(x))
}

/// True iff the rows lift to a chain `w ≥ τ_1 ≥ … ≥ τ_s ≥ v` in the
/// parabolic quotient fixed by the degrees in use, with `τ_t` projecting to
/// the `t`-th row (rows taken from the bottom, i.e. largest first).
pub fn has_defining_chain(f: &FlagMonomial, w: &Permutation, v: &Permutation) -> bool {
    let n = f.n();
    let degrees: Vec<usize> = f.mult().iter().enumerate().filter(|(_, &m)| m > 0).map(|(d, _)| d + 1).collect();
    if degrees.is_empty() {
        return bruhat_leq(v, w);
    }
    let all = cosets(n, &degrees);
    let (top, bottom) = (project(w, &degrees), project(v, &degrees));
    let mut feasible: Vec<&Coset> = all.iter().filter(|c| coset_leq(c, &top)).collect();
    for row in f.rows() {
        let slot = degrees.iter().position(|&d| d == row.len()).expect("degree in use");
        let next: Vec<&Coset> = all
            .iter()
            .filter(|c| &c[slot] == row && feasible.iter().any(|p| coset_leq(c, p)))
            .collect();
        if next.is_empty() {
            return false;
        }
        feasible = next;
    }
    feasible.iter().any(|c| coset_leq(&bottom, c))
}

/// Standard monomials admitting a defining chain between `v` and `w`.
pub fn chain_monomials(w: &Permutation, v: &Permutation, m: &[u32]) -> Result<Vec<FlagMonomial>> {
    if !bruhat_leq(v, w) {
        check_mult(w.n(), m)?;
        return Ok(Vec::new());
    }
    Ok(standard_monomials(w.n(), m)?.into_iter().filter(|f| has_defining_chain(f, w, v)).collect())
}
