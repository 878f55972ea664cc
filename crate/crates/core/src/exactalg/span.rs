//! Exact linear algebra on spans of polynomials.
//!
//! Two independent routes are provided.  [`rank_of_span`] and
//! [`pivot_monomials`] build dense integer matrices (columns = monomials,
//! largest first) and run Bareiss elimination, one weight space at a time.
//! [`SpanSolver`] is a sparse incremental reducer that keeps one vector per
//! leading monomial; it streams, so it handles generator lists that are too
//! large to hold at once.  Tests cross-check the two.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::bareiss_echelon;
use super::monomial::Monomial;
use super::poly::Polynomial;
use crate::error::{invalid, Error, Result};
use crate::weyl::MAX_N;

type Weight = ([u16; MAX_N], [u16; MAX_N]);

/// Splits the input into weight spaces when every polynomial is
/// bihomogeneous; otherwise returns a single group.
fn weight_groups(ps: &[Polynomial]) -> Vec<Vec<&Polynomial>> {
    let nonzero: Vec<&Polynomial> = ps.iter().filter(|p| !p.is_zero()).collect();
    let weights: Option<Vec<Weight>> = nonzero.iter().map(|p| p.weight()).collect();
    match weights {
        Some(ws) => {
            let mut groups: BTreeMap<Weight, Vec<&Polynomial>> = BTreeMap::new();
            for (p, w) in nonzero.into_iter().zip(ws) {
                groups.entry(w).or_default().push(p);
            }
            groups.into_values().collect()
        }
        None => alloc::vec![nonzero],
    }
}

fn dense_pivots(group: &[&Polynomial]) -> Vec<Monomial> {
    let support: BTreeSet<Monomial> = group.iter().flat_map(|p| p.monomials().copied()).collect();
    // columns largest monomial first
    let cols: Vec<Monomial> = support.into_iter().rev().collect();
    let rows: Vec<Vec<BigInt>> = group
        .iter()
        .map(|p| {
            let mut row = alloc::vec![BigInt::zero(); cols.len()];
            for (m, c) in p.terms() {
                let idx = cols.binary_search_by(|probe| m.cmp(probe)).expect("monomial in support");
                row[idx] = c.clone();
            }
            row
        })
        .collect();
    bareiss_echelon(rows, cols.len()).pivots.into_iter().map(|c| cols[c]).collect()
}

/// Dimension of the rational span.
pub fn rank_of_span(ps: &[Polynomial]) -> usize {
    weight_groups(ps).iter().map(|g| dense_pivots(g).len()).sum()
}

/// Leading monomials of an echelon basis of the span (columns ordered by the
/// term order), sorted descending.  Equals `{ in(f) : 0 ≠ f ∈ span }`.
pub fn pivot_monomials(ps: &[Polynomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = weight_groups(ps).iter().flat_map(|g| dense_pivots(g)).collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// One fraction-free step cancelling the leading term of `p` against `e`.
/// Returns the multipliers `(a, b)` with result `a·p − b·e`.
fn cancel_factors(p: &Polynomial, e: &Polynomial) -> (BigInt, BigInt) {
    let pc = p.leading_term().expect("nonzero").1;
    let ec = e.leading_term().expect("nonzero").1;
    let g = pc.gcd(ec);
    (ec / &g, pc / &g)
}

/// Incremental sparse echelon form keyed by leading monomial.
#[derive(Clone, Debug, Default)]
pub struct SpanSolver {
    rows: Vec<Polynomial>,
    by_lead: BTreeMap<Monomial, usize>,
}

impl SpanSolver {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reduces `p` until its leading monomial is not a pivot (or it is 0).
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        let mut p = p.primitive();
        while let Some((lm, _)) = p.leading_term() {
            let Some(&i) = self.by_lead.get(lm) else { break };
            let e = &self.rows[i];
            let (a, b) = cancel_factors(&p, e);
            p = p.combine(&a, e, &b).primitive();
        }
        p
    }

    /// Adds `p` to the span; true iff it was independent of what came before.
    pub fn insert(&mut self, p: &Polynomial) -> bool {
        let r = self.reduce(p);
        match r.leading_term() {
            None => false,
            Some((lm, _)) => {
                self.by_lead.insert(*lm, self.rows.len());
                self.rows.push(r);
                true
            }
        }
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.reduce(p).is_zero()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot monomials, sorted descending.
    pub fn pivots(&self) -> Vec<Monomial> {
        self.by_lead.keys().rev().copied().collect()
    }

    pub fn rows(&self) -> &[Polynomial] {
        &self.rows
    }
}

/// A reduced vector together with its expression in the original basis:
/// `poly = Σ combo[j]·basis[j]`.
#[derive(Clone, Debug)]
struct TrackedRow {
    poly: Polynomial,
    combo: Vec<BigInt>,
}

/// A linearly independent family prepared for repeated coordinate solves.
#[derive(Clone, Debug)]
pub struct BasisExpander {
    len: usize,
    rows: Vec<TrackedRow>,
    by_lead: BTreeMap<Monomial, usize>,
}

impl BasisExpander {
    /// Fails with an invalid-parameter error if `basis` is dependent.
    pub fn new(basis: &[Polynomial]) -> Result<Self> {
        let mut out = BasisExpander { len: basis.len(), rows: Vec::new(), by_lead: BTreeMap::new() };
        for (t, b) in basis.iter().enumerate() {
            let (s, mut combo, poly) = out.reduce_tracked(b);
            if poly.is_zero() {
                return Err(invalid(alloc::format!("basis element {t} is in the span of the earlier ones")));
            }
            // poly = s·b_t − Σ combo[j]·b_j; store it as a plain combination.
            for c in combo.iter_mut() {
                *c = -&*c;
            }
            combo[t] += &s;
            let lm = *poly.leading_term().unwrap().0;
            out.by_lead.insert(lm, out.rows.len());
            out.rows.push(TrackedRow { poly, combo });
        }
        Ok(out)
    }

    /// Reduces `target` keeping `s·target − Σ combo[j]·basis[j] = poly`.
    fn reduce_tracked(&self, target: &Polynomial) -> (BigInt, Vec<BigInt>, Polynomial) {
        let mut s = BigInt::one();
        let mut combo = alloc::vec![BigInt::zero(); self.len];
        let mut p = target.clone();
        while let Some((lm, _)) = p.leading_term() {
            let Some(&i) = self.by_lead.get(lm) else { break };
            let row = &self.rows[i];
            let (a, b) = cancel_factors(&p, &row.poly);
            p = p.combine(&a, &row.poly, &b);
            s *= &a;
            for (c, d) in combo.iter_mut().zip(&row.combo) {
                *c = &*c * &a + d * &b;
            }
            // keep numbers small: divide out the common content
            let mut g = p.content().gcd(&s);
            for c in &combo {
                if g.is_one() {
                    break;
                }
                g = g.gcd(c);
            }
            if !g.is_one() && !g.is_zero() {
                p = p.div_exact(&g);
                s /= &g;
                for c in combo.iter_mut() {
                    *c /= &g;
                }
            }
        }
        (s, combo, p)
    }

    /// Coordinates of `target`, or [`Error::NotInSpan`].
    pub fn express(&self, target: &Polynomial) -> Result<Vec<BigRational>> {
        let (s, combo, rest) = self.reduce_tracked(target);
        if !rest.is_zero() {
            return Err(Error::NotInSpan);
        }
        Ok(combo.into_iter().map(|c| BigRational::new(c, s.clone())).collect())
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }
}

/// Coefficients `c` with `target = Σ c_i·basis_i`.
pub fn express_in_basis(target: &Polynomial, basis: &[Polynomial]) -> Result<Vec<BigRational>> {
    BasisExpander::new(basis)?.express(target)
}

/// True when a coefficient vector is a standard unit vector at `k`.
pub fn is_unit_vector(coeffs: &[BigRational], k: usize) -> bool {
    coeffs.iter().enumerate().all(|(i, c)| if i == k { c.is_one() } else { c.is_zero() })
}
