//! Degree-wise checks of the toric degeneration: distinct leading monomials
//! of straight tableaux, initial spaces, and generation of the initial
//! algebra by degree-one leading monomials.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::error::{invalid, Error, Result};
use crate::exactalg::Monomial;
use crate::sections::{span_pivots, Realization, Realizer};
use crate::tableaux::{enumerate_straight, Shape, Side, Tableau};

/// Two or more straight tableaux sharing a leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LmCollision {
    pub monomial: Monomial,
    pub tableaux: Vec<Tableau>,
}

/// Leading monomials of the straight tableaux of one shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StraightLms {
    pub shape: Shape,
    pub straight_count: usize,
    /// Distinct leading monomials, descending.
    pub monomials: Vec<Monomial>,
    pub collisions: Vec<LmCollision>,
}

impl StraightLms {
    pub fn distinct(&self) -> bool {
        self.collisions.is_empty() && self.monomials.len() == self.straight_count
    }
}

/// Leading monomials of all straight tableaux, with collisions listed.
pub fn straight_lm_report(shape: &Shape) -> StraightLms {
    let straight = enumerate_straight(shape);
    let mut realizer = Realizer::new(Realization::Triangular);
    let mut by_lm: BTreeMap<Monomial, Vec<Tableau>> = BTreeMap::new();
    let mut vanishing = Vec::new();
    for t in straight.iter() {
        match realizer.rows_leading_monomial(shape, Side::Primal, t.rows()) {
            Some(lm) => by_lm.entry(lm).or_default().push(t.clone()),
            None => vanishing.push(t.clone()),
        }
    }
    let mut collisions: Vec<LmCollision> = by_lm
        .iter()
        .filter(|(_, ts)| ts.len() > 1)
        .map(|(m, ts)| LmCollision { monomial: *m, tableaux: ts.clone() })
        .collect();
    if !vanishing.is_empty() {
        // a vanishing straight tableau has no leading monomial at all
        collisions.push(LmCollision { monomial: Monomial::ONE, tableaux: vanishing });
    }
    StraightLms {
        shape: shape.clone(),
        straight_count: straight.len(),
        monomials: by_lm.into_keys().rev().collect(),
        collisions,
    }
}

/// Leading monomials of the straight tableaux, descending; a collision is a
/// theorem violation.
pub fn straight_lms(shape: &Shape) -> Result<Vec<Monomial>> {
    let report = straight_lm_report(shape);
    if let Some(c) = report.collisions.first() {
        return Err(Error::TheoremViolation(alloc::format!(
            "shape {shape}: {} straight tableaux share the leading monomial {}",
            c.tableaux.len(),
            c.monomial
        )));
    }
    Ok(report.monomials)
}

/// The degree-`p` piece of the initial algebra: echelon pivots of all
/// tableaux of shape `(j, p·m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialPiece {
    pub shape: Shape,
    pub p: u32,
    /// Descending.
    pub lm_set: Vec<Monomial>,
}

impl InitialPiece {
    pub fn dim(&self) -> usize {
        self.lm_set.len()
    }
}

pub fn initial_piece(shape: &Shape, p: u32) -> Result<InitialPiece> {
    if p == 0 {
        return Err(invalid("initial pieces start at p = 1"));
    }
    let scaled = shape.scaled(p);
    Ok(InitialPiece { shape: shape.clone(), p, lm_set: span_pivots(&scaled, Side::Primal, Realization::Triangular) })
}

/// Outcome of [`sagbi_degree_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SagbiReport {
    pub shape: Shape,
    pub p: u32,
    /// `|lm_set(1)|`.
    pub degree_one: usize,
    /// `|lm_set(p)|`, the dimension of the initial space.
    pub lm_count: usize,
    /// Straight tableaux of shape `(j, p·m)`: the dimension of the section
    /// space by the basis theorem.
    pub straight_count: usize,
    /// Distinct `p`-fold products of degree-one leading monomials.
    pub product_count: usize,
    /// Whether `lm_set(p)` equals the straight leading monomials in degree `p`.
    pub matches_straight_lms: bool,
    /// Degree-`p` leading monomials that are not `p`-fold products.
    pub missing: Vec<Monomial>,
    /// Products that are not degree-`p` leading monomials (impossible in
    /// exact arithmetic; kept as a consistency check).
    pub extra: Vec<Monomial>,
}

impl SagbiReport {
    /// Semigroup generation in degree `p`.
    pub fn contained(&self) -> bool {
        self.missing.is_empty()
    }

    /// Hilbert function of the algebra against that of the initial algebra.
    pub fn hilbert_match(&self) -> bool {
        self.lm_count == self.straight_count && self.lm_count == self.product_count
    }

    pub fn pass(&self) -> bool {
        self.contained() && self.extra.is_empty() && self.hilbert_match() && self.matches_straight_lms
    }
}

/// Checks `lm_set(p) ⊆ lm_set(1)^p` and the Hilbert match in degree `p`.
pub fn sagbi_degree_check(shape: &Shape, p: u32) -> Result<SagbiReport> {
    if p < 2 {
        return Err(invalid("the degree check needs p >= 2"));
    }
    let one = initial_piece(shape, 1)?.lm_set;
    let piece = initial_piece(shape, p)?;
    let mut products: BTreeSet<Monomial> = one.iter().copied().collect();
    for _ in 1..p {
        let mut next = BTreeSet::new();
        for a in &products {
            for b in &one {
                next.insert(a.checked_mul(b).expect("exponent overflow"));
            }
        }
        products = next;
    }
    let lms: BTreeSet<Monomial> = piece.lm_set.iter().copied().collect();
    let straight = straight_lm_report(&shape.scaled(p));
    Ok(SagbiReport {
        shape: shape.clone(),
        p,
        degree_one: one.len(),
        lm_count: lms.len(),
        straight_count: straight.straight_count,
        product_count: products.len(),
        matches_straight_lms: straight.distinct() && straight.monomials == piece.lm_set,
        missing: descending(lms.difference(&products)),
        extra: descending(products.difference(&lms)),
    })
}

fn descending<'a>(it: impl Iterator<Item = &'a Monomial>) -> Vec<Monomial> {
    let mut v: Vec<Monomial> = it.copied().collect();
    v.reverse();
    v
}
