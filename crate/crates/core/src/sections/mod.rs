//! Section spaces `M(j, m)` as spans of tableau polynomials, the restriction
//! to subwords, straightening, and (in [`flag`] and [`sampling`]) standard
//! monomials on Schubert and Richardson varieties with their point oracles.
//!
//! Tableau minors are taken on the upper-triangular matrix of variables
//! (`x[r,c] = 0` for `r > c`), i.e. on the orbit of the Borel subgroup that
//! the Bott-Samelson configuration is built from.  Opposite-side tableaux
//! use the lower-triangular matrix.  The fully generic matrix is available
//! as [`Realization::Generic`] for comparison.

pub mod flag;
pub mod sampling;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{
    bareiss_echelon, minor_poly_on, pivot_monomials, BasisExpander, Monomial, Polynomial, SpanSolver,
};
use crate::tableaux::{
    enumerate_classes, enumerate_straight, involution, is_straight, visit_classes, Row, Shape, Side,
    Tableau,
};
use crate::weyl::{is_reduced, is_subword, longest_word, IndexSet, Word, MAX_N};

/// Which matrix of variables tableau minors are taken on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Realization {
    /// Upper-triangular on the primal side, lower-triangular on the
    /// opposite side.
    #[default]
    Triangular,
    /// All `n²` entries free.
    Generic,
}

impl Realization {
    fn allows(self, side: Side, r: u8, c: u8) -> bool {
        match (self, side) {
            (Realization::Generic, _) => true,
            (Realization::Triangular, Side::Primal) => r <= c,
            (Realization::Triangular, Side::Opposite) => r >= c,
        }
    }
}

/// Memoised minors for building many tableau polynomials.
#[derive(Clone, Debug, Default)]
pub struct Realizer {
    realization: Realization,
    minors: BTreeMap<(Side, IndexSet, IndexSet), Polynomial>,
}

impl Realizer {
    pub fn new(realization: Realization) -> Self {
        Realizer { realization, minors: BTreeMap::new() }
    }

    pub fn minor(&mut self, side: Side, rows: &IndexSet, cols: &IndexSet) -> &Polynomial {
        let realization = self.realization;
        self.minors.entry((side, rows.clone(), cols.clone())).or_insert_with(|| {
            minor_poly_on(rows, cols, |r, c| realization.allows(side, r, c)).expect("row and column sets agree in size")
        })
    }

    /// Product of the row minors of `rows` on `side`.
    pub fn rows_poly(&mut self, shape: &Shape, side: Side, rows: &[Row]) -> Polynomial {
        let n = shape.n();
        let mut acc = Polynomial::one();
        for row in rows {
            let k = shape.column_set(row.block);
            let cols = if side == Side::Opposite { k.tilde(n) } else { k.clone() };
            let m = self.minor(side, &row.set, &cols);
            if m.is_zero() {
                return Polynomial::zero();
            }
            acc = &acc * m;
        }
        acc
    }

    pub fn poly(&mut self, t: &Tableau) -> Polynomial {
        self.rows_poly(t.shape(), t.side(), t.rows())
    }

    /// Leading monomial of the row product without expanding it: the term
    /// order is multiplicative, so it is the product of the minors' leading
    /// monomials.  `None` when some minor vanishes.
    pub fn rows_leading_monomial(&mut self, shape: &Shape, side: Side, rows: &[Row]) -> Option<Monomial> {
        let n = shape.n();
        let mut acc = Monomial::ONE;
        for row in rows {
            let k = shape.column_set(row.block);
            let cols = if side == Side::Opposite { k.tilde(n) } else { k.clone() };
            let (lm, _) = self.minor(side, &row.set, &cols).leading_term()?;
            acc = acc.checked_mul(lm).expect("exponent overflow");
        }
        Some(acc)
    }
}

/// `∏ [R : K]` over the rows of `t`.
pub fn tableau_poly(t: &Tableau) -> Polynomial {
    Realizer::new(Realization::Triangular).poly(t)
}

/// `Σ_rows R`, counted with multiplicity: the row content of the tableau
/// polynomial.  Tableaux with different contents lie in independent weight
/// spaces.
pub fn row_content(rows: &[Row]) -> [u16; MAX_N] {
    let mut out = [0u16; MAX_N];
    for row in rows {
        for x in row.set.iter() {
            out[x as usize - 1] += 1;
        }
    }
    out
}

/// Within-block classes of the shape grouped by row content, in a fixed
/// order.  Ranks and pivots add up over the groups.
pub fn class_groups(shape: &Shape) -> Vec<Vec<Vec<Row>>> {
    let mut groups: BTreeMap<[u16; MAX_N], Vec<Vec<Row>>> = BTreeMap::new();
    visit_classes(shape, |rows| groups.entry(row_content(rows)).or_default().push(rows.to_vec()));
    groups.into_values().collect()
}

/// Dense elimination stays below this many matrix cells; larger groups go
/// through the sparse incremental reducer.
const DENSE_CELLS: usize = 1 << 22;

/// Leading monomials of the span of one group of classes, descending.
pub fn group_pivots(shape: &Shape, side: Side, realization: Realization, group: &[Vec<Row>]) -> Vec<Monomial> {
    let mut realizer = Realizer::new(realization);
    let polys: Vec<Polynomial> = group.iter().map(|rows| realizer.rows_poly(shape, side, rows)).collect();
    let support: usize = polys.iter().map(Polynomial::len).max().unwrap_or(0);
    if polys.len().saturating_mul(support.max(1)) <= DENSE_CELLS / 8 {
        pivot_monomials(&polys)
    } else {
        let mut solver = SpanSolver::new();
        for p in &polys {
            solver.insert(p);
        }
        solver.pivots()
    }
}

/// Leading monomials of the span of all tableaux of the shape, descending.
/// Opposite-side classes are the images of the primal ones under
/// `R ↦ R̃`, which keeps the row-content grouping intact.
pub fn span_pivots(shape: &Shape, side: Side, realization: Realization) -> Vec<Monomial> {
    let n = shape.n();
    let mut out: Vec<Monomial> = class_groups(shape)
        .into_iter()
        .map(|g| match side {
            Side::Primal => g,
            Side::Opposite => g
                .into_iter()
                .map(|rows| rows.into_iter().map(|r| Row { block: r.block, set: r.set.tilde(n) }).collect())
                .collect(),
        })
        .flat_map(|g| group_pivots(shape, side, realization, &g))
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// `dim M(j, m)` by exact rank.
pub fn section_rank(shape: &Shape) -> usize {
    span_pivots(shape, Side::Primal, Realization::Triangular).len()
}

/// Result of [`dim_sections`]: the rank of the span of all tableaux against
/// the number of straight tableaux.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimCertificate {
    pub shape: Shape,
    /// Ordered tableaux `∏ (#rows)^{m_r}`.
    pub generator_count: u128,
    /// Within-block multiset classes (distinct polynomials).
    pub class_count: u128,
    pub straight_count: usize,
    pub rank: usize,
}

impl DimCertificate {
    pub fn pass(&self) -> bool {
        self.rank == self.straight_count
    }

    /// The certificate as an error when the counts disagree.
    pub fn violation(&self) -> Option<Error> {
        (!self.pass()).then(|| {
            Error::TheoremViolation(alloc::format!(
                "shape {}: rank {} but {} straight tableaux",
                self.shape,
                self.rank,
                self.straight_count
            ))
        })
    }
}

/// `dim M(j, m)` with the straight count alongside.
pub fn dim_sections(shape: &Shape) -> DimCertificate {
    DimCertificate {
        shape: shape.clone(),
        generator_count: shape.tableau_count(),
        class_count: shape.class_count(),
        straight_count: enumerate_straight(shape).len(),
        rank: section_rank(shape),
    }
}

/// A graded piece `M(j, m)` with its straight basis, ready for
/// straightening.
#[derive(Clone, Debug)]
pub struct SectionSpace {
    pub shape: Shape,
    pub side: Side,
    /// One representative per within-block class.
    pub generators: Vec<Tableau>,
    /// Straight tableaux (involution images on the opposite side).
    pub straight_basis: Vec<Tableau>,
    pub polynomials: Vec<Polynomial>,
    pub dim: usize,
    expander: BasisExpander,
    basis_index: BTreeMap<Tableau, usize>,
}

impl SectionSpace {
    /// Builds the primal space; fails with a theorem violation if the
    /// straight tableaux are not a basis of the span.
    pub fn new(shape: &Shape) -> Result<Self> {
        Self::build(shape, Side::Primal)
    }

    /// The opposite-side space `w_i(M(j, m))`, spanned by involution images.
    pub fn opposite(shape: &Shape) -> Result<Self> {
        Self::build(shape, Side::Opposite)
    }

    fn build(shape: &Shape, side: Side) -> Result<Self> {
        let flip = |ts: Vec<Tableau>| -> Vec<Tableau> {
            match side {
                Side::Primal => ts,
                Side::Opposite => ts.iter().map(involution).collect(),
            }
        };
        let generators = flip(enumerate_classes(shape));
        let straight_basis = flip(enumerate_straight(shape));
        let mut realizer = Realizer::new(Realization::Triangular);
        let polynomials: Vec<Polynomial> = straight_basis.iter().map(|t| realizer.poly(t)).collect();
        let dim = span_pivots(shape, side, Realization::Triangular).len();
        if dim != straight_basis.len() {
            return Err(Error::TheoremViolation(alloc::format!(
                "shape {shape}: rank {dim} but {} straight tableaux",
                straight_basis.len()
            )));
        }
        let expander = BasisExpander::new(&polynomials).map_err(|_| {
            Error::TheoremViolation(alloc::format!("shape {shape}: straight tableaux are linearly dependent"))
        })?;
        let basis_index = straight_basis.iter().enumerate().map(|(i, t)| (t.canonical(), i)).collect();
        Ok(SectionSpace {
            shape: shape.clone(),
            side,
            generators,
            straight_basis,
            polynomials,
            dim,
            expander,
            basis_index,
        })
    }

    /// Coordinates of a polynomial over the straight basis; a polynomial
    /// outside the span is a theorem violation.
    pub fn coordinates(&self, p: &Polynomial) -> Result<Vec<BigRational>> {
        self.expander.express(p).map_err(|e| match e {
            Error::NotInSpan => {
                Error::TheoremViolation(alloc::format!("element outside the span of the straight basis of {}", self.shape))
            }
            other => other,
        })
    }

    /// Straightening by linear solve.
    pub fn straighten(&self, t: &Tableau) -> Result<Vec<BigRational>> {
        self.coordinates(&Realizer::new(Realization::Triangular).poly(t))
    }

    /// Position of a straight tableau (up to within-block order) in the basis.
    pub fn basis_position(&self, t: &Tableau) -> Option<usize> {
        self.basis_index.get(&t.canonical()).copied()
    }
}

/// Straightening of a single tableau against the straight basis of its shape.
pub fn straighten(t: &Tableau) -> Result<Vec<BigRational>> {
    let space = match t.side() {
        Side::Primal => SectionSpace::new(t.shape())?,
        Side::Opposite => SectionSpace::opposite(t.shape())?,
    };
    space.straighten(t)
}

/// Dimension of the opposite-side space, recomputed from involution images.
pub fn opposite_dim(shape: &Shape) -> usize {
    span_pivots(shape, Side::Opposite, Realization::Triangular).len()
}

// ---------------------------------------------------------------------------
// restriction to a subword

/// Image of an `(i, m)`-tableau under restriction to the subword `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PhiImage {
    Tableau(Tableau),
    /// Some kept row fails `R ⪯ K_j^(r)`.
    Zero,
}

fn check_subword(j: &Word) -> Result<()> {
    let i = longest_word(j.n())?;
    if !is_subword(j, &i)? || !is_reduced(j) {
        return Err(crate::error::invalid(alloc::format!("({j}) is not a reduced subword of ({i})")));
    }
    Ok(())
}

/// `m` with the entries at omitted letters of `j` set to zero.
pub fn normalize_mult(m: &[u32], j: &Word) -> Vec<u32> {
    m.iter().zip(j.letters()).map(|(&m, &l)| if l == 0 { 0 } else { m }).collect()
}

/// `φ`: keep the rowsets, replace `K_i^(r)` by `K_j^(r)`; rows in blocks
/// with `j_r = 0` map to 1 (they are dropped).
pub fn phi(t: &Tableau, j: &Word) -> Result<PhiImage> {
    check_subword(j)?;
    if t.side() != Side::Primal || t.shape().word() != &longest_word(t.n())? {
        return Err(crate::error::invalid("phi is defined on primal tableaux of shape (i, m)"));
    }
    let target = Shape::new(j.clone(), normalize_mult(t.shape().mult(), j))?;
    let mut rows = Vec::new();
    for row in t.rows() {
        if j.letters()[row.block - 1] == 0 {
            continue;
        }
        if !target.column_set(row.block).dominates_eq(&row.set) {
            return Ok(PhiImage::Zero);
        }
        rows.push(row.clone());
    }
    Ok(PhiImage::Tableau(Tableau::new(target, Side::Primal, rows)?))
}

/// Blocks where the kernel condition `R ⋠ K_j^(r)` can hold at all.
fn condition_blocks(shape_i: &Shape, j: &Word) -> (Vec<usize>, Vec<usize>) {
    let kj = crate::tableaux::column_sets(j).expect("checked subword");
    let n = shape_i.n();
    let mut live = Vec::new();
    let mut void = Vec::new();
    for r in 1..=shape_i.len() {
        if j.letters()[r - 1] == 0 || shape_i.mult()[r - 1] == 0 {
            continue;
        }
        let some_fail = shape_i.column_set(r).dominated_sets(n).iter().any(|s| !kj[r - 1].dominates_eq(s));
        if some_fail {
            live.push(r);
        } else {
            void.push(r);
        }
    }
    (live, void)
}

/// Numbers behind the subword restriction statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionReport {
    pub j: Word,
    /// Multiplicities as given.
    pub mult_in: Vec<u32>,
    /// Multiplicities used (zero at omitted letters).
    pub mult: Vec<u32>,
    /// Blocks where the kernel condition is non-void / void.
    pub condition_blocks: Vec<usize>,
    pub void_blocks: Vec<usize>,
    pub dim_i: usize,
    pub dim_j: usize,
    /// `φ` is a well-defined linear map on the span (`rank[G|H] = rank G`).
    pub well_defined: bool,
    /// Same check for the map that drops rows of omitted blocks without
    /// normalising `m`; `None` when `m` already vanishes there.
    pub literal_drop_well_defined: Option<bool>,
    /// `dim M(i,m) − rank of the image`.
    pub kernel_dim: usize,
    /// Tableaux with some row `R ⋠ K_j^(r)` and the rank of their span.
    pub flagged_count: usize,
    pub flagged_rank: usize,
    /// Straight `(i,m)`-tableaux with every row `R ⪯ K_j^(r)`.
    pub straight_with_condition: usize,
    /// Straight tableaux of shape `(j,m)` under the grid predicate.
    pub straight_j: usize,
}

impl RestrictionReport {
    pub fn rank_nullity(&self) -> bool {
        self.well_defined && self.dim_i == self.kernel_dim + self.dim_j
    }

    pub fn kernel_spanned_by_flagged(&self) -> bool {
        self.flagged_rank == self.kernel_dim
    }

    pub fn straight_condition_matches(&self) -> bool {
        self.straight_with_condition == self.dim_j
    }

    pub fn pass(&self) -> bool {
        self.rank_nullity() && self.kernel_spanned_by_flagged() && self.straight_condition_matches()
    }
}

/// Rank of `[G | H]` where both halves are given per generator; the halves
/// live in separate column blocks.
fn stacked_rank(pairs: &[(Polynomial, Polynomial)]) -> usize {
    let mut cols: BTreeMap<(bool, Monomial), usize> = BTreeMap::new();
    for (g, h) in pairs {
        for m in g.monomials() {
            cols.insert((false, *m), 0);
        }
        for m in h.monomials() {
            cols.insert((true, *m), 0);
        }
    }
    for (i, v) in cols.values_mut().enumerate() {
        *v = i;
    }
    let rows: Vec<Vec<BigInt>> = pairs
        .iter()
        .map(|(g, h)| {
            let mut row = alloc::vec![BigInt::zero(); cols.len()];
            for (m, c) in g.terms() {
                row[cols[&(false, *m)]] = c.clone();
            }
            for (m, c) in h.terms() {
                row[cols[&(true, *m)]] = c.clone();
            }
            row
        })
        .collect();
    bareiss_echelon(rows, cols.len()).pivots.len()
}

/// Rank of `[G|H]` summed over the row-content groups of `G` (relations
/// among the `G` only occur inside a group).
fn grouped_stacked_rank(shape: &Shape, image: impl Fn(&[Row]) -> Option<(Shape, Vec<Row>)>) -> (usize, usize) {
    let mut realizer = Realizer::new(Realization::Triangular);
    let mut total = 0;
    let mut g_rank = 0;
    for group in class_groups(shape) {
        let pairs: Vec<(Polynomial, Polynomial)> = group
            .iter()
            .map(|rows| {
                let g = realizer.rows_poly(shape, Side::Primal, rows);
                let h = match image(rows) {
                    Some((s, img)) => realizer.rows_poly(&s, Side::Primal, &img),
                    None => Polynomial::zero(),
                };
                (g, h)
            })
            .collect();
        total += stacked_rank(&pairs);
        let gs: Vec<Polynomial> = pairs.into_iter().map(|(g, _)| g).collect();
        g_rank += pivot_monomials(&gs).len();
    }
    (total, g_rank)
}

/// Restriction of `M(i, m)` to `M(j, m)`: dimensions, well-definedness,
/// the flagged kernel spanning set and the straight-with-condition count.
pub fn restriction_analysis(m: &[u32], j: &Word) -> Result<RestrictionReport> {
    check_subword(j)?;
    let n = j.n();
    let mult = normalize_mult(m, j);
    let shape_i = Shape::ambient(n, mult.clone())?;
    let shape_j = Shape::new(j.clone(), mult.clone())?;
    let kj = shape_j.column_sets().to_vec();
    let (live, void) = condition_blocks(&shape_i, j);

    let dim_i = section_rank(&shape_i);
    let dim_j = section_rank(&shape_j);

    // φ on polynomials: each (i,m)-class to its j-image (zero if flagged)
    let image = |rows: &[Row]| -> Option<(Shape, Vec<Row>)> {
        rows.iter().all(|r| kj[r.block - 1].dominates_eq(&r.set)).then(|| (shape_j.clone(), rows.to_vec()))
    };
    let (stacked, g_rank) = grouped_stacked_rank(&shape_i, image);
    let well_defined = stacked == g_rank;

    // image rank: distinct j-images span M(j,m) restricted to the image
    let mut realizer = Realizer::new(Realization::Triangular);
    let mut image_solver = SpanSolver::new();
    let mut flagged_solver = SpanSolver::new();
    let mut flagged_count = 0;
    visit_classes(&shape_i, |rows| {
        if rows.iter().all(|r| kj[r.block - 1].dominates_eq(&r.set)) {
            image_solver.insert(&realizer.rows_poly(&shape_j, Side::Primal, rows));
        } else {
            flagged_count += 1;
            flagged_solver.insert(&realizer.rows_poly(&shape_i, Side::Primal, rows));
        }
    });
    let kernel_dim = dim_i - image_solver.rank().min(dim_i);

    let straight_with_condition = enumerate_straight(&shape_i)
        .iter()
        .filter(|t| t.rows().iter().all(|r| kj[r.block - 1].dominates_eq(&r.set)))
        .count();
    let straight_j = enumerate_straight(&shape_j).len();

    let literal_drop_well_defined = if mult.as_slice() == m {
        None
    } else {
        let shape_lit = Shape::ambient(n, m.to_vec())?;
        let drop = |rows: &[Row]| -> Option<(Shape, Vec<Row>)> {
            let kept: Vec<Row> = rows.iter().filter(|r| j.letters()[r.block - 1] != 0).cloned().collect();
            kept.iter().all(|r| kj[r.block - 1].dominates_eq(&r.set)).then(|| (shape_j.clone(), kept))
        };
        let (s, g) = grouped_stacked_rank(&shape_lit, drop);
        Some(s == g)
    };

    Ok(RestrictionReport {
        j: j.clone(),
        mult_in: m.to_vec(),
        mult,
        condition_blocks: live,
        void_blocks: void,
        dim_i,
        dim_j,
        well_defined,
        literal_drop_well_defined,
        kernel_dim,
        flagged_count,
        flagged_rank: flagged_solver.rank(),
        straight_with_condition,
        straight_j,
    })
}

/// `dim M(i,m) − dim M(j,m)`, the kernel dimension of the restriction.
pub fn restriction_kernel_dim(m: &[u32], j: &Word) -> Result<usize> {
    Ok(restriction_analysis(m, j)?.kernel_dim)
}

/// Human-readable kernel condition, e.g. `(r_{1,5}, r_{2,5}) ⋠ (2,3)`.
pub fn kernel_condition_text(report: &RestrictionReport) -> Vec<String> {
    let kj = crate::tableaux::column_sets(&report.j).expect("validated");
    report
        .condition_blocks
        .iter()
        .map(|&r| {
            let k = &kj[r - 1];
            let vars: Vec<String> = (1..=k.len()).map(|t| alloc::format!("r_{{{t},{r}}}")).collect();
            alloc::format!("({}) not<= {}", vars.join(","), k)
        })
        .collect()
}

/// True if `t` is straight and every row satisfies `R ⪯ K_j^(r)`.
pub fn straight_with_condition(t: &Tableau, j: &Word) -> Result<bool> {
    let kj = crate::tableaux::column_sets(j)?;
    Ok(is_straight(t) && t.rows().iter().all(|r| kj[r.block - 1].dominates_eq(&r.set)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::enumerate_tableaux;
    use alloc::vec;

    fn set(v: &[u8]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    fn ambient(n: usize, m: &[u32]) -> Shape {
        Shape::ambient(n, m.to_vec()).unwrap()
    }

    #[test]
    fn tableau_poly_examples() {
        let empty = Tableau::empty(ambient(3, &[0, 0, 0])).unwrap();
        assert_eq!(tableau_poly(&empty), Polynomial::one());
        let t = Tableau::new(ambient(3, &[1, 0, 0]), Side::Primal, vec![Row { block: 1, set: set(&[2]) }]).unwrap();
        assert_eq!(tableau_poly(&t), Polynomial::var(2, 2).unwrap());
        let shape = ambient(4, &[0, 2, 0, 0, 0, 0]);
        let mk = |a: &[u8], b: &[u8]| {
            Tableau::new(shape.clone(), Side::Primal, vec![Row { block: 2, set: set(a) }, Row { block: 2, set: set(b) }])
                .unwrap()
        };
        assert_eq!(tableau_poly(&mk(&[1, 2], &[1, 3])), tableau_poly(&mk(&[1, 3], &[1, 2])));
    }

    #[test]
    fn dim_examples() {
        let c = dim_sections(&ambient(3, &[1, 1, 1]));
        assert_eq!((c.generator_count, c.straight_count, c.rank), (18, 13, 13));
        assert!(c.pass());
        assert_eq!(dim_sections(&ambient(3, &[1, 0, 0])).rank, 2);
        assert_eq!(dim_sections(&ambient(3, &[0, 0, 0])).rank, 1);
        // the generic matrix gives a different, larger span
        let generic = span_pivots(&ambient(3, &[1, 1, 1]), Side::Primal, Realization::Generic).len();
        assert_eq!(generic, 16);
    }

    #[test]
    fn grouped_rank_matches_plain_rank() {
        for m in [[1u32, 1, 1], [2, 1, 0], [0, 2, 2]] {
            let shape = ambient(3, &m);
            let polys: Vec<Polynomial> = enumerate_tableaux(&shape).iter().map(tableau_poly).collect();
            assert_eq!(span_pivots(&shape, Side::Primal, Realization::Triangular), pivot_monomials(&polys));
        }
    }

    #[test]
    fn straightening() {
        let shape = ambient(4, &[0, 2, 0, 0, 0, 0]);
        let space = SectionSpace::new(&shape).unwrap();
        let bad = Tableau::new(
            shape.clone(),
            Side::Primal,
            vec![Row { block: 2, set: set(&[1, 2]) }, Row { block: 2, set: set(&[1, 3]) }],
        )
        .unwrap();
        let coeffs = space.straighten(&bad).unwrap();
        let k = space.basis_position(&bad).unwrap();
        assert!(crate::exactalg::is_unit_vector(&coeffs, k));
        for (i, t) in space.straight_basis.iter().enumerate() {
            assert!(crate::exactalg::is_unit_vector(&space.straighten(t).unwrap(), i));
        }
    }

    #[test]
    fn opposite_side_matches() {
        for m in [[1u32, 1, 1], [1, 0, 2]] {
            let shape = ambient(3, &m);
            assert_eq!(opposite_dim(&shape), section_rank(&shape));
            for t in enumerate_classes(&shape) {
                assert_eq!(tableau_poly(&involution(&t)), tableau_poly(&t).rotate(3));
            }
        }
    }

    #[test]
    fn phi_examples() {
        let i = longest_word(4).unwrap();
        let j = Word::new(4, vec![1, 0, 0, 0, 2, 1]).unwrap();
        let shape = ambient(4, &[1; 6]);
        let rows: Vec<Row> = [&[1u8][..], &[1, 2], &[2], &[1, 2, 3], &[2, 3], &[3]]
            .iter()
            .enumerate()
            .map(|(r, s)| Row { block: r + 1, set: set(s) })
            .collect();
        let t = Tableau::new(shape.clone(), Side::Primal, rows.clone()).unwrap();
        let PhiImage::Tableau(img) = phi(&t, &j).unwrap() else { panic!("kept rows are dominated") };
        assert_eq!(img.rows().iter().map(|r| r.block).collect::<Vec<_>>(), vec![1, 5, 6]);
        assert_eq!(img.column_set_of(&img.rows()[1]), set(&[2, 3]));
        let mut flagged = rows;
        flagged[4].set = set(&[3, 4]);
        let t = Tableau::new(shape, Side::Primal, flagged).unwrap();
        assert_eq!(phi(&t, &j).unwrap(), PhiImage::Zero);
        // j = i is the identity
        let u = enumerate_tableaux(&ambient(3, &[1, 1, 1]))[5].clone();
        assert_eq!(phi(&u, &longest_word(3).unwrap()).unwrap(), PhiImage::Tableau(u.clone()));
        let _ = i;
    }

    #[test]
    fn restriction_on_full_word_is_trivial() {
        let r = restriction_analysis(&[1, 1, 1], &longest_word(3).unwrap()).unwrap();
        assert_eq!(r.kernel_dim, 0);
        assert!(r.pass());
    }

    #[test]
    fn restriction_drops_blocks() {
        let j = Word::new(3, vec![1, 0, 0]).unwrap();
        let r = restriction_analysis(&[1, 1, 1], &j).unwrap();
        assert_eq!(r.mult, vec![1, 0, 0]);
        assert_eq!(r.dim_j, 2);
        assert!(r.literal_drop_well_defined.is_some());
    }
}
