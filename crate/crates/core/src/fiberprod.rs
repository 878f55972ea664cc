//! The Richardson coordinate ring `A`, the maps `φ_j` and `φ^k` into the
//! section rings of two subwords, and graded pieces of the coproduct
//! `R_j ⊗_A S^k`.
//!
//! The coproduct is graded by total degree: the ideal generators
//! `φ_j(a)⊗1 − 1⊗φ^k(a)` are homogeneous only for that grading.  Elements of
//! `R_q` and `S_q` are stored as coordinate vectors over straight bases.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{invalid, Error, Result};
use crate::exactalg::{integer_rank, Monomial, Polynomial};
use crate::sections::flag::{richardson_monomials, FlagMonomial};
use crate::sections::{span_pivots, PhiImage, Realization, SectionSpace};
use crate::tableaux::{involution, Row, Shape, Side, Tableau};
use crate::weyl::{bruhat_leq, word_to_perm, IndexSet, Permutation, Word};

/// `m_0`: the last `n−1` entries of `m`.  Entry `t` belongs to the letter
/// `n−t` of the longest word, i.e. to the Grassmannian of `(n−t)`-planes.
pub fn m_zero(m: &[u32], n: usize) -> Result<Vec<u32>> {
    let ell = n * (n - 1) / 2;
    if n < 2 || m.len() != ell {
        return Err(invalid(alloc::format!("multiplicity needs {ell} entries for n = {n}")));
    }
    Ok(m[ell + 1 - n..].to_vec())
}

/// Reindexes `m_0` by the size `d = n − t` of the flag minors.
pub fn flag_mult(m0: &[u32]) -> Vec<u32> {
    m0.iter().rev().copied().collect()
}

/// `A = ⊕_q H^0(X_w^v, O(q·m_0))` through its standard monomials, with
/// `w = w_j` and `v = w_i·w_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RichardsonRing {
    pub w: Permutation,
    pub v: Permutation,
    pub m0: Vec<u32>,
    /// Degree-one basis.
    pub basis: Vec<FlagMonomial>,
}

impl RichardsonRing {
    pub fn new(j: &Word, k: &Word, m: &[u32]) -> Result<Self> {
        let n = j.n();
        if k.n() != n {
            return Err(invalid("j and k are words for different n"));
        }
        let w = word_to_perm(j);
        let v = Permutation::longest(n).compose(&word_to_perm(k));
        let m0 = m_zero(m, n)?;
        let basis = richardson_monomials(&w, &v, &flag_mult(&m0))?;
        Ok(RichardsonRing { w, v, m0, basis })
    }

    pub fn is_empty(&self) -> bool {
        !bruhat_leq(&self.v, &self.w)
    }

    /// Standard monomials of degree `q·m_0`.
    pub fn degree(&self, q: u32) -> Result<Vec<FlagMonomial>> {
        let m: Vec<u32> = flag_mult(&self.m0).iter().map(|&x| x * q).collect();
        richardson_monomials(&self.w, &self.v, &m)
    }
}

/// `φ_j(T)` as a tableau of shape `(j, q·m)`: the first `ℓ+1−n` blocks carry
/// bottom-justified rows `{1..|K_j^(r)|}`, and the `d`-subsets of `T` go into
/// block `ℓ+1−d`.
pub fn varphi_tableau(t: &FlagMonomial, shape: &Shape, q: u32) -> Result<PhiImage> {
    let n = shape.n();
    let ell = shape.len();
    if t.n() != n {
        return Err(invalid("flag monomial and shape disagree on n"));
    }
    let target = shape.scaled(q);
    let mut by_size: BTreeMap<usize, Vec<&IndexSet>> = BTreeMap::new();
    for r in t.rows() {
        by_size.entry(r.len()).or_default().push(r);
    }
    let mut rows = Vec::new();
    let mut zero = false;
    for block in 1..=ell {
        let copies = target.mult()[block - 1] as usize;
        let k = target.column_set(block);
        if block + n <= ell + 1 {
            rows.extend((0..copies).map(|_| Row { block, set: IndexSet::initial(k.len()) }));
            continue;
        }
        let d = ell + 1 - block;
        let given = by_size.get(&d).map_or(&[][..], Vec::as_slice);
        if given.len() != copies || (copies > 0 && k.len() != d) {
            return Err(invalid(alloc::format!(
                "flag monomial {t} does not fit block {block} of {target} ({} rows of size {d}, need {copies} of size {})",
                given.len(),
                k.len()
            )));
        }
        for r in given {
            zero |= !k.dominates_eq(r);
            rows.push(Row { block, set: (*r).clone() });
        }
    }
    if zero {
        return Ok(PhiImage::Zero);
    }
    Ok(PhiImage::Tableau(Tableau::new(target, Side::Primal, rows)?))
}

/// `φ^k(T) = w_i(φ_k(T))`: the involution of the `k`-side image.
pub fn varphi_opposite_tableau(t: &FlagMonomial, shape_k: &Shape, q: u32) -> Result<PhiImage> {
    Ok(match varphi_tableau(t, shape_k, q)? {
        PhiImage::Tableau(x) => PhiImage::Tableau(involution(&x)),
        PhiImage::Zero => PhiImage::Zero,
    })
}

fn image_poly(img: &PhiImage) -> Polynomial {
    match img {
        PhiImage::Tableau(t) => crate::sections::tableau_poly(t),
        PhiImage::Zero => Polynomial::zero(),
    }
}

/// `φ_j(T)` expanded over the straight basis of `M(j, q·m)`.
pub fn varphi_j(t: &FlagMonomial, space: &SectionSpace, q: u32, base: &Shape) -> Result<Vec<BigRational>> {
    space.coordinates(&image_poly(&varphi_tableau(t, base, q)?))
}

/// `φ^k(T)` expanded over the straight basis of `w_i(M(k, q·m))`.
pub fn varphi_k(t: &FlagMonomial, space: &SectionSpace, q: u32, base: &Shape) -> Result<Vec<BigRational>> {
    space.coordinates(&image_poly(&varphi_opposite_tableau(t, base, q)?))
}

/// Rank of rational row vectors.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let int_rows: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .filter(|r: &Vec<BigInt>| r.iter().any(|x| !x.is_zero()))
        .collect();
    integer_rank(int_rows)
}

/// Injectivity of `φ_j` and `φ^k` on `A_q`, by rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Injectivity {
    pub q: u32,
    pub basis_size: usize,
    pub rank_j: usize,
    pub rank_k: usize,
    /// Rank of the stacked pairs `(φ_j(a), φ^k(a))`.
    pub rank_pairs: usize,
}

impl Injectivity {
    pub fn pass(&self) -> bool {
        self.rank_j == self.basis_size && self.rank_k == self.basis_size
    }
}

/// One graded piece of the coproduct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoproductPiece {
    pub p: u32,
    /// `(q, dim R_q, dim S_{p−q})` for each bidegree.
    pub bidegrees: Vec<(u32, usize, usize)>,
    /// `Σ_q dim R_q · dim S_{p−q}`.
    pub numerator: usize,
    /// Relations from `A_1` only.
    pub relation_rank: usize,
    pub dim: usize,
    /// Rank after adding the `A_2` generators (`p ≥ 2`).
    pub augmented_rank: Option<usize>,
    /// Dimension of the same piece with every input replaced by its
    /// leading monomial.
    pub toric_dim: Option<usize>,
}

impl CoproductPiece {
    pub fn stability_pass(&self) -> bool {
        self.augmented_rank.is_none_or(|r| r == self.relation_rank)
    }
}

/// Section spaces and Richardson data for one triple `(j, k, m)`.
pub struct FiberProduct {
    pub j: Word,
    pub k: Word,
    pub m: Vec<u32>,
    pub shape_j: Shape,
    pub shape_k: Shape,
    pub ring: RichardsonRing,
    r: Vec<SectionSpace>,
    s: Vec<SectionSpace>,
}

impl FiberProduct {
    pub fn new(j: &Word, k: &Word, m: &[u32]) -> Result<Self> {
        let shape_j = Shape::new(j.clone(), m.to_vec())?;
        let shape_k = Shape::new(k.clone(), m.to_vec())?;
        let ring = RichardsonRing::new(j, k, m)?;
        if ring.is_empty() {
            return Err(Error::EmptyFiber(alloc::format!(
                "v = {} is not below w = {} in the Bruhat order",
                ring.v,
                ring.w
            )));
        }
        Ok(FiberProduct { j: j.clone(), k: k.clone(), m: m.to_vec(), shape_j, shape_k, ring, r: Vec::new(), s: Vec::new() })
    }

    /// Builds `R_0..R_q` and `S_0..S_q`.
    fn ensure(&mut self, q: u32) -> Result<()> {
        while self.r.len() <= q as usize {
            let d = self.r.len() as u32;
            self.r.push(SectionSpace::new(&self.shape_j.scaled(d))?);
            self.s.push(SectionSpace::opposite(&self.shape_k.scaled(d))?);
        }
        Ok(())
    }

    pub fn r(&mut self, q: u32) -> Result<&SectionSpace> {
        self.ensure(q)?;
        Ok(&self.r[q as usize])
    }

    pub fn s(&mut self, q: u32) -> Result<&SectionSpace> {
        self.ensure(q)?;
        Ok(&self.s[q as usize])
    }

    fn images(&self, g: u32) -> Result<(Vec<FlagMonomial>, Vec<Polynomial>, Vec<Polynomial>)> {
        let a = self.ring.degree(g)?;
        let pj = a.iter().map(|t| Ok(image_poly(&varphi_tableau(t, &self.shape_j, g)?))).collect::<Result<_>>()?;
        let pk = a
            .iter()
            .map(|t| Ok(image_poly(&varphi_opposite_tableau(t, &self.shape_k, g)?)))
            .collect::<Result<_>>()?;
        Ok((a, pj, pk))
    }

    pub fn injectivity(&mut self, q: u32) -> Result<Injectivity> {
        self.ensure(q)?;
        let (a, pj, pk) = self.images(q)?;
        let cj: Vec<Vec<BigRational>> = pj.iter().map(|p| self.r[q as usize].coordinates(p)).collect::<Result<_>>()?;
        let ck: Vec<Vec<BigRational>> = pk.iter().map(|p| self.s[q as usize].coordinates(p)).collect::<Result<_>>()?;
        let pairs: Vec<Vec<BigRational>> =
            cj.iter().zip(&ck).map(|(x, y)| x.iter().cloned().chain(y.iter().map(|c| -c)).collect()).collect();
        Ok(Injectivity {
            q,
            basis_size: a.len(),
            rank_j: rational_rank(&cj),
            rank_k: rational_rank(&ck),
            rank_pairs: rational_rank(&pairs),
        })
    }

    /// Relation rows contributed by generators of degree `g` to piece `p`.
    fn relations(&self, p: u32, g: u32, offsets: &BTreeMap<u32, usize>, width: usize) -> Result<Vec<Vec<BigRational>>> {
        let (_, pj, pk) = self.images(g)?;
        let mut rows = Vec::new();
        for q in 0..=p - g {
            let q2 = p - g - q;
            let (rq, rqg) = (&self.r[q as usize], &self.r[(q + g) as usize]);
            let (sq, sqg) = (&self.s[q2 as usize], &self.s[(q2 + g) as usize]);
            for (fj, fk) in pj.iter().zip(&pk) {
                // φ_j(a)·u for every basis u of R_q, φ^k(a)·v' for every v' of S_q'
                let left: Vec<Vec<BigRational>> =
                    rq.polynomials.iter().map(|u| rqg.coordinates(&(fj * u))).collect::<Result<_>>()?;
                let right: Vec<Vec<BigRational>> =
                    sq.polynomials.iter().map(|v| sqg.coordinates(&(fk * v))).collect::<Result<_>>()?;
                for (u, lu) in left.iter().enumerate() {
                    for (v, rv) in right.iter().enumerate() {
                        let mut row = alloc::vec![BigRational::zero(); width];
                        let base = offsets[&(q + g)];
                        for (x, c) in lu.iter().enumerate() {
                            if !c.is_zero() {
                                row[base + x * sq.dim + v] += c;
                            }
                        }
                        let base = offsets[&q];
                        for (y, c) in rv.iter().enumerate() {
                            if !c.is_zero() {
                                row[base + u * sqg.dim + y] -= c;
                            }
                        }
                        rows.push(row);
                    }
                }
            }
        }
        Ok(rows)
    }

    /// Piece `p` of the coproduct; `stability` adds the `A_2` generators and
    /// `toric` computes the leading-monomial shadow.
    pub fn piece(&mut self, p: u32, stability: bool, toric: bool) -> Result<CoproductPiece> {
        self.ensure(p)?;
        let mut offsets = BTreeMap::new();
        let mut bidegrees = Vec::new();
        let mut width = 0;
        for q in 0..=p {
            offsets.insert(q, width);
            let (a, b) = (self.r[q as usize].dim, self.s[(p - q) as usize].dim);
            bidegrees.push((q, a, b));
            width += a * b;
        }
        let mut rows = if p >= 1 { self.relations(p, 1, &offsets, width)? } else { Vec::new() };
        let relation_rank = rational_rank(&rows);
        let augmented_rank = if stability && p >= 2 {
            rows.extend(self.relations(p, 2, &offsets, width)?);
            Some(rational_rank(&rows))
        } else {
            None
        };
        let toric_dim = if toric { Some(self.toric_dim(p)?) } else { None };
        Ok(CoproductPiece {
            p,
            bidegrees,
            numerator: width,
            relation_rank,
            dim: width - relation_rank,
            augmented_rank,
            toric_dim,
        })
    }

    /// The same piece with `R_q`, `S_q` replaced by their initial spaces and
    /// `φ(a)` by its leading monomial.  Relations become differences of two
    /// basis tensors, so the rank is a spanning-forest count.
    pub fn toric_dim(&mut self, p: u32) -> Result<usize> {
        self.ensure(p)?;
        let lms = |shape: &Shape, side: Side| -> BTreeMap<Monomial, usize> {
            let mut v = span_pivots(shape, side, Realization::Triangular);
            v.reverse();
            v.into_iter().enumerate().map(|(i, m)| (m, i)).collect()
        };
        let r: Vec<BTreeMap<Monomial, usize>> = (0..=p).map(|q| lms(&self.shape_j.scaled(q), Side::Primal)).collect();
        let s: Vec<BTreeMap<Monomial, usize>> = (0..=p).map(|q| lms(&self.shape_k.scaled(q), Side::Opposite)).collect();
        let mut offsets = Vec::new();
        let mut width = 0;
        for q in 0..=p as usize {
            offsets.push(width);
            width += r[q].len() * s[p as usize - q].len();
        }
        if p == 0 {
            return Ok(width);
        }
        let (_, pj, pk) = self.images(1)?;
        let lead = |f: &Polynomial| f.leading_term().map(|(m, _)| *m);
        let mut parent: Vec<usize> = (0..width).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut rank = 0;
        let missing = |m: Monomial| Error::TheoremViolation(alloc::format!("{m} is not an initial monomial"));
        for (fj, fk) in pj.iter().zip(&pk) {
            let (Some(aj), Some(ak)) = (lead(fj), lead(fk)) else { continue };
            for q in 0..p as usize {
                let q2 = p as usize - 1 - q;
                for (x, &xi) in &r[q] {
                    let ax = aj.checked_mul(x).expect("exponent overflow");
                    let axi = *r[q + 1].get(&ax).ok_or_else(|| missing(ax))?;
                    for (y, &yi) in &s[q2] {
                        let ay = ak.checked_mul(y).expect("exponent overflow");
                        let ayi = *s[q2 + 1].get(&ay).ok_or_else(|| missing(ay))?;
                        let e1 = offsets[q + 1] + axi * s[q2].len() + yi;
                        let e2 = offsets[q] + xi * s[q2 + 1].len() + ayi;
                        let (a, b) = (find(&mut parent, e1), find(&mut parent, e2));
                        if a != b {
                            parent[a] = b;
                            rank += 1;
                        }
                    }
                }
            }
        }
        Ok(width - rank)
    }
}

/// Piece `p` of `R_j ⊗_A S^k` with the `A_2` stability check.
pub fn coproduct_piece(j: &Word, k: &Word, m: &[u32], p: u32) -> Result<CoproductPiece> {
    FiberProduct::new(j, k, m)?.piece(p, true, false)
}
