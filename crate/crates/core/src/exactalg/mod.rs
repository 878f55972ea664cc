//! Exact polynomial arithmetic in the entries `x[r,c]` of an `n×n` matrix,
//! minors, the diagonal term order and exact linear algebra.

mod matrix;
mod monomial;
mod poly;
mod span;

pub use matrix::{bareiss_echelon, integer_rank, Echelon, ExactMatrix};
pub use monomial::{render_monomials, Monomial, VARS};
pub use poly::Polynomial;
pub use span::{
    express_in_basis, is_unit_vector, pivot_monomials, rank_of_span, BasisExpander, SpanSolver,
};

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{invalid, Error, Result};
use crate::weyl::{IndexSet, Permutation, MAX_N};

/// The term order: lexicographic in row-major variable precedence,
/// `x[1,1] ≻ x[1,2] ≻ … ≻ x[1,n] ≻ x[2,1] ≻ … ≻ x[n,n]`.
///
/// It is the derived `Ord` of [`Monomial`]; this type only names it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TermOrder;

impl TermOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> core::cmp::Ordering {
        a.cmp(b)
    }

    pub fn describe(&self) -> &'static str {
        "row-major lex: x[1,1] > x[1,2] > ... > x[1,n] > x[2,1] > ... > x[n,n]"
    }
}

fn check_sets(rows: &IndexSet, cols: &IndexSet) -> Result<()> {
    if rows.len() != cols.len() || rows.is_empty() {
        return Err(invalid(alloc::format!("minor needs |R| = |C| >= 1, got {rows} and {cols}")));
    }
    let top = rows.largest().max(cols.largest()).unwrap_or(0) as usize;
    if top > MAX_N {
        return Err(invalid(alloc::format!("index {top} exceeds the board size limit {MAX_N}")));
    }
    Ok(())
}

/// The minor `[R|C]` of the generic matrix.
pub fn minor_poly(rows: &IndexSet, cols: &IndexSet) -> Result<Polynomial> {
    minor_poly_on(rows, cols, |_, _| true)
}

/// The minor `[R|C]` of the matrix whose entries outside `support` are zero.
///
/// Leibniz expansion; distinct permutations give distinct monomials, so no
/// cancellation occurs and the diagonal term carries `+1`.
pub fn minor_poly_on(rows: &IndexSet, cols: &IndexSet, support: impl Fn(u8, u8) -> bool) -> Result<Polynomial> {
    check_sets(rows, cols)?;
    let d = rows.len();
    let (r, c) = (rows.as_slice(), cols.as_slice());
    let mut terms = Vec::new();
    for sigma in Permutation::all(d) {
        let pairs: Vec<(u8, u8)> = (0..d).map(|k| (r[k], c[sigma.apply(k as u8 + 1) as usize - 1])).collect();
        if pairs.iter().all(|&(a, b)| support(a, b)) {
            let sign = if sigma.inversions() % 2 == 0 { 1 } else { -1 };
            terms.push((Monomial::from_pairs(pairs), BigInt::from(sign)));
        }
    }
    Ok(Polynomial::from_terms(terms))
}

/// The ≻-largest monomial of `p` with its coefficient.
pub fn leading_monomial(p: &Polynomial) -> Result<(Monomial, BigInt)> {
    p.leading_term().map(|(m, c)| (*m, c.clone())).ok_or(Error::UndefinedLeadingTerm)
}

/// `p(X)` for a square matrix `X` at least as large as every variable index.
pub fn evaluate_at(p: &Polynomial, x: &ExactMatrix) -> Result<BigRational> {
    if x.nrows() != x.ncols() {
        return Err(invalid("evaluation point must be a square matrix"));
    }
    let n = x.nrows();
    let mut total = BigRational::zero();
    for (m, c) in p.terms() {
        let mut v = BigRational::from_integer(c.clone());
        for (r, col, e) in m.factors() {
            if r as usize > n || col as usize > n {
                return Err(invalid(alloc::format!("variable x[{r},{col}] outside a {n}x{n} point")));
            }
            v *= num_traits::pow(x.get(r as usize - 1, col as usize - 1).clone(), e as usize);
        }
        total += v;
    }
    Ok(total)
}

/// Integer evaluation at a row-major `n×n` integer point.
pub fn evaluate_integer(p: &Polynomial, n: usize, point: &[BigInt]) -> BigInt {
    assert_eq!(point.len(), n * n, "evaluation point has wrong size");
    let mut total = BigInt::zero();
    for (m, c) in p.terms() {
        let mut v = c.clone();
        for (r, col, e) in m.factors() {
            let x = &point[(r as usize - 1) * n + col as usize - 1];
            if x.is_zero() {
                v = BigInt::zero();
                break;
            }
            if x.is_one() {
                continue;
            }
            v *= num_traits::pow(x.clone(), e as usize);
        }
        total += v;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn set(v: &[u8]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    fn x(r: u8, c: u8) -> Polynomial {
        Polynomial::var(r, c).unwrap()
    }

    #[test]
    fn minor_examples() {
        let m = minor_poly(&set(&[1, 2]), &set(&[1, 2])).unwrap();
        assert_eq!(m, &(&x(1, 1) * &x(2, 2)) - &(&x(1, 2) * &x(2, 1)));
        assert_eq!(minor_poly(&set(&[1]), &set(&[3])).unwrap(), x(1, 3));
        let big = minor_poly(&set(&[1, 2, 4, 5]), &set(&[1, 3, 4, 6])).unwrap();
        assert_eq!(big.len(), 24);
        let (lm, lc) = leading_monomial(&big).unwrap();
        assert_eq!(lm, Monomial::from_pairs([(1, 1), (2, 3), (4, 4), (5, 6)]));
        assert!(lc.is_one());
        assert!(minor_poly(&set(&[1, 2]), &set(&[1])).is_err());
    }

    #[test]
    fn leading_monomial_examples() {
        let p = minor_poly(&set(&[1]), &set(&[2])).unwrap() * minor_poly(&set(&[1, 2]), &set(&[2, 3])).unwrap();
        let (lm, _) = leading_monomial(&p).unwrap();
        assert_eq!(lm, Monomial::from_pairs([(1, 2), (1, 2), (2, 3)]));
        let single = x(2, 3).scale(&BigInt::from(5));
        assert_eq!(leading_monomial(&single).unwrap(), (Monomial::var(2, 3).unwrap(), BigInt::from(5)));
        assert_eq!(leading_monomial(&Polynomial::zero()), Err(Error::UndefinedLeadingTerm));
    }

    #[test]
    fn evaluation_examples() {
        let m = minor_poly(&set(&[1, 2]), &set(&[1, 2])).unwrap();
        assert_eq!(evaluate_at(&m, &ExactMatrix::identity(3)).unwrap(), BigRational::one());
        assert!(evaluate_at(&m, &ExactMatrix::zeros(3, 3)).unwrap().is_zero());
        let pt = ExactMatrix::from_int_rows(&[vec![7, -2, 3], vec![1, 4, 0], vec![5, 5, 5]]).unwrap();
        assert_eq!(evaluate_at(&x(1, 1), &pt).unwrap(), BigRational::from_integer(7.into()));
        assert!(evaluate_at(&x(4, 1), &pt).is_err());
        let ints: Vec<BigInt> = [7, -2, 3, 1, 4, 0, 5, 5, 5].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(evaluate_integer(&m, 3, &ints), BigInt::from(30));
    }

    /// Cofactor expansion along the first row.
    fn cofactor(rows: &[u8], cols: &[u8]) -> Polynomial {
        if rows.len() == 1 {
            return x(rows[0], cols[0]);
        }
        let mut acc = Polynomial::zero();
        for (k, &c) in cols.iter().enumerate() {
            let rest: Vec<u8> = cols.iter().copied().filter(|&d| d != c).collect();
            let term = &x(rows[0], c) * &cofactor(&rows[1..], &rest);
            acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    #[test]
    fn minors_match_cofactor_expansion() {
        for d in 1..=4 {
            for r in IndexSet::subsets(4, d) {
                for c in IndexSet::subsets(4, d) {
                    assert_eq!(minor_poly(&r, &c).unwrap(), cofactor(r.as_slice(), c.as_slice()));
                }
            }
        }
    }

    #[test]
    fn diagonal_property_exhaustive() {
        for n in 1..=5 {
            for d in 1..=n {
                for r in IndexSet::subsets(n, d) {
                    for c in IndexSet::subsets(n, d) {
                        let (lm, lc) = leading_monomial(&minor_poly(&r, &c).unwrap()).unwrap();
                        let diag = Monomial::from_pairs(r.iter().zip(c.iter()));
                        assert_eq!(lm, diag, "minor [{r}|{c}]");
                        assert!(lc.is_one());
                    }
                }
            }
        }
    }

    #[test]
    fn restricted_support_drops_terms() {
        let upper = |r: u8, c: u8| r <= c;
        let m = minor_poly_on(&set(&[1, 2]), &set(&[2, 3]), upper).unwrap();
        assert_eq!(m, &(&x(1, 2) * &x(2, 3)) - &(&x(1, 3) * &x(2, 2)));
        let z = minor_poly_on(&set(&[2]), &set(&[1]), upper).unwrap();
        assert!(z.is_zero());
    }
}
