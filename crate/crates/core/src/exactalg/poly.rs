use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::monomial::Monomial;
use crate::error::{invalid, Error, Result};

/// A polynomial with integer coefficients in the variables `x[r,c]`.
///
/// Terms are kept sorted by the term order, largest first, with no zero
/// coefficients; the leading term is therefore `terms[0]`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, BigInt)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::ONE, BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(Monomial::ONE, c.into())
    }

    pub fn monomial(m: Monomial, c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial { terms: alloc::vec![(m, c)] }
        }
    }

    pub fn var(r: u8, c: u8) -> Result<Self> {
        Ok(Self::monomial(Monomial::var(r, c)?, BigInt::one()))
    }

    /// Builds a polynomial from arbitrary terms, merging repeats.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut terms: Vec<_> = terms.into_iter().collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, BigInt)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending term order.
    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_default()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|(m, _)| m)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    /// True when every term has the same row content and the same column
    /// content (so the polynomial lies in a single weight space).
    pub fn weight(&self) -> Option<([u16; crate::weyl::MAX_N], [u16; crate::weyl::MAX_N])> {
        let (first, _) = self.terms.first()?;
        let w = (first.row_content(), first.col_content());
        self.terms
            .iter()
            .all(|(m, _)| m.row_content() == w.0 && m.col_content() == w.1)
            .then_some(w)
    }

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        if k.is_zero() {
            return Self::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect() }
    }

    /// `a·self − b·other`, the fraction-free elimination step.
    pub fn combine(&self, a: &BigInt, other: &Polynomial, b: &BigInt) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (x, y) = (&self.terms, &other.terms);
        while i < x.len() || j < y.len() {
            let ord = match (x.get(i), y.get(j)) {
                (Some(p), Some(q)) => q.0.cmp(&p.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push((x[i].0, &x[i].1 * a));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((y[j].0, -(&y[j].1 * b)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &x[i].1 * a - &y[j].1 * b;
                    if !c.is_zero() {
                        out.push((x[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { terms: out }
    }

    /// Gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact division of every coefficient by `d`.
    pub fn div_exact(&self, d: &BigInt) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (*m, c / d)).collect() }
    }

    /// Primitive part with a positive leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        let mut g = self.content();
        if g.is_zero() {
            return Self::zero();
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        self.div_exact(&g)
    }

    /// The substitution `x[r,c] ↦ x[n+1-r, n+1-c]`.
    pub fn rotate(&self, n: usize) -> Polynomial {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.rotate(n), c.clone())))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn mul_small(&self, other: &Polynomial) -> Option<Polynomial> {
        let xs: Vec<i128> = self.terms.iter().map(|(_, c)| c.to_i128()).collect::<Option<_>>()?;
        let ys: Vec<i128> = other.terms.iter().map(|(_, c)| c.to_i128()).collect::<Option<_>>()?;
        let mut prods: Vec<(Monomial, i128)> = Vec::with_capacity(xs.len() * ys.len());
        for ((m, _), a) in self.terms.iter().zip(&xs) {
            for ((n, _), b) in other.terms.iter().zip(&ys) {
                prods.push((m.checked_mul(n).expect("exponent overflow"), a.checked_mul(*b)?));
            }
        }
        prods.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut terms: Vec<(Monomial, BigInt)> = Vec::with_capacity(prods.len());
        let mut it = prods.into_iter().peekable();
        while let Some((m, mut c)) = it.next() {
            while let Some((n, d)) = it.peek() {
                if *n != m {
                    break;
                }
                c = c.checked_add(*d)?;
                it.next();
            }
            if c != 0 {
                terms.push((m, BigInt::from(c)));
            }
        }
        Some(Polynomial { terms })
    }

    fn mul_big(&self, other: &Polynomial) -> Polynomial {
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                prods.push((m.checked_mul(n).expect("exponent overflow"), a * b));
            }
        }
        Self::from_terms(prods)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn mul(self, other: &'a Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        self.mul_small(other).unwrap_or_else(|| self.mul_big(other))
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, other: Polynomial) -> Polynomial {
        &self * &other
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn add(self, other: &'a Polynomial) -> Polynomial {
        self.combine(&BigInt::one(), other, &BigInt::from(-1))
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(self, other: Polynomial) -> Polynomial {
        &self + &other
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn sub(self, other: &'a Polynomial) -> Polynomial {
        self.combine(&BigInt::one(), other, &BigInt::one())
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;

    fn sub(self, other: Polynomial) -> Polynomial {
        &self - &other
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl fmt::Display for Polynomial {
    /// `x[1,1]*x[2,2] - x[1,2]*x[2,1]`; coefficients other than ±1 are
    /// written as `3*x[1,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        // Split into signed chunks at top-level '+'/'-' separators.
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for ch in s.chars() {
            match ch {
                '+' | '-' => {
                    if !cur.trim().is_empty() {
                        chunks.push((neg, core::mem::take(&mut cur)));
                    } else if !chunks.is_empty() || !cur.is_empty() {
                        return Err(invalid(alloc::format!("dangling sign in '{s}'")));
                    }
                    neg = ch == '-';
                }
                _ => cur.push(ch),
            }
        }
        if cur.trim().is_empty() {
            return Err(invalid(alloc::format!("trailing sign in '{s}'")));
        }
        chunks.push((neg, cur));
        let mut terms = Vec::with_capacity(chunks.len());
        for (neg, chunk) in chunks {
            let chunk = chunk.trim();
            let (coef, mono) = match chunk.split_once('*') {
                Some((head, rest)) if !head.starts_with('x') => (head.trim(), rest),
                _ if !chunk.starts_with('x') => (chunk, "1"),
                _ => ("1", chunk),
            };
            let mut c: BigInt = coef
                .parse()
                .map_err(|_| invalid(alloc::format!("bad coefficient '{coef}'")))?;
            if neg {
                c = -c;
            }
            terms.push((mono.parse::<Monomial>()?, c));
        }
        Ok(Self::from_terms(terms))
    }
}
