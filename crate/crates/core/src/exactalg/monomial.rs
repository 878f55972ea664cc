use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::weyl::MAX_N;

/// Number of variable slots; variable `x[r,c]` lives at `(r-1)*MAX_N + c-1`.
pub const VARS: usize = MAX_N * MAX_N;

/// A monomial in the matrix entries `x[r,c]`, `1 <= r, c <= MAX_N`.
///
/// Exponents are stored densely in row-major variable order, so the derived
/// `Ord` *is* the term order: lexicographic with
/// `x[1,1] ≻ x[1,2] ≻ … ≻ x[1,n] ≻ x[2,1] ≻ …`.  Unused slots are always
/// zero, which keeps the comparison independent of the board size.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: [u8; VARS],
}

#[inline]
fn slot(r: u8, c: u8) -> usize {
    debug_assert!((1..=MAX_N as u8).contains(&r) && (1..=MAX_N as u8).contains(&c));
    (r as usize - 1) * MAX_N + c as usize - 1
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; VARS] };

    pub fn one() -> Self {
        Self::ONE
    }

    pub fn var(r: u8, c: u8) -> Result<Self> {
        if r == 0 || c == 0 || r as usize > MAX_N || c as usize > MAX_N {
            return Err(invalid(alloc::format!("variable x[{r},{c}] outside the {MAX_N}x{MAX_N} board")));
        }
        let mut m = Self::ONE;
        m.exps[slot(r, c)] = 1;
        Ok(m)
    }

    /// Product of `x[r_k, c_k]` over the given pairs.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u8, u8)>) -> Self {
        let mut m = Self::ONE;
        for (r, c) in pairs {
            let e = &mut m.exps[slot(r, c)];
            *e = e.checked_add(1).expect("exponent overflow");
        }
        m
    }

    pub fn exponent(&self, r: u8, c: u8) -> u8 {
        self.exps[slot(r, c)]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Raw exponent vector in term-order precedence.
    pub fn exponents(&self) -> &[u8; VARS] {
        &self.exps
    }

    /// Checked product; `None` when an exponent would exceed 255.
    #[inline]
    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = *self;
        for (a, b) in out.exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(*b)?;
        }
        Some(out)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// Non-zero `(r, c, e)` triples in term-order precedence.
    pub fn factors(&self) -> impl Iterator<Item = (u8, u8, u8)> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| {
            ((i / MAX_N) as u8 + 1, (i % MAX_N) as u8 + 1, e)
        })
    }

    /// Total exponent carried by each matrix row.
    pub fn row_content(&self) -> [u16; MAX_N] {
        let mut out = [0u16; MAX_N];
        for (i, &e) in self.exps.iter().enumerate() {
            out[i / MAX_N] += e as u16;
        }
        out
    }

    /// Total exponent carried by each matrix column.
    pub fn col_content(&self) -> [u16; MAX_N] {
        let mut out = [0u16; MAX_N];
        for (i, &e) in self.exps.iter().enumerate() {
            out[i % MAX_N] += e as u16;
        }
        out
    }

    /// The substitution `x[r,c] ↦ x[n+1-r, n+1-c]`.
    pub fn rotate(&self, n: usize) -> Monomial {
        let n = n as u8;
        let mut out = Self::ONE;
        for (r, c, e) in self.factors() {
            out.exps[slot(n + 1 - r, n + 1 - c)] = e;
        }
        out
    }
}

impl Default for Monomial {
    fn default() -> Self {
        Self::ONE
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (r, c, e) in self.factors() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x[{r},{c}]")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Self::ONE);
        }
        let mut m = Self::ONE;
        for factor in s.split('*') {
            let bad = || invalid(alloc::format!("malformed monomial factor '{factor}'"));
            let factor = factor.trim();
            let (var, exp) = match factor.split_once('^') {
                Some((v, e)) => (v, e.trim().parse::<u8>().map_err(|_| bad())?),
                None => (factor, 1),
            };
            let inner = var.strip_prefix("x[").and_then(|v| v.strip_suffix(']')).ok_or_else(bad)?;
            let (r, c) = inner.split_once(',').ok_or_else(bad)?;
            let r: u8 = r.trim().parse().map_err(|_| bad())?;
            let c: u8 = c.trim().parse().map_err(|_| bad())?;
            let v = Monomial::var(r, c)?;
            for _ in 0..exp {
                m = m.checked_mul(&v).ok_or_else(bad)?;
            }
        }
        Ok(m)
    }
}

/// `"x[1,1]*x[2,2]"`-style rendering of a list of monomials, comma separated.
pub fn render_monomials<'a>(ms: impl IntoIterator<Item = &'a Monomial>) -> String {
    let mut s = String::new();
    for (i, m) in ms.into_iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        s.push_str(&alloc::format!("{m}"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn x(r: u8, c: u8) -> Monomial {
        Monomial::var(r, c).unwrap()
    }

    #[test]
    fn precedence() {
        assert!(x(1, 1) > x(1, 2));
        assert!(x(1, 4) > x(2, 1));
        assert!(x(2, 1) > x(2, 2));
        // lex, not degree-first
        assert!(x(1, 2) > x(2, 2).checked_mul(&x(3, 3)).unwrap());
        let a = x(1, 1).checked_mul(&x(2, 2)).unwrap();
        let b = x(1, 2).checked_mul(&x(2, 1)).unwrap();
        assert!(a > b);
    }

    #[test]
    fn text_round_trip() {
        let m = Monomial::from_pairs([(1, 1), (1, 1), (2, 3)]);
        assert_eq!(m.to_string(), "x[1,1]^2*x[2,3]");
        assert_eq!("x[1,1]^2*x[2,3]".parse::<Monomial>().unwrap(), m);
        assert_eq!("1".parse::<Monomial>().unwrap(), Monomial::ONE);
        assert!("x[0,1]".parse::<Monomial>().is_err());
        assert!("y[1,1]".parse::<Monomial>().is_err());
    }

    #[test]
    fn contents_and_rotation() {
        let m = Monomial::from_pairs([(1, 2), (2, 3), (2, 2)]);
        assert_eq!(m.row_content()[..3], [1, 2, 0]);
        assert_eq!(m.col_content()[..3], [0, 2, 1]);
        assert_eq!(m.rotate(3), Monomial::from_pairs([(3, 2), (2, 1), (2, 2)]));
        assert_eq!(m.rotate(3).rotate(3), m);
    }

    fn arb_monomial() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec((1u8..=4, 1u8..=4), 0..6).prop_map(Monomial::from_pairs)
    }

    proptest! {
        #[test]
        fn term_order_is_multiplicative(u in arb_monomial(), v in arb_monomial(), w in arb_monomial()) {
            let (uw, vw) = (u.checked_mul(&w).unwrap(), v.checked_mul(&w).unwrap());
            prop_assert_eq!(u.cmp(&v), uw.cmp(&vw));
        }

        #[test]
        fn product_degree_adds(u in arb_monomial(), v in arb_monomial()) {
            let uv = u.checked_mul(&v).unwrap();
            prop_assert_eq!(uv.degree(), u.degree() + v.degree());
            prop_assert!(u.divides(&uv) && v.divides(&uv));
        }
    }
}
