//! Symmetric groups, words in simple reflections and the Bruhat-Chevalley
//! order.
//!
//! Permutations are stored in one-line notation `(w(1), ..., w(n))` and
//! compose as functions: `word_to_perm(&[a, b]) = s_a ∘ s_b`.  Words carry
//! their board size and use the letter `0` for an omitted reflection.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{invalid, Error, Result};

/// Largest board size supported anywhere in the crate.
pub const MAX_N: usize = 6;

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(invalid(alloc::format!("board size {n} outside 1..={MAX_N}")));
    }
    Ok(())
}

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn new(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        check_n(n)?;
        let mut seen = [false; MAX_N + 1];
        for &x in &images {
            let x = x as usize;
            if x == 0 || x > n || seen[x] {
                return Err(invalid(alloc::format!("{images:?} is not a permutation of 1..{n}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n as u8).collect() }
    }

    /// The order-reversing permutation `k ↦ n + 1 - k`.
    pub fn longest(n: usize) -> Self {
        Permutation { images: (1..=n as u8).rev().collect() }
    }

    /// The simple transposition `s_k = (k, k+1)`.
    pub fn simple(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(invalid(alloc::format!("s_{k} is not a simple reflection of S_{n}")));
        }
        let mut p = Self::identity(n);
        p.images.swap(k - 1, k);
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// `w(x)` for `x` in `1..=n`.
    pub fn apply(&self, x: u8) -> u8 {
        self.images[x as usize - 1]
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different degree");
        Permutation { images: other.images.iter().map(|&x| self.apply(x)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = alloc::vec![0u8; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize - 1] = i as u8 + 1;
        }
        Permutation { images }
    }

    /// Right multiplication by `s_k`, which swaps positions `k` and `k+1`.
    pub fn times_simple(&mut self, k: u8) {
        if k > 0 {
            self.images.swap(k as usize - 1, k as usize);
        }
    }

    pub fn inversions(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|a| (a + 1..w.len()).filter(|&b| w[a] > w[b]).count())
            .sum()
    }

    /// Image of a set under the permutation, sorted.
    pub fn image_set(&self, set: &IndexSet) -> IndexSet {
        let mut elems: Vec<u8> = set.iter().map(|x| self.apply(x)).collect();
        elems.sort_unstable();
        IndexSet { elems }
    }

    /// All elements of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body.strip_prefix('[').and_then(|b| b.strip_suffix(']')).unwrap_or(body);
        Permutation::new(parse_u8_list(body)?)
    }
}

pub(crate) fn parse_u8_list(s: &str) -> Result<Vec<u8>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u8>()
                .map_err(|_| invalid(alloc::format!("'{}' is not a small nonnegative integer", t.trim())))
        })
        .collect()
}

/// A word in the simple reflections of `S_n`; letter `0` marks an omitted
/// position of a subword.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    n: usize,
    letters: Vec<u8>,
}

impl Word {
    pub fn new(n: usize, letters: Vec<u8>) -> Result<Self> {
        check_n(n)?;
        if let Some(&bad) = letters.iter().find(|&&k| k as usize >= n) {
            return Err(invalid(alloc::format!("letter {bad} is not below n = {n}")));
        }
        Ok(Word { n, letters })
    }

    pub fn parse(n: usize, s: &str) -> Result<Self> {
        Word::new(n, parse_u8_list(s)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of non-omitted letters.
    pub fn length(&self) -> usize {
        self.letters.iter().filter(|&&k| k != 0).count()
    }

    /// Partial products `s_{j_1} ⋯ s_{j_r}` for `r = 1..=len`.
    pub fn partial_products(&self) -> Vec<Permutation> {
        let mut cur = Permutation::identity(self.n);
        self.letters
            .iter()
            .map(|&k| {
                cur.times_simple(k);
                cur.clone()
            })
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// A strictly increasing subset of `{1, ..., n}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet {
    elems: Vec<u8>,
}

impl IndexSet {
    pub fn new(elems: Vec<u8>) -> Result<Self> {
        if elems.first() == Some(&0) || elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid(alloc::format!("{elems:?} is not a strictly increasing set of positive integers")));
        }
        Ok(IndexSet { elems })
    }

    /// `{1, ..., d}`.
    pub fn initial(d: usize) -> Self {
        IndexSet { elems: (1..=d as u8).collect() }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.elems
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        self.elems.iter().copied()
    }

    pub fn largest(&self) -> Option<u8> {
        self.elems.last().copied()
    }

    pub fn contains(&self, x: u8) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    /// `{n+1-x_d, ..., n+1-x_1}`.
    pub fn tilde(&self, n: usize) -> IndexSet {
        IndexSet { elems: self.elems.iter().rev().map(|&x| n as u8 + 1 - x).collect() }
    }

    /// Component-wise `self ⪰ other`.
    pub fn dominates(&self, other: &IndexSet) -> Result<bool> {
        dominates(self, other)
    }

    /// Unchecked variant for equal-size sets.
    pub(crate) fn dominates_eq(&self, other: &IndexSet) -> bool {
        self.elems.iter().zip(&other.elems).all(|(a, b)| a >= b)
    }

    /// All `d`-subsets of `{1..n}` in lexicographic order.
    pub fn subsets(n: usize, d: usize) -> Vec<IndexSet> {
        let mut out = Vec::new();
        if d > n {
            return out;
        }
        let mut cur: Vec<u8> = (1..=d as u8).collect();
        loop {
            out.push(IndexSet { elems: cur.clone() });
            let Some(i) = (0..d).rev().find(|&i| (cur[i] as usize) < n - (d - 1 - i)) else {
                break;
            };
            cur[i] += 1;
            for k in i + 1..d {
                cur[k] = cur[k - 1] + 1;
            }
        }
        out
    }

    /// All `R ⊆ {1..n}` with `|R| = |self|` and `R ⪯ self`, lexicographic.
    pub fn dominated_sets(&self, n: usize) -> Vec<IndexSet> {
        IndexSet::subsets(n, self.len()).into_iter().filter(|r| self.dominates_eq(r)).collect()
    }

    /// All `R` with `|R| = |self|` and `R ⪰ self`, lexicographic.
    pub fn dominating_sets(&self, n: usize) -> Vec<IndexSet> {
        IndexSet::subsets(n, self.len()).into_iter().filter(|r| r.dominates_eq(self)).collect()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.elems.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for IndexSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body
            .strip_prefix(['{', '(', '['])
            .and_then(|b| b.strip_suffix(['}', ')', ']']))
            .unwrap_or(body);
        IndexSet::new(parse_u8_list(body)?)
    }
}

/// The fixed reduced word `(1)(2,1)(3,2,1)⋯(n-1,…,1)` of the longest element.
pub fn longest_word(n: usize) -> Result<Word> {
    if n < 2 {
        return Err(invalid("longest word needs n >= 2"));
    }
    check_n(n)?;
    let letters = (1..n as u8).flat_map(|t| (1..=t).rev()).collect();
    Ok(Word { n, letters })
}

/// `s_{j_1} s_{j_2} ⋯ s_{j_ℓ}` with `s_0` the identity.
pub fn word_to_perm(word: &Word) -> Permutation {
    let mut p = Permutation::identity(word.n);
    for &k in &word.letters {
        p.times_simple(k);
    }
    p
}

/// True iff the non-omitted letters form a reduced expression.
pub fn is_reduced(word: &Word) -> bool {
    word.length() == word_to_perm(word).inversions()
}

/// `(w(1), ..., w(d))↑`.
pub fn uparrow(w: &Permutation, d: usize) -> Result<IndexSet> {
    if d == 0 || d > w.n() {
        return Err(invalid(alloc::format!("prefix length {d} outside 1..={}", w.n())));
    }
    let mut elems = w.images[..d].to_vec();
    elems.sort_unstable();
    Ok(IndexSet { elems })
}

/// `a ⪰ b` component-wise.
pub fn dominates(a: &IndexSet, b: &IndexSet) -> Result<bool> {
    if a.len() != b.len() {
        return Err(invalid(alloc::format!("cannot compare {a} with {b}: sizes differ")));
    }
    Ok(a.dominates_eq(b))
}

/// `lower ≤ upper` in the Bruhat-Chevalley order, tested on the sorted
/// prefixes of length `1..n-1`.
pub fn bruhat_leq(lower: &Permutation, upper: &Permutation) -> bool {
    assert_eq!(lower.n(), upper.n(), "Bruhat comparison across different S_n");
    let n = lower.n();
    let (mut a, mut b) = (Vec::with_capacity(n), Vec::with_capacity(n));
    for d in 1..n {
        a.clear();
        a.extend_from_slice(&upper.images[..d]);
        a.sort_unstable();
        b.clear();
        b.extend_from_slice(&lower.images[..d]);
        b.sort_unstable();
        if a.iter().zip(&b).any(|(x, y)| x < y) {
            return false;
        }
    }
    true
}

/// True iff every letter of `j` equals the letter of `i` or is `0`.
pub fn is_subword(j: &Word, i: &Word) -> Result<bool> {
    if j.len() != i.len() || j.n != i.n {
        return Err(invalid(alloc::format!("subword length {} differs from {}", j.len(), i.len())));
    }
    Ok(j.letters.iter().zip(&i.letters).all(|(&a, &b)| a == 0 || a == b))
}

/// All reduced subwords of the longest word, in order of their 0/1 masks.
pub fn reduced_subwords(n: usize) -> Result<Vec<Word>> {
    let i = longest_word(n)?;
    let len = i.len();
    let mut out = Vec::new();
    for mask in 0u32..(1 << len) {
        let letters = (0..len)
            .map(|r| if mask & (1 << (len - 1 - r)) != 0 { i.letters[r] } else { 0 })
            .collect();
        let j = Word { n, letters };
        if is_reduced(&j) {
            out.push(j);
        }
    }
    Ok(out)
}

/// Human-readable summary `"s_1 s_2 s_1"` used in reports.
pub fn word_expression(word: &Word) -> String {
    let mut s = String::new();
    for &k in word.letters.iter().filter(|&&k| k != 0) {
        if !s.is_empty() {
            s.push(' ');
        }
        s.push_str(&alloc::format!("s_{k}"));
    }
    if s.is_empty() {
        s.push('e');
    }
    s
}
