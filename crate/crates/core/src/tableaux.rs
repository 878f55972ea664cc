//! Column sets, tableaux of shape `(j, m)`, their grids, straightness and
//! the opposite-side involution.
//!
//! A tableau is a stack of rows listed bottom to top.  On the primal side
//! row `(r, R)` stands for the minor `[R : K_j^(r)]` and blocks appear in
//! increasing order; on the opposite side (the image of the involution) the
//! column set is `K̃_j^(r)` and blocks appear in decreasing order.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{invalid, Error, Result};
use crate::weyl::{is_reduced, is_subword, longest_word, parse_u8_list, IndexSet, Word};

/// `K_j^(r)`: the partial product `s_{j_1}⋯s_{j_r}` applied to
/// `{1, …, j_r}`; empty where `j_r = 0`.
pub fn column_sets(j: &Word) -> Result<Vec<IndexSet>> {
    let i = longest_word(j.n())?;
    if !is_subword(j, &i)? {
        return Err(invalid(alloc::format!("({j}) is not a subword of ({i})")));
    }
    Ok(j.partial_products()
        .iter()
        .zip(j.letters())
        .map(|(w, &k)| if k == 0 { IndexSet::default() } else { w.image_set(&IndexSet::initial(k as usize)) })
        .collect())
}

/// A shape `(j, m)`: a reduced subword of the fixed longest word and a
/// multiplicity for each of its positions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape {
    word: Word,
    mult: Vec<u32>,
    columns: Vec<IndexSet>,
}

impl Shape {
    pub fn new(word: Word, mult: Vec<u32>) -> Result<Self> {
        if mult.len() != word.len() {
            return Err(invalid(alloc::format!(
                "multiplicity vector has {} entries, the word has {}",
                mult.len(),
                word.len()
            )));
        }
        let columns = column_sets(&word)?;
        if !is_reduced(&word) {
            return Err(invalid(alloc::format!("({word}) is not reduced")));
        }
        if let Some(r) = (0..mult.len()).find(|&r| word.letters()[r] == 0 && mult[r] != 0) {
            return Err(invalid(alloc::format!("m_{} must be 0 at an omitted letter", r + 1)));
        }
        Ok(Shape { word, mult, columns })
    }

    /// Shape `(i, m)` on the full longest word.
    pub fn ambient(n: usize, mult: Vec<u32>) -> Result<Self> {
        Shape::new(longest_word(n)?, mult)
    }

    pub fn parse(n: usize, word: &str, mult: &str) -> Result<Self> {
        let mult = parse_u8_list(mult)?.into_iter().map(u32::from).collect();
        Shape::new(Word::parse(n, word)?, mult)
    }

    pub fn n(&self) -> usize {
        self.word.n()
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn mult(&self) -> &[u32] {
        &self.mult
    }

    /// Number of blocks `ℓ`.
    pub fn len(&self) -> usize {
        self.mult.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    /// `K_j^(r)` for `r = 1..=ℓ` (index `r-1`).
    pub fn column_set(&self, r: usize) -> &IndexSet {
        &self.columns[r - 1]
    }

    pub fn column_sets(&self) -> &[IndexSet] {
        &self.columns
    }

    /// `|m|`, the number of rows of every tableau of this shape.
    pub fn height(&self) -> usize {
        self.mult.iter().map(|&m| m as usize).sum()
    }

    /// `(j, p·m)`.
    pub fn scaled(&self, p: u32) -> Shape {
        Shape { word: self.word.clone(), mult: self.mult.iter().map(|&m| m * p).collect(), columns: self.columns.clone() }
    }

    /// Same multiplicities on another word; `m` must vanish where it omits.
    pub fn with_word(&self, word: Word) -> Result<Shape> {
        Shape::new(word, self.mult.clone())
    }

    /// Block index of each row, bottom to top, for the given side.
    pub fn row_blocks(&self, side: Side) -> Vec<usize> {
        let mut out: Vec<usize> =
            (1..=self.len()).flat_map(|r| core::iter::repeat_n(r, self.mult[r - 1] as usize)).collect();
        if side == Side::Opposite {
            out.reverse();
        }
        out
    }

    /// Rowsets allowed in block `r` on the given side, lexicographic.
    pub fn admissible_rows(&self, r: usize, side: Side) -> Vec<IndexSet> {
        let k = self.column_set(r);
        match side {
            Side::Primal => k.dominated_sets(self.n()),
            Side::Opposite => k.tilde(self.n()).dominating_sets(self.n()),
        }
    }

    /// `∏_r (#admissible rows)^{m_r}`: the number of ordered tableaux.
    pub fn tableau_count(&self) -> u128 {
        (1..=self.len())
            .map(|r| (self.admissible_rows(r, Side::Primal).len() as u128).pow(self.mult[r - 1]))
            .product()
    }

    /// `∏_r C(c_r + m_r − 1, m_r)`: the number of within-block multisets.
    pub fn class_count(&self) -> u128 {
        (1..=self.len())
            .map(|r| multichoose(self.admissible_rows(r, Side::Primal).len() as u128, self.mult[r - 1] as u128))
            .product()
    }
}

fn multichoose(c: u128, m: u128) -> u128 {
    if m == 0 {
        return 1;
    }
    if c == 0 {
        return 0;
    }
    // C(c + m - 1, m)
    let mut acc: u128 = 1;
    for t in 0..m {
        acc = acc * (c + t) / (t + 1);
    }
    acc
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "j={}; m=", self.word)?;
        for (i, m) in self.mult.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Which family of column sets a tableau uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Side {
    /// Columns `K_j^(r)`, blocks increasing bottom to top.
    #[default]
    Primal,
    /// Columns `K̃_j^(r)`, blocks decreasing bottom to top.
    Opposite,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Primal => Side::Opposite,
            Side::Opposite => Side::Primal,
        }
    }
}

/// One row of a tableau: a rowset attached to block `block` (1-based).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Row {
    pub block: usize,
    pub set: IndexSet,
}

/// A row-standard tableau of a given shape and side.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    shape: Shape,
    side: Side,
    rows: Vec<Row>,
}

impl Tableau {
    /// Validates block order and counts, row sizes and dominance.
    pub fn new(shape: Shape, side: Side, rows: Vec<Row>) -> Result<Self> {
        let blocks = shape.row_blocks(side);
        if blocks.len() != rows.len() || blocks.iter().zip(&rows).any(|(&b, row)| b != row.block) {
            return Err(invalid(alloc::format!("row blocks do not match the shape {shape}")));
        }
        let n = shape.n();
        for row in &rows {
            let k = shape.column_set(row.block);
            if row.set.len() != k.len() || row.set.largest().is_some_and(|x| x as usize > n) {
                return Err(invalid(alloc::format!("row {} does not fit block {}", row.set, row.block)));
            }
            let ok = match side {
                Side::Primal => k.dominates_eq(&row.set),
                Side::Opposite => row.set.dominates_eq(&k.tilde(n)),
            };
            if !ok {
                return Err(invalid(alloc::format!("row {} violates dominance in block {}", row.set, row.block)));
            }
        }
        Ok(Tableau { shape, side, rows })
    }

    pub(crate) fn from_parts(shape: Shape, side: Side, rows: Vec<Row>) -> Self {
        Tableau { shape, side, rows }
    }

    pub fn empty(shape: Shape) -> Result<Self> {
        Tableau::new(shape, Side::Primal, Vec::new())
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Rows bottom to top.
    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    /// The column set actually occupied by `row` on this tableau's side.
    pub fn column_set_of(&self, row: &Row) -> IndexSet {
        let k = self.shape.column_set(row.block);
        match self.side {
            Side::Primal => k.clone(),
            Side::Opposite => k.tilde(self.n()),
        }
    }

    pub fn grid(&self) -> Grid {
        Grid::from_tableau(self)
    }

    /// Canonical within-block arrangement: rowsets lexicographically
    /// non-increasing from bottom to top inside each block.
    pub fn canonical(&self) -> Tableau {
        let mut rows = self.rows.clone();
        let mut start = 0;
        while start < rows.len() {
            let b = rows[start].block;
            let end = start + rows[start..].iter().take_while(|r| r.block == b).count();
            rows[start..end].sort_by(|a, b| b.set.cmp(&a.set));
            start = end;
        }
        Tableau { shape: self.shape.clone(), side: self.side, rows }
    }

    /// True iff two tableaux differ only by reordering rows within blocks.
    pub fn same_class(&self, other: &Tableau) -> bool {
        self.canonical() == other.canonical()
    }
}

/// A `|m| × n` grid; row 1 is the bottom row, column 1 the leftmost.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    n: usize,
    cells: Vec<Vec<Option<u8>>>,
}

impl Grid {
    pub fn from_tableau(t: &Tableau) -> Grid {
        let n = t.n();
        let cells = t
            .rows
            .iter()
            .map(|row| {
                let mut line = alloc::vec![None; n];
                for (c, r) in t.column_set_of(row).iter().zip(row.set.iter()) {
                    line[c as usize - 1] = Some(r);
                }
                line
            })
            .collect();
        Grid { n, cells }
    }

    pub fn height(&self) -> usize {
        self.cells.len()
    }

    pub fn width(&self) -> usize {
        self.n
    }

    /// Entry at row `a` (bottom-up) and column `k`, both 1-based.
    pub fn cell(&self, a: usize, k: usize) -> Option<u8> {
        self.cells.get(a.wrapping_sub(1))?.get(k.wrapping_sub(1)).copied().flatten()
    }
}

/// Which of two vertically paired cells must carry the witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Orientation {
    /// The upper cell may exceed the lower one only if the cell left of the
    /// upper one exists and is at least the lower entry.  This is the
    /// reading under which straight tableaux match the rank of the span.
    #[default]
    TopDown,
    /// The lower cell may exceed the upper one only if the cell left of the
    /// lower one exists and is at least the upper entry.
    BottomUp,
}

/// Straightness with the default orientation.
pub fn is_straight(t: &Tableau) -> bool {
    is_straight_with(t, Orientation::TopDown)
}

/// The column condition over all pairs of occupied cells in a column.
pub fn is_straight_with(t: &Tableau, orientation: Orientation) -> bool {
    grid_is_straight(&t.grid(), orientation)
}

pub fn grid_is_straight(g: &Grid, orientation: Orientation) -> bool {
    let h = g.height();
    for k in 1..=g.width() {
        for a in 1..=h {
            let Some(lo) = g.cell(a, k) else { continue };
            for b in a + 1..=h {
                let Some(hi) = g.cell(b, k) else { continue };
                // (big, witness row, small)
                let (big, wrow, small) = match orientation {
                    Orientation::TopDown => (hi, b, lo),
                    Orientation::BottomUp => (lo, a, hi),
                };
                if big > small {
                    match g.cell(wrow, k.wrapping_sub(1)) {
                        Some(w) if w >= small => {}
                        _ => return false,
                    }
                }
            }
        }
    }
    true
}

/// Non-decreasing index tuples of length `m` over `0..c`, lexicographic.
pub(crate) fn multisets(c: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if m == 0 {
        out.push(Vec::new());
        return out;
    }
    if c == 0 {
        return out;
    }
    let mut cur = alloc::vec![0usize; m];
    loop {
        out.push(cur.clone());
        let Some(i) = (0..m).rev().find(|&i| cur[i] + 1 < c) else { break };
        cur[i] += 1;
        for t in i + 1..m {
            cur[t] = cur[i];
        }
    }
    out
}

/// All ordered tableaux of the shape (primal side), lexicographic in the
/// per-row choices.  Count = [`Shape::tableau_count`].
pub fn enumerate_tableaux(shape: &Shape) -> Vec<Tableau> {
    let blocks = shape.row_blocks(Side::Primal);
    let choices: Vec<Vec<IndexSet>> = blocks.iter().map(|&r| shape.admissible_rows(r, Side::Primal)).collect();
    let mut out = Vec::new();
    if choices.iter().any(Vec::is_empty) {
        return out;
    }
    let mut idx = alloc::vec![0usize; blocks.len()];
    loop {
        let rows = blocks
            .iter()
            .zip(&idx)
            .zip(&choices)
            .map(|((&block, &i), ch)| Row { block, set: ch[i].clone() })
            .collect();
        out.push(Tableau::from_parts(shape.clone(), Side::Primal, rows));
        let Some(p) = (0..idx.len()).rev().find(|&p| idx[p] + 1 < choices[p].len()) else { break };
        idx[p] += 1;
        for q in p + 1..idx.len() {
            idx[q] = 0;
        }
    }
    out
}

/// Calls `visit` with the canonical rows of every within-block multiset
/// class, in a fixed order (blocks in order, multisets lexicographic).
pub fn visit_classes(shape: &Shape, mut visit: impl FnMut(&[Row])) {
    let per_block: Vec<(usize, Vec<IndexSet>, Vec<Vec<usize>>)> = (1..=shape.len())
        .filter(|&r| shape.mult()[r - 1] > 0)
        .map(|r| {
            let ch = shape.admissible_rows(r, Side::Primal);
            let ms = multisets(ch.len(), shape.mult()[r - 1] as usize);
            (r, ch, ms)
        })
        .collect();
    if per_block.iter().any(|(_, _, ms)| ms.is_empty()) {
        return;
    }
    let mut idx = alloc::vec![0usize; per_block.len()];
    let mut rows: Vec<Row> = Vec::with_capacity(shape.height());
    loop {
        rows.clear();
        for ((r, ch, ms), &i) in per_block.iter().zip(&idx) {
            // canonical order: lexicographically non-increasing bottom-up
            rows.extend(ms[i].iter().rev().map(|&c| Row { block: *r, set: ch[c].clone() }));
        }
        visit(&rows);
        let Some(p) = (0..idx.len()).rev().find(|&p| idx[p] + 1 < per_block[p].2.len()) else { break };
        idx[p] += 1;
        for q in p + 1..idx.len() {
            idx[q] = 0;
        }
    }
}

/// One canonical representative per within-block multiset class.
pub fn enumerate_classes(shape: &Shape) -> Vec<Tableau> {
    let mut out = Vec::new();
    visit_classes(shape, |rows| out.push(Tableau::from_parts(shape.clone(), Side::Primal, rows.to_vec())));
    out
}

/// Straight tableaux of the shape, one per class.
///
/// A straight arrangement is straight within each block, which forces the
/// rows of a block into a dominance chain with the largest at the bottom;
/// that is the canonical arrangement.  So a class contains a straight
/// arrangement iff its canonical representative is straight.
pub fn enumerate_straight(shape: &Shape) -> Vec<Tableau> {
    enumerate_straight_with(shape, Orientation::TopDown)
}

pub fn enumerate_straight_with(shape: &Shape, orientation: Orientation) -> Vec<Tableau> {
    match orientation {
        Orientation::TopDown => enumerate_classes(shape).into_iter().filter(is_straight).collect(),
        // no chain argument for this reading: dedupe over all orderings
        Orientation::BottomUp => {
            let mut out: Vec<Tableau> = Vec::new();
            let mut seen = alloc::collections::BTreeSet::new();
            for t in enumerate_tableaux(shape) {
                if is_straight_with(&t, orientation) && seen.insert(t.canonical()) {
                    out.push(t);
                }
            }
            out
        }
    }
}

/// The opposite-side involution: rotate the grid by 180° and replace every
/// entry `x` by `n+1-x`.  Block order reverses, `R ↦ R̃`, `K ↦ K̃`.
pub fn involution(t: &Tableau) -> Tableau {
    let n = t.n();
    let rows = t.rows.iter().rev().map(|row| Row { block: row.block, set: row.set.tilde(n) }).collect();
    Tableau { shape: t.shape.clone(), side: t.side.flip(), rows }
}

/// Grid text: a header `shape: j=<word>; m=<mult>` (plus `; side=opposite`
/// for opposite-side tableaux), then one line per grid row, top row first,
/// cells separated by spaces and `.` for empty cells.
pub fn render(t: &Tableau) -> String {
    let mut s = alloc::format!("shape: {}", t.shape);
    if t.side == Side::Opposite {
        s.push_str("; side=opposite");
    }
    s.push('\n');
    let g = t.grid();
    for a in (1..=g.height()).rev() {
        let line: Vec<String> = (1..=g.width())
            .map(|k| g.cell(a, k).map_or_else(|| String::from("."), |x| alloc::format!("{x}")))
            .collect();
        s.push_str(&line.join(" "));
        s.push('\n');
    }
    s
}

/// Inverse of [`render`].
pub fn parse(text: &str) -> Result<Tableau> {
    let perr = |line: usize, msg: String| Error::Parse { line, msg };
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hl, header) = lines.next().ok_or_else(|| perr(1, "missing shape header".into()))?;
    let body = header
        .trim()
        .strip_prefix("shape:")
        .ok_or_else(|| perr(hl + 1, "header must start with 'shape:'".into()))?;
    let mut word = None;
    let mut mult = None;
    let mut side = Side::Primal;
    for field in body.split(';') {
        let field = field.trim();
        if let Some(w) = field.strip_prefix("j=") {
            word = Some(parse_u8_list(w).map_err(|e| perr(hl + 1, alloc::format!("{e}")))?);
        } else if let Some(m) = field.strip_prefix("m=") {
            mult = Some(parse_u8_list(m).map_err(|e| perr(hl + 1, alloc::format!("{e}")))?);
        } else if field == "side=opposite" {
            side = Side::Opposite;
        } else if field != "side=primal" {
            return Err(perr(hl + 1, alloc::format!("unknown header field '{field}'")));
        }
    }
    let word = word.ok_or_else(|| perr(hl + 1, "header lacks j=".into()))?;
    let mult: Vec<u32> = mult.ok_or_else(|| perr(hl + 1, "header lacks m=".into()))?.into_iter().map(u32::from).collect();
    // n from the word length n(n-1)/2
    let n = (2..=crate::weyl::MAX_N)
        .find(|&n| n * (n - 1) / 2 == word.len())
        .ok_or_else(|| perr(hl + 1, alloc::format!("word length {} is not n(n-1)/2", word.len())))?;
    let shape = Word::new(n, word)
        .and_then(|w| Shape::new(w, mult))
        .map_err(|e| perr(hl + 1, alloc::format!("{e}")))?;
    let grid_lines: Vec<(usize, &str)> = lines.collect();
    let blocks = shape.row_blocks(side);
    if grid_lines.len() != blocks.len() {
        return Err(perr(
            grid_lines.last().map_or(hl + 1, |(i, _)| i + 1),
            alloc::format!("expected {} grid rows, found {}", blocks.len(), grid_lines.len()),
        ));
    }
    let mut rows = Vec::with_capacity(blocks.len());
    // grid lines are top first; rows are bottom first
    for ((li, line), &block) in grid_lines.iter().rev().zip(&blocks) {
        let cells: Vec<&str> = line.split_whitespace().collect();
        if cells.len() != n {
            return Err(perr(li + 1, alloc::format!("expected {n} cells, found {}", cells.len())));
        }
        let k = shape.column_set(block);
        let k = if side == Side::Opposite { k.tilde(n) } else { k.clone() };
        let mut entries = Vec::new();
        for (c, cell) in cells.iter().enumerate() {
            let occupied = k.contains(c as u8 + 1);
            match (*cell, occupied) {
                (".", false) => {}
                (".", true) => return Err(perr(li + 1, alloc::format!("column {} must be filled", c + 1))),
                (_, false) => return Err(perr(li + 1, alloc::format!("column {} must be empty", c + 1))),
                (v, true) => {
                    let x: u8 = v.parse().map_err(|_| perr(li + 1, alloc::format!("bad entry '{v}'")))?;
                    if x == 0 || x as usize > n {
                        return Err(perr(li + 1, alloc::format!("entry {x} outside 1..{n}")));
                    }
                    entries.push(x);
                }
            }
        }
        let set = IndexSet::new(entries).map_err(|e| perr(li + 1, alloc::format!("{e}")))?;
        rows.push(Row { block, set });
    }
    Tableau::new(shape, side, rows).map_err(|e| perr(hl + 1, alloc::format!("{e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn set(v: &[u8]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    fn ambient(n: usize, m: &[u32]) -> Shape {
        Shape::ambient(n, m.to_vec()).unwrap()
    }

    #[test]
    fn column_set_examples() {
        let k = column_sets(&longest_word(4).unwrap()).unwrap();
        let expect: Vec<IndexSet> =
            [&[2][..], &[2, 3], &[3], &[2, 3, 4], &[3, 4], &[4]].iter().map(|s| set(s)).collect();
        assert_eq!(k, expect);
        let j = Word::new(4, vec![1, 0, 0, 0, 2, 1]).unwrap();
        let expect: Vec<IndexSet> =
            [&[2][..], &[], &[], &[], &[2, 3], &[3]].iter().map(|s| IndexSet::new(s.to_vec()).unwrap()).collect();
        assert_eq!(column_sets(&j).unwrap(), expect);
        assert_eq!(column_sets(&longest_word(3).unwrap()).unwrap(), vec![set(&[2]), set(&[2, 3]), set(&[3])]);
        assert!(column_sets(&Word::new(4, vec![2, 0, 0, 0, 0, 0]).unwrap()).is_err());
    }

    #[test]
    fn ambient_column_sets_are_intervals() {
        for n in 2..=crate::weyl::MAX_N {
            for k in column_sets(&longest_word(n).unwrap()).unwrap() {
                let s = k.as_slice();
                assert!(s.windows(2).all(|w| w[1] == w[0] + 1), "{k} for n = {n}");
            }
        }
    }

    #[test]
    fn shape_validation() {
        assert!(Shape::ambient(3, vec![1, 1]).is_err());
        let j = Word::new(4, vec![1, 0, 0, 0, 2, 1]).unwrap();
        assert!(Shape::new(j.clone(), vec![1, 1, 0, 0, 1, 1]).is_err());
        assert!(Shape::new(j, vec![1, 0, 0, 0, 1, 1]).is_ok());
        assert!(Shape::new(Word::new(3, vec![1, 0, 1]).unwrap(), vec![0; 3]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_tableaux(&ambient(3, &[1, 1, 1])).len(), 18);
        assert_eq!(ambient(4, &[1; 6]).tableau_count(), 1728);
        let empty = enumerate_tableaux(&ambient(3, &[0, 0, 0]));
        assert_eq!(empty.len(), 1);
        assert!(empty[0].rows().is_empty());
        assert_eq!(enumerate_classes(&ambient(3, &[2, 0, 0])).len(), 3);
        assert_eq!(ambient(4, &[2; 6]).class_count(), 226_800);
    }

    #[test]
    fn straightness_examples() {
        // single row: always straight
        for t in enumerate_tableaux(&ambient(3, &[0, 1, 0])) {
            assert!(is_straight(&t) && is_straight_with(&t, Orientation::BottomUp));
        }
        // two stackings on K = {2,3} (block 2 of n=4)
        let shape = ambient(4, &[0, 2, 0, 0, 0, 0]);
        let mk = |lo: &[u8], hi: &[u8]| {
            Tableau::new(
                shape.clone(),
                Side::Primal,
                vec![Row { block: 2, set: set(lo) }, Row { block: 2, set: set(hi) }],
            )
            .unwrap()
        };
        let (up, down) = (mk(&[1, 2], &[1, 3]), mk(&[1, 3], &[1, 2]));
        assert!(!is_straight(&up) && is_straight(&down));
        // the other reading flips the verdicts
        assert!(is_straight_with(&up, Orientation::BottomUp));
        assert!(!is_straight_with(&down, Orientation::BottomUp));
        assert_eq!(down, up.canonical());
    }

    #[test]
    fn straight_counts() {
        assert_eq!(enumerate_straight(&ambient(3, &[1, 1, 1])).len(), 13);
        assert_eq!(enumerate_straight_with(&ambient(3, &[1, 1, 1]), Orientation::BottomUp).len(), 11);
        let s = enumerate_straight(&ambient(3, &[2, 0, 0]));
        assert_eq!(s.len(), 3);
        // single block, m = 1: everything
        assert_eq!(enumerate_straight(&ambient(4, &[0, 0, 0, 1, 0, 0])).len(), 4);
    }

    #[test]
    fn at_most_one_straight_ordering_per_class() {
        for m in [[1u32, 1, 1], [2, 0, 0], [0, 2, 1], [1, 2, 1], [2, 2, 2]] {
            let shape = ambient(3, &m);
            let mut counts = alloc::collections::BTreeMap::new();
            for t in enumerate_tableaux(&shape) {
                if is_straight(&t) {
                    *counts.entry(t.canonical()).or_insert(0) += 1;
                }
            }
            assert!(counts.values().all(|&c| c == 1));
            assert_eq!(counts.len(), enumerate_straight(&shape).len());
        }
    }

    #[test]
    fn involution_examples() {
        let shape = ambient(4, &[1, 0, 0, 0, 0, 0]);
        let t = Tableau::new(shape, Side::Primal, vec![Row { block: 1, set: set(&[1]) }]).unwrap();
        let u = involution(&t);
        assert_eq!(u.rows()[0].set, set(&[4]));
        assert_eq!(u.column_set_of(&u.rows()[0]), set(&[3]));
        assert_eq!(u.side(), Side::Opposite);
        for t in enumerate_tableaux(&ambient(3, &[1, 1, 1])) {
            let u = involution(&t);
            assert!(Tableau::new(u.shape().clone(), u.side(), u.rows().to_vec()).is_ok());
            assert_eq!(involution(&u), t);
        }
    }

    #[test]
    fn involution_rotates_the_grid() {
        for t in enumerate_tableaux(&ambient(3, &[1, 1, 1])) {
            let (g, h) = (t.grid(), involution(&t).grid());
            let (ht, n) = (g.height(), g.width());
            for a in 1..=ht {
                for k in 1..=n {
                    let rotated = g.cell(ht + 1 - a, n + 1 - k).map(|x| n as u8 + 1 - x);
                    assert_eq!(h.cell(a, k), rotated);
                }
            }
        }
    }

    #[test]
    fn render_parse_round_trip() {
        for t in enumerate_straight(&ambient(3, &[1, 1, 1])) {
            assert_eq!(parse(&render(&t)).unwrap(), t);
            let u = involution(&t);
            assert_eq!(parse(&render(&u)).unwrap(), u);
        }
        let empty = Tableau::empty(ambient(3, &[0, 0, 0])).unwrap();
        assert_eq!(render(&empty), "shape: j=1,2,1; m=0,0,0\n");
        assert_eq!(parse(&render(&empty)).unwrap(), empty);
    }

    #[test]
    fn render_layout() {
        let t = Tableau::new(
            ambient(3, &[1, 1, 0]),
            Side::Primal,
            vec![Row { block: 1, set: set(&[1]) }, Row { block: 2, set: set(&[1, 3]) }],
        )
        .unwrap();
        assert_eq!(render(&t), "shape: j=1,2,1; m=1,1,0\n. 1 3\n. 1 .\n");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
        assert!(matches!(parse("shape: j=1,2,1; m=1,0,0\n1 . .\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("shape: j=1,2,1; m=1,0,0\n. 4 .\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse("shape: j=1,2,1; m=1,0,0\n. 3 .\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse("shape: j=1,2,1; m=1,0,0\n. 1 .\n. 1 .\n"), Err(Error::Parse { .. })));
        assert!(parse("shape: j=1,2,1; m=1,0,0\n. 2 .\n").is_ok());
    }
}
