//! Acceptance criteria, one PASS/FAIL line per criterion.
//!
//! Every count below is exact; the only tolerances are wall-clock budgets,
//! pinned in [`budget`].  Criteria 2, 3 and 4 are known to fail: the
//! quantities are computed faithfully and disagree with the statement being
//! checked (see `KNOWN_FAILING`).  The binary exits non-zero if any
//! criterion's outcome differs from its recorded status, in either
//! direction.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use stdmono::{run, Command, RunConfig};
use stdmono_core::degeneration::{initial_piece, sagbi_degree_check, straight_lm_report};
use stdmono_core::fiberprod::FiberProduct;
use stdmono_core::sections::flag::{richardson_monomials, schubert_monomials};
use stdmono_core::sections::sampling::{flag_space_dim, richardson_dim_oracle, schubert_dim_oracle, SamplePlan};
use stdmono_core::sections::{dim_sections, kernel_condition_text, opposite_dim, restriction_analysis, section_rank};
use stdmono_core::tableaux::{enumerate_tableaux, involution, Shape};
use stdmono_core::weyl::{bruhat_leq, longest_word, reduced_subwords, Permutation, Word};

/// Criteria whose statement does not hold for the computed objects.
const KNOWN_FAILING: &[u8] = &[2, 3, 4];

/// Wall-clock budgets.
mod budget {
    use std::time::Duration;
    pub const BS_N3: Duration = Duration::from_secs(1);
    pub const BS_N4: Duration = Duration::from_secs(300);
    pub const RESTRICTION: Duration = Duration::from_secs(300);
    pub const SCHUBERT: Duration = Duration::from_secs(30);
    pub const RICHARDSON: Duration = Duration::from_secs(600);
    pub const DEGENERATION_N3: Duration = Duration::from_secs(60);
    pub const DEGENERATION_N4: Duration = Duration::from_secs(900);
    pub const FIBER: Duration = Duration::from_secs(600);
}

/// Frozen after the rank oracle confirmed them.
mod golden {
    pub const BS_N3_GENERATORS: u128 = 18;
    pub const BS_N3_STRAIGHT: usize = 13;
    pub const BS_N4_GENERATORS: u128 = 1728;
    pub const BS_N4_STRAIGHT: usize = 394;
    pub const FLAG_N3_DIM: usize = 8;
    pub const COMPARABLE_PAIRS_S3: usize = 19;
}

struct Criterion {
    id: u8,
    pass: bool,
    notes: Vec<String>,
}

impl Criterion {
    fn new(id: u8) -> Self {
        Criterion { id, pass: true, notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, note: impl Into<String>) {
        if !ok {
            self.pass = false;
            self.notes.push(note.into());
        }
    }

    fn timed<T>(&mut self, label: &str, limit: Duration, f: impl FnOnce() -> T) -> T {
        let t = Instant::now();
        let out = f();
        let e = t.elapsed();
        self.check(e <= limit, format!("{label} took {e:?}, budget {limit:?}"));
        out
    }
}

fn ambient(n: usize, m: &[u32]) -> Shape {
    Shape::ambient(n, m.to_vec()).unwrap()
}

fn perm(v: &[u8]) -> Permutation {
    Permutation::new(v.to_vec()).unwrap()
}

fn criterion_1() -> Criterion {
    let mut c = Criterion::new(1);
    let shape = ambient(3, &[1, 1, 1]);
    // generator count as the product of dominated-set counts
    let product: u128 = (1..=shape.len())
        .map(|r| shape.column_set(r).dominated_sets(3).len() as u128)
        .product();
    let cert = c.timed("n=3", budget::BS_N3, || dim_sections(&shape));
    c.check(cert.generator_count == golden::BS_N3_GENERATORS && product == golden::BS_N3_GENERATORS, "n=3 generator count");
    c.check(cert.straight_count == golden::BS_N3_STRAIGHT, format!("n=3 straight {}", cert.straight_count));
    c.check(cert.rank == cert.straight_count, format!("n=3 rank {} vs straight {}", cert.rank, cert.straight_count));
    let big = ambient(4, &[1; 6]);
    let cert = c.timed("n=4", budget::BS_N4, || stdmono::parallel::dim_sections(&big));
    c.check(cert.generator_count == golden::BS_N4_GENERATORS, "n=4 generator count");
    c.check(cert.rank == cert.straight_count, format!("n=4 rank {} vs straight {}", cert.rank, cert.straight_count));
    c.check(cert.rank == golden::BS_N4_STRAIGHT, format!("n=4 rank {}", cert.rank));
    c
}

fn criterion_2() -> Criterion {
    let mut c = Criterion::new(2);
    let j = Word::new(4, vec![1, 0, 0, 0, 2, 1]).unwrap();
    let r = c.timed("restriction", budget::RESTRICTION, || restriction_analysis(&[1; 6], &j).unwrap());
    c.check(r.condition_blocks.contains(&5) && r.void_blocks.contains(&1), "condition on block 5, block 1 void");
    c.check(r.condition_blocks == vec![5], format!("conditions on blocks {:?}: {:?}", r.condition_blocks, kernel_condition_text(&r)));
    c.check(r.rank_nullity(), format!("rank-nullity {} != {} + {}", r.dim_i, r.kernel_dim, r.dim_j));
    c.check(
        r.kernel_spanned_by_flagged(),
        format!("kernel dim {} but flagged tableaux span {}", r.kernel_dim, r.flagged_rank),
    );
    c.check(
        r.straight_condition_matches(),
        format!("{} straight tableaux with the condition, dim M(j,m) = {}", r.straight_with_condition, r.dim_j),
    );
    c
}

/// Semistandard fillings with `m_d` columns of height `d`, brute force.
fn ssyt(n: u8, m: &[u32]) -> usize {
    let mut cols: Vec<usize> = Vec::new();
    for d in (1..n as usize).rev() {
        cols.extend(std::iter::repeat_n(d, m[d - 1] as usize));
    }
    let cells: Vec<(usize, usize)> = cols.iter().enumerate().flat_map(|(c, &h)| (0..h).map(move |r| (r, c))).collect();
    let total = (n as usize).pow(cells.len() as u32);
    (0..total)
        .filter(|&code| {
            let fill: Vec<u8> = (0..cells.len()).map(|i| ((code / (n as usize).pow(i as u32)) % n as usize) as u8).collect();
            let at = |r: usize, c: usize| cells.iter().position(|&x| x == (r, c)).map(|i| fill[i]);
            cells.iter().enumerate().all(|(i, &(r, c))| {
                (c == 0 || at(r, c - 1).is_none_or(|y| y <= fill[i])) && (r == 0 || at(r - 1, c).is_none_or(|y| y < fill[i]))
            })
        })
        .count()
}

fn criterion_3() -> Criterion {
    let mut c = Criterion::new(3);
    let m = [1u32, 1];
    let t = Instant::now();
    let dim = flag_space_dim(3, &m).unwrap();
    c.check(dim == golden::FLAG_N3_DIM && ssyt(3, &m) == golden::FLAG_N3_DIM, format!("flag space dim {dim}"));
    for w in Permutation::all(3) {
        let filtered = schubert_monomials(&w, &m).unwrap().len();
        for seed in [1u64, 2, 3] {
            let plan = SamplePlan::for_flag_space(seed, 3, &m).unwrap();
            match schubert_dim_oracle(&w, &m, &plan) {
                Ok(d) => c.check(d == filtered, format!("w={w} seed {seed}: oracle {d}, filtered {filtered}")),
                Err(e) => c.check(false, format!("w={w} seed {seed}: {e}")),
            }
        }
    }
    c.check(t.elapsed() <= budget::SCHUBERT, format!("took {:?}", t.elapsed()));
    c
}

fn criterion_4() -> Criterion {
    let mut c = Criterion::new(4);
    let t = Instant::now();
    let all = Permutation::all(3);
    let comparable = all.iter().flat_map(|w| all.iter().map(move |v| (w, v))).filter(|(w, v)| bruhat_leq(v, w)).count();
    c.check(comparable == golden::COMPARABLE_PAIRS_S3, format!("{comparable} comparable pairs"));
    for m in [[1u32, 0], [0, 1], [1, 1]] {
        let plan = SamplePlan::for_flag_space(1, 3, &m).unwrap();
        for w in &all {
            for v in &all {
                let sandwich = richardson_monomials(w, v, &m).unwrap().len();
                let oracle = richardson_dim_oracle(w, v, &m, &plan).unwrap();
                if bruhat_leq(v, w) {
                    c.check(oracle == sandwich, format!("m={m:?} v={v} w={w}: oracle {oracle}, sandwich {sandwich}"));
                } else {
                    c.check(oracle == 0 && sandwich == 0, format!("m={m:?} v={v} w={w} incomparable but nonzero"));
                }
            }
        }
    }
    let m4 = [1u32, 1, 1];
    let plan = SamplePlan::for_flag_space(1, 4, &m4).unwrap();
    for (v, w) in [
        (perm(&[1, 2, 3, 4]), perm(&[2, 1, 3, 4])),
        (perm(&[2, 1, 3, 4]), perm(&[3, 4, 1, 2])),
        (perm(&[1, 2, 3, 4]), perm(&[4, 3, 2, 1])),
    ] {
        let sandwich = richardson_monomials(&w, &v, &m4).unwrap().len();
        let oracle = richardson_dim_oracle(&w, &v, &m4, &plan).unwrap();
        c.check(oracle == sandwich, format!("S_4 v={v} w={w}: oracle {oracle}, sandwich {sandwich}"));
    }
    c.check(t.elapsed() <= budget::RICHARDSON, format!("took {:?}", t.elapsed()));
    c
}

fn criterion_5() -> Criterion {
    let mut c = Criterion::new(5);
    let mut shapes: Vec<Shape> = Vec::new();
    for bits in 0..8u32 {
        shapes.push(ambient(3, &[bits & 1, (bits >> 1) & 1, (bits >> 2) & 1]));
    }
    shapes.extend([ambient(3, &[2, 2, 2]), ambient(3, &[1, 0, 2]), ambient(4, &[1; 6]), ambient(4, &[0, 0, 0, 1, 1, 1])]);
    for shape in &shapes {
        let ts = enumerate_tableaux(shape);
        let images: BTreeSet<_> = ts.iter().map(involution).collect();
        c.check(images.len() == ts.len(), format!("{shape}: involution not injective"));
        c.check(ts.iter().all(|t| involution(&involution(t)) == *t), format!("{shape}: involution not of order 2"));
        c.check(images.iter().all(|t| t.side() != ts[0].side()), format!("{shape}: side not flipped"));
        let (a, b) = (section_rank(shape), opposite_dim(shape));
        c.check(a == b, format!("{shape}: primal {a}, opposite {b}"));
    }
    c
}

fn degeneration_suite(c: &mut Criterion, shape: &Shape, max_p: u32) {
    let lms = straight_lm_report(shape);
    c.check(lms.distinct(), format!("{shape}: straight leading monomials collide"));
    for p in 1..=max_p {
        let piece = initial_piece(shape, p).unwrap();
        let straight = straight_lm_report(&shape.scaled(p));
        c.check(
            straight.distinct() && piece.lm_set == straight.monomials,
            format!("{shape} p={p}: initial piece {} vs straight {}", piece.dim(), straight.straight_count),
        );
        if p >= 2 {
            let r = sagbi_degree_check(shape, p).unwrap();
            c.check(r.contained(), format!("{shape} p={p}: {} leading monomials outside the product set", r.missing.len()));
            c.check(r.hilbert_match(), format!("{shape} p={p}: lm {} straight {} products {}", r.lm_count, r.straight_count, r.product_count));
        }
    }
}

fn indicator(j: &Word) -> Vec<u32> {
    j.letters().iter().map(|&l| u32::from(l != 0)).collect()
}

fn criterion_6() -> Criterion {
    let mut c = Criterion::new(6);
    let t = Instant::now();
    for bits in 1..8u32 {
        degeneration_suite(&mut c, &ambient(3, &[bits & 1, (bits >> 1) & 1, (bits >> 2) & 1]), 3);
    }
    for j in reduced_subwords(3).unwrap() {
        let m = indicator(&j);
        degeneration_suite(&mut c, &Shape::new(j, m).unwrap(), 3);
    }
    c.check(t.elapsed() <= budget::DEGENERATION_N3, format!("n=3 suite took {:?}", t.elapsed()));
    let t = Instant::now();
    let j = Word::new(4, vec![1, 0, 0, 0, 2, 1]).unwrap();
    let m = indicator(&j);
    for shape in [ambient(4, &[1; 6]), ambient(4, &[0, 0, 0, 1, 1, 1]), Shape::new(j, m).unwrap()] {
        degeneration_suite(&mut c, &shape, 2);
    }
    c.check(t.elapsed() <= budget::DEGENERATION_N4, format!("n=4 suite took {:?}", t.elapsed()));
    c
}

fn criterion_7() -> Criterion {
    let mut c = Criterion::new(7);
    let t = Instant::now();
    let i = longest_word(3).unwrap();
    let mut fp = FiberProduct::new(&i, &i, &[1, 1, 1]).unwrap();
    let inj = fp.injectivity(1).unwrap();
    c.check(inj.pass(), format!("ranks {} / {} over {} basis elements", inj.rank_j, inj.rank_k, inj.basis_size));
    let one = fp.piece(1, false, false).unwrap();
    let formula = fp.r(1).unwrap().dim + fp.s(1).unwrap().dim - inj.basis_size;
    c.check(one.dim == formula, format!("piece 1 dim {} vs formula {formula}", one.dim));
    let two = fp.piece(2, true, false).unwrap();
    c.check(two.stability_pass(), format!("piece 2 rank {} -> {:?} with A_2", two.relation_rank, two.augmented_rank));
    c.check(t.elapsed() <= budget::FIBER, format!("took {:?}", t.elapsed()));
    c
}

fn criterion_8() -> Criterion {
    let mut c = Criterion::new(8);
    let configs = [
        (Command::VerifyBs, RunConfig { n: Some(3), mult: Some("1,1,1".into()), powers: Some("1,2".into()), ..Default::default() }),
        (
            Command::VerifySchubert,
            RunConfig { n: Some(3), mult: Some("1,1".into()), seeds: Some("1,2,3".into()), ..Default::default() },
        ),
        (Command::FiberDim, RunConfig { n: Some(3), mult: Some("1,1,1".into()), powers: Some("0,1".into()), ..Default::default() }),
    ];
    for (cmd, cfg) in configs {
        let texts: Vec<String> = [Some(1), Some(1), Some(4), None]
            .into_iter()
            .map(|threads| run(cmd, &RunConfig { threads, ..cfg.clone() }).unwrap().to_json(false))
            .collect();
        c.check(texts.windows(2).all(|w| w[0] == w[1]), format!("{}: reports differ", cmd.name()));
    }
    c
}

fn main() {
    let criteria: [fn() -> Criterion; 8] =
        [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8];
    let mut unexpected = 0;
    for f in criteria {
        let c = f();
        let known = KNOWN_FAILING.contains(&c.id);
        let verdict = if c.pass { "PASS" } else { "FAIL" };
        let tag = match (c.pass, known) {
            (false, true) => " (known failure)",
            (true, true) => " (expected to fail; update KNOWN_FAILING)",
            _ => "",
        };
        println!("criterion {}: {verdict}{tag}", c.id);
        for note in c.notes.iter().take(8) {
            println!("    {note}");
        }
        if c.notes.len() > 8 {
            println!("    ... {} more", c.notes.len() - 8);
        }
        if c.pass == known {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        println!("{unexpected} criteria differ from their recorded status");
        std::process::exit(1);
    }
}
