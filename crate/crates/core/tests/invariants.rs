use std::collections::{BTreeMap, BTreeSet, VecDeque};

use proptest::prelude::*;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use stdmono_core::exactalg::Polynomial;
use stdmono_core::sections::{restriction_analysis, straighten, Realization, Realizer, SectionSpace};
use stdmono_core::tableaux::{enumerate_classes, involution, is_straight, Row, Shape, Side, Tableau};
use stdmono_core::weyl::{bruhat_leq, is_reduced, reduced_subwords, word_to_perm, Permutation, Word};

/// Distance from the identity in the Cayley graph of simple transpositions.
fn lengths(n: usize) -> BTreeMap<Permutation, usize> {
    let mut dist = BTreeMap::from([(Permutation::identity(n), 0)]);
    let mut queue = VecDeque::from([Permutation::identity(n)]);
    while let Some(p) = queue.pop_front() {
        let d = dist[&p];
        for k in 1..n as u8 {
            let mut q = p.clone();
            q.times_simple(k);
            if !dist.contains_key(&q) {
                dist.insert(q.clone(), d + 1);
                queue.push_back(q);
            }
        }
    }
    dist
}

/// A reduced word for `w`, found by walking down the length function.
fn some_reduced_word(w: &Permutation, len: &BTreeMap<Permutation, usize>) -> Vec<u8> {
    let n = w.n();
    let mut p = w.clone();
    let mut letters = Vec::new();
    while len[&p] > 0 {
        let k = (1..n as u8)
            .find(|&k| {
                let mut q = p.clone();
                q.times_simple(k);
                len[&q] < len[&p]
            })
            .unwrap();
        letters.push(k);
        p.times_simple(k);
    }
    letters.reverse();
    letters
}

#[test]
fn bruhat_is_a_partial_order() {
    for n in [3, 4] {
        let all = Permutation::all(n);
        for a in &all {
            assert!(bruhat_leq(a, a));
            for b in &all {
                if a != b && bruhat_leq(a, b) {
                    assert!(!bruhat_leq(b, a));
                }
                for c in &all {
                    if bruhat_leq(a, b) && bruhat_leq(b, c) {
                        assert!(bruhat_leq(a, c));
                    }
                }
            }
        }
    }
}

#[test]
fn bruhat_matches_subword_property() {
    for n in [3, 4] {
        let len = lengths(n);
        for w in Permutation::all(n) {
            let word = some_reduced_word(&w, &len);
            assert_eq!(word.len(), w.inversions());
            let mut below = BTreeSet::new();
            for mask in 0u32..(1 << word.len()) {
                let sub: Vec<u8> = word.iter().enumerate().map(|(i, &k)| if mask >> i & 1 == 1 { k } else { 0 }).collect();
                let sub = Word::new(n, sub).unwrap();
                if is_reduced(&sub) {
                    below.insert(word_to_perm(&sub));
                }
            }
            for v in Permutation::all(n) {
                assert_eq!(bruhat_leq(&v, &w), below.contains(&v), "v={v} w={w}");
            }
        }
    }
}

#[test]
fn reducedness_matches_shortest_expressions() {
    let n = 4;
    let len = lengths(n);
    for length in 0..=7u32 {
        for code in 0..3usize.pow(length) {
            let letters: Vec<u8> = (0..length).map(|i| (code / 3usize.pow(i) % 3) as u8 + 1).collect();
            let w = Word::new(n, letters.clone()).unwrap();
            assert_eq!(is_reduced(&w), len[&word_to_perm(&w)] == letters.len(), "{letters:?}");
        }
    }
}

#[test]
fn rank_nullity_over_all_subwords() {
    for (n, m) in [(3usize, vec![1u32; 3]), (3, vec![2, 1, 1]), (4, vec![1; 6])] {
        for j in reduced_subwords(n).unwrap() {
            let r = restriction_analysis(&m, &j).unwrap();
            assert!(r.well_defined, "j={j}");
            assert!(r.rank_nullity(), "j={j}: {} != {} + {}", r.dim_i, r.kernel_dim, r.dim_j);
        }
    }
}

fn arb_tableau() -> impl Strategy<Value = Tableau> {
    (3usize..=4, proptest::collection::vec(0u32..=2, 6), any::<proptest::sample::Index>()).prop_map(|(n, m, pick)| {
        let ell = n * (n - 1) / 2;
        let shape = Shape::ambient(n, m[..ell].to_vec()).unwrap();
        let classes = enumerate_classes(&shape);
        let mut t = pick.get(&classes).clone();
        // shuffle within blocks deterministically from the index
        let mut rows: Vec<Row> = t.rows().to_vec();
        let k = pick.index(rows.len().max(1));
        if k + 1 < rows.len() && rows[k].block == rows[k + 1].block {
            rows.swap(k, k + 1);
            t = Tableau::new(shape, Side::Primal, rows).unwrap();
        }
        t
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn involution_has_order_two(t in arb_tableau()) {
        let u = involution(&t);
        prop_assert_ne!(u.side(), t.side());
        prop_assert_eq!(involution(&u), t);
    }

    #[test]
    fn straight_tableaux_straighten_to_themselves(t in arb_tableau()) {
        prop_assume!(t.shape().n() == 3);
        let space = SectionSpace::new(t.shape()).unwrap();
        let coeffs = straighten(&t).unwrap();
        prop_assert_eq!(coeffs.len(), space.dim);
        // the coordinates reassemble the tableau polynomial
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut sum = Polynomial::zero();
        for (c, p) in coeffs.iter().zip(&space.polynomials) {
            sum = sum + p.scale(&(c.numer() * (&den / c.denom())));
        }
        prop_assert_eq!(sum, Realizer::new(Realization::Triangular).poly(&t).scale(&den));
        if is_straight(&t) {
            let k = space.basis_position(&t).unwrap();
            for (i, c) in coeffs.iter().enumerate() {
                prop_assert_eq!(c.is_zero(), i != k);
                prop_assert!(i != k || c.is_one());
            }
        }
    }
}
