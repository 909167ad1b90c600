//! Brute-force reference implementations used to check the transition-
//! digraph machinery. These deliberately avoid the `TransitionDigraph`
//! arc structure: they enumerate all d-paths of the double graph (walks
//! obeying only `r_d`/`s_d` composability) and filter them by scanning
//! for forbidden factors.
//!
//! Exponential in the length bound; intended for small graphs and short
//! lengths only.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::graph::WeightedGraph;
use crate::nod::{
    forbidden_pairs, letter_range, letter_source, Degree, Letter, NodWord, SpecialSelection,
};

/// All letters of the double graph in canonical order.
pub fn all_letters(g: &WeightedGraph) -> Vec<Letter> {
    let mut letters = Vec::new();
    for e in g.edges() {
        for i in 1..=e.weight {
            letters.push(Letter::real(&e.id, i));
            letters.push(Letter::ghost(&e.id, i));
        }
    }
    letters.sort();
    letters
}

/// Enumerates every nod-path of length at most `max_len` by generating
/// all d-paths and discarding those containing a forbidden factor.
/// Output order matches `nod::enumerate_nod`.
pub fn enumerate(g: &WeightedGraph, sp: &SpecialSelection, max_len: usize) -> Vec<NodWord> {
    let letters = all_letters(g);
    let sources: Vec<String> = letters
        .iter()
        .map(|l| letter_source(g, l).expect("graph letter"))
        .collect();
    let ranges: Vec<String> = letters
        .iter()
        .map(|l| letter_range(g, l).expect("graph letter"))
        .collect();
    let forbidden = forbidden_pairs(g, sp);

    let mut out: Vec<NodWord> = g
        .vertices()
        .iter()
        .map(|v| NodWord::Trivial(v.clone()))
        .collect();
    let mut frontier: Vec<Vec<usize>> = (0..letters.len()).map(|i| vec![i]).collect();
    let mut len = 1;
    while len <= max_len && !frontier.is_empty() {
        for walk in &frontier {
            let word: Vec<Letter> = walk.iter().map(|&i| letters[i].clone()).collect();
            let bad = word
                .windows(2)
                .any(|p| forbidden.contains(&(p[0].clone(), p[1].clone())));
            if !bad {
                out.push(NodWord::Letters(word));
            }
        }
        let mut next = Vec::new();
        if len < max_len {
            for walk in &frontier {
                let last = *walk.last().unwrap();
                for i in 0..letters.len() {
                    if sources[i] == ranges[last] {
                        let mut w = walk.clone();
                        w.push(i);
                        next.push(w);
                    }
                }
            }
        }
        frontier = next;
        len += 1;
    }
    out
}

/// Per-degree nod-path counts obtained from the brute-force enumeration.
pub fn count_by_degree(
    g: &WeightedGraph,
    sp: &SpecialSelection,
    max_len: usize,
) -> BTreeMap<Degree, BigUint> {
    let n = g.max_weight() as usize;
    let mut totals: BTreeMap<Degree, BigUint> = BTreeMap::new();
    for word in enumerate(g, sp, max_len) {
        *totals.entry(word.degree(n)).or_default() += BigUint::one();
    }
    totals
}
