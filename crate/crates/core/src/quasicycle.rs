//! Quasicycles and the `{0, 1, ≥2}` Gelfand–Kirillov classification.
//!
//! A nod²-path is a closed nod-path whose square is again a nod-path. A
//! quasicycle is a nod²-path `q` such that no factor of `q²` of length
//! `< |q|` is a nod²-path. Quasicycles drive the growth of the algebra:
//! none at all means finite dimension, quasicycles without
//! self-connections or chains mean linear growth, anything else means
//! GK dimension at least 2.
//!
//! Enumeration is exact: a walk in the transition digraph in which some
//! letter repeats always contains a closed nod² factor (the stretch
//! between two occurrences closes up and the wrap arc is the walk's own
//! arc), so the depth-first search below prunes on the first closed nod²
//! factor and therefore only ever visits walks with pairwise distinct
//! letters. In particular every quasicycle has length at most the number
//! of letters and the search is complete.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;

use crate::graph::WeightedGraph;
use crate::nod::{
    is_nod, word_range, word_source, Letter, NodWord, SpecialSelection, TransitionDigraph,
};
use crate::{Error, Result};

/// Hard ceiling on explored search states; enumeration on the intended
/// graph sizes stays far below it. Exceeding it is reported, never
/// silently truncated.
const SEARCH_BUDGET: u64 = 100_000_000;

/// A quasicycle: a minimal closed nod²-word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quasicycle {
    letters: Vec<Letter>,
}

impl Quasicycle {
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_word(&self) -> NodWord {
        NodWord::Letters(self.letters.clone())
    }
}

impl fmt::Display for Quasicycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_word())
    }
}

/// True iff the (nontrivial, closed) word and its square are nod-paths.
pub fn is_nod2(g: &WeightedGraph, sp: &SpecialSelection, word: &NodWord) -> Result<bool> {
    let letters = match word {
        NodWord::Trivial(_) => return Err(Error::TrivialWord),
        NodWord::Letters(ls) => ls,
    };
    if word_source(g, word)? != word_range(g, word)? {
        return Err(Error::StructuralPrecondition(format!(
            "`{word}` is not closed"
        )));
    }
    if !is_nod(g, sp, word)? {
        return Ok(false);
    }
    let mut doubled = letters.clone();
    doubled.extend(letters.iter().cloned());
    is_nod(g, sp, &NodWord::Letters(doubled))
}

/// Enumerates all quasicycles, deduplicated exactly (rotations are
/// distinct quasicycles and all appear). Sorted by (length, letters).
pub fn quasicycles(g: &WeightedGraph, sp: &SpecialSelection) -> Result<Vec<Quasicycle>> {
    let t = TransitionDigraph::build(g, sp);
    quasicycles_on(&t)
}

/// [`quasicycles`] with a prebuilt transition digraph.
pub fn quasicycles_on(t: &TransitionDigraph) -> Result<Vec<Quasicycle>> {
    let cap = 2 * t.letter_count();
    let mut budget = SEARCH_BUDGET;
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut walk: Vec<usize> = Vec::new();
    for start in 0..t.letter_count() {
        walk.push(start);
        quasicycle_dfs(t, cap, &mut walk, &mut found, &mut budget)?;
        walk.pop();
    }
    let mut out: Vec<Quasicycle> = found
        .into_iter()
        .map(|w| Quasicycle {
            letters: w.into_iter().map(|i| t.letters()[i].clone()).collect(),
        })
        .collect();
    out.sort_by(|a, b| (a.len(), &a.letters).cmp(&(b.len(), &b.letters)));
    Ok(out)
}

fn quasicycle_dfs(
    t: &TransitionDigraph,
    cap: usize,
    walk: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
    budget: &mut u64,
) -> Result<()> {
    if *budget == 0 {
        return Err(Error::CapExceeded(
            "quasicycle search exhausted its state budget".to_owned(),
        ));
    }
    *budget -= 1;
    if walk.len() > cap {
        // unreachable by the distinct-letter argument; fail loudly if the
        // assumption ever breaks
        return Err(Error::CapExceeded(format!(
            "closed nod² search exceeded the length cap {cap}"
        )));
    }
    let k = walk.len();
    let last = walk[k - 1];
    // closed nod² factors ending at the new letter
    let mut whole_closes = false;
    for i in 0..k {
        let closed = t.source_of(walk[i]) == t.range_of(last);
        if closed && t.has_arc(last, walk[i]) {
            if i == 0 && !whole_closes {
                whole_closes = true;
            } else {
                // a proper factor disqualifies this walk and all extensions
                return Ok(());
            }
        }
    }
    if whole_closes {
        if is_minimal_nod2(t, walk) {
            found.push(walk.clone());
        }
        // any extension would contain this closed nod² factor
        return Ok(());
    }
    let successors: Vec<usize> = t.successors(last).to_vec();
    for s in successors {
        walk.push(s);
        quasicycle_dfs(t, cap, walk, found, budget)?;
        walk.pop();
    }
    Ok(())
}

/// Minimality per definition: no factor of `q²` of length `< |q|` is a
/// nod²-path.
fn is_minimal_nod2(t: &TransitionDigraph, q: &[usize]) -> bool {
    let k = q.len();
    let mut q2: Vec<usize> = q.to_vec();
    q2.extend_from_slice(q);
    for len in 1..k {
        for p in 0..=(2 * k - len) {
            if p + len > 2 * k {
                break;
            }
            let factor = &q2[p..p + len];
            let closed = t.source_of(factor[0]) == t.range_of(factor[len - 1]);
            if closed && t.has_arc(factor[len - 1], factor[0]) {
                return false;
            }
        }
    }
    true
}

/// The rotation relation `≈`: true iff one word is a cyclic rotation of
/// the other.
pub fn rotation_equiv(a: &Quasicycle, b: &Quasicycle) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    (0..n).any(|k| (0..n).all(|i| a.letters[(k + i) % n] == b.letters[i]))
}

/// The connection relation `q ⟹ q'`: there is a possibly-empty nod-word
/// `o` with `q o q'` a nod-path. Since forbidden words have length 2 this
/// is reachability from the last letter of `q` to the first letter of
/// `q'` in the transition digraph (the direct arc giving the empty `o`).
pub fn connects(t: &TransitionDigraph, q: &Quasicycle, q2: &Quasicycle) -> bool {
    let last = t
        .index_of_letter(q.letters.last().unwrap())
        .expect("quasicycle letter");
    let first = t
        .index_of_letter(&q2.letters[0])
        .expect("quasicycle letter");
    // walks of >= 1 arcs from `last` to `first`
    let mut seen = vec![false; t.letter_count()];
    let mut queue: VecDeque<usize> = t.successors(last).iter().copied().collect();
    while let Some(v) = queue.pop_front() {
        if v == first {
            return true;
        }
        if seen[v] {
            continue;
        }
        seen[v] = true;
        queue.extend(t.successors(v).iter().copied());
    }
    false
}

/// Whether the empty connector word is admitted by `⟹^nod`.
///
/// The definition lives in prior work and constrains the connector `o`
/// only by "`q` is not a prefix of `o`". Reading `o` as a possibly
/// trivial path admits the empty connector and makes every quasicycle
/// with `q²` nod self-connected — which contradicts the linear-growth
/// analysis of a lone no-exit cycle. The classifier therefore uses
/// [`ConnectorConvention::RequireNonempty`]; both variants are kept so
/// the choice stays visible and testable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConnectorConvention {
    AllowEmpty,
    RequireNonempty,
}

/// Self-connection `q ⟹^nod q`: a nod connector `o` (with `q` not a
/// prefix of `o`) such that `q o q` is a nod-path. Decided by a product
/// of the transition digraph with the prefix automaton of `q`.
pub fn is_selfconnected(
    t: &TransitionDigraph,
    q: &Quasicycle,
    convention: ConnectorConvention,
) -> bool {
    let last = t
        .index_of_letter(q.letters.last().unwrap())
        .expect("quasicycle letter");
    let first = t
        .index_of_letter(&q.letters[0])
        .expect("quasicycle letter");
    if convention == ConnectorConvention::AllowEmpty && t.has_arc(last, first) {
        return true;
    }
    // states: (current letter, Some(k) = first k letters of o matched q
    // and k < |q|, None = diverged from q's prefix)
    let qlen = q.len();
    let qidx: Vec<usize> = q
        .letters
        .iter()
        .map(|l| t.index_of_letter(l).expect("quasicycle letter"))
        .collect();
    let mut seen: HashSet<(usize, Option<usize>)> = HashSet::new();
    let mut queue: VecDeque<(usize, Option<usize>)> = VecDeque::new();
    for &z in t.successors(last) {
        let mstate = if z == qidx[0] {
            if qlen == 1 {
                // o would start with q itself: q is a prefix of o
                continue;
            }
            Some(1)
        } else {
            None
        };
        queue.push_back((z, mstate));
    }
    while let Some((z, m)) = queue.pop_front() {
        if !seen.insert((z, m)) {
            continue;
        }
        if t.has_arc(z, first) {
            return true;
        }
        for &next in t.successors(z) {
            let mnext = match m {
                None => None,
                Some(k) => {
                    if next == qidx[k] {
                        if k + 1 == qlen {
                            continue; // q became a prefix of o
                        }
                        Some(k + 1)
                    } else {
                        None
                    }
                }
            };
            queue.push_back((next, mnext));
        }
    }
    false
}

/// The GK-dimension class of the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GkClass {
    Zero,
    One,
    TwoOrMore,
}

impl fmt::Display for GkClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GkClass::Zero => write!(f, "0"),
            GkClass::One => write!(f, "1"),
            GkClass::TwoOrMore => write!(f, "2+"),
        }
    }
}

/// Classifies GK dimension from the quasicycle structure: 0 without
/// quasicycles; 1 when quasicycles exist but none is self-connected and
/// no two non-rotation-equivalent ones connect; at least 2 otherwise.
pub fn gk_class(g: &WeightedGraph, sp: &SpecialSelection) -> Result<GkClass> {
    let t = TransitionDigraph::build(g, sp);
    let qs = quasicycles_on(&t)?;
    gk_class_on(&t, &qs)
}

/// [`gk_class`] with prebuilt digraph and quasicycle list.
pub fn gk_class_on(t: &TransitionDigraph, qs: &[Quasicycle]) -> Result<GkClass> {
    if qs.is_empty() {
        return Ok(GkClass::Zero);
    }
    for q in qs {
        if is_selfconnected(t, q, ConnectorConvention::RequireNonempty) {
            return Ok(GkClass::TwoOrMore);
        }
    }
    for a in qs {
        for b in qs {
            if !rotation_equiv(a, b) && connects(t, a, b) {
                return Ok(GkClass::TwoOrMore);
            }
        }
    }
    Ok(GkClass::One)
}

/// `E'` (letters appearing in no quasicycle) and `P'` (nod-paths composed
/// of `E'` letters), plus the quasicycle statistics entering the
/// homogeneous dimension bound.
#[derive(Debug, Clone)]
pub struct PrimedSets {
    /// Letters that occur in no quasicycle, canonical order.
    pub e_prime: Vec<Letter>,
    /// Nod-paths over `e_prime`, including one trivial path per vertex,
    /// length-lexicographic order.
    pub p_prime: Vec<NodWord>,
    /// `k`: the number of quasicycles.
    pub quasicycle_count: usize,
    /// `l`: the maximal quasicycle length (0 without quasicycles).
    pub max_quasicycle_len: usize,
}

impl PrimedSets {
    /// The literal bound `|P'|² · k · l` on homogeneous dimensions of a
    /// locally finite algebra. Degenerates to 0 when no quasicycle
    /// exists.
    pub fn homogeneous_bound(&self) -> BigUint {
        let p = BigUint::from(self.p_prime.len());
        &p * &p * BigUint::from(self.quasicycle_count) * BigUint::from(self.max_quasicycle_len)
    }

    /// The testable bound: `|P'|² k l` when quasicycles exist; plain
    /// `|P'|` otherwise, since without quasicycles every nod-path lies in
    /// `P'` and the product formula degenerates.
    pub fn dimension_bound(&self) -> BigUint {
        if self.quasicycle_count == 0 {
            BigUint::from(self.p_prime.len())
        } else {
            self.homogeneous_bound()
        }
    }
}

/// Computes [`PrimedSets`]. Errors with [`Error::PrimedSetDiverges`] if
/// the `E'`-restricted letter digraph has a cycle (which would make `P'`
/// infinite and contradicts complete quasicycle enumeration).
pub fn primed_sets(g: &WeightedGraph, sp: &SpecialSelection) -> Result<PrimedSets> {
    let t = TransitionDigraph::build(g, sp);
    let qs = quasicycles_on(&t)?;
    primed_sets_on(g, &t, &qs)
}

/// [`primed_sets`] with prebuilt digraph and quasicycle list.
pub fn primed_sets_on(
    g: &WeightedGraph,
    t: &TransitionDigraph,
    qs: &[Quasicycle],
) -> Result<PrimedSets> {
    let mut used: BTreeSet<&Letter> = BTreeSet::new();
    for q in qs {
        used.extend(q.letters());
    }
    let keep: Vec<usize> = (0..t.letter_count())
        .filter(|&i| !used.contains(&t.letters()[i]))
        .collect();
    let keep_set: HashSet<usize> = keep.iter().copied().collect();

    // the restricted digraph must be acyclic for P' to be finite
    for &i in &keep {
        if cycle_from(t, i, &keep_set) {
            return Err(Error::PrimedSetDiverges);
        }
    }

    let mut p_prime: Vec<NodWord> = g
        .vertices()
        .iter()
        .map(|v| NodWord::Trivial(v.clone()))
        .collect();
    let mut budget = SEARCH_BUDGET;
    let mut frontier: Vec<Vec<usize>> = keep.iter().map(|&i| vec![i]).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for walk in &frontier {
            if budget == 0 {
                return Err(Error::CapExceeded(
                    "P' enumeration exhausted its state budget".to_owned(),
                ));
            }
            budget -= 1;
            p_prime.push(NodWord::Letters(
                walk.iter().map(|&i| t.letters()[i].clone()).collect(),
            ));
            let last = *walk.last().unwrap();
            for &s in t.successors(last) {
                if keep_set.contains(&s) {
                    let mut w = walk.clone();
                    w.push(s);
                    next.push(w);
                }
            }
        }
        frontier = next;
    }

    Ok(PrimedSets {
        e_prime: keep.into_iter().map(|i| t.letters()[i].clone()).collect(),
        p_prime,
        quasicycle_count: qs.len(),
        max_quasicycle_len: qs.iter().map(Quasicycle::len).max().unwrap_or(0),
    })
}

fn cycle_from(t: &TransitionDigraph, start: usize, keep: &HashSet<usize>) -> bool {
    let mut seen: HashSet<usize> = HashSet::new();
    let mut stack: Vec<usize> = t
        .successors(start)
        .iter()
        .copied()
        .filter(|s| keep.contains(s))
        .collect();
    while let Some(v) = stack.pop() {
        if v == start {
            return true;
        }
        if !seen.insert(v) {
            continue;
        }
        stack.extend(
            t.successors(v)
                .iter()
                .copied()
                .filter(|s| keep.contains(s)),
        );
    }
    false
}
