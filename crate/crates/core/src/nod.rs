//! Letters of the double graph, special edges, forbidden factors, the
//! transition digraph and everything built on top of it: nod-path
//! enumeration, graded dimension counting and growth classification.
//!
//! Fix a weighted graph `(E, w)`. Each edge `e` contributes `w(e)` real
//! letters `e_1 … e_{w(e)}` and as many ghost letters `e_1* … e_{w(e)}*`;
//! ghosts traverse the edge backwards. For a chosen special edge per
//! regular vertex, the forbidden words are exactly the length-2 factors
//! `e^v_i (e^v_j)*` and `e_1* f_1` (same source). A *nod-path* is a path
//! in the double graph avoiding all forbidden factors; the nod-paths form
//! a linear basis of the weighted Leavitt path algebra, graded over `ℤⁿ`
//! (`n` the maximal weight) by `deg(e_i) = ε_i`, `deg(e_i*) = -ε_i`.
//!
//! Because every forbidden word has length 2, the nontrivial nod-paths of
//! length `L` are exactly the walks visiting `L` nodes of the transition
//! digraph whose nodes are letters and whose arcs are the composable,
//! non-forbidden letter pairs.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::graph::WeightedGraph;
use crate::{Error, Result};

/// A letter of the double graph: a copy of an edge, real or ghost.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Letter {
    pub edge: String,
    pub copy: u32,
    pub ghost: bool,
}

impl Letter {
    pub fn real(edge: &str, copy: u32) -> Self {
        Letter {
            edge: edge.to_owned(),
            copy,
            ghost: false,
        }
    }

    pub fn ghost(edge: &str, copy: u32) -> Self {
        Letter {
            edge: edge.to_owned(),
            copy,
            ghost: true,
        }
    }

    pub fn star(&self) -> Self {
        Letter {
            edge: self.edge.clone(),
            copy: self.copy,
            ghost: !self.ghost,
        }
    }
}

// Canonical letter order: real before ghost, then edge id, then copy index.
impl Ord for Letter {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.ghost, &self.edge, self.copy).cmp(&(other.ghost, &other.edge, other.copy))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.edge, self.copy)?;
        if self.ghost {
            write!(f, "*")?;
        }
        Ok(())
    }
}

/// An element of the grading group `ℤⁿ`; `n = 0` gives the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree(pub Vec<i64>);

impl Degree {
    pub fn zero(n: usize) -> Self {
        Degree(vec![0; n])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add_letter(&mut self, letter: &Letter) {
        let i = (letter.copy - 1) as usize;
        self.0[i] += if letter.ghost { -1 } else { 1 };
    }

    pub fn plus(&self, other: &Degree) -> Degree {
        Degree(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn negated(&self) -> Degree {
        Degree(self.0.iter().map(|c| -c).collect())
    }

    /// Parses the comma-joined form, e.g. `1,-1`. Empty input is the
    /// degree of rank 0.
    pub fn parse(text: &str, n: usize) -> Result<Degree> {
        let text = text.trim();
        if text.is_empty() {
            if n == 0 {
                return Ok(Degree::zero(0));
            }
            return Err(Error::Parse {
                line: 0,
                msg: format!("degree vector must have {n} components"),
            });
        }
        let comps: Vec<i64> = text
            .split(',')
            .map(|c| {
                c.trim().parse::<i64>().map_err(|_| Error::Parse {
                    line: 0,
                    msg: format!("invalid degree component `{c}`"),
                })
            })
            .collect::<Result<_>>()?;
        if comps.len() != n {
            return Err(Error::Parse {
                line: 0,
                msg: format!("degree vector must have {n} components"),
            });
        }
        Ok(Degree(comps))
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A word over the double graph alphabet: a trivial path at a vertex or
/// a nonempty letter sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodWord {
    Trivial(String),
    Letters(Vec<Letter>),
}

impl NodWord {
    pub fn len(&self) -> usize {
        match self {
            NodWord::Trivial(_) => 0,
            NodWord::Letters(ls) => ls.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn letters(&self) -> &[Letter] {
        match self {
            NodWord::Trivial(_) => &[],
            NodWord::Letters(ls) => ls,
        }
    }

    /// Degree in `ℤⁿ`; trivial words have degree 0.
    pub fn degree(&self, n: usize) -> Degree {
        let mut d = Degree::zero(n);
        for l in self.letters() {
            d.add_letter(l);
        }
        d
    }

    /// The word read backwards with every letter starred.
    pub fn star(&self) -> NodWord {
        match self {
            NodWord::Trivial(v) => NodWord::Trivial(v.clone()),
            NodWord::Letters(ls) => {
                NodWord::Letters(ls.iter().rev().map(Letter::star).collect())
            }
        }
    }
}

impl fmt::Display for NodWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodWord::Trivial(v) => write!(f, "{v}"),
            NodWord::Letters(ls) => {
                let parts: Vec<String> = ls.iter().map(|l| l.to_string()).collect();
                write!(f, "{}", parts.join(" "))
            }
        }
    }
}

/// `s_d` of a letter: `s(e)` for a real letter, `r(e)` for a ghost.
pub fn letter_source(g: &WeightedGraph, letter: &Letter) -> Result<String> {
    let e = g.edge(&letter.edge)?;
    Ok(if letter.ghost {
        e.range.clone()
    } else {
        e.source.clone()
    })
}

/// `r_d` of a letter: `r(e)` for a real letter, `s(e)` for a ghost.
pub fn letter_range(g: &WeightedGraph, letter: &Letter) -> Result<String> {
    let e = g.edge(&letter.edge)?;
    Ok(if letter.ghost {
        e.source.clone()
    } else {
        e.range.clone()
    })
}

fn validate_letter(g: &WeightedGraph, letter: &Letter) -> Result<()> {
    let e = g
        .edge(&letter.edge)
        .map_err(|_| Error::UnknownLetter(letter.to_string()))?;
    if letter.copy < 1 || letter.copy > e.weight {
        return Err(Error::UnknownLetter(letter.to_string()));
    }
    Ok(())
}

/// Source of a word (`s_d` of the first letter; the vertex itself for a
/// trivial word).
pub fn word_source(g: &WeightedGraph, word: &NodWord) -> Result<String> {
    match word {
        NodWord::Trivial(v) => {
            if g.has_vertex(v) {
                Ok(v.clone())
            } else {
                Err(Error::UnknownVertex(v.clone()))
            }
        }
        NodWord::Letters(ls) => letter_source(g, &ls[0]),
    }
}

/// Range of a word (`r_d` of the last letter).
pub fn word_range(g: &WeightedGraph, word: &NodWord) -> Result<String> {
    match word {
        NodWord::Trivial(v) => {
            if g.has_vertex(v) {
                Ok(v.clone())
            } else {
                Err(Error::UnknownVertex(v.clone()))
            }
        }
        NodWord::Letters(ls) => letter_range(g, ls.last().unwrap()),
    }
}

/// A choice of special edge for every regular vertex. The selected edge
/// always has maximal weight at its source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialSelection {
    map: BTreeMap<String, String>,
}

impl SpecialSelection {
    /// Selects special edges: overrides where given, otherwise the
    /// lexicographically least maximal-weight edge at each regular vertex.
    pub fn select(g: &WeightedGraph, overrides: &BTreeMap<String, String>) -> Result<Self> {
        for (v, e) in overrides {
            if !g.has_vertex(v) {
                return Err(Error::UnknownVertex(v.clone()));
            }
            let edge = g.edge(e)?;
            if edge.source != *v {
                return Err(Error::SpecialWrongSource {
                    vertex: v.clone(),
                    edge: e.clone(),
                });
            }
            if edge.weight != g.vertex_weight(v) {
                return Err(Error::SpecialNotMaximal {
                    vertex: v.clone(),
                    edge: e.clone(),
                });
            }
        }
        let mut map = BTreeMap::new();
        for v in g.vertices() {
            if g.is_sink(v) {
                continue;
            }
            if let Some(e) = overrides.get(v) {
                map.insert(v.clone(), e.clone());
                continue;
            }
            let w = g.vertex_weight(v);
            let pick = g
                .out_edges(v)
                .filter(|e| e.weight == w)
                .map(|e| e.id.clone())
                .min()
                .expect("regular vertex has a maximal-weight edge");
            map.insert(v.clone(), pick);
        }
        Ok(SpecialSelection { map })
    }

    /// The default selection, honouring the graph's declared specials.
    pub fn default_for(g: &WeightedGraph) -> Result<Self> {
        Self::select(g, g.declared_special())
    }

    pub fn special_edge(&self, vertex: &str) -> Option<&str> {
        self.map.get(vertex).map(String::as_str)
    }

    pub fn as_map(&self) -> &BTreeMap<String, String> {
        &self.map
    }

    /// Enumerates every valid selection (the cartesian product of
    /// maximal-weight choices per regular vertex), default-first order.
    pub fn all_for(g: &WeightedGraph) -> Result<Vec<SpecialSelection>> {
        let mut choices: Vec<(String, Vec<String>)> = Vec::new();
        for v in g.vertices() {
            if g.is_sink(v) {
                continue;
            }
            let w = g.vertex_weight(v);
            let mut ids: Vec<String> = g
                .out_edges(v)
                .filter(|e| e.weight == w)
                .map(|e| e.id.clone())
                .collect();
            ids.sort();
            choices.push((v.clone(), ids));
        }
        let mut result = vec![BTreeMap::new()];
        for (v, ids) in &choices {
            let mut next = Vec::with_capacity(result.len() * ids.len());
            for partial in &result {
                for id in ids {
                    let mut m: BTreeMap<String, String> = partial.clone();
                    m.insert(v.clone(), id.clone());
                    next.push(m);
                }
            }
            result = next;
        }
        result
            .into_iter()
            .map(|m| SpecialSelection::select(g, &m))
            .collect()
    }
}

/// The forbidden length-2 words: `e^v_i (e^v_j)*` over all copy pairs of
/// each special edge, and `e_1* f_1` over all ordered pairs with a common
/// source (including `e = f`).
pub fn forbidden_pairs(
    g: &WeightedGraph,
    sp: &SpecialSelection,
) -> BTreeSet<(Letter, Letter)> {
    let mut set = BTreeSet::new();
    for (v, e) in sp.as_map() {
        let w = g.vertex_weight(v);
        for i in 1..=w {
            for j in 1..=w {
                set.insert((Letter::real(e, i), Letter::ghost(e, j)));
            }
        }
    }
    for v in g.vertices() {
        for e in g.out_edges(v) {
            for f in g.out_edges(v) {
                set.insert((Letter::ghost(&e.id, 1), Letter::real(&f.id, 1)));
            }
        }
    }
    set
}

/// The transition digraph: nodes are all letters (canonical order), arcs
/// the composable non-forbidden letter pairs. Nontrivial nod-paths of
/// length `L` correspond bijectively to walks visiting `L` nodes.
#[derive(Debug, Clone)]
pub struct TransitionDigraph {
    letters: Vec<Letter>,
    index: HashMap<Letter, usize>,
    source: Vec<String>,
    range: Vec<String>,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
    rank: usize,
}

impl TransitionDigraph {
    pub fn build(g: &WeightedGraph, sp: &SpecialSelection) -> TransitionDigraph {
        let mut letters: Vec<Letter> = Vec::new();
        for e in g.edges() {
            for i in 1..=e.weight {
                letters.push(Letter::real(&e.id, i));
                letters.push(Letter::ghost(&e.id, i));
            }
        }
        letters.sort();
        let index: HashMap<Letter, usize> = letters
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        let source: Vec<String> = letters
            .iter()
            .map(|l| letter_source(g, l).expect("letter of a graph edge"))
            .collect();
        let range: Vec<String> = letters
            .iter()
            .map(|l| letter_range(g, l).expect("letter of a graph edge"))
            .collect();
        let forbidden = forbidden_pairs(g, sp);
        let n = letters.len();
        let mut succ = vec![Vec::new(); n];
        let mut pred = vec![Vec::new(); n];
        for a in 0..n {
            for b in 0..n {
                if range[a] == source[b] {
                    let pair = (letters[a].clone(), letters[b].clone());
                    if !forbidden.contains(&pair) {
                        succ[a].push(b);
                        pred[b].push(a);
                    }
                }
            }
        }
        TransitionDigraph {
            letters,
            index,
            source,
            range,
            succ,
            pred,
            rank: g.max_weight() as usize,
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn letter_count(&self) -> usize {
        self.letters.len()
    }

    /// Rank `n` of the grading group.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn index_of_letter(&self, letter: &Letter) -> Option<usize> {
        self.index.get(letter).copied()
    }

    pub fn successors(&self, letter_idx: usize) -> &[usize] {
        &self.succ[letter_idx]
    }

    pub fn predecessors(&self, letter_idx: usize) -> &[usize] {
        &self.pred[letter_idx]
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        self.succ[from].binary_search(&to).is_ok()
    }

    pub fn source_of(&self, letter_idx: usize) -> &str {
        &self.source[letter_idx]
    }

    pub fn range_of(&self, letter_idx: usize) -> &str {
        &self.range[letter_idx]
    }

    pub fn degree_of(&self, letter_idx: usize) -> Degree {
        let mut d = Degree::zero(self.rank);
        d.add_letter(&self.letters[letter_idx]);
        d
    }

    pub fn arc_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }
}

/// True iff the word is a d-path without forbidden factor. Trivial words
/// at a known vertex are always nod.
pub fn is_nod(g: &WeightedGraph, sp: &SpecialSelection, word: &NodWord) -> Result<bool> {
    let letters = match word {
        NodWord::Trivial(v) => {
            if g.has_vertex(v) {
                return Ok(true);
            }
            return Err(Error::UnknownVertex(v.clone()));
        }
        NodWord::Letters(ls) => ls,
    };
    for l in letters {
        validate_letter(g, l)?;
    }
    let forbidden = forbidden_pairs(g, sp);
    for pair in letters.windows(2) {
        if letter_range(g, &pair[0])? != letter_source(g, &pair[1])? {
            return Ok(false);
        }
        if forbidden.contains(&(pair[0].clone(), pair[1].clone())) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Enumerates all nod-paths of length at most `max_len` in
/// length-lexicographic order (trivial paths first, in vertex file
/// order), optionally filtered by degree.
pub fn enumerate_nod(
    g: &WeightedGraph,
    sp: &SpecialSelection,
    max_len: usize,
    degree_filter: Option<&Degree>,
) -> Vec<NodWord> {
    let t = TransitionDigraph::build(g, sp);
    let n = t.rank();
    let mut out: Vec<NodWord> = Vec::new();
    let keep = |d: &Degree| degree_filter.map_or(true, |want| want == d);

    if keep(&Degree::zero(n)) {
        for v in g.vertices() {
            out.push(NodWord::Trivial(v.clone()));
        }
    }
    // frontier of walks of the current length, in length-lex order
    let mut frontier: Vec<(Vec<usize>, Degree)> = (0..t.letter_count())
        .map(|i| (vec![i], t.degree_of(i)))
        .collect();
    let mut len = 1;
    while len <= max_len && !frontier.is_empty() {
        for (walk, d) in &frontier {
            if keep(d) {
                out.push(NodWord::Letters(
                    walk.iter().map(|&i| t.letters()[i].clone()).collect(),
                ));
            }
        }
        let mut next = Vec::new();
        if len < max_len {
            for (walk, d) in &frontier {
                let last = *walk.last().unwrap();
                for &s in t.successors(last) {
                    let mut w = walk.clone();
                    w.push(s);
                    next.push((w, d.plus(&t.degree_of(s))));
                }
            }
        }
        frontier = next;
        len += 1;
    }
    out
}

/// Counts nod-paths of length at most `max_len` per degree, by dynamic
/// programming over the transition digraph with exact integers. Trivial
/// paths contribute the vertex count at degree 0.
pub fn count_by_degree(
    g: &WeightedGraph,
    sp: &SpecialSelection,
    max_len: usize,
) -> BTreeMap<Degree, BigUint> {
    let t = TransitionDigraph::build(g, sp);
    count_by_degree_on(&t, g.vertices().len(), max_len)
}

/// DP core of [`count_by_degree`], reusable with a prebuilt digraph.
pub fn count_by_degree_on(
    t: &TransitionDigraph,
    vertex_count: usize,
    max_len: usize,
) -> BTreeMap<Degree, BigUint> {
    let mut totals: BTreeMap<Degree, BigUint> = BTreeMap::new();
    *totals.entry(Degree::zero(t.rank())).or_default() += vertex_count;

    // per-letter degree distribution of walks ending at that letter
    let mut cur: Vec<BTreeMap<Degree, BigUint>> = (0..t.letter_count())
        .map(|i| BTreeMap::from([(t.degree_of(i), BigUint::one())]))
        .collect();
    let mut len = 1;
    while len <= max_len {
        let mut any = false;
        for dist in &cur {
            for (d, c) in dist {
                any = true;
                *totals.entry(d.clone()).or_default() += c;
            }
        }
        if !any {
            break;
        }
        len += 1;
        if len > max_len {
            break;
        }
        let mut next: Vec<BTreeMap<Degree, BigUint>> =
            vec![BTreeMap::new(); t.letter_count()];
        for (y, slot) in next.iter_mut().enumerate() {
            let dy = t.degree_of(y);
            for &x in t.predecessors(y) {
                for (d, c) in &cur[x] {
                    *slot.entry(d.plus(&dy)).or_default() += c;
                }
            }
        }
        cur = next;
    }
    totals
}

/// Maximal copy index among the letters of a nontrivial word.
pub fn index_of(word: &NodWord) -> Result<u32> {
    match word {
        NodWord::Trivial(_) => Err(Error::TrivialWord),
        NodWord::Letters(ls) => Ok(ls.iter().map(|l| l.copy).max().unwrap()),
    }
}

/// True iff every letter `e_j` of the (nonempty, all-real) word satisfies
/// `j > max{w(f) | f ∈ s⁻¹(s(e)), f ≠ e}` with `max ∅ = 0`. Super-special
/// letters are forced special under every selection.
pub fn is_super_special(g: &WeightedGraph, word: &NodWord) -> Result<bool> {
    let letters = real_letters(g, word)?;
    for l in letters {
        let e = g.edge(&l.edge)?;
        let others = g
            .out_edges(&e.source)
            .filter(|f| f.id != l.edge)
            .map(|f| f.weight)
            .max()
            .unwrap_or(0);
        if l.copy <= others {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff every edge of the (nonempty, all-real) word is unweighted.
pub fn is_unweighted_path(g: &WeightedGraph, word: &NodWord) -> Result<bool> {
    let letters = real_letters(g, word)?;
    for l in letters {
        if g.edge(&l.edge)?.weight != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn real_letters<'a>(g: &WeightedGraph, word: &'a NodWord) -> Result<&'a [Letter]> {
    let letters = match word {
        NodWord::Trivial(_) => return Err(Error::TrivialWord),
        NodWord::Letters(ls) => ls,
    };
    for l in letters {
        validate_letter(g, l)?;
        if l.ghost {
            return Err(Error::GhostLetter);
        }
    }
    Ok(letters)
}

/// One block of the factorization computed by [`parse_weighted_head`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HeadBlock {
    /// A maximal run of real letters; verified super-special.
    SuperSpecial(Vec<Letter>),
    /// A maximal run of ghost letters; the underlying edges are verified
    /// unweighted (so all copy indices are 1).
    UnweightedGhost(Vec<Letter>),
}

/// Factors a nod-path starting with `e_i` (`e` weighted, `i ≥ 2`) into the
/// alternation `p_1 q_1* … p_n q_n*` (possibly ending with `p_n`) of
/// super-special real blocks and unweighted ghost blocks guaranteed when
/// the weighted part is weakly well-behaved.
pub fn parse_weighted_head(
    g: &WeightedGraph,
    sp: &SpecialSelection,
    word: &NodWord,
) -> Result<Vec<HeadBlock>> {
    let letters = match word {
        NodWord::Trivial(_) => return Err(Error::TrivialWord),
        NodWord::Letters(ls) => ls,
    };
    if !is_nod(g, sp, word)? {
        return Err(Error::NotNod(word.to_string()));
    }
    let first = &letters[0];
    if first.ghost || first.copy < 2 || g.edge(&first.edge)?.weight < 2 {
        return Err(Error::StructuralPrecondition(format!(
            "word must start with e_i for a weighted edge e and i >= 2, got `{first}`"
        )));
    }

    let mut blocks: Vec<HeadBlock> = Vec::new();
    let mut run: Vec<Letter> = Vec::new();
    let mut run_ghost = false;
    for l in letters {
        if run.is_empty() || l.ghost == run_ghost {
            run_ghost = l.ghost;
            run.push(l.clone());
        } else {
            blocks.push(finish_block(g, run, run_ghost, word)?);
            run = vec![l.clone()];
            run_ghost = l.ghost;
        }
    }
    blocks.push(finish_block(g, run, run_ghost, word)?);
    Ok(blocks)
}

fn finish_block(
    g: &WeightedGraph,
    run: Vec<Letter>,
    ghost: bool,
    word: &NodWord,
) -> Result<HeadBlock> {
    if ghost {
        let unstarred = NodWord::Letters(run.iter().rev().map(Letter::star).collect());
        if !is_unweighted_path(g, &unstarred)? {
            return Err(Error::StructuralPrecondition(format!(
                "ghost block of `{word}` is not unweighted; the weighted part is not weakly well-behaved"
            )));
        }
        Ok(HeadBlock::UnweightedGhost(run))
    } else {
        let real = NodWord::Letters(run.clone());
        if !is_super_special(g, &real)? {
            return Err(Error::StructuralPrecondition(format!(
                "real block of `{word}` is not super-special; the weighted part is not weakly well-behaved"
            )));
        }
        Ok(HeadBlock::SuperSpecial(run))
    }
}

/// True iff `op` is a nod-path for every nontrivial nod-path `o` ending at
/// the source of `p`. Because forbidden words have length 2, this reduces
/// to: every letter `x` with `r_d(x) = s(p)` has the arc `x -> first(p)`.
pub fn is_lenod(g: &WeightedGraph, sp: &SpecialSelection, word: &NodWord) -> Result<bool> {
    if word.is_empty() {
        return Err(Error::TrivialWord);
    }
    if !is_nod(g, sp, word)? {
        return Err(Error::NotNod(word.to_string()));
    }
    let t = TransitionDigraph::build(g, sp);
    let first = t
        .index_of_letter(&word.letters()[0])
        .expect("validated letter");
    let start = word_source(g, word)?;
    for x in 0..t.letter_count() {
        if t.range_of(x) == start && !t.has_arc(x, first) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Growth of the walk language of a transition digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Growth {
    /// Finitely many walks: the digraph is acyclic (no self-loops).
    Finite,
    /// Walk counts grow linearly: every cyclic strongly connected
    /// component is a single simple cycle and no walk visits two of them.
    Linear,
    Superlinear,
}

impl fmt::Display for Growth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Growth::Finite => write!(f, "finite"),
            Growth::Linear => write!(f, "linear"),
            Growth::Superlinear => write!(f, "superlinear"),
        }
    }
}

/// Classifies walk-language growth by strongly connected component
/// analysis of the transition digraph.
pub fn growth_class(t: &TransitionDigraph) -> Growth {
    let n = t.letter_count();
    let comps = tarjan_scc(n, |v| t.successors(v));
    let comp_of = {
        let mut map = vec![usize::MAX; n];
        for (ci, comp) in comps.iter().enumerate() {
            for &v in comp {
                map[v] = ci;
            }
        }
        map
    };

    // a component is cyclic when it carries any internal arc
    let mut internal_arcs = vec![0usize; comps.len()];
    for v in 0..n {
        for &w in t.successors(v) {
            if comp_of[v] == comp_of[w] {
                internal_arcs[comp_of[v]] += 1;
            }
        }
    }
    let cyclic: Vec<bool> = comps
        .iter()
        .enumerate()
        .map(|(ci, _)| internal_arcs[ci] > 0)
        .collect();
    if !cyclic.iter().any(|&c| c) {
        return Growth::Finite;
    }
    // a cyclic SCC is a single simple cycle iff internal arcs == nodes
    for (ci, comp) in comps.iter().enumerate() {
        if cyclic[ci] && internal_arcs[ci] != comp.len() {
            return Growth::Superlinear;
        }
    }
    // superlinear iff some walk passes through two distinct cycles:
    // check condensation reachability between cyclic components
    let mut dag: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); comps.len()];
    for v in 0..n {
        for &w in t.successors(v) {
            if comp_of[v] != comp_of[w] {
                dag[comp_of[v]].insert(comp_of[w]);
            }
        }
    }
    for start in 0..comps.len() {
        if !cyclic[start] {
            continue;
        }
        let mut seen = vec![false; comps.len()];
        let mut stack: Vec<usize> = dag[start].iter().copied().collect();
        while let Some(c) = stack.pop() {
            if seen[c] {
                continue;
            }
            seen[c] = true;
            if cyclic[c] {
                return Growth::Superlinear;
            }
            stack.extend(dag[c].iter().copied());
        }
    }
    Growth::Linear
}

/// Tarjan's strongly connected components; returned in reverse
/// topological order of the condensation.
pub(crate) fn tarjan_scc<'a, F>(n: usize, succ: F) -> Vec<Vec<usize>>
where
    F: Fn(usize) -> &'a [usize],
{
    struct State {
        index: usize,
        stack: Vec<usize>,
        on_stack: Vec<bool>,
        idx: Vec<Option<usize>>,
        low: Vec<usize>,
        comps: Vec<Vec<usize>>,
    }
    fn connect<'a, F: Fn(usize) -> &'a [usize]>(v: usize, succ: &F, st: &mut State) {
        st.idx[v] = Some(st.index);
        st.low[v] = st.index;
        st.index += 1;
        st.stack.push(v);
        st.on_stack[v] = true;
        for &w in succ(v) {
            if st.idx[w].is_none() {
                connect(w, succ, st);
                st.low[v] = st.low[v].min(st.low[w]);
            } else if st.on_stack[w] {
                st.low[v] = st.low[v].min(st.idx[w].unwrap());
            }
        }
        if st.low[v] == st.idx[v].unwrap() {
            let mut comp = Vec::new();
            loop {
                let w = st.stack.pop().expect("tarjan stack underflow");
                st.on_stack[w] = false;
                comp.push(w);
                if w == v {
                    break;
                }
            }
            st.comps.push(comp);
        }
    }
    let mut st = State {
        index: 0,
        stack: Vec::new(),
        on_stack: vec![false; n],
        idx: vec![None; n],
        low: vec![0; n],
        comps: Vec::new(),
    };
    for v in 0..n {
        if st.idx[v].is_none() {
            connect(v, &succ, &mut st);
        }
    }
    st.comps
}
