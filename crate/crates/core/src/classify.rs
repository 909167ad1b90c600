//! The five well-behavedness conditions, cycle/exit analysis and the
//! theorem-level verdicts: finite-dimensional, locally finite, Noetherian
//! and the GK class, each failure carrying a checkable witness.
//!
//! The conditions quantify over the whole graph but only ever see the
//! subgraph generated by weighted vertices, so checking them on the graph
//! itself equals checking well-behavedness of the weighted part. An
//! unweighted graph satisfies all five vacuously.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::graph::{GraphPath, VertexSet, WeightedGraph};
use crate::nod::{is_nod, NodWord, SpecialSelection, TransitionDigraph};
use crate::quasicycle::{self, GkClass};
use crate::{Error, Result};

/// The five conditions of the well-behavedness definition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    /// No vertex emits two distinct weighted edges.
    I,
    /// No vertex in `T(r(E¹_w))` emits two distinct edges.
    II,
    /// Weighted edges not in line have disjoint range trees.
    III,
    /// No cycle is based at a vertex of `T(r(E¹_w))`.
    IV,
    /// No crosswise system of weighted-first / unweighted-first path
    /// pairs closes up.
    V,
}

impl Condition {
    pub const ALL: [Condition; 5] = [
        Condition::I,
        Condition::II,
        Condition::III,
        Condition::IV,
        Condition::V,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Condition::I => "i",
            Condition::II => "ii",
            Condition::III => "iii",
            Condition::IV => "iv",
            Condition::V => "v",
        }
    }
}

/// A concrete forbidden constellation, re-verifiable against the raw
/// definition by [`verify_condition_witness`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConditionWitness {
    /// (i): two distinct weighted edges with a common source.
    TwoWeightedEdges {
        vertex: String,
        first: String,
        second: String,
    },
    /// (ii): a vertex of `T(r(E¹_w))` emitting two distinct edges.
    DoubleEmitter {
        vertex: String,
        first: String,
        second: String,
    },
    /// (iii): weighted edges not in line whose range trees share `common`.
    OverlappingRangeTrees {
        first: String,
        second: String,
        common: String,
    },
    /// (iv): a cycle based at a vertex of `T(r(E¹_w))`.
    CycleInWeightedTree { cycle: Vec<String>, vertex: String },
    /// (v): path pairs `(p_i, q_i)` with `r(p_i) = r(q_i)`,
    /// `s(p_i) = s(q_{i-1})` cyclically, `p_i` starting weighted, `q_i`
    /// starting unweighted and distinct last edges.
    CrosswiseSystem { pairs: Vec<(Vec<String>, Vec<String>)> },
}

/// Verdict for one condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConditionVerdict {
    Holds,
    Fails(ConditionWitness),
}

impl ConditionVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, ConditionVerdict::Holds)
    }

    pub fn witness(&self) -> Option<&ConditionWitness> {
        match self {
            ConditionVerdict::Holds => None,
            ConditionVerdict::Fails(w) => Some(w),
        }
    }
}

/// Per-condition verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub verdicts: BTreeMap<Condition, ConditionVerdict>,
}

impl ConditionReport {
    pub fn all_hold(&self) -> bool {
        self.verdicts.values().all(ConditionVerdict::holds)
    }

    pub fn weakly_well_behaved(&self) -> bool {
        Condition::ALL[..4]
            .iter()
            .all(|c| self.verdicts[c].holds())
    }

    pub fn verdict(&self, c: Condition) -> &ConditionVerdict {
        &self.verdicts[&c]
    }
}

/// Checks conditions (i)–(v). (i)–(iv) are direct graph queries;
/// (v) is decided completely by a cycle test on the convergence relation
/// `R(a, b)` (a weighted-first path from `a` and an unweighted-first path
/// from `b` converge with distinct last edges), since a crosswise system
/// of any size is exactly a cycle in `R`.
pub fn check_conditions(g: &WeightedGraph) -> Result<ConditionReport> {
    let mut verdicts = BTreeMap::new();
    verdicts.insert(Condition::I, condition_i(g));
    verdicts.insert(Condition::II, condition_ii(g)?);
    verdicts.insert(Condition::III, condition_iii(g)?);
    verdicts.insert(Condition::IV, condition_iv(g)?);
    verdicts.insert(Condition::V, condition_v(g)?);
    Ok(ConditionReport { verdicts })
}

fn condition_i(g: &WeightedGraph) -> ConditionVerdict {
    let mut vertices: Vec<&String> = g.vertices().iter().collect();
    vertices.sort();
    for v in vertices {
        let mut weighted: Vec<String> = g
            .out_edges(v)
            .filter(|e| e.weight > 1)
            .map(|e| e.id.clone())
            .collect();
        weighted.sort();
        if weighted.len() >= 2 {
            return ConditionVerdict::Fails(ConditionWitness::TwoWeightedEdges {
                vertex: v.clone(),
                first: weighted[0].clone(),
                second: weighted[1].clone(),
            });
        }
    }
    ConditionVerdict::Holds
}

/// `T(r(E¹_w))`: the tree of the ranges of all weighted edges.
pub fn weighted_range_tree(g: &WeightedGraph) -> Result<VertexSet> {
    let ranges: VertexSet = g
        .edges()
        .iter()
        .filter(|e| e.weight > 1)
        .map(|e| e.range.clone())
        .collect();
    g.tree(&ranges)
}

fn condition_ii(g: &WeightedGraph) -> Result<ConditionVerdict> {
    for v in weighted_range_tree(g)? {
        let mut out: Vec<String> = g.out_edges(&v).map(|e| e.id.clone()).collect();
        out.sort();
        if out.len() >= 2 {
            return Ok(ConditionVerdict::Fails(ConditionWitness::DoubleEmitter {
                vertex: v,
                first: out[0].clone(),
                second: out[1].clone(),
            }));
        }
    }
    Ok(ConditionVerdict::Holds)
}

fn condition_iii(g: &WeightedGraph) -> Result<ConditionVerdict> {
    let mut weighted: Vec<&crate::graph::Edge> =
        g.edges().iter().filter(|e| e.weight > 1).collect();
    weighted.sort_by(|a, b| a.id.cmp(&b.id));
    for e in &weighted {
        for f in &weighted {
            if e.id >= f.id || g.in_line(&e.id, &f.id)? {
                continue;
            }
            let te = g.tree_of(&e.range)?;
            let tf = g.tree_of(&f.range)?;
            if let Some(common) = te.intersection(&tf).next() {
                return Ok(ConditionVerdict::Fails(
                    ConditionWitness::OverlappingRangeTrees {
                        first: e.id.clone(),
                        second: f.id.clone(),
                        common: common.clone(),
                    },
                ));
            }
        }
    }
    Ok(ConditionVerdict::Holds)
}

fn condition_iv(g: &WeightedGraph) -> Result<ConditionVerdict> {
    let tree = weighted_range_tree(g)?;
    for cycle in g.cycles() {
        let ids = cycle.edge_ids();
        for (i, id) in ids.iter().enumerate() {
            let source = g.edge(id)?.source.clone();
            if tree.contains(&source) {
                // rotate the representative so it is based at the witness
                let rotated: Vec<String> = ids[i..]
                    .iter()
                    .chain(ids[..i].iter())
                    .cloned()
                    .collect();
                return Ok(ConditionVerdict::Fails(
                    ConditionWitness::CycleInWeightedTree {
                        cycle: rotated,
                        vertex: source,
                    },
                ));
            }
        }
    }
    Ok(ConditionVerdict::Holds)
}

/// A witnessed arc of the convergence relation: paths `p` (weighted
/// first edge) and `q` (unweighted first edge) with `r(p) = r(q)` and
/// distinct last edges.
type ConvergencePair = (Vec<String>, Vec<String>);

fn condition_v(g: &WeightedGraph) -> Result<ConditionVerdict> {
    let mut relation: BTreeMap<(String, String), ConvergencePair> = BTreeMap::new();
    let mut vertices: Vec<&String> = g.vertices().iter().collect();
    vertices.sort();
    for a in &vertices {
        for b in &vertices {
            if let Some(pair) = convergence_witness(g, a, b)? {
                relation.insert(((*a).clone(), (*b).clone()), pair);
            }
        }
    }
    // condition (v) fails iff the relation digraph has a cycle
    let mut succ: BTreeMap<&String, Vec<&String>> = BTreeMap::new();
    for (a, b) in relation.keys() {
        succ.entry(a).or_default().push(b);
    }
    if let Some(cycle) = digraph_cycle(&succ) {
        let n = cycle.len();
        // pairs indexed so that s(p_i) = cycle[i], s(q_i) = cycle[i+1]
        let mut pairs = Vec::with_capacity(n);
        for i in 0..n {
            let a = &cycle[i];
            let b = &cycle[(i + 1) % n];
            let pair = relation[&(a.clone(), b.clone())].clone();
            pairs.push(pair);
        }
        return Ok(ConditionVerdict::Fails(ConditionWitness::CrosswiseSystem {
            pairs,
        }));
    }
    Ok(ConditionVerdict::Holds)
}

/// First (lexicographic) witnessed convergence of a weighted-first path
/// from `a` and an unweighted-first path from `b`.
fn convergence_witness(g: &WeightedGraph, a: &str, b: &str) -> Result<Option<ConvergencePair>> {
    let weighted_last = last_edge_reach(g, a, true)?;
    let unweighted_last = last_edge_reach(g, b, false)?;
    for (e_last, e_first) in &weighted_last {
        for (f_last, f_first) in &unweighted_last {
            if e_last == f_last {
                continue;
            }
            if g.edge(e_last)?.range == g.edge(f_last)?.range {
                let p = reconstruct_path(g, e_first, e_last)?;
                let q = reconstruct_path(g, f_first, f_last)?;
                return Ok(Some((p, q)));
            }
        }
    }
    Ok(None)
}

/// All edges that can be the last edge of a path from `a` whose first
/// edge is weighted (resp. unweighted), each with the lexicographically
/// least first edge realising it.
fn last_edge_reach(
    g: &WeightedGraph,
    a: &str,
    weighted_first: bool,
) -> Result<BTreeMap<String, String>> {
    let mut result: BTreeMap<String, String> = BTreeMap::new();
    let mut firsts: Vec<&crate::graph::Edge> = g
        .out_edges(a)
        .filter(|e| (e.weight > 1) == weighted_first)
        .collect();
    firsts.sort_by(|x, y| x.id.cmp(&y.id));
    for first in firsts {
        let tree = g.tree_of(&first.range)?;
        result.entry(first.id.clone()).or_insert(first.id.clone());
        for e in g.edges() {
            if tree.contains(&e.source) {
                result.entry(e.id.clone()).or_insert(first.id.clone());
            }
        }
    }
    Ok(result)
}

/// Shortest path that starts with `first`, ends with `last` (possibly the
/// same edge), deterministic via lexicographic BFS.
fn reconstruct_path(g: &WeightedGraph, first: &str, last: &str) -> Result<Vec<String>> {
    if first == last {
        return Ok(vec![first.to_owned()]);
    }
    let start = g.edge(first)?.range.clone();
    let target = g.edge(last)?.source.clone();
    let middle = shortest_vertex_path(g, &start, &target).ok_or_else(|| {
        Error::InternalAssertion(format!(
            "no path between `{start}` and `{target}` while reconstructing a witness"
        ))
    })?;
    let mut path = vec![first.to_owned()];
    path.extend(middle);
    path.push(last.to_owned());
    Ok(path)
}

/// Edge sequence of a shortest path from `from` to `to` (empty when they
/// coincide), breaking ties lexicographically.
fn shortest_vertex_path(g: &WeightedGraph, from: &str, to: &str) -> Option<Vec<String>> {
    if from == to {
        return Some(Vec::new());
    }
    let mut parent: HashMap<String, String> = HashMap::new(); // vertex -> incoming edge
    let mut queue = VecDeque::from([from.to_owned()]);
    let mut seen: BTreeSet<String> = BTreeSet::from([from.to_owned()]);
    while let Some(v) = queue.pop_front() {
        let mut outs: Vec<&crate::graph::Edge> = g.out_edges(&v).collect();
        outs.sort_by(|a, b| a.id.cmp(&b.id));
        for e in outs {
            if seen.insert(e.range.clone()) {
                parent.insert(e.range.clone(), e.id.clone());
                if e.range == to {
                    let mut path = Vec::new();
                    let mut at = to.to_owned();
                    while at != from {
                        let eid = parent[&at].clone();
                        at = g.edge(&eid).expect("parent edge").source.clone();
                        path.push(eid);
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(e.range.clone());
            }
        }
    }
    None
}

/// Finds any directed cycle (as its vertex sequence) in a digraph given
/// by successor lists; deterministic.
fn digraph_cycle(succ: &BTreeMap<&String, Vec<&String>>) -> Option<Vec<String>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Color {
        White,
        Grey,
        Black,
    }
    let mut color: BTreeMap<&String, Color> = succ.keys().map(|v| (*v, Color::White)).collect();
    for (b, targets) in succ {
        for t in targets {
            color.entry(t).or_insert(Color::White);
            let _ = b;
        }
    }
    fn visit<'a>(
        v: &'a String,
        succ: &BTreeMap<&String, Vec<&'a String>>,
        color: &mut BTreeMap<&'a String, Color>,
        stack: &mut Vec<&'a String>,
    ) -> Option<Vec<String>> {
        color.insert(v, Color::Grey);
        stack.push(v);
        if let Some(targets) = succ.get(v) {
            for &t in targets {
                match color.get(t).copied().unwrap_or(Color::White) {
                    Color::Grey => {
                        let pos = stack.iter().position(|x| *x == t).unwrap();
                        return Some(stack[pos..].iter().map(|s| (*s).clone()).collect());
                    }
                    Color::White => {
                        if let Some(c) = visit(t, succ, color, stack) {
                            return Some(c);
                        }
                    }
                    Color::Black => {}
                }
            }
        }
        stack.pop();
        color.insert(v, Color::Black);
        None
    }
    let keys: Vec<&String> = color.keys().copied().collect();
    for v in keys {
        if color[&v] == Color::White {
            let mut stack = Vec::new();
            if let Some(c) = visit(v, succ, &mut color, &mut stack) {
                return Some(c);
            }
        }
    }
    None
}

/// Re-verifies a witness against the raw definition it violates.
pub fn verify_condition_witness(g: &WeightedGraph, witness: &ConditionWitness) -> Result<bool> {
    match witness {
        ConditionWitness::TwoWeightedEdges {
            vertex,
            first,
            second,
        } => {
            let e = g.edge(first)?;
            let f = g.edge(second)?;
            Ok(first != second
                && e.source == *vertex
                && f.source == *vertex
                && e.weight > 1
                && f.weight > 1)
        }
        ConditionWitness::DoubleEmitter {
            vertex,
            first,
            second,
        } => {
            let e = g.edge(first)?;
            let f = g.edge(second)?;
            Ok(first != second
                && e.source == *vertex
                && f.source == *vertex
                && weighted_range_tree(g)?.contains(vertex))
        }
        ConditionWitness::OverlappingRangeTrees {
            first,
            second,
            common,
        } => {
            let e = g.edge(first)?;
            let f = g.edge(second)?;
            Ok(e.weight > 1
                && f.weight > 1
                && !g.in_line(first, second)?
                && g.tree_of(&e.range)?.contains(common)
                && g.tree_of(&f.range)?.contains(common))
        }
        ConditionWitness::CycleInWeightedTree { cycle, vertex } => {
            let path = GraphPath::Edges(cycle.clone());
            Ok(g.is_cycle(&path)?
                && g.edge(&cycle[0])?.source == *vertex
                && weighted_range_tree(g)?.contains(vertex))
        }
        ConditionWitness::CrosswiseSystem { pairs } => {
            let n = pairs.len();
            if n == 0 {
                return Ok(false);
            }
            for (i, (p, q)) in pairs.iter().enumerate() {
                if p.is_empty() || q.is_empty() {
                    return Ok(false);
                }
                if !is_path(g, p)? || !is_path(g, q)? {
                    return Ok(false);
                }
                let p_first = g.edge(&p[0])?;
                let q_first = g.edge(&q[0])?;
                if p_first.weight < 2 || q_first.weight != 1 {
                    return Ok(false);
                }
                let p_last = p.last().unwrap();
                let q_last = q.last().unwrap();
                if p_last == q_last || g.edge(p_last)?.range != g.edge(q_last)?.range {
                    return Ok(false);
                }
                // s(p_{i+1}) = s(q_i) cyclically
                let next_p = &pairs[(i + 1) % n].0;
                if g.edge(&next_p[0])?.source != q_first.source {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

fn is_path(g: &WeightedGraph, edges: &[String]) -> Result<bool> {
    for pair in edges.windows(2) {
        if g.edge(&pair[0])?.range != g.edge(&pair[1])?.source {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A cycle together with one of its exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleExitWitness {
    pub cycle: Vec<String>,
    pub exit: String,
}

/// True iff no cycle has an exit; otherwise the first offending cycle.
pub fn no_cycle_has_exit(g: &WeightedGraph) -> Result<(bool, Option<CycleExitWitness>)> {
    for cycle in g.cycles() {
        let exits = g.cycle_exits(&cycle)?;
        if let Some(exit) = exits.first() {
            return Ok((
                false,
                Some(CycleExitWitness {
                    cycle: cycle.edge_ids().to_vec(),
                    exit: exit.clone(),
                }),
            ));
        }
    }
    Ok((true, None))
}

/// Witness that the algebra fails to be Noetherian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonNoetherianWitness {
    /// A nod-path starting with `e_2` and ending with `e_2*` for the same
    /// weighted edge `e`.
    WeightedReturn { word: NodWord },
    /// A closed nod²-path `p` with `p p*` a nod-path and `p* p` reducing
    /// to the base vertex.
    IsometryDefect { word: NodWord },
}

impl NonNoetherianWitness {
    pub fn word(&self) -> &NodWord {
        match self {
            NonNoetherianWitness::WeightedReturn { word } => word,
            NonNoetherianWitness::IsometryDefect { word } => word,
        }
    }
}

/// The full verdict set for a graph.
#[derive(Debug, Clone)]
pub struct Classification {
    pub finite_dimensional: bool,
    pub locally_finite: bool,
    pub noetherian: bool,
    pub gk: GkClass,
    pub acyclic: bool,
    pub well_behaved: bool,
    pub conditions: ConditionReport,
    pub cycle_with_exit: Option<CycleExitWitness>,
    pub non_noetherian_witness: Option<NonNoetherianWitness>,
}

impl Classification {
    /// Whether the graph may enter the unweighting/decomposition pipeline.
    pub fn decomposition_ready(&self) -> bool {
        self.locally_finite
    }
}

/// Classifies the graph: finite-dimensional iff acyclic and well-behaved;
/// locally finite iff no cycle has an exit and well-behaved; Noetherian
/// iff locally finite; GK class 0 / 1 / ≥2 accordingly. A `≥2` verdict is
/// double-checked against the quasicycle-based classification.
pub fn classify(g: &WeightedGraph) -> Result<Classification> {
    let conditions = check_conditions(g)?;
    let well_behaved = conditions.all_hold();
    let acyclic = g.cycles().is_empty();
    let (no_exit, cycle_with_exit) = no_cycle_has_exit(g)?;

    let finite_dimensional = acyclic && well_behaved;
    let locally_finite = no_exit && well_behaved;
    let gk = if finite_dimensional {
        GkClass::Zero
    } else if locally_finite {
        GkClass::One
    } else {
        GkClass::TwoOrMore
    };

    let sp = SpecialSelection::default_for(g)?;
    if gk == GkClass::TwoOrMore {
        let independent = quasicycle::gk_class(g, &sp)?;
        if independent != GkClass::TwoOrMore {
            return Err(Error::InternalAssertion(format!(
                "graph-condition classifier says GK >= 2 but quasicycle analysis says {independent}"
            )));
        }
    }

    let non_noetherian_witness = if locally_finite {
        None
    } else {
        find_non_noetherian_witness(g, &sp)?
    };

    Ok(Classification {
        finite_dimensional,
        locally_finite,
        noetherian: locally_finite,
        gk,
        acyclic,
        well_behaved,
        conditions,
        cycle_with_exit,
        non_noetherian_witness,
    })
}

/// Bounded search for a Noetherian obstruction: (a) a nod-path running
/// from `e_2` to `e_2*` for a weighted edge `e`, or (b) a closed
/// nod²-path `p` with `p p*` nod and `p* p` reducing to the base vertex.
/// Returns `None` when nothing is found within bounds.
pub fn find_non_noetherian_witness(
    g: &WeightedGraph,
    sp: &SpecialSelection,
) -> Result<Option<NonNoetherianWitness>> {
    let t = TransitionDigraph::build(g, sp);

    // (a) shortest walk e_2 -> e_2* per weighted edge, lexicographic order
    let mut weighted: Vec<&crate::graph::Edge> =
        g.edges().iter().filter(|e| e.weight > 1).collect();
    weighted.sort_by(|a, b| a.id.cmp(&b.id));
    for e in weighted {
        let from = t
            .index_of_letter(&crate::nod::Letter::real(&e.id, 2))
            .expect("weighted edge has copy 2");
        let to = t
            .index_of_letter(&crate::nod::Letter::ghost(&e.id, 2))
            .expect("weighted edge has copy 2");
        if let Some(walk) = shortest_walk(&t, from, to) {
            let word = NodWord::Letters(walk.iter().map(|&i| t.letters()[i].clone()).collect());
            return Ok(Some(NonNoetherianWitness::WeightedReturn { word }));
        }
    }

    // (b) over quasicycles: unweighted real cycles and weighted-head
    // alternations whose star gives the obstruction
    let qs = quasicycle::quasicycles_on(&t)?;
    for q in &qs {
        let word = q.as_word();
        let candidates = [word.clone(), word.star()];
        for p in candidates {
            if verify_isometry_defect(g, sp, &p)? {
                return Ok(Some(NonNoetherianWitness::IsometryDefect { word: p }));
            }
        }
    }
    Ok(None)
}

/// Validates an [`NonNoetherianWitness::IsometryDefect`] word: closed,
/// nod², `p p*` nod, and `p* p` reduces to the base vertex — certified
/// either by `p` being real and unweighted, or by `p*` carrying the
/// super-special / unweighted-ghost block alternation ending in a ghost
/// block.
pub fn verify_isometry_defect(
    g: &WeightedGraph,
    sp: &SpecialSelection,
    p: &NodWord,
) -> Result<bool> {
    let letters = match p {
        NodWord::Trivial(_) => return Ok(false),
        NodWord::Letters(ls) => ls,
    };
    if crate::nod::word_source(g, p)? != crate::nod::word_range(g, p)? {
        return Ok(false);
    }
    if !quasicycle::is_nod2(g, sp, p)? {
        return Ok(false);
    }
    let mut pp_star = letters.clone();
    pp_star.extend(p.star().letters().iter().cloned());
    if !is_nod(g, sp, &NodWord::Letters(pp_star))? {
        return Ok(false);
    }
    // p* p = v, route 1: all letters real and unweighted
    if letters.iter().all(|l| !l.ghost) && crate::nod::is_unweighted_path(g, p)? {
        return Ok(true);
    }
    // route 2: p* has the weighted-head alternation ending in a ghost block
    let star = p.star();
    if let Ok(blocks) = crate::nod::parse_weighted_head(g, sp, &star) {
        if matches!(blocks.last(), Some(crate::nod::HeadBlock::UnweightedGhost(_))) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Validates a [`NonNoetherianWitness::WeightedReturn`] word.
pub fn verify_weighted_return(
    g: &WeightedGraph,
    sp: &SpecialSelection,
    word: &NodWord,
) -> Result<bool> {
    let letters = match word {
        NodWord::Trivial(_) => return Ok(false),
        NodWord::Letters(ls) => ls,
    };
    if !is_nod(g, sp, word)? {
        return Ok(false);
    }
    let first = &letters[0];
    let last = letters.last().unwrap();
    Ok(!first.ghost
        && last.ghost
        && first.copy == 2
        && last.copy == 2
        && first.edge == last.edge
        && g.edge(&first.edge)?.weight > 1)
}

/// Shortest walk (as node list, >= 2 nodes) from `from` to `to` in the
/// transition digraph, including `from` and `to`.
fn shortest_walk(t: &TransitionDigraph, from: usize, to: usize) -> Option<Vec<usize>> {
    let mut parent: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::from([from]);
    let mut seen = vec![false; t.letter_count()];
    seen[from] = true;
    while let Some(v) = queue.pop_front() {
        for &s in t.successors(v) {
            if s == to {
                let mut walk = vec![to, v];
                let mut at = v;
                while at != from {
                    at = parent[&at];
                    walk.push(at);
                }
                walk.reverse();
                return Some(walk);
            }
            if !seen[s] {
                seen[s] = true;
                parent.insert(s, v);
                queue.push_back(s);
            }
        }
    }
    None
}
