//! Weighted graph data model, text formats and elementary graph theory.
//!
//! A weighted graph is a finite directed graph together with a positive
//! integer weight per edge. Vertices and edges keep their file order;
//! every "choose one" step elsewhere in the crate uses lexicographic
//! order on ids so that all outputs are deterministic.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A subset of the vertices of a fixed graph, ordered lexicographically.
pub type VertexSet = BTreeSet<String>;

/// One edge record: `id : source -> range` with a positive weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub source: String,
    pub range: String,
    pub weight: u32,
}

/// A finite weighted graph `(E, w)`.
///
/// Invariants (enforced on construction): ids are distinct within their
/// class, every edge endpoint is a declared vertex, weights are at least 1
/// and there is at least one vertex. Declared special edges must be
/// emitted by their vertex and have maximal weight there.
///
/// Values are immutable after construction and safe to share across
/// threads; all operations are pure functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    vertex_index: HashMap<String, usize>,
    edge_index: HashMap<String, usize>,
    special: BTreeMap<String, String>,
}

impl WeightedGraph {
    /// Builds and validates a graph from parts. `special` maps a vertex to
    /// a declared special edge and may be empty.
    pub fn new(
        vertices: Vec<String>,
        edges: Vec<Edge>,
        special: BTreeMap<String, String>,
    ) -> Result<Self> {
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let mut edge_index = HashMap::new();
        for (i, e) in edges.iter().enumerate() {
            if edge_index.insert(e.id.clone(), i).is_some() {
                return Err(Error::DuplicateEdge(e.id.clone()));
            }
            if !vertex_index.contains_key(&e.source) {
                return Err(Error::UnknownVertex(e.source.clone()));
            }
            if !vertex_index.contains_key(&e.range) {
                return Err(Error::UnknownVertex(e.range.clone()));
            }
            if e.weight < 1 {
                return Err(Error::InvalidWeight(e.id.clone(), e.weight));
            }
        }
        if vertices.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let graph = WeightedGraph {
            vertices,
            edges,
            vertex_index,
            edge_index,
            special,
        };
        for (v, e) in &graph.special {
            if !graph.has_vertex(v) {
                return Err(Error::UnknownVertex(v.clone()));
            }
            let edge = graph.edge(e)?;
            if edge.source != *v {
                return Err(Error::SpecialWrongSource {
                    vertex: v.clone(),
                    edge: e.clone(),
                });
            }
            if edge.weight != graph.vertex_weight(v) {
                return Err(Error::SpecialNotMaximal {
                    vertex: v.clone(),
                    edge: e.clone(),
                });
            }
        }
        Ok(graph)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Declared special edges (vertex -> edge), as read from the input.
    pub fn declared_special(&self) -> &BTreeMap<String, String> {
        &self.special
    }

    pub fn has_vertex(&self, v: &str) -> bool {
        self.vertex_index.contains_key(v)
    }

    pub fn edge(&self, id: &str) -> Result<&Edge> {
        self.edge_index
            .get(id)
            .map(|&i| &self.edges[i])
            .ok_or_else(|| Error::UnknownEdge(id.to_owned()))
    }

    pub fn out_edges<'a>(&'a self, v: &'a str) -> impl Iterator<Item = &'a Edge> {
        self.edges.iter().filter(move |e| e.source == v)
    }

    pub fn in_edges<'a>(&'a self, v: &'a str) -> impl Iterator<Item = &'a Edge> {
        self.edges.iter().filter(move |e| e.range == v)
    }

    pub fn is_sink(&self, v: &str) -> bool {
        self.out_edges(v).next().is_none()
    }

    /// `w(v)`: the maximal weight emitted at `v`, with `max ∅ = 0`.
    pub fn vertex_weight(&self, v: &str) -> u32 {
        self.out_edges(v).map(|e| e.weight).max().unwrap_or(0)
    }

    /// `n`: the maximal edge weight of the graph, 0 for an edgeless graph.
    /// This is the rank of the grading group `ℤⁿ`.
    pub fn max_weight(&self) -> u32 {
        self.edges.iter().map(|e| e.weight).max().unwrap_or(0)
    }

    /// `E⁰_w`: vertices emitting a weighted edge.
    pub fn weighted_vertices(&self) -> VertexSet {
        self.vertices
            .iter()
            .filter(|v| self.vertex_weight(v) > 1)
            .cloned()
            .collect()
    }

    /// True when every edge has weight 1.
    pub fn is_unweighted(&self) -> bool {
        self.edges.iter().all(|e| e.weight == 1)
    }

    /// `T(X)`: all vertices reachable from `X` by a path, `X` included.
    /// The result is hereditary.
    pub fn tree(&self, set: &VertexSet) -> Result<VertexSet> {
        for v in set {
            if !self.has_vertex(v) {
                return Err(Error::UnknownVertex(v.clone()));
            }
        }
        let mut seen: VertexSet = set.clone();
        let mut queue: VecDeque<String> = set.iter().cloned().collect();
        while let Some(v) = queue.pop_front() {
            for e in self.out_edges(&v) {
                if seen.insert(e.range.clone()) {
                    queue.push_back(e.range.clone());
                }
            }
        }
        Ok(seen)
    }

    /// Convenience: the tree of a single vertex.
    pub fn tree_of(&self, v: &str) -> Result<VertexSet> {
        self.tree(&BTreeSet::from([v.to_owned()]))
    }

    /// `u >= v`: there is a path from `u` to `v` (reflexive).
    pub fn reaches(&self, u: &str, v: &str) -> Result<bool> {
        Ok(self.tree_of(u)?.contains(v))
    }

    /// A subset `H` is hereditary when `T(H) ⊆ H`.
    pub fn is_hereditary(&self, set: &VertexSet) -> Result<bool> {
        Ok(self.tree(set)?.is_subset(set))
    }

    /// The weighted subgraph defined by a hereditary subset: vertices `H`,
    /// edges those with source in `H` (ranges stay in `H` automatically).
    pub fn subgraph_by_hereditary(&self, set: &VertexSet) -> Result<WeightedGraph> {
        if !self.is_hereditary(set)? {
            let listing = set.iter().cloned().collect::<Vec<_>>().join(",");
            return Err(Error::NotHereditary(listing));
        }
        let vertices: Vec<String> = self
            .vertices
            .iter()
            .filter(|v| set.contains(*v))
            .cloned()
            .collect();
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| set.contains(&e.source))
            .cloned()
            .collect();
        let special = self
            .special
            .iter()
            .filter(|(v, _)| set.contains(*v))
            .map(|(v, e)| (v.clone(), e.clone()))
            .collect();
        WeightedGraph::new(vertices, edges, special)
    }

    /// The weighted part: the subgraph on `T(E⁰_w)`. Returns `None` when
    /// the graph is unweighted (a graph must have at least one vertex, so
    /// the empty weighted part gets a distinguished marker instead).
    pub fn weighted_part(&self) -> Result<Option<WeightedGraph>> {
        let weighted = self.weighted_vertices();
        if weighted.is_empty() {
            return Ok(None);
        }
        let closure = self.tree(&weighted)?;
        Ok(Some(self.subgraph_by_hereditary(&closure)?))
    }

    /// All cycles up to rotation: closed paths with pairwise distinct edge
    /// sources, one representative each, based at the lexicographically
    /// least vertex on the cycle. Sorted by (base vertex, edge ids).
    pub fn cycles(&self) -> Vec<GraphPath> {
        let mut found: Vec<(String, Vec<String>)> = Vec::new();
        let mut bases: Vec<&String> = self.vertices.iter().collect();
        bases.sort();
        for base in bases {
            let mut stack: Vec<String> = Vec::new();
            let mut sources: HashSet<String> = HashSet::new();
            self.cycle_dfs(base, base, &mut stack, &mut sources, &mut found);
        }
        found.sort();
        found
            .into_iter()
            .map(|(_, edges)| GraphPath::Edges(edges))
            .collect()
    }

    fn cycle_dfs(
        &self,
        base: &str,
        at: &str,
        stack: &mut Vec<String>,
        sources: &mut HashSet<String>,
        found: &mut Vec<(String, Vec<String>)>,
    ) {
        sources.insert(at.to_owned());
        for e in self.out_edges(at) {
            if e.range == base {
                let mut edges = stack.clone();
                edges.push(e.id.clone());
                found.push((base.to_owned(), edges));
            } else if e.range.as_str() > base && !sources.contains(&e.range) {
                stack.push(e.id.clone());
                self.cycle_dfs(base, &e.range, stack, sources, found);
                stack.pop();
            }
        }
        sources.remove(at);
    }

    /// Exits of a cycle: edges `e` with `s(e) = s(x_i)` and `e != x_i`.
    pub fn cycle_exits(&self, cycle: &GraphPath) -> Result<Vec<String>> {
        let edge_ids = match cycle {
            GraphPath::Trivial(v) => return Err(Error::NotACycle(format!("trivial path at {v}"))),
            GraphPath::Edges(ids) => ids,
        };
        if !self.is_cycle(cycle)? {
            return Err(Error::NotACycle(edge_ids.join(" ")));
        }
        let mut exits = Vec::new();
        for id in edge_ids {
            let on_cycle = self.edge(id)?;
            for e in self.out_edges(&on_cycle.source) {
                if e.id != *id {
                    exits.push(e.id.clone());
                }
            }
        }
        exits.sort();
        exits.dedup();
        Ok(exits)
    }

    /// Whether the path is a closed path with pairwise distinct sources.
    pub fn is_cycle(&self, path: &GraphPath) -> Result<bool> {
        let ids = match path {
            GraphPath::Trivial(_) => return Ok(false),
            GraphPath::Edges(ids) if ids.is_empty() => return Ok(false),
            GraphPath::Edges(ids) => ids,
        };
        let mut sources = HashSet::new();
        for (i, id) in ids.iter().enumerate() {
            let e = self.edge(id)?;
            if !sources.insert(e.source.clone()) {
                return Ok(false);
            }
            let next = self.edge(&ids[(i + 1) % ids.len()])?;
            if e.range != next.source {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Two edges are in line when `e = f`, `r(e) >= s(f)` or `r(f) >= s(e)`.
    ///
    /// The defining text repeats one disjunct (an apparent typo); the
    /// symmetric reading implemented here is the one the condition (iii)
    /// arguments rely on.
    pub fn in_line(&self, e: &str, f: &str) -> Result<bool> {
        let ee = self.edge(e)?;
        let fe = self.edge(f)?;
        if e == f {
            return Ok(true);
        }
        Ok(self.reaches(&ee.range, &fe.source)? || self.reaches(&fe.range, &ee.source)?)
    }

    /// Splits the edge set into unweighted edges and weighted edges of
    /// type A (source emits only that edge) and type B (source emits more).
    pub fn edge_classes(&self) -> EdgeClasses {
        let mut classes = EdgeClasses::default();
        for e in &self.edges {
            if e.weight > 1 {
                classes.weighted.push(e.id.clone());
                let alone = self.out_edges(&e.source).count() == 1;
                if alone {
                    classes.weighted_type_a.push(e.id.clone());
                } else {
                    classes.weighted_type_b.push(e.id.clone());
                }
            } else {
                classes.unweighted.push(e.id.clone());
            }
        }
        classes
    }

    /// Source of a path (with `s(v) = v` for trivial paths).
    pub fn path_source(&self, path: &GraphPath) -> Result<String> {
        match path {
            GraphPath::Trivial(v) => {
                if self.has_vertex(v) {
                    Ok(v.clone())
                } else {
                    Err(Error::UnknownVertex(v.clone()))
                }
            }
            GraphPath::Edges(ids) => Ok(self.edge(&ids[0])?.source.clone()),
        }
    }

    /// Range of a path (with `r(v) = v` for trivial paths).
    pub fn path_range(&self, path: &GraphPath) -> Result<String> {
        match path {
            GraphPath::Trivial(v) => {
                if self.has_vertex(v) {
                    Ok(v.clone())
                } else {
                    Err(Error::UnknownVertex(v.clone()))
                }
            }
            GraphPath::Edges(ids) => Ok(self.edge(ids.last().unwrap())?.range.clone()),
        }
    }
}

/// The partition `E¹ = E¹_u ⊔ E¹_{w,A} ⊔ E¹_{w,B}` (ids in file order).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeClasses {
    pub weighted: Vec<String>,
    pub unweighted: Vec<String>,
    pub weighted_type_a: Vec<String>,
    pub weighted_type_b: Vec<String>,
}

/// A path in the weighted graph: a single vertex or a nonempty sequence
/// of composable edge ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GraphPath {
    Trivial(String),
    Edges(Vec<String>),
}

impl GraphPath {
    pub fn len(&self) -> usize {
        match self {
            GraphPath::Trivial(_) => 0,
            GraphPath::Edges(ids) => ids.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn edge_ids(&self) -> &[String] {
        match self {
            GraphPath::Trivial(_) => &[],
            GraphPath::Edges(ids) => ids,
        }
    }
}

impl std::fmt::Display for GraphPath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GraphPath::Trivial(v) => write!(f, "{v}"),
            GraphPath::Edges(ids) => write!(f, "{}", ids.join(" ")),
        }
    }
}

/// Input / output formats for [`parse_graph`] and [`serialize_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Wg,
    Json,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonEdge {
    id: String,
    src: String,
    dst: String,
    #[serde(default = "default_weight")]
    weight: u32,
}

fn default_weight() -> u32 {
    1
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonGraph {
    vertices: Vec<String>,
    edges: Vec<JsonEdge>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    special: BTreeMap<String, String>,
}

/// Parses a graph from `.wg` text or its JSON mirror.
///
/// The `.wg` format is line oriented: `# comment`, `vertex IDENT+`,
/// `edge IDENT : IDENT -> IDENT [weight INT]` (weight defaults to 1) and
/// `special IDENT : IDENT` (vertex : edge).
pub fn parse_graph(text: &str, format: Format) -> Result<WeightedGraph> {
    match format {
        Format::Wg => parse_wg(text),
        Format::Json => {
            let raw: JsonGraph = serde_json::from_str(text)?;
            let edges = raw
                .edges
                .into_iter()
                .map(|e| Edge {
                    id: e.id,
                    source: e.src,
                    range: e.dst,
                    weight: e.weight,
                })
                .collect();
            WeightedGraph::new(raw.vertices, edges, raw.special)
        }
    }
}

/// Serializes a graph so that `parse(serialize(g))` is structurally `g`.
pub fn serialize_graph(g: &WeightedGraph, format: Format) -> String {
    match format {
        Format::Wg => {
            let mut out = String::new();
            writeln!(out, "vertex {}", g.vertices().join(" ")).unwrap();
            for e in g.edges() {
                if e.weight == 1 {
                    writeln!(out, "edge {} : {} -> {}", e.id, e.source, e.range).unwrap();
                } else {
                    writeln!(
                        out,
                        "edge {} : {} -> {} weight {}",
                        e.id, e.source, e.range, e.weight
                    )
                    .unwrap();
                }
            }
            for (v, e) in g.declared_special() {
                writeln!(out, "special {v} : {e}").unwrap();
            }
            out
        }
        Format::Json => {
            let raw = JsonGraph {
                vertices: g.vertices().to_vec(),
                edges: g
                    .edges()
                    .iter()
                    .map(|e| JsonEdge {
                        id: e.id.clone(),
                        src: e.source.clone(),
                        dst: e.range.clone(),
                        weight: e.weight,
                    })
                    .collect(),
                special: g.declared_special().clone(),
            };
            let mut text = serde_json::to_string(&raw).expect("graph serialization cannot fail");
            text.push('\n');
            text
        }
    }
}

fn ident_ok(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_wg(text: &str) -> Result<WeightedGraph> {
    let mut vertices: Vec<String> = Vec::new();
    let mut edges: Vec<Edge> = Vec::new();
    let mut special: BTreeMap<String, String> = BTreeMap::new();

    let err = |line: usize, msg: &str| Error::Parse {
        line,
        msg: msg.to_owned(),
    };

    for (idx, raw_line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw_line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "vertex" => {
                if tokens.len() < 2 {
                    return Err(err(lineno, "vertex declaration needs at least one id"));
                }
                for t in &tokens[1..] {
                    if !ident_ok(t) {
                        return Err(err(lineno, &format!("invalid identifier `{t}`")));
                    }
                    vertices.push((*t).to_owned());
                }
            }
            "edge" => {
                // edge ID : SRC -> DST [weight N]
                let ok = (tokens.len() == 6 || tokens.len() == 8)
                    && tokens[2] == ":"
                    && tokens[4] == "->"
                    && (tokens.len() == 6 || tokens[6] == "weight");
                if !ok {
                    return Err(err(
                        lineno,
                        "expected `edge ID : SRC -> DST [weight N]`",
                    ));
                }
                for t in [tokens[1], tokens[3], tokens[5]] {
                    if !ident_ok(t) {
                        return Err(err(lineno, &format!("invalid identifier `{t}`")));
                    }
                }
                let weight = if tokens.len() == 8 {
                    tokens[7]
                        .parse::<u32>()
                        .map_err(|_| err(lineno, &format!("invalid weight `{}`", tokens[7])))?
                } else {
                    1
                };
                edges.push(Edge {
                    id: tokens[1].to_owned(),
                    source: tokens[3].to_owned(),
                    range: tokens[5].to_owned(),
                    weight,
                });
            }
            "special" => {
                // special VERTEX : EDGE
                if tokens.len() != 4 || tokens[2] != ":" {
                    return Err(err(lineno, "expected `special VERTEX : EDGE`"));
                }
                if !ident_ok(tokens[1]) || !ident_ok(tokens[3]) {
                    return Err(err(lineno, "invalid identifier in special declaration"));
                }
                special.insert(tokens[1].to_owned(), tokens[3].to_owned());
            }
            other => {
                return Err(err(lineno, &format!("unknown declaration `{other}`")));
            }
        }
    }

    WeightedGraph::new(vertices, edges, special)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture(name: &str) -> WeightedGraph {
        let text = match name {
            "g1" => include_str!("../fixtures/g1.wg"),
            "g2" => include_str!("../fixtures/g2.wg"),
            "g3" => include_str!("../fixtures/g3.wg"),
            "g4" => include_str!("../fixtures/g4.wg"),
            "g5" => include_str!("../fixtures/g5.wg"),
            "rose2" => include_str!("../fixtures/rose2.wg"),
            _ => panic!("unknown fixture {name}"),
        };
        parse_graph(text, Format::Wg).unwrap()
    }

    fn set(ids: &[&str]) -> VertexSet {
        ids.iter().map(|s| (*s).to_owned()).collect()
    }

    #[test]
    fn parse_minimal_graph() {
        let g = parse_graph("vertex v\n", Format::Wg).unwrap();
        assert_eq!(g.vertices(), ["v"]);
        assert!(g.edges().is_empty());
    }

    #[test]
    fn parse_g3_and_round_trip() {
        let g = fixture("g3");
        assert_eq!(g.vertices().len(), 2);
        assert_eq!(g.edges().len(), 1);
        assert_eq!(g.edge("e").unwrap().weight, 2);
        let back = parse_graph(&serialize_graph(&g, Format::Wg), Format::Wg).unwrap();
        assert_eq!(g, back);
        let back = parse_graph(&serialize_graph(&g, Format::Json), Format::Json).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn parse_rejects_unknown_vertex() {
        let res = parse_graph("edge e : v -> u weight 2\n", Format::Wg);
        assert!(matches!(res, Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn parse_rejects_duplicates_and_bad_weight() {
        assert!(matches!(
            parse_graph("vertex v v\n", Format::Wg),
            Err(Error::DuplicateVertex(_))
        ));
        assert!(matches!(
            parse_graph("vertex v\nedge e : v -> v\nedge e : v -> v\n", Format::Wg),
            Err(Error::DuplicateEdge(_))
        ));
        assert!(matches!(
            parse_graph("vertex v\nedge e : v -> v weight 0\n", Format::Wg),
            Err(Error::InvalidWeight(_, 0))
        ));
        assert!(matches!(parse_graph("", Format::Wg), Err(Error::EmptyGraph)));
    }

    #[test]
    fn parse_rejects_bad_special() {
        // f is not maximal at v (e has weight 2)
        let text = "vertex v u\nedge e : v -> u weight 2\nedge f : v -> u\nspecial v : f\n";
        assert!(matches!(
            parse_graph(text, Format::Wg),
            Err(Error::SpecialNotMaximal { .. })
        ));
        let text = "vertex v u\nedge e : v -> u weight 2\nspecial u : e\n";
        assert!(matches!(
            parse_graph(text, Format::Wg),
            Err(Error::SpecialWrongSource { .. })
        ));
    }

    #[test]
    fn g4_serialization_shape() {
        let g = fixture("g4");
        assert_eq!(g.vertices().len(), 8);
        assert_eq!(g.edges().len(), 9);
        let text = serialize_graph(&g, Format::Wg);
        // weights appear exactly on e and i
        assert_eq!(text.matches("weight").count(), 2);
        assert!(text.contains("edge e : v -> u weight 2"));
        assert!(text.contains("edge i : y -> b weight 2"));
    }

    #[test]
    fn tree_on_g4() {
        let g = fixture("g4");
        assert_eq!(g.tree(&set(&["u"])).unwrap(), set(&["u", "a"]));
        assert_eq!(g.tree(&set(&[])).unwrap(), set(&[]));
        assert_eq!(
            g.tree(&set(&["v"])).unwrap(),
            set(&["a", "u", "v", "x", "y", "z", "b", "c"])
        );
        assert!(matches!(
            g.tree(&set(&["nope"])),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn tree_idempotent_and_monotone_on_g4() {
        let g = fixture("g4");
        let t = g.tree(&set(&["x"])).unwrap();
        assert_eq!(g.tree(&t).unwrap(), t);
        let bigger = g.tree(&set(&["x", "b"])).unwrap();
        assert!(t.is_subset(&bigger));
    }

    #[test]
    fn hereditary_on_g4() {
        let g = fixture("g4");
        assert!(g.is_hereditary(&set(&["b", "c"])).unwrap());
        assert!(!g.is_hereditary(&set(&["v"])).unwrap());
        let all: VertexSet = g.vertices().iter().cloned().collect();
        assert!(g.is_hereditary(&all).unwrap());
    }

    #[test]
    fn subgraph_on_g4() {
        let g = fixture("g4");
        let t = g.tree(&set(&["v"])).unwrap();
        assert_eq!(g.subgraph_by_hereditary(&t).unwrap(), g);

        let sub = g.subgraph_by_hereditary(&set(&["b", "c"])).unwrap();
        assert_eq!(sub.vertices().len(), 2);
        assert_eq!(sub.edges().len(), 1);
        assert_eq!(sub.edges()[0].id, "j");

        assert!(matches!(
            g.subgraph_by_hereditary(&set(&[])),
            Err(Error::EmptyGraph)
        ));
        assert!(matches!(
            g.subgraph_by_hereditary(&set(&["v"])),
            Err(Error::NotHereditary(_))
        ));
    }

    #[test]
    fn weighted_part_cases() {
        let g4 = fixture("g4");
        let wp = g4.weighted_part().unwrap().unwrap();
        assert_eq!(wp, g4); // T({v, y}) is everything

        let g3 = fixture("g3");
        let wp = g3.weighted_part().unwrap().unwrap();
        assert_eq!(wp, g3);

        let g2 = fixture("g2");
        assert!(g2.weighted_part().unwrap().is_none());
    }

    #[test]
    fn cycles_on_fixtures() {
        let g4 = fixture("g4");
        let cycles = g4.cycles();
        assert_eq!(cycles, vec![GraphPath::Edges(vec!["m".to_owned()])]);

        assert!(fixture("g1").cycles().is_empty());

        let two = parse_graph(
            "vertex v1 v2\nedge a : v1 -> v2\nedge b : v2 -> v1\n",
            Format::Wg,
        )
        .unwrap();
        let cycles = two.cycles();
        assert_eq!(cycles.len(), 1);
        assert_eq!(
            cycles[0],
            GraphPath::Edges(vec!["a".to_owned(), "b".to_owned()])
        );
    }

    #[test]
    fn cycle_exits_on_fixtures() {
        let g4 = fixture("g4");
        let m = GraphPath::Edges(vec!["m".to_owned()]);
        assert!(g4.cycle_exits(&m).unwrap().is_empty());

        let rose = fixture("rose2");
        let a = GraphPath::Edges(vec!["a".to_owned()]);
        assert_eq!(rose.cycle_exits(&a).unwrap(), vec!["b".to_owned()]);

        let g2 = fixture("g2");
        let e = GraphPath::Edges(vec!["e".to_owned()]);
        assert!(g2.cycle_exits(&e).unwrap().is_empty());

        let not_cycle = GraphPath::Edges(vec!["k".to_owned()]);
        assert!(matches!(
            g4.cycle_exits(&not_cycle),
            Err(Error::NotACycle(_))
        ));
    }

    #[test]
    fn in_line_on_g4() {
        let g = fixture("g4");
        assert!(g.in_line("e", "e").unwrap());
        assert!(!g.in_line("e", "i").unwrap());
        assert!(g.in_line("f", "l").unwrap());
        assert!(matches!(g.in_line("e", "zz"), Err(Error::UnknownEdge(_))));
    }

    #[test]
    fn edge_classes_on_fixtures() {
        let g4 = fixture("g4");
        let classes = g4.edge_classes();
        assert_eq!(classes.weighted_type_a, ["i"]);
        assert_eq!(classes.weighted_type_b, ["e"]);
        assert_eq!(classes.unweighted, ["k", "f", "g", "l", "h", "m", "j"]);

        let g3 = fixture("g3");
        assert_eq!(g3.edge_classes().weighted_type_a, ["e"]);

        let rose = fixture("rose2");
        let classes = rose.edge_classes();
        assert!(classes.weighted.is_empty());
        assert_eq!(classes.unweighted.len(), 2);
    }

    #[test]
    fn edge_classes_is_a_partition_on_g4() {
        let g = fixture("g4");
        let classes = g.edge_classes();
        let mut all = classes.weighted.clone();
        all.extend(classes.unweighted.clone());
        all.sort();
        let mut ids: Vec<String> = g.edges().iter().map(|e| e.id.clone()).collect();
        ids.sort();
        assert_eq!(all, ids);
        let mut w = classes.weighted_type_a.clone();
        w.extend(classes.weighted_type_b.clone());
        w.sort();
        let mut ww = classes.weighted.clone();
        ww.sort();
        assert_eq!(w, ww);
    }
}
