//! Rewrites a locally finite weighted graph into an unweighted one with
//! isomorphic algebra, recording a replayable trace.
//!
//! Two rules. *Type-A reversal*: with `Z = T(r(E¹_w)) ∪ s(E¹_{w,A})`
//! (a hereditary set), every edge sourced in `Z` is replaced by `w(e)`
//! unweighted reversed copies; afterwards only type-B weighted edges
//! remain and their ranges are sinks. *Type-B elimination*: pick a
//! weighted vertex `v` minimal in the reachability order, build the local
//! unweighted graph `E'` (the α/β/γ chain construction) together with the
//! vertex-image map `φ`, and surgically replace the hereditary subgraph
//! on `T(v)` by `E'`, splitting boundary edges along `φ`. Each type-B
//! step removes exactly one weighted edge.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::classify;
use crate::graph::{Edge, VertexSet, WeightedGraph};
use crate::{Error, Result};

/// Maps each vertex of a replaced subgraph to the distinct vertices its
/// idempotent decomposes into.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VertexImageMap {
    map: BTreeMap<String, Vec<String>>,
}

impl VertexImageMap {
    pub fn insert(&mut self, vertex: String, images: Vec<String>) {
        self.map.insert(vertex, images);
    }

    pub fn images(&self, vertex: &str) -> Option<&[String]> {
        self.map.get(vertex).map(Vec::as_slice)
    }

    pub fn as_map(&self) -> &BTreeMap<String, Vec<String>> {
        &self.map
    }
}

/// Which rewrite rule a step applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RewriteRule {
    #[serde(rename = "typeA-reversal")]
    TypeAReversal,
    #[serde(rename = "typeB-elimination")]
    TypeBElimination,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub id: String,
    pub src: String,
    pub dst: String,
    pub weight: u32,
}

impl From<&Edge> for EdgeRecord {
    fn from(e: &Edge) -> Self {
        EdgeRecord {
            id: e.id.clone(),
            src: e.source.clone(),
            dst: e.range.clone(),
            weight: e.weight,
        }
    }
}

impl From<&EdgeRecord> for Edge {
    fn from(r: &EdgeRecord) -> Self {
        Edge {
            id: r.id.clone(),
            source: r.src.clone(),
            range: r.dst.clone(),
            weight: r.weight,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovedItems {
    pub vertices: Vec<String>,
    pub edges: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AddedItems {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRecord>,
}

/// One recorded rewrite step. Replaying all steps on the input graph
/// reproduces the output graph exactly: edges listed in `generated` are
/// expanded in place (their replacement records are found in
/// `added.edges`), edges in `removed.edges` are dropped, everything else
/// is kept; added vertices and the remaining added edges are appended in
/// recorded order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RewriteStep {
    pub rule: RewriteRule,
    /// The hereditary set the rule acted on (`Z` or `H = T(v)`).
    pub zone: Vec<String>,
    pub removed: RemovedItems,
    pub added: AddedItems,
    /// Old edge id -> ids of its in-place copies.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub generated: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub vertex_images: BTreeMap<String, Vec<String>>,
}

/// The full deterministic record of a pipeline run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RewriteTrace {
    pub steps: Vec<RewriteStep>,
}

impl RewriteTrace {
    pub fn to_json(&self) -> String {
        let mut text =
            serde_json::to_string(&self.steps).expect("trace serialization cannot fail");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<RewriteTrace> {
        Ok(RewriteTrace {
            steps: serde_json::from_str(text)?,
        })
    }

    /// Replays the trace on an input graph, reproducing the recorded
    /// output bit for bit.
    pub fn replay(&self, input: &WeightedGraph) -> Result<WeightedGraph> {
        let mut current = input.clone();
        for step in &self.steps {
            current = replay_step(&current, step)?;
        }
        Ok(current)
    }
}

fn replay_step(g: &WeightedGraph, step: &RewriteStep) -> Result<WeightedGraph> {
    let removed_vertices: HashSet<&String> = step.removed.vertices.iter().collect();
    let removed_edges: HashSet<&String> = step.removed.edges.iter().collect();
    let added_by_id: BTreeMap<&String, &EdgeRecord> =
        step.added.edges.iter().map(|r| (&r.id, r)).collect();
    let mut consumed: HashSet<&String> = HashSet::new();

    let mut vertices: Vec<String> = g
        .vertices()
        .iter()
        .filter(|v| !removed_vertices.contains(*v))
        .cloned()
        .collect();
    vertices.extend(step.added.vertices.iter().cloned());

    let mut edges: Vec<Edge> = Vec::new();
    for e in g.edges() {
        if let Some(copies) = step.generated.get(&e.id) {
            for id in copies {
                let record = added_by_id.get(id).ok_or_else(|| {
                    Error::InternalAssertion(format!("trace lacks a record for generated edge `{id}`"))
                })?;
                consumed.insert(&record.id);
                edges.push(Edge::from(*record));
            }
        } else if !removed_edges.contains(&e.id) {
            edges.push(e.clone());
        }
    }
    for record in &step.added.edges {
        if !consumed.contains(&record.id) {
            edges.push(Edge::from(record));
        }
    }
    WeightedGraph::new(vertices, edges, BTreeMap::new())
}

/// Deterministic fresh-id generation: `base`, then `base_2`, `base_3`, …
fn fresh_id(used: &mut HashSet<String>, base: String) -> String {
    if used.insert(base.clone()) {
        return base;
    }
    let mut n = 2usize;
    loop {
        let candidate = format!("{base}_{n}");
        if used.insert(candidate.clone()) {
            return candidate;
        }
        n += 1;
    }
}

/// `Z := T(r(E¹_w)) ∪ s(E¹_{w,A})`.
pub fn type_a_zone(g: &WeightedGraph) -> Result<VertexSet> {
    let mut zone = classify::weighted_range_tree(g)?;
    for id in g.edge_classes().weighted_type_a {
        zone.insert(g.edge(&id)?.source.clone());
    }
    Ok(zone)
}

/// Reverses every edge sourced in `Z` into `w(e)` unweighted copies.
/// Afterwards the weighted edges are exactly the original type-B ones
/// and their ranges are sinks. Identity (no step) on unweighted input.
pub fn unweight_type_a(g: &WeightedGraph) -> Result<(WeightedGraph, Option<RewriteStep>)> {
    if !classify::classify(g)?.locally_finite {
        return Err(Error::NotLocallyFinite);
    }
    if g.is_unweighted() {
        return Ok((g.clone(), None));
    }
    let zone = type_a_zone(g)?;
    let mut used: HashSet<String> = g.edges().iter().map(|e| e.id.clone()).collect();

    let mut edges: Vec<Edge> = Vec::new();
    let mut step = RewriteStep {
        rule: RewriteRule::TypeAReversal,
        zone: zone.iter().cloned().collect(),
        removed: RemovedItems::default(),
        added: AddedItems::default(),
        generated: BTreeMap::new(),
        vertex_images: BTreeMap::new(),
    };
    for e in g.edges() {
        if zone.contains(&e.source) {
            let mut copies = Vec::new();
            for i in 1..=e.weight {
                let id = fresh_id(&mut used, format!("{}__{}", e.id, i));
                let copy = Edge {
                    id: id.clone(),
                    source: e.range.clone(),
                    range: e.source.clone(),
                    weight: 1,
                };
                step.added.edges.push(EdgeRecord::from(&copy));
                edges.push(copy);
                copies.push(id);
            }
            step.removed.edges.push(e.id.clone());
            step.generated.insert(e.id.clone(), copies);
        } else {
            edges.push(e.clone());
        }
    }
    let out = WeightedGraph::new(g.vertices().to_vec(), edges, BTreeMap::new())?;
    audit_type_a(g, &out)?;
    Ok((out, Some(step)))
}

fn audit_type_a(input: &WeightedGraph, out: &WeightedGraph) -> Result<()> {
    let mut before = input.edge_classes().weighted_type_b;
    before.sort();
    let mut after = out.edge_classes().weighted;
    after.sort();
    if before != after {
        return Err(Error::InternalAssertion(
            "type-A step must leave exactly the type-B weighted edges".to_owned(),
        ));
    }
    for id in &after {
        let range = &out.edge(id)?.range;
        if !out.is_sink(range) {
            return Err(Error::InternalAssertion(format!(
                "range `{range}` of weighted edge `{id}` is not a sink after the type-A step"
            )));
        }
    }
    Ok(())
}

/// The least weighted vertex `v` (lexicographically) with
/// `T(v) ∩ E⁰_w = {v}`.
pub fn pick_minimal_weighted_vertex(g: &WeightedGraph) -> Result<String> {
    let weighted = g.weighted_vertices();
    if weighted.is_empty() {
        return Err(Error::NoWeightedVertex);
    }
    for v in &weighted {
        let tree = g.tree_of(v)?;
        if tree.intersection(&weighted).count() == 1 {
            return Ok(v.clone());
        }
    }
    Err(Error::InternalAssertion(
        "no minimal weighted vertex; the reachability order on weighted vertices has a cycle"
            .to_owned(),
    ))
}

/// The local replacement data for one type-B elimination.
#[derive(Debug, Clone)]
pub struct LocalReplacement {
    /// The unweighted directed graph `E'`.
    pub graph: WeightedGraph,
    /// `φ` on the vertices of the replaced subgraph `T(v)`.
    pub images: VertexImageMap,
}

/// Builds `E'` and `φ` for a weighted vertex `v` with
/// `T(v) ∩ E⁰_w = {v}`: an α-chain of length `k = w(e)` towards copies of
/// the sink `u = r(e)`, a β-chain per unweighted target `x_i` realising
/// its multiplicity `n_i`, a γ-chain of length `(k-1)·n_i` from `x_i`,
/// and the `T(X)`-subgraph with `x_i`'s edges rerouted to the last
/// γ-vertex.
pub fn build_local_replacement(g: &WeightedGraph, v: &str) -> Result<LocalReplacement> {
    if !g.has_vertex(v) {
        return Err(Error::UnknownVertex(v.to_owned()));
    }
    let mut weighted_out: Vec<&Edge> = g.out_edges(v).filter(|e| e.weight > 1).collect();
    weighted_out.sort_by(|a, b| a.id.cmp(&b.id));
    if weighted_out.len() != 1 {
        return Err(Error::StructuralPrecondition(format!(
            "vertex `{v}` must emit exactly one weighted edge, found {}",
            weighted_out.len()
        )));
    }
    let e = weighted_out[0];
    let k = e.weight;
    let u = e.range.clone();
    if u == v {
        return Err(Error::StructuralPrecondition(format!(
            "the weighted edge `{}` must not be a loop",
            e.id
        )));
    }
    if !g.is_sink(&u) {
        return Err(Error::StructuralPrecondition(format!(
            "range `{u}` of the weighted edge `{}` must be a sink (run the type-A step first)",
            e.id
        )));
    }
    let mut unweighted_out: Vec<&Edge> = g.out_edges(v).filter(|f| f.weight == 1).collect();
    unweighted_out.sort_by(|a, b| a.id.cmp(&b.id));
    if unweighted_out.is_empty() {
        return Err(Error::StructuralPrecondition(format!(
            "vertex `{v}` must also emit unweighted edges; `{}` would be of type A",
            e.id
        )));
    }
    // targets x_1 < x_2 < … with multiplicities n_i
    let mut targets: Vec<String> = unweighted_out.iter().map(|f| f.range.clone()).collect();
    targets.sort();
    targets.dedup();
    if targets.iter().any(|x| *x == v) {
        return Err(Error::StructuralPrecondition(format!(
            "vertex `{v}` must not emit an unweighted loop"
        )));
    }
    let target_set: VertexSet = targets.iter().cloned().collect();
    let tx = g.tree(&target_set)?;
    if tx.contains(v) {
        return Err(Error::StructuralPrecondition(format!(
            "`{v}` lies in the tree of its unweighted targets; a cycle through `{v}` exists"
        )));
    }
    if tx.contains(&u) {
        return Err(Error::StructuralPrecondition(format!(
            "sink `{u}` lies in the tree of the unweighted targets"
        )));
    }
    let weighted_vertices = g.weighted_vertices();
    let weighted_in_tx: Vec<&String> = tx.intersection(&weighted_vertices).collect();
    if !weighted_in_tx.is_empty() {
        return Err(Error::StructuralPrecondition(format!(
            "`T(X)` contains weighted vertices: {weighted_in_tx:?}"
        )));
    }

    let mut used_vertices: HashSet<String> = g.vertices().iter().cloned().collect();
    let mut used_edges: HashSet<String> = g.edges().iter().map(|x| x.id.clone()).collect();

    let m = targets.len();
    let mult: Vec<u32> = targets
        .iter()
        .map(|x| unweighted_out.iter().filter(|f| f.range == *x).count() as u32)
        .collect();

    // vertices of E'
    let u_chain: Vec<String> = (1..=k)
        .map(|i| fresh_id(&mut used_vertices, format!("{u}__{i}")))
        .collect();
    let mut u_grid: Vec<Vec<String>> = Vec::with_capacity(m);
    for (i, n_i) in mult.iter().enumerate() {
        let row: Vec<String> = (1..=(k - 1) * n_i)
            .map(|j| fresh_id(&mut used_vertices, format!("{u}__{}_{j}", i + 1)))
            .collect();
        u_grid.push(row);
    }
    let mut v_grid: Vec<Vec<String>> = Vec::with_capacity(m);
    for (i, n_i) in mult.iter().enumerate() {
        let row: Vec<String> = (2..=*n_i)
            .map(|j| fresh_id(&mut used_vertices, format!("{v}__{}_{j}", i + 1)))
            .collect();
        v_grid.push(row);
    }

    let mut vertices: Vec<String> = Vec::new();
    vertices.extend(u_chain.iter().cloned());
    for row in &u_grid {
        vertices.extend(row.iter().cloned());
    }
    vertices.push(v.to_owned());
    for row in &v_grid {
        vertices.extend(row.iter().cloned());
    }
    let tx_vertices: Vec<String> = g
        .vertices()
        .iter()
        .filter(|y| tx.contains(*y))
        .cloned()
        .collect();
    vertices.extend(tx_vertices.iter().cloned());

    // edges of E'
    let unweighted_edge = |id: String, source: &str, range: &str| Edge {
        id,
        source: source.to_owned(),
        range: range.to_owned(),
        weight: 1,
    };
    let mut edges: Vec<Edge> = Vec::new();
    for i in 1..=k as usize {
        let id = fresh_id(&mut used_edges, format!("alpha__{i}"));
        let source = if i == 1 { v } else { &u_chain[i - 2] };
        edges.push(unweighted_edge(id, source, &u_chain[i - 1]));
    }
    for (i, n_i) in mult.iter().enumerate() {
        let n_i = *n_i as usize;
        for j in 1..=n_i {
            let id = fresh_id(&mut used_edges, format!("beta__{}_{j}", i + 1));
            let source = if j == 1 { v } else { &v_grid[i][j - 2] };
            let range = if j == n_i {
                &targets[i]
            } else {
                &v_grid[i][j - 1]
            };
            edges.push(unweighted_edge(id, source, range));
        }
    }
    for (i, n_i) in mult.iter().enumerate() {
        let len = ((k - 1) * n_i) as usize;
        for j in 1..=len {
            let id = fresh_id(&mut used_edges, format!("gamma__{}_{j}", i + 1));
            let source = if j == 1 { &targets[i] } else { &u_grid[i][j - 2] };
            edges.push(unweighted_edge(id, source, &u_grid[i][j - 1]));
        }
    }
    // T(X) subgraph with x_i swapped for the last γ-vertex
    let relocate = |y: &str| -> String {
        if let Some(i) = targets.iter().position(|x| x == y) {
            u_grid[i].last().expect("(k-1)·n_i >= 1").clone()
        } else {
            y.to_owned()
        }
    };
    for f in g.edges() {
        if tx.contains(&f.source) {
            if f.weight != 1 {
                return Err(Error::StructuralPrecondition(format!(
                    "edge `{}` in T(X) is weighted",
                    f.id
                )));
            }
            edges.push(Edge {
                id: f.id.clone(),
                source: relocate(&f.source),
                range: relocate(&f.range),
                weight: 1,
            });
        }
    }

    let graph = WeightedGraph::new(vertices, edges, BTreeMap::new())?;

    let mut images = VertexImageMap::default();
    let mut u_images = u_chain.clone();
    for row in &u_grid {
        u_images.extend(row.iter().cloned());
    }
    images.insert(u.clone(), u_images);
    let mut v_images = vec![v.to_owned()];
    for row in &v_grid {
        v_images.extend(row.iter().cloned());
    }
    images.insert(v.to_owned(), v_images);
    for y in &tx_vertices {
        images.insert(y.clone(), vec![y.clone()]);
    }
    Ok(LocalReplacement { graph, images })
}

/// Replaces the hereditary subgraph on `H` by the graph `e_prime` along
/// `φ`: kept edges stay, boundary edges into `H` split into one copy per
/// image vertex (weight preserved), `e_prime`'s edges are adopted with
/// weight 1.
pub fn replace_subgraph(
    g: &WeightedGraph,
    h: &VertexSet,
    e_prime: &WeightedGraph,
    phi: &VertexImageMap,
) -> Result<(WeightedGraph, RewriteStep)> {
    if !g.is_hereditary(h)? {
        let listing = h.iter().cloned().collect::<Vec<_>>().join(",");
        return Err(Error::NotHereditary(listing));
    }
    for v in h {
        let images = phi.images(v).ok_or_else(|| {
            Error::StructuralPrecondition(format!("φ is not defined on `{v}`"))
        })?;
        if images.is_empty() {
            return Err(Error::StructuralPrecondition(format!(
                "φ(`{v}`) must be a nonempty list of vertices"
            )));
        }
        let distinct: BTreeSet<&String> = images.iter().collect();
        if distinct.len() != images.len() {
            return Err(Error::StructuralPrecondition(format!(
                "φ(`{v}`) lists duplicate vertices"
            )));
        }
        for img in images {
            if !e_prime.has_vertex(img) {
                return Err(Error::StructuralPrecondition(format!(
                    "φ(`{v}`) names `{img}` which is not a vertex of E'"
                )));
            }
        }
    }

    let mut vertices: Vec<String> = g
        .vertices()
        .iter()
        .filter(|x| !h.contains(*x))
        .cloned()
        .collect();
    vertices.extend(e_prime.vertices().iter().cloned());

    let mut used_edges: HashSet<String> = g
        .edges()
        .iter()
        .filter(|e| !h.contains(&e.source))
        .map(|e| e.id.clone())
        .collect();
    used_edges.extend(e_prime.edges().iter().map(|e| e.id.clone()));

    let mut step = RewriteStep {
        rule: RewriteRule::TypeBElimination,
        zone: h.iter().cloned().collect(),
        removed: RemovedItems {
            vertices: h.iter().cloned().collect(),
            edges: Vec::new(),
        },
        added: AddedItems {
            vertices: e_prime.vertices().to_vec(),
            edges: Vec::new(),
        },
        generated: BTreeMap::new(),
        vertex_images: phi.as_map().clone(),
    };

    let mut edges: Vec<Edge> = Vec::new();
    for e in g.edges() {
        if h.contains(&e.source) {
            step.removed.edges.push(e.id.clone());
        } else if h.contains(&e.range) {
            let images = phi.images(&e.range).expect("validated above");
            if images.len() == 1 {
                let copy = Edge {
                    id: e.id.clone(),
                    source: e.source.clone(),
                    range: images[0].clone(),
                    weight: e.weight,
                };
                step.added.edges.push(EdgeRecord::from(&copy));
                step.generated.insert(e.id.clone(), vec![e.id.clone()]);
                edges.push(copy);
            } else {
                let mut copies = Vec::new();
                for (j, img) in images.iter().enumerate() {
                    let id = fresh_id(&mut used_edges, format!("{}__{}", e.id, j + 1));
                    let copy = Edge {
                        id: id.clone(),
                        source: e.source.clone(),
                        range: img.clone(),
                        weight: e.weight,
                    };
                    step.added.edges.push(EdgeRecord::from(&copy));
                    edges.push(copy);
                    copies.push(id);
                }
                step.removed.edges.push(e.id.clone());
                step.generated.insert(e.id.clone(), copies);
            }
        } else {
            edges.push(e.clone());
        }
    }
    for e in e_prime.edges() {
        let adopted = Edge {
            id: e.id.clone(),
            source: e.source.clone(),
            range: e.range.clone(),
            weight: 1,
        };
        step.added.edges.push(EdgeRecord::from(&adopted));
        edges.push(adopted);
    }

    let out = WeightedGraph::new(vertices, edges, BTreeMap::new())?;
    Ok((out, step))
}

/// Runs the full pipeline: one type-A pass, then type-B eliminations
/// until no weighted edge remains. Refuses inputs that are not locally
/// finite. Returns the unweighted result and the replayable trace.
pub fn unweight_pipeline(g: &WeightedGraph) -> Result<(WeightedGraph, RewriteTrace)> {
    if !classify::classify(g)?.locally_finite {
        return Err(Error::NotLocallyFinite);
    }
    let mut trace = RewriteTrace::default();
    if g.is_unweighted() {
        return Ok((g.clone(), trace));
    }
    let (mut current, step) = unweight_type_a(g)?;
    trace.steps.extend(step);

    while !current.is_unweighted() {
        let before = current.edge_classes().weighted.len();
        let v = pick_minimal_weighted_vertex(&current)?;
        let h = current.tree_of(&v)?;
        let local = build_local_replacement(&current, &v)?;
        let (next, step) = replace_subgraph(&current, &h, &local.graph, &local.images)?;
        let after = next.edge_classes().weighted.len();
        if after + 1 != before {
            return Err(Error::InternalAssertion(format!(
                "type-B step changed the weighted edge count from {before} to {after}"
            )));
        }
        trace.steps.push(step);
        current = next;
    }
    Ok((current, trace))
}
