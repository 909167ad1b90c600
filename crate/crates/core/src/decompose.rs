//! Block decomposition of the algebra of a finite unweighted graph in
//! which no cycle has an exit: one `M_m(K)` block per sink, `m` the
//! number of paths ending there (the trivial path included), and one
//! `M_n(K[x,x⁻¹])` block per cycle, `n` the number of paths ending at the
//! cycle's base vertex whose only visit to the base is at the end. The
//! Laurent block size does not depend on the chosen base vertex; the
//! lexicographically least one is used.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::classify::no_cycle_has_exit;
use crate::graph::WeightedGraph;
use crate::{Error, Result};

/// Coefficient ring of a block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Ring {
    K,
    Laurent,
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::K => write!(f, "K"),
            Ring::Laurent => write!(f, "K[x,x^-1]"),
        }
    }
}

/// One matrix-algebra block, with the sink or cycle base it comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub size: BigUint,
    pub ring: Ring,
    pub at: String,
}

/// The multiset of blocks `⊕ M_m(K) ⊕ M_n(K[x,x⁻¹])`, K-blocks first
/// (sinks in lexicographic order), then Laurent blocks (cycle bases in
/// lexicographic order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub blocks: Vec<Block>,
}

impl Decomposition {
    /// `M_5(K) (+) M_12(K) (+) M_8(K[x,x^-1])`-style rendering.
    pub fn pretty(&self) -> String {
        if self.blocks.is_empty() {
            return "0".to_owned();
        }
        self.blocks
            .iter()
            .map(|b| format!("M_{}({})", b.size, b.ring))
            .collect::<Vec<_>>()
            .join(" (+) ")
    }

    /// The block multiset as sorted (size, ring) pairs.
    pub fn multiset(&self) -> Vec<(BigUint, Ring)> {
        let mut pairs: Vec<(BigUint, Ring)> = self
            .blocks
            .iter()
            .map(|b| (b.size.clone(), b.ring))
            .collect();
        pairs.sort();
        pairs
    }
}

/// Total K-dimension of a decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TotalDimension {
    Finite(BigUint),
    Infinite,
}

impl fmt::Display for TotalDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TotalDimension::Finite(n) => write!(f, "{n}"),
            TotalDimension::Infinite => write!(f, "infinite"),
        }
    }
}

/// `Σ m²` over the K-blocks when no Laurent block exists, else infinite.
pub fn total_dimension(d: &Decomposition) -> TotalDimension {
    if d.blocks.iter().any(|b| b.ring == Ring::Laurent) {
        return TotalDimension::Infinite;
    }
    let mut sum = BigUint::zero();
    for b in &d.blocks {
        sum += &b.size * &b.size;
    }
    TotalDimension::Finite(sum)
}

/// Decomposes the algebra of an unweighted graph without exit-carrying
/// cycles.
pub fn decompose(g: &WeightedGraph) -> Result<Decomposition> {
    if !g.is_unweighted() {
        return Err(Error::StructuralPrecondition(
            "decomposition requires an unweighted graph".to_owned(),
        ));
    }
    let (no_exit, witness) = no_cycle_has_exit(g)?;
    if !no_exit {
        let w = witness.expect("witness accompanies a negative verdict");
        return Err(Error::StructuralPrecondition(format!(
            "cycle `{}` has exit `{}`; decomposition requires no cycle to have an exit",
            w.cycle.join(" "),
            w.exit
        )));
    }

    let mut blocks = Vec::new();
    let mut sinks: Vec<&String> = g.vertices().iter().filter(|v| g.is_sink(v)).collect();
    sinks.sort();
    for sink in sinks {
        let mut memo = HashMap::new();
        let size = paths_into(g, sink, None, &mut memo)?;
        blocks.push(Block {
            size,
            ring: Ring::K,
            at: sink.clone(),
        });
    }

    let mut bases: Vec<String> = Vec::new();
    for cycle in g.cycles() {
        // cycles() bases each representative at its least vertex
        bases.push(g.path_source(&cycle)?);
    }
    bases.sort();
    for base in bases {
        let size = laurent_block_size(g, &base)?;
        blocks.push(Block {
            size,
            ring: Ring::Laurent,
            at: base,
        });
    }
    Ok(Decomposition { blocks })
}

/// Number of paths ending at `base` that visit `base` only at the end.
pub fn laurent_block_size(g: &WeightedGraph, base: &str) -> Result<BigUint> {
    let mut memo = HashMap::new();
    paths_into(g, base, Some(base), &mut memo)
}

/// Counts paths ending at `target` (trivial path included), optionally
/// avoiding `avoid` at every position except the final range. The no-exit
/// precondition keeps the relevant region acyclic; re-entering a vertex
/// during the recursion is reported rather than looping.
fn paths_into(
    g: &WeightedGraph,
    target: &str,
    avoid: Option<&str>,
    memo: &mut HashMap<String, Option<BigUint>>,
) -> Result<BigUint> {
    // memo value None marks "in progress" (a cycle would revisit it)
    if let Some(state) = memo.get(target) {
        return match state {
            Some(count) => Ok(count.clone()),
            None => Err(Error::InternalAssertion(format!(
                "path counting re-entered `{target}`; a cycle reaches a sink or base"
            ))),
        };
    }
    memo.insert(target.to_owned(), None);
    let mut count = BigUint::one();
    for e in g.in_edges(target) {
        if let Some(avoid) = avoid {
            if e.source == avoid {
                continue;
            }
        }
        let sub = paths_into(g, &e.source, avoid, memo)?;
        count += sub;
    }
    memo.insert(target.to_owned(), Some(count.clone()));
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_graph, Format};

    fn graph(text: &str) -> WeightedGraph {
        parse_graph(text, Format::Wg).unwrap()
    }

    #[test]
    fn single_vertex_is_one_k_block() {
        let d = decompose(&graph("vertex v\n")).unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(d.blocks[0].size, BigUint::from(1u32));
        assert_eq!(d.blocks[0].ring, Ring::K);
        assert_eq!(d.pretty(), "M_1(K)");
        assert_eq!(
            total_dimension(&d),
            TotalDimension::Finite(BigUint::from(1u32))
        );
    }

    #[test]
    fn g3_pipeline_shape_two_parallel_edges() {
        // u -> v twice: the type-A output of the weight-2 edge graph
        let d = decompose(&graph(
            "vertex v u\nedge e__1 : u -> v\nedge e__2 : u -> v\n",
        ))
        .unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(d.blocks[0].size, BigUint::from(3u32));
        assert_eq!(d.blocks[0].at, "v");
        assert_eq!(
            total_dimension(&d),
            TotalDimension::Finite(BigUint::from(9u32))
        );
    }

    #[test]
    fn loop_gives_laurent_block() {
        let d = decompose(&graph("vertex v w\nedge e : v -> w\nedge m : w -> w\n")).unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(d.blocks[0].ring, Ring::Laurent);
        // paths ending at w not through w internally: w itself and e
        assert_eq!(d.blocks[0].size, BigUint::from(2u32));
        assert_eq!(total_dimension(&d), TotalDimension::Infinite);
        assert_eq!(d.pretty(), "M_2(K[x,x^-1])");
    }

    #[test]
    fn rejects_weighted_and_exit_cycles() {
        assert!(matches!(
            decompose(&graph("vertex v u\nedge e : v -> u weight 2\n")),
            Err(Error::StructuralPrecondition(_))
        ));
        assert!(matches!(
            decompose(&graph("vertex v\nedge a : v -> v\nedge b : v -> v\n")),
            Err(Error::StructuralPrecondition(_))
        ));
    }

    #[test]
    fn laurent_size_is_base_invariant_on_a_two_cycle() {
        let g = graph(
            "vertex p q r\nedge e : p -> q\nedge a : q -> r\nedge b : r -> q\n",
        );
        let at_q = laurent_block_size(&g, "q").unwrap();
        let at_r = laurent_block_size(&g, "r").unwrap();
        assert_eq!(at_q, at_r);
        assert_eq!(at_q, BigUint::from(3u32));
    }
}
