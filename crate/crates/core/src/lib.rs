//! Toolkit for weighted Leavitt path algebras over finite weighted graphs.
//!
//! Given a finite weighted graph `(E, w)` this crate decides whether the
//! weighted Leavitt path algebra `L_K(E, w)` is finite-dimensional, locally
//! finite (equivalently Noetherian, equivalently of Gelfand–Kirillov
//! dimension at most 1), produces combinatorial witnesses when it is not,
//! and — when it is — rewrites the weighted graph into an unweighted one
//! and emits the explicit block decomposition into matrix algebras over
//! `K` and `K[x, x⁻¹]`.
//!
//! The crate is organised along the pipeline:
//!
//! - [`graph`] — the weighted graph data model, `.wg`/JSON formats and
//!   elementary graph theory (trees, hereditary sets, cycles, exits).
//! - [`nod`] — letters of the double graph, special edges, forbidden
//!   length-2 factors, the transition digraph whose walks are exactly the
//!   nontrivial nod-paths, enumeration, graded counting and growth.
//! - [`quasicycle`] — nod²-paths, quasicycles, the connection relations
//!   and the `{0, 1, ≥2}` GK classification used as an independent oracle.
//! - [`classify`] — the five well-behavedness conditions, no-exit-cycle
//!   checks and the theorem-level verdicts with checkable witnesses.
//! - [`rewrite`] — type-A edge reversal and type-B edge elimination,
//!   producing an unweighted graph with isomorphic algebra plus a replay
//!   trace.
//! - [`decompose`] — sink/cycle counting on the unweighted result, giving
//!   the `⊕ M_m(K) ⊕ M_n(K[x,x⁻¹])` block structure.
//! - [`oracle`] — brute-force reference implementations (generate all
//!   d-words, filter by forbidden-factor scan) kept independent of the
//!   transition-digraph machinery they are used to check.

pub mod classify;
pub mod decompose;
pub mod graph;
pub mod nod;
pub mod oracle;
pub mod quasicycle;
pub mod rewrite;

mod error;

pub use error::{Error, Result};
pub use graph::{Edge, GraphPath, WeightedGraph};
pub use nod::{Degree, Letter, NodWord, SpecialSelection, TransitionDigraph};
