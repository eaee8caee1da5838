//! Localization number and metric dimension of diameter-2 graphs.
//!
//! The crate builds the graph families studied here (Kneser graphs, Moore
//! graphs of diameter 2, Erdős–Rényi polarity graphs), decides the
//! localization game and metric dimension exactly at desk scale, and
//! implements the constructive resolving sets, the hypergraph-detection
//! machinery behind the Kneser bounds, and the staged cop strategy for Moore
//! graphs. Every constructive result produces a certificate that can be
//! re-checked by an independent verifier.
//!
//! Module map:
//!
//! * [`graph`]: immutable graphs with all-pairs distances and the family
//!   generators.
//! * [`geometry`]: GF(q) arithmetic and the polarity graphs ER(q).
//! * [`hyper`]: detection vectors, detectability, Berge girth, the Kneser
//!   translation, gadget search and the resolving-set cover.
//! * [`metric`]: resolving-set verification, exact and greedy metric
//!   dimension, and the Moore/polarity constructions.
//! * [`game`]: belief-state semantics of the localization game, the exact
//!   decision procedure, strategy verification and the Moore strategy.
//! * [`bounds`]: exact-rational evaluation of every closed-form bound.

pub mod bounds;
pub mod budget;
pub mod error;
pub mod game;
pub mod geometry;
pub mod graph;
pub mod hyper;
pub mod metric;
pub mod vertex_set;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::Graph;
pub use vertex_set::VertexSet;
