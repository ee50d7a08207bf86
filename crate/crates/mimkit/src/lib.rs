//! mimkit: a desk-scale toolkit for mim-width of hereditary graph classes.
//!
//! The library provides:
//! - small simple graphs, a named-graph catalog, induced-subgraph search,
//!   isomorph-free enumeration, and class predicates ([`graph`], [`named`],
//!   [`iso`], [`enumerate`], [`classes`]);
//! - branch decompositions, cut induced-matching values, and an exact
//!   mim-width oracle for graphs with at most 11 vertices
//!   ([`decomposition`], [`oracle`]);
//! - mim-width-(quasi-)preserving graph rewrites ([`transforms`]);
//! - generators for walls, net-walls, the chordal-bipartite gadgets, and all
//!   unbounded-width witness families ([`generators`]);
//! - constructive certified decomposition algorithms for specific hereditary
//!   classes ([`decomposers`]);
//! - the bigenic (H1, H2) boundedness classifier ([`classifier`]);
//! - the verification lab that replays the property suites and persists
//!   reports ([`lab`]).

pub mod bits;
pub mod classes;
pub mod classifier;
pub mod decomposers;
pub mod decomposition;
pub mod enumerate;
pub mod error;
pub mod formats;
pub mod generators;
pub mod graph;
pub mod iso;
pub mod lab;
pub mod named;
pub mod oracle;
pub mod transforms;

pub use error::{Error, Result};
pub use graph::Graph;
