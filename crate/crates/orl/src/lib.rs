//! Ordered-graph laboratory.
//!
//! Ordered graphs carry the integer order on their vertices. This crate
//! studies the structure forced by forbidding induced monotone paths in a
//! graph and its complement: transitive closures, bipartite decompositions,
//! extraction of large homogeneous sets, and expander-based constructions
//! showing the limits of those guarantees.
//!
//! The primary way in is the `examples/` directory (one runnable example per
//! capability, `cargo run --example <name>`); the same operations are also
//! reachable through the thin `orl` binary.

pub mod cli;
pub mod closure;
pub mod construction;
pub mod embedding;
pub mod graph;
pub mod homogeneous;
pub mod ogf;
pub mod oracles;
pub mod patterns;
pub mod qeh;
pub mod stream;
