//! Exact machinery for the edge-contraction order on finite simple graphs.
//!
//! The crate is organized around three layers:
//!
//! * plain graph plumbing: bitset graphs, graph6 text format, isomorphism
//!   via canonical labeling, block decomposition and exhaustive enumeration
//!   of small connected graphs ([`graph`], [`graph6`], [`iso`], [`blocks`],
//!   [`enumerate`]);
//! * the contraction engine: exact backtracking search for contraction
//!   models, rooted models and induced-minor models, plus Higman's sequence
//!   order ([`model`], [`search`], [`sequences`]);
//! * structural results made executable: the clique-cactus recognizer with
//!   witnesses, the stick/cycle/clique constructors and block-level
//!   decomposition, and the antichain families with their exact
//!   comparability laws ([`structure`], [`antichains`]).
//!
//! Everything here is `no_std` + `alloc`; all IO, threading and file
//! formats live in the companion CLI crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod antichains;
pub mod blocks;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod model;
pub mod search;
pub mod sequences;
pub mod structure;

pub use graph::{Graph, RootedGraph};
