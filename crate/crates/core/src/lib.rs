//! Automorphism and isometry groups of finite multigraphs and metric graphs.
//!
//! A multigraph here may contain loops and parallel edges, and edges are
//! positional objects: two parallel edges are distinct and an automorphism is
//! a *pair* of permutations (one on vertices, one on edges) that respects the
//! endpoint map. On top of the combinatorial layer this crate builds exact
//! metric graphs (rational edge lengths), their canonical loopless models and
//! isometry groups, the named extremal families (banana, bouquet, lollipop),
//! and an isomorph-free exhaustive enumerator used to machine-check the
//! automorphism bound
//!
//! - `#Aut ≤ 12` for first Betti number `g = 2`,
//! - `#Aut ≤ 2^g · g!` for `g ≥ 3`,
//!
//! together with the classification of the graphs attaining it.
//!
//! The crate is `no_std`-compatible (it only needs `alloc`); IO, JSON and
//! parallel sweeps live in the companion `tropaut` crate.

#![cfg_attr(not(any(test, feature = "std")), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

mod error;

pub mod aut;
pub mod enumeration;
pub mod families;
pub mod graph;
pub mod metric;
pub mod rational;

pub use error::{Error, Result};
pub use graph::{EdgeId, Multigraph, VertexId};
pub use rational::Rational;
