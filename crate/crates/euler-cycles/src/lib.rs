//! Classification of Euler graphs by the lengths of their simple cycles mod 4.
//!
//! An Euler graph (connected, every degree even) falls into a cycle-type class
//! depending on which residues `n mod 4` occur among its simple cycle lengths.
//! This crate provides:
//!
//! - a compact bitset graph type on up to 32 nodes with graph6 and edge-list I/O
//!   and a canonical code for isomorphism testing ([`graph`], [`canon`]),
//! - simple-cycle enumeration, cycle spectra, chord and intersection structure
//!   ([`cycles`]),
//! - the combined-cycle parity calculus on types mod 4: pair tables, cycle-division
//!   possibilities, feasible three-cycle configurations, and a bounded-depth
//!   symbolic case explorer ([`mod4`]),
//! - edge-disjoint cycle decompositions of Euler graphs with per-type counts and
//!   the size congruence they satisfy ([`decompose`]),
//! - graceful-labeling verification and exhaustive backtracking search with the
//!   Rosa–Golomb arithmetic test ([`graceful`]),
//! - isomorph-free exhaustive generation of small Euler graphs, a census by
//!   cycle-type class, audits of minimum orders, degree-two and regularity
//!   claims, named constructions, tree planting, and concrete witness search
//!   for symbolic configurations ([`atlas`]).
//!
//! All operations are pure and deterministic; parallel code paths merge and sort
//! results so output is identical for any worker count.

pub mod atlas;
pub mod audit;
pub mod canon;
pub mod cycles;
pub mod decompose;
pub mod graceful;
pub mod graph;
pub mod mod4;

pub use canon::{canonical_code, canonical_form, CanonicalCode};
pub use cycles::{Cycle, CycleError, CycleSpectrum, EpsilonTag};
pub use graph::{Graph, GraphError};
pub use mod4::{Family, Mod4, Parity, Shape};

/// Worker count used by parallel enumeration: `EULER_THREADS` if set and
/// positive, otherwise the number of logical cores.
pub fn worker_threads() -> usize {
    if let Ok(s) = std::env::var("EULER_THREADS") {
        if let Ok(n) = s.trim().parse::<usize>() {
            if n >= 1 {
                return n;
            }
        }
    }
    std::thread::available_parallelism().map_or(1, |n| n.get())
}
