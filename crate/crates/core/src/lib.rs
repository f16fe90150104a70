//! Exact search and constructive strategies for peg solitaire and fool's
//! solitaire on finite simple graphs.
//!
//! The crate is split into four layers:
//!
//! * [`graph`]: immutable bitset graphs, named families, joins, cartesian
//!   products, structural invariants and graph6 I/O.
//! * [`engine`]: jump mechanics and memoized exhaustive search (solvability
//!   predicates and the fool's solitaire number with witnesses).
//! * [`strategies`]: explicit jump-sequence constructions that certify
//!   solvability or terminal-state claims, checked by replay.
//! * [`census`]: batch evaluation over graph streams plus scripted
//!   verification suites.

pub mod census;
pub mod engine;
pub mod error;
pub mod graph;
pub mod strategies;

pub use error::{Error, Result};

/// Size limits for the exact searches.
///
/// Every exact routine refuses graphs larger than its cap instead of running
/// for an unbounded amount of time.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Cap for independence number and chromatic number.
    pub exact_cap: usize,
    /// Cap for the subset dynamic program behind Hamiltonian paths.
    pub ham_path_cap: usize,
    /// Cap for game-state searches.
    pub search_cap: usize,
}

impl Limits {
    /// Hard ceiling for game-state search; peg sets are packed into `u64`
    /// together with a sentinel value.
    pub const MAX_SEARCH_ORDER: usize = 63;

    pub fn with_cap(cap: usize) -> Self {
        Limits {
            exact_cap: cap,
            search_cap: cap.min(Self::MAX_SEARCH_ORDER),
            ..Limits::default()
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            exact_cap: 24,
            ham_path_cap: 20,
            search_cap: 24,
        }
    }
}
