//! Memoized exhaustive search over peg bitsets.

use rustc_hash::FxHashMap;

use super::{for_each_jump, jump_bits, Config, Jump, JumpSequence};
use crate::graph::{low_mask, Graph, VertexSet};
use crate::{Error, Limits, Result};

/// Graphs up to this order get a flat table indexed by the peg bitset.
const DENSE_ORDER: usize = 22;

/// Map from peg bitsets to `u64` payloads.
pub(crate) enum StateTable {
    // payload + 1, so that the zeroed allocation means "absent"
    Dense(Vec<u64>),
    Sparse(FxHashMap<u64, u64>),
}

impl StateTable {
    pub(crate) fn new(n: usize) -> Self {
        if n <= DENSE_ORDER {
            StateTable::Dense(vec![0; 1 << n])
        } else {
            StateTable::Sparse(FxHashMap::default())
        }
    }

    #[inline]
    pub(crate) fn get(&self, key: u64) -> Option<u64> {
        match self {
            StateTable::Dense(t) => t[key as usize].checked_sub(1),
            StateTable::Sparse(m) => m.get(&key).copied(),
        }
    }

    #[inline]
    pub(crate) fn insert(&mut self, key: u64, value: u64) {
        match self {
            StateTable::Dense(t) => t[key as usize] = value + 1,
            StateTable::Sparse(m) => {
                m.insert(key, value);
            }
        }
    }
}

pub(crate) fn check_searchable(g: &Graph, limits: &Limits) -> Result<()> {
    let cap = limits.search_cap.min(Limits::MAX_SEARCH_ORDER);
    if g.n() > cap {
        return Err(Error::CapExceeded {
            what: "game-state search",
            n: g.n(),
            cap,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Answers "which single-peg end states can this configuration reach?" with a
/// memo table shared across queries on the same graph.
pub struct Solver<'g> {
    graph: &'g Graph,
    full: u64,
    finals: StateTable,
}

impl<'g> Solver<'g> {
    /// Fails on disconnected graphs and graphs above the search cap.
    pub fn new(graph: &'g Graph, limits: &Limits) -> Result<Self> {
        check_searchable(graph, limits)?;
        Ok(Solver {
            graph,
            full: low_mask(graph.n()),
            finals: StateTable::new(graph.n()),
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// Vertices that can hold the last peg when `pegs` is played down to a
    /// single peg. Empty when no such sequence exists.
    pub fn finals(&mut self, pegs: VertexSet) -> VertexSet {
        VertexSet(self.finals_bits(pegs.bits()))
    }

    fn finals_bits(&mut self, pegs: u64) -> u64 {
        if pegs.count_ones() <= 1 {
            return pegs;
        }
        if let Some(v) = self.finals.get(pegs) {
            return v;
        }
        let graph = self.graph;
        let adj = graph.rows();
        let holes = self.full & !pegs;
        let mut acc = 0;
        for x in VertexSet(pegs) {
            for y in VertexSet(adj[x] & pegs) {
                for z in VertexSet(adj[y] & holes) {
                    acc |= self.finals_bits(jump_bits(pegs, Jump { x, y, z }));
                }
            }
        }
        self.finals.insert(pegs, acc);
        acc
    }

    /// Lexicographically first jump sequence (under the `(x, y, z)` jump
    /// order) that leaves exactly one peg, located in `targets`.
    pub fn reduce_into(&mut self, start: &Config, targets: VertexSet) -> Option<JumpSequence> {
        let targets = targets.bits();
        let mut pegs = start.pegs().bits();
        if self.finals_bits(pegs) & targets == 0 {
            return None;
        }
        let graph = self.graph;
        let adj = graph.rows();
        let mut seq = JumpSequence::new();
        while pegs.count_ones() > 1 {
            let mut next = None;
            for_each_jump(adj, pegs, self.full, |j| {
                if next.is_none() {
                    let child = jump_bits(pegs, j);
                    // memo lookups only; every child was evaluated above
                    let reach = if child.count_ones() <= 1 {
                        child
                    } else {
                        self.finals.get(child).expect("child evaluated")
                    };
                    if reach & targets != 0 {
                        next = Some((j, child));
                    }
                }
            });
            let (j, child) = next.expect("finals promised a continuation");
            seq.push(j);
            pegs = child;
        }
        Some(seq)
    }

    /// Lexicographically first sequence ending with a single peg anywhere.
    pub fn reduce_to_single_peg(&mut self, start: &Config) -> Option<JumpSequence> {
        self.reduce_into(start, VertexSet(self.full))
    }
}

/// A complete search for a jump sequence that ends with exactly one peg.
pub fn reachable_to_single_peg(g: &Graph, c: &Config, limits: &Limits) -> Result<Option<JumpSequence>> {
    let mut solver = Solver::new(g, limits)?;
    Ok(solver.reduce_to_single_peg(c))
}
