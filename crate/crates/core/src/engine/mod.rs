//! Game mechanics: configurations, jumps and their legality.

mod fools;
mod search;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use fools::{
    fools_number, fools_number_dual, solvability_profile, terminal_states, upper_bound_check,
    FoolsReport, SolvabilityProfile, UpperBound,
};
pub use search::{reachable_to_single_peg, Solver};

use crate::graph::{low_mask, Graph, VertexSet};
use crate::{Error, Result};

/// Peg occupancy over the vertices of a host graph: a set bit is a peg, a
/// clear bit is a hole.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Config {
    n: usize,
    pegs: VertexSet,
}

impl Config {
    pub fn new(n: usize, pegs: VertexSet) -> Result<Self> {
        if n > Graph::MAX_ORDER {
            return Err(Error::TooManyVertices(n));
        }
        if let Some(v) = pegs.difference(VertexSet::full(n)).first() {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        Ok(Config { n, pegs })
    }

    /// Every vertex pegged except `hole`.
    pub fn single_hole(n: usize, hole: usize) -> Result<Self> {
        Config::with_holes(n, VertexSet::singleton(hole))
    }

    pub fn with_holes(n: usize, holes: VertexSet) -> Result<Self> {
        if let Some(v) = holes.difference(VertexSet::full(n)).first() {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        Config::new(n, VertexSet::full(n).difference(holes))
    }

    pub(crate) fn from_bits(n: usize, bits: u64) -> Self {
        debug_assert!(bits & !low_mask(n) == 0);
        Config {
            n,
            pegs: VertexSet(bits),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pegs(&self) -> VertexSet {
        self.pegs
    }

    pub fn holes(&self) -> VertexSet {
        VertexSet::full(self.n).difference(self.pegs)
    }

    pub fn peg_count(&self) -> usize {
        self.pegs.len()
    }

    pub fn has_peg(&self, v: usize) -> bool {
        self.pegs.contains(v)
    }

    /// Swaps pegs and holes.
    pub fn complement(&self) -> Config {
        Config {
            n: self.n,
            pegs: self.holes(),
        }
    }

    /// Peg set as a hex string, e.g. `0x1f`.
    pub fn to_hex(&self) -> String {
        format!("{:#x}", self.pegs.bits())
    }

    pub fn from_hex(n: usize, s: &str) -> Result<Self> {
        let digits = s.strip_prefix("0x").unwrap_or(s);
        let bits = u64::from_str_radix(digits, 16)
            .map_err(|e| Error::Certificate(format!("bad peg bitset `{s}`: {e}")))?;
        Config::new(n, VertexSet(bits))
    }
}

/// The jump `xyz`: the peg at `x` jumps over the peg at `y` into the hole at
/// `z`, removing the peg at `y`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Jump {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl Jump {
    pub fn new(x: usize, y: usize, z: usize) -> Self {
        Jump { x, y, z }
    }

    /// Applies `f` to every vertex of the jump.
    pub fn map(self, f: impl Fn(usize) -> usize) -> Jump {
        Jump::new(f(self.x), f(self.y), f(self.z))
    }
}

impl fmt::Display for Jump {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

impl Serialize for Jump {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.x, self.y, self.z].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Jump {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [x, y, z] = <[usize; 3]>::deserialize(d)?;
        Ok(Jump { x, y, z })
    }
}

/// Why a jump cannot be made.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JumpFault {
    OutOfRange(usize),
    Repeated,
    MissingPeg(usize),
    MissingHole(usize),
    NotAdjacent(usize, usize),
}

impl fmt::Display for JumpFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JumpFault::OutOfRange(v) => write!(f, "vertex {v} is out of range"),
            JumpFault::Repeated => f.write_str("x, y and z must be distinct"),
            JumpFault::MissingPeg(v) => write!(f, "no peg at {v}"),
            JumpFault::MissingHole(v) => write!(f, "no hole at {v}"),
            JumpFault::NotAdjacent(a, b) => write!(f, "{a} and {b} are not adjacent"),
        }
    }
}

/// Checks `j` against `g` and `c` without applying it.
pub fn check_jump(g: &Graph, c: &Config, j: Jump) -> std::result::Result<(), JumpFault> {
    for v in [j.x, j.y, j.z] {
        if v >= g.n() || v >= c.n() {
            return Err(JumpFault::OutOfRange(v));
        }
    }
    if j.x == j.y || j.y == j.z || j.x == j.z {
        return Err(JumpFault::Repeated);
    }
    if !g.has_edge(j.x, j.y) {
        return Err(JumpFault::NotAdjacent(j.x, j.y));
    }
    if !g.has_edge(j.y, j.z) {
        return Err(JumpFault::NotAdjacent(j.y, j.z));
    }
    for v in [j.x, j.y] {
        if !c.has_peg(v) {
            return Err(JumpFault::MissingPeg(v));
        }
    }
    if c.has_peg(j.z) {
        return Err(JumpFault::MissingHole(j.z));
    }
    Ok(())
}

/// All legal jumps in lexicographic `(x, y, z)` order.
pub fn legal_jumps(g: &Graph, c: &Config) -> Vec<Jump> {
    let mut out = Vec::new();
    for_each_jump(g.rows(), c.pegs.bits(), low_mask(c.n), |j| out.push(j));
    out
}

/// Calls `f` on every legal jump from `pegs` in lexicographic order.
#[inline]
pub(crate) fn for_each_jump(adj: &[u64], pegs: u64, full: u64, mut f: impl FnMut(Jump)) {
    let holes = full & !pegs;
    for x in VertexSet(pegs) {
        for y in VertexSet(adj[x] & pegs) {
            for z in VertexSet(adj[y] & holes) {
                f(Jump { x, y, z });
            }
        }
    }
}

#[inline]
pub(crate) fn has_jump(adj: &[u64], pegs: u64, full: u64) -> bool {
    let holes = full & !pegs;
    // a peg y with a pegged neighbor and an empty neighbor
    VertexSet(pegs).iter().any(|y| adj[y] & pegs != 0 && adj[y] & holes != 0)
}

#[inline]
pub(crate) fn jump_bits(pegs: u64, j: Jump) -> u64 {
    pegs & !(1 << j.x) & !(1 << j.y) | 1 << j.z
}

/// Applies a legal jump, returning the new configuration.
pub fn apply_jump(g: &Graph, c: &Config, j: Jump) -> Result<Config> {
    check_jump(g, c, j).map_err(|fault| Error::IllegalJump { jump: j, fault })?;
    Ok(Config::from_bits(c.n, jump_bits(c.pegs.bits(), j)))
}

/// An ordered list of jumps.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct JumpSequence(pub Vec<Jump>);

impl JumpSequence {
    pub fn new() -> Self {
        JumpSequence(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, j: Jump) {
        self.0.push(j);
    }

    pub fn extend(&mut self, other: &JumpSequence) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Jump> {
        self.0.iter()
    }

    /// Relabels every jump through `f`.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> JumpSequence {
        JumpSequence(self.0.iter().map(|j| j.map(&f)).collect())
    }

    /// The sequence that plays this one backwards on complementary
    /// configurations. If `c -> c'` by `xyz`, then `comp(c')` has pegs at `x`
    /// and `y` and a hole at `z`, so the same jump takes it to `comp(c)`; only
    /// the order flips.
    pub fn dual(&self) -> JumpSequence {
        JumpSequence(self.0.iter().rev().copied().collect())
    }

    /// Replays the sequence from `start`, reporting the first illegal jump.
    pub fn replay(&self, g: &Graph, start: &Config) -> Result<Config> {
        let mut c = *start;
        for (index, &jump) in self.0.iter().enumerate() {
            check_jump(g, &c, jump).map_err(|fault| Error::Replay { index, jump, fault })?;
            c = Config::from_bits(c.n, jump_bits(c.pegs.bits(), jump));
        }
        Ok(c)
    }
}

impl FromIterator<Jump> for JumpSequence {
    fn from_iter<I: IntoIterator<Item = Jump>>(iter: I) -> Self {
        JumpSequence(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a JumpSequence {
    type Item = &'a Jump;
    type IntoIter = std::slice::Iter<'a, Jump>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
