//! The fool's solitaire number, solvability predicates and the independence
//! upper bound.
//!
//! `F(G)` is computed two ways. [`fools_number`] plays forward from every
//! single-hole start and keeps the largest dead configuration. [`fools_number_dual`]
//! walks independent sets by decreasing size and asks whether holes at the set
//! can be played down to one peg; reversing that reduction on complementary
//! configurations yields a game from a single hole ending at the set.

use std::collections::BTreeSet;

use serde::Serialize;

use super::search::{check_searchable, StateTable};
use super::{for_each_jump, has_jump, jump_bits, Config, Jump, JumpSequence, Solver};
use crate::graph::invariants::{independence_number, independence_size};
use crate::graph::{low_mask, Graph, VertexSet};
use crate::{Error, Limits, Result};

/// `F(G)` with a witness game.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoolsReport {
    pub f_value: usize,
    pub witness_hole: usize,
    pub terminal: VertexSet,
    pub witness_sequence: JumpSequence,
}

impl FoolsReport {
    /// Replays the witness and checks every invariant of the report.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let start = Config::single_hole(g.n(), self.witness_hole)?;
        let end = self.witness_sequence.replay(g, &start)?;
        let fail = |what: &str| Err(Error::Precondition(format!("fools report: {what}")));
        if end.pegs() != self.terminal {
            return fail("witness does not end at the terminal set");
        }
        if self.terminal.len() != self.f_value {
            return fail("terminal size differs from f_value");
        }
        if !g.is_independent(self.terminal) {
            return fail("terminal set is not independent");
        }
        if has_jump(g.rows(), end.pegs().bits(), low_mask(g.n())) {
            return fail("terminal configuration still has a legal jump");
        }
        Ok(())
    }
}

const ROOT: u64 = 1 << 62;

fn encode_jump(j: Jump) -> u64 {
    (j.x << 12 | j.y << 6 | j.z) as u64
}

fn decode_jump(code: u64) -> Jump {
    let c = code as usize;
    Jump::new(c >> 12 & 63, c >> 6 & 63, c & 63)
}

/// Forward search over every configuration reachable from a single-hole
/// start, shared across starts.
pub fn fools_number(g: &Graph, limits: &Limits) -> Result<FoolsReport> {
    check_searchable(g, limits)?;
    let n = g.n();
    let adj = g.rows();
    let full = low_mask(n);
    let mut parent = StateTable::new(n);
    let mut best: Option<u64> = None;
    let mut stack = Vec::new();

    for hole in 0..n {
        let start = full & !(1 << hole);
        if parent.get(start).is_some() {
            continue;
        }
        parent.insert(start, ROOT | hole as u64);
        stack.push(start);
        while let Some(state) = stack.pop() {
            let mut dead = true;
            for_each_jump(adj, state, full, |j| {
                dead = false;
                let child = jump_bits(state, j);
                if parent.get(child).is_none() {
                    parent.insert(child, encode_jump(j));
                    stack.push(child);
                }
            });
            if dead && best.is_none_or(|b| state.count_ones() > b.count_ones()) {
                best = Some(state);
            }
        }
    }

    let terminal = best.expect("at least one start state");
    let mut jumps = Vec::new();
    let mut state = terminal;
    let witness_hole = loop {
        let code = parent.get(state).expect("visited state has a parent");
        if code & ROOT != 0 {
            break (code & !ROOT) as usize;
        }
        let j = decode_jump(code);
        jumps.push(j);
        state = state & !(1 << j.z) | 1 << j.x | 1 << j.y;
    };
    jumps.reverse();
    Ok(FoolsReport {
        f_value: terminal.count_ones() as usize,
        witness_hole,
        terminal: VertexSet(terminal),
        witness_sequence: JumpSequence(jumps),
    })
}

/// Calls `f` on each independent set of exactly `size` vertices in ascending
/// bit order until `f` returns `true`.
fn find_independent_of_size(adj: &[u64], n: usize, size: usize, mut f: impl FnMut(u64) -> bool) -> bool {
    fn go(adj: &[u64], cand: u64, chosen: u64, left: usize, f: &mut dyn FnMut(u64) -> bool) -> bool {
        if left == 0 {
            return f(chosen);
        }
        if (cand.count_ones() as usize) < left {
            return false;
        }
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= !(1 << v);
            if go(adj, rest & !adj[v], chosen | 1 << v, left - 1, f) {
                return true;
            }
        }
        false
    }
    go(adj, low_mask(n), 0, size, &mut f)
}

/// `F(G)` through independent sets: the largest independent `T` such that
/// holes at `T` can be reduced to a single peg.
pub fn fools_number_dual(g: &Graph, limits: &Limits) -> Result<FoolsReport> {
    check_searchable(g, limits)?;
    let n = g.n();
    let full = low_mask(n);
    let alpha = independence_size(g, &Limits { exact_cap: limits.search_cap, ..*limits })?;
    let mut solver = Solver::new(g, limits)?;
    for size in (0..=alpha).rev() {
        let mut hit = None;
        find_independent_of_size(g.rows(), n, size, |t| {
            let pegs = full & !t;
            if !solver.finals(VertexSet(pegs)).is_empty() {
                hit = Some(t);
                true
            } else {
                false
            }
        });
        if let Some(t) = hit {
            let start = Config::from_bits(n, full & !t);
            let reduction = solver.reduce_to_single_peg(&start).expect("finals promised a reduction");
            let last = reduction.replay(g, &start)?;
            return Ok(FoolsReport {
                f_value: size,
                witness_hole: last.pegs().first().expect("one peg remains"),
                terminal: VertexSet(t),
                witness_sequence: reduction.dual(),
            });
        }
    }
    Err(Error::Strategy("no terminal state found; the empty set always qualifies".into()))
}

/// Every dead configuration reachable from some single-hole start.
pub fn terminal_states(g: &Graph, limits: &Limits) -> Result<BTreeSet<VertexSet>> {
    check_searchable(g, limits)?;
    let n = g.n();
    let adj = g.rows();
    let full = low_mask(n);
    let mut seen = StateTable::new(n);
    let mut out = BTreeSet::new();
    let mut stack: Vec<u64> = (0..n).map(|h| full & !(1 << h)).collect();
    for &s in &stack {
        seen.insert(s, 0);
    }
    while let Some(state) = stack.pop() {
        let mut dead = true;
        for_each_jump(adj, state, full, |j| {
            dead = false;
            let child = jump_bits(state, j);
            if seen.get(child).is_none() {
                seen.insert(child, 0);
                stack.push(child);
            }
        });
        if dead {
            out.insert(VertexSet(state));
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SolvabilityProfile {
    /// Some single-hole start reduces to one peg.
    pub solvable: bool,
    /// Every single-hole start reduces to one peg.
    pub freely_solvable: bool,
    /// Every single-hole start at `v` reduces to one peg inside `N[v]`.
    pub freely_nbhd_solvable: bool,
}

pub fn solvability_profile(g: &Graph, limits: &Limits) -> Result<SolvabilityProfile> {
    let mut solver = Solver::new(g, limits)?;
    let n = g.n();
    let mut profile = SolvabilityProfile {
        solvable: false,
        freely_solvable: true,
        freely_nbhd_solvable: true,
    };
    for v in 0..n {
        let finals = solver.finals(VertexSet::full(n).difference(VertexSet::singleton(v)));
        profile.solvable |= !finals.is_empty();
        profile.freely_solvable &= !finals.is_empty();
        profile.freely_nbhd_solvable &= !finals.intersection(g.closed_neighbors(v)).is_empty();
    }
    Ok(profile)
}

/// Independence number and whether the sharper bound `F <= α - 1` is
/// guaranteed: `α <= n - 2` and the complement of every maximum independent set
/// is itself independent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UpperBound {
    pub alpha: usize,
    pub prop2_applies: bool,
}

pub fn upper_bound_check(g: &Graph, limits: &Limits) -> Result<UpperBound> {
    let ind = independence_number(g, limits)?;
    let all = g.vertices();
    let applies = ind.size + 2 <= g.n()
        && ind.sets.iter().all(|&a| g.is_independent(all.difference(a)));
    Ok(UpperBound {
        alpha: ind.size,
        prop2_applies: applies,
    })
}
