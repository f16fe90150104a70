//! Bipartite graphs with a Hamiltonian path: a terminal state of size
//! `ceil(n / 2) - 1`.

use super::{precondition, Claim, ClaimKind, StrategyCertificate};
use crate::engine::{Config, Jump, JumpSequence};
use crate::graph::invariants::structure_checks;
use crate::graph::{write_graph6, Graph, VertexSet};
use crate::{Limits, Result};

/// Along a Hamiltonian path `v_1 ... v_n`, holes at `v_3, v_5, ...` reduce to
/// one peg: `v_1` walks over the even-indexed pegs, and for even `n` a last
/// jump `v_n v_{n-1} v_{n-2}` clears the end.
pub fn hampath_solve(h: &Graph, limits: &Limits) -> Result<StrategyCertificate> {
    let n = h.n();
    if n < 4 {
        return precondition("need at least four vertices");
    }
    let report = structure_checks(h, limits);
    if !report.connected {
        return precondition("graph is disconnected");
    }
    if report.bipartition.is_none() {
        return precondition("graph is not bipartite");
    }
    let Some(walk) = report.ham_path? else {
        return precondition("graph has no Hamiltonian path");
    };

    let holes: VertexSet = walk.iter().copied().skip(2).step_by(2).collect();
    let mut seq = JumpSequence::new();
    let mut at = 0;
    while at + 2 < n {
        seq.push(Jump::new(walk[at], walk[at + 1], walk[at + 2]));
        at += 2;
    }
    if n.is_multiple_of(2) {
        seq.push(Jump::new(walk[n - 1], walk[n - 2], walk[n - 3]));
    }

    StrategyCertificate::build(
        h.clone(),
        Claim {
            description: format!("Hamiltonian path in bipartite {}", write_graph6(h)),
            kind: ClaimKind::FoolsAtLeast { value: holes.len() },
        },
        Config::with_holes(n, holes)?,
        seq,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn sizes() {
        for (g, size) in [(path(4), 1), (path(5), 2), (cycle(6), 2), (product(&path(2), &path(3)), 2), (hypercube(3), 3)] {
            let cert = hampath_solve(&g, &Limits::default()).unwrap();
            assert_eq!(cert.claim.kind, ClaimKind::FoolsAtLeast { value: size });
            assert_eq!(size, g.n().div_ceil(2) - 1);
        }
    }

    #[test]
    fn p4_plays_as_described() {
        let cert = hampath_solve(&path(4), &Limits::default()).unwrap();
        assert_eq!(cert.sequence.len(), 2);
        assert_eq!(cert.start.holes().len(), 1);
    }

    #[test]
    fn refusals() {
        assert!(hampath_solve(&cycle(5), &Limits::default()).is_err());
        assert!(hampath_solve(&path(3), &Limits::default()).is_err());
        assert!(hampath_solve(&star(3), &Limits::default()).is_err());
    }
}
