//! Joins `G ∨ H`: reducing holes at a maximum independent set to one peg.

use super::{kk_solve_with_target, precondition, Claim, ClaimKind, StrategyCertificate};
use crate::engine::{Config, Jump, JumpSequence};
use crate::graph::invariants::independence_size;
use crate::graph::{join, write_graph6, Graph, VertexSet};
use crate::{Error, Limits, Result};

/// Peg bookkeeping shared by the join constructions.
struct Play<'a> {
    graph: &'a Graph,
    pegs: VertexSet,
    seq: JumpSequence,
}

impl Play<'_> {
    fn jump(&mut self, x: usize, y: usize, z: usize) {
        debug_assert!(self.pegs.contains(x) && self.pegs.contains(y) && !self.pegs.contains(z));
        debug_assert!(self.graph.has_edge(x, y) && self.graph.has_edge(y, z));
        self.pegs.remove(x);
        self.pegs.remove(y);
        self.pegs.insert(z);
        self.seq.push(Jump::new(x, y, z));
    }

    fn holes_in(&self, side: VertexSet) -> VertexSet {
        side.difference(self.pegs)
    }

    /// The lone peg of `side` jumps over every peg of `other`, landing back
    /// in `side` each time.
    fn sweep(&mut self, side: VertexSet, other: VertexSet) -> Result<()> {
        while let Some(q) = self.pegs.intersection(other).first() {
            let mut mine = self.pegs.intersection(side).iter();
            let (Some(p), None) = (mine.next(), mine.next()) else {
                return Err(Error::Strategy("expected exactly one peg on the sweeping side".into()));
            };
            let t = self.holes_in(side).first().ok_or_else(|| Error::Strategy("no hole to land in".into()))?;
            self.jump(p, q, t);
        }
        Ok(())
    }
}

/// Certificate that holes at `s` in `g ∨ h` reduce to a single peg.
///
/// Vertices of `h` are numbered after those of `g`, as in [`join`]. `s` must
/// be a maximum independent set of the join. When both sides are edgeless
/// with at least two vertices each (a complete bipartite graph, where the
/// maximum is not reachable), `s` may be a whole part of maximum size or all
/// but one vertex of it; the certificate then uses one fewer hole, dropping
/// the highest-numbered vertex of a whole part.
pub fn solve_join(g: &Graph, h: &Graph, s: VertexSet, limits: &Limits) -> Result<StrategyCertificate> {
    let joined = join(g, h)?;
    let n = joined.n();
    let side_g = VertexSet::full(g.n());
    let side_h = VertexSet::full(n).difference(side_g);
    if !s.is_subset(VertexSet::full(n)) {
        return precondition("s has vertices outside the join");
    }
    if !joined.is_independent(s) {
        return precondition("s is not independent");
    }
    let (a, b) = if !s.is_empty() && s.is_subset(side_g) {
        (side_g, side_h)
    } else if !s.is_empty() && s.is_subset(side_h) {
        (side_h, side_g)
    } else {
        return precondition("s must be a nonempty subset of one side");
    };
    let description = format!("join of {} and {}", write_graph6(g), write_graph6(h));

    let bipartite = g.n() >= 2 && h.n() >= 2 && g.edge_count() + h.edge_count() == 0;
    let holes = if bipartite {
        if a.len() < b.len() {
            return precondition("s must lie in a largest part of the complete bipartite graph");
        }
        if s.len() == a.len() {
            let mut t = s;
            t.remove(a.iter().last().expect("nonempty part"));
            t
        } else if s.len() + 1 == a.len() {
            s
        } else {
            return precondition("s must cover all but at most one vertex of its part");
        }
    } else {
        let alpha = independence_size(&joined, limits)?;
        if s.len() != alpha {
            return precondition(format!("s has {} vertices but the independence number is {alpha}", s.len()));
        }
        s
    };

    let mut play = Play {
        graph: &joined,
        pegs: VertexSet::full(n).difference(holes),
        seq: JumpSequence::new(),
    };
    if bipartite {
        play.sweep(a, b)?;
    } else if b.len() == 1 {
        dominating_vertex(&mut play, a, b.first().unwrap())?;
    } else if a.len() == 1 {
        // α = 1 forces the other side, and so the join, to be complete
        let hole = s.first().unwrap();
        let target = if n == 4 { (hole + 1) % n } else { hole };
        let seq = kk_solve_with_target(n, hole, target)?;
        play.seq = seq;
    } else if a.difference(s).is_empty() {
        let (p, q) = first_edge(&joined, b)?;
        let t = play.holes_in(a).first().unwrap();
        play.jump(p, q, t);
        play.sweep(a, b)?;
    } else {
        let p = play.pegs.intersection(a).first().unwrap();
        let q = b.first().unwrap();
        let t = play.holes_in(a).first().unwrap();
        play.jump(p, q, t);
        // move pegs of the large side across until it holds one peg
        while play.pegs.intersection(a).len() > 1 {
            let y = play.pegs.intersection(a).first().unwrap();
            let x = play.pegs.intersection(b).first().ok_or_else(|| Error::Strategy("side ran out of pegs".into()))?;
            let z = play.holes_in(b).first().unwrap();
            play.jump(x, y, z);
        }
        play.sweep(a, b)?;
    }

    let sequence = play.seq;
    StrategyCertificate::build(
        joined,
        Claim {
            description,
            kind: ClaimKind::FoolsAtLeast { value: holes.len() },
        },
        Config::with_holes(n, holes)?,
        sequence,
    )
}

/// `G ∨ K_1` with `z` the added vertex: a peg of `G` jumps `z` into a hole
/// next to another peg, which then jumps back into `z`.
fn dominating_vertex(play: &mut Play<'_>, a: VertexSet, z: usize) -> Result<()> {
    let adj = |v: usize| play.graph.neighbors(v);
    loop {
        let mine = play.pegs.intersection(a);
        match mine.len() {
            0 => return Ok(()),
            1 => {
                let c = mine.first().unwrap();
                let b = play.holes_in(a).first().ok_or_else(|| Error::Strategy("no hole beside z".into()))?;
                play.jump(c, z, b);
                return Ok(());
            }
            _ => {
                let holes = play.holes_in(a);
                let (c, b) = mine
                    .iter()
                    .find_map(|c| adj(c).intersection(holes).first().map(|b| (c, b)))
                    .ok_or_else(|| Error::Strategy("no peg of G sits next to a hole".into()))?;
                let x = mine.iter().find(|&v| v != c).unwrap();
                play.jump(x, z, b);
                play.jump(c, b, z);
            }
        }
    }
}

fn first_edge(g: &Graph, side: VertexSet) -> Result<(usize, usize)> {
    side.iter()
        .find_map(|p| g.neighbors(p).intersection(side).first().map(|q| (p, q)))
        .ok_or_else(|| Error::Strategy("expected an edge inside the side".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn star_holes_at_leaves_need_no_jumps() {
        let cert = solve_join(&edgeless(3), &complete(1), VertexSet(0b0111), &lim()).unwrap();
        assert!(cert.sequence.is_empty());
        assert_eq!(cert.end.pegs(), VertexSet::singleton(3));
    }

    #[test]
    fn path_join_edge() {
        let cert = solve_join(&path(3), &path(2), VertexSet(0b101), &lim()).unwrap();
        assert_eq!(cert.claim.kind, ClaimKind::FoolsAtLeast { value: 2 });
        cert.check().unwrap();
    }

    #[test]
    fn complete_bipartite_uses_one_fewer_hole() {
        let cert = solve_join(&edgeless(3), &edgeless(2), VertexSet(0b011), &lim()).unwrap();
        assert_eq!(cert.claim.kind, ClaimKind::FoolsAtLeast { value: 2 });
        let whole = solve_join(&edgeless(3), &edgeless(2), VertexSet(0b111), &lim()).unwrap();
        assert_eq!(whole.start.holes(), VertexSet(0b011));
        assert!(solve_join(&edgeless(3), &edgeless(2), VertexSet(0b11000), &lim()).is_err());
    }

    #[test]
    fn bad_sets_are_refused() {
        assert!(solve_join(&path(3), &path(2), VertexSet(0b011), &lim()).is_err());
        assert!(solve_join(&path(3), &path(2), VertexSet(0b001), &lim()).is_err());
        assert!(solve_join(&path(3), &path(2), VertexSet(0), &lim()).is_err());
    }

    #[test]
    fn complete_graphs_as_joins() {
        for (a, b) in [(1, 1), (1, 2), (1, 3), (2, 1), (1, 4)] {
            let cert = solve_join(&complete(a), &complete(b), VertexSet::singleton(0), &lim()).unwrap();
            cert.check().unwrap();
        }
    }
}
