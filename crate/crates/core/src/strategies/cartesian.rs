//! `G □ K_k` for `k >= 3`: holes at a maximum independent set reduce to one
//! peg.
//!
//! Phase 1 spreads the holes until every copy `K(v)` has exactly one. Phase 2
//! peels leaves off a breadth-first spanning tree, deepest first, moving each
//! leaf's pegs into its parent copy.

use std::collections::VecDeque;

use super::{kk_solve_with_target, p2k3_clear, p2k3_vertex, precondition, Claim, ClaimKind, StrategyCertificate};
use crate::engine::{Config, Jump, JumpSequence};
use crate::graph::families::complete;
use crate::graph::invariants::independence_size;
use crate::graph::{cartesian, write_graph6, Graph, ProductLayout, VertexSet};
use crate::{Error, Limits, Result};

struct Play {
    graph: Graph,
    layout: ProductLayout,
    pegs: VertexSet,
    seq: JumpSequence,
}

impl Play {
    fn jump(&mut self, j: Jump) {
        debug_assert!(self.pegs.contains(j.x) && self.pegs.contains(j.y) && !self.pegs.contains(j.z));
        debug_assert!(self.graph.has_edge(j.x, j.y) && self.graph.has_edge(j.y, j.z));
        self.pegs.remove(j.x);
        self.pegs.remove(j.y);
        self.pegs.insert(j.z);
        self.seq.push(j);
    }

    fn play(&mut self, seq: &JumpSequence) {
        for &j in seq {
            self.jump(j);
        }
    }

    /// Replays a sequence on `K_k` inside the copy `K(v)`.
    fn play_in_copy(&mut self, v: usize, seq: &JumpSequence) {
        let layout = self.layout;
        self.play(&seq.map(|i| layout.encode(v, i)));
    }

    fn copy_pegs(&self, v: usize) -> Vec<usize> {
        (0..self.layout.hn).filter(|&i| self.pegs.contains(self.layout.encode(v, i))).collect()
    }
}

/// A K_3 copy whose last peg is still open: each entry is a peg index on
/// the copy and the jumps that put it there.
type Pending = Vec<(usize, JumpSequence)>;

/// Certificate that holes at `s` in `g □ K_k` reduce to a single peg.
///
/// Vertex `(v, i)` of the product is `v * k + i`, as in
/// `cartesian(g, complete(k))`.
pub fn cartesian_kk_solve(g: &Graph, k: usize, s: VertexSet, limits: &Limits) -> Result<StrategyCertificate> {
    if k < 3 {
        return precondition("the construction needs k >= 3");
    }
    if !g.is_connected() {
        return precondition("G must be connected");
    }
    let (graph, layout) = cartesian(g, &complete(k))?;
    if !s.is_subset(graph.vertices()) || !graph.is_independent(s) {
        return precondition("s is not an independent set of the product");
    }
    let alpha = independence_size(&graph, limits)?;
    if s.len() != alpha {
        return precondition(format!("s has {} vertices but α(G □ K_{k}) = {alpha}", s.len()));
    }
    let description = format!("cartesian product of {} and K_{k}", write_graph6(g));
    let start = Config::with_holes(graph.n(), s)?;
    let mut play = Play {
        pegs: start.pegs(),
        graph,
        layout,
        seq: JumpSequence::new(),
    };

    let hole = phase_one(g, &mut play, s)?;
    let (order, parent) = bfs_tree(g);
    if k == 3 {
        phase_two_triangles(&mut play, &order, &parent)?;
    } else {
        phase_two(&mut play, k, hole, &order, &parent)?;
    }

    let Play { graph, seq, .. } = play;
    StrategyCertificate::build(
        graph,
        Claim {
            description,
            kind: ClaimKind::FoolsAtLeast { value: s.len() },
        },
        start,
        seq,
    )
}

/// Spreads holes until each copy has exactly one; returns the hole index of
/// every copy.
fn phase_one(g: &Graph, play: &mut Play, s: VertexSet) -> Result<Vec<usize>> {
    let layout = play.layout;
    let mut hole: Vec<Option<usize>> = vec![None; g.n()];
    for x in s {
        let (v, i) = layout.decode(x);
        hole[v] = Some(i);
    }
    let mut queue: VecDeque<usize> = (0..g.n()).filter(|&v| hole[v].is_some()).collect();
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u) {
            if hole[v].is_some() {
                continue;
            }
            let i = hole[u].unwrap();
            let j = usize::from(i == 0);
            play.jump(Jump::new(layout.encode(v, j), layout.encode(u, j), layout.encode(u, i)));
            hole[u] = Some(j);
            hole[v] = Some(j);
            queue.push_back(v);
        }
    }
    hole.into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Strategy("a copy of K_k received no hole".into()))
}

/// Breadth-first order from vertex 0 and the parent of each vertex.
fn bfs_tree(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut parent = vec![usize::MAX; g.n()];
    let mut order = vec![0];
    parent[0] = 0;
    let mut next = 0;
    while next < order.len() {
        let u = order[next];
        next += 1;
        for v in g.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                order.push(v);
            }
        }
    }
    (order, parent)
}

/// `k >= 4`: each leaf copy is solved so its last peg can jump into the
/// parent's hole.
fn phase_two(play: &mut Play, k: usize, mut hole: Vec<usize>, order: &[usize], parent: &[usize]) -> Result<()> {
    let layout = play.layout;
    for &v in order[1..].iter().rev() {
        let u = parent[v];
        let i = hole[u];
        let j = (0..k)
            .find(|&j| j != i && (k != 4 || j != hole[v]))
            .expect("k >= 4 leaves a free index");
        play.play_in_copy(v, &kk_solve_with_target(k, hole[v], j)?);
        play.jump(Jump::new(layout.encode(v, j), layout.encode(u, j), layout.encode(u, i)));
        hole[u] = j;
    }
    let root = order[0];
    let target = if k == 4 { (hole[root] + 1) % k } else { hole[root] };
    play.play_in_copy(root, &kk_solve_with_target(k, hole[root], target)?);
    Ok(())
}

/// `k = 3`: leaves are cleared into their parents with [`p2k3_clear`]. When
/// a clearing leaves one peg, its two possible final jumps stay pending until
/// a later clearing needs a particular location.
fn phase_two_triangles(play: &mut Play, order: &[usize], parent: &[usize]) -> Result<()> {
    let layout = play.layout;
    let mut pending: Vec<Option<Pending>> = vec![None; parent.len()];
    let commit = |play: &mut Play, choice: Pending, index: usize| -> Result<()> {
        let (_, seq) = choice
            .into_iter()
            .find(|(i, _)| *i == index)
            .ok_or_else(|| Error::Strategy("pending choice lacks the requested index".into()))?;
        play.play(&seq);
        Ok(())
    };

    for &v in order[1..].iter().rev() {
        let u = parent[v];
        match (pending[v].take(), pending[u].take()) {
            (Some(pv), Some(pu)) => {
                // two 2-subsets of three indices always meet
                let common = pv
                    .iter()
                    .map(|(i, _)| *i)
                    .find(|i| pu.iter().any(|(j, _)| j == i))
                    .ok_or_else(|| Error::Strategy("pending choices share no index".into()))?;
                commit(play, pv, common)?;
                commit(play, pu, common)?;
            }
            (Some(pv), None) => {
                let i = pv[0].0;
                commit(play, pv, i)?;
            }
            (None, Some(pu)) => {
                let i = pu[0].0;
                commit(play, pu, i)?;
            }
            (None, None) => {}
        }

        let local: VertexSet = play
            .copy_pegs(v)
            .into_iter()
            .map(|i| p2k3_vertex(0, i))
            .chain(play.copy_pegs(u).into_iter().map(|i| p2k3_vertex(1, i)))
            .collect();
        let (prefix, choice) = p2k3_clear(&Config::new(6, local)?, 0).map_err(|e| Error::Strategy(e.to_string()))?;
        let lift = |x: usize| {
            let (side, i) = (x / 3, x % 3);
            layout.encode(if side == 0 { v } else { u }, i)
        };
        play.play(&prefix.map(lift));
        if let [only] = choice.alternatives.as_slice() {
            play.play(&only.suffix.map(lift));
        } else {
            pending[u] = Some(
                choice
                    .alternatives
                    .iter()
                    .map(|alt| (alt.kept_pegs.first().unwrap() % 3, alt.suffix.map(lift)))
                    .collect(),
            );
        }
    }

    let root = order[0];
    if let Some(p) = pending[root].take() {
        let i = p[0].0;
        commit(play, p, i)?;
    }
    let pegs = play.copy_pegs(root);
    if let [x, y] = pegs[..] {
        let z = 3 - x - y;
        play.jump(Jump::new(layout.encode(root, x), layout.encode(root, y), layout.encode(root, z)));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::invariants::independence_number;

    fn max_set(g: &Graph, k: usize) -> VertexSet {
        let (p, _) = cartesian(g, &complete(k)).unwrap();
        independence_number(&p, &Limits::default()).unwrap().sets[0]
    }

    #[test]
    fn small_products() {
        for (g, k) in [(path(2), 3), (path(3), 3), (cycle(5), 4), (cycle(5), 3), (complete(1), 3), (star(3), 5)] {
            let s = max_set(&g, k);
            let cert = cartesian_kk_solve(&g, k, s, &Limits::default()).unwrap();
            cert.check().unwrap();
            assert_eq!(cert.claim.kind, ClaimKind::FoolsAtLeast { value: s.len() });
        }
    }

    #[test]
    fn refuses_small_k_and_bad_sets() {
        let g = path(3);
        assert!(cartesian_kk_solve(&g, 2, VertexSet(0b1), &Limits::default()).is_err());
        assert!(cartesian_kk_solve(&g, 3, VertexSet(0b1), &Limits::default()).is_err());
        assert!(cartesian_kk_solve(&edgeless(2), 3, VertexSet(0b1), &Limits::default()).is_err());
    }
}
