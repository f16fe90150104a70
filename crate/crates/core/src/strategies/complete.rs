//! Final-peg control on complete graphs and the two-triangle clearing move
//! used for `G □ K_3`.

use serde::Serialize;

use crate::engine::{Config, Jump, JumpSequence};
use crate::graph::VertexSet;
use crate::{Error, Result};

/// Plays `K_k` from a single hole at `hole` down to one peg at `target`.
///
/// `k = 3` forces `target == hole`; `k = 4` forbids it; larger `k` allows any
/// target.
pub fn kk_solve_with_target(k: usize, hole: usize, target: usize) -> Result<JumpSequence> {
    if k < 3 {
        return Err(Error::Precondition(format!("K_{k} is too small; need k >= 3")));
    }
    if hole >= k || target >= k {
        return Err(Error::VertexOutOfRange {
            vertex: hole.max(target),
            n: k,
        });
    }
    let others = |skip: &[usize]| (0..k).filter(|v| !skip.contains(v)).collect::<Vec<_>>().into_iter();
    let mut seq = JumpSequence::new();
    match k {
        3 => {
            if target != hole {
                return Err(Error::Precondition(
                    "on K_3 the last peg always lands in the starting hole".into(),
                ));
            }
            let mut rest = others(&[hole]);
            let (x, y) = (rest.next().unwrap(), rest.next().unwrap());
            seq.push(Jump::new(x, y, hole));
        }
        4 => {
            if target == hole {
                return Err(Error::Precondition(
                    "on K_4 the last peg cannot end at the starting hole".into(),
                ));
            }
            // remove the peg at the target first, then land on it
            let mut rest = others(&[hole, target]);
            let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
            seq.push(Jump::new(a, target, hole));
            seq.push(Jump::new(b, hole, target));
        }
        _ => {
            let mut pegs = VertexSet::full(k).difference(VertexSet::singleton(hole));
            let mut play = |j: Jump, pegs: &mut VertexSet| {
                pegs.remove(j.x);
                pegs.remove(j.y);
                pegs.insert(j.z);
                seq.push(j);
            };
            if target == hole {
                let mut rest = others(&[hole]);
                let (a, b, c) = (rest.next().unwrap(), rest.next().unwrap(), rest.next().unwrap());
                play(Jump::new(a, b, target), &mut pegs);
                play(Jump::new(c, target, a), &mut pegs);
            } else {
                let b = others(&[hole, target]).next().unwrap();
                play(Jump::new(target, b, hole), &mut pegs);
            }
            // the target is now empty; shrink the rest to two pegs, then land
            let rest = VertexSet::full(k).difference(VertexSet::singleton(target));
            while pegs.len() > 2 {
                let mut it = pegs.iter();
                let (x, y) = (it.next().unwrap(), it.next().unwrap());
                let z = rest.difference(pegs).first().expect("a hole off the target");
                play(Jump::new(x, y, z), &mut pegs);
            }
            let mut it = pegs.iter();
            let (x, y) = (it.next().unwrap(), it.next().unwrap());
            play(Jump::new(x, y, target), &mut pegs);
        }
    }
    Ok(seq)
}

/// One way to finish a clearing move, with the pegs it leaves on the kept
/// triangle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Alternative {
    pub suffix: JumpSequence,
    pub kept_pegs: VertexSet,
}

/// The outcomes of [`p2k3_clear`] that are still open: a single alternative
/// when two pegs remain, two alternatives with distinct final pegs when one
/// peg remains.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChoiceSet {
    pub alternatives: Vec<Alternative>,
}

impl ChoiceSet {
    fn fixed(kept_pegs: VertexSet) -> Self {
        ChoiceSet {
            alternatives: vec![Alternative {
                suffix: JumpSequence::new(),
                kept_pegs,
            }],
        }
    }

    /// Possible locations of the last peg on the kept triangle when only
    /// one peg remains; empty when two remain.
    pub fn candidates(&self) -> Vec<usize> {
        self.alternatives
            .iter()
            .filter(|a| a.kept_pegs.len() == 1)
            .filter_map(|a| a.kept_pegs.first())
            .collect()
    }
}

/// Vertex `(side, i)` of `P_2 □ K_3`, numbered as in
/// `cartesian(path(2), complete(3))`.
pub fn p2k3_vertex(side: usize, i: usize) -> usize {
    3 * side + i
}

/// Empties the triangle `clear_side` of `P_2 □ K_3`, leaving one or two pegs
/// on the other triangle.
///
/// Returns the jumps shared by every outcome and the outcomes themselves.
pub fn p2k3_clear(state: &Config, clear_side: usize) -> Result<(JumpSequence, ChoiceSet)> {
    if state.n() != 6 || clear_side > 1 {
        return Err(Error::Precondition(
            "expected a configuration on P_2 □ K_3 and a side of 0 or 1".into(),
        ));
    }
    let keep_side = 1 - clear_side;
    let side_pegs = |side: usize| -> Vec<usize> { (0..3).filter(|&i| state.has_peg(p2k3_vertex(side, i))).collect() };
    let t1 = side_pegs(clear_side);
    let t2 = side_pegs(keep_side);
    for t in [&t1, &t2] {
        if t.is_empty() || t.len() == 3 {
            return Err(Error::Precondition(
                "each triangle needs at least one peg and one hole".into(),
            ));
        }
    }
    if t1.len() == 1 && t2.len() == 1 && t1[0] != t2[0] {
        return Err(Error::Precondition("the pegs form an independent set".into()));
    }

    let c = |i: usize| p2k3_vertex(clear_side, i);
    let k = |i: usize| p2k3_vertex(keep_side, i);
    let missing = |t: &[usize]| (0..3).find(|i| !t.contains(i)).unwrap();
    let set = |ids: &[usize]| ids.iter().map(|&i| k(i)).collect::<VertexSet>();
    let mut prefix = JumpSequence::new();

    if t1.len() == 2 {
        let mut holes2: Vec<usize> = (0..3).filter(|i| !t2.contains(i)).collect();
        let mut kept = t2.clone();
        if t2.len() == 2 {
            // one jump inside the kept triangle frees two of its vertices
            let h = missing(&t2);
            let (x, y) = (t2[0], t2[1]);
            prefix.push(Jump::new(k(x), k(y), k(h)));
            holes2 = vec![x, y];
            kept = vec![h];
        }
        // some index pegged on the cleared side is empty on the kept side
        let b = *t1.iter().find(|i| holes2.contains(i)).expect("two holes meet two pegs");
        let a = *t1.iter().find(|&&i| i != b).unwrap();
        prefix.push(Jump::new(c(a), c(b), k(b)));
        kept.push(b);
        return Ok((prefix, ChoiceSet::fixed(set(&kept))));
    }

    let a = t1[0];
    if t2.len() == 2 && t2.contains(&a) {
        let h = missing(&t2);
        let other = *t2.iter().find(|&&i| i != a).unwrap();
        prefix.push(Jump::new(c(a), k(a), k(h)));
        return Ok((prefix, ChoiceSet::fixed(set(&[other, h]))));
    }
    if t2.len() == 2 {
        // the kept peg opposite the cleared peg is missing; move one there
        let (x, y) = (t2[0], t2[1]);
        prefix.push(Jump::new(k(x), k(y), k(a)));
    }
    let alternatives = (0..3)
        .filter(|&i| i != a)
        .map(|i| Alternative {
            suffix: JumpSequence(vec![Jump::new(c(a), k(a), k(i))]),
            kept_pegs: set(&[i]),
        })
        .collect();
    Ok((prefix, ChoiceSet { alternatives }))
}
