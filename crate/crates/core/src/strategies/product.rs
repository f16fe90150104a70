//! Cartesian products `G □ H` of a freely solvable `G` and a freely
//! neighborhood-solvable `H`: holes at `S_G × S_H` reduce to one peg.

use super::{precondition, Claim, ClaimKind, StrategyCertificate};
use crate::engine::{fools_number, solvability_profile, Config, Jump, JumpSequence, Solver};
use crate::graph::{cartesian, write_graph6, Graph, ProductLayout, VertexSet};
use crate::{Error, Limits, Result};

/// Where the solution of `H` from a hole at `w` leaves its last peg.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Finish {
    /// At `w` when possible, otherwise at a neighbor.
    PreferCenter,
    /// At a neighbor of `w` when possible, otherwise at `w`.
    PreferNeighbor,
}

/// Certificate of a terminal state of size `|s_g| · |s_h|` in `g □ h`, where
/// `s_g` and `s_h` are maximum terminal states of the factors.
pub fn product_compose(
    g: &Graph,
    h: &Graph,
    s_g: VertexSet,
    s_h: VertexSet,
    limits: &Limits,
) -> Result<StrategyCertificate> {
    product_compose_with(g, h, s_g, s_h, limits, Finish::PreferCenter)
}

fn check_factor(f: &Graph, s: VertexSet, limits: &Limits, name: &str) -> Result<()> {
    if f.n() < 2 {
        return precondition(format!("{name} needs at least two vertices"));
    }
    if !s.is_subset(f.vertices()) || !f.is_independent(s) {
        return precondition(format!("S_{name} is not an independent set"));
    }
    let best = fools_number(f, limits)?.f_value;
    if s.len() != best {
        return precondition(format!("S_{name} has {} vertices but F({name}) = {best}", s.len()));
    }
    Ok(())
}

fn solve_or(solver: &mut Solver<'_>, start: &Config, targets: VertexSet, what: &str) -> Result<JumpSequence> {
    solver
        .reduce_into(start, targets)
        .ok_or_else(|| Error::Precondition(format!("{what} cannot be reduced to one peg")))
}

/// [`product_compose`] with a choice of where the solution of `H` ends.
pub fn product_compose_with(
    g: &Graph,
    h: &Graph,
    s_g: VertexSet,
    s_h: VertexSet,
    limits: &Limits,
    finish: Finish,
) -> Result<StrategyCertificate> {
    check_factor(g, s_g, limits, "G")?;
    check_factor(h, s_h, limits, "H")?;
    if !solvability_profile(g, limits)?.freely_solvable {
        return precondition("G is not freely solvable");
    }
    if !solvability_profile(h, limits)?.freely_nbhd_solvable {
        return precondition("H is not freely neighborhood-solvable");
    }
    let (graph, layout) = cartesian(g, h)?;
    let ProductLayout { gn, hn } = layout;
    let mut sg = Solver::new(g, limits)?;
    let mut sh = Solver::new(h, limits)?;
    let all_g = g.vertices();
    let all_h = h.vertices();

    let start = Config::with_holes(graph.n(), layout.product_set(s_g, s_h))?;
    let mut seq = JumpSequence::new();
    let in_g = |w: usize, s: &JumpSequence| s.map(|a| layout.encode(a, w));
    let in_h = |v: usize, s: &JumpSequence| s.map(|b| layout.encode(v, b));
    let cross = |a: (usize, usize), b: (usize, usize), c: (usize, usize)| {
        Jump::new(layout.encode(a.0, a.1), layout.encode(b.0, b.1), layout.encode(c.0, c.1))
    };

    // every G(x) with x in S_H plays the same game, ending at v
    let g_start = Config::with_holes(gn, s_g)?;
    let g_seq = solve_or(&mut sg, &g_start, all_g, "holes at S_G")?;
    let v = g_seq.replay(g, &g_start)?.pegs().first().unwrap();
    for x in s_h {
        seq.extend(&in_g(x, &g_seq));
    }
    // every other copy of H plays the same game, ending at w
    let h_start = Config::with_holes(hn, s_h)?;
    let h_seq = solve_or(&mut sh, &h_start, all_h, "holes at S_H")?;
    let w = h_seq.replay(h, &h_start)?.pegs().first().unwrap();
    for u in (0..gn).filter(|&u| u != v) {
        seq.extend(&in_h(u, &h_seq));
    }

    // pegs now cover H(v) and G(w)
    let hole_w = Config::single_hole(hn, w)?;
    let reach = sh.finals(hole_w.pegs());
    let center_ok = reach.contains(w);
    let near = reach.intersection(h.neighbors(w)).first();
    let v2 = g.neighbors(v).first().ok_or_else(|| Error::Precondition("G has an isolated vertex".into()))?;
    let use_center = match (finish, near) {
        (_, None) => true,
        (Finish::PreferCenter, Some(_)) => center_ok,
        (Finish::PreferNeighbor, Some(_)) => false,
    };
    if use_center {
        if !center_ok {
            return precondition("H cannot be solved into N[w]");
        }
        let w2 = h.neighbors(w).first().ok_or_else(|| Error::Precondition("H has an isolated vertex".into()))?;
        seq.push(cross((v, w), (v, w2), (v2, w2)));
        seq.push(cross((v2, w), (v2, w2), (v, w2)));
        seq.extend(&in_h(v, &solve_or(&mut sh, &hole_w, VertexSet::singleton(w), "H from w")?));
    } else {
        let w2 = near.unwrap();
        seq.push(cross((v, w), (v2, w), (v2, w2)));
        seq.extend(&in_h(v, &solve_or(&mut sh, &hole_w, VertexSet::singleton(w2), "H from w")?));
        seq.push(cross((v2, w2), (v, w2), (v, w)));
    }
    // G(w) is full except at v'
    let last = Config::single_hole(gn, v2)?;
    seq.extend(&in_g(w, &solve_or(&mut sg, &last, all_g, "G from a single hole")?));

    StrategyCertificate::build(
        graph,
        Claim {
            description: format!("cartesian product of {} and {}", write_graph6(g), write_graph6(h)),
            kind: ClaimKind::FoolsAtLeast {
                value: s_g.len() * s_h.len(),
            },
        },
        start,
        seq,
    )
}

/// The weaker hypothesis on `G`: holes at `s_g` reduce to one peg at some
/// `v` having a neighbor `v'` from whose single hole `G` is solvable.
///
/// Experimental; [`product_compose`] checks the stronger hypothesis.
pub fn weak_factor_condition(g: &Graph, s_g: VertexSet, limits: &Limits) -> Result<bool> {
    let mut solver = Solver::new(g, limits)?;
    let ends = solver.finals(g.vertices().difference(s_g));
    for v in ends {
        for v2 in g.neighbors(v) {
            if !solver.finals(g.vertices().difference(VertexSet::singleton(v2))).is_empty() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn terminal(g: &Graph) -> VertexSet {
        fools_number(g, &Limits::default()).unwrap().terminal
    }

    #[test]
    fn both_finishes() {
        let mut differ = 0;
        for (g, h) in [(path(2), path(2)), (k4_minus_e(), k4_minus_e()), (path(2), cycle(6)), (cycle(4), cycle(4)), (path(2), complete(5))] {
            let mut seqs = Vec::new();
            for finish in [Finish::PreferCenter, Finish::PreferNeighbor] {
                let cert = product_compose_with(&g, &h, terminal(&g), terminal(&h), &Limits::default(), finish).unwrap();
                let expect = terminal(&g).len() * terminal(&h).len();
                assert_eq!(cert.claim.kind, ClaimKind::FoolsAtLeast { value: expect });
                seqs.push(cert.sequence);
            }
            differ += usize::from(seqs[0] != seqs[1]);
        }
        assert!(differ > 0);
    }

    #[test]
    fn factor_hypotheses_are_checked() {
        let lim = Limits::default();
        // the star is not freely solvable
        let s = star(3);
        assert!(product_compose(&s, &path(2), terminal(&s), terminal(&path(2)), &lim).is_err());
        // C_12 is freely solvable but not neighborhood-solvable
        let c = cycle(12);
        assert!(product_compose(&path(2), &c, terminal(&path(2)), terminal(&c), &lim).is_err());
        // a terminal state that is not maximum
        assert!(product_compose(&path(2), &cycle(6), terminal(&path(2)), VertexSet(0b1), &lim).is_err());
        assert!(product_compose(&complete(1), &path(2), VertexSet(0), VertexSet(0b1), &lim).is_err());
    }

    #[test]
    fn weak_condition() {
        let g = cycle(6);
        assert!(weak_factor_condition(&g, terminal(&g), &Limits::default()).unwrap());
        let s = star(3);
        assert!(!weak_factor_condition(&s, terminal(&s), &Limits::default()).unwrap());
    }
}
