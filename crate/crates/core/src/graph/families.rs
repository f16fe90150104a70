//! Named graph families with canonical vertex numbering.
//!
//! The plain constructors panic when the requested order exceeds
//! [`Graph::MAX_ORDER`]; [`make_named`] validates its arguments and reports
//! errors instead.

use super::{cartesian, Graph};
use crate::{Error, Result};

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("family construction produced an invalid graph")
}

/// `K̄_n`.
pub fn edgeless(n: usize) -> Graph {
    Graph::edgeless(n).expect("order within range")
}

/// `K_n`.
pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `P_n`, numbered along the path.
pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|v| (v - 1, v)))
}

/// `C_n` for `n >= 3`, numbered along the cycle.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    build(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// `K_{1,leaves}` with the center at vertex 0.
pub fn star(leaves: usize) -> Graph {
    build(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// `Q_d`: vertices are bit strings, adjacent when they differ in one bit.
pub fn hypercube(d: usize) -> Graph {
    let n = 1usize << d;
    build(
        n,
        (0..n).flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b))).filter(|&(u, v)| u < v)),
    )
}

/// Triangle `0,1,2` with a pendant vertex 3 attached to 0.
pub fn paw() -> Graph {
    build(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
}

/// `K_4` minus the edge `{2, 3}`.
pub fn k4_minus_e() -> Graph {
    build(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i+5`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    build(10, outer.chain(inner).chain(spokes))
}

pub fn tetrahedron() -> Graph {
    complete(4)
}

pub fn cube() -> Graph {
    hypercube(3)
}

/// `K_{2,2,2}`: vertex `i` misses only `i ^ 1`.
pub fn octahedron() -> Graph {
    build(
        6,
        (0..6).flat_map(|u| (u + 1..6).filter(move |&v| v != (u ^ 1)).map(move |v| (u, v))),
    )
}

/// Apex 0, upper ring `1..6`, lower ring `6..11`, apex 11.
pub fn icosahedron() -> Graph {
    let mut edges = Vec::with_capacity(30);
    for i in 0..5 {
        let up = 1 + i;
        let up_next = 1 + (i + 1) % 5;
        let low = 6 + i;
        let low_next = 6 + (i + 1) % 5;
        edges.extend([(0, up), (up, up_next), (low, low_next), (low, 11)]);
        edges.extend([(up, low), (up, low_next)]);
    }
    build(12, edges)
}

/// The generalized Petersen graph `GP(10, 2)`.
pub fn dodecahedron() -> Graph {
    let outer = (0..10).map(|i| (i, (i + 1) % 10));
    let inner = (0..10).map(|i| (10 + i, 10 + (i + 2) % 10));
    let spokes = (0..10).map(|i| (i, 10 + i));
    build(20, outer.chain(inner).chain(spokes))
}

/// `G □ H` without the layout.
pub fn product(g: &Graph, h: &Graph) -> Graph {
    cartesian(g, h).expect("product order within range").0
}

/// Family names accepted by [`make_named`].
pub const FAMILIES: &[&str] = &[
    "complete",
    "path",
    "cycle",
    "star",
    "complete_bipartite",
    "hypercube",
    "paw",
    "k4_minus_e",
    "petersen",
    "empty",
    "tetrahedron",
    "cube",
    "octahedron",
    "icosahedron",
    "dodecahedron",
];

/// Builds a member of a named family.
///
/// `star` takes the number of leaves, `complete_bipartite` the two part
/// sizes, `hypercube` the dimension; the remaining sized families take the
/// vertex count.
pub fn make_named(family: &str, params: &[usize]) -> Result<Graph> {
    let bad = |reason: &str| Error::InvalidParams {
        family: family.to_string(),
        reason: reason.to_string(),
    };
    let one = |min: usize| -> Result<usize> {
        match params {
            [k] if *k >= min => Ok(*k),
            [_] => Err(bad(&format!("size must be at least {min}"))),
            _ => Err(bad("expected exactly one parameter")),
        }
    };
    let none = || -> Result<()> {
        if params.is_empty() {
            Ok(())
        } else {
            Err(bad("takes no parameters"))
        }
    };
    let check_order = |n: usize| -> Result<()> {
        if n > Graph::MAX_ORDER {
            Err(Error::TooManyVertices(n))
        } else {
            Ok(())
        }
    };

    match family {
        "complete" | "path" | "empty" => {
            let n = one(1)?;
            check_order(n)?;
            Ok(match family {
                "complete" => complete(n),
                "path" => path(n),
                _ => edgeless(n),
            })
        }
        "cycle" => {
            let n = one(3)?;
            check_order(n)?;
            Ok(cycle(n))
        }
        "star" => {
            let k = one(1)?;
            check_order(k + 1)?;
            Ok(star(k))
        }
        "complete_bipartite" => match params {
            [a, b] if *a >= 1 && *b >= 1 => {
                check_order(a + b)?;
                Ok(complete_bipartite(*a, *b))
            }
            [_, _] => Err(bad("part sizes must be positive")),
            _ => Err(bad("expected two parameters")),
        },
        "hypercube" => {
            let d = one(1)?;
            if d > 6 {
                return Err(Error::TooManyVertices(1usize.checked_shl(d as u32).unwrap_or(usize::MAX)));
            }
            Ok(hypercube(d))
        }
        "paw" => none().map(|_| paw()),
        "k4_minus_e" => none().map(|_| k4_minus_e()),
        "petersen" => none().map(|_| petersen()),
        "tetrahedron" => none().map(|_| tetrahedron()),
        "cube" => none().map(|_| cube()),
        "octahedron" => none().map(|_| octahedron()),
        "icosahedron" => none().map(|_| icosahedron()),
        "dodecahedron" => none().map(|_| dodecahedron()),
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}
