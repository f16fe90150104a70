//! Simple undirected graphs on at most 64 vertices, stored as adjacency
//! bitsets.

pub mod enumerate;
pub mod families;
pub mod graph6;
pub mod invariants;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

pub use enumerate::{enumerate_all, enumerate_connected};
pub use families::make_named;
pub use graph6::{parse_graph6, write_graph6};
pub use invariants::{
    chromatic_number, independence_number, structure_checks, Independence, StructureReport,
};

/// A set of vertex ids, one bit per vertex.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = vs.iter().find(|&&v| v >= 64) {
            return Err(serde::de::Error::custom(format!("vertex {bad} out of range")));
        }
        Ok(vs.into_iter().collect())
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// An immutable simple graph on vertices `0..n`.
///
/// Equality is labeled equality: two graphs are equal only when they have the
/// same vertex count and the same edge set under the identity labeling.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub const MAX_ORDER: usize = 64;

    /// The edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Result<Self> {
        if n > Self::MAX_ORDER {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::edgeless(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidParams {
                    family: "edge list".into(),
                    reason: format!("loop at vertex {u}"),
                });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating symmetry and
    /// loop-freeness.
    pub fn from_adjacency(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > Self::MAX_ORDER {
            return Err(Error::TooManyVertices(n));
        }
        let g = Graph { n, adj: rows };
        for v in 0..n {
            let row = g.adj[v];
            if row & !low_mask(n) != 0 || row >> v & 1 == 1 {
                return Err(Error::InvalidParams {
                    family: "adjacency".into(),
                    reason: format!("row {v} has a loop or out-of-range bit"),
                });
            }
            for u in VertexSet(row) {
                if g.adj[u] >> v & 1 == 0 {
                    return Err(Error::InvalidParams {
                        family: "adjacency".into(),
                        reason: format!("edge {v}-{u} is not symmetric"),
                    });
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighborhood of `v`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood `N[v] = N(v) + v`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| {
                VertexSet(self.adj[u] & !low_mask(u + 1)).iter().map(move |v| (u, v))
            })
            .collect()
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.0 == 0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        self.component_of(0).len() == self.n
    }

    /// Vertices reachable from `v`.
    pub fn component_of(&self, v: usize) -> VertexSet {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in VertexSet(frontier) {
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        VertexSet(seen)
    }

    /// Subgraph induced by `keep`, relabeled to `0..keep.len()` in ascending
    /// order of the original ids.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let ids: Vec<usize> = keep.to_vec();
        let mut g = Graph::edgeless(ids.len()).expect("subgraph is smaller");
        for (i, &u) in ids.iter().enumerate() {
            for (j, &v) in ids.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph6(self))
    }
}

/// Vertex numbering of a cartesian product `G □ H`: the pair `(v, w)` is
/// vertex `v * |V(H)| + w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductLayout {
    pub gn: usize,
    pub hn: usize,
}

impl ProductLayout {
    pub fn encode(&self, v: usize, w: usize) -> usize {
        debug_assert!(v < self.gn && w < self.hn);
        v * self.hn + w
    }

    pub fn decode(&self, x: usize) -> (usize, usize) {
        (x / self.hn, x % self.hn)
    }

    /// `H(v)`: the copy of the second factor lying over `v`.
    pub fn h_copy(&self, v: usize) -> VertexSet {
        VertexSet(low_mask(self.hn) << (v * self.hn))
    }

    /// `G(w)`: the copy of the first factor lying over `w`.
    pub fn g_copy(&self, w: usize) -> VertexSet {
        (0..self.gn).map(|v| self.encode(v, w)).collect()
    }

    /// Lifts a vertex set of the second factor into `H(v)`.
    pub fn lift_h(&self, v: usize, s: VertexSet) -> VertexSet {
        VertexSet(s.0 << (v * self.hn))
    }

    /// Lifts a vertex set of the first factor into `G(w)`.
    pub fn lift_g(&self, w: usize, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.encode(v, w)).collect()
    }

    /// The product set `a × b`.
    pub fn product_set(&self, a: VertexSet, b: VertexSet) -> VertexSet {
        a.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.lift_h(v, b)))
    }
}

/// `G ∨ H`: disjoint union plus every edge between the two sides. Vertices of
/// `h` are shifted by `g.n()`.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g.n + h.n;
    let mut out = Graph::edgeless(n)?;
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.add_edge(g.n + u, g.n + v);
    }
    for u in 0..g.n {
        for v in 0..h.n {
            out.add_edge(u, g.n + v);
        }
    }
    Ok(out)
}

/// `G □ H`: `(v, w) ~ (v', w')` iff the pairs agree in one coordinate and are
/// adjacent in the other.
pub fn cartesian(g: &Graph, h: &Graph) -> Result<(Graph, ProductLayout)> {
    let layout = ProductLayout { gn: g.n, hn: h.n };
    let mut out = Graph::edgeless(g.n * h.n)?;
    for v in 0..g.n {
        for (a, b) in h.edges() {
            out.add_edge(layout.encode(v, a), layout.encode(v, b));
        }
    }
    for w in 0..h.n {
        for (a, b) in g.edges() {
            out.add_edge(layout.encode(a, w), layout.encode(b, w));
        }
    }
    Ok((out, layout))
}
