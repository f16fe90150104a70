//! Isomorphism-free enumeration of small graphs.
//!
//! Every graph on `n` vertices is obtained from a graph on `n - 1` vertices by
//! adding a vertex with some neighborhood, so extending one representative of
//! each class on `n - 1` vertices by all `2^(n-1)` neighborhoods and
//! deduplicating by canonical form reaches every class on `n` vertices.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use super::{Graph, VertexSet};
use crate::{Error, Result};

pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Number of bits in the upper triangle of an `n`-vertex adjacency matrix.
fn triangle_bits(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Canonical code: the minimum, over relabelings that list vertices in
/// nondecreasing degree order, of the upper-triangle bit string read column by
/// column (the graph6 order), most significant bit first.
pub(crate) fn canonical_code(adj: &[u64]) -> u64 {
    let n = adj.len();
    assert!(n <= 11, "canonical codes are limited to 11 vertices");
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| adj[v].count_ones());
    let degree_at: Vec<u32> = by_degree.iter().map(|&v| adj[v].count_ones()).collect();

    struct Search<'a> {
        adj: &'a [u64],
        degree_at: &'a [u32],
        total: usize,
        order: Vec<usize>,
        best: u64,
    }

    impl Search<'_> {
        fn place(&mut self, used: u64, code: u64) {
            let t = self.order.len();
            let n = self.adj.len();
            if t == n {
                self.best = self.best.min(code);
                return;
            }
            let want = self.degree_at[t];
            for v in 0..n {
                if used >> v & 1 == 1 || self.adj[v].count_ones() != want {
                    continue;
                }
                let mut next = code;
                for &u in &self.order {
                    next = next << 1 | (self.adj[v] >> u & 1);
                }
                let done = triangle_bits(t + 1);
                if self.best != u64::MAX && next > self.best >> (self.total - done) {
                    continue;
                }
                self.order.push(v);
                self.place(used | 1 << v, next);
                self.order.pop();
            }
        }
    }

    let mut search = Search {
        adj,
        degree_at: &degree_at,
        total: triangle_bits(n),
        order: Vec::with_capacity(n),
        best: u64::MAX,
    };
    search.place(0, 0);
    search.best
}

/// Isomorphism invariant that separates classes; defined for up to 11
/// vertices.
pub fn canonical_form(g: &Graph) -> u64 {
    canonical_code(g.rows())
}

fn decode(n: usize, code: u64) -> Graph {
    let mut g = Graph::edgeless(n).expect("small order");
    let mut k = triangle_bits(n);
    for j in 1..n {
        for i in 0..j {
            k -= 1;
            if code >> k & 1 == 1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

fn levels() -> &'static [Vec<u64>] {
    static LEVELS: OnceLock<Vec<Vec<u64>>> = OnceLock::new();
    LEVELS.get_or_init(|| {
        // levels[n] holds sorted canonical codes of all n-vertex graphs
        let mut levels: Vec<Vec<u64>> = vec![vec![], vec![0]];
        for n in 2..=MAX_ENUMERATION_ORDER {
            let mut seen = BTreeSet::new();
            for &code in &levels[n - 1] {
                let base = decode(n - 1, code);
                for nbhd in 0..(1u64 << (n - 1)) {
                    let mut rows = base.rows().to_vec();
                    rows.push(nbhd);
                    for u in VertexSet(nbhd) {
                        rows[u] |= 1 << (n - 1);
                    }
                    seen.insert(canonical_code(&rows));
                }
            }
            levels.push(seen.into_iter().collect());
        }
        levels
    })
}

fn check_range(n: usize) -> Result<()> {
    if (1..=MAX_ENUMERATION_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::EnumerationRange(n))
    }
}

/// One representative of every isomorphism class of `n`-vertex graphs, in
/// canonical labeling, ordered by canonical code.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>> {
    check_range(n)?;
    Ok(levels()[n].iter().map(|&c| decode(n, c)).collect())
}

/// One representative of every isomorphism class of connected `n`-vertex
/// graphs.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_range(n)?;
    Ok(levels()[n]
        .iter()
        .map(move |&c| decode(n, c))
        .filter(Graph::is_connected))
}
