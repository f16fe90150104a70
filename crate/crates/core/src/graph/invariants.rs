//! Exact structural invariants: independence number, chromatic number,
//! connectivity, bipartiteness and Hamiltonian paths.

use super::{low_mask, Graph, VertexSet};
use crate::{Error, Limits, Result};

/// Independence number together with every maximum independent set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Independence {
    pub size: usize,
    /// All independent sets of size `size`, in ascending bit order.
    pub sets: Vec<VertexSet>,
}

fn check_cap(g: &Graph, cap: usize, what: &'static str) -> Result<()> {
    if g.n() > cap {
        return Err(Error::CapExceeded { what, n: g.n(), cap });
    }
    Ok(())
}

/// Upper bound on the independence number of the subgraph induced by `cand`:
/// the number of cliques in a greedy clique cover.
fn clique_cover_bound(adj: &[u64], mut cand: u64) -> usize {
    let mut cliques = 0;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= !(1 << v);
        let mut grow = cand & adj[v];
        while grow != 0 {
            let u = grow.trailing_zeros() as usize;
            cand &= !(1 << u);
            grow &= adj[u] & !(1 << u);
        }
        cliques += 1;
    }
    cliques
}

struct MaxIndependent<'a> {
    adj: &'a [u64],
    collect: bool,
    best: usize,
    sets: Vec<u64>,
}

impl MaxIndependent<'_> {
    fn record(&mut self, chosen: u64, size: usize) {
        if size > self.best {
            self.best = size;
            self.sets.clear();
        }
        if self.collect && size == self.best {
            self.sets.push(chosen);
        }
    }

    fn branch(&mut self, cand: u64, chosen: u64, size: usize) {
        if cand == 0 {
            self.record(chosen, size);
            return;
        }
        let bound = size + clique_cover_bound(self.adj, cand);
        if bound < self.best || (!self.collect && bound == self.best) {
            return;
        }
        let (v, deg) = VertexSet(cand)
            .iter()
            .map(|v| (v, (self.adj[v] & cand).count_ones()))
            .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
            .expect("candidate set is non-empty");
        if deg == 0 {
            self.record(chosen | cand, size + cand.count_ones() as usize);
            return;
        }
        self.branch(cand & !(self.adj[v] | 1 << v), chosen | 1 << v, size + 1);
        self.branch(cand & !(1 << v), chosen, size);
    }
}

/// Branch and bound on the highest-degree candidate, pruned by a greedy
/// clique cover. Returns `α(g)` and all maximum independent sets.
pub fn independence_number(g: &Graph, limits: &Limits) -> Result<Independence> {
    check_cap(g, limits.exact_cap, "independence number")?;
    let mut search = MaxIndependent {
        adj: g.rows(),
        collect: true,
        best: 0,
        sets: Vec::new(),
    };
    search.branch(low_mask(g.n()), 0, 0);
    let mut sets: Vec<VertexSet> = search.sets.into_iter().map(VertexSet).collect();
    sets.sort();
    Ok(Independence {
        size: search.best,
        sets,
    })
}

/// `α(g)` without enumerating the maximum sets.
pub fn independence_size(g: &Graph, limits: &Limits) -> Result<usize> {
    check_cap(g, limits.exact_cap, "independence number")?;
    let mut search = MaxIndependent {
        adj: g.rows(),
        collect: false,
        best: 0,
        sets: Vec::new(),
    };
    search.branch(low_mask(g.n()), 0, 0);
    Ok(search.best)
}

/// Minimum number of colors in a proper coloring.
pub fn chromatic_number(g: &Graph, limits: &Limits) -> Result<usize> {
    check_cap(g, limits.exact_cap, "chromatic number")?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let lower = greedy_clique(g).max(2);
    (lower..=n)
        .find(|&k| {
            let mut colors = vec![usize::MAX; n];
            color_from(g, &order, 0, k, 0, &mut colors)
        })
        .ok_or_else(|| Error::Strategy("no proper coloring found with n colors".into()))
}

fn greedy_clique(g: &Graph) -> usize {
    (0..g.n())
        .map(|v| {
            let mut cand = g.rows()[v];
            let mut size = 1;
            while cand != 0 {
                let u = cand.trailing_zeros() as usize;
                size += 1;
                cand &= g.rows()[u] & !(1 << u);
            }
            size
        })
        .max()
        .unwrap_or(0)
}

fn color_from(
    g: &Graph,
    order: &[usize],
    idx: usize,
    k: usize,
    used: usize,
    colors: &mut [usize],
) -> bool {
    let Some(&v) = order.get(idx) else {
        return true;
    };
    // new colors are introduced in order, so only the first unused one is tried
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().any(|u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if color_from(g, order, idx + 1, k, used.max(c + 1), colors) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

/// Connectivity, bipartition and Hamiltonian path of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub connected: bool,
    /// `(X, Y)` with `|X| >= |Y|`, present iff the graph is bipartite.
    pub bipartition: Option<(VertexSet, VertexSet)>,
    /// `Ok(None)` when no Hamiltonian path exists; `Err` when the graph is
    /// above the Hamiltonian-path cap.
    pub ham_path: Result<Option<Vec<usize>>>,
}

pub fn structure_checks(g: &Graph, limits: &Limits) -> StructureReport {
    StructureReport {
        connected: g.is_connected(),
        bipartition: bipartition(g),
        ham_path: check_cap(g, limits.ham_path_cap.min(32), "Hamiltonian path")
            .map(|_| hamiltonian_path(g)),
    }
}

/// Two-coloring by breadth-first search, larger class first (ties keep the
/// class of vertex 0 first).
pub fn bipartition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let mut side = [0u64; 2];
    let mut seen = 0u64;
    for root in 0..g.n() {
        if seen >> root & 1 == 1 {
            continue;
        }
        let mut frontier = 1u64 << root;
        let mut parity = 0;
        seen |= frontier;
        while frontier != 0 {
            side[parity] |= frontier;
            let mut next = 0;
            for u in VertexSet(frontier) {
                next |= g.rows()[u];
            }
            if next & side[parity] != 0 {
                return None;
            }
            frontier = next & !seen;
            seen |= next;
            parity ^= 1;
        }
    }
    let (x, y) = (VertexSet(side[0]), VertexSet(side[1]));
    Some(if y.len() > x.len() { (y, x) } else { (x, y) })
}

/// Subset dynamic program: `reach[mask]` holds the possible endpoints of a
/// path covering exactly `mask`.
fn hamiltonian_path(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let adj = g.rows();
    let full = low_mask(n) as usize;
    let mut reach = vec![0u32; full + 1];
    for v in 0..n {
        reach[1 << v] = 1 << v;
    }
    for mask in 1..=full {
        let ends = reach[mask];
        if ends == 0 {
            continue;
        }
        for v in VertexSet(ends as u64) {
            for u in VertexSet(adj[v] & !(mask as u64)) {
                reach[mask | 1 << u] |= 1 << u;
            }
        }
    }
    if reach[full] == 0 {
        return None;
    }
    let mut end = reach[full].trailing_zeros() as usize;
    let mut mask = full;
    let mut walk = vec![end];
    while mask.count_ones() > 1 {
        mask &= !(1 << end);
        let prev = reach[mask] as u64 & adj[end];
        end = prev.trailing_zeros() as usize;
        walk.push(end);
    }
    Some(walk)
}

/// True if `walk` visits every vertex once along edges.
pub fn is_hamiltonian_path(g: &Graph, walk: &[usize]) -> bool {
    walk.len() == g.n()
        && walk.iter().copied().collect::<VertexSet>().len() == g.n()
        && walk.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::{cartesian, join};

    fn brute_alpha(g: &Graph) -> (usize, Vec<VertexSet>) {
        let mut best = 0;
        let mut sets = Vec::new();
        for m in 0..(1u64 << g.n()) {
            let s = VertexSet(m);
            if !g.is_independent(s) {
                continue;
            }
            if s.len() > best {
                best = s.len();
                sets.clear();
            }
            if s.len() == best {
                sets.push(s);
            }
        }
        (best, sets)
    }

    fn brute_chi(g: &Graph) -> usize {
        let n = g.n();
        (1..=n)
            .find(|&k| {
                (0..k.pow(n as u32)).any(|code| {
                    let col: Vec<usize> = (0..n).map(|i| code / k.pow(i as u32) % k).collect();
                    g.edges().iter().all(|&(u, v)| col[u] != col[v])
                })
            })
            .unwrap_or(0)
    }

    #[test]
    fn alpha_examples() {
        let lim = Limits::default();
        let k5 = independence_number(&complete(5), &lim).unwrap();
        assert_eq!(k5.size, 1);
        assert_eq!(k5.sets.len(), 5);

        let k32 = independence_number(&complete_bipartite(3, 2), &lim).unwrap();
        assert_eq!(k32.size, 3);
        assert_eq!(k32.sets, vec![VertexSet(0b00111)]);

        let ladder = product(&path(2), &path(4));
        let (alpha, sets) = brute_alpha(&ladder);
        assert_eq!(alpha, 4);
        let got = independence_number(&ladder, &lim).unwrap();
        assert_eq!(got.size, alpha);
        assert_eq!(got.sets, sets);
    }

    #[test]
    fn alpha_matches_brute_force_on_all_small_graphs() {
        let lim = Limits::default();
        for n in 1..=6 {
            for g in crate::graph::enumerate_all(n).unwrap() {
                let (alpha, sets) = brute_alpha(&g);
                let got = independence_number(&g, &lim).unwrap();
                assert_eq!(got.size, alpha, "{g:?}");
                assert_eq!(got.sets, sets, "{g:?}");
                assert_eq!(independence_size(&g, &lim).unwrap(), alpha);
            }
        }
    }

    #[test]
    fn chromatic_examples() {
        let lim = Limits::default();
        assert_eq!(chromatic_number(&cycle(5), &lim).unwrap(), 3);
        assert_eq!(chromatic_number(&complete_bipartite(3, 2), &lim).unwrap(), 2);
        let p = petersen();
        assert_eq!(brute_chi(&p), 3);
        assert_eq!(chromatic_number(&p, &lim).unwrap(), 3);
        assert_eq!(chromatic_number(&edgeless(3), &lim).unwrap(), 1);
        assert_eq!(chromatic_number(&complete(6), &lim).unwrap(), 6);
    }

    #[test]
    fn chromatic_matches_brute_force() {
        let lim = Limits::default();
        for n in 1..=5 {
            for g in crate::graph::enumerate_all(n).unwrap() {
                assert_eq!(chromatic_number(&g, &lim).unwrap(), brute_chi(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn caps_are_enforced() {
        let lim = Limits::with_cap(5);
        assert!(matches!(
            independence_number(&path(6), &lim),
            Err(Error::CapExceeded { .. })
        ));
        assert!(chromatic_number(&path(6), &lim).is_err());
        let report = structure_checks(&path(22), &Limits::default());
        assert!(report.connected);
        assert!(report.bipartition.is_some());
        assert!(report.ham_path.is_err());
    }

    #[test]
    fn structure_examples() {
        let lim = Limits::default();
        let p5 = structure_checks(&path(5), &lim);
        assert!(p5.connected);
        let (x, y) = p5.bipartition.unwrap();
        assert_eq!((x.to_vec(), y.to_vec()), (vec![0, 2, 4], vec![1, 3]));
        assert_eq!(p5.ham_path.unwrap(), Some(vec![0, 1, 2, 3, 4]));

        let c5 = structure_checks(&cycle(5), &lim);
        assert!(c5.connected && c5.bipartition.is_none());
        assert!(is_hamiltonian_path(&cycle(5), &c5.ham_path.unwrap().unwrap()));

        // boustrophedon order on the 2x3 grid: (0,0) (0,1) (0,2) (1,2) (1,1) (1,0)
        let (grid, layout) = cartesian(&path(2), &path(3)).unwrap();
        let snake: Vec<usize> = [(0, 0), (0, 1), (0, 2), (1, 2), (1, 1), (1, 0)]
            .iter()
            .map(|&(v, w)| layout.encode(v, w))
            .collect();
        assert!(is_hamiltonian_path(&grid, &snake));
        let s = structure_checks(&grid, &lim);
        assert!(s.connected && s.bipartition.is_some());
        assert!(is_hamiltonian_path(&grid, &s.ham_path.unwrap().unwrap()));
    }

    #[test]
    fn no_ham_path_in_big_star() {
        let s = structure_checks(&star(3), &Limits::default());
        assert_eq!(s.ham_path.unwrap(), None);
    }

    #[test]
    fn bipartition_of_disconnected_graph() {
        let g = Graph::from_edges(5, [(0, 1), (2, 3)]).unwrap();
        let (x, y) = bipartition(&g).unwrap();
        assert_eq!(x.len() + y.len(), 5);
        assert!(g.is_independent(x) && g.is_independent(y));
        let odd = join(&cycle(3), &edgeless(1)).unwrap();
        assert!(bipartition(&odd).is_none());
    }

    #[test]
    fn berge_product_criterion_on_small_graphs() {
        let lim = Limits::default();
        for n in 1..=5 {
            for g in crate::graph::enumerate_connected(n).unwrap() {
                let chi = chromatic_number(&g, &lim).unwrap();
                for k in 2..=4 {
                    let alpha = independence_size(&product(&g, &complete(k)), &lim).unwrap();
                    assert_eq!(alpha == n, k >= chi, "{g:?} k={k}");
                }
            }
        }
    }

    #[test]
    fn complements_of_maximum_sets_in_complete_bipartite() {
        let lim = Limits::default();
        for a in 2..=4 {
            for b in 2..=4 {
                let g = complete_bipartite(a, b);
                let ind = independence_number(&g, &lim).unwrap();
                for s in ind.sets {
                    assert!(g.is_independent(g.vertices().difference(s)));
                }
            }
        }
    }
}
