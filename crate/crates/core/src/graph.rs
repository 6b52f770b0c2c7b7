//! Graph types, neighborhood algebra and the brute-force oracles the rest of
//! the crate is checked against.
//!
//! Vertices are dense indices `0..n`. Both graph types store a dense
//! adjacency matrix: every graph handled here is small enough that the
//! quadratic footprint is irrelevant, and constant-time arc queries keep the
//! exhaustive sweeps fast.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

pub type VertexSet = BTreeSet<usize>;

/// A loop-free digraph with at most one arc per vertex pair.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrientedGraph {
    n: usize,
    adj: Vec<bool>,
}

impl OrientedGraph {
    /// Builds a graph from an arc list, rejecting loops, 2-cycles, duplicate
    /// arcs and out-of-range endpoints.
    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            if g.has_arc(u, v) {
                return Err(Error::DuplicateArc(u, v));
            }
            if g.has_arc(v, u) {
                return Err(Error::TwoCycle(u, v));
            }
            g.adj[u * n + v] = true;
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        Ok(Self {
            n,
            adj: vec![false; n * n],
        })
    }

    /// Caller guarantees `u != v`, both in range, and no reverse arc.
    pub(crate) fn insert_arc_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && !self.has_arc(v, u));
        self.adj[u * self.n + v] = true;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.has_arc(u, v))
            .collect()
    }

    pub fn arc_count(&self) -> usize {
        self.adj.iter().filter(|&&a| a).count()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&w| self.has_arc(v, w)).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&w| self.has_arc(w, v)).count()
    }

    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        (0..self.n).filter(|&w| self.has_arc(v, w)).collect()
    }

    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        (0..self.n).filter(|&w| self.has_arc(w, v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        (0..self.n).filter(|&w| self.adjacent(v, w)).collect()
    }

    /// The map `v -> N⁺(v)` over every vertex.
    pub fn out_map(&self) -> NeighborhoodMap {
        (0..self.n).map(|v| (v, self.out_neighbors(v))).collect()
    }

    /// The map `v -> N⁻(v)` over every vertex.
    pub fn in_map(&self) -> NeighborhoodMap {
        (0..self.n).map(|v| (v, self.in_neighbors(v))).collect()
    }

    /// The map `v -> N(v)` over every vertex.
    pub fn total_map(&self) -> NeighborhoodMap {
        (0..self.n).map(|v| (v, self.neighbors(v))).collect()
    }

    pub fn underlying(&self) -> UndirectedGraph {
        let n = self.n;
        let mut adj = vec![false; n * n];
        for u in 0..n {
            for v in 0..n {
                adj[u * n + v] = self.adjacent(u, v);
            }
        }
        UndirectedGraph { n, adj }
    }

    /// Induced subgraph on `keep`, relabelled `keep[i] -> i`.
    pub fn induced(&self, keep: &[usize]) -> Result<Self> {
        let mut g = Self::empty(keep.len())?;
        for (i, &u) in keep.iter().enumerate() {
            if u >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: u,
                    n: self.n,
                });
            }
            for (j, &v) in keep.iter().enumerate() {
                if i != j && self.has_arc(u, v) {
                    g.adj[i * keep.len() + j] = true;
                }
            }
        }
        Ok(g)
    }

    /// Applies `perm` (old index -> new index).
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length");
        let n = self.n;
        let mut adj = vec![false; n * n];
        for u in 0..n {
            for v in 0..n {
                if self.has_arc(u, v) {
                    adj[perm[u] * n + perm[v]] = true;
                }
            }
        }
        Self { n, adj }
    }

    fn degree_profile(&self) -> Vec<(usize, usize)> {
        let mut p: Vec<_> = (0..self.n)
            .map(|v| (self.out_degree(v), self.in_degree(v)))
            .collect();
        p.sort_unstable();
        p
    }
}

impl fmt::Debug for OrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrientedGraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs())
            .finish()
    }
}

/// A simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    n: usize,
    adj: Vec<bool>,
}

impl UndirectedGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u, v));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        Ok(Self {
            n,
            adj: vec![false; n * n],
        })
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.has_edge(u, v))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&a| a).count() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&w| self.has_edge(v, w)).count()
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        (0..self.n).filter(|&w| self.has_edge(v, w)).collect()
    }
}

impl fmt::Debug for UndirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("UndirectedGraph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// A set-valued function on a finite vertex domain.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NeighborhoodMap {
    images: BTreeMap<usize, VertexSet>,
}

impl NeighborhoodMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, v: usize, image: VertexSet) {
        self.images.insert(v, image);
    }

    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.keys().copied()
    }

    pub fn image(&self, v: usize) -> Result<&VertexSet> {
        self.images.get(&v).ok_or(Error::NotInDomain(v))
    }

    /// `x ⊴ y`: σ(x) ⊆ σ(y) ∪ {y}.
    pub fn le(&self, x: usize, y: usize) -> Result<bool> {
        let (sx, sy) = (self.image(x)?, self.image(y)?);
        Ok(sx.iter().all(|w| *w == y || sy.contains(w)))
    }

    /// `x ⊲ y`: σ(x) ⊊ σ(y).
    pub fn lt(&self, x: usize, y: usize) -> Result<bool> {
        let (sx, sy) = (self.image(x)?, self.image(y)?);
        Ok(sx.len() < sy.len() && sx.is_subset(sy))
    }

    fn comparable(&self, x: usize, y: usize, strict: bool) -> Result<bool> {
        if strict {
            let (sx, sy) = (self.image(x)?, self.image(y)?);
            Ok(sx.is_subset(sy) || sy.is_subset(sx))
        } else {
            Ok(self.le(x, y)? || self.le(y, x)?)
        }
    }
}

impl FromIterator<(usize, VertexSet)> for NeighborhoodMap {
    fn from_iter<T: IntoIterator<Item = (usize, VertexSet)>>(iter: T) -> Self {
        Self {
            images: iter.into_iter().collect(),
        }
    }
}

/// Whether `m` is nested on `s`.
///
/// Non-strict mode asks for σ(x) ⊆ σ(y) ∪ {y} or σ(y) ⊆ σ(x) ∪ {x} on every
/// pair; strict mode asks for plain inclusion one way or the other.
pub fn is_nested_family(m: &NeighborhoodMap, s: &VertexSet, strict: bool) -> Result<bool> {
    for &x in s {
        m.image(x)?;
    }
    for &x in s {
        for &y in s.range(x + 1..) {
            if !m.comparable(x, y, strict)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn is_transitive(g: &OrientedGraph) -> bool {
    let n = g.n();
    for x in 0..n {
        for y in 0..n {
            if !g.has_arc(x, y) {
                continue;
            }
            for z in 0..n {
                if g.has_arc(y, z) && !g.has_arc(x, z) {
                    return false;
                }
            }
        }
    }
    true
}

/// Naive scan of ordered 4-tuples for an induced switch
/// (`ab, cd` edges, `ad, bc` non-edges).
pub fn is_switch_free(g: &UndirectedGraph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in 0..n {
            if b == a || !g.has_edge(a, b) {
                continue;
            }
            for c in 0..n {
                if c == a || c == b || g.has_edge(b, c) {
                    continue;
                }
                for d in 0..n {
                    if d == a || d == b || d == c {
                        continue;
                    }
                    if g.has_edge(c, d) && !g.has_edge(a, d) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Searches for a bijection `perm` with `g.relabel(&perm) == *h`.
///
/// The search is a plain backtracking walk over permutations; matching
/// (out, in)-degree pairs only prunes it.
pub fn find_isomorphism(g: &OrientedGraph, h: &OrientedGraph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.arc_count() != h.arc_count() {
        return None;
    }
    if g.degree_profile() != h.degree_profile() {
        return None;
    }
    let n = g.n();
    let gdeg: Vec<_> = (0..n).map(|v| (g.out_degree(v), g.in_degree(v))).collect();
    let hdeg: Vec<_> = (0..n).map(|v| (h.out_degree(v), h.in_degree(v))).collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g, h, &gdeg, &hdeg, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(
    g: &OrientedGraph,
    h: &OrientedGraph,
    gdeg: &[(usize, usize)],
    hdeg: &[(usize, usize)],
    v: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if v == g.n() {
        return true;
    }
    for cand in 0..h.n() {
        if used[cand] || gdeg[v] != hdeg[cand] {
            continue;
        }
        let consistent = (0..v).all(|u| {
            g.has_arc(u, v) == h.has_arc(map[u], cand) && g.has_arc(v, u) == h.has_arc(cand, map[u])
        });
        if !consistent {
            continue;
        }
        map[v] = cand;
        used[cand] = true;
        if extend(g, h, gdeg, hdeg, v + 1, map, used) {
            return true;
        }
        used[cand] = false;
    }
    map[v] = usize::MAX;
    false
}

pub fn are_isomorphic_bruteforce(g: &OrientedGraph, h: &OrientedGraph) -> bool {
    find_isomorphism(g, h).is_some()
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

/// Every loop-free, 2-cycle-free digraph on `n` labelled vertices
/// (`3^C(n,2)` of them).
pub fn oriented_graphs(n: usize) -> OrientedGraphs {
    let pairs = pairs(n);
    let total = if n == 0 {
        0
    } else {
        3u64.checked_pow(pairs.len() as u32)
            .expect("too many oriented graphs to enumerate")
    };
    OrientedGraphs {
        n,
        pairs,
        next: 0,
        total,
    }
}

#[derive(Debug)]
pub struct OrientedGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    total: u64,
}

impl Iterator for OrientedGraphs {
    type Item = OrientedGraph;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.total {
            return None;
        }
        let mut code = self.next;
        self.next += 1;
        let mut g = OrientedGraph::empty(self.n).expect("n >= 1");
        for &(i, j) in &self.pairs {
            match code % 3 {
                1 => g.insert_arc_unchecked(i, j),
                2 => g.insert_arc_unchecked(j, i),
                _ => {}
            }
            code /= 3;
        }
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

/// Every simple graph on `n` labelled vertices (`2^C(n,2)` of them).
pub fn undirected_graphs(n: usize) -> impl Iterator<Item = UndirectedGraph> {
    let pairs = pairs(n);
    let total: u64 = if n == 0 { 0 } else { 1u64 << pairs.len() };
    (0..total).map(move |mask| {
        let mut g = UndirectedGraph::empty(n).expect("n >= 1");
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                g.set_edge(i, j);
            }
        }
        g
    })
}

/// Every orientation of `g` (`2^|E|` of them).
pub fn orientations(g: &UndirectedGraph) -> impl Iterator<Item = OrientedGraph> + '_ {
    let edges = g.edges();
    assert!(edges.len() < 64, "too many edges to orient exhaustively");
    (0..1u64 << edges.len()).map(move |mask| {
        let mut o = OrientedGraph::empty(g.n()).expect("n >= 1");
        for (bit, &(u, v)) in edges.iter().enumerate() {
            if mask >> bit & 1 == 0 {
                o.insert_arc_unchecked(u, v);
            } else {
                o.insert_arc_unchecked(v, u);
            }
        }
        o
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> VertexSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn transitive_examples() {
        let chain = OrientedGraph::new(3, [(2, 1), (2, 0), (1, 0)]).unwrap();
        assert!(is_transitive(&chain));
        let cycle = OrientedGraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!is_transitive(&cycle));
    }

    #[test]
    fn constructor_rejects_bad_arcs() {
        assert_eq!(OrientedGraph::new(2, [(1, 1)]), Err(Error::Loop(1)));
        assert_eq!(
            OrientedGraph::new(2, [(0, 1), (1, 0)]),
            Err(Error::TwoCycle(1, 0))
        );
        assert_eq!(
            OrientedGraph::new(2, [(0, 1), (0, 1)]),
            Err(Error::DuplicateArc(0, 1))
        );
        assert_eq!(
            OrientedGraph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(OrientedGraph::new(0, []), Err(Error::NoVertices));
        assert_eq!(UndirectedGraph::new(0, []), Err(Error::NoVertices));
        assert_eq!(
            UndirectedGraph::new(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(1, 0))
        );
    }

    #[test]
    fn switches() {
        let c4 = UndirectedGraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!is_switch_free(&c4));
        let p4 = UndirectedGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(!is_switch_free(&p4));
        let two_k2 = UndirectedGraph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!is_switch_free(&two_k2));
        let k3 = UndirectedGraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(is_switch_free(&k3));
        let k4 = UndirectedGraph::new(4, pairs(4)).unwrap();
        assert!(is_switch_free(&k4));
    }

    #[test]
    fn nested_families() {
        let chain: NeighborhoodMap = [(0, set(&[])), (1, set(&[7])), (2, set(&[7, 8]))]
            .into_iter()
            .collect();
        let all = set(&[0, 1, 2]);
        assert_eq!(is_nested_family(&chain, &all, false), Ok(true));
        assert_eq!(is_nested_family(&chain, &all, true), Ok(true));

        let apart: NeighborhoodMap = [(10, set(&[1])), (11, set(&[2]))].into_iter().collect();
        let both = set(&[10, 11]);
        assert_eq!(is_nested_family(&apart, &both, false), Ok(false));
        assert_eq!(is_nested_family(&apart, &both, true), Ok(false));

        assert_eq!(
            is_nested_family(&apart, &set(&[10, 5]), false),
            Err(Error::NotInDomain(5))
        );
    }

    #[test]
    fn nested_modes_differ_on_self_membership() {
        // σ(0) = {1}, σ(1) = {0}: comparable only up to the element itself.
        let m: NeighborhoodMap = [(0, set(&[1])), (1, set(&[0]))].into_iter().collect();
        let s = set(&[0, 1]);
        assert_eq!(is_nested_family(&m, &s, false), Ok(true));
        assert_eq!(is_nested_family(&m, &s, true), Ok(false));
        assert_eq!(m.lt(0, 1), Ok(false));
        assert_eq!(m.le(0, 1), Ok(true));
    }

    #[test]
    fn isomorphism_search() {
        let g = OrientedGraph::new(4, [(0, 1), (1, 2), (0, 2), (3, 0)]).unwrap();
        let perm = [2, 0, 3, 1];
        let h = g.relabel(&perm);
        let found = find_isomorphism(&g, &h).unwrap();
        assert_eq!(g.relabel(&found), h);

        let fewer = OrientedGraph::new(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!are_isomorphic_bruteforce(&g, &fewer));
        let reversed = OrientedGraph::new(2, [(1, 0)]).unwrap();
        let forward = OrientedGraph::new(2, [(0, 1)]).unwrap();
        assert!(are_isomorphic_bruteforce(&reversed, &forward));
        // Same degree profile, different structure.
        let a = OrientedGraph::new(4, [(0, 1), (2, 3)]).unwrap();
        let b = OrientedGraph::new(4, [(0, 1), (0, 2), (3, 1)]).unwrap();
        assert!(!are_isomorphic_bruteforce(&a, &b));
    }

    #[test]
    fn isomorphism_is_an_equivalence_relation() {
        for n in 1..=4 {
            let graphs: Vec<_> = oriented_graphs(n).collect();
            let m = graphs.len();
            let mut iso = vec![false; m * m];
            for i in 0..m {
                for j in 0..m {
                    iso[i * m + j] = are_isomorphic_bruteforce(&graphs[i], &graphs[j]);
                }
            }
            for i in 0..m {
                assert!(iso[i * m + i]);
                for j in 0..m {
                    assert_eq!(iso[i * m + j], iso[j * m + i]);
                    if !iso[i * m + j] {
                        continue;
                    }
                    for k in 0..m {
                        if iso[j * m + k] {
                            assert!(iso[i * m + k], "n={n}: {i}~{j}~{k}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn transitivity_is_hereditary() {
        for n in 2..=6 {
            // n = 6 has 3^15 graphs; stride through them to keep this quick.
            let stride = if n == 6 { 97 } else { 1 };
            for g in oriented_graphs(n).step_by(stride).filter(is_transitive) {
                for drop in 0..n {
                    let keep: Vec<_> = (0..n).filter(|&v| v != drop).collect();
                    assert!(is_transitive(&g.induced(&keep).unwrap()));
                }
            }
        }
    }

    #[test]
    fn enumerators_have_expected_sizes() {
        assert_eq!(oriented_graphs(1).count(), 1);
        assert_eq!(oriented_graphs(3).count(), 27);
        assert_eq!(undirected_graphs(4).count(), 64);
        let k3 = UndirectedGraph::new(3, pairs(3)).unwrap();
        assert_eq!(orientations(&k3).count(), 8);
        assert_eq!(orientations(&k3).filter(is_transitive).count(), 6);
    }
}
