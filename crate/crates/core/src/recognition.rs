//! Membership tests for oriented threshold graphs.
//!
//! Three independent routes are provided: transitivity plus a threshold
//! underlying graph ([`recognize`]), reverse elimination of isolated,
//! out-dominating and in-dominated vertices ([`extract_sequence`]), and a
//! displit partition with properly nested neighborhoods
//! ([`displit_partition`] + [`check_properly_nested`]).

use crate::construction::{realize_weights, WeightRealization};
use crate::error::{Error, Result};
use crate::graph::{is_nested_family, is_transitive, OrientedGraph, UndirectedGraph, VertexSet};
use crate::sequence::{TernarySequence, TernarySymbol};

/// Result of a successful elimination: a creation sequence together with the
/// vertex of `g` that plays each vertex of `dtg_build(sequence)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elimination {
    sequence: TernarySequence,
    order: Vec<usize>,
}

impl Elimination {
    pub fn sequence(&self) -> &TernarySequence {
        &self.sequence
    }

    /// `order[k]` is the vertex of the input graph matching vertex `k` of
    /// the built graph; `order[0]` is the initial vertex. Read as a
    /// permutation it relabels the built graph into the input graph.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// A weight realization of the input graph, in its own labels.
    pub fn weights(&self) -> WeightRealization {
        realize_weights(&self.sequence).relabel(&self.order)
    }
}

fn classify(g: &OrientedGraph, alive: &[bool], v: usize) -> Option<TernarySymbol> {
    let mut out_all = true;
    let mut in_all = true;
    let mut isolated = true;
    for w in (0..g.n()).filter(|&w| w != v && alive[w]) {
        let (o, i) = (g.has_arc(v, w), g.has_arc(w, v));
        isolated &= !o && !i;
        out_all &= o;
        in_all &= i;
    }
    if isolated {
        Some(TernarySymbol::Zero)
    } else if out_all {
        Some(TernarySymbol::Plus)
    } else if in_all {
        Some(TernarySymbol::Minus)
    } else {
        None
    }
}

/// Peels off vertices, isolated first, then out-dominating, then
/// in-dominated, lowest index first within each kind.
pub fn eliminate(g: &OrientedGraph) -> Option<Elimination> {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut removed = Vec::with_capacity(n);
    let mut symbols = Vec::with_capacity(n.saturating_sub(1));
    for _ in 1..n {
        let kinds: Vec<_> = (0..n)
            .filter(|&v| alive[v])
            .filter_map(|v| classify(g, &alive, v).map(|k| (k, v)))
            .collect();
        let (kind, v) = kinds
            .iter()
            .copied()
            .min_by_key(|&(k, v)| (preference(k), v))?;
        alive[v] = false;
        removed.push(v);
        symbols.push(kind);
    }
    let star = (0..n).find(|&v| alive[v]).expect("one vertex left");
    let mut order = vec![star];
    order.extend(removed.iter().rev());
    Some(Elimination {
        sequence: TernarySequence::new(symbols),
        order,
    })
}

fn preference(k: TernarySymbol) -> u8 {
    match k {
        TernarySymbol::Zero => 0,
        TernarySymbol::Plus => 1,
        TernarySymbol::Minus => 2,
    }
}

/// The creation sequence found by [`eliminate`], if `g` is in the class.
pub fn extract_sequence(g: &OrientedGraph) -> Option<TernarySequence> {
    eliminate(g).map(|e| e.sequence)
}

/// Transitive, with a threshold underlying graph.
pub fn recognize(g: &OrientedGraph) -> bool {
    is_transitive(g) && is_threshold_undirected(&g.underlying())
}

/// Repeatedly deletes an isolated vertex, else a dominating one; succeeds if
/// a single vertex remains.
pub fn is_threshold_undirected(g: &UndirectedGraph) -> bool {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    for left in (2..=n).rev() {
        let pick = (0..n)
            .filter(|&v| alive[v])
            .find(|&v| degree[v] == 0)
            .or_else(|| (0..n).find(|&v| alive[v] && degree[v] == left - 1));
        let Some(v) = pick else {
            return false;
        };
        alive[v] = false;
        for w in 0..n {
            if alive[w] && g.has_edge(v, w) {
                degree[w] -= 1;
            }
        }
    }
    true
}

/// Top, independent and bottom classes of a displit graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisplitPartition {
    pub top: VertexSet,
    pub independent: VertexSet,
    pub bottom: VertexSet,
}

impl DisplitPartition {
    pub fn new(top: VertexSet, independent: VertexSet, bottom: VertexSet) -> Self {
        Self {
            top,
            independent,
            bottom,
        }
    }

    pub fn clique(&self) -> VertexSet {
        self.top.union(&self.bottom).copied().collect()
    }

    /// Checks the partition against `g`: the classes cover the vertices
    /// exactly once, `I` is independent, `T ∪ B` is a tournament, arcs
    /// touching `T` leave it and arcs touching `B` enter it.
    pub fn validate(&self, g: &OrientedGraph) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidPartition(m));
        let n = g.n();
        let mut owner = vec![0u8; n];
        for (set, tag) in [(&self.top, 1), (&self.independent, 2), (&self.bottom, 3)] {
            for &v in set {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if owner[v] != 0 {
                    return bad(format!("vertex {v} is in two classes"));
                }
                owner[v] = tag;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == 0) {
            return bad(format!("vertex {v} is in no class"));
        }
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                match (owner[u], owner[v]) {
                    (2, 2) if g.adjacent(u, v) => {
                        return bad(format!("independent vertices {u} and {v} are adjacent"));
                    }
                    (1 | 3, 1 | 3) if !g.adjacent(u, v) => {
                        return bad(format!("clique vertices {u} and {v} are not adjacent"));
                    }
                    (1, 2 | 3) if g.has_arc(v, u) => {
                        return bad(format!("arc {v} -> {u} enters the top class"));
                    }
                    (3, 1 | 2) if g.has_arc(u, v) => {
                        return bad(format!("arc {u} -> {v} leaves the bottom class"));
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }
}

/// A displit partition anchored at the initial vertex `*` of an elimination:
/// `I` is `*` with the zero-recorded vertices, `T = N⁻(*)` and `B = N⁺(*)`.
///
/// When the last two vertices are joined by an arc, the source of that arc
/// is taken as `*`, reading the final `+` as a `-` on the other vertex.
pub fn displit_partition(g: &OrientedGraph) -> Option<DisplitPartition> {
    let e = eliminate(g)?;
    let order = e.order();
    let mut symbol_of = vec![None; g.n()];
    for (k, &v) in order.iter().enumerate() {
        symbol_of[v] = e.sequence.symbol_of_vertex(k);
    }
    let mut star = order[0];
    if let [first, second, ..] = *order {
        if symbol_of[second] == Some(TernarySymbol::Plus) {
            star = second;
            symbol_of[second] = None;
            symbol_of[first] = Some(TernarySymbol::Minus);
        }
    }
    let mut p = DisplitPartition::new(VertexSet::new(), VertexSet::new(), VertexSet::new());
    for v in 0..g.n() {
        let class = match symbol_of[v] {
            None | Some(TernarySymbol::Zero) => &mut p.independent,
            Some(sign) => {
                if g.has_arc(v, star) {
                    &mut p.top
                } else if g.has_arc(star, v) {
                    &mut p.bottom
                } else if sign == TernarySymbol::Plus {
                    &mut p.top
                } else {
                    &mut p.bottom
                }
            }
        };
        class.insert(v);
    }
    Some(p)
}

/// Properly nested neighborhoods relative to a displit partition:
///
/// 1. `N` is nested on all vertices;
/// 2. `N⁺` and `N⁻` are nested on `I`, and `x ⊴ y` under `N` implies it
///    under both `N⁻` and `N⁺`;
/// 3. `N⁺` and `N⁻` are strictly nested on `K = T ∪ B`, and
///    `N⁺(x) ⊊ N⁺(y)` iff `N⁻(y) ⊊ N⁻(x)`.
///
/// Fails with [`Error::InvalidPartition`] if `p` is not a displit partition
/// of `g`.
pub fn check_properly_nested(g: &OrientedGraph, p: &DisplitPartition) -> Result<bool> {
    p.validate(g)?;
    let total = g.total_map();
    let out = g.out_map();
    let inn = g.in_map();
    let all: VertexSet = (0..g.n()).collect();

    if !is_nested_family(&total, &all, false)? {
        return Ok(false);
    }

    let i = &p.independent;
    if !is_nested_family(&out, i, false)? || !is_nested_family(&inn, i, false)? {
        return Ok(false);
    }
    for &x in i {
        for &y in i {
            if total.le(x, y)? && !(inn.le(x, y)? && out.le(x, y)?) {
                return Ok(false);
            }
        }
    }

    let k = p.clique();
    if !is_nested_family(&out, &k, true)? || !is_nested_family(&inn, &k, true)? {
        return Ok(false);
    }
    for &x in &k {
        for &y in &k {
            if out.lt(x, y)? != inn.lt(y, x)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
