//! Building graphs from creation sequences and from signed weights.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{OrientedGraph, UndirectedGraph};
use crate::sequence::{TernarySequence, TernarySymbol};

/// Signed vertex weights (vertex index order) and a threshold.
///
/// Arc `x -> y` exists iff `|w(x)| + |w(y)| >= t` and `w(x) > w(y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightRealization {
    weights: Vec<i64>,
    threshold: i64,
}

impl WeightRealization {
    /// Magnitudes must be pairwise distinct and the threshold positive.
    pub fn new(weights: Vec<i64>, threshold: i64) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::NoVertices);
        }
        if threshold <= 0 {
            return Err(Error::NonPositiveThreshold(threshold));
        }
        let mut seen = HashSet::with_capacity(weights.len());
        for (i, &w) in weights.iter().enumerate() {
            if !seen.insert(w.unsigned_abs()) {
                let first = weights[..i]
                    .iter()
                    .copied()
                    .find(|x| x.unsigned_abs() == w.unsigned_abs())
                    .expect("seen before");
                return Err(Error::DuplicateMagnitude(first, w));
            }
        }
        Ok(Self { weights, threshold })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn threshold(&self) -> i64 {
        self.threshold
    }

    /// Multiplies every weight and the threshold by `factor`.
    pub fn scaled(&self, factor: i64) -> Result<Self> {
        Self::new(
            self.weights.iter().map(|w| w * factor).collect(),
            self.threshold * factor,
        )
    }

    /// Weights permuted by `perm` (old index -> new index).
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut weights = vec![0; self.weights.len()];
        for (old, &w) in self.weights.iter().enumerate() {
            weights[perm[old]] = w;
        }
        Self {
            weights,
            threshold: self.threshold,
        }
    }
}

/// Builds the oriented graph of `s`: vertex `k` is added at step `k + 1`,
/// `+` as a source onto every earlier vertex, `-` as a sink from every
/// earlier vertex, `0` with no arcs.
pub fn dtg_build(s: &TernarySequence) -> OrientedGraph {
    let n = s.vertex_count();
    let mut g = OrientedGraph::empty(n).expect("at least one vertex");
    for k in 1..n {
        match s.symbol_of_vertex(k).expect("k in 1..n") {
            TernarySymbol::Plus => (0..k).for_each(|j| g.insert_arc_unchecked(k, j)),
            TernarySymbol::Minus => (0..k).for_each(|j| g.insert_arc_unchecked(j, k)),
            TernarySymbol::Zero => {}
        }
    }
    g
}

/// Undirected analogue of [`dtg_build`]; signs are ignored.
pub fn threshold_build(s: &TernarySequence) -> UndirectedGraph {
    let n = s.vertex_count();
    let mut g = UndirectedGraph::empty(n).expect("at least one vertex");
    for k in 1..n {
        if !s.symbol_of_vertex(k).expect("k in 1..n").is_zero() {
            (0..k).for_each(|j| g.set_edge(k, j));
        }
    }
    g
}

pub fn build_from_weights(w: &WeightRealization) -> OrientedGraph {
    let n = w.weights.len();
    let mut g = OrientedGraph::empty(n).expect("validated non-empty");
    for x in 0..n {
        for y in 0..n {
            let (wx, wy) = (w.weights[x], w.weights[y]);
            if wx > wy && wx.abs() + wy.abs() >= w.threshold {
                g.insert_arc_unchecked(x, y);
            }
        }
    }
    g
}

/// Integer weights realizing `dtg_build(s)` on the same vertex labels.
///
/// With `n` vertices the threshold is `4n`. The vertex added at step `j` gets
/// magnitude `2n - 2j + 1` if it is isolated (or the initial vertex) and
/// `2n + 2j` if it is dominating, signed by its symbol. Dominating
/// magnitudes grow with the step and isolated ones shrink, so a dominating
/// vertex clears the threshold exactly with the vertices before it. Mixed
/// sums are odd against an even threshold, so they never tie with it.
pub fn realize_weights(s: &TernarySequence) -> WeightRealization {
    let n = s.vertex_count() as i64;
    let weights = (0..s.vertex_count())
        .map(|v| {
            let step = v as i64 + 1;
            match s.symbol_of_vertex(v) {
                None | Some(TernarySymbol::Zero) => 2 * n - 2 * step + 1,
                Some(TernarySymbol::Plus) => 2 * n + 2 * step,
                Some(TernarySymbol::Minus) => -(2 * n + 2 * step),
            }
        })
        .collect();
    WeightRealization {
        weights,
        threshold: 4 * n,
    }
}
