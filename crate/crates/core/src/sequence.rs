//! Ternary creation sequences.
//!
//! A sequence is stored most-recently-added first, exactly as it is written:
//! `"+-0-*"` adds an in-dominated vertex, then an isolated one, then another
//! in-dominated one and finally an out-dominating one, all on top of the
//! initial vertex `*`. The initial vertex is never stored.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Ordered `Plus < Minus < Zero`; enumeration output follows this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TernarySymbol {
    /// An out-dominating vertex (a source adjacent to everything before it).
    Plus,
    /// An in-dominated vertex (a sink adjacent to everything before it).
    Minus,
    /// An isolated vertex.
    Zero,
}

impl TernarySymbol {
    pub const ALL: [TernarySymbol; 3] = [Self::Plus, Self::Minus, Self::Zero];

    pub fn as_char(self) -> char {
        match self {
            Self::Plus => '+',
            Self::Minus => '-',
            Self::Zero => '0',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            '+' => Some(Self::Plus),
            '-' => Some(Self::Minus),
            '0' => Some(Self::Zero),
            _ => None,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Self::Zero
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TernarySequence {
    symbols: Vec<TernarySymbol>,
}

impl TernarySequence {
    pub fn new(symbols: Vec<TernarySymbol>) -> Self {
        Self { symbols }
    }

    pub fn symbols(&self) -> &[TernarySymbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Number of vertices of the graph this sequence builds.
    pub fn vertex_count(&self) -> usize {
        self.symbols.len() + 1
    }

    /// Symbol that created vertex `v`; `None` for the initial vertex 0.
    pub fn symbol_of_vertex(&self, v: usize) -> Option<TernarySymbol> {
        match v {
            0 => None,
            v if v <= self.len() => Some(self.symbols[self.len() - v]),
            _ => None,
        }
    }

    /// The same sequence with every sign dropped (`-` read as `+`).
    pub fn magnitudes(&self) -> Self {
        self.symbols
            .iter()
            .map(|&s| match s {
                TernarySymbol::Minus => TernarySymbol::Plus,
                other => other,
            })
            .collect()
    }

    pub fn contains_minus(&self) -> bool {
        self.symbols.contains(&TernarySymbol::Minus)
    }

    /// Maximal runs of nonzero symbols, left to right.
    pub fn nonzero_runs(&self) -> Vec<Range<usize>> {
        let mut runs = Vec::new();
        let mut start = None;
        for (i, s) in self.symbols.iter().enumerate() {
            match (s.is_zero(), start) {
                (false, None) => start = Some(i),
                (true, Some(b)) => {
                    runs.push(b..i);
                    start = None;
                }
                _ => {}
            }
        }
        if let Some(b) = start {
            runs.push(b..self.len());
        }
        runs
    }

    /// The nonzero run touching the initial vertex, if the sequence does not
    /// end in a zero.
    pub fn star_run(&self) -> Option<Range<usize>> {
        self.nonzero_runs().pop().filter(|r| r.end == self.len())
    }
}

impl FromIterator<TernarySymbol> for TernarySequence {
    fn from_iter<T: IntoIterator<Item = TernarySymbol>>(iter: T) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

impl fmt::Display for TernarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{}", s.as_char())?;
        }
        f.write_str("*")
    }
}

impl FromStr for TernarySequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::io::parse_sequence(s)
    }
}

/// Sorts every nonzero run so its pluses precede its minuses and turns the
/// run next to `*` into all pluses.
pub fn canonicalize(s: &TernarySequence) -> TernarySequence {
    let mut out = s.symbols.clone();
    let star = s.star_run();
    for run in s.nonzero_runs() {
        let minus = if Some(&run) == star.as_ref() {
            0
        } else {
            out[run.clone()]
                .iter()
                .filter(|&&x| x == TernarySymbol::Minus)
                .count()
        };
        let split = run.end - minus;
        out[run.start..split].fill(TernarySymbol::Plus);
        out[split..run.end].fill(TernarySymbol::Minus);
    }
    TernarySequence::new(out)
}

pub fn is_canonical(s: &TernarySequence) -> bool {
    let sorted = s
        .symbols
        .windows(2)
        .all(|w| !(w[0] == TernarySymbol::Minus && w[1] == TernarySymbol::Plus));
    let star_clean = s
        .star_run()
        .is_none_or(|r| !s.symbols[r].contains(&TernarySymbol::Minus));
    sorted && star_clean
}

/// Exchanges the symbols at string positions `k - 1` and `k`.
///
/// Both must be nonzero, or both zero. Swapping two nonzero symbols yields an
/// isomorphic graph: only the arc between the two vertices changes direction.
pub fn swap_equal_magnitude(s: &TernarySequence, k: usize) -> Result<TernarySequence> {
    if k == 0 || k >= s.len() {
        return Err(Error::SwapPrecondition {
            position: k,
            reason: "position out of range",
        });
    }
    if s.symbols[k - 1].is_zero() != s.symbols[k].is_zero() {
        return Err(Error::SwapPrecondition {
            position: k,
            reason: "symbols differ in magnitude",
        });
    }
    let mut out = s.symbols.clone();
    out.swap(k - 1, k);
    Ok(TernarySequence::new(out))
}

/// One `+^p -^m 0^z` group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub plus: usize,
    pub minus: usize,
    pub zeros: usize,
}

/// Run-length form `(+^{p_l} -^{m_l} 0^{z_l}) … (+^{p_1} -^{m_1} 0^{z_1}) +^{p_0} *`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockForm {
    blocks: Vec<Block>,
    star_plus: usize,
}

impl BlockForm {
    /// `blocks` are listed left to right (block `l` first). Every block needs
    /// at least one zero.
    pub fn new(blocks: Vec<Block>, star_plus: usize) -> Result<Self> {
        let l = blocks.len();
        if let Some(pos) = blocks.iter().position(|b| b.zeros == 0) {
            return Err(Error::EmptyZeroRun { index: l - pos });
        }
        Ok(Self { blocks, star_plus })
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// `p_0`, the pluses next to `*`.
    pub fn star_plus(&self) -> usize {
        self.star_plus
    }

    pub fn symbol_count(&self) -> usize {
        self.blocks
            .iter()
            .map(|b| b.plus + b.minus + b.zeros)
            .sum::<usize>()
            + self.star_plus
    }
}

/// Reads the block form off `s`. A run's pluses and minuses are only
/// counted, and the run next to `*` is counted wholly into `p_0`, so
/// `from_blocks(&to_blocks(s))` is `canonicalize(s)`.
pub fn to_blocks(s: &TernarySequence) -> BlockForm {
    let mut blocks = Vec::new();
    let mut cur = Block {
        plus: 0,
        minus: 0,
        zeros: 0,
    };
    for &sym in &s.symbols {
        if !sym.is_zero() && cur.zeros > 0 {
            blocks.push(cur);
            cur = Block {
                plus: 0,
                minus: 0,
                zeros: 0,
            };
        }
        match sym {
            TernarySymbol::Plus => cur.plus += 1,
            TernarySymbol::Minus => cur.minus += 1,
            TernarySymbol::Zero => cur.zeros += 1,
        }
    }
    let star_plus = if cur.zeros > 0 {
        blocks.push(cur);
        0
    } else {
        cur.plus + cur.minus
    };
    BlockForm { blocks, star_plus }
}

pub fn from_blocks(b: &BlockForm) -> TernarySequence {
    let mut out = Vec::with_capacity(b.symbol_count());
    for block in &b.blocks {
        out.extend(std::iter::repeat_n(TernarySymbol::Plus, block.plus));
        out.extend(std::iter::repeat_n(TernarySymbol::Minus, block.minus));
        out.extend(std::iter::repeat_n(TernarySymbol::Zero, block.zeros));
    }
    out.extend(std::iter::repeat_n(TernarySymbol::Plus, b.star_plus));
    TernarySequence::new(out)
}

/// All `3^len` sequences of the given length, in lexicographic order.
pub fn all_sequences(len: usize) -> impl Iterator<Item = TernarySequence> {
    let total = 3u64.pow(len as u32);
    (0..total).map(move |mut code| {
        let mut symbols = vec![TernarySymbol::Plus; len];
        for slot in symbols.iter_mut().rev() {
            *slot = TernarySymbol::ALL[(code % 3) as usize];
            code /= 3;
        }
        TernarySequence::new(symbols)
    })
}

/// Canonical sequences for `n`-vertex graphs (length `n - 1`), each once,
/// in lexicographic order.
pub fn enumerate_canonical(n: usize) -> Result<CanonicalSequences> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    Ok(CanonicalSequences {
        len: n - 1,
        cur: Vec::with_capacity(n - 1),
        started: false,
        done: false,
    })
}

/// Depth-first walk over sequences with no `-+` pair, yielding those whose
/// `*`-adjacent run has no minus.
#[derive(Clone, Debug)]
pub struct CanonicalSequences {
    len: usize,
    cur: Vec<TernarySymbol>,
    started: bool,
    done: bool,
}

impl CanonicalSequences {
    fn allowed(prev: Option<TernarySymbol>, next: TernarySymbol) -> bool {
        !(prev == Some(TernarySymbol::Minus) && next == TernarySymbol::Plus)
    }

    fn descend(&mut self) {
        while self.cur.len() < self.len {
            let prev = self.cur.last().copied();
            let first = TernarySymbol::ALL
                .into_iter()
                .find(|&s| Self::allowed(prev, s))
                .expect("zero is always allowed");
            self.cur.push(first);
        }
    }

    fn advance(&mut self) -> bool {
        while let Some(last) = self.cur.pop() {
            let prev = self.cur.last().copied();
            if let Some(next) = TernarySymbol::ALL
                .into_iter()
                .find(|&s| s > last && Self::allowed(prev, s))
            {
                self.cur.push(next);
                return true;
            }
        }
        false
    }

    fn star_run_clean(&self) -> bool {
        self.cur
            .iter()
            .rev()
            .take_while(|s| !s.is_zero())
            .all(|&s| s == TernarySymbol::Plus)
    }
}

impl Iterator for CanonicalSequences {
    type Item = TernarySequence;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        self.descend();
        loop {
            if self.star_run_clean() {
                return Some(TernarySequence::new(self.cur.clone()));
            }
            if !self.advance() {
                self.done = true;
                return None;
            }
            self.descend();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> TernarySequence {
        s.parse().unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(canonicalize(&seq("-+0*")), seq("+-0*"));
        assert_eq!(canonicalize(&seq("0-*")), seq("0+*"));
        assert_eq!(canonicalize(&seq("+-+*")), seq("+++*"));
        assert_eq!(canonicalize(&seq("00*")), seq("00*"));
        assert_eq!(canonicalize(&seq("*")), seq("*"));
        assert_eq!(canonicalize(&seq("-+-0+-+00-*")), seq("+--0++-00+*"));
    }

    #[test]
    fn canonical_examples() {
        assert!(is_canonical(&seq("+-0*")));
        assert!(!is_canonical(&seq("-+0*")));
        assert!(!is_canonical(&seq("+-*")));
        assert_eq!(canonicalize(&seq("+-*")), seq("++*"));
        assert!(is_canonical(&seq("*")));
        assert!(is_canonical(&seq("--0*")));
    }

    #[test]
    fn canonicalize_is_idempotent_and_canonical() {
        for len in 0..=8 {
            for s in all_sequences(len) {
                let c = canonicalize(&s);
                assert!(is_canonical(&c), "{s} -> {c}");
                assert_eq!(canonicalize(&c), c);
                assert_eq!(is_canonical(&s), c == s);
            }
        }
    }

    #[test]
    fn canonicalize_preserves_run_shape() {
        for len in 0..=8 {
            for s in all_sequences(len) {
                let c = canonicalize(&s);
                assert_eq!(s.nonzero_runs(), c.nonzero_runs());
                let star = s.star_run();
                for run in s.nonzero_runs() {
                    if Some(&run) == star.as_ref() {
                        continue;
                    }
                    let minus = |t: &TernarySequence| {
                        t.symbols()[run.clone()]
                            .iter()
                            .filter(|&&x| x == TernarySymbol::Minus)
                            .count()
                    };
                    assert_eq!(minus(&s), minus(&c));
                }
            }
        }
    }

    #[test]
    fn swaps() {
        assert_eq!(swap_equal_magnitude(&seq("+-0-*"), 1), Ok(seq("-+0-*")));
        assert_eq!(swap_equal_magnitude(&seq("++*"), 1), Ok(seq("++*")));
        assert_eq!(swap_equal_magnitude(&seq("00*"), 1), Ok(seq("00*")));
        assert!(matches!(
            swap_equal_magnitude(&seq("+0-*"), 1),
            Err(Error::SwapPrecondition { position: 1, .. })
        ));
        assert!(matches!(
            swap_equal_magnitude(&seq("+0-*"), 2),
            Err(Error::SwapPrecondition { position: 2, .. })
        ));
        assert!(swap_equal_magnitude(&seq("++*"), 0).is_err());
        assert!(swap_equal_magnitude(&seq("++*"), 2).is_err());
    }

    #[test]
    fn blocks() {
        let b = to_blocks(&seq("+-0+*"));
        assert_eq!(
            b.blocks(),
            &[Block {
                plus: 1,
                minus: 1,
                zeros: 1
            }]
        );
        assert_eq!(b.star_plus(), 1);

        let b = to_blocks(&seq("00*"));
        assert_eq!(
            b.blocks(),
            &[Block {
                plus: 0,
                minus: 0,
                zeros: 2
            }]
        );
        assert_eq!(b.star_plus(), 0);

        let empty = to_blocks(&seq("*"));
        assert!(empty.blocks().is_empty());
        assert_eq!(from_blocks(&empty), seq("*"));

        let bad = BlockForm::new(
            vec![
                Block {
                    plus: 1,
                    minus: 0,
                    zeros: 0,
                },
                Block {
                    plus: 0,
                    minus: 0,
                    zeros: 1,
                },
            ],
            0,
        );
        assert_eq!(bad, Err(Error::EmptyZeroRun { index: 2 }));
    }

    #[test]
    fn block_round_trip() {
        for len in 0..=6 {
            for s in all_sequences(len) {
                let b = to_blocks(&s);
                assert_eq!(b.symbol_count(), s.len());
                assert_eq!(from_blocks(&b), canonicalize(&s));
                if is_canonical(&s) {
                    assert_eq!(from_blocks(&b), s);
                }
            }
        }
    }

    #[test]
    fn enumerate_small() {
        let list = |n| {
            enumerate_canonical(n)
                .unwrap()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(list(1), ["*"]);
        assert_eq!(list(2), ["+*", "0*"]);
        assert_eq!(list(3), ["++*", "+0*", "-0*", "0+*", "00*"]);
        assert_eq!(enumerate_canonical(0).unwrap_err(), Error::NoVertices);
    }

    #[test]
    fn enumerate_matches_filtered_brute_force() {
        for n in 1..=9 {
            let fast: Vec<_> = enumerate_canonical(n).unwrap().collect();
            let slow: Vec<_> = all_sequences(n - 1).filter(is_canonical).collect();
            assert_eq!(fast, slow, "n = {n}");
        }
    }

    #[test]
    fn vertex_symbols() {
        let s = seq("+-0-*");
        assert_eq!(s.symbol_of_vertex(0), None);
        assert_eq!(s.symbol_of_vertex(1), Some(TernarySymbol::Minus));
        assert_eq!(s.symbol_of_vertex(2), Some(TernarySymbol::Zero));
        assert_eq!(s.symbol_of_vertex(4), Some(TernarySymbol::Plus));
        assert_eq!(s.symbol_of_vertex(5), None);
        assert_eq!(s.magnitudes(), seq("++0+*"));
    }
}
