//! Counting isomorphism classes and transitive orientations.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::construction::threshold_build;
use crate::error::{Error, Result};
use crate::graph::{
    are_isomorphic_bruteforce, is_transitive, orientations, oriented_graphs, OrientedGraph,
};
use crate::recognition::recognize;
use crate::sequence::{to_blocks, TernarySequence, TernarySymbol};

/// Largest `n` accepted by [`brute_count_classes`] (`3^10` labelled graphs).
pub const MAX_BRUTE_CLASSES_N: usize = 5;

/// Largest vertex count accepted by [`brute_orientation_classes`].
pub const MAX_BRUTE_ORIENTATIONS_N: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCount {
    pub n: usize,
    pub count: BigUint,
}

/// Number of isomorphism classes on `n` vertices, from
/// `T(n) = 3 T(n-1) - T(n-2)` with `T(1) = 1`, `T(2) = 2`.
///
/// Appending `0` or `+` to a canonical sequence always keeps it canonical,
/// `-` only when it does not start with `+`, and the sequences starting with
/// `+` are exactly the `T(n-1)` extensions of shorter ones.
pub fn count_classes(n: usize) -> Result<ClassCount> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    let three = BigUint::from(3u32);
    let (mut prev, mut cur) = (BigUint::one(), BigUint::one());
    if n >= 2 {
        cur = BigUint::from(2u32);
        for _ in 3..=n {
            let next = &three * &cur - &prev;
            prev = std::mem::replace(&mut cur, next);
        }
    }
    Ok(ClassCount { n, count: cur })
}

/// `F_k` with `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci(k: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..k {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Picks one representative per brute-force isomorphism class.
pub fn isomorphism_classes<I>(graphs: I) -> Vec<OrientedGraph>
where
    I: IntoIterator<Item = OrientedGraph>,
{
    let mut reps: Vec<OrientedGraph> = Vec::new();
    for g in graphs {
        if !reps.iter().any(|r| are_isomorphic_bruteforce(r, &g)) {
            reps.push(g);
        }
    }
    reps
}

/// Counts classes by enumerating every oriented graph on `n` labelled
/// vertices, keeping members and merging isomorphic ones.
pub fn brute_count_classes(n: usize) -> Result<ClassCount> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if n > MAX_BRUTE_CLASSES_N {
        return Err(Error::TooLarge {
            n,
            max: MAX_BRUTE_CLASSES_N,
        });
    }
    let reps = isomorphism_classes(oriented_graphs(n).filter(recognize));
    Ok(ClassCount {
        n,
        count: BigUint::from(reps.len()),
    })
}

fn require_binary(b: &TernarySequence) -> Result<()> {
    if b.contains_minus() {
        Err(Error::ContainsMinus)
    } else {
        Ok(())
    }
}

/// `∏ (p_i + 1)` over the blocks separated from `*` by a zero.
pub fn count_transitive_orientations(b: &TernarySequence) -> Result<BigUint> {
    require_binary(b)?;
    Ok(to_blocks(b)
        .blocks()
        .iter()
        .map(|blk| BigUint::from(blk.plus + 1))
        .product())
}

/// One canonical sequence per transitive orientation class of
/// `threshold_build(b)`: each block independently turns a suffix of its
/// pluses into minuses. Sorted lexicographically.
pub fn enumerate_orientation_classes(b: &TernarySequence) -> Result<Vec<TernarySequence>> {
    require_binary(b)?;
    let blocks = to_blocks(b);
    let mut out = vec![Vec::with_capacity(b.len())];
    for blk in blocks.blocks() {
        let mut next = Vec::with_capacity(out.len() * (blk.plus + 1));
        for prefix in &out {
            for minus in 0..=blk.plus {
                let mut s: Vec<TernarySymbol> = prefix.clone();
                s.extend(std::iter::repeat_n(TernarySymbol::Plus, blk.plus - minus));
                s.extend(std::iter::repeat_n(TernarySymbol::Minus, minus));
                s.extend(std::iter::repeat_n(TernarySymbol::Zero, blk.zeros));
                next.push(s);
            }
        }
        out = next;
    }
    let mut seqs: Vec<TernarySequence> = out
        .into_iter()
        .map(|mut s| {
            s.extend(std::iter::repeat_n(TernarySymbol::Plus, blocks.star_plus()));
            TernarySequence::new(s)
        })
        .collect();
    seqs.sort();
    Ok(seqs)
}

/// Class representatives among all `2^|E|` orientations of
/// `threshold_build(b)` that are transitive.
pub fn brute_orientation_classes(b: &TernarySequence) -> Result<Vec<OrientedGraph>> {
    require_binary(b)?;
    let n = b.vertex_count();
    if n > MAX_BRUTE_ORIENTATIONS_N {
        return Err(Error::TooLarge {
            n,
            max: MAX_BRUTE_ORIENTATIONS_N,
        });
    }
    let g = threshold_build(b);
    Ok(isomorphism_classes(orientations(&g).filter(is_transitive)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::dtg_build;
    use crate::sequence::{all_sequences, enumerate_canonical, is_canonical};

    fn seq(s: &str) -> TernarySequence {
        s.parse().unwrap()
    }

    fn count(n: usize) -> u64 {
        count_classes(n).unwrap().count.try_into().unwrap()
    }

    #[test]
    fn class_counts() {
        assert_eq!(count(1), 1);
        assert_eq!(count(2), 2);
        assert_eq!(count(3), 5);
        assert_eq!(count(5), 34);
        assert_eq!(count_classes(0), Err(Error::NoVertices));
        assert_eq!(count_classes(7).unwrap().n, 7);
    }

    #[test]
    fn brute_counts() {
        let brute = |n| -> u64 { brute_count_classes(n).unwrap().count.try_into().unwrap() };
        assert_eq!(brute(1), 1);
        assert_eq!(brute(2), 2);
        assert_eq!(brute(3), 5);
        assert_eq!(brute(4), 13);
        assert_eq!(
            brute_count_classes(6),
            Err(Error::TooLarge { n: 6, max: 5 })
        );
    }

    #[test]
    fn fibonacci_values() {
        let f = |k| -> u64 { fibonacci(k).try_into().unwrap() };
        assert_eq!((f(0), f(1), f(6), f(9)), (0, 1, 8, 34));
        assert_eq!(fibonacci(100).to_string(), "354224848179261915075");
    }

    #[test]
    fn counts_are_odd_indexed_fibonacci() {
        // With F_0 = 0, F_1 = 1 this is F_{2n-1}, not F_{2n}.
        for n in 1..=20 {
            assert_eq!(count_classes(n).unwrap().count, fibonacci(2 * n - 1));
        }
    }

    #[test]
    fn counts_match_enumeration() {
        for n in 1..=12 {
            let listed = enumerate_canonical(n).unwrap().count();
            assert_eq!(BigUint::from(listed), count_classes(n).unwrap().count);
        }
    }

    #[test]
    fn leading_plus_sequences_extend_shorter_ones() {
        for n in 2..=11 {
            let plus_first = enumerate_canonical(n)
                .unwrap()
                .filter(|s| s.symbols().first() == Some(&TernarySymbol::Plus))
                .count();
            assert_eq!(
                BigUint::from(plus_first),
                count_classes(n - 1).unwrap().count
            );
        }
    }

    #[test]
    fn orientation_examples() {
        let c = |s: &str| -> u64 {
            count_transitive_orientations(&seq(s))
                .unwrap()
                .try_into()
                .unwrap()
        };
        assert_eq!(c("+0*"), 2);
        assert_eq!(c("++*"), 1);
        assert_eq!(c("++0+0*"), 6);
        assert_eq!(c("*"), 1);
        assert_eq!(
            count_transitive_orientations(&seq("+-0*")),
            Err(Error::ContainsMinus)
        );

        let list = |s: &str| -> Vec<String> {
            enumerate_orientation_classes(&seq(s))
                .unwrap()
                .iter()
                .map(|t| t.to_string())
                .collect()
        };
        assert_eq!(list("+0*"), ["+0*", "-0*"]);
        assert_eq!(list("00*"), ["00*"]);
        assert_eq!(list("++*"), ["++*"]);
        assert_eq!(
            list("++0+0*"),
            ["++0+0*", "++0-0*", "+-0+0*", "+-0-0*", "--0+0*", "--0-0*"]
        );
        assert_eq!(
            enumerate_orientation_classes(&seq("-*")),
            Err(Error::ContainsMinus)
        );
    }

    #[test]
    fn orientation_classes_match_brute_force() {
        for len in 0..=5 {
            for b in all_sequences(len).filter(|s| !s.contains_minus()) {
                let emitted = enumerate_orientation_classes(&b).unwrap();
                assert_eq!(
                    BigUint::from(emitted.len()),
                    count_transitive_orientations(&b).unwrap()
                );
                let built: Vec<_> = emitted.iter().map(dtg_build).collect();
                for (s, g) in emitted.iter().zip(&built) {
                    assert!(is_canonical(s));
                    assert!(is_transitive(g));
                    assert_eq!(g.underlying(), threshold_build(&b));
                }
                for i in 0..built.len() {
                    for j in i + 1..built.len() {
                        assert!(!are_isomorphic_bruteforce(&built[i], &built[j]), "{b}");
                    }
                }
                for o in brute_orientation_classes(&b).unwrap() {
                    let hits = built
                        .iter()
                        .filter(|g| are_isomorphic_bruteforce(g, &o))
                        .count();
                    assert_eq!(hits, 1, "{b}: {o:?}");
                }
                assert_eq!(brute_orientation_classes(&b).unwrap().len(), emitted.len());
            }
        }
    }
}
