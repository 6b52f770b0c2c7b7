//! Exhaustive cross-checks between the constructive routes and the
//! brute-force oracles, sized by a single vertex bound.

use num_bigint::BigUint;

use crate::construction::{build_from_weights, dtg_build, realize_weights, threshold_build};
use crate::enumeration::{
    brute_count_classes, brute_orientation_classes, count_classes, count_transitive_orientations,
    enumerate_orientation_classes, fibonacci,
};
use crate::graph::{are_isomorphic_bruteforce, is_switch_free, oriented_graphs, undirected_graphs};
use crate::recognition::{
    check_properly_nested, displit_partition, extract_sequence, is_threshold_undirected, recognize,
};
use crate::sequence::{all_sequences, canonicalize, enumerate_canonical};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: &'static str,
    /// Largest vertex count actually covered.
    pub max_n: usize,
    pub passed: bool,
    pub detail: String,
}

impl std::fmt::Display for CheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let verdict = if self.passed { "ok" } else { "FAIL" };
        write!(
            f,
            "{verdict} {} (n <= {}): {}",
            self.name, self.max_n, self.detail
        )
    }
}

type Check = fn(usize) -> std::result::Result<String, String>;

/// Name, cap on `n`, and body of every check.
const CHECKS: [(&str, usize, Check); 9] = [
    ("recognizer agreement", 5, recognizers_agree),
    ("switch-free threshold", 6, switch_free_matches),
    ("brute-force class count", 5, brute_counts_match),
    ("canonical enumeration count", 12, enumeration_counts_match),
    ("odd-indexed fibonacci", 20, fibonacci_matches),
    ("canonical form soundness", 6, canonical_sound),
    ("canonical form injectivity", 5, canonical_injective),
    ("weight realization round trip", 9, weights_round_trip),
    (
        "transitive orientation classes",
        6,
        orientation_classes_match,
    ),
];

/// Runs every check on graphs with at most `max_n` vertices (each check is
/// further capped at what brute force can cover).
pub fn run(max_n: usize) -> Vec<CheckReport> {
    CHECKS
        .iter()
        .map(|&(name, cap, check)| {
            let n = max_n.min(cap).max(1);
            let (passed, detail) = match check(n) {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckReport {
                name,
                max_n: n,
                passed,
                detail,
            }
        })
        .collect()
}

fn recognizers_agree(max_n: usize) -> Result<String, String> {
    let mut graphs = 0usize;
    let mut members = 0usize;
    for n in 1..=max_n {
        for g in oriented_graphs(n) {
            graphs += 1;
            let by_b = recognize(&g);
            let by_d = extract_sequence(&g).is_some();
            let by_c =
                displit_partition(&g).is_some_and(|p| check_properly_nested(&g, &p) == Ok(true));
            if by_b != by_d || by_b != by_c {
                return Err(format!("disagreement on {:?}", g.arcs()));
            }
            members += by_b as usize;
        }
    }
    Ok(format!("{graphs} graphs, {members} members"))
}

fn switch_free_matches(max_n: usize) -> Result<String, String> {
    let mut graphs = 0usize;
    for n in 1..=max_n {
        for g in undirected_graphs(n) {
            graphs += 1;
            if is_switch_free(&g) != is_threshold_undirected(&g) {
                return Err(format!("disagreement on {:?}", g.edges()));
            }
        }
    }
    Ok(format!("{graphs} graphs"))
}

fn brute_counts_match(max_n: usize) -> Result<String, String> {
    let mut seen = Vec::new();
    for n in 1..=max_n {
        let brute = brute_count_classes(n).map_err(|e| e.to_string())?.count;
        let rec = count_classes(n).map_err(|e| e.to_string())?.count;
        if brute != rec {
            return Err(format!("n = {n}: recurrence {rec}, brute force {brute}"));
        }
        seen.push(rec.to_string());
    }
    Ok(seen.join(", "))
}

fn enumeration_counts_match(max_n: usize) -> Result<String, String> {
    for n in 1..=max_n {
        let listed = enumerate_canonical(n).map_err(|e| e.to_string())?.count();
        let rec = count_classes(n).map_err(|e| e.to_string())?.count;
        if BigUint::from(listed) != rec {
            return Err(format!("n = {n}: recurrence {rec}, listed {listed}"));
        }
    }
    Ok("all equal".into())
}

fn fibonacci_matches(max_n: usize) -> Result<String, String> {
    for n in 1..=max_n {
        let rec = count_classes(n).map_err(|e| e.to_string())?.count;
        if rec != fibonacci(2 * n - 1) {
            return Err(format!("n = {n}: {rec} != F_{}", 2 * n - 1));
        }
    }
    Ok("T(n) = F(2n-1)".into())
}

fn canonical_sound(max_n: usize) -> Result<String, String> {
    let mut count = 0usize;
    for len in 0..max_n {
        for s in all_sequences(len) {
            count += 1;
            if !are_isomorphic_bruteforce(&dtg_build(&s), &dtg_build(&canonicalize(&s))) {
                return Err(format!("{s} is not isomorphic to its canonical form"));
            }
        }
    }
    Ok(format!("{count} sequences"))
}

fn canonical_injective(max_n: usize) -> Result<String, String> {
    let mut count = 0usize;
    for n in 1..=max_n {
        let canon: Vec<_> = enumerate_canonical(n).map_err(|e| e.to_string())?.collect();
        let built: Vec<_> = canon.iter().map(dtg_build).collect();
        for i in 0..built.len() {
            for j in i + 1..built.len() {
                if are_isomorphic_bruteforce(&built[i], &built[j]) {
                    return Err(format!("{} and {} are isomorphic", canon[i], canon[j]));
                }
            }
        }
        count += canon.len();
    }
    Ok(format!("{count} canonical sequences"))
}

fn weights_round_trip(max_n: usize) -> Result<String, String> {
    let mut count = 0usize;
    for len in 0..max_n {
        for s in all_sequences(len) {
            count += 1;
            if build_from_weights(&realize_weights(&s)) != dtg_build(&s) {
                return Err(format!("{s}: weights build a different graph"));
            }
        }
    }
    Ok(format!("{count} sequences"))
}

fn orientation_classes_match(max_n: usize) -> Result<String, String> {
    let mut count = 0usize;
    for len in 0..max_n {
        for b in all_sequences(len).filter(|s| !s.contains_minus()) {
            count += 1;
            let formula = count_transitive_orientations(&b).map_err(|e| e.to_string())?;
            let brute = brute_orientation_classes(&b).map_err(|e| e.to_string())?;
            let listed = enumerate_orientation_classes(&b).map_err(|e| e.to_string())?;
            if formula != BigUint::from(brute.len()) || listed.len() != brute.len() {
                return Err(format!(
                    "{b}: formula {formula}, listed {}, brute force {}",
                    listed.len(),
                    brute.len()
                ));
            }
            let covered = brute.iter().all(|o| {
                listed
                    .iter()
                    .filter(|s| are_isomorphic_bruteforce(&dtg_build(s), o))
                    .count()
                    == 1
            });
            if !covered
                || listed
                    .iter()
                    .any(|s| dtg_build(s).underlying() != threshold_build(&b))
            {
                return Err(format!("{b}: listed classes do not match brute force"));
            }
        }
    }
    Ok(format!("{count} binary sequences"))
}
