//! Seeded random graphs and patterns for self-checks and tests. Everything
//! takes an explicit seed; there is no ambient randomness anywhere in the
//! crate.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::graph::LabeledGraph;

/// Default corpus shape: up to 30 nodes, 120 edges, 4 distinct labels,
/// sentinel-augmented when the draw left sources. The result always
/// validates ok.
pub fn random_graph(seed: u64) -> LabeledGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_graph_with(&mut rng, 30, 120, 4)
}

/// Random graph with explicit bounds. Labels are drawn from the first
/// `sigma` letters starting at `a`; node and edge counts are uniform in
/// `1..=max_n` and `0..=max_e`. Graphs left with in-degree-zero nodes are
/// sentinel-augmented, so callers always get a valid graph (of at most
/// `max_n + 1` nodes).
pub fn random_graph_with(
    rng: &mut impl Rng,
    max_n: usize,
    max_e: usize,
    sigma: usize,
) -> LabeledGraph {
    let n = rng.random_range(1..=max_n);
    let sigma = sigma.clamp(1, 26);
    let labels: Vec<char> = (0..n)
        .map(|_| char::from(b'a' + rng.random_range(0..sigma) as u8))
        .collect();
    let e = rng.random_range(0..=max_e.min(n * n));
    let edges: Vec<(usize, usize)> = (0..e)
        .map(|_| (rng.random_range(0..n), rng.random_range(0..n)))
        .collect();
    let g = LabeledGraph::new(labels, edges).expect("ids in range by construction");
    if g.validate().ok() {
        g
    } else {
        g.augment_with_sentinel().expect("no sentinel drawn")
    }
}

/// Random pattern of length `1..=max_len` over the given alphabet. With a
/// small probability a position takes `foreign` instead, to exercise
/// zero-length extension steps.
pub fn random_pattern(
    rng: &mut impl Rng,
    alphabet: &[char],
    max_len: usize,
    foreign: Option<char>,
) -> String {
    let len = rng.random_range(1..=max_len.max(1));
    (0..len)
        .map(|_| match foreign {
            Some(f) if rng.random_range(0..20) == 0 => f,
            _ => alphabet[rng.random_range(0..alphabet.len())],
        })
        .collect()
}

/// The non-sentinel symbols present in a graph, sorted and deduplicated;
/// the usual alphabet for pattern draws.
pub fn pattern_alphabet(g: &LabeledGraph) -> Vec<char> {
    let mut alpha: Vec<char> = g
        .labels()
        .iter()
        .copied()
        .filter(|&c| c != crate::graph::SENTINEL)
        .collect();
    alpha.sort_unstable();
    alpha.dedup();
    if alpha.is_empty() {
        alpha.push('a');
    }
    alpha
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graphs_are_valid_and_reproducible() {
        for seed in 0..50 {
            let g = random_graph(seed);
            assert!(g.validate().ok(), "seed {seed}");
            assert!(g.n() <= 31);
            assert_eq!(g, random_graph(seed));
        }
    }

    #[test]
    fn patterns_respect_alphabet() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let p = random_pattern(&mut rng, &['a', 'b'], 10, Some('#'));
            assert!(!p.is_empty() && p.len() <= 10);
            assert!(p.chars().all(|c| c == 'a' || c == 'b' || c == '#'));
        }
    }
}
