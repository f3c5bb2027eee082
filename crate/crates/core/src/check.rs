//! Self-check harness: every construction is compared against its
//! definition-level counterpart. This backs `colex check` and the
//! end-to-end test suite.
//!
//! Distinct item strings must differ within their first `2n+1` symbols, so
//! prefixes of length `2n+2` decide every comparison and every finite LCP;
//! all checks below expand prefixes at that length.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::corpus;
use crate::graph::LabeledGraph;
use crate::lcp::{lcp_pair, LcpValue};
use crate::ms::{matching_statistics_naive, MsIndex};
use crate::order::{max_string_prefix, min_string_prefix, Item, JointColexOrder};
use crate::width::{node_compare, NodeOrdering};
use crate::{Error, Result};

/// A failed check, with enough context to replay it.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CheckFailure {
    OrderMismatch {
        item_a: (usize, String),
        item_b: (usize, String),
        prefix_a: String,
        prefix_b: String,
        rank_a: u32,
        rank_b: u32,
    },
    RoundsExceeded {
        rounds: usize,
        limit: usize,
    },
    LcpMismatch {
        item_a: (usize, String),
        item_b: (usize, String),
        expected: Option<u32>,
        got: Option<u32>,
    },
    LcpOutOfBounds {
        item_a: (usize, String),
        item_b: (usize, String),
        value: u32,
        bound: u32,
    },
    RmqMismatch {
        pos_a: usize,
        pos_b: usize,
        by_rmq: Option<u32>,
        by_walk: Option<u32>,
    },
    MsMismatch {
        pattern: String,
        position: usize,
        expected: usize,
        got: usize,
    },
    ConvexityViolation {
        pattern: String,
        window: (usize, usize),
        detail: String,
    },
}

impl std::fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match serde_json::to_string(self) {
            Ok(s) => f.write_str(&s),
            Err(_) => write!(f, "{self:?}"),
        }
    }
}

/// Aggregate result of [`run_checks`]. `failure` is `None` iff all checks
/// passed; counters report how much work was done either way.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub patterns_total: usize,
    pub patterns_ok: usize,
    pub order_ok: bool,
    pub rmq_ok: bool,
    pub convexity_ok: bool,
    pub failure: Option<CheckFailure>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    /// One-line summary, e.g. `ms:50/50 order:ok rmq:ok convexity:ok`.
    pub fn summary(&self) -> String {
        let flag = |ok: bool| if ok { "ok" } else { "FAIL" };
        format!(
            "ms:{}/{} order:{} rmq:{} convexity:{}",
            self.patterns_ok,
            self.patterns_total,
            flag(self.order_ok),
            flag(self.rmq_ok),
            flag(self.convexity_ok),
        )
    }
}

fn item_desc(it: Item) -> (usize, String) {
    (it.node, it.side.as_str().to_string())
}

/// Expand the min/max prefixes of every item at length `2n+2`.
pub fn oracle_prefixes(g: &LabeledGraph, len: usize) -> Result<Vec<String>> {
    let mut prefixes = Vec::with_capacity(2 * g.n());
    for u in 0..g.n() {
        prefixes.push(min_string_prefix(g, u, len)?);
        prefixes.push(max_string_prefix(g, u, len)?);
    }
    Ok(prefixes)
}

fn prefix_of<'a>(prefixes: &'a [String], it: Item) -> &'a str {
    &prefixes[it.node * 2 + it.side as usize]
}

/// Check that ranks agree with lexicographic comparison of prefix expansions
/// on every item pair, and that refinement converged within `2n` rounds.
pub fn check_order(g: &LabeledGraph, o: &JointColexOrder) -> Result<Option<CheckFailure>> {
    let n = g.n();
    if o.rounds() > 2 * n {
        return Ok(Some(CheckFailure::RoundsExceeded {
            rounds: o.rounds(),
            limit: 2 * n,
        }));
    }
    let prefixes = oracle_prefixes(g, 2 * n + 2)?;
    let items: Vec<Item> = o.sorted().to_vec();
    for (ai, &a) in items.iter().enumerate() {
        for &b in &items[ai + 1..] {
            let by_rank = o.rank(a).cmp(&o.rank(b));
            let by_prefix = prefix_of(&prefixes, a).cmp(prefix_of(&prefixes, b));
            if by_rank != by_prefix {
                return Ok(Some(CheckFailure::OrderMismatch {
                    item_a: item_desc(a),
                    item_b: item_desc(b),
                    prefix_a: prefix_of(&prefixes, a).to_string(),
                    prefix_b: prefix_of(&prefixes, b).to_string(),
                    rank_a: o.rank(a),
                    rank_b: o.rank(b),
                }));
            }
        }
    }
    Ok(None)
}

/// LCP of two prefix expansions of length `2n+2`: agreement over the full
/// length means equal strings, i.e. infinity.
pub fn prefix_lcp(a: &str, b: &str) -> LcpValue {
    let agree = a
        .chars()
        .zip(b.chars())
        .take_while(|(x, y)| x == y)
        .count();
    if agree == a.chars().count() && agree == b.chars().count() {
        LcpValue::Infinite
    } else {
        LcpValue::Finite(agree as u32)
    }
}

/// Check `lcp_pair` against prefix expansions on every adjacent pair plus
/// `random_pairs` random ones, the `<= 2n+1` bound on finite values, and the
/// range-minimum identity `lcp_between == lcp_pair` on random position
/// pairs.
pub fn check_lcp(
    g: &LabeledGraph,
    index: &MsIndex,
    random_pairs: usize,
    seed: u64,
) -> Result<Option<CheckFailure>> {
    let o = index.order();
    let n = g.n();
    let bound = 2 * n as u32 + 1;
    let prefixes = oracle_prefixes(g, 2 * n + 2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let sorted = o.sorted();
    let mut pairs: Vec<(usize, usize)> = (1..sorted.len()).map(|i| (i - 1, i)).collect();
    for _ in 0..random_pairs {
        let a = rng.random_range(0..sorted.len());
        let b = rng.random_range(0..sorted.len());
        if a != b {
            pairs.push((a.min(b), a.max(b)));
        }
    }

    for (pa, pb) in pairs {
        let (a, b) = (sorted[pa], sorted[pb]);
        let expected = prefix_lcp(prefix_of(&prefixes, a), prefix_of(&prefixes, b));
        let got = lcp_pair(o, a, b)?;
        if got != expected {
            return Ok(Some(CheckFailure::LcpMismatch {
                item_a: item_desc(a),
                item_b: item_desc(b),
                expected: expected.into(),
                got: got.into(),
            }));
        }
        if let LcpValue::Finite(v) = got {
            if v > bound {
                return Ok(Some(CheckFailure::LcpOutOfBounds {
                    item_a: item_desc(a),
                    item_b: item_desc(b),
                    value: v,
                    bound,
                }));
            }
        }
        let by_rmq = index.lcp().lcp_between(pa, pb)?;
        if by_rmq != got {
            return Ok(Some(CheckFailure::RmqMismatch {
                pos_a: pa,
                pos_b: pb,
                by_rmq: by_rmq.into(),
                by_walk: got.into(),
            }));
        }
    }
    Ok(None)
}

/// Exact occurrence set of `x` by walk simulation, independent of the index.
pub fn occurrence_set_naive(g: &LabeledGraph, x: &[char]) -> Vec<bool> {
    let n = g.n();
    if x.is_empty() {
        return vec![true; n];
    }
    let mut current: Vec<bool> = (0..n).map(|u| g.label(u) == x[0]).collect();
    for &c in &x[1..] {
        let mut next = vec![false; n];
        for u in 0..n {
            if current[u] {
                for &v in g.out(u) {
                    if g.label(v) == c {
                        next[v] = true;
                    }
                }
            }
        }
        current = next;
    }
    current
}

/// Run one pattern through the index sweep, comparing the result with the
/// naive matching statistics and auditing every intermediate window: its
/// occurrence set must equal the naive set exactly, stay contiguous within
/// each chain, and use at most `p` segments.
pub fn check_pattern(index: &MsIndex, w: &str) -> Result<Option<CheckFailure>> {
    let g = index.graph();
    let chars: Vec<char> = w.chars().collect();
    let mut violation: Option<CheckFailure> = None;
    let values = index.sweep(&chars, |i, j, occ| {
        if violation.is_some() {
            return Ok(());
        }
        let naive = occurrence_set_naive(g, &chars[i..j]);
        let mut mismatch = None;
        for u in 0..g.n() {
            let in_occ = occ.contains(index.chains(), u);
            if in_occ != naive[u] {
                mismatch = Some(format!(
                    "node {u} {} the segment form but {} the naive set",
                    if in_occ { "is in" } else { "is not in" },
                    if naive[u] { "is in" } else { "is not in" },
                ));
                break;
            }
        }
        if mismatch.is_none() && occ.segment_count() > index.p() {
            mismatch = Some(format!(
                "{} segments exceed the width {}",
                occ.segment_count(),
                index.p()
            ));
        }
        if let Some(detail) = mismatch {
            violation = Some(CheckFailure::ConvexityViolation {
                pattern: w.to_string(),
                window: (i, j),
                detail,
            });
        }
        Ok(())
    });
    // A convexity violation detected inside occurrence_step surfaces as an
    // internal error; report it as a counterexample instead of bubbling up.
    let values = match values {
        Ok(v) => v,
        Err(Error::Internal(detail)) => {
            return Ok(Some(violation.unwrap_or(CheckFailure::ConvexityViolation {
                pattern: w.to_string(),
                window: (0, 0),
                detail,
            })));
        }
        Err(e) => return Err(e),
    };
    if let Some(v) = violation {
        return Ok(Some(v));
    }
    let expected = matching_statistics_naive(g, w);
    for (i, (&got, &want)) in values.iter().zip(expected.iter()).enumerate() {
        if got != want {
            return Ok(Some(CheckFailure::MsMismatch {
                pattern: w.to_string(),
                position: i,
                expected: want,
                got,
            }));
        }
    }
    Ok(None)
}

/// Maximum antichain size by exhaustive search, for cross-checking the
/// width on small graphs (intended for `n <= 16` or so).
pub fn max_antichain_exhaustive(o: &JointColexOrder) -> Result<usize> {
    let n = o.n();
    let mut comparable = vec![vec![false; n]; n];
    for u in 0..n {
        for v in 0..n {
            if u != v {
                comparable[u][v] = node_compare(o, u, v)? != NodeOrdering::Incomparable;
            }
        }
    }
    fn grow(
        next: usize,
        chosen: &mut Vec<usize>,
        best: &mut usize,
        comparable: &[Vec<bool>],
    ) {
        *best = (*best).max(chosen.len());
        for u in next..comparable.len() {
            if chosen.iter().all(|&c| !comparable[c][u]) {
                chosen.push(u);
                grow(u + 1, chosen, best, comparable);
                chosen.pop();
            }
        }
    }
    let mut best = 0;
    grow(0, &mut Vec::new(), &mut best, &comparable);
    Ok(best)
}

/// Build an index for the graph and run the full battery: order vs prefix
/// expansion, LCP/RMQ agreement, and `n_patterns` seeded random patterns
/// through the sweep with per-window audits. Stops at the first failure.
pub fn run_checks(g: &LabeledGraph, n_patterns: usize, seed: u64) -> Result<CheckReport> {
    let index = MsIndex::build(g)?;
    let mut report = CheckReport {
        patterns_total: n_patterns,
        patterns_ok: 0,
        order_ok: false,
        rmq_ok: false,
        convexity_ok: true,
        failure: None,
    };

    if let Some(f) = check_order(g, index.order())? {
        report.failure = Some(f);
        return Ok(report);
    }
    report.order_ok = true;

    if let Some(f) = check_lcp(g, &index, 1000, seed ^ 0x9e37_79b9)? {
        report.failure = Some(f);
        return Ok(report);
    }
    report.rmq_ok = true;

    let alphabet = corpus::pattern_alphabet(g);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..n_patterns {
        let w = corpus::random_pattern(&mut rng, &alphabet, 40, Some('~'));
        match check_pattern(&index, &w)? {
            None => report.patterns_ok += 1,
            Some(f) => {
                if matches!(f, CheckFailure::ConvexityViolation { .. }) {
                    report.convexity_ok = false;
                }
                report.failure = Some(f);
                return Ok(report);
            }
        }
    }
    Ok(report)
}
