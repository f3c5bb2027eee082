//! Matching statistics of a pattern against the graph.
//!
//! "x occurs in G" means some directed walk `v_1 -> ... -> v_k` satisfies
//! `label(v_1)...label(v_k) = x`; the occurrence set `I(x)` collects the
//! walk endpoints `v_k`. For every start position `i` of a pattern `w`, the
//! matching statistic is the length of the longest prefix of `w[i..]` that
//! occurs in the graph.
//!
//! `I(x)` intersects every chain of the [`ChainDecomposition`] in a
//! contiguous run: if `u < v < w` along a chain and walks spelling the
//! reversal of `x` leave `u` and `w` backward, then `min_v` is squeezed
//! between two strings sharing that reversed prefix and must share it too.
//! An [`OccurrenceSet`] therefore stores at most one `[lo, hi]` position
//! range per chain, at most `p` segments in total, and
//! [`MsIndex::occurrence_step`] re-derives the ranges after every extension
//! (and verifies the contiguity rather than assuming it).
//!
//! The sweep keeps a window `[i, j)` whose occurrence set is nonempty,
//! extends `j` while possible, records `j - i`, and recomputes the set from
//! scratch when the window start advances. The recomputation keeps the
//! engine honest at desk scale; the asymptotically fast update rule is out
//! of scope here.

use std::collections::BTreeMap;

use crate::graph::{LabeledGraph, NodeId};
use crate::lcp::LcpArrays;
use crate::order::{compute_joint_order, JointColexOrder};
use crate::width::{compute_width, ChainDecomposition};
use crate::{Error, Result};

/// Immutable bundle of everything needed to answer queries: the graph, its
/// joint order, LCP arrays, chain cover, and label-indexed adjacency.
#[derive(Debug, Clone)]
pub struct MsIndex {
    graph: LabeledGraph,
    order: JointColexOrder,
    lcp: LcpArrays,
    chains: ChainDecomposition,
    /// `label_out[u][c]` = out-neighbors of `u` labeled `c`.
    label_out: Vec<BTreeMap<char, Vec<NodeId>>>,
}

impl MsIndex {
    /// Build every component from a validated graph.
    pub fn build(graph: &LabeledGraph) -> Result<Self> {
        if graph.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        graph.validate().into_result()?;
        let order = compute_joint_order(graph)?;
        let lcp = LcpArrays::build(&order)?;
        let chains = compute_width(&order)?;
        Ok(Self::assemble(graph.clone(), order, lcp, chains))
    }

    pub(crate) fn assemble(
        graph: LabeledGraph,
        order: JointColexOrder,
        lcp: LcpArrays,
        chains: ChainDecomposition,
    ) -> Self {
        let mut label_out: Vec<BTreeMap<char, Vec<NodeId>>> = vec![BTreeMap::new(); graph.n()];
        for u in 0..graph.n() {
            for &v in graph.out(u) {
                label_out[u]
                    .entry(graph.label(v))
                    .or_default()
                    .push(v);
            }
        }
        MsIndex {
            graph,
            order,
            lcp,
            chains,
            label_out,
        }
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn order(&self) -> &JointColexOrder {
        &self.order
    }

    pub fn lcp(&self) -> &LcpArrays {
        &self.lcp
    }

    pub fn chains(&self) -> &ChainDecomposition {
        &self.chains
    }

    pub fn p(&self) -> usize {
        self.chains.p()
    }

    /// Occurrence set of the empty string: every node, i.e. every chain in
    /// full.
    pub fn all_nodes(&self) -> OccurrenceSet {
        let segments = self
            .chains
            .chains()
            .iter()
            .map(|chain| {
                if chain.is_empty() {
                    None
                } else {
                    Some((0, chain.len() - 1))
                }
            })
            .collect();
        OccurrenceSet {
            segments,
            count: self.graph.n(),
        }
    }

    /// Extend an occurrence set by one symbol: the nodes labeled `c` with an
    /// in-neighbor in `s`, regrouped into per-chain segments. Contiguity per
    /// chain is checked, not assumed; a gap would mean a broken order or
    /// cover and is reported as an internal failure.
    pub fn occurrence_step(&self, s: &OccurrenceSet, c: char) -> Result<OccurrenceSet> {
        let mut marked = vec![false; self.graph.n()];
        let mut count = 0usize;
        for u in s.nodes(&self.chains) {
            if let Some(next) = self.label_out[u].get(&c) {
                for &v in next {
                    if !marked[v] {
                        marked[v] = true;
                        count += 1;
                    }
                }
            }
        }
        self.segments_from_marks(&marked, count)
    }

    fn segments_from_marks(&self, marked: &[bool], count: usize) -> Result<OccurrenceSet> {
        let mut segments = Vec::with_capacity(self.chains.p());
        for chain in self.chains.chains() {
            let mut lo = None;
            let mut hi = None;
            let mut in_chain = 0usize;
            for (i, &u) in chain.iter().enumerate() {
                if marked[u] {
                    if lo.is_none() {
                        lo = Some(i);
                    }
                    hi = Some(i);
                    in_chain += 1;
                }
            }
            match (lo, hi) {
                (Some(lo), Some(hi)) => {
                    if hi - lo + 1 != in_chain {
                        return Err(Error::Internal(format!(
                            "occurrence set not contiguous in chain {:?}: {} hits span [{lo}, {hi}]",
                            chain, in_chain
                        )));
                    }
                    segments.push(Some((lo, hi)));
                }
                _ => segments.push(None),
            }
        }
        Ok(OccurrenceSet { segments, count })
    }

    /// Occurrence set of a whole string, folding [`Self::occurrence_step`]
    /// from the all-nodes set.
    pub fn occurrence_set(&self, x: &str) -> Result<OccurrenceSet> {
        let mut s = self.all_nodes();
        for c in x.chars() {
            if s.is_empty() {
                break;
            }
            s = self.occurrence_step(&s, c)?;
        }
        Ok(s)
    }

    /// Whether some walk spells `q`. The empty pattern occurs trivially.
    pub fn occurs(&self, q: &str) -> Result<bool> {
        Ok(!self.occurrence_set(q)?.is_empty())
    }

    /// Matching statistics of `w`: `values[i]` is the length of the longest
    /// prefix of `w[i..]` spelled by some walk. Symbols absent from the
    /// graph simply never extend a match.
    pub fn matching_statistics(&self, w: &str) -> Result<Vec<usize>> {
        self.sweep(&w.chars().collect::<Vec<_>>(), |_, _, _| Ok(()))
    }

    /// Two-pointer sweep over the pattern. `on_window(i, j, set)` is invoked
    /// for every window `[i, j)` the sweep holds, with its occurrence set;
    /// the self-check harness uses this to audit every intermediate state.
    pub(crate) fn sweep<F>(&self, w: &[char], mut on_window: F) -> Result<Vec<usize>>
    where
        F: FnMut(usize, usize, &OccurrenceSet) -> Result<()>,
    {
        let m = w.len();
        let mut values = vec![0usize; m];
        let mut j = 0usize;
        let mut occ = self.all_nodes();
        for i in 0..m {
            if j < i {
                j = i;
            }
            if j == i {
                occ = self.all_nodes();
            }
            on_window(i, j, &occ)?;
            while j < m {
                let next = self.occurrence_step(&occ, w[j])?;
                if next.is_empty() {
                    break;
                }
                occ = next;
                j += 1;
                on_window(i, j, &occ)?;
            }
            values[i] = j - i;
            if j > i {
                // Drop w[i]: rebuild the set for w[i+1..j) by simulation.
                occ = self.all_nodes();
                for &c in &w[i + 1..j] {
                    occ = self.occurrence_step(&occ, c)?;
                }
            }
        }
        Ok(values)
    }
}

/// A set of nodes stored as at most one contiguous position range per chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccurrenceSet {
    /// Per chain id: inclusive `[lo, hi]` positions, or `None` if the chain
    /// is not touched.
    segments: Vec<Option<(usize, usize)>>,
    count: usize,
}

impl OccurrenceSet {
    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn node_count(&self) -> usize {
        self.count
    }

    pub fn segments(&self) -> &[Option<(usize, usize)>] {
        &self.segments
    }

    pub fn segment_count(&self) -> usize {
        self.segments.iter().filter(|s| s.is_some()).count()
    }

    /// The nodes denoted by the segments, in chain order.
    pub fn nodes(&self, chains: &ChainDecomposition) -> Vec<NodeId> {
        let mut out = Vec::with_capacity(self.count);
        for (k, seg) in self.segments.iter().enumerate() {
            if let Some((lo, hi)) = seg {
                out.extend_from_slice(&chains.chains()[k][*lo..=*hi]);
            }
        }
        out
    }

    pub fn contains(&self, chains: &ChainDecomposition, u: NodeId) -> bool {
        let k = chains.chain_of(u);
        match self.segments[k] {
            Some((lo, hi)) => (lo..=hi).contains(&chains.pos_in_chain(u)),
            None => false,
        }
    }
}

/// Matching statistics by direct walk simulation, defined only in terms of
/// the graph: for each start position keep the exact set of walk endpoints
/// and extend symbol by symbol. Quadratic in the pattern, independent of
/// every index structure; this is the reference the index is checked
/// against.
pub fn matching_statistics_naive(g: &LabeledGraph, w: &str) -> Vec<usize> {
    let w: Vec<char> = w.chars().collect();
    let m = w.len();
    let mut values = vec![0usize; m];
    for i in 0..m {
        let mut ends: Vec<NodeId> = (0..g.n()).filter(|&u| g.label(u) == w[i]).collect();
        if ends.is_empty() {
            continue;
        }
        let mut len = 1usize;
        let mut marked = vec![false; g.n()];
        while i + len < m {
            let mut next = Vec::new();
            for &u in &ends {
                for &v in g.out(u) {
                    if g.label(v) == w[i + len] && !marked[v] {
                        marked[v] = true;
                        next.push(v);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            for &v in &next {
                marked[v] = false;
            }
            ends = next;
            len += 1;
        }
        values[i] = len;
    }
    values
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn build_path3() {
        let x = MsIndex::build(&fixtures::path3()).unwrap();
        assert_eq!(x.p(), 1);
        assert_eq!(x.graph().n(), 4);
        assert_eq!(x.lcp().lcp_joint().len(), 7);
    }

    #[test]
    fn build_width2() {
        let x = MsIndex::build(&fixtures::width2()).unwrap();
        assert_eq!(x.p(), 2);
    }

    #[test]
    fn build_rejects_empty_graph() {
        let g = LabeledGraph::new(Vec::new(), Vec::new()).unwrap();
        assert!(matches!(MsIndex::build(&g), Err(Error::EmptyGraph)));
    }

    #[test]
    fn build_rejects_unvalidated_graph() {
        let g = LabeledGraph::parse("v 0 a\nv 1 b\ne 0 1").unwrap();
        assert!(matches!(MsIndex::build(&g), Err(Error::NoIncomingEdge(0))));
    }

    #[test]
    fn occurrence_step_examples() {
        let x = MsIndex::build(&fixtures::path3()).unwrap();
        let all = x.all_nodes();
        let a = x.occurrence_step(&all, 'a').unwrap();
        assert_eq!(a.nodes(x.chains()), vec![0]);
        let b = x.occurrence_step(&a, 'b').unwrap();
        assert_eq!(b.nodes(x.chains()), vec![1]);
        let c = x.occurrence_step(&a, 'c').unwrap();
        assert!(c.is_empty());
    }

    #[test]
    fn occurrence_set_membership() {
        let x = MsIndex::build(&fixtures::width2()).unwrap();
        let s = x.occurrence_set("ba").unwrap();
        let mut nodes = s.nodes(x.chains());
        nodes.sort_unstable();
        assert_eq!(nodes, vec![3, 4]);
        assert!(s.contains(x.chains(), 3));
        assert!(!s.contains(x.chains(), 0));
        assert!(s.segment_count() <= x.p());
    }

    #[test]
    fn matching_statistics_fixtures() {
        let path3 = MsIndex::build(&fixtures::path3()).unwrap();
        assert_eq!(path3.matching_statistics("abc").unwrap(), vec![3, 2, 1]);
        assert_eq!(path3.matching_statistics("acb").unwrap(), vec![1, 1, 1]);
        assert_eq!(path3.matching_statistics("").unwrap(), Vec::<usize>::new());

        let cycle2 = MsIndex::build(&fixtures::cycle2()).unwrap();
        assert_eq!(cycle2.matching_statistics("abab").unwrap(), vec![4, 3, 2, 1]);
    }

    #[test]
    fn naive_matching_statistics_examples() {
        assert_eq!(
            matching_statistics_naive(&fixtures::path3(), "abc"),
            vec![3, 2, 1]
        );
        assert_eq!(
            matching_statistics_naive(&fixtures::width2(), "ba"),
            vec![2, 1]
        );
        assert_eq!(
            matching_statistics_naive(&fixtures::cycle2(), "zz"),
            vec![0, 0]
        );
    }

    #[test]
    fn occurs_examples() {
        let x = MsIndex::build(&fixtures::path3()).unwrap();
        assert!(x.occurs("ab").unwrap());
        assert!(!x.occurs("cb").unwrap());
        assert!(x.occurs("").unwrap());
    }

    #[test]
    fn foreign_symbols_yield_zeros() {
        let x = MsIndex::build(&fixtures::cycle2()).unwrap();
        assert_eq!(x.matching_statistics("zz").unwrap(), vec![0, 0]);
        assert_eq!(x.matching_statistics("azb").unwrap(), vec![1, 0, 1]);
    }

    #[test]
    fn suffix_monotonicity_on_fixture() {
        let x = MsIndex::build(&fixtures::de_bruijn3()).unwrap();
        let values = x.matching_statistics("0110100110").unwrap();
        for w in values.windows(2) {
            assert!(w[1] + 1 >= w[0], "values {values:?}");
        }
    }

    #[test]
    fn queries_are_thread_safe() {
        let x = std::sync::Arc::new(MsIndex::build(&fixtures::width2()).unwrap());
        let expected = x.matching_statistics("bad cab").unwrap();
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let x = x.clone();
                let expected = expected.clone();
                std::thread::spawn(move || {
                    for _ in 0..50 {
                        assert_eq!(x.matching_statistics("bad cab").unwrap(), expected);
                    }
                })
            })
            .collect();
        for h in handles {
            h.join().unwrap();
        }
    }
}
