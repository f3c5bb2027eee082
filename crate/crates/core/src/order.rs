//! The joint co-lexicographic order of the `2n` infinite strings readable
//! backward from the nodes.
//!
//! For a node `u`, `min_u` (resp. `max_u`) is the lexicographically smallest
//! (largest) infinite string obtained by reading `u`'s label and then
//! repeatedly moving to a predecessor and reading its label. Both satisfy the
//! one-step recurrence
//!
//! ```text
//! min_u = label(u) . min { min_v : v predecessor of u }
//! max_u = label(u) . max { max_v : v predecessor of u }
//! ```
//!
//! so the whole family can be ranked by fixpoint refinement: start from the
//! per-node label and repeatedly re-rank each item by `(label, rank of its
//! best tail)`. After round `k` two items share a rank exactly when their
//! strings share their first `k+1` symbols; the partition can only split, so
//! the loop reaches a fixpoint within `2n` rounds, at which point ranks order
//! the items by their full infinite strings.
//!
//! [`min_string_prefix`] / [`max_string_prefix`] compute the same strings by
//! direct greedy frontier expansion, with no shared machinery; they are the
//! reference the refinement is checked against.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

use crate::graph::{LabeledGraph, NodeId};
use crate::{Error, Result};

/// Which of the two per-node strings an order item refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Min,
    Max,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Min => "MIN",
            Side::Max => "MAX",
        }
    }
}

/// One of the `2n` sorted items: the min-string or max-string of a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Item {
    pub node: NodeId,
    pub side: Side,
}

impl Item {
    pub fn min(node: NodeId) -> Self {
        Item {
            node,
            side: Side::Min,
        }
    }

    pub fn max(node: NodeId) -> Self {
        Item {
            node,
            side: Side::Max,
        }
    }

    fn idx(self) -> usize {
        self.node * 2 + self.side as usize
    }

    fn from_idx(idx: usize) -> Self {
        Item {
            node: idx / 2,
            side: if idx % 2 == 0 { Side::Min } else { Side::Max },
        }
    }
}

/// The `2n` items sorted by their infinite strings, with dense ranks (equal
/// rank means equal strings), canonical tail links, and the number of
/// refinement rounds it took to converge. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointColexOrder {
    n: usize,
    labels: Vec<char>,
    /// Dense rank per item index; `rank[i] == rank[j]` iff equal strings.
    rank: Vec<u32>,
    num_classes: usize,
    /// All items in nondecreasing string order, ties by `(node, side)`.
    sorted: Vec<Item>,
    /// Position of each item (by index) in `sorted`.
    pos: Vec<u32>,
    /// Canonical continuation: for `(u, MIN)` the predecessor whose min item
    /// ranks lowest (ties by node id), for `(u, MAX)` the highest.
    tail: Vec<Item>,
    rounds: usize,
}

impl JointColexOrder {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of items, i.e. `2n`.
    pub fn len(&self) -> usize {
        2 * self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn label(&self, u: NodeId) -> char {
        self.labels[u]
    }

    pub fn rank(&self, item: Item) -> u32 {
        self.rank[item.idx()]
    }

    /// Equality class of an item; same class iff identical infinite strings.
    /// Classes coincide with dense ranks.
    pub fn class_of(&self, item: Item) -> u32 {
        self.rank(item)
    }

    pub fn num_classes(&self) -> usize {
        self.num_classes
    }

    pub fn sorted(&self) -> &[Item] {
        &self.sorted
    }

    pub fn pos_in_sorted(&self, item: Item) -> usize {
        self.pos[item.idx()] as usize
    }

    pub fn tail(&self, item: Item) -> Item {
        self.tail[item.idx()]
    }

    pub fn rounds(&self) -> usize {
        self.rounds
    }

    fn check_item(&self, item: Item) -> Result<()> {
        if item.node >= self.n {
            return Err(Error::GraphMismatch(format!(
                "item node {} out of range for an order over {} nodes",
                item.node, self.n
            )));
        }
        Ok(())
    }

    /// Items in sorted order restricted to one side. The subsequence of the
    /// joint order, so ties still break by node id.
    pub fn sorted_side(&self, side: Side) -> Vec<Item> {
        self.sorted
            .iter()
            .copied()
            .filter(|it| it.side == side)
            .collect()
    }
}

/// Compare two items by their infinite strings via rank lookup.
pub fn compare_items(order: &JointColexOrder, i: Item, j: Item) -> Result<Ordering> {
    order.check_item(i)?;
    order.check_item(j)?;
    Ok(order.rank(i).cmp(&order.rank(j)))
}

/// Sort the `2n` min/max items by fixpoint rank refinement.
pub fn compute_joint_order(g: &LabeledGraph) -> Result<JointColexOrder> {
    let n = g.n();
    if n == 0 {
        return Ok(JointColexOrder {
            n: 0,
            labels: Vec::new(),
            rank: Vec::new(),
            num_classes: 0,
            sorted: Vec::new(),
            pos: Vec::new(),
            tail: Vec::new(),
            rounds: 0,
        });
    }
    for u in 0..n {
        if g.in_degree(u) == 0 {
            return Err(Error::NoIncomingEdge(u));
        }
    }

    let m = 2 * n;
    let label_rank = dense_label_ranks(g.labels());
    let mut rank: Vec<u32> = (0..m).map(|i| label_rank[i / 2]).collect();
    let mut rounds = 0usize;

    let mut keys: Vec<(u32, u32)> = vec![(0, 0); m];
    let mut by_key: Vec<usize> = (0..m).collect();
    loop {
        rounds += 1;
        if rounds > m {
            return Err(Error::Internal(format!(
                "rank refinement did not converge within {m} rounds"
            )));
        }
        for u in 0..n {
            let preds = g.preds(u);
            let best_min = preds
                .iter()
                .map(|&v| rank[Item::min(v).idx()])
                .min()
                .expect("in-degree checked above");
            let best_max = preds
                .iter()
                .map(|&v| rank[Item::max(v).idx()])
                .max()
                .expect("in-degree checked above");
            keys[Item::min(u).idx()] = (label_rank[u], best_min);
            keys[Item::max(u).idx()] = (label_rank[u], best_max);
        }
        by_key.sort_unstable_by_key(|&i| keys[i]);
        let mut new_rank = vec![0u32; m];
        let mut current = 0u32;
        for w in 0..m {
            if w > 0 && keys[by_key[w]] != keys[by_key[w - 1]] {
                current += 1;
            }
            new_rank[by_key[w]] = current;
        }
        debug_assert!(refines(&new_rank, &rank), "partition must only split");
        if new_rank == rank {
            break;
        }
        rank = new_rank;
    }

    let num_classes = rank.iter().max().copied().unwrap_or(0) as usize + 1;
    let mut sorted: Vec<Item> = (0..m).map(Item::from_idx).collect();
    sorted.sort_unstable_by_key(|it| (rank[it.idx()], it.node, it.side));
    let mut pos = vec![0u32; m];
    for (p, it) in sorted.iter().enumerate() {
        pos[it.idx()] = p as u32;
    }
    let tail = tails_from_ranks(g, &rank);

    Ok(JointColexOrder {
        n,
        labels: g.labels().to_vec(),
        rank,
        num_classes,
        sorted,
        pos,
        tail,
        rounds,
    })
}

fn dense_label_ranks(labels: &[char]) -> Vec<u32> {
    let mut distinct: Vec<char> = labels.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    labels
        .iter()
        .map(|c| distinct.binary_search(c).unwrap() as u32)
        .collect()
}

/// True when equal ranks under `finer` imply equal ranks under `coarser`.
fn refines(finer: &[u32], coarser: &[u32]) -> bool {
    use std::collections::HashMap;
    let mut seen: HashMap<u32, u32> = HashMap::new();
    for (i, &f) in finer.iter().enumerate() {
        match seen.entry(f) {
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(coarser[i]);
            }
            std::collections::hash_map::Entry::Occupied(e) => {
                if *e.get() != coarser[i] {
                    return false;
                }
            }
        }
    }
    true
}

/// Rebuild an order from stored ranks and the stored sorted sequence (the
/// index document loader). Derived pieces are recomputed; inconsistencies
/// between the pieces are reported as document errors.
pub(crate) fn restore(
    g: &LabeledGraph,
    rank: Vec<u32>,
    sorted: Vec<Item>,
    rounds: usize,
) -> Result<JointColexOrder> {
    let n = g.n();
    let m = 2 * n;
    debug_assert_eq!(rank.len(), m);
    debug_assert_eq!(sorted.len(), m);
    for u in 0..n {
        if g.in_degree(u) == 0 {
            return Err(Error::NoIncomingEdge(u));
        }
    }
    let num_classes = rank.iter().max().copied().map_or(0, |r| r as usize + 1);
    let mut expected = sorted.clone();
    expected.sort_unstable_by_key(|it| (rank[it.idx()], it.node, it.side));
    if expected != sorted {
        return Err(Error::Document(
            "stored item sequence is not sorted by its own ranks".into(),
        ));
    }
    let mut pos = vec![0u32; m];
    for (p, it) in sorted.iter().enumerate() {
        pos[it.idx()] = p as u32;
    }
    let tail = tails_from_ranks(g, &rank);
    Ok(JointColexOrder {
        n,
        labels: g.labels().to_vec(),
        rank,
        num_classes,
        sorted,
        pos,
        tail,
        rounds,
    })
}

/// Canonical tail links given the converged ranks. Shared with the index
/// document loader, which restores an order from stored ranks.
fn tails_from_ranks(g: &LabeledGraph, rank: &[u32]) -> Vec<Item> {
    let n = g.n();
    let mut tail = vec![Item::min(0); 2 * n];
    for u in 0..n {
        let preds = g.preds(u);
        let best_min = preds
            .iter()
            .copied()
            .min_by_key(|&v| (rank[Item::min(v).idx()], v))
            .expect("validated in-degree");
        let best_max = preds
            .iter()
            .copied()
            .min_by_key(|&v| (std::cmp::Reverse(rank[Item::max(v).idx()]), v))
            .expect("validated in-degree");
        tail[Item::min(u).idx()] = Item::min(best_min);
        tail[Item::max(u).idx()] = Item::max(best_max);
    }
    tail
}

/// First `len` symbols of the smallest backward string from `u`, by greedy
/// frontier expansion: keep the set of nodes reachable along backward walks
/// that spell the minimal prefix so far, and extend with the smallest label
/// offered by their predecessors. Independent of [`compute_joint_order`].
pub fn min_string_prefix(g: &LabeledGraph, u: NodeId, len: usize) -> Result<String> {
    extreme_string_prefix(g, u, len, Extreme::Smallest)
}

/// First `len` symbols of the largest backward string from `u`.
pub fn max_string_prefix(g: &LabeledGraph, u: NodeId, len: usize) -> Result<String> {
    extreme_string_prefix(g, u, len, Extreme::Largest)
}

#[derive(Clone, Copy)]
enum Extreme {
    Smallest,
    Largest,
}

fn extreme_string_prefix(
    g: &LabeledGraph,
    u: NodeId,
    len: usize,
    extreme: Extreme,
) -> Result<String> {
    if u >= g.n() {
        return Err(Error::NodeOutOfRange(u));
    }
    let mut out = String::with_capacity(len);
    if len == 0 {
        return Ok(out);
    }
    out.push(g.label(u));

    let n = g.n();
    let mut frontier: Vec<NodeId> = vec![u];
    let mut marked = vec![false; n];
    let mut candidates: Vec<NodeId> = Vec::new();
    for _ in 1..len {
        candidates.clear();
        for &v in &frontier {
            for &p in g.preds(v) {
                if !marked[p] {
                    marked[p] = true;
                    candidates.push(p);
                }
            }
        }
        if candidates.is_empty() {
            // Some node on every current walk has no predecessor.
            return Err(Error::NoIncomingEdge(frontier[0]));
        }
        let best = match extreme {
            Extreme::Smallest => candidates.iter().map(|&v| g.label(v)).min(),
            Extreme::Largest => candidates.iter().map(|&v| g.label(v)).max(),
        }
        .expect("candidates nonempty");
        out.push(best);
        frontier.clear();
        for &v in &candidates {
            marked[v] = false;
            if g.label(v) == best {
                frontier.push(v);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn min_prefix_cycle() {
        let g = fixtures::cycle2();
        assert_eq!(min_string_prefix(&g, 0, 5).unwrap(), "ababa");
        assert_eq!(min_string_prefix(&g, 0, 0).unwrap(), "");
    }

    #[test]
    fn min_prefix_path_reaches_sentinel() {
        let g = fixtures::path3();
        assert_eq!(min_string_prefix(&g, 2, 6).unwrap(), "cba$$$");
    }

    #[test]
    fn min_prefix_twins() {
        let g = fixtures::twins();
        assert_eq!(min_string_prefix(&g, 0, 3).unwrap(), "aaa");
    }

    #[test]
    fn max_prefix_width2() {
        let g = fixtures::width2();
        assert_eq!(max_string_prefix(&g, 3, 3).unwrap(), "ac$");
        assert_eq!(max_string_prefix(&g, 4, 3).unwrap(), "ad$");
        assert_eq!(min_string_prefix(&g, 3, 3).unwrap(), "ab$");
        assert_eq!(min_string_prefix(&g, 4, 3).unwrap(), "ab$");
    }

    #[test]
    fn max_prefix_cycle() {
        let g = fixtures::cycle2();
        assert_eq!(max_string_prefix(&g, 1, 4).unwrap(), "baba");
    }

    #[test]
    fn prefix_rejects_bad_node() {
        let g = fixtures::cycle2();
        match min_string_prefix(&g, 9, 3) {
            Err(Error::NodeOutOfRange(9)) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn prefix_reports_dead_frontier() {
        // un-augmented path: backward walk from node 2 dies after "cba"
        let g = LabeledGraph::parse("v 0 a\nv 1 b\nv 2 c\ne 0 1\ne 1 2").unwrap();
        assert_eq!(min_string_prefix(&g, 2, 3).unwrap(), "cba");
        match min_string_prefix(&g, 2, 4) {
            Err(Error::NoIncomingEdge(0)) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn joint_order_path3_sequence() {
        let g = fixtures::path3();
        let o = compute_joint_order(&g).unwrap();
        // $^w, $^w, a$^w, a$^w, ba$^w, ba$^w, cba$^w, cba$^w
        let expected = [
            Item::min(3),
            Item::max(3),
            Item::min(0),
            Item::max(0),
            Item::min(1),
            Item::max(1),
            Item::min(2),
            Item::max(2),
        ];
        assert_eq!(o.sorted(), &expected);
        // each node's min equals its max; distinct nodes differ
        for u in 0..4 {
            assert_eq!(o.rank(Item::min(u)), o.rank(Item::max(u)));
        }
        assert_eq!(o.num_classes(), 4);
    }

    #[test]
    fn joint_order_twins_single_class() {
        let o = compute_joint_order(&fixtures::twins()).unwrap();
        assert_eq!(o.num_classes(), 1);
        assert_eq!(o.rank(Item::min(0)), o.rank(Item::max(1)));
    }

    #[test]
    fn joint_order_width2_classes() {
        let o = compute_joint_order(&fixtures::width2()).unwrap();
        // x and z share their min string ab$^w
        assert_eq!(o.class_of(Item::min(3)), o.class_of(Item::min(4)));
        // ac$^w strictly below ad$^w
        assert!(o.rank(Item::max(3)) < o.rank(Item::max(4)));
    }

    #[test]
    fn compare_items_examples() {
        let path3 = compute_joint_order(&fixtures::path3()).unwrap();
        assert_eq!(
            compare_items(&path3, Item::min(3), Item::min(0)).unwrap(),
            Ordering::Less
        );
        let twins = compute_joint_order(&fixtures::twins()).unwrap();
        assert_eq!(
            compare_items(&twins, Item::min(0), Item::max(1)).unwrap(),
            Ordering::Equal
        );
        let cycle = compute_joint_order(&fixtures::cycle2()).unwrap();
        assert_eq!(
            compare_items(&cycle, Item::min(1), Item::max(0)).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn compare_items_rejects_foreign_item() {
        let cycle = compute_joint_order(&fixtures::cycle2()).unwrap();
        match compare_items(&cycle, Item::min(0), Item::min(5)) {
            Err(Error::GraphMismatch(_)) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn order_requires_in_degree() {
        let g = LabeledGraph::parse("v 0 a\nv 1 b\ne 0 1").unwrap();
        match compute_joint_order(&g) {
            Err(Error::NoIncomingEdge(0)) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn order_of_empty_graph_is_trivial() {
        let g = LabeledGraph::new(Vec::new(), Vec::new()).unwrap();
        let o = compute_joint_order(&g).unwrap();
        assert!(o.is_empty());
        assert_eq!(o.rounds(), 0);
    }

    #[test]
    fn rounds_bounded_on_fixtures() {
        for g in [
            fixtures::path3(),
            fixtures::cycle2(),
            fixtures::twins(),
            fixtures::width2(),
            fixtures::de_bruijn3(),
        ] {
            let o = compute_joint_order(&g).unwrap();
            assert!(o.rounds() <= 2 * g.n(), "rounds {} n {}", o.rounds(), g.n());
        }
    }

    #[test]
    fn determinism() {
        let g = fixtures::width2();
        let a = compute_joint_order(&g).unwrap();
        let b = compute_joint_order(&g).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn tail_consistency_on_fixtures() {
        // string(item) = label(node) . string(tail(item)), checked on prefixes
        for g in [fixtures::path3(), fixtures::width2(), fixtures::de_bruijn3()] {
            let o = compute_joint_order(&g).unwrap();
            let len = 2 * g.n() + 2;
            type PrefixFn = fn(&LabeledGraph, NodeId, usize) -> crate::Result<String>;
            for u in 0..g.n() {
                for (item, prefix_fn) in [
                    (Item::min(u), min_string_prefix as PrefixFn),
                    (Item::max(u), max_string_prefix as PrefixFn),
                ] {
                    let own = prefix_fn(&g, u, len).unwrap();
                    let tail = o.tail(item);
                    let rest = prefix_fn(&g, tail.node, len - 1).unwrap();
                    let mut composed = String::new();
                    composed.push(g.label(u));
                    composed.push_str(&rest);
                    assert_eq!(own, composed, "item {item:?}");
                }
            }
        }
    }
}
