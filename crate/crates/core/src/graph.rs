//! Node-labeled graph model: parsing, validation, sentinel augmentation, and
//! normalization of edge-labeled inputs.
//!
//! The rest of the crate assumes the canonical form produced here: dense node
//! ids `0..n-1`, one symbol per node, and (after validation or augmentation)
//! in-degree at least one everywhere, so that an infinite string can be read
//! backward from every node.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::{Error, Result};

/// Reserved smallest symbol, placed on the self-looping source node added by
/// [`LabeledGraph::augment_with_sentinel`].
pub const SENTINEL: char = '$';

pub type NodeId = usize;

/// A directed graph with one alphabet symbol per node. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    labels: Vec<char>,
    /// Sorted, deduplicated `(src, dst)` pairs.
    edges: Vec<(NodeId, NodeId)>,
    out_adj: Vec<Vec<NodeId>>,
    in_adj: Vec<Vec<NodeId>>,
}

/// Outcome of [`LabeledGraph::validate`]: empty `violations` means the graph
/// satisfies the standing in-degree assumption and the sentinel rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<(NodeId, Violation)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    NoIncomingEdge,
    ReservedLabel,
    BadId,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// First violation mapped to the corresponding error, if any.
    pub fn into_result(self) -> Result<()> {
        match self.violations.into_iter().next() {
            None => Ok(()),
            Some((u, Violation::NoIncomingEdge)) => Err(Error::NoIncomingEdge(u)),
            Some((u, Violation::ReservedLabel)) => Err(Error::ReservedLabel(u)),
            Some((u, Violation::BadId)) => Err(Error::NodeOutOfRange(u)),
        }
    }
}

impl LabeledGraph {
    /// Build a graph from per-node labels and an edge list. Edge endpoints
    /// must be in range; duplicate edges are merged.
    pub fn new(
        labels: Vec<char>,
        edges: impl IntoIterator<Item = (NodeId, NodeId)>,
    ) -> Result<Self> {
        let n = labels.len();
        let mut edges: Vec<(NodeId, NodeId)> = edges.into_iter().collect();
        for &(a, b) in &edges {
            if a >= n {
                return Err(Error::NodeOutOfRange(a));
            }
            if b >= n {
                return Err(Error::NodeOutOfRange(b));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            out_adj[a].push(b);
            in_adj[b].push(a);
        }
        Ok(Self {
            labels,
            edges,
            out_adj,
            in_adj,
        })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Number of distinct symbols present (the sentinel counts if present).
    pub fn sigma(&self) -> usize {
        let mut syms: Vec<char> = self.labels.clone();
        syms.sort_unstable();
        syms.dedup();
        syms.len()
    }

    pub fn label(&self, u: NodeId) -> char {
        self.labels[u]
    }

    pub fn labels(&self) -> &[char] {
        &self.labels
    }

    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn out(&self, u: NodeId) -> &[NodeId] {
        &self.out_adj[u]
    }

    pub fn preds(&self, u: NodeId) -> &[NodeId] {
        &self.in_adj[u]
    }

    pub fn in_degree(&self, u: NodeId) -> usize {
        self.in_adj[u].len()
    }

    /// Parse the line-based node-labeled format (see crate README):
    /// `# comment`, `v <id> <label>`, `e <src> <dst>`. Node ids may be any
    /// decimal numbers; they are remapped to dense ids in declaration order.
    pub fn parse(text: &str) -> Result<Self> {
        let mut labels: Vec<char> = Vec::new();
        let mut id_map: HashMap<u64, NodeId> = HashMap::new();
        let mut raw_edges: Vec<(usize, u64, u64)> = Vec::new();

        for (idx, raw_line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw_line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(format) = line.strip_prefix("format:") {
                let format = format.trim();
                if format == "edge-labeled" {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "edge-labeled input: parse it with the edge-labeled mode".into(),
                    });
                }
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("unknown format '{format}'"),
                });
            }
            let mut tokens = line.split_whitespace();
            match tokens.next() {
                Some("v") => {
                    let id = parse_id(tokens.next(), line_no)?;
                    let label = parse_label(tokens.next(), line_no)?;
                    expect_end(tokens.next(), line_no)?;
                    if id_map.contains_key(&id) {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("duplicate node id {id}"),
                        });
                    }
                    id_map.insert(id, labels.len());
                    labels.push(label);
                }
                Some("e") => {
                    let src = parse_id(tokens.next(), line_no)?;
                    let dst = parse_id(tokens.next(), line_no)?;
                    expect_end(tokens.next(), line_no)?;
                    raw_edges.push((line_no, src, dst));
                }
                _ => {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "expected a comment, 'v <id> <label>', or 'e <src> <dst>'".into(),
                    });
                }
            }
        }

        let mut edges = Vec::with_capacity(raw_edges.len());
        for (line_no, src, dst) in raw_edges {
            let lookup = |id: u64| {
                id_map.get(&id).copied().ok_or(Error::Parse {
                    line: line_no,
                    msg: format!("edge endpoint undefined: node {id}"),
                })
            };
            edges.push((lookup(src)?, lookup(dst)?));
        }
        Self::new(labels, edges)
    }

    /// Serialize back to the line-based format. Inverse of [`Self::parse`]
    /// for any graph whose labels are parseable (the sentinel is written but
    /// rejected on re-parse, since only augmentation may introduce it).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (u, label) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "v {u} {label}");
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "e {a} {b}");
        }
        out
    }

    /// Report every violation of the canonical-form assumptions: nodes with
    /// no incoming edge, more than one sentinel-labeled node, out-of-range
    /// edge endpoints. An empty graph is vacuously fine.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for u in 0..self.n() {
            if self.in_degree(u) == 0 {
                violations.push((u, Violation::NoIncomingEdge));
            }
        }
        let sentinels: Vec<NodeId> = (0..self.n())
            .filter(|&u| self.labels[u] == SENTINEL)
            .collect();
        if sentinels.len() > 1 {
            for u in sentinels {
                violations.push((u, Violation::ReservedLabel));
            }
        }
        for &(a, b) in &self.edges {
            if a >= self.n() {
                violations.push((a, Violation::BadId));
            }
            if b >= self.n() {
                violations.push((b, Violation::BadId));
            }
        }
        ValidationReport { violations }
    }

    /// Add a self-looping source node labeled with the sentinel, plus an edge
    /// to every node that currently has no incoming edge. Original nodes keep
    /// their ids; the sentinel gets id `n`. The result always validates ok.
    ///
    /// Calling this on a graph with no in-degree-zero nodes is allowed (the
    /// sentinel is then connected only to itself).
    pub fn augment_with_sentinel(&self) -> Result<Self> {
        if let Some(u) = self.labels.iter().position(|&c| c == SENTINEL) {
            return Err(Error::SentinelPresent(u));
        }
        let s = self.n();
        let mut labels = self.labels.clone();
        labels.push(SENTINEL);
        let mut edges = self.edges.clone();
        edges.push((s, s));
        for u in 0..self.n() {
            if self.in_degree(u) == 0 {
                edges.push((s, u));
            }
        }
        Self::new(labels, edges)
    }
}

fn parse_id(token: Option<&str>, line_no: usize) -> Result<u64> {
    let token = token.ok_or(Error::Parse {
        line: line_no,
        msg: "missing node id".into(),
    })?;
    token.parse().map_err(|_| Error::Parse {
        line: line_no,
        msg: format!("invalid node id '{token}'"),
    })
}

fn parse_label(token: Option<&str>, line_no: usize) -> Result<char> {
    let token = token.ok_or(Error::Parse {
        line: line_no,
        msg: "missing label".into(),
    })?;
    let mut chars = token.chars();
    let c = chars.next().unwrap();
    if chars.next().is_some() {
        return Err(Error::Parse {
            line: line_no,
            msg: format!("label '{token}' must be a single symbol"),
        });
    }
    if c == SENTINEL {
        return Err(Error::Parse {
            line: line_no,
            msg: format!("label '{SENTINEL}' is the reserved sentinel symbol"),
        });
    }
    // The sentinel must stay the strictly smallest symbol.
    if c < SENTINEL {
        return Err(Error::Parse {
            line: line_no,
            msg: format!("label '{c}' compares below the sentinel '{SENTINEL}'"),
        });
    }
    if c.is_control() {
        return Err(Error::Parse {
            line: line_no,
            msg: "label must be a printable symbol".into(),
        });
    }
    Ok(c)
}

fn expect_end(token: Option<&str>, line_no: usize) -> Result<()> {
    match token {
        None => Ok(()),
        Some(tok) => Err(Error::Parse {
            line: line_no,
            msg: format!("unexpected trailing token '{tok}'"),
        }),
    }
}

/// A graph with symbols on edges instead of nodes. Accepted only as an input
/// variant: [`EdgeLabeledGraph::normalize`] converts it to the node-labeled
/// form, which is canonical for the whole crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabeledGraph {
    n: usize,
    /// Sorted, deduplicated `(src, dst, symbol)` triples.
    edges: Vec<(NodeId, NodeId, char)>,
}

impl EdgeLabeledGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (NodeId, NodeId, char)>) -> Result<Self> {
        let mut edges: Vec<(NodeId, NodeId, char)> = edges.into_iter().collect();
        for &(a, b, _) in &edges {
            if a >= n {
                return Err(Error::NodeOutOfRange(a));
            }
            if b >= n {
                return Err(Error::NodeOutOfRange(b));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(NodeId, NodeId, char)] {
        &self.edges
    }

    /// Parse the edge-labeled variant: a `format: edge-labeled` header line,
    /// `v <id>` node declarations, and `e <src> <dst> <label>` edges.
    pub fn parse(text: &str) -> Result<Self> {
        let mut saw_header = false;
        let mut id_map: HashMap<u64, NodeId> = HashMap::new();
        let mut raw_edges: Vec<(usize, u64, u64, char)> = Vec::new();

        for (idx, raw_line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw_line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(format) = line.strip_prefix("format:") {
                if format.trim() != "edge-labeled" {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("unknown format '{}'", format.trim()),
                    });
                }
                saw_header = true;
                continue;
            }
            if !saw_header {
                return Err(Error::Parse {
                    line: line_no,
                    msg: "edge-labeled input must start with a 'format: edge-labeled' line".into(),
                });
            }
            let mut tokens = line.split_whitespace();
            match tokens.next() {
                Some("v") => {
                    let id = parse_id(tokens.next(), line_no)?;
                    expect_end(tokens.next(), line_no)?;
                    if id_map.contains_key(&id) {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("duplicate node id {id}"),
                        });
                    }
                    let dense = id_map.len();
                    id_map.insert(id, dense);
                }
                Some("e") => {
                    let src = parse_id(tokens.next(), line_no)?;
                    let dst = parse_id(tokens.next(), line_no)?;
                    let label = parse_label(tokens.next(), line_no)?;
                    expect_end(tokens.next(), line_no)?;
                    raw_edges.push((line_no, src, dst, label));
                }
                _ => {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "expected a comment, 'v <id>', or 'e <src> <dst> <label>'".into(),
                    });
                }
            }
        }

        let mut edges = Vec::with_capacity(raw_edges.len());
        for (line_no, src, dst, label) in raw_edges {
            let lookup = |id: u64| {
                id_map.get(&id).copied().ok_or(Error::Parse {
                    line: line_no,
                    msg: format!("edge endpoint undefined: node {id}"),
                })
            };
            edges.push((lookup(src)?, lookup(dst)?, label));
        }
        Self::new(id_map.len(), edges)
    }

    /// Convert to a node-labeled graph by splitting each node into one copy
    /// per distinct incoming symbol; edge `(v, u, c)` becomes an edge from
    /// every copy of `v` to the copy `(u, c)`. The strings readable along
    /// walks are preserved.
    ///
    /// A node with no incoming edge has no symbol of its own. It gets one
    /// copy labeled `default_label` when provided (as if a virtual incoming
    /// edge carried that symbol); with `None` such a node is an error.
    ///
    /// Copy ids are assigned in `(node, symbol)` order; the returned map
    /// gives the copies of each original node.
    pub fn normalize(
        &self,
        default_label: Option<char>,
    ) -> Result<(LabeledGraph, Vec<Vec<NodeId>>)> {
        let mut in_symbols: Vec<Vec<char>> = vec![Vec::new(); self.n];
        for &(_, dst, c) in &self.edges {
            in_symbols[dst].push(c);
        }
        let mut labels = Vec::new();
        let mut copies: Vec<Vec<NodeId>> = vec![Vec::new(); self.n];
        // copy_of[(u, c)] -> copy id
        let mut copy_of: HashMap<(NodeId, char), NodeId> = HashMap::new();
        for u in 0..self.n {
            in_symbols[u].sort_unstable();
            in_symbols[u].dedup();
            if in_symbols[u].is_empty() {
                match default_label {
                    Some(c) => in_symbols[u].push(c),
                    None => return Err(Error::NoIncomingEdge(u)),
                }
            }
            for &c in &in_symbols[u] {
                copy_of.insert((u, c), labels.len());
                copies[u].push(labels.len());
                labels.push(c);
            }
        }
        let mut edges = Vec::new();
        for &(src, dst, c) in &self.edges {
            let to = copy_of[&(dst, c)];
            for &from in &copies[src] {
                edges.push((from, to));
            }
        }
        Ok((LabeledGraph::new(labels, edges)?, copies))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use std::collections::BTreeSet;

    #[test]
    fn parse_two_nodes_one_edge() {
        let g = LabeledGraph::parse("v 0 a\nv 1 b\ne 0 1").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.labels(), &['a', 'b']);
        assert_eq!(g.edges(), &[(0, 1)]);
        assert_eq!(g.sigma(), 2);
    }

    #[test]
    fn parse_self_loop() {
        let g = LabeledGraph::parse("v 0 a\ne 0 0").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edges(), &[(0, 0)]);
    }

    #[test]
    fn parse_rejects_sentinel_label() {
        let err = LabeledGraph::parse("v 0 $\n").unwrap_err();
        match err {
            Error::Parse { line, msg } => {
                assert_eq!(line, 1);
                assert!(msg.contains("reserved sentinel"), "{msg}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_label_below_sentinel() {
        let err = LabeledGraph::parse("v 0 !").unwrap_err();
        assert!(err.to_string().contains("below the sentinel"));
    }

    #[test]
    fn parse_reports_line_numbers() {
        let err = LabeledGraph::parse("v 0 a\nwhat is this").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_duplicate_node_id() {
        let err = LabeledGraph::parse("v 7 a\nv 7 b").unwrap_err();
        assert!(err.to_string().contains("duplicate node id 7"));
    }

    #[test]
    fn parse_rejects_undefined_endpoint() {
        let err = LabeledGraph::parse("v 0 a\ne 0 3").unwrap_err();
        assert!(err.to_string().contains("edge endpoint undefined"));
    }

    #[test]
    fn parse_remaps_sparse_ids_densely() {
        let g = LabeledGraph::parse("# sparse ids\nv 10 a\nv 20 b\ne 20 10").unwrap();
        assert_eq!(g.labels(), &['a', 'b']);
        assert_eq!(g.edges(), &[(1, 0)]);
    }

    #[test]
    fn text_round_trip() {
        let g = LabeledGraph::parse("v 0 a\nv 1 b\nv 2 c\ne 0 1\ne 1 2\ne 2 0").unwrap();
        assert_eq!(LabeledGraph::parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn validate_cycle_ok() {
        assert!(fixtures::cycle2().validate().ok());
    }

    #[test]
    fn validate_reports_sources() {
        let g = LabeledGraph::parse("v 0 a\nv 1 b\nv 2 c\ne 0 1\ne 1 2").unwrap();
        let report = g.validate();
        assert!(!report.ok());
        assert_eq!(report.violations, vec![(0, Violation::NoIncomingEdge)]);
    }

    #[test]
    fn validate_empty_graph_ok() {
        let g = LabeledGraph::new(Vec::new(), Vec::new()).unwrap();
        assert!(g.validate().ok());
    }

    #[test]
    fn validate_flags_duplicate_sentinels() {
        let g = LabeledGraph::new(vec![SENTINEL, SENTINEL], [(0, 0), (0, 1)]).unwrap();
        let report = g.validate();
        assert_eq!(
            report.violations,
            vec![(0, Violation::ReservedLabel), (1, Violation::ReservedLabel)]
        );
    }

    #[test]
    fn augment_path() {
        let g = LabeledGraph::parse("v 0 a\nv 1 b\nv 2 c\ne 0 1\ne 1 2").unwrap();
        let aug = g.augment_with_sentinel().unwrap();
        assert_eq!(aug, fixtures::path3());
        assert_eq!(aug.n(), 4);
        assert_eq!(aug.label(3), SENTINEL);
        assert!(aug.validate().ok());
        assert_eq!(
            aug.labels().iter().filter(|&&c| c == SENTINEL).count(),
            1
        );
    }

    #[test]
    fn augment_without_sources_adds_isolated_sentinel() {
        let aug = fixtures::cycle2().augment_with_sentinel().unwrap();
        assert_eq!(aug.n(), 3);
        assert_eq!(aug.edges(), &[(0, 1), (1, 0), (2, 2)]);
        assert!(aug.validate().ok());
    }

    #[test]
    fn augment_two_sources_single_sentinel() {
        let g = LabeledGraph::parse("v 0 a\nv 1 b\nv 2 c\ne 0 2\ne 1 2").unwrap();
        let aug = g.augment_with_sentinel().unwrap();
        assert_eq!(aug.n(), 4);
        // one sentinel, self-loop plus one edge per source
        assert_eq!(aug.preds(0), &[3]);
        assert_eq!(aug.preds(1), &[3]);
        assert_eq!(aug.out(3), &[0, 1, 3]);
    }

    #[test]
    fn augment_rejects_existing_sentinel() {
        let g = fixtures::path3();
        match g.augment_with_sentinel() {
            Err(Error::SentinelPresent(3)) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    /// All strings spelled by walks of exactly `len` nodes (or `len` edges in
    /// the edge-labeled case).
    fn walk_labels(g: &LabeledGraph, len: usize) -> BTreeSet<String> {
        let mut set = BTreeSet::new();
        if len == 0 {
            set.insert(String::new());
            return set;
        }
        fn rec(g: &LabeledGraph, u: NodeId, left: usize, acc: &mut String, set: &mut BTreeSet<String>) {
            acc.push(g.label(u));
            if left == 1 {
                set.insert(acc.clone());
            } else {
                for &v in g.out(u) {
                    rec(g, v, left - 1, acc, set);
                }
            }
            acc.pop();
        }
        for u in 0..g.n() {
            let mut acc = String::new();
            rec(g, u, len, &mut acc, &mut set);
        }
        set
    }

    fn edge_walk_labels(g: &EdgeLabeledGraph, len: usize) -> BTreeSet<String> {
        let mut set = BTreeSet::new();
        if len == 0 {
            set.insert(String::new());
            return set;
        }
        let mut out: Vec<Vec<(NodeId, char)>> = vec![Vec::new(); g.n()];
        for &(a, b, c) in g.edges() {
            out[a].push((b, c));
        }
        fn rec(
            out: &[Vec<(NodeId, char)>],
            u: NodeId,
            left: usize,
            acc: &mut String,
            set: &mut BTreeSet<String>,
        ) {
            if left == 0 {
                set.insert(acc.clone());
                return;
            }
            for &(v, c) in &out[u] {
                acc.push(c);
                rec(out, v, left - 1, acc, set);
                acc.pop();
            }
        }
        for u in 0..g.n() {
            let mut acc = String::new();
            rec(&out, u, len, &mut acc, &mut set);
        }
        set
    }

    #[test]
    fn normalize_two_cycle_matches_node_labeled_cycle() {
        let el = EdgeLabeledGraph::new(2, [(0, 1, 'a'), (1, 0, 'b')]).unwrap();
        let (g, _) = el.normalize(None).unwrap();
        assert_eq!(g.n(), 2);
        for len in 0..=4 {
            assert_eq!(walk_labels(&g, len), walk_labels(&fixtures::cycle2(), len));
        }
    }

    #[test]
    fn normalize_self_loop_identity() {
        let el = EdgeLabeledGraph::new(1, [(0, 0, 'a')]).unwrap();
        let (g, copies) = el.normalize(None).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.label(0), 'a');
        assert_eq!(g.edges(), &[(0, 0)]);
        assert_eq!(copies, vec![vec![0]]);
    }

    #[test]
    fn normalize_splits_on_incoming_symbols() {
        // one predecessor sends both 'a' and 'b' into node 1
        let el =
            EdgeLabeledGraph::new(2, [(0, 0, 'a'), (0, 1, 'a'), (0, 1, 'b')]).unwrap();
        let (g, copies) = el.normalize(None).unwrap();
        assert_eq!(copies[1].len(), 2);
        for &copy in &copies[1] {
            assert_eq!(g.in_degree(copy), 1);
        }
        for len in 0..=3 {
            assert_eq!(edge_walk_labels(&el, len), walk_labels(&g, len));
        }
    }

    #[test]
    fn normalize_requires_label_for_sources() {
        let el = EdgeLabeledGraph::new(2, [(0, 1, 'a')]).unwrap();
        match el.normalize(None) {
            Err(Error::NoIncomingEdge(0)) => {}
            other => panic!("unexpected {other:?}"),
        }
        let (g, _) = el.normalize(Some('x')).unwrap();
        assert_eq!(g.labels(), &['x', 'a']);
    }

    #[test]
    fn parse_edge_labeled_requires_header() {
        let err = EdgeLabeledGraph::parse("v 0\nv 1\ne 0 1 a").unwrap_err();
        assert!(err.to_string().contains("format: edge-labeled"));
        let g = EdgeLabeledGraph::parse("format: edge-labeled\nv 0\nv 1\ne 0 1 a\ne 1 0 b")
            .unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), &[(0, 1, 'a'), (1, 0, 'b')]);
    }
}
