//! Small graphs used across tests, docs, and the Python smoke script.

use crate::graph::LabeledGraph;

/// Sentinel-augmented 3-node path `a -> b -> c`.
///
/// Ids: a=0, b=1, c=2, sentinel=3. Every node is reached by exactly one
/// backward walk, so min and max strings coincide node by node.
pub fn path3() -> LabeledGraph {
    LabeledGraph::parse("v 0 a\nv 1 b\nv 2 c\ne 0 1\ne 1 2")
        .and_then(|g| g.augment_with_sentinel())
        .expect("fixture")
}

/// Two-node cycle with labels `a`, `b` (ids 0, 1). Already validates ok.
pub fn cycle2() -> LabeledGraph {
    LabeledGraph::parse("v 0 a\nv 1 b\ne 0 1\ne 1 0").expect("fixture")
}

/// Two disconnected self-loops both labeled `a` (ids 0, 1): every min/max
/// string is `aaa...`, so all four order items share one equality class.
pub fn twins() -> LabeledGraph {
    LabeledGraph::parse("v 0 a\nv 1 a\ne 0 0\ne 1 1").expect("fixture")
}

/// The smallest fixture with chain width 2.
///
/// Ids: b1=0 (label b), c1=1 (c), d1=2 (d), x=3 (a), z=4 (a), sentinel=5.
/// Edges: b1->x, c1->x, b1->z, d1->z, plus the augmentation edges from the
/// sentinel to the three sources. Nodes x and z share the minimum string
/// `ab$...` but have incomparable maxima (`ac$...` vs `ad$...`).
pub fn width2() -> LabeledGraph {
    LabeledGraph::parse("v 0 b\nv 1 c\nv 2 d\nv 3 a\nv 4 a\ne 0 3\ne 1 3\ne 0 4\ne 2 4")
        .and_then(|g| g.augment_with_sentinel())
        .expect("fixture")
}

/// Binary de Bruijn graph of order 3: nodes are the 8 binary words of length
/// 3 (id = value of the word), labeled by their last symbol; word `xyz` has
/// edges to `yz0` and `yz1`. In-degree is 2 everywhere and the chain width
/// is 1.
pub fn de_bruijn3() -> LabeledGraph {
    let labels: Vec<char> = (0..8u8)
        .map(|w| if w & 1 == 1 { '1' } else { '0' })
        .collect();
    let mut edges = Vec::new();
    for w in 0..8usize {
        let shifted = (w << 1) & 0b111;
        edges.push((w, shifted));
        edges.push((w, shifted | 1));
    }
    LabeledGraph::new(labels, edges).expect("fixture")
}
