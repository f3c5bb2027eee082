//! Longest-common-prefix arrays over the sorted min/max strings.
//!
//! Two distinct nodes can carry identical infinite strings, so an LCP value
//! is either a finite symbol count or infinity; infinity appears exactly when
//! the two items share an equality class. Finite values never exceed `2n+1`:
//! the rank refinement converges within `2n` rounds and round `k` already
//! separates strings differing in their first `k+1` symbols.
//!
//! The pairwise LCP is computed by walking tail links in lockstep and
//! counting agreeing labels. Adjacent values over the joint sorted sequence
//! (`2n-1` entries) plus a sparse-table range-minimum structure then answer
//! the LCP of any two sorted positions in constant time.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::order::{Item, JointColexOrder, Side};
use crate::{Error, Result};

/// A symbol count or infinity. The derived order places every finite value
/// below `Infinite`, so range minima behave correctly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LcpValue {
    Finite(u32),
    Infinite,
}

impl LcpValue {
    pub fn is_infinite(self) -> bool {
        matches!(self, LcpValue::Infinite)
    }

    pub fn as_finite(self) -> Option<u32> {
        match self {
            LcpValue::Finite(v) => Some(v),
            LcpValue::Infinite => None,
        }
    }
}

impl From<Option<u32>> for LcpValue {
    fn from(v: Option<u32>) -> Self {
        match v {
            Some(v) => LcpValue::Finite(v),
            None => LcpValue::Infinite,
        }
    }
}

impl From<LcpValue> for Option<u32> {
    fn from(v: LcpValue) -> Self {
        v.as_finite()
    }
}

impl fmt::Display for LcpValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LcpValue::Finite(v) => write!(f, "{v}"),
            LcpValue::Infinite => write!(f, "inf"),
        }
    }
}

/// LCP of the strings of two items: infinity when they share a class,
/// otherwise the number of agreeing labels along the lockstep tail walk.
pub fn lcp_pair(order: &JointColexOrder, i: Item, j: Item) -> Result<LcpValue> {
    PairWalker::new(order).lcp(i, j)
}

/// Lockstep tail walker with memoization on unordered item pairs. The
/// visited set doubles as the cycle detector: revisiting a pair with all
/// labels equal would mean two equal strings in distinct classes, which is
/// an internal-consistency failure, never a valid answer.
struct PairWalker<'a> {
    order: &'a JointColexOrder,
    memo: HashMap<(usize, usize), LcpValue>,
}

impl<'a> PairWalker<'a> {
    fn new(order: &'a JointColexOrder) -> Self {
        PairWalker {
            order,
            memo: HashMap::new(),
        }
    }

    fn lcp(&mut self, i: Item, j: Item) -> Result<LcpValue> {
        if i.node >= self.order.n() || j.node >= self.order.n() {
            return Err(Error::GraphMismatch(format!(
                "lcp_pair on items {i:?}, {j:?} for an order over {} nodes",
                self.order.n()
            )));
        }
        // path holds the pairs whose labels agreed; the breaking pair stays
        // out, so the pair `t` entries from the end has LCP `outcome + t + 1`.
        let mut path: Vec<(usize, usize)> = Vec::new();
        let mut on_path: HashSet<(usize, usize)> = HashSet::new();
        let (mut a, mut b) = (i, j);
        let outcome: LcpValue = loop {
            let key = pair_key(a, b);
            if let Some(&v) = self.memo.get(&key) {
                break v;
            }
            if self.order.class_of(a) == self.order.class_of(b) {
                self.memo.insert(key, LcpValue::Infinite);
                break LcpValue::Infinite;
            }
            if self.order.label(a.node) != self.order.label(b.node) {
                self.memo.insert(key, LcpValue::Finite(0));
                break LcpValue::Finite(0);
            }
            if !on_path.insert(key) {
                return Err(Error::Internal(format!(
                    "lcp walk revisited pair {a:?}/{b:?} across distinct classes"
                )));
            }
            path.push(key);
            a = self.order.tail(a);
            b = self.order.tail(b);
        };
        let extend = |v: LcpValue, by: u32| match v {
            LcpValue::Infinite => LcpValue::Infinite,
            LcpValue::Finite(v) => LcpValue::Finite(v + by),
        };
        for (back, &key) in path.iter().rev().enumerate() {
            self.memo.insert(key, extend(outcome, back as u32 + 1));
        }
        Ok(extend(outcome, path.len() as u32))
    }
}

fn pair_key(a: Item, b: Item) -> (usize, usize) {
    let (x, y) = (item_idx(a), item_idx(b));
    if x <= y {
        (x, y)
    } else {
        (y, x)
    }
}

fn item_idx(it: Item) -> usize {
    it.node * 2 + it.side as usize
}

/// Adjacent-LCP arrays over the sorted min items, max items, and the joint
/// sequence, with range-minimum support over the latter.
#[derive(Debug, Clone)]
pub struct LcpArrays {
    lcp_min: Vec<LcpValue>,
    lcp_max: Vec<LcpValue>,
    lcp_joint: Vec<LcpValue>,
    rmq: SparseRmq,
}

impl LcpArrays {
    pub fn build(order: &JointColexOrder) -> Result<Self> {
        let mut walker = PairWalker::new(order);
        let adjacent = |walker: &mut PairWalker, items: &[Item]| -> Result<Vec<LcpValue>> {
            items
                .windows(2)
                .map(|w| walker.lcp(w[0], w[1]))
                .collect()
        };
        let lcp_min = adjacent(&mut walker, &order.sorted_side(Side::Min))?;
        let lcp_max = adjacent(&mut walker, &order.sorted_side(Side::Max))?;
        let lcp_joint = adjacent(&mut walker, order.sorted())?;
        Ok(Self::from_parts(lcp_min, lcp_max, lcp_joint))
    }

    pub(crate) fn from_parts(
        lcp_min: Vec<LcpValue>,
        lcp_max: Vec<LcpValue>,
        lcp_joint: Vec<LcpValue>,
    ) -> Self {
        let rmq = SparseRmq::new(&lcp_joint);
        LcpArrays {
            lcp_min,
            lcp_max,
            lcp_joint,
            rmq,
        }
    }

    /// Adjacent LCPs of the sorted min strings (`n-1` values).
    pub fn lcp_min(&self) -> &[LcpValue] {
        &self.lcp_min
    }

    /// Adjacent LCPs of the sorted max strings (`n-1` values).
    pub fn lcp_max(&self) -> &[LcpValue] {
        &self.lcp_max
    }

    /// Adjacent LCPs of the joint sorted sequence (`2n-1` values).
    pub fn lcp_joint(&self) -> &[LcpValue] {
        &self.lcp_joint
    }

    /// LCP of the items at sorted positions `i < j` (0-based over the joint
    /// sequence): the minimum of the adjacent values between them, which
    /// equals [`lcp_pair`] of the two items.
    pub fn lcp_between(&self, i: usize, j: usize) -> Result<LcpValue> {
        let positions = self.lcp_joint.len() + 1;
        if i >= positions {
            return Err(Error::PositionOutOfRange(i));
        }
        if j >= positions {
            return Err(Error::PositionOutOfRange(j));
        }
        if i >= j {
            return Err(Error::PositionOutOfRange(i.max(j)));
        }
        Ok(self.rmq.min(i, j - 1))
    }
}

/// Sparse-table range minimum: `O(len log len)` table, `O(1)` query.
#[derive(Debug, Clone)]
struct SparseRmq {
    /// `table[k][i]` = min over `[i, i + 2^k)`.
    table: Vec<Vec<LcpValue>>,
}

impl SparseRmq {
    fn new(values: &[LcpValue]) -> Self {
        let n = values.len();
        let mut table = vec![values.to_vec()];
        let mut width = 1;
        while width * 2 <= n {
            let prev = table.last().expect("at least one level");
            let row: Vec<LcpValue> = (0..=n - width * 2)
                .map(|i| prev[i].min(prev[i + width]))
                .collect();
            table.push(row);
            width *= 2;
        }
        SparseRmq { table }
    }

    /// Minimum over the inclusive range `[lo, hi]`.
    fn min(&self, lo: usize, hi: usize) -> LcpValue {
        debug_assert!(lo <= hi && hi < self.table[0].len());
        let k = usize::BITS as usize - 1 - (hi - lo + 1).leading_zeros() as usize;
        self.table[k][lo].min(self.table[k][hi + 1 - (1 << k)])
    }
}
