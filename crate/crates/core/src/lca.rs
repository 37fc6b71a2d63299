//! Lowest common ancestors over the r-suffix tree, and through them the
//! longest common prefix of any two run-boundary suffixes.

use crate::rstree::{NodeId, RSuffixTree};

/// Range-minimum structure answering argmin queries over a fixed array.
pub trait RangeMin {
    /// Index of a minimum of `values[lo..=hi]`.
    fn argmin(&self, lo: usize, hi: usize) -> usize;
}

/// Sparse table: `O(m lg m)` words, O(1) queries.
#[derive(Debug, Clone)]
pub struct SparseTable {
    values: Vec<u32>,
    /// `table[k][i]` is the argmin of `values[i .. i + 2^k]`.
    table: Vec<Vec<u32>>,
}

impl SparseTable {
    pub fn new(values: Vec<u32>) -> Self {
        let m = values.len();
        let mut table = vec![(0..m as u32).collect::<Vec<u32>>()];
        let mut k = 1;
        while (1 << k) <= m {
            let prev = &table[k - 1];
            let half = 1 << (k - 1);
            let row = (0..=m - (1 << k))
                .map(|i| {
                    let (a, b) = (prev[i], prev[i + half]);
                    if values[b as usize] < values[a as usize] {
                        b
                    } else {
                        a
                    }
                })
                .collect();
            table.push(row);
            k += 1;
        }
        SparseTable { values, table }
    }
}

impl RangeMin for SparseTable {
    fn argmin(&self, lo: usize, hi: usize) -> usize {
        debug_assert!(lo <= hi);
        let k = (hi - lo + 1).ilog2() as usize;
        let (a, b) = (self.table[k][lo], self.table[k][hi + 1 - (1 << k)]);
        if self.values[b as usize] < self.values[a as usize] {
            b as usize
        } else {
            a as usize
        }
    }
}

const BLOCK: usize = 64;

/// Linear-space RMQ: 64-element blocks with per-position stack bitmasks
/// inside a block and a sparse table over the block minima.
#[derive(Debug, Clone)]
pub struct BlockRmq {
    values: Vec<u32>,
    /// Bit `b` of `masks[i]` is set iff position `block_start + b` is on
    /// the monotone minimum stack after scanning up to `i`.
    masks: Vec<u64>,
    blocks: SparseTable,
    block_argmin: Vec<u32>,
}

impl BlockRmq {
    pub fn new(values: Vec<u32>) -> Self {
        let m = values.len();
        let mut masks = vec![0u64; m];
        let mut block_argmin = Vec::with_capacity(m.div_ceil(BLOCK));
        for start in (0..m).step_by(BLOCK) {
            let end = (start + BLOCK).min(m);
            let mut mask = 0u64;
            for i in start..end {
                while mask != 0 {
                    let top = start + 63 - mask.leading_zeros() as usize;
                    if values[top] >= values[i] {
                        mask &= !(1u64 << (top - start));
                    } else {
                        break;
                    }
                }
                mask |= 1u64 << (i - start);
                masks[i] = mask;
            }
            block_argmin.push((start + masks[end - 1].trailing_zeros() as usize) as u32);
        }
        let mins = block_argmin.iter().map(|&i| values[i as usize]).collect();
        BlockRmq { blocks: SparseTable::new(mins), values, masks, block_argmin }
    }

    fn in_block(&self, lo: usize, hi: usize) -> usize {
        let start = lo - lo % BLOCK;
        let mask = self.masks[hi] & (u64::MAX << (lo - start));
        start + mask.trailing_zeros() as usize
    }

    fn better(&self, a: usize, b: usize) -> usize {
        if self.values[b] < self.values[a] {
            b
        } else {
            a
        }
    }
}

impl RangeMin for BlockRmq {
    fn argmin(&self, lo: usize, hi: usize) -> usize {
        debug_assert!(lo <= hi);
        let (bl, bh) = (lo / BLOCK, hi / BLOCK);
        if bl == bh {
            return self.in_block(lo, hi);
        }
        let mut best = self.in_block(lo, (bl + 1) * BLOCK - 1);
        best = self.better(best, self.in_block(bh * BLOCK, hi));
        if bl + 1 < bh {
            let b = self.blocks.argmin(bl + 1, bh - 1);
            best = self.better(best, self.block_argmin[b] as usize);
        }
        best
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RmqKind {
    #[default]
    SparseTable,
    Block,
}

#[derive(Debug, Clone)]
enum Rmq {
    Sparse(SparseTable),
    Block(BlockRmq),
}

/// Euler tour of the tree with a range-minimum structure over tour levels.
#[derive(Debug, Clone)]
pub struct LcaOracle {
    tour: Vec<NodeId>,
    first: Vec<usize>,
    depths: Vec<u64>,
    rmq: Rmq,
}

impl LcaOracle {
    pub fn build(tree: &RSuffixTree, kind: RmqKind) -> Self {
        let mut tour = Vec::with_capacity(2 * tree.len());
        let mut levels = Vec::with_capacity(2 * tree.len());
        let mut first = vec![0usize; tree.len()];
        let mut stack: Vec<(NodeId, usize)> = vec![(tree.root(), 0)];
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if *next == 0 {
                first[v] = tour.len();
            }
            tour.push(v);
            levels.push(tree.level(v));
            if let Some(&c) = tree.children(v).get(*next) {
                *next += 1;
                stack.push((c, 0));
            } else {
                stack.pop();
            }
        }
        let rmq = match kind {
            RmqKind::SparseTable => Rmq::Sparse(SparseTable::new(levels)),
            RmqKind::Block => Rmq::Block(BlockRmq::new(levels)),
        };
        let depths = tree.nodes().iter().map(|n| n.depth).collect();
        LcaOracle { tour, first, depths, rmq }
    }

    pub fn lca(&self, u: NodeId, v: NodeId) -> NodeId {
        let (a, b) = (self.first[u], self.first[v]);
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let idx = match &self.rmq {
            Rmq::Sparse(t) => t.argmin(lo, hi),
            Rmq::Block(t) => t.argmin(lo, hi),
        };
        self.tour[idx]
    }

    /// Character-level LCP of the strings of two nodes; for two leaves this
    /// is the LCP of their boundary suffixes.
    pub fn lcp(&self, u: NodeId, v: NodeId) -> u64 {
        self.depths[self.lca(u, v)]
    }

    /// LCP of the boundary suffixes starting at runs `i` and `j` (`r`
    /// denotes the empty suffix).
    pub fn lcp_suffixes(&self, tree: &RSuffixTree, i: usize, j: usize) -> u64 {
        self.lcp(tree.leaf_of_suffix(i), tree.leaf_of_suffix(j))
    }
}
