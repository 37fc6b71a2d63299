//! The r-suffix tree: a compacted trie of the suffixes that start at run
//! boundaries, built in space proportional to the number of runs.
//!
//! Construction replaces each run by a meta-character ranked by
//! `(symbol, exponent)`, builds the suffix tree of that meta-string from
//! its suffix array and LCP array, and then splits sibling edges that start
//! with runs of the same symbol but different lengths. The result is the
//! compacted character-level trie of all run-boundary suffixes, each
//! terminated by a sentinel that sorts before every symbol.
//!
//! Edge labels are never stored. Every node keeps a representative
//! boundary suffix `rep` from its subtree, and the label of the edge into
//! `v` is `T[start(rep) + depth(parent) .. start(rep) + depth(v)]`.

use std::fmt::Write as _;

use crate::error::InvariantViolation;
use crate::intsort::{pack, sort_by_key, KeyedItem, SortStrategy};
use crate::rle::{RleString, Run};
use crate::sais::{lcp_array, suffix_array};

pub type NodeId = usize;

/// The meta-string `w` with its terminating sentinel (rank 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetaString {
    pub w: Vec<u32>,
    /// `rank_table[k - 1]` is the run with meta rank `k`.
    pub rank_table: Vec<Run>,
}

impl MetaString {
    pub fn alphabet_size(&self) -> usize {
        self.rank_table.len() + 1
    }

    pub fn run_of_rank(&self, rank: u32) -> Option<Run> {
        rank.checked_sub(1).map(|k| self.rank_table[k as usize])
    }
}

/// Ranks the runs by `(symbol, exponent)`; equal runs share a rank.
pub fn build_meta_string(rle: &RleString, strategy: SortStrategy) -> MetaString {
    let mut items: Vec<KeyedItem<u32>> = rle
        .runs()
        .iter()
        .enumerate()
        .map(|(j, run)| KeyedItem::new(pack(run.symbol as u64, run.exponent), j as u32))
        .collect();
    sort_by_key(&mut items, strategy);
    let mut w = vec![0u32; rle.r() + 1];
    let mut rank_table: Vec<Run> = Vec::new();
    let mut prev_key = None;
    for it in &items {
        if prev_key != Some(it.key) {
            rank_table.push(rle.run(it.payload as usize));
            prev_key = Some(it.key);
        }
        w[it.payload as usize] = rank_table.len() as u32;
    }
    MetaString { w, rank_table }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub parent: Option<NodeId>,
    /// Ordered by first character, sentinel first.
    pub children: Vec<NodeId>,
    /// String depth in characters; the sentinel contributes nothing.
    pub depth: u64,
    /// A boundary suffix (run index) whose path passes through this node.
    pub rep: usize,
    /// Boundary suffix ending here, for leaves. The sentinel-only leaf
    /// carries `r`.
    pub suffix: Option<usize>,
    /// Created while splitting same-symbol sibling runs.
    pub chain: bool,
}

#[derive(Debug, Clone)]
pub struct RSuffixTree {
    nodes: Vec<Node>,
    leaves_in_lex_order: Vec<NodeId>,
    leaf_of_suffix: Vec<NodeId>,
    /// Tree level (edge count) per node.
    levels: Vec<u32>,
    r: usize,
}

pub const ROOT: NodeId = 0;

struct MetaNode {
    mdepth: usize,
    children: Vec<usize>,
    rep: usize,
    is_leaf: bool,
}

fn build_meta_tree(meta: &MetaString) -> Vec<MetaNode> {
    let w = &meta.w;
    let sa = suffix_array(w, meta.alphabet_size());
    let lcp = lcp_array(w, &sa);
    let mut nodes = vec![MetaNode { mdepth: 0, children: Vec::new(), rep: sa[0], is_leaf: false }];
    let mut stack = vec![0usize];
    for (i, &suffix) in sa.iter().enumerate() {
        let l = lcp[i];
        let mut last = None;
        while nodes[*stack.last().unwrap()].mdepth > l {
            last = stack.pop();
        }
        let top = *stack.last().unwrap();
        if nodes[top].mdepth < l {
            let last = last.expect("popped a deeper node");
            let id = nodes.len();
            nodes.push(MetaNode {
                mdepth: l,
                children: vec![last],
                rep: nodes[last].rep,
                is_leaf: false,
            });
            let popped = nodes[top].children.pop();
            debug_assert_eq!(popped, Some(last));
            nodes[top].children.push(id);
            stack.push(id);
        }
        let parent = *stack.last().unwrap();
        let id = nodes.len();
        nodes.push(MetaNode { mdepth: w.len() - suffix, children: Vec::new(), rep: suffix, is_leaf: true });
        nodes[parent].children.push(id);
        stack.push(id);
    }
    nodes
}

struct Builder<'a> {
    rle: &'a RleString,
    nodes: Vec<Node>,
}

impl Builder<'_> {
    fn add(&mut self, parent: Option<NodeId>, depth: u64, rep: usize, suffix: Option<usize>, chain: bool) -> NodeId {
        let id = self.nodes.len();
        self.nodes.push(Node { parent, children: Vec::new(), depth, rep, suffix, chain });
        if let Some(p) = parent {
            self.nodes[p].children.push(id);
        }
        id
    }

    /// Character depth of a meta node: the summed exponents of its first
    /// `mdepth` runs, sentinel excluded.
    fn char_depth(&self, m: &MetaNode) -> u64 {
        let end = (m.rep + m.mdepth).min(self.rle.r());
        self.rle.start(end) - self.rle.start(m.rep)
    }

    fn add_meta(&mut self, parent: NodeId, m: &MetaNode) -> NodeId {
        let suffix = m.is_leaf.then_some(m.rep);
        self.add(Some(parent), self.char_depth(m), m.rep, suffix, false)
    }
}

impl RSuffixTree {
    /// Builds the r-suffix tree. `rle` may be empty, in which case the tree
    /// is a root with the sentinel-only leaf.
    pub fn build(rle: &RleString, strategy: SortStrategy) -> Result<Self, InvariantViolation> {
        let meta = build_meta_string(rle, strategy);
        let mtree = build_meta_tree(&meta);
        let mut b = Builder { rle, nodes: Vec::with_capacity(3 * rle.r() + 3) };
        b.add(None, 0, mtree[0].rep, None, false);
        let mut work = vec![(0usize, ROOT)];
        while let Some((mid, cid)) = work.pop() {
            let mnode = &mtree[mid];
            Self::normalize_children(&mut b, &meta, &mtree, mnode, cid, &mut work)?;
        }
        let nodes = Self::compact(b.nodes);
        Self::finish(rle, nodes)
    }

    /// Attaches the character-level children of meta node `mnode` below
    /// `cid`, chaining siblings whose first runs share a symbol.
    fn normalize_children(
        b: &mut Builder<'_>,
        meta: &MetaString,
        mtree: &[MetaNode],
        mnode: &MetaNode,
        cid: NodeId,
        work: &mut Vec<(usize, NodeId)>,
    ) -> Result<(), InvariantViolation> {
        let base = b.nodes[cid].depth;
        let first_run = |child: usize| meta.run_of_rank(meta.w[mtree[child].rep + mnode.mdepth]);
        let kids = &mnode.children;
        let mut i = 0;
        while i < kids.len() {
            let Some(run) = first_run(kids[i]) else {
                let id = b.add_meta(cid, &mtree[kids[i]]);
                work.push((kids[i], id));
                i += 1;
                continue;
            };
            let mut end = i + 1;
            while end < kids.len() && first_run(kids[end]).is_some_and(|r| r.symbol == run.symbol) {
                end += 1;
            }
            let group = &kids[i..end];
            let mut cur = cid;
            let mut prev_exp = 0;
            for (g, &child) in group.iter().enumerate() {
                let exp = first_run(child).unwrap().exponent;
                if g > 0 && exp <= prev_exp {
                    return Err(InvariantViolation(format!(
                        "siblings share first run ({}, {exp}) below depth {base}",
                        run.symbol
                    )));
                }
                prev_exp = exp;
                let m = &mtree[child];
                if g + 1 == group.len() {
                    let id = b.add_meta(cur, m);
                    work.push((child, id));
                } else if !m.is_leaf && b.char_depth(m) == base + exp {
                    let id = b.add_meta(cur, m);
                    work.push((child, id));
                    cur = id;
                } else {
                    let link = b.add(Some(cur), base + exp, m.rep, None, true);
                    let id = b.add_meta(link, m);
                    work.push((child, id));
                    cur = link;
                }
            }
            i = end;
        }
        Ok(())
    }

    /// Splices out non-root internal nodes left with a single child.
    fn compact(nodes: Vec<Node>) -> Vec<Node> {
        let mut out: Vec<Node> = Vec::with_capacity(nodes.len());
        let mut map = vec![usize::MAX; nodes.len()];
        out.push(Node { parent: None, children: Vec::new(), ..nodes[ROOT].clone() });
        map[ROOT] = 0;
        let mut stack = vec![ROOT];
        while let Some(old) = stack.pop() {
            let new_parent = map[old];
            for &c in &nodes[old].children {
                let mut c = c;
                while nodes[c].suffix.is_none() && nodes[c].children.len() == 1 {
                    c = nodes[c].children[0];
                }
                let id = out.len();
                out.push(Node { parent: Some(new_parent), children: Vec::new(), ..nodes[c].clone() });
                out[new_parent].children.push(id);
                map[c] = id;
                stack.push(c);
            }
        }
        out
    }

    fn finish(rle: &RleString, mut nodes: Vec<Node>) -> Result<Self, InvariantViolation> {
        let r = rle.r();
        // Order children by first character; the sentinel edge sorts first.
        for v in 0..nodes.len() {
            let depth = nodes[v].depth;
            let mut keyed: Vec<(u64, NodeId)> = nodes[v]
                .children
                .iter()
                .map(|&c| (edge_key(rle, &nodes[c], depth), c))
                .collect();
            keyed.sort_unstable();
            if keyed.windows(2).any(|p| p[0].0 == p[1].0) {
                return Err(InvariantViolation(format!(
                    "node {v} has two children with the same first character"
                )));
            }
            nodes[v].children = keyed.into_iter().map(|(_, c)| c).collect();
        }
        let mut leaves_in_lex_order = Vec::with_capacity(r + 1);
        let mut leaf_of_suffix = vec![usize::MAX; r + 1];
        let mut levels = vec![0u32; nodes.len()];
        let mut stack = vec![ROOT];
        while let Some(v) = stack.pop() {
            if let Some(j) = nodes[v].suffix {
                leaves_in_lex_order.push(v);
                leaf_of_suffix[j] = v;
            }
            for &c in nodes[v].children.iter().rev() {
                levels[c] = levels[v] + 1;
                stack.push(c);
            }
        }
        if leaf_of_suffix.contains(&usize::MAX) {
            return Err(InvariantViolation("a boundary suffix has no leaf".into()));
        }
        Ok(RSuffixTree { nodes, leaves_in_lex_order, leaf_of_suffix, levels, r })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, v: NodeId) -> &Node {
        &self.nodes[v]
    }

    pub fn root(&self) -> NodeId {
        ROOT
    }

    pub fn depth(&self, v: NodeId) -> u64 {
        self.nodes[v].depth
    }

    pub fn level(&self, v: NodeId) -> u32 {
        self.levels[v]
    }

    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        self.nodes[v].parent
    }

    pub fn children(&self, v: NodeId) -> &[NodeId] {
        &self.nodes[v].children
    }

    /// Number of runs of the underlying string.
    pub fn r(&self) -> usize {
        self.r
    }

    /// All leaves, including the sentinel-only leaf (first).
    pub fn leaves_in_lex_order(&self) -> &[NodeId] {
        &self.leaves_in_lex_order
    }

    /// Leaf of the boundary suffix starting at run `j`; `j = r` gives the
    /// sentinel-only leaf.
    pub fn leaf_of_suffix(&self, j: usize) -> NodeId {
        self.leaf_of_suffix[j]
    }

    pub fn sentinel_leaf(&self) -> NodeId {
        self.leaf_of_suffix[self.r]
    }

    /// True for leaves reached by a sentinel-only edge: they denote the
    /// same trie node as their parent.
    pub fn is_sentinel_edge(&self, v: NodeId) -> bool {
        match self.nodes[v].parent {
            Some(p) => self.nodes[v].suffix.is_some() && self.nodes[v].depth == self.nodes[p].depth,
            None => false,
        }
    }

    /// Children that extend the string by a real character.
    pub fn real_children(&self, v: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.nodes[v].children.iter().copied().filter(move |&c| !self.is_sentinel_edge(c))
    }

    /// First run of `str(v)`: the symbol and the run length truncated to
    /// the node depth. `None` at depth 0.
    pub fn first_run(&self, rle: &RleString, v: NodeId) -> Option<Run> {
        let node = &self.nodes[v];
        if node.depth == 0 {
            return None;
        }
        let run = rle.run(node.rep);
        Some(Run { symbol: run.symbol, exponent: run.exponent.min(node.depth) })
    }

    /// Label of the edge into `v` as `(symbol, count)` runs, plus whether
    /// it ends with the sentinel.
    pub fn edge_label(&self, rle: &RleString, v: NodeId) -> (Vec<(u32, u64)>, bool) {
        let node = &self.nodes[v];
        let from = node.parent.map_or(0, |p| self.nodes[p].depth);
        let base = rle.start(node.rep);
        let (mut pos, end) = (base + from, base + node.depth);
        let mut out = Vec::new();
        while pos < end {
            let j = rle.run_at(pos);
            let take = rle.start(j + 1).min(end) - pos;
            out.push((rle.run(j).symbol, take));
            pos += take;
        }
        (out, node.suffix.is_some())
    }

    /// Graphviz dump; labels show depth, first run and node kind.
    pub fn to_dot(&self, rle: &RleString) -> String {
        let mut out = String::from("digraph rsuffixtree {\n  node [shape=box, fontname=monospace];\n");
        for (v, node) in self.nodes.iter().enumerate() {
            let first = match self.first_run(rle, v) {
                Some(run) => format!("{}^{}", display_symbol(rle, run.symbol), run.exponent),
                None => "-".into(),
            };
            let kind = match node.suffix {
                Some(j) if j == self.r => "sentinel".to_string(),
                Some(j) => format!("leaf s{}", rle.start(j) + 1),
                None if node.chain => "explicit (chain)".into(),
                None => "explicit".into(),
            };
            writeln!(out, "  n{v} [label=\"d={} first={first}\\n{kind}\"];", node.depth).unwrap();
            if let Some(p) = node.parent {
                let (label, sentinel) = self.edge_label(rle, v);
                let mut text: String = label
                    .iter()
                    .map(|&(s, e)| format!("{}^{}", display_symbol(rle, s), e))
                    .collect::<Vec<_>>()
                    .join(" ");
                if sentinel {
                    text.push_str(" $");
                }
                writeln!(out, "  n{p} -> n{v} [label=\"{}\"];", text.trim()).unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}

fn display_symbol(rle: &RleString, rank: u32) -> String {
    match char::from_u32(rle.symbols().external(rank)) {
        Some(c) if c.is_ascii_alphanumeric() => c.to_string(),
        _ => format!("0x{:02X}", rle.symbols().external(rank)),
    }
}

/// First character of the edge into `child` below a node at depth
/// `parent_depth`: 0 for the sentinel, `symbol + 1` otherwise.
fn edge_key(rle: &RleString, child: &Node, parent_depth: u64) -> u64 {
    if child.depth == parent_depth {
        0
    } else {
        let pos = rle.start(child.rep) + parent_depth;
        rle.run(rle.run_at(pos)).symbol as u64 + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rle::encode;

    fn tree(text: &[u8]) -> (RleString, RSuffixTree) {
        let rle = encode(text);
        let t = RSuffixTree::build(&rle, SortStrategy::Auto).unwrap();
        (rle, t)
    }

    #[test]
    fn meta_string_examples() {
        let m = build_meta_string(&encode(b"aabbbaabb"), SortStrategy::Auto);
        assert_eq!(m.w, vec![1, 3, 1, 2, 0]);
        let m = build_meta_string(&encode(b"aaaaa"), SortStrategy::Radix);
        assert_eq!(m.w, vec![1, 0]);
        let m = build_meta_string(&encode(b"aabbbaabbaaa"), SortStrategy::Comparison);
        assert_eq!(m.w, vec![1, 4, 1, 3, 2, 0]);
        assert_eq!(m.rank_table.len(), 4);
    }

    #[test]
    fn running_example_shape() {
        let (rle, t) = tree(b"aabbbaabbaaa");
        let mut internal: Vec<u64> = (1..t.len())
            .filter(|&v| t.node(v).suffix.is_none())
            .map(|v| t.depth(v))
            .collect();
        internal.sort();
        assert_eq!(internal, vec![2, 2, 4]);
        let leaves: Vec<u64> = (0..rle.r()).map(|j| t.depth(t.leaf_of_suffix(j))).collect();
        assert_eq!(leaves, vec![12, 10, 7, 5, 3]);
        // Lex order: $, aaa, aabbaaa, aabbbaabbaaa, bbaaa, bbbaabbaaa.
        let order: Vec<u64> = t.leaves_in_lex_order().iter().map(|&v| t.depth(v)).collect();
        assert_eq!(order, vec![0, 3, 7, 12, 5, 10]);
    }

    #[test]
    fn single_run_tree() {
        let rle = RleString::from_pairs([(b'a' as u32, 1u64 << 40)], false).unwrap();
        let t = RSuffixTree::build(&rle, SortStrategy::Auto).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.depth(t.leaf_of_suffix(0)), 1 << 40);
        assert_eq!(t.children(ROOT), &[t.sentinel_leaf(), t.leaf_of_suffix(0)]);
    }

    #[test]
    fn empty_input() {
        let (_, t) = tree(b"");
        assert_eq!(t.len(), 2);
        assert_eq!(t.leaves_in_lex_order(), &[t.sentinel_leaf()]);
    }

    #[test]
    fn chain_of_three_runs() {
        // Siblings (a,3), (a,5), (a,7) below the b-node.
        let (rle, t) = tree(b"baaabaaaaabaaaaaaab");
        let b_node = (0..t.len())
            .find(|&v| t.depth(v) == 1 && t.node(v).suffix.is_none())
            .unwrap();
        let mut chain = Vec::new();
        let mut v = b_node;
        loop {
            let next: Vec<NodeId> = t
                .real_children(v)
                .filter(|&c| t.edge_label(&rle, c).0.first().map(|x| x.0) == Some(0))
                .collect();
            match next.as_slice() {
                [c] => {
                    chain.push(t.depth(*c));
                    v = *c;
                }
                _ => break,
            }
        }
        assert_eq!(chain, vec![4, 6, 9]);
    }

    #[test]
    fn dot_dump_mentions_every_node() {
        let (rle, t) = tree(b"aabbbaabbaaa");
        let dot = t.to_dot(&rle);
        assert_eq!(dot.matches("[label=\"d=").count(), t.len());
        assert!(dot.contains("explicit (chain)"));
    }
}
