//! Deepest matching nodes.
//!
//! For a node `v` write `str(v) = c^e · x` with `c^e` its first run. The
//! node is the deepest matching node for some string exactly when
//! `c · str(v)` does not occur in the text; such nodes form the set `D`,
//! which is closed under taking children. Along the path of every leaf
//! `l` the nodes outside `D` are therefore a prefix, ending at depth
//! `|b(l)|`. The functions here compute `|b(l)|` for every leaf, the
//! topmost `D` node on every path (the DMN-roots), and the explicit tree
//! nodes that belong to `D`.

use crate::intsort::{sort_by_key, KeyedItem, SortStrategy};
use crate::lca::LcaOracle;
use crate::rle::RleString;
use crate::rstree::{NodeId, RSuffixTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeafRecord {
    pub leaf: NodeId,
    /// Run index of the boundary suffix.
    pub suffix: usize,
    pub symbol: u32,
    pub exponent: u64,
    /// Leaf of the suffix with the first run removed.
    pub rem_leaf: NodeId,
    pub b_depth: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DKind {
    DmnRoot,
    ExplicitD,
}

/// A node of `D` with the attributes the sweep needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DNodeAttr {
    pub kind: DKind,
    /// Shallowest explicit node at or below this (possibly implicit) node.
    pub node: NodeId,
    /// A boundary suffix (run index) whose path passes through the node.
    pub rep_suffix: usize,
    pub d: u64,
    /// `|t(v)| = d - e + 1` where `e` is the length of the first run of `str(v)`.
    pub t_len: u64,
    /// Number of children in the character trie (explicit nodes only).
    pub h: u64,
}

/// Lists `L_c`: for each symbol `c`, the leaves whose first run is over `c`,
/// ordered lexicographically by the suffix that follows the first run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemLists {
    pub lists: Vec<Vec<NodeId>>,
}

pub fn build_rem_lists(tree: &RSuffixTree, rle: &RleString) -> RemLists {
    let mut lists = vec![Vec::new(); rle.sigma()];
    for &leaf in tree.leaves_in_lex_order() {
        let j = tree.node(leaf).suffix.expect("leaf");
        if j > 0 {
            let prev = j - 1;
            lists[rle.run(prev).symbol as usize].push(tree.leaf_of_suffix(prev));
        }
    }
    RemLists { lists }
}

const NIL: usize = usize::MAX;

/// Computes `|b(l)|` for every boundary suffix; the result is indexed by
/// run index.
///
/// Within each list, leaves are processed by increasing first-run
/// exponent. For a leaf with exponent `e`, its nearest surviving list
/// neighbours `p` and `s` have larger exponents, and every surviving leaf
/// between them has exponent `e`; each of those gets
/// `e + max(lcp(rem, rem(p)), lcp(rem, rem(s)))` and is unlinked. With no
/// larger-exponent neighbour at all the result is `e - 1`.
pub fn compute_b_depths(
    tree: &RSuffixTree,
    rle: &RleString,
    oracle: &LcaOracle,
    lists: &RemLists,
    strategy: SortStrategy,
) -> Vec<LeafRecord> {
    let r = rle.r();
    let mut records: Vec<LeafRecord> = (0..r)
        .map(|j| {
            let run = rle.run(j);
            LeafRecord {
                leaf: tree.leaf_of_suffix(j),
                suffix: j,
                symbol: run.symbol,
                exponent: run.exponent,
                rem_leaf: tree.leaf_of_suffix(j + 1),
                b_depth: 0,
            }
        })
        .collect();

    for list in &lists.lists {
        let len = list.len();
        let suffix_at = |i: usize| tree.node(list[i]).suffix.unwrap();
        let exp_at = |i: usize| rle.run(suffix_at(i)).exponent;
        let mut prev: Vec<usize> = (0..len).map(|i| if i == 0 { NIL } else { i - 1 }).collect();
        let mut next: Vec<usize> = (0..len).map(|i| if i + 1 == len { NIL } else { i + 1 }).collect();
        let mut removed = vec![false; len];

        let mut order: Vec<KeyedItem<usize>> =
            (0..len).map(|i| KeyedItem::new(exp_at(i) as u128, i)).collect();
        sort_by_key(&mut order, strategy);

        for item in &order {
            let i = item.payload;
            if removed[i] {
                continue;
            }
            let e = exp_at(i);
            let mut p = prev[i];
            while p != NIL && exp_at(p) == e {
                p = prev[p];
            }
            let mut s = next[i];
            while s != NIL && exp_at(s) == e {
                s = next[s];
            }
            let rem = |x: usize| tree.leaf_of_suffix(suffix_at(x) + 1);
            let mut cur = if p == NIL { first_alive(&prev, i) } else { next[p] };
            while cur != s {
                let j = suffix_at(cur);
                debug_assert_eq!(exp_at(cur), e);
                let best = [p, s]
                    .iter()
                    .filter(|&&x| x != NIL)
                    .map(|&x| oracle.lcp(rem(cur), rem(x)))
                    .max();
                records[j].b_depth = match best {
                    Some(l) => e + l,
                    None => e - 1,
                };
                removed[cur] = true;
                let after = next[cur];
                if prev[cur] != NIL {
                    next[prev[cur]] = after;
                }
                if after != NIL {
                    prev[after] = prev[cur];
                }
                cur = after;
            }
        }
    }
    records
}

fn first_alive(prev: &[usize], mut i: usize) -> usize {
    while prev[i] != NIL {
        i = prev[i];
    }
    i
}

fn in_d(tree: &RSuffixTree, records: &[LeafRecord], v: NodeId) -> bool {
    v != tree.root() && tree.depth(v) > records[tree.node(v).rep].b_depth
}

/// Explicit nodes that stand for a trie node of their own: everything but
/// the root and leaves hanging off a sentinel-only edge.
fn trie_nodes(tree: &RSuffixTree) -> impl Iterator<Item = NodeId> + '_ {
    (0..tree.len()).filter(move |&v| v != tree.root() && !tree.is_sentinel_edge(v))
}

/// The DMN-roots: on every edge whose lower end is in `D` but whose upper
/// end is not, the node at depth `|b(l)| + 1` for the leaves below. Each
/// root is reported once, keyed by the edge it lies on.
pub fn collect_dmn_roots(tree: &RSuffixTree, rle: &RleString, records: &[LeafRecord]) -> Vec<DNodeAttr> {
    let mut roots = Vec::new();
    for v in trie_nodes(tree) {
        let parent = tree.parent(v).expect("non-root");
        if !in_d(tree, records, v) || in_d(tree, records, parent) {
            continue;
        }
        let rep = tree.node(v).rep;
        let d = records[rep].b_depth + 1;
        debug_assert!(tree.depth(parent) < d && d <= tree.depth(v));
        let e = rle.run(rep).exponent.min(d);
        roots.push(DNodeAttr { kind: DKind::DmnRoot, node: v, rep_suffix: rep, d, t_len: d - e + 1, h: 0 });
    }
    roots
}

/// Explicit nodes in `D`, with their real (non-sentinel) child counts.
pub fn collect_explicit_d_nodes(tree: &RSuffixTree, rle: &RleString, records: &[LeafRecord]) -> Vec<DNodeAttr> {
    trie_nodes(tree)
        .filter(|&v| in_d(tree, records, v))
        .map(|v| {
            let d = tree.depth(v);
            let e = tree.first_run(rle, v).expect("non-root").exponent;
            DNodeAttr {
                kind: DKind::ExplicitD,
                node: v,
                rep_suffix: tree.node(v).rep,
                d,
                t_len: d - e + 1,
                h: tree.real_children(v).count() as u64,
            }
        })
        .collect()
}
