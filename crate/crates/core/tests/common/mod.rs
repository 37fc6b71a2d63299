//! Brute-force reference for the r-suffix trie, built from the expanded
//! text and the definition of deepest matching nodes alone.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use rdelta_core::dmn::DNodeAttr;
use rdelta_core::Analysis;

/// A trie node: (canonical boundary index, depth).
pub type NodeKey = (usize, usize);

pub struct BruteForce {
    pub text: Vec<u32>,
    pub starts: Vec<usize>,
    pub exps: Vec<usize>,
    n: usize,
    lce: Vec<u16>,
    /// `canon[j][L]`: smallest boundary sharing the first `L` characters with boundary `j`.
    canon: Vec<Vec<u32>>,
    /// Per-node statistics of the lengths `k` with the node in `D_k`.
    offset: Vec<usize>,
    min_k: Vec<u32>,
    max_k: Vec<u32>,
    count_k: Vec<u32>,
    /// Number of distinct substrings per length, by class refinement.
    pub classes: Vec<u64>,
}

impl BruteForce {
    pub fn new(text: &[u32]) -> Self {
        let n = text.len();
        let mut lce = vec![0u16; (n + 1) * (n + 1)];
        for i in (0..n).rev() {
            for j in (0..n).rev() {
                if text[i] == text[j] {
                    lce[i * (n + 1) + j] = 1 + lce[(i + 1) * (n + 1) + j + 1];
                }
            }
        }
        let starts: Vec<usize> = (0..n).filter(|&i| i == 0 || text[i] != text[i - 1]).collect();
        let exps: Vec<usize> = starts
            .iter()
            .enumerate()
            .map(|(j, &s)| starts.get(j + 1).copied().unwrap_or(n) - s)
            .collect();
        let mut bf = BruteForce {
            text: text.to_vec(),
            starts,
            exps,
            n,
            lce,
            canon: Vec::new(),
            offset: Vec::new(),
            min_k: Vec::new(),
            max_k: Vec::new(),
            count_k: Vec::new(),
            classes: Vec::new(),
        };
        bf.build_canon();
        bf.build_dmn_stats();
        bf
    }

    pub fn r(&self) -> usize {
        self.starts.len()
    }

    pub fn lce(&self, i: usize, j: usize) -> usize {
        self.lce[i * (self.n + 1) + j] as usize
    }

    pub fn suffix_len(&self, j: usize) -> usize {
        self.n - self.starts[j]
    }

    fn build_canon(&mut self) {
        let r = self.r();
        let mut canon = Vec::with_capacity(r);
        let mut offset = Vec::with_capacity(r + 1);
        let mut total = 0;
        for j in 0..r {
            let d = self.suffix_len(j);
            let mut arr = vec![j as u32; d + 1];
            arr[0] = 0;
            let mut filled = 0;
            for jp in 0..j {
                let l = self.lce(self.starts[jp], self.starts[j]).min(d);
                if l > filled {
                    arr[filled + 1..=l].iter_mut().for_each(|x| *x = jp as u32);
                    filled = l;
                }
            }
            canon.push(arr);
            offset.push(total);
            total += d + 1;
        }
        offset.push(total);
        self.canon = canon;
        self.offset = offset;
        self.min_k = vec![u32::MAX; total];
        self.max_k = vec![0; total];
        self.count_k = vec![0; total];
    }

    pub fn key(&self, j: usize, depth: usize) -> NodeKey {
        (self.canon[j][depth] as usize, depth)
    }

    fn slot(&self, key: NodeKey) -> usize {
        self.offset[key.0] + key.1
    }

    /// For every length `k` and every distinct substring `w` of length `k`,
    /// locate its deepest matching node: over all occurrences `q`, the one
    /// preceded by the most copies of `w[0]` inside its run.
    fn build_dmn_stats(&mut self) {
        let n = self.n;
        let mut run_of = vec![0usize; n];
        for (j, &s) in self.starts.iter().enumerate() {
            run_of[s..s + self.exps[j]].fill(j);
        }
        let sigma = self.text.iter().copied().max().map_or(0, |m| m as usize + 1);
        let mut class: Vec<usize> = vec![0; n];
        let mut num_classes = 1usize;
        let mut table: Vec<u32> = Vec::new();
        let mut best: Vec<(usize, usize)> = Vec::new();
        for k in 1..=n {
            let m = n - k + 1;
            table.clear();
            table.resize(num_classes * sigma, u32::MAX);
            let mut next = Vec::with_capacity(m);
            let mut fresh = 0u32;
            for i in 0..m {
                let cell = &mut table[class[i] * sigma + self.text[i + k - 1] as usize];
                if *cell == u32::MAX {
                    *cell = fresh;
                    fresh += 1;
                }
                next.push(*cell as usize);
            }
            num_classes = fresh as usize;
            class = next;
            self.classes.push(num_classes as u64);
            best.clear();
            best.resize(num_classes, (0, usize::MAX));
            for q in 0..m {
                let e = q - self.starts[run_of[q]];
                let b = &mut best[class[q]];
                if b.1 == usize::MAX || e > b.0 {
                    *b = (e, q);
                }
            }
            for &(e, q) in &best {
                let j = run_of[q];
                let slot = self.slot(self.key(j, e + k));
                self.min_k[slot] = self.min_k[slot].min(k as u32);
                self.max_k[slot] = self.max_k[slot].max(k as u32);
                self.count_k[slot] += 1;
            }
        }
    }

    /// Membership in `D`, by the definition.
    pub fn in_d(&self, key: NodeKey) -> bool {
        key.1 > 0 && self.count_k[self.slot(key)] > 0
    }

    pub fn first_run_len(&self, j: usize, depth: usize) -> usize {
        self.exps[j].min(depth)
    }

    pub fn t_len(&self, j: usize, depth: usize) -> usize {
        depth - self.first_run_len(j, depth) + 1
    }

    /// Canonical trie nodes other than the root.
    pub fn trie_nodes(&self) -> impl Iterator<Item = NodeKey> + '_ {
        (0..self.r()).flat_map(move |j| {
            (1..=self.suffix_len(j)).filter(move |&l| self.canon[j][l] as usize == j).map(move |l| (j, l))
        })
    }

    /// Deepest node outside `D` on the path of boundary `j`.
    pub fn b_depth(&self, j: usize) -> usize {
        (0..=self.suffix_len(j)).rev().find(|&l| !self.in_d(self.key(j, l))).unwrap()
    }

    pub fn dmn_roots(&self) -> BTreeSet<(NodeKey, usize)> {
        (0..self.r())
            .filter_map(|j| {
                let b = self.b_depth(j);
                (b < self.suffix_len(j)).then(|| (self.key(j, b + 1), self.t_len(j, b + 1)))
            })
            .collect()
    }

    fn next_chars(&self, key: NodeKey) -> (HashSet<u32>, bool) {
        let (c, l) = key;
        let mut chars = HashSet::new();
        let mut ends = false;
        for j in 0..self.r() {
            if self.lce(self.starts[j], self.starts[c]) >= l {
                if self.suffix_len(j) == l {
                    ends = true;
                } else {
                    chars.insert(self.text[self.starts[j] + l]);
                }
            }
        }
        (chars, ends)
    }

    /// Nodes of the compacted trie with sentinels: suffix ends and branchings.
    pub fn explicit_nodes(&self) -> BTreeSet<NodeKey> {
        let mut out = BTreeSet::new();
        for j in 0..self.r() {
            out.insert(self.key(j, self.suffix_len(j)));
            for jp in j + 1..self.r() {
                let l = self.lce(self.starts[j], self.starts[jp]);
                if l > 0 {
                    out.insert(self.key(j, l));
                }
            }
        }
        out
    }

    /// Explicit `D` nodes as `(node, t_len, h)`.
    pub fn explicit_d(&self) -> BTreeSet<(NodeKey, usize, usize)> {
        self.explicit_nodes()
            .into_iter()
            .filter(|&k| self.in_d(k))
            .map(|k| (k, self.t_len(k.0, k.1), self.next_chars(k).0.len()))
            .collect()
    }

    pub fn single_run_nodes_dominated(&self) -> Result<(), String> {
        for j in 0..self.r() {
            for x in 1..self.exps[j] {
                if self.in_d(self.key(j, x)) {
                    return Err(format!("single-run node of depth {x} on boundary {j} is in D"));
                }
            }
        }
        Ok(())
    }

    pub fn k_intervals(&self) -> Result<(), String> {
        for (j, l) in self.trie_nodes() {
            let s = self.slot((j, l));
            if self.count_k[s] == 0 {
                continue;
            }
            let (lo, hi, cnt) = (self.min_k[s] as usize, self.max_k[s] as usize, self.count_k[s] as usize);
            if lo != self.t_len(j, l) || hi != l || cnt != hi - lo + 1 {
                return Err(format!(
                    "node ({j}, {l}): k-set spans [{lo}, {hi}] with {cnt} members, want [{}, {l}]",
                    self.t_len(j, l)
                ));
            }
        }
        Ok(())
    }

    pub fn downward_closed(&self) -> Result<(), String> {
        for (j, l) in self.trie_nodes() {
            let parent = self.key(j, l - 1);
            if self.in_d(parent) && !self.in_d((j, l)) {
                return Err(format!("node ({j}, {l}) not in D but its parent is"));
            }
        }
        Ok(())
    }

    /// `|D_k|` counted from the per-node statistics, for `k = 1..=n`.
    pub fn d_sizes(&self) -> Vec<u64> {
        let mut diff = vec![0i64; self.n + 2];
        for key in self.trie_nodes() {
            let s = self.slot(key);
            if self.count_k[s] > 0 {
                diff[self.min_k[s] as usize] += 1;
                diff[self.max_k[s] as usize + 1] -= 1;
            }
        }
        let mut acc = 0;
        (1..=self.n)
            .map(|k| {
                acc += diff[k];
                acc as u64
            })
            .collect()
    }

    fn engine_key(&self, a: &DNodeAttr) -> NodeKey {
        self.key(a.rep_suffix, a.d as usize)
    }

    /// Compares the engine's intermediate products with the definitions.
    pub fn check_engine(&self, a: &Analysis) -> Result<(), String> {
        for rec in &a.leaves {
            let want = self.b_depth(rec.suffix);
            if rec.b_depth as usize != want {
                return Err(format!("b-depth of boundary {}: engine {}, brute {want}", rec.suffix, rec.b_depth));
            }
        }
        let roots: Vec<(NodeKey, usize)> =
            a.roots.iter().map(|x| (self.engine_key(x), x.t_len as usize)).collect();
        let root_set: BTreeSet<_> = roots.iter().copied().collect();
        if root_set.len() != roots.len() {
            return Err("duplicate DMN-roots".into());
        }
        if root_set != self.dmn_roots() {
            return Err(format!("DMN-roots differ: engine {root_set:?}, brute {:?}", self.dmn_roots()));
        }
        let explicit: Vec<(NodeKey, usize, usize)> = a
            .explicit
            .iter()
            .map(|x| (self.engine_key(x), x.t_len as usize, x.h as usize))
            .collect();
        let explicit_set: BTreeSet<_> = explicit.iter().copied().collect();
        if explicit_set.len() != explicit.len() {
            return Err("duplicate explicit D nodes".into());
        }
        let want = self.explicit_d();
        if explicit_set != want {
            return Err(format!("explicit D nodes differ: engine {explicit_set:?}, brute {want:?}"));
        }
        Ok(())
    }
}

pub mod corpus {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use rdelta_core::generate::{fibonacci_word, thue_morse_word};

    /// A named test input over bytes.
    pub struct Case {
        pub name: String,
        pub text: Vec<u8>,
    }

    /// `count` random inputs with `n <= max_n` over alphabets of size 2, 3
    /// and 8; half uniform text, half random runs with short exponents.
    pub fn random(count: usize, max_n: usize, seed: u64) -> Vec<Case> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|i| {
                let sigma = [2u8, 3, 8][i % 3];
                let n = rng.gen_range(1..=max_n);
                let text: Vec<u8> = if i % 2 == 0 {
                    (0..n).map(|_| b'a' + rng.gen_range(0..sigma)).collect()
                } else {
                    let max_exp = rng.gen_range(1..=8);
                    let mut t = Vec::with_capacity(n);
                    let mut prev = u8::MAX;
                    while t.len() < n {
                        let mut c = rng.gen_range(0..sigma);
                        if c == prev {
                            c = (c + 1) % sigma;
                        }
                        prev = c;
                        let e = rng.gen_range(1..=max_exp);
                        t.extend(std::iter::repeat_n(b'a' + c, e));
                    }
                    t.truncate(n);
                    t
                };
                Case { name: format!("random#{i} sigma={sigma}"), text }
            })
            .collect()
    }

    /// Fibonacci words, Thue-Morse prefixes, squares and `a^i b^j` grids.
    pub fn structured(seed: u64) -> Vec<Case> {
        let mut out = Vec::new();
        for order in 1..=14 {
            out.push(Case { name: format!("fibonacci({order})"), text: fibonacci_word(order).unwrap() });
        }
        for order in 0..=9 {
            out.push(Case { name: format!("thue-morse({order})"), text: thue_morse_word(order).unwrap() });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in 0..60 {
            let len = rng.gen_range(1..=128);
            let sigma = [2u8, 3, 8][i % 3];
            let x: Vec<u8> = (0..len).map(|_| b'a' + rng.gen_range(0..sigma)).collect();
            out.push(Case { name: format!("square#{i}"), text: [x.as_slice(), x.as_slice()].concat() });
        }
        for i in 1..=16 {
            for j in 1..=16 {
                let mut t = vec![b'a'; i];
                t.extend(std::iter::repeat_n(b'b', j));
                out.push(Case { name: format!("a^{i} b^{j}"), text: t.clone() });
                t.extend(std::iter::repeat_n(b'a', j));
                t.extend(std::iter::repeat_n(b'b', i));
                out.push(Case { name: format!("a^{i} b^{j} a^{j} b^{i}"), text: t });
            }
        }
        out
    }
}
