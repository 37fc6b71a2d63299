//! Uncompressed reference computation of the substring complexity profile.
//!
//! Deliberately shares no code with the compressed engine: it has its own
//! suffix array (prefix doubling) and its own LCP computation.

use std::collections::HashMap;

use crate::error::RleError;
use crate::sweep::DeltaResult;

/// Largest text accepted by [`naive_profile`].
pub const NAIVE_LIMIT: usize = 1_000_000;
/// Largest text accepted by [`quadratic_profile`].
pub const QUADRATIC_LIMIT: usize = 4096;

/// `counts[k - 1] = |Substr(k)|` for `k = 1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Profile {
    pub counts: Vec<u64>,
}

impl Profile {
    /// `|Substr(k)|`, zero outside `1..=n`.
    pub fn get(&self, k: u64) -> u64 {
        match k {
            0 => 0,
            k => self.counts.get(k as usize - 1).copied().unwrap_or(0),
        }
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

fn too_large(n: usize, limit: usize) -> RleError {
    RleError::InputTooLarge { n: n as u64, limit: limit as u64 }
}

fn doubling_suffix_array<T: Ord>(text: &[T]) -> Vec<usize> {
    let n = text.len();
    let mut sa: Vec<usize> = (0..n).collect();
    sa.sort_by(|&a, &b| text[a].cmp(&text[b]));
    let mut rank = vec![0usize; n];
    for i in 1..n {
        rank[sa[i]] = rank[sa[i - 1]] + usize::from(text[sa[i]] != text[sa[i - 1]]);
    }
    let mut tmp = vec![0usize; n];
    let mut h = 1;
    while n > 0 && rank[sa[n - 1]] + 1 < n {
        let key = |i: usize| (rank[i], if i + h < n { rank[i + h] + 1 } else { 0 });
        sa.sort_unstable_by_key(|&i| key(i));
        tmp[sa[0]] = 0;
        for i in 1..n {
            tmp[sa[i]] = tmp[sa[i - 1]] + usize::from(key(sa[i]) != key(sa[i - 1]));
        }
        std::mem::swap(&mut rank, &mut tmp);
        h *= 2;
    }
    sa
}

/// Profile via suffix array and LCP histogram:
/// `|Substr(k)| = (n - k + 1) - #{i : lcp[i] >= k}`.
pub fn naive_profile<T: Ord>(text: &[T]) -> Result<Profile, RleError> {
    let n = text.len();
    if n > NAIVE_LIMIT {
        return Err(too_large(n, NAIVE_LIMIT));
    }
    let sa = doubling_suffix_array(text);
    let mut rank = vec![0usize; n];
    for (i, &p) in sa.iter().enumerate() {
        rank[p] = i;
    }
    // hist[l] counts adjacent suffix pairs with LCP exactly l.
    let mut hist = vec![0u64; n + 1];
    let mut h = 0usize;
    for i in 0..n {
        if rank[i] == 0 {
            h = 0;
            continue;
        }
        let j = sa[rank[i] - 1];
        while i + h < n && j + h < n && text[i + h] == text[j + h] {
            h += 1;
        }
        hist[h] += 1;
        h = h.saturating_sub(1);
    }
    let mut at_least = 0u64;
    let mut counts = vec![0u64; n];
    for k in (1..=n).rev() {
        at_least += hist[k];
        counts[k - 1] = (n - k + 1) as u64 - at_least;
    }
    Ok(Profile { counts })
}

/// Profile by refining equality classes of substrings one length at a
/// time; quadratic in the worst case.
pub fn quadratic_profile<T: Ord + Copy + std::hash::Hash>(text: &[T]) -> Result<Profile, RleError> {
    let n = text.len();
    if n > QUADRATIC_LIMIT {
        return Err(too_large(n, QUADRATIC_LIMIT));
    }
    let mut counts = Vec::with_capacity(n);
    // class[i] identifies text[i..i + k] among substrings of length k.
    let mut class: Vec<usize> = vec![0; n];
    for k in 1..=n {
        let mut ids: HashMap<(usize, T), usize> = HashMap::with_capacity(n - k + 1);
        let mut next = Vec::with_capacity(n - k + 1);
        for i in 0..=n - k {
            let fresh = ids.len();
            next.push(*ids.entry((class[i], text[i + k - 1])).or_insert(fresh));
        }
        let distinct = ids.len();
        counts.push(distinct as u64);
        class = next;
        if distinct == n - k + 1 {
            // All substrings of length k are distinct, hence so are longer ones.
            counts.extend((k + 1..=n).map(|l| (n - l + 1) as u64));
            break;
        }
    }
    Ok(Profile { counts })
}

/// `delta` as the exact maximum of `|Substr(k)| / k` over the whole profile.
pub fn naive_delta<T: Ord + std::hash::Hash + Copy>(text: &[T]) -> Result<DeltaResult, RleError> {
    let profile = naive_profile(text)?;
    let mut sorted: Vec<T> = text.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut runs = 0;
    for i in 0..text.len() {
        if i == 0 || text[i] != text[i - 1] {
            runs += 1;
        }
    }
    let points = profile.counts.iter().enumerate().map(|(i, &c)| (i as u64 + 1, c)).collect();
    Ok(DeltaResult::from_points(points, runs, text.len() as u64, sorted.len()))
}
