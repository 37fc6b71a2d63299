//! Suffix arrays over integer alphabets by induced sorting, and LCP arrays.

/// Suffix array of `s` over the alphabet `0..alphabet`.
///
/// `s` must end with a unique sentinel `0` that occurs nowhere else.
pub fn suffix_array(s: &[u32], alphabet: usize) -> Vec<usize> {
    debug_assert!(s.last() == Some(&0));
    debug_assert!(s[..s.len() - 1].iter().all(|&c| c > 0));
    let s: Vec<usize> = s.iter().map(|&c| c as usize).collect();
    let mut sa = vec![0usize; s.len()];
    sais(&s, alphabet, &mut sa);
    sa
}

const EMPTY: usize = usize::MAX;

fn bucket_bounds(s: &[usize], alphabet: usize, ends: bool) -> Vec<usize> {
    let mut counts = vec![0usize; alphabet];
    for &c in s {
        counts[c] += 1;
    }
    let mut sum = 0;
    counts
        .into_iter()
        .map(|c| {
            sum += c;
            if ends {
                sum
            } else {
                sum - c
            }
        })
        .collect()
}

fn is_lms(stype: &[bool], i: usize) -> bool {
    i > 0 && stype[i] && !stype[i - 1]
}

fn induce(s: &[usize], alphabet: usize, stype: &[bool], sa: &mut [usize]) {
    let n = s.len();
    let mut heads = bucket_bounds(s, alphabet, false);
    for i in 0..n {
        let j = sa[i];
        if j != EMPTY && j > 0 && !stype[j - 1] {
            let c = s[j - 1];
            sa[heads[c]] = j - 1;
            heads[c] += 1;
        }
    }
    let mut tails = bucket_bounds(s, alphabet, true);
    for i in (0..n).rev() {
        let j = sa[i];
        if j != EMPTY && j > 0 && stype[j - 1] {
            let c = s[j - 1];
            tails[c] -= 1;
            sa[tails[c]] = j - 1;
        }
    }
}

fn sais(s: &[usize], alphabet: usize, sa: &mut [usize]) {
    let n = s.len();
    if n == 1 {
        sa[0] = 0;
        return;
    }
    let mut stype = vec![false; n];
    stype[n - 1] = true;
    for i in (0..n - 1).rev() {
        stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
    }

    // Place LMS suffixes at bucket tails and induce.
    sa.fill(EMPTY);
    let mut tails = bucket_bounds(s, alphabet, true);
    for i in (1..n).rev() {
        if is_lms(&stype, i) {
            let c = s[i];
            tails[c] -= 1;
            sa[tails[c]] = i;
        }
    }
    induce(s, alphabet, &stype, sa);

    // Compact sorted LMS positions and name LMS substrings.
    let mut lms_count = 0;
    for i in 0..n {
        if is_lms(&stype, sa[i]) {
            sa[lms_count] = sa[i];
            lms_count += 1;
        }
    }
    sa[lms_count..].fill(EMPTY);
    let mut name = 0usize;
    let mut prev: Option<usize> = None;
    for i in 0..lms_count {
        let pos = sa[i];
        let differs = match prev {
            None => true,
            Some(p) => lms_substring_differs(s, &stype, p, pos),
        };
        if differs {
            name += 1;
        }
        prev = Some(pos);
        sa[lms_count + pos / 2] = name - 1;
    }
    let reduced: Vec<usize> = sa[lms_count..n].iter().copied().filter(|&x| x != EMPTY).collect();

    let lms_positions: Vec<usize> = (1..n).filter(|&i| is_lms(&stype, i)).collect();
    let mut reduced_sa = vec![0usize; lms_count];
    if name < lms_count {
        sais(&reduced, name, &mut reduced_sa);
    } else {
        for (i, &c) in reduced.iter().enumerate() {
            reduced_sa[c] = i;
        }
    }

    // Seed the final induction with LMS suffixes in sorted order.
    sa.fill(EMPTY);
    let mut tails = bucket_bounds(s, alphabet, true);
    for &r in reduced_sa.iter().rev() {
        let pos = lms_positions[r];
        let c = s[pos];
        tails[c] -= 1;
        sa[tails[c]] = pos;
    }
    induce(s, alphabet, &stype, sa);
}

fn lms_substring_differs(s: &[usize], stype: &[bool], a: usize, b: usize) -> bool {
    let n = s.len();
    if a == n - 1 || b == n - 1 {
        return a != b;
    }
    let mut i = 0;
    loop {
        let (x, y) = (a + i, b + i);
        if s[x] != s[y] || stype[x] != stype[y] {
            return true;
        }
        if i > 0 && (is_lms(stype, x) || is_lms(stype, y)) {
            return !(is_lms(stype, x) && is_lms(stype, y));
        }
        i += 1;
    }
}

/// LCP array by Kasai's algorithm: `lcp[i]` is the longest common prefix
/// of the suffixes at `sa[i - 1]` and `sa[i]`; `lcp[0] = 0`.
pub fn lcp_array<T: Eq>(s: &[T], sa: &[usize]) -> Vec<usize> {
    let n = s.len();
    let mut rank = vec![0usize; n];
    for (i, &p) in sa.iter().enumerate() {
        rank[p] = i;
    }
    let mut lcp = vec![0usize; n];
    let mut h = 0usize;
    for i in 0..n {
        if rank[i] > 0 {
            let j = sa[rank[i] - 1];
            while i + h < n && j + h < n && s[i + h] == s[j + h] {
                h += 1;
            }
            lcp[rank[i]] = h;
            h = h.saturating_sub(1);
        } else {
            h = 0;
        }
    }
    lcp
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_sa(s: &[u32]) -> Vec<usize> {
        let mut sa: Vec<usize> = (0..s.len()).collect();
        sa.sort_by(|&a, &b| s[a..].cmp(&s[b..]));
        sa
    }

    #[test]
    fn meta_string_of_running_example() {
        let w = [1, 4, 1, 3, 2, 0];
        let sa = suffix_array(&w, 5);
        assert_eq!(sa, naive_sa(&w));
        assert_eq!(sa, vec![5, 2, 0, 4, 3, 1]);
        assert_eq!(lcp_array(&w, &sa), vec![0, 0, 1, 0, 0, 0]);
    }

    #[test]
    fn single_symbol() {
        assert_eq!(suffix_array(&[0], 1), vec![0]);
        assert_eq!(suffix_array(&[1, 0], 2), vec![1, 0]);
    }

    proptest! {
        #[test]
        fn matches_naive(body in prop::collection::vec(1u32..5, 0..200)) {
            let mut s = body.clone();
            s.push(0);
            let sa = suffix_array(&s, 5);
            prop_assert_eq!(&sa, &naive_sa(&s));
            let lcp = lcp_array(&s, &sa);
            for i in 1..s.len() {
                let (a, b) = (&s[sa[i - 1]..], &s[sa[i]..]);
                let l = a.iter().zip(b).take_while(|(x, y)| x == y).count();
                prop_assert_eq!(lcp[i], l);
            }
        }
    }
}
