//! Stable integer-key sorting.
//!
//! Two strategies are provided: a comparison sort costing `O(r lg r)` and
//! an LSD radix sort whose digit width tracks the input size, costing
//! `O(r lg_r K)` for keys below `K`. [`SortStrategy::Auto`] picks the
//! cheaper bound per call. Both are stable, so they always agree.

/// A key with an opaque payload. Composite keys are packed into the `u128`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KeyedItem<P> {
    pub key: u128,
    pub payload: P,
}

impl<P> KeyedItem<P> {
    pub fn new(key: u128, payload: P) -> Self {
        KeyedItem { key, payload }
    }
}

/// Packs a pair into one key ordered lexicographically by `(hi, lo)`.
pub fn pack(hi: u64, lo: u64) -> u128 {
    ((hi as u128) << 64) | lo as u128
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SortStrategy {
    Comparison,
    Radix,
    #[default]
    Auto,
}

const MIN_DIGIT_BITS: u32 = 8;
const MAX_DIGIT_BITS: u32 = 16;

/// Digit width for `len` items: `ceil(lg len)` clamped to `[8, 16]`.
pub fn digit_bits(len: usize) -> u32 {
    let bits = usize::BITS - len.saturating_sub(1).leading_zeros();
    bits.clamp(MIN_DIGIT_BITS, MAX_DIGIT_BITS)
}

fn key_bits(items: &[KeyedItem<impl Copy>]) -> u32 {
    let max = items.iter().map(|it| it.key).max().unwrap_or(0);
    u128::BITS - max.leading_zeros()
}

/// Sorts `items` by key, stably.
pub fn sort_by_key<P: Copy>(items: &mut Vec<KeyedItem<P>>, strategy: SortStrategy) {
    if items.len() < 2 {
        return;
    }
    let strategy = match strategy {
        SortStrategy::Auto => {
            let passes = key_bits(items).div_ceil(digit_bits(items.len()));
            let lg = usize::BITS - items.len().leading_zeros();
            if passes <= lg {
                SortStrategy::Radix
            } else {
                SortStrategy::Comparison
            }
        }
        s => s,
    };
    match strategy {
        SortStrategy::Comparison => items.sort_by_key(|it| it.key),
        _ => radix_sort(items),
    }
}

fn radix_sort<P: Copy>(items: &mut Vec<KeyedItem<P>>) {
    let bits = digit_bits(items.len());
    let buckets = 1usize << bits;
    let mask = (buckets - 1) as u128;
    let total = key_bits(items);
    let mut counts = vec![0usize; buckets];
    let mut scratch: Vec<KeyedItem<P>> = items.clone();
    let mut shift = 0;
    while shift < total {
        counts.iter_mut().for_each(|c| *c = 0);
        for it in items.iter() {
            counts[((it.key >> shift) & mask) as usize] += 1;
        }
        let mut sum = 0;
        for c in counts.iter_mut() {
            let here = *c;
            *c = sum;
            sum += here;
        }
        for it in items.iter() {
            let d = ((it.key >> shift) & mask) as usize;
            scratch[counts[d]] = *it;
            counts[d] += 1;
        }
        std::mem::swap(items, &mut scratch);
        shift += bits;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn items(keys: &[u128]) -> Vec<KeyedItem<usize>> {
        keys.iter().enumerate().map(|(i, &k)| KeyedItem::new(k, i)).collect()
    }

    #[test]
    fn small_orders() {
        for strategy in [SortStrategy::Comparison, SortStrategy::Radix, SortStrategy::Auto] {
            let mut v = items(&[3, 1, 2]);
            sort_by_key(&mut v, strategy);
            assert_eq!(v.iter().map(|i| i.key).collect::<Vec<_>>(), vec![1, 2, 3]);
        }
    }

    #[test]
    fn stable_on_equal_keys() {
        for strategy in [SortStrategy::Comparison, SortStrategy::Radix] {
            let mut v = vec![KeyedItem::new(5, 'A'), KeyedItem::new(5, 'B'), KeyedItem::new(1, 'C')];
            sort_by_key(&mut v, strategy);
            assert_eq!(v.iter().map(|i| i.payload).collect::<String>(), "CAB");
        }
    }

    #[test]
    fn radix_matches_comparison_on_random_62_bit_keys() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let keys: Vec<u128> = (0..100_000).map(|_| rng.gen_range(0..1u128 << 62)).collect();
        let mut a = items(&keys);
        let mut b = a.clone();
        sort_by_key(&mut a, SortStrategy::Radix);
        sort_by_key(&mut b, SortStrategy::Comparison);
        assert_eq!(a, b);
    }

    #[test]
    fn digit_width_clamped() {
        assert_eq!(digit_bits(1), 8);
        assert_eq!(digit_bits(1000), 10);
        assert_eq!(digit_bits(1 << 20), 16);
    }

    #[test]
    fn packed_keys_order_lexicographically() {
        let mut v = items(&[pack(1, 0), pack(0, u64::MAX), pack(1, 5)]);
        sort_by_key(&mut v, SortStrategy::Radix);
        assert_eq!(v.iter().map(|i| i.payload).collect::<Vec<_>>(), vec![1, 0, 2]);
    }

    proptest! {
        #[test]
        fn strategies_agree(keys in prop::collection::vec(any::<u128>(), 0..300), small in prop::collection::vec(0u128..4, 0..300)) {
            for ks in [&keys, &small] {
                let mut a = items(ks);
                let mut b = a.clone();
                let mut c = a.clone();
                sort_by_key(&mut a, SortStrategy::Radix);
                sort_by_key(&mut b, SortStrategy::Comparison);
                sort_by_key(&mut c, SortStrategy::Auto);
                prop_assert_eq!(&a, &b);
                prop_assert_eq!(&a, &c);
            }
        }
    }
}
