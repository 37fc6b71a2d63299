//! From `D` nodes to the substring complexity profile and `delta`.
//!
//! Every node `v` in `D` counts towards `|Substr(k)|` for exactly the
//! lengths `k` in `[|t(v)|, d(v)]`. Summing those intervals over a path of
//! `D` nodes telescopes, so the second difference of the profile only
//! changes at DMN-roots and at explicit nodes. Each contributes a pair of
//! weighted events; sweeping the sorted events recovers the profile at
//! every change point, and between change points the profile is linear,
//! so `|Substr(k)| / k` peaks at a change point.

use std::cmp::Ordering;
use std::fmt;

use crate::dmn::DNodeAttr;
use crate::error::InvariantViolation;
use crate::intsort::{sort_by_key, KeyedItem, SortStrategy};

/// A contribution `weight` to `ddiff(k + 1) - ddiff(k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Event {
    pub k: u64,
    pub w: i64,
}

/// Events for DMN-roots and explicit `D` nodes; zero weights are dropped.
pub fn build_events(roots: &[DNodeAttr], explicit: &[DNodeAttr]) -> Vec<Event> {
    let mut events = Vec::with_capacity(2 * (roots.len() + explicit.len()));
    for v in roots {
        events.push(Event { k: v.t_len - 1, w: 1 });
        events.push(Event { k: v.d, w: -1 });
    }
    for u in explicit {
        let w = u.h as i64 - 1;
        if w != 0 {
            events.push(Event { k: u.t_len, w });
            events.push(Event { k: u.d + 1, w: -w });
        }
    }
    events
}

/// Sums event weights per coordinate, sorted by coordinate, dropping
/// coordinates whose weights cancel.
pub fn aggregate(events: &[Event], strategy: SortStrategy) -> Vec<Event> {
    let mut items: Vec<KeyedItem<i64>> = events.iter().map(|e| KeyedItem::new(e.k as u128, e.w)).collect();
    sort_by_key(&mut items, strategy);
    let mut out: Vec<Event> = Vec::new();
    for it in items {
        match out.last_mut() {
            Some(last) if last.k as u128 == it.key => last.w += it.payload,
            _ => out.push(Event { k: it.key as u64, w: it.payload }),
        }
    }
    out.retain(|e| e.w != 0);
    out
}

/// Non-negative rational number `num / den` with `den > 0`, compared
/// exactly by 128-bit cross multiplication.
#[derive(Debug, Clone, Copy)]
pub struct Rational {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    /// Panics if `den == 0`.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let g = gcd(num, den);
        if g == 0 {
            return Rational { num: 0, den: 1 };
        }
        Rational { num: num / g, den: den / g }
    }

    pub fn zero() -> Self {
        Rational { num: 0, den: 1 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Rational {}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// One breakpoint of the profile: `count = |Substr(k)|` and the slope
/// `ddiff(k + 1)` that holds until the next breakpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Breakpoint {
    pub k: u64,
    pub count: u64,
    pub slope: i64,
}

/// The piecewise-linear profile `k -> |Substr(k)|`, stored as O(r)
/// breakpoints.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SweepProfile {
    breakpoints: Vec<Breakpoint>,
}

impl SweepProfile {
    /// Sweeps the events starting from `|D_0| = 0` with zero slope.
    pub fn from_events(events: &[Event], strategy: SortStrategy) -> Result<Self, InvariantViolation> {
        let agg = aggregate(events, strategy);
        let mut breakpoints = Vec::with_capacity(agg.len());
        let (mut k, mut count, mut slope) = (0u64, 0i128, 0i128);
        for e in &agg {
            count += slope * (e.k - k) as i128;
            if count < 0 {
                return Err(InvariantViolation(format!("profile negative at k = {}", e.k)));
            }
            slope += e.w as i128;
            k = e.k;
            let count = u64::try_from(count)
                .map_err(|_| InvariantViolation(format!("profile overflows at k = {k}")))?;
            let slope = i64::try_from(slope)
                .map_err(|_| InvariantViolation(format!("slope overflows at k = {k}")))?;
            breakpoints.push(Breakpoint { k, count, slope });
        }
        if count != 0 || slope != 0 {
            return Err(InvariantViolation(format!(
                "profile ends at {count} with slope {slope} instead of 0"
            )));
        }
        Ok(SweepProfile { breakpoints })
    }

    pub fn breakpoints(&self) -> &[Breakpoint] {
        &self.breakpoints
    }

    /// `|Substr(k)|` for any `k`.
    pub fn count_at(&self, k: u64) -> u64 {
        let idx = self.breakpoints.partition_point(|b| b.k <= k);
        if idx == 0 {
            return 0;
        }
        let b = self.breakpoints[idx - 1];
        (b.count as i128 + b.slope as i128 * (k - b.k) as i128) as u64
    }

    /// Lengths at which the maximum of `|Substr(k)| / k` can occur: each
    /// breakpoint and its successor, clamped to `[1, n]`.
    pub fn candidates(&self, n: u64) -> Vec<u64> {
        if n == 0 {
            return Vec::new();
        }
        let mut ks: Vec<u64> = self
            .breakpoints
            .iter()
            .flat_map(|b| [b.k, b.k.saturating_add(1)])
            .chain([1, n])
            .map(|k| k.clamp(1, n))
            .collect();
        ks.sort_unstable();
        ks.dedup();
        ks
    }

    /// The full profile for `k = 1..=n`. Only sensible for small `n`.
    pub fn dense(&self, n: u64) -> Vec<u64> {
        (1..=n).map(|k| self.count_at(k)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaResult {
    pub delta: Rational,
    pub argmax_k: u64,
    pub substr_at_argmax: u64,
    /// `(k, |Substr(k)|)` at every evaluated length.
    pub change_points: Vec<(u64, u64)>,
    pub r: usize,
    pub n: u64,
    pub sigma: usize,
}

impl DeltaResult {
    /// Maximizes `count / k` over the given points; ties go to the
    /// smallest `k`. Empty input gives `0/1` at `k = 0`.
    pub fn from_points(points: Vec<(u64, u64)>, r: usize, n: u64, sigma: usize) -> Self {
        // Compared unreduced; only the winner pays for the gcd.
        let mut best: Option<(u64, u64)> = None;
        for &(k, count) in &points {
            if k == 0 {
                continue;
            }
            let better = best.is_none_or(|(bk, bc)| {
                (count as u128 * bk as u128, bk) > (bc as u128 * k as u128, k)
            });
            if better {
                best = Some((k, count));
            }
        }
        let (delta, argmax_k, substr_at_argmax) = match best {
            Some((k, count)) => (Rational::new(count, k), k, count),
            None => (Rational::zero(), 0, 0),
        };
        DeltaResult { delta, argmax_k, substr_at_argmax, change_points: points, r, n, sigma }
    }
}

/// Computes `delta` from the events of a string of length `n`.
pub fn compute_delta(
    events: &[Event],
    n: u64,
    strategy: SortStrategy,
) -> Result<(SweepProfile, Vec<(u64, u64)>), InvariantViolation> {
    let profile = SweepProfile::from_events(events, strategy)?;
    let points = profile.candidates(n).into_iter().map(|k| (k, profile.count_at(k))).collect();
    Ok((profile, points))
}
