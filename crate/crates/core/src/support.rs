//! Lexicographic enumeration of fixed-size supports `T ⊆ {0, …, n-1}`.
//!
//! Exhaustive oracles in this crate minimize or maximize a score over all
//! `C(n, k)` supports. The search space is split into contiguous rank ranges,
//! each range is walked sequentially, and the per-range winners are combined
//! with a total order on `(score, rank)`. The combine step is associative, so
//! the winner does not depend on how rayon schedules the ranges.

use std::cmp::Ordering;

use rayon::prelude::*;

/// Binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step.
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Supports of size `k` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    current: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            current: (0..k).collect(),
            done: k > n,
        }
    }

    /// Start the walk at the support with lexicographic rank `rank`.
    pub fn starting_at(n: usize, k: usize, rank: u128) -> Self {
        match unrank(n, k, rank) {
            Some(current) => Self {
                n,
                current,
                done: false,
            },
            None => Self {
                n,
                current: Vec::new(),
                done: true,
            },
        }
    }

    /// Advance `current` in place; returns `false` once exhausted.
    fn advance(&mut self) -> bool {
        let k = self.current.len();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.current[i] < self.n - k + i {
                self.current[i] += 1;
                for j in i + 1..k {
                    self.current[j] = self.current[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        if !self.advance() {
            self.done = true;
        }
        Some(out)
    }
}

/// The support of size `k` with lexicographic rank `rank`, if any.
pub fn unrank(n: usize, k: usize, mut rank: u128) -> Option<Vec<usize>> {
    if k > n || rank >= binomial(n, k) {
        return None;
    }
    let mut out = Vec::with_capacity(k);
    let mut next = 0;
    for slot in 0..k {
        let remaining = k - slot - 1;
        loop {
            let block = binomial(n - next - 1, remaining);
            if rank < block {
                out.push(next);
                next += 1;
                break;
            }
            rank -= block;
            next += 1;
        }
    }
    Some(out)
}

/// Best support under `better`, searched exhaustively and in parallel.
///
/// `score` maps a support to `Some(value)` (or `None` to skip it);
/// `better(a, b)` returns `Greater` when `a` is preferred. Among equal values
/// the lowest lexicographic rank wins. Returns the winning
/// `(value, support)`.
pub(crate) fn best_support<T, F, C>(n: usize, k: usize, score: F, better: C) -> Option<(T, Vec<usize>)>
where
    T: Send,
    F: Fn(&[usize]) -> Option<T> + Sync,
    C: Fn(&T, &T) -> Ordering + Sync,
{
    let total = binomial(n, k);
    if total == 0 {
        return None;
    }
    const CHUNK: u128 = 4096;
    let chunks = total.div_ceil(CHUNK);
    let pick = |a: Option<(T, u128, Vec<usize>)>, b: Option<(T, u128, Vec<usize>)>| match (a, b) {
        (None, x) | (x, None) => x,
        (Some(a), Some(b)) => match better(&a.0, &b.0).then(b.1.cmp(&a.1)) {
            Ordering::Less => Some(b),
            _ => Some(a),
        },
    };
    let winner = (0..chunks as u64)
        .into_par_iter()
        .map(|c| {
            let start = c as u128 * CHUNK;
            let len = CHUNK.min(total - start);
            let mut local = None;
            for (offset, support) in Combinations::starting_at(n, k, start)
                .take(len as usize)
                .enumerate()
            {
                if let Some(v) = score(&support) {
                    local = pick(local, Some((v, start + offset as u128, support)));
                }
            }
            local
        })
        .reduce(|| None, pick);
    winner.map(|(v, _, s)| (v, s))
}
