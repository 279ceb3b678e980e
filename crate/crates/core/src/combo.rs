//! Lexicographic k-subset iteration and unranking.
//!
//! The searches walk all k-subsets of `0..n` in lexicographic order. To split
//! a scan across workers the rank space `0..C(n, k)` is cut into contiguous
//! chunks; `unrank` positions each worker at its chunk start and the cursor
//! then advances one subset at a time without allocating.

/// Binomial coefficient C(n, k), saturating at `u64::MAX`. Returns 0 when
/// k > n. The multiply then divide order keeps intermediate products exact.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    // After iteration i the accumulator holds exactly C(n, i + 1), which is
    // increasing for i + 1 <= n/2, so saturation can be detected per step.
    // The per step product stays far below the u128 limit.
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// The k-subset of `0..n` at lexicographic position `rank`.
///
/// Panics when `rank >= binomial(n, k)`.
pub fn unrank(n: usize, k: usize, rank: u64) -> Vec<usize> {
    assert!(rank < binomial(n, k), "rank out of range");
    let mut combo = Vec::with_capacity(k);
    let mut rank = rank;
    let mut next = 0;
    for remaining in (1..=k).rev() {
        // Choose the smallest first element c with enough subsets below it.
        let mut c = next;
        loop {
            let below = binomial(n - c - 1, remaining - 1);
            if rank < below {
                break;
            }
            rank -= below;
            c += 1;
        }
        combo.push(c);
        next = c + 1;
    }
    combo
}

/// Lexicographic position of `combo` among the k-subsets of `0..n`.
/// `combo` must be strictly increasing with entries below n.
pub fn rank(n: usize, combo: &[usize]) -> u64 {
    let k = combo.len();
    let mut r = 0u64;
    let mut prev = 0;
    for (i, &c) in combo.iter().enumerate() {
        for skipped in prev..c {
            r += binomial(n - skipped - 1, k - i - 1);
        }
        prev = c + 1;
    }
    r
}

/// Streaming cursor over the k-subsets of `0..n` in lexicographic order.
pub struct SubsetCursor {
    n: usize,
    current: Vec<usize>,
    started: bool,
    exhausted: bool,
}

impl SubsetCursor {
    pub fn new(n: usize, k: usize) -> Self {
        Self::starting_at(n, k, 0)
    }

    /// Cursor positioned so that the first `advance` yields the subset at
    /// `start_rank`.
    pub fn starting_at(n: usize, k: usize, start_rank: u64) -> Self {
        let total = binomial(n, k);
        if start_rank >= total {
            return SubsetCursor {
                n,
                current: Vec::new(),
                started: true,
                exhausted: true,
            };
        }
        SubsetCursor {
            n,
            current: unrank(n, k, start_rank),
            started: false,
            exhausted: false,
        }
    }

    /// Steps to the next subset and returns it, or `None` at the end.
    /// The returned slice is valid until the next call.
    pub fn advance(&mut self) -> Option<&[usize]> {
        if self.exhausted {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        let k = self.current.len();
        if k == 0 {
            // The single empty subset was already yielded.
            self.exhausted = true;
            return None;
        }
        // Rightmost entry that can still move up.
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.current[i] < self.n - (k - i) {
                self.current[i] += 1;
                for j in i + 1..k {
                    self.current[j] = self.current[j - 1] + 1;
                }
                return Some(&self.current);
            }
        }
        self.exhausted = true;
        None
    }
}
