//! Suffix array, LCP array and constant-time LCP queries over integer strings.
//!
//! Used by the greedy parser: an LCP query on the reversed text gives the
//! longest common suffix of two prefixes of the original text.

/// Suffix array by prefix doubling with radix sort. `O(n log n)`.
pub fn suffix_array(s: &[u32]) -> Vec<usize> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    let mut sa: Vec<usize> = (0..n).collect();
    let mut rank: Vec<usize> = s.iter().map(|&c| c as usize).collect();
    sa.sort_unstable_by_key(|&i| rank[i]);
    // Compress initial ranks to 1.. so that 0 can mean "past the end".
    let mut next = vec![0usize; n];
    next[sa[0]] = 1;
    for w in 1..n {
        next[sa[w]] = next[sa[w - 1]] + usize::from(s[sa[w]] != s[sa[w - 1]]);
    }
    std::mem::swap(&mut rank, &mut next);

    let mut tmp = vec![0usize; n];
    let mut k = 1;
    while rank[sa[n - 1]] < n {
        let key2 = |i: usize| if i + k < n { rank[i + k] } else { 0 };
        let buckets = rank[sa[n - 1]] + 1;
        radix_pass(&sa, &mut tmp, buckets, key2);
        radix_pass(&tmp, &mut sa, buckets, |i| rank[i]);

        next[sa[0]] = 1;
        for w in 1..n {
            let (a, b) = (sa[w - 1], sa[w]);
            let differs = rank[a] != rank[b] || key2(a) != key2(b);
            next[b] = next[a] + usize::from(differs);
        }
        std::mem::swap(&mut rank, &mut next);
        k *= 2;
        if k >= n {
            break;
        }
    }
    sa
}

fn radix_pass(from: &[usize], to: &mut [usize], buckets: usize, key: impl Fn(usize) -> usize) {
    let mut count = vec![0usize; buckets + 1];
    for &i in from {
        count[key(i) + 1] += 1;
    }
    for b in 1..count.len() {
        count[b] += count[b - 1];
    }
    for &i in from {
        let slot = &mut count[key(i)];
        to[*slot] = i;
        *slot += 1;
    }
}

/// Kasai's algorithm. `lcp[r]` is the LCP of the suffixes at ranks `r - 1`
/// and `r`; `lcp[0] = 0`.
pub fn lcp_array(s: &[u32], sa: &[usize], rank: &[usize]) -> Vec<usize> {
    let n = s.len();
    let mut lcp = vec![0; n];
    let mut h = 0usize;
    for i in 0..n {
        if rank[i] == 0 {
            h = 0;
            continue;
        }
        let j = sa[rank[i] - 1];
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[rank[i]] = h;
        h = h.saturating_sub(1);
    }
    lcp
}

/// Sparse table for range-minimum queries.
#[derive(Debug, Clone)]
pub struct SparseMin {
    levels: Vec<Vec<u32>>,
}

impl SparseMin {
    pub fn new(values: &[usize]) -> SparseMin {
        let mut levels = vec![values.iter().map(|&v| v as u32).collect::<Vec<_>>()];
        let mut width = 1;
        while 2 * width <= values.len() {
            let prev = levels.last().unwrap();
            let cur: Vec<u32> = (0..=values.len() - 2 * width)
                .map(|i| prev[i].min(prev[i + width]))
                .collect();
            levels.push(cur);
            width *= 2;
        }
        SparseMin { levels }
    }

    /// Minimum over `lo..=hi`.
    pub fn min(&self, lo: usize, hi: usize) -> usize {
        debug_assert!(lo <= hi);
        let level = (usize::BITS - 1 - (hi - lo + 1).leading_zeros()) as usize;
        let row = &self.levels[level];
        row[lo].min(row[hi + 1 - (1 << level)]) as usize
    }
}

/// Suffix array with LCP queries between arbitrary suffixes.
#[derive(Debug, Clone)]
pub struct SuffixIndex {
    len: usize,
    sa: Vec<usize>,
    rank: Vec<usize>,
    lcp: SparseMin,
}

impl SuffixIndex {
    pub fn new(s: &[u32]) -> SuffixIndex {
        let sa = suffix_array(s);
        let mut rank = vec![0; s.len()];
        for (r, &i) in sa.iter().enumerate() {
            rank[i] = r;
        }
        let lcp = lcp_array(s, &sa, &rank);
        SuffixIndex { len: s.len(), sa, rank, lcp: SparseMin::new(&lcp) }
    }

    pub fn sa(&self) -> &[usize] {
        &self.sa
    }

    /// Rank of the suffix starting at 0-based offset `i`.
    pub fn rank(&self, i: usize) -> usize {
        self.rank[i]
    }

    /// Longest common prefix of the suffixes with ranks `a` and `b`.
    pub fn lcp_ranks(&self, a: usize, b: usize) -> usize {
        if a == b {
            return self.len - self.sa[a];
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.lcp.min(lo + 1, hi)
    }

    /// Longest common prefix of the suffixes at 0-based offsets `i` and `j`.
    pub fn lcp(&self, i: usize, j: usize) -> usize {
        self.lcp_ranks(self.rank[i], self.rank[j])
    }

    /// For each offset `i`, the length of the longest prefix of suffix `i`
    /// that also starts at some offset `j < i` (occurrences may overlap).
    pub fn longest_previous_factor(&self) -> Vec<usize> {
        let n = self.len;
        let mut lpf = vec![0; n];
        // Nearest entry to the left (resp. right) in suffix-array order with a
        // smaller text offset, via a monotone stack.
        let mut stack: Vec<usize> = Vec::new();
        for r in 0..n {
            let i = self.sa[r];
            while let Some(&top) = stack.last() {
                if self.sa[top] > i {
                    stack.pop();
                } else {
                    break;
                }
            }
            if let Some(&top) = stack.last() {
                lpf[i] = lpf[i].max(self.lcp_ranks(top, r));
            }
            stack.push(r);
        }
        stack.clear();
        for r in (0..n).rev() {
            let i = self.sa[r];
            while let Some(&top) = stack.last() {
                if self.sa[top] > i {
                    stack.pop();
                } else {
                    break;
                }
            }
            if let Some(&top) = stack.last() {
                lpf[i] = lpf[i].max(self.lcp_ranks(r, top));
            }
            stack.push(r);
        }
        lpf
    }
}
