//! Exact minimum-phrase LZ-End parsing by depth-first branch and bound.
//!
//! The search walks left to right over partial parsings, trying longer
//! phrases first. A branch is cut when the phrases used so far plus an
//! admissible lower bound for the unparsed suffix cannot beat the incumbent.
//! The lower bound counts one forced singleton per symbol whose leftmost
//! occurrence is still unparsed, plus one more phrase if any other position
//! remains.
//!
//! Exponential in the worst case; intended for texts of a few dozen symbols.

use crate::error::{Error, Result};
use crate::greedy::greedy_parse;
use crate::parsing::Parsing;
use crate::text::Text;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Only accept parsings with at most this many phrases.
    pub upper_bound: Option<usize>,
    /// Maximum number of node expansions before giving up.
    pub node_budget: u64,
    /// Disable to enumerate every parsing (for testing the bound's soundness).
    pub prune: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { upper_bound: None, node_budget: DEFAULT_NODE_BUDGET, prune: true }
    }
}

/// A partial parsing: the committed phrase ends and the next unparsed position.
#[derive(Debug, Clone, Default)]
pub struct SearchState {
    pub pos: usize,
    pub ends: Vec<usize>,
}

impl SearchState {
    fn new() -> SearchState {
        SearchState { pos: 1, ends: Vec::new() }
    }

    pub fn count(&self) -> usize {
        self.ends.len()
    }
}

/// Valid lengths for a phrase starting at `pos` after phrases ending at `ends`,
/// in ascending order.
///
/// # Panics
///
/// If `pos` is not within `1..=text.len()`.
pub fn candidate_lengths(text: &Text, pos: usize, ends: &[usize]) -> Vec<usize> {
    assert!(
        (1..=text.len()).contains(&pos),
        "position {pos} outside 1..={}",
        text.len()
    );
    if text.is_leftmost(pos) {
        return vec![1];
    }
    let max_len = text.len() - pos + 1;
    (1..=max_len)
        .filter(|&len| {
            let target = text.slice(pos, pos + len - 1);
            ends.iter()
                .any(|&b| b >= len && b < pos && text.slice(b - len + 1, b) == target)
        })
        .collect()
}

/// Finds a parsing with the minimum number of phrases.
///
/// Among optimal parsings, the one whose length sequence is lexicographically
/// largest is returned (ties go to the longer earlier phrase).
pub fn optimal_parse(text: &Text, config: &SearchConfig) -> Result<Parsing> {
    if text.is_empty() {
        return Ok(Parsing::default());
    }

    let greedy = greedy_parse(text);
    let (mut best, mut best_lengths) = match config.upper_bound {
        Some(bound) if bound < greedy.size() => (bound + 1, None),
        _ => (greedy.size(), Some(greedy.lengths())),
    };

    let bound = LowerBound::new(text);
    let mut search = Search {
        text,
        bound: &bound,
        prune: config.prune,
        budget: config.node_budget,
        expanded: 0,
        lengths: Vec::new(),
        best: &mut best,
        best_lengths: &mut best_lengths,
    };
    let mut state = SearchState::new();
    search.descend(&mut state)?;

    match best_lengths {
        Some(lengths) => Parsing::from_lengths(text, &lengths),
        None => Err(Error::NoParsingWithinBound { bound: config.upper_bound.unwrap_or(0) }),
    }
}

/// Size of an optimal parsing.
pub fn z_end(text: &Text) -> Result<usize> {
    optimal_parse(text, &SearchConfig::default()).map(|p| p.size())
}

struct LowerBound {
    /// Leftmost occurrences at positions `>= i` (index `i`, 1-based).
    new_symbols: Vec<usize>,
    /// Whether any non-leftmost position `>= i` exists.
    repeats: Vec<bool>,
}

impl LowerBound {
    fn new(text: &Text) -> LowerBound {
        let n = text.len();
        let mut new_symbols = vec![0; n + 2];
        let mut repeats = vec![false; n + 2];
        for i in (1..=n).rev() {
            let leftmost = text.is_leftmost(i);
            new_symbols[i] = new_symbols[i + 1] + usize::from(leftmost);
            repeats[i] = repeats[i + 1] || !leftmost;
        }
        LowerBound { new_symbols, repeats }
    }

    fn remaining(&self, pos: usize) -> usize {
        self.new_symbols[pos] + usize::from(self.repeats[pos])
    }
}

struct Search<'a> {
    text: &'a Text,
    bound: &'a LowerBound,
    prune: bool,
    budget: u64,
    expanded: u64,
    lengths: Vec<usize>,
    best: &'a mut usize,
    best_lengths: &'a mut Option<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, state: &mut SearchState) -> Result<()> {
        let n = self.text.len();
        if state.pos > n {
            if state.count() < *self.best {
                *self.best = state.count();
                *self.best_lengths = Some(self.lengths.clone());
            }
            return Ok(());
        }
        if self.prune && state.count() + self.bound.remaining(state.pos) >= *self.best {
            return Ok(());
        }
        self.expanded += 1;
        if self.expanded > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }

        let candidates = candidate_lengths(self.text, state.pos, &state.ends);
        for &len in candidates.iter().rev() {
            let pos = state.pos;
            state.ends.push(pos + len - 1);
            state.pos = pos + len;
            self.lengths.push(len);
            let result = self.descend(state);
            self.lengths.pop();
            state.ends.pop();
            state.pos = pos;
            result?;
        }
        Ok(())
    }
}
