//! Greedy LZ-End parsing.
//!
//! Each phrase is a singleton when its symbol is new, and otherwise the longest
//! prefix of the remaining suffix that is a suffix of the text up to some
//! earlier phrase end. Among the ends witnessing that longest phrase, the
//! smallest is recorded as the source.
//!
//! A candidate length `l` at position `p` is valid iff the longest common
//! suffix of `text[..p+l-1]` and `text[..b]` is at least `l` for some phrase
//! end `b`. Those suffix comparisons are LCP queries on the reversed text; the
//! best `b` for a fixed query is a neighbour of the query in suffix-array order,
//! so phrase ends are kept in an ordered set of reversed-text ranks.

use std::collections::BTreeSet;

use crate::index::SuffixIndex;
use crate::parsing::{Parsing, Phrase};
use crate::text::Text;

pub fn greedy_parse(text: &Text) -> Parsing {
    let n = text.len();
    if n == 0 {
        return Parsing::default();
    }

    let forward = SuffixIndex::new(text.symbols());
    // No phrase can be longer than the longest previous factor.
    let lpf = forward.longest_previous_factor();
    drop(forward);

    let reversed: Vec<u32> = text.symbols().iter().rev().copied().collect();
    let rev = SuffixIndex::new(&reversed);
    // Prefix text[1..=e] corresponds to the reversed suffix at offset n - e.
    let rank_of_end = |e: usize| rev.rank(n - e);
    let common_suffix = |e: usize, b: usize| rev.lcp(n - e, n - b);

    let mut end_ranks: BTreeSet<usize> = BTreeSet::new();
    let mut ends: Vec<usize> = Vec::new();
    let mut phrases = Vec::new();
    let mut pos = 1;
    while pos <= n {
        let phrase = if text.is_leftmost(pos) {
            Phrase::singleton(pos)
        } else {
            let longest = lpf[pos - 1].min(pos - 1);
            let len = (1..=longest)
                .rev()
                .find(|&len| {
                    let r = rank_of_end(pos + len - 1);
                    let below = end_ranks.range(..r).next_back();
                    let above = end_ranks.range(r..).next();
                    below
                        .into_iter()
                        .chain(above)
                        .any(|&q| rev.lcp_ranks(r, q) >= len)
                })
                .expect("a repeated symbol always has a length-1 source");
            let e = pos + len - 1;
            let source_end = ends
                .iter()
                .copied()
                .find(|&b| common_suffix(e, b) >= len)
                .expect("source witnessed by an end neighbour");
            Phrase::copy(pos, len, source_end)
        };
        let end = phrase.end();
        phrases.push(phrase);
        ends.push(end);
        end_ranks.insert(rank_of_end(end));
        pos = end + 1;
    }
    Parsing::new(phrases)
}

/// Size of the greedy parsing.
pub fn z_e(text: &Text) -> usize {
    greedy_parse(text).size()
}
