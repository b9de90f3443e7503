//! Phrases, parsings, and the validity checker every other module trusts.
//!
//! A phrase is either a *singleton* (a length-1 phrase at the leftmost
//! occurrence of its symbol) or a *copy* whose content is a suffix of the text
//! up to the end of some earlier phrase. The position where that earlier
//! occurrence ends is the copy's `source_end`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text::Text;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    Singleton,
    /// `source_end` may be omitted, in which case the validator searches for a
    /// witness among the earlier phrase ends.
    Copy { source_end: Option<usize> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "PhraseRecord", try_from = "PhraseRecord")]
pub struct Phrase {
    pub start: usize,
    pub len: usize,
    pub source: Source,
}

impl Phrase {
    pub fn singleton(start: usize) -> Phrase {
        Phrase { start, len: 1, source: Source::Singleton }
    }

    pub fn copy(start: usize, len: usize, source_end: usize) -> Phrase {
        Phrase { start, len, source: Source::Copy { source_end: Some(source_end) } }
    }

    /// Last position covered by the phrase.
    pub fn end(&self) -> usize {
        self.start + self.len - 1
    }

    pub fn is_singleton(&self) -> bool {
        self.source == Source::Singleton
    }

    pub fn source_end(&self) -> Option<usize> {
        match self.source {
            Source::Singleton => None,
            Source::Copy { source_end } => source_end,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum PhraseKind {
    Singleton,
    Copy,
}

/// Wire form of a phrase. Field names and order are part of the file format.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PhraseRecord {
    start: usize,
    len: usize,
    kind: PhraseKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    source_end: Option<usize>,
}

impl From<Phrase> for PhraseRecord {
    fn from(p: Phrase) -> Self {
        match p.source {
            Source::Singleton => PhraseRecord {
                start: p.start,
                len: p.len,
                kind: PhraseKind::Singleton,
                source_end: None,
            },
            Source::Copy { source_end } => PhraseRecord {
                start: p.start,
                len: p.len,
                kind: PhraseKind::Copy,
                source_end,
            },
        }
    }
}

impl TryFrom<PhraseRecord> for Phrase {
    type Error = String;

    fn try_from(r: PhraseRecord) -> Result<Self, Self::Error> {
        let source = match (r.kind, r.source_end) {
            (PhraseKind::Singleton, None) => Source::Singleton,
            (PhraseKind::Singleton, Some(_)) => {
                return Err("a singleton phrase cannot carry source_end".into())
            }
            (PhraseKind::Copy, source_end) => Source::Copy { source_end },
        };
        Ok(Phrase { start: r.start, len: r.len, source })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Parsing {
    phrases: Vec<Phrase>,
}

impl Parsing {
    pub fn new(phrases: Vec<Phrase>) -> Parsing {
        Parsing { phrases }
    }

    /// Builds a parsing of `text` from phrase lengths, classifying each phrase
    /// and recording the smallest witnessing `source_end` for copies.
    ///
    /// Fails if the lengths do not tile the text or some phrase has no source.
    pub fn from_lengths(text: &Text, lengths: &[usize]) -> Result<Parsing> {
        let mut phrases = Vec::with_capacity(lengths.len());
        let mut ends = Vec::with_capacity(lengths.len());
        let mut start = 1;
        for (idx, &len) in lengths.iter().enumerate() {
            let reject = |violation| Error::InvalidParsing(Rejection { phrase: idx + 1, violation }.to_string());
            if len == 0 {
                return Err(reject(Violation::EmptyPhrase));
            }
            let end = start + len - 1;
            if end > text.len() {
                return Err(reject(Violation::PastEnd { end, text_len: text.len() }));
            }
            let phrase = if len == 1 && text.is_leftmost(start) {
                Phrase::singleton(start)
            } else {
                match find_source(text, &ends, start, len) {
                    Some(b) => Phrase::copy(start, len, b),
                    None => return Err(reject(Violation::NoSource)),
                }
            };
            phrases.push(phrase);
            ends.push(end);
            start = end + 1;
        }
        if start != text.len() + 1 {
            return Err(Error::InvalidParsing(
                Rejection {
                    phrase: lengths.len() + 1,
                    violation: Violation::Incomplete { covered: start - 1, text_len: text.len() },
                }
                .to_string(),
            ));
        }
        Ok(Parsing { phrases })
    }

    pub fn phrases(&self) -> &[Phrase] {
        &self.phrases
    }

    pub fn size(&self) -> usize {
        self.phrases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phrases.is_empty()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.phrases.iter().map(|p| p.len).collect()
    }

    pub fn starts(&self) -> Vec<usize> {
        self.phrases.iter().map(|p| p.start).collect()
    }

    /// Cumulative phrase end positions (strictly increasing, last = text length).
    pub fn phrase_ends(&self) -> Vec<usize> {
        phrase_ends(&self.phrases)
    }

    /// Returns a copy where every copy phrase carries its smallest witnessing
    /// `source_end`. Phrases that cannot be sourced keep `None`.
    pub fn with_resolved_sources(&self, text: &Text) -> Parsing {
        let mut ends = Vec::with_capacity(self.phrases.len());
        let mut phrases = Vec::with_capacity(self.phrases.len());
        for p in &self.phrases {
            let mut q = *p;
            if let Source::Copy { .. } = p.source {
                if p.end() <= text.len() {
                    q.source = Source::Copy { source_end: find_source(text, &ends, p.start, p.len) };
                }
            }
            phrases.push(q);
            ends.push(p.end());
        }
        Parsing { phrases }
    }

    /// Renders phrases separated by `|`, e.g. `a|a|c|b`.
    pub fn render(&self, text: &Text) -> String {
        self.phrases
            .iter()
            .map(|p| {
                if p.end() <= text.len() {
                    text.render_range(p.start, p.end())
                } else {
                    "?".to_owned()
                }
            })
            .collect::<Vec<_>>()
            .join("|")
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(input: &str) -> Result<Parsing> {
        Ok(serde_json::from_str(input)?)
    }
}

/// Cumulative end positions of a phrase sequence.
pub fn phrase_ends(phrases: &[Phrase]) -> Vec<usize> {
    phrases
        .iter()
        .scan(0, |acc, p| {
            *acc += p.len;
            Some(*acc)
        })
        .collect()
}

/// Smallest `b` in `ends` (sorted ascending) such that `text[start..start+len)`
/// is a suffix of `text[1..=b]`.
pub fn find_source(text: &Text, ends: &[usize], start: usize, len: usize) -> Option<usize> {
    let target = text.slice(start, start + len - 1);
    ends.iter()
        .copied()
        .take_while(|&b| b < start)
        .find(|&b| b >= len && text.slice(b - len + 1, b) == target)
}

/// Why a parsing was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EmptyPhrase,
    /// The phrase does not start right after its predecessor.
    Gap { expected: usize, found: usize },
    PastEnd { end: usize, text_len: usize },
    /// The phrases stop before the end of the text.
    Incomplete { covered: usize, text_len: usize },
    SingletonTooLong,
    SingletonNotLeftmost,
    SourceNotBefore { source_end: usize },
    SourceNotPhraseEnd { source_end: usize },
    SourceMismatch { source_end: usize },
    /// No earlier phrase end witnesses the copy.
    NoSource,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyPhrase => write!(f, "phrase is empty"),
            Violation::Gap { expected, found } => {
                write!(f, "phrase starts at {found}, expected {expected}")
            }
            Violation::PastEnd { end, text_len } => {
                write!(f, "phrase ends at {end}, past the text end {text_len}")
            }
            Violation::Incomplete { covered, text_len } => {
                write!(f, "phrases cover only {covered} of {text_len} positions")
            }
            Violation::SingletonTooLong => write!(f, "singleton phrase longer than 1"),
            Violation::SingletonNotLeftmost => {
                write!(f, "singleton is not the leftmost occurrence of its symbol")
            }
            Violation::SourceNotBefore { source_end } => {
                write!(f, "source_end {source_end} does not precede the phrase")
            }
            Violation::SourceNotPhraseEnd { source_end } => {
                write!(f, "source_end {source_end} is not the end of an earlier phrase")
            }
            Violation::SourceMismatch { source_end } => {
                write!(f, "phrase is not a suffix of the text ending at {source_end}")
            }
            Violation::NoSource => {
                write!(f, "phrase is not a suffix of the text up to any earlier phrase end")
            }
        }
    }
}

/// First offending phrase (1-based index; `size + 1` when phrases are missing).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejection {
    pub phrase: usize,
    pub violation: Violation,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "phrase {}: {}", self.phrase, self.violation)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    Accept,
    Reject(Rejection),
}

impl Validity {
    pub fn is_accept(&self) -> bool {
        matches!(self, Validity::Accept)
    }

    pub fn into_result(self) -> Result<()> {
        match self {
            Validity::Accept => Ok(()),
            Validity::Reject(r) => Err(Error::InvalidParsing(r.to_string())),
        }
    }
}

/// Checks that `parsing` is an LZ-End-like parsing of `text`.
pub fn validate(text: &Text, parsing: &Parsing) -> Validity {
    let mut ends: Vec<usize> = Vec::with_capacity(parsing.size());
    let mut expected = 1;
    for (idx, p) in parsing.phrases().iter().enumerate() {
        let reject = |violation| Validity::Reject(Rejection { phrase: idx + 1, violation });
        if p.len == 0 {
            return reject(Violation::EmptyPhrase);
        }
        if p.start != expected {
            return reject(Violation::Gap { expected, found: p.start });
        }
        let end = p.end();
        if end > text.len() {
            return reject(Violation::PastEnd { end, text_len: text.len() });
        }
        match p.source {
            Source::Singleton => {
                if p.len != 1 {
                    return reject(Violation::SingletonTooLong);
                }
                if !text.is_leftmost(p.start) {
                    return reject(Violation::SingletonNotLeftmost);
                }
            }
            Source::Copy { source_end: Some(b) } => {
                if b >= p.start {
                    return reject(Violation::SourceNotBefore { source_end: b });
                }
                if ends.binary_search(&b).is_err() {
                    return reject(Violation::SourceNotPhraseEnd { source_end: b });
                }
                if b < p.len || text.slice(b - p.len + 1, b) != text.slice(p.start, end) {
                    return reject(Violation::SourceMismatch { source_end: b });
                }
            }
            Source::Copy { source_end: None } => {
                if find_source(text, &ends, p.start, p.len).is_none() {
                    return reject(Violation::NoSource);
                }
            }
        }
        ends.push(end);
        expected = end + 1;
    }
    if expected != text.len() + 1 {
        return Validity::Reject(Rejection {
            phrase: parsing.size() + 1,
            violation: Violation::Incomplete { covered: expected - 1, text_len: text.len() },
        });
    }
    Validity::Accept
}
