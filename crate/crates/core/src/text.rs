//! Texts over a dense integer alphabet.
//!
//! Every input is canonicalized so that symbols are numbered `0..alphabet_size`
//! in order of first appearance. The original rendering of each symbol is kept
//! for display. Positions are 1-based throughout the public API.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

pub type Symbol = u32;

/// Where a text came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Bytes,
    Tokens,
    Gadget,
    Family,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Text {
    symbols: Vec<Symbol>,
    labels: Vec<String>,
    /// 1-based position of the leftmost occurrence of each symbol.
    first: Vec<usize>,
    origin: Origin,
}

impl Text {
    /// Canonicalizes a sequence of arbitrary labels. Equal labels become equal
    /// symbols; ids are assigned in order of first appearance.
    pub fn from_labels<I, S>(labels: I, origin: Origin) -> Text
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut ids: HashMap<String, Symbol> = HashMap::new();
        let mut names = Vec::new();
        let mut symbols = Vec::new();
        for label in labels {
            let label = label.as_ref();
            let id = match ids.get(label) {
                Some(&id) => id,
                None => {
                    let id = names.len() as Symbol;
                    ids.insert(label.to_owned(), id);
                    names.push(label.to_owned());
                    id
                }
            };
            symbols.push(id);
        }
        Text::assemble(symbols, names, origin)
    }

    /// Raw byte mode: every byte is one symbol.
    pub fn from_bytes(bytes: &[u8]) -> Text {
        let mut ids = [u32::MAX; 256];
        let mut names = Vec::new();
        let mut symbols = Vec::with_capacity(bytes.len());
        for &b in bytes {
            if ids[b as usize] == u32::MAX {
                ids[b as usize] = names.len() as Symbol;
                names.push(render_byte(b));
            }
            symbols.push(ids[b as usize]);
        }
        Text::assemble(symbols, names, Origin::Bytes)
    }

    /// Token mode: whitespace-separated non-negative decimal integers.
    pub fn from_token_str(input: &str) -> Result<Text> {
        let mut tokens = Vec::new();
        for (idx, tok) in input.split_whitespace().enumerate() {
            let value: u64 = tok.parse().map_err(|_| {
                Error::InputFormat(format!("token {} ({tok:?}) is not a non-negative integer", idx + 1))
            })?;
            tokens.push(value.to_string());
        }
        Ok(Text::from_labels(tokens, Origin::Tokens))
    }

    /// Builds a text from symbols that are already dense and numbered in order
    /// of first appearance; labels are supplied per symbol id.
    pub(crate) fn from_canonical(symbols: Vec<Symbol>, labels: Vec<String>, origin: Origin) -> Text {
        debug_assert!(is_canonical(&symbols, labels.len()));
        Text::assemble(symbols, labels, origin)
    }

    fn assemble(symbols: Vec<Symbol>, labels: Vec<String>, origin: Origin) -> Text {
        let mut first = vec![0; labels.len()];
        for (i, &s) in symbols.iter().enumerate() {
            if first[s as usize] == 0 {
                first[s as usize] = i + 1;
            }
        }
        Text { symbols, labels, first, origin }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn alphabet_size(&self) -> usize {
        self.labels.len()
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    /// Symbol at 1-based position `pos`.
    #[inline]
    pub fn at(&self, pos: usize) -> Symbol {
        self.symbols[pos - 1]
    }

    /// `text[from..=to]`, 1-based and inclusive.
    #[inline]
    pub fn slice(&self, from: usize, to: usize) -> &[Symbol] {
        &self.symbols[from - 1..to]
    }

    /// True when `pos` holds the leftmost occurrence of its symbol.
    #[inline]
    pub fn is_leftmost(&self, pos: usize) -> bool {
        self.first[self.at(pos) as usize] == pos
    }

    pub fn label(&self, symbol: Symbol) -> &str {
        &self.labels[symbol as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Space-separated rendering of `text[from..=to]`.
    pub fn render_range(&self, from: usize, to: usize) -> String {
        let parts: Vec<&str> = self.slice(from, to).iter().map(|&s| self.label(s)).collect();
        if self.origin == Origin::Bytes && parts.iter().all(|p| p.chars().count() == 1) {
            parts.concat()
        } else {
            parts.join(" ")
        }
    }

    /// The canonical token-file body: one line of space-separated ids.
    pub fn to_token_string(&self) -> String {
        let mut out = self
            .symbols
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        out.push('\n');
        out
    }
}

impl fmt::Display for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return Ok(());
        }
        f.write_str(&self.render_range(1, self.len()))
    }
}

fn render_byte(b: u8) -> String {
    if b.is_ascii_graphic() {
        (b as char).to_string()
    } else {
        format!("\\x{b:02x}")
    }
}

fn is_canonical(symbols: &[Symbol], alphabet: usize) -> bool {
    let mut next = 0;
    for &s in symbols {
        if s as usize > next || s as usize >= alphabet {
            return false;
        }
        if s as usize == next {
            next += 1;
        }
    }
    next == alphabet
}
