//! The binary strings `w_k` on which greedy parsing is almost twice optimal.
//!
//! ```text
//! w_k = W_0 · prod_{j=1..K} a^j b^3,   W_0 = a a · prod_{i=1..k} a^(2^i) · b^4,   K = 2^(k+1) - 2
//! ```
//!
//! The greedy parser splits `W_0` into `1, 1, 2, 4, .., 2^k, 1, 1, 2` and every
//! block `a^j b^3` into `a^j b^2 | b`, for `2K + k + 5` phrases. Parsing the
//! `b^4` run as four single letters instead exposes a phrase end after
//! `a^(2^(k+1)) b^3`, and each block becomes one phrase copied from there:
//! `K + k + 6` phrases.

use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::greedy::greedy_parse;
use crate::parsing::{validate, Parsing};
use crate::text::{Origin, Symbol, Text};

/// Largest `k` that [`build_family`] materialises (`|w_12|` is about 3.4e7).
pub const MAX_FAMILY_K: u32 = 12;

const A: Symbol = 0;
const B: Symbol = 1;

/// `K = 2^(k+1) - 2`, the number of `a^j b^3` blocks.
pub fn block_count(k: u32) -> u64 {
    (1u64 << (k + 1)) - 2
}

/// `|w_k| = 6 + K + K(K+7)/2`.
pub fn family_length(k: u32) -> u64 {
    let big = block_count(k);
    6 + big + big * (big + 7) / 2
}

/// Greedy size `2K + k + 5`.
pub fn greedy_size_formula(k: u32) -> u64 {
    2 * block_count(k) + k as u64 + 5
}

/// Size of the short parsing, `K + k + 6`.
pub fn witness_size_formula(k: u32) -> u64 {
    block_count(k) + k as u64 + 6
}

#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub k: u32,
    /// Number of `a^j b^3` blocks.
    pub blocks: usize,
    pub text: Text,
    /// Length of the prefix `W_0`.
    pub w0_len: usize,
}

impl FamilyInstance {
    /// Position of the third `b` of `W_0`, where every block of the short
    /// parsing finds its source.
    pub fn block_source_end(&self) -> usize {
        self.w0_len - 1
    }
}

pub fn build_family(k: u32) -> Result<FamilyInstance> {
    if !(1..=MAX_FAMILY_K).contains(&k) {
        return Err(Error::InvalidArgument(format!("family index k = {k} outside 1..={MAX_FAMILY_K}")));
    }
    let blocks = block_count(k) as usize;
    let mut symbols = Vec::with_capacity(family_length(k) as usize);
    symbols.extend(std::iter::repeat_n(A, blocks + 2));
    symbols.extend([B; 4]);
    let w0_len = symbols.len();
    for j in 1..=blocks {
        symbols.extend(std::iter::repeat_n(A, j));
        symbols.extend([B; 3]);
    }
    debug_assert_eq!(symbols.len() as u64, family_length(k));
    let text = Text::from_canonical(symbols, vec!["a".into(), "b".into()], Origin::Family);
    Ok(FamilyInstance { k, blocks, text, w0_len })
}

/// Phrase lengths the greedy parser produces on `w_k`.
pub fn expected_greedy_lengths(k: u32) -> Vec<usize> {
    let mut lengths = vec![1];
    lengths.extend((0..=k).map(|i| 1usize << i));
    lengths.extend([1, 1, 2]);
    for j in 1..=block_count(k) as usize {
        lengths.extend([j + 2, 1]);
    }
    lengths
}

fn witness_lengths(k: u32) -> Vec<usize> {
    let mut lengths = vec![1];
    lengths.extend((0..=k).map(|i| 1usize << i));
    lengths.extend([1; 4]);
    lengths.extend((1..=block_count(k) as usize).map(|j| j + 3));
    lengths
}

/// Runs the greedy parser on `w_k` and checks it phrase by phrase against
/// the predicted shape.
pub fn check_greedy_family(instance: &FamilyInstance) -> Result<Parsing> {
    let parsing = greedy_parse(&instance.text);
    let want = expected_greedy_lengths(instance.k);
    let got = parsing.lengths();
    if let Some(idx) = (0..want.len().max(got.len())).find(|&t| want.get(t) != got.get(t)) {
        let show = |v: Option<&usize>| v.map_or_else(|| "none".to_owned(), usize::to_string);
        return Err(Error::FamilyIntegrity(format!(
            "greedy phrase {} of w_{} has length {}, expected {}",
            idx + 1,
            instance.k,
            show(got.get(idx)),
            show(want.get(idx))
        )));
    }
    debug_assert_eq!(parsing.size() as u64, greedy_size_formula(instance.k));
    Ok(parsing)
}

/// The validated parsing of size `K + k + 6`.
pub fn witness_parsing_family(instance: &FamilyInstance) -> Result<Parsing> {
    let parsing = Parsing::from_lengths(&instance.text, &witness_lengths(instance.k))
        .map_err(|e| Error::FamilyIntegrity(format!("short parsing of w_{} is invalid: {e}", instance.k)))?;
    validate(&instance.text, &parsing).into_result()?;
    if parsing.size() as u64 != witness_size_formula(instance.k) {
        return Err(Error::FamilyIntegrity(format!(
            "short parsing of w_{} has {} phrases, expected {}",
            instance.k,
            parsing.size(),
            witness_size_formula(instance.k)
        )));
    }
    Ok(parsing)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// Greedy size measured by running the parser.
    Measured,
    /// Closed form only.
    Formula,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Measured => "measured",
            Basis::Formula => "formula",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioRow {
    pub k: u32,
    pub n: u64,
    pub greedy: u64,
    pub witness: u64,
    pub ratio: f64,
    pub basis: Basis,
}

/// Rows for `k = 1..=k_max`; rows with `k <= measure_up_to` run the greedy
/// parser and check the short parsing, the rest use the closed forms.
pub fn ratio_table(k_max: u32, measure_up_to: u32) -> Result<Vec<RatioRow>> {
    if !(1..=62).contains(&k_max) {
        return Err(Error::InvalidArgument(format!("k_max = {k_max} outside 1..=62")));
    }
    if measure_up_to > MAX_FAMILY_K {
        return Err(Error::InvalidArgument(format!(
            "cannot measure beyond k = {MAX_FAMILY_K}, asked for {measure_up_to}"
        )));
    }
    (1..=k_max)
        .map(|k| {
            let (greedy, witness, basis) = if k <= measure_up_to {
                let instance = build_family(k)?;
                let greedy = check_greedy_family(&instance)?.size() as u64;
                let witness = witness_parsing_family(&instance)?.size() as u64;
                (greedy, witness, Basis::Measured)
            } else {
                (greedy_size_formula(k), witness_size_formula(k), Basis::Formula)
            };
            Ok(RatioRow {
                k,
                n: family_length(k),
                greedy,
                witness,
                ratio: greedy as f64 / witness as f64,
                basis,
            })
        })
        .collect()
}

pub fn render_table(rows: &[RatioRow]) -> String {
    let mut out = format!(
        "{:>3} {:>22} {:>12} {:>12} {:>8}  {}\n",
        "k", "n", "greedy", "short", "ratio", "basis"
    );
    for r in rows {
        let _ = writeln!(
            out,
            "{:>3} {:>22} {:>12} {:>12} {:>8.4}  {}",
            r.k, r.n, r.greedy, r.witness, r.ratio, r.basis
        );
    }
    out
}

pub fn render_csv(rows: &[RatioRow]) -> String {
    let mut out = String::from("k,n,z_e_measured,witness_size,ratio,basis\n");
    for r in rows {
        let measured = match r.basis {
            Basis::Measured => r.greedy.to_string(),
            Basis::Formula => String::new(),
        };
        let _ = writeln!(out, "{},{},{},{},{:.6},{}", r.k, r.n, measured, r.witness, r.ratio, r.basis);
    }
    out
}
