//! Exact computation of LZ-End parsings.
//!
//! * [`greedy_parse`] computes the greedy LZ-End parsing (size `z_e`).
//! * [`optimal_parse`] finds a minimum-phrase LZ-End-like parsing (size
//!   `z_end`) by branch and bound.
//! * [`maxsat`] encodes the optimal-parsing problem as weighted MAX-SAT and
//!   drives an external solver.
//! * [`gadget`] builds the vertex-cover reduction strings and checks their
//!   phrase counts.
//! * [`family`] generates the binary strings whose greedy/optimal ratio tends
//!   to 2.
//!
//! Positions are 1-based in every public interface.

pub mod error;
pub mod family;
pub mod gadget;
pub mod greedy;
pub mod index;
pub mod maxsat;
pub mod parsing;
pub mod search;
pub mod text;

pub use error::{Error, ErrorKind, Result};
pub use greedy::{greedy_parse, z_e};
pub use parsing::{phrase_ends, validate, Parsing, Phrase, Rejection, Source, Validity, Violation};
pub use search::{candidate_lengths, optimal_parse, z_end, SearchConfig, SearchState};
pub use text::{Origin, Symbol, Text};
