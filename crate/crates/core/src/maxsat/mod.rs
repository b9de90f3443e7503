//! Weighted MAX-SAT formulation of the optimal LZ-End parsing.
//!
//! Variables, for a text `T[1..n]` and `M_i = { j < i : T[j] = T[i] }`:
//!
//! * `p_i`: position `i` starts a phrase;
//! * `r_{i->j}` for `j` in `M_i`: position `i` copies position `j`.
//!
//! Whether `i` is the leftmost occurrence of its symbol (`c_i`) is a constant
//! and is folded into the clauses rather than given a variable. Hard clauses:
//!
//! 1. `p_i` for every leftmost occurrence `i`;
//! 2. exactly one `r_{i->j}` for every other position;
//! 3. `r_{i->j} -> p_i` when `j = 1` or `T[j-1] != T[i-1]`;
//! 4. `r_{i->j} & !p_i -> r_{i-1->j-1}` otherwise;
//! 5. `r_{i->j} & p_{i+1} -> p_{j+1}` for `i < n`, and `r_{n->j} -> p_{j+1}`.
//!
//! Soft clauses `!p_i` with weight 1, so the optimum cost is the number of
//! phrases.

mod cardinality;
mod solver;
mod wcnf;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parsing::{validate, Parsing, Phrase, Source, Validity};
use crate::text::Text;

pub use cardinality::{exactly_one, PAIRWISE_LIMIT};
pub use solver::{parse_solver_output, solve, solve_batch, Solved, SolverCommand, SolverOutcome, SolverStatus, SOLVER_ENV};
pub use wcnf::{wcnf_string, write_wcnf, WcnfDialect};

/// DIMACS literal: a non-zero variable id, negative when negated.
pub type Lit = i32;
pub type Clause = Vec<Lit>;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WcnfInstance {
    pub num_vars: u32,
    pub hard: Vec<Clause>,
    pub soft: Vec<(u64, Clause)>,
}

impl WcnfInstance {
    /// Weight used for hard clauses in the legacy format.
    pub fn top_weight(&self) -> u64 {
        self.soft.iter().map(|(w, _)| w).sum::<u64>() + 1
    }

    /// Instances side by side over disjoint variables. Returns the union and
    /// the variable offset of each part.
    pub fn disjoint_union<'a, I>(parts: I) -> (WcnfInstance, Vec<u32>)
    where
        I: IntoIterator<Item = &'a WcnfInstance>,
    {
        let mut out = WcnfInstance::default();
        let mut offsets = Vec::new();
        for part in parts {
            let off = out.num_vars;
            let shift = |c: &Clause| -> Clause {
                c.iter().map(|&l| if l > 0 { l + off as Lit } else { l - off as Lit }).collect()
            };
            out.hard.extend(part.hard.iter().map(shift));
            out.soft.extend(part.soft.iter().map(|(w, c)| (*w, shift(c))));
            out.num_vars += part.num_vars;
            offsets.push(off);
        }
        (out, offsets)
    }

    /// Index of the first hard clause `assignment` falsifies.
    pub fn first_violated(&self, assignment: &[bool]) -> Option<usize> {
        self.hard.iter().position(|c| !clause_holds(c, assignment))
    }

    /// Number of soft clauses falsified, weighted.
    pub fn cost(&self, assignment: &[bool]) -> u64 {
        self.soft
            .iter()
            .filter(|(_, c)| !clause_holds(c, assignment))
            .map(|(w, _)| w)
            .sum()
    }
}

fn lit_value(lit: Lit, assignment: &[bool]) -> bool {
    let v = assignment[lit.unsigned_abs() as usize - 1];
    if lit > 0 {
        v
    } else {
        !v
    }
}

fn clause_holds(clause: &[Lit], assignment: &[bool]) -> bool {
    clause.iter().any(|&l| lit_value(l, assignment))
}

/// Ties solver variables to positions. Also serialized as the varmap sidecar.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarMap {
    pub n: usize,
    pub num_vars: u32,
    /// `p_vars[i - 1]` is the variable of `p_i`.
    pub p_vars: Vec<u32>,
    /// `c_fixed[i - 1]` is the constant `c_i`.
    pub c_fixed: Vec<bool>,
    /// `r_vars[i - 1]` lists `(j, variable of r_{i->j})` by ascending `j`.
    pub r_vars: Vec<Vec<(usize, u32)>>,
    /// `aux_vars[i - 1]` are the cardinality-encoding variables for position `i`.
    pub aux_vars: Vec<Vec<u32>>,
}

impl VarMap {
    pub fn p(&self, i: usize) -> u32 {
        self.p_vars[i - 1]
    }

    pub fn r(&self, i: usize, j: usize) -> Option<u32> {
        let refs = &self.r_vars[i - 1];
        refs.binary_search_by_key(&j, |&(jj, _)| jj).ok().map(|k| refs[k].1)
    }

    /// Total number of reference variables, `sum |M_i|`.
    pub fn num_refs(&self) -> usize {
        self.r_vars.iter().map(Vec::len).sum()
    }

    pub fn num_aux(&self) -> usize {
        self.aux_vars.iter().map(Vec::len).sum()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(input: &str) -> Result<VarMap> {
        Ok(serde_json::from_str(input)?)
    }
}

/// A total truth assignment, `assignment[v - 1]` for variable `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    pub assignment: Vec<bool>,
    pub reported_cost: Option<u64>,
}

impl Model {
    pub fn value(&self, var: u32) -> bool {
        self.assignment[var as usize - 1]
    }

    /// The part of the model covering variables `offset + 1 ..= offset + len`.
    pub fn slice(&self, offset: u32, len: u32) -> Model {
        Model {
            assignment: self.assignment[offset as usize..(offset + len) as usize].to_vec(),
            reported_cost: None,
        }
    }
}

pub fn encode(text: &Text) -> (WcnfInstance, VarMap) {
    let n = text.len();
    let mut map = VarMap {
        n,
        num_vars: 0,
        p_vars: (1..=n as u32).collect(),
        c_fixed: (1..=n).map(|i| text.is_leftmost(i)).collect(),
        r_vars: vec![Vec::new(); n],
        aux_vars: vec![Vec::new(); n],
    };
    let mut next_var = n as u32 + 1;

    // M_i, in ascending j.
    let mut occurrences: Vec<Vec<usize>> = vec![Vec::new(); text.alphabet_size()];
    for i in 1..=n {
        let seen = &mut occurrences[text.at(i) as usize];
        map.r_vars[i - 1] = seen
            .iter()
            .map(|&j| {
                let v = next_var;
                next_var += 1;
                (j, v)
            })
            .collect();
        seen.push(i);
    }

    let p = |i: usize| i as Lit;
    let mut hard: Vec<Clause> = Vec::new();

    for i in 1..=n {
        if map.c_fixed[i - 1] {
            hard.push(vec![p(i)]);
        }
    }

    for i in 1..=n {
        if map.c_fixed[i - 1] {
            continue;
        }
        let lits: Vec<Lit> = map.r_vars[i - 1].iter().map(|&(_, v)| v as Lit).collect();
        let (clauses, aux) = exactly_one(&lits, &mut next_var);
        hard.extend(clauses);
        map.aux_vars[i - 1] = aux;
    }

    for i in 2..=n {
        for &(j, r) in &map.r_vars[i - 1] {
            let r = r as Lit;
            if j == 1 || text.at(j - 1) != text.at(i - 1) {
                hard.push(vec![-r, p(i)]);
            } else {
                let prev = map.r(i - 1, j - 1).expect("j - 1 is in M_{i-1}") as Lit;
                hard.push(vec![-r, p(i), prev]);
            }
        }
    }

    for i in 1..=n {
        for &(j, r) in &map.r_vars[i - 1] {
            let r = r as Lit;
            if i < n {
                hard.push(vec![-r, -p(i + 1), p(j + 1)]);
            } else {
                hard.push(vec![-r, p(j + 1)]);
            }
        }
    }

    let soft = (1..=n).map(|i| (1, vec![-p(i)])).collect();
    map.num_vars = next_var - 1;
    (WcnfInstance { num_vars: map.num_vars, hard, soft }, map)
}

/// The assignment a valid parsing induces: `p_i` at phrase starts, and each
/// copied position references its counterpart in the phrase's source.
pub fn induced_model(text: &Text, map: &VarMap, parsing: &Parsing) -> Result<Model> {
    validate(text, parsing).into_result()?;
    let parsing = parsing.with_resolved_sources(text);
    let mut assignment = vec![false; map.num_vars as usize];
    for phrase in parsing.phrases() {
        assignment[map.p(phrase.start) as usize - 1] = true;
        if let Some(b) = phrase.source_end() {
            let source_start = b + 1 - phrase.len;
            for t in 0..phrase.len {
                let (i, j) = (phrase.start + t, source_start + t);
                let r = map.r(i, j).ok_or_else(|| {
                    Error::EncoderBug(format!("no variable r_{{{i}->{j}}} for a copied position"))
                })?;
                assignment[r as usize - 1] = true;
            }
        }
    }
    for i in 1..=map.n {
        let aux = &map.aux_vars[i - 1];
        if aux.is_empty() {
            continue;
        }
        let inputs: Vec<bool> = map.r_vars[i - 1].iter().map(|&(_, v)| assignment[v as usize - 1]).collect();
        for (&v, value) in aux.iter().zip(cardinality::counter_values(&inputs)) {
            assignment[v as usize - 1] = value;
        }
    }
    Ok(Model { assignment, reported_cost: None })
}

/// Reads a parsing back from a model of the instance `encode(text)`.
pub fn decode(model: &Model, map: &VarMap, text: &Text) -> Result<Parsing> {
    let (instance, expected) = encode(text);
    if *map != expected {
        return Err(Error::InconsistentModel("variable map does not belong to this text".into()));
    }
    decode_with(&instance, model, map, text)
}

pub(crate) fn decode_with(instance: &WcnfInstance, model: &Model, map: &VarMap, text: &Text) -> Result<Parsing> {
    if model.assignment.len() != map.num_vars as usize {
        return Err(Error::InconsistentModel(format!(
            "model assigns {} variables, instance has {}",
            model.assignment.len(),
            map.num_vars
        )));
    }
    if let Some(k) = instance.first_violated(&model.assignment) {
        return Err(Error::InconsistentModel(format!(
            "hard clause {} {:?} is falsified",
            k + 1,
            instance.hard[k]
        )));
    }

    let n = map.n;
    let starts: Vec<usize> = (1..=n).filter(|&i| i == 1 || model.value(map.p(i))).collect();
    let mut phrases = Vec::with_capacity(starts.len());
    for (k, &start) in starts.iter().enumerate() {
        let end = starts.get(k + 1).map_or(n, |&s| s - 1);
        let len = end - start + 1;
        let phrase = if map.c_fixed[end - 1] {
            if len != 1 {
                return Err(Error::EncoderBug(format!("leftmost occurrence {end} inside a longer phrase")));
            }
            Phrase::singleton(start)
        } else {
            let mut chosen = map.r_vars[end - 1].iter().filter(|&&(_, v)| model.value(v));
            let source_end = match (chosen.next(), chosen.next()) {
                (Some(&(j, _)), None) => j,
                _ => {
                    return Err(Error::EncoderBug(format!(
                        "position {end} does not reference exactly one position"
                    )))
                }
            };
            Phrase { start, len, source: Source::Copy { source_end: Some(source_end) } }
        };
        phrases.push(phrase);
    }

    let parsing = Parsing::new(phrases);
    match validate(text, &parsing) {
        Validity::Accept => Ok(parsing),
        Validity::Reject(r) => Err(Error::EncoderBug(format!("decoded parsing is invalid: {r}"))),
    }
}
