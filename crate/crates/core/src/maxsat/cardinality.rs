use super::{Clause, Lit};

/// Lists at or below this size use the pairwise at-most-one encoding.
pub const PAIRWISE_LIMIT: usize = 4;

/// Clauses forcing exactly one of `lits` to be true.
///
/// At-least-one is a single clause. At-most-one is pairwise for up to
/// [`PAIRWISE_LIMIT`] literals and a sequential counter otherwise, which uses
/// `lits.len() - 1` fresh variables starting at `*next_var` and `3k - 4`
/// clauses. Returns the clauses and the fresh variables.
///
/// # Panics
///
/// If `lits` is empty.
pub fn exactly_one(lits: &[Lit], next_var: &mut u32) -> (Vec<Clause>, Vec<u32>) {
    assert!(!lits.is_empty(), "exactly-one over an empty literal list");
    let mut clauses = vec![lits.to_vec()];
    let k = lits.len();
    if k <= PAIRWISE_LIMIT {
        for a in 0..k {
            for b in a + 1..k {
                clauses.push(vec![-lits[a], -lits[b]]);
            }
        }
        return (clauses, Vec::new());
    }

    // s[i] <=> lits[0] | ... | lits[i]
    let aux: Vec<u32> = (0..k as u32 - 1).map(|t| *next_var + t).collect();
    *next_var += k as u32 - 1;
    let s = |i: usize| aux[i] as Lit;
    clauses.push(vec![-lits[0], s(0)]);
    for (i, &lit) in lits.iter().enumerate().take(k - 1).skip(1) {
        clauses.push(vec![-lit, s(i)]);
        clauses.push(vec![-s(i - 1), s(i)]);
        clauses.push(vec![-lit, -s(i - 1)]);
    }
    clauses.push(vec![-lits[k - 1], -s(k - 2)]);
    (clauses, aux)
}

/// Values of the sequential-counter variables implied by `values` of the
/// counted literals (prefix disjunctions).
pub(crate) fn counter_values(values: &[bool]) -> Vec<bool> {
    values
        .iter()
        .take(values.len().saturating_sub(1))
        .scan(false, |acc, &v| {
            *acc |= v;
            Some(*acc)
        })
        .collect()
}
