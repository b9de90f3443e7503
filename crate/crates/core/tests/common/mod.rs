//! Reference implementations used as test oracles. They follow the
//! definitions directly and share no code with the library algorithms.

#![allow(dead_code)]

use lzend::maxsat::{Clause, SolverCommand};
use lzend::Text;
use rand::Rng;

/// All texts of length exactly `n` over the first `sigma` lowercase letters.
pub fn all_texts(sigma: u8, n: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..sigma).map(move |c| {
                    let mut t = t.clone();
                    t.push(b'a' + c);
                    t
                })
            })
            .collect();
    }
    out
}

/// All non-empty binary texts of length at most `max_len`.
pub fn binary_texts_up_to(max_len: usize) -> Vec<Vec<u8>> {
    (1..=max_len).flat_map(|n| all_texts(2, n)).collect()
}

pub fn random_text<R: Rng>(rng: &mut R, sigma: u8, n: usize) -> Vec<u8> {
    (0..n).map(|_| b'a' + rng.gen_range(0..sigma)).collect()
}

fn leftmost(t: &[u8], i: usize) -> bool {
    !t[..i].contains(&t[i])
}

/// Whether `t[start..start+len)` (0-based) ends some prefix `t[..b]` with `b`
/// in `ends` and `b <= start`.
fn has_source(t: &[u8], ends: &[usize], start: usize, len: usize) -> Option<usize> {
    ends.iter()
        .copied()
        .filter(|&b| b <= start && b >= len)
        .find(|&b| t[b - len..b] == t[start..start + len])
}

/// Greedy parsing by definition: (1-based start, length, smallest source end).
pub fn naive_greedy(t: &[u8]) -> Vec<(usize, usize, Option<usize>)> {
    let mut ends = Vec::new();
    let mut out = Vec::new();
    let mut i = 0;
    while i < t.len() {
        let (len, src) = if leftmost(t, i) {
            (1, None)
        } else {
            (1..=t.len() - i)
                .rev()
                .find_map(|len| has_source(t, &ends, i, len).map(|b| (len, Some(b))))
                .expect("length-1 source")
        };
        out.push((i + 1, len, src));
        i += len;
        ends.push(i);
    }
    out
}

/// Minimum number of phrases by enumerating every valid parsing.
pub fn brute_force_min(t: &[u8]) -> usize {
    fn go(t: &[u8], i: usize, ends: &mut Vec<usize>, count: usize, best: &mut usize) {
        if i == t.len() {
            *best = (*best).min(count);
            return;
        }
        for len in 1..=t.len() - i {
            let ok = if leftmost(t, i) { len == 1 } else { has_source(t, ends, i, len).is_some() };
            if ok {
                ends.push(i + len);
                go(t, i + len, ends, count + 1, best);
                ends.pop();
            }
        }
    }
    let mut best = usize::MAX;
    go(t, 0, &mut Vec::new(), 0, &mut best);
    if t.is_empty() {
        0
    } else {
        best
    }
}

/// Every valid parsing, as length sequences.
pub fn all_parsings(t: &[u8]) -> Vec<Vec<usize>> {
    fn go(t: &[u8], i: usize, ends: &mut Vec<usize>, lens: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == t.len() {
            out.push(lens.clone());
            return;
        }
        for len in 1..=t.len() - i {
            let ok = if leftmost(t, i) { len == 1 } else { has_source(t, ends, i, len).is_some() };
            if ok {
                ends.push(i + len);
                lens.push(len);
                go(t, i + len, ends, lens, out);
                lens.pop();
                ends.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(t, 0, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// A random valid parsing: at each position a uniformly chosen valid length.
pub fn random_parsing<R: Rng>(rng: &mut R, t: &[u8]) -> Vec<usize> {
    let mut ends = Vec::new();
    let mut lens = Vec::new();
    let mut i = 0;
    while i < t.len() {
        let options: Vec<usize> = if leftmost(t, i) {
            vec![1]
        } else {
            (1..=t.len() - i).filter(|&len| has_source(t, &ends, i, len).is_some()).collect()
        };
        let len = options[rng.gen_range(0..options.len())];
        lens.push(len);
        i += len;
        ends.push(i);
    }
    lens
}

/// DPLL with unit propagation, random branching variable and random polarity.
/// Returns a satisfying assignment of all `num_vars` variables.
pub fn random_sat<R: Rng>(rng: &mut R, num_vars: u32, clauses: &[Clause]) -> Option<Vec<bool>> {
    let mut assign: Vec<Option<bool>> = vec![None; num_vars as usize + 1];
    if dpll(rng, clauses, &mut assign) {
        Some(assign[1..].iter().map(|v| v.expect("complete")).collect())
    } else {
        None
    }
}

fn lit_value(assign: &[Option<bool>], lit: i32) -> Option<bool> {
    assign[lit.unsigned_abs() as usize].map(|v| v == (lit > 0))
}

fn dpll<R: Rng>(rng: &mut R, clauses: &[Clause], assign: &mut Vec<Option<bool>>) -> bool {
    let snapshot = assign.clone();
    loop {
        let mut changed = false;
        for c in clauses {
            let mut unassigned = None;
            let mut free = 0;
            let mut sat = false;
            for &l in c {
                match lit_value(assign, l) {
                    Some(true) => {
                        sat = true;
                        break;
                    }
                    Some(false) => {}
                    None => {
                        free += 1;
                        unassigned = Some(l);
                    }
                }
            }
            if sat {
                continue;
            }
            match (free, unassigned) {
                (0, _) => {
                    *assign = snapshot;
                    return false;
                }
                (1, Some(l)) => {
                    assign[l.unsigned_abs() as usize] = Some(l > 0);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    let open: Vec<usize> = (1..assign.len()).filter(|&v| assign[v].is_none()).collect();
    if open.is_empty() {
        return true;
    }
    let var = open[rng.gen_range(0..open.len())];
    let first = rng.gen::<bool>();
    for value in [first, !first] {
        assign[var] = Some(value);
        if dpll(rng, clauses, assign) {
            return true;
        }
        assign[var] = None;
    }
    *assign = snapshot;
    false
}

/// The configured external solver: `LZEND_SOLVER`, or `rc2.py -vv` when that
/// script is on the `PATH`.
pub fn solver() -> Option<SolverCommand> {
    if let Some(cmd) = SolverCommand::from_env() {
        return Some(cmd);
    }
    let path = std::env::var_os("PATH")?;
    std::env::split_paths(&path)
        .any(|dir| dir.join("rc2.py").is_file())
        .then(|| "rc2.py -vv".parse().expect("static command"))
}

pub fn text(bytes: &[u8]) -> Text {
    Text::from_bytes(bytes)
}
