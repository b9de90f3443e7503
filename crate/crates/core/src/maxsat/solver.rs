//! External MAX-SAT solver adapter.
//!
//! The instance is written to a temporary WCNF file whose path is appended to
//! the solver command line. The solver's standard output is parsed for the
//! usual `s`, `o` and `v` lines.

use std::fmt;
use std::fs::File;
use std::io::BufWriter;
use std::process::Command;
use std::str::FromStr;

use super::{decode_with, encode, write_wcnf, Model, WcnfDialect, WcnfInstance};
use crate::error::{Error, Result};
use crate::parsing::Parsing;
use crate::text::Text;

/// Environment variable holding the default solver command line.
pub const SOLVER_ENV: &str = "LZEND_SOLVER";

/// Exit codes solvers use by convention for "satisfiable", "unsatisfiable" and
/// "optimum found"; these are not failures.
const CONVENTIONAL_EXIT_CODES: [i32; 4] = [0, 10, 20, 30];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverCommand {
    pub program: String,
    pub args: Vec<String>,
    pub dialect: WcnfDialect,
}

impl SolverCommand {
    /// The command named by [`SOLVER_ENV`], if set and non-empty.
    pub fn from_env() -> Option<SolverCommand> {
        std::env::var(SOLVER_ENV).ok().and_then(|s| s.parse().ok())
    }

    pub fn with_dialect(mut self, dialect: WcnfDialect) -> SolverCommand {
        self.dialect = dialect;
        self
    }

    /// Runs the solver on `instance` and parses its report.
    pub fn run(&self, instance: &WcnfInstance) -> Result<SolverOutcome> {
        let file = tempfile::Builder::new().prefix("lzend-").suffix(".wcnf").tempfile()?;
        {
            let mut sink = BufWriter::new(File::create(file.path())?);
            write_wcnf(instance, self.dialect, &mut sink)?;
        }
        let output = Command::new(&self.program)
            .args(&self.args)
            .arg(file.path())
            .output()
            .map_err(|e| Error::Solver {
                message: format!("could not start `{}`: {e}", self.program),
                output: String::new(),
            })?;
        let stdout = String::from_utf8_lossy(&output.stdout).into_owned();
        let code = output.status.code();
        if !code.is_some_and(|c| CONVENTIONAL_EXIT_CODES.contains(&c)) {
            let mut captured = stdout;
            captured.push_str(&String::from_utf8_lossy(&output.stderr));
            return Err(Error::Solver {
                message: format!("`{self}` exited with {}", output.status),
                output: captured,
            });
        }
        parse_solver_output(&stdout, instance.num_vars)
    }
}

impl FromStr for SolverCommand {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut words = s.split_whitespace().map(str::to_owned);
        let program = words
            .next()
            .ok_or_else(|| Error::InvalidArgument("empty solver command".into()))?;
        Ok(SolverCommand { program, args: words.collect(), dialect: WcnfDialect::Modern })
    }
}

impl fmt::Display for SolverCommand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.program)?;
        for a in &self.args {
            write!(f, " {a}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverStatus {
    Optimum,
    Satisfiable,
    Unsatisfiable,
    Unknown,
}

#[derive(Debug, Clone)]
pub struct SolverOutcome {
    pub status: SolverStatus,
    /// Last `o` line.
    pub cost: Option<u64>,
    pub model: Option<Model>,
    pub stdout: String,
}

/// Parses solver output. `v` lines may hold signed literals (possibly spread
/// over several lines, `0`-terminated or not) or a single 0/1 string with one
/// character per variable. Variables a literal list leaves out are false.
pub fn parse_solver_output(stdout: &str, num_vars: u32) -> Result<SolverOutcome> {
    let fail = |message: String| Error::Solver { message, output: stdout.to_owned() };
    let mut status = None;
    let mut cost = None;
    let mut values: Vec<&str> = Vec::new();
    for line in stdout.lines() {
        let line = line.trim();
        let (tag, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match tag {
            "s" => {
                status = Some(match rest {
                    "OPTIMUM FOUND" => SolverStatus::Optimum,
                    "SATISFIABLE" => SolverStatus::Satisfiable,
                    "UNSATISFIABLE" => SolverStatus::Unsatisfiable,
                    "UNKNOWN" => SolverStatus::Unknown,
                    other => return Err(fail(format!("unrecognized status line `s {other}`"))),
                });
            }
            "o" => {
                cost = Some(rest.parse::<u64>().map_err(|_| fail(format!("bad cost line `o {rest}`")))?);
            }
            "v" => values.extend(rest.split_whitespace()),
            _ => {}
        }
    }
    let status = status.ok_or_else(|| fail("no status line".into()))?;

    let model = if values.is_empty() {
        None
    } else {
        let mut assignment = vec![false; num_vars as usize];
        let bitstring = values.len() == 1
            && values[0].len() == num_vars as usize
            && values[0].bytes().all(|b| b == b'0' || b == b'1');
        if bitstring {
            for (slot, b) in assignment.iter_mut().zip(values[0].bytes()) {
                *slot = b == b'1';
            }
        } else {
            for tok in values {
                let lit: i64 = tok.parse().map_err(|_| fail(format!("bad literal `{tok}` in v-line")))?;
                if lit == 0 {
                    continue;
                }
                let var = lit.unsigned_abs();
                if var > num_vars as u64 {
                    return Err(fail(format!("literal {lit} exceeds the {num_vars} instance variables")));
                }
                assignment[var as usize - 1] = lit > 0;
            }
        }
        Some(Model { assignment, reported_cost: cost })
    };
    Ok(SolverOutcome { status, cost, model, stdout: stdout.to_owned() })
}

/// A parsing recovered from a solver run.
#[derive(Debug, Clone)]
pub struct Solved {
    pub parsing: Parsing,
    pub reported_cost: Option<u64>,
    /// Non-fatal discrepancies, e.g. a reported cost differing from the size.
    pub warnings: Vec<String>,
}

/// Encodes `text`, runs the solver and decodes its optimal model.
pub fn solve(text: &Text, solver: &SolverCommand) -> Result<Solved> {
    Ok(solve_batch(std::slice::from_ref(text), solver)?.remove(0))
}

/// Solves several texts with one solver call over the disjoint union of their
/// instances. The parts share no variables, so a model is optimal for the
/// union exactly when each part is optimal for its own instance.
pub fn solve_batch(texts: &[Text], solver: &SolverCommand) -> Result<Vec<Solved>> {
    let encoded: Vec<_> = texts.iter().map(encode).collect();
    let live: Vec<usize> = (0..texts.len()).filter(|&k| !texts[k].is_empty()).collect();
    let mut results: Vec<Option<Solved>> = vec![None; texts.len()];
    for k in 0..texts.len() {
        if texts[k].is_empty() {
            results[k] = Some(Solved { parsing: Parsing::default(), reported_cost: Some(0), warnings: Vec::new() });
        }
    }
    if !live.is_empty() {
        let (union, offsets) = WcnfInstance::disjoint_union(live.iter().map(|&k| &encoded[k].0));
        let outcome = solver.run(&union)?;
        match outcome.status {
            SolverStatus::Optimum => {}
            SolverStatus::Unsatisfiable => {
                return Err(Error::EncoderBug(
                    "solver reports the hard clauses unsatisfiable, but the greedy parsing satisfies them".into(),
                ))
            }
            other => {
                return Err(Error::Solver {
                    message: format!("solver did not prove optimality (status {other:?})"),
                    output: outcome.stdout,
                })
            }
        }
        let model = outcome.model.ok_or_else(|| Error::Solver {
            message: "solver printed no model (v-line)".into(),
            output: outcome.stdout.clone(),
        })?;

        let mut total = 0u64;
        for (&k, &offset) in live.iter().zip(&offsets) {
            let (instance, map) = &encoded[k];
            let part = model.slice(offset, instance.num_vars);
            let parsing = decode_with(instance, &part, map, &texts[k])?;
            total += parsing.size() as u64;
            let reported = (live.len() == 1).then_some(outcome.cost).flatten();
            results[k] = Some(Solved { parsing, reported_cost: reported, warnings: Vec::new() });
        }
        if let Some(cost) = outcome.cost {
            if cost != total {
                let warning = format!("solver reported cost {cost}, decoded parsings have {total} phrases");
                for &k in &live {
                    results[k].as_mut().unwrap().warnings.push(warning.clone());
                }
            }
        }
    }
    Ok(results.into_iter().map(|r| r.expect("every text solved")).collect())
}
