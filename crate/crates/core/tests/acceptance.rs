//! Acceptance checks. Runs as a plain binary (no libtest harness) and prints
//! one PASS/FAIL/SKIP line per criterion; the process fails if any criterion
//! fails. Solver-dependent parts are skipped when no MAX-SAT solver is found
//! (`LZEND_SOLVER`, or `rc2.py` on the `PATH`).

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{binary_texts_up_to, brute_force_min, random_parsing, random_sat, random_text, solver, text};
use lzend::family::{self, Basis};
use lzend::gadget::{
    brute_force_vertex_cover, build_gadget, cover_from_parsing, greedy_counts, witness_parsing, Graph,
};
use lzend::maxsat::{decode, encode, induced_model, solve, solve_batch, Model, SolverCommand};
use lzend::{greedy_parse, optimal_parse, validate, Parsing, SearchConfig, Text};
use rand::{rngs::StdRng, Rng, SeedableRng};

enum Outcome {
    Pass(String),
    Fail(String),
    Skip(String),
}

type Check = Result<String, String>;
type Criterion = (u32, &'static str, Box<dyn Fn() -> Outcome>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed <= limit, || format!("{what} took {elapsed:.2?}, limit {limit:?}"))
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let t = text(b"aacbbbbaababbabbba");
    let greedy = greedy_parse(&t);
    let optimal = optimal_parse(&t, &SearchConfig::default()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(greedy.size() == 12, || format!("greedy size {}", greedy.size()))?;
    ensure(optimal.size() == 11, || format!("optimal size {}", optimal.size()))?;
    let tenth = greedy.phrases().iter().find(|p| p.start == 10).map(|p| p.len);
    ensure(tenth == Some(1), || format!("greedy phrase at 10: {tenth:?}"))?;
    ensure(validate(&t, &greedy).is_accept() && validate(&t, &optimal).is_accept(), || "invalid parsing".into())?;
    within(elapsed, Duration::from_secs(1), "example")?;
    Ok(format!("greedy 12, optimal 11, phrase at 10 has length 1 ({elapsed:.2?})"))
}

fn criterion_2_bruteforce(texts: &[Vec<u8>]) -> Result<Vec<usize>, String> {
    let start = Instant::now();
    let mut sizes = Vec::with_capacity(texts.len());
    for bytes in texts {
        let t = text(bytes);
        let p = optimal_parse(&t, &SearchConfig::default()).map_err(|e| e.to_string())?;
        let label = || String::from_utf8_lossy(bytes).into_owned();
        ensure(validate(&t, &p).is_accept(), || format!("{}: optimal parsing rejected", label()))?;
        let oracle = brute_force_min(bytes);
        ensure(p.size() == oracle, || format!("{}: search {} vs enumeration {oracle}", label(), p.size()))?;
        let g = greedy_parse(&t);
        ensure(validate(&t, &g).is_accept(), || format!("{}: greedy parsing rejected", label()))?;
        ensure(g.size() >= p.size(), || format!("{}: greedy {} below optimum {}", label(), g.size(), p.size()))?;
        sizes.push(p.size());
    }
    within(start.elapsed(), Duration::from_secs(120), "brute-force sweep")?;
    Ok(sizes)
}

fn criterion_2_maxsat(texts: &[Vec<u8>], sizes: &[usize], cmd: &SolverCommand) -> Check {
    let start = Instant::now();
    let all: Vec<Text> = texts.iter().map(|b| text(b)).collect();
    let mut calls = 0;
    for (chunk, want) in all.chunks(512).zip(sizes.chunks(512)) {
        let solved = solve_batch(chunk, cmd).map_err(|e| e.to_string())?;
        calls += 1;
        for ((t, s), &w) in chunk.iter().zip(&solved).zip(want) {
            ensure(validate(t, &s.parsing).is_accept(), || format!("{t}: decoded parsing rejected"))?;
            ensure(s.parsing.size() == w, || format!("{t}: MAX-SAT {} vs brute force {w}", s.parsing.size()))?;
            ensure(s.warnings.is_empty(), || format!("{t}: {:?}", s.warnings))?;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(600), "MAX-SAT sweep")?;
    Ok(format!("{calls} solver calls ({elapsed:.2?})"))
}

fn criterion_2() -> Outcome {
    let texts = binary_texts_up_to(12);
    let start = Instant::now();
    let sizes = match criterion_2_bruteforce(&texts) {
        Ok(s) => s,
        Err(e) => return Outcome::Fail(e),
    };
    let brute = format!("{} texts, brute force = enumeration <= greedy ({:.2?})", texts.len(), start.elapsed());
    match solver() {
        None => Outcome::Skip(format!("{brute}; MAX-SAT half skipped, no solver configured")),
        Some(cmd) => match criterion_2_maxsat(&texts, &sizes, &cmd) {
            Ok(msg) => Outcome::Pass(format!("{brute}; MAX-SAT optimum = decoded size = brute force, {msg}")),
            Err(e) => Outcome::Fail(e),
        },
    }
}

fn criterion_3() -> Check {
    let start = Instant::now();
    let graphs = [
        ("K3", Graph::triangle()),
        ("C4", Graph::cycle(4)),
        ("K4", Graph::complete(4)),
        ("C5", Graph::cycle(5)),
    ];
    let mut summary = Vec::new();
    for (name, g) in &graphs {
        let (n, m) = (g.num_vertices(), g.num_edges());
        let gadget = build_gadget(g).map_err(|e| e.to_string())?;
        ensure(gadget.text.len() == 19 * n + 37 * m, || format!("{name}: length {}", gadget.text.len()))?;
        let counts = greedy_counts(g).map_err(|e| format!("{name}: {e}"))?;
        ensure(counts.total == 13 * n + 23 * m, || format!("{name}: greedy {}", counts.total))?;
        let cover = brute_force_vertex_cover(g).map_err(|e| e.to_string())?;
        let witness = witness_parsing(g, &cover).map_err(|e| format!("{name}: {e}"))?;
        ensure(validate(&gadget.text, &witness).is_accept(), || format!("{name}: witness rejected"))?;
        let want = 13 * n + 22 * m + cover.len();
        ensure(witness.size() == want, || format!("{name}: witness {} vs {want}", witness.size()))?;
        let back = cover_from_parsing(g, &witness).map_err(|e| format!("{name}: {e}"))?;
        ensure(back.cover == cover, || format!("{name}: read back {} from {}", back.cover, cover))?;
        summary.push(format!("{name} {}/{}/{}", gadget.text.len(), counts.total, witness.size()));
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(10), "gadget counts")?;
    Ok(format!("length/greedy/witness: {} ({elapsed:.2?})", summary.join(", ")))
}

fn criterion_4() -> Outcome {
    let Some(cmd) = solver() else {
        return Outcome::Skip("no MAX-SAT solver configured".into());
    };
    let start = Instant::now();
    let result = build_gadget(&Graph::triangle()).and_then(|g| {
        let solved = solve(&g.text, &cmd)?;
        Ok((g, solved))
    });
    let elapsed = start.elapsed();
    match result {
        Err(e) => Outcome::Fail(e.to_string()),
        Ok((g, solved)) => {
            let size = solved.parsing.size();
            if !validate(&g.text, &solved.parsing).is_accept() {
                Outcome::Fail("decoded parsing rejected".into())
            } else if size != 107 {
                Outcome::Fail(format!("optimum {size}, expected 107"))
            } else if elapsed > Duration::from_secs(1800) {
                Outcome::Fail(format!("took {elapsed:.2?}"))
            } else {
                Outcome::Pass(format!("K3 gadget (168 tokens) optimum 107 ({elapsed:.2?})"))
            }
        }
    }
}

fn criterion_5() -> Check {
    let start = Instant::now();
    for k in 1..=8 {
        let w = family::build_family(k).map_err(|e| e.to_string())?;
        let greedy = family::check_greedy_family(&w).map_err(|e| e.to_string())?;
        ensure(greedy.size() as u64 == family::greedy_size_formula(k), || format!("k = {k}: greedy {}", greedy.size()))?;
        // block j of a^j b^3 adds exactly [a^j b^2][b]
        let tail = &greedy.phrases()[greedy.size() - 2 * w.blocks..];
        let mut pos = w.w0_len + 1;
        for j in 1..=w.blocks {
            let (first, second) = (&tail[2 * j - 2], &tail[2 * j - 1]);
            ensure(first.start == pos && first.len == j + 2 && second.len == 1, || {
                format!("k = {k}: block {j} parsed as {} + {}", first.len, second.len)
            })?;
            let a = w.text.at(1);
            let ok = (0..j).all(|t| w.text.at(pos + t) == a) && (j..j + 3).all(|t| w.text.at(pos + t) != a);
            ensure(ok, || format!("k = {k}: block {j} is not a^j b^3"))?;
            pos += j + 3;
        }
        let short = family::witness_parsing_family(&w).map_err(|e| e.to_string())?;
        ensure(validate(&w.text, &short).is_accept(), || format!("k = {k}: short parsing rejected"))?;
        ensure(short.size() as u64 == family::witness_size_formula(k), || format!("k = {k}: short {}", short.size()))?;
    }
    let rows = family::ratio_table(10, 8).map_err(|e| e.to_string())?;
    let (r8, r10) = (&rows[7], &rows[9]);
    ensure(r8.basis == Basis::Measured && r8.ratio > 1.97, || format!("ratio(8) = {:.4}", r8.ratio))?;
    ensure(r10.ratio > 1.99, || format!("ratio(10) = {:.4}", r10.ratio))?;
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(120), "family checks")?;
    Ok(format!(
        "k = 1..8 exact; ratio(8) = {}/{} = {:.4}, ratio(10) = {}/{} = {:.4} ({elapsed:.2?})",
        r8.greedy, r8.witness, r8.ratio, r10.greedy, r10.witness, r10.ratio
    ))
}

fn criterion_6() -> Check {
    let mut rng = StdRng::seed_from_u64(2024);
    let mut violations = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=40);
        let sigma = rng.gen_range(2..=3);
        let bytes = random_text(&mut rng, sigma, n);
        let t = text(&bytes);
        let lengths = random_parsing(&mut rng, &bytes);
        let parsing = Parsing::from_lengths(&t, &lengths).map_err(|e| e.to_string())?;
        let (instance, map) = encode(&t);
        let model = induced_model(&t, &map, &parsing).map_err(|e| e.to_string())?;
        if instance.first_violated(&model.assignment).is_some() || instance.cost(&model.assignment) != parsing.size() as u64 {
            violations += 1;
        }
    }
    ensure(violations == 0, || format!("{violations} induced models violate the encoding"))?;

    for _ in 0..200 {
        let n = rng.gen_range(1..=16);
        let sigma = rng.gen_range(2..=3);
        let t = text(&random_text(&mut rng, sigma, n));
        let (instance, map) = encode(&t);
        let assignment = random_sat(&mut rng, instance.num_vars, &instance.hard)
            .ok_or_else(|| format!("{t}: hard clauses unsatisfiable"))?;
        let model = Model { assignment, reported_cost: None };
        match decode(&model, &map, &t) {
            Ok(p) if validate(&t, &p).is_accept() => {}
            _ => violations += 1,
        }
    }
    ensure(violations == 0, || format!("{violations} hard-satisfying assignments decode to invalid parsings"))?;
    Ok("200 induced models satisfy every hard clause; 200 random models decode to valid parsings".into())
}

fn criterion_7() -> Check {
    let mut rng = StdRng::seed_from_u64(77);
    let mut points = Vec::new();
    for n in [50usize, 100, 200] {
        let t = text(&random_text(&mut rng, 2, n));
        let (instance, map) = encode(&t);
        let refs = map.num_refs();
        let aux = map.num_aux();
        let vars = instance.num_vars as usize;
        ensure(vars <= 1 + n + refs + aux, || format!("n = {n}: {vars} variables"))?;
        ensure(aux <= refs, || format!("n = {n}: {aux} auxiliary variables for {refs} references"))?;
        ensure(vars <= n * n, || format!("n = {n}: {vars} variables exceed n^2"))?;
        points.push((n, vars, refs, aux));
    }
    for w in points.windows(2) {
        let exponent = (w[1].1 as f64 / w[0].1 as f64).log2();
        ensure(exponent <= 2.2, || format!("variables grow like n^{exponent:.2} from n = {} to {}", w[0].0, w[1].0))?;
    }
    let shown: Vec<String> = points
        .iter()
        .map(|(n, v, r, a)| format!("n={n}: {v} vars ({r} refs, {a} aux, {:.3} n^2)", *v as f64 / (n * n) as f64))
        .collect();
    Ok(shown.join("; "))
}

fn main() -> ExitCode {
    let lift = |r: Check| match r {
        Ok(s) => Outcome::Pass(s),
        Err(s) => Outcome::Fail(s),
    };
    let criteria: Vec<Criterion> = vec![
        (1, "example string greedy/optimal sizes", Box::new(move || lift(criterion_1()))),
        (2, "exhaustive oracle equivalence, binary texts up to 12", Box::new(criterion_2)),
        (3, "gadget counts on K3, C4, K4, C5", Box::new(move || lift(criterion_3()))),
        (4, "reduction optimum on K3 via MAX-SAT", Box::new(criterion_4)),
        (5, "family formulas and ratios", Box::new(move || lift(criterion_5()))),
        (6, "encoder soundness and completeness", Box::new(move || lift(criterion_6()))),
        (7, "encoding size", Box::new(move || lift(criterion_7()))),
    ];
    let mut failed = 0;
    for (id, name, run) in &criteria {
        match run() {
            Outcome::Pass(d) => println!("criterion {id} PASS  {name}: {d}"),
            Outcome::Skip(d) => println!("criterion {id} SKIP  {name}: {d}"),
            Outcome::Fail(d) => {
                failed += 1;
                println!("criterion {id} FAIL  {name}: {d}");
            }
        }
    }
    println!("acceptance: {} of {} criteria failed", failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
