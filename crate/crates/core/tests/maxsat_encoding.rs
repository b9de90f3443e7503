mod common;

use common::{all_parsings, all_texts, brute_force_min, random_sat, random_text, solver, text};
use lzend::maxsat::{decode, encode, induced_model, parse_solver_output, solve, solve_batch, wcnf_string, Model, WcnfDialect};
use lzend::{greedy_parse, validate, Error, Parsing};
use proptest::prelude::*;
use rand::{rngs::StdRng, SeedableRng};

#[test]
fn every_parsing_of_small_texts_round_trips() {
    for n in 1..=7 {
        for bytes in all_texts(2, n).into_iter().chain(all_texts(3, n.min(6))) {
            let t = text(&bytes);
            let (instance, map) = encode(&t);
            for lengths in all_parsings(&bytes) {
                let p = Parsing::from_lengths(&t, &lengths).unwrap();
                let model = induced_model(&t, &map, &p).unwrap();
                assert_eq!(instance.first_violated(&model.assignment), None);
                assert_eq!(instance.cost(&model.assignment), p.size() as u64);
                assert_eq!(decode(&model, &map, &t).unwrap().lengths(), lengths);
            }
        }
    }
}

#[test]
fn random_models_of_hard_clauses_decode() {
    let mut rng = StdRng::seed_from_u64(31);
    for _ in 0..100 {
        let bytes = random_text(&mut rng, 2, 14);
        let t = text(&bytes);
        let (instance, map) = encode(&t);
        let assignment = random_sat(&mut rng, instance.num_vars, &instance.hard).unwrap();
        let p = decode(&Model { assignment, reported_cost: None }, &map, &t).unwrap();
        assert!(validate(&t, &p).is_accept());
        assert!(p.size() >= brute_force_min(&bytes));
    }
}

#[test]
fn falsified_hard_clause_is_reported() {
    let t = text(b"abab");
    let (_, map) = encode(&t);
    let model = Model { assignment: vec![false; map.num_vars as usize], reported_cost: None };
    assert!(matches!(decode(&model, &map, &t), Err(Error::InconsistentModel(_))));
}

#[test]
fn dialects_agree_on_clauses() {
    let t = text(b"aacbbbbaababbabbba");
    let (instance, _) = encode(&t);
    let modern = wcnf_string(&instance, WcnfDialect::Modern);
    let legacy = wcnf_string(&instance, WcnfDialect::Legacy);
    let top = instance.soft.len() + 1;
    assert_eq!(legacy.lines().next().unwrap(), format!("p wcnf {} {} {top}", instance.num_vars, instance.hard.len() + instance.soft.len()));
    for (m, l) in modern.lines().zip(legacy.lines().skip(1)) {
        match m.strip_prefix("h ") {
            Some(rest) => assert_eq!(l, format!("{top} {rest}")),
            None => assert_eq!(m, l),
        }
    }
}

#[test]
fn solver_output_with_bitstring_model() {
    let t = text(b"aaaa");
    let (instance, map) = encode(&t);
    let greedy = greedy_parse(&t);
    let model = induced_model(&t, &map, &greedy).unwrap();
    let bits: String = model.assignment.iter().map(|&b| if b { '1' } else { '0' }).collect();
    let out = format!("c test\ns OPTIMUM FOUND\no {}\nv {bits}\n", instance.cost(&model.assignment));
    let parsed = parse_solver_output(&out, instance.num_vars).unwrap();
    assert_eq!(decode(&parsed.model.unwrap(), &map, &t).unwrap().lengths(), vec![1, 1, 2]);
}

#[test]
fn external_solver_matches_enumeration() {
    let Some(cmd) = solver() else {
        eprintln!("skipped: no MAX-SAT solver configured");
        return;
    };
    let mut rng = StdRng::seed_from_u64(8);
    let texts: Vec<Vec<u8>> = (0..60).map(|k| random_text(&mut rng, 2 + k % 3, 6 + k as usize % 10)).collect();
    let ts: Vec<_> = texts.iter().map(|b| text(b)).collect();
    let solved = solve_batch(&ts, &cmd).unwrap();
    for ((bytes, t), s) in texts.iter().zip(&ts).zip(&solved) {
        assert!(validate(t, &s.parsing).is_accept());
        assert_eq!(s.parsing.size(), brute_force_min(bytes));
    }
    let single = solve(&text(b"aacbbbbaababbabbba"), &cmd).unwrap();
    assert_eq!(single.parsing.size(), 11);
    assert_eq!(single.reported_cost, Some(11));

    let legacy = cmd.clone().with_dialect(WcnfDialect::Legacy);
    assert_eq!(solve(&text(b"aacbbbbaababbabbba"), &legacy).unwrap().parsing.size(), 11);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]
    #[test]
    fn greedy_induces_a_model(bytes in proptest::collection::vec(b'a'..b'd', 0..60)) {
        let t = text(&bytes);
        let (instance, map) = encode(&t);
        let p = greedy_parse(&t);
        let model = induced_model(&t, &map, &p).unwrap();
        prop_assert_eq!(instance.first_violated(&model.assignment), None);
        prop_assert_eq!(decode(&model, &map, &t).unwrap().lengths(), p.lengths());
    }
}
