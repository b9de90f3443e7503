use lzend::family::{self, Basis};
use lzend::gadget::{self, Graph};
use lzend::maxsat::{solve, SolverCommand};
use lzend::{greedy_parse, optimal_parse, validate, SearchConfig, Text};

const EXAMPLE: &[u8] = b"aacbbbbaababbabbba";

struct Checklist {
    failures: usize,
}

impl Checklist {
    fn check(&mut self, name: &str, outcome: Result<String, String>) {
        match outcome {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(detail) => {
                self.failures += 1;
                println!("[FAIL] {name}: {detail}");
            }
        }
    }
}

fn expect_eq<T: PartialEq + std::fmt::Display>(got: T, want: T) -> Result<String, String> {
    if got == want {
        Ok(got.to_string())
    } else {
        Err(format!("got {got}, expected {want}"))
    }
}

fn lift<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Runs the checklist; returns whether every check passed.
pub fn run(solver: Option<&SolverCommand>) -> bool {
    let mut list = Checklist { failures: 0 };
    let example = Text::from_bytes(EXAMPLE);

    let greedy = greedy_parse(&example);
    list.check("example string: greedy size", expect_eq(greedy.size(), 12));
    let tenth = greedy.phrases().iter().find(|p| p.start == 10).map(|p| p.len);
    list.check(
        "example string: greedy phrase at position 10 has length 1",
        match tenth {
            Some(1) => Ok("length 1".into()),
            other => Err(format!("{other:?}")),
        },
    );
    list.check(
        "example string: optimal size (branch and bound)",
        lift(optimal_parse(&example, &SearchConfig::default())).and_then(|p| expect_eq(p.size(), 11)),
    );
    if let Some(cmd) = solver {
        list.check(
            "example string: optimal size (MAX-SAT)",
            lift(solve(&example, cmd)).and_then(|s| expect_eq(s.parsing.size(), 11)),
        );
    }

    let triangle = Graph::triangle();
    let built = gadget::build_gadget(&triangle);
    list.check(
        "triangle gadget: length 19n + 37m",
        lift(built.as_ref().map(|g| g.text.len())).and_then(|len| expect_eq(len, 168)),
    );
    list.check(
        "triangle gadget: greedy size 13n + 23m",
        lift(gadget::greedy_counts(&triangle)).and_then(|c| expect_eq(c.total, 108)),
    );
    list.check(
        "triangle gadget: witness for {v1, v3} has size 13n + 22m + 2",
        lift(gadget::witness_parsing(&triangle, &gadget::VertexCover::new([1, 3])).and_then(|p| {
            let text = &gadget::build_gadget(&triangle)?.text;
            validate(text, &p).into_result()?;
            Ok(p.size())
        }))
        .and_then(|size| expect_eq(size, 107)),
    );
    for (name, g) in [("4-cycle", Graph::cycle(4)), ("K4", Graph::complete(4)), ("5-cycle", Graph::cycle(5))] {
        list.check(
            &format!("{name} gadget: all reduction counts"),
            lift(gadget::verify_reduction(&g, None)).map(|r| {
                format!("greedy {}, witness {} (tau = {})", r.greedy_size, r.witness_size, r.min_cover.len())
            }),
        );
    }
    if let Some(cmd) = solver {
        list.check(
            "triangle gadget: MAX-SAT optimum",
            lift(built.and_then(|g| solve(&g.text, cmd))).and_then(|s| expect_eq(s.parsing.size(), 107)),
        );
    }

    match family::ratio_table(10, 8) {
        Ok(rows) => {
            for r in rows.iter().filter(|r| r.basis == Basis::Measured) {
                list.check(
                    &format!("family k = {}: greedy 2K + k + 5, short parsing K + k + 6", r.k),
                    if r.greedy == family::greedy_size_formula(r.k) && r.witness == family::witness_size_formula(r.k) {
                        Ok(format!("{} / {}", r.greedy, r.witness))
                    } else {
                        Err(format!("measured {} / {}", r.greedy, r.witness))
                    },
                );
            }
            let ratio = |k: u32| rows[k as usize - 1].ratio;
            list.check(
                "family: measured ratio at k = 8 exceeds 1.97",
                if ratio(8) > 1.97 { Ok(format!("{:.4}", ratio(8))) } else { Err(format!("{:.4}", ratio(8))) },
            );
            list.check(
                "family: ratio at k = 10 exceeds 1.99",
                if ratio(10) > 1.99 { Ok(format!("{:.4}", ratio(10))) } else { Err(format!("{:.4}", ratio(10))) },
            );
        }
        Err(e) => list.check("family table", Err(e.to_string())),
    }

    if solver.is_none() {
        println!("[SKIP] MAX-SAT checks: no solver configured");
    }
    println!("{} check(s) failed", list.failures);
    list.failures == 0
}
