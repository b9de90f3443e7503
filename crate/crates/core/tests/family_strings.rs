mod common;

use common::brute_force_min;
use lzend::family::{self, Basis};
use lzend::{optimal_parse, SearchConfig};

#[test]
fn short_parsing_is_optimal_for_k1() {
    let w = family::build_family(1).unwrap();
    let bytes: Vec<u8> = w.text.symbols().iter().map(|&s| b'a' + s as u8).collect();
    let optimum = brute_force_min(&bytes);
    assert_eq!(optimum as u64, family::witness_size_formula(1));
    assert_eq!(optimal_parse(&w.text, &SearchConfig::default()).unwrap().size(), optimum);
}

#[test]
fn short_parsing_bounds_the_optimum_for_k2() {
    let w = family::build_family(2).unwrap();
    let opt = optimal_parse(&w.text, &SearchConfig::default()).unwrap().size() as u64;
    assert!(opt <= family::witness_size_formula(2));
}

#[test]
fn measured_rows_match_formulas() {
    let rows = family::ratio_table(12, 8).unwrap();
    assert_eq!(rows.len(), 12);
    for r in &rows {
        assert_eq!(r.n, family::family_length(r.k));
        assert_eq!(r.greedy, family::greedy_size_formula(r.k));
        assert_eq!(r.witness, family::witness_size_formula(r.k));
        assert_eq!(r.basis, if r.k <= 8 { Basis::Measured } else { Basis::Formula });
    }
    assert!(rows.windows(2).all(|w| w[1].ratio > w[0].ratio));
    assert!(rows.iter().all(|r| r.ratio < 2.0));
}

#[test]
fn csv_layout() {
    let csv = family::render_csv(&family::ratio_table(3, 2).unwrap());
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "k,n,z_e_measured,witness_size,ratio,basis");
    assert_eq!(lines[1], "1,17,10,9,1.111111,measured");
    assert_eq!(lines[3], "3,167,,23,1.565217,formula");
}
