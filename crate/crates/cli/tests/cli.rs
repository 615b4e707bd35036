use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blockderange")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

#[test]
fn count_two_descending_pairs() {
    let o = run(&["count", "--blocks", "2,2", "--descending", "1,2", "--method", "sum"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "3\n");
}

#[test]
fn count_singletons_by_recursion_is_d4() {
    let o = run(&["count", "--blocks", "1,1,1,1", "--descending", "", "--method", "recursion"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "9\n");
}

#[test]
fn count_figure_spec_matches_golden_and_recursion() {
    let sum = run(&["count", "--blocks", "8,10", "--descending", "1", "--method", "sum"]);
    let rec = run(&["count", "--blocks", "8,10", "--descending", "1", "--method", "recursion"]);
    assert_eq!(code(&sum), 0);
    assert_eq!(stdout(&sum), golden("count_8_10_desc_1.txt"));
    assert_eq!(stdout(&sum), stdout(&rec));
}

#[test]
fn count_every_method_agrees() {
    let o = run(&["count", "--blocks", "2,3", "--descending", "1", "--method", "all"]);
    assert_eq!(code(&o), 0);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    let methods: Vec<&str> = lines.iter().map(|l| l.split(' ').next().unwrap()).collect();
    assert_eq!(methods, ["sum", "recursion", "series", "oracle", "ornaments"]);
    let first = lines[0].split(' ').nth(1).unwrap();
    assert!(lines.iter().all(|l| l.ends_with(&format!(" {first}"))));
}

#[test]
fn all_skips_exhaustive_methods_above_the_limit() {
    let o = run(&["--limit-n", "3", "count", "--blocks", "2,2", "--descending", "1,2", "--method", "all"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "sum 3\nrecursion 3\nseries 3\n");
}

#[test]
fn json_line_has_fixed_key_order() {
    let o = run(&["--format", "json", "count", "--blocks", "2,2", "--descending", "1,2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "{\"blocks\":[2,2],\"descending\":[1,2],\"method\":\"sum\",\"count\":\"3\"}\n");
}

#[test]
fn json_empty_descending_set() {
    let o = run(&["--format", "json", "count", "--blocks", "1,1,1,1", "--descending", "", "--method", "series"]);
    assert_eq!(stdout(&o), "{\"blocks\":[1,1,1,1],\"descending\":[],\"method\":\"series\",\"count\":\"9\"}\n");
}

#[test]
fn csv_has_fixed_header() {
    let o = run(&["--format", "csv", "count", "--blocks", "2,2", "--descending", "1,2", "--method", "recursion"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "blocks,descending,method,count\n\"2,2\",\"1,2\",recursion,3\n");
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "count", "--blocks", "3,1,2", "--descending", "1,3", "--method", "all"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn parse_errors_exit_2() {
    for args in [
        &["count", "--blocks", "2,x"][..],
        &["count", "--blocks", "2,0"],
        &["count", "--blocks", "2,2", "--descending", "3"],
        &["count", "--blocks", "2", "--method", "bogus"],
        &["frobnicate"],
        &["fixture", "figure9"],
    ] {
        assert_eq!(code(&run(args)), 2, "{args:?}");
    }
}

#[test]
fn help_exits_0() {
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn limit_refusal_exits_3() {
    let o = run(&["count", "--blocks", "8,10", "--descending", "1", "--method", "oracle"]);
    assert_eq!(code(&o), 3);
    let o = run(&["--limit-n", "4", "count", "--blocks", "3,2", "--method", "ornaments"]);
    assert_eq!(code(&o), 3);
    assert_eq!(code(&run(&["verify", "--max-n", "10"])), 3);
}

#[test]
fn limit_n_raises_the_cap() {
    let o = run(&["--limit-n", "11", "count", "--blocks", "5,6", "--descending", "2", "--method", "oracle"]);
    assert_eq!(code(&o), 0);
    let sum = run(&["count", "--blocks", "5,6", "--descending", "2"]);
    assert_eq!(o.stdout, sum.stdout);
}

#[test]
fn verify_small_sweep() {
    let o = run(&["verify", "--max-n", "6", "--max-k", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("all identities hold"));
}

#[test]
fn verify_two_elements() {
    let o = run(&["verify", "--max-n", "2", "--max-k", "1"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("((2),{1}) 1 ")), "{out}");
    assert!(out.lines().any(|l| l.starts_with("((2),{}) 0 ")), "{out}");
}

#[test]
fn verify_vacuous() {
    let o = run(&["verify", "--max-n", "0", "--max-k", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("all identities hold: 0 specs"));
}

#[test]
fn lambda_examples() {
    for (blocks, constant) in [("2,2", "3"), ("1", "0"), ("4", "1")] {
        let o = run(&["lambda", "--blocks", blocks]);
        assert_eq!(code(&o), 0);
        assert!(stdout(&o).lines().any(|l| l == format!("constant {constant}")), "{blocks}: {}", stdout(&o));
    }
}

#[test]
fn density_examples() {
    let o = run(&["density", "--blocks", "1", "--scale-max", "1"]);
    assert!(stdout(&o).starts_with("(1) 0 1 0.000000000000 "));
    let o = run(&["density", "--blocks", "1,1", "--scale-max", "4"]);
    assert_eq!(stdout(&o).lines().count(), 4);
    assert!(stdout(&o).starts_with("(1,1) 1 2 0.500000000000 "));
    let o = run(&["density", "--blocks", "2,2", "--descending", "1,2", "--scale-max", "1"]);
    assert!(stdout(&o).starts_with("(2,2) 3 6 0.500000000000 "));
}

#[test]
fn density_scaled_family() {
    let o = run(&["--format", "csv", "density", "--blocks", "2,3", "--descending", "1", "--scale-max", "8"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("blocks,descending,derangements,total,ratio,distance_from_inverse_e"));
    assert_eq!(lines.count(), 8);
}

#[test]
fn fixture_figure1() {
    let o = run(&["fixture", "figure1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), golden("fixture_figure1.txt"));
    let out = stdout(&o);
    assert!(out.contains("cycles (1,18,16,8,9)(2,17,10)(3,15,7,11)(4,14,6,12)(5,13)"), "{out}");
    assert!(out.contains("symmetry order 8\n"));
    assert!(out.contains("repetitions (1,2,2)"));
}
